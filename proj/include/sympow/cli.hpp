/*
 * Copyright 2026 The sympow authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end.  Subcommands: analyze (one curve), scan (a family),
// witness (membership certificates), bound (the multiplicity threshold).
//
// Exit codes: 0 success, 1 failed check or internal error, 2 invalid input,
// 3 witness kind inapplicable to the curve, 4 soundness alarm.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sympow/analysis.hpp"
#include "sympow/report_io.hpp"
#include "sympow/scan.hpp"
#include "sympow/version.hpp"

namespace sympow {

namespace detail_cli {

inline long parse_integer(const std::string& s) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ValidationError("expected an integer, got '" + s + "'");
  }
  if (pos != s.size())
    throw ValidationError("expected an integer, got '" + s + "'");
  return v;
}

inline std::vector<long> parse_integer_list(const std::string& s,
                                            char sep = ',') {
  std::vector<long> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(parse_integer(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(parse_integer(cur));
  return out;
}

// "4..12" is a closed range, a bare "7" the single value.
inline std::pair<long, long> parse_range(const std::string& s) {
  size_t pos = s.find("..");
  if (pos == std::string::npos) {
    long v = parse_integer(s);
    return {v, v};
  }
  return {parse_integer(s.substr(0, pos)), parse_integer(s.substr(pos + 2))};
}

inline std::vector<std::vector<long>> parse_tuple_list(const std::string& s) {
  std::vector<std::vector<long>> out;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      out.push_back(parse_integer_list(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(parse_integer_list(cur));
  return out;
}

// Selects the witness shape, checking residue compatibility up front so the
// error can point at the kind that does apply.
inline WitnessMatrix pick_witness(const CurveSpec& spec,
                                  const std::string& kind) {
  const auto& ac = spec.arithmetic_case();
  auto residue_hint = [&](int residue) -> std::string {
    switch (residue) {
      case 0:
        return "--kind 3k";
      case 1:
        return "--kind 3k1";
      default:
        return "--kind pfaffian";
    }
  };
  auto need_arith4 = [&]() {
    if (spec.dim() != 4 || !ac)
      throw NotArithmeticError(
          "kind '" + kind +
          "' needs four exponents in arithmetic progression, got (" +
          spec.str() + ")");
  };
  auto wrong_residue = [&](const std::string& asked) {
    throw WrongResidueError("a = " + std::to_string(ac->a) + " is " +
                            std::to_string(ac->residue) +
                            " mod 3, not compatible with --kind " + asked +
                            ": use " + residue_hint(ac->residue));
  };
  if (kind == "3k") {
    need_arith4();
    if (ac->residue != 0) wrong_residue("3k");
    return witness_matrix(ac->a, ac->r);
  }
  if (kind == "3k1") {
    need_arith4();
    if (ac->residue != 1) wrong_residue("3k1");
    return witness_matrix(ac->a, ac->r);
  }
  if (kind == "pfaffian") {
    need_arith4();
    if (ac->residue != 2) wrong_residue("pfaffian");
    return pfaffian_system(ac->a, ac->r);
  }
  if (kind == "hankel") {
    auto sub = arith_subseq(spec.exponents(), 5);
    if (!sub)
      throw NotArithmeticError(
          "no five-term arithmetic subsequence in (" + spec.str() + ")");
    return hankel_matrix(spec, sub->indices);
  }
  // auto
  if (spec.dim() == 4 && ac)
    return ac->residue == 2 ? pfaffian_system(ac->a, ac->r)
                            : witness_matrix(ac->a, ac->r);
  if (spec.dim() >= 5) {
    auto sub = arith_subseq(spec.exponents(), 5);
    if (sub) return hankel_matrix(spec, sub->indices);
  }
  throw NotArithmeticError("no witness shape applies to (" + spec.str() +
                           "); need an arithmetic progression");
}

inline void print_check(std::ostream& os, const char* label,
                        const std::optional<bool>& got, bool desired) {
  if (!got) return;
  os << "  " << label << ": " << (*got ? "yes" : "no") << " ("
     << (*got == desired ? "pass" : "FAIL") << ")\n";
}

inline void print_witness(std::ostream& os, const WitnessMatrix& W,
                          const WitnessVerdict& v) {
  os << "kind " << witness_kind_name(W.kind) << " for (" << W.spec.str()
     << ")\n";
  for (const auto& row : W.entries) {
    os << "  [ ";
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ", ";
      os << row[j].str();
    }
    os << " ]\n";
  }
  if (W.det) os << "  D = " << W.det->str() << "\n";
  if (!W.pfaffians.empty()) {
    os << "  pfaffians:\n";
    for (const auto& p : W.pfaffians) os << "    " << p.str() << "\n";
  }
  print_check(os, "D nonzero", v.det_nonzero, true);
  print_check(os, "D in P^2 (want no)", v.in_ordinary_square, false);
  print_check(os, "D in P^(2)", v.in_symbolic_square, true);
  print_check(os, "det(adj M) = D^2", v.adjugate_identity, true);
  print_check(os, "det(adj M) in P^3", v.adjugate_in_cube, true);
  print_check(os, "w*D in P^2", v.shifted_in_square, true);
  print_check(os, "deg D below every P^2 generator", v.degree_excludes_square,
              true);
  print_check(os, "pfaffians generate P", v.matches_generators, true);
  os << "verdict: " << (v.passed() ? "pass" : "FAIL") << "\n";
}

}  // namespace detail_cli

inline int run_cli(int argc, char** argv) {
  using detail_cli::parse_integer_list;
  using detail_cli::parse_range;
  using detail_cli::parse_tuple_list;

  CLI::App app{"exact comparison of ordinary and symbolic powers for "
               "monomial curve ideals"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string exps_str, json_path, kind = "auto";
  int n_max = 0;
  bool with_witness = false;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one curve");
  analyze->add_option("--exponents", exps_str, "comma-separated exponents")
      ->required();
  analyze->add_option("--n-max", n_max, "largest power to compare (default d-1)");
  analyze->add_option("--json", json_path, "write the JSON report here");
  analyze->add_flag("--witness", with_witness, "verify the witness shape too");

  std::string family = "arith4", a_range, r_range = "1", scan_exps, c_list;
  std::string output, format = "csv";
  int index1 = 1, scan_n_max = 0, parallel = 0;
  CLI::App* scan = app.add_subcommand("scan", "analyze a family of curves");
  scan->add_option("--family", family,
                   "arith4 | hankel5 | explicit | morales")
      ->check(CLI::IsMember({"arith4", "hankel5", "explicit", "morales"}));
  scan->add_option("--a", a_range, "first exponent, e.g. 4..12 or 7");
  scan->add_option("--r", r_range, "common difference range (default 1)");
  scan->add_option("--exponents", scan_exps,
                   "explicit: tuples split by ';'  morales: base tuple");
  scan->add_option("--c", c_list, "morales multipliers, e.g. 2,3");
  scan->add_option("--index", index1,
                   "morales: 1-based position kept fixed (default 1)");
  scan->add_option("--n-max", scan_n_max, "largest power to compare");
  scan->add_option("--output", output, "append rows to this file");
  scan->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--parallel", parallel,
                   "worker threads (default SYMPOW_THREADS or all cores)");

  CLI::App* witness =
      app.add_subcommand("witness", "print and verify a witness certificate");
  witness->add_option("--exponents", exps_str, "comma-separated exponents")
      ->required();
  witness->add_option("--kind", kind, "auto | 3k | 3k1 | hankel | pfaffian")
      ->check(CLI::IsMember({"auto", "3k", "3k1", "hankel", "pfaffian"}));

  int bound_n = 0, bound_d = 0;
  std::optional<long> bound_e;
  CLI::App* bound =
      app.add_subcommand("bound", "multiplicity threshold forcing P^n != P^(n)");
  bound->add_option("--n", bound_n, "power")->required();
  bound->add_option("--d", bound_d, "number of exponents")->required();
  bound->add_option("--e", bound_e, "multiplicity to test against the bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      CurveSpec spec = CurveSpec::validate(parse_integer_list(exps_str));
      int nm = n_max > 0 ? n_max : std::max(2, spec.dim() - 1);
      AnalysisReport rep = analyze_curve(spec, nm, with_witness);
      print_report(std::cout, rep);
      if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw Error("cannot open output file: " + json_path);
        f << report_json_string(rep);
      }
      return 0;
    }
    if (app.got_subcommand(scan)) {
      ScanConfig cfg;
      if (family == "arith4") cfg.family = ScanConfig::Family::arith4;
      if (family == "hankel5") cfg.family = ScanConfig::Family::hankel5;
      if (family == "explicit") cfg.family = ScanConfig::Family::explicit_list;
      if (family == "morales") cfg.family = ScanConfig::Family::morales;
      if (!a_range.empty())
        std::tie(cfg.a_lo, cfg.a_hi) = parse_range(a_range);
      else if (cfg.family == ScanConfig::Family::arith4 ||
               cfg.family == ScanConfig::Family::hankel5)
        throw ValidationError("--a is required for progression families");
      std::tie(cfg.r_lo, cfg.r_hi) = parse_range(r_range);
      if (cfg.family == ScanConfig::Family::explicit_list)
        cfg.tuples = parse_tuple_list(scan_exps);
      if (cfg.family == ScanConfig::Family::morales) {
        cfg.base = parse_integer_list(scan_exps);
        cfg.c_values = parse_integer_list(c_list);
        cfg.index0 = index1 - 1;
      }
      cfg.n_max = scan_n_max;
      cfg.output = output;
      cfg.format = format == "json" ? ScanConfig::Format::json
                                    : ScanConfig::Format::csv;
      cfg.parallelism = parallel;
      long rows = run_scan(cfg);
      if (!output.empty())
        std::cerr << rows << " new row(s) -> " << output << "\n";
      return 0;
    }
    if (app.got_subcommand(witness)) {
      CurveSpec spec = CurveSpec::validate(parse_integer_list(exps_str));
      WitnessMatrix W = detail_cli::pick_witness(spec, kind);
      CurveContext ctx(spec);
      WitnessVerdict v = verify_witness(ctx, W);
      detail_cli::print_witness(std::cout, W, v);
      return v.passed() ? 0 : 1;
    }
    if (app.got_subcommand(bound)) {
      if (bound_n < 1 || bound_d < 2)
        throw ValidationError("need n >= 1 and d >= 2");
      Rat v = mult_bound(bound_n, bound_d);
      if (!bound_e) {
        std::cout << rational_display(v) << "\n";
        return 0;
      }
      Int num(v.get_num()), den(v.get_den());
      std::string frac =
          den == 1 ? num.get_str() : num.get_str() + "/" + den.get_str();
      if (bound_predicts(*bound_e, bound_n, bound_d)) {
        std::cout << "e=" << *bound_e << " < " << frac << " => P^" << bound_n
                  << " != P^(" << bound_n << ")\n";
      } else {
        std::cout << "e=" << *bound_e << " >= " << frac
                  << ": no forced inequality at n=" << bound_n << "\n";
      }
      return 0;
    }
  } catch (const SoundnessAlarmError& e) {
    std::cerr << "soundness alarm: " << e.what() << "\n";
    return 4;
  } catch (const InapplicableError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace sympow
