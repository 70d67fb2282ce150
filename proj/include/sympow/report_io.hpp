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

// Serialization of analysis reports: JSON (schema v1), CSV rows for scans,
// and the human-readable table printed by the CLI.

#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sympow/analysis.hpp"
#include "sympow/version.hpp"

namespace sympow {

using ordered_json = nlohmann::ordered_json;

inline ordered_json spec_to_json(const CurveSpec& spec) {
  ordered_json j;
  j["exponents"] = spec.exponents();
  if (spec.arithmetic_case()) {
    const auto& ac = *spec.arithmetic_case();
    j["arithmetic_case"] = {
        {"a", ac.a}, {"r", ac.r}, {"k", ac.k}, {"residue", ac.residue}};
  } else {
    j["arithmetic_case"] = nullptr;
  }
  ordered_json hist = ordered_json::array();
  for (const auto& step : spec.morales_history()) {
    // Indices are reported 1-based to match the CLI flags.
    hist.push_back({{"index", step.index0 + 1},
                    {"c", step.c},
                    {"extension", step.index0 != 0}});
  }
  j["morales_history"] = std::move(hist);
  return j;
}

namespace detail_io {

inline ordered_json opt_bool(const std::optional<bool>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace detail_io

inline ordered_json witness_to_json(const WitnessVerdict& w) {
  ordered_json j;
  j["kind"] = witness_kind_name(w.kind);
  j["det_or_pfaffians"] = w.polys;
  j["in_symbolic_square"] = detail_io::opt_bool(w.in_symbolic_square);
  j["in_ordinary_square"] = detail_io::opt_bool(w.in_ordinary_square);
  return j;
}

inline ordered_json bound_to_json(const BoundEntry& b) {
  ordered_json j;
  j["n"] = b.n;
  j["d"] = b.d;
  j["value_num"] = to_long(Int(b.value.get_num()), "bound numerator");
  j["value_den"] = to_long(Int(b.value.get_den()), "bound denominator");
  j["predicts"] = b.predicts;
  return j;
}

inline ordered_json report_to_json(const AnalysisReport& rep) {
  ordered_json j;
  j["tool_version"] = kVersion;
  j["spec"] = spec_to_json(rep.spec);
  ordered_json eq = ordered_json::array();
  for (const auto& e : rep.equality)
    eq.push_back({{"n", e.n}, {"equal", e.equal}});
  j["equality"] = std::move(eq);
  j["multiplicity"] = rep.multiplicity;
  j["mu"] = rep.mu;
  j["cm_type"] = rep.cm_type;
  j["gorenstein"] = rep.gorenstein;
  ordered_json ws = ordered_json::array();
  for (const auto& w : rep.witnesses) ws.push_back(witness_to_json(w));
  j["witnesses"] = std::move(ws);
  ordered_json bs = ordered_json::array();
  for (const auto& b : rep.bounds) bs.push_back(bound_to_json(b));
  j["bounds"] = std::move(bs);
  j["verdict"] = rep.verdict.str();
  j["timings_ms"] = rep.timings_ms;
  return j;
}

inline std::string report_json_string(const AnalysisReport& rep) {
  return report_to_json(rep).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Human-readable table.

inline std::string rational_display(const Rat& v) {
  Int num(v.get_num()), den(v.get_den());
  if (den == 1) return num.get_str();
  return num.get_str() + "/" + den.get_str() + " (= " + decimal_string(v) + ")";
}

inline void print_report(std::ostream& os, const AnalysisReport& rep) {
  os << "curve (" << rep.spec.str() << ")\n";
  os << "  dimension d        " << rep.spec.dim() << "\n";
  if (rep.spec.arithmetic_case()) {
    const auto& ac = *rep.spec.arithmetic_case();
    os << "  arithmetic case    a=" << ac.a << ", r=" << ac.r << ", a = 3*"
       << ac.k << "+" << ac.residue << "\n";
  }
  for (const auto& step : rep.spec.morales_history())
    os << "  modified           kept index " << step.index0 + 1 << ", c="
       << step.c << (step.index0 != 0 ? " (extension)" : "") << "\n";
  os << "  multiplicity e     " << rep.multiplicity << "\n";
  os << "  minimal gens mu    " << rep.mu << "\n";
  os << "  cm type            " << rep.cm_type
     << (rep.gorenstein ? " (gorenstein)" : "") << "\n";
  if (!rep.equality.empty()) {
    os << "  powers\n";
    for (const auto& e : rep.equality) {
      const BoundEntry* b = nullptr;
      for (const auto& cand : rep.bounds)
        if (cand.n == e.n) b = &cand;
      os << "    n=" << e.n << "  P^" << e.n << (e.equal ? "  = " : " != ")
         << "P^(" << e.n << ")";
      if (b) {
        os << "   bound " << rational_display(b->value) << ", forces inequality: "
           << (b->predicts ? "yes" : "no");
      }
      os << "\n";
    }
  }
  for (const auto& w : rep.witnesses) {
    os << "  witness " << witness_kind_name(w.kind) << ": "
       << (w.passed() ? "pass" : "FAIL") << "\n";
  }
  os << "  verdict            " << rep.verdict.str() << "\n";
  if (rep.verdict.kind == GateVerdict::Kind::all_equal_open) {
    os << "  NOTE: every computed power is equal but mu > d-1; this curve "
          "would answer the open question if the pattern persists\n";
  }
}

// ---------------------------------------------------------------------------
// Scan rows.  A row is either a full report plus optional transfer-check
// output (morales family) or an error message for an invalid tuple.

struct ScanRow {
  std::vector<long> exponents;
  std::optional<AnalysisReport> report;
  std::optional<bool> transfer_ok;  // morales only
  std::string error;                // non-empty for failed rows
};

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string exponents_key(const std::vector<long>& exps) {
  std::string out;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(exps[i]);
  }
  return out;
}

inline std::string csv_header(int n_max) {
  std::string h = "exponents,a_mod_3,e,mu,cm_type,gorenstein";
  for (int n = 2; n <= n_max; ++n) h += ",eq_n" + std::to_string(n);
  h += ",witness,check,verdict,error";
  return h;
}

inline std::string csv_row(const ScanRow& row, int n_max) {
  std::ostringstream os;
  os << csv_escape(exponents_key(row.exponents));
  if (!row.report) {
    os << "," << row.exponents.front() % 3 << ",,,,";
    for (int n = 2; n <= n_max; ++n) os << ",";
    os << ",,,," << csv_escape(row.error);
    return os.str();
  }
  const AnalysisReport& rep = *row.report;
  os << "," << rep.spec.exponents().front() % 3;
  os << "," << rep.multiplicity << "," << rep.mu << "," << rep.cm_type;
  os << "," << (rep.gorenstein ? "true" : "false");
  for (int n = 2; n <= n_max; ++n) {
    os << ",";
    for (const auto& e : rep.equality)
      if (e.n == n) os << (e.equal ? "true" : "false");
  }
  os << ",";
  if (!rep.witnesses.empty()) {
    bool all = true;
    for (const auto& w : rep.witnesses) all = all && w.passed();
    os << (all ? "pass" : "fail");
  }
  os << ",";
  if (row.transfer_ok) {
    os << (*row.transfer_ok ? "pass" : "fail");
    for (const auto& step : rep.spec.morales_history())
      if (step.index0 != 0) {
        os << "+ext";
        break;
      }
  }
  os << "," << rep.verdict.str() << ",";
  return os.str();
}

inline std::string jsonl_row(const ScanRow& row) {
  ordered_json j;
  j["exponents"] = row.exponents;
  if (!row.report) {
    j["error"] = row.error;
    return j.dump();
  }
  const AnalysisReport& rep = *row.report;
  ordered_json spec = spec_to_json(rep.spec);
  j["arithmetic_case"] = spec["arithmetic_case"];
  j["morales_history"] = spec["morales_history"];
  ordered_json eq = ordered_json::array();
  for (const auto& e : rep.equality)
    eq.push_back({{"n", e.n}, {"equal", e.equal}});
  j["equality"] = std::move(eq);
  j["multiplicity"] = rep.multiplicity;
  j["mu"] = rep.mu;
  j["cm_type"] = rep.cm_type;
  j["gorenstein"] = rep.gorenstein;
  ordered_json ws = ordered_json::array();
  for (const auto& w : rep.witnesses) ws.push_back(witness_to_json(w));
  j["witnesses"] = std::move(ws);
  ordered_json bs = ordered_json::array();
  for (const auto& b : rep.bounds) bs.push_back(bound_to_json(b));
  j["bounds"] = std::move(bs);
  j["verdict"] = rep.verdict.str();
  j["check"] = detail_io::opt_bool(row.transfer_ok);
  j["error"] = nullptr;
  return j.dump();
}

}  // namespace sympow
