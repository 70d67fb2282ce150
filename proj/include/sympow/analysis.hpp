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

#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sympow/curve.hpp"

namespace sympow {

// n-th symbolic power of the curve ideal.  The graded associated primes of
// P^n are contained in {P, m}, so saturating at the first variable (a
// non-zerodivisor mod P) strips exactly the m-primary junk.
inline Ideal symbolic_power(const Ideal& P, int n) {
  if (n < 1) throw ValidationError("symbolic power wants n >= 1");
  Ideal pn = n == 1 ? P : ideal_power(P, n);
  Polynomial x0 = Polynomial::variable(P.ring(), 0);
  return saturate(pn, x0).ideal;
}

// P^n = P^(n)?  It suffices to test stability under one colon: the colon
// chain ascends, and I : x = I already forces I : x^k = I for every k.
inline bool powers_equal(const Ideal& P, int n) {
  if (n < 1) throw ValidationError("powers_equal wants n >= 1");
  if (n == 1) return true;
  Ideal pn = ideal_power(P, n);
  Polynomial x0 = Polynomial::variable(P.ring(), 0);
  return ideal_equal(colon(pn, x0), pn);
}

// Hilbert-Samuel multiplicity of R/P, as the length of R/(P, x1)
inline long multiplicity(const Ideal& P) {
  Polynomial x0 = Polynomial::variable(P.ring(), 0);
  return std_monomials(add_element(P, x0)).length;
}

// Cohen-Macaulay type of R/P: socle dimension of the Artinian reduction
inline int cm_type(const Ideal& P) {
  Polynomial x0 = Polynomial::variable(P.ring(), 0);
  return socle_type(ArtinianQuotient::build(add_element(P, x0)));
}

// prod_{r=0}^{d-2} (2n+r)/(n+r), exactly
inline Rat mult_bound(int n, int d) {
  if (n < 1 || d < 2) throw ValidationError("mult_bound wants n >= 1, d >= 2");
  Int num(1);
  Int den(1);
  for (int r = 0; r <= d - 2; ++r) {
    num *= 2 * static_cast<long>(n) + r;
    den *= static_cast<long>(n) + r;
  }
  return make_rat(num, den);
}

// e below the bound forces P^n != P^(n)
inline bool bound_predicts(long e, int n, int d) {
  if (e < 1) throw ValidationError("multiplicity must be >= 1");
  return Rat(e) < mult_bound(n, d);
}

// same predicate through binomial coefficients, used as a cross-check
inline bool bound_predicts_binomial(long e, int n, int d) {
  if (e < 1) throw ValidationError("multiplicity must be >= 1");
  return binomial(n + d - 2, d - 1) * e < binomial(2 * n + d - 2, d - 1);
}

struct EqualityEntry {
  int n;
  bool equal;
};

struct BoundEntry {
  int n;
  int d;
  Rat value;
  bool predicts;
};

struct WitnessVerdict {
  WitnessMatrix::Kind kind;
  std::vector<std::string> polys;  // determinant, or the five pfaffians
  std::optional<bool> det_nonzero;
  std::optional<bool> in_ordinary_square;   // desired false
  std::optional<bool> in_symbolic_square;   // desired true
  std::optional<bool> adjugate_identity;    // det(adj(M)) == D^2
  std::optional<bool> adjugate_in_cube;     // det(adj(M)) in P^3
  std::optional<bool> shifted_in_square;    // w*D in P^2 (a = 3k only)
  std::optional<bool> degree_excludes_square;  // hankel: deg 3 < 4
  std::optional<bool> matches_generators;   // pfaffian kind

  bool passed() const {
    auto want = [](const std::optional<bool>& v, bool desired) {
      return !v.has_value() || *v == desired;
    };
    return want(det_nonzero, true) && want(in_ordinary_square, false) &&
           want(in_symbolic_square, true) && want(adjugate_identity, true) &&
           want(adjugate_in_cube, true) && want(shifted_in_square, true) &&
           want(degree_excludes_square, true) &&
           want(matches_generators, true);
  }
};

// Per-curve cache of the prime, its powers and symbolic powers, so one
// report never computes the same basis twice.
class CurveContext {
 public:
  explicit CurveContext(CurveSpec spec)
      : spec_(std::move(spec)),
        ring_(curve_ring(spec_)),
        prime_(toric_ideal(spec_, ring_)) {}

  const CurveSpec& spec() const { return spec_; }
  const RingPtr& ring() const { return ring_; }
  const Ideal& prime() const { return prime_; }

  const Ideal& power(int n) {
    if (n == 1) return prime_;
    auto it = powers_.find(n);
    if (it == powers_.end())
      it = powers_.emplace(n, ideal_power(prime_, n)).first;
    return it->second;
  }

  const Ideal& symbolic(int n) {
    if (n == 1) return prime_;
    auto it = symbolic_.find(n);
    if (it == symbolic_.end()) {
      Polynomial x0 = Polynomial::variable(ring_, 0);
      it = symbolic_.emplace(n, saturate(power(n), x0).ideal).first;
    }
    return it->second;
  }

  bool equal_at(int n) {
    if (n == 1) return true;
    auto it = equal_.find(n);
    if (it == equal_.end()) {
      Polynomial x0 = Polynomial::variable(ring_, 0);
      const Ideal& pn = power(n);
      it = equal_.emplace(n, ideal_equal(colon(pn, x0), pn)).first;
    }
    return it->second;
  }

 private:
  CurveSpec spec_;
  RingPtr ring_;
  Ideal prime_;
  std::map<int, Ideal> powers_;
  std::map<int, Ideal> symbolic_;
  std::map<int, bool> equal_;
};

inline WitnessVerdict verify_witness(CurveContext& ctx,
                                     const WitnessMatrix& W) {
  if (W.spec.exponents() != ctx.spec().exponents())
    throw WitnessMismatchError("witness built for (" + W.spec.str() +
                               "), curve is (" + ctx.spec().str() + ")");
  WitnessVerdict v;
  v.kind = W.kind;
  if (W.kind == WitnessMatrix::Kind::pfaffian) {
    auto want = arithmetic_generators(W.spec, W.ring);
    for (auto& g : want) g = g.primitive();
    std::vector<Polynomial> have = W.pfaffians;
    std::sort(want.begin(), want.end(), detail::poly_before);
    std::sort(have.begin(), have.end(), detail::poly_before);
    for (const auto& p : W.pfaffians) v.polys.push_back(p.str());
    v.matches_generators = (want == have);
    return v;
  }
  const Polynomial& D = *W.det;
  v.polys.push_back(D.str());
  v.det_nonzero = !D.is_zero();
  v.in_ordinary_square = member(ctx.power(2), D);
  v.in_symbolic_square = member(ctx.symbolic(2), D);
  if (W.kind == WitnessMatrix::Kind::case3k ||
      W.kind == WitnessMatrix::Kind::case3k1) {
    Polynomial det_adj = determinant_adjugate(W.adjugate).det;
    v.adjugate_identity = (det_adj == D * D);
    v.adjugate_in_cube = member(ctx.power(3), det_adj);
    if (W.kind == WitnessMatrix::Kind::case3k) {
      Polynomial w = Polynomial::variable(ctx.ring(), 3);
      v.shifted_in_square = member(ctx.power(2), w * D);
    }
  }
  if (W.kind == WitnessMatrix::Kind::hankel) {
    bool gens_deep = true;
    for (const auto& g : ctx.prime().generators())
      if (g.ord() < 2) gens_deep = false;
    v.degree_excludes_square = gens_deep && D.ord() == 3;
  }
  return v;
}

inline WitnessVerdict verify_witness(const Ideal& P, const WitnessMatrix& W) {
  if (!P.ring()->same_as(*W.ring))
    throw WitnessMismatchError("witness ring differs from the ideal's ring");
  CurveContext ctx(W.spec);
  return verify_witness(ctx, W);
}

struct GateVerdict {
  enum class Kind { inequality_at, all_equal_ci, all_equal_open };
  Kind kind;
  int n = 0;

  std::string str() const {
    switch (kind) {
      case Kind::inequality_at:
        return "inequality_at(" + std::to_string(n) + ")";
      case Kind::all_equal_ci:
        return "all_equal_complete_intersection";
      case Kind::all_equal_open:
        return "all_equal_open";
    }
    return "?";
  }
};

struct AnalysisReport {
  CurveSpec spec;
  int n_max;
  std::vector<EqualityEntry> equality;
  long multiplicity;
  int mu;
  int cm_type;
  bool gorenstein;
  std::vector<Polynomial> minimal_generators;
  std::vector<WitnessVerdict> witnesses;
  std::vector<BoundEntry> bounds;
  GateVerdict verdict;
  std::map<std::string, long> timings_ms;
};

namespace detail_analysis {

class StageTimer {
 public:
  explicit StageTimer(std::map<std::string, long>& sink) : sink_(sink) {
    total_start_ = std::chrono::steady_clock::now();
    start_ = total_start_;
  }
  void lap(const std::string& name) {
    auto now = std::chrono::steady_clock::now();
    sink_[name] = std::chrono::duration_cast<std::chrono::milliseconds>(
                      now - start_)
                      .count();
    start_ = now;
  }
  void total() {
    auto now = std::chrono::steady_clock::now();
    sink_["total"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                         now - total_start_)
                         .count();
  }

 private:
  std::map<std::string, long>& sink_;
  std::chrono::steady_clock::time_point total_start_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail_analysis

// The whole per-curve pipeline: equality table up to n_max, multiplicity
// with its soundness cross-check, minimal generators, type, witnesses when
// the curve fits one of the known shapes, bound evaluations, verdict.
inline AnalysisReport analyze_curve(const CurveSpec& spec, int n_max,
                                    bool with_witnesses = true) {
  if (n_max < 1) throw ValidationError("n_max must be >= 1");
  AnalysisReport rep{spec,
                     n_max,
                     {},
                     0,
                     0,
                     0,
                     false,
                     {},
                     {},
                     {},
                     {GateVerdict::Kind::all_equal_open, 0},
                     {}};
  detail_analysis::StageTimer timer(rep.timings_ms);
  CurveContext ctx(spec);
  timer.lap("toric");
  auto mg = min_generators(ctx.prime());
  rep.minimal_generators = mg.gens;
  rep.mu = mg.mu;
  timer.lap("minimal_generators");
  rep.multiplicity = multiplicity(ctx.prime());
  if (rep.multiplicity != spec.exponents()[0])
    throw SoundnessAlarmError(
        "multiplicity " + std::to_string(rep.multiplicity) +
        " differs from first exponent " +
        std::to_string(spec.exponents()[0]) + " for (" + spec.str() + ")");
  timer.lap("multiplicity");
  rep.cm_type = cm_type(ctx.prime());
  rep.gorenstein = rep.cm_type == 1;
  timer.lap("cm_type");
  for (int n = 2; n <= n_max; ++n)
    rep.equality.push_back({n, ctx.equal_at(n)});
  timer.lap("equality");
  if (with_witnesses) {
    int d = spec.dim();
    if (d == 4 && spec.arithmetic_case()) {
      const auto& ac = *spec.arithmetic_case();
      WitnessMatrix W = ac.residue == 2 ? pfaffian_system(ac.a, ac.r)
                                        : witness_matrix(ac.a, ac.r);
      rep.witnesses.push_back(verify_witness(ctx, W));
    } else if (d >= 5) {
      auto sub = arith_subseq(spec.exponents(), 5);
      if (sub)
        rep.witnesses.push_back(
            verify_witness(ctx, hankel_matrix(spec, sub->indices)));
    }
  }
  timer.lap("witnesses");
  for (int n = 2; n <= n_max; ++n)
    rep.bounds.push_back({n, spec.dim(), mult_bound(n, spec.dim()),
                          bound_predicts(rep.multiplicity, n, spec.dim())});
  for (const auto& e : rep.equality)
    if (!e.equal) {
      rep.verdict = {GateVerdict::Kind::inequality_at, e.n};
      break;
    }
  if (rep.verdict.kind != GateVerdict::Kind::inequality_at) {
    if (rep.mu == spec.dim() - 1) {
      // confirm the d-1 generators really cut out a curve: together with
      // x1 they must define a finite-length quotient
      Polynomial x0 = Polynomial::variable(ctx.ring(), 0);
      try {
        std_monomials(add_element(Ideal(ctx.ring(), rep.minimal_generators),
                                  x0));
      } catch (const NotZeroDimensionalError&) {
        throw SoundnessAlarmError(
            "mu = d-1 but the generators do not form a system of "
            "parameters with x1");
      }
      rep.verdict = {GateVerdict::Kind::all_equal_ci, 0};
    } else {
      rep.verdict = {GateVerdict::Kind::all_equal_open, 0};
    }
  }
  timer.total();
  return rep;
}

// Remark-style consistency gate for complete intersections: multiplicity
// at least 2^{d-1} and every minimal generator of order >= 2.
inline bool ci_multiplicity_check(const AnalysisReport& rep) {
  int d = rep.spec.dim();
  if (rep.mu != d - 1)
    throw NotCompleteIntersectionError(
        "mu = " + std::to_string(rep.mu) + ", not a complete intersection (" +
        std::to_string(d - 1) + " expected)");
  long floor = 1L << (d - 1);
  if (rep.multiplicity < floor) return false;
  for (const auto& g : rep.minimal_generators)
    if (g.ord() < 2) return false;
  return true;
}

struct TransferCheck {
  int checks;
  int disagreements;
  bool all_agree;
};

namespace detail_analysis {

inline Polynomial random_homogeneous(const RingPtr& ring, std::mt19937& rng) {
  long wmin = ring->weight(0);
  for (int i = 1; i < ring->nvars(); ++i) wmin = std::min(wmin, ring->weight(i));
  for (int attempt = 0; attempt < 64; ++attempt) {
    long w = wmin * (2 + static_cast<long>(rng() % (4 * wmin)));
    auto monos = monomials_of_weighted_degree(*ring, w);
    if (monos.empty()) continue;
    int parts = 1 + static_cast<int>(rng() % 3);
    std::vector<Term> terms;
    for (int p = 0; p < parts; ++p) {
      long c = 1 + static_cast<long>(rng() % 3);
      if (rng() % 2) c = -c;
      terms.push_back({Rat(c), monos[rng() % monos.size()]});
    }
    Polynomial f(ring, std::move(terms));
    if (!f.is_zero()) return f;
  }
  throw Error("could not sample a homogeneous polynomial");
}

inline Polynomial random_power_member(CurveContext& ctx, int k,
                                      std::mt19937& rng) {
  const auto& gens = ctx.prime().generators();
  Polynomial f = Polynomial::constant(ctx.ring(), Rat(1));
  for (int i = 0; i < k; ++i) f = f * gens[rng() % gens.size()];
  for (int attempt = 0; attempt < 64; ++attempt) {
    long w = static_cast<long>(rng() % (2 * ctx.ring()->weight(0) + 1));
    auto monos = monomials_of_weighted_degree(*ctx.ring(), w);
    if (monos.empty()) continue;
    long c = 1 + static_cast<long>(rng() % 2);
    if (rng() % 2) c = -c;
    return f.times_term(Rat(c), monos[rng() % monos.size()]);
  }
  return f;
}

}  // namespace detail_analysis

// Membership transfer along a base change: f in P^k iff its image lies in
// the transformed P^k, and the same for symbolic powers.  Samples mix
// random homogeneous elements with certified members of P^k.
inline TransferCheck morales_transfer_check(const MoralesTransform& T,
                                            int per_power, int max_power,
                                            unsigned seed) {
  std::mt19937 rng(seed);
  CurveContext src(T.source);
  CurveContext dst(T.target);
  TransferCheck out{0, 0, true};
  for (int k = 1; k <= max_power; ++k) {
    for (int s = 0; s < per_power; ++s) {
      Polynomial f = (s % 2 == 0)
                         ? detail_analysis::random_homogeneous(src.ring(), rng)
                         : detail_analysis::random_power_member(src, k, rng);
      Polynomial ft = T.apply(f);
      bool ord_ok = member(src.power(k), f) == member(dst.power(k), ft);
      bool sym_ok = member(src.symbolic(k), f) == member(dst.symbolic(k), ft);
      ++out.checks;
      if (!(ord_ok && sym_ok)) ++out.disagreements;
    }
  }
  out.all_agree = out.disagreements == 0;
  return out;
}

}  // namespace sympow
