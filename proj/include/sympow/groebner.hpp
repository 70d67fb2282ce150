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

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympow/ideal.hpp"

namespace sympow {
namespace detail {

// Inside the engine a polynomial is a term vector kept strictly descending
// under the order being used for the computation, which is generally not
// the canonical storage order.
using TermVec = std::vector<Term>;

inline TermVec to_working(const Polynomial& p, const MonomialOrder& ord) {
  TermVec v = p.terms();
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  return v;
}

inline Polynomial from_working(const RingPtr& ring, TermVec v) {
  return Polynomial(ring, std::move(v));
}

// f + c * m * g, merged in one pass
inline TermVec axpy(const TermVec& f, const Rat& c, const Monomial& m,
                    const TermVec& g, const MonomialOrder& ord) {
  TermVec out;
  out.reserve(f.size() + g.size());
  size_t i = 0;
  size_t j = 0;
  std::optional<Monomial> gm;
  while (i < f.size() && j < g.size()) {
    if (!gm) gm = g[j].mono * m;
    int cmp = ord.compare(f[i].mono, *gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({c * g[j].coef, std::move(*gm)});
      gm.reset();
      ++j;
    } else {
      Rat s = f[i].coef + c * g[j].coef;
      if (s != 0) out.push_back({std::move(s), f[i].mono});
      gm.reset();
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({c * g[j].coef, g[j].mono * m});
  return out;
}

// integer-primitive scaling with positive head coefficient, in place
inline void make_primitive(TermVec& v) {
  if (v.empty()) return;
  Int den_lcm(1);
  for (const auto& t : v)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coef.get_den().get_mpz_t());
  Int content(0);
  std::vector<Int> ints;
  ints.reserve(v.size());
  for (const auto& t : v) {
    Int c = t.coef.get_num() * (den_lcm / t.coef.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    ints.push_back(std::move(c));
  }
  if (ints.front() < 0) content = -content;
  for (size_t i = 0; i < v.size(); ++i) v[i].coef = Rat(ints[i] / content);
}

struct BasisElem {
  TermVec terms;
  Monomial lt;
  Rat lc;
};

inline BasisElem make_elem(TermVec v) {
  Monomial lt = v.front().mono;
  Rat lc = v.front().coef;
  return {std::move(v), std::move(lt), std::move(lc)};
}

// Full division: every term of the remainder is irreducible modulo the
// leading terms of the basis.  Reducers are tried in listed order.
inline TermVec normal_form_w(TermVec f, const std::vector<BasisElem>& basis,
                             const MonomialOrder& ord) {
  TermVec rem;
  while (!f.empty()) {
    const Term& head = f.front();
    const BasisElem* red = nullptr;
    for (const auto& b : basis) {
      if (b.lt.divides(head.mono)) {
        red = &b;
        break;
      }
    }
    if (!red) {
      rem.push_back(head);
      f.erase(f.begin());
      continue;
    }
    Rat c = -head.coef / red->lc;
    Monomial q = head.mono.divide_exact(red->lt);
    f = axpy(f, c, q, red->terms, ord);
  }
  return rem;
}

inline TermVec spoly_w(const BasisElem& a, const BasisElem& b,
                       const MonomialOrder& ord) {
  Monomial l = Monomial::lcm(a.lt, b.lt);
  TermVec left;
  left.reserve(a.terms.size());
  Monomial qa = l.divide_exact(a.lt);
  Rat inv_a = Rat(1) / a.lc;
  for (const auto& t : a.terms) left.push_back({t.coef * inv_a, t.mono * qa});
  return axpy(left, Rat(-1) / b.lc, l.divide_exact(b.lt), b.terms, ord);
}

struct SPair {
  int i;
  int j;
  Monomial lcm;
  bool alive;
};

// Pair bookkeeping with the classical pruning rules: coprime leading terms
// are discarded, and among pairs sharing the new element only those with
// divisibility-minimal lcm survive; old pairs whose lcm factors through the
// new leading term are dropped.
inline void update_pairs(const std::vector<BasisElem>& basis,
                         std::vector<SPair>& pairs, int t) {
  const Monomial& tau = basis[t].lt;
  struct Cand {
    int i;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> cands;
  cands.reserve(t);
  for (int i = 0; i < t; ++i)
    cands.push_back({i, Monomial::lcm(basis[i].lt, tau),
                     basis[i].lt.coprime_to(tau)});
  std::vector<Cand> kept;
  for (size_t idx = 0; idx < cands.size(); ++idx) {
    const Cand& c = cands[idx];
    bool drop = false;
    if (!c.coprime) {
      for (size_t j = idx + 1; j < cands.size() && !drop; ++j)
        if (cands[j].lcm.divides(c.lcm)) drop = true;
      for (const auto& k : kept)
        if (drop) break; else if (k.lcm.divides(c.lcm)) drop = true;
    }
    if (!drop) kept.push_back(c);
  }
  for (auto& p : pairs) {
    if (!p.alive) continue;
    if (tau.divides(p.lcm) &&
        Monomial::lcm(basis[p.i].lt, tau) != p.lcm &&
        Monomial::lcm(basis[p.j].lt, tau) != p.lcm)
      p.alive = false;
  }
  for (auto& k : kept)
    if (!k.coprime) pairs.push_back({k.i, t, std::move(k.lcm), true});
}

// normal selection strategy: smallest lcm in the term order
inline int select_pair(const std::vector<SPair>& pairs,
                       const MonomialOrder& ord) {
  int best = -1;
  for (size_t p = 0; p < pairs.size(); ++p) {
    if (!pairs[p].alive) continue;
    if (best < 0) {
      best = static_cast<int>(p);
      continue;
    }
    int cmp = ord.compare(pairs[p].lcm, pairs[best].lcm);
    if (cmp < 0)
      best = static_cast<int>(p);
    else if (cmp == 0 && (pairs[p].i < pairs[best].i ||
                          (pairs[p].i == pairs[best].i &&
                           pairs[p].j < pairs[best].j)))
      best = static_cast<int>(p);
  }
  return best;
}

inline std::vector<BasisElem> buchberger_w(const RingPtr& ring,
                                           const std::vector<Polynomial>& gens,
                                           const MonomialOrder& ord) {
  std::vector<BasisElem> basis;
  std::vector<SPair> pairs;
  auto insert = [&](TermVec v) {
    make_primitive(v);
    basis.push_back(make_elem(std::move(v)));
    update_pairs(basis, pairs, static_cast<int>(basis.size()) - 1);
  };
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring, g.ring());
    TermVec r = normal_form_w(to_working(g, ord), basis, ord);
    if (!r.empty()) insert(std::move(r));
  }
  while (true) {
    int p = select_pair(pairs, ord);
    if (p < 0) break;
    pairs[p].alive = false;
    TermVec s = spoly_w(basis[pairs[p].i], basis[pairs[p].j], ord);
    TermVec r = normal_form_w(std::move(s), basis, ord);
    if (!r.empty()) insert(std::move(r));
  }
  return basis;
}

// completed basis -> the reduced basis: minimal leading terms, fully
// reduced tails, primitive scaling, elements sorted ascending by lead
inline std::vector<TermVec> reduce_basis_w(std::vector<BasisElem> basis,
                                           const MonomialOrder& ord) {
  std::sort(basis.begin(), basis.end(),
            [&](const BasisElem& a, const BasisElem& b) {
              return ord.less(a.lt, b.lt);
            });
  std::vector<BasisElem> minimal;
  for (auto& b : basis) {
    bool covered = false;
    for (const auto& m : minimal)
      if (m.lt.divides(b.lt)) {
        covered = true;
        break;
      }
    if (!covered) minimal.push_back(std::move(b));
  }
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BasisElem> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    TermVec r = normal_form_w(minimal[i].terms, others, ord);
    make_primitive(r);
    minimal[i] = make_elem(std::move(r));
  }
  std::vector<TermVec> out;
  out.reserve(minimal.size());
  for (auto& m : minimal) out.push_back(std::move(m.terms));
  return out;
}

inline std::vector<BasisElem> to_elems(const std::vector<Polynomial>& basis,
                                       const MonomialOrder& ord) {
  std::vector<BasisElem> out;
  out.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.is_zero())
      throw ValidationError("zero polynomial used as a divisor");
    out.push_back(make_elem(to_working(b, ord)));
  }
  return out;
}

}  // namespace detail

// Remainder of f on full division by the listed polynomials under the given
// order.  f minus the result lies in the ideal the list generates.
inline Polynomial normal_form(const Polynomial& f,
                              const std::vector<Polynomial>& basis,
                              const MonomialOrder& ord) {
  if (f.is_zero()) return f;
  auto elems = detail::to_elems(basis, ord);
  return detail::from_working(
      f.ring(), detail::normal_form_w(detail::to_working(f, ord), elems, ord));
}

// Reduced basis of the ideal generated by gens, from scratch.
inline std::vector<Polynomial> buchberger(const RingPtr& ring,
                                          const std::vector<Polynomial>& gens,
                                          const MonomialOrder& ord) {
  auto basis = detail::buchberger_w(ring, gens, ord);
  auto reduced = detail::reduce_basis_w(std::move(basis), ord);
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (auto& v : reduced)
    out.push_back(detail::from_working(ring, std::move(v)));
  return out;
}

inline BasisPtr reduced_basis(const Ideal& I, const MonomialOrder& ord) {
  return I.get_or_compute(ord.key(), [&] {
    return std::make_shared<const std::vector<Polynomial>>(
        buchberger(I.ring(), I.generators(), ord));
  });
}

inline bool member(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) return true;
  auto ord = MonomialOrder::grevlex();
  auto gb = reduced_basis(I, ord);
  if (gb->empty()) return false;
  auto elems = detail::to_elems(*gb, ord);
  return detail::normal_form_w(detail::to_working(f, ord), elems, ord).empty();
}

inline bool ideal_equal(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring());
  auto ord = MonomialOrder::grevlex();
  auto ga = reduced_basis(A, ord);
  auto gb = reduced_basis(B, ord);
  if (ga->size() != gb->size()) return false;
  for (size_t i = 0; i < ga->size(); ++i)
    if ((*ga)[i] != (*gb)[i]) return false;
  return true;
}

inline Ideal principal(const RingPtr& ring, const Polynomial& f) {
  return Ideal(ring, {f});
}

inline Ideal add_element(const Ideal& I, const Polynomial& f) {
  auto gens = I.generators();
  gens.push_back(f);
  return Ideal(I.ring(), std::move(gens));
}

// I^n, generated by all n-fold products of the listed generators
inline Ideal ideal_power(const Ideal& I, int n) {
  if (n < 1) throw ValidationError("ideal power wants n >= 1");
  const auto& gens = I.generators();
  std::vector<Polynomial> products;
  std::vector<int> pick(n, 0);
  auto rec = [&](auto&& self, int depth, int start,
                 const Polynomial& acc) -> void {
    if (depth == n) {
      products.push_back(acc);
      return;
    }
    for (int i = start; i < static_cast<int>(gens.size()); ++i)
      self(self, depth + 1, i, acc * gens[i]);
  };
  if (!gens.empty())
    rec(rec, 0, 0, Polynomial::constant(I.ring(), Rat(1)));
  return Ideal(I.ring(), std::move(products));
}

// I with the named variables eliminated: compute a basis under a block
// order that ranks those variables above the rest, keep the elements free
// of them.  The kept elements are the reduced grevlex basis of the ideal
// they generate, so that basis is recorded on the result up front.
inline Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
  auto block = MonomialOrder::eliminating(I.ring()->nvars(), vars);
  auto gb = reduced_basis(I, block);
  std::vector<char> mask(I.ring()->nvars(), 0);
  for (int v : vars) mask[v] = 1;
  std::vector<Polynomial> kept;
  for (const auto& g : *gb) {
    bool free = true;
    for (const auto& t : g.terms())
      for (int i = 0; i < I.ring()->nvars() && free; ++i)
        if (mask[i] && t.mono[i] > 0) free = false;
    if (free) kept.push_back(g);
  }
  Ideal out(I.ring(), kept);
  out.seed_basis(MonomialOrder::grevlex().key(),
                 std::make_shared<const std::vector<Polynomial>>(
                     std::move(kept)));
  return out;
}

namespace detail {

inline std::string fresh_aux_name(const Ring& ring) {
  for (const char* cand : {"t", "u", "s"})
    if (ring.var_index(cand) < 0) return cand;
  for (int k = 0;; ++k) {
    std::string cand = "t" + std::to_string(k);
    if (ring.var_index(cand) < 0) return cand;
  }
}

}  // namespace detail

// A cap B via the classical trick: adjoin t, form t*A + (1-t)*B, eliminate t.
inline Ideal intersect(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring());
  const RingPtr& base = A.ring();
  int n = base->nvars();
  std::vector<std::string> names{detail::fresh_aux_name(*base)};
  std::vector<long> weights{1};
  for (int i = 0; i < n; ++i) {
    names.push_back(base->name(i));
    weights.push_back(base->weight(i));
  }
  RingPtr ext = Ring::make(std::move(names), std::move(weights));
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i + 1;
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, Rat(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : A.generators())
    gens.push_back(t * f.map_variables(ext, up));
  for (const auto& g : B.generators())
    gens.push_back(one_minus_t * g.map_variables(ext, up));
  Ideal extended(ext, std::move(gens));
  Ideal elim = eliminate(extended, {0});
  std::vector<int> down(ext->nvars());
  down[0] = -1;
  for (int i = 0; i < n; ++i) down[i + 1] = i;
  std::vector<Polynomial> projected;
  for (const auto& g : elim.generators())
    projected.push_back(g.map_variables(base, down));
  Ideal out(base, projected);
  out.seed_basis(MonomialOrder::grevlex().key(),
                 std::make_shared<const std::vector<Polynomial>>(
                     std::move(projected)));
  return out;
}

// division of an exact multiple; every step cancels the head
inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ZeroPolynomialError("division by zero polynomial");
  auto ord = MonomialOrder::grevlex();
  auto gw = detail::to_working(g, ord);
  detail::TermVec h = detail::to_working(f, ord);
  detail::TermVec q;
  while (!h.empty()) {
    const Term& head = h.front();
    if (!gw.front().mono.divides(head.mono))
      throw Error("exact_divide: not an exact multiple");
    Rat c = head.coef / gw.front().coef;
    Monomial m = head.mono.divide_exact(gw.front().mono);
    q.push_back({c, m});
    h = detail::axpy(h, -c, m, gw, ord);
  }
  return detail::from_working(f.ring(), std::move(q));
}

// I : f, computed as (I cap (f)) / f
inline Ideal colon(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) throw ZeroPolynomialError("colon by the zero polynomial");
  Ideal meet = intersect(I, principal(I.ring(), f));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators())
    gens.push_back(exact_divide(g, f).primitive());
  return Ideal(I.ring(), std::move(gens));
}

struct Saturation {
  Ideal ideal;
  int exponent;  // least k with I : f^k stable
};

// iterate colons until they stabilize
inline Saturation saturate(const Ideal& I, const Polynomial& f) {
  Ideal cur = I;
  int k = 0;
  while (true) {
    Ideal next = colon(cur, f);
    if (ideal_equal(next, cur)) return {std::move(cur), k};
    cur = std::move(next);
    ++k;
  }
}

struct StdMonomials {
  std::vector<Monomial> basis;
  long length;
};

// Monomials outside the leading-term ideal; finite exactly when every
// variable has a pure power among the leading terms.
inline StdMonomials std_monomials(const Ideal& I) {
  auto ord = MonomialOrder::grevlex();
  auto gb = reduced_basis(I, ord);
  int n = I.ring()->nvars();
  std::vector<Monomial> lts;
  for (const auto& g : *gb) {
    auto w = detail::to_working(g, ord);
    lts.push_back(w.front().mono);
  }
  std::vector<int> bound(n, -1);
  for (const auto& lt : lts) {
    int support = -1;
    for (int i = 0; i < n; ++i)
      if (lt[i] > 0) {
        if (support >= 0) {
          support = -2;
          break;
        }
        support = i;
      }
    if (support == -1)
      return {{}, 0};  // the unit ideal has no standard monomials
    if (support >= 0)
      bound[support] = bound[support] < 0 ? lt[support]
                                          : std::min(bound[support], lt[support]);
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0)
      throw NotZeroDimensionalError(
          "no pure power of " + I.ring()->name(i) + " in the leading ideal");
  long box = 1;
  for (int i = 0; i < n; ++i) {
    box *= bound[i];
    if (box > 20'000'000)
      throw Error("standard monomial box too large to enumerate");
  }
  std::vector<Monomial> basis;
  std::vector<int> exps(n, 0);
  auto rec = [&](auto&& self, int var) -> void {
    if (var == n) {
      Monomial m(exps);
      for (const auto& lt : lts)
        if (lt.divides(m)) return;
      basis.push_back(std::move(m));
      return;
    }
    for (int e = 0; e < bound[var]; ++e) {
      exps[var] = e;
      self(self, var + 1);
    }
    exps[var] = 0;
  };
  rec(rec, 0);
  std::sort(basis.begin(), basis.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  long count = static_cast<long>(basis.size());
  return {std::move(basis), count};
}

struct MinimalGenerators {
  std::vector<Polynomial> gens;
  int mu;
};

namespace detail {

// strict deterministic order on polynomials: weighted degree, then leading
// monomial, then term count, then term-by-term
inline bool poly_before(const Polynomial& a, const Polynomial& b) {
  auto ord = MonomialOrder::grevlex();
  long wa = *a.weighted_degree();
  long wb = *b.weighted_degree();
  if (wa != wb) return wa < wb;
  int c = ord.compare(a.terms().front().mono, b.terms().front().mono);
  if (c != 0) return c < 0;
  if (a.terms().size() != b.terms().size())
    return a.terms().size() < b.terms().size();
  for (size_t i = 0; i < a.terms().size(); ++i) {
    c = ord.compare(a.terms()[i].mono, b.terms()[i].mono);
    if (c != 0) return c < 0;
    if (a.terms()[i].coef != b.terms()[i].coef)
      return a.terms()[i].coef < b.terms()[i].coef;
  }
  return false;
}

}  // namespace detail

// Minimal homogeneous generating set, greedy by increasing weighted degree.
// For a weighted-homogeneous ideal the graded Nakayama lemma makes the
// greedy sweep exact: an element is redundant iff the kept lower part
// already generates it.
inline MinimalGenerators min_generators(const Ideal& I) {
  std::vector<Polynomial> cand;
  for (const auto& g : I.generators()) {
    if (g.is_zero()) continue;
    if (!g.weighted_degree())
      throw InhomogeneousIdealError(
          "minimal generators need weighted-homogeneous input");
    cand.push_back(g);
  }
  std::sort(cand.begin(), cand.end(), detail::poly_before);
  std::vector<Polynomial> kept;
  std::optional<Ideal> span;
  for (const auto& g : cand) {
    if (span && member(*span, g)) continue;
    kept.push_back(g.primitive());
    span.emplace(I.ring(), kept);
  }
  return {kept, static_cast<int>(kept.size())};
}

using QMatrix = std::vector<std::vector<Rat>>;

inline long rank_rational(QMatrix m) {
  long rank = 0;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

// Finite-dimensional quotient R/I with its monomial basis and the
// multiplication-by-variable matrices, the workhorse for socle questions.
struct ArtinianQuotient {
  Ideal ideal;
  std::vector<Monomial> basis;
  // mult[v][j] = coordinates of x_v * basis[j]
  std::vector<std::vector<std::vector<Rat>>> mult;

  static ArtinianQuotient build(const Ideal& I) {
    auto ord = MonomialOrder::grevlex();
    auto sm = std_monomials(I);
    auto gb = reduced_basis(I, ord);
    auto elems = detail::to_elems(*gb, ord);
    int n = I.ring()->nvars();
    size_t N = sm.basis.size();
    auto less = [&](const Monomial& a, const Monomial& b) {
      return ord.less(a, b);
    };
    std::map<Monomial, size_t, decltype(less)> index(less);
    for (size_t j = 0; j < N; ++j) index.emplace(sm.basis[j], j);
    std::vector<std::vector<std::vector<Rat>>> mult(
        n, std::vector<std::vector<Rat>>(N, std::vector<Rat>(N, Rat(0))));
    for (int v = 0; v < n; ++v) {
      Monomial xv = Monomial::variable(n, v);
      for (size_t j = 0; j < N; ++j) {
        detail::TermVec f{{Rat(1), sm.basis[j] * xv}};
        auto r = detail::normal_form_w(std::move(f), elems, ord);
        for (const auto& t : r) {
          auto it = index.find(t.mono);
          if (it == index.end())
            throw SoundnessAlarmError("normal form left the monomial basis");
          mult[v][j][it->second] = t.coef;
        }
      }
    }
    return {I, std::move(sm.basis), std::move(mult)};
  }
};

// dimension of the socle (0 : maximal ideal) of the quotient
inline int socle_type(const ArtinianQuotient& q) {
  size_t N = q.basis.size();
  if (N == 0) return 0;
  int n = q.ideal.ring()->nvars();
  QMatrix m;
  m.reserve(n * N);
  for (int v = 0; v < n; ++v)
    for (size_t i = 0; i < N; ++i) {
      std::vector<Rat> row(N, Rat(0));
      for (size_t j = 0; j < N; ++j) row[j] = q.mult[v][j][i];
      m.push_back(std::move(row));
    }
  long rank = rank_rational(std::move(m));
  return static_cast<int>(static_cast<long>(N) - rank);
}

}  // namespace sympow
