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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympow/groebner.hpp"
#include "sympow/semigroup.hpp"

namespace sympow {

// Coordinate ring of the curve (t^a1, ..., t^ad): variables x,y,z,w when
// d = 4, else x1..xd, graded by the exponents.
inline RingPtr curve_ring(const CurveSpec& spec) {
  std::vector<std::string> names;
  if (spec.dim() == 4) {
    names = {"x", "y", "z", "w"};
  } else {
    for (int i = 0; i < spec.dim(); ++i)
      names.push_back("x" + std::to_string(i + 1));
  }
  return Ring::make(std::move(names), spec.exponents());
}

// Defining ideal of the curve: kernel of x_i -> t^{a_i}, computed by
// eliminating t.  The generators stored on the result are its reduced
// grevlex basis.
inline Ideal toric_ideal(const CurveSpec& spec, const RingPtr& ring) {
  int d = spec.dim();
  std::vector<std::string> names{"t0"};
  // the parameter gets a name free in the curve ring
  if (ring->var_index("t") < 0) names[0] = "t";
  std::vector<long> weights{1};
  for (int i = 0; i < d; ++i) {
    names.push_back(ring->name(i));
    weights.push_back(ring->weight(i));
  }
  RingPtr ext = Ring::make(std::move(names), std::move(weights));
  std::vector<Polynomial> gens;
  for (int i = 0; i < d; ++i) {
    Polynomial xi = Polynomial::variable(ext, i + 1);
    Polynomial tp = Polynomial::variable(
        ext, 0, static_cast<int>(spec.exponents()[i]));
    gens.push_back(xi - tp);
  }
  Ideal extended(ext, std::move(gens));
  Ideal elim = eliminate(extended, {0});
  std::vector<int> down(d + 1);
  down[0] = -1;
  for (int i = 0; i < d; ++i) down[i + 1] = i;
  std::vector<Polynomial> projected;
  for (const auto& g : elim.generators())
    projected.push_back(g.map_variables(ring, down));
  Ideal out(ring, projected);
  out.seed_basis(MonomialOrder::grevlex().key(),
                 std::make_shared<const std::vector<Polynomial>>(
                     std::move(projected)));
  return out;
}

inline Ideal toric_ideal(const CurveSpec& spec) {
  return toric_ideal(spec, curve_ring(spec));
}

namespace detail_curve {

inline Polynomial mono2(const RingPtr& ring, int v1, int e1, int v2, int e2,
                        int sign = 1) {
  Monomial m(ring->nvars());
  if (e1 != 0) m.set(v1, e1);
  if (e2 != 0) m.set(v2, m[v2] + e2);
  return Polynomial::single(ring, Rat(sign), std::move(m));
}

}  // namespace detail_curve

// Closed-form defining equations for four exponents in arithmetic
// progression a, a+r, a+2r, a+3r with gcd(a, r) = 1, split by a mod 3.
inline std::vector<Polynomial> arithmetic_generators(const CurveSpec& spec,
                                                     const RingPtr& ring) {
  const auto& ac = spec.arithmetic_case();
  if (!ac)
    throw InvalidCaseError("exponents " + spec.str() +
                           " are not in arithmetic progression");
  int k = static_cast<int>(ac->k);
  int kr = static_cast<int>(ac->k + ac->r);
  constexpr int X = 0, Y = 1, Z = 2, W = 3;
  using detail_curve::mono2;
  auto var = [&](int v, int e) { return mono2(ring, v, e, v, 0); };
  std::vector<Polynomial> g;
  g.push_back(var(Z, 2) - mono2(ring, Y, 1, W, 1));        // z^2 - y*w
  g.push_back(mono2(ring, Y, 1, Z, 1) - mono2(ring, X, 1, W, 1));
  g.push_back(var(Y, 2) - mono2(ring, X, 1, Z, 1));
  switch (ac->residue) {
    case 0:
      g.push_back(var(X, kr) - var(W, k));
      break;
    case 1:
      g.push_back(mono2(ring, X, kr, Z, 1) - var(W, k + 1));
      g.push_back(mono2(ring, X, kr, Y, 1) - mono2(ring, Z, 1, W, k));
      g.push_back(var(X, kr + 1) - mono2(ring, Y, 1, W, k));
      break;
    case 2:
      g.push_back(var(X, kr + 1) - mono2(ring, Z, 1, W, k));
      g.push_back(mono2(ring, X, kr, Y, 1) - var(W, k + 1));
      break;
  }
  return g;
}

inline std::vector<Polynomial> arithmetic_generators(long a, long r) {
  CurveSpec spec = [&] {
    try {
      return CurveSpec::validate({a, a + r, a + 2 * r, a + 3 * r});
    } catch (const ValidationError& e) {
      throw InvalidCaseError(std::string("bad arithmetic data: ") + e.what());
    }
  }();
  return arithmetic_generators(spec, curve_ring(spec));
}

struct DetAdj {
  Polynomial det;
  std::vector<std::vector<Polynomial>> adj;
};

// determinant and adjugate of a 3x3 polynomial matrix
inline DetAdj determinant_adjugate(
    const std::vector<std::vector<Polynomial>>& m) {
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  Polynomial det = m[0][0] * minor2(1, 2, 1, 2) - m[0][1] * minor2(1, 2, 0, 2)
                 + m[0][2] * minor2(1, 2, 0, 1);
  std::vector<std::vector<Polynomial>> adj;
  for (int i = 0; i < 3; ++i) {
    std::vector<Polynomial> row;
    for (int j = 0; j < 3; ++j) {
      // adj[i][j] is the (j,i) cofactor
      int r0 = j == 0 ? 1 : 0;
      int r1 = j == 2 ? 1 : 2;
      int c0 = i == 0 ? 1 : 0;
      int c1 = i == 2 ? 1 : 2;
      Polynomial cof = minor2(r0, r1, c0, c1);
      if ((i + j) % 2 == 1) cof = -cof;
      row.push_back(std::move(cof));
    }
    adj.push_back(std::move(row));
  }
  return {std::move(det), std::move(adj)};
}

struct WitnessMatrix {
  enum class Kind { case3k, case3k1, hankel, pfaffian };
  Kind kind;
  CurveSpec spec;
  RingPtr ring;
  std::vector<std::vector<Polynomial>> entries;
  // 3x3 kinds carry determinant data, the 5x5 kind its sub-pfaffians
  std::optional<Polynomial> det;
  std::vector<std::vector<Polynomial>> adjugate;
  std::vector<Polynomial> pfaffians;
};

inline const char* witness_kind_name(WitnessMatrix::Kind k) {
  switch (k) {
    case WitnessMatrix::Kind::case3k:
      return "matrix3x3_res0";
    case WitnessMatrix::Kind::case3k1:
      return "matrix3x3_res1";
    case WitnessMatrix::Kind::hankel:
      return "hankel3x3";
    case WitnessMatrix::Kind::pfaffian:
      return "pfaffian5x5";
  }
  return "?";
}

// The 3x3 matrix whose determinant lands in the second symbolic power but
// not the second ordinary power.  Shape depends on a mod 3.
inline WitnessMatrix witness_matrix(long a, long r) {
  CurveSpec spec = CurveSpec::validate({a, a + r, a + 2 * r, a + 3 * r});
  const auto& ac = *spec.arithmetic_case();
  if (ac.residue == 2)
    throw WrongResidueError("a = " + std::to_string(a) +
                            " is 2 mod 3; no 3x3 matrix applies there, "
                            "use the 5x5 pfaffian form instead");
  RingPtr ring = curve_ring(spec);
  int k = static_cast<int>(ac.k);
  int kr = static_cast<int>(ac.k + ac.r);
  constexpr int X = 0, Y = 1, Z = 2, W = 3;
  using detail_curve::mono2;
  auto var = [&](int v, int e = 1) { return mono2(ring, v, e, v, 0); };
  std::vector<std::vector<Polynomial>> m;
  m.push_back({var(X), var(Y), var(Z)});
  m.push_back({var(Y), var(Z), var(W)});
  if (ac.residue == 0)
    m.push_back({mono2(ring, Z, 1, W, k - 1), var(X, kr),
                 mono2(ring, Y, 1, X, kr - 1)});
  else
    m.push_back({mono2(ring, Z, 1, W, k - 1), var(W, k), var(X, kr)});
  auto da = determinant_adjugate(m);
  return {ac.residue == 0 ? WitnessMatrix::Kind::case3k
                          : WitnessMatrix::Kind::case3k1,
          std::move(spec),
          std::move(ring),
          std::move(m),
          std::move(da.det),
          std::move(da.adj),
          {}};
}

// Hankel matrix of five variables sitting on an arithmetic subsequence of
// the exponents; its determinant has plain degree 3.
inline WitnessMatrix hankel_matrix(const CurveSpec& spec,
                                   const std::vector<int>& indices) {
  if (indices.size() != 5)
    throw NotArithmeticError("hankel form needs five positions");
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= spec.dim())
      throw NotArithmeticError("hankel position out of range");
    if (i > 0 && indices[i] <= indices[i - 1])
      throw NotArithmeticError("hankel positions must increase");
  }
  const auto& e = spec.exponents();
  long d1 = e[indices[1]] - e[indices[0]];
  for (int i = 1; i < 4; ++i)
    if (e[indices[i + 1]] - e[indices[i]] != d1)
      throw NotArithmeticError(
          "selected exponents are not in arithmetic progression");
  RingPtr ring = curve_ring(spec);
  auto v = [&](int i) { return Polynomial::variable(ring, indices[i]); };
  std::vector<std::vector<Polynomial>> m{{v(0), v(1), v(2)},
                                         {v(1), v(2), v(3)},
                                         {v(2), v(3), v(4)}};
  auto da = determinant_adjugate(m);
  return {WitnessMatrix::Kind::hankel, spec,          std::move(ring),
          std::move(m),                std::move(da.det),
          std::move(da.adj),           {}};
}

namespace detail_curve {

// pfaffian of a 4x4 skew matrix
inline Polynomial pfaffian4(const std::vector<std::vector<Polynomial>>& m) {
  return m[0][1] * m[2][3] - m[0][2] * m[1][3] + m[0][3] * m[1][2];
}

}  // namespace detail_curve

// For a = 3k+2 the defining ideal is the five sub-pfaffians of one 5x5
// skew matrix; no single 3x3 determinant is available in that case.
inline WitnessMatrix pfaffian_system(long a, long r) {
  CurveSpec spec = CurveSpec::validate({a, a + r, a + 2 * r, a + 3 * r});
  const auto& ac = *spec.arithmetic_case();
  if (ac.residue != 2)
    throw WrongResidueError("a = " + std::to_string(a) +
                            " is not 2 mod 3; the 5x5 form needs a = 3k+2, "
                            "use the 3x3 matrix form instead");
  RingPtr ring = curve_ring(spec);
  int k = static_cast<int>(ac.k);
  int kr = static_cast<int>(ac.k + ac.r);
  constexpr int X = 0, Y = 1, Z = 2, W = 3;
  using detail_curve::mono2;
  auto var = [&](int v, int e = 1) { return mono2(ring, v, e, v, 0); };
  Polynomial zero(ring);
  std::vector<std::vector<Polynomial>> m{
      {zero, -var(W, k), zero, var(X), var(Y)},
      {var(W, k), zero, var(X, kr), var(Y), var(Z)},
      {zero, -var(X, kr), zero, var(Z), var(W)},
      {-var(X), -var(Y), -var(Z), zero, zero},
      {-var(Y), -var(Z), -var(W), zero, zero}};
  std::vector<Polynomial> pf;
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<std::vector<Polynomial>> sub;
    for (int i = 0; i < 5; ++i) {
      if (i == skip) continue;
      std::vector<Polynomial> row;
      for (int j = 0; j < 5; ++j)
        if (j != skip) row.push_back(m[i][j]);
      sub.push_back(std::move(row));
    }
    Polynomial p = detail_curve::pfaffian4(sub);
    if (!p.is_zero()) p = p.primitive();
    pf.push_back(std::move(p));
  }
  return {WitnessMatrix::Kind::pfaffian,
          std::move(spec),
          std::move(ring),
          std::move(m),
          std::nullopt,
          {},
          std::move(pf)};
}

// Base change that keeps one exponent and multiplies the rest by c.
// On equations it substitutes x_kept -> x_kept^c; membership in ordinary
// and symbolic powers transfers along it in both directions.
struct MoralesTransform {
  CurveSpec source;
  CurveSpec target;
  int index0;
  long c;
  RingPtr source_ring;
  RingPtr target_ring;
  std::vector<int> perm;  // source variable -> target variable

  bool extension() const { return index0 != 0; }

  Polynomial apply(const Polynomial& f) const {
    require_same_ring(source_ring, f.ring());
    return f.substitute_power(index0, c).map_variables(target_ring, perm);
  }
};

inline MoralesTransform morales_transform(const CurveSpec& spec, int index0,
                                          long c) {
  if (index0 < 0 || index0 >= spec.dim())
    throw ValidationError("kept index out of range");
  if (c < 1) throw ValidationError("multiplier must be >= 1");
  const auto& e = spec.exponents();
  long kept = e[index0];
  if (std::gcd(c, kept) != 1)
    throw GcdViolationError("multiplier " + std::to_string(c) +
                            " shares a factor with kept exponent " +
                            std::to_string(kept));
  std::vector<std::pair<long, int>> vals;
  for (int i = 0; i < spec.dim(); ++i)
    vals.push_back({i == index0 ? e[i] : c * e[i], i});
  std::sort(vals.begin(), vals.end());
  std::vector<long> new_exps;
  std::vector<int> perm(spec.dim());
  for (int pos = 0; pos < spec.dim(); ++pos) {
    new_exps.push_back(vals[pos].first);
    perm[vals[pos].second] = pos;
  }
  CurveSpec target = [&] {
    try {
      return CurveSpec::validate(new_exps);
    } catch (const GcdNotOneError& err) {
      throw GcdViolationError(std::string("transformed exponents: ") +
                              err.what());
    } catch (const RedundantGeneratorError& err) {
      throw RedundancyAfterTransformError(
          std::string("transformed exponents: ") + err.what());
    }
  }();
  auto history = spec.morales_history();
  history.push_back({index0, c});
  target = target.with_history(std::move(history));
  RingPtr sring = curve_ring(spec);
  RingPtr tring = curve_ring(target);
  return {spec, std::move(target), index0, c,
          std::move(sring), std::move(tring), std::move(perm)};
}

}  // namespace sympow
