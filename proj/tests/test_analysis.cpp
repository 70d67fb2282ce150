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

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "sympow/analysis.hpp"

namespace {

using namespace sympow;

Ideal prime_of(const std::vector<long>& exps) {
  return toric_ideal(CurveSpec::validate(exps));
}

}  // namespace

TEST_CASE("first symbolic power is the prime itself", "[analysis]") {
  for (auto exps : std::vector<std::vector<long>>{{5, 6, 7, 8}, {6, 7, 8, 9}}) {
    Ideal Pid = prime_of(exps);
    CHECK(ideal_equal(symbolic_power(Pid, 1), Pid));
  }
}

TEST_CASE("symbolic square separates from the ordinary square", "[analysis]") {
  Ideal Pid = prime_of({6, 7, 8, 9});
  WitnessMatrix W = witness_matrix(6, 1);
  Polynomial D = W.det->map_variables(Pid.ring(), std::vector<int>{0, 1, 2, 3});
  CHECK(member(symbolic_power(Pid, 2), D));
  CHECK_FALSE(member(ideal_power(Pid, 2), D));

  Ideal gor = prime_of({5, 6, 7, 8});
  CHECK(ideal_equal(symbolic_power(gor, 2), ideal_power(gor, 2)));
}

TEST_CASE("equality of powers, fast path vs definition", "[analysis]") {
  struct Row {
    std::vector<long> exps;
    int n;
    bool equal;
  };
  for (const auto& row : std::vector<Row>{{{5, 6, 7, 8}, 2, true},
                                          {{5, 6, 7, 8}, 3, false},
                                          {{4, 5, 6, 7}, 2, false},
                                          {{6, 7, 8, 9}, 2, false}}) {
    Ideal Pid = prime_of(row.exps);
    INFO("exps[0]=" << row.exps[0] << " n=" << row.n);
    CHECK(powers_equal(Pid, row.n) == row.equal);
    CHECK(ideal_equal(ideal_power(Pid, row.n), symbolic_power(Pid, row.n)) ==
          row.equal);
  }
}

TEST_CASE("saturating at any variable gives the same symbolic square",
          "[analysis]") {
  for (auto exps : std::vector<std::vector<long>>{
           {5, 6, 7, 8}, {6, 7, 8, 9}, {4, 5, 6, 7}}) {
    Ideal Pid = prime_of(exps);
    Ideal P2 = ideal_power(Pid, 2);
    Ideal first = saturate(P2, Polynomial::variable(Pid.ring(), 0)).ideal;
    for (int j = 1; j < 4; ++j) {
      INFO("exps[0]=" << exps[0] << " variable " << j);
      CHECK(ideal_equal(
          saturate(P2, Polynomial::variable(Pid.ring(), j)).ideal, first));
    }
  }
}

TEST_CASE("multiplicity equals the first exponent", "[analysis]") {
  CHECK(multiplicity(prime_of({5, 6, 7, 8})) == 5);
  CHECK(multiplicity(prime_of({6, 7, 8, 9})) == 6);
  CHECK(multiplicity(prime_of({8, 12, 18, 27})) == 8);
}

TEST_CASE("cohen-macaulay types", "[analysis]") {
  CHECK(cm_type(prime_of({5, 6, 7, 8})) == 1);
  CHECK(cm_type(prime_of({6, 7, 8, 9})) == 2);
  CHECK(cm_type(prime_of({4, 5, 6, 7})) == 3);
}

TEST_CASE("second-power equality tracks the gorenstein property",
          "[analysis]") {
  for (auto exps : std::vector<std::vector<long>>{{5, 6, 7, 8},
                                                  {6, 7, 8, 9},
                                                  {4, 5, 6, 7},
                                                  {5, 7, 9, 11},
                                                  {8, 9, 10, 11}}) {
    Ideal Pid = prime_of(exps);
    INFO("exps[0]=" << exps[0]);
    CHECK(powers_equal(Pid, 2) == (cm_type(Pid) == 1));
    CHECK((cm_type(Pid) == 1) == (exps[0] % 3 == 2));
  }
}

TEST_CASE("gorenstein curves here use three or five generators", "[analysis]") {
  for (auto exps : std::vector<std::vector<long>>{
           {5, 6, 7, 8}, {8, 9, 10, 11}, {5, 8, 11, 14}, {8, 12, 18, 27}}) {
    Ideal Pid = prime_of(exps);
    if (cm_type(Pid) == 1) {
      int mu = min_generators(Pid).mu;
      INFO("exps[0]=" << exps[0] << " mu=" << mu);
      CHECK((mu == 3 || mu == 5));
    }
  }
}

TEST_CASE("multiplicity bound values", "[analysis]") {
  CHECK(mult_bound(3, 4) == Rat(28, 5));
  CHECK(mult_bound(2, 3) == Rat(10, 3));
  CHECK(mult_bound(2, 4) == Rat(5));
  for (int d = 2; d <= 10; ++d) CHECK(mult_bound(1, d) == Rat(d));
}

TEST_CASE("multiplicity bound grows with the power", "[analysis]") {
  // each factor (2n+r)/(n+r) rises with n once r > 0; d = 2 stays flat at 2
  for (int n = 1; n <= 20; ++n) CHECK(mult_bound(n, 2) == Rat(2));
  for (int d = 3; d <= 7; ++d)
    for (int n = 1; n <= 20; ++n) {
      INFO("n=" << n << " d=" << d);
      CHECK(mult_bound(n + 1, d) > mult_bound(n, d));
    }
}

TEST_CASE("bound predictions and the binomial form", "[analysis]") {
  CHECK(bound_predicts(5, 3, 4));
  CHECK_FALSE(bound_predicts(6, 3, 4));
  for (int d = 2; d <= 6; ++d)
    for (int n = 1; n <= 6; ++n)
      for (long e = 1; e <= 20; ++e) {
        INFO("e=" << e << " n=" << n << " d=" << d);
        CHECK(bound_predicts(e, n, d) == bound_predicts_binomial(e, n, d));
      }
}

TEST_CASE("the bound never catches the boundary multiplicity", "[analysis]") {
  // the products approach 2^(d-1) from below, so e = 2^(d-1) stays out of reach
  for (int n : {1, 2, 3, 5, 10, 50}) CHECK_FALSE(bound_predicts(8, n, 4));
  CHECK(mult_bound(50, 4) < Rat(8));
}

TEST_CASE("full reports and verdicts", "[analysis]") {
  auto rep1 = analyze_curve(CurveSpec::validate({4, 5, 6, 7}), 3);
  CHECK(rep1.verdict.str() == "inequality_at(2)");
  CHECK(rep1.mu == 6);
  CHECK(rep1.mu == static_cast<int>(rep1.minimal_generators.size()));
  CHECK(rep1.gorenstein == (rep1.cm_type == 1));
  CHECK(rep1.equality.size() == 2);

  auto rep2 = analyze_curve(CurveSpec::validate({5, 6, 7, 8}), 3);
  CHECK(rep2.verdict.str() == "inequality_at(3)");
  CHECK(rep2.equality[0].equal);
  CHECK_FALSE(rep2.equality[1].equal);

  auto ci = analyze_curve(CurveSpec::validate({8, 12, 18, 27}), 3);
  CHECK(ci.verdict.str() == "all_equal_complete_intersection");
  CHECK(ci.mu == 3);
  CHECK(ci.multiplicity == 8);
  CHECK(ci.equality[0].equal);
  CHECK(ci.equality[1].equal);
}

TEST_CASE("witness verification records every check", "[analysis]") {
  CurveContext ctx(CurveSpec::validate({6, 7, 8, 9}));
  WitnessVerdict v = verify_witness(ctx, witness_matrix(6, 1));
  CHECK(v.passed());
  REQUIRE(v.det_nonzero.has_value());
  CHECK(*v.det_nonzero);
  CHECK_FALSE(*v.in_ordinary_square);
  CHECK(*v.in_symbolic_square);
  CHECK(*v.adjugate_identity);
  CHECK(*v.adjugate_in_cube);
  CHECK(*v.shifted_in_square);
  CHECK_FALSE(v.matches_generators.has_value());

  CurveContext h(CurveSpec::validate({6, 7, 8, 9, 10}));
  WitnessVerdict hv = verify_witness(h, hankel_matrix(h.spec(), {0, 1, 2, 3, 4}));
  CHECK(hv.passed());
  CHECK(*hv.degree_excludes_square);
  CHECK_FALSE(*hv.in_ordinary_square);
  CHECK(*hv.in_symbolic_square);

  CurveContext p(CurveSpec::validate({5, 6, 7, 8}));
  WitnessVerdict pv = verify_witness(p, pfaffian_system(5, 1));
  CHECK(pv.passed());
  CHECK(*pv.matches_generators);
}

TEST_CASE("witness built for another curve is rejected", "[analysis]") {
  Ideal Pid = prime_of({6, 7, 8, 9});
  CHECK_THROWS_AS(verify_witness(Pid, witness_matrix(9, 1)),
                  WitnessMismatchError);
}

TEST_CASE("complete-intersection multiplicity floor", "[analysis]") {
  auto ci = analyze_curve(CurveSpec::validate({8, 12, 18, 27}), 2);
  CHECK(ci_multiplicity_check(ci));

  auto not_ci = analyze_curve(CurveSpec::validate({4, 5, 6, 7}), 2);
  CHECK_THROWS_AS(ci_multiplicity_check(not_ci), NotCompleteIntersectionError);
}

TEST_CASE("membership transfers across exponent scaling", "[analysis]") {
  CurveSpec base = CurveSpec::validate({5, 6, 7, 8});
  for (long c : {2L, 3L}) {
    MoralesTransform T = morales_transform(base, 0, c);
    TransferCheck tc = morales_transfer_check(T, 10, 2, 20260823);
    INFO("c=" << c);
    CHECK(tc.checks == 20);
    CHECK(tc.disagreements == 0);
    CHECK(tc.all_agree);
  }
}
