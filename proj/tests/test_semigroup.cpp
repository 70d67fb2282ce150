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

#include <algorithm>
#include <functional>
#include <vector>

#include "sympow/semigroup.hpp"

namespace {

using namespace sympow;

// Exhaustive combination search, the slow oracle behind the membership DP.
bool member_brute(const std::vector<long>& gens, long m) {
  std::function<bool(size_t, long)> go = [&](size_t i, long rest) {
    if (rest == 0) return true;
    if (i == gens.size()) return false;
    for (long k = 0; k * gens[i] <= rest; ++k)
      if (go(i + 1, rest - k * gens[i])) return true;
    return false;
  };
  return go(0, m);
}

}  // namespace

TEST_CASE("membership examples", "[semigroup]") {
  CHECK_FALSE(semigroup_member({5, 6, 7, 8}, 9));
  CHECK(semigroup_member({5, 6, 7, 8}, 0));
  CHECK(semigroup_member({4, 5, 6, 7}, 17));  // 4 + 6 + 7
}

TEST_CASE("membership agrees with brute force", "[semigroup]") {
  for (const auto& gens : std::vector<std::vector<long>>{
           {5, 6, 7, 8}, {4, 7, 10, 13}, {3, 7}, {8, 12, 18, 27}}) {
    for (long m = 0; m <= 60; ++m) {
      INFO("gens[0]=" << gens[0] << " m=" << m);
      CHECK(semigroup_member(gens, m) == member_brute(gens, m));
    }
  }
}

TEST_CASE("frobenius numbers", "[semigroup]") {
  CHECK(frobenius({5, 6, 7, 8}) == 9);  // gaps {1,2,3,4,9}
  CHECK(frobenius({2, 3}) == 1);
  // (2-1)(3-1)-1 in general for two coprime generators
  CHECK(frobenius({3, 5}) == 7);
  CHECK(frobenius({4, 5, 6, 7}) == 3);  // gaps {1,2,3}; 8..11 = 4+4, 4+5, ...
  CHECK_THROWS_AS(frobenius({4, 6}), GcdNotOneError);
}

TEST_CASE("frobenius against gap enumeration", "[semigroup]") {
  for (const auto& gens : std::vector<std::vector<long>>{
           {5, 6, 7, 8}, {4, 5, 6, 7}, {3, 7}, {8, 12, 18, 27}, {6, 7, 8, 9, 10}}) {
    long f = frobenius(gens);
    long limit = f + 2 * gens.front() + 5;
    long biggest_gap = -1;
    for (long m = 0; m <= limit; ++m)
      if (!member_brute(gens, m)) biggest_gap = m;
    INFO("gens[0]=" << gens[0]);
    CHECK(f == biggest_gap);
  }
}

TEST_CASE("everything past the frobenius number is reachable", "[semigroup]") {
  for (const auto& gens : std::vector<std::vector<long>>{
           {5, 6, 7, 8}, {4, 7, 10, 13}, {8, 12, 18, 27}}) {
    long f = frobenius(gens);
    for (long m = f + 1; m <= f + gens.front(); ++m) {
      INFO("gens[0]=" << gens[0] << " m=" << m);
      CHECK(semigroup_member(gens, m));
    }
  }
}

TEST_CASE("validate detects the arithmetic shape", "[semigroup]") {
  auto spec = CurveSpec::validate({5, 6, 7, 8});
  REQUIRE(spec.arithmetic_case().has_value());
  CHECK(spec.arithmetic_case()->a == 5);
  CHECK(spec.arithmetic_case()->r == 1);
  CHECK(spec.arithmetic_case()->k == 1);
  CHECK(spec.arithmetic_case()->residue == 2);

  auto wide = CurveSpec::validate({5, 8, 11, 14});
  REQUIRE(wide.arithmetic_case().has_value());
  CHECK(wide.arithmetic_case()->r == 3);
}

TEST_CASE("validate rejects redundant generators", "[semigroup]") {
  try {
    CurveSpec::validate({3, 4, 5, 6});
    FAIL("expected RedundantGeneratorError");
  } catch (const RedundantGeneratorError& e) {
    CHECK(e.index == 3);
    CHECK(e.value == 6);
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }
  // 8 = 4 + 4 sits inside the semigroup of the other three
  CHECK_THROWS_AS(CurveSpec::validate({4, 6, 8, 9}), RedundantGeneratorError);
}

TEST_CASE("validate accepts non-arithmetic gcd-one tuples", "[semigroup]") {
  auto spec = CurveSpec::validate({4, 6, 9, 11});
  CHECK_FALSE(spec.arithmetic_case().has_value());
  CHECK(spec.morales_history().empty());
  CHECK_THROWS_AS(CurveSpec::validate({4, 6, 8, 10}), GcdNotOneError);
  CHECK_THROWS_AS(CurveSpec::validate({6, 5, 7, 8}), ValidationError);
  CHECK_THROWS_AS(CurveSpec::validate({5}), ValidationError);
}

TEST_CASE("first exponent at least the count, on valid specs", "[semigroup]") {
  for (const auto& exps : std::vector<std::vector<long>>{
           {5, 6, 7, 8}, {4, 7, 10, 13}, {8, 12, 18, 27}, {6, 7, 8, 9, 10}}) {
    auto spec = CurveSpec::validate(exps);
    CHECK(spec.exponents().front() >= spec.dim());
  }
}

TEST_CASE("arithmetic subsequence search", "[semigroup]") {
  auto all = arith_subseq({6, 7, 8, 9, 10}, 5);
  REQUIRE(all.has_value());
  CHECK(all->indices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(all->difference == 1);

  CHECK_FALSE(arith_subseq({5, 18, 21, 24}, 5).has_value());

  // lexicographically first: skipping index 2 reaches difference 3
  auto skip = arith_subseq({4, 7, 9, 10, 13, 16}, 5);
  REQUIRE(skip.has_value());
  CHECK(skip->indices == std::vector<int>{0, 1, 3, 4, 5});
  CHECK(skip->difference == 3);

  CHECK_THROWS_AS(arith_subseq({4, 7, 10}, 2), ValidationError);
}
