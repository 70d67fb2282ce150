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

#include <random>
#include <vector>

#include "sympow/curve.hpp"
#include "sympow/polynomial.hpp"

namespace {

using namespace sympow;

RingPtr xyzw() {
  return std::make_shared<Ring>(
      std::vector<std::string>{"x", "y", "z", "w"},
      std::vector<long>{5, 6, 7, 8});
}

Polynomial P(const RingPtr& r, const std::string& s) {
  return Polynomial::parse(r, s);
}

// Small random polynomials for the algebra-law checks; coefficients and
// support stay tiny so failures print readably.
Polynomial random_poly(const RingPtr& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> nterms(1, 4);
  Polynomial acc(r);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(4);
    for (auto& v : e) v = expo(rng);
    acc = acc + Polynomial::single(r, coef(rng), Monomial(e));
  }
  return acc;
}

}  // namespace

TEST_CASE("addition cancels opposite terms", "[poly]") {
  auto r = xyzw();
  CHECK(P(r, "y^2-x*z") + P(r, "x*z") == P(r, "y^2"));
  CHECK(P(r, "y^2-x*z") + P(r, "x*z-y^2") == Polynomial(r));
}

TEST_CASE("multiplication merges collisions", "[poly]") {
  auto r = xyzw();
  auto g = P(r, "z^2-y*w");
  CHECK(g * g == P(r, "z^4-2*y*z^2*w+y^2*w^2"));

  auto r2 = std::make_shared<Ring>(std::vector<std::string>{"x", "y"},
                                   std::vector<long>{1, 1});
  CHECK(P(r2, "x+y") * P(r2, "x-y") == P(r2, "x^2-y^2"));
}

TEST_CASE("degree of a product adds", "[poly]") {
  auto r = xyzw();
  auto f = P(r, "z^2-y*w");
  auto g = P(r, "x^3-z*w");
  CHECK((f * g).total_degree() == f.total_degree() + g.total_degree());
}

TEST_CASE("mixing rings is rejected", "[poly]") {
  auto r1 = xyzw();
  auto r2 = std::make_shared<Ring>(std::vector<std::string>{"x", "y"},
                                   std::vector<long>{1, 1});
  CHECK_THROWS_AS(P(r1, "x") + P(r2, "x"), RingMismatchError);
}

TEST_CASE("substitute_power raises one variable", "[poly]") {
  auto r = xyzw();
  CHECK(P(r, "y*z-x*w").substitute_power(0, 3) == P(r, "y*z-x^3*w"));
  CHECK(P(r, "x^2*y-w^2").substitute_power(0, 3) == P(r, "x^6*y-w^2"));
  auto f = P(r, "x^2*y-z*w+3*w^2");
  CHECK(f.substitute_power(0, 1) == f);
  CHECK(f.substitute_power(2, 1) == f);
  CHECK_THROWS_AS(f.substitute_power(7, 2), ValidationError);
}

TEST_CASE("substitute_power preserves term count", "[poly]") {
  auto r = xyzw();
  auto f = P(r, "x^2*y-z*w+3*w^2");
  CHECK(f.substitute_power(0, 4).terms().size() == f.terms().size());
}

TEST_CASE("substitute_power is a ring homomorphism", "[poly]") {
  auto r = xyzw();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_poly(r, rng);
    auto g = random_poly(r, rng);
    auto sub = [](const Polynomial& p) { return p.substitute_power(1, 2); };
    CHECK(sub(f * g) == sub(f) * sub(g));
    CHECK(sub(f + g) == sub(f) + sub(g));
  }
}

TEST_CASE("weighted degree under the exponent weights", "[poly]") {
  auto r = xyzw();
  CHECK(P(r, "z^2-y*w").weighted_degree() == 14);
  CHECK(P(r, "x^3-z*w").weighted_degree() == 15);

  auto ones = std::make_shared<Ring>(
      std::vector<std::string>{"x", "y", "z", "w"},
      std::vector<long>{1, 1, 1, 1});
  CHECK(!P(ones, "x+y^2").weighted_degree().has_value());
  CHECK_THROWS_AS(Polynomial(r).weighted_degree(), ZeroPolynomialError);
}

TEST_CASE("ord is the smallest total degree", "[poly]") {
  auto r = xyzw();
  CHECK(P(r, "z^2-y*w").ord() == 2);
  CHECK(P(r, "x").ord() == 1);
  CHECK(P(r, "x^3-z*w").ord() == 2);
  CHECK_THROWS_AS(Polynomial(r).ord(), ZeroPolynomialError);
}

TEST_CASE("ring axioms hold exactly", "[poly]") {
  auto r = xyzw();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_poly(r, rng);
    auto g = random_poly(r, rng);
    auto h = random_poly(r, rng);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("canonical form is stable", "[poly]") {
  auto r = xyzw();
  auto f = P(r, "x^3-z*w+2*y^2");
  CHECK(Polynomial(r, f.terms()) == f);
  CHECK(Polynomial::parse(r, f.str()) == f);
}

TEST_CASE("printer and parser round-trip", "[poly]") {
  auto r = xyzw();
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_poly(r, rng);
    CHECK(Polynomial::parse(r, f.str()) == f);
  }
  CHECK(P(r, "1/2*x^2-3/4*y").str() == "1/2*x^2-3/4*y");
  CHECK_THROWS_AS(P(r, "x+q"), PolynomialParseError);
}

TEST_CASE("closed-form curve generators are weighted-homogeneous", "[poly]") {
  for (auto [a, R] : std::vector<std::pair<long, long>>{
           {6, 1}, {7, 2}, {8, 1}, {9, 1}, {10, 1}, {12, 1}}) {
    auto gens = arithmetic_generators(a, R);
    for (const auto& g : gens) {
      INFO("a=" << a << " r=" << R << " g=" << g.str());
      CHECK(g.weighted_degree().has_value());
    }
  }
}
