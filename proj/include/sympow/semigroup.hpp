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
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/rational.hpp"

namespace sympow {

// value in <gens>?  simple reachability sweep
inline bool semigroup_member(const std::vector<long>& gens, long value) {
  if (value < 0) return false;
  if (value == 0) return true;
  std::vector<char> reach(value + 1, 0);
  reach[0] = 1;
  for (long v = 1; v <= value; ++v)
    for (long g : gens)
      if (g <= v && g > 0 && reach[v - g]) {
        reach[v] = 1;
        break;
      }
  return reach[value] != 0;
}

// one representation of value as a sum of generators (value must be a member)
inline std::vector<long> semigroup_decompose(const std::vector<long>& gens,
                                             long value) {
  std::vector<long> used(value + 1, -1);
  std::vector<char> reach(value + 1, 0);
  reach[0] = 1;
  for (long v = 1; v <= value; ++v)
    for (long g : gens)
      if (g <= v && g > 0 && reach[v - g]) {
        reach[v] = 1;
        used[v] = g;
        break;
      }
  std::vector<long> parts;
  long v = value;
  while (v > 0) {
    parts.push_back(used[v]);
    v -= used[v];
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

// Largest integer outside the semigroup.  A candidate gap f is certified
// once f + min(gens) consecutive members fit below the sweep limit: every
// larger value is then some member of (f, f + min] plus a multiple of
// min(gens).  Too small a window gets doubled.
inline long frobenius(const std::vector<long>& gens) {
  if (gens.empty()) throw ValidationError("frobenius of an empty list");
  for (long g : gens)
    if (g <= 0) throw ValidationError("generators must be positive");
  long g = gcd_all(gens);
  if (g != 1)
    throw GcdNotOneError("frobenius needs gcd 1, got gcd " +
                         std::to_string(g));
  long lo = *std::min_element(gens.begin(), gens.end());
  if (lo == 1) return -1;
  long hi = *std::max_element(gens.begin(), gens.end());
  long limit = lo * hi + lo;
  while (true) {
    std::vector<char> reach(limit + 1, 0);
    reach[0] = 1;
    for (long v = 1; v <= limit; ++v)
      for (long gg : gens)
        if (gg <= v && reach[v - gg]) {
          reach[v] = 1;
          break;
        }
    long f = -1;
    for (long v = limit; v >= 0; --v)
      if (!reach[v]) {
        f = v;
        break;
      }
    if (f < 0) throw SoundnessAlarmError("no gap found with gcd 1, min >= 2");
    if (f + lo <= limit) return f;
    limit *= 2;
  }
}

struct ArithmeticCase {
  long a;       // first exponent
  long r;       // common difference
  long k;       // floor(a / 3)
  int residue;  // a mod 3
};

struct MoralesStep {
  int index0;  // which exponent kept its value (0-based)
  long c;      // multiplier applied to the others
};

// Validated exponent list of a monomial curve, with the arithmetic shape
// detected once at construction.
class CurveSpec {
 public:
  static CurveSpec validate(std::vector<long> exponents) {
    if (exponents.size() < 2)
      throw ValidationError("need at least two exponents");
    for (long e : exponents)
      if (e <= 0) throw ValidationError("exponents must be positive");
    for (size_t i = 1; i < exponents.size(); ++i)
      if (exponents[i] <= exponents[i - 1])
        throw ValidationError("exponents must be strictly increasing");
    long g = gcd_all(exponents);
    if (g != 1)
      throw GcdNotOneError("exponents have gcd " + std::to_string(g) +
                           ", expected 1");
    for (size_t i = 0; i < exponents.size(); ++i) {
      std::vector<long> others;
      for (size_t j = 0; j < exponents.size(); ++j)
        if (j != i) others.push_back(exponents[j]);
      if (semigroup_member(others, exponents[i])) {
        auto parts = semigroup_decompose(others, exponents[i]);
        std::string how;
        for (size_t p = 0; p < parts.size(); ++p)
          how += (p ? " + " : "") + std::to_string(parts[p]);
        throw RedundantGeneratorError(
            static_cast<int>(i), exponents[i],
            "redundant generator " + std::to_string(exponents[i]) + " (= " +
                how + ")");
      }
    }
    if (exponents[0] < static_cast<long>(exponents.size()))
      throw SoundnessAlarmError(
          "first exponent smaller than the embedding dimension");
    CurveSpec spec;
    spec.exponents_ = std::move(exponents);
    spec.detect_arithmetic();
    return spec;
  }

  const std::vector<long>& exponents() const { return exponents_; }
  int dim() const { return static_cast<int>(exponents_.size()); }
  const std::optional<ArithmeticCase>& arithmetic_case() const {
    return arithmetic_case_;
  }
  const std::vector<MoralesStep>& morales_history() const {
    return morales_history_;
  }

  CurveSpec with_step(MoralesStep step) const {
    CurveSpec out = *this;
    out.morales_history_.push_back(step);
    return out;
  }

  CurveSpec with_history(std::vector<MoralesStep> history) const {
    CurveSpec out = *this;
    out.morales_history_ = std::move(history);
    return out;
  }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < exponents_.size(); ++i)
      s += (i ? "," : "") + std::to_string(exponents_[i]);
    return s;
  }

 private:
  void detect_arithmetic() {
    if (exponents_.size() != 4) return;
    long r = exponents_[1] - exponents_[0];
    if (exponents_[2] - exponents_[1] != r ||
        exponents_[3] - exponents_[2] != r)
      return;
    long a = exponents_[0];
    arithmetic_case_ = ArithmeticCase{a, r, a / 3, static_cast<int>(a % 3)};
  }

  std::vector<long> exponents_;
  std::optional<ArithmeticCase> arithmetic_case_;
  std::vector<MoralesStep> morales_history_;
};

struct ArithSubseq {
  std::vector<int> indices;
  long difference;
};

// Lexicographically first subsequence of the given length in arithmetic
// progression.  The first two picks force the rest, so scanning seeds in
// index order finds the lex-least solution.
inline std::optional<ArithSubseq> arith_subseq(const std::vector<long>& exps,
                                               int length) {
  int n = static_cast<int>(exps.size());
  if (length < 3)
    throw ValidationError("arithmetic subsequence length must be at least 3, got " +
                          std::to_string(length));
  if (length > n) return std::nullopt;
  for (int i1 = 0; i1 + length - 1 < n; ++i1) {
    for (int i2 = i1 + 1; i2 < n; ++i2) {
      long d = exps[i2] - exps[i1];
      std::vector<int> idx{i1, i2};
      long want = exps[i2] + d;
      int from = i2 + 1;
      while (static_cast<int>(idx.size()) < length) {
        auto it = std::lower_bound(exps.begin() + from, exps.end(), want);
        if (it == exps.end() || *it != want) break;
        int pos = static_cast<int>(it - exps.begin());
        idx.push_back(pos);
        from = pos + 1;
        want += d;
      }
      if (static_cast<int>(idx.size()) == length)
        return ArithSubseq{std::move(idx), d};
    }
  }
  return std::nullopt;
}

}  // namespace sympow
