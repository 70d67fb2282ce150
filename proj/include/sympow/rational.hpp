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

#include <gmpxx.h>

#include <numeric>
#include <string>
#include <vector>

#include "sympow/errors.hpp"

namespace sympow {

// All coefficient arithmetic is exact.  Int/Rat wrap GMP integers and
// canonical fractions; no floating point appears anywhere in the engine.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

inline long gcd_all(const std::vector<long>& values) {
  long g = 0;
  for (long v : values) g = std::gcd(g, v);
  return g;
}

// Decimal rendering of an exact rational: exact digits when the reduced
// denominator is of the form 2^a 5^b, otherwise rounded to four places.
inline std::string decimal_string(const Rat& q) {
  Int den = q.get_den();
  Int num = q.get_num();
  if (den == 1) return num.get_str();
  Int d = den;
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    d /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    d /= 5;
    ++fives;
  }
  bool exact = (d == 1);
  int places = exact ? std::max(twos, fives) : 4;
  bool neg = num < 0;
  Int absnum = abs(num);
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Int scaled = absnum * scale;
  Int whole = scaled / den;
  if (!exact) {
    // round half up on the last digit
    Int rem = scaled % den;
    if (rem * 2 >= den) whole += 1;
  }
  std::string digits = whole.get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  if (neg) digits.insert(0, "-");
  return digits;
}

inline long to_long(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw Error(std::string(what) + ": value out of range");
  return v.get_si();
}

}  // namespace sympow
