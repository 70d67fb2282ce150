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

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympow/ring.hpp"

namespace sympow {

struct Term {
  Rat coef;
  Monomial mono;
};

// Sparse polynomial over Q with terms kept strictly descending under
// grevlex in the ring's declared variable order.  That canonical layout is
// independent of whatever order a Groebner computation happens to use, so
// structural equality of polynomials is just term-by-term equality.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw ValidationError("polynomial needs a ring");
  }

  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {
    if (!ring_) throw ValidationError("polynomial needs a ring");
    canonicalize();
  }

  static Polynomial constant(RingPtr ring, Rat c) {
    int n = ring->nvars();
    std::vector<Term> t;
    if (c != 0) t.push_back({std::move(c), Monomial::one(n)});
    return Polynomial(std::move(ring), std::move(t));
  }

  static Polynomial variable(RingPtr ring, int i, int power = 1) {
    int n = ring->nvars();
    std::vector<Term> t{{Rat(1), Monomial::variable(n, i, power)}};
    return Polynomial(std::move(ring), std::move(t));
  }

  static Polynomial single(RingPtr ring, Rat c, Monomial m) {
    std::vector<Term> t;
    if (c != 0) t.push_back({std::move(c), std::move(m)});
    return Polynomial(std::move(ring), std::move(t));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of 0");
    return terms_.front();
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  Polynomial operator+(const Polynomial& other) const {
    require_same_ring(ring_, other.ring_);
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto ord = MonomialOrder::grevlex();
    size_t i = 0;
    size_t j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
      int c = ord.compare(terms_[i].mono, other.terms_[j].mono);
      if (c > 0) {
        out.push_back(terms_[i++]);
      } else if (c < 0) {
        out.push_back(other.terms_[j++]);
      } else {
        Rat s = terms_[i].coef + other.terms_[j].coef;
        if (s != 0) out.push_back({std::move(s), terms_[i].mono});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
  }

  Polynomial operator-(const Polynomial& other) const {
    return *this + (-other);
  }

  // this * (c * m); multiplying every monomial by m preserves the term order
  Polynomial times_term(const Rat& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coef * c, t.mono * m});
    return r;
  }

  Polynomial operator*(const Polynomial& other) const {
    require_same_ring(ring_, other.ring_);
    auto ord = MonomialOrder::grevlex();
    auto cmp = [ord](const Monomial& a, const Monomial& b) {
      return ord.greater(a, b);
    };
    std::map<Monomial, Rat, decltype(cmp)> acc(cmp);
    for (const auto& s : terms_)
      for (const auto& t : other.terms_) {
        Monomial m = s.mono * t.mono;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), s.coef * t.coef);
        else
          it->second += s.coef * t.coef;
      }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.push_back({std::move(c), m});
    return r;
  }

  Polynomial operator*(const Rat& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coef * c, t.mono});
    return r;
  }

  bool operator==(const Polynomial& other) const {
    if (!(ring_.get() == other.ring_.get() || ring_->same_as(*other.ring_)))
      return false;
    if (terms_.size() != other.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].coef != other.terms_[i].coef ||
          terms_[i].mono != other.terms_[i].mono)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  // Integer-primitive representative with positive leading coefficient:
  // clear denominators, divide by the content, normalize the sign.
  Polynomial primitive() const {
    if (terms_.empty()) return *this;
    Int den_lcm(1);
    for (const auto& t : terms_)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              t.coef.get_den().get_mpz_t());
    std::vector<Int> ints;
    ints.reserve(terms_.size());
    Int content(0);
    for (const auto& t : terms_) {
      Int c = t.coef.get_num() * (den_lcm / t.coef.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      ints.push_back(std::move(c));
    }
    if (ints.front() < 0) content = -content;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (size_t i = 0; i < terms_.size(); ++i)
      r.terms_.push_back({Rat(ints[i] / content), terms_[i].mono});
    return r;
  }

  long total_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  // order of vanishing at the origin: least total degree of a term
  long ord() const {
    if (terms_.empty()) throw ZeroPolynomialError("ord of the zero polynomial");
    long d = terms_.front().mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
  }

  // weighted degree under the ring's grading; nullopt when inhomogeneous
  std::optional<long> weighted_degree() const {
    if (terms_.empty())
      throw ZeroPolynomialError("weighted degree of the zero polynomial");
    long d = terms_.front().mono.weighted_degree(*ring_);
    for (const auto& t : terms_)
      if (t.mono.weighted_degree(*ring_) != d) return std::nullopt;
    return d;
  }

  // substitution x_i -> x_i^c, a ring endomorphism on monomials
  Polynomial substitute_power(int var, long c) const {
    if (var < 0 || var >= ring_->nvars())
      throw ValidationError("substitute_power: variable index out of range");
    if (c < 1) throw ValidationError("substitute_power: exponent must be >= 1");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      m.set(var, static_cast<int>(t.mono[var] * c));
      out.push_back({t.coef, std::move(m)});
    }
    return Polynomial(ring_, std::move(out));
  }

  // Transport into another ring along old-index -> new-index.  A negative
  // entry drops the variable and requires its exponent to vanish.
  Polynomial map_variables(const RingPtr& target,
                           const std::vector<int>& where) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    int m = target->nvars();
    for (const auto& t : terms_) {
      Monomial mono(m);
      for (int i = 0; i < ring_->nvars(); ++i) {
        int e = t.mono[i];
        if (e == 0) continue;
        if (where[i] < 0)
          throw Error("map_variables: nonzero exponent on dropped variable");
        mono.set(where[i], e);
      }
      out.push_back({t.coef, std::move(mono)});
    }
    return Polynomial(target, std::move(out));
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      Rat c = t.coef;
      bool neg = c < 0;
      if (first) {
        if (neg) s += "-";
      } else {
        s += neg ? "-" : "+";
      }
      first = false;
      Rat a = neg ? Rat(-c) : c;
      std::string mono = monomial_str(t.mono);
      if (mono.empty()) {
        s += a.get_str();
      } else {
        if (a != 1) s += a.get_str() + "*";
        s += mono;
      }
    }
    return s;
  }

  static Polynomial parse(const RingPtr& ring, const std::string& text);

 private:
  std::string monomial_str(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->name(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  // sort descending, merge duplicates, drop zeros
  void canonicalize() {
    auto ord = MonomialOrder::grevlex();
    std::stable_sort(terms_.begin(), terms_.end(),
                     [&](const Term& a, const Term& b) {
                       return ord.greater(a.mono, b.mono);
                     });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coef += t.coef;
      else
        out.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : out)
      if (t.coef != 0) terms_.push_back(std::move(t));
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) {
  return p * c;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, const std::string& text)
      : ring_(ring), text_(text) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    if (done()) throw PolynomialParseError("empty polynomial text");
    int sign = read_sign();
    terms.push_back(read_term(sign));
    skip_ws();
    while (!done()) {
      char c = text_[pos_];
      if (c != '+' && c != '-')
        throw PolynomialParseError(std::string("unexpected character '") + c +
                                   "' in polynomial");
      ++pos_;
      int s = (c == '-') ? -1 : 1;
      terms.push_back(read_term(s));
      skip_ws();
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  int read_sign() {
    skip_ws();
    if (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      int s = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      return s;
    }
    return 1;
  }

  Term read_term(int sign) {
    Rat coef(sign);
    Monomial mono = Monomial::one(ring_->nvars());
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (done()) break;
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= read_number();
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        read_variable(mono);
        saw_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (!done() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!saw_factor)
      throw PolynomialParseError("expected a term in polynomial text");
    return {std::move(coef), std::move(mono)};
  }

  Rat read_number() {
    Int num = read_integer();
    skip_ws();
    if (!done() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      if (done() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw PolynomialParseError("expected denominator after '/'");
      Int den = read_integer();
      if (den == 0) throw PolynomialParseError("zero denominator");
      return make_rat(num, den);
    }
    return Rat(num);
  }

  Int read_integer() {
    std::string digits;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    return Int(digits);
  }

  void read_variable(Monomial& mono) {
    std::string name;
    while (!done() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                       text_[pos_] == '_'))
      name += text_[pos_++];
    int v = ring_->var_index(name);
    if (v < 0)
      throw PolynomialParseError("unknown variable '" + name + "'");
    long e = 1;
    skip_ws();
    if (!done() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      if (done() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw PolynomialParseError("expected exponent after '^'");
      e = to_long(read_integer(), "exponent");
    }
    mono.set(v, static_cast<int>(mono[v] + e));
  }

  const RingPtr& ring_;
  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(const RingPtr& ring,
                                    const std::string& text) {
  return detail::PolyParser(ring, text).run();
}

inline std::string monomial_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

// All monomials of a given weighted degree under the ring's grading.
inline std::vector<Monomial> monomials_of_weighted_degree(const Ring& ring,
                                                          long wdeg) {
  std::vector<Monomial> out;
  int n = ring.nvars();
  std::vector<int> exps(n, 0);
  auto rec = [&](auto&& self, int var, long remaining) -> void {
    if (var == n - 1) {
      if (remaining % ring.weight(var) == 0) {
        exps[var] = static_cast<int>(remaining / ring.weight(var));
        out.emplace_back(exps);
        exps[var] = 0;
      }
      return;
    }
    for (long e = 0; e * ring.weight(var) <= remaining; ++e) {
      exps[var] = static_cast<int>(e);
      self(self, var + 1, remaining - e * ring.weight(var));
    }
    exps[var] = 0;
  };
  if (wdeg >= 0) rec(rec, 0, wdeg);
  return out;
}

}  // namespace sympow
