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
#include <memory>
#include <string>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/rational.hpp"

namespace sympow {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A polynomial ring over Q is described by its variable names and a positive
// weight per variable (the weights grade the ring; for a monomial curve they
// are the exponents of the parametrization).
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<long> weights)
      : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.empty() || names_.size() != weights_.size())
      throw ValidationError("ring needs matching variable names and weights");
    for (const auto& n : names_)
      if (n.empty()) throw ValidationError("empty variable name");
    for (size_t i = 0; i < names_.size(); ++i)
      for (size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw ValidationError("duplicate variable name " + names_[i]);
    for (long w : weights_)
      if (w <= 0) throw ValidationError("variable weights must be positive");
  }

  static RingPtr make(std::vector<std::string> names,
                      std::vector<long> weights) {
    return std::make_shared<const Ring>(std::move(names), std::move(weights));
  }

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  long weight(int i) const { return weights_[i]; }
  const std::vector<long>& weights() const { return weights_; }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool same_as(const Ring& other) const {
    return names_ == other.names_ && weights_ == other.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<long> weights_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (a && b && a->same_as(*b)) return;
  throw RingMismatchError("operands live in different rings");
}

// Exponent vector.  Comparisons other than equality go through MonomialOrder.
class Monomial {
 public:
  explicit Monomial(int nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exp_(std::move(exps)) {}

  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial variable(int nvars, int i, int power = 1) {
    Monomial m(nvars);
    m.exp_[i] = power;
    return m;
  }

  int nvars() const { return static_cast<int>(exp_.size()); }
  int operator[](int i) const { return exp_[i]; }
  void set(int i, int e) { exp_[i] = e; }
  const std::vector<int>& exponents() const { return exp_; }

  long degree() const {
    long d = 0;
    for (int e : exp_) d += e;
    return d;
  }

  long weighted_degree(const Ring& ring) const {
    long d = 0;
    for (int i = 0; i < nvars(); ++i) d += ring.weight(i) * exp_[i];
    return d;
  }

  bool is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < nvars(); ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  bool coprime_to(const Monomial& other) const {
    for (int i = 0; i < nvars(); ++i)
      if (exp_[i] > 0 && other.exp_[i] > 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.exp_[i] += other.exp_[i];
    return r;
  }

  // quotient this / other; caller guarantees divisibility
  Monomial divide_exact(const Monomial& other) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.exp_[i] -= other.exp_[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (int i = 0; i < a.nvars(); ++i) r.exp_[i] = std::max(a[i], b[i]);
    return r;
  }

  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }
  bool operator!=(const Monomial& other) const { return exp_ != other.exp_; }

 private:
  std::vector<int> exp_;
};

// Term orders.  grevlex: higher total degree wins; on a tie, scanning
// exponents from the last variable backwards, the first difference decides
// and the *smaller* exponent there belongs to the larger monomial.
// lex: first differing exponent decides, larger wins.
// block: monomials are compared grevlex on the flagged block first, then
// grevlex on the rest (an elimination order for the flagged variables).
// weighted: weighted degree first, grevlex tie-break.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block, weighted };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder block(std::vector<char> eliminate_mask) {
    MonomialOrder o(Kind::block);
    o.mask_ = std::move(eliminate_mask);
    return o;
  }
  static MonomialOrder eliminating(int nvars, const std::vector<int>& vars) {
    std::vector<char> mask(nvars, 0);
    for (int v : vars) {
      if (v < 0 || v >= nvars)
        throw ValidationError("elimination variable index out of range");
      mask[v] = 1;
    }
    return block(std::move(mask));
  }
  static MonomialOrder weighted(std::vector<long> weights) {
    MonomialOrder o(Kind::weighted);
    o.weights_ = std::move(weights);
    return o;
  }

  Kind kind() const { return kind_; }

  // +1 if u > v, -1 if u < v, 0 if equal
  int compare(const Monomial& u, const Monomial& v) const {
    switch (kind_) {
      case Kind::grevlex:
        return grevlex_cmp(u, v, nullptr, 1);
      case Kind::lex: {
        for (int i = 0; i < u.nvars(); ++i) {
          if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
        }
        return 0;
      }
      case Kind::block: {
        int c = grevlex_cmp(u, v, &mask_, 1);
        if (c != 0) return c;
        return grevlex_cmp(u, v, &mask_, 0);
      }
      case Kind::weighted: {
        long wu = 0;
        long wv = 0;
        for (int i = 0; i < u.nvars(); ++i) {
          wu += weights_[i] * u[i];
          wv += weights_[i] * v[i];
        }
        if (wu != wv) return wu > wv ? 1 : -1;
        return grevlex_cmp(u, v, nullptr, 1);
      }
    }
    return 0;
  }

  bool greater(const Monomial& u, const Monomial& v) const {
    return compare(u, v) > 0;
  }
  bool less(const Monomial& u, const Monomial& v) const {
    return compare(u, v) < 0;
  }

  // stable identifier used as a basis-cache key
  std::string key() const {
    switch (kind_) {
      case Kind::grevlex:
        return "grevlex";
      case Kind::lex:
        return "lex";
      case Kind::block: {
        std::string s = "block:";
        for (char c : mask_) s += c ? '1' : '0';
        return s;
      }
      case Kind::weighted: {
        std::string s = "weighted:";
        for (long w : weights_) s += std::to_string(w) + ",";
        return s;
      }
    }
    return "?";
  }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  // grevlex restricted to the variables where mask==want (all if mask null)
  static int grevlex_cmp(const Monomial& u, const Monomial& v,
                         const std::vector<char>* mask, char want) {
    long du = 0;
    long dv = 0;
    int n = u.nvars();
    for (int i = 0; i < n; ++i) {
      if (mask && (*mask)[i] != want) continue;
      du += u[i];
      dv += v[i];
    }
    if (du != dv) return du > dv ? 1 : -1;
    for (int i = n - 1; i >= 0; --i) {
      if (mask && (*mask)[i] != want) continue;
      if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::vector<char> mask_;
  std::vector<long> weights_;
};

}  // namespace sympow
