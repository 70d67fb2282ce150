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
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sympow/polynomial.hpp"

namespace sympow {

using BasisPtr = std::shared_ptr<const std::vector<Polynomial>>;

// An ideal is its generator list plus a per-order cache of computed reduced
// bases.  The cache is write-once per order key and safe to fill from
// several threads: the first caller computes, everyone else blocks on the
// shared future and reuses the result.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_) require_same_ring(ring_, g.ring());
  }

  Ideal(const Ideal& other) : ring_(other.ring_), gens_(other.gens_) {
    std::lock_guard<std::mutex> lock(other.mu_);
    for (const auto& [key, fut] : other.cache_) {
      if (fut.wait_for(std::chrono::seconds(0)) == std::future_status::ready) {
        try {
          cache_.emplace(key, ready_future(fut.get()));
        } catch (...) {
          // a failed computation is not worth copying
        }
      }
    }
  }

  Ideal& operator=(const Ideal& other) {
    if (this != &other) {
      Ideal tmp(other);
      std::swap(ring_, tmp.ring_);
      std::swap(gens_, tmp.gens_);
      std::swap(cache_, tmp.cache_);
    }
    return *this;
  }

  Ideal(Ideal&& other) noexcept
      : ring_(std::move(other.ring_)), gens_(std::move(other.gens_)) {
    std::lock_guard<std::mutex> lock(other.mu_);
    cache_ = std::move(other.cache_);
  }

  Ideal& operator=(Ideal&& other) {
    if (this != &other) {
      std::scoped_lock lock(mu_, other.mu_);
      ring_ = std::move(other.ring_);
      gens_ = std::move(other.gens_);
      cache_ = std::move(other.cache_);
    }
    return *this;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  BasisPtr cached_basis(const std::string& key) const {
    std::shared_future<BasisPtr> fut;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it == cache_.end()) return nullptr;
      fut = it->second;
    }
    return fut.get();
  }

  BasisPtr get_or_compute(const std::string& key,
                          const std::function<BasisPtr()>& compute) const {
    std::shared_future<BasisPtr> fut;
    std::shared_ptr<std::promise<BasisPtr>> mine;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) {
        fut = it->second;
      } else {
        mine = std::make_shared<std::promise<BasisPtr>>();
        fut = mine->get_future().share();
        cache_.emplace(key, fut);
      }
    }
    if (mine) {
      try {
        mine->set_value(compute());
      } catch (...) {
        mine->set_exception(std::current_exception());
        {
          std::lock_guard<std::mutex> lock(mu_);
          cache_.erase(key);
        }
        throw;
      }
    }
    return fut.get();
  }

  void seed_basis(const std::string& key, BasisPtr basis) const {
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, ready_future(std::move(basis)));
  }

 private:
  static std::shared_future<BasisPtr> ready_future(BasisPtr value) {
    std::promise<BasisPtr> p;
    p.set_value(std::move(value));
    return p.get_future().share();
  }

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_future<BasisPtr>> cache_;
};

}  // namespace sympow
