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

// Batch driver: sweep a family of curves, analyze each, and append one CSV
// or JSON line per curve.  Workers share nothing; a single writer flushes
// rows in task order, so output is deterministic for any worker count and
// an interrupted scan can resume by re-reading the keys already on disk.

#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sympow/curve.hpp"
#include "sympow/report_io.hpp"

namespace sympow {

struct ScanConfig {
  enum class Family { arith4, hankel5, explicit_list, morales };
  enum class Format { csv, json };

  Family family = Family::arith4;
  long a_lo = 4, a_hi = 12;               // arith4 / hankel5 first exponent
  long r_lo = 1, r_hi = 1;                // common difference range
  std::vector<std::vector<long>> tuples;  // explicit_list
  std::vector<long> base;                 // morales: exponents to modify
  std::vector<long> c_values;             // morales: multipliers
  int index0 = 0;                         // morales: kept position, 0-based
  int n_max = 0;                          // 0 picks the family default
  std::string output;                     // empty writes to stdout
  Format format = Format::csv;
  int parallelism = 0;                    // 0 = SYMPOW_THREADS or hardware
};

namespace detail_scan {

struct Task {
  std::vector<long> exponents;  // row key, known before any validation
  std::optional<long> morales_c;
};

inline int default_n_max(ScanConfig::Family f) {
  switch (f) {
    case ScanConfig::Family::hankel5:
      return 2;
    default:
      return 3;
  }
}

inline std::vector<Task> build_tasks(const ScanConfig& cfg) {
  std::vector<Task> tasks;
  auto progression = [&](int len) {
    if (cfg.a_lo > cfg.a_hi || cfg.r_lo > cfg.r_hi)
      throw ValidationError("empty scan range");
    for (long a = cfg.a_lo; a <= cfg.a_hi; ++a)
      for (long r = cfg.r_lo; r <= cfg.r_hi; ++r) {
        std::vector<long> exps;
        for (int i = 0; i < len; ++i) exps.push_back(a + i * r);
        tasks.push_back({std::move(exps), std::nullopt});
      }
  };
  switch (cfg.family) {
    case ScanConfig::Family::arith4:
      progression(4);
      break;
    case ScanConfig::Family::hankel5:
      progression(5);
      break;
    case ScanConfig::Family::explicit_list:
      if (cfg.tuples.empty())
        throw ValidationError("explicit scan needs at least one tuple");
      for (const auto& t : cfg.tuples) tasks.push_back({t, std::nullopt});
      break;
    case ScanConfig::Family::morales: {
      if (cfg.base.empty() || cfg.c_values.empty())
        throw ValidationError("morales scan needs base exponents and c values");
      if (cfg.index0 < 0 || cfg.index0 >= static_cast<int>(cfg.base.size()))
        throw ValidationError("kept index out of range");
      for (long c : cfg.c_values) {
        // The target tuple is computable without validating anything, so a
        // bad c still gets a row (with an error column) under a stable key.
        std::vector<long> exps = cfg.base;
        for (size_t i = 0; i < exps.size(); ++i)
          if (static_cast<int>(i) != cfg.index0) exps[i] *= c;
        std::sort(exps.begin(), exps.end());
        tasks.push_back({std::move(exps), c});
      }
      break;
    }
  }
  std::stable_sort(tasks.begin(), tasks.end(),
                   [](const Task& x, const Task& y) {
                     return x.exponents < y.exponents;
                   });
  tasks.erase(std::unique(tasks.begin(), tasks.end(),
                          [](const Task& x, const Task& y) {
                            return x.exponents == y.exponents;
                          }),
              tasks.end());
  return tasks;
}

// Keys already present in a partially written output file.
inline std::set<std::string> existing_keys(const std::string& path,
                                           ScanConfig::Format format) {
  std::set<std::string> keys;
  std::ifstream in(path);
  if (!in) return keys;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (format == ScanConfig::Format::csv) {
      if (first && line.rfind("exponents,", 0) == 0) {
        first = false;
        continue;
      }
      first = false;
      keys.insert(line.substr(0, line.find(',')));
    } else {
      auto j = ordered_json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("exponents")) continue;
      keys.insert(exponents_key(j["exponents"].get<std::vector<long>>()));
    }
  }
  return keys;
}

inline unsigned long row_seed(const std::vector<long>& exps) {
  unsigned long s = 0x9E3779B9UL;
  for (long a : exps) s = s * 1000003UL + static_cast<unsigned long>(a);
  return s;
}

inline ScanRow compute_row(const Task& task, const ScanConfig& cfg,
                           int n_max) {
  ScanRow row;
  row.exponents = task.exponents;
  try {
    if (task.morales_c) {
      CurveSpec base = CurveSpec::validate(cfg.base);
      MoralesTransform T = morales_transform(base, cfg.index0, *task.morales_c);
      row.report = analyze_curve(T.target, n_max);
      TransferCheck tc =
          morales_transfer_check(T, 20, 2, row_seed(task.exponents));
      row.transfer_ok = tc.all_agree;
    } else {
      row.report = analyze_curve(CurveSpec::validate(task.exponents), n_max);
    }
  } catch (const Error& e) {
    row.report.reset();
    row.error = e.what();
  }
  return row;
}

inline int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SYMPOW_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace detail_scan

// Runs the sweep.  Returns the number of rows written this invocation.
inline long run_scan(const ScanConfig& cfg) {
  int n_max = cfg.n_max > 0 ? cfg.n_max : detail_scan::default_n_max(cfg.family);
  if (n_max < 2) throw ValidationError("n_max must be at least 2");
  std::vector<detail_scan::Task> tasks = detail_scan::build_tasks(cfg);

  std::set<std::string> done;
  bool fresh = true;
  if (!cfg.output.empty()) {
    done = detail_scan::existing_keys(cfg.output, cfg.format);
    std::ifstream probe(cfg.output);
    fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
  }
  std::vector<detail_scan::Task> todo;
  for (auto& t : tasks)
    if (!done.count(exponents_key(t.exponents))) todo.push_back(std::move(t));

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::app);
    if (!file) throw Error("cannot open output file: " + cfg.output);
    out = &file;
  }
  if (fresh && cfg.format == ScanConfig::Format::csv)
    *out << csv_header(n_max) << "\n" << std::flush;

  std::vector<std::optional<std::string>> lines(todo.size());
  std::mutex m;
  std::condition_variable cv;
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      ScanRow row = detail_scan::compute_row(todo[i], cfg, n_max);
      std::string line = cfg.format == ScanConfig::Format::csv
                             ? csv_row(row, n_max)
                             : jsonl_row(row);
      std::lock_guard<std::mutex> lock(m);
      lines[i] = std::move(line);
      cv.notify_all();
    }
  };
  int workers = std::min<int>(detail_scan::worker_count(cfg.parallelism),
                              std::max<size_t>(todo.size(), 1));
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (size_t i = 0; i < todo.size(); ++i) {
    std::unique_lock<std::mutex> lock(m);
    cv.wait(lock, [&] { return lines[i].has_value(); });
    *out << *lines[i] << "\n" << std::flush;
  }
  for (auto& t : pool) t.join();
  return static_cast<long>(todo.size());
}

}  // namespace sympow
