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

#include <stdexcept>
#include <string>

namespace sympow {

// Root of the exception hierarchy.  Everything thrown on purpose derives
// from Error; anything else escaping is a genuine bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: rejected before any computation starts.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

class GcdNotOneError : public ValidationError {
 public:
  explicit GcdNotOneError(const std::string& msg) : ValidationError(msg) {}
};

class RedundantGeneratorError : public ValidationError {
 public:
  RedundantGeneratorError(int index, long value, const std::string& msg)
      : ValidationError(msg), index(index), value(value) {}
  int index;
  long value;
};

class PolynomialParseError : public ValidationError {
 public:
  explicit PolynomialParseError(const std::string& msg)
      : ValidationError(msg) {}
};

// Two operands live in different polynomial rings.
class RingMismatchError : public Error {
 public:
  explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

class ZeroPolynomialError : public Error {
 public:
  explicit ZeroPolynomialError(const std::string& msg) : Error(msg) {}
};

// A construction was asked for outside its domain of applicability
// (wrong residue class, no arithmetic subsequence, ...).  The command
// line maps these to a distinct exit code.
class InapplicableError : public Error {
 public:
  explicit InapplicableError(const std::string& msg) : Error(msg) {}
};

class WrongResidueError : public InapplicableError {
 public:
  explicit WrongResidueError(const std::string& msg)
      : InapplicableError(msg) {}
};

class NotArithmeticError : public InapplicableError {
 public:
  explicit NotArithmeticError(const std::string& msg)
      : InapplicableError(msg) {}
};

class InvalidCaseError : public InapplicableError {
 public:
  explicit InvalidCaseError(const std::string& msg) : InapplicableError(msg) {}
};

// Witness data and curve do not belong together.
class WitnessMismatchError : public Error {
 public:
  explicit WitnessMismatchError(const std::string& msg) : Error(msg) {}
};

class NotCompleteIntersectionError : public Error {
 public:
  explicit NotCompleteIntersectionError(const std::string& msg) : Error(msg) {}
};

class NotZeroDimensionalError : public Error {
 public:
  explicit NotZeroDimensionalError(const std::string& msg) : Error(msg) {}
};

class InhomogeneousIdealError : public Error {
 public:
  explicit InhomogeneousIdealError(const std::string& msg) : Error(msg) {}
};

// Base change x_j -> x_j^c with gcd(c, a_j) != 1.
class GcdViolationError : public ValidationError {
 public:
  explicit GcdViolationError(const std::string& msg) : ValidationError(msg) {}
};

class RedundancyAfterTransformError : public ValidationError {
 public:
  explicit RedundancyAfterTransformError(const std::string& msg)
      : ValidationError(msg) {}
};

// An internal cross-check failed.  This must never happen on valid input;
// when it does, the computation cannot be trusted and the process stops.
class SoundnessAlarmError : public Error {
 public:
  explicit SoundnessAlarmError(const std::string& msg) : Error(msg) {}
};

}  // namespace sympow
