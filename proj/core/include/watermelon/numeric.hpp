// Copyright 2026 The Watermelon Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scalar types shared by every module: exact integers and rationals backed
// by GMP, and a high-precision real backed by MPFR.

#ifndef WATERMELON_NUMERIC_HPP_
#define WATERMELON_NUMERIC_HPP_

#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace watermelon {

using ExactInt = boost::multiprecision::mpz_int;
// Always canonical: lowest terms, positive denominator.
using ExactRational = boost::multiprecision::mpq_rational;
// Each value carries its own MPFR precision; new values take the process
// default installed by PrecisionScope.
using HPReal = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMinPrecisionBits = 53;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative numerics that ran out of budget. `partial` holds the best value
// reached before giving up.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double partial)
      : std::runtime_error(what), partial_(partial) {}
  double partial() const noexcept { return partial_; }

 private:
  double partial_;
};

// An identity that must hold exactly did not (an implementation bug).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sets the MPFR working precision for the lifetime of the object and
// restores the previous value afterwards. The setting is process wide, so
// install it before spawning workers that create HPReal values.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned bits() const noexcept { return bits_; }

 private:
  unsigned bits_;
  unsigned saved_digits10_;
};

unsigned current_precision_bits();
unsigned bits_to_digits10(unsigned bits);

// 2^-bits at the current precision.
HPReal working_epsilon();

HPReal to_hp(const ExactInt& x);
HPReal to_hp(const ExactRational& x);
HPReal to_hp(long x);
HPReal hp_pi();

// Parses a decimal string such as "1e-12"; throws ConfigurationError.
HPReal parse_hp(const std::string& text);

// Fixed-point rendering with round-half-even at `digits` places.
std::string to_decimal(const ExactRational& x, int digits);
std::string to_decimal(const HPReal& x, int digits);

std::string to_string(const ExactRational& x);

// Value plus a nonnegative error bound. `rigorous` says whether the bound is
// proven or only estimated (e.g. from an adaptive quadrature).
struct QuadResult {
  HPReal value;
  HPReal error_bound;
  bool rigorous = false;
};

}  // namespace watermelon

#endif  // WATERMELON_NUMERIC_HPP_
