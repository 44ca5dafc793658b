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

#include "watermelon/numeric.hpp"

#include <cmath>
#include <sstream>

namespace watermelon {

namespace bmp = boost::multiprecision;

unsigned bits_to_digits10(unsigned bits) {
  // Enough decimal digits that MPFR allocates at least `bits` bits.
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits)
    : bits_(bits), saved_digits10_(HPReal::default_precision()) {
  if (bits < kMinPrecisionBits) {
    throw ConfigurationError("precision must be at least 53 bits");
  }
  HPReal::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { HPReal::default_precision(saved_digits10_); }

unsigned current_precision_bits() {
  HPReal probe;
  return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

HPReal working_epsilon() {
  HPReal e = 1;
  mpfr_mul_2si(e.backend().data(), e.backend().data(),
               -static_cast<long>(current_precision_bits()), MPFR_RNDN);
  return e;
}

HPReal to_hp(const ExactInt& x) {
  HPReal r;
  mpfr_set_z(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

HPReal to_hp(const ExactRational& x) {
  HPReal r;
  mpfr_set_q(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

HPReal to_hp(long x) { return HPReal(x); }

HPReal hp_pi() {
  HPReal r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

HPReal parse_hp(const std::string& text) {
  HPReal r;
  if (text.empty() ||
      mpfr_set_str(r.backend().data(), text.c_str(), 10, MPFR_RNDN) != 0) {
    throw ConfigurationError("not a decimal number: '" + text + "'");
  }
  return r;
}

std::string to_decimal(const ExactRational& x, int digits) {
  if (digits < 0) digits = 0;
  ExactInt num = bmp::numerator(x);
  const ExactInt den = bmp::denominator(x);
  const bool negative = num < 0;
  if (negative) num = -num;

  ExactInt scale = bmp::pow(ExactInt(10), static_cast<unsigned>(digits));
  ExactInt scaled = num * scale;
  ExactInt q = scaled / den;
  ExactInt rem = scaled - q * den;
  const ExactInt twice = 2 * rem;
  const int cmp = twice.compare(den);
  if (cmp > 0 || (cmp == 0 && bmp::bit_test(q, 0))) ++q;

  std::string body = q.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && q != 0) body.insert(0, "-");
  return body;
}

std::string to_decimal(const HPReal& x, int digits) {
  // MPFR values are dyadic, so the exact rational conversion is lossless and
  // the rounding rule matches the exact path.
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x.backend().data());
  ExactRational r(q);
  mpq_clear(q);
  return to_decimal(r, digits);
}

std::string to_string(const ExactRational& x) {
  std::ostringstream os;
  os << bmp::numerator(x);
  if (bmp::denominator(x) != 1) os << '/' << bmp::denominator(x);
  return os.str();
}

}  // namespace watermelon
