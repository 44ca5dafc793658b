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

#include "watermelon/special.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "watermelon/exact.hpp"

namespace watermelon::special {

namespace bmp = boost::multiprecision;

namespace {

std::mutex bernoulli_mutex;
std::vector<ExactRational> bernoulli_table{ExactRational(1)};

// Sum over k < n plus the Euler-Maclaurin remainder at N = n.
HPReal euler_maclaurin_zeta(const HPReal& s, const HPReal& tol) {
  const unsigned bits = current_precision_bits();
  const int n = std::max(16, static_cast<int>(bits / 2));
  HPReal sum = 0;
  for (int k = 1; k < n; ++k) sum += bmp::pow(HPReal(k), -s);
  const HPReal N = n;
  const HPReal n_pow = bmp::pow(N, -s);
  sum += N * n_pow / (s - 1) + n_pow / 2;

  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
  HPReal rising = s;
  HPReal power = n_pow / N;
  HPReal factorial = 2;
  for (int j = 1; j <= 400; ++j) {
    const HPReal term = to_hp(bernoulli(2 * j)) / factorial * rising * power;
    sum += term;
    if (bmp::abs(term) < tol) return sum;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    power /= N * N;
    factorial *= (2 * j + 1) * (2 * j + 2);
  }
  throw NumericError("Euler-Maclaurin series for zeta did not reach tolerance",
                     sum.convert_to<double>());
}

struct PrintedGroup {
  int n_power;
  long num[4];
  long den[4];
};

// Exponent groups with their x^2, x^4, x^6, x^8 coefficients, signs folded in.
const PrintedGroup kPrintedGroups[kQuotientFullOrder] = {
    {1, {-1, -1, -1, -1}, {1, 6, 15, 28}},
    {0, {1, 1, 1, 1}, {2, 4, 6, 8}},
    {-1, {-1, -1, -1, -1}, {6, 6, 6, 6}},
    {-3, {1, 1, 7, 1}, {30, 12, 45, 4}},
    {-5, {-1, -1, -1, -11}, {42, 9, 3, 14}},
    {-7, {1, 1, 11, 143}, {30, 4, 10, 40}},
    {-9, {-5, -5, -91, -65}, {66, 6, 18, 3}},
};

HPReal printed_group(int g, const HPReal& x, const HPReal& n) {
  const auto& grp = kPrintedGroups[g];
  const HPReal x2 = x * x;
  HPReal power = x2;
  HPReal series = 0;
  for (int i = 0; i < 4; ++i) {
    series += power * grp.num[i] / grp.den[i];
    power *= x2;
  }
  return series * bmp::pow(n, grp.n_power);
}

HPReal closed_group(int g, const HPReal& x, const HPReal& n) {
  const HPReal lo = 1 - x;
  const HPReal hi = 1 + x;
  if (g == 0) return -n * (lo * bmp::log(lo) + hi * bmp::log(hi));
  if (g == 1) return -bmp::log(lo * hi) / 2;
  const int i = g - 1;
  const int e = 1 - 2 * i;
  const HPReal c = to_hp(bernoulli(2 * i)) / (2 * i * (2 * i - 1));
  return c * bmp::pow(n, e) * (2 - bmp::pow(lo, e) - bmp::pow(hi, e));
}

}  // namespace

ExactRational bernoulli(int k) {
  if (k < 0) throw DomainError("bernoulli index must be >= 0");
  std::lock_guard lock(bernoulli_mutex);
  while (static_cast<int>(bernoulli_table.size()) <= k) {
    const int m = static_cast<int>(bernoulli_table.size());
    if (m > 1 && m % 2 == 1) {
      bernoulli_table.emplace_back(0);
      continue;
    }
    ExactRational acc = 0;
    const exact::BinomialRow row(m + 1);
    for (int j = 0; j < m; ++j) acc += ExactRational(row(j)) * bernoulli_table[static_cast<std::size_t>(j)];
    bernoulli_table.push_back(-acc / (m + 1));
  }
  return bernoulli_table[static_cast<std::size_t>(k)];
}

HPReal euler_gamma() {
  static const char* const kGamma =
      "0.577215664901532860606512090082402431042159335939923598805767";
  return parse_hp(kGamma);
}

HPReal euler_gamma_from_limit(int n) {
  if (n < 10) throw DomainError("limit evaluation needs n >= 10");
  HPReal harmonic = 0;
  for (int k = 1; k <= n; ++k) harmonic += HPReal(1) / k;
  const HPReal N = n;
  HPReal value = harmonic - bmp::log(N) - 1 / (2 * N);
  HPReal power = N * N;
  for (int k = 1; k <= 6; ++k) {
    value += to_hp(bernoulli(2 * k)) / (2 * k * power);
    power *= N * N;
  }
  return value;
}

HPReal euler_gamma_check() { return bmp::abs(euler_gamma() - euler_gamma_from_limit(1000)); }

HPReal digamma_halfint(int two_z) {
  if (two_z < 1) throw DomainError("digamma_halfint needs two_z >= 1");
  ExactRational partial = 0;
  HPReal value = -euler_gamma();
  if (two_z % 2 == 0) {
    for (int j = 1; j < two_z / 2; ++j) partial += ExactRational(1, j);
  } else {
    value -= 2 * bmp::log(HPReal(2));
    for (int j = 0; j < two_z / 2; ++j) partial += ExactRational(2, 2 * j + 1);
  }
  return value + to_hp(partial);
}

ExactRational zeta_neg_int(int m) {
  if (m < 0) throw DomainError("zeta_neg_int needs m >= 0");
  const ExactRational b = bernoulli(m + 1) / (m + 1);
  return m % 2 == 0 ? ExactRational(b) : ExactRational(-b);
}

HPReal zeta_real(const HPReal& s, const HPReal& tol) {
  if (s <= 1) throw DomainError("zeta_real needs s > 1");
  return euler_maclaurin_zeta(s, tol);
}

HPReal zeta_continued(const HPReal& s, const HPReal& tol) {
  if (s == 1) throw DomainError("zeta has a pole at s = 1");
  if (s <= 0 && s == bmp::floor(s)) {
    return to_hp(zeta_neg_int(static_cast<int>(-s.convert_to<long>())));
  }
  return euler_maclaurin_zeta(s, tol);
}

HPReal gamma_real(const HPReal& x) {
  if (x <= 0 && x == bmp::floor(x)) throw DomainError("gamma has a pole at nonpositive integers");
  return bmp::tgamma(x);
}

HPReal reciprocal_gamma(const HPReal& x) {
  if (x <= 0 && x == bmp::floor(x)) return HPReal(0);
  return 1 / bmp::tgamma(x);
}

ExactRational gamma_half_integer_ratio(int m) {
  if (m < 0) throw DomainError("gamma_half_integer needs m >= 0");
  // (2m)!/(4^m m!) = prod_{j=1}^m (2j-1)/2
  ExactRational r = 1;
  for (int j = 1; j <= m; ++j) r *= ExactRational(2 * j - 1, 2);
  return r;
}

HPReal gamma_half_integer(int m) { return to_hp(gamma_half_integer_ratio(m)) * bmp::sqrt(hp_pi()); }

HPReal log_gamma_asym(const HPReal& z, int terms) {
  if (z < 10) throw DomainError("Stirling series used only for z >= 10");
  if (terms < 0) throw DomainError("terms must be >= 0");
  HPReal value = (z - HPReal(1) / 2) * bmp::log(z) - z + bmp::log(2 * hp_pi()) / 2;
  HPReal power = z;
  for (int j = 1; j <= terms; ++j) {
    value += to_hp(bernoulli(2 * j)) / (2 * j * (2 * j - 1) * power);
    power *= z * z;
  }
  return value;
}

ThetaSeriesParams default_theta_params() {
  ThetaSeriesParams p;
  p.tol = bmp::ldexp(HPReal(1), -static_cast<int>(current_precision_bits()) - 16);
  return p;
}

HPReal theta_bar(const HPReal& u, const ThetaSeriesParams& params) {
  return theta_bar_deriv(0, u, params);
}

HPReal theta_bar_deriv(int a, const HPReal& u, const ThetaSeriesParams& params) {
  if (a < 0) throw DomainError("derivative order must be >= 0");
  if (u <= 0) throw DomainError("theta needs u > 0");
  if (params.tol <= 0 || params.n_max < 4) throw ConfigurationError("bad ThetaSeriesParams");
  const HPReal pi = hp_pi();
  // exp(-pi n^2 u) by q^(n^2) = q^((n-1)^2) * q^(2n-1)
  const HPReal q = bmp::exp(-pi * u);
  const HPReal q2 = q * q;
  HPReal step = q;
  HPReal gauss = 1;
  const HPReal peak = a / (pi * u);
  HPReal sum = 0;
  for (int n = 1; n <= params.n_max; ++n) {
    gauss *= step;
    step *= q2;
    const HPReal n2 = HPReal(n) * n;
    HPReal term = gauss * bmp::pow(-pi * n2, a);
    sum += term;
    if (n >= 3 && n2 > peak && bmp::abs(term) < params.tol) {
      return (a == 0 ? HPReal(1) : HPReal(0)) + 2 * sum;
    }
  }
  throw NumericError("theta series hit n_max", (2 * sum).convert_to<double>());
}

HPReal theta_tail_constant(int a) {
  if (a < 0) throw DomainError("derivative order must be >= 0");
  const HPReal pi = hp_pi();
  const HPReal tol = bmp::ldexp(HPReal(1), -static_cast<int>(current_precision_bits()) - 8);
  HPReal sum = 0;
  for (int n = 1;; ++n) {
    const HPReal n2 = HPReal(n) * n;
    const HPReal term = bmp::pow(n2, a) * bmp::exp(-pi * (n2 - 1));
    sum += term;
    if (n >= 3 && term < tol * sum) break;
  }
  return 2 * bmp::pow(pi, a) * sum;
}

HPReal theta_product_constant(int a, int b) {
  const HPReal ta = theta_tail_constant(a);
  const HPReal tb = theta_tail_constant(b);
  HPReal c = ta * tb * bmp::exp(-hp_pi());
  if (a == 0) c += tb;
  if (b == 0) c += ta;
  return c;
}

QuotientApprox binom_quotient_approx(int n, int a, int k, int order, XSeries series) {
  if (n < 1) throw DomainError("binom_quotient_approx needs n >= 1");
  if (order < 1 || order > kQuotientFullOrder) throw DomainError("order must be in 1..7");
  const long j = static_cast<long>(k) - a;
  QuotientApprox out;
  if (std::labs(j) > n) {
    out.value = 0;
    return out;
  }
  out.low_accuracy = 2 * std::labs(j) > n;
  const HPReal N = n;
  const HPReal x = HPReal(j) / N;
  const bool closed = series == XSeries::closed_form && std::labs(j) < n;
  HPReal exponent = 0;
  for (int g = 0; g < order; ++g) exponent += closed ? closed_group(g, x, N) : printed_group(g, x, N);
  out.value = bmp::exp(exponent);
  return out;
}

}  // namespace watermelon::special
