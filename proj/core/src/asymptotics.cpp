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

#include "watermelon/asymptotics.hpp"

#include <cmath>
#include <numeric>

#include "watermelon/exact.hpp"
#include "watermelon/special.hpp"

namespace watermelon::asymptotics {

namespace bmp = boost::multiprecision;

namespace {

ExactInt factorial(int n) {
  ExactInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

HPReal rational_power(const HPReal& n, const ExactRational& p) {
  if (bmp::denominator(p) == 1) return bmp::pow(n, bmp::numerator(p).convert_to<long>());
  return bmp::pow(n, to_hp(p));
}

// Terms of sum_{k} k^(x+1) exp(-k^2/n) beyond k, bounded geometrically
// once past the peak; infinity before it.
double tail_after(int n, int x, long k) {
  const double kd = static_cast<double>(k);
  const double ratio = std::pow((kd + 1) / kd, x + 1) * std::exp(-(2 * kd + 1) / n);
  if (kd * kd <= n * (x + 1) / 2.0 || ratio >= 1) return HUGE_VAL;
  const double bound = std::exp((x + 1) * std::log(kd) - kd * kd / n);
  return bound * ratio / (1 - ratio);
}

long initial_cutoff(int n, int x, double tol) {
  const double logs = -std::log(tol) + (x + 2) * std::log(static_cast<double>(n) + 1) + 40;
  return static_cast<long>(std::sqrt(n * (x + 1) / 2.0) + std::sqrt(n * logs)) + 4;
}

// exp(-k^2/n) for k = 0..limit by q^(k^2) = q^((k-1)^2) q^(2k-1)
std::vector<HPReal> gaussians(int n, long limit) {
  std::vector<HPReal> out(static_cast<std::size_t>(limit) + 1);
  const HPReal q = bmp::exp(-HPReal(1) / n);
  const HPReal q2 = q * q;
  HPReal step = q;
  out[0] = 1;
  for (long k = 1; k <= limit; ++k) {
    out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] * step;
    step *= q2;
  }
  return out;
}

const ExactRational kHalf(1, 2);

}  // namespace

void GExpansion::add(const ExactRational& power, int log_power, const HPReal& coefficient) {
  auto [it, inserted] = terms_.try_emplace(Key{power, log_power}, coefficient);
  if (!inserted) it->second += coefficient;
}

void GExpansion::add_scaled(const GExpansion& other, const HPReal& scale, const ExactRational& shift) {
  for (const auto& [key, value] : other.terms_) add(key.first + shift, key.second, HPReal(value * scale));
}

HPReal GExpansion::evaluate(const HPReal& n) const {
  const HPReal log_n = bmp::log(n);
  HPReal total = 0;
  for (const auto& [key, value] : terms_) {
    HPReal term = value * rational_power(n, key.first);
    for (int i = 0; i < key.second; ++i) term *= log_n;
    total += term;
  }
  return total;
}

HPReal GExpansion::coefficient(const ExactRational& power, int log_power) const {
  auto it = terms_.find(Key{power, log_power});
  return it == terms_.end() ? HPReal(0) : it->second;
}

std::vector<std::pair<GExpansion::Key, HPReal>> GExpansion::terms() const {
  return {terms_.begin(), terms_.end()};
}

HPReal g_direct(int n, int b, const HPReal& tol) {
  if (n < 1 || b < 0) throw DomainError("g(n,b) needs n >= 1, b >= 0");
  if (tol <= 0) throw ConfigurationError("tolerance must be positive");
  const double tol_d = std::max(tol.convert_to<double>(), 1e-300);
  long limit = initial_cutoff(n, b, tol_d);
  std::vector<std::int32_t> d = exact::divisor_table(limit);
  std::vector<HPReal> gauss = gaussians(n, limit);
  HPReal sum = 0;
  for (long k = 1;; ++k) {
    if (k > limit) {
      limit *= 2;
      d = exact::divisor_table(limit);
      gauss = gaussians(n, limit);
    }
    sum += bmp::pow(HPReal(k), b) * d[static_cast<std::size_t>(k)] * gauss[static_cast<std::size_t>(k)];
    if (tail_after(n, b, k) < tol_d) break;
  }
  return sum;
}

HPReal g2_direct(int n, int a, int b, const HPReal& tol) {
  if (n < 1 || a < 0 || b < 0) throw DomainError("g(n,a,b) needs n >= 1, a, b >= 0");
  if (tol <= 0) throw ConfigurationError("tolerance must be positive");
  const double tol_d = std::max(tol.convert_to<double>(), 1e-300);

  // Tail: d(gcd) <= min(k,l), so the part with k > K is at most
  // T_a(K) * E_b where E_b bounds sum_l l^b exp(-l^2/n).
  auto full_sum = [n](int x) {
    double s = 0;
    for (long k = 1;; ++k) {
      const double t = std::exp(x * std::log(static_cast<double>(k)) - static_cast<double>(k) * k / n);
      s += t;
      if (k * k > n * (x + 1) && t < 1e-30 * s) return s;
    }
  };
  const double ea = full_sum(a);
  const double eb = full_sum(b);
  long cutoff = 1;
  while (tail_after(n, a, cutoff) * eb + ea * tail_after(n, b, cutoff) >= tol_d) ++cutoff;

  const std::vector<std::int32_t> d = exact::divisor_table(cutoff);
  const std::vector<HPReal> gauss = gaussians(n, cutoff);
  std::vector<HPReal> wa(static_cast<std::size_t>(cutoff) + 1), wb(wa.size());
  for (long k = 1; k <= cutoff; ++k) {
    wa[static_cast<std::size_t>(k)] = bmp::pow(HPReal(k), a) * gauss[static_cast<std::size_t>(k)];
    wb[static_cast<std::size_t>(k)] = bmp::pow(HPReal(k), b) * gauss[static_cast<std::size_t>(k)];
  }
  HPReal total = 0;
  for (long k = 1; k <= cutoff; ++k) {
    HPReal row = 0;
    for (long l = 1; l <= cutoff; ++l) {
      row += wb[static_cast<std::size_t>(l)] * d[static_cast<std::size_t>(std::gcd(k, l))];
    }
    total += wa[static_cast<std::size_t>(k)] * row;
  }
  return total;
}

GExpansion g_expansion(int b, int corrections) {
  if (b < 0 || b % 2 != 0) throw DomainError("g_asym covers even b >= 0 only");
  if (corrections < 0) throw DomainError("corrections must be >= 0");
  GExpansion e;
  const int m = b / 2;
  const ExactRational z0 = ExactRational(m) + kHalf;
  const HPReal gamma_z0 = special::gamma_half_integer(m);
  // n^z0 Gamma(z0) (log(n)/4 + psi(z0)/4 + gamma)
  e.add(z0, 1, gamma_z0 / 4);
  e.add(z0, 0, gamma_z0 * (special::digamma_halfint(b + 1) / 4 + special::euler_gamma()));
  // n^-j (-1)^j / j! zeta(-2j-b)^2
  for (int j = 0; j < corrections; ++j) {
    const ExactRational z = special::zeta_neg_int(2 * j + b);
    if (z == 0) continue;
    ExactRational coeff = z * z / factorial(j);
    if (j % 2 == 1) coeff = -coeff;
    e.add(ExactRational(-j), 0, to_hp(coeff));
  }
  return e;
}

HPReal g_asym(int n, int b, int corrections) {
  if (n < 1) throw DomainError("g_asym needs n >= 1");
  return g_expansion(b, corrections).evaluate(HPReal(n));
}

GExpansion g2_expansion(int a, int b, const dirichlet::ConstantsSource& constants, G2Form form) {
  if (a < 0 || b < 0) throw DomainError("g(n,2a,2b) needs a, b >= 0");
  if (a < b) std::swap(a, b);
  const int m = a + b;
  const HPReal pi = hp_pi();
  const HPReal sqrt_pi = bmp::sqrt(pi);
  const HPReal gamma = special::euler_gamma();
  const HPReal c = constants.c(a, b);
  const ExactRational weight(factorial(2 * a) * factorial(2 * b), factorial(a) * factorial(b));

  GExpansion e;
  // residue at z = m+1: n^(m+1) m! zeta(2) pi (2a)!(2b)!/(4^(m+1) a! b! m!)
  e.add(ExactRational(m + 1), 0, pi * pi * pi * to_hp(weight) / (24 * bmp::pow(HPReal(4), m)));

  const ExactRational z0 = ExactRational(m) + kHalf;
  if (form == G2Form::printed && a > 0 && b > 0) {
    // 2^(-2m-3) n^m (2a)!(2b)!/(a!b!) * 4 sqrt(pi n) c (2m)!/m!
    e.add(z0, 0, to_hp(weight * ExactRational(factorial(2 * m), factorial(m))) * 4 * sqrt_pi * c /
                     bmp::pow(HPReal(2), 2 * m + 3));
    return e;
  }

  // zeta(2z-2m) = 1/(2(z-z0)) + gamma + ..., Z(a,b;z) = r/(z-z0) + c + ...
  const HPReal r = to_hp(dirichlet::residue_half(a, b));
  const HPReal gamma_z0 = special::gamma_half_integer(m);
  e.add(z0, 1, gamma_z0 * r / 2);
  e.add(z0, 0, gamma_z0 * (r / 2 * special::digamma_halfint(2 * m + 1) + gamma * r + c / 2));

  // z = 0: zeta(0) Z(0,0;0) with Z(0,0;0) = 1/4 (zeta(s)beta(s) - zeta(2s) at 0)
  if (form == G2Form::residue && m == 0) {
    e.add(ExactRational(0), 0, to_hp(special::zeta_neg_int(0) * ExactRational(1, 4)));
  }
  return e;
}

HPReal g2_asym(int n, int a, int b, const dirichlet::ConstantsSource& constants, G2Form form) {
  if (n < 1) throw DomainError("g2_asym needs n >= 1");
  return g2_expansion(a, b, constants, form).evaluate(HPReal(n));
}

const std::vector<SingleAsymTerm>& single_asym_table() {
  static const std::vector<SingleAsymTerm> table{
      {0, ExactRational(-24), {89, 20, 4}, 3},
      {2, ExactRational(4), {3656, 1065, 96}, 4},
      {4, ExactRational(-1), {12213, 4060, 288}, 5},
      {6, ExactRational(8), {335, 107, 8}, 6},
      {8, ExactRational(-1, 3), {521, 96}, 7},
      {10, ExactRational(10, 3), {1}, 8},
  };
  return table;
}

const std::vector<DoubleAsymTerm>& double_asym_table() {
  using R = ExactRational;
  static const std::vector<DoubleAsymTerm> table{
      {0, 0, {{R(-96), 4}, {R(816), 5}, {R(-4368), 6}}},
      {2, 0, {{R(768), 5}, {R(-8928), 6}, {R(61744), 7}}},
      {2, 2, {{R(-576), 6}, {R(9216), 7}, {R(-80744), 8}}},
      {4, 0, {{R(-576), 6}, {R(10336), 7}, {R(-99336), 8}}},
      {4, 2, {{R(384), 7}, {R(-10784), 8}, {R(138128), 9}}},
      {4, 4, {{R(256), 8}, {R(-3936), 9}, {R(29184), 10}}},
      {6, 0, {{R(128), 7}, {R(-4192), 8}, {R(300624, 5), 9}}},
      {6, 2, {{R(-256), 8}, {R(6848), 9}, {R(-1517888, 15), 10}}},
      {6, 4, {{R(2432, 3), 10}, {R(-62368, 5), 11}}},
      {6, 6, {{R(128, 3), 11}, {R(-208, 15), 12}}},
      {8, 0, {{R(544), 9}, {R(-225488, 15), 10}}},
      {8, 2, {{R(398912, 15), 11}, {R(-960), 10}}},
      {8, 4, {{R(31736, 15), 12}, {R(-256, 3), 11}}},
      {8, 6, {{R(1328, 45), 13}}},
      {8, 8, {{R(64, 9), 14}}},
      {10, 0, {{R(8672, 5), 11}, {R(-64, 3), 10}}},
      {10, 2, {{R(128, 3), 11}, {R(-47504, 15), 12}}},
      {10, 4, {{R(-7856, 45), 13}}},
      {10, 6, {{R(-32, 3), 14}}},
      {12, 0, {{R(-456, 5), 12}}},
      {12, 2, {{R(2576, 15), 13}}},
      {12, 4, {{R(64, 9), 14}}},
      {14, 0, {{R(16, 9), 13}}},
      {14, 2, {{R(-32, 9), 14}}},
  };
  return table;
}

GExpansion bigS1_expansion() {
  GExpansion total;
  for (const auto& t : single_asym_table()) {
    const GExpansion g = g_expansion(t.b, 1);
    for (std::size_t i = 0; i < t.poly.size(); ++i) {
      const ExactRational coeff = t.scale * t.poly[i];
      total.add_scaled(g, to_hp(coeff), ExactRational(static_cast<long>(i) - t.den_power));
    }
  }
  return total;
}

GExpansion bigS2_expansion(const dirichlet::ConstantsSource& constants, G2Form form) {
  GExpansion total;
  for (const auto& t : double_asym_table()) {
    const GExpansion g = g2_expansion(t.x / 2, t.y / 2, constants, form);
    for (const auto& [coeff, j] : t.parts) total.add_scaled(g, to_hp(coeff), ExactRational(-j));
  }
  return total;
}

HPReal bigS1_asym(int n) {
  if (n < 1) throw DomainError("bigS1_asym needs n >= 1");
  return bigS1_expansion().evaluate(HPReal(n));
}

HPReal bigS2_asym(int n, const dirichlet::ConstantsSource& constants, G2Form form) {
  if (n < 1) throw DomainError("bigS2_asym needs n >= 1");
  return bigS2_expansion(constants, form).evaluate(HPReal(n));
}

HPReal first_part_asym(const HPReal& n) {
  return (n + 1) * (n + 2) / (12 * (2 * n + 1)) * bigS1_expansion().evaluate(n);
}

HPReal second_part_asym(const HPReal& n, const dirichlet::ConstantsSource& constants, G2Form form) {
  return (n + 1) * (n + 2) / (12 * (2 * n + 1)) * (n + 1) * (n + 2) * (n + 3) *
         bigS2_expansion(constants, form).evaluate(n);
}

HPReal H1_asym(const HPReal& n) { return bmp::sqrt(hp_pi() * n) - HPReal(3) / 2; }

HPReal AsymptoticCoefficient::K_sqrt_pi() const { return K * bmp::sqrt(hp_pi()); }

const std::vector<Contribution>& h2_multipliers() {
  static const std::vector<Contribution> table{
      {0, 0, -2, 0}, {1, 0, 8, 0},  {1, 1, -9, 0}, {2, 0, -9, 0},
      {2, 1, 15, 0}, {2, 2, 35, 0}, {3, 0, 5, 0},  {3, 1, -35, 0},
  };
  return table;
}

AsymptoticCoefficient H2_coefficient(const dirichlet::ConstantsSource& constants) {
  AsymptoticCoefficient out;
  out.K = 0;
  out.constant = HPReal(-3) / 2;
  out.printed_constant = -2;
  for (Contribution c : h2_multipliers()) {
    c.c = constants.c(c.a, c.b);
    out.K += c.c * c.multiplier;
    out.provenance.push_back(std::move(c));
  }
  return out;
}

HPReal H2_asym(const HPReal& n, const AsymptoticCoefficient& coeff) {
  return coeff.K * bmp::sqrt(hp_pi() * n) + coeff.constant;
}

ConvergenceRow convergence_ratio(int n) {
  if (n < 1) throw DomainError("convergence_ratio needs n >= 1");
  ConvergenceRow row;
  row.n = n;
  row.H = exact::avg_height_exact(n, 2);
  row.H_asym = parse_hp(kNominalSlope) * bmp::sqrt(HPReal(n)) - 2;
  row.q = to_hp(row.H) / row.H_asym;
  return row;
}

}  // namespace watermelon::asymptotics
