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

#include "watermelon/dirichlet.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "watermelon/special.hpp"

namespace watermelon::dirichlet {

namespace bmp = boost::multiprecision;

namespace {

ExactInt factorial(int n) {
  ExactInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// x(x-1)...(x-k+1)
ExactInt falling(int x, int k) {
  ExactInt r = 1;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

ExactRational pow4(int e) {
  ExactInt p = 1;
  for (int i = 0; i < std::abs(e); ++i) p *= 4;
  return e >= 0 ? ExactRational(p) : ExactRational(ExactInt(1), p);
}

bool is_integer(const HPReal& s) { return s == bmp::floor(s); }

// 1 / (k^2+l^2)^s with a cheaper path for small integer s.
class InversePower {
 public:
  explicit InversePower(const HPReal& s)
      : s_(s), integral_(is_integer(s) && s > 0 && s <= 64),
        exponent_(integral_ ? s.convert_to<int>() : 0) {}

  HPReal operator()(long m) const {
    if (integral_) return 1 / bmp::pow(HPReal(m), exponent_);
    return bmp::exp(-s_ * bmp::log(HPReal(m)));
  }

 private:
  HPReal s_;
  bool integral_;
  int exponent_;
};

HPReal int_pow(long base, int e) {
  HPReal r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

HPReal square_sum(int a2, int b2, const HPReal& s, long cutoff, bool coprime_only) {
  const InversePower inv(s);
  std::vector<HPReal> pa(static_cast<std::size_t>(cutoff) + 1), pb(pa.size());
  for (long k = 1; k <= cutoff; ++k) {
    pa[static_cast<std::size_t>(k)] = int_pow(k, a2);
    pb[static_cast<std::size_t>(k)] = int_pow(k, b2);
  }
  HPReal total = 0;
  for (long k = 1; k <= cutoff; ++k) {
    HPReal row = 0;
    for (long l = 1; l <= cutoff; ++l) {
      if (coprime_only && std::gcd(k, l) != 1) continue;
      row += pb[static_cast<std::size_t>(l)] * inv(k * k + l * l);
    }
    total += pa[static_cast<std::size_t>(k)] * row;
  }
  return total;
}

// integral_1^inf t^power (theta_x(t) theta_y(t) - [x=y=0]) dt
HPReal theta_integral(int x, int y, const HPReal& power, const HPReal& tol, HPReal& error) {
  const bool subtract = x == 0 && y == 0;
  const auto params = special::default_theta_params();
  special::Integrand f = [&](const HPReal& t) -> HPReal {
    HPReal v = special::theta_bar_deriv(x, t, params) * special::theta_bar_deriv(y, t, params);
    if (subtract) v -= 1;
    return v * bmp::pow(t, power);
  };
  special::TailEnvelope env{special::theta_product_constant(x, y), power, hp_pi()};
  QuadResult r = special::integrate_one_to_inf(f, env, tol);
  error += r.error_bound;
  return r.value;
}

struct WeightedIntegral {
  ExactRational weight;
  int x;
  int y;
  HPReal power;
};

// sum of weight * integral, each integral to tol / (count * max(1,|weight|))
HPReal weighted_sum(const std::vector<WeightedIntegral>& parts, const HPReal& tol, HPReal& error) {
  HPReal total = 0;
  const HPReal share = tol / static_cast<long>(std::max<std::size_t>(parts.size(), 1));
  for (const auto& p : parts) {
    if (p.weight == 0) continue;
    const HPReal w = to_hp(p.weight);
    const HPReal scale = bmp::abs(w) > 1 ? HPReal(bmp::abs(w)) : HPReal(1);
    HPReal err = 0;
    total += w * theta_integral(p.x, p.y, p.power, share / scale, err);
    error += bmp::abs(w) * err;
  }
  return total;
}

}  // namespace

QuadResult Z_direct(int a, int b, const HPReal& s, const HPReal& tol, DirectOptions opts) {
  if (a < 0 || b < 0) throw DomainError("Z needs a, b >= 0");
  if (tol <= 0) throw ConfigurationError("tolerance must be positive");
  const HPReal sigma = s - a - b;
  if (sigma < 1 + HPReal(kMinDirectMargin)) {
    throw DomainError("Z_direct needs s >= a+b+1.25 (inside the convergence half-plane)");
  }
  const HPReal pi = hp_pi();
  auto bound = [&](long k) -> HPReal {
    return pi / 2 * bmp::pow(HPReal(k), 2 - 2 * sigma) / (2 * sigma - 2);
  };
  // K from the bound, then nudged up until it holds.
  const HPReal guess = bmp::pow(tol * (2 * sigma - 2) * 2 / pi, 1 / (2 - 2 * sigma));
  long cutoff = 4;
  if (guess < opts.max_cutoff) cutoff = std::max(4L, guess.convert_to<long>());
  else cutoff = opts.max_cutoff;
  while (cutoff < opts.max_cutoff && bound(cutoff) > tol) ++cutoff;

  QuadResult out;
  out.value = square_sum(2 * a, 2 * b, s, cutoff, false);
  out.error_bound = bound(cutoff);
  out.rigorous = true;
  if (out.error_bound > tol) {
    throw NumericError("Z_direct tolerance needs a cutoff above max_cutoff",
                       out.value.convert_to<double>());
  }
  return out;
}

QuadResult Zstar_from_Z(int a, int b, const HPReal& s, const HPReal& tol) {
  QuadResult z = Z_direct(a, b, s, tol / 8);
  QuadResult out;
  out.value = 4 * z.value;
  out.error_bound = 4 * z.error_bound;
  if (b == 0) out.value += 2 * special::zeta_real(2 * s - 2 * a, tol / 8);
  if (a == 0) out.value += 2 * special::zeta_real(2 * s - 2 * b, tol / 8);
  out.error_bound += tol / 2;
  out.rigorous = z.rigorous;
  return out;
}

CoprimeCheck coprime_sum_check(int a, int b, const HPReal& s, int cutoff) {
  if (a < 0 || b < 0 || cutoff < 1) throw DomainError("coprime_sum_check needs a, b >= 0, cutoff >= 1");
  const HPReal zeta_arg = 2 * s - a - b;
  if (zeta_arg <= 1) throw DomainError("coprime_sum_check needs 2s - a - b > 1");
  CoprimeCheck out;
  out.lhs = square_sum(a, b, s, cutoff, true);
  const HPReal tol = bmp::ldexp(HPReal(1), -static_cast<int>(current_precision_bits()));
  out.rhs = square_sum(a, b, s, cutoff, false) / special::zeta_real(zeta_arg, tol);
  return out;
}

ExactRational residue_main(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("residue needs a, b >= 0");
  return ExactRational(factorial(2 * a) * factorial(2 * b),
                       factorial(a) * factorial(b) * factorial(a + b)) *
         pow4(-(a + b + 1));
}

ExactRational residue_half(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("residue needs a, b >= 0");
  return ExactRational(-((b == 0 ? 1 : 0) + (a == 0 ? 1 : 0)), 4);
}

QuadResult Z_continued(int a, int b, const HPReal& s, const HPReal& tol) {
  if (a < 0 || b < 0) throw DomainError("Z needs a, b >= 0");
  if (s == a + b + 1) throw DomainError("Z has a pole at s = a+b+1");
  const HPReal pi = hp_pi();
  const int m = a + b;
  HPReal error = 0;
  HPReal scaled = 0;  // Gamma(s)^-1 times the Mellin transform
  const HPReal rg = special::reciprocal_gamma(s);

  std::vector<WeightedIntegral> parts;
  if (m == 0) {
    parts.push_back({ExactRational(1), 0, 0, -s});
    parts.push_back({ExactRational(1), 0, 0, s - 1});
    const HPReal regular = weighted_sum(parts, tol, error);
    // -1/s + 1/(s-1), with 1/(s Gamma(s)) = 1/Gamma(s+1)
    scaled = rg * (regular + 1 / (s - 1)) - special::reciprocal_gamma(s + 1);
  } else {
    const int sign = m % 2 == 0 ? 1 : -1;
    parts.push_back({ExactRational(1), a, b, s - 1});
    for (int k = 0; k <= a; ++k) {
      for (int j = 0; j <= b; ++j) {
        ExactRational w(falling(2 * a, 2 * k) * falling(2 * b, 2 * j), factorial(k) * factorial(j));
        w *= pow4(-(k + j)) * sign;
        parts.push_back({w, a - k, b - j, HPReal(2 * m - k - j) - s});
      }
    }
    const HPReal regular = weighted_sum(parts, tol, error);
    const ExactRational pole = ExactRational(factorial(2 * a) * factorial(2 * b),
                                             factorial(a) * factorial(b)) *
                               pow4(-m) * sign;
    scaled = rg * (regular + to_hp(pole) / (s - m - 1));
  }

  // Z* = pi^(s-m) (-1)^m scaled
  const HPReal factor = bmp::pow(pi, s - m) * (m % 2 == 0 ? 1 : -1);
  const HPReal zstar = factor * scaled;
  QuadResult out;
  out.value = zstar / 4;
  out.error_bound = bmp::abs(factor * rg) * error / 4;
  const HPReal ztol = tol / 8;
  if (b == 0) out.value -= special::zeta_continued(2 * s - 2 * a, ztol) / 2;
  if (a == 0) out.value -= special::zeta_continued(2 * s - 2 * b, ztol) / 2;
  out.rigorous = false;
  return out;
}

QuadResult special_value_check(int a, int b, int m, const HPReal& tol) {
  if (m < 0) throw DomainError("special_value_check needs m >= 0");
  return Z_continued(a, b, HPReal(-m), tol);
}

DirichletConstants c_const(int a, int b, const HPReal& tol) {
  if (a < 0 || b < 0) throw DomainError("c_{a,b} needs a, b >= 0");
  if (a < b) std::swap(a, b);
  if (tol <= 0) throw ConfigurationError("tolerance must be positive");

  DirichletConstants out;
  out.a = a;
  out.b = b;
  out.residue_main_coeff = residue_main(a, b);
  out.residue_half = residue_half(a, b);

  HPReal error = 0;
  const HPReal half = HPReal(1) / 2;
  const HPReal gamma = special::euler_gamma();
  std::vector<WeightedIntegral> parts;

  if (a == 0) {
    parts.push_back({ExactRational(1, 2), 0, 0, -half});
    out.c_ab = -gamma - 1 + weighted_sum(parts, tol, error);
  } else if (b == 0) {
    const int parity = a % 2 == 0 ? 2 : 0;
    parts.push_back({pow4(a - 1) * ExactRational(factorial(a) * parity, factorial(2 * a)), a, 0,
                     HPReal(a) - half});
    for (int k = 1; k <= a; ++k) {
      parts.push_back({pow4(a - k - 1) * ExactRational(factorial(a), factorial(k) * factorial(2 * a - 2 * k)),
                       a - k, 0, HPReal(a - k) - half});
    }
    out.c_ab = -gamma / 2 - half + weighted_sum(parts, tol, error);
  } else {
    const int m = a + b;
    const ExactRational outer = pow4(m - 1) * ExactRational(factorial(m), factorial(2 * m));
    const ExactRational constant =
        -2 * ExactRational(factorial(2 * a) * factorial(2 * b), factorial(a) * factorial(b)) * pow4(-m);
    parts.push_back({outer * (m % 2 == 0 ? 1 : -1), a, b, HPReal(m) - half});
    for (int k = 0; k <= a; ++k) {
      for (int j = 0; j <= b; ++j) {
        ExactRational w(falling(2 * a, 2 * k) * falling(2 * b, 2 * j), factorial(k) * factorial(j));
        w *= pow4(-(k + j)) * outer;
        parts.push_back({w, a - k, b - j, HPReal(m - k - j) - half});
      }
    }
    out.c_ab = to_hp(ExactRational(outer * constant)) + weighted_sum(parts, tol, error);
  }
  out.c_error = error;
  if (error > tol) {
    throw NumericError("c_{" + std::to_string(a) + "," + std::to_string(b) + "} error estimate " +
                           error.str(3, std::ios_base::scientific) + " exceeds the tolerance",
                       out.c_ab.convert_to<double>());
  }
  return out;
}

QuadratureConstants::QuadratureConstants(HPReal tol) : tol_(std::move(tol)) {
  if (tol_ <= 0) throw ConfigurationError("tolerance must be positive");
}

DirichletConstants QuadratureConstants::details(int a, int b) const {
  if (a < b) std::swap(a, b);
  std::lock_guard lock(mutex_);
  auto it = cache_.find({a, b});
  if (it == cache_.end()) it = cache_.emplace(std::make_pair(a, b), c_const(a, b, tol_)).first;
  return it->second;
}

HPReal QuadratureConstants::c(int a, int b) const { return details(a, b).c_ab; }

FixedConstants::FixedConstants(std::map<std::pair<int, int>, HPReal> values) {
  for (auto& [key, value] : values) set(key.first, key.second, value);
}

void FixedConstants::set(int a, int b, HPReal value) {
  if (a < b) std::swap(a, b);
  values_[{a, b}] = std::move(value);
}

HPReal FixedConstants::c(int a, int b) const {
  if (a < b) std::swap(a, b);
  auto it = values_.find({a, b});
  if (it == values_.end()) {
    throw ConfigurationError("no constant c_{" + std::to_string(a) + "," + std::to_string(b) + "} supplied");
  }
  return it->second;
}

}  // namespace watermelon::dirichlet
