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

// Bernoulli numbers, gamma/digamma/zeta values, the theta function
// theta(u) = sum_{n in Z} exp(-pi n^2 u) with its u-derivatives, the Stirling
// approximation of binomial quotients, and quadrature over [1, inf).

#ifndef WATERMELON_SPECIAL_HPP_
#define WATERMELON_SPECIAL_HPP_

#include <functional>

#include "watermelon/numeric.hpp"

namespace watermelon::special {

// B_k with B_1 = -1/2. Memoized; safe to call from several threads.
ExactRational bernoulli(int k);

// Euler's constant from a 60-digit literal.
HPReal euler_gamma();
// H_N - log N with Euler-Maclaurin corrections; validates the literal.
HPReal euler_gamma_from_limit(int n);
// |euler_gamma() - euler_gamma_from_limit(1000)|
HPReal euler_gamma_check();

// psi(two_z / 2) for two_z >= 1.
HPReal digamma_halfint(int two_z);

// zeta(-m) = (-1)^m B_{m+1}/(m+1)
ExactRational zeta_neg_int(int m);

// zeta(s) for s > 1 by direct summation plus Euler-Maclaurin tail.
HPReal zeta_real(const HPReal& s, const HPReal& tol);
// Same machinery for any real s != 1.
HPReal zeta_continued(const HPReal& s, const HPReal& tol);

HPReal gamma_real(const HPReal& x);
// 1/Gamma(x), zero at the poles.
HPReal reciprocal_gamma(const HPReal& x);

// Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!); the rational part is exposed
// separately.
ExactRational gamma_half_integer_ratio(int m);
HPReal gamma_half_integer(int m);

HPReal log_gamma_asym(const HPReal& z, int terms);

struct ThetaSeriesParams {
  HPReal tol;
  int n_max = 100000;
};

// tol = 2^-(precision+16)
ThetaSeriesParams default_theta_params();

HPReal theta_bar(const HPReal& u, const ThetaSeriesParams& params = default_theta_params());
// d^a/du^a theta(u) = [a=0] + 2 sum_{n>=1} (-pi n^2)^a exp(-pi n^2 u)
HPReal theta_bar_deriv(int a, const HPReal& u,
                       const ThetaSeriesParams& params = default_theta_params());

// A_a with |theta_a(t) - [a=0]| <= A_a exp(-pi t) for t >= 1.
HPReal theta_tail_constant(int a);
// C with |theta_a(t) theta_b(t) - [a=b=0]| <= C exp(-pi t) for t >= 1.
HPReal theta_product_constant(int a, int b);

// |f(t)| <= scale * t^power * exp(-rate t) on [1, inf)
struct TailEnvelope {
  HPReal scale;
  HPReal power;
  HPReal rate;
};

using Integrand = std::function<HPReal(const HPReal&)>;

// Adaptive Gauss-Legendre on [1, U] with U taken from the envelope so the
// tail is below tol/2. The error bound is an estimate (rigorous = false).
// A zero envelope scale means f == 0 and gives an exact zero.
QuadResult integrate_one_to_inf(const Integrand& f, const TailEnvelope& envelope,
                                const HPReal& tol, int max_panels = 20000);

enum class XSeries {
  printed,      // each x-series cut at x^8
  closed_form,  // each n-power group summed in closed form
};

inline constexpr int kQuotientFullOrder = 7;

struct QuotientApprox {
  HPReal value;
  bool low_accuracy = false;
};

// binom(2n, n+a-k)/binom(2n, n) from the Stirling series in x = (k-a)/n.
// `order` keeps the first groups among n^1, n^0, n^-1, n^-3, n^-5, n^-7,
// n^-9. Zero for |x| > 1; flagged low accuracy for |x| > 1/2.
QuotientApprox binom_quotient_approx(int n, int a, int k, int order = kQuotientFullOrder,
                                     XSeries series = XSeries::closed_form);

}  // namespace watermelon::special

#endif  // WATERMELON_SPECIAL_HPP_
