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

#include "doctest.h"
#include "oracles.hpp"
#include "watermelon/exact.hpp"
#include "watermelon/special.hpp"

using namespace watermelon;
using namespace watermelon::special;

namespace {

HPReal hp(const char* s) { return parse_hp(s); }
HPReal pi() { return hp_pi(); }

HPReal zeta_half() { return oracle::zeta_eta(HPReal(0.5)); }
HPReal beta_half() { return oracle::beta(HPReal(0.5)); }

HPReal theta_series(const HPReal& u) {
  HPReal s = 1;
  for (int n = 1; n < 60; ++n) s += 2 * exp(-pi() * n * n * u);
  return s;
}

HPReal rel(const HPReal& x, const HPReal& y) { return abs(x - y) / abs(y); }

}  // namespace

TEST_CASE("bernoulli") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == ExactRational(-1, 2));
  CHECK(bernoulli(2) == ExactRational(1, 6));
  CHECK(bernoulli(12) == ExactRational(-691, 2730));
  for (int k = 2; k <= 40; ++k) REQUIRE(bernoulli(k) == oracle::akiyama_tanigawa(k));
  CHECK(oracle::akiyama_tanigawa(1) == ExactRational(1, 2));
}

TEST_CASE("euler gamma") {
  CHECK(abs(euler_gamma() - hp("0.57721566490153286060651209008240243104215933593992")) < hp("1e-38"));
  CHECK(euler_gamma_check() < hp("1e-30"));
  CHECK(abs(euler_gamma_from_limit(200) - euler_gamma()) < hp("1e-30"));
}

TEST_CASE("digamma at half integers") {
  const HPReal g = euler_gamma();
  const HPReal l2 = log(HPReal(2));
  CHECK(abs(digamma_halfint(2) + g) < hp("1e-35"));
  CHECK(abs(digamma_halfint(1) - (-g - 2 * l2)) < hp("1e-35"));
  CHECK(abs(digamma_halfint(5) - (HPReal(8) / 3 - g - 2 * l2)) < hp("1e-35"));
  for (int two_z = 1; two_z <= 40; ++two_z) {
    REQUIRE(abs(digamma_halfint(two_z + 2) - digamma_halfint(two_z) - 2 / HPReal(two_z)) < hp("1e-35"));
  }
  CHECK_THROWS_AS(digamma_halfint(0), DomainError);
}

TEST_CASE("zeta at negative integers") {
  CHECK(zeta_neg_int(0) == ExactRational(-1, 2));
  CHECK(zeta_neg_int(1) == ExactRational(-1, 12));
  CHECK(zeta_neg_int(2) == 0);
  for (int m = 1; m <= 30; ++m) REQUIRE(zeta_neg_int(m) == -oracle::akiyama_tanigawa(m + 1) / (m + 1));
  CHECK_THROWS_AS(zeta_neg_int(-1), DomainError);
}

TEST_CASE("zeta_real") {
  const HPReal tol = hp("1e-35");
  CHECK(rel(zeta_real(2, tol), pi() * pi() / 6) < hp("1e-34"));
  CHECK(rel(zeta_real(4, tol), pow(pi(), 4) / 90) < hp("1e-34"));
  HPReal direct = 0;
  for (int k = 1; k <= 3000; ++k) direct += pow(HPReal(k), -10);
  CHECK(abs(zeta_real(10, tol) - direct) < hp("1e-30"));
  CHECK(abs(zeta_real(10, tol) - hp("1.0009945751278180853371459589003190170060195315645")) < hp("1e-35"));
  CHECK_THROWS_AS(zeta_real(1, tol), DomainError);
}

TEST_CASE("zeta_continued") {
  const HPReal tol = hp("1e-35");
  CHECK(rel(zeta_continued(hp("0.5"), tol), zeta_half()) < hp("1e-30"));
  CHECK(rel(zeta_continued(3, tol), zeta_real(3, tol)) < hp("1e-33"));
  for (int m = 0; m <= 9; ++m) {
    REQUIRE(abs(zeta_continued(HPReal(-m), tol) - to_hp(zeta_neg_int(m))) < hp("1e-30"));
  }
}

TEST_CASE("gamma helpers") {
  CHECK(rel(gamma_real(hp("0.5")), sqrt(pi())) < hp("1e-35"));
  CHECK(rel(gamma_real(5), HPReal(24)) < hp("1e-35"));
  CHECK(reciprocal_gamma(0) == 0);
  CHECK(reciprocal_gamma(-3) == 0);
  CHECK(rel(reciprocal_gamma(hp("2.5")) * gamma_real(hp("2.5")), HPReal(1)) < hp("1e-35"));
  for (int m = 0; m <= 12; ++m) {
    REQUIRE(rel(gamma_half_integer(m), gamma_real(HPReal(m) + HPReal(0.5))) < hp("1e-33"));
    REQUIRE(to_hp(gamma_half_integer_ratio(m)) * sqrt(pi()) == gamma_half_integer(m));
  }
}

TEST_CASE("log_gamma_asym") {
  // Gamma(10.5) = 9.5 * 8.5 * ... * 0.5 * sqrt(pi)
  HPReal prod = sqrt(pi());
  for (int i = 0; i < 10; ++i) prod *= HPReal(i) + HPReal(0.5);
  CHECK(abs(log_gamma_asym(hp("10.5"), 5) - log(prod)) < hp("1e-12"));
  const HPReal z100 = log_gamma_asym(100, 10);
  CHECK(rel(z100, log_gamma_asym(100, 6)) < hp("1e-20"));
  CHECK(rel(z100, log(gamma_real(100))) < hp("1e-33"));
  const HPReal z = 20;
  CHECK(abs(log_gamma_asym(z, 0) - ((z - HPReal(0.5)) * log(z) - z + log(2 * pi()) / 2)) < hp("1e-35"));
  CHECK_THROWS_AS(log_gamma_asym(5, 3), DomainError);
}

TEST_CASE("theta_bar values") {
  CHECK(abs(theta_bar(1) - pow(pi(), HPReal(0.25)) / gamma_real(HPReal(0.75))) < hp("1e-35"));
  CHECK(abs(theta_bar(1) - theta_series(1)) < hp("1e-35"));
  CHECK(theta_bar(50) - 1 < hp("1e-60"));
  CHECK(abs(theta_bar(hp("0.5")) - hp("1.4194954880838")) < hp("1e-12"));
  CHECK_THROWS_AS(theta_bar(hp("1e-6"), {hp("1e-40"), 4}), NumericError);
  CHECK_THROWS_AS(theta_bar(0), DomainError);
}

TEST_CASE("theta reciprocity") {
  for (const char* u : {"0.25", "0.5", "2", "5", "1.3", "0.07"}) {
    const HPReal x = hp(u);
    INFO("u = " << u);
    CHECK(abs(theta_bar(x) - theta_bar(1 / x) / sqrt(x)) < hp("1e-30"));
  }
}

TEST_CASE("theta derivatives") {
  CHECK(theta_bar_deriv(0, 1) == theta_bar(1));
  // -2 pi e^{-pi} - 8 pi e^{-4 pi} - ...
  CHECK(abs(theta_bar_deriv(1, 1) - hp("-0.2716087028033270036438")) < hp("1e-20"));
  const HPReal h = hp("1e-12");
  for (int a = 1; a <= 6; ++a) {
    for (const char* u : {"0.5", "1", "2.5"}) {
      const HPReal x = hp(u);
      const HPReal fd = (theta_bar_deriv(a - 1, x + h) - theta_bar_deriv(a - 1, x - h)) / (2 * h);
      INFO("a = " << a << " u = " << u);
      CHECK(rel(theta_bar_deriv(a, x), fd) < hp("1e-18"));
    }
  }
  for (int a = 0; a <= 6; ++a) {
    for (const char* u : {"0.5", "0.75", "1", "3", "10"}) {
      const HPReal v = theta_bar_deriv(a, hp(u));
      CHECK((a % 2 == 0 ? v > 0 : v < 0));
    }
  }
}

TEST_CASE("theta tail envelopes") {
  for (int a = 0; a <= 7; ++a) {
    for (const char* t : {"1", "1.25", "2", "4", "9"}) {
      const HPReal x = hp(t);
      const HPReal dev = abs(theta_bar_deriv(a, x) - (a == 0 ? 1 : 0));
      REQUIRE(dev <= theta_tail_constant(a) * exp(-pi() * x) * (1 + hp("1e-30")));
      for (int b = 0; b <= a; ++b) {
        const HPReal prod = theta_bar_deriv(a, x) * theta_bar_deriv(b, x) - (a == 0 && b == 0 ? 1 : 0);
        REQUIRE(abs(prod) <= theta_product_constant(a, b) * exp(-pi() * x) * (1 + hp("1e-30")));
      }
    }
  }
}

TEST_CASE("integrate_one_to_inf") {
  const HPReal tol = hp("1e-30");
  const auto e = integrate_one_to_inf([](const HPReal& t) -> HPReal { return exp(-hp_pi() * t); },
                                      {1, 0, pi()}, tol);
  CHECK(abs(e.value - exp(-pi()) / pi()) < tol);
  CHECK(e.error_bound <= tol);

  const auto z = integrate_one_to_inf([](const HPReal&) -> HPReal { return 0; }, {0, 0, 1}, tol);
  CHECK(z.value == 0);
  CHECK(z.error_bound == 0);
  CHECK(z.rigorous);

  const auto poly = integrate_one_to_inf([](const HPReal& t) -> HPReal { return t * exp(-2 * t); },
                                         {1, 1, 2}, tol);
  CHECK(abs(poly.value - HPReal(3) / 4 * exp(HPReal(-2))) < tol);

  // with theta(t)^2 = t^{-1} theta(1/t)^2 this integral is 2 (zeta(1/2) beta(1/2) + 1)
  const auto th = integrate_one_to_inf(
      [](const HPReal& t) -> HPReal {
        const HPReal v = theta_bar(t);
        return (v * v - 1) / sqrt(t);
      },
      {theta_product_constant(0, 0), hp("-0.5"), pi()}, tol);
  CHECK(abs(th.value - 2 * (zeta_half() * beta_half() + 1)) < hp("1e-28"));

  // discontinuous integrand with a tiny panel budget
  auto step = [](const HPReal& t) -> HPReal { return t < HPReal(1) / 3 + 1 ? HPReal(1) : HPReal(0); };
  CHECK_THROWS_AS(integrate_one_to_inf(step, {1, 0, 1}, tol, 3), NumericError);
  CHECK_THROWS_AS(integrate_one_to_inf(step, {1, 0, 1}, HPReal(0)), ConfigurationError);
}

TEST_CASE("binom_quotient_approx") {
  auto exact_q = [](int n, int a, int k) -> HPReal {
    return to_hp(ExactRational(exact::binomial(2 * n, n + a - k), exact::binomial(2 * n, n)));
  };
  for (int a = -2; a <= 2; ++a) CHECK(binom_quotient_approx(50, a, a).value == 1);
  CHECK(rel(binom_quotient_approx(100, 0, 5).value, exact_q(100, 0, 5)) < hp("1e-10"));
  CHECK(rel(binom_quotient_approx(100, 1, 40).value, exact_q(100, 1, 40)) < hp("1e-6"));
  for (int k = -25; k <= 25; ++k) {
    const auto q = binom_quotient_approx(100, 0, k);
    REQUIRE(rel(q.value, exact_q(100, 0, k)) < hp("1e-6"));
    REQUIRE_FALSE(q.low_accuracy);
  }
  CHECK(binom_quotient_approx(100, 0, 60).low_accuracy);
  CHECK(binom_quotient_approx(10, 0, 11).value == 0);
  CHECK(binom_quotient_approx(10, 0, -12).value == 0);
  // the series cut at x^8 only reaches about 2e-6 at |x| = 1/4
  for (int k = -25; k <= 25; ++k) {
    const auto q = binom_quotient_approx(100, 0, k, kQuotientFullOrder, XSeries::printed);
    REQUIRE(rel(q.value, exact_q(100, 0, k)) < hp("5e-6"));
  }
  CHECK(rel(binom_quotient_approx(100, 0, 5, kQuotientFullOrder, XSeries::printed).value, exact_q(100, 0, 5)) <
        hp("1e-10"));
  // fewer groups, larger error
  const HPReal e2 = rel(binom_quotient_approx(100, 0, 10, 2).value, exact_q(100, 0, 10));
  const HPReal e7 = rel(binom_quotient_approx(100, 0, 10).value, exact_q(100, 0, 10));
  CHECK(e7 < e2);
}
