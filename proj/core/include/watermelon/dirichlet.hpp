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

// The double Dirichlet series Z(a,b;s) = sum_{k,l>=1} k^(2a) l^(2b) / (k^2+l^2)^s:
// direct summation, the gcd/Euler-product identity, its residues and the
// constant terms c_{a,b} at s = a+b+1/2 from theta integrals.

#ifndef WATERMELON_DIRICHLET_HPP_
#define WATERMELON_DIRICHLET_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "watermelon/numeric.hpp"

namespace watermelon::dirichlet {

inline constexpr double kMinDirectMargin = 0.25;

struct DirectOptions {
  long max_cutoff = 6000;  // largest K for the K x K square
};

// Square partial sum plus the bound
//   (pi/2) K^(2-2 sigma) / (2 sigma - 2),  sigma = s - a - b,
// on everything outside it. Needs s >= a+b+1+0.25; throws NumericError when
// tol would need K beyond max_cutoff.
QuadResult Z_direct(int a, int b, const HPReal& s, const HPReal& tol, DirectOptions opts = {});

// Z* = 4 Z + 2[b=0] zeta(2s-2a) + 2[a=0] zeta(2s-2b)
QuadResult Zstar_from_Z(int a, int b, const HPReal& s, const HPReal& tol);

struct CoprimeCheck {
  HPReal lhs;  // sum over coprime (k,l)
  HPReal rhs;  // full sum divided by zeta(2s-a-b)
  HPReal difference() const { return lhs - rhs; }
};

// Raw exponents here: k^a l^b / (k^2+l^2)^s over 1 <= k,l <= cutoff.
CoprimeCheck coprime_sum_check(int a, int b, const HPReal& s, int cutoff = 400);

// Coefficient of pi in the residue at s = a+b+1.
ExactRational residue_main(int a, int b);
// Residue at s = a+b+1/2: -(1/4)([b=0] + [a=0]).
ExactRational residue_half(int a, int b);

// Z(a,b;s) for any real s off the poles, through the Mellin transform of
// theta_a theta_b split at u = 1. error_bound collects the quadrature
// estimates.
QuadResult Z_continued(int a, int b, const HPReal& s, const HPReal& tol);

// Z(a,b;-m) from Z_continued. Reported, not asserted.
QuadResult special_value_check(int a, int b, int m, const HPReal& tol);

struct DirichletConstants {
  int a = 0;
  int b = 0;
  ExactRational residue_main_coeff;
  ExactRational residue_half;
  HPReal c_ab;
  HPReal c_error;
};

// c_{a,b} from the three printed theta-integral formulas. Arguments are
// swapped when a < b.
// Throws NumericError (partial = the value reached) when the summed quadrature
// error estimate exceeds tol.
DirichletConstants c_const(int a, int b, const HPReal& tol);

class ConstantsSource {
 public:
  virtual ~ConstantsSource() = default;
  // c_{a,b}, symmetric in (a,b)
  virtual HPReal c(int a, int b) const = 0;
};

// Evaluates c_const on demand and caches it.
class QuadratureConstants final : public ConstantsSource {
 public:
  explicit QuadratureConstants(HPReal tol);
  HPReal c(int a, int b) const override;
  DirichletConstants details(int a, int b) const;

 private:
  HPReal tol_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, DirichletConstants> cache_;
};

// Injected values; a missing pair throws ConfigurationError.
class FixedConstants final : public ConstantsSource {
 public:
  FixedConstants() = default;
  explicit FixedConstants(std::map<std::pair<int, int>, HPReal> values);
  void set(int a, int b, HPReal value);
  HPReal c(int a, int b) const override;

 private:
  std::map<std::pair<int, int>, HPReal> values_;
};

}  // namespace watermelon::dirichlet

#endif  // WATERMELON_DIRICHLET_HPP_
