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

// Direct and residue-based evaluation of
//   g(n,b)   = sum_{k>=1} k^b d(k) exp(-k^2/n)
//   g(n,a,b) = sum_{k,l>=1} k^a l^b d(gcd(k,l)) exp(-(k^2+l^2)/n)
// and the asymptotic forms of S1(n), S2(n), H(n,1) and H(n,2).

#ifndef WATERMELON_ASYMPTOTICS_HPP_
#define WATERMELON_ASYMPTOTICS_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "watermelon/dirichlet.hpp"
#include "watermelon/numeric.hpp"

namespace watermelon::asymptotics {

// sum of coefficient * n^power * log(n)^log_power
class GExpansion {
 public:
  using Key = std::pair<ExactRational, int>;  // (power, log_power)

  void add(const ExactRational& power, int log_power, const HPReal& coefficient);
  // this += scale * n^shift * other
  void add_scaled(const GExpansion& other, const HPReal& scale, const ExactRational& shift);

  HPReal evaluate(const HPReal& n) const;
  HPReal coefficient(const ExactRational& power, int log_power) const;
  // Terms by decreasing power, log terms first.
  std::vector<std::pair<Key, HPReal>> terms() const;
  bool empty() const { return terms_.empty(); }

 private:
  struct Descending {
    bool operator()(const Key& x, const Key& y) const {
      if (x.first != y.first) return x.first > y.first;
      return x.second > y.second;
    }
  };
  std::map<Key, HPReal, Descending> terms_;
};

// g(n,b) direct; cutoff once the tail bound with d(k) <= k is below tol.
HPReal g_direct(int n, int b, const HPReal& tol);
// g(n,a,b) direct (raw exponents).
HPReal g2_direct(int n, int a, int b, const HPReal& tol);

// Double-pole residue at z = (b+1)/2 plus the first `corrections`
// simple-pole residues at z = 0, -1, ... . Only even b.
GExpansion g_expansion(int b, int corrections);
HPReal g_asym(int n, int b, int corrections);

enum class G2Form {
  residue,  // residues of n^z Gamma(z) zeta(2z-2a-2b) Z(a,b;z)
  printed,  // the three printed cases verbatim
};

// Expansion of g(n,2a,2b) in half indices (a,b); symmetric.
GExpansion g2_expansion(int a, int b, const dirichlet::ConstantsSource& constants,
                        G2Form form = G2Form::residue);
HPReal g2_asym(int n, int a, int b, const dirichlet::ConstantsSource& constants,
               G2Form form = G2Form::residue);

// Printed coefficients of the asymptotic S1(n): scale * poly(n) / n^den_power * g(n,b)
struct SingleAsymTerm {
  int b;
  ExactRational scale;
  std::vector<long> poly;  // ascending powers of n
  int den_power;
};

// Printed coefficients of the asymptotic S2(n): sum_j coefficient / n^j * g(n,x,y)
struct DoubleAsymTerm {
  int x;
  int y;
  std::vector<std::pair<ExactRational, int>> parts;  // (coefficient, j)
};

const std::vector<SingleAsymTerm>& single_asym_table();
const std::vector<DoubleAsymTerm>& double_asym_table();

GExpansion bigS1_expansion();
GExpansion bigS2_expansion(const dirichlet::ConstantsSource& constants, G2Form form = G2Form::residue);
HPReal bigS1_asym(int n);
HPReal bigS2_asym(int n, const dirichlet::ConstantsSource& constants, G2Form form = G2Form::residue);

// (n+1)^(2) / (12(2n+1)) * S1(n) and the same times (n+1)^(3) * S2(n)
HPReal first_part_asym(const HPReal& n);
HPReal second_part_asym(const HPReal& n, const dirichlet::ConstantsSource& constants,
                        G2Form form = G2Form::residue);

// sqrt(pi n) - 3/2
HPReal H1_asym(const HPReal& n);

struct Contribution {
  int a;
  int b;
  int multiplier;
  HPReal c;
};

struct AsymptoticCoefficient {
  HPReal K;  // coefficient of sqrt(pi n)
  // -3/2 once the residue zeta(0) Z(0,0;0) of g(n,0,0) is kept; the printed
  // form drops it and gets -2.
  HPReal constant;
  HPReal printed_constant;
  std::vector<Contribution> provenance;
  HPReal K_sqrt_pi() const;
};

// The printed integer combination of the eight constants.
const std::vector<Contribution>& h2_multipliers();
AsymptoticCoefficient H2_coefficient(const dirichlet::ConstantsSource& constants);
HPReal H2_asym(const HPReal& n, const AsymptoticCoefficient& coeff);

inline constexpr const char* kNominalSlope = "2.57758";

struct ConvergenceRow {
  int n;
  ExactRational H;
  HPReal H_asym;  // 2.57758 sqrt(n) - 2
  HPReal q;
};

// q(n) = H(n,2) / (2.57758 sqrt(n) - 2) with H from the determinant route.
ConvergenceRow convergence_ratio(int n);

}  // namespace watermelon::asymptotics

#endif  // WATERMELON_ASYMPTOTICS_HPP_
