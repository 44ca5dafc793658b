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

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "watermelon/special.hpp"

namespace watermelon::special {

namespace bmp = boost::multiprecision;

namespace {

constexpr int kNodes = 20;

struct Rule {
  std::vector<HPReal> nodes;
  std::vector<HPReal> weights;
};

// Legendre roots by Newton from the usual cosine guesses.
Rule make_rule(unsigned bits) {
  Rule rule;
  const HPReal pi = hp_pi();
  const HPReal eps = bmp::ldexp(HPReal(1), -static_cast<int>(bits) + 4);
  for (int i = 1; i <= kNodes; ++i) {
    HPReal x = bmp::cos(pi * (HPReal(i) - HPReal(1) / 4) / (HPReal(kNodes) + HPReal(1) / 2));
    HPReal deriv = 0;
    for (int iter = 0; iter < 100; ++iter) {
      HPReal p0 = 1;
      HPReal p1 = x;
      for (int m = 2; m <= kNodes; ++m) {
        HPReal p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      deriv = kNodes * (x * p1 - p0) / (x * x - 1);
      const HPReal dx = p1 / deriv;
      x -= dx;
      if (bmp::abs(dx) < eps) break;
    }
    rule.nodes.push_back(x);
    rule.weights.push_back(2 / ((1 - x * x) * deriv * deriv));
  }
  return rule;
}

const Rule& rule_for_precision() {
  static std::mutex mutex;
  static std::map<unsigned, Rule> cache;
  const unsigned bits = current_precision_bits();
  std::lock_guard lock(mutex);
  auto it = cache.find(bits);
  if (it == cache.end()) it = cache.emplace(bits, make_rule(bits)).first;
  return it->second;
}

HPReal panel(const Integrand& f, const Rule& rule, const HPReal& lo, const HPReal& hi) {
  const HPReal mid = (lo + hi) / 2;
  const HPReal half = (hi - lo) / 2;
  HPReal sum = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

// Upper bound for int_U^inf scale t^power exp(-rate t) dt.
HPReal tail_bound(const TailEnvelope& env, const HPReal& u) {
  const HPReal q = env.power > 0 ? env.power : HPReal(0);
  return env.scale * bmp::pow(u, env.power) * bmp::exp(-env.rate * u) / (env.rate - q / u);
}

}  // namespace

QuadResult integrate_one_to_inf(const Integrand& f, const TailEnvelope& envelope,
                                const HPReal& tol, int max_panels) {
  if (tol <= 0) throw ConfigurationError("quadrature tolerance must be positive");
  if (envelope.rate <= 0 || envelope.scale < 0) throw ConfigurationError("bad tail envelope");
  QuadResult out;
  out.value = 0;
  out.error_bound = 0;
  if (envelope.scale == 0) {
    out.rigorous = true;
    return out;
  }

  const HPReal half_tol = tol / 2;
  int upper = 2;
  while (envelope.rate * upper <= 2 * envelope.power ||
         tail_bound(envelope, HPReal(upper)) >= half_tol) {
    if (++upper > 100000) throw ConfigurationError("tail envelope never drops below tolerance");
  }
  const HPReal tail = tail_bound(envelope, HPReal(upper));

  const Rule& rule = rule_for_precision();
  const HPReal length = upper - 1;
  const HPReal floor_eps = bmp::ldexp(HPReal(1), -static_cast<int>(current_precision_bits()) + 8);

  struct Panel {
    HPReal lo, hi, whole;
  };
  std::vector<Panel> stack;
  for (int t = upper - 1; t >= 1; --t) {
    const HPReal lo = t;
    const HPReal hi = t + 1;
    stack.push_back({lo, hi, panel(f, rule, lo, hi)});
  }

  HPReal value = 0;
  HPReal estimate = 0;
  int used = 0;
  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const HPReal mid = (p.lo + p.hi) / 2;
    HPReal left = panel(f, rule, p.lo, mid);
    HPReal right = panel(f, rule, mid, p.hi);
    const HPReal refined = left + right;
    const HPReal diff = bmp::abs(refined - p.whole);
    const HPReal allowance = half_tol * (p.hi - p.lo) / length;
    if (diff <= allowance || diff <= floor_eps * bmp::abs(refined)) {
      value += refined;
      estimate += diff;
      continue;
    }
    if (++used > max_panels) {
      throw NumericError("quadrature exceeded its panel budget", (value + refined).convert_to<double>());
    }
    stack.push_back({mid, p.hi, std::move(right)});
    stack.push_back({p.lo, mid, std::move(left)});
  }
  out.value = value;
  out.error_bound = estimate + tail;
  return out;
}

}  // namespace watermelon::special
