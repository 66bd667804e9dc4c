// Copyright 2026 The TVDP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "support/oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>

#include "boost/math/quadrature/gauss_kronrod.hpp"

namespace tvdp::testing {
namespace {

using boost::math::quadrature::gauss_kronrod;

// Integrates `f` over [a, b] split at every point of `breaks` inside it.
double PiecewiseIntegral(const std::function<double(double)>& f, double a,
                         double b, std::vector<double> breaks) {
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = std::max(a, breaks[i]);
    const double hi = std::min(b, breaks[i + 1]);
    if (!(hi > lo)) continue;
    total += gauss_kronrod<double, 31>::integrate(f, lo, hi, 15, 1e-14);
  }
  return total;
}

int StaircaseSteps(double epsilon) {
  return static_cast<int>(std::ceil(15.0 * std::log(10.0) / epsilon)) + 2;
}

}  // namespace

double ErfNormalCdf(double x) {
  return 0.5 * (1.0 + std::erf(x / std::numbers::sqrt2));
}

double LaplaceTvByQuadrature(double epsilon, double sensitivity) {
  const double b = sensitivity / epsilon;
  auto pdf = [b](double x) { return std::exp(-std::abs(x) / b) / (2.0 * b); };
  auto diff = [&](double x) {
    return 0.5 * std::abs(pdf(x) - pdf(x - sensitivity));
  };
  const double reach = 40.0 * b;
  return PiecewiseIntegral(diff, -reach, sensitivity + reach,
                           {0.0, sensitivity / 2.0, sensitivity});
}

double GaussianTvByQuadrature(double mu) {
  auto pdf = [](double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  };
  auto diff = [&](double x) { return 0.5 * std::abs(pdf(x) - pdf(x - mu)); };
  const double reach = 40.0 + std::abs(mu);
  return PiecewiseIntegral(diff, -reach, reach, {0.0, mu / 2.0, mu});
}

double GaussianDeltaByQuadrature(double mu, double epsilon) {
  auto pdf = [](double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  };
  // phi(x) >= e^eps phi(x - mu) exactly when x <= cut.
  const double cut = (mu * mu - 2.0 * epsilon) / (2.0 * mu);
  auto integrand = [&](double x) {
    return std::max(0.0, pdf(x) - std::exp(epsilon) * pdf(x - mu));
  };
  const double lo = std::min(cut, 0.0) - 40.0;
  return PiecewiseIntegral(integrand, lo, cut, {cut - 1.0, cut - 5.0});
}

double StaircasePdf(double x, double gamma, double epsilon,
                    double sensitivity) {
  if (x < 0.0) return StaircasePdf(-x, gamma, epsilon, sensitivity);
  const double c = std::exp(-epsilon);
  const double a = (1.0 - c) /
                   (2.0 * sensitivity * (gamma + c * (1.0 - gamma)));
  if (x < gamma * sensitivity) return a;
  if (x < sensitivity) return c * a;
  const double k = std::floor(x / sensitivity);
  return std::exp(-k * epsilon) *
         StaircasePdf(x - k * sensitivity, gamma, epsilon, sensitivity);
}

double StaircaseMassByQuadrature(double gamma, double epsilon,
                                 double sensitivity) {
  const int steps = StaircaseSteps(epsilon);
  std::vector<double> breaks;
  for (int k = -steps; k <= steps; ++k) {
    breaks.push_back(k * sensitivity);
    breaks.push_back((k + gamma) * sensitivity);
    breaks.push_back((k - gamma) * sensitivity);
  }
  auto pdf = [&](double x) {
    return StaircasePdf(x, gamma, epsilon, sensitivity);
  };
  return PiecewiseIntegral(pdf, -steps * sensitivity, steps * sensitivity,
                           breaks);
}

double StaircaseTvByQuadrature(double gamma, double epsilon,
                               double sensitivity) {
  const int steps = StaircaseSteps(epsilon);
  std::vector<double> breaks;
  for (int k = -steps; k <= steps + 1; ++k) {
    for (double shift : {0.0, gamma, -gamma}) {
      breaks.push_back((k + shift) * sensitivity);
    }
  }
  auto diff = [&](double x) {
    return 0.5 * std::abs(StaircasePdf(x, gamma, epsilon, sensitivity) -
                          StaircasePdf(x - sensitivity, gamma, epsilon,
                                       sensitivity));
  };
  return PiecewiseIntegral(diff, -steps * sensitivity,
                           (steps + 1) * sensitivity, breaks);
}

RocOracle::RocOracle(std::span<const double> p0, std::span<const double> p1) {
  std::vector<size_t> order;
  long double total0 = 0.0L;
  long double total1 = 0.0L;
  for (size_t i = 0; i < p0.size(); ++i) {
    total0 += p0[i];
    total1 += p1[i];
    if (p0[i] > 0.0 || p1[i] > 0.0) order.push_back(i);
  }
  // a before b when p1[a] / p0[a] > p1[b] / p0[b].
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return static_cast<long double>(p1[a]) * p0[b] >
           static_cast<long double>(p1[b]) * p0[a];
  });
  long double rejected0 = 0.0L;
  long double rejected1 = 0.0L;
  points_.push_back({0.0, 1.0});
  for (size_t i : order) {
    rejected0 += p0[i];
    rejected1 += p1[i];
    points_.push_back({static_cast<double>(rejected0 / total0),
                       static_cast<double>(1.0L - rejected1 / total1)});
  }
}

double RocOracle::operator()(double t) const {
  // Leading outcomes with p0 = 0 stack several points at x = 0; the lowest
  // one is the value there.
  double best = 1.0;
  for (size_t i = 0; i < points_.size(); ++i) {
    const auto [x, y] = points_[i];
    if (x <= t) best = std::min(best, y);
    if (i + 1 < points_.size()) {
      const auto [x2, y2] = points_[i + 1];
      if (x <= t && t <= x2 && x2 > x) {
        best = std::min(best, y + (y2 - y) * (t - x) / (x2 - x));
      }
    }
  }
  return std::max(0.0, best);
}

std::vector<double> ProductMasses(std::span<const double> pmf, int k) {
  std::vector<double> out = {1.0};
  for (int step = 0; step < k; ++step) {
    std::vector<double> next;
    next.reserve(out.size() * pmf.size());
    for (double m : out) {
      for (double p : pmf) next.push_back(m * p);
    }
    out = std::move(next);
  }
  return out;
}

double HockeyStick(std::span<const double> p0, std::span<const double> p1,
                   double epsilon) {
  long double sum = 0.0L;
  const long double scale = std::exp(static_cast<long double>(epsilon));
  for (size_t i = 0; i < p0.size(); ++i) {
    const long double d = p0[i] - scale * p1[i];
    if (d > 0.0L) sum += d;
  }
  return static_cast<double>(sum);
}

long double KairouzDelta(double epsilon, double delta, int k, int i) {
  const long double e = epsilon;
  long double sum = 0.0L;
  for (int l = 0; l < i; ++l) {
    long double binom = 1.0L;
    for (int r = 0; r < l; ++r) binom = binom * (k - r) / (r + 1);
    sum += binom * (std::exp((k - l) * e) - std::exp((k - 2 * i + l) * e));
  }
  const long double inner = sum / std::pow(1.0L + std::exp(e), k);
  return 1.0L - std::pow(1.0L - delta, k) * (1.0L - inner);
}

}  // namespace tvdp::testing
