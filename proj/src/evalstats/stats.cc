// Copyright 2026 The Rarelex Authors.
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

#include "evalstats/stats.h"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <vector>

#include "common/error.h"

namespace rarelex::evalstats {

double Mean(std::span<const double> x) {
  if (x.empty()) throw InvalidArgument("mean of an empty sequence");
  double sum = 0.0;
  for (double v : x) sum += v;
  return sum / static_cast<double>(x.size());
}

namespace {

double SumSquaredDeviations(std::span<const double> x, double mean) {
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return ss;
}

bool IsConstant(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(),
                     [&](double v) { return v == x.front(); });
}

// Continued fraction for I_x(a, b), modified Lentz.
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxIterations = 10000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) return h;
  }
  throw Error(ErrorCode::kInternal,
              "incomplete beta continued fraction did not converge");
}

}  // namespace

double PopulationStd(std::span<const double> x) {
  const double m = Mean(x);
  return std::sqrt(SumSquaredDeviations(x, m) / static_cast<double>(x.size()));
}

double SampleStd(std::span<const double> x) {
  if (x.size() < 2) throw InvalidArgument("sample std needs n >= 2");
  const double m = Mean(x);
  return std::sqrt(SumSquaredDeviations(x, m) /
                   static_cast<double>(x.size() - 1));
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InvalidArgument("pearson: inputs differ in length (" +
                          std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) throw InvalidArgument("pearson: need at least 2 points");
  if (IsConstant(x) || IsConstant(y)) throw InvalidArgument("zero variance");
  const double mx = Mean(x);
  const double my = Mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) throw InvalidArgument("zero variance");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidArgument("incomplete beta: a and b must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidArgument("incomplete beta: x must lie in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - front * BetaContinuedFraction(b, a, 1.0 - x) / b;
}

double StudentTTwoTailedP(double t, double dof) {
  if (!(dof > 0.0)) throw InvalidArgument("degrees of freedom must be > 0");
  if (std::isnan(t)) throw InvalidArgument("t statistic is NaN");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  const double x = dof / (dof + t * t);
  return RegularizedIncompleteBeta(0.5 * dof, 0.5, x);
}

double StudentTCdf(double t, double dof) {
  if (t == 0.0) {
    if (!(dof > 0.0)) throw InvalidArgument("degrees of freedom must be > 0");
    return 0.5;
  }
  const double tail = 0.5 * StudentTTwoTailedP(t, dof);
  return t > 0.0 ? 1.0 - tail : tail;
}

TTestResult PairedTTest(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("paired t-test: inputs differ in length (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  const size_t n = a.size();
  if (n < 2) throw InvalidArgument("paired t-test needs n >= 2");
  std::vector<double> d(n);
  double scale = 0.0;
  for (size_t i = 0; i < n; ++i) {
    d[i] = a[i] - b[i];
    scale = std::max({scale, std::fabs(a[i]), std::fabs(b[i])});
  }
  const double mean = Mean(d);
  const double sd = SampleStd(d);
  // Differences are only known to within the rounding of the inputs.
  const double zero_tolerance = 64.0 * DBL_EPSILON * scale;
  if (sd <= zero_tolerance) {
    if (std::fabs(mean) <= zero_tolerance) return {0.0, 1.0};
    return {mean > 0 ? std::numeric_limits<double>::infinity()
                     : -std::numeric_limits<double>::infinity(),
            0.0};
  }
  const double t = mean / (sd / std::sqrt(static_cast<double>(n)));
  return {t, StudentTTwoTailedP(t, static_cast<double>(n - 1))};
}

}  // namespace rarelex::evalstats
