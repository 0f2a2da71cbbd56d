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

#ifndef RARELEX_EVALSTATS_STATS_H_
#define RARELEX_EVALSTATS_STATS_H_

#include <span>

namespace rarelex::evalstats {

double Mean(std::span<const double> x);
// Population standard deviation (denominator n).
double PopulationStd(std::span<const double> x);
// Sample standard deviation (denominator n - 1).
double SampleStd(std::span<const double> x);

// Product-moment correlation. Requires equal sizes >= 2 and non-constant
// inputs ("zero variance" otherwise).
double Pearson(std::span<const double> x, std::span<const double> y);

// Regularized incomplete beta I_x(a, b) for a, b > 0 and 0 <= x <= 1,
// evaluated with the modified-Lentz continued fraction (applied directly for
// x < (a+1)/(a+b+2) and through the I_x(a,b) = 1 - I_{1-x}(b,a) reflection
// otherwise). Converges to ~1e-15 relative; absolute error stays below
// 1e-10 over the range used here.
double RegularizedIncompleteBeta(double a, double b, double x);

// Student-t CDF with `dof` degrees of freedom. Exactly 0.5 at t = 0 and
// symmetric: cdf(-t) and 1 - cdf(t) differ only by the rounding of the
// final subtraction.
double StudentTCdf(double t, double dof);

// P(|T| >= |t|) = I_{dof/(dof+t^2)}(dof/2, 1/2).
double StudentTTwoTailedP(double t, double dof);

struct TTestResult {
  double t = 0.0;
  double p_two_tailed = 1.0;
};

// Paired two-tailed t-test on d = a - b with n - 1 degrees of freedom.
// When the differences have no spread (up to floating-point rounding of the
// inputs) the result is t = 0, p = 1 for a zero mean difference and
// t = +-inf, p = 0 otherwise.
TTestResult PairedTTest(std::span<const double> a, std::span<const double> b);

}  // namespace rarelex::evalstats

#endif  // RARELEX_EVALSTATS_STATS_H_
