// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_EVALSTATS_DISTRIBUTIONS_H_
#define PHRASECAT_EVALSTATS_DISTRIBUTIONS_H_

namespace phrasecat::evalstats {

// Regularized lower and upper incomplete gamma functions P(a, x), Q(a, x).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Regularized incomplete beta function I_x(a, b).
double regularized_beta(double x, double a, double b);

// Upper tail of the chi-square distribution with `df` degrees of freedom.
double chi2_sf(double x, int df);

// Upper tail of the standard normal distribution.
double normal_sf(double z);

// P(|T| >= |t|) for Student's t with (possibly fractional) df.
double student_t_two_sided(double t, double df);

}  // namespace phrasecat::evalstats

#endif  // PHRASECAT_EVALSTATS_DISTRIBUTIONS_H_
