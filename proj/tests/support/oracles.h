// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_TESTS_SUPPORT_ORACLES_H_
#define PHRASECAT_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phrasecat/evalstats/survey.h"

namespace phrasecat::testing {

// Upper chi-square tail by adaptive quadrature of the density.
double chi2_sf_by_quadrature(double x, int df);

// Two-sided Student t tail by quadrature of the density.
double student_t_two_sided_by_quadrature(double t, double df);

struct PermutationResult {
  double u = 0;
  double p = 0;
};

// Mann-Whitney U by pairwise comparison, and the two-sided p-value from
// visiting every split of the pooled values into groups of |a| and |b|.
PermutationResult mwu_by_enumeration(std::span<const double> a,
                                     std::span<const double> b);

// Survey with the given numbers of (old, new) items per language, split
// into participants of `items_per_participant` rows. Ratings are drawn
// from 1..5 with a mild bias towards high values.
std::vector<evalstats::SurveyResponse> synthetic_survey(
    std::mt19937_64& rng,
    const std::map<evalstats::LanguageCode, std::pair<std::size_t, std::size_t>>&
        items_per_origin,
    std::size_t items_per_participant = 20);

// The survey written back out in the ingest CSV format.
std::string survey_to_csv(std::span<const evalstats::SurveyResponse> responses);

}  // namespace phrasecat::testing

#endif  // PHRASECAT_TESTS_SUPPORT_ORACLES_H_
