// Copyright 2026 The Phrasecat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PHRASECAT_TESTS_SUPPORT_SUPPORT_H_
#define PHRASECAT_TESTS_SUPPORT_SUPPORT_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "phrasecat/catalogue.h"
#include "phrasecat/selection.h"

namespace phrasecat::testing {

std::string read_file(const std::string& path);
std::string fixture_path(const std::string& name);
Catalogue load_fixture(const std::string& name);

struct GeneratorOptions {
  std::size_t max_phrases = 4;
  std::size_t max_segments = 6;
  std::size_t max_options = 4;
  std::size_t max_sub_segments = 3;
  double split_probability = 0.25;
};

// A random catalogue that passes lint with no findings at all.
Catalogue random_catalogue(std::mt19937_64& rng,
                           const GeneratorOptions& options = {});

// A uniformly chosen option at every decision point, slots included.
Selection random_selection(const Catalogue& catalogue, const Phrase& phrase,
                           std::mt19937_64& rng);

// Every complete selection of a phrase, by direct recursion over the
// catalogue. Order is unspecified.
std::vector<Selection> naive_selections(const Catalogue& catalogue,
                                        const Phrase& phrase);

// Phrase whose segment i offers option_counts[i] single-word options in
// every language.
Phrase flat_phrase(const std::string& id,
                   const std::vector<std::size_t>& option_counts,
                   const std::vector<LanguageCode>& languages);

}  // namespace phrasecat::testing

#endif  // PHRASECAT_TESTS_SUPPORT_SUPPORT_H_
