#pragma once

#include <cstdint>
#include <string>

namespace braidtk {

struct PropertyCounts {
  int rewrite_rounds = 1000;      // one random relation rewrite per round
  int conjugation_rounds = 500;   // random conjugations of random words
  int census_max_n = 7;           // closure polynomial sweep over the census
};

struct PropertyResult {
  bool ok = false;
  std::string log;
};

/// Seeded randomized property suites: braid-relation invariance of
/// word_to_permutation, normal_form and reduced_burau; conjugation
/// invariance of burau_char_poly; Alexander symmetry and value 1 at t=1
/// across the census.
PropertyResult run_property_suites(std::uint64_t seed, const PropertyCounts& counts = {});

}  // namespace braidtk
