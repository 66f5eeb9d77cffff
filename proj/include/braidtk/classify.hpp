#pragma once

#include "braidtk/garside.hpp"
#include "braidtk/invariants.hpp"

namespace braidtk {

struct CensusEntry {
  int n = 0;
  Permutation perm;
  BraidWord word;  // canonical positive word
  int crossings = 0;
  int class_id = -1;  // global within the census of one n, -1 when unclassified
  KnotId knot;

  nlohmann::json to_json() const;
};

struct ConjugacyClass {
  int class_id = -1;
  std::vector<int> members;  // indices into Census::entries, ascending
  int representative = -1;   // smallest member index
  KnotId knot;
};

struct ClassReport {
  int n = 0;
  int crossings = 0;
  std::vector<ConjugacyClass> classes;

  int entry_count() const;
  nlohmann::json to_json(const std::vector<CensusEntry>& entries) const;
};

struct Census {
  int n = 0;
  std::vector<CensusEntry> entries;  // sorted by crossings, then image
  std::vector<ClassReport> reports;  // ascending crossing number

  int class_count() const;
  std::map<int, int> crossing_histogram() const;
  std::vector<int> class_sizes(int crossings) const;  // in class id order
};

/// Census of n-cycle positive permutation braids with knot identifications,
/// without the conjugacy partition.
std::vector<CensusEntry> census_entries(int n, int max_n = 8);

/// Full conjugacy classification of the census.  Classes are numbered in
/// order of their smallest member.  Grouping uses cheap invariants first
/// (crossings, char poly), and every merge is confirmed through summit sets;
/// matching polynomials alone never merge a class.
Census classify(int n, int max_n = 8, std::size_t summit_cap = kDefaultSummitCap);

/// Number of census entries whose closure is the unknot.
int unknot_count(int n, int max_n = 8);

struct CheckReport {
  bool ok = false;
  std::string log;
};

/// Statement 1: every census braid closing to the unknot is conjugate to
/// the staircase word sigma_1 sigma_2 ... sigma_{n-1}.
CheckReport verify_theorem_1(int n, int max_n = 8, std::size_t summit_cap = kDefaultSummitCap);

/// Statement 2: every census braid closing to the trefoil is conjugate to
/// sigma_1^3 sigma_2 ... sigma_{n-1}.
CheckReport verify_theorem_2(int n, int max_n = 8, std::size_t summit_cap = kDefaultSummitCap);

/// Statement 4: with k = (n-1)/2 rounded down, every census braid of maximal
/// crossing number n(n-1)/2 - k is conjugate to delta_n s_1^{-1} ... s_k^{-1}.
CheckReport verify_theorem_4(int n, int max_n = 8, std::size_t summit_cap = kDefaultSummitCap);

/// sigma_1 ... sigma_{i-1} sigma_i^3 sigma_{i+1} ... sigma_{n-1}.
BraidWord beta_family(int n, int i);

/// Statement 6: beta_family(n, i) and beta_family(n, k) are conjugate exactly
/// when k = i or k = n - i; char polynomials distinguish every other pair.
CheckReport verify_theorem_6(int n, std::size_t summit_cap = kDefaultSummitCap);

/// Two 9-crossing positive permutation braids on 6 strings with the same
/// closure knot that are not conjugate, with the evidence separating them.
struct NonConjugacyDemo {
  BraidWord beta, gamma;
  Permutation beta_perm, gamma_perm;
  KnotId beta_knot, gamma_knot;
  bool conjugate = true;
  LaurentPoly2 beta_char, gamma_char;
  std::vector<KnotId> beta_square_components, gamma_square_components;
  bool all_checks = false;

  std::string render() const;
};

NonConjugacyDemo nonconjugate_pair_demo(std::size_t summit_cap = kDefaultSummitCap);

/// Component knots of the closure of w, one per permutation cycle, each
/// obtained by deleting the other strings.
std::vector<KnotId> closure_component_knots(const BraidWord& w);

// ---- exports ----

/// One JSON object per census entry, newline separated.
std::string census_jsonl(const Census& census);

/// Table with the columns Permutation | Braid word | Number of crossings.
std::string entries_markdown(const std::vector<CensusEntry>& entries);

/// Per-crossing class listing with representatives, sizes, knots.
std::string census_markdown(const Census& census);

/// Generator-subscript rendering used in tables: "σ2σ1".
std::string word_sigma_str(const BraidWord& w);

}  // namespace braidtk
