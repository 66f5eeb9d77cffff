#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "braidtk/braid.hpp"

namespace braidtk {

/// A permutation braid viewed as a Garside canonical factor.
struct SimpleFactor {
  Permutation perm;

  SimpleFactor() = default;
  explicit SimpleFactor(Permutation p) : perm(std::move(p)) {}

  int strands() const { return perm.size(); }
  int crossings() const { return perm.inversions(); }
  bool is_identity() const { return perm.is_identity(); }
  bool is_delta() const { return perm == reversal_permutation(perm.size()); }
  BraidWord word() const { return permutation_to_braid(perm); }

  auto operator<=>(const SimpleFactor&) const = default;
};

/// Half twist on n strings.
SimpleFactor delta(int n);

Permutation tau_perm(const Permutation& p);  // conjugation by the half twist
SimpleFactor tau(const SimpleFactor& f);

/// r with f r = delta.
SimpleFactor right_complement(const SimpleFactor& f);
/// l with l f = delta.
SimpleFactor left_complement(const SimpleFactor& f);

/// S(p): positions i where a positive word for p can start with sigma_i.
std::vector<int> starting_set(const Permutation& p);
/// F(p): positions i where a positive word for p can end with sigma_i.
std::vector<int> finishing_set(const Permutation& p);

/// Greatest common left prefix of two permutation braids.
Permutation simple_meet(const Permutation& a, const Permutation& b);

/// F(a) contains S(b), the pair test of the canonical form.
bool left_weighted(const Permutation& a, const Permutation& b);

/// Left canonical form delta^inf a_1 ... a_k with each a_i a proper
/// nonidentity factor and each adjacent pair left weighted.
struct NormalForm {
  int strands = 1;
  int inf = 0;
  std::vector<Permutation> factors;

  int canonical_length() const { return static_cast<int>(factors.size()); }
  int sup() const { return inf + canonical_length(); }
  BraidWord to_word() const;

  auto operator<=>(const NormalForm&) const = default;

  nlohmann::json to_json() const;  // {"n":, "inf":, "factors": [[image], ...]}
  static NormalForm from_json(const nlohmann::json& j);
};

NormalForm normal_form(const BraidWord& w);

/// Both words represent the same group element (same strand count required).
bool equal_in_group(const BraidWord& a, const BraidWord& b);

struct ConjugationStep {
  NormalForm result;
  BraidWord conjugator;  // conjugator^{-1} w conjugator = result
};

/// Move the leading canonical factor to the end.
ConjugationStep cycling(const NormalForm& nf);
/// Move the final canonical factor to the front.
ConjugationStep decycling(const NormalForm& nf);

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultSummitCap = 100000;

struct SummitCertificate {
  NormalForm representative;
  BraidWord conjugator;  // conjugator^{-1} w conjugator = representative
};

/// One super summit element of w, reached by cycling and decycling.
SummitCertificate summit_element(const BraidWord& w);

/// All nonidentity permutation braids on n strings, sorted by crossing
/// number then by image.
const std::vector<Permutation>& all_simples(int n);

/// Super summit set: all conjugates with maximal inf and minimal sup,
/// closed under conjugation by simple elements.
class SummitSet {
 public:
  static SummitSet compute(const BraidWord& w, std::size_t cap = kDefaultSummitCap);

  int strands() const { return origin_.strands; }
  int summit_inf() const { return inf_; }
  int summit_sup() const { return sup_; }
  std::size_t size() const { return members_.size(); }
  const BraidWord& origin() const { return origin_; }

  bool contains(const NormalForm& m) const { return members_.count(m) > 0; }
  /// u with u^{-1} origin u = m.
  const BraidWord& witness(const NormalForm& m) const;

  /// member -> witness, ordered by member.
  const std::map<NormalForm, BraidWord>& entries() const { return members_; }

  nlohmann::json to_json() const;  // sorted array of member normal forms

 private:
  BraidWord origin_;
  int inf_ = 0, sup_ = 0;
  std::map<NormalForm, BraidWord> members_;
};

struct ConjugacyResult {
  bool conjugate;
  std::optional<BraidWord> witness;  // u with u^{-1} a u = b, verified
};

ConjugacyResult are_conjugate(const BraidWord& a, const BraidWord& b,
                              std::size_t cap = kDefaultSummitCap);
/// Variant reusing a precomputed summit set of the left element.
ConjugacyResult are_conjugate(const SummitSet& sa, const BraidWord& b);

}  // namespace braidtk
