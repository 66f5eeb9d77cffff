#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace braidtk {

/// Permutation of {1..n}, stored as the image vector: image[j-1] is where
/// strand j (read at the top of a braid diagram) ends up at the bottom.
struct Permutation {
  std::vector<int> image;

  Permutation() = default;
  explicit Permutation(int n);                 // identity
  explicit Permutation(std::vector<int> img);  // validated

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int j) const { return image[j - 1]; }
  bool is_identity() const;

  /// Composition in diagram order: (this then q)(j) = q(this(j)).
  Permutation then(const Permutation& q) const;
  Permutation inverse() const;

  int inversions() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, min element first
  int cycle_count() const;                       // counts fixed points too
  bool is_n_cycle() const;

  /// Cycle notation like "(1 4 2 3)" or "()"; single digits pack as "(1423)".
  std::string cycle_str() const;

  auto operator<=>(const Permutation&) const = default;
};

/// The reversal j -> n+1-j, the permutation of the half twist.
Permutation reversal_permutation(int n);

/// Braid word on `strands` strings.  Letter k > 0 is the positive elementary
/// crossing of strings at positions k, k+1; letter -k is its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);  // validated

  int length() const { return static_cast<int>(letters.size()); }
  bool positive() const;
  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& o) const;  // concatenation
  bool operator==(const BraidWord&) const = default;
};

Permutation word_to_permutation(const BraidWord& w);

/// Canonical positive word of the permutation braid of p: repeatedly emit the
/// generator at the leftmost descent.  Length equals the inversion count.
BraidWord permutation_to_braid(const Permutation& p);

/// True when w is positive and every pair of strings crosses at most once.
bool is_permutation_braid(const BraidWord& w);

int writhe(const BraidWord& w);

/// Number of components of the closure = cycles of the permutation.
int closure_component_count(const BraidWord& w);

BraidWord braid_power(const BraidWord& w, int m);

/// u^{-1} w u.
BraidWord conjugated(const BraidWord& w, const BraidWord& u);

/// Sub-braid on the strings of w passing through the kept top positions,
/// renumbered in order.  Throws std::invalid_argument on an empty or out of
/// range keep set.
BraidWord delete_strands(const BraidWord& w, const std::set<int>& keep);

struct EnumeratedBraid {
  Permutation perm;
  BraidWord word;
  int crossings;
};

/// All permutation braids on n strings whose permutation is an n-cycle
/// (single component closure), sorted by crossing number then by image.
/// Throws std::out_of_range unless 2 <= n <= max_n.
std::vector<EnumeratedBraid> enumerate_ncycle_braids(int n, int max_n = 8);

// ---- text formats ----

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// "n=6 1 3 5 2 4 1 3 2 1"; header optional when strands is passed or the
/// count can be inferred as 1 + max generator index.
BraidWord parse_braid_word(std::string_view text, std::optional<int> strands = {});
std::string word_to_string(const BraidWord& w, bool with_header = true);

/// Accepts cycle notation "(1 4 2 3)(5 6)" / "(1423)" or a one-line image
/// "4 3 5 2 6 1".  n is inferred (max entry seen, or image length) unless given.
Permutation parse_permutation(std::string_view text, std::optional<int> n = {});

nlohmann::json word_to_json(const BraidWord& w);
BraidWord word_from_json(const nlohmann::json& j);

}  // namespace braidtk
