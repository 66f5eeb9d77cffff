#pragma once

#include <optional>

#include "braidtk/braid.hpp"
#include "braidtk/laurent.hpp"

namespace braidtk {

/// Row-convention matrices: row i holds the image of basis vector e_i, and
/// matrix_of(w1 w2) = matrix_of(w1) * matrix_of(w2).
using BurauMatrix = std::vector<std::vector<LaurentPoly1>>;

/// Reduced Burau matrix, size (n-1) x (n-1).
BurauMatrix reduced_burau(const BraidWord& w);

BurauMatrix burau_product(const BurauMatrix& a, const BurauMatrix& b);
bool burau_equal(const BurauMatrix& a, const BurauMatrix& b);

LaurentPoly1 burau_det(const BurauMatrix& m);

/// det(x m - 1), without unit normalization.
LaurentPoly2 char_poly(const BurauMatrix& m);

/// Unit-normalized characteristic polynomial of the reduced Burau matrix,
/// a conjugacy invariant of the braid.
LaurentPoly2 burau_char_poly(const BraidWord& w);

/// Alexander polynomial of the closure, normalized to value 1 at t = 1 with
/// a symmetric exponent window.  Throws std::domain_error when the closure
/// has more than one component.
LaurentPoly1 alexander_of_closure(const BraidWord& w);

/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized the same way.
LaurentPoly1 torus_knot_alexander(int p, int q);

/// Genus of the closure of a positive braid word with knot closure:
/// (crossings - strings + 1) / 2.  Throws std::domain_error otherwise.
int genus_of_positive_closure(const BraidWord& w);

struct KnotId {
  enum class Type { Unknot, Torus, ConnectedSum, Unidentified };

  Type type = Type::Unidentified;
  int p = 0, q = 0;             // torus parameters
  std::vector<KnotId> summands;  // connected sum parts
  LaurentPoly1 alexander;
  std::optional<int> genus;

  static KnotId unknot();
  static KnotId torus(int p, int q);
  static KnotId connected_sum(std::vector<KnotId> parts);

  /// Identification label only, ignoring the carried invariants.
  bool same_knot(const KnotId& o) const;

  std::string name() const;  // "unknot", "T(2,5)", "T(2,3) # T(2,3)", "unidentified"
  nlohmann::json to_json() const;
};

/// Identify the closure knot by its Alexander polynomial against a table of
/// torus knots and connected sums of up to three of them; the genus of a
/// positive word is cross-checked.  Unmatched closures come back as
/// Unidentified carrying their invariants.
KnotId identify_knot(const BraidWord& w);

}  // namespace braidtk
