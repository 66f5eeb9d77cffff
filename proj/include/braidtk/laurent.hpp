#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace braidtk {

using Int = mpz_class;

/// Laurent polynomial in one variable t with exact integer coefficients.
class LaurentPoly1 {
 public:
  LaurentPoly1() = default;
  LaurentPoly1(long constant) { if (constant != 0) c_[0] = constant; }
  explicit LaurentPoly1(const Int& constant) { if (constant != 0) c_[0] = constant; }
  LaurentPoly1(std::initializer_list<std::pair<int, long>> terms);

  static LaurentPoly1 monomial(Int coeff, int exp);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const;  // throws on zero
  int max_exp() const;
  Int coeff(int exp) const;
  size_t term_count() const { return c_.size(); }

  LaurentPoly1 operator-() const;
  LaurentPoly1 operator+(const LaurentPoly1& o) const;
  LaurentPoly1 operator-(const LaurentPoly1& o) const;
  LaurentPoly1 operator*(const LaurentPoly1& o) const;
  bool operator==(const LaurentPoly1& o) const = default;

  LaurentPoly1 shifted(int k) const;   // multiply by t^k
  LaurentPoly1 mirrored() const;       // t -> 1/t
  Int eval_at_one() const;

  /// Exact division; throws std::domain_error when the division does not
  /// come out exactly over Z[t, 1/t].
  LaurentPoly1 div_exact(const LaurentPoly1& d) const;

  std::string str() const;
  nlohmann::json to_json() const;  // [[coeff, exp], ...] by decreasing exp

  const std::map<int, Int>& terms() const { return c_; }

 private:
  std::map<int, Int> c_;  // exp -> coeff, zero coeffs never stored
  void trim();
};

/// Laurent polynomial in t and x, used for characteristic polynomials of
/// Burau matrices.  Term order for printing and serialization: x descending,
/// then t ascending.
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;
  LaurentPoly2(long constant) { if (constant != 0) c_[{0, 0}] = constant; }

  static LaurentPoly2 monomial(Int coeff, int t_exp, int x_exp);
  static LaurentPoly2 from_poly1(const LaurentPoly1& p);  // in the t variable

  bool is_zero() const { return c_.empty(); }
  Int coeff(int t_exp, int x_exp) const;
  size_t term_count() const { return c_.size(); }
  int max_x_exp() const;  // throws on zero

  LaurentPoly2 operator-() const;
  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  bool operator==(const LaurentPoly2& o) const = default;

  /// Coefficient of x^k as a polynomial in t alone.
  LaurentPoly1 x_coefficient(int k) const;

  /// Unit normalization: shift so the minimal t exponent and the minimal
  /// x exponent are both zero, then fix the sign so the (x, t)-lex leading
  /// coefficient is positive.
  LaurentPoly2 normalized() const;

  std::string str() const;
  nlohmann::json to_json() const;  // [[coeff, t_exp, x_exp], ...]

  const std::map<std::pair<int, int>, Int>& terms() const { return c_; }

 private:
  std::map<std::pair<int, int>, Int> c_;  // (t_exp, x_exp) -> coeff
  void trim();
};

nlohmann::json coeff_to_json(const Int& v);

}  // namespace braidtk
