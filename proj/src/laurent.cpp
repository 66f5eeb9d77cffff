#include "braidtk/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace braidtk {

nlohmann::json coeff_to_json(const Int& v) {
  if (v.fits_slong_p()) return nlohmann::json(v.get_si());
  return nlohmann::json(v.get_str());
}

LaurentPoly1::LaurentPoly1(std::initializer_list<std::pair<int, long>> terms) {
  for (const auto& [e, c] : terms) c_[e] += c;
  trim();
}

LaurentPoly1 LaurentPoly1::monomial(Int coeff, int exp) {
  LaurentPoly1 p;
  if (coeff != 0) p.c_[exp] = std::move(coeff);
  return p;
}

void LaurentPoly1::trim() {
  for (auto it = c_.begin(); it != c_.end();)
    it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

int LaurentPoly1::min_exp() const {
  if (c_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly1::max_exp() const {
  if (c_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

Int LaurentPoly1::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentPoly1 LaurentPoly1::operator+(const LaurentPoly1& o) const {
  LaurentPoly1 r = *this;
  for (const auto& [e, c] : o.c_) r.c_[e] += c;
  r.trim();
  return r;
}

LaurentPoly1 LaurentPoly1::operator-(const LaurentPoly1& o) const {
  LaurentPoly1 r = *this;
  for (const auto& [e, c] : o.c_) r.c_[e] -= c;
  r.trim();
  return r;
}

LaurentPoly1 LaurentPoly1::operator*(const LaurentPoly1& o) const {
  LaurentPoly1 r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
  r.trim();
  return r;
}

LaurentPoly1 LaurentPoly1::shifted(int k) const {
  LaurentPoly1 r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

LaurentPoly1 LaurentPoly1::mirrored() const {
  LaurentPoly1 r;
  for (const auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

Int LaurentPoly1::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

LaurentPoly1 LaurentPoly1::div_exact(const LaurentPoly1& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  const int q_min_bound = min_exp() - d.min_exp();
  LaurentPoly1 rem = *this, q;
  while (!rem.is_zero()) {
    const int e = rem.max_exp() - d.max_exp();
    if (e < q_min_bound) throw std::domain_error("inexact polynomial division");
    const Int& lead = rem.c_.rbegin()->second;
    const Int& dlead = d.c_.rbegin()->second;
    if (!mpz_divisible_p(lead.get_mpz_t(), dlead.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    LaurentPoly1 term = monomial(lead / dlead, e);
    q = q + term;
    rem = rem - term * d;
  }
  return q;
}

namespace {

std::string coeff_prefix(const Int& a) {
  // magnitude part of a printed coefficient, "" when |a| == 1
  return a == 1 ? std::string() : a.get_str() + "*";
}

void append_term(std::ostringstream& out, bool first, const Int& c, const std::string& mono) {
  Int a = abs(c);
  if (first)
    out << (c < 0 ? "-" : "");
  else
    out << (c < 0 ? " - " : " + ");
  if (mono.empty())
    out << a.get_str();
  else
    out << coeff_prefix(a) << mono;
}

std::string power(const char* var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly1::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    append_term(out, first, it->second, power("t", it->first));
    first = false;
  }
  return out.str();
}

nlohmann::json LaurentPoly1::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    arr.push_back({coeff_to_json(it->second), it->first});
  return arr;
}

LaurentPoly2 LaurentPoly2::monomial(Int coeff, int t_exp, int x_exp) {
  LaurentPoly2 p;
  if (coeff != 0) p.c_[{t_exp, x_exp}] = std::move(coeff);
  return p;
}

LaurentPoly2 LaurentPoly2::from_poly1(const LaurentPoly1& p) {
  LaurentPoly2 r;
  for (const auto& [e, c] : p.terms()) r.c_[{e, 0}] = c;
  return r;
}

void LaurentPoly2::trim() {
  for (auto it = c_.begin(); it != c_.end();)
    it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

Int LaurentPoly2::coeff(int t_exp, int x_exp) const {
  auto it = c_.find({t_exp, x_exp});
  return it == c_.end() ? Int(0) : it->second;
}

int LaurentPoly2::max_x_exp() const {
  if (c_.empty()) throw std::domain_error("max_x_exp of zero polynomial");
  int m = c_.begin()->first.second;
  for (const auto& [k, c] : c_) m = std::max(m, k.second);
  return m;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [k, c] : c_) r.c_[k] = -c;
  return r;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.c_) r.c_[k] += c;
  r.trim();
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.c_) r.c_[k] -= c;
  r.trim();
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& [k1, c1] : c_)
    for (const auto& [k2, c2] : o.c_)
      r.c_[{k1.first + k2.first, k1.second + k2.second}] += c1 * c2;
  r.trim();
  return r;
}

LaurentPoly1 LaurentPoly2::x_coefficient(int k) const {
  LaurentPoly1 r;
  for (const auto& [key, c] : c_)
    if (key.second == k) r = r + LaurentPoly1::monomial(c, key.first);
  return r;
}

LaurentPoly2 LaurentPoly2::normalized() const {
  if (c_.empty()) return {};
  int tmin = c_.begin()->first.first, xmin = c_.begin()->first.second;
  std::pair<int, int> lead{-1, -1};  // (x, t) lex max
  for (const auto& [k, c] : c_) {
    tmin = std::min(tmin, k.first);
    xmin = std::min(xmin, k.second);
    lead = std::max(lead, {k.second, k.first});
  }
  const bool flip = c_.at({lead.second, lead.first}) < 0;
  LaurentPoly2 r;
  for (const auto& [k, c] : c_) {
    Int v = flip ? Int(-c) : c;
    r.c_[{k.first - tmin, k.second - xmin}] = std::move(v);
  }
  return r;
}

namespace {

// print key order: x descending, then t ascending
std::vector<std::pair<std::pair<int, int>, Int>> print_order(
    const std::map<std::pair<int, int>, Int>& m) {
  std::vector<std::pair<std::pair<int, int>, Int>> v(m.begin(), m.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first < b.first.first;
  });
  return v;
}

}  // namespace

std::string LaurentPoly2::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : print_order(c_)) {
    std::string mono = power("t", k.first);
    std::string xp = power("x", k.second);
    if (!mono.empty() && !xp.empty()) mono += "*";
    mono += xp;
    append_term(out, first, c, mono);
    first = false;
  }
  return out.str();
}

nlohmann::json LaurentPoly2::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : print_order(c_))
    arr.push_back({coeff_to_json(c), k.first, k.second});
  return arr;
}

}  // namespace braidtk
