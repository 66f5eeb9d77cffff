#include "braidtk/invariants.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>

namespace braidtk {

namespace {

BurauMatrix identity_matrix(int m) {
  BurauMatrix r(m, std::vector<LaurentPoly1>(m));
  for (int i = 0; i < m; ++i) r[i][i] = LaurentPoly1(1);
  return r;
}

BurauMatrix burau_generator(int n, int letter) {
  const int m = n - 1;
  const int k = std::abs(letter);
  BurauMatrix r = identity_matrix(m);
  const LaurentPoly1 t = LaurentPoly1::monomial(1, 1);
  const LaurentPoly1 tinv = LaurentPoly1::monomial(1, -1);
  // 1-based row/col k maps to index k-1
  auto at = [&](int i, int j) -> LaurentPoly1& { return r[i - 1][j - 1]; };
  if (letter > 0) {
    at(k, k) = -t;
    if (k - 1 >= 1) at(k - 1, k) = t;
    if (k + 1 <= m) at(k + 1, k) = LaurentPoly1(1);
  } else {
    at(k, k) = -tinv;
    if (k - 1 >= 1) at(k - 1, k) = LaurentPoly1(1);
    if (k + 1 <= m) at(k + 1, k) = tinv;
  }
  return r;
}

template <class P>
P det_expand(const std::vector<std::vector<P>>& m) {
  const int d = static_cast<int>(m.size());
  if (d == 0) return P(1);
  // minor expansion over column subsets, rows consumed top down
  std::vector<P> memo(size_t(1) << d);
  memo[0] = P(1);
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    const int row = d - std::popcount(mask);
    P acc;
    int sign = 1;
    for (int j = 0; j < d; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!m[row][j].is_zero()) {
        P term = m[row][j] * memo[mask & ~(1u << j)];
        acc = (sign > 0) ? acc + term : acc - term;
      }
      sign = -sign;  // parity of the column's rank within the mask
    }
    memo[mask] = std::move(acc);
  }
  return memo[(1u << d) - 1];
}

}  // namespace

BurauMatrix burau_product(const BurauMatrix& a, const BurauMatrix& b) {
  const int m = static_cast<int>(a.size());
  BurauMatrix r(m, std::vector<LaurentPoly1>(m));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] = r[i][j] + a[i][k] * b[k][j];
      }
    }
  return r;
}

bool burau_equal(const BurauMatrix& a, const BurauMatrix& b) { return a == b; }

BurauMatrix reduced_burau(const BraidWord& w) {
  BurauMatrix r = identity_matrix(w.strands - 1);
  for (int letter : w.letters) r = burau_product(r, burau_generator(w.strands, letter));
  return r;
}

LaurentPoly1 burau_det(const BurauMatrix& m) { return det_expand<LaurentPoly1>(m); }

LaurentPoly2 char_poly(const BurauMatrix& m) {
  const int d = static_cast<int>(m.size());
  std::vector<std::vector<LaurentPoly2>> a(d, std::vector<LaurentPoly2>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      for (const auto& [e, c] : m[i][j].terms())
        a[i][j] = a[i][j] + LaurentPoly2::monomial(c, e, 1);
      if (i == j) a[i][j] = a[i][j] - LaurentPoly2(1);
    }
  return det_expand<LaurentPoly2>(a);
}

LaurentPoly2 burau_char_poly(const BraidWord& w) {
  return char_poly(reduced_burau(w)).normalized();
}

namespace {

LaurentPoly1 normalize_alexander(LaurentPoly1 q) {
  if (q.is_zero()) throw std::domain_error("zero alexander polynomial");
  if (q.eval_at_one() == -1) q = -q;
  if (q.eval_at_one() != 1) throw std::domain_error("alexander normalization failed");
  const int lo = q.min_exp(), hi = q.max_exp();
  if ((lo + hi) % 2 != 0) throw std::domain_error("alexander exponent window is odd");
  q = q.shifted(-(lo + hi) / 2);
  if (!(q == q.mirrored())) throw std::domain_error("alexander polynomial is not symmetric");
  return q;
}

LaurentPoly1 cyclotomic_like(int k) {  // 1 + t + ... + t^{k-1}
  LaurentPoly1 r;
  for (int i = 0; i < k; ++i) r = r + LaurentPoly1::monomial(1, i);
  return r;
}

}  // namespace

LaurentPoly1 alexander_of_closure(const BraidWord& w) {
  const int comps = closure_component_count(w);
  if (comps != 1)
    throw std::domain_error("closure has " + std::to_string(comps) + " components");
  BurauMatrix m = reduced_burau(w);
  const int d = static_cast<int>(m.size());
  for (int i = 0; i < d; ++i) m[i][i] = m[i][i] - LaurentPoly1(1);
  const LaurentPoly1 num = det_expand<LaurentPoly1>(m);
  return normalize_alexander(num.div_exact(cyclotomic_like(w.strands)));
}

LaurentPoly1 torus_knot_alexander(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus knot parameters must be coprime and at least 2");
  auto cyc = [](int k) {  // t^k - 1
    return LaurentPoly1::monomial(1, k) - LaurentPoly1(1);
  };
  const LaurentPoly1 num = cyc(p * q) * cyc(1);
  const LaurentPoly1 den = cyc(p) * cyc(q);
  return normalize_alexander(num.div_exact(den));
}

int genus_of_positive_closure(const BraidWord& w) {
  if (!w.positive()) throw std::domain_error("word is not positive");
  if (closure_component_count(w) != 1) throw std::domain_error("closure is not a knot");
  return (w.length() - w.strands + 1) / 2;
}

KnotId KnotId::unknot() {
  KnotId k;
  k.type = Type::Unknot;
  k.alexander = LaurentPoly1(1);
  k.genus = 0;
  return k;
}

KnotId KnotId::torus(int p, int q) {
  KnotId k;
  k.type = Type::Torus;
  k.p = std::min(p, q);
  k.q = std::max(p, q);
  k.alexander = torus_knot_alexander(p, q);
  k.genus = (p - 1) * (q - 1) / 2;
  return k;
}

KnotId KnotId::connected_sum(std::vector<KnotId> parts) {
  KnotId k;
  k.type = Type::ConnectedSum;
  k.alexander = LaurentPoly1(1);
  int g = 0;
  for (const auto& part : parts) {
    k.alexander = k.alexander * part.alexander;
    g += part.genus.value_or(0);
  }
  k.genus = g;
  std::sort(parts.begin(), parts.end(), [](const KnotId& a, const KnotId& b) {
    return std::pair(a.p, a.q) < std::pair(b.p, b.q);
  });
  k.summands = std::move(parts);
  return k;
}

bool KnotId::same_knot(const KnotId& o) const {
  if (type != o.type) return false;
  switch (type) {
    case Type::Unknot:
      return true;
    case Type::Torus:
      return p == o.p && q == o.q;
    case Type::ConnectedSum: {
      if (summands.size() != o.summands.size()) return false;
      for (size_t i = 0; i < summands.size(); ++i)
        if (!summands[i].same_knot(o.summands[i])) return false;
      return true;
    }
    case Type::Unidentified:
      return alexander == o.alexander;
  }
  return false;
}

std::string KnotId::name() const {
  switch (type) {
    case Type::Unknot:
      return "unknot";
    case Type::Torus:
      return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Type::ConnectedSum: {
      std::string s;
      for (size_t i = 0; i < summands.size(); ++i) {
        if (i) s += " # ";
        s += summands[i].name();
      }
      return s;
    }
    case Type::Unidentified:
      return "unidentified";
  }
  return "unidentified";
}

nlohmann::json KnotId::to_json() const {
  nlohmann::json j;
  switch (type) {
    case Type::Unknot:
      j["type"] = "unknot";
      break;
    case Type::Torus:
      j["type"] = "torus";
      j["p"] = p;
      j["q"] = q;
      break;
    case Type::ConnectedSum: {
      j["type"] = "connected_sum";
      nlohmann::json parts = nlohmann::json::array();
      for (const auto& s : summands) {
        nlohmann::json part;
        part["type"] = "torus";
        part["p"] = s.p;
        part["q"] = s.q;
        parts.push_back(std::move(part));
      }
      j["summands"] = std::move(parts);
      break;
    }
    case Type::Unidentified:
      j["type"] = "unidentified";
      break;
  }
  j["name"] = name();
  j["alexander"] = alexander.to_json();
  if (genus)
    j["genus"] = *genus;
  else
    j["genus"] = nullptr;
  return j;
}

namespace {

// closures of positive braids in the census have genus at most 8; the table
// holds every torus knot in that range and all sums of up to three of them
constexpr int kTableGenusCap = 8;

const std::vector<KnotId>& knot_table() {
  static std::vector<KnotId> table;
  static std::once_flag once;
  std::call_once(once, [] {
    std::vector<KnotId> base;
    for (int p = 2; p <= 4; ++p)
      for (int q = p + 1; (p - 1) * (q - 1) / 2 <= kTableGenusCap; ++q)
        if (std::gcd(p, q) == 1) base.push_back(KnotId::torus(p, q));
    table.push_back(KnotId::unknot());
    for (const auto& k : base) table.push_back(k);
    const size_t nb = base.size();
    for (size_t i = 0; i < nb; ++i)
      for (size_t j = i; j < nb; ++j) {
        KnotId s = KnotId::connected_sum({base[i], base[j]});
        if (*s.genus <= kTableGenusCap) table.push_back(std::move(s));
      }
    for (size_t i = 0; i < nb; ++i)
      for (size_t j = i; j < nb; ++j)
        for (size_t k = j; k < nb; ++k) {
          KnotId s = KnotId::connected_sum({base[i], base[j], base[k]});
          if (*s.genus <= kTableGenusCap) table.push_back(std::move(s));
        }
  });
  return table;
}

}  // namespace

KnotId identify_knot(const BraidWord& w) {
  const LaurentPoly1 alex = alexander_of_closure(w);
  std::optional<int> genus;
  if (w.positive()) genus = genus_of_positive_closure(w);
  for (const KnotId& entry : knot_table()) {
    if (!(entry.alexander == alex)) continue;
    if (genus && entry.genus && *genus != *entry.genus) continue;
    return entry;
  }
  KnotId out;
  out.type = KnotId::Type::Unidentified;
  out.alexander = alex;
  out.genus = genus;
  return out;
}

}  // namespace braidtk
