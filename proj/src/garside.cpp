#include "braidtk/garside.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

namespace braidtk {

SimpleFactor delta(int n) { return SimpleFactor(reversal_permutation(n)); }

Permutation tau_perm(const Permutation& p) {
  const int n = p.size();
  Permutation r;
  r.image.resize(n);
  for (int j = 1; j <= n; ++j) r.image[j - 1] = n + 1 - p(n + 1 - j);
  return r;
}

SimpleFactor tau(const SimpleFactor& f) { return SimpleFactor(tau_perm(f.perm)); }

SimpleFactor right_complement(const SimpleFactor& f) {
  return SimpleFactor(f.perm.inverse().then(reversal_permutation(f.strands())));
}

SimpleFactor left_complement(const SimpleFactor& f) {
  const int n = f.strands();
  const Permutation inv = f.perm.inverse();
  Permutation r;
  r.image.resize(n);
  for (int j = 1; j <= n; ++j) r.image[j - 1] = inv(n + 1 - j);
  return SimpleFactor(std::move(r));
}

std::vector<int> starting_set(const Permutation& p) {
  std::vector<int> s;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) s.push_back(i);
  return s;
}

std::vector<int> finishing_set(const Permutation& p) { return starting_set(p.inverse()); }

Permutation simple_meet(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch in meet");
  const int n = a.size();
  std::vector<int> ra = a.image, rb = b.image, m(n);
  std::iota(m.begin(), m.end(), 1);
  for (;;) {
    int i = 0;
    while (i + 1 < n && !(ra[i] > ra[i + 1] && rb[i] > rb[i + 1])) ++i;
    if (i + 1 >= n) break;
    // append sigma_{i+1} to the prefix, strip it from both remainders
    for (int& v : m) {
      if (v == i + 1)
        v = i + 2;
      else if (v == i + 2)
        v = i + 1;
    }
    std::swap(ra[i], ra[i + 1]);
    std::swap(rb[i], rb[i + 1]);
  }
  return Permutation(std::move(m));
}

bool left_weighted(const Permutation& a, const Permutation& b) {
  return simple_meet(right_complement(SimpleFactor(a)).perm, b).is_identity();
}

namespace {

// delta sigma_k^{-1} as a permutation braid; its image is the reversal with
// the entries carrying values k, k+1 (at positions n-k, n-k+1) swapped
Permutation delta_over_sigma(int n, int k) {
  Permutation p = reversal_permutation(n);
  std::swap(p.image[n - k - 1], p.image[n - k]);
  return p;
}

Permutation sigma_perm(int n, int k) {
  Permutation p(n);
  std::swap(p.image[k - 1], p.image[k]);
  return p;
}

NormalForm make_normal(int n, int inf, std::vector<Permutation> fs) {
  const Permutation d = reversal_permutation(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < fs.size();) {
      if (fs[i].is_identity()) {
        fs.erase(fs.begin() + i);
        changed = true;
        continue;
      }
      if (fs[i] == d) {
        for (size_t j = 0; j < i; ++j) fs[j] = tau_perm(fs[j]);
        fs.erase(fs.begin() + i);
        ++inf;
        changed = true;
        continue;
      }
      ++i;
    }
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      Permutation s = simple_meet(right_complement(SimpleFactor(fs[i])).perm, fs[i + 1]);
      if (!s.is_identity()) {
        fs[i] = fs[i].then(s);
        fs[i + 1] = s.inverse().then(fs[i + 1]);
        changed = true;
      }
    }
  }
  return NormalForm{n, inf, std::move(fs)};
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands;
  int inf = 0;
  std::vector<Permutation> fs;
  fs.reserve(w.letters.size());
  for (int letter : w.letters) {
    if (letter > 0) {
      fs.push_back(sigma_perm(n, letter));
    } else {
      for (auto& f : fs) f = tau_perm(f);
      --inf;
      fs.push_back(delta_over_sigma(n, -letter));
    }
  }
  return make_normal(n, inf, std::move(fs));
}

BraidWord NormalForm::to_word() const {
  BraidWord w(strands, {});
  const BraidWord d = permutation_to_braid(reversal_permutation(strands));
  const BraidWord dinv = d.inverse();
  for (int i = 0; i < std::abs(inf); ++i) w = w * (inf > 0 ? d : dinv);
  for (const auto& f : factors) w = w * permutation_to_braid(f);
  return w;
}

nlohmann::json NormalForm::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : factors) fs.push_back(f.image);
  return {{"n", strands}, {"inf", inf}, {"factors", fs}};
}

NormalForm NormalForm::from_json(const nlohmann::json& j) {
  NormalForm nf;
  nf.strands = j.at("n").get<int>();
  nf.inf = j.at("inf").get<int>();
  const Permutation d = reversal_permutation(nf.strands);
  for (const auto& img : j.at("factors")) {
    Permutation p(img.get<std::vector<int>>());
    if (p.size() != nf.strands) throw std::invalid_argument("factor size mismatch");
    if (p.is_identity() || p == d) throw std::invalid_argument("improper canonical factor");
    nf.factors.push_back(std::move(p));
  }
  for (size_t i = 0; i + 1 < nf.factors.size(); ++i)
    if (!left_weighted(nf.factors[i], nf.factors[i + 1]))
      throw std::invalid_argument("factors are not left weighted");
  return nf;
}

bool equal_in_group(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  return normal_form(a) == normal_form(b);
}

ConjugationStep cycling(const NormalForm& nf) {
  if (nf.factors.empty()) return {nf, BraidWord(nf.strands, {})};
  Permutation moved = (nf.inf % 2 != 0) ? tau_perm(nf.factors.front()) : nf.factors.front();
  std::vector<Permutation> fs(nf.factors.begin() + 1, nf.factors.end());
  fs.push_back(moved);
  return {make_normal(nf.strands, nf.inf, std::move(fs)), permutation_to_braid(moved)};
}

ConjugationStep decycling(const NormalForm& nf) {
  if (nf.factors.empty()) return {nf, BraidWord(nf.strands, {})};
  const Permutation& last = nf.factors.back();
  Permutation moved = (nf.inf % 2 != 0) ? tau_perm(last) : last;
  std::vector<Permutation> fs;
  fs.reserve(nf.factors.size());
  fs.push_back(std::move(moved));
  fs.insert(fs.end(), nf.factors.begin(), nf.factors.end() - 1);
  return {make_normal(nf.strands, nf.inf, std::move(fs)),
          permutation_to_braid(last).inverse()};
}

SummitCertificate summit_element(const BraidWord& w) {
  NormalForm nf = normal_form(w);
  BraidWord conj(w.strands, {});
  for (bool improved = true; improved;) {
    improved = false;
    {
      std::set<NormalForm> seen;
      NormalForm cur = nf;
      BraidWord cconj = conj;
      while (cur.canonical_length() > 0 && seen.insert(cur).second) {
        auto [nxt, u] = cycling(cur);
        BraidWord nconj = cconj * u;
        if (nxt.inf > nf.inf) {
          nf = std::move(nxt);
          conj = std::move(nconj);
          improved = true;
          break;
        }
        cur = std::move(nxt);
        cconj = std::move(nconj);
      }
    }
    if (improved) continue;
    {
      std::set<NormalForm> seen;
      NormalForm cur = nf;
      BraidWord cconj = conj;
      while (cur.canonical_length() > 0 && seen.insert(cur).second) {
        auto [nxt, u] = decycling(cur);
        BraidWord nconj = cconj * u;
        if (nxt.inf > nf.inf || nxt.sup() < nf.sup()) {
          nf = std::move(nxt);
          conj = std::move(nconj);
          improved = true;
          break;
        }
        cur = std::move(nxt);
        cconj = std::move(nconj);
      }
    }
  }
  return {std::move(nf), std::move(conj)};
}

const std::vector<Permutation>& all_simples(int n) {
  static std::map<int, std::vector<Permutation>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  while (std::next_permutation(img.begin(), img.end())) out.push_back(Permutation(img));
  std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    const int ia = a.inversions(), ib = b.inversions();
    if (ia != ib) return ia < ib;
    return a.image < b.image;
  });
  return cache.emplace(n, std::move(out)).first->second;
}

SummitSet SummitSet::compute(const BraidWord& w, std::size_t cap) {
  SummitSet ss;
  ss.origin_ = w;
  SummitCertificate cert = summit_element(w);
  ss.inf_ = cert.representative.inf;
  ss.sup_ = cert.representative.sup();
  std::deque<NormalForm> queue;
  ss.members_.emplace(cert.representative, cert.conjugator);
  queue.push_back(std::move(cert.representative));
  const auto& simples = all_simples(w.strands);
  while (!queue.empty()) {
    NormalForm v = std::move(queue.front());
    queue.pop_front();
    const BraidWord vw = v.to_word();
    const BraidWord vwit = ss.members_.at(v);
    for (const Permutation& s : simples) {
      const BraidWord sw = permutation_to_braid(s);
      NormalForm nf = normal_form(sw.inverse() * vw * sw);
      if (nf.inf > ss.inf_ || (nf.inf == ss.inf_ && nf.sup() < ss.sup_))
        throw std::logic_error("summit invariant violated");
      if (nf.inf != ss.inf_ || nf.sup() != ss.sup_) continue;
      if (ss.members_.count(nf)) continue;
      if (ss.members_.size() >= cap)
        throw ResourceCapError("summit set exceeds cap of " + std::to_string(cap));
      ss.members_.emplace(nf, vwit * sw);
      queue.push_back(std::move(nf));
    }
  }
  return ss;
}

const BraidWord& SummitSet::witness(const NormalForm& m) const {
  auto it = members_.find(m);
  if (it == members_.end()) throw std::out_of_range("not a summit set member");
  return it->second;
}

nlohmann::json SummitSet::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, wit] : members_) arr.push_back(m.to_json());
  return arr;
}

namespace {

std::vector<int> sorted_cycle_type(const Permutation& p) {
  std::vector<int> t(p.size(), 0);
  std::vector<char> seen(p.size() + 1, 0);
  std::vector<int> lens;
  for (int j = 1; j <= p.size(); ++j) {
    if (seen[j]) continue;
    int len = 0, c = j;
    while (!seen[c]) {
      seen[c] = 1;
      ++len;
      c = p(c);
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

}  // namespace

ConjugacyResult are_conjugate(const SummitSet& sa, const BraidWord& b) {
  if (sa.strands() != b.strands) throw std::invalid_argument("strand count mismatch");
  if (writhe(sa.origin()) != writhe(b)) return {false, std::nullopt};
  if (sorted_cycle_type(word_to_permutation(sa.origin())) !=
      sorted_cycle_type(word_to_permutation(b)))
    return {false, std::nullopt};
  SummitCertificate cb = summit_element(b);
  if (cb.representative.inf != sa.summit_inf() || cb.representative.sup() != sa.summit_sup())
    return {false, std::nullopt};
  if (!sa.contains(cb.representative)) return {false, std::nullopt};
  BraidWord u = sa.witness(cb.representative) * cb.conjugator.inverse();
  if (!equal_in_group(conjugated(sa.origin(), u), b))
    throw std::logic_error("conjugacy witness failed verification");
  return {true, std::move(u)};
}

ConjugacyResult are_conjugate(const BraidWord& a, const BraidWord& b, std::size_t cap) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  if (writhe(a) != writhe(b)) return {false, std::nullopt};
  if (sorted_cycle_type(word_to_permutation(a)) != sorted_cycle_type(word_to_permutation(b)))
    return {false, std::nullopt};
  return are_conjugate(SummitSet::compute(a, cap), b);
}

}  // namespace braidtk
