#include "braidtk/selfcheck.hpp"

#include <random>
#include <sstream>

#include "braidtk/classify.hpp"
#include "braidtk/garside.hpp"
#include "braidtk/invariants.hpp"

namespace braidtk {

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

BraidWord random_word(Rng& rng, int n, int max_len) {
  const int len = rand_int(rng, 0, max_len);
  std::vector<int> ls;
  ls.reserve(len);
  for (int i = 0; i < len; ++i) {
    int k = rand_int(rng, 1, n - 1);
    ls.push_back(rand_int(rng, 0, 1) ? k : -k);
  }
  return BraidWord(n, std::move(ls));
}

// One random rewrite by a defining relation or a free cancellation move.
// Always returns a word representing the same group element.
BraidWord random_rewrite(Rng& rng, const BraidWord& w) {
  const int n = w.strands;
  for (int attempt = 0; attempt < 12; ++attempt) {
    BraidWord r = w;
    auto& ls = r.letters;
    switch (rand_int(rng, 0, 3)) {
      case 0: {  // far commutation
        std::vector<int> spots;
        for (size_t i = 0; i + 1 < ls.size(); ++i)
          if (std::abs(std::abs(ls[i]) - std::abs(ls[i + 1])) >= 2)
            spots.push_back(static_cast<int>(i));
        if (spots.empty()) break;
        const int i = spots[rand_int(rng, 0, static_cast<int>(spots.size()) - 1)];
        std::swap(ls[i], ls[i + 1]);
        return r;
      }
      case 1: {  // braid relation aba -> bab on a same-sign triple
        std::vector<int> spots;
        for (size_t i = 0; i + 2 < ls.size(); ++i) {
          const int a = ls[i], b = ls[i + 1];
          if (ls[i + 2] == a && std::abs(std::abs(a) - std::abs(b)) == 1 &&
              ((a > 0) == (b > 0)))
            spots.push_back(static_cast<int>(i));
        }
        if (spots.empty()) break;
        const int i = spots[rand_int(rng, 0, static_cast<int>(spots.size()) - 1)];
        std::swap(ls[i], ls[i + 1]);
        ls[i + 2] = ls[i];
        return r;
      }
      case 2: {  // free insertion
        const int pos = rand_int(rng, 0, static_cast<int>(ls.size()));
        int k = rand_int(rng, 1, n - 1);
        if (rand_int(rng, 0, 1)) k = -k;
        ls.insert(ls.begin() + pos, {k, -k});
        return r;
      }
      default: {  // free cancellation
        std::vector<int> spots;
        for (size_t i = 0; i + 1 < ls.size(); ++i)
          if (ls[i] == -ls[i + 1]) spots.push_back(static_cast<int>(i));
        if (spots.empty()) break;
        const int i = spots[rand_int(rng, 0, static_cast<int>(spots.size()) - 1)];
        ls.erase(ls.begin() + i, ls.begin() + i + 2);
        return r;
      }
    }
  }
  return w;
}

}  // namespace

PropertyResult run_property_suites(std::uint64_t seed, const PropertyCounts& counts) {
  PropertyResult res;
  res.ok = true;
  std::ostringstream log;
  Rng rng(seed);

  int rewrites_applied = 0;
  for (int round = 0; round < counts.rewrite_rounds; ++round) {
    const int n = rand_int(rng, 2, 6);
    const BraidWord w = random_word(rng, n, 14);
    const BraidWord v = random_rewrite(rng, w);
    if (!(v == w)) ++rewrites_applied;
    if (!(word_to_permutation(v) == word_to_permutation(w)) ||
        !(normal_form(v) == normal_form(w)) ||
        !burau_equal(reduced_burau(v), reduced_burau(w))) {
      res.ok = false;
      log << "FAIL rewrite round " << round << ": " << word_to_string(w) << " vs "
          << word_to_string(v) << "\n";
    }
  }
  log << (res.ok ? "PASS" : "FAIL") << ": relation invariance, " << counts.rewrite_rounds
      << " rounds (" << rewrites_applied << " nontrivial rewrites)\n";

  bool conj_ok = true;
  for (int round = 0; round < counts.conjugation_rounds; ++round) {
    const int n = rand_int(rng, 2, 6);
    const BraidWord w = random_word(rng, n, 10);
    const BraidWord u = random_word(rng, n, 6);
    if (!(burau_char_poly(conjugated(w, u)) == burau_char_poly(w))) {
      conj_ok = false;
      log << "FAIL conjugation round " << round << ": " << word_to_string(w) << " by "
          << word_to_string(u) << "\n";
    }
  }
  res.ok = res.ok && conj_ok;
  log << (conj_ok ? "PASS" : "FAIL") << ": char poly conjugation invariance, "
      << counts.conjugation_rounds << " rounds\n";

  bool alex_ok = true;
  int census_knots = 0;
  for (int n = 2; n <= counts.census_max_n; ++n) {
    for (const auto& e : enumerate_ncycle_braids(n, counts.census_max_n)) {
      ++census_knots;
      const LaurentPoly1 a = alexander_of_closure(e.word);
      if (!(a == a.mirrored()) || a.eval_at_one() != 1) {
        alex_ok = false;
        log << "FAIL alexander on " << word_to_string(e.word) << "\n";
      }
    }
  }
  res.ok = res.ok && alex_ok;
  log << (alex_ok ? "PASS" : "FAIL") << ": alexander symmetry and value 1 at t=1 on "
      << census_knots << " census knots\n";

  res.log = log.str();
  return res;
}

}  // namespace braidtk
