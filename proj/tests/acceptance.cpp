// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <iostream>
#include <map>
#include <sstream>

#include "braidtk/classify.hpp"
#include "braidtk/selfcheck.hpp"
#include "conj_oracle.hpp"

using namespace braidtk;
using braidtk::testing::conjugate_closure;

namespace {

int g_failures = 0;
int g_index = 0;

void report(const std::string& label, bool ok, const std::string& detail = "") {
  ++g_index;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << g_index << "/11] " << label;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n" << std::flush;
  if (!ok) ++g_failures;
}

std::map<int, int> crossing_distribution(int n) {
  std::map<int, int> h;
  for (const auto& b : enumerate_ncycle_braids(n)) ++h[b.crossings];
  return h;
}

struct ClassShape {
  int size;
  std::string knot;
};

bool bucket_matches(const Census& census, int crossings, std::vector<ClassShape> want,
                    std::string& detail) {
  for (const auto& report : census.reports) {
    if (report.crossings != crossings) continue;
    std::vector<ClassShape> got;
    for (const auto& cls : report.classes)
      got.push_back({static_cast<int>(cls.members.size()), cls.knot.name()});
    auto key = [](const ClassShape& s) { return std::pair(s.size, s.knot); };
    std::sort(got.begin(), got.end(),
              [&](const ClassShape& a, const ClassShape& b) { return key(a) < key(b); });
    std::sort(want.begin(), want.end(),
              [&](const ClassShape& a, const ClassShape& b) { return key(a) < key(b); });
    if (got.size() != want.size()) {
      detail = "class count " + std::to_string(got.size());
      return false;
    }
    for (size_t i = 0; i < got.size(); ++i)
      if (key(got[i]) != key(want[i])) {
        detail = "size " + std::to_string(got[i].size) + " knot " + got[i].knot;
        return false;
      }
    return true;
  }
  detail = "no bucket at " + std::to_string(crossings) + " crossings";
  return false;
}

bool small_census_matches(int n, const std::vector<std::pair<int, std::vector<int>>>& buckets,
                          std::string& detail) {
  const Census census = classify(n);
  if (census.reports.size() != buckets.size()) {
    detail = "n=" + std::to_string(n) + " bucket count";
    return false;
  }
  for (size_t i = 0; i < buckets.size(); ++i) {
    if (census.reports[i].crossings != buckets[i].first ||
        census.class_sizes(buckets[i].first) != buckets[i].second) {
      detail = "n=" + std::to_string(n) + " at " + std::to_string(buckets[i].first) + " crossings";
      return false;
    }
  }
  return true;
}

// partition of short positive words by window-bounded brute-force search,
// compared against the summit-set partition
bool oracle_agreement(std::string& detail) {
  for (int n : {3, 4}) {
    std::map<NormalForm, BraidWord> universe;
    for (int len = 1; len <= 6; ++len) {
      std::vector<int> ls(len, 1);
      for (;;) {
        BraidWord w(n, ls);
        universe.emplace(normal_form(w), w);
        int i = len - 1;
        while (i >= 0 && ls[i] == n - 1) ls[i--] = 1;
        if (i < 0) break;
        ++ls[i];
      }
    }
    std::map<NormalForm, int> brute_class;
    int next_id = 0;
    for (const auto& [nf, w] : universe) {
      if (brute_class.count(nf)) continue;
      const int id = next_id++;
      for (const auto& reached : conjugate_closure(w, 1, 400000))
        if (universe.count(reached)) brute_class[reached] = id;
    }
    if (brute_class.size() != universe.size()) {
      detail = "brute partition misses elements at n=" + std::to_string(n);
      return false;
    }
    std::vector<std::pair<SummitSet, int>> reps;
    std::map<NormalForm, int> lib_class;
    for (const auto& [nf, w] : universe) {
      int id = -1;
      for (const auto& [ss, rid] : reps)
        if (are_conjugate(ss, w).conjugate) {
          id = rid;
          break;
        }
      if (id < 0) {
        id = static_cast<int>(reps.size());
        reps.emplace_back(SummitSet::compute(w), id);
      }
      lib_class[nf] = id;
    }
    for (const auto& [a, wa] : universe)
      for (const auto& [b, wb] : universe)
        if ((brute_class[a] == brute_class[b]) != (lib_class[a] == lib_class[b])) {
          detail = "disagreement at n=" + std::to_string(n) + " on " + word_to_string(wa) +
                   " vs " + word_to_string(wb);
          return false;
        }
  }
  return true;
}

}  // namespace

int main() {
  std::string detail;

  report("census n=6 crossing distribution {5:16, 7:32, 9:44, 11:22, 13:6}",
         crossing_distribution(6) ==
             std::map<int, int>{{5, 16}, {7, 32}, {9, 44}, {11, 22}, {13, 6}});

  report("census n=7 crossing distribution {6:32, 8:88, 10:176, 12:202, 14:134, 16:70, 18:18}",
         crossing_distribution(7) == std::map<int, int>{{6, 32},
                                                        {8, 88},
                                                        {10, 176},
                                                        {12, 202},
                                                        {14, 134},
                                                        {16, 70},
                                                        {18, 18}});

  {
    detail.clear();
    const bool ok = small_census_matches(2, {{1, {1}}}, detail) &&
                    small_census_matches(3, {{2, {2}}}, detail) &&
                    small_census_matches(4, {{3, {4}}, {5, {2}}}, detail) &&
                    small_census_matches(5, {{4, {8}}, {6, {10}}, {8, {6}}}, detail);
    report("conjugacy classes for n <= 5: one class per crossing number, sizes per the tables",
           ok, detail);
  }

  const Census c6 = classify(6);
  {
    detail.clear();
    const bool ok = bucket_matches(
        c6, 9, {{38, "T(2,5)"}, {4, "T(2,3) # T(2,3)"}, {2, "T(2,5)"}}, detail);
    report("n=6 nine-crossing classes {38, 4, 2} with knots T(2,5), granny, T(2,5)", ok, detail);
  }
  {
    detail.clear();
    const bool ok = bucket_matches(c6, 11, {{16, "T(2,7)"}, {6, "T(3,4)"}}, detail);
    report("n=6 eleven-crossing classes {16, 6} with knots T(2,7), T(3,4)", ok, detail);
  }

  {
    const NonConjugacyDemo demo = nonconjugate_pair_demo();
    const bool knots = demo.beta_knot.name() == "T(2,5)" && demo.gamma_knot.name() == "T(2,5)";
    const bool squares =
        demo.beta_square_components.size() == 2 && demo.gamma_square_components.size() == 2 &&
        demo.beta_square_components[0].name() == "T(2,3)" &&
        demo.beta_square_components[1].name() == "T(2,3)" &&
        demo.gamma_square_components[0].name() == "unknot" &&
        demo.gamma_square_components[1].name() == "unknot";
    report("the six-string pair: same closure T(2,5), not conjugate, squares separate them",
           !demo.conjugate && knots && squares && demo.all_checks);
  }

  {
    const std::string beta_want = "t^9*x^5 + t^7*x^4 + t^5*x^3 + t^4*x^2 + t^2*x + 1";
    const std::string gamma_want =
        "t^9*x^5 + t^7*x^4 - t^4*x^3 + 2*t^5*x^3 + 2*t^4*x^2 - t^5*x^2 + t^2*x + 1";
    const LaurentPoly2 pb = burau_char_poly(BraidWord(6, {1, 3, 5, 2, 4, 1, 3, 2, 1}));
    const LaurentPoly2 pg = burau_char_poly(BraidWord(6, {2, 4, 3, 5, 2, 4, 1, 3, 2}));
    report("burau characteristic polynomials of the pair, beta golden and gamma distinct",
           pb.str() == beta_want && pg.str() == gamma_want && !(pb == pg));
  }

  {
    detail.clear();
    bool ok = true;
    for (int n = 4; n <= 7 && ok; ++n)
      for (const auto& [tag, rep] :
           std::vector<std::pair<const char*, CheckReport>>{{"1", verify_theorem_1(n)},
                                                            {"2", verify_theorem_2(n)},
                                                            {"4", verify_theorem_4(n)}})
        if (!rep.ok) {
          ok = false;
          detail = std::string("statement ") + tag + " at n=" + std::to_string(n);
          break;
        }
    report("statements 1, 2 and 4 hold for n = 4..7", ok, detail);
  }

  {
    detail.clear();
    bool ok = true;
    for (int n : {4, 5, 6})
      if (!verify_theorem_6(n).ok) {
        ok = false;
        detail = "n=" + std::to_string(n);
        break;
      }
    report("statement 6 holds for n = 4, 5, 6", ok, detail);
  }

  {
    detail.clear();
    bool ok = true;
    for (int n = 2; n <= 8; ++n)
      if (unknot_count(n) != (1 << (n - 2))) {
        ok = false;
        detail = "n=" + std::to_string(n);
        break;
      }
    report("unknot counts 2^(n-2) for n = 2..8", ok, detail);
  }

  {
    const PropertyResult props = run_property_suites(20260814);
    detail.clear();
    bool oracle_ok = oracle_agreement(detail);
    report("property suites and brute-force conjugacy oracle agreement", props.ok && oracle_ok,
           props.ok ? detail : "property suites failed");
  }

  if (g_failures) {
    std::cout << g_failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
