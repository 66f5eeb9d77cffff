#include "braidtk/classify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace braidtk {

nlohmann::json CensusEntry::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["permutation"] = perm.cycle_str();
  j["word"] = word_to_string(word);
  j["crossings"] = crossings;
  j["class_id"] = class_id;
  j["knot"] = knot.to_json();
  return j;
}

int ClassReport::entry_count() const {
  int c = 0;
  for (const auto& cl : classes) c += static_cast<int>(cl.members.size());
  return c;
}

nlohmann::json ClassReport::to_json(const std::vector<CensusEntry>& entries) const {
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& cl : classes) {
    nlohmann::json jc;
    jc["class_id"] = cl.class_id;
    jc["size"] = cl.members.size();
    jc["knot"] = cl.knot.to_json();
    jc["representative"] = entries[cl.representative].to_json();
    nlohmann::json mem = nlohmann::json::array();
    for (int idx : cl.members) mem.push_back(entries[idx].perm.cycle_str());
    jc["members"] = std::move(mem);
    cls.push_back(std::move(jc));
  }
  return {{"crossings", crossings}, {"classes", cls}};
}

int Census::class_count() const {
  int c = 0;
  for (const auto& r : reports) c += static_cast<int>(r.classes.size());
  return c;
}

std::map<int, int> Census::crossing_histogram() const {
  std::map<int, int> h;
  for (const auto& e : entries) ++h[e.crossings];
  return h;
}

std::vector<int> Census::class_sizes(int crossings) const {
  for (const auto& r : reports)
    if (r.crossings == crossings) {
      std::vector<int> sizes;
      for (const auto& cl : r.classes) sizes.push_back(static_cast<int>(cl.members.size()));
      return sizes;
    }
  return {};
}

std::vector<CensusEntry> census_entries(int n, int max_n) {
  std::vector<CensusEntry> out;
  for (auto& eb : enumerate_ncycle_braids(n, max_n)) {
    CensusEntry e;
    e.n = n;
    e.crossings = eb.crossings;
    e.knot = identify_knot(eb.word);
    e.perm = std::move(eb.perm);
    e.word = std::move(eb.word);
    out.push_back(std::move(e));
  }
  return out;
}

Census classify(int n, int max_n, std::size_t summit_cap) {
  Census census;
  census.n = n;
  census.entries = census_entries(n, max_n);

  struct FoundClass {
    int class_id;
    SummitSet sset;
  };
  std::map<std::pair<int, std::string>, std::vector<FoundClass>> found;
  int next_class = 0;
  for (auto& e : census.entries) {
    const std::pair<int, std::string> key{e.crossings, burau_char_poly(e.word).str()};
    auto& bucket = found[key];
    for (const auto& fc : bucket) {
      if (are_conjugate(fc.sset, e.word).conjugate) {
        e.class_id = fc.class_id;
        break;
      }
    }
    if (e.class_id < 0) {
      bucket.push_back({next_class, SummitSet::compute(e.word, summit_cap)});
      e.class_id = next_class++;
    }
  }

  std::map<int, std::map<int, ConjugacyClass>> by_crossings;  // crossings -> class_id -> class
  for (size_t i = 0; i < census.entries.size(); ++i) {
    const auto& e = census.entries[i];
    ConjugacyClass& cl = by_crossings[e.crossings][e.class_id];
    if (cl.members.empty()) {
      cl.class_id = e.class_id;
      cl.representative = static_cast<int>(i);
      cl.knot = e.knot;
    } else if (!cl.knot.same_knot(e.knot)) {
      throw std::logic_error("knot identification differs inside a conjugacy class");
    }
    cl.members.push_back(static_cast<int>(i));
  }
  for (auto& [crossings, classes] : by_crossings) {
    ClassReport r;
    r.n = n;
    r.crossings = crossings;
    for (auto& [id, cl] : classes) r.classes.push_back(std::move(cl));
    census.reports.push_back(std::move(r));
  }
  return census;
}

int unknot_count(int n, int max_n) {
  int c = 0;
  for (const auto& e : census_entries(n, max_n))
    if (e.knot.type == KnotId::Type::Unknot) ++c;
  return c;
}

namespace {

BraidWord staircase(int n) {
  std::vector<int> ls(n - 1);
  for (int i = 0; i < n - 1; ++i) ls[i] = i + 1;
  return BraidWord(n, std::move(ls));
}

CheckReport verify_class_against(const BraidWord& ref, const std::vector<CensusEntry>& entries,
                                 const std::function<bool(const CensusEntry&)>& pick,
                                 const std::string& what, std::size_t summit_cap) {
  CheckReport rep;
  std::ostringstream log;
  SummitSet ss = SummitSet::compute(ref, summit_cap);
  rep.ok = true;
  int count = 0;
  for (const auto& e : entries) {
    if (!pick(e)) continue;
    ++count;
    if (!are_conjugate(ss, e.word).conjugate) {
      rep.ok = false;
      log << "FAIL " << e.perm.cycle_str() << " not conjugate to " << what << "\n";
    }
  }
  log << (rep.ok ? "PASS" : "FAIL") << ": " << count << " candidate braids against " << what
      << " (summit size " << ss.size() << ")\n";
  rep.log = log.str();
  return rep;
}

}  // namespace

CheckReport verify_theorem_1(int n, int max_n, std::size_t summit_cap) {
  return verify_class_against(
      staircase(n), census_entries(n, max_n),
      [](const CensusEntry& e) { return e.knot.type == KnotId::Type::Unknot; },
      "the staircase word on " + std::to_string(n) + " strings", summit_cap);
}

CheckReport verify_theorem_2(int n, int max_n, std::size_t summit_cap) {
  BraidWord ref = staircase(n);
  ref.letters.insert(ref.letters.begin(), {1, 1});
  const KnotId trefoil = KnotId::torus(2, 3);
  return verify_class_against(
      ref, census_entries(n, max_n),
      [&](const CensusEntry& e) { return e.knot.same_knot(trefoil); },
      "sigma_1^3 sigma_2 .. sigma_" + std::to_string(n - 1), summit_cap);
}

CheckReport verify_theorem_4(int n, int max_n, std::size_t summit_cap) {
  const int k = (n - 1) / 2;
  BraidWord ref = permutation_to_braid(reversal_permutation(n));
  for (int j = 1; j <= k; ++j) ref.letters.push_back(-j);
  const int crossings = n * (n - 1) / 2 - k;
  auto entries = census_entries(n, max_n);
  const int max_seen = entries.empty() ? 0 : entries.back().crossings;
  CheckReport rep = verify_class_against(
      ref, entries, [&](const CensusEntry& e) { return e.crossings == crossings; },
      "delta_" + std::to_string(n) + " with " + std::to_string(k) + " generators undone",
      summit_cap);
  if (max_seen != crossings) {
    rep.ok = false;
    rep.log += "FAIL: census maximum " + std::to_string(max_seen) + " != " +
               std::to_string(crossings) + "\n";
  }
  return rep;
}

BraidWord beta_family(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
  std::vector<int> ls;
  for (int j = 1; j < i; ++j) ls.push_back(j);
  ls.insert(ls.end(), {i, i, i});
  for (int j = i + 1; j <= n - 1; ++j) ls.push_back(j);
  return BraidWord(n, std::move(ls));
}

CheckReport verify_theorem_6(int n, std::size_t summit_cap) {
  CheckReport rep;
  rep.ok = true;
  std::ostringstream log;
  std::vector<BraidWord> words;
  std::vector<LaurentPoly2> chars;
  std::vector<SummitSet> sets;
  for (int i = 1; i <= n - 1; ++i) {
    words.push_back(beta_family(n, i));
    chars.push_back(burau_char_poly(words.back()));
    sets.push_back(SummitSet::compute(words.back(), summit_cap));
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int k = i + 1; k <= n - 1; ++k) {
      const bool expected = (k == n - i);
      const bool got = are_conjugate(sets[i - 1], words[k - 1]).conjugate;
      if (got != expected) {
        rep.ok = false;
        log << "FAIL beta(" << i << ") vs beta(" << k << "): got "
            << (got ? "conjugate" : "not conjugate") << "\n";
      }
      if (!expected && chars[i - 1] == chars[k - 1]) {
        rep.ok = false;
        log << "FAIL beta(" << i << ") vs beta(" << k << "): char polynomials agree\n";
      }
    }
  log << (rep.ok ? "PASS" : "FAIL") << ": beta family pairwise conjugacy on " << n
      << " strings matches k = i or k = n - i\n";
  rep.log = log.str();
  return rep;
}

std::vector<KnotId> closure_component_knots(const BraidWord& w) {
  const Permutation p = word_to_permutation(w);
  std::vector<char> seen(w.strands + 1, 0);
  std::vector<KnotId> out;
  for (int j = 1; j <= w.strands; ++j) {
    if (seen[j]) continue;
    std::set<int> keep;
    int c = j;
    while (!seen[c]) {
      seen[c] = 1;
      keep.insert(c);
      c = p(c);
    }
    out.push_back(identify_knot(delete_strands(w, keep)));
  }
  return out;
}

NonConjugacyDemo nonconjugate_pair_demo(std::size_t summit_cap) {
  NonConjugacyDemo d;
  d.beta = BraidWord(6, {1, 3, 5, 2, 4, 1, 3, 2, 1});
  d.gamma = BraidWord(6, {2, 4, 3, 5, 2, 4, 1, 3, 2});
  d.beta_perm = word_to_permutation(d.beta);
  d.gamma_perm = word_to_permutation(d.gamma);
  d.beta_knot = identify_knot(d.beta);
  d.gamma_knot = identify_knot(d.gamma);
  d.conjugate = are_conjugate(d.beta, d.gamma, summit_cap).conjugate;
  d.beta_char = burau_char_poly(d.beta);
  d.gamma_char = burau_char_poly(d.gamma);
  d.beta_square_components = closure_component_knots(braid_power(d.beta, 2));
  d.gamma_square_components = closure_component_knots(braid_power(d.gamma, 2));

  const KnotId t25 = KnotId::torus(2, 5), t23 = KnotId::torus(2, 3), unk = KnotId::unknot();
  auto all_same = [](const std::vector<KnotId>& ks, const KnotId& want) {
    return ks.size() == 2 && ks[0].same_knot(want) && ks[1].same_knot(want);
  };
  d.all_checks = !d.conjugate && d.beta_knot.same_knot(t25) && d.gamma_knot.same_knot(t25) &&
                 all_same(d.beta_square_components, t23) &&
                 all_same(d.gamma_square_components, unk) && !(d.beta_char == d.gamma_char);
  return d;
}

std::string NonConjugacyDemo::render() const {
  std::ostringstream out;
  auto knot_list = [](const std::vector<KnotId>& ks) {
    std::string s;
    for (size_t i = 0; i < ks.size(); ++i) {
      if (i) s += ", ";
      s += ks[i].name();
    }
    return s;
  };
  out << "beta  = " << word_to_string(beta) << "   permutation " << beta_perm.cycle_str()
      << "\n";
  out << "gamma = " << word_to_string(gamma) << "   permutation " << gamma_perm.cycle_str()
      << "\n";
  out << "closures: " << beta_knot.name() << " and " << gamma_knot.name() << "\n";
  out << "conjugate: " << (conjugate ? "true" : "false") << "\n";
  out << "char poly beta:  " << beta_char.str() << "\n";
  out << "char poly gamma: " << gamma_char.str() << "\n";
  out << "squared closure components: beta -> " << knot_list(beta_square_components)
      << "; gamma -> " << knot_list(gamma_square_components) << "\n";
  out << (all_checks ? "all checks hold" : "CHECK FAILURE") << "\n";
  return out.str();
}

std::string census_jsonl(const Census& census) {
  std::string out;
  for (const auto& e : census.entries) {
    out += e.to_json().dump();
    out += '\n';
  }
  return out;
}

std::string word_sigma_str(const BraidWord& w) {
  if (w.letters.empty()) return "e";
  std::ostringstream out;
  const bool packed = w.strands <= 9 && w.positive();
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i && !packed) out << ' ';
    const int k = w.letters[i];
    out << "σ" << std::abs(k);
    if (k < 0) out << "^-1";
  }
  return out.str();
}

std::string entries_markdown(const std::vector<CensusEntry>& entries) {
  std::ostringstream out;
  out << "| Permutation | Braid word | Number of crossings |\n";
  out << "| --- | --- | --- |\n";
  for (const auto& e : entries)
    out << "| " << e.perm.cycle_str() << " | " << word_sigma_str(e.word) << " | " << e.crossings
        << " |\n";
  return out.str();
}

std::string census_markdown(const Census& census) {
  std::ostringstream out;
  out << "# Census n=" << census.n << ": " << census.entries.size() << " braids, "
      << census.class_count() << " classes\n";
  for (const auto& r : census.reports) {
    out << "\n## " << r.crossings << " crossings: " << r.classes.size() << " class"
        << (r.classes.size() == 1 ? "" : "es") << ", " << r.entry_count() << " braids\n\n";
    out << "| Class | Size | Knot | Representative permutation | Representative word |\n";
    out << "| --- | --- | --- | --- | --- |\n";
    for (const auto& cl : r.classes) {
      const auto& rep = census.entries[cl.representative];
      out << "| " << cl.class_id << " | " << cl.members.size() << " | " << cl.knot.name()
          << " | " << rep.perm.cycle_str() << " | " << word_sigma_str(rep.word) << " |\n";
    }
  }
  return out.str();
}

}  // namespace braidtk
