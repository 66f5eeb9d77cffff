#include "braidtk/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "braidtk/classify.hpp"
#include "braidtk/selfcheck.hpp"

namespace braidtk {

namespace {

struct CliConfig {
  int max_n = 8;
  std::size_t summit_cap = kDefaultSummitCap;
  std::string format = "text";
  std::uint64_t seed = 20260814;
  std::optional<int> n;
};

nlohmann::json poly_json(const LaurentPoly1& p) {
  return {{"text", p.str()}, {"terms", p.to_json()}};
}

nlohmann::json poly_json(const LaurentPoly2& p) {
  return {{"text", p.str()}, {"terms", p.to_json()}};
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump() << "\n"; }

int cmd_perm2braid(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  const Permutation p = parse_permutation(text, cfg.n);
  const BraidWord w = permutation_to_braid(p);
  if (cfg.format == "json") {
    emit(out, {{"n", w.strands},
               {"word", word_to_string(w)},
               {"letters", w.letters},
               {"crossings", w.length()}});
  } else {
    out << word_to_string(w) << "\n";
  }
  return 0;
}

int cmd_braid2perm(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  const BraidWord w = parse_braid_word(text, cfg.n);
  const Permutation p = word_to_permutation(w);
  if (cfg.format == "json") {
    emit(out, {{"n", p.size()}, {"cycles", p.cycle_str()}, {"image", p.image}});
  } else {
    out << p.cycle_str() << "\n";
  }
  return 0;
}

int cmd_nf(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  const BraidWord w = parse_braid_word(text, cfg.n);
  const NormalForm nf = normal_form(w);
  if (cfg.format == "json") {
    emit(out, nf.to_json());
    return 0;
  }
  out << "word: " << word_to_string(w) << "\n";
  out << "inf: " << nf.inf << "\n";
  out << "sup: " << nf.sup() << "\n";
  out << "canonical_length: " << nf.canonical_length() << "\n";
  for (int i = 0; i < nf.canonical_length(); ++i) {
    const auto& f = nf.factors[i];
    out << "factor " << (i + 1) << ": " << f.cycle_str() << " = "
        << word_sigma_str(permutation_to_braid(f)) << "\n";
  }
  return 0;
}

int cmd_conj(const CliConfig& cfg, const std::string& ta, const std::string& tb,
             std::ostream& out) {
  const BraidWord a = parse_braid_word(ta, cfg.n);
  const BraidWord b = parse_braid_word(tb, cfg.n);
  if (a.strands != b.strands) throw std::invalid_argument("strand counts differ");
  const SummitSet sa = SummitSet::compute(a, cfg.summit_cap);
  const ConjugacyResult res = are_conjugate(sa, b);

  nlohmann::json j;
  j["conjugate"] = res.conjugate;
  if (res.conjugate) {
    j["witness"] = word_to_string(*res.witness);
    if (cfg.format == "json")
      emit(out, j);
    else {
      out << "conjugate: true\n";
      out << "witness: " << word_to_string(*res.witness) << "\n";
      out << "verified: u^-1 a u = b in the group\n";
    }
    return 0;
  }

  const SummitSet sb = SummitSet::compute(b, cfg.summit_cap);
  const LaurentPoly2 ca = burau_char_poly(a), cb = burau_char_poly(b);
  nlohmann::json ev;
  ev["summit_a"] = {{"inf", sa.summit_inf()}, {"sup", sa.summit_sup()}, {"size", sa.size()}};
  ev["summit_b"] = {{"inf", sb.summit_inf()}, {"sup", sb.summit_sup()}, {"size", sb.size()}};
  const bool same_window =
      sa.summit_inf() == sb.summit_inf() && sa.summit_sup() == sb.summit_sup();
  ev["summit_sets_disjoint"] = true;
  ev["char_polys_differ"] = !(ca == cb);
  if (!(ca == cb)) {
    ev["char_poly_a"] = poly_json(ca);
    ev["char_poly_b"] = poly_json(cb);
  }
  const bool both_knots = closure_component_count(a) == 1 && closure_component_count(b) == 1;
  std::vector<KnotId> ka, kb;
  if (both_knots) {
    ka = closure_component_knots(braid_power(a, 2));
    kb = closure_component_knots(braid_power(b, 2));
    nlohmann::json la = nlohmann::json::array(), lb = nlohmann::json::array();
    for (const auto& k : ka) la.push_back(k.name());
    for (const auto& k : kb) lb.push_back(k.name());
    ev["squared_closure_components_a"] = la;
    ev["squared_closure_components_b"] = lb;
  }
  j["evidence"] = ev;
  if (cfg.format == "json") {
    emit(out, j);
    return 1;
  }
  out << "conjugate: false\n";
  out << "summit a: inf=" << sa.summit_inf() << " sup=" << sa.summit_sup()
      << " size=" << sa.size() << "\n";
  out << "summit b: inf=" << sb.summit_inf() << " sup=" << sb.summit_sup()
      << " size=" << sb.size() << "\n";
  if (same_window) out << "summit sets share (inf, sup) but are disjoint\n";
  if (!(ca == cb)) {
    out << "char polynomials differ:\n";
    out << "  a: " << ca.str() << "\n";
    out << "  b: " << cb.str() << "\n";
  } else {
    out << "char polynomials agree\n";
  }
  if (both_knots) {
    auto list = [](const std::vector<KnotId>& ks) {
      std::string s;
      for (size_t i = 0; i < ks.size(); ++i) {
        if (i) s += ", ";
        s += ks[i].name();
      }
      return s;
    };
    out << "squared closure components: a -> " << list(ka) << "; b -> " << list(kb) << "\n";
  }
  return 1;
}

int cmd_invariants(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  const BraidWord w = parse_braid_word(text, cfg.n);
  const Permutation p = word_to_permutation(w);
  const int comps = closure_component_count(w);
  const LaurentPoly2 cp = burau_char_poly(w);
  std::optional<int> genus;
  if (w.positive() && comps == 1) genus = genus_of_positive_closure(w);
  std::optional<LaurentPoly1> alex;
  std::optional<KnotId> knot;
  if (comps == 1) {
    alex = alexander_of_closure(w);
    knot = identify_knot(w);
  }
  if (cfg.format == "json") {
    nlohmann::json j;
    j["word"] = word_to_string(w);
    j["n"] = w.strands;
    j["writhe"] = writhe(w);
    j["permutation"] = p.cycle_str();
    j["image"] = p.image;
    j["components"] = comps;
    j["genus"] = genus ? nlohmann::json(*genus) : nlohmann::json(nullptr);
    j["char_poly"] = poly_json(cp);
    j["alexander"] = alex ? poly_json(*alex) : nlohmann::json(nullptr);
    j["knot"] = knot ? knot->to_json() : nlohmann::json(nullptr);
    emit(out, j);
    return 0;
  }
  out << "word: " << word_to_string(w) << "\n";
  out << "writhe: " << writhe(w) << "\n";
  out << "permutation: " << p.cycle_str() << "\n";
  out << "components: " << comps << "\n";
  if (genus) out << "genus: " << *genus << "\n";
  out << "char_poly: " << cp.str() << "\n";
  if (alex) out << "alexander: " << alex->str() << "\n";
  if (knot) out << "knot: " << knot->name() << "\n";
  return 0;
}

int cmd_enumerate(const CliConfig& cfg, int n, std::ostream& out) {
  const auto braids = enumerate_ncycle_braids(n, cfg.max_n);
  if (cfg.format == "json") {
    for (const auto& e : braids)
      emit(out, {{"n", n},
                 {"permutation", e.perm.cycle_str()},
                 {"word", word_to_string(e.word)},
                 {"crossings", e.crossings}});
    return 0;
  }
  out << "| Permutation | Braid word | Number of crossings |\n";
  out << "| --- | --- | --- |\n";
  for (const auto& e : braids)
    out << "| " << e.perm.cycle_str() << " | " << word_sigma_str(e.word) << " | " << e.crossings
        << " |\n";
  return 0;
}

int cmd_classify(const CliConfig& cfg, int n, std::ostream& out) {
  const Census census = classify(n, cfg.max_n, cfg.summit_cap);
  if (cfg.format == "json") {
    out << census_jsonl(census);
    return 0;
  }
  if (cfg.format == "markdown") {
    out << census_markdown(census);
    return 0;
  }
  out << "census n=" << n << ": " << census.entries.size() << " braids, "
      << census.class_count() << " conjugacy classes\n";
  for (const auto& r : census.reports) {
    out << r.crossings << " crossings: " << r.entry_count() << " braids in "
        << r.classes.size() << (r.classes.size() == 1 ? " class" : " classes") << "\n";
    for (const auto& cl : r.classes) {
      const auto& rep = census.entries[cl.representative];
      out << "  class " << cl.class_id << ": size " << cl.members.size() << ", knot "
          << cl.knot.name() << ", representative " << rep.perm.cycle_str() << " = "
          << word_sigma_str(rep.word) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const CliConfig& cfg, const std::string& what, int n, std::ostream& out) {
  auto finish = [&](const CheckReport& rep) {
    out << rep.log;
    return rep.ok ? 0 : 1;
  };
  if (what == "props") {
    const PropertyResult res = run_property_suites(cfg.seed);
    out << res.log;
    return res.ok ? 0 : 1;
  }
  if (n < 2) throw std::invalid_argument("verify needs a strand count of at least 2");
  if (what == "thm1") return finish(verify_theorem_1(n, cfg.max_n, cfg.summit_cap));
  if (what == "thm2") return finish(verify_theorem_2(n, cfg.max_n, cfg.summit_cap));
  if (what == "thm4") return finish(verify_theorem_4(n, cfg.max_n, cfg.summit_cap));
  if (what == "thm6") return finish(verify_theorem_6(n, cfg.summit_cap));
  if (what == "all") {
    int rc = 0;
    for (const char* t : {"thm1", "thm2", "thm4", "thm6"})
      rc = std::max(rc, cmd_verify(cfg, t, n, out));
    return rc;
  }
  throw std::invalid_argument("unknown verify target '" + what +
                              "' (thm1, thm2, thm4, thm6, props, all)");
}

int cmd_demo(const CliConfig& cfg, std::ostream& out) {
  const NonConjugacyDemo d = nonconjugate_pair_demo(cfg.summit_cap);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["beta"] = word_to_string(d.beta);
    j["gamma"] = word_to_string(d.gamma);
    j["beta_permutation"] = d.beta_perm.cycle_str();
    j["gamma_permutation"] = d.gamma_perm.cycle_str();
    j["beta_knot"] = d.beta_knot.name();
    j["gamma_knot"] = d.gamma_knot.name();
    j["conjugate"] = d.conjugate;
    j["beta_char_poly"] = poly_json(d.beta_char);
    j["gamma_char_poly"] = poly_json(d.gamma_char);
    nlohmann::json bs = nlohmann::json::array(), gs = nlohmann::json::array();
    for (const auto& k : d.beta_square_components) bs.push_back(k.name());
    for (const auto& k : d.gamma_square_components) gs.push_back(k.name());
    j["beta_square_components"] = bs;
    j["gamma_square_components"] = gs;
    j["all_checks"] = d.all_checks;
    emit(out, j);
  } else {
    out << d.render();
  }
  return d.all_checks ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  if (const char* env = std::getenv("BRAIDTK_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 2) cfg.max_n = static_cast<int>(v);
  }

  CLI::App app{"positive permutation braids: normal forms, conjugacy, invariants, census"};
  app.require_subcommand(1);
  app.fallthrough();
  int flag_n = 0;
  app.add_option("--n", flag_n, "strand count for parsed inputs");
  app.add_option("--max-n", cfg.max_n, "largest strand count the census accepts");
  app.add_option("--summit-cap", cfg.summit_cap, "summit set size cap");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "markdown"}));
  app.add_option("--seed", cfg.seed, "seed for randomized property suites");

  std::string text_a, text_b, verify_what;
  int sub_n = -1;

  auto* p2b = app.add_subcommand("perm2braid", "permutation to canonical braid word");
  p2b->add_option("permutation", text_a, "cycles like \"(1423)\" or an image like \"4 2 1 3\"")
      ->required();
  auto* b2p = app.add_subcommand("braid2perm", "braid word to permutation");
  b2p->add_option("word", text_a, "word like \"n=3 2 1\"");
  auto* nf = app.add_subcommand("nf", "left canonical form");
  nf->add_option("word", text_a, "braid word")->required();
  auto* conj = app.add_subcommand("conj", "decide conjugacy of two braid words");
  conj->add_option("a", text_a, "first word")->required();
  conj->add_option("b", text_b, "second word")->required();
  auto* inv = app.add_subcommand("invariants", "writhe, permutation, polynomials, knot");
  inv->add_option("word", text_a, "braid word")->required();
  auto* enumc = app.add_subcommand("enumerate", "census of n-cycle permutation braids");
  enumc->add_option("n", sub_n, "strand count")->required();
  auto* cls = app.add_subcommand("classify", "conjugacy classification of the census");
  cls->add_option("n", sub_n, "strand count")->required();
  auto* ver = app.add_subcommand("verify", "verify classification statements or properties");
  ver->add_option("what", verify_what, "thm1 | thm2 | thm4 | thm6 | props | all")->required();
  ver->add_option("n", sub_n, "strand count (theorem targets)");
  auto* demo = app.add_subcommand("demo-nonconj",
                                  "same closure knot, not conjugate: the 6-string pair");

  try {
    std::vector<const char*> argv;
    argv.push_back("braidtk");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (app.count("--n")) cfg.n = flag_n;

    if (p2b->parsed()) return cmd_perm2braid(cfg, text_a, out);
    if (b2p->parsed()) return cmd_braid2perm(cfg, text_a, out);
    if (nf->parsed()) return cmd_nf(cfg, text_a, out);
    if (conj->parsed()) return cmd_conj(cfg, text_a, text_b, out);
    if (inv->parsed()) return cmd_invariants(cfg, text_a, out);
    if (enumc->parsed()) return cmd_enumerate(cfg, sub_n, out);
    if (cls->parsed()) return cmd_classify(cfg, sub_n, out);
    if (ver->parsed()) return cmd_verify(cfg, verify_what, sub_n, out);
    if (demo->parsed()) return cmd_demo(cfg, out);
    err << "no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace braidtk
