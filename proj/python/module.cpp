#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidtk/classify.hpp"
#include "braidtk/selfcheck.hpp"

namespace py = pybind11;
using namespace braidtk;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

py::dict knot_dict(const KnotId& k) {
  py::dict d;
  d["name"] = k.name();
  d["alexander"] = k.alexander.str();
  if (k.genus)
    d["genus"] = *k.genus;
  else
    d["genus"] = py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_braidtk, m) {
  m.doc() = "positive permutation braids: Garside normal forms, conjugacy, Burau invariants";

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::vector<int>& image) { return Permutation(image); }))
      .def_static("parse", [](const std::string& s, std::optional<int> n) {
        return parse_permutation(s, n);
      }, py::arg("text"), py::arg("n") = std::nullopt)
      .def_readonly("image", &Permutation::image)
      .def("cycles", &Permutation::cycle_str)
      .def("inverse", &Permutation::inverse)
      .def("inversions", &Permutation::inversions)
      .def("is_n_cycle", &Permutation::is_n_cycle)
      .def("__len__", &Permutation::size)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__repr__", [](const Permutation& p) { return "Permutation " + p.cycle_str(); });

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init([](int n, const std::vector<int>& letters) {
        return BraidWord(n, letters);
      }), py::arg("n"), py::arg("letters"))
      .def_static("parse", [](const std::string& s, std::optional<int> n) {
        return parse_braid_word(s, n);
      }, py::arg("text"), py::arg("n") = std::nullopt)
      .def_readonly("strands", &BraidWord::strands)
      .def_readonly("letters", &BraidWord::letters)
      .def("__str__", [](const BraidWord& w) { return word_to_string(w); })
      .def("__mul__", [](const BraidWord& a, const BraidWord& b) { return a * b; })
      .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; })
      .def("inverse", &BraidWord::inverse)
      .def("positive", &BraidWord::positive)
      .def("__len__", &BraidWord::length)
      .def("__repr__", [](const BraidWord& w) { return "BraidWord(" + word_to_string(w) + ")"; });

  py::class_<NormalForm>(m, "NormalForm")
      .def_readonly("strands", &NormalForm::strands)
      .def_readonly("inf", &NormalForm::inf)
      .def_property_readonly("factors", [](const NormalForm& nf) {
        std::vector<std::vector<int>> out;
        for (const auto& f : nf.factors) out.push_back(f.image);
        return out;
      })
      .def("sup", &NormalForm::sup)
      .def("canonical_length", &NormalForm::canonical_length)
      .def("to_word", &NormalForm::to_word)
      .def("to_json", [](const NormalForm& nf) { return json_to_py(nf.to_json()); })
      .def("__eq__", [](const NormalForm& a, const NormalForm& b) { return a == b; })
      .def("__repr__", [](const NormalForm& nf) {
        return "NormalForm(inf=" + std::to_string(nf.inf) +
               ", len=" + std::to_string(nf.canonical_length()) + ")";
      });

  m.def("word_to_permutation", &word_to_permutation);
  m.def("permutation_to_braid", &permutation_to_braid);
  m.def("is_permutation_braid", &is_permutation_braid);
  m.def("writhe", &writhe);
  m.def("closure_component_count", &closure_component_count);
  m.def("braid_power", &braid_power, py::arg("word"), py::arg("m"));
  m.def("delete_strands", [](const BraidWord& w, const std::vector<int>& keep) {
    return delete_strands(w, std::set<int>(keep.begin(), keep.end()));
  });
  m.def("delta", [](int n) { return delta(n).word(); });
  m.def("enumerate_ncycle_braids", [](int n, int max_n) {
    py::list out;
    for (const auto& e : enumerate_ncycle_braids(n, max_n)) {
      py::dict d;
      d["permutation"] = e.perm.cycle_str();
      d["word"] = word_to_string(e.word);
      d["crossings"] = e.crossings;
      out.append(std::move(d));
    }
    return out;
  }, py::arg("n"), py::arg("max_n") = 8);

  m.def("normal_form", &normal_form);
  m.def("equal_in_group", &equal_in_group);
  m.def("summit_set", [](const BraidWord& w, std::size_t cap) {
    const SummitSet ss = SummitSet::compute(w, cap);
    py::dict d;
    d["inf"] = ss.summit_inf();
    d["sup"] = ss.summit_sup();
    d["size"] = ss.size();
    d["members"] = json_to_py(ss.to_json());
    return d;
  }, py::arg("word"), py::arg("cap") = kDefaultSummitCap);
  m.def("are_conjugate", [](const BraidWord& a, const BraidWord& b, std::size_t cap) {
    const ConjugacyResult r = are_conjugate(a, b, cap);
    return py::make_tuple(r.conjugate,
                          r.witness ? py::object(py::cast(*r.witness)) : py::none());
  }, py::arg("a"), py::arg("b"), py::arg("cap") = kDefaultSummitCap);

  m.def("burau_char_poly", [](const BraidWord& w) { return burau_char_poly(w).str(); });
  m.def("burau_char_poly_terms", [](const BraidWord& w) {
    return json_to_py(burau_char_poly(w).to_json());
  });
  m.def("alexander_of_closure", [](const BraidWord& w) {
    return alexander_of_closure(w).str();
  });
  m.def("torus_knot_alexander", [](int p, int q) { return torus_knot_alexander(p, q).str(); });
  m.def("genus_of_positive_closure", &genus_of_positive_closure);
  m.def("identify_knot", [](const BraidWord& w) { return knot_dict(identify_knot(w)); });

  m.def("census", [](int n, int max_n) {
    py::list out;
    for (const auto& e : census_entries(n, max_n)) out.append(json_to_py(e.to_json()));
    return out;
  }, py::arg("n"), py::arg("max_n") = 8);
  m.def("classify", [](int n, int max_n, std::size_t cap) {
    const Census c = classify(n, max_n, cap);
    py::list reports;
    for (const auto& r : c.reports) reports.append(json_to_py(r.to_json(c.entries)));
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : c.entries) entries.push_back(e.to_json());
    py::dict d;
    d["n"] = c.n;
    d["entries"] = json_to_py(entries);
    d["reports"] = reports;
    d["class_count"] = c.class_count();
    return d;
  }, py::arg("n"), py::arg("max_n") = 8, py::arg("cap") = kDefaultSummitCap);
  m.def("unknot_count", &unknot_count, py::arg("n"), py::arg("max_n") = 8);
  m.def("verify_theorem_1", [](int n) {
    const CheckReport r = verify_theorem_1(n);
    return py::make_tuple(r.ok, r.log);
  });
  m.def("verify_theorem_2", [](int n) {
    const CheckReport r = verify_theorem_2(n);
    return py::make_tuple(r.ok, r.log);
  });
  m.def("verify_theorem_4", [](int n) {
    const CheckReport r = verify_theorem_4(n);
    return py::make_tuple(r.ok, r.log);
  });
  m.def("verify_theorem_6", [](int n) {
    const CheckReport r = verify_theorem_6(n);
    return py::make_tuple(r.ok, r.log);
  });
  m.def("beta_family", &beta_family, py::arg("n"), py::arg("i"));
  m.def("nonconjugate_pair_demo", [] {
    const NonConjugacyDemo d = nonconjugate_pair_demo();
    py::dict out;
    out["beta"] = word_to_string(d.beta);
    out["gamma"] = word_to_string(d.gamma);
    out["beta_permutation"] = d.beta_perm.cycle_str();
    out["gamma_permutation"] = d.gamma_perm.cycle_str();
    out["beta_knot"] = d.beta_knot.name();
    out["gamma_knot"] = d.gamma_knot.name();
    out["conjugate"] = d.conjugate;
    out["beta_char_poly"] = d.beta_char.str();
    out["gamma_char_poly"] = d.gamma_char.str();
    py::list bs, gs;
    for (const auto& k : d.beta_square_components) bs.append(k.name());
    for (const auto& k : d.gamma_square_components) gs.append(k.name());
    out["beta_square_components"] = bs;
    out["gamma_square_components"] = gs;
    out["all_checks"] = d.all_checks;
    out["report"] = d.render();
    return out;
  });
  m.def("run_property_suites", [](std::uint64_t seed) {
    const PropertyResult r = run_property_suites(seed);
    return py::make_tuple(r.ok, r.log);
  }, py::arg("seed") = 20260814ULL);
}
