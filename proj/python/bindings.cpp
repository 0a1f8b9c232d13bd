#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galcov/coset_enumeration.hpp"
#include "galcov/kernel.hpp"
#include "galcov/model_group.hpp"
#include "galcov/pipeline.hpp"
#include "galcov/smith.hpp"

namespace py = pybind11;
using namespace galcov;

namespace {

Permutation perm_from(const std::vector<int>& images) { return Permutation::from_images(images); }

py::dict snf_dict(const SNFResult& r) {
  py::dict d;
  std::vector<std::string> torsion;
  for (const auto& t : r.torsion()) torsion.push_back(t.str());
  d["free_rank"] = r.free_rank;
  d["torsion"] = torsion;
  d["group"] = r.describe();
  return d;
}

}  // namespace

PYBIND11_MODULE(_galcov, m) {
  m.doc() = "Fundamental groups of Galois covers: presentations, monodromy and certificates";
  py::register_exception<Error>(m, "GalcovError");

  py::class_<GroupPresentation>(m, "Presentation")
      .def_readonly("name", &GroupPresentation::name)
      .def_readonly("n", &GroupPresentation::n)
      .def_property_readonly("generators",
                             [](const GroupPresentation& p) {
                               std::vector<std::string> g;
                               for (const auto& id : p.generators) g.push_back(generator_name(id));
                               return g;
                             })
      .def_property_readonly("relators",
                             [](const GroupPresentation& p) {
                               std::vector<std::string> r;
                               for (const auto& w : p.relators) r.push_back(to_string(w));
                               return r;
                             })
      .def("to_text", [](const GroupPresentation& p) { return write_presentation(p); })
      .def_static("from_text", &parse_presentation_text)
      .def("__len__", [](const GroupPresentation& p) { return p.relators.size(); })
      .def("__eq__", [](const GroupPresentation& a, const GroupPresentation& b) { return a == b; })
      .def("__repr__", [](const GroupPresentation& p) {
        return "<Presentation " + p.name + ": " + std::to_string(p.generators.size()) + " generators, " +
               std::to_string(p.relators.size()) + " relators>";
      });

  m.def("version", &version);

  m.def("census", [](int n) {
    const auto c = census(n);
    py::dict d;
    d["lines"] = c.lines;
    d["vertices"] = c.vertices;
    d["planes"] = c.planes;
    d["three_points"] = c.three_points;
    d["incidental_pairs"] = c.incidental;
    d["branch"] = c.branch;
    d["cusp"] = c.cusp;
    d["node"] = c.node;
    d["degree"] = c.degree;
    d["permutation_identity"] = c.permutation_identity;
    return d;
  }, py::arg("n"));

  m.def("lines", [](int n) {
    std::vector<std::pair<int, int>> out;
    const auto c = build_complex(n);
    for (const auto& l : c.lines()) out.push_back(l.endpoints);
    return out;
  }, py::arg("n"), "Endpoints of lines 1..2n.");

  m.def("incidental_pairs", [](int n) { return build_complex(n).incidental_pairs(); }, py::arg("n"));

  m.def("factorization", [](int n) {
    py::list out;
    for (const auto& f : full_factorization(build_complex(n))) {
      py::dict d;
      d["kind"] = kind_name(f.kind);
      d["label"] = f.label;
      d["exponent"] = f.exponent;
      d["braid"] = to_string(f.braid());
      out.append(d);
    }
    return out;
  }, py::arg("n"));

  m.def("delta_square", [](int n) {
    return delta_square_check(product(full_factorization(build_complex(n))), 4 * n).summary();
  }, py::arg("n"));

  m.def("braid_presentation", [](int n) { return braid_presentation(build_complex(n)); }, py::arg("n"));
  m.def("pres1", [](int n, int depth) { return pres1_presentation(build_complex(n), depth); }, py::arg("n"),
        py::arg("depth") = 0);
  m.def("pitilde", &pitilde_presentation, py::arg("n"), py::arg("depth") = 0, py::arg("projective") = false);
  m.def("kernel", [](int n, int depth, bool reduced) {
    const auto pt = pitilde_presentation(n, depth, true);
    return reduced ? reduced_kernel_presentation(pt, n) : kernel_presentation(pt, n);
  }, py::arg("n"), py::arg("depth") = 0, py::arg("reduced") = false);
  m.def("theorem100", &theorem100_presentation, py::arg("n"), py::arg("window") = 2);
  m.def("galois", &galois_presentation, py::arg("n"), py::arg("window") = 2);
  m.def("finite_quotient", &finite_quotient_presentation, py::arg("ptilde"), py::arg("m"), py::arg("n"));
  m.def("simplify", [](const GroupPresentation& p) { return tietze_simplify(p); });

  m.def("psi", [](const std::string& word, int n) { return psi_eval(parse_word(word), n).images(); },
        py::arg("word"), py::arg("n"), "One-line images of psi(word).");
  m.def("phi", [](const std::vector<int>& images, int n) { return to_string(phi_word(perm_from(images), n)); },
        py::arg("images"), py::arg("n"));
  m.def("tau", [](const std::string& word, int n, bool reduced) {
    auto t = tau_rewrite(parse_word(word), n);
    return to_string(reduced ? reduce_word_to_AX(t, n) : t);
  }, py::arg("word"), py::arg("n"), py::arg("reduced") = true);

  m.def("abelianize", [](const GroupPresentation& p) { return snf_dict(smith_normal_form(abelianize(p))); });
  m.def("smith", [](const std::vector<std::vector<long>>& rows) {
    return snf_dict(smith_normal_form(IntegerMatrix::from_dense(rows)));
  }, py::arg("rows"));

  m.def("coset_count", [](const GroupPresentation& p, const std::vector<std::string>& subgroup,
                          std::uint64_t max_cosets, const std::string& strategy) -> py::object {
    std::vector<FreeWord> gens;
    for (const auto& s : subgroup) gens.push_back(parse_word(s));
    EnumerationOptions o;
    o.max_cosets = max_cosets;
    o.strategy = strategy == "hlt" ? Strategy::HLT : Strategy::Felsch;
    CosetTable t;
    {
      py::gil_scoped_release release;
      t = todd_coxeter(p, gens, o);
    }
    if (!t.complete()) return py::none();
    return py::int_(t.index);
  }, py::arg("p"), py::arg("subgroup") = std::vector<std::string>{}, py::arg("max_cosets") = 4'000'000,
     py::arg("strategy") = "felsch", "Index of the subgroup, or None when the budget runs out.");

  m.def("model_order", [](int n, int m) { return ModelGroup(n, m).order(); }, py::arg("n"), py::arg("m"));
  m.def("model_check", [](int n, int m, int depth) {
    const auto r = model_hom_check(pitilde_presentation(n, depth, true), ModelGroup(n, m));
    py::dict d;
    d["relators_checked"] = r.relators.checked;
    d["relators_failing"] = r.relators.failing.size();
    d["derived_checked"] = r.derived_checked;
    d["derived_failing"] = r.failing_derived;
    d["ok"] = r.ok();
    return d;
  }, py::arg("n"), py::arg("m"), py::arg("depth") = 0);

  m.def("verify", [](int n, int mod, int depth, int window, std::uint64_t max_cosets, const std::string& cache_dir) {
    RunConfig c;
    c.n = n;
    c.mod = mod;
    c.depth = depth;
    c.window = window;
    c.max_cosets = max_cosets;
    c.cache_dir = cache_dir;
    c.format = "json";
    Report r;
    {
      py::gil_scoped_release release;
      r = run_pipeline(c);
    }
    return emit_report(r, "json");
  }, py::arg("n"), py::arg("mod") = 2, py::arg("depth") = 0, py::arg("window") = 2,
     py::arg("max_cosets") = 4'000'000, py::arg("cache_dir") = "",
     "Runs the full certificate and returns the JSON report.");
}
