// JSON-string bridge; the Python package decodes the reports.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "topq/catalog.hpp"
#include "topq/error.hpp"
#include "topq/io.hpp"
#include "topq/lefschetz.hpp"
#include "topq/verify.hpp"

namespace py = pybind11;
using namespace topq;

namespace {

std::string homology_json(const std::string& arg, bool cohomology) {
  Workspace ws;
  const auto x = ws.complex(arg);
  const auto c = build_chain_complex(*x);
  const auto s = cohomology ? GradedSpace::cohomology(c) : GradedSpace::homology(c);
  Json j;
  j["complex"] = x->name();
  j["betti"] = to_json(s.betti());
  return j.dump();
}

std::string duality_json(const std::string& arg) {
  Workspace ws;
  const auto m = prepare_manifold(ws.complex(arg));
  Json j;
  j["complex"] = m->name();
  j["dimension"] = m->n;
  j["betti"] = to_json(m->homology().betti());
  Json d = Json::array();
  for (const auto& b : m->d) d.push_back(to_json(b));
  j["duality_matrices"] = std::move(d);
  return j.dump();
}

ManifoldMap mmap(Workspace& ws, const std::string& arg) {
  const auto f = ws.map(arg);
  return make_manifold_map(f, prepare_manifold(f.domain), prepare_manifold(f.codomain));
}

std::string degree_json(const std::string& arg) {
  Workspace ws;
  const auto f = mmap(ws, arg);
  return Json{{"map", f.map.name}, {"degree", to_string(degree(f))}}.dump();
}

std::string coincidence_json(const std::string& fa, const std::string& ga, bool witness, int max_subdiv) {
  Workspace ws;
  const auto f = mmap(ws, fa);
  const auto g0 = ws.map(ga);
  if (g0.domain->name() != f.x->name() || g0.codomain->name() != f.y->name())
    throw Error(ErrorKind::DimensionMismatch, "maps must share domain and codomain");
  auto r = coincidence_number(f, make_manifold_map(g0, f.x, f.y));
  Json j = to_json(r);
  if (witness) {
    r.witness = coincidence_witness(f.map, g0, max_subdiv, r.lambda != 0);
    j["witness"] = to_json(r.witness, *f.map.domain);
  }
  return j.dump();
}

std::string verify_json(const std::string& suite, std::uint64_t seed) {
  const auto rep = run_suite(suite, seed);
  Json laws = Json::array();
  for (const auto& l : rep.laws) {
    Json e{{"law", l.law}, {"pass", l.pass}, {"cases", l.cases}};
    if (!l.pass) e["counterexample"] = l.counterexample;
    laws.push_back(std::move(e));
  }
  return Json{{"suite", rep.suite}, {"seed", rep.seed}, {"pass", rep.pass()}, {"laws", std::move(laws)}}.dump();
}

std::vector<std::string> complex_names() {
  std::vector<std::string> out;
  for (const auto& c : catalog_complexes()) out.push_back(c.name);
  return out;
}

std::vector<std::string> map_names() {
  std::vector<std::string> out;
  for (const auto& m : catalog_maps()) out.push_back(m.name);
  return out;
}

}  // namespace

PYBIND11_MODULE(_topq, m) {
  m.doc() = "Exact rational (co)homology and Lefschetz coincidence numbers";
  // Owned by the module for the life of the interpreter.
  static PyObject* error_type = PyErr_NewException("topq._topq.TopqError", PyExc_RuntimeError, nullptr);
  m.attr("TopqError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type)(std::string(to_string(e.kind())) + ": " + e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });
  m.def("homology_json", [](const std::string& a) { return homology_json(a, false); });
  m.def("cohomology_json", [](const std::string& a) { return homology_json(a, true); });
  m.def("duality_json", &duality_json);
  m.def("degree_json", &degree_json);
  m.def("coincidence_json", &coincidence_json, py::arg("f"), py::arg("g"), py::arg("witness") = false,
        py::arg("max_subdiv") = 3);
  m.def("verify_json", &verify_json, py::arg("suite"), py::arg("seed") = 1);
  m.def("suite_names", &suite_names);
  m.def("complex_names", &complex_names);
  m.def("map_names", &map_names);
  m.attr("__version__") = TOPQ_VERSION;
}
