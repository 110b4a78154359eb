// topq: exact simplicial (co)homology, duality and coincidence numbers.
#include <chrono>
#include <cstdint>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topq/catalog.hpp"
#include "topq/error.hpp"
#include "topq/io.hpp"
#include "topq/lefschetz.hpp"
#include "topq/verify.hpp"

using namespace topq;

namespace {

constexpr int kParse = 1;
constexpr int kManifold = 2;
constexpr int kAssertion = 3;

struct Options {
  bool json = false;
  bool timing = false;
  bool witness = false;
  bool generators = false;
  int max_subdiv = 3;
  std::uint64_t seed = 1;
  std::vector<std::string> load;
  std::vector<std::string> args;
};

// What a command hands back: machine result, human text, exit status.
struct Outcome {
  Json results;
  std::string text;
  int code = 0;
};

std::string q(const Rational& r) { return to_string(r); }

std::string betti_text(const std::vector<std::size_t>& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

Json chain_terms(const SimplicialComplex& x, int deg, const QVector& v) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) terms.push_back(Json{{"simplex", x.label(x.simplex(deg, i))}, {"coeff", q(v[i])}});
  return terms;
}

std::string chain_text(const SimplicialComplex& x, int deg, const QVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += q(v[i]) + "*" + x.label(x.simplex(deg, i));
  }
  return s.empty() ? "0" : s;
}

void require_args(const Options& o, std::size_t n, const std::string& usage) {
  if (o.args.size() != n) throw Error(ErrorKind::Parse, "usage: " + usage);
}

Workspace workspace(const Options& o) {
  Workspace ws;
  for (const auto& f : o.load) ws.complex(f);
  return ws;
}

Outcome cmd_homology(const Options& o, Variance v) {
  require_args(o, 1, v == Variance::Homology ? "homology COMPLEX" : "cohomology COMPLEX");
  auto ws = workspace(o);
  const auto x = ws.complex(o.args[0]);
  const auto chains = build_chain_complex(*x);
  const auto space = v == Variance::Homology ? GradedSpace::homology(chains) : GradedSpace::cohomology(chains);
  Outcome out;
  out.results["complex"] = x->name();
  out.results["f_vector"] = to_json(x->f_vector());
  out.results["betti"] = to_json(space.betti());
  std::ostringstream t;
  t << x->name() << ": " << (v == Variance::Homology ? "H_*" : "H^*") << " betti " << betti_text(space.betti())
    << "\n";
  if (o.generators) {
    Json g = Json::array();
    for (int m = 0; m <= space.top_degree(); ++m) {
      Json level = Json::array();
      for (const auto& rep : space.representatives(m)) {
        level.push_back(chain_terms(*x, m, rep));
        t << "  degree " << m << ": " << chain_text(*x, m, rep) << "\n";
      }
      g.push_back(std::move(level));
    }
    out.results["generators"] = std::move(g);
  }
  out.text = t.str();
  return out;
}

Outcome cmd_duality(const Options& o) {
  require_args(o, 1, "duality COMPLEX");
  auto ws = workspace(o);
  const auto m = prepare_manifold(ws.complex(o.args[0]));
  const auto& x = *m->factor->complex;
  Outcome out;
  bool invertible = true;
  Json d = Json::array();
  for (int k = 0; k <= m->n; ++k) {
    const auto& dk = m->d[static_cast<std::size_t>(k)];
    invertible = invertible && dk.rows() == dk.cols() && dk.rank() == dk.rows();
    d.push_back(to_json(dk));
  }
  const auto b = m->homology().betti();
  bool symmetric = true;
  for (std::size_t k = 0; k < b.size(); ++k) symmetric = symmetric && b[k] == b[b.size() - 1 - k];
  Json orient = Json::array();
  for (std::size_t i = 0; i < m->orientation.signs.size(); ++i)
    orient.push_back(Json{{"simplex", x.label(x.simplex(m->n, i))}, {"sign", m->orientation.signs[i]}});
  out.results["complex"] = m->name();
  out.results["dimension"] = m->n;
  out.results["orientable"] = true;
  out.results["orientation"] = std::move(orient);
  out.results["fundamental_cycle"] = chain_terms(x, m->n, m->zeta.cycle.coeffs);
  out.results["duality_matrices"] = std::move(d);
  out.results["duality_invertible"] = invertible;
  out.results["betti"] = to_json(b);
  out.results["betti_symmetric"] = symmetric;
  std::ostringstream t;
  t << m->name() << ": oriented closed " << m->n << "-manifold, " << m->orientation.signs.size()
    << " top simplices\n";
  t << "  D_X invertible: " << (invertible ? "yes" : "no") << "\n";
  t << "  betti " << betti_text(b) << (symmetric ? " (symmetric)" : " (NOT symmetric)") << "\n";
  out.text = t.str();
  out.code = invertible && symmetric ? 0 : kAssertion;
  return out;
}

ManifoldMap manifold_map(Workspace& ws, const std::string& arg) {
  const auto f = ws.map(arg);
  const auto x = prepare_manifold(f.domain);
  const auto y = f.codomain->name() == f.domain->name() ? x : prepare_manifold(f.codomain);
  return make_manifold_map(f, x, y);
}

Outcome cmd_degree(const Options& o) {
  require_args(o, 1, "degree MAP");
  auto ws = workspace(o);
  const auto f = manifold_map(ws, o.args[0]);
  const Rational d = degree(f);
  Outcome out;
  out.results["map"] = f.map.name;
  out.results["domain"] = f.x->name();
  out.results["codomain"] = f.y->name();
  out.results["degree"] = q(d);
  Json push = Json::array(), pull = Json::array();
  for (const auto& b : f.push.blocks) push.push_back(to_json(b));
  for (const auto& b : f.pull.blocks) pull.push_back(to_json(b));
  out.results["push"] = std::move(push);
  out.results["pull"] = std::move(pull);
  out.text = f.map.name + ": " + f.x->name() + " -> " + f.y->name() + ", degree " + q(d) + "\n";
  return out;
}

Outcome cmd_lefschetz(const Options& o) {
  require_args(o, 1, "lefschetz COMPLEX");
  auto ws = workspace(o);
  const auto m = prepare_manifold(ws.complex(o.args[0]));
  const auto l = lefschetz_class(m);
  const auto e = euler_data(m);
  Outcome out;
  out.results["complex"] = m->name();
  out.results["dimension"] = m->n;
  out.results["lefschetz_class"] = to_json(l.value.coeffs);
  out.results["coefficient_extraction"] = to_json(l.extraction);
  out.results["extraction_matches"] = l.extraction_matches();
  out.results["euler_class"] = to_json(e.euler_class);
  out.results["euler_number"] = q(e.euler_number);
  out.results["combinatorial_euler"] = e.combinatorial;
  out.results["consistent"] = e.consistent();
  std::ostringstream t;
  t << m->name() << ": euler number " << q(e.euler_number) << ", combinatorial " << e.combinatorial << "\n";
  t << "  Lambda_X coefficient extraction " << (l.extraction_matches() ? "matches" : "DOES NOT match") << "\n";
  out.text = t.str();
  out.code = l.extraction_matches() && e.consistent() ? 0 : kAssertion;
  return out;
}

Outcome cmd_coincidence(const Options& o) {
  require_args(o, 2, "coincidence MAP MAP");
  auto ws = workspace(o);
  const auto f = manifold_map(ws, o.args[0]);
  const auto g = manifold_map(ws, o.args[1]);
  if (g.x->name() != f.x->name() || g.y->name() != f.y->name())
    throw Error(ErrorKind::DimensionMismatch, "maps must share domain and codomain");
  const auto g_on_f = make_manifold_map(g.map, f.x, f.y);
  auto r = coincidence_number(f, g_on_f);
  if (o.witness) r.witness = coincidence_witness(f.map, g.map, o.max_subdiv, r.lambda != 0);
  Outcome out;
  out.results = to_json(r);
  if (o.witness) out.results["witness"] = to_json(r.witness, *f.map.domain);
  std::ostringstream t;
  t << "lambda(" << r.f_name << ", " << r.g_name << ") = " << q(r.lambda) << "  (n = " << r.n << ")\n";
  t << "  tr f^! g^* on H^{n-p}(Y)   " << q(r.trace_shriek_pull) << "\n";
  t << "  tr f_! g_* on H_{n-p}(X)   " << q(r.trace_homology_shriek) << "\n";
  t << "  tr f_* g_! on H_p(Y)       " << q(r.trace_push_shriek) << "\n";
  t << "  pairing with lambda_Y(1)   " << q(r.pairing) << "\n";
  t << "  pairing with Lambda_Y      " << q(r.pairing_lefschetz_class) << "\n";
  t << "  eps(zeta_f . zeta_g)       " << q(r.intersection) << "\n";
  t << "  eps((gamma_g u gamma_f) n zeta) " << q(r.intersection_reversed) << "\n";
  t << "  routes consistent: " << (r.consistent() ? "yes" : "NO") << "\n";
  bool witness_ok = true;
  if (o.witness) {
    t << "  witness: " << to_string(r.witness.status);
    if (r.witness.status == WitnessStatus::Found) {
      const auto& x = *f.map.domain;
      t << " in " << x.label(r.witness.base_carrier) << " at (";
      for (std::size_t i = 0; i < r.witness.base_coords.size(); ++i) t << (i ? ", " : "") << q(r.witness.base_coords[i]);
      t << "), subdivision level " << r.witness.level;
    }
    t << "\n";
    witness_ok = r.lambda == 0 || r.witness.status == WitnessStatus::Found;
  }
  out.text = t.str();
  out.code = r.consistent() && witness_ok ? 0 : kAssertion;
  return out;
}

Json law_json(const LawResult& l) {
  Json j;
  j["law"] = l.law;
  j["pass"] = l.pass;
  j["cases"] = l.cases;
  if (!l.pass) j["counterexample"] = l.counterexample;
  if (!l.notes.empty()) j["notes"] = l.notes;
  return j;
}

Outcome cmd_verify(const Options& o) {
  std::vector<std::string> names = o.args.empty() || (o.args.size() == 1 && o.args[0] == "all") ? suite_names() : o.args;
  for (const auto& n : names) {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == n;
    if (!known) throw Error(ErrorKind::Parse, "unknown suite " + n);
  }
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, run_suite, n, o.seed));
  Outcome out;
  out.results["seed"] = o.seed;
  Json suites = Json::array();
  std::ostringstream t;
  bool all = true;
  for (auto& job : jobs) {
    const SuiteReport rep = job.get();
    all = all && rep.pass();
    Json s;
    s["suite"] = rep.suite;
    s["pass"] = rep.pass();
    Json laws = Json::array();
    for (const auto& l : rep.laws) laws.push_back(law_json(l));
    s["laws"] = std::move(laws);
    if (o.timing) s["seconds"] = rep.seconds;
    suites.push_back(std::move(s));
    t << rep.suite << ": " << (rep.pass() ? "pass" : "FAIL");
    if (o.timing) t << " (" << rep.seconds << " s)";
    t << "\n";
    for (const auto& l : rep.laws) {
      t << "  " << (l.pass ? "pass " : "FAIL ") << l.law << " [" << l.cases << " cases]\n";
      if (!l.pass) t << "    counterexample: " << l.counterexample << "\n";
      for (const auto& n : l.notes) t << "    " << n << "\n";
    }
  }
  out.results["suites"] = std::move(suites);
  out.results["pass"] = all;
  out.text = t.str();
  out.code = all ? 0 : kAssertion;
  return out;
}

Outcome cmd_catalog(const Options&) {
  Outcome out;
  Json cs = Json::array(), ms = Json::array();
  std::ostringstream t;
  t << "complexes:\n";
  for (const auto& c : catalog_complexes()) {
    cs.push_back(Json{{"name", c.name},
                      {"dimension", c.complex->dimension()},
                      {"f_vector", to_json(c.complex->f_vector())},
                      {"provenance", c.provenance}});
    t << "  " << c.name << " (dim " << c.complex->dimension() << "): " << c.provenance << "\n";
  }
  t << "maps:\n";
  for (const auto& m : catalog_maps()) {
    ms.push_back(Json{{"name", m.name},
                      {"domain", m.map.domain->name()},
                      {"codomain", m.map.codomain->name()},
                      {"provenance", m.provenance}});
    t << "  " << m.name << ": " << m.map.domain->name() << " -> " << m.map.codomain->name() << ", " << m.provenance
      << "\n";
  }
  out.results["complexes"] = std::move(cs);
  out.results["maps"] = std::move(ms);
  out.text = t.str();
  return out;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotClosed:
    case ErrorKind::NonOrientable:
    case ErrorKind::HypothesisViolated:
      return kManifold;
    default:
      return kParse;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational (co)homology, Poincare duality and Lefschetz coincidence numbers"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable report on stdout");
  app.add_flag("--timing", o.timing, "Include wall-clock timing in the report");
  app.add_option("-l,--load", o.load, "Complex file to load before resolving map files")->take_all();

  struct Command {
    std::string name;
    std::string help;
  };
  const std::vector<Command> commands{
      {"homology", "Betti numbers of H_*"},
      {"cohomology", "Betti numbers of H^*"},
      {"duality", "Orientation, fundamental class and Poincare duality"},
      {"degree", "Degree of a map between closed oriented manifolds"},
      {"lefschetz", "Lefschetz class, Euler class and Euler number"},
      {"coincidence", "Lefschetz coincidence number of two maps"},
      {"verify", "Run invariant suites over the catalog"},
      {"catalog", "List built-in complexes and maps"},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("inputs", o.args, "Files or catalog names (suites for verify)");
    if (c.name == "homology" || c.name == "cohomology") sub->add_flag("--generators", o.generators, "List representatives");
    if (c.name == "coincidence") {
      sub->add_flag("--witness", o.witness, "Search for an exact coincidence point");
      sub->add_option("--max-subdiv", o.max_subdiv, "Subdivision budget for the witness search")
          ->check(CLI::NonNegativeNumber);
    }
    if (c.name == "verify") sub->add_option("--seed", o.seed, "Randomization seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kParse;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Json report;
  report["command"] = command;
  report["inputs"] = o.args;
  report["version"] = TOPQ_VERSION;
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (command == "homology") out = cmd_homology(o, Variance::Homology);
    else if (command == "cohomology") out = cmd_homology(o, Variance::Cohomology);
    else if (command == "duality") out = cmd_duality(o);
    else if (command == "degree") out = cmd_degree(o);
    else if (command == "lefschetz") out = cmd_lefschetz(o);
    else if (command == "coincidence") out = cmd_coincidence(o);
    else if (command == "verify") out = cmd_verify(o);
    else out = cmd_catalog(o);
  } catch (const Error& e) {
    const int rc = exit_code(e.kind());
    if (o.json) {
      report["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
      report["exit_code"] = rc;
      std::cout << report.dump(2) << "\n";
    } else {
      std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    }
    return rc;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.json) {
    report["results"] = std::move(out.results);
    report["exit_code"] = out.code;
    if (o.timing) report["timing"] = Json{{"seconds", seconds}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << out.text;
    if (o.timing) std::cout << "elapsed " << seconds << " s\n";
  }
  return out.code;
}
