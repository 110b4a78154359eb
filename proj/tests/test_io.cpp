#include <cstdio>
#include <functional>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "topq/error.hpp"
#include "topq/catalog.hpp"
#include "topq/io.hpp"

using namespace topq;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("complex files") {
  const auto raw = parse_complex_json(
      R"({"name": "tri", "vertices": ["a", "b", "c"], "maximal_simplices": [["a", "b"], ["b", "c"], ["c", "a"]]})");
  CHECK(raw.name == "tri");
  const auto x = validate(raw);
  CHECK(x.f_vector() == std::vector<std::size_t>{3, 3});
  CHECK(kind_of([] { parse_complex_json("{"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_complex_json(R"({"vertices": []})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_complex_json(R"({"name": "x", "vertices": [1], "maximal_simplices": []})"); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] {
          validate(parse_complex_json(R"({"name": "x", "vertices": ["a"], "maximal_simplices": [["a", "z"]]})"));
        }) == ErrorKind::UnknownVertex);
}

TEST_CASE("workspace resolves files, catalog names and maps") {
  Workspace ws;
  CHECK(ws.complex("torus")->name() == "torus9");
  CHECK(kind_of([&] { ws.complex("no-such"); }) == ErrorKind::Parse);
  const auto cpath = write_temp("topq_io_c.json",
                                R"({"name": "sq", "vertices": ["p", "q", "r", "s"],
                                    "maximal_simplices": [["p","q"],["q","r"],["r","s"],["s","p"]]})");
  const auto sq = ws.complex(cpath);
  CHECK(sq->name() == "sq");
  const auto mpath = write_temp("topq_io_m.json",
                                R"({"name": "fold", "domain": "sq", "codomain": "triangle",
                                    "vertex_map": {"p": "w0", "q": "w1", "r": "w2", "s": "w1"}})");
  const auto f = ws.map(mpath);
  CHECK(f.name == "fold");
  CHECK(f.domain == sq);
  CHECK(ws.map("wrap2").codomain->name() == "triangle");
  const auto bad = write_temp("topq_io_bad.json",
                              R"({"domain": "sq", "codomain": "triangle",
                                  "vertex_map": {"p": "w0", "q": "w0", "r": "w0", "s": "w9"}})");
  CHECK(kind_of([&] { ws.map(bad); }) == ErrorKind::UnknownVertex);
  CHECK(kind_of([] { read_file("/nonexistent/topq.json"); }) == ErrorKind::Parse);
  for (const auto& p : {cpath, mpath, bad}) std::remove(p.c_str());
}

TEST_CASE("json values") {
  CHECK(to_json(make_rational(2)).get<std::string>() == "2/1");
  CHECK(to_json(QVector{make_rational(-1, 2)}).dump() == R"(["-1/2"])");
  const auto r = coincidence_number(
      make_manifold_map(catalog_map("wrap2"), prepare_manifold(catalog_map("wrap2").domain),
                        prepare_manifold(catalog_map("wrap2").codomain)),
      make_manifold_map(catalog_map("wrap1"), prepare_manifold(catalog_map("wrap1").domain),
                        prepare_manifold(catalog_map("wrap1").codomain)));
  const auto j = to_json(r);
  CHECK(j["lambda"] == "-1/1");
  CHECK(j["consistent"] == true);
}

}  // TEST_SUITE
