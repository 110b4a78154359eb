#include "topq/catalog.hpp"

#include <array>
#include <functional>
#include <map>

#include "topq/error.hpp"

namespace topq {

namespace {

using Names = std::vector<std::string>;
using Faces = std::vector<std::vector<std::string>>;

ComplexPtr make(const std::string& name, Names vertices, Faces faces) {
  return std::make_shared<const SimplicialComplex>(validate(RawComplex{name, std::move(vertices), std::move(faces), {}}));
}

std::string idx(const std::string& prefix, int i) { return prefix + std::to_string(i); }
std::string idx2(const std::string& prefix, int i) { return prefix + (i < 10 ? "0" : "") + std::to_string(i); }
std::string grid(const std::string& prefix, int i, int j) { return prefix + std::to_string(i) + std::to_string(j); }
int mod(int a, int m) { return ((a % m) + m) % m; }

ComplexPtr cycle(const std::string& name, const std::string& prefix, int k) {
  Names v;
  Faces f;
  for (int i = 0; i < k; ++i) {
    v.push_back(idx(prefix, i));
    f.push_back({idx(prefix, i), idx(prefix, (i + 1) % k)});
  }
  return make(name, v, f);
}

Faces torus9_faces(const std::string& prefix) {
  Faces f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, j1 = (j + 1) % 3;
      f.push_back({grid(prefix, i, j), grid(prefix, i1, j), grid(prefix, i1, j1)});
      f.push_back({grid(prefix, i, j), grid(prefix, i, j1), grid(prefix, i1, j1)});
    }
  return f;
}

Names torus9_vertices(const std::string& prefix) {
  Names v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v.push_back(grid(prefix, i, j));
  return v;
}

// Two 3x3 grid tori with the triangle {00,10,11} removed from each and the
// three boundary vertices identified.
ComplexPtr genus2() {
  const std::map<std::string, std::string> glue{{"b00", "a00"}, {"b10", "a10"}, {"b11", "a11"}};
  auto rename = [&](const std::string& v) {
    auto it = glue.find(v);
    return it == glue.end() ? v : it->second;
  };
  Names v = torus9_vertices("a");
  for (const auto& b : torus9_vertices("b"))
    if (!glue.count(b)) v.push_back(b);
  Faces f;
  for (const auto& prefix : {std::string("a"), std::string("b")})
    for (const auto& t : torus9_faces(prefix)) {
      if (t == Faces::value_type{grid(prefix, 0, 0), grid(prefix, 1, 0), grid(prefix, 1, 1)}) continue;
      f.push_back({rename(t[0]), rename(t[1]), rename(t[2])});
    }
  return make("genus2", v, f);
}

ComplexPtr icosahedron() {
  Names v;
  for (int i = 0; i < 12; ++i) v.push_back(idx2("i", i));
  auto up = [](int k) { return idx2("i", 1 + mod(k, 5)); };
  auto low = [](int k) { return idx2("i", 6 + mod(k, 5)); };
  Faces f;
  for (int k = 0; k < 5; ++k) {
    f.push_back({"i00", up(k), up(k + 1)});
    f.push_back({"i11", low(k), low(k + 1)});
    f.push_back({up(k), up(k + 1), low(k)});
    f.push_back({up(k + 1), low(k), low(k + 1)});
  }
  return make("icosahedron", v, f);
}

std::vector<CatalogComplex> build_complexes() {
  std::vector<CatalogComplex> c;
  c.push_back({"point", "single vertex", make("point", {"o"}, {{"o"}})});
  c.push_back({"interval", "one edge", make("interval", {"x0", "x1"}, {{"x0", "x1"}})});
  c.push_back({"disk", "one 2-simplex with its faces", make("disk", {"d0", "d1", "d2"}, {{"d0", "d1", "d2"}})});
  c.push_back({"hexagon", "circle as a 6-cycle v0..v5", cycle("hexagon", "v", 6)});
  c.push_back({"triangle", "circle as a 3-cycle w0..w2", cycle("triangle", "w", 3)});
  c.push_back({"octahedron", "boundary of the cross-polytope; poles n, s over the square a b c d",
               make("octahedron", {"a", "b", "c", "d", "n", "s"},
                    {{"n", "a", "b"}, {"n", "b", "c"}, {"n", "c", "d"}, {"n", "d", "a"},
                     {"s", "a", "b"}, {"s", "b", "c"}, {"s", "c", "d"}, {"s", "d", "a"}})});
  c.push_back({"icosahedron", "poles i00, i11 over two pentagons i01..i05, i06..i10", icosahedron()});
  c.push_back({"torus9", "3x3 grid torus, vertices tij", make("torus9", torus9_vertices("t"), torus9_faces("t"))});
  {
    Names v;
    Faces f;
    for (int i = 0; i < 7; ++i) v.push_back(idx("u", i));
    for (int i = 0; i < 7; ++i) {
      f.push_back({idx("u", i), idx("u", (i + 1) % 7), idx("u", (i + 3) % 7)});
      f.push_back({idx("u", i), idx("u", (i + 2) % 7), idx("u", (i + 3) % 7)});
    }
    c.push_back({"torus7", "7-vertex torus, triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7", make("torus7", v, f)});
  }
  c.push_back({"genus2", "connected sum of two grid tori along a removed triangle", genus2()});
  {
    Names v;
    for (int i = 0; i < 6; ++i) v.push_back(idx("p", i));
    const std::vector<std::array<int, 3>> t{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                            {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    Faces f;
    for (const auto& a : t) f.push_back({idx("p", a[0]), idx("p", a[1]), idx("p", a[2])});
    c.push_back({"rp2_6", "6-vertex real projective plane", make("rp2_6", v, f)});
  }
  return c;
}

const CatalogComplex& find_complex(const std::vector<CatalogComplex>& all, const std::string& name) {
  for (const auto& c : all)
    if (c.name == name) return c;
  throw Error(ErrorKind::Parse, "unknown catalog complex '" + name + "'");
}

std::vector<CatalogMap> build_maps() {
  const auto& all = catalog_complexes();
  std::vector<CatalogMap> maps;
  auto add = [&](const std::string& name, const std::string& provenance, const std::string& dom,
                 const std::string& cod, const std::function<std::string(const std::string&)>& rule) {
    const auto x = find_complex(all, dom).complex;
    const auto y = find_complex(all, cod).complex;
    std::map<std::string, std::string> assignment;
    for (const auto& v : x->vertex_names()) assignment[v] = rule(v);
    maps.push_back({name, provenance, check_simplicial(assignment, x, y, name)});
  };
  auto index_of = [](const std::string& v) { return std::stoi(v.substr(1)); };

  for (const auto& c : all)
    if (c.name != "disk" && c.name != "interval")
      add("id_" + c.name, "identity", c.name, c.name, [](const std::string& v) { return v; });

  add("wrap2", "hexagon -> triangle, v_i -> w_(i mod 3), degree 2", "hexagon", "triangle",
      [&](const std::string& v) { return idx("w", index_of(v) % 3); });
  add("wrap1", "hexagon -> triangle, v_i -> w_(i div 2), degree 1", "hexagon", "triangle",
      [&](const std::string& v) { return idx("w", index_of(v) / 2); });
  add("const_w0", "hexagon -> triangle, constant w0", "hexagon", "triangle", [](const std::string&) { return "w0"; });
  add("const_w1", "hexagon -> triangle, constant w1", "hexagon", "triangle", [](const std::string&) { return "w1"; });
  add("hex_rot", "hexagon rotation v_i -> v_(i+1)", "hexagon", "hexagon",
      [&](const std::string& v) { return idx("v", (index_of(v) + 1) % 6); });
  add("hex_refl", "hexagon reflection v_i -> v_(-i)", "hexagon", "hexagon",
      [&](const std::string& v) { return idx("v", mod(-index_of(v), 6)); });
  add("hex_const0", "hexagon constant v0", "hexagon", "hexagon", [](const std::string&) { return "v0"; });
  add("hex_const3", "hexagon constant v3", "hexagon", "hexagon", [](const std::string&) { return "v3"; });
  add("tri_rot", "triangle rotation w_i -> w_(i+1)", "triangle", "triangle",
      [&](const std::string& v) { return idx("w", (index_of(v) + 1) % 3); });

  const std::map<std::string, std::string> rot{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"n", "n"}, {"s", "s"}};
  const std::map<std::string, std::string> anti{{"a", "c"}, {"b", "d"}, {"c", "a"}, {"d", "b"}, {"n", "s"}, {"s", "n"}};
  add("octa_rot", "quarter turn about the n-s axis", "octahedron", "octahedron",
      [rot](const std::string& v) { return rot.at(v); });
  add("octa_antipodal", "antipodal involution n<->s, a<->c, b<->d", "octahedron", "octahedron",
      [anti](const std::string& v) { return anti.at(v); });
  add("octa_fold", "fold s -> n fixing the equator, degree 0", "octahedron", "octahedron",
      [](const std::string& v) { return v == "s" ? std::string("n") : v; });
  add("octa_const", "constant n", "octahedron", "octahedron", [](const std::string&) { return "n"; });

  auto tij = [](const std::string& v) { return std::pair<int, int>{v[1] - '0', v[2] - '0'}; };
  add("torus_shift", "translation (i,j) -> (i+1,j)", "torus9", "torus9", [&](const std::string& v) {
    auto [i, j] = tij(v);
    return grid("t", (i + 1) % 3, j);
  });
  add("torus_swap", "coordinate swap (i,j) -> (j,i)", "torus9", "torus9", [&](const std::string& v) {
    auto [i, j] = tij(v);
    return grid("t", j, i);
  });
  add("torus_neg", "negation (i,j) -> (-i,-j)", "torus9", "torus9", [&](const std::string& v) {
    auto [i, j] = tij(v);
    return grid("t", mod(-i, 3), mod(-j, 3));
  });
  add("torus_proj", "projection onto the circle (i,0)", "torus9", "torus9", [&](const std::string& v) {
    auto [i, j] = tij(v);
    (void)j;
    return grid("t", i, 0);
  });
  add("torus_const", "constant t00", "torus9", "torus9", [](const std::string&) { return "t00"; });
  add("torus7_shift", "translation i -> i+1 mod 7", "torus7", "torus7",
      [&](const std::string& v) { return idx("u", (index_of(v) + 1) % 7); });
  add("torus7_neg", "negation i -> -i mod 7", "torus7", "torus7",
      [&](const std::string& v) { return idx("u", mod(-index_of(v), 7)); });
  add("genus2_swap", "exchange of the two tori, fixing the glued vertices", "genus2", "genus2",
      [](const std::string& v) {
        if (v == "a00" || v == "a10" || v == "a11") return v;
        return std::string(v[0] == 'a' ? "b" : "a") + v.substr(1);
      });
  add("genus2_const", "constant a00", "genus2", "genus2", [](const std::string&) { return "a00"; });
  add("ico_const", "constant i00", "icosahedron", "icosahedron", [](const std::string&) { return "i00"; });

  auto compose_named = [&](const std::string& name, const std::string& g, const std::string& f) {
    const SimplicialMap* gm = nullptr;
    const SimplicialMap* fm = nullptr;
    for (const auto& m : maps) {
      if (m.name == g) gm = &m.map;
      if (m.name == f) fm = &m.map;
    }
    SimplicialMap c = compose(*gm, *fm);
    c.name = name;
    maps.push_back({name, g + " after " + f, c});
  };
  compose_named("wrap2_refl", "wrap2", "hex_refl");
  compose_named("wrap1_refl", "wrap1", "hex_refl");
  compose_named("wrap2_rot", "wrap2", "hex_rot");
  compose_named("wrap1_rot", "wrap1", "hex_rot");
  compose_named("torus_swap_shift", "torus_swap", "torus_shift");
  compose_named("octa_rot_antipodal", "octa_rot", "octa_antipodal");
  return maps;
}

}  // namespace

const std::vector<CatalogComplex>& catalog_complexes() {
  static const std::vector<CatalogComplex> all = build_complexes();
  return all;
}

const std::vector<CatalogMap>& catalog_maps() {
  static const std::vector<CatalogMap> all = build_maps();
  return all;
}

std::optional<std::string> resolve_alias(const std::string& name) {
  if (name == "torus") return std::string("torus9");
  if (name == "rp2") return std::string("rp2_6");
  for (const auto& c : catalog_complexes())
    if (c.name == name) return name;
  return std::nullopt;
}

ComplexPtr catalog_complex(const std::string& name) {
  const auto resolved = resolve_alias(name);
  if (!resolved) throw Error(ErrorKind::Parse, "unknown catalog complex '" + name + "'");
  return find_complex(catalog_complexes(), *resolved).complex;
}

const SimplicialMap& catalog_map(const std::string& name) {
  for (const auto& m : catalog_maps())
    if (m.name == name) return m.map;
  throw Error(ErrorKind::Parse, "unknown catalog map '" + name + "'");
}

std::vector<std::string> catalog_manifolds() {
  return {"point", "hexagon", "triangle", "octahedron", "icosahedron", "torus9", "torus7", "genus2"};
}

const std::vector<CatalogPair>& catalog_coincidence_pairs() {
  static const std::vector<CatalogPair> pairs{
      {"wrap2", "wrap1"},           {"wrap1", "wrap2"},          {"const_w0", "const_w1"},
      {"wrap2", "const_w0"},        {"hex_refl", "id_hexagon"},  {"hex_rot", "id_hexagon"},
      {"hex_const0", "hex_const3"}, {"id_octahedron", "id_octahedron"}, {"octa_antipodal", "id_octahedron"},
      {"octa_rot", "id_octahedron"}, {"octa_fold", "octa_antipodal"}, {"octa_const", "id_octahedron"},
      {"id_torus9", "id_torus9"},   {"torus_neg", "id_torus9"},  {"torus_swap", "torus_neg"},
      {"torus_proj", "torus_shift"}, {"torus7_neg", "id_torus7"}, {"id_genus2", "id_genus2"},
      {"genus2_swap", "id_genus2"}, {"id_icosahedron", "ico_const"}};
  return pairs;
}

}  // namespace topq
