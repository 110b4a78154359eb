#include "topq/homology.hpp"

#include <algorithm>
#include <set>

#include "topq/error.hpp"

namespace topq {

GradedSpace GradedSpace::homology(const ChainComplex& c) {
  std::vector<SparseMatrix> out, in;
  for (int m = 0; m <= c.top_degree(); ++m) {
    out.push_back(c.d(m));
    in.push_back(c.d(m + 1));
  }
  return build(c.name, Variance::Homology, out, in);
}

GradedSpace GradedSpace::cohomology(const ChainComplex& c) {
  std::vector<SparseMatrix> out, in;
  for (int m = 0; m <= c.top_degree(); ++m) {
    out.push_back(c.coboundary(m));
    in.push_back(c.coboundary(m - 1));
  }
  return build(c.name, Variance::Cohomology, out, in);
}

GradedSpace GradedSpace::build(const std::string& name, Variance variance, const std::vector<SparseMatrix>& outgoing,
                               const std::vector<SparseMatrix>& incoming) {
  GradedSpace s;
  s.variance_ = variance;
  s.name_ = name;
  for (std::size_t m = 0; m < outgoing.size(); ++m) {
    Level level;
    level.cells = outgoing[m].cols();
    level.outgoing = outgoing[m];
    auto in = std::make_shared<Factorization>(incoming[m]);
    const auto boundaries = in->image_basis();
    const auto cycles = Factorization(outgoing[m]).kernel_basis();
    SpanReducer span(level.cells);
    for (const auto& b : boundaries) span.add(b);
    for (const auto& z : cycles)
      if (span.add(z)) level.reps.push_back(z);
    level.boundary_rank = boundaries.size();
    std::vector<QVector> columns = boundaries;
    columns.insert(columns.end(), level.reps.begin(), level.reps.end());
    level.spanned = std::make_shared<Factorization>(SparseMatrix::from_columns(level.cells, columns));
    level.incoming = std::move(in);
    s.levels_.push_back(std::move(level));
  }
  return s;
}

std::size_t GradedSpace::dim(int deg) const {
  if (deg < 0 || deg > top_degree()) return 0;
  return levels_[static_cast<std::size_t>(deg)].reps.size();
}

std::size_t GradedSpace::cells(int deg) const {
  if (deg < 0 || deg > top_degree()) return 0;
  return levels_[static_cast<std::size_t>(deg)].cells;
}

std::vector<std::size_t> GradedSpace::betti() const {
  std::vector<std::size_t> b;
  for (int m = 0; m <= top_degree(); ++m) b.push_back(dim(m));
  return b;
}

const std::vector<QVector>& GradedSpace::representatives(int deg) const {
  static const std::vector<QVector> none;
  if (deg < 0 || deg > top_degree()) return none;
  return levels_[static_cast<std::size_t>(deg)].reps;
}

QVector GradedSpace::representative(const HClass& c) const {
  QVector out(cells(c.degree), Rational(0));
  const auto& reps = representatives(c.degree);
  if (c.coords.size() != reps.size()) throw Error(ErrorKind::DimensionMismatch, "class has the wrong length");
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (c.coords[i] != 0)
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += c.coords[i] * reps[i][k];
  return out;
}

HClass GradedSpace::basis_class(int deg, std::size_t i) const { return HClass{deg, unit_vector(dim(deg), i)}; }

bool GradedSpace::is_cycle(int deg, const QVector& chain) const {
  if (deg < 0 || deg > top_degree()) return is_zero(chain);
  return is_zero(levels_[static_cast<std::size_t>(deg)].outgoing.apply(chain));
}

bool GradedSpace::is_boundary(int deg, const QVector& chain) const {
  if (deg < 0 || deg > top_degree()) return is_zero(chain);
  return levels_[static_cast<std::size_t>(deg)].incoming->solve(chain).has_value();
}

QVector GradedSpace::coordinates(int deg, const QVector& chain) const {
  if (deg < 0 || deg > top_degree()) {
    if (!is_zero(chain)) throw Error(ErrorKind::DegreeMismatch, "nonzero chain outside the degree range");
    return {};
  }
  const auto& level = levels_[static_cast<std::size_t>(deg)];
  if (chain.size() != level.cells) throw Error(ErrorKind::DimensionMismatch, "chain has the wrong length");
  if (!is_cycle(deg, chain)) throw Error(ErrorKind::DegreeMismatch, "not a cycle in degree " + std::to_string(deg));
  auto x = level.spanned->solve(chain);
  if (!x) throw Error(ErrorKind::DegreeMismatch, "cycle outside the computed span");
  return QVector(x->begin() + static_cast<long>(level.boundary_rank), x->end());
}

std::size_t GradedSpace::total_dim() const { return offset(top_degree() + 1); }

std::size_t GradedSpace::offset(int deg) const {
  std::size_t o = 0;
  for (int m = 0; m < deg && m <= top_degree(); ++m) o += dim(m);
  return o;
}

int GradedSpace::degree_of(std::size_t total_index) const {
  for (int m = 0; m <= top_degree(); ++m) {
    if (total_index < dim(m)) return m;
    total_index -= dim(m);
  }
  throw Error(ErrorKind::DimensionMismatch, "total index out of range");
}

QVector GradedSpace::embed(const HClass& c) const {
  QVector out(total_dim(), Rational(0));
  const auto o = offset(c.degree);
  for (std::size_t i = 0; i < c.coords.size(); ++i) out[o + i] = c.coords[i];
  return out;
}

HClass GradedSpace::extract(int deg, const QVector& total) const {
  const auto o = offset(deg);
  return HClass{deg, QVector(total.begin() + static_cast<long>(o), total.begin() + static_cast<long>(o + dim(deg)))};
}

QMatrix GradedMap::total() const {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  QMatrix t(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) t(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return t;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  GradedMap out;
  out.shift = f.shift + g.shift;
  for (std::size_t m = 0; m < f.blocks.size(); ++m) {
    const int target = static_cast<int>(m) + f.shift;
    if (target < 0 || static_cast<std::size_t>(target) >= g.blocks.size()) {
      out.blocks.emplace_back(0, f.blocks[m].cols());
      continue;
    }
    out.blocks.push_back(g.block(target) * f.blocks[m]);
  }
  return out;
}

GradedMap identity_graded(const GradedSpace& s) {
  GradedMap out;
  for (int m = 0; m <= s.top_degree(); ++m) out.blocks.push_back(QMatrix::identity(s.dim(m)));
  return out;
}

GradedMap induced_on(const GradedSpace& src, const GradedSpace& dst, const std::vector<SparseMatrix>& cells,
                     int shift) {
  GradedMap out;
  out.shift = shift;
  for (int m = 0; m <= src.top_degree(); ++m) {
    const int target = m + shift;
    QMatrix block(dst.dim(target), src.dim(m));
    if (static_cast<std::size_t>(m) < cells.size()) {
      const auto& cm = cells[static_cast<std::size_t>(m)];
      for (std::size_t j = 0; j < src.dim(m); ++j) {
        const QVector image = cm.apply(src.representatives(m)[j]);
        const QVector coords = dst.coordinates(target, image);
        for (std::size_t i = 0; i < coords.size(); ++i) block(i, j) = coords[i];
      }
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

GradedMap induced_homology(const SimplicialMap& f, const GradedSpace& hx, const GradedSpace& hy) {
  return induced_on(hx, hy, induced_chain_map(f));
}

GradedMap induced_cohomology(const SimplicialMap& f, const GradedSpace& cy, const GradedSpace& cx) {
  std::vector<SparseMatrix> pullback;
  for (const auto& fm : induced_chain_map(f)) pullback.push_back(fm.transpose());
  return induced_on(cy, cx, pullback);
}

Rational kronecker(const GradedSpace& coh, const HClass& alpha, const GradedSpace& hom, const HClass& sigma) {
  if (alpha.degree != sigma.degree)
    throw Error(ErrorKind::DegreeMismatch, "Kronecker pairing of degrees " + std::to_string(alpha.degree) + " and " +
                                               std::to_string(sigma.degree));
  if (alpha.degree < 0 || alpha.degree > coh.top_degree() || alpha.degree > hom.top_degree()) return 0;
  return dot(coh.representative(alpha), hom.representative(sigma));
}

QMatrix pairing_matrix(const GradedSpace& coh, const GradedSpace& hom, int deg) {
  QMatrix p(coh.dim(deg), hom.dim(deg));
  for (std::size_t i = 0; i < coh.dim(deg); ++i)
    for (std::size_t j = 0; j < hom.dim(deg); ++j)
      p(i, j) = dot(coh.representatives(deg)[i], hom.representatives(deg)[j]);
  return p;
}

bool ExactSequence::exact() const {
  return std::all_of(nodes.begin(), nodes.end(), [](const SequenceNode& n) { return n.exact(); });
}

namespace {

QMatrix block_or_zero(const GradedMap& f, int m, std::size_t rows, std::size_t cols) {
  if (m >= 0 && static_cast<std::size_t>(m) < f.blocks.size()) return f.block(m);
  return QMatrix(rows, cols);
}

SequenceNode check_node(std::string group, int degree, const QMatrix& in, const QMatrix& out, std::size_t dim) {
  SequenceNode node;
  node.group = std::move(group);
  node.degree = degree;
  node.composite_zero = (out * in).is_zero();
  node.ranks_match = in.rank() + out.rank() == dim;
  return node;
}

}  // namespace

ExactSequence long_exact_sequence(const RelativePair& pair) {
  ExactSequence s;
  s.h_sub = GradedSpace::homology(pair.sub);
  s.h_ambient = GradedSpace::homology(pair.ambient);
  s.h_relative = GradedSpace::homology(pair.quotient);
  const int n = pair.ambient.top_degree();

  const auto i = induced_on(s.h_sub, s.h_ambient, pair.inclusion_map());
  const auto j = induced_on(s.h_ambient, s.h_relative, pair.projection());
  std::vector<SparseMatrix> conn;
  for (int m = 0; m <= n; ++m) conn.push_back(pair.connecting(m));
  const auto d = induced_on(s.h_relative, s.h_sub, conn, -1);

  for (int m = 0; m <= n; ++m) {
    s.i_star.push_back(block_or_zero(i, m, s.h_ambient.dim(m), s.h_sub.dim(m)));
    s.j_star.push_back(block_or_zero(j, m, s.h_relative.dim(m), s.h_ambient.dim(m)));
    s.connecting.push_back(block_or_zero(d, m, s.h_sub.dim(m - 1), s.h_relative.dim(m)));
  }
  for (int m = 0; m <= n; ++m) {
    const auto um = static_cast<std::size_t>(m);
    const QMatrix d_next = m < n ? s.connecting[um + 1] : QMatrix(s.h_sub.dim(m), 0);
    s.nodes.push_back(check_node("A", m, d_next, s.i_star[um], s.h_sub.dim(m)));
    s.nodes.push_back(check_node("X", m, s.i_star[um], s.j_star[um], s.h_ambient.dim(m)));
    s.nodes.push_back(check_node("X,A", m, s.j_star[um], s.connecting[um], s.h_relative.dim(m)));
  }
  return s;
}

bool ExcisionReport::isomorphism() const { return std::all_of(iso.begin(), iso.end(), [](bool b) { return b; }); }

namespace {

std::set<Simplex> face_closure(const std::vector<Simplex>& simplices) {
  std::set<Simplex> out;
  for (const auto& s : simplices) {
    const std::uint32_t full = (1u << s.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      out.insert(std::move(f));
    }
  }
  return out;
}

bool is_face(const Simplex& f, const Simplex& s) { return std::includes(s.begin(), s.end(), f.begin(), f.end()); }

}  // namespace

ExcisionReport excision_check(const ComplexPtr& x, const std::vector<Simplex>& a, const std::vector<Simplex>& u) {
  std::vector<Simplex> all;
  for (int m = 0; m <= x->dimension(); ++m)
    for (const auto& s : x->simplices(m)) all.push_back(s);

  std::vector<Simplex> sorted_a;
  for (Simplex s : a) {
    std::sort(s.begin(), s.end());
    if (!x->contains(s)) throw Error(ErrorKind::NotSubcomplex, x->label(s) + " is not a simplex of " + x->name());
    sorted_a.push_back(std::move(s));
  }
  const auto in_a = face_closure(sorted_a);
  std::set<Simplex> in_u;
  for (Simplex s : u) {
    std::sort(s.begin(), s.end());
    if (!x->contains(s)) throw Error(ErrorKind::HypothesisViolated, x->label(s) + " is not a simplex");
    in_u.insert(std::move(s));
  }
  for (const auto& s : all)
    for (const auto& v : in_u)
      if (is_face(v, s) && !in_u.count(s))
        throw Error(ErrorKind::HypothesisViolated, "U is not open: " + x->label(s) + " is missing");
  for (const auto& f : face_closure(std::vector<Simplex>(in_u.begin(), in_u.end()))) {
    if (!in_a.count(f)) throw Error(ErrorKind::HypothesisViolated, "closure of U leaves A at " + x->label(f));
    for (const auto& s : all)
      if (is_face(f, s) && !in_a.count(s))
        throw Error(ErrorKind::HypothesisViolated, "closure of U meets the frontier of A at " + x->label(f));
  }

  std::vector<Simplex> x_rest, a_rest;
  for (const auto& s : all)
    if (!in_u.count(s)) x_rest.push_back(s);
  for (const auto& s : in_a)
    if (!in_u.count(s)) a_rest.push_back(s);

  const auto xs = make_subcomplex(x, x_rest, x->name() + "-U");
  const auto as = make_subcomplex(x, a_rest, "A-U");
  const auto af = make_subcomplex(x, std::vector<Simplex>(in_a.begin(), in_a.end()), "A");
  const auto small = build_relative(inclusion_by_names(as.complex, xs.complex));
  const auto full = build_relative(af.inclusion);

  const auto h_small = GradedSpace::homology(small.quotient);
  const auto h_full = GradedSpace::homology(full.quotient);
  const auto push = induced_chain_map(xs.inclusion);
  const auto lift = small.projection();
  const auto proj = full.projection();
  std::vector<SparseMatrix> cells;
  for (int m = 0; m <= small.quotient.top_degree(); ++m) {
    const auto um = static_cast<std::size_t>(m);
    cells.push_back(proj[um] * push[um] * lift[um].transpose());
  }
  const auto induced = induced_on(h_small, h_full, cells);

  ExcisionReport r;
  r.excised_betti = h_small.betti();
  r.full_betti = h_full.betti();
  const int top = std::max(h_small.top_degree(), h_full.top_degree());
  for (int m = 0; m <= top; ++m) {
    const bool square = h_small.dim(m) == h_full.dim(m);
    bool ok = square;
    if (square && m <= h_small.top_degree()) ok = induced.block(m).rank() == h_full.dim(m);
    r.iso.push_back(ok);
  }
  return r;
}

}  // namespace topq
