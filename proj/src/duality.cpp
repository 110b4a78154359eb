#include "topq/duality.hpp"

#include "topq/error.hpp"

namespace topq {

FundamentalClass fundamental_class(const Factor& f, const OrientationData& orientation) {
  const auto& x = *f.complex;
  const int n = x.dimension();
  if (!orientation.coherent || orientation.signs.size() != x.count(n))
    throw Error(ErrorKind::NonOrientable, "orientation of " + x.name() + " is not coherent");
  Chain z{n, QVector(x.count(n), Rational(0))};
  for (std::size_t i = 0; i < z.coeffs.size(); ++i) z.coeffs[i] = orientation.signs[i];
  if (!f.homology.is_cycle(n, z.coeffs)) throw Error(ErrorKind::NotClosed, "signed top simplices of " + x.name() + " do not form a cycle");
  if (f.homology.dim(n) != 1)
    throw Error(ErrorKind::HypothesisViolated, x.name() + " is not connected: H_n has dimension " +
                                                   std::to_string(f.homology.dim(n)));
  return FundamentalClass{z, f.homology.class_of(n, z.coeffs)};
}

std::vector<QMatrix> duality_operator(const Factor& f, const HClass& zeta) {
  const int n = zeta.degree;
  std::vector<QMatrix> d;
  for (int q = 0; q <= n; ++q) {
    const auto rows = f.homology.dim(n - q), cols = f.cohomology.dim(q);
    if (rows != cols)
      throw Error(ErrorKind::SingularDuality, "b^" + std::to_string(q) + " != b_" + std::to_string(n - q));
    QMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const auto image = cap(f, f.cohomology.basis_class(q, j), zeta);
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = image.coords[i];
    }
    if (m.rank() != rows) throw Error(ErrorKind::SingularDuality, "cap with zeta is singular in degree " + std::to_string(q));
    d.push_back(std::move(m));
  }
  return d;
}

std::vector<QMatrix> dual_basis(const Factor& f, const HClass& zeta) {
  const int n = zeta.degree;
  const auto& c = f.cohomology;
  std::vector<QMatrix> dual;
  for (int p = 0; p <= n; ++p) {
    if (c.dim(p) != c.dim(n - p))
      throw Error(ErrorKind::SingularPairing, "H^" + std::to_string(p) + " and H^" + std::to_string(n - p) + " differ in dimension");
    QMatrix m(c.dim(p), c.dim(n - p));
    for (std::size_t k = 0; k < c.dim(p); ++k)
      for (std::size_t j = 0; j < c.dim(n - p); ++j)
        m(k, j) = kronecker(c, cup(f, c.basis_class(p, k), c.basis_class(n - p, j)), f.homology, zeta);
    auto inv = m.inverse();
    if (!inv) throw Error(ErrorKind::SingularPairing, "cup pairing is singular in degree " + std::to_string(p));
    dual.push_back(inv->transpose());
  }
  return dual;
}

ManifoldPtr prepare_manifold(const FactorPtr& f) {
  auto m = std::make_shared<Manifold>();
  m->factor = f;
  m->n = f->complex->dimension();
  const auto report = manifold_check(*f->complex);
  if (!report.closed_manifold_candidate())
    throw Error(ErrorKind::NotClosed, f->complex->name() + " is not a closed connected manifold");
  m->orientation = orient(*f->complex);
  m->zeta = fundamental_class(*f, m->orientation);
  m->d = duality_operator(*f, m->zeta.cls);
  for (int k = 0; k <= m->n; ++k) m->d_inv.push_back(m->d[static_cast<std::size_t>(m->n - k)].inverse().value());
  m->dual = dual_basis(*f, m->zeta.cls);
  return m;
}

ManifoldPtr prepare_manifold(const ComplexPtr& x) { return prepare_manifold(analyze(x)); }

HClass duality(const Manifold& m, const HClass& a) {
  const auto& d = m.d.at(static_cast<std::size_t>(a.degree));
  return HClass{m.n - a.degree, d.apply(a.coords)};
}

HClass duality_inverse(const Manifold& m, const HClass& s) {
  const auto& d = m.d_inv.at(static_cast<std::size_t>(s.degree));
  return HClass{m.n - s.degree, d.apply(s.coords)};
}

Rational poincare_pairing(const Manifold& m, const HClass& x, const HClass& y) {
  if (x.degree + y.degree != m.n) return 0;
  return kronecker(m.cohomology(), cup(*m.factor, x, y), m.homology(), m.zeta.cls);
}

HClass intersection(const Manifold& m, const HClass& a, const HClass& b) {
  const int deg = a.degree + b.degree - m.n;
  if (deg < 0) return HClass{deg, {}};
  return duality(m, cup(*m.factor, duality_inverse(m, a), duality_inverse(m, b)));
}

HClass dual_basis_class(const Manifold& m, int p, std::size_t i) {
  return HClass{p, m.dual.at(static_cast<std::size_t>(p)).column(i)};
}

ManifoldMap make_manifold_map(const SimplicialMap& f, ManifoldPtr x, ManifoldPtr y) {
  if (f.domain->name() != x->name() || f.codomain->name() != y->name())
    throw Error(ErrorKind::DimensionMismatch, "map " + f.name + " does not run from " + x->name() + " to " + y->name());
  SimplicialMap g = f;
  g.domain = x->factor->complex;
  g.codomain = y->factor->complex;
  ManifoldMap out{g, x, y, induced_homology(g, x->homology(), y->homology()),
                  induced_cohomology(g, y->cohomology(), x->cohomology())};
  return out;
}

ManifoldMap compose(const ManifoldMap& g, const ManifoldMap& f) {
  return make_manifold_map(compose(g.map, f.map), f.x, g.y);
}

namespace {

QMatrix block_or_zero(const std::vector<QMatrix>& blocks, int deg, std::size_t rows, std::size_t cols) {
  if (deg >= 0 && static_cast<std::size_t>(deg) < blocks.size()) return blocks[static_cast<std::size_t>(deg)];
  return QMatrix(rows, cols);
}

// Total-basis matrices of D (cohomology -> homology) and its inverse.
QMatrix duality_total(const Manifold& m) {
  const auto& c = m.cohomology();
  const auto& h = m.homology();
  QMatrix t(h.total_dim(), c.total_dim());
  for (int q = 0; q <= m.n; ++q) {
    const auto& d = m.d[static_cast<std::size_t>(q)];
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) t(h.offset(m.n - q) + i, c.offset(q) + j) = d(i, j);
  }
  return t;
}

QMatrix duality_inverse_total(const Manifold& m) {
  const auto& c = m.cohomology();
  const auto& h = m.homology();
  QMatrix t(c.total_dim(), h.total_dim());
  for (int k = 0; k <= m.n; ++k) {
    const auto& d = m.d_inv[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) t(c.offset(m.n - k) + i, h.offset(k) + j) = d(i, j);
  }
  return t;
}

}  // namespace

Transfer transfers(const ManifoldMap& f) {
  const auto& X = *f.x;
  const auto& Y = *f.y;
  const int n = X.n, m = Y.n;
  Transfer t;
  t.shift = m - n;
  t.cohomology.shift = m - n;
  t.homology.shift = n - m;
  for (int q = 0; q <= n; ++q) {
    // H^q(X) -> H_{n-q}(X) -> H_{n-q}(Y) -> H^{m-n+q}(Y)
    const auto dx = X.d[static_cast<std::size_t>(q)];
    const auto push = block_or_zero(f.push.blocks, n - q, Y.homology().dim(n - q), X.homology().dim(n - q));
    const auto dy = block_or_zero(Y.d_inv, n - q, Y.cohomology().dim(m - n + q), Y.homology().dim(n - q));
    t.cohomology.blocks.push_back(dy * push * dx);
  }
  for (int q = 0; q <= m; ++q) {
    // H_q(Y) -> H^{m-q}(Y) -> H^{m-q}(X) -> H_{n-m+q}(X)
    const auto dy = Y.d_inv[static_cast<std::size_t>(q)];
    const auto pull = block_or_zero(f.pull.blocks, m - q, X.cohomology().dim(m - q), Y.cohomology().dim(m - q));
    const auto dx = block_or_zero(X.d, m - q, X.homology().dim(n - m + q), X.cohomology().dim(m - q));
    t.homology.blocks.push_back(dx * pull * dy);
  }
  return t;
}

Rational degree(const ManifoldMap& f) {
  if (f.x->n != f.y->n) throw Error(ErrorKind::DimensionMismatch, "degree needs equal dimensions");
  const int n = f.x->n;
  const QVector pushed = f.push.block(n).apply(f.x->zeta.cls.coords);
  return pushed.at(0) / f.y->zeta.cls.coords.at(0);
}

ProductSpace manifold_product(const Manifold& x, const Manifold& y) { return product_space(x.factor, y.factor); }

TensorClass fundamental_product(const ProductSpace& p, const Manifold& x, const Manifold& y) {
  return cross_h(p, x.zeta.cls, y.zeta.cls);
}

TensorClass product_duality(const ProductSpace& p, const Manifold& x, const Manifold& y, const TensorClass& t) {
  return cap_on_product(p, t, fundamental_product(p, x, y));
}

TensorClass product_duality_factorwise(const ProductSpace& p, const Manifold& x, const Manifold& y,
                                       const TensorClass& t) {
  const QMatrix dx = duality_total(x), dy = duality_total(y);
  TensorClass out = p.zero(Variance::Homology);
  for (std::size_t i = 0; i < t.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < t.coeffs.cols(); ++j) {
      if (t.coeffs(i, j) == 0) continue;
      const int sign = sign_of_parity(static_cast<long>(x.n) * y.cohomology().degree_of(j));
      out = out + cross_total(p, Variance::Homology, dx.column(i), dy.column(j)).scaled(sign * t.coeffs(i, j));
    }
  return out;
}

TensorClass product_duality_inverse(const ProductSpace& p, const Manifold& x, const Manifold& y,
                                    const TensorClass& t) {
  const QMatrix dx = duality_inverse_total(x), dy = duality_inverse_total(y);
  TensorClass out = p.zero(Variance::Cohomology);
  for (std::size_t k = 0; k < t.coeffs.rows(); ++k)
    for (std::size_t l = 0; l < t.coeffs.cols(); ++l) {
      if (t.coeffs(k, l) == 0) continue;
      const int sign = sign_of_parity(static_cast<long>(x.n) * (y.n - y.homology().degree_of(l)));
      out = out + cross_total(p, Variance::Cohomology, dx.column(k), dy.column(l)).scaled(sign * t.coeffs(k, l));
    }
  return out;
}

}  // namespace topq
