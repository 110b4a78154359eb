#include "topq/lefschetz.hpp"

#include <algorithm>

#include "topq/error.hpp"

namespace topq {

std::vector<DualIndex> dual_indices(const Manifold& m) {
  std::vector<DualIndex> out;
  for (int p = 0; p <= m.n; ++p)
    for (std::size_t i = 0; i < m.cohomology().dim(m.n - p); ++i) out.push_back(DualIndex{p, i});
  return out;
}

namespace {

HClass b_of(const Manifold& m, const DualIndex& d) { return m.cohomology().basis_class(m.n - d.p, d.index); }
HClass bhat_of(const Manifold& m, const DualIndex& d) { return dual_basis_class(m, d.p, d.index); }

// (a, s) for total coordinates.
Rational evaluate_total(const Factor& f, const QVector& a, const QVector& s) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < s.size(); ++j) sum += a[i] * f.pairing(i, j) * s[j];
  }
  return sum;
}

QVector zeta_total(const Manifold& m) { return m.homology().embed(m.zeta.cls); }

}  // namespace

LefschetzClass lefschetz_class(const ManifoldPtr& mp) {
  const auto& m = *mp;
  LefschetzClass l{product_space(m.factor, m.factor), {}, {}, {}};
  l.value = l.space.zero(Variance::Cohomology);
  const auto idx = dual_indices(m);
  for (const auto& d : idx)
    l.value = l.value + cross(l.space, bhat_of(m, d), b_of(m, d)).scaled(sign_of_parity(m.n - d.p));

  const TensorClass zz = fundamental_product(l.space, m, m);
  l.extraction = QMatrix(idx.size(), idx.size());
  l.expected = QMatrix(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const TensorClass t = cross(l.space, b_of(m, idx[i]), bhat_of(m, idx[j]));
      l.extraction(i, j) = kronecker_on_product(l.space, cup_on_product(l.space, t, l.value), zz);
      if (i == j) {
        const long deg_b = m.n - idx[i].p;
        l.expected(i, j) = sign_of_parity(m.n * deg_b) * sign_of_parity(deg_b);
      }
    }
  return l;
}

EulerData euler_data(const ManifoldPtr& mp) {
  const auto& m = *mp;
  EulerData e;
  const auto& c = m.cohomology();
  e.euler_class = QVector(c.total_dim(), Rational(0));
  for (const auto& d : dual_indices(m)) {
    const QVector term = cup_total(*m.factor, c.embed(bhat_of(m, d)), c.embed(b_of(m, d)));
    e.euler_class = e.euler_class + Rational(sign_of_parity(m.n - d.p)) * term;
  }
  const auto l = lefschetz_class(mp);
  e.diagonal_pullback = diagonal_pullback(l.space, l.value);
  e.euler_number = evaluate_total(*m.factor, e.euler_class, zeta_total(m));
  e.combinatorial = m.factor->complex->euler_characteristic();
  return e;
}

LefschetzHom identity_hom(const Manifold& m) {
  LefschetzHom s;
  for (int p = 0; p <= m.n; ++p) s.push_back(QMatrix::identity(m.cohomology().dim(p)));
  return s;
}

TensorClass lefschetz_iso(const Manifold& m, const ProductSpace& xx, const LefschetzHom& sigma) {
  TensorClass out = xx.zero(Variance::Cohomology);
  for (const auto& d : dual_indices(m)) {
    const HClass image{d.p, sigma.at(static_cast<std::size_t>(d.p)).apply(bhat_of(m, d).coords)};
    out = out + cross(xx, image, b_of(m, d)).scaled(sign_of_parity(d.p));
  }
  return out;
}

Rational graded_trace(const LefschetzHom& sigma) {
  Rational t = 0;
  for (std::size_t p = 0; p < sigma.size(); ++p) t += sign_of_parity(static_cast<long>(p)) * sigma[p].trace();
  return t;
}

Rational diagonal_trace(const Manifold& m, const ProductSpace& xx, const TensorClass& t) {
  return evaluate_total(*m.factor, diagonal_pullback(xx, t), zeta_total(m));
}

const char* to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Found: return "found";
    case WitnessStatus::NoneLambdaZero: return "none-lambda-zero-no-claim";
    case WitnessStatus::SearchExhausted: return "search-exhausted";
    case WitnessStatus::NotRequested: return "not-requested";
  }
  return "?";
}

bool CoincidenceReport::consistent() const {
  return trace_shriek_pull == lambda && trace_homology_shriek == lambda && trace_push_shriek == lambda &&
         pairing == lambda && intersection_reversed == lambda && literal_shriek_pull == sign_n * lambda &&
         literal_homology_shriek == sign_n * lambda && pairing_lefschetz_class == sign_n * lambda &&
         intersection == sign_n * lambda;
}

bool CoincidenceReport::literal_agreement() const {
  return literal_shriek_pull == lambda && literal_homology_shriek == lambda && trace_push_shriek == lambda &&
         pairing_lefschetz_class == lambda && intersection == lambda;
}

CoincidenceReport coincidence_number(const ManifoldMap& f, const ManifoldMap& g) {
  if (f.x->name() != g.x->name() || f.y->name() != g.y->name())
    throw Error(ErrorKind::DimensionMismatch, "f and g must share domain and codomain");
  if (f.x->n != f.y->n) throw Error(ErrorKind::DimensionMismatch, "domain and codomain differ in dimension");
  const auto& X = *f.x;
  const auto& Y = *f.y;
  const int n = X.n;

  CoincidenceReport r;
  r.f_name = f.map.name;
  r.g_name = g.map.name;
  r.n = n;
  r.sign_n = sign_of_parity(n);

  const Transfer tf = transfers(f), tg = transfers(g);
  for (int p = 0; p <= n; ++p) {
    const Rational s = sign_of_parity(p);
    const auto q = n - p;
    r.lambda += s * (f.pull.block(p) * tg.cohomology.block(p)).trace();
    r.trace_shriek_pull += s * (tf.cohomology.block(q) * g.pull.block(q)).trace();
    r.literal_shriek_pull += s * (tf.cohomology.block(p) * g.pull.block(p)).trace();
    r.trace_homology_shriek += s * (tf.homology.block(q) * g.push.block(q)).trace();
    r.literal_homology_shriek += s * (tf.homology.block(p) * g.push.block(p)).trace();
    r.trace_push_shriek += s * (f.push.block(p) * tg.homology.block(p)).trace();
  }

  const ProductSpace xx = product_space(X.factor, X.factor);
  const ProductSpace yy = product_space(Y.factor, Y.factor);
  const QMatrix fs = f.pull.total(), gs = g.pull.total();
  const TensorClass lambda_y = lefschetz_iso(Y, yy, identity_hom(Y));
  r.pairing = diagonal_trace(X, xx, apply_factorwise(fs, gs, lambda_y));
  const auto big_lambda_y = lefschetz_class(f.y);
  r.pairing_lefschetz_class = diagonal_trace(X, xx, apply_factorwise(fs, gs, big_lambda_y.value));

  // zeta_f = (1 x f)_* Delta_* zeta_X with Delta_* zeta_X = Lambda_X n zeta_{XxX}.
  const auto big_lambda_x = lefschetz_class(f.x);
  const TensorClass diag = cap_on_product(xx, big_lambda_x.value, fundamental_product(xx, X, X));
  const ProductSpace xy = product_space(X.factor, Y.factor);
  const QMatrix id = QMatrix::identity(X.homology().total_dim());
  const TensorClass zeta_f = apply_factorwise(id, f.push.total(), diag);
  const TensorClass zeta_g = apply_factorwise(id, g.push.total(), diag);
  const TensorClass gamma_f = product_duality_inverse(xy, X, Y, zeta_f);
  const TensorClass gamma_g = product_duality_inverse(xy, X, Y, zeta_g);
  const TensorClass unit = cross_total(xy, Variance::Cohomology, X.factor->unit, Y.factor->unit);
  r.intersection =
      kronecker_on_product(xy, unit, product_duality(xy, X, Y, cup_on_product(xy, gamma_f, gamma_g)));
  r.intersection_reversed =
      kronecker_on_product(xy, unit, product_duality(xy, X, Y, cup_on_product(xy, gamma_g, gamma_f)));
  return r;
}

namespace {

// Points of successive subdivisions, in barycentric coordinates over the
// vertices of the original complex.
struct Level {
  SimplicialComplex complex;
  std::vector<QVector> position;
};

QVector push_point(const SimplicialMap& f, const QVector& x) {
  QVector y(f.codomain->num_vertices(), Rational(0));
  for (std::size_t v = 0; v < x.size(); ++v)
    if (x[v] != 0) y[static_cast<std::size_t>(f.vertex_map[v])] += x[v];
  return y;
}

}  // namespace

bool verify_witness(const SimplicialMap& f, const SimplicialMap& g, const Simplex& carrier, const QVector& coords) {
  const GeometricPoint pt{carrier, coords};
  if (!pt.valid() || !f.domain->contains(carrier)) return false;
  QVector x(f.domain->num_vertices(), Rational(0));
  for (std::size_t i = 0; i < carrier.size(); ++i) x[static_cast<std::size_t>(carrier[i])] = coords[i];
  return push_point(f, x) == push_point(g, x);
}

Witness coincidence_witness(const SimplicialMap& f, const SimplicialMap& g, int max_subdivisions,
                            bool lambda_nonzero) {
  if (f.domain->name() != g.domain->name() || f.codomain->name() != g.codomain->name())
    throw Error(ErrorKind::DimensionMismatch, "f and g must share domain and codomain");
  const auto& x = *f.domain;
  Witness w;
  Level level{x, {}};
  for (std::size_t v = 0; v < x.num_vertices(); ++v) level.position.push_back(unit_vector(x.num_vertices(), v));

  for (int k = 0; k <= max_subdivisions; ++k) {
    const auto& c = level.complex;
    for (int d = 0; d <= c.dimension(); ++d)
      for (const auto& s : c.simplices(d)) {
        ++w.simplices_checked;
        // Columns: (|f| - |g|) applied to each vertex position of s.
        std::vector<QVector> diff;
        for (int v : s) {
          const auto& pos = level.position[static_cast<std::size_t>(v)];
          diff.push_back(push_point(f, pos) - push_point(g, pos));
        }
        std::optional<QVector> t;
        if (d == 0) {
          if (is_zero(diff[0])) t = QVector{Rational(1)};
        } else {
          LinearSystem sys;
          sys.num_vars = s.size();
          sys.nonnegative.assign(s.size(), true);
          sys.constraints.push_back(LinearConstraint{QVector(s.size(), Rational(1)), Relation::Equal, 1});
          for (std::size_t y = 0; y < f.codomain->num_vertices(); ++y) {
            LinearConstraint row{QVector(s.size(), Rational(0)), Relation::Equal, 0};
            bool any = false;
            for (std::size_t i = 0; i < s.size(); ++i) {
              row.coeffs[i] = diff[i][y];
              any = any || row.coeffs[i] != 0;
            }
            if (any) sys.constraints.push_back(std::move(row));
          }
          t = lp_feasible(sys);
        }
        if (!t) continue;

        QVector base(x.num_vertices(), Rational(0));
        for (std::size_t i = 0; i < s.size(); ++i)
          base = base + (*t)[i] * level.position[static_cast<std::size_t>(s[i])];
        w.level = k;
        w.carrier_label = c.label(s);
        w.coords = *t;
        for (std::size_t v = 0; v < base.size(); ++v)
          if (base[v] != 0) {
            w.base_carrier.push_back(static_cast<int>(v));
            w.base_coords.push_back(base[v]);
          }
        w.image = push_point(f, base);
        if (!verify_witness(f, g, w.base_carrier, w.base_coords))
          throw Error(ErrorKind::ApproximationUnavailable, "witness candidate failed exact verification");
        w.status = WitnessStatus::Found;
        return w;
      }
    if (k == max_subdivisions) break;
    const Subdivision sd = barycentric_subdivide(level.complex);
    Level next{sd.complex, {}};
    for (const auto& prov : sd.provenance) {
      QVector p(x.num_vertices(), Rational(0));
      for (int v : prov) p = p + level.position[static_cast<std::size_t>(v)];
      next.position.push_back(Rational(1, static_cast<unsigned long>(prov.size())) * p);
    }
    level = std::move(next);
  }
  w.status = lambda_nonzero ? WitnessStatus::SearchExhausted : WitnessStatus::NoneLambdaZero;
  return w;
}

}  // namespace topq
