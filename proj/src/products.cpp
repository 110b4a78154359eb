#include "topq/products.hpp"

#include "topq/error.hpp"

namespace topq {

Cochain cup(const SimplicialComplex& x, const Cochain& a, const Cochain& b) {
  const int p = a.degree, q = b.degree;
  Cochain out{p + q, QVector(x.count(p + q), Rational(0))};
  const auto& top = x.simplices(p + q);
  for (std::size_t s = 0; s < top.size(); ++s) {
    const auto& v = top[s];
    const Simplex front(v.begin(), v.begin() + p + 1);
    const Simplex back(v.begin() + p, v.end());
    const auto& av = a.coeffs[x.index_of(front).value()];
    if (av == 0) continue;
    out.coeffs[s] = av * b.coeffs[x.index_of(back).value()];
  }
  return out;
}

Chain cap(const SimplicialComplex& x, const Cochain& b, const Chain& s) {
  const int p = b.degree, k = s.degree;
  if (p > k) throw Error(ErrorKind::DegreeMismatch, "cap of a degree " + std::to_string(p) + " cochain with a degree " +
                                                        std::to_string(k) + " chain");
  Chain out{k - p, QVector(x.count(k - p), Rational(0))};
  const auto& level = x.simplices(k);
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    if (s.coeffs[i] == 0) continue;
    const auto& v = level[i];
    const Simplex front(v.begin(), v.begin() + (k - p) + 1);
    const Simplex back(v.begin() + (k - p), v.end());
    const auto& bv = b.coeffs[x.index_of(back).value()];
    if (bv == 0) continue;
    out.coeffs[x.index_of(front).value()] += bv * s.coeffs[i];
  }
  return out;
}

Cochain unit_cochain(const SimplicialComplex& x) { return Cochain{0, QVector(x.count(0), Rational(1))}; }

Rational evaluate(const Cochain& a, const Chain& s) {
  if (a.degree != s.degree) throw Error(ErrorKind::DegreeMismatch, "evaluation across degrees");
  return dot(a.coeffs, s.coeffs);
}

HClass cup(const Factor& f, const HClass& a, const HClass& b) {
  const auto& c = f.cohomology;
  const Cochain prod =
      cup(*f.complex, Cochain{a.degree, c.representative(a)}, Cochain{b.degree, c.representative(b)});
  return c.class_of(prod.degree, prod.coeffs);
}

HClass cap(const Factor& f, const HClass& a, const HClass& s) {
  const Chain out = cap(*f.complex, Cochain{a.degree, f.cohomology.representative(a)},
                        Chain{s.degree, f.homology.representative(s)});
  return f.homology.class_of(out.degree, out.coeffs);
}

FactorPtr analyze(const ComplexPtr& x) {
  auto f = std::make_shared<Factor>();
  f->complex = x;
  f->chains = build_chain_complex(*x);
  f->homology = GradedSpace::homology(f->chains);
  f->cohomology = GradedSpace::cohomology(f->chains);
  const auto& c = f->cohomology;
  const auto& h = f->homology;
  const std::size_t nc = c.total_dim(), nh = h.total_dim();

  f->unit = QVector(nc, Rational(0));
  if (!x->empty()) f->unit = c.embed(c.class_of(0, unit_cochain(*x).coeffs));

  f->cup_table.assign(nc, std::vector<QVector>(nc, QVector(nc, Rational(0))));
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t k = 0; k < nc; ++k) {
      const int di = c.degree_of(i), dk = c.degree_of(k);
      if (di + dk > c.top_degree()) continue;
      const auto a = c.basis_class(di, i - c.offset(di));
      const auto b = c.basis_class(dk, k - c.offset(dk));
      f->cup_table[i][k] = c.embed(cup(*f, a, b));
    }

  f->cap_table.assign(nc, std::vector<QVector>(nh, QVector(nh, Rational(0))));
  f->pairing = QMatrix(nc, nh);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nh; ++j) {
      const int di = c.degree_of(i), dj = h.degree_of(j);
      const auto a = c.basis_class(di, i - c.offset(di));
      const auto s = h.basis_class(dj, j - h.offset(dj));
      if (di <= dj) f->cap_table[i][j] = h.embed(cap(*f, a, s));
      if (di == dj) f->pairing(i, j) = kronecker(c, a, h, s);
    }
  return f;
}

QVector cup_total(const Factor& f, const QVector& a, const QVector& b) {
  QVector out(f.cohomology.total_dim(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b[k] != 0) out = out + (a[i] * b[k]) * f.cup_table[i][k];
  }
  return out;
}

QVector cap_total(const Factor& f, const QVector& a, const QVector& s) {
  QVector out(f.homology.total_dim(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s[j] != 0) out = out + (a[i] * s[j]) * f.cap_table[i][j];
  }
  return out;
}

std::vector<std::size_t> ProductSpace::betti() const {
  const auto bx = x->homology.betti(), by = y->homology.betti();
  if (bx.empty() || by.empty()) return {};
  std::vector<std::size_t> b(bx.size() + by.size() - 1, 0);
  for (std::size_t i = 0; i < bx.size(); ++i)
    for (std::size_t j = 0; j < by.size(); ++j) b[i + j] += bx[i] * by[j];
  return b;
}

namespace {

const GradedSpace& side(const Factor& f, Variance v) { return v == Variance::Cohomology ? f.cohomology : f.homology; }

void add_outer(QMatrix& m, const Rational& s, const QVector& a, const QVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) m(i, j) += s * a[i] * b[j];
  }
}

void require(const TensorClass& t, Variance v, const char* what) {
  if (t.variance != v) throw Error(ErrorKind::DegreeMismatch, std::string(what) + ": wrong variance");
}

}  // namespace

TensorClass ProductSpace::zero(Variance v) const {
  return TensorClass{v, QMatrix(side(*x, v).total_dim(), side(*y, v).total_dim())};
}

int ProductSpace::degree(const TensorClass& t) const {
  const auto& sx = side(*x, t.variance);
  const auto& sy = side(*y, t.variance);
  int deg = -1;
  for (std::size_t i = 0; i < t.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < t.coeffs.cols(); ++j) {
      if (t.coeffs(i, j) == 0) continue;
      const int d = sx.degree_of(i) + sy.degree_of(j);
      if (deg >= 0 && d != deg) throw Error(ErrorKind::DegreeMismatch, "inhomogeneous tensor class");
      deg = d;
    }
  return deg;
}

ProductSpace product_space(FactorPtr x, FactorPtr y) { return ProductSpace{std::move(x), std::move(y)}; }

TensorClass cross_total(const ProductSpace& p, Variance v, const QVector& a, const QVector& b) {
  TensorClass t = p.zero(v);
  add_outer(t.coeffs, 1, a, b);
  return t;
}

TensorClass cross(const ProductSpace& p, const HClass& a, const HClass& b) {
  return cross_total(p, Variance::Cohomology, p.x->cohomology.embed(a), p.y->cohomology.embed(b));
}

TensorClass cross_h(const ProductSpace& p, const HClass& s, const HClass& t) {
  return cross_total(p, Variance::Homology, p.x->homology.embed(s), p.y->homology.embed(t));
}

TensorClass cup_on_product(const ProductSpace& p, const TensorClass& s, const TensorClass& t) {
  require(s, Variance::Cohomology, "cup");
  require(t, Variance::Cohomology, "cup");
  TensorClass out = p.zero(Variance::Cohomology);
  const auto& X = *p.x;
  const auto& Y = *p.y;
  for (std::size_t i = 0; i < s.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < s.coeffs.cols(); ++j) {
      if (s.coeffs(i, j) == 0) continue;
      for (std::size_t k = 0; k < t.coeffs.rows(); ++k)
        for (std::size_t l = 0; l < t.coeffs.cols(); ++l) {
          if (t.coeffs(k, l) == 0) continue;
          const int sign = sign_of_parity(static_cast<long>(Y.cdeg(j)) * X.cdeg(k));
          add_outer(out.coeffs, sign * s.coeffs(i, j) * t.coeffs(k, l), X.cup_table[i][k], Y.cup_table[j][l]);
        }
    }
  return out;
}

TensorClass cap_on_product(const ProductSpace& p, const TensorClass& c, const TensorClass& h) {
  require(c, Variance::Cohomology, "cap");
  require(h, Variance::Homology, "cap");
  TensorClass out = p.zero(Variance::Homology);
  const auto& X = *p.x;
  const auto& Y = *p.y;
  for (std::size_t i = 0; i < c.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < c.coeffs.cols(); ++j) {
      if (c.coeffs(i, j) == 0) continue;
      for (std::size_t k = 0; k < h.coeffs.rows(); ++k)
        for (std::size_t l = 0; l < h.coeffs.cols(); ++l) {
          if (h.coeffs(k, l) == 0) continue;
          const int sign = sign_of_parity(static_cast<long>(Y.cdeg(j)) * X.hdeg(k));
          add_outer(out.coeffs, sign * c.coeffs(i, j) * h.coeffs(k, l), X.cap_table[i][k], Y.cap_table[j][l]);
        }
    }
  return out;
}

Rational kronecker_on_product(const ProductSpace& p, const TensorClass& c, const TensorClass& h) {
  require(c, Variance::Cohomology, "kronecker");
  require(h, Variance::Homology, "kronecker");
  const auto& X = *p.x;
  const auto& Y = *p.y;
  Rational sum = 0;
  for (std::size_t i = 0; i < c.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < c.coeffs.cols(); ++j) {
      if (c.coeffs(i, j) == 0) continue;
      for (std::size_t k = 0; k < h.coeffs.rows(); ++k) {
        if (X.pairing(i, k) == 0) continue;
        for (std::size_t l = 0; l < h.coeffs.cols(); ++l) {
          if (h.coeffs(k, l) == 0 || Y.pairing(j, l) == 0) continue;
          const int sign = sign_of_parity(static_cast<long>(Y.hdeg(l)) * X.cdeg(i));
          sum += sign * c.coeffs(i, j) * h.coeffs(k, l) * X.pairing(i, k) * Y.pairing(j, l);
        }
      }
    }
  return sum;
}

QVector diagonal_pullback(const ProductSpace& p, const TensorClass& t) {
  require(t, Variance::Cohomology, "diagonal pullback");
  if (p.x.get() != p.y.get()) throw Error(ErrorKind::DimensionMismatch, "diagonal pullback needs X x X");
  const auto& X = *p.x;
  QVector out(X.cohomology.total_dim(), Rational(0));
  for (std::size_t i = 0; i < t.coeffs.rows(); ++i)
    for (std::size_t k = 0; k < t.coeffs.cols(); ++k)
      if (t.coeffs(i, k) != 0) out = out + t.coeffs(i, k) * X.cup_table[i][k];
  return out;
}

TensorClass swap(const ProductSpace& p, const TensorClass& t) {
  const auto& sx = side(*p.x, t.variance);
  const auto& sy = side(*p.y, t.variance);
  TensorClass out{t.variance, QMatrix(t.coeffs.cols(), t.coeffs.rows())};
  for (std::size_t i = 0; i < t.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < t.coeffs.cols(); ++j)
      out.coeffs(j, i) = sign_of_parity(static_cast<long>(sx.degree_of(i)) * sy.degree_of(j)) * t.coeffs(i, j);
  return out;
}

TensorClass apply_factorwise(const QMatrix& f, const QMatrix& g, const TensorClass& t) {
  return TensorClass{t.variance, f * t.coeffs * g.transpose()};
}

}  // namespace topq
