#include "homcoh/rep.hpp"

#include "homcoh/errors.hpp"
#include "homcoh/multilinear.hpp"

namespace homcoh {

namespace {

Vector bilinear(const Vector& t, std::size_t d1, std::size_t d2, std::size_t dout, const Vector& x, const Vector& y) {
  Vector out = zero_vector(dout);
  for (std::size_t i = 0; i < d1; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d2; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational w = x[i] * y[j];
      const std::size_t base = (i * d2 + j) * dout;
      for (std::size_t k = 0; k < dout; ++k) {
        if (sgn(t[base + k]) != 0) out[k] += w * t[base + k];
      }
    }
  }
  return out;
}

ValidityReport failed(std::string what, std::vector<std::size_t> witness, Vector defect) {
  ValidityReport r;
  r.is_valid = false;
  r.failure = std::move(what);
  r.witness = std::move(witness);
  r.defect = std::move(defect);
  return r;
}

}  // namespace

ValidityReport check_morphism(const HomAlgebra& source, const HomAlgebra& target, const Matrix& matrix) {
  if (matrix.rows() != target.dim || matrix.cols() != source.dim) {
    throw DimensionError("check_morphism: matrix shape does not match the algebras");
  }
  const std::size_t n = source.dim;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector d = matrix * source.mul.value(i * n + j) - multiply(target, matrix.column(i), matrix.column(j));
      if (!is_zero(d)) return failed("morphism-product", {i, j}, d);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vector d = matrix * source.alpha.column(j) - target.alpha * matrix.column(j);
    if (!is_zero(d)) return failed("morphism-twist", {j}, d);
  }
  return {};
}

Bimodule::Bimodule(std::size_t algebra_dim, std::size_t carrier_dim)
    : beta(Matrix::identity(carrier_dim)),
      algebra_dim_(algebra_dim),
      carrier_dim_(carrier_dim),
      rho_l_(algebra_dim * carrier_dim * carrier_dim, Rational(0)),
      rho_r_(algebra_dim * carrier_dim * carrier_dim, Rational(0)) {}

Rational& Bimodule::left_at(std::size_t a, std::size_t m, std::size_t out) {
  return rho_l_[(a * carrier_dim_ + m) * carrier_dim_ + out];
}

Rational& Bimodule::right_at(std::size_t m, std::size_t a, std::size_t out) {
  return rho_r_[(m * algebra_dim_ + a) * carrier_dim_ + out];
}

Vector Bimodule::left(const Vector& a, const Vector& m) const {
  if (a.size() != algebra_dim_ || m.size() != carrier_dim_) throw DimensionError("left action: length mismatch");
  return bilinear(rho_l_, algebra_dim_, carrier_dim_, carrier_dim_, a, m);
}

Vector Bimodule::right(const Vector& m, const Vector& a) const {
  if (a.size() != algebra_dim_ || m.size() != carrier_dim_) throw DimensionError("right action: length mismatch");
  return bilinear(rho_r_, carrier_dim_, algebra_dim_, carrier_dim_, m, a);
}

LieModule::LieModule(std::size_t algebra_dim, std::size_t carrier_dim)
    : beta(Matrix::identity(carrier_dim)),
      algebra_dim_(algebra_dim),
      carrier_dim_(carrier_dim),
      action_(algebra_dim * carrier_dim * carrier_dim, Rational(0)) {}

Rational& LieModule::action_at(std::size_t g, std::size_t v, std::size_t out) {
  return action_[(g * carrier_dim_ + v) * carrier_dim_ + out];
}

const Rational& LieModule::action_at(std::size_t g, std::size_t v, std::size_t out) const {
  return action_[(g * carrier_dim_ + v) * carrier_dim_ + out];
}

Vector LieModule::act(const Vector& g, const Vector& v) const {
  if (g.size() != algebra_dim_ || v.size() != carrier_dim_) throw DimensionError("module action: length mismatch");
  return bilinear(action_, algebra_dim_, carrier_dim_, carrier_dim_, g, v);
}

ValidityReport check_bimodule(const HomAlgebra& a, const Bimodule& m) {
  if (m.algebra_dim() != a.dim) throw DimensionError("check_bimodule: algebra dimension mismatch");
  const std::size_t n = a.dim;
  const std::size_t d = m.carrier_dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < d; ++k) {
        const Vector ex = unit_vector(n, x), ey = unit_vector(n, y), em = unit_vector(d, k);
        Vector left = m.left(multiply(a, ex, ey), m.beta * em) - m.left(a.alpha * ex, m.left(ey, em));
        if (!is_zero(left)) return failed("bimodule-left", {x, y, k}, left);
        Vector right = m.right(m.beta * em, multiply(a, ex, ey)) - m.right(m.right(em, ex), a.alpha * ey);
        if (!is_zero(right)) return failed("bimodule-right", {k, x, y}, right);
        Vector comp = m.right(m.left(ex, em), a.alpha * ey) - m.left(a.alpha * ex, m.right(em, ey));
        if (!is_zero(comp)) return failed("bimodule-compatibility", {x, k, y}, comp);
      }
    }
  }
  return {};
}

ValidityReport check_lie_module(const HomAlgebra& l, const LieModule& v) {
  if (v.algebra_dim() != l.dim) throw DimensionError("check_lie_module: algebra dimension mismatch");
  const std::size_t n = l.dim;
  const std::size_t d = v.carrier_dim();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t k = 0; k < d; ++k) {
      const Vector eu = unit_vector(n, u), ek = unit_vector(d, k);
      Vector twist = v.act(l.alpha * eu, v.beta * ek) - v.beta * v.act(eu, ek);
      if (!is_zero(twist)) return failed("module-twist", {u, k}, twist);
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = 0; w < n; ++w) {
      for (std::size_t k = 0; k < d; ++k) {
        const Vector eu = unit_vector(n, u), ew = unit_vector(n, w), ek = unit_vector(d, k);
        Vector cond = v.act(multiply(l, eu, ew), v.beta * ek) - v.act(l.alpha * eu, v.act(ew, ek)) +
                      v.act(l.alpha * ew, v.act(eu, ek));
        if (!is_zero(cond)) return failed("module-condition", {u, w, k}, cond);
      }
    }
  }
  return {};
}

namespace {

void require_morphism(const HomMorphism& phi, Kind kind, bool require_valid) {
  if (phi.source.kind != kind || phi.target.kind != kind) {
    throw InvalidAlgebra("adjoint construction: algebra kind mismatch");
  }
  if (!require_valid) return;
  if (!validate(phi.source).is_valid) throw InvalidAlgebra("source algebra " + phi.source.name + " is not valid");
  if (!validate(phi.target).is_valid) throw InvalidAlgebra("target algebra " + phi.target.name + " is not valid");
  const auto r = check_morphism(phi.source, phi.target, phi.matrix);
  if (!r.is_valid) throw InvalidMorphism("morphism fails " + r.failure);
}

}  // namespace

Bimodule adjoint_bimodule(const HomMorphism& phi, bool require_valid) {
  require_morphism(phi, Kind::associative, require_valid);
  const std::size_t n = phi.source.dim;
  const std::size_t d = phi.target.dim;
  Bimodule m(n, d);
  m.beta = phi.target.alpha;
  for (std::size_t a = 0; a < n; ++a) {
    const Vector pa = phi.matrix.column(a);
    for (std::size_t k = 0; k < d; ++k) {
      const Vector ek = unit_vector(d, k);
      const Vector l = multiply(phi.target, pa, ek);
      const Vector r = multiply(phi.target, ek, pa);
      for (std::size_t o = 0; o < d; ++o) {
        m.left_at(a, k, o) = l[o];
        m.right_at(k, a, o) = r[o];
      }
    }
  }
  return m;
}

LieModule lie_adjoint_module(const HomMorphism& phi, bool require_valid) {
  require_morphism(phi, Kind::lie, require_valid);
  const std::size_t n = phi.source.dim;
  const std::size_t d = phi.target.dim;
  LieModule m(n, d);
  m.beta = phi.target.alpha;
  for (std::size_t g = 0; g < n; ++g) {
    const Vector pg = phi.matrix.column(g);
    for (std::size_t k = 0; k < d; ++k) {
      const Vector v = multiply(phi.target, pg, unit_vector(d, k));
      for (std::size_t o = 0; o < d; ++o) m.action_at(g, k, o) = v[o];
    }
  }
  return m;
}

std::pair<LieModule, bool> coadjoint_module(const LieModule& rep, const HomAlgebra& l) {
  if (rep.algebra_dim() != l.dim) throw DimensionError("coadjoint_module: algebra dimension mismatch");
  const std::size_t n = l.dim;
  const std::size_t d = rep.carrier_dim();
  LieModule dual(n, d);
  dual.beta = rep.beta.transpose();
  // (x . f)(e_v) = -f([x, e_v]); in the dual basis the action matrix is -A_x^T.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t f = 0; f < d; ++f)
      for (std::size_t v = 0; v < d; ++v) dual.action_at(x, f, v) = -rep.action_at(x, v, f);

  bool holds = true;
  for (std::size_t x = 0; x < n && holds; ++x) {
    for (std::size_t y = 0; y < n && holds; ++y) {
      for (std::size_t v = 0; v < d && holds; ++v) {
        const Vector ex = unit_vector(n, x), ey = unit_vector(n, y), ev = unit_vector(d, v);
        Vector lhs = rep.act(multiply(l, ex, ey), rep.beta * ev);
        Vector rhs = rep.act(ex, rep.act(l.alpha * ey, ev)) - rep.act(ey, rep.act(l.alpha * ex, ev));
        holds = lhs == rhs;
      }
    }
  }
  return {dual, holds};
}

}  // namespace homcoh
