#include "homcoh/algebra.hpp"

#include "homcoh/errors.hpp"

namespace homcoh {

std::string to_string(Kind k) { return k == Kind::lie ? "lie" : "associative"; }

HomAlgebra::HomAlgebra() : cache_(std::make_shared<PowerCache>()) {}

HomAlgebra::HomAlgebra(std::string name_, Kind kind_, std::size_t dim_)
    : name(std::move(name_)),
      kind(kind_),
      dim(dim_),
      mul(2, dim_, dim_),
      alpha(Matrix::identity(dim_)),
      cache_(std::make_shared<PowerCache>()) {
  if (dim == 0) throw DimensionError("algebra dimension must be at least 1");
  for (std::size_t i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i + 1));
}

HomAlgebra::HomAlgebra(const HomAlgebra& o)
    : name(o.name),
      kind(o.kind),
      dim(o.dim),
      basis(o.basis),
      mul(o.mul),
      alpha(o.alpha),
      cache_(std::make_shared<PowerCache>()) {}

HomAlgebra& HomAlgebra::operator=(const HomAlgebra& o) {
  if (this != &o) {
    name = o.name;
    kind = o.kind;
    dim = o.dim;
    basis = o.basis;
    mul = o.mul;
    alpha = o.alpha;
    cache_ = std::make_shared<PowerCache>();
  }
  return *this;
}

void HomAlgebra::set_product(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim) throw DimensionError("product value length mismatch");
  for (std::size_t k = 0; k < dim; ++k) {
    c(i, j, k) = value[k];
    if (kind == Kind::lie) c(j, i, k) = -value[k];
  }
}

Matrix HomAlgebra::alpha_power(std::size_t e) const {
  if (!cache_) return power(alpha, e);
  std::lock_guard<std::mutex> guard(cache_->lock);
  auto& p = cache_->powers;
  if (p.size() < 2 || !(p[1] == alpha)) {
    p.clear();
    p.push_back(Matrix::identity(dim));
    p.push_back(alpha);
  }
  while (p.size() <= e) p.push_back(p.back() * alpha);
  return p[e];
}

Vector multiply(const HomAlgebra& a, const Vector& x, const Vector& y) {
  if (x.size() != a.dim || y.size() != a.dim) throw DimensionError("multiply: vector length mismatch");
  return a.mul.evaluate({x, y});
}

Vector apply_alpha(const HomAlgebra& a, const Vector& x) {
  if (x.size() != a.dim) throw DimensionError("apply_alpha: vector length mismatch");
  return a.alpha * x;
}

Vector associator_defect(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return multiply(a, apply_alpha(a, x), multiply(a, y, z)) - multiply(a, multiply(a, x, y), apply_alpha(a, z));
}

Vector jacobi_defect(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  Vector s = multiply(a, apply_alpha(a, x), multiply(a, y, z));
  s = s + multiply(a, apply_alpha(a, y), multiply(a, z, x));
  s = s + multiply(a, apply_alpha(a, z), multiply(a, x, y));
  return s;
}

ValidityReport validate(const HomAlgebra& a) {
  ValidityReport rep;
  const std::size_t n = a.dim;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };

  if (a.kind == Kind::lie) {
    for (std::size_t i = 0; i < n && rep.is_valid; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Vector d = a.mul.value(i * n + j) + a.mul.value(j * n + i);
        if (!is_zero(d)) {
          rep.is_valid = false;
          rep.failure = "skew-symmetry";
          rep.witness = {i, j};
          rep.defect = d;
          break;
        }
      }
    }
  }
  for (std::size_t t = 0; t < n * n * n && rep.is_valid; ++t) {
    const auto ijk = tuple_args(t, 3, n);
    Vector d = a.kind == Kind::lie ? jacobi_defect(a, e(ijk[0]), e(ijk[1]), e(ijk[2]))
                                   : associator_defect(a, e(ijk[0]), e(ijk[1]), e(ijk[2]));
    if (!is_zero(d)) {
      rep.is_valid = false;
      rep.failure = a.kind == Kind::lie ? "hom-jacobi" : "hom-associativity";
      rep.witness = ijk;
      rep.defect = d;
    }
  }
  for (std::size_t i = 0; i < n && rep.multiplicative; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = a.alpha * a.mul.value(i * n + j);
      Vector rhs = multiply(a, a.alpha.column(i), a.alpha.column(j));
      if (lhs != rhs) {
        rep.multiplicative = false;
        rep.multiplicative_witness = {i, j};
        break;
      }
    }
  }
  return rep;
}

HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& gamma) {
  const std::size_t n = a.dim;
  if (gamma.rows() != n || gamma.cols() != n) throw DimensionError("yau_twist: gamma has wrong shape");
  if (!a.alpha.is_identity() && !(gamma * a.alpha == a.alpha * gamma)) {
    throw MorphismViolation("yau_twist: gamma does not commute with the twist map");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gamma * a.mul.value(i * n + j) != multiply(a, gamma.column(i), gamma.column(j))) {
        throw MorphismViolation("yau_twist: gamma is not multiplicative at pair (" + a.basis[i] + ", " +
                                a.basis[j] + ")");
      }
    }
  }
  HomAlgebra out(a);
  out.name = a.name + "_twist";
  out.mul = compose_out(gamma, a.mul);
  out.alpha = gamma * a.alpha;
  return out;
}

HomAlgebra change_basis(const HomAlgebra& a, const Matrix& p) {
  auto inv = inverse(p);
  if (!inv) throw DimensionError("change_basis: matrix is singular");
  HomAlgebra out(a);
  out.mul = compose_out(*inv, precompose(a.mul, p));
  out.alpha = *inv * a.alpha * p;
  return out;
}

}  // namespace homcoh
