#include "homcoh/fixtures.hpp"

#include "homcoh/cohomology.hpp"
#include "homcoh/errors.hpp"

namespace homcoh {

namespace {

Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

HomAlgebra named(std::string name, Kind kind, std::size_t dim, const char* prefix) {
  HomAlgebra a(std::move(name), kind, dim);
  for (std::size_t i = 0; i < dim; ++i) a.basis[i] = prefix + std::to_string(i + 1);
  return a;
}

Matrix columns(std::initializer_list<Vector> cols) {
  const std::vector<Vector> c(cols);
  return Matrix::from_columns(c, c.front().size());
}

}  // namespace

HomAlgebra fixture_a3(const Rational& a, const Rational& b) {
  HomAlgebra alg = named(b == 2 && a == 1 ? "A3" : "A3_" + to_string(a) + "_" + to_string(b), Kind::associative, 3, "e");
  alg.set_product(0, 0, vec({a, 0, 0}));
  alg.set_product(1, 1, vec({0, a, 0}));
  alg.set_product(0, 1, vec({0, a, 0}));
  alg.set_product(1, 0, vec({0, a, 0}));
  alg.set_product(1, 2, vec({0, 0, b}));
  alg.set_product(0, 2, vec({0, 0, b}));
  alg.set_product(2, 0, vec({0, 0, b}));
  alg.alpha = columns({vec({a, 0, 0}), vec({0, a, 0}), vec({0, 0, b})});
  return alg;
}

HomAlgebra fixture_b2() {
  HomAlgebra alg = named("B2", Kind::associative, 2, "f");
  alg.set_product(0, 0, vec({1, 0}));
  alg.set_product(0, 1, vec({0, 1}));
  alg.set_product(1, 0, vec({0, 1}));
  alg.set_product(1, 1, vec({0, 1}));
  alg.alpha = columns({vec({1, -1}), vec({0, 0})});
  return alg;
}

HomMorphism fixture_phi() {
  return {fixture_a3(), fixture_b2(), columns({vec({1, -1}), vec({1, -1}), vec({0, 0})})};
}

HomAlgebra fixture_l4a() {
  HomAlgebra alg = named("L4A", Kind::lie, 4, "e");
  alg.set_product(0, 1, vec({0, 0, 0, 1}));
  alg.set_product(2, 3, vec({0, 1, 0, 0}));
  alg.alpha = columns({vec({0, 0, 1, 1}), vec({0, 0, 0, 1}), vec({1, 1, 0, 0}), vec({0, 1, 0, 0})});
  return alg;
}

HomAlgebra fixture_l4b(const Rational& e) {
  const Rational a = 2, b = 1, c = 1, d = 1;
  HomAlgebra alg = named("L4B_" + to_string(e), Kind::lie, 4, "f");
  alg.set_product(0, 1, vec({0, 0, 0, d}));
  alg.alpha = columns({vec({a, b, 1, c}), vec({0, 0, 0, d}), vec({e, b * e / a, 0, 0}), vec({0, 0, 0, 0})});
  return alg;
}

HomAlgebra fixture_g1(const Rational& p1, const Rational& p2) {
  HomAlgebra alg = named("G1_" + to_string(p1) + "_" + to_string(p2), Kind::lie, 3, "e");
  alg.set_product(0, 1, vec({0, 0, 1}));
  alg.alpha = columns({vec({p1, 0, 0}), vec({0, p2, 0}), vec({0, 0, p1 * p2})});
  return alg;
}

HomAlgebra fixture_g2() {
  HomAlgebra alg = named("G2", Kind::lie, 3, "f");
  alg.set_product(0, 1, vec({1, 0, 1}));
  alg.set_product(1, 2, vec({0, 1, 0}));
  alg.set_product(0, 2, vec({1, 0, 2}));
  alg.alpha = columns({vec({1, 0, 0}), vec({0, 2, 0}), vec({0, 0, 2})});
  return alg;
}

HomMorphism fixture_phi12_1() {
  return {fixture_g1(2, 2), fixture_g2(), columns({vec({0, 1, 1}), vec({0, 1, 1}), vec({0, 0, 0})})};
}

HomMorphism fixture_phi12_2() {
  return {fixture_g1(2, 0), fixture_g2(), columns({vec({0, 1, 1}), vec({0, 0, 0}), vec({0, 0, 0})})};
}

FormalDeformation fixture_def_g1() {
  FormalDeformation d;
  d.base = fixture_g1(2, 0);
  d.order = 1;
  MultilinearMap m(2, 3, 3);
  m.at(0 * 3 + 2, 1) = 1;
  m.at(2 * 3 + 0, 1) = -1;
  d.terms.emplace(1, m);
  return d;
}

MorphismDeformation fixture_mdef2(bool corrupt) {
  MorphismDeformation md;
  md.phi = fixture_phi12_2();
  md.order = 1;
  md.def_a = fixture_def_g1();
  md.def_b.base = md.phi.target;
  md.def_b.order = 1;
  MultilinearMap m(2, 3, 3);
  m.at(0 * 3 + 1, 2) = 1;
  m.at(1 * 3 + 0, 2) = -1;
  md.def_b.terms.emplace(1, m);
  Matrix p1(3, 3);
  if (corrupt) {
    p1(0, 0) = 1;
  } else {
    p1(1, 0) = 1;
    p1(2, 0) = 1;
  }
  md.phi_terms.emplace(1, p1);
  return md;
}

HomAlgebra fixture_invalid2() {
  HomAlgebra alg = named("invalid2", Kind::associative, 2, "e");
  alg.set_product(0, 0, vec({1, 0}));
  alg.alpha = columns({vec({1, 0}), vec({1, 0})});
  return alg;
}

FormalDeformation fixture_a3_trivial_deformation() {
  FormalDeformation d;
  d.base = fixture_a3();
  d.order = 1;
  Matrix f(3, 3);
  f(1, 0) = 1;
  d.terms.emplace(1, delta_hom_self(d.base, linear_map(f)));
  return d;
}

FormalDeformation fixture_stuck_lie() {
  FormalDeformation d;
  d.base = named("abelian3", Kind::lie, 3, "e");
  d.order = 1;
  HomAlgebra shape = d.base;
  shape.set_product(0, 1, vec({1, 0, 0}));
  shape.set_product(0, 2, vec({0, 1, 0}));
  d.terms.emplace(1, shape.mul);
  return d;
}

FormalDeformation fixture_stuck_assoc() {
  FormalDeformation d;
  d.base = named("zero2", Kind::associative, 2, "e");
  d.order = 1;
  HomAlgebra shape = d.base;
  shape.set_product(0, 0, vec({0, 1}));
  shape.set_product(1, 0, vec({1, 0}));
  d.terms.emplace(1, shape.mul);
  return d;
}

Rational Rng::small(long r) {
  const long span = 2 * r + 1;
  Rational q(static_cast<long>(below(static_cast<std::size_t>(span))) - r);
  if (below(4) == 0) q /= 2;
  return q;
}

Rational Rng::nonzero(long r) {
  for (;;) {
    Rational q = small(r);
    if (q != 0) return q;
  }
}

Matrix Rng::matrix(std::size_t rows, std::size_t cols, long r) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small(r);
  }
  return m;
}

Matrix Rng::invertible(std::size_t n) {
  for (;;) {
    Matrix m = matrix(n, n, 2);
    if (rank(m) == n) return m;
  }
}

MultilinearMap Rng::map(std::size_t arity, std::size_t source_dim, std::size_t target_dim, long r) {
  MultilinearMap f(arity, source_dim, target_dim);
  for (auto& c : f.coeffs()) c = small(r);
  return f;
}

namespace {

struct Base {
  HomAlgebra alg;
  Matrix gamma;
};

Base associative_base(Rng& rng) {
  const Rational c = rng.small();
  switch (rng.below(6)) {
    case 0: {
      HomAlgebra a = named("dual", Kind::associative, 2, "e");
      a.set_product(0, 0, vec({1, 0}));
      a.set_product(0, 1, vec({0, 1}));
      a.set_product(1, 0, vec({0, 1}));
      return {a, columns({vec({1, 0}), vec({0, c})})};
    }
    case 1: {
      HomAlgebra a = named("truncated3", Kind::associative, 3, "e");
      a.set_product(0, 0, vec({1, 0, 0}));
      a.set_product(0, 1, vec({0, 1, 0}));
      a.set_product(1, 0, vec({0, 1, 0}));
      a.set_product(0, 2, vec({0, 0, 1}));
      a.set_product(2, 0, vec({0, 0, 1}));
      a.set_product(1, 1, vec({0, 0, 1}));
      return {a, columns({vec({1, 0, 0}), vec({0, c, 0}), vec({0, 0, c * c})})};
    }
    case 2: {
      HomAlgebra a = named("upper2", Kind::associative, 3, "e");
      a.set_product(0, 0, vec({1, 0, 0}));
      a.set_product(0, 1, vec({0, 1, 0}));
      a.set_product(1, 2, vec({0, 1, 0}));
      a.set_product(2, 2, vec({0, 0, 1}));
      return {a, columns({vec({1, 0, 0}), vec({0, c, 0}), vec({0, 0, 1})})};
    }
    case 3: {
      HomAlgebra a = named("split2", Kind::associative, 2, "e");
      a.set_product(0, 0, vec({1, 0}));
      a.set_product(1, 1, vec({0, 1}));
      const Matrix g = rng.below(2) == 0 ? columns({vec({0, 1}), vec({1, 0})}) : columns({vec({1, 0}), vec({0, 0})});
      return {a, g};
    }
    case 4: {
      HomAlgebra a = named("square_zero", Kind::associative, 3, "e");
      a.set_product(0, 0, vec({1, 0, 0}));
      a.set_product(0, 1, vec({0, 1, 0}));
      a.set_product(1, 0, vec({0, 1, 0}));
      a.set_product(0, 2, vec({0, 0, 1}));
      a.set_product(2, 0, vec({0, 0, 1}));
      Matrix g(3, 3);
      g(0, 0) = 1;
      const Matrix m = rng.matrix(2, 2);
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) g(i + 1, j + 1) = m(i, j);
      }
      return {a, g};
    }
    default: {
      const std::size_t n = 1 + rng.below(3);
      return {named("zero", Kind::associative, n, "e"), rng.matrix(n, n)};
    }
  }
}

Base lie_base(Rng& rng) {
  switch (rng.below(5)) {
    case 0: {
      HomAlgebra a = named("heisenberg", Kind::lie, 3, "e");
      a.set_product(0, 1, vec({0, 0, 1}));
      const Matrix m = rng.matrix(2, 2);
      const Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      Matrix g(3, 3);
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) g(i, j) = m(i, j);
      }
      g(2, 0) = rng.small();
      g(2, 1) = rng.small();
      g(2, 2) = det;
      return {a, g};
    }
    case 1: {
      HomAlgebra a = named("r2", Kind::lie, 2, "e");
      a.set_product(0, 1, vec({0, 1}));
      return {a, columns({vec({1, rng.small()}), vec({0, rng.small()})})};
    }
    case 2: {
      HomAlgebra a = named("sl2", Kind::lie, 3, "e");
      a.set_product(0, 1, vec({0, 2, 0}));
      a.set_product(0, 2, vec({0, 0, -2}));
      a.set_product(1, 2, vec({1, 0, 0}));
      const Rational c = rng.nonzero();
      return {a, columns({vec({1, 0, 0}), vec({0, c, 0}), vec({0, 0, 1 / c})})};
    }
    case 3: {
      const std::size_t n = 1 + rng.below(3);
      return {named("abelian", Kind::lie, n, "e"), rng.matrix(n, n)};
    }
    default: {
      HomAlgebra a = named("r2_plus_k", Kind::lie, 3, "e");
      a.set_product(0, 1, vec({0, 1, 0}));
      return {a, columns({vec({1, rng.small(), 0}), vec({0, rng.small(), 0}), vec({0, 0, rng.small()})})};
    }
  }
}

HomAlgebra twisted_in_random_basis(Rng& rng, const Base& b) {
  HomAlgebra t = yau_twist(b.alg, b.gamma);
  HomAlgebra out = change_basis(t, rng.invertible(t.dim));
  out.name = b.alg.name + "_random";
  return out;
}

}  // namespace

HomAlgebra random_hom_associative(Rng& rng) { return twisted_in_random_basis(rng, associative_base(rng)); }

HomAlgebra random_hom_lie(Rng& rng) { return twisted_in_random_basis(rng, lie_base(rng)); }

HomAlgebra random_tensor(Rng& rng, Kind kind, std::size_t dim) {
  HomAlgebra a = named("tensor", kind, dim, "e");
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = kind == Kind::lie ? i + 1 : 0; j < dim; ++j) {
      Vector v(dim);
      for (auto& x : v) x = rng.below(2) == 0 ? Rational(0) : rng.small(2);
      a.set_product(i, j, v);
    }
  }
  switch (rng.below(3)) {
    case 0: a.alpha = Matrix::identity(dim); break;
    case 1: a.alpha = Matrix(dim, dim); break;
    default: a.alpha = rng.matrix(dim, dim); break;
  }
  return a;
}

std::pair<HomAlgebra, Matrix> random_ordinary_with_morphism(Rng& rng) {
  const Base b = associative_base(rng);
  const Matrix p = rng.invertible(b.alg.dim);
  HomAlgebra a = change_basis(b.alg, p);
  a.name = b.alg.name + "_random";
  return {a, *inverse(p) * b.gamma * p};
}

Matrix random_commuting(Rng& rng, const HomAlgebra& a) {
  const std::size_t n = a.dim;
  // Unknown X (row-major); equation X alpha - alpha X = 0.
  Matrix sys(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t eq = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        sys(eq, i * n + k) += a.alpha(k, j);
        sys(eq, k * n + j) -= a.alpha(i, k);
      }
    }
  }
  const auto null = nullspace_basis(sys);
  Vector x = zero_vector(n * n);
  for (const auto& v : null) axpy(x, rng.small(2), v);
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = x[i * n + j];
  }
  return out;
}

}  // namespace homcoh
