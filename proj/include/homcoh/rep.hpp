#pragma once

#include <cstddef>
#include <utility>

#include "homcoh/algebra.hpp"

namespace homcoh {

// Column j of matrix is phi(e_j).
struct HomMorphism {
  HomAlgebra source;
  HomAlgebra target;
  Matrix matrix;

  Vector apply(const Vector& x) const { return matrix * x; }
};

ValidityReport check_morphism(const HomAlgebra& source, const HomAlgebra& target, const Matrix& matrix);

// Action tensors indexed [a][m][out] (left) and [m][a][out] (right).
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(std::size_t algebra_dim, std::size_t carrier_dim);

  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t carrier_dim() const { return carrier_dim_; }

  Matrix beta;

  Rational& left_at(std::size_t a, std::size_t m, std::size_t out);
  Rational& right_at(std::size_t m, std::size_t a, std::size_t out);
  Vector left(const Vector& a, const Vector& m) const;
  Vector right(const Vector& m, const Vector& a) const;

 private:
  std::size_t algebra_dim_ = 0;
  std::size_t carrier_dim_ = 0;
  Vector rho_l_;
  Vector rho_r_;
};

class LieModule {
 public:
  LieModule() = default;
  LieModule(std::size_t algebra_dim, std::size_t carrier_dim);

  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t carrier_dim() const { return carrier_dim_; }

  Matrix beta;

  Rational& action_at(std::size_t g, std::size_t v, std::size_t out);
  const Rational& action_at(std::size_t g, std::size_t v, std::size_t out) const;
  Vector act(const Vector& g, const Vector& v) const;

 private:
  std::size_t algebra_dim_ = 0;
  std::size_t carrier_dim_ = 0;
  Vector action_;
};

// Left, right and compatibility axioms on basis triples.
ValidityReport check_bimodule(const HomAlgebra& a, const Bimodule& m);
// Twist compatibility [alpha u, beta v] = beta [u, v] and the module condition.
ValidityReport check_lie_module(const HomAlgebra& l, const LieModule& v);

// rho_l = mu'(phi x, m), rho_r = mu'(m, phi x), beta = alpha'.
Bimodule adjoint_bimodule(const HomMorphism& phi, bool require_valid = true);
// [g, v] = [phi g, v]'.
LieModule lie_adjoint_module(const HomMorphism& phi, bool require_valid = true);

// Dual module on V* (action -A_x^T, beta^T) together with the stated condition.
std::pair<LieModule, bool> coadjoint_module(const LieModule& rep, const HomAlgebra& l);

}  // namespace homcoh
