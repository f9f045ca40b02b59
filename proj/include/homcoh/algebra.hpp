#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "homcoh/exact.hpp"
#include "homcoh/multilinear.hpp"

namespace homcoh {

enum class Kind { associative, lie };

std::string to_string(Kind k);

// mu(e_i, e_j) = sum_k mul.at(i*dim + j, k) e_k; column j of alpha is alpha(e_j).
struct HomAlgebra {
  std::string name;
  Kind kind = Kind::associative;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  MultilinearMap mul;
  Matrix alpha;

  HomAlgebra();
  HomAlgebra(std::string name, Kind kind, std::size_t dim);
  HomAlgebra(const HomAlgebra& o);
  HomAlgebra& operator=(const HomAlgebra& o);
  HomAlgebra(HomAlgebra&&) noexcept = default;
  HomAlgebra& operator=(HomAlgebra&&) noexcept = default;

  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return mul.at(i * dim + j, k); }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return mul.at(i * dim + j, k); }

  // Sets mu(e_i,e_j); for lie kind also sets mu(e_j,e_i) = -value.
  void set_product(std::size_t i, std::size_t j, const Vector& value);

  // alpha^e, memoized; the cache is dropped if alpha is reassigned.
  Matrix alpha_power(std::size_t e) const;

 private:
  struct PowerCache {
    std::mutex lock;
    std::vector<Matrix> powers;
  };
  std::shared_ptr<PowerCache> cache_;
};

struct ValidityReport {
  bool is_valid = true;
  // "skew-symmetry", "hom-associativity", "hom-jacobi", "morphism-product", "morphism-twist", ...
  std::string failure;
  std::vector<std::size_t> witness;
  Vector defect;
  bool multiplicative = true;
  std::vector<std::size_t> multiplicative_witness;
};

Vector multiply(const HomAlgebra& a, const Vector& x, const Vector& y);
Vector apply_alpha(const HomAlgebra& a, const Vector& x);

ValidityReport validate(const HomAlgebra& a);

// Hom-associativity defect mu(alpha x, mu(y,z)) - mu(mu(x,y), alpha z).
Vector associator_defect(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z);
// Cyclic sum of [alpha x, [y, z]].
Vector jacobi_defect(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& gamma);

// Same algebra written in the basis given by the columns of p (p invertible).
HomAlgebra change_basis(const HomAlgebra& a, const Matrix& p);

}  // namespace homcoh
