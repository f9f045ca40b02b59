#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homcoh/algebra.hpp"
#include "homcoh/exact.hpp"
#include "homcoh/multilinear.hpp"
#include "homcoh/rep.hpp"

namespace homcoh {

enum class Flavor { hom, lie };

// HOMCOH_MAX_ARITY, default 4.
std::size_t max_arity();
void check_arity(std::size_t arity);

struct CochainSpace {
  std::size_t arity = 0;
  Flavor flavor = Flavor::hom;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<MultilinearMap> basis;

  std::size_t dim() const { return basis.size(); }
  std::size_t ambient_dim() const { return int_pow(source_dim, arity) * target_dim; }

  std::optional<Vector> coordinates(const MultilinearMap& f) const;
  MultilinearMap element(const Vector& coords) const;
  MultilinearMap zero() const { return MultilinearMap(arity, source_dim, target_dim); }

  void build_coordinates();

 private:
  SpanCoordinates coords_;
};

// Solutions of beta o f = f o alpha^{(x)k}; k = 0 gives the whole target space.
CochainSpace hom_cochain_basis(const HomAlgebra& source, std::size_t target_dim, const Matrix& beta, std::size_t k);
// Same constraint restricted to alternating maps.
CochainSpace lie_cochain_basis(const HomAlgebra& source, std::size_t target_dim, const Matrix& beta, std::size_t k);
CochainSpace cochain_basis(Flavor flavor, const HomAlgebra& source, std::size_t target_dim, const Matrix& beta,
                           std::size_t k);

// (1/k!) sum over S_k of sign(s) f(x_s(0), ..., x_s(k-1)).
MultilinearMap alternator(const MultilinearMap& f);

// (f_A, f_B, f_AB) with arities (n, n, n-1).
struct MorphismCochain {
  MultilinearMap a;
  MultilinearMap b;
  MultilinearMap ab;

  std::size_t degree() const { return a.arity(); }
  Vector flatten() const;
  bool is_zero() const { return a.is_zero() && b.is_zero() && ab.is_zero(); }

  static MorphismCochain zero(const HomMorphism& phi, std::size_t n);
  static MorphismCochain unflatten(const HomMorphism& phi, std::size_t n, const Vector& v);

  friend bool operator==(const MorphismCochain& x, const MorphismCochain& y) {
    return x.a == y.a && x.b == y.b && x.ab == y.ab;
  }
  friend MorphismCochain operator-(const MorphismCochain& x, const MorphismCochain& y) {
    return {x.a - y.a, x.b - y.b, x.ab - y.ab};
  }
  friend MorphismCochain operator+(const MorphismCochain& x, const MorphismCochain& y) {
    return {x.a + y.a, x.b + y.b, x.ab + y.ab};
  }
};

struct MorphismCochainSpace {
  CochainSpace a;
  CochainSpace b;
  CochainSpace ab;

  std::size_t dim() const { return a.dim() + b.dim() + ab.dim(); }
  std::size_t ambient_dim() const { return a.ambient_dim() + b.ambient_dim() + ab.ambient_dim(); }
  // Basis of the product space, flattened: A block, then B block, then AB block.
  std::vector<Vector> flat_basis() const;
};

MorphismCochainSpace morphism_cochain_space(const HomMorphism& phi, std::size_t n, Flavor flavor);

}  // namespace homcoh
