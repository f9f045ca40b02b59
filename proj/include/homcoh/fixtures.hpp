#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "homcoh/algebra.hpp"
#include "homcoh/deformation.hpp"
#include "homcoh/rep.hpp"

namespace homcoh {

// Associative example with basis e1..e3; a = 1, b = 2 gives A3.
HomAlgebra fixture_a3(const Rational& a = 1, const Rational& b = 2);
// mu(f1,f1) = f1, other products f2; alpha(f1) = f1 - f2, alpha(f2) = 0.
HomAlgebra fixture_b2();
// A3 -> B2: e1, e2 -> f1 - f2, e3 -> 0.
HomMorphism fixture_phi();

// 4-dimensional Hom-Lie pair; all parameters 1 for the first, a = 2, b = c = d = 1 for the second.
HomAlgebra fixture_l4a();
HomAlgebra fixture_l4b(const Rational& e);

// [e1,e2] = e3, alpha = diag(p1, p2, p1 p2).
HomAlgebra fixture_g1(const Rational& p1, const Rational& p2);
// [f1,f2] = f1 + f3, [f2,f3] = f2, [f1,f3] = f1 + 2 f3, alpha = diag(1, 2, 2).
HomAlgebra fixture_g2();
// G1(2,2) -> G2: e1, e2 -> f2 + f3.
HomMorphism fixture_phi12_1();
// G1(2,0) -> G2: e1 -> f2 + f3.
HomMorphism fixture_phi12_2();

// G1(2,0) with [e1,e3]_1 = e2.
FormalDeformation fixture_def_g1();
// PHI12-2 deformed: source as above, [f1,f2]_1 = f3, phi_1(e1) = f2 + f3; corrupt uses phi_1(e1) = f1.
MorphismDeformation fixture_mdef2(bool corrupt = false);

// mu(e1,e1) = e1, alpha(e1) = alpha(e2) = e1; fails Hom-associativity at (e1,e1,e2).
HomAlgebra fixture_invalid2();

// Order-1 deformation of A3 by a coboundary (extends).
FormalDeformation fixture_a3_trivial_deformation();
// Order-1 deformations whose order-2 obstruction is not a coboundary.
FormalDeformation fixture_stuck_lie();
FormalDeformation fixture_stuck_assoc();

// Deterministic source of small rationals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  // Uniform in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  // Integer in [-r, r], sometimes halved.
  Rational small(long r = 3);
  Rational nonzero(long r = 3);
  Matrix matrix(std::size_t rows, std::size_t cols, long r = 2);
  Matrix invertible(std::size_t n);
  MultilinearMap map(std::size_t arity, std::size_t source_dim, std::size_t target_dim, long r = 2);

 private:
  std::mt19937_64 gen_;
};

// Random valid multiplicative Hom-algebras of dim <= 3: a Yau twist of a known algebra,
// written in a random basis.
HomAlgebra random_hom_associative(Rng& rng);
HomAlgebra random_hom_lie(Rng& rng);
// Random tensor with no validity guarantee; lie kind gets a skew tensor.
HomAlgebra random_tensor(Rng& rng, Kind kind, std::size_t dim);
// Plain associative algebra (alpha = id) and a multiplicative endomorphism of it.
std::pair<HomAlgebra, Matrix> random_ordinary_with_morphism(Rng& rng);
// Random twist-compatible 1-cochain on a.
Matrix random_commuting(Rng& rng, const HomAlgebra& a);

}  // namespace homcoh
