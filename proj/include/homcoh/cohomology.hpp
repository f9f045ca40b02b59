#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "homcoh/algebra.hpp"
#include "homcoh/cochain.hpp"
#include "homcoh/rep.hpp"

namespace homcoh {

MultilinearMap delta_hom_self(const HomAlgebra& a, const MultilinearMap& f);
MultilinearMap delta_hom_bimodule(const HomAlgebra& a, const Bimodule& m, const MultilinearMap& f);
MultilinearMap delta_lie_self(const HomAlgebra& l, const MultilinearMap& f);
MultilinearMap delta_lie_module(const HomAlgebra& l, const LieModule& pi, const MultilinearMap& f);

// Degree n -> n+1; the delta^0 contribution in degree 1 is zero.
MorphismCochain delta_morphism(const HomMorphism& phi, const MorphismCochain& c, Flavor flavor);

// i-th face operator, 0 <= i <= n; D_n = 0.
MultilinearMap d_component(const HomAlgebra& a, const Bimodule& m, std::size_t i, const MultilinearMap& f);

// Column j = coordinates of delta(basis_j); throws ImageOutsideCodomain.
Matrix differential_matrix(const CochainSpace& from, const CochainSpace& to,
                           const std::function<MultilinearMap(const MultilinearMap&)>& delta);
Matrix differential_matrix(const HomMorphism& phi, std::size_t n, Flavor flavor);

enum class ComplexFlavor { hom_self, hom_bimodule, lie_self, lie_module, morphism_hom, morphism_lie };
std::string to_string(ComplexFlavor f);

// A cochain complex in flattened coordinates, degrees n >= 1.
class Complex {
 public:
  virtual ~Complex() = default;

  virtual ComplexFlavor flavor() const = 0;
  virtual std::size_t ambient_dim(std::size_t n) const = 0;
  virtual const std::vector<Vector>& basis(std::size_t n) const = 0;
  virtual Vector delta(std::size_t n, const Vector& x) const = 0;
  // Whether an ambient degree-n vector satisfies the cochain constraints.
  virtual bool in_cochains(std::size_t n, const Vector& x) const = 0;
  // Components of a flattened cochain (one map, or three for morphisms).
  virtual std::vector<MultilinearMap> split(std::size_t n, const Vector& x) const = 0;

  const std::vector<std::string>& warnings() const { return warnings_; }

 protected:
  std::vector<std::string> warnings_;
};

std::unique_ptr<Complex> hom_self_complex(const HomAlgebra& a);
std::unique_ptr<Complex> hom_bimodule_complex(const HomAlgebra& a, const Bimodule& m);
std::unique_ptr<Complex> lie_self_complex(const HomAlgebra& l);
std::unique_ptr<Complex> lie_module_complex(const HomAlgebra& l, const LieModule& pi);
std::unique_ptr<Complex> morphism_complex(const HomMorphism& phi, Flavor flavor);
// Values in the target through phi (adjoint bimodule or adjoint Lie module).
std::unique_ptr<Complex> values_in_complex(const HomMorphism& phi, Flavor flavor);

struct DegreeRecord {
  std::size_t n = 0;
  std::size_t dim_C = 0;
  std::size_t dim_Z = 0;
  std::size_t dim_B = 0;
  std::size_t dim_H = 0;
  std::vector<Vector> cocycle_coords;
  std::vector<Vector> coboundary_coords;
  std::vector<Vector> representative_coords;
  std::vector<std::vector<MultilinearMap>> cocycle_basis;
  std::vector<std::vector<MultilinearMap>> representatives;
  bool images_in_codomain = true;
  bool square_zero = true;
};

struct ComplexSummary {
  ComplexFlavor flavor = ComplexFlavor::hom_self;
  std::vector<DegreeRecord> degrees;
  std::vector<std::string> warnings;

  const DegreeRecord& at(std::size_t n) const;
};

// Z^n = ker delta_n, B^n = im delta_{n-1} (B^1 = 0), representatives by RREF pivots modulo B.
ComplexSummary compute_cohomology(const Complex& complex, std::size_t lo, std::size_t hi);

struct MorphismCohomologyReport {
  ComplexSummary coupled;
  std::size_t n = 0;
  std::size_t h_source = 0;
  std::size_t h_target = 0;
  // H^{n-1} with values in the target; for n = 1 this is the whole degree-0 space.
  std::size_t h_values_previous = 0;
  ComplexSummary values;
  std::size_t product_formula = 0;
  bool product_formula_matches = false;
};

MorphismCohomologyReport morphism_cohomology(const HomMorphism& phi, std::size_t n, Flavor flavor);

}  // namespace homcoh
