#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcoh/algebra.hpp"
#include "homcoh/cochain.hpp"
#include "homcoh/rep.hpp"

namespace homcoh {

// mu_t = base.mul + sum_i terms[i] t^i, twist fixed.
struct FormalDeformation {
  HomAlgebra base;
  std::size_t order = 0;
  std::map<std::size_t, MultilinearMap> terms;

  // mu_i, with mu_0 = base.mul and zero for missing degrees.
  MultilinearMap term(std::size_t i) const;
};

struct MorphismDeformation {
  HomMorphism phi;
  FormalDeformation def_a;
  FormalDeformation def_b;
  std::map<std::size_t, Matrix> phi_terms;
  std::size_t order = 0;

  Matrix phi_term(std::size_t i) const;
};

struct FormalAutomorphismPair {
  std::map<std::size_t, Matrix> psi_a;
  std::map<std::size_t, Matrix> psi_b;
  std::size_t order = 0;
};

struct OrderRecord {
  std::size_t s = 0;
  bool algebra_a_ok = true;
  bool algebra_b_ok = true;
  bool morphism_eq_ok = true;
  bool twist_eq_ok = true;
  std::vector<std::string> witnesses;

  bool ok() const { return algebra_a_ok && algebra_b_ok && morphism_eq_ok && twist_eq_ok; }
};

struct DeformationReport {
  std::vector<OrderRecord> orders;
  bool algebra_a_ok = true;
  bool algebra_b_ok = true;
  bool morphism_eq_ok = true;
  bool twist_eq_ok = true;

  bool ok() const { return algebra_a_ok && algebra_b_ok && morphism_eq_ok && twist_eq_ok; }
};

// Default up_to = 2N. Lie kind also checks skewness of every term.
DeformationReport check_algebra_deformation(const FormalDeformation& d, std::optional<std::size_t> up_to = {});
// Algebra equations to 2N, the morphism equation to 3N, twists to N unless up_to is given.
DeformationReport check_morphism_deformation(const MorphismDeformation& md, std::optional<std::size_t> up_to = {});

// Order-s coefficient of the defining identity (associator sum or cyclic Jacobi sum).
MultilinearMap algebra_defect(const FormalDeformation& d, std::size_t s);
// Order-s coefficient of phi_t(mu_A,t(x,y)) - mu_B,t(phi_t x, phi_t y).
MultilinearMap morphism_defect(const MorphismDeformation& md, std::size_t s);

struct InfinitesimalResult {
  MorphismCochain theta;
  std::size_t degree = 1;
  MorphismCochain image;  // delta^2(theta)
  bool slot_a_cocycle = true;
  bool slot_b_cocycle = true;
  bool slot_ab_cocycle = true;
  std::vector<std::string> warnings;
};

// theta_k = (mu_A,k, mu_B,k, phi_k) for the first k with a nonzero term (k = 1 if all vanish).
// Throws NotACocycle if a slot over valid algebras fails.
InfinitesimalResult infinitesimal(const MorphismDeformation& md);

struct AlgebraInfinitesimal {
  MultilinearMap theta;
  std::size_t degree = 1;
  bool cocycle = true;
};
AlgebraInfinitesimal infinitesimal(const FormalDeformation& d);

// psi_t^{-1} through order N.
std::map<std::size_t, Matrix> series_inverse(const std::map<std::size_t, Matrix>& psi, std::size_t dim, std::size_t order);

MorphismDeformation apply_equivalence(const MorphismDeformation& md, const FormalAutomorphismPair& psi);
FormalDeformation apply_equivalence(const FormalDeformation& d, const std::map<std::size_t, Matrix>& psi);

struct ObstructionResult {
  MorphismCochain ob;
  // Value of delta^2(theta_{N+1}) forced by the order N+1 equations.
  MorphismCochain required;
  bool matches_required = true;
  bool slot_a_cocycle = true;
  bool slot_b_cocycle = true;
  bool slot_ab_cocycle = true;
  std::vector<std::string> diagnostics;

  bool cocycle() const { return slot_a_cocycle && slot_b_cocycle && slot_ab_cocycle; }
};

// Throws NotACocycle when delta^3(Ob) != 0 in a slot whose algebras are valid.
ObstructionResult obstruction(const MorphismDeformation& md);

struct AlgebraObstructionResult {
  MultilinearMap ob;
  MultilinearMap required;
  bool matches_required = true;
  bool cocycle = true;
};
AlgebraObstructionResult obstruction(const FormalDeformation& d);

struct ExtensionResult {
  std::optional<MorphismDeformation> extended;
  std::size_t failing_order = 0;
  // No order fails on the extension that passed on the input.
  bool reverified = false;
  std::vector<std::string> diagnostics;
};
// Solves delta^2(theta_{N+1}) = Ob; absent when Ob is outside the image.
ExtensionResult extend_deformation(const MorphismDeformation& md);

struct AlgebraExtensionResult {
  std::optional<FormalDeformation> extended;
  std::size_t failing_order = 0;
  bool reverified = false;
  std::vector<std::string> diagnostics;
};
AlgebraExtensionResult extend_deformation(const FormalDeformation& d);

}  // namespace homcoh
