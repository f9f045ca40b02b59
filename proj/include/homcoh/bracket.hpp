#pragma once

#include "homcoh/algebra.hpp"
#include "homcoh/multilinear.hpp"
#include "homcoh/rep.hpp"

namespace homcoh {

// Degrees here are arity - 1.

// j_phi(psi)(x0..x_{a+b}) = sum_k (-1)^{ak} psi(alpha^a x0, .., phi(x_k..x_{k+a}), .., alpha^a x_{a+b});
// phi: A^{a+1} -> A, psi: A^{b+1} -> M.
MultilinearMap comp_product(const HomAlgebra& a, const MultilinearMap& phi, const MultilinearMap& psi);
// j_psi(phi) - (-1)^{ab} j_phi(psi)
MultilinearMap gerstenhaber_bracket(const HomAlgebra& a, const MultilinearMap& phi, const MultilinearMap& psi);

// ((a+b+1)! / ((a+1)! (b+1)!)) alternator(j_phi(psi))
MultilinearMap nr_product(const HomAlgebra& a, const MultilinearMap& phi, const MultilinearMap& psi);
// i_phi(psi) - (-1)^{ab} i_psi(phi)
MultilinearMap nr_bracket(const HomAlgebra& a, const MultilinearMap& phi, const MultilinearMap& psi);

// (f u g)(x..) = mu_B(f(x_0..x_{a-1}), g(x_a..)); f, g: A -> B of arities a, b.
MultilinearMap cup_product_assoc(const HomMorphism& phi, const MultilinearMap& f, const MultilinearMap& g);
// f u g - (-1)^{ab} g u f, a, b arities.
MultilinearMap cup_bracket_assoc(const HomMorphism& phi, const MultilinearMap& f, const MultilinearMap& g);
// sum over S_{p+q} of sign(s) [f(x_s(0..p-1)), g(x_s(p..))]_target.
MultilinearMap cup_bracket_lie(const HomAlgebra& target, const MultilinearMap& f, const MultilinearMap& g);

// f: B^a -> B, g: A^b -> B; g inserted in slot i with sign (-1)^{i(b-1)}, phi on the other slots.
MultilinearMap overline_comp(const HomMorphism& phi, const MultilinearMap& f, const MultilinearMap& g);

// lam(phi x1, ..., phi xn)
MultilinearMap diamond(const MultilinearMap& lam, const HomMorphism& phi);

// sum_{i=1..n} (-1)^i f(alpha x0, .., mu(x_{i-1}, x_i), .., alpha x_n)
MultilinearMap derivation_D_assoc(const HomAlgebra& a, const MultilinearMap& f);
// sum_{i<j} (-1)^{i+j} f([x_i, x_j], alpha x0, .., ^i, ^j, .., alpha x_n)
MultilinearMap derivation_D_lie(const HomAlgebra& l, const MultilinearMap& f);

// mu_i(alpha x, mu_j(y, z)) - mu_i(mu_j(x, y), alpha z)
MultilinearMap alpha_associator(const HomAlgebra& a, const MultilinearMap& mu_i, const MultilinearMap& mu_j);

}  // namespace homcoh
