#include "homcoh/bracket.hpp"

#include "detail.hpp"
#include "homcoh/cochain.hpp"
#include "homcoh/errors.hpp"
#include "homcoh/perm.hpp"

namespace homcoh {

namespace {

Rational parity_sign(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

std::vector<std::size_t> slice(const std::vector<std::size_t>& x, std::size_t from, std::size_t count) {
  return std::vector<std::size_t>(x.begin() + static_cast<std::ptrdiff_t>(from),
                                  x.begin() + static_cast<std::ptrdiff_t>(from + count));
}

}  // namespace

MultilinearMap comp_product(const HomAlgebra& alg, const MultilinearMap& phi, const MultilinearMap& psi) {
  if (phi.arity() == 0 || psi.arity() == 0) throw DimensionError("comp_product needs arity >= 1");
  if (phi.source_dim() != alg.dim || phi.target_dim() != alg.dim || psi.source_dim() != alg.dim) {
    throw DimensionError("comp_product: shape mismatch");
  }
  const std::size_t a = phi.arity() - 1;
  const std::size_t b = psi.arity() - 1;
  check_arity(a + b + 1);
  const Matrix ap = alg.alpha_power(a);
  MultilinearMap out(a + b + 1, alg.dim, psi.target_dim());
  std::vector<Vector> args(b + 1);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, a + b + 1, alg.dim);
    for (std::size_t k = 0; k <= b; ++k) {
      for (std::size_t s = 0; s <= b; ++s) {
        if (s < k) args[s] = ap.column(x[s]);
        else if (s == k) args[s] = phi.value(slice(x, k, a + 1));
        else args[s] = ap.column(x[a + s]);
      }
      out.add_to(t, psi.evaluate(args), parity_sign(a * k));
    }
  }
  return out;
}

MultilinearMap gerstenhaber_bracket(const HomAlgebra& alg, const MultilinearMap& phi, const MultilinearMap& psi) {
  const std::size_t a = phi.arity() - 1;
  const std::size_t b = psi.arity() - 1;
  return comp_product(alg, psi, phi) - parity_sign(a * b) * comp_product(alg, phi, psi);
}

MultilinearMap nr_product(const HomAlgebra& alg, const MultilinearMap& phi, const MultilinearMap& psi) {
  if (!is_alternating(phi) || !is_alternating(psi)) throw DimensionError("nr_product needs alternating inputs");
  const std::size_t a = phi.arity() - 1;
  const std::size_t b = psi.arity() - 1;
  const Rational coeff(factorial(a + b + 1), factorial(a + 1) * factorial(b + 1));
  return coeff * alternator(comp_product(alg, phi, psi));
}

MultilinearMap nr_bracket(const HomAlgebra& alg, const MultilinearMap& phi, const MultilinearMap& psi) {
  const std::size_t a = phi.arity() - 1;
  const std::size_t b = psi.arity() - 1;
  return nr_product(alg, phi, psi) - parity_sign(a * b) * nr_product(alg, psi, phi);
}

MultilinearMap cup_product_assoc(const HomMorphism& phi, const MultilinearMap& f, const MultilinearMap& g) {
  const std::size_t da = phi.source.dim, db = phi.target.dim;
  if (f.source_dim() != da || g.source_dim() != da || f.target_dim() != db || g.target_dim() != db) {
    throw DimensionError("cup_product_assoc: shape mismatch");
  }
  const std::size_t a = f.arity(), b = g.arity();
  check_arity(a + b);
  MultilinearMap out(a + b, da, db);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, a + b, da);
    out.add_to(t, multiply(phi.target, f.value(slice(x, 0, a)), g.value(slice(x, a, b))));
  }
  return out;
}

MultilinearMap cup_bracket_assoc(const HomMorphism& phi, const MultilinearMap& f, const MultilinearMap& g) {
  return cup_product_assoc(phi, f, g) - parity_sign(f.arity() * g.arity()) * cup_product_assoc(phi, g, f);
}

MultilinearMap cup_bracket_lie(const HomAlgebra& target, const MultilinearMap& f, const MultilinearMap& g) {
  if (f.target_dim() != target.dim || g.target_dim() != target.dim || f.source_dim() != g.source_dim()) {
    throw DimensionError("cup_bracket_lie: shape mismatch");
  }
  const std::size_t p = f.arity(), q = g.arity();
  check_arity(p + q);
  const auto perms = permutations(p + q);
  MultilinearMap out(p + q, f.source_dim(), target.dim);
  std::vector<std::size_t> xs(p + q);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, p + q, f.source_dim());
    for (const auto& s : perms) {
      for (std::size_t i = 0; i < p + q; ++i) xs[i] = x[s.image[i]];
      out.add_to(t, multiply(target, f.value(slice(xs, 0, p)), g.value(slice(xs, p, q))), s.sign);
    }
  }
  return out;
}

MultilinearMap overline_comp(const HomMorphism& phi, const MultilinearMap& f, const MultilinearMap& g) {
  const std::size_t da = phi.source.dim, db = phi.target.dim;
  if (f.source_dim() != db || f.target_dim() != db || g.source_dim() != da || g.target_dim() != db) {
    throw DimensionError("overline_comp: shape mismatch");
  }
  const std::size_t a = f.arity(), b = g.arity();
  if (a == 0) throw DimensionError("overline_comp needs arity >= 1 for the outer map");
  const std::size_t out_arity = a + b - 1;
  check_arity(out_arity);
  MultilinearMap out(out_arity, da, db);
  std::vector<Vector> args(a);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, out_arity, da);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t s = 0; s < a; ++s) {
        if (s < i) args[s] = phi.matrix.column(x[s]);
        else if (s == i) args[s] = g.value(slice(x, i, b));
        else args[s] = phi.matrix.column(x[s + b - 1]);
      }
      const std::size_t e = b == 0 ? i : i * (b - 1);
      out.add_to(t, f.evaluate(args), parity_sign(e));
    }
  }
  return out;
}

MultilinearMap diamond(const MultilinearMap& lam, const HomMorphism& phi) {
  if (lam.source_dim() != phi.target.dim) throw DimensionError("diamond: shape mismatch");
  return precompose(lam, phi.matrix);
}

MultilinearMap derivation_D_assoc(const HomAlgebra& a, const MultilinearMap& f) {
  return detail::insertion_sum_assoc(a, f);
}

MultilinearMap derivation_D_lie(const HomAlgebra& l, const MultilinearMap& f) {
  return detail::insertion_sum_lie(l, f);
}

MultilinearMap alpha_associator(const HomAlgebra& alg, const MultilinearMap& mu_i, const MultilinearMap& mu_j) {
  const std::size_t n = alg.dim;
  for (const auto* m : {&mu_i, &mu_j}) {
    if (m->arity() != 2 || m->source_dim() != n || m->target_dim() != n) {
      throw DimensionError("alpha_associator needs bilinear maps on the algebra");
    }
  }
  MultilinearMap out(3, n, n);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, 3, n);
    Vector v = mu_i.evaluate({alg.alpha.column(x[0]), mu_j.value(slice(x, 1, 2))});
    v = v - mu_i.evaluate({mu_j.value(slice(x, 0, 2)), alg.alpha.column(x[2])});
    out.add_to(t, v);
  }
  return out;
}

}  // namespace homcoh
