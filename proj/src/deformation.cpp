#include "homcoh/deformation.hpp"

#include <algorithm>

#include "homcoh/bracket.hpp"
#include "homcoh/cohomology.hpp"
#include "homcoh/errors.hpp"

namespace homcoh {

MultilinearMap FormalDeformation::term(std::size_t i) const {
  if (i == 0) return base.mul;
  auto it = terms.find(i);
  if (it != terms.end()) return it->second;
  return MultilinearMap(2, base.dim, base.dim);
}

Matrix MorphismDeformation::phi_term(std::size_t i) const {
  if (i == 0) return phi.matrix;
  auto it = phi_terms.find(i);
  if (it != phi_terms.end()) return it->second;
  return Matrix(phi.target.dim, phi.source.dim);
}

namespace {

Flavor flavor_of(const HomAlgebra& a) { return a.kind == Kind::lie ? Flavor::lie : Flavor::hom; }

Flavor flavor_of(const MorphismDeformation& md) {
  if (md.phi.source.kind != md.phi.target.kind) throw InvalidAlgebra("source and target kinds differ");
  return flavor_of(md.phi.source);
}

std::string tuple_label(const HomAlgebra& a, const std::vector<std::size_t>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += x[i] < a.basis.size() ? a.basis[x[i]] : "e" + std::to_string(x[i] + 1);
  }
  return s + ")";
}

// First basis tuple where f is nonzero.
std::optional<std::vector<std::size_t>> first_nonzero(const MultilinearMap& f) {
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    for (std::size_t o = 0; o < f.target_dim(); ++o) {
      if (f.at(t, o) != 0) return tuple_args(t, f.arity(), f.source_dim());
    }
  }
  return std::nullopt;
}

// cyclic sum of mu_i(alpha x, mu_j(y, z))
MultilinearMap jacobi_pair(const HomAlgebra& l, const MultilinearMap& mu_i, const MultilinearMap& mu_j) {
  const std::size_t n = l.dim;
  MultilinearMap out(3, n, n);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, 3, n);
    for (std::size_t r = 0; r < 3; ++r) {
      const std::size_t a = x[r], b = x[(r + 1) % 3], c = x[(r + 2) % 3];
      const std::size_t yz[2] = {b, c};
      out.add_to(t, mu_i.evaluate({l.alpha.column(a), mu_j.value(std::span<const std::size_t>(yz, 2))}));
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> skew_failure(const MultilinearMap& f) {
  const std::size_t n = f.source_dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t ij[2] = {i, j}, ji[2] = {j, i};
      if (!is_zero(f.value(std::span<const std::size_t>(ij, 2)) + f.value(std::span<const std::size_t>(ji, 2)))) {
        return std::vector<std::size_t>{i, j};
      }
    }
  }
  return std::nullopt;
}

MultilinearMap delta_self(const HomAlgebra& a, const MultilinearMap& f) {
  return a.kind == Kind::lie ? delta_lie_self(a, f) : delta_hom_self(a, f);
}

MultilinearMap half_bracket(const HomAlgebra& a, const MultilinearMap& p, const MultilinearMap& q) {
  const Rational half(1, 2);
  return a.kind == Kind::lie ? half * nr_bracket(a, p, q) : half * gerstenhaber_bracket(a, p, q);
}

// Verbatim sum over p + q = s, p, q > 0, of (1/2)[mu_p, mu_q].
MultilinearMap algebra_obstruction(const FormalDeformation& d, std::size_t s) {
  MultilinearMap out(3, d.base.dim, d.base.dim);
  for (std::size_t p = 1; p < s; ++p) out += half_bracket(d.base, d.term(p), d.term(s - p));
  return out;
}

FormalDeformation truncated(const FormalDeformation& d, std::size_t n) {
  FormalDeformation out = d;
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    it = it->first > n ? out.terms.erase(it) : std::next(it);
  }
  out.order = n;
  return out;
}

MorphismDeformation truncated(const MorphismDeformation& md, std::size_t n) {
  MorphismDeformation out = md;
  out.def_a = truncated(md.def_a, n);
  out.def_b = truncated(md.def_b, n);
  for (auto it = out.phi_terms.begin(); it != out.phi_terms.end();) {
    it = it->first > n ? out.phi_terms.erase(it) : std::next(it);
  }
  out.order = n;
  return out;
}

void fill_algebra_orders(const FormalDeformation& d, std::size_t up_to, bool source, DeformationReport& r) {
  const std::string tag = source ? "A" : "B";
  for (std::size_t s = 0; s <= up_to; ++s) {
    OrderRecord& rec = r.orders[s];
    bool ok = true;
    if (d.base.kind == Kind::lie && s >= 1) {
      if (auto w = skew_failure(d.term(s))) {
        ok = false;
        rec.witnesses.push_back(tag + " skew-symmetry " + tuple_label(d.base, *w));
      }
    }
    if (auto w = first_nonzero(algebra_defect(d, s))) {
      ok = false;
      rec.witnesses.push_back(tag + (d.base.kind == Kind::lie ? " hom-jacobi " : " hom-associativity ") +
                              tuple_label(d.base, *w));
    }
    (source ? rec.algebra_a_ok : rec.algebra_b_ok) = ok;
    if (!ok) (source ? r.algebra_a_ok : r.algebra_b_ok) = false;
  }
}

DeformationReport empty_report(std::size_t up_to) {
  DeformationReport r;
  r.orders.resize(up_to + 1);
  for (std::size_t s = 0; s <= up_to; ++s) r.orders[s].s = s;
  return r;
}

bool slot_valid(const HomAlgebra& a) { return validate(a).is_valid; }

}  // namespace

MultilinearMap algebra_defect(const FormalDeformation& d, std::size_t s) {
  MultilinearMap out(3, d.base.dim, d.base.dim);
  for (std::size_t i = 0; i <= s; ++i) {
    const MultilinearMap mi = d.term(i);
    const MultilinearMap mj = d.term(s - i);
    if (mi.is_zero() || mj.is_zero()) continue;
    out += d.base.kind == Kind::lie ? jacobi_pair(d.base, mi, mj) : alpha_associator(d.base, mi, mj);
  }
  return out;
}

MultilinearMap morphism_defect(const MorphismDeformation& md, std::size_t s) {
  const std::size_t da = md.phi.source.dim, db = md.phi.target.dim;
  MultilinearMap out(2, da, db);
  for (std::size_t i = 0; i <= s; ++i) {
    const Matrix pi = md.phi_term(i);
    if (pi.is_zero()) continue;
    out += compose_out(pi, md.def_a.term(s - i));
  }
  for (std::size_t i = 0; i <= s; ++i) {
    const MultilinearMap mb = md.def_b.term(i);
    if (mb.is_zero()) continue;
    for (std::size_t j = 0; i + j <= s; ++j) {
      const Matrix pj = md.phi_term(j);
      if (pj.is_zero()) continue;
      const Matrix pk = md.phi_term(s - i - j);
      if (pk.is_zero()) continue;
      out -= precompose(mb, std::vector<Matrix>{pj, pk});
    }
  }
  return out;
}

DeformationReport check_algebra_deformation(const FormalDeformation& d, std::optional<std::size_t> up_to) {
  const std::size_t top = up_to.value_or(2 * d.order);
  DeformationReport r = empty_report(top);
  fill_algebra_orders(d, top, true, r);
  return r;
}

DeformationReport check_morphism_deformation(const MorphismDeformation& md, std::optional<std::size_t> up_to) {
  const std::size_t n = md.order;
  const std::size_t alg_top = up_to.value_or(2 * n);
  const std::size_t morph_top = up_to.value_or(3 * n);
  const std::size_t twist_top = up_to.value_or(n);
  DeformationReport r = empty_report(std::max({alg_top, morph_top, twist_top}));
  fill_algebra_orders(md.def_a, alg_top, true, r);
  fill_algebra_orders(md.def_b, alg_top, false, r);
  for (std::size_t s = 0; s <= morph_top; ++s) {
    if (auto w = first_nonzero(morphism_defect(md, s))) {
      r.orders[s].morphism_eq_ok = false;
      r.morphism_eq_ok = false;
      r.orders[s].witnesses.push_back("morphism " + tuple_label(md.phi.source, *w));
    }
  }
  for (std::size_t s = 0; s <= twist_top; ++s) {
    const Matrix pi = md.phi_term(s);
    const Matrix diff = pi * md.phi.source.alpha - md.phi.target.alpha * pi;
    for (std::size_t j = 0; j < diff.cols(); ++j) {
      if (!is_zero(diff.column(j))) {
        r.orders[s].twist_eq_ok = false;
        r.twist_eq_ok = false;
        r.orders[s].witnesses.push_back("twist " + tuple_label(md.phi.source, {j}));
        break;
      }
    }
  }
  return r;
}

InfinitesimalResult infinitesimal(const MorphismDeformation& md) {
  const Flavor flavor = flavor_of(md);
  InfinitesimalResult res;
  res.degree = 1;
  for (std::size_t k = 1; k <= md.order; ++k) {
    if (!md.def_a.term(k).is_zero() || !md.def_b.term(k).is_zero() || !md.phi_term(k).is_zero()) {
      res.degree = k;
      break;
    }
  }
  const std::size_t k = res.degree;
  res.theta = {md.def_a.term(k), md.def_b.term(k), linear_map(md.phi_term(k))};
  res.image = delta_morphism(md.phi, res.theta, flavor);
  res.slot_a_cocycle = res.image.a.is_zero();
  res.slot_b_cocycle = res.image.b.is_zero();
  res.slot_ab_cocycle = res.image.ab.is_zero();
  const bool va = slot_valid(md.phi.source), vb = slot_valid(md.phi.target);
  if (!va) res.warnings.push_back(md.phi.source.name + " is not a valid Hom-algebra; source slot not enforced");
  if (!vb) res.warnings.push_back(md.phi.target.name + " is not a valid Hom-algebra; target slot not enforced");
  if ((va && !res.slot_a_cocycle) || (vb && !res.slot_b_cocycle) || (va && vb && !res.slot_ab_cocycle)) {
    throw NotACocycle("infinitesimal of degree " + std::to_string(k) + " is not a 2-cocycle");
  }
  return res;
}

AlgebraInfinitesimal infinitesimal(const FormalDeformation& d) {
  AlgebraInfinitesimal res;
  for (std::size_t k = 1; k <= d.order; ++k) {
    if (!d.term(k).is_zero()) {
      res.degree = k;
      break;
    }
  }
  res.theta = d.term(res.degree);
  res.cocycle = delta_self(d.base, res.theta).is_zero();
  if (!res.cocycle && slot_valid(d.base)) {
    throw NotACocycle("infinitesimal of degree " + std::to_string(res.degree) + " is not a 2-cocycle");
  }
  return res;
}

std::map<std::size_t, Matrix> series_inverse(const std::map<std::size_t, Matrix>& psi, std::size_t dim,
                                             std::size_t order) {
  std::map<std::size_t, Matrix> inv;
  inv[0] = Matrix::identity(dim);
  for (std::size_t s = 1; s <= order; ++s) {
    Matrix acc(dim, dim);
    for (std::size_t i = 1; i <= s; ++i) {
      auto it = psi.find(i);
      if (it == psi.end()) continue;
      acc = acc - it->second * inv[s - i];
    }
    inv[s] = acc;
  }
  return inv;
}

namespace {

Matrix series_at(const std::map<std::size_t, Matrix>& m, std::size_t i, std::size_t dim) {
  if (i == 0) return Matrix::identity(dim);
  auto it = m.find(i);
  return it == m.end() ? Matrix(dim, dim) : it->second;
}

// psi_t mu_t(psi_t^{-1} x, psi_t^{-1} y), coefficients 1..order.
std::map<std::size_t, MultilinearMap> transport(const FormalDeformation& d, const std::map<std::size_t, Matrix>& psi,
                                                const std::map<std::size_t, Matrix>& inv, std::size_t order) {
  const std::size_t n = d.base.dim;
  std::map<std::size_t, MultilinearMap> out;
  for (std::size_t s = 1; s <= order; ++s) {
    MultilinearMap acc(2, n, n);
    for (std::size_t a = 0; a <= s; ++a) {
      const Matrix pa = series_at(psi, a, n);
      if (pa.is_zero()) continue;
      for (std::size_t b = 0; a + b <= s; ++b) {
        const MultilinearMap mb = d.term(b);
        if (mb.is_zero()) continue;
        for (std::size_t c = 0; a + b + c <= s; ++c) {
          const Matrix ic = inv.at(c);
          const Matrix idd = inv.at(s - a - b - c);
          if (ic.is_zero() || idd.is_zero()) continue;
          acc += compose_out(pa, precompose(mb, std::vector<Matrix>{ic, idd}));
        }
      }
    }
    if (!acc.is_zero()) out.emplace(s, std::move(acc));
  }
  return out;
}

}  // namespace

FormalDeformation apply_equivalence(const FormalDeformation& d, const std::map<std::size_t, Matrix>& psi) {
  const auto inv = series_inverse(psi, d.base.dim, d.order);
  FormalDeformation out = d;
  out.terms = transport(d, psi, inv, d.order);
  return out;
}

MorphismDeformation apply_equivalence(const MorphismDeformation& md, const FormalAutomorphismPair& psi) {
  const std::size_t n = md.order;
  const std::size_t da = md.phi.source.dim, db = md.phi.target.dim;
  const auto inv_a = series_inverse(psi.psi_a, da, n);
  const auto inv_b = series_inverse(psi.psi_b, db, n);
  MorphismDeformation out = md;
  out.def_a.terms = transport(md.def_a, psi.psi_a, inv_a, md.def_a.order);
  out.def_b.terms = transport(md.def_b, psi.psi_b, inv_b, md.def_b.order);
  out.phi_terms.clear();
  for (std::size_t s = 1; s <= n; ++s) {
    Matrix acc(db, da);
    for (std::size_t a = 0; a <= s; ++a) {
      for (std::size_t b = 0; a + b <= s; ++b) {
        acc = acc + series_at(psi.psi_b, a, db) * md.phi_term(b) * inv_a.at(s - a - b);
      }
    }
    if (!acc.is_zero()) out.phi_terms.emplace(s, std::move(acc));
  }
  return out;
}

namespace {

// Value delta^2(theta_{N+1}) must take for the order N+1 equations to hold.
MorphismCochain required_image(const MorphismDeformation& md, Flavor flavor) {
  const MorphismDeformation base = truncated(md, md.order);
  const std::size_t s = md.order + 1;
  MorphismCochain req;
  req.a = Rational(-1) * algebra_defect(base.def_a, s);
  req.b = Rational(-1) * algebra_defect(base.def_b, s);
  const MultilinearMap m = morphism_defect(base, s);
  req.ab = flavor == Flavor::hom ? Rational(-1) * m : m;
  return req;
}

MultilinearMap morphism_obstruction_hom(const MorphismDeformation& md, std::size_t s) {
  const HomMorphism& phi = md.phi;
  MultilinearMap out(2, phi.source.dim, phi.target.dim);
  for (std::size_t p = 1; p < s; ++p) {
    const std::size_t q = s - p;
    const MultilinearMap phi_q = linear_map(md.phi_term(q));
    out += overline_comp(phi, md.def_b.term(p), phi_q);
    out -= compose_out(md.phi_term(p), md.def_a.term(q));
    out += cup_product_assoc(phi, linear_map(md.phi_term(p)), phi_q);
  }
  for (std::size_t p = 1; p < s; ++p) {
    for (std::size_t q = 1; p + q < s; ++q) {
      out += precompose(md.def_b.term(p), std::vector<Matrix>{md.phi_term(q), md.phi_term(s - p - q)});
    }
  }
  return out;
}

MultilinearMap morphism_obstruction_lie(const MorphismDeformation& md, std::size_t s) {
  const HomMorphism& phi = md.phi;
  MultilinearMap out(2, phi.source.dim, phi.target.dim);
  for (std::size_t i = 0; i <= s; ++i) out += compose_out(md.phi_term(i), md.def_a.term(s - i));
  auto bracket = [&](std::size_t i, std::size_t j, std::size_t k) {
    out -= precompose(md.def_b.term(k), std::vector<Matrix>{md.phi_term(i), md.phi_term(j)});
  };
  for (std::size_t i = 1; i < s; ++i) bracket(i, s - i, 0);
  for (std::size_t i = 1; i < s; ++i) bracket(i, 0, s - i);
  for (std::size_t j = 1; j < s; ++j) bracket(0, j, s - j);
  for (std::size_t i = 1; i < s; ++i) {
    for (std::size_t j = 1; i + j < s; ++j) bracket(i, j, s - i - j);
  }
  return out;
}

}  // namespace

ObstructionResult obstruction(const MorphismDeformation& md) {
  const Flavor flavor = flavor_of(md);
  const MorphismDeformation base = truncated(md, md.order);
  const std::size_t s = md.order + 1;
  ObstructionResult res;
  res.ob.a = algebra_obstruction(base.def_a, s);
  res.ob.b = algebra_obstruction(base.def_b, s);
  res.ob.ab = flavor == Flavor::hom ? morphism_obstruction_hom(base, s) : morphism_obstruction_lie(base, s);
  res.required = required_image(md, flavor);
  res.matches_required = res.ob == res.required;
  if (!(res.ob.a == res.required.a)) res.diagnostics.push_back("source obstruction differs from the order " + std::to_string(s) + " equation");
  if (!(res.ob.b == res.required.b)) res.diagnostics.push_back("target obstruction differs from the order " + std::to_string(s) + " equation");
  if (!(res.ob.ab == res.required.ab)) res.diagnostics.push_back("morphism obstruction differs from the order " + std::to_string(s) + " equation");
  const MorphismCochain d3 = delta_morphism(md.phi, res.ob, flavor);
  res.slot_a_cocycle = d3.a.is_zero();
  res.slot_b_cocycle = d3.b.is_zero();
  res.slot_ab_cocycle = d3.ab.is_zero();
  const bool va = slot_valid(md.phi.source), vb = slot_valid(md.phi.target);
  if (!va) res.diagnostics.push_back(md.phi.source.name + " is not a valid Hom-algebra; source slot not enforced");
  if (!vb) res.diagnostics.push_back(md.phi.target.name + " is not a valid Hom-algebra; target slot not enforced");
  if ((va && !res.slot_a_cocycle) || (vb && !res.slot_b_cocycle) || (va && vb && !res.slot_ab_cocycle)) {
    throw NotACocycle("obstruction at order " + std::to_string(s) + " is not a 3-cocycle");
  }
  return res;
}

AlgebraObstructionResult obstruction(const FormalDeformation& d) {
  const FormalDeformation base = truncated(d, d.order);
  const std::size_t s = d.order + 1;
  AlgebraObstructionResult res;
  res.ob = algebra_obstruction(base, s);
  res.required = Rational(-1) * algebra_defect(base, s);
  res.matches_required = res.ob == res.required;
  res.cocycle = delta_self(d.base, res.ob).is_zero();
  if (!res.cocycle && slot_valid(d.base)) {
    throw NotACocycle("obstruction at order " + std::to_string(s) + " is not a 3-cocycle");
  }
  return res;
}

namespace {

// Failures already present in `before` are reported as inherited and do not count.
bool compare_reports(const DeformationReport& before, const DeformationReport& after,
                     std::vector<std::string>& diagnostics) {
  bool clean = true;
  for (std::size_t i = 0; i < after.orders.size(); ++i) {
    const OrderRecord& a = after.orders[i];
    const OrderRecord* b = i < before.orders.size() ? &before.orders[i] : nullptr;
    const bool fresh = (!a.algebra_a_ok && (!b || b->algebra_a_ok)) || (!a.algebra_b_ok && (!b || b->algebra_b_ok)) ||
                       (!a.morphism_eq_ok && (!b || b->morphism_eq_ok)) || (!a.twist_eq_ok && (!b || b->twist_eq_ok));
    if (fresh) clean = false;
    for (const auto& w : a.witnesses) {
      diagnostics.push_back(std::string(fresh ? "" : "inherited, ") + "order " + std::to_string(a.s) + ": " + w);
    }
  }
  return clean;
}

}  // namespace

ExtensionResult extend_deformation(const MorphismDeformation& md) {
  const Flavor flavor = flavor_of(md);
  const std::size_t s = md.order + 1;
  ExtensionResult res;
  const MorphismCochain target = required_image(md, flavor);
  const MorphismCochainSpace space = morphism_cochain_space(md.phi, 2, flavor);
  const auto basis = space.flat_basis();
  const Vector rhs = target.flatten();
  std::vector<Vector> cols;
  cols.reserve(basis.size());
  for (const auto& v : basis) cols.push_back(delta_morphism(md.phi, MorphismCochain::unflatten(md.phi, 2, v), flavor).flatten());
  const Matrix m = Matrix::from_columns(cols, rhs.size());
  const auto coeffs = solve(m, rhs);
  if (!coeffs) {
    res.failing_order = s;
    res.diagnostics.push_back("obstruction at order " + std::to_string(s) + " is not in the image of delta^2");
    return res;
  }
  Vector theta_flat = MorphismCochain::zero(md.phi, 2).flatten();
  for (std::size_t j = 0; j < basis.size(); ++j) axpy(theta_flat, (*coeffs)[j], basis[j]);
  const MorphismCochain theta = MorphismCochain::unflatten(md.phi, 2, theta_flat);
  MorphismDeformation out = truncated(md, md.order);
  out.order = s;
  out.def_a.order = s;
  out.def_b.order = s;
  if (!theta.a.is_zero()) out.def_a.terms[s] = theta.a;
  if (!theta.b.is_zero()) out.def_b.terms[s] = theta.b;
  if (!theta.ab.is_zero()) out.phi_terms[s] = to_matrix(theta.ab);
  const DeformationReport before = check_morphism_deformation(truncated(md, md.order), s);
  const DeformationReport after = check_morphism_deformation(out, s);
  res.reverified = compare_reports(before, after, res.diagnostics);
  res.extended = std::move(out);
  return res;
}

AlgebraExtensionResult extend_deformation(const FormalDeformation& d) {
  const std::size_t s = d.order + 1;
  AlgebraExtensionResult res;
  const FormalDeformation base = truncated(d, d.order);
  const MultilinearMap target = Rational(-1) * algebra_defect(base, s);
  const CochainSpace space = cochain_basis(flavor_of(d.base), d.base, d.base.dim, d.base.alpha, 2);
  std::vector<Vector> cols;
  cols.reserve(space.dim());
  for (const auto& f : space.basis) cols.push_back(delta_self(d.base, f).coeffs());
  const Matrix m = Matrix::from_columns(cols, target.coeffs().size());
  const auto coeffs = solve(m, target.coeffs());
  if (!coeffs) {
    res.failing_order = s;
    res.diagnostics.push_back("obstruction at order " + std::to_string(s) + " is not in the image of delta^2");
    return res;
  }
  const MultilinearMap theta = space.element(*coeffs);
  FormalDeformation out = base;
  out.order = s;
  if (!theta.is_zero()) out.terms[s] = theta;
  const DeformationReport before = check_algebra_deformation(base, s);
  const DeformationReport after = check_algebra_deformation(out, s);
  res.reverified = compare_reports(before, after, res.diagnostics);
  res.extended = std::move(out);
  return res;
}

}  // namespace homcoh
