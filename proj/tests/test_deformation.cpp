#include <doctest.h>

#include <algorithm>

#include "homcoh/bracket.hpp"
#include "homcoh/cohomology.hpp"
#include "homcoh/deformation.hpp"
#include "homcoh/fixtures.hpp"
#include "oracles.hpp"

using namespace homcoh;
using oracle::e;

namespace {

bool has_witness(const DeformationReport& r, const std::string& w) {
  for (const auto& rec : r.orders)
    if (std::find(rec.witnesses.begin(), rec.witnesses.end(), w) != rec.witnesses.end()) return true;
  return false;
}

bool all(const DeformationReport& r, bool OrderRecord::*flag) {
  return std::all_of(r.orders.begin(), r.orders.end(), [&](const OrderRecord& o) { return o.*flag; });
}

MorphismDeformation trivial_md(const HomMorphism& phi, std::size_t order) {
  MorphismDeformation md;
  md.phi = phi;
  md.def_a.base = phi.source;
  md.def_b.base = phi.target;
  md.def_a.order = md.def_b.order = md.order = order;
  return md;
}

}  // namespace

TEST_CASE("algebra deformation checks") {
  FormalDeformation t{fixture_a3(), 2, {}};
  CHECK(check_algebra_deformation(t).ok());

  const FormalDeformation g = fixture_def_g1();
  const DeformationReport r = check_algebra_deformation(g);
  CHECK(r.ok());
  CHECK(r.orders.size() == 3);

  FormalDeformation bad = g;
  MultilinearMap m(2, 3, 3);
  m.at(0 * 3 + 2, 1) = 1;  // [e1,e3] = e2 without the partner
  bad.terms[1] = m;
  const DeformationReport rb = check_algebra_deformation(bad);
  CHECK_FALSE(rb.ok());
  CHECK(has_witness(rb, "A skew-symmetry (e1,e3)"));
}

TEST_CASE("the deformed morphism") {
  const DeformationReport r = check_morphism_deformation(fixture_mdef2());
  CHECK(all(r, &OrderRecord::algebra_a_ok));
  CHECK(all(r, &OrderRecord::morphism_eq_ok));
  CHECK(all(r, &OrderRecord::twist_eq_ok));
  CHECK_FALSE(all(r, &OrderRecord::algebra_b_ok));

  const DeformationReport c = check_morphism_deformation(fixture_mdef2(true));
  CHECK_FALSE(all(c, &OrderRecord::twist_eq_ok));
  CHECK(has_witness(c, "twist (e1)"));

  CHECK(check_morphism_deformation(trivial_md(fixture_phi(), 2)).ok());
}

TEST_CASE("infinitesimals") {
  const InfinitesimalResult z = infinitesimal(trivial_md(fixture_phi(), 1));
  CHECK(z.theta.is_zero());
  CHECK(z.image.is_zero());

  const MorphismDeformation md = fixture_mdef2();
  const InfinitesimalResult r = infinitesimal(md);
  CHECK(r.degree == 1);
  CHECK(r.theta.a == md.def_a.terms.at(1));
  CHECK(r.theta.b == md.def_b.terms.at(1));
  CHECK(to_matrix(r.theta.ab) == md.phi_terms.at(1));
  CHECK(r.slot_a_cocycle);
  CHECK(r.slot_ab_cocycle);
  CHECK_FALSE(r.warnings.empty());

  // theta_1 = 0, theta_2 = the old theta_1
  MorphismDeformation padded = md;
  padded.order = padded.def_a.order = padded.def_b.order = 2;
  padded.def_a.terms = {{2, md.def_a.terms.at(1)}};
  padded.def_b.terms = {{2, md.def_b.terms.at(1)}};
  padded.phi_terms = {{2, md.phi_terms.at(1)}};
  const InfinitesimalResult p = infinitesimal(padded);
  CHECK(p.degree == 2);
  CHECK(p.slot_a_cocycle);
  CHECK(p.slot_ab_cocycle);

  const AlgebraInfinitesimal ai = infinitesimal(fixture_def_g1());
  CHECK(ai.cocycle);
  CHECK(delta_lie_self(fixture_def_g1().base, ai.theta).is_zero());
}

TEST_CASE("series inverse") {
  Rng rng(41);
  std::map<std::size_t, Matrix> psi{{1, rng.matrix(3, 3)}, {2, rng.matrix(3, 3)}};
  const auto inv = series_inverse(psi, 3, 3);
  // product coefficients through order 3
  for (std::size_t s = 1; s <= 3; ++s) {
    Matrix sum(3, 3);
    for (std::size_t i = 0; i <= s; ++i) {
      const Matrix l = i == 0 ? Matrix::identity(3) : (psi.count(i) ? psi.at(i) : Matrix(3, 3));
      const Matrix r = s - i == 0 ? Matrix::identity(3) : (inv.count(s - i) ? inv.at(s - i) : Matrix(3, 3));
      sum = sum + l * r;
    }
    CHECK(sum.is_zero());
  }
}

TEST_CASE("equivalences") {
  const MorphismDeformation md = fixture_mdef2();
  FormalAutomorphismPair id;
  id.order = md.order;
  const MorphismDeformation same = apply_equivalence(md, id);
  CHECK(same.def_a.term(1) == md.def_a.term(1));
  CHECK(same.def_b.term(1) == md.def_b.term(1));
  CHECK(same.phi_term(1) == md.phi_term(1));

  // nilpotent e2 -> e3 commutes with alpha = diag(2, 0, 0)
  Matrix n(3, 3);
  n(2, 1) = 1;
  const FormalDeformation g = fixture_def_g1();
  CHECK(n * g.base.alpha == g.base.alpha * n);
  const FormalDeformation moved = apply_equivalence(g, {{1, n}});
  CHECK(check_algebra_deformation(moved, moved.order).ok());

  FormalAutomorphismPair pair;
  pair.order = 1;
  pair.psi_a[1] = n;
  const MorphismDeformation mt = apply_equivalence(md, pair);
  const DeformationReport before = check_morphism_deformation(md, 1), after = check_morphism_deformation(mt, 1);
  REQUIRE(before.orders.size() == after.orders.size());
  for (std::size_t s = 0; s < before.orders.size(); ++s) {
    CHECK(before.orders[s].algebra_a_ok == after.orders[s].algebra_a_ok);
    CHECK(before.orders[s].morphism_eq_ok == after.orders[s].morphism_eq_ok);
    CHECK(before.orders[s].twist_eq_ok == after.orders[s].twist_eq_ok);
  }
  const MorphismCochain shift{linear_map(n), MultilinearMap(1, 3, 3), MultilinearMap(0, 3, 3)};
  const MorphismCochain d = delta_morphism(md.phi, shift, Flavor::lie);
  const MorphismCochain diff = infinitesimal(md).theta - infinitesimal(mt).theta;
  CHECK(diff.a == d.a);
  CHECK(diff.b == d.b);
  CHECK(diff.ab == d.ab);
}

TEST_CASE("obstructions and extensions") {
  const ObstructionResult z = obstruction(trivial_md(fixture_phi(), 1));
  CHECK(z.ob.is_zero());
  const ExtensionResult ze = extend_deformation(trivial_md(fixture_phi(), 1));
  REQUIRE(ze.extended);
  CHECK(ze.extended->order == 2);
  CHECK(ze.extended->def_a.term(2).is_zero());

  const FormalDeformation g = fixture_def_g1();
  const AlgebraObstructionResult og = obstruction(g);
  CHECK(og.cocycle);
  CHECK(og.matches_required);
  CHECK(og.ob == Rational(1, 2) * nr_bracket(g.base, g.terms.at(1), g.terms.at(1)));

  // A3 is rigid, so the obstruction of an order-1 deformation is a coboundary.
  const FormalDeformation a = fixture_a3_trivial_deformation();
  const AlgebraObstructionResult oa = obstruction(a);
  CHECK(oa.cocycle);
  CHECK(oa.matches_required);
  CHECK(oa.ob == Rational(1, 2) * gerstenhaber_bracket(a.base, a.terms.at(1), a.terms.at(1)));
  const AlgebraExtensionResult ea = extend_deformation(a);
  REQUIRE(ea.extended);
  CHECK(ea.reverified);
  CHECK(check_algebra_deformation(*ea.extended, 2).ok());

  for (const FormalDeformation& s : {fixture_stuck_lie(), fixture_stuck_assoc()}) {
    const AlgebraObstructionResult o = obstruction(s);
    CHECK(o.cocycle);
    CHECK_FALSE(o.ob.is_zero());
    const AlgebraExtensionResult x = extend_deformation(s);
    CHECK_FALSE(x.extended);
    CHECK(x.failing_order == 2);
  }

  const ObstructionResult om = obstruction(fixture_mdef2());
  CHECK(om.slot_a_cocycle);
  CHECK(om.slot_ab_cocycle);
  const ExtensionResult em = extend_deformation(fixture_mdef2());
  REQUIRE(em.extended);
  CHECK(em.reverified);
}
