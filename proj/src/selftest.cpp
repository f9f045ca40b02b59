#include "homcoh/selftest.hpp"

#include "homcoh/bracket.hpp"
#include "homcoh/cohomology.hpp"
#include "homcoh/errors.hpp"
#include "homcoh/fixtures.hpp"

namespace homcoh {

namespace {

MultilinearMap delta_self(const HomAlgebra& a, const MultilinearMap& f) {
  return a.kind == Kind::lie ? delta_lie_self(a, f) : delta_hom_self(a, f);
}

Flavor flavor_of(const HomAlgebra& a) { return a.kind == Kind::lie ? Flavor::lie : Flavor::hom; }

MultilinearMap random_cochain(Rng& rng, const CochainSpace& s) {
  MultilinearMap f = s.zero();
  for (const auto& b : s.basis) f += rng.small(2) * b;
  return f;
}

std::vector<HomAlgebra> valid_fixture_algebras() {
  std::vector<HomAlgebra> out = {fixture_a3(), fixture_a3(1, 1), fixture_b2(), fixture_l4a(),
                                 fixture_l4b(1), fixture_l4b(-1), fixture_g1(2, 0), fixture_g1(2, 3)};
  std::vector<HomAlgebra> valid;
  for (auto& a : out) {
    if (validate(a).is_valid) valid.push_back(std::move(a));
  }
  return valid;
}

void check_square_zero(const HomAlgebra& a, SuiteResult& r) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const CochainSpace c = cochain_basis(flavor_of(a), a, a.dim, a.alpha, n);
    for (std::size_t j = 0; j < c.dim(); ++j) {
      ++r.checked;
      if (!delta_self(a, delta_self(a, c.basis[j])).is_zero()) {
        r.failures.push_back(a.name + ": delta o delta != 0 on basis cochain " + std::to_string(j) + " of degree " +
                             std::to_string(n));
        return;
      }
    }
  }
}

void check_square_zero(const HomMorphism& phi, Flavor flavor, SuiteResult& r) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto space = morphism_cochain_space(phi, n, flavor);
    for (const auto& v : space.flat_basis()) {
      ++r.checked;
      const MorphismCochain c = MorphismCochain::unflatten(phi, n, v);
      if (!delta_morphism(phi, delta_morphism(phi, c, flavor), flavor).is_zero()) {
        r.failures.push_back(phi.source.name + " -> " + phi.target.name + ": delta o delta != 0 in degree " +
                             std::to_string(n));
        return;
      }
    }
  }
}

}  // namespace

SuiteResult suite_square_zero(std::uint64_t seed, std::size_t random_count) {
  SuiteResult r{"square-zero", 0, {}, {}};
  for (const auto& a : valid_fixture_algebras()) check_square_zero(a, r);
  const HomMorphism phi = fixture_phi();
  if (validate(phi.source).is_valid && validate(phi.target).is_valid && check_morphism(phi.source, phi.target, phi.matrix).is_valid) {
    check_square_zero(phi, Flavor::hom, r);
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < random_count; ++k) check_square_zero(random_hom_associative(rng), r);
  for (std::size_t k = 0; k < random_count; ++k) check_square_zero(random_hom_lie(rng), r);
  for (std::size_t k = 0; k < 3; ++k) {
    const HomAlgebra a = random_hom_associative(rng);
    check_square_zero(HomMorphism{a, a, Matrix::identity(a.dim)}, Flavor::hom, r);
    const HomAlgebra l = random_hom_lie(rng);
    check_square_zero(HomMorphism{l, l, Matrix::identity(l.dim)}, Flavor::lie, r);
  }
  return r;
}

SuiteResult suite_bracket_identity(std::uint64_t seed, std::size_t count) {
  SuiteResult r{"bracket-identity", 0, {}, {}};
  Rng rng(seed + 1);
  std::size_t assoc_valid = 0, lie_valid = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const HomAlgebra a = k % 2 == 0 ? random_tensor(rng, Kind::associative, 2) : random_hom_associative(rng);
    const bool valid = validate(a).is_valid;
    const bool bracket_zero = gerstenhaber_bracket(a, a.mul, a.mul).is_zero();
    assoc_valid += valid;
    ++r.checked;
    if (valid != bracket_zero) r.failures.push_back("associative sample " + std::to_string(k) + " disagrees");
  }
  for (std::size_t k = 0; k < count; ++k) {
    const HomAlgebra l = k % 2 == 0 ? random_tensor(rng, Kind::lie, 3) : random_hom_lie(rng);
    const bool valid = validate(l).is_valid;
    const bool bracket_zero = nr_bracket(l, l.mul, l.mul).is_zero();
    lie_valid += valid;
    ++r.checked;
    if (valid != bracket_zero) r.failures.push_back("lie sample " + std::to_string(k) + " disagrees");
  }
  r.counts = {{"associative_valid", assoc_valid}, {"lie_valid", lie_valid}};
  return r;
}

SuiteResult suite_yau_twist(std::uint64_t seed, std::size_t count) {
  SuiteResult r{"yau-twist", 0, {}, {}};
  Rng rng(seed + 2);
  for (std::size_t k = 0; k < count; ++k) {
    auto [a, gamma] = random_ordinary_with_morphism(rng);
    ++r.checked;
    try {
      const auto rep = validate(yau_twist(a, gamma));
      if (!rep.is_valid || !rep.multiplicative) r.failures.push_back(a.name + " twist is not a multiplicative Hom-algebra");
    } catch (const Error& e) {
      r.failures.push_back(a.name + ": " + e.what());
    }
  }
  return r;
}

SuiteResult suite_faces(std::uint64_t seed, std::size_t count) {
  SuiteResult r{"faces", 0, {}, {}};
  Rng rng(seed + 3);
  for (std::size_t k = 0; k < count; ++k) {
    const HomAlgebra a = random_hom_associative(rng);
    const Bimodule m = adjoint_bimodule(HomMorphism{a, a, Matrix::identity(a.dim)});
    const std::size_t n = 1 + k % 2;
    const MultilinearMap f = random_cochain(rng, hom_cochain_basis(a, a.dim, a.alpha, n));
    ++r.checked;
    MultilinearMap sum(n + 1, a.dim, a.dim);
    for (std::size_t i = 0; i <= n; ++i) sum += (i % 2 == 1 ? Rational(1) : Rational(-1)) * d_component(a, m, i, f);
    if (!(sum == delta_hom_bimodule(a, m, f))) {
      r.failures.push_back("sample " + std::to_string(k) + ": delta differs from the face sum");
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!(d_component(a, m, i, d_component(a, m, j, f)) == d_component(a, m, j, d_component(a, m, i - 1, f)))) {
          r.failures.push_back("sample " + std::to_string(k) + ": D_" + std::to_string(i) + " D_" + std::to_string(j) +
                               " != D_" + std::to_string(j) + " D_" + std::to_string(i - 1));
        }
      }
    }
  }
  return r;
}

SuiteResult suite_deformation_cocycles() {
  SuiteResult r{"deformation-cocycles", 0, {}, {}};
  auto guard = [&r](const std::string& what, auto&& body) {
    ++r.checked;
    try {
      if (!body()) r.failures.push_back(what);
    } catch (const Error& e) {
      r.failures.push_back(what + ": " + e.what());
    }
  };
  std::vector<FormalDeformation> algebra_cases = {fixture_def_g1(), fixture_a3_trivial_deformation(),
                                                  fixture_stuck_lie(), fixture_stuck_assoc()};
  if (auto ext = extend_deformation(fixture_a3_trivial_deformation()).extended) algebra_cases.push_back(*ext);
  for (const auto& d : algebra_cases) {
    guard(d.base.name + " infinitesimal", [&] { return infinitesimal(d).cocycle; });
    guard(d.base.name + " obstruction", [&] {
      const auto ob = obstruction(d);
      return ob.cocycle && ob.matches_required;
    });
  }
  const MorphismDeformation md = fixture_mdef2();
  guard("MDEF-2 infinitesimal", [&] {
    const auto inf = infinitesimal(md);
    return inf.slot_a_cocycle && inf.slot_ab_cocycle;
  });
  guard("MDEF-2 obstruction", [&] {
    const auto ob = obstruction(md);
    return ob.slot_a_cocycle;
  });
  MorphismDeformation padded = md;
  padded.order = 2;
  padded.def_a.order = 2;
  padded.def_b.order = 2;
  padded.def_a.terms = {{2, md.def_a.terms.at(1)}};
  padded.def_b.terms = {{2, md.def_b.terms.at(1)}};
  padded.phi_terms = {{2, md.phi_terms.at(1)}};
  guard("MDEF-2 padded infinitesimal", [&] {
    const auto inf = infinitesimal(padded);
    return inf.degree == 2 && inf.slot_a_cocycle && inf.slot_ab_cocycle;
  });
  return r;
}

namespace {

bool inverse_ok(const std::map<std::size_t, Matrix>& psi, std::size_t dim, std::size_t order) {
  const auto inv = series_inverse(psi, dim, order);
  for (std::size_t s = 0; s <= order; ++s) {
    Matrix acc(dim, dim);
    for (std::size_t i = 0; i <= s; ++i) {
      Matrix p = i == 0 ? Matrix::identity(dim) : (psi.count(i) ? psi.at(i) : Matrix(dim, dim));
      acc = acc + p * inv.at(s - i);
    }
    if (!(acc == (s == 0 ? Matrix::identity(dim) : Matrix(dim, dim)))) return false;
  }
  return true;
}

}  // namespace

SuiteResult suite_equivalence(std::uint64_t seed, std::size_t count) {
  SuiteResult r{"equivalence", 0, {}, {}};
  {
    const MorphismDeformation md = fixture_mdef2();
    FormalAutomorphismPair psi;
    psi.order = 1;
    Matrix nil(3, 3);
    nil(2, 1) = 1;
    psi.psi_a[1] = nil;
    const MorphismDeformation out = apply_equivalence(md, psi);
    const auto before = check_morphism_deformation(md, 1);
    const auto after = check_morphism_deformation(out, 1);
    ++r.checked;
    if (before.algebra_a_ok != after.algebra_a_ok || before.algebra_b_ok != after.algebra_b_ok ||
        before.morphism_eq_ok != after.morphism_eq_ok || before.twist_eq_ok != after.twist_eq_ok) {
      r.failures.push_back("MDEF-2: verdicts changed under transport");
    }
    const Flavor fl = Flavor::lie;
    const MorphismCochain t0{md.def_a.term(1), md.def_b.term(1), linear_map(md.phi_term(1))};
    const MorphismCochain t1{out.def_a.term(1), out.def_b.term(1), linear_map(out.phi_term(1))};
    const MorphismCochain shift =
        delta_morphism(md.phi, {linear_map(nil), MultilinearMap(1, 3, 3), MultilinearMap(0, 3, 3)}, fl);
    ++r.checked;
    if (!(t0 - t1 == shift)) r.failures.push_back("MDEF-2: infinitesimal shift is not delta of (psi_A1, psi_B1, 0)");
  }
  Rng rng(seed + 4);
  for (std::size_t k = 0; k < count; ++k) {
    const HomAlgebra a = k % 2 == 0 ? random_hom_associative(rng) : random_hom_lie(rng);
    const auto summary = compute_cohomology(*(a.kind == Kind::lie ? lie_self_complex(a) : hom_self_complex(a)), 2, 2);
    FormalDeformation d;
    d.base = a;
    d.order = 1;
    MultilinearMap mu1(2, a.dim, a.dim);
    for (const auto& z : summary.at(2).cocycle_basis) mu1 += rng.small(2) * z[0];
    if (!mu1.is_zero()) d.terms[1] = mu1;
    if (auto ext = extend_deformation(d).extended) d = *ext;
    std::map<std::size_t, Matrix> psi;
    const Matrix psi1 = random_commuting(rng, a);
    psi[1] = psi1;
    psi[2] = random_commuting(rng, a);
    ++r.checked;
    if (!inverse_ok(psi, a.dim, d.order)) r.failures.push_back(a.name + ": series inverse is wrong");
    const FormalDeformation out = apply_equivalence(d, psi);
    ++r.checked;
    if (check_algebra_deformation(d, d.order).ok() != check_algebra_deformation(out, d.order).ok()) {
      r.failures.push_back(a.name + ": validity changed under transport");
    }
    ++r.checked;
    if (!(d.term(1) - out.term(1) == delta_self(a, linear_map(psi1)))) {
      r.failures.push_back(a.name + ": infinitesimal shift is not delta(psi_1)");
    }
  }
  return r;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  return {suite_square_zero(seed),  suite_bracket_identity(seed), suite_yau_twist(seed),
          suite_faces(seed),        suite_deformation_cocycles(),  suite_equivalence(seed)};
}

Json selftest_to_json(const std::vector<SuiteResult>& results) {
  Json out = Json::array();
  for (const auto& s : results) {
    Json j;
    j["suite"] = s.name;
    j["passed"] = s.passed();
    j["checked"] = s.checked;
    for (const auto& [k, v] : s.counts) j["counts"][k] = v;
    j["failures"] = s.failures;
    out.push_back(j);
  }
  return out;
}

}  // namespace homcoh
