#include "homcoh/cochain.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "homcoh/errors.hpp"
#include "homcoh/perm.hpp"

namespace homcoh {

std::size_t max_arity() {
  const char* env = std::getenv("HOMCOH_MAX_ARITY");
  if (env == nullptr || *env == '\0') return 4;
  try {
    return static_cast<std::size_t>(std::stoul(env));
  } catch (const std::exception&) {
    throw ParseError("HOMCOH_MAX_ARITY is not a number");
  }
}

void check_arity(std::size_t arity) {
  if (arity > max_arity()) {
    throw ArityLimit("arity " + std::to_string(arity) + " exceeds HOMCOH_MAX_ARITY=" + std::to_string(max_arity()));
  }
}

void CochainSpace::build_coordinates() {
  std::vector<Vector> flat;
  flat.reserve(basis.size());
  for (const auto& f : basis) flat.push_back(f.coeffs());
  coords_ = SpanCoordinates(std::move(flat), ambient_dim());
}

std::optional<Vector> CochainSpace::coordinates(const MultilinearMap& f) const {
  if (f.arity() != arity || f.source_dim() != source_dim || f.target_dim() != target_dim) {
    throw DimensionError("cochain does not belong to this space");
  }
  return coords_.coordinates(f.coeffs());
}

MultilinearMap CochainSpace::element(const Vector& c) const {
  return MultilinearMap::from_coeffs(arity, source_dim, target_dim, coords_.combine(c));
}

namespace {

// Nonzero products alpha[t'_1][t_1] ... alpha[t'_k][t_k] over all t'.
void expand_alpha(const Matrix& alpha, const std::vector<std::size_t>& args, std::size_t pos, std::size_t idx,
                  const Rational& w, std::vector<std::pair<std::size_t, Rational>>& out) {
  if (pos == args.size()) {
    out.emplace_back(idx, w);
    return;
  }
  for (std::size_t r = 0; r < alpha.rows(); ++r) {
    const Rational& a = alpha(r, args[pos]);
    if (sgn(a) == 0) continue;
    expand_alpha(alpha, args, pos + 1, idx * alpha.rows() + r, w * a, out);
  }
}

CochainSpace arity_zero_space(Flavor flavor, const HomAlgebra& source, std::size_t target_dim) {
  CochainSpace s;
  s.arity = 0;
  s.flavor = flavor;
  s.source_dim = source.dim;
  s.target_dim = target_dim;
  for (std::size_t o = 0; o < target_dim; ++o) s.basis.push_back(constant_map(unit_vector(target_dim, o), source.dim));
  s.build_coordinates();
  return s;
}

void check_beta(const Matrix& beta, std::size_t target_dim) {
  if (beta.rows() != target_dim || beta.cols() != target_dim) throw DimensionError("beta has wrong shape");
}

}  // namespace

CochainSpace hom_cochain_basis(const HomAlgebra& source, std::size_t target_dim, const Matrix& beta, std::size_t k) {
  check_beta(beta, target_dim);
  if (k == 0) return arity_zero_space(Flavor::hom, source, target_dim);
  check_arity(k);
  const std::size_t n = source.dim;
  const std::size_t tuples = int_pow(n, k);
  const std::size_t unknowns = tuples * target_dim;
  Matrix system(unknowns, unknowns);
  std::vector<std::pair<std::size_t, Rational>> terms;
  for (std::size_t t = 0; t < tuples; ++t) {
    terms.clear();
    expand_alpha(source.alpha, tuple_args(t, k, n), 0, 0, Rational(1), terms);
    for (std::size_t o = 0; o < target_dim; ++o) {
      const std::size_t row = t * target_dim + o;
      for (std::size_t p = 0; p < target_dim; ++p) system(row, t * target_dim + p) += beta(o, p);
      for (const auto& [tp, w] : terms) system(row, tp * target_dim + o) -= w;
    }
  }
  CochainSpace s;
  s.arity = k;
  s.flavor = Flavor::hom;
  s.source_dim = n;
  s.target_dim = target_dim;
  for (auto& v : nullspace_basis(system)) s.basis.push_back(MultilinearMap::from_coeffs(k, n, target_dim, std::move(v)));
  s.build_coordinates();
  return s;
}

CochainSpace lie_cochain_basis(const HomAlgebra& source, std::size_t target_dim, const Matrix& beta, std::size_t k) {
  check_beta(beta, target_dim);
  if (k == 0) return arity_zero_space(Flavor::lie, source, target_dim);
  check_arity(k);
  const std::size_t n = source.dim;
  const std::size_t tuples = int_pow(n, k);

  // Unknowns: values on strictly increasing tuples.
  std::vector<std::size_t> sorted_tuples;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t t = 0; t < tuples; ++t) {
    const auto a = tuple_args(t, k, n);
    if (std::adjacent_find(a.begin(), a.end(), [](std::size_t x, std::size_t y) { return x >= y; }) == a.end()) {
      slot[t] = sorted_tuples.size();
      sorted_tuples.push_back(t);
    }
  }
  // Full tuple -> (sorted slot, sign), or no entry when an index repeats.
  auto reduce = [&](std::size_t t) -> std::optional<std::pair<std::size_t, int>> {
    auto a = tuple_args(t, k, n);
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        if (a[i] == a[j]) return std::nullopt;
        if (a[i] > a[j]) sign = -sign;
      }
    std::sort(a.begin(), a.end());
    return std::make_pair(slot.at(tuple_index(a, n)), sign);
  };

  const std::size_t unknowns = sorted_tuples.size() * target_dim;
  Matrix system(unknowns, unknowns);
  std::vector<std::pair<std::size_t, Rational>> terms;
  for (std::size_t s = 0; s < sorted_tuples.size(); ++s) {
    terms.clear();
    expand_alpha(source.alpha, tuple_args(sorted_tuples[s], k, n), 0, 0, Rational(1), terms);
    for (std::size_t o = 0; o < target_dim; ++o) {
      const std::size_t row = s * target_dim + o;
      for (std::size_t p = 0; p < target_dim; ++p) system(row, s * target_dim + p) += beta(o, p);
      for (const auto& [tp, w] : terms) {
        if (auto r = reduce(tp)) system(row, r->first * target_dim + o) -= r->second * w;
      }
    }
  }
  CochainSpace sp;
  sp.arity = k;
  sp.flavor = Flavor::lie;
  sp.source_dim = n;
  sp.target_dim = target_dim;
  for (const auto& g : nullspace_basis(system)) {
    MultilinearMap f(k, n, target_dim);
    for (std::size_t t = 0; t < tuples; ++t) {
      if (auto r = reduce(t)) {
        for (std::size_t o = 0; o < target_dim; ++o) f.at(t, o) = r->second * g[r->first * target_dim + o];
      }
    }
    sp.basis.push_back(std::move(f));
  }
  sp.build_coordinates();
  return sp;
}

CochainSpace cochain_basis(Flavor flavor, const HomAlgebra& source, std::size_t target_dim, const Matrix& beta,
                           std::size_t k) {
  return flavor == Flavor::lie ? lie_cochain_basis(source, target_dim, beta, k)
                               : hom_cochain_basis(source, target_dim, beta, k);
}

MultilinearMap alternator(const MultilinearMap& f) {
  const std::size_t k = f.arity();
  if (k < 2) return f;
  const auto perms = permutations(k);
  MultilinearMap g(k, f.source_dim(), f.target_dim());
  const Rational scale(1, factorial(k));
  std::vector<std::size_t> permuted(k);
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    const auto args = tuple_args(t, k, f.source_dim());
    for (const auto& p : perms) {
      for (std::size_t i = 0; i < k; ++i) permuted[i] = args[p.image[i]];
      g.add_to(t, f.value(permuted), scale * p.sign);
    }
  }
  return g;
}

Vector MorphismCochain::flatten() const {
  Vector v;
  v.reserve(a.coeffs().size() + b.coeffs().size() + ab.coeffs().size());
  v.insert(v.end(), a.coeffs().begin(), a.coeffs().end());
  v.insert(v.end(), b.coeffs().begin(), b.coeffs().end());
  v.insert(v.end(), ab.coeffs().begin(), ab.coeffs().end());
  return v;
}

MorphismCochain MorphismCochain::zero(const HomMorphism& phi, std::size_t n) {
  if (n == 0) throw DimensionError("morphism cochains start in degree 1");
  const std::size_t da = phi.source.dim, db = phi.target.dim;
  return {MultilinearMap(n, da, da), MultilinearMap(n, db, db), MultilinearMap(n - 1, da, db)};
}

MorphismCochain MorphismCochain::unflatten(const HomMorphism& phi, std::size_t n, const Vector& v) {
  MorphismCochain c = zero(phi, n);
  const std::size_t la = c.a.coeffs().size(), lb = c.b.coeffs().size(), lab = c.ab.coeffs().size();
  if (v.size() != la + lb + lab) throw DimensionError("flattened morphism cochain has wrong length");
  std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(la), c.a.coeffs().begin());
  std::copy(v.begin() + static_cast<std::ptrdiff_t>(la), v.begin() + static_cast<std::ptrdiff_t>(la + lb),
            c.b.coeffs().begin());
  std::copy(v.begin() + static_cast<std::ptrdiff_t>(la + lb), v.end(), c.ab.coeffs().begin());
  return c;
}

std::vector<Vector> MorphismCochainSpace::flat_basis() const {
  const std::size_t la = a.ambient_dim(), lb = b.ambient_dim(), lab = ab.ambient_dim();
  std::vector<Vector> out;
  auto push = [&](const CochainSpace& s, std::size_t offset) {
    for (const auto& f : s.basis) {
      Vector v = zero_vector(la + lb + lab);
      std::copy(f.coeffs().begin(), f.coeffs().end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
      out.push_back(std::move(v));
    }
  };
  push(a, 0);
  push(b, la);
  push(ab, la + lb);
  return out;
}

MorphismCochainSpace morphism_cochain_space(const HomMorphism& phi, std::size_t n, Flavor flavor) {
  if (n == 0) throw DimensionError("morphism cochain spaces start in degree 1");
  return {cochain_basis(flavor, phi.source, phi.source.dim, phi.source.alpha, n),
          cochain_basis(flavor, phi.target, phi.target.dim, phi.target.alpha, n),
          cochain_basis(flavor, phi.source, phi.target.dim, phi.target.alpha, n - 1)};
}

}  // namespace homcoh
