#include "homcoh/cohomology.hpp"

#include <map>
#include <mutex>

#include "detail.hpp"
#include "homcoh/errors.hpp"

namespace homcoh {

namespace detail {

MultilinearMap insertion_sum_assoc(const HomAlgebra& a, const MultilinearMap& f) {
  const std::size_t n = f.arity();
  if (n == 0) throw DimensionError("insertion sum needs arity >= 1");
  if (f.source_dim() != a.dim) throw DimensionError("cochain source does not match the algebra");
  check_arity(n + 1);
  MultilinearMap out(n + 1, a.dim, f.target_dim());
  std::vector<Vector> args(n);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, n + 1, a.dim);
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t p = 0; p < n; ++p) {
        if (p < k - 1) args[p] = a.alpha.column(x[p]);
        else if (p == k - 1) args[p] = a.mul.value(x[k - 1] * a.dim + x[k]);
        else args[p] = a.alpha.column(x[p + 1]);
      }
      out.add_to(t, f.evaluate(args), k % 2 == 0 ? 1 : -1);
    }
  }
  return out;
}

MultilinearMap insertion_sum_lie(const HomAlgebra& l, const MultilinearMap& f) {
  const std::size_t n = f.arity();
  if (n == 0) throw DimensionError("insertion sum needs arity >= 1");
  if (f.source_dim() != l.dim) throw DimensionError("cochain source does not match the algebra");
  check_arity(n + 1);
  MultilinearMap out(n + 1, l.dim, f.target_dim());
  std::vector<Vector> args(n);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, n + 1, l.dim);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        args[0] = l.mul.value(x[i] * l.dim + x[j]);
        std::size_t p = 1;
        for (std::size_t m = 0; m <= n; ++m) {
          if (m != i && m != j) args[p++] = l.alpha.column(x[m]);
        }
        out.add_to(t, f.evaluate(args), (i + j) % 2 == 0 ? 1 : -1);
      }
    }
  }
  return out;
}

}  // namespace detail

namespace {

using Action = std::function<Vector(const Vector&, const Vector&)>;

// Boundary terms of the Hochschild-type differential.
MultilinearMap hochschild_boundary(const HomAlgebra& a, const MultilinearMap& f, const Action& left,
                                   const Action& right, bool with_left, bool with_right) {
  const std::size_t n = f.arity();
  MultilinearMap out(n + 1, a.dim, f.target_dim());
  const Matrix ap = a.alpha_power(n - 1);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, n + 1, a.dim);
    if (with_left) {
      std::vector<std::size_t> tail(x.begin() + 1, x.end());
      out.add_to(t, left(ap.column(x[0]), f.value(tail)));
    }
    if (with_right) {
      std::vector<std::size_t> head(x.begin(), x.end() - 1);
      out.add_to(t, right(f.value(head), ap.column(x[n])), (n + 1) % 2 == 0 ? 1 : -1);
    }
  }
  return out;
}

void require_hochschild_input(const HomAlgebra& a, const MultilinearMap& f) {
  if (a.kind != Kind::associative) throw DimensionError("Hochschild-type differential needs an associative algebra");
  if (f.arity() == 0) throw DimensionError("differentials are defined from arity 1");
  if (f.source_dim() != a.dim) throw DimensionError("cochain source does not match the algebra");
}

void require_lie_input(const HomAlgebra& l, const MultilinearMap& f) {
  if (l.kind != Kind::lie) throw DimensionError("Chevalley-Eilenberg-type differential needs a Lie algebra");
  if (f.arity() == 0) throw DimensionError("differentials are defined from arity 1");
  if (f.source_dim() != l.dim) throw DimensionError("cochain source does not match the algebra");
  if (!is_alternating(f)) throw DimensionError("Lie cochain is not alternating");
}

MultilinearMap lie_differential(const HomAlgebra& l, const MultilinearMap& f, const Action& act) {
  const std::size_t n = f.arity();
  MultilinearMap out = detail::insertion_sum_lie(l, f);
  const Matrix ap = l.alpha_power(n - 1);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, n + 1, l.dim);
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t m = 0; m <= n; ++m)
        if (m != i) rest.push_back(x[m]);
      out.add_to(t, act(ap.column(x[i]), f.value(rest)), i % 2 == 0 ? 1 : -1);
    }
  }
  return out;
}

}  // namespace

MultilinearMap delta_hom_self(const HomAlgebra& a, const MultilinearMap& f) {
  require_hochschild_input(a, f);
  if (f.target_dim() != a.dim) throw DimensionError("self-valued cochain has wrong target");
  Action mu = [&a](const Vector& x, const Vector& y) { return multiply(a, x, y); };
  return hochschild_boundary(a, f, mu, mu, true, true) + detail::insertion_sum_assoc(a, f);
}

MultilinearMap delta_hom_bimodule(const HomAlgebra& a, const Bimodule& m, const MultilinearMap& f) {
  require_hochschild_input(a, f);
  if (m.algebra_dim() != a.dim || f.target_dim() != m.carrier_dim()) throw DimensionError("bimodule mismatch");
  Action left = [&m](const Vector& x, const Vector& v) { return m.left(x, v); };
  Action right = [&m](const Vector& v, const Vector& x) { return m.right(v, x); };
  return hochschild_boundary(a, f, left, right, true, true) + detail::insertion_sum_assoc(a, f);
}

MultilinearMap delta_lie_self(const HomAlgebra& l, const MultilinearMap& f) {
  require_lie_input(l, f);
  if (f.target_dim() != l.dim) throw DimensionError("self-valued cochain has wrong target");
  return lie_differential(l, f, [&l](const Vector& x, const Vector& y) { return multiply(l, x, y); });
}

MultilinearMap delta_lie_module(const HomAlgebra& l, const LieModule& pi, const MultilinearMap& f) {
  require_lie_input(l, f);
  if (pi.algebra_dim() != l.dim || f.target_dim() != pi.carrier_dim()) throw DimensionError("module mismatch");
  return lie_differential(l, f, [&pi](const Vector& x, const Vector& v) { return pi.act(x, v); });
}

MultilinearMap d_component(const HomAlgebra& a, const Bimodule& m, std::size_t i, const MultilinearMap& f) {
  require_hochschild_input(a, f);
  const std::size_t n = f.arity();
  if (i > n) throw DimensionError("face index out of range");
  check_arity(n + 1);
  MultilinearMap out(n + 1, a.dim, f.target_dim());
  if (i == n) return out;
  std::vector<Vector> args(n);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = tuple_args(t, n + 1, a.dim);
    for (std::size_t p = 0; p < n; ++p) {
      if (p < i) args[p] = a.alpha.column(x[p]);
      else if (p == i) args[p] = a.mul.value(x[i] * a.dim + x[i + 1]);
      else args[p] = a.alpha.column(x[p + 1]);
    }
    out.add_to(t, f.evaluate(args));
  }
  Action left = [&m](const Vector& x, const Vector& v) { return m.left(x, v); };
  Action right = [&m](const Vector& v, const Vector& x) { return m.right(v, x); };
  // hochschild_boundary signs the right term by (-1)^{n+1}; D_{n-1} carries it with a minus sign.
  if (i == 0) out -= hochschild_boundary(a, f, left, right, true, false);
  if (i == n - 1) {
    MultilinearMap r = hochschild_boundary(a, f, left, right, false, true);
    out += (n % 2 == 0 ? Rational(1) : Rational(-1)) * r;
  }
  return out;
}

MorphismCochain delta_morphism(const HomMorphism& phi, const MorphismCochain& c, Flavor flavor) {
  const std::size_t n = c.degree();
  if (n == 0) throw DimensionError("morphism differential starts in degree 1");
  if (c.b.arity() != n || c.ab.arity() + 1 != n) throw DimensionError("inconsistent morphism cochain arities");
  MorphismCochain out;
  const MultilinearMap phi_a = compose_out(phi.matrix, c.a);
  const MultilinearMap b_phi = precompose(c.b, phi.matrix);
  if (flavor == Flavor::hom) {
    out.a = delta_hom_self(phi.source, c.a);
    out.b = delta_hom_self(phi.target, c.b);
    out.ab = phi_a - b_phi;
    if (n >= 2) out.ab -= delta_hom_bimodule(phi.source, adjoint_bimodule(phi, false), c.ab);
  } else {
    out.a = delta_lie_self(phi.source, c.a);
    out.b = delta_lie_self(phi.target, c.b);
    out.ab = (n % 2 == 1 ? Rational(1) : Rational(-1)) * (phi_a - b_phi);
    if (n >= 2) out.ab += delta_lie_module(phi.source, lie_adjoint_module(phi, false), c.ab);
  }
  return out;
}

Matrix differential_matrix(const CochainSpace& from, const CochainSpace& to,
                           const std::function<MultilinearMap(const MultilinearMap&)>& delta) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < from.dim(); ++j) {
    auto c = to.coordinates(delta(from.basis[j]));
    if (!c) {
      throw ImageOutsideCodomain("image of basis cochain " + std::to_string(j) +
                                 " is not in the codomain cochain space");
    }
    cols.push_back(std::move(*c));
  }
  return Matrix::from_columns(cols, to.dim());
}

Matrix differential_matrix(const HomMorphism& phi, std::size_t n, Flavor flavor) {
  const MorphismCochainSpace from = morphism_cochain_space(phi, n, flavor);
  const MorphismCochainSpace to = morphism_cochain_space(phi, n + 1, flavor);
  std::vector<Vector> cols;
  const auto flat = from.flat_basis();
  for (std::size_t j = 0; j < flat.size(); ++j) {
    const MorphismCochain img = delta_morphism(phi, MorphismCochain::unflatten(phi, n, flat[j]), flavor);
    auto ca = to.a.coordinates(img.a);
    auto cb = to.b.coordinates(img.b);
    auto cab = to.ab.coordinates(img.ab);
    if (!ca || !cb || !cab) {
      throw ImageOutsideCodomain("image of morphism basis cochain " + std::to_string(j) +
                                 " is not in the codomain cochain space");
    }
    Vector col = *ca;
    col.insert(col.end(), cb->begin(), cb->end());
    col.insert(col.end(), cab->begin(), cab->end());
    cols.push_back(std::move(col));
  }
  return Matrix::from_columns(cols, to.dim());
}

std::string to_string(ComplexFlavor f) {
  switch (f) {
    case ComplexFlavor::hom_self: return "hom_self";
    case ComplexFlavor::hom_bimodule: return "hom_bimodule";
    case ComplexFlavor::lie_self: return "lie_self";
    case ComplexFlavor::lie_module: return "lie_module";
    case ComplexFlavor::morphism_hom: return "morphism_hom";
    case ComplexFlavor::morphism_lie: return "morphism_lie";
  }
  return "unknown";
}

namespace {

std::string describe(const HomAlgebra& a, const ValidityReport& r) {
  std::string s = a.name + " fails " + r.failure + " at (";
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    if (i) s += ",";
    s += r.witness[i] < a.basis.size() ? a.basis[r.witness[i]] : std::to_string(r.witness[i]);
  }
  return s + ")";
}

void note_algebra(std::vector<std::string>& w, const HomAlgebra& a) {
  const auto r = validate(a);
  if (!r.is_valid) w.push_back(describe(a, r));
  else if (!r.multiplicative) w.push_back(a.name + " twist map is not multiplicative");
}

class CachedBases {
 public:
  template <class Build>
  const std::vector<Vector>& get(std::size_t n, Build build) const {
    std::lock_guard<std::mutex> guard(lock_);
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, build()).first;
    return it->second;
  }

 private:
  mutable std::mutex lock_;
  mutable std::map<std::size_t, std::vector<Vector>> cache_;
};

class AlgebraComplex : public Complex {
 public:
  using Delta = std::function<MultilinearMap(const MultilinearMap&)>;

  AlgebraComplex(ComplexFlavor flavor, HomAlgebra source, std::size_t target_dim, Matrix beta, Delta delta)
      : flavor_(flavor),
        source_(std::move(source)),
        target_dim_(target_dim),
        beta_(std::move(beta)),
        delta_(std::move(delta)) {
    note_algebra(warnings_, source_);
  }

  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  ComplexFlavor flavor() const override { return flavor_; }
  Flavor cochain_flavor() const {
    return flavor_ == ComplexFlavor::lie_self || flavor_ == ComplexFlavor::lie_module ? Flavor::lie : Flavor::hom;
  }

  std::size_t ambient_dim(std::size_t n) const override { return int_pow(source_.dim, n) * target_dim_; }

  const std::vector<Vector>& basis(std::size_t n) const override {
    return bases_.get(n, [&] {
      std::vector<Vector> out;
      for (const auto& f : cochain_basis(cochain_flavor(), source_, target_dim_, beta_, n).basis)
        out.push_back(f.coeffs());
      return out;
    });
  }

  Vector delta(std::size_t n, const Vector& x) const override {
    return delta_(MultilinearMap::from_coeffs(n, source_.dim, target_dim_, x)).coeffs();
  }

  bool in_cochains(std::size_t n, const Vector& x) const override {
    const auto f = MultilinearMap::from_coeffs(n, source_.dim, target_dim_, x);
    if (cochain_flavor() == Flavor::lie && !is_alternating(f)) return false;
    return is_compatible(f, source_.alpha, beta_);
  }

  std::vector<MultilinearMap> split(std::size_t n, const Vector& x) const override {
    return {MultilinearMap::from_coeffs(n, source_.dim, target_dim_, x)};
  }

 private:
  ComplexFlavor flavor_;
  HomAlgebra source_;
  std::size_t target_dim_;
  Matrix beta_;
  Delta delta_;
  CachedBases bases_;
};

class MorphismComplex : public Complex {
 public:
  MorphismComplex(HomMorphism phi, Flavor flavor) : phi_(std::move(phi)), flavor_(flavor) {
    note_algebra(warnings_, phi_.source);
    note_algebra(warnings_, phi_.target);
    const auto r = check_morphism(phi_.source, phi_.target, phi_.matrix);
    if (!r.is_valid) warnings_.push_back("morphism fails " + r.failure);
  }

  ComplexFlavor flavor() const override {
    return flavor_ == Flavor::lie ? ComplexFlavor::morphism_lie : ComplexFlavor::morphism_hom;
  }

  std::size_t ambient_dim(std::size_t n) const override { return MorphismCochain::zero(phi_, n).flatten().size(); }

  const std::vector<Vector>& basis(std::size_t n) const override {
    return bases_.get(n, [&] { return morphism_cochain_space(phi_, n, flavor_).flat_basis(); });
  }

  Vector delta(std::size_t n, const Vector& x) const override {
    return delta_morphism(phi_, MorphismCochain::unflatten(phi_, n, x), flavor_).flatten();
  }

  bool in_cochains(std::size_t n, const Vector& x) const override {
    const auto c = MorphismCochain::unflatten(phi_, n, x);
    if (flavor_ == Flavor::lie && (!is_alternating(c.a) || !is_alternating(c.b) || !is_alternating(c.ab))) {
      return false;
    }
    return is_compatible(c.a, phi_.source.alpha, phi_.source.alpha) &&
           is_compatible(c.b, phi_.target.alpha, phi_.target.alpha) &&
           is_compatible(c.ab, phi_.source.alpha, phi_.target.alpha);
  }

  std::vector<MultilinearMap> split(std::size_t n, const Vector& x) const override {
    auto c = MorphismCochain::unflatten(phi_, n, x);
    return {c.a, c.b, c.ab};
  }

 private:
  HomMorphism phi_;
  Flavor flavor_;
  CachedBases bases_;
};

// Linearly independent subset, chosen by RREF pivots.
std::vector<Vector> independent_subset(const std::vector<Vector>& vs, std::size_t len) {
  if (vs.empty()) return {};
  const auto red = rref(Matrix::from_columns(vs, len));
  std::vector<Vector> out;
  for (auto c : red.pivot_columns) out.push_back(vs[c]);
  return out;
}

}  // namespace

std::unique_ptr<Complex> hom_self_complex(const HomAlgebra& a) {
  if (a.kind != Kind::associative) throw DimensionError("hom_self complex needs an associative algebra");
  return std::make_unique<AlgebraComplex>(ComplexFlavor::hom_self, a, a.dim, a.alpha,
                                          [a](const MultilinearMap& f) { return delta_hom_self(a, f); });
}

std::unique_ptr<Complex> hom_bimodule_complex(const HomAlgebra& a, const Bimodule& m) {
  if (a.kind != Kind::associative) throw DimensionError("hom_bimodule complex needs an associative algebra");
  auto c = std::make_unique<AlgebraComplex>(ComplexFlavor::hom_bimodule, a, m.carrier_dim(), m.beta,
                                            [a, m](const MultilinearMap& f) { return delta_hom_bimodule(a, m, f); });
  const auto r = check_bimodule(a, m);
  if (!r.is_valid) c->add_warning("bimodule fails " + r.failure);
  return c;
}

std::unique_ptr<Complex> lie_self_complex(const HomAlgebra& l) {
  if (l.kind != Kind::lie) throw DimensionError("lie_self complex needs a Lie algebra");
  return std::make_unique<AlgebraComplex>(ComplexFlavor::lie_self, l, l.dim, l.alpha,
                                          [l](const MultilinearMap& f) { return delta_lie_self(l, f); });
}

std::unique_ptr<Complex> lie_module_complex(const HomAlgebra& l, const LieModule& pi) {
  if (l.kind != Kind::lie) throw DimensionError("lie_module complex needs a Lie algebra");
  auto c = std::make_unique<AlgebraComplex>(ComplexFlavor::lie_module, l, pi.carrier_dim(), pi.beta,
                                            [l, pi](const MultilinearMap& f) { return delta_lie_module(l, pi, f); });
  const auto r = check_lie_module(l, pi);
  if (!r.is_valid) c->add_warning("module fails " + r.failure);
  return c;
}

std::unique_ptr<Complex> morphism_complex(const HomMorphism& phi, Flavor flavor) {
  const Kind k = flavor == Flavor::lie ? Kind::lie : Kind::associative;
  if (phi.source.kind != k || phi.target.kind != k) throw DimensionError("morphism complex: algebra kind mismatch");
  return std::make_unique<MorphismComplex>(phi, flavor);
}

std::unique_ptr<Complex> values_in_complex(const HomMorphism& phi, Flavor flavor) {
  if (flavor == Flavor::lie) return lie_module_complex(phi.source, lie_adjoint_module(phi, false));
  return hom_bimodule_complex(phi.source, adjoint_bimodule(phi, false));
}

const DegreeRecord& ComplexSummary::at(std::size_t n) const {
  for (const auto& d : degrees)
    if (d.n == n) return d;
  throw DimensionError("degree " + std::to_string(n) + " was not computed");
}

ComplexSummary compute_cohomology(const Complex& complex, std::size_t lo, std::size_t hi) {
  if (lo == 0 || hi < lo) throw DimensionError("degree range must satisfy 1 <= lo <= hi");
  ComplexSummary out;
  out.flavor = complex.flavor();
  out.warnings = complex.warnings();
  for (std::size_t n = lo; n <= hi; ++n) {
    DegreeRecord rec;
    rec.n = n;
    const auto& cb = complex.basis(n);
    const std::size_t amb = complex.ambient_dim(n);
    const SpanCoordinates cs(cb, amb);
    rec.dim_C = cb.size();

    std::vector<Vector> images;
    for (const auto& v : cb) {
      images.push_back(complex.delta(n, v));
      if (!complex.in_cochains(n + 1, images.back())) rec.images_in_codomain = false;
    }
    const std::vector<Vector> z =
        images.empty() ? std::vector<Vector>{} : nullspace_basis(Matrix::from_columns(images, complex.ambient_dim(n + 1)));
    rec.cocycle_coords = z;
    rec.dim_Z = z.size();
    if (!rec.images_in_codomain) {
      out.warnings.push_back("degree " + std::to_string(n) + ": differential leaves the cochain space");
    }

    std::vector<Vector> b;
    if (n >= 2) {
      const auto& prev = complex.basis(n - 1);
      std::vector<Vector> w;
      for (const auto& v : prev) w.push_back(complex.delta(n - 1, v));
      bool inside = true;
      std::vector<Vector> wc;
      for (const auto& x : w) {
        auto c = cs.coordinates(x);
        if (!c) {
          inside = false;
          break;
        }
        wc.push_back(std::move(*c));
      }
      if (inside && !images.empty()) {
        const Matrix d = Matrix::from_columns(images, complex.ambient_dim(n + 1));
        for (const auto& c : wc) {
          if (!is_zero(d * c)) {
            rec.square_zero = false;
            break;
          }
        }
      }
      if (inside && rec.square_zero) {
        b = independent_subset(wc, rec.dim_C);
      } else {
        if (!inside) rec.images_in_codomain = false;
        rec.square_zero = rec.square_zero && inside;
        out.warnings.push_back("degree " + std::to_string(n) +
                               ": coboundaries are not all cocycles; using their intersection with Z");
        // B := Z intersected with span(w), expressed in C coordinates.
        std::vector<Vector> cols;
        for (const auto& zc : z) cols.push_back(cs.combine(zc));
        const std::size_t nz = cols.size();
        for (const auto& x : w) cols.push_back(x);
        std::vector<Vector> inter;
        if (nz > 0) {
          for (const auto& nv : nullspace_basis(Matrix::from_columns(cols, amb))) {
            Vector c = zero_vector(rec.dim_C);
            for (std::size_t j = 0; j < nz; ++j) axpy(c, nv[j], z[j]);
            if (!is_zero(c)) inter.push_back(std::move(c));
          }
        }
        b = independent_subset(inter, rec.dim_C);
      }
    }
    rec.coboundary_coords = b;
    rec.dim_B = b.size();
    rec.dim_H = rec.dim_Z - rec.dim_B;

    std::vector<Vector> stacked = b;
    stacked.insert(stacked.end(), z.begin(), z.end());
    if (!stacked.empty()) {
      const auto red = rref(Matrix::from_columns(stacked, rec.dim_C));
      for (auto c : red.pivot_columns) {
        if (c >= b.size()) rec.representative_coords.push_back(stacked[c]);
      }
    }
    for (const auto& zc : z) rec.cocycle_basis.push_back(complex.split(n, cs.combine(zc)));
    for (const auto& rc : rec.representative_coords) rec.representatives.push_back(complex.split(n, cs.combine(rc)));
    out.degrees.push_back(std::move(rec));
  }
  return out;
}

MorphismCohomologyReport morphism_cohomology(const HomMorphism& phi, std::size_t n, Flavor flavor) {
  MorphismCohomologyReport r;
  r.n = n;
  r.coupled = compute_cohomology(*morphism_complex(phi, flavor), n, n);
  auto src = flavor == Flavor::lie ? lie_self_complex(phi.source) : hom_self_complex(phi.source);
  auto tgt = flavor == Flavor::lie ? lie_self_complex(phi.target) : hom_self_complex(phi.target);
  r.h_source = compute_cohomology(*src, n, n).at(n).dim_H;
  r.h_target = compute_cohomology(*tgt, n, n).at(n).dim_H;
  auto vals = values_in_complex(phi, flavor);
  if (n == 1) {
    r.values = compute_cohomology(*vals, 1, 1);
    r.h_values_previous = phi.target.dim;
  } else {
    r.values = compute_cohomology(*vals, n - 1, n);
    r.h_values_previous = r.values.at(n - 1).dim_H;
  }
  r.product_formula = r.h_source + r.h_target + r.h_values_previous;
  r.product_formula_matches = r.product_formula == r.coupled.at(n).dim_H;
  return r;
}

}  // namespace homcoh
