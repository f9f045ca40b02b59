#include "homcoh/multilinear.hpp"

#include <utility>

#include "homcoh/errors.hpp"

namespace homcoh {

std::size_t int_pow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

std::size_t tuple_index(std::span<const std::size_t> args, std::size_t source_dim) {
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= source_dim) throw DimensionError("basis index out of range");
    idx = idx * source_dim + a;
  }
  return idx;
}

std::vector<std::size_t> tuple_args(std::size_t index, std::size_t arity, std::size_t source_dim) {
  std::vector<std::size_t> args(arity);
  for (std::size_t p = arity; p-- > 0;) {
    args[p] = index % source_dim;
    index /= source_dim;
  }
  return args;
}

MultilinearMap::MultilinearMap(std::size_t arity, std::size_t source_dim, std::size_t target_dim)
    : arity_(arity),
      source_dim_(source_dim),
      target_dim_(target_dim),
      tuples_(int_pow(source_dim, arity)),
      coeffs_(tuples_ * target_dim, Rational(0)) {}

MultilinearMap MultilinearMap::from_coeffs(std::size_t arity, std::size_t source_dim, std::size_t target_dim,
                                           Vector coeffs) {
  MultilinearMap f(arity, source_dim, target_dim);
  if (coeffs.size() != f.coeffs_.size()) throw DimensionError("coefficient tensor has wrong length");
  f.coeffs_ = std::move(coeffs);
  return f;
}

Vector MultilinearMap::value(std::size_t tuple) const {
  return Vector(coeffs_.begin() + static_cast<std::ptrdiff_t>(tuple * target_dim_),
                coeffs_.begin() + static_cast<std::ptrdiff_t>((tuple + 1) * target_dim_));
}

Vector MultilinearMap::value(std::span<const std::size_t> args) const {
  if (args.size() != arity_) throw DimensionError("wrong number of arguments");
  return value(tuple_index(args, source_dim_));
}

void MultilinearMap::add_to(std::size_t tuple, const Vector& v, const Rational& scale) {
  if (v.size() != target_dim_) throw DimensionError("value length mismatch");
  for (std::size_t o = 0; o < target_dim_; ++o) {
    if (sgn(v[o]) != 0) coeffs_[tuple * target_dim_ + o] += scale * v[o];
  }
}

namespace {

struct Expander {
  const MultilinearMap& f;
  const std::vector<Vector>& args;
  Vector& out;

  void run(std::size_t pos, std::size_t tuple, const Rational& weight) {
    if (pos == args.size()) {
      const std::size_t base = tuple * f.target_dim();
      for (std::size_t o = 0; o < f.target_dim(); ++o) {
        const Rational& c = f.coeffs()[base + o];
        if (sgn(c) != 0) out[o] += weight * c;
      }
      return;
    }
    const Vector& a = args[pos];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn(a[i]) == 0) continue;
      run(pos + 1, tuple * f.source_dim() + i, weight * a[i]);
    }
  }
};

}  // namespace

Vector MultilinearMap::evaluate(const std::vector<Vector>& args) const {
  if (args.size() != arity_) throw DimensionError("wrong number of arguments");
  for (const auto& a : args) {
    if (a.size() != source_dim_) throw DimensionError("argument length mismatch");
  }
  Vector out = zero_vector(target_dim_);
  Expander{*this, args, out}.run(0, 0, Rational(1));
  return out;
}

bool MultilinearMap::is_zero() const { return homcoh::is_zero(coeffs_); }

namespace {

void check_shape(const MultilinearMap& a, const MultilinearMap& b) {
  if (a.arity() != b.arity() || a.source_dim() != b.source_dim() || a.target_dim() != b.target_dim()) {
    throw DimensionError("multilinear map shape mismatch");
  }
}

}  // namespace

bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
  return a.arity_ == b.arity_ && a.source_dim_ == b.source_dim_ && a.target_dim_ == b.target_dim_ &&
         a.coeffs_ == b.coeffs_;
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& o) {
  check_shape(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

MultilinearMap& MultilinearMap::operator-=(const MultilinearMap& o) {
  check_shape(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

MultilinearMap operator+(const MultilinearMap& a, const MultilinearMap& b) {
  MultilinearMap r(a);
  r += b;
  return r;
}

MultilinearMap operator-(const MultilinearMap& a, const MultilinearMap& b) {
  MultilinearMap r(a);
  r -= b;
  return r;
}

MultilinearMap operator*(const Rational& s, const MultilinearMap& a) {
  MultilinearMap r(a);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

MultilinearMap linear_map(const Matrix& m) {
  MultilinearMap f(1, m.cols(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) f.at(j, i) = m(i, j);
  return f;
}

Matrix to_matrix(const MultilinearMap& f) {
  if (f.arity() != 1) throw DimensionError("to_matrix needs an arity-1 map");
  Matrix m(f.target_dim(), f.source_dim());
  for (std::size_t j = 0; j < f.source_dim(); ++j)
    for (std::size_t i = 0; i < f.target_dim(); ++i) m(i, j) = f.at(j, i);
  return m;
}

MultilinearMap constant_map(const Vector& v, std::size_t source_dim) {
  return MultilinearMap::from_coeffs(0, source_dim, v.size(), v);
}

MultilinearMap compose_out(const Matrix& l, const MultilinearMap& f) {
  if (l.cols() != f.target_dim()) throw DimensionError("compose_out: shape mismatch");
  MultilinearMap g(f.arity(), f.source_dim(), l.rows());
  for (std::size_t t = 0; t < f.tuple_count(); ++t) g.add_to(t, l * f.value(t));
  return g;
}

MultilinearMap precompose(const MultilinearMap& f, const std::vector<Matrix>& maps) {
  if (maps.size() != f.arity()) throw DimensionError("precompose: need one map per argument");
  const std::size_t new_src = maps.empty() ? f.source_dim() : maps.front().cols();
  for (const auto& m : maps) {
    if (m.rows() != f.source_dim() || m.cols() != new_src) throw DimensionError("precompose: shape mismatch");
  }
  MultilinearMap g(f.arity(), new_src, f.target_dim());
  std::vector<Vector> args(f.arity());
  for (std::size_t t = 0; t < g.tuple_count(); ++t) {
    const auto idx = tuple_args(t, f.arity(), new_src);
    for (std::size_t p = 0; p < f.arity(); ++p) args[p] = maps[p].column(idx[p]);
    g.add_to(t, f.evaluate(args));
  }
  return g;
}

MultilinearMap precompose(const MultilinearMap& f, const Matrix& m) {
  return precompose(f, std::vector<Matrix>(f.arity(), m));
}

bool is_alternating(const MultilinearMap& f) {
  if (f.arity() < 2) return true;
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    auto args = tuple_args(t, f.arity(), f.source_dim());
    for (std::size_t p = 0; p + 1 < f.arity(); ++p) {
      if (args[p] > args[p + 1]) continue;
      auto swapped = args;
      std::swap(swapped[p], swapped[p + 1]);
      const std::size_t s = tuple_index(swapped, f.source_dim());
      for (std::size_t o = 0; o < f.target_dim(); ++o) {
        if (sgn(f.at(t, o) + f.at(s, o)) != 0) return false;
      }
    }
  }
  return true;
}

bool is_compatible(const MultilinearMap& f, const Matrix& alpha, const Matrix& beta) {
  if (f.arity() == 0) return true;
  return compose_out(beta, f) == precompose(f, alpha);
}

}  // namespace homcoh
