#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "homcoh/exact.hpp"

namespace homcoh {

// Coefficient tensor T[i1..ik][out], tuple index row-major over (i1..ik), target index innermost.
class MultilinearMap {
 public:
  MultilinearMap() = default;
  MultilinearMap(std::size_t arity, std::size_t source_dim, std::size_t target_dim);

  std::size_t arity() const { return arity_; }
  std::size_t source_dim() const { return source_dim_; }
  std::size_t target_dim() const { return target_dim_; }
  std::size_t tuple_count() const { return tuples_; }

  const Vector& coeffs() const { return coeffs_; }
  Vector& coeffs() { return coeffs_; }

  Rational& at(std::size_t tuple, std::size_t out) { return coeffs_[tuple * target_dim_ + out]; }
  const Rational& at(std::size_t tuple, std::size_t out) const { return coeffs_[tuple * target_dim_ + out]; }

  Vector value(std::size_t tuple) const;
  Vector value(std::span<const std::size_t> args) const;
  void add_to(std::size_t tuple, const Vector& v, const Rational& scale = 1);

  // Multilinear extension to arbitrary argument vectors.
  Vector evaluate(const std::vector<Vector>& args) const;

  bool is_zero() const;

  static MultilinearMap from_coeffs(std::size_t arity, std::size_t source_dim, std::size_t target_dim, Vector coeffs);

  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b);
  friend MultilinearMap operator+(const MultilinearMap& a, const MultilinearMap& b);
  friend MultilinearMap operator-(const MultilinearMap& a, const MultilinearMap& b);
  friend MultilinearMap operator*(const Rational& s, const MultilinearMap& a);
  MultilinearMap& operator+=(const MultilinearMap& o);
  MultilinearMap& operator-=(const MultilinearMap& o);

 private:
  std::size_t arity_ = 0;
  std::size_t source_dim_ = 0;
  std::size_t target_dim_ = 0;
  std::size_t tuples_ = 1;
  Vector coeffs_;
};

std::size_t int_pow(std::size_t base, std::size_t e);
std::size_t tuple_index(std::span<const std::size_t> args, std::size_t source_dim);
std::vector<std::size_t> tuple_args(std::size_t index, std::size_t arity, std::size_t source_dim);

// Arity-1 map from a target_dim x source_dim matrix, and back.
MultilinearMap linear_map(const Matrix& m);
Matrix to_matrix(const MultilinearMap& f);
// Arity-0 map holding a single target vector.
MultilinearMap constant_map(const Vector& v, std::size_t source_dim = 0);

// L o f
MultilinearMap compose_out(const Matrix& l, const MultilinearMap& f);
// f o (m_1 (x) ... (x) m_k); all m_i share the new source dimension.
MultilinearMap precompose(const MultilinearMap& f, const std::vector<Matrix>& maps);
MultilinearMap precompose(const MultilinearMap& f, const Matrix& m);

bool is_alternating(const MultilinearMap& f);

// beta o f == f o alpha^{(x)k}
bool is_compatible(const MultilinearMap& f, const Matrix& alpha, const Matrix& beta);

}  // namespace homcoh
