#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homcoh {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Accepts "p" or "p/q" with q > 0; output of to_string is always reduced.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
void axpy(Vector& y, const Rational& a, const Vector& x);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  const std::vector<Rational>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix power(const Matrix& m, std::size_t e);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

// One vector per free column, free coordinate 1, in increasing column order.
std::vector<Vector> nullspace_basis(const Matrix& m);

// Particular solution with free coordinates 0, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Vector> in_span(const std::vector<Vector>& vectors, const Vector& v);

std::optional<Matrix> inverse(const Matrix& m);

// Coordinates with respect to a fixed linearly independent family.
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  SpanCoordinates(std::vector<Vector> basis, std::size_t ambient_dim);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }

  std::optional<Vector> coordinates(const Vector& v) const;
  Vector combine(const Vector& coords) const;

 private:
  std::vector<Vector> basis_;
  std::size_t ambient_ = 0;
  std::vector<std::size_t> rows_;
  Matrix inv_;
};

}  // namespace homcoh
