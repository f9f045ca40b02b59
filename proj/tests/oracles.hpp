#pragma once

// Reference computations for the tests. Everything here works from raw structure
// constants with explicit loops and does not call the library's evaluators.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "homcoh/algebra.hpp"
#include "homcoh/exact.hpp"
#include "homcoh/multilinear.hpp"

namespace oracle {

using homcoh::HomAlgebra;
using homcoh::Matrix;
using homcoh::MultilinearMap;
using homcoh::Rational;
using homcoh::Vector;

// Bareiss elimination over the integers after clearing row denominators.
inline std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      mpq_class v = m(r, c) * l;
      a[r][c] = v.get_num();
    }
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline Vector mul(const HomAlgebra& a, const Vector& x, const Vector& y) {
  Vector out(a.dim, 0);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < a.dim; ++k) out[k] += x[i] * y[j] * a.c(i, j, k);
    }
  }
  return out;
}

inline Vector act(const Matrix& m, const Vector& x) {
  Vector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * x[c];
  return out;
}

inline Vector e(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

inline Vector add(Vector a, const Vector& b, const Rational& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

inline bool zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// mu(alpha x, mu(y,z)) = mu(mu(x,y), alpha z) on all basis triples.
inline bool hom_associative(const HomAlgebra& a) {
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, k);
        const Vector l = mul(a, act(a.alpha, x), mul(a, y, z));
        const Vector r = mul(a, mul(a, x, y), act(a.alpha, z));
        if (l != r) return false;
      }
  return true;
}

inline bool skew(const HomAlgebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.c(i, j, k) != -a.c(j, i, k)) return false;
  return true;
}

// Cyclic sum of [alpha x, [y,z]] on all basis triples, plus skewness.
inline bool hom_jacobi(const HomAlgebra& a) {
  if (!skew(a)) return false;
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, k);
        Vector s = mul(a, act(a.alpha, x), mul(a, y, z));
        s = add(s, mul(a, act(a.alpha, y), mul(a, z, x)));
        s = add(s, mul(a, act(a.alpha, z), mul(a, x, y)));
        if (!zero(s)) return false;
      }
  return true;
}

// f on basis vectors given by index list.
inline Vector at(const MultilinearMap& f, const std::vector<std::size_t>& idx) {
  std::size_t t = 0;
  for (auto i : idx) t = t * f.source_dim() + i;
  Vector out(f.target_dim());
  for (std::size_t k = 0; k < f.target_dim(); ++k) out[k] = f.at(t, k);
  return out;
}

// f on arbitrary vectors, by full multilinear expansion.
inline Vector eval(const MultilinearMap& f, const std::vector<Vector>& xs) {
  const std::size_t n = f.source_dim(), k = xs.size();
  Vector out(f.target_dim(), 0);
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Rational w = 1;
    for (std::size_t s = 0; s < k && w != 0; ++s) w *= xs[s][idx[s]];
    if (w != 0) out = add(out, at(f, idx), w);
    std::size_t s = k;
    while (s > 0 && ++idx[s - 1] == n) idx[--s] = 0;
    if (s == 0) break;
  }
  return out;
}

inline Matrix mpow(const Matrix& m, std::size_t e) {
  Matrix r = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < e; ++i) r = r * m;
  return r;
}

// Hom-Hochschild coboundary of an arity-n self-cochain, written out term by term:
// mu(a^{n-1} x0, f(x1..xn)) + sum_i (-1)^i f(a x0, .., mu(x_{i-1}, x_i), .., a xn)
//   + (-1)^{n+1} mu(f(x0..x_{n-1}), a^{n-1} xn).
inline MultilinearMap hom_delta(const HomAlgebra& a, const MultilinearMap& f) {
  const std::size_t n = f.arity(), d = a.dim;
  MultilinearMap out(n + 1, d, d);
  const Matrix an = mpow(a.alpha, n == 0 ? 0 : n - 1);
  std::vector<std::size_t> idx(n + 1, 0);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    std::size_t r = t;
    for (std::size_t s = n + 1; s-- > 0;) {
      idx[s] = r % d;
      r /= d;
    }
    std::vector<Vector> x;
    for (auto i : idx) x.push_back(e(d, i));
    Vector v(d, 0);
    if (n == 0) {
      // C^0 = A, delta m (x) = mu(x, m) - mu(m, x)
      const Vector m = at(f, {});
      v = add(mul(a, x[0], m), mul(a, m, x[0]), -1);
    } else {
      v = add(v, mul(a, act(an, x[0]), eval(f, std::vector<Vector>(x.begin() + 1, x.end()))));
      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Vector> args;
        for (std::size_t s = 0; s <= n; ++s) {
          if (s == i - 1) {
            args.push_back(mul(a, x[i - 1], x[i]));
          } else if (s != i) {
            args.push_back(act(a.alpha, x[s]));
          }
        }
        v = add(v, eval(f, args), (i % 2 == 1) ? -1 : 1);
      }
      v = add(v, mul(a, eval(f, std::vector<Vector>(x.begin(), x.end() - 1)), act(an, x[n])),
              (n % 2 == 0) ? -1 : 1);
    }
    for (std::size_t k = 0; k < d; ++k) out.at(t, k) = v[k];
  }
  return out;
}

// Hom-Lie coboundary with adjoint coefficients:
// sum_i (-1)^i [a^{n-1} x_i, f(.., ^i, ..)] + sum_{i<j} (-1)^{i+j} f([x_i,x_j], a x0, .., ^i, ^j, .., a xn).
inline MultilinearMap lie_delta(const HomAlgebra& a, const MultilinearMap& f) {
  const std::size_t n = f.arity(), d = a.dim;
  MultilinearMap out(n + 1, d, d);
  const Matrix an = mpow(a.alpha, n == 0 ? 0 : n - 1);
  std::vector<std::size_t> idx(n + 1, 0);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    std::size_t r = t;
    for (std::size_t s = n + 1; s-- > 0;) {
      idx[s] = r % d;
      r /= d;
    }
    std::vector<Vector> x;
    for (auto i : idx) x.push_back(e(d, i));
    Vector v(d, 0);
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<Vector> rest;
      for (std::size_t s = 0; s <= n; ++s)
        if (s != i) rest.push_back(x[s]);
      v = add(v, mul(a, act(an, x[i]), eval(f, rest)), (i % 2 == 0) ? 1 : -1);
    }
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        std::vector<Vector> args{mul(a, x[i], x[j])};
        for (std::size_t s = 0; s <= n; ++s)
          if (s != i && s != j) args.push_back(act(a.alpha, x[s]));
        v = add(v, eval(f, args), ((i + j) % 2 == 0) ? 1 : -1);
      }
    for (std::size_t k = 0; k < d; ++k) out.at(t, k) = v[k];
  }
  return out;
}

}  // namespace oracle
