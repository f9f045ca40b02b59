#pragma once

#include "homcoh/algebra.hpp"
#include "homcoh/multilinear.hpp"

namespace homcoh::detail {

// sum_{k=1..n} (-1)^k f(alpha x0, ..., mu(x_{k-1}, x_k), ..., alpha x_n)
MultilinearMap insertion_sum_assoc(const HomAlgebra& a, const MultilinearMap& f);
// sum_{i<j} (-1)^{i+j} f([x_i, x_j], alpha x0, ..., ^i, ^j, ..., alpha x_n)
MultilinearMap insertion_sum_lie(const HomAlgebra& l, const MultilinearMap& f);

}  // namespace homcoh::detail
