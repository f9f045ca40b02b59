#pragma once

#include <cstddef>
#include <vector>

namespace homcoh {

struct SignedPermutation {
  std::vector<std::size_t> image;
  int sign = 1;
};

// All of S_k in lexicographic order.
std::vector<SignedPermutation> permutations(std::size_t k);

long factorial(std::size_t k);

}  // namespace homcoh
