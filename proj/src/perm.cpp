#include "homcoh/perm.hpp"

#include <algorithm>
#include <numeric>

namespace homcoh {

std::vector<SignedPermutation> permutations(std::size_t k) {
  std::vector<SignedPermutation> out;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (p[i] > p[j]) ++inversions;
    out.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

long factorial(std::size_t k) {
  long f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long>(i);
  return f;
}

}  // namespace homcoh
