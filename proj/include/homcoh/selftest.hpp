#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homcoh/io.hpp"

namespace homcoh {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  // Free-form counters, e.g. how many random inputs were valid.
  std::vector<std::pair<std::string, std::size_t>> counts;

  bool passed() const { return failures.empty() && checked > 0; }
};

constexpr std::uint64_t default_seed = 20240611;

// delta o delta = 0 in degrees 1 and 2 on fixtures and random algebras.
SuiteResult suite_square_zero(std::uint64_t seed = default_seed, std::size_t random_count = 25);
// (1/2)[mu, mu] = 0 exactly when the defining identity holds.
SuiteResult suite_bracket_identity(std::uint64_t seed = default_seed, std::size_t count = 50);
// Twists of ordinary algebras by multiplicative endomorphisms are valid.
SuiteResult suite_yau_twist(std::uint64_t seed = default_seed, std::size_t count = 20);
// Face relations and delta = sum (-1)^{i+1} D_i.
SuiteResult suite_faces(std::uint64_t seed = default_seed, std::size_t count = 100);
// Infinitesimals are 2-cocycles and obstructions 3-cocycles.
SuiteResult suite_deformation_cocycles();
// Transport by formal automorphisms.
SuiteResult suite_equivalence(std::uint64_t seed = default_seed, std::size_t count = 10);

std::vector<SuiteResult> run_selftest(std::uint64_t seed = default_seed);
Json selftest_to_json(const std::vector<SuiteResult>& results);

}  // namespace homcoh
