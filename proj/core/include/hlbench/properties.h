#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlbench/constructions.h"

// Finite checks of the two coloring constructions.
namespace hlbench {

struct PairingViolation {
  std::size_t matching = 0;
  BinaryString low, high;  // the pair the tree spans
  std::vector<BinaryString> leaves;
  std::vector<int> levels;  // A_x ∩ H_c(p)
};

struct PairingReport {
  std::uint64_t two_branch_trees = 0;
  std::uint64_t random_trees = 0;
  std::vector<PairingViolation> violations;
  bool pass() const { return violations.empty(); }
};

// For every matching x_i and every pair {a, b} of it: every tree with exactly
// two branches, one through a and one through b, plus `random_trees` seeded
// pruned trees through both a and b with up to `extra_branches` further
// branches. Each must have A_{x_i} ∩ H_c(p) empty.
PairingReport pairing_check(const PairingColoring& pc, std::uint64_t random_trees, int extra_branches,
                            std::uint64_t seed);

struct LevelsFailure {
  BinaryString t;
  int level = 0;
};

struct LevelsReport {
  std::uint64_t cases = 0;
  std::vector<LevelsFailure> failures;
  bool pass() const { return failures.empty(); }
};

// For every t in the domain and every n in S(t): the extensions of t on
// level n carry both colors.
LevelsReport levels_check(const SplittingAssignment& s, const Coloring& c);

}  // namespace hlbench
