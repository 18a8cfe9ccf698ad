#include "hlbench/properties.h"

#include <algorithm>

#include "hlbench/coloring.h"
#include "hlbench/error.h"
#include "hlbench/level_tree.h"
#include "hlbench/splitmix.h"

namespace hlbench {
namespace {

BinaryString extend(const BinaryString& s, std::uint64_t tail, int level) {
  const int extra = level - s.length();
  return BinaryString((s.value() << extra) | tail, level);
}

void check_tree(const PairingColoring& pc, std::size_t i, const std::pair<BinaryString, BinaryString>& pair,
                std::vector<BinaryString> leaves, PairingReport& report) {
  const int depth = pc.coloring.depth();
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  const LevelTree p = LevelTree::closure_of(depth, leaves);
  const LevelSet hit = h_set(pc.coloring, p).intersect(pc.system.level_sets[i]);
  if (!hit.empty()) report.violations.push_back({i, pair.first, pair.second, std::move(leaves), hit.members()});
}

}  // namespace

PairingReport pairing_check(const PairingColoring& pc, std::uint64_t random_trees, int extra_branches,
                            std::uint64_t seed) {
  if (extra_branches < 0) throw Error(Errc::kArgument, "extra_branches must be non-negative");
  const int depth = pc.coloring.depth();
  const int top = depth - 1;
  PairingReport report;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < pc.system.size(); ++i) {
    const Matching& x = pc.system.matchings[i];
    const int free_bits = top - x.n;
    if (free_bits > 20) throw Error(Errc::kRange, "pairing check needs D - 1 - n <= 20");
    const std::uint64_t ext = std::uint64_t{1} << free_bits;
    for (const auto& pair : x.pairs) {
      for (std::uint64_t u = 0; u < ext; ++u) {
        for (std::uint64_t v = 0; v < ext; ++v) {
          check_tree(pc, i, pair, {extend(pair.first, u, top), extend(pair.second, v, top)}, report);
          ++report.two_branch_trees;
        }
      }
      for (std::uint64_t r = 0; r < random_trees; ++r) {
        std::vector<BinaryString> leaves{extend(pair.first, rng.below(ext), top),
                                         extend(pair.second, rng.below(ext), top)};
        const auto extra = rng.below(static_cast<std::uint64_t>(extra_branches) + 1);
        for (std::uint64_t e = 0; e < extra; ++e) {
          leaves.emplace_back(rng.below(std::uint64_t{1} << top), top);
        }
        check_tree(pc, i, pair, std::move(leaves), report);
        ++report.random_trees;
      }
    }
  }
  return report;
}

LevelsReport levels_check(const SplittingAssignment& s, const Coloring& c) {
  LevelsReport report;
  for (std::size_t i = 0; i < s.domain.size(); ++i) {
    const BinaryString& t = s.domain[i];
    for (int n : s.sets[i].members()) {
      if (n >= c.depth()) throw Error(Errc::kShape, "splitting level outside the coloring");
      const int shift = n - t.length();
      const std::uint64_t lo = t.value() << shift;
      const std::uint64_t hi = (t.value() + 1) << shift;
      const auto zeros = c.count(n, lo, hi, 0);
      if (zeros == 0 || zeros == hi - lo) report.failures.push_back({t, n});
      ++report.cases;
    }
  }
  return report;
}

}  // namespace hlbench
