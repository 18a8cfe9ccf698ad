#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlbench/coloring.h"
#include "hlbench/constructions.h"
#include "hlbench/embedding.h"
#include "hlbench/level_tree.h"
#include "hlbench/rational.h"

namespace hlbench {

// kUniform: one color on every chosen level. kByLevels: each chosen level is
// monochromatic on its own.
enum class HLMode { kUniform, kByLevels };

const char* mode_name(HLMode mode);
HLMode parse_mode(const std::string& name);

struct HLCertificate {
  TreeEmbedding embedding;
  LevelSet levels;
  HLMode mode = HLMode::kUniform;
  // Uniform: a single color. By levels: one color per member of `levels`.
  std::vector<int> color_witness;

  friend bool operator==(const HLCertificate&, const HLCertificate&) = default;
};

struct SearchBudget {
  int height = 1;
  // Levels the caller hopes for; reported as target_met, never used to prune.
  int min_levels = 1;
  // search_best: cap on explored choices. brute_force_max: cap on the number
  // of embeddings it is willing to enumerate.
  std::uint64_t node_budget = 50'000'000;
  int workers = 1;
};

struct SearchResult {
  int m = 0;
  HLCertificate certificate;
  bool complete = true;
  bool target_met = false;
  std::uint64_t explored = 0;
};

// True iff every level of the certificate is monochromatic on the closure of
// the embedding, with the colors the certificate claims. Errc::kEmbedding for
// an invalid embedding, Errc::kShape if it does not reach level D-1.
bool verify_certificate(const Coloring& c, const HLCertificate& cert);

// Number of embeddings of the given height with top level D-1, inside `host`
// when one is given.
BigInt enumeration_bound(int depth, int height, const LevelTree* host = nullptr);

// Exhaustive oracle: evaluates every embedding (materializing its closure) and
// keeps the first one, in enumeration order, with the most admissible levels.
// Errc::kBudget if enumeration_bound exceeds budget.node_budget.
SearchResult brute_force_max(const Coloring& c, const SearchBudget& budget, HLMode mode,
                             const LevelTree* host = nullptr);

// Depth-first branch and bound over the same enumeration order, partitioned
// by the image of the root argument. Returns the same certificate as the
// oracle whenever it completes; on budget exhaustion returns the best found
// with complete == false. The result does not depend on budget.workers.
SearchResult search_best(const Coloring& c, const SearchBudget& budget, HLMode mode,
                         const LevelTree* host = nullptr);

struct BandCheck {
  int n = 0;
  std::vector<int> selection;
  std::uint64_t expected = 0;  // 2^{n-k+1}
  std::uint64_t actual = 0;    // |H_c(q) ∩ B_n|
  bool pass() const { return expected == actual; }
};

// Checks one band: `selection` holds branch indices in [0, n).
BandCheck check_band(const ZDensityInstance& inst, int n, std::vector<int> selection);

// For each (band, selection) pair: builds q from the selected branches,
// counts the monochromatic band levels and compares with 2^{n-k+1}.
// selections[i] is applied to band i + 1 and there must be one per band;
// empty or out-of-range selections raise Errc::kArgument.
std::vector<BandCheck> zdensity_band_check(const ZDensityInstance& inst,
                                           const std::vector<std::vector<int>>& selections);

// Every band and every nonempty subset of its branches.
std::vector<BandCheck> zdensity_exhaustive_check(const ZDensityInstance& inst);

}  // namespace hlbench
