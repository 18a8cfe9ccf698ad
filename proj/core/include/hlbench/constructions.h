#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlbench/binary_string.h"
#include "hlbench/coloring.h"
#include "hlbench/embedding.h"
#include "hlbench/level_tree.h"

namespace hlbench {

// ---------------------------------------------------------------------------
// Density-zero construction.
//
// The host tree has n branches throughout the band of levels
// B_n = [2^n + 1, 2^{n+1}]. On band level 2^n + 1 + m the coloring gives
// branch j the j-th bit of m, so every assignment of colors to the n branches
// occurs on exactly one band level. A subtree keeping k of the n branches is
// then monochromatic on exactly 2^{n-k+1} band levels.
// ---------------------------------------------------------------------------

struct ZDensityBand {
  int n = 0;
  int first_level = 0;  // 2^n + 1
  int last_level = 0;   // 2^{n+1}
  // Host nodes on level 2^{n+1}, lexicographic order.
  std::vector<BinaryString> branches;
  // assignments[m]: bit j is the color of branches[j] restricted to level
  // first_level + m. Read back from the coloring, not from the formula.
  std::vector<std::uint64_t> assignments;

  // Whether the level -> assignment table is a bijection onto {0,1}^n.
  bool is_bijection() const;
};

struct ZDensityInstance {
  int n_max = 0;
  Coloring coloring;
  LevelTree host;
  std::vector<ZDensityBand> bands;  // bands[i].n == i + 1

  int depth() const { return coloring.depth(); }
  const ZDensityBand& band(int n) const { return bands.at(static_cast<std::size_t>(n - 1)); }
};

// Depth is 2^{n_max+1} + 1, so n_max <= 4. Errc::kRange otherwise.
ZDensityInstance zdensity_coloring(int n_max);

// ---------------------------------------------------------------------------
// Pairing construction.
// ---------------------------------------------------------------------------

// A perfect matching of {0,1}^n; each pair is stored lexicographically.
struct Matching {
  int n = 0;
  std::vector<std::pair<BinaryString, BinaryString>> pairs;

  friend bool operator==(const Matching&, const Matching&) = default;
};

// Perfect matchings of {0,1}^n in canonical order (the least unmatched string
// is paired with each remaining partner in lexicographic order), at most
// `cap` of them. Requires 1 <= n <= 5.
std::vector<Matching> enumerate_matchings(int n, std::size_t cap);

struct PairingSystem {
  int depth = 0;
  std::vector<int> base_levels;
  std::vector<Matching> matchings;   // x_0, ..., x_{T-1}
  std::vector<LevelSet> level_sets;  // A_{x_i}

  std::size_t size() const { return matchings.size(); }
};

// Empty when the matchings partition their levels into pairs, the level sets
// are pairwise disjoint and min A_{x_i} >= n(i).
std::optional<std::string> check_pairing_system(const PairingSystem& system);

struct PairingColoring {
  Coloring coloring;
  PairingSystem system;
};

// A_{x_i} = {k < D : k = i mod T, k >= n(i)}. On level k in A_{x_i} a node
// t gets color 0 if t|n(i) is the lexicographically smaller member of its
// pair, 1 otherwise; every other node gets 0.
PairingColoring pairing_coloring(std::vector<int> base_levels, std::size_t per_level_cap, int depth);

// ---------------------------------------------------------------------------
// Splitting-levels construction.
// ---------------------------------------------------------------------------

struct SplittingAssignment {
  std::vector<BinaryString> domain;  // t_0, ..., t_{T-1}
  std::vector<LevelSet> sets;        // S(t_i)
};

// Empty when the sets are pairwise disjoint and every k in S(t_i) has
// k >= |t_i| + 1.
std::optional<std::string> check_splitting(const SplittingAssignment& s);

// Domain: all strings of length <= max_len in length-lexicographic order.
// S(t_i) = {k < D : k = i mod T, k >= |t_i| + 1}.
SplittingAssignment residue_splitting(int max_len, int depth);

// c(s) = j when |s| is in S(t_i) and t_i^j is a prefix of s; 0 otherwise.
// Errc::kInvariant if the assignment is not valid.
Coloring levels_coloring(const SplittingAssignment& s, int depth);

}  // namespace hlbench
