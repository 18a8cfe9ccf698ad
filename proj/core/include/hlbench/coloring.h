#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hlbench/binary_string.h"
#include "hlbench/embedding.h"
#include "hlbench/level_tree.h"

namespace hlbench {

// Levels up to this index are stored as bit tables; deeper levels are stored
// as run-length maps so that colorings of depth up to kMaxDepth stay cheap
// when they are constant on long stretches.
inline constexpr int kDenseLevelLimit = 20;

// A total two-coloring of 2^{<D}.
class Coloring {
 public:
  Coloring() = default;
  // Constant coloring with value `fill`. Errc::kRange if depth is outside
  // [1, kMaxDepth].
  explicit Coloring(int depth, int fill = 0);

  int depth() const { return depth_; }

  int color(const BinaryString& s) const;
  void set(const BinaryString& s, int color);

  // Colors every node of `level` whose value lies in [lo, hi).
  void set_range(int level, std::uint64_t lo, std::uint64_t hi, int color);
  // Colors every extension of s on `level` (level >= |s|).
  void set_extensions(const BinaryString& s, int level, int color);

  // Number of nodes on `level` with value in [lo, hi) and the given color.
  std::uint64_t count(int level, std::uint64_t lo, std::uint64_t hi, int color) const;
  // First `limit` values in [lo, hi) on `level` with the given color.
  std::vector<std::uint64_t> find(int level, std::uint64_t lo, std::uint64_t hi, int color,
                                  std::size_t limit) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  struct Level {
    std::vector<std::uint64_t> words;        // dense levels
    std::map<std::uint64_t, std::uint8_t> runs;  // sparse levels: run start -> color
    friend bool operator==(const Level&, const Level&) = default;
  };

  static bool is_dense(int level) { return level <= kDenseLevelLimit; }
  Level& level_at(int level);
  const Level& level_at(int level) const;

  int depth_ = 0;
  std::vector<Level> levels_;
};

// H_c(p): levels on which c is constant on the slice of p. Levels with a
// single node count as constant. Errc::kShape on depth mismatch,
// Errc::kValidation if p is not a valid tree.
LevelSet h_set(const Coloring& c, const LevelTree& p);

// Colors present on one level of p: bit 0 set if color 0 occurs, bit 1 if 1.
unsigned slice_colors(const Coloring& c, const LevelTree& p, int level);

// I(s): levels n with |s|+1 < n < D such that at most one extension of s on
// level n has color 0.
LevelSet i_set(const Coloring& c, const BinaryString& s);

// Seeded coloring: nodes are visited in length-lexicographic order and each
// takes the low bit of the next splitmix64 output. Depth is limited to
// kDenseLevelLimit + 1.
Coloring random_coloring(int depth, std::uint64_t seed);

}  // namespace hlbench
