#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hlbench/binary_string.h"

namespace hlbench {

// Trees and colorings that are stored node by node refuse to grow past this.
inline constexpr std::size_t kMaxMaterializedNodes = std::size_t{1} << 22;

// A finite subtree of 2^{<D} stored level by level; levels[n] holds strings
// of length n in lexicographic order. The value type does not enforce the
// tree invariants (root, prefix-closed, pruned): validate() reports them, and
// operations that need a valid tree check it.
class LevelTree {
 public:
  LevelTree() = default;
  // Sorts and deduplicates each level. Throws Errc::kRange for a depth
  // outside [1, kMaxDepth] and Errc::kShape when levels.size() != depth or a
  // level holds a string of the wrong length.
  LevelTree(int depth, std::vector<std::vector<BinaryString>> levels);

  // Downward closure of nodes that all lie on level depth - 1.
  static LevelTree closure_of(int depth, std::span<const BinaryString> tops);

  int depth() const { return depth_; }
  const std::vector<BinaryString>& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
  std::size_t width(int n) const { return level(n).size(); }
  std::size_t node_count() const;
  bool contains(const BinaryString& s) const;

  // All nodes in length-lexicographic order.
  std::vector<BinaryString> nodes() const;

  friend bool operator==(const LevelTree&, const LevelTree&) = default;

 private:
  int depth_ = 0;
  std::vector<std::vector<BinaryString>> levels_;
};

struct Violation {
  std::string rule;  // "root", "prefix-closed" or "pruned"
  BinaryString node;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

LevelTree make_full(int depth);

ValidationReport validate(const LevelTree& t);

// Throws Errc::kValidation with the first violation if t is not valid.
void require_valid(const LevelTree& t);

// p_s: all nodes of t compatible with s. Errc::kNotFound if s is not in t.
LevelTree subtree_at(const LevelTree& t, const BinaryString& s);

// The top level; every node of a valid tree lies below one of these.
std::vector<BinaryString> branches(const LevelTree& t);

// True when every level of q is contained in the same level of p.
bool is_subtree(const LevelTree& q, const LevelTree& p);

}  // namespace hlbench
