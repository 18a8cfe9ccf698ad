#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlbench/binary_string.h"
#include "hlbench/level_tree.h"

namespace hlbench {

// Sorted, duplicate-free set of levels below a bound D.
class LevelSet {
 public:
  LevelSet() = default;
  // Throws Errc::kRange if a member is negative or >= bound.
  LevelSet(std::vector<int> members, int bound);

  static LevelSet all(int bound);

  int bound() const { return bound_; }
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int n) const;

  LevelSet intersect(const LevelSet& other) const;
  // Members inside [lo, hi].
  std::size_t count_between(int lo, int hi) const;

  friend bool operator==(const LevelSet&, const LevelSet&) = default;

 private:
  std::vector<int> members_;
  int bound_ = 0;
};

// Finite witness for a perfect subtree: a map from the arguments 2^{<=h} to
// nodes of 2^{<D}. Images are stored in length-lexicographic order of the
// arguments, so images()[arg.rank()] is the image of arg.
class TreeEmbedding {
 public:
  TreeEmbedding() = default;
  // No invariants are checked here; see check().
  TreeEmbedding(int height, std::vector<BinaryString> images, int top_level);

  // Builds the canonical embedding whose leaf images are `leaves` (2^h of
  // them, in argument order) and whose inner images are meets of the two
  // child images. Throws Errc::kEmbedding if the result is invalid.
  static TreeEmbedding from_leaves(int height, std::span<const BinaryString> leaves);

  int height() const { return height_; }
  int top_level() const { return top_level_; }
  const std::vector<BinaryString>& images() const { return images_; }
  const BinaryString& image(const BinaryString& arg) const;

  // Images of arguments of length < h (inner nodes), argument order.
  std::vector<BinaryString> split_nodes() const;
  // Images of arguments of length h, argument order.
  std::vector<BinaryString> leaf_images() const;

  // Empty when valid; otherwise a description of the first broken invariant.
  std::optional<std::string> check() const;

  friend bool operator==(const TreeEmbedding&, const TreeEmbedding&) = default;

 private:
  int height_ = 0;
  std::vector<BinaryString> images_;
  int top_level_ = 0;
};

// Downward closure of the top-level images as a tree of depth D.
// Errc::kEmbedding for an invalid embedding, Errc::kShape if top_level != D-1.
LevelTree embed_closure(const TreeEmbedding& e, int depth);

}  // namespace hlbench
