#include "hlbench/embedding.h"

#include <algorithm>

#include "hlbench/error.h"

namespace hlbench {

LevelSet::LevelSet(std::vector<int> members, int bound) : members_(std::move(members)), bound_(bound) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= bound_)) {
    throw Error(Errc::kRange, "level set member outside [0, " + std::to_string(bound_) + ")");
  }
}

LevelSet LevelSet::all(int bound) {
  std::vector<int> m(static_cast<std::size_t>(std::max(bound, 0)));
  for (int i = 0; i < bound; ++i) m[static_cast<std::size_t>(i)] = i;
  return LevelSet(std::move(m), bound);
}

bool LevelSet::contains(int n) const { return std::binary_search(members_.begin(), members_.end(), n); }

LevelSet LevelSet::intersect(const LevelSet& other) const {
  std::vector<int> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return LevelSet(std::move(out), std::min(bound_, other.bound_));
}

std::size_t LevelSet::count_between(int lo, int hi) const {
  auto first = std::lower_bound(members_.begin(), members_.end(), lo);
  auto last = std::upper_bound(members_.begin(), members_.end(), hi);
  return first < last ? static_cast<std::size_t>(last - first) : 0;
}

TreeEmbedding::TreeEmbedding(int height, std::vector<BinaryString> images, int top_level)
    : height_(height), images_(std::move(images)), top_level_(top_level) {}

TreeEmbedding TreeEmbedding::from_leaves(int height, std::span<const BinaryString> leaves) {
  if (height < 0 || height > 20) throw Error(Errc::kEmbedding, "height out of range");
  const std::size_t leaf_count = std::size_t{1} << height;
  if (leaves.size() != leaf_count) {
    throw Error(Errc::kEmbedding, "expected " + std::to_string(leaf_count) + " leaf images");
  }
  std::vector<BinaryString> images((std::size_t{2} << height) - 1);
  const std::size_t first_leaf = leaf_count - 1;
  std::copy(leaves.begin(), leaves.end(), images.begin() + static_cast<std::ptrdiff_t>(first_leaf));
  for (std::size_t i = first_leaf; i-- > 0;) {
    images[i] = images[2 * i + 1].meet(images[2 * i + 2]);
  }
  TreeEmbedding e(height, std::move(images), leaves.front().length());
  if (auto err = e.check()) throw Error(Errc::kEmbedding, *err);
  return e;
}

const BinaryString& TreeEmbedding::image(const BinaryString& arg) const {
  if (arg.length() > height_) throw Error(Errc::kRange, "argument longer than embedding height");
  return images_.at(arg.rank());
}

std::vector<BinaryString> TreeEmbedding::split_nodes() const {
  const std::size_t inner = (std::size_t{1} << height_) - 1;
  return {images_.begin(), images_.begin() + static_cast<std::ptrdiff_t>(std::min(inner, images_.size()))};
}

std::vector<BinaryString> TreeEmbedding::leaf_images() const {
  const std::size_t inner = (std::size_t{1} << height_) - 1;
  if (images_.size() < inner) return {};
  return {images_.begin() + static_cast<std::ptrdiff_t>(inner), images_.end()};
}

std::optional<std::string> TreeEmbedding::check() const {
  if (height_ < 0 || height_ > 20) return "height out of range";
  const std::size_t expected = (std::size_t{2} << height_) - 1;
  if (images_.size() != expected) {
    return "expected " + std::to_string(expected) + " images, got " + std::to_string(images_.size());
  }
  const std::size_t inner = (std::size_t{1} << height_) - 1;
  for (std::size_t i = 0; i < inner; ++i) {
    const auto& parent = images_[i];
    const auto& left = images_[2 * i + 1];
    const auto& right = images_[2 * i + 2];
    if (!parent.is_prefix_of(left) || !parent.is_prefix_of(right)) {
      return "image of a child does not extend image '" + parent.to_token() + "'";
    }
    if (left.compatible_with(right)) {
      return "sibling images '" + left.to_token() + "' and '" + right.to_token() + "' are comparable";
    }
  }
  for (std::size_t i = inner; i < images_.size(); ++i) {
    if (images_[i].length() != top_level_) {
      return "leaf image '" + images_[i].to_token() + "' not on level " + std::to_string(top_level_);
    }
  }
  return std::nullopt;
}

LevelTree embed_closure(const TreeEmbedding& e, int depth) {
  if (auto err = e.check()) throw Error(Errc::kEmbedding, *err);
  if (e.top_level() != depth - 1) {
    throw Error(Errc::kShape, "top level " + std::to_string(e.top_level()) + " != depth - 1 = " +
                                  std::to_string(depth - 1));
  }
  auto leaves = e.leaf_images();
  return LevelTree::closure_of(depth, leaves);
}

}  // namespace hlbench
