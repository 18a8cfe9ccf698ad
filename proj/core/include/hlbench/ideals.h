#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hlbench/binary_string.h"
#include "hlbench/rational.h"

namespace hlbench {

// A subset of the window [0, N).
class NatSet {
 public:
  NatSet() = default;
  // Errc::kRange if a member is >= bound.
  NatSet(std::vector<std::uint64_t> members, std::uint64_t bound);

  static NatSet interval(std::uint64_t lo, std::uint64_t hi, std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }
  const std::vector<std::uint64_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::uint64_t n) const;
  // |A ∩ [lo, hi)|
  std::size_t count_in(std::uint64_t lo, std::uint64_t hi) const;

  NatSet complement() const;
  NatSet unite(const NatSet& other) const;
  bool is_subset_of(const NatSet& other) const;

  friend bool operator==(const NatSet&, const NatSet&) = default;

 private:
  std::vector<std::uint64_t> members_;
  std::uint64_t bound_ = 0;
};

// A subset of the grid [0, N)^2, cells stored as (column, row).
class GridSet {
 public:
  using Cell = std::pair<std::uint64_t, std::uint64_t>;

  GridSet() = default;
  GridSet(std::vector<Cell> cells, std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  friend bool operator==(const GridSet&, const GridSet&) = default;

 private:
  std::vector<Cell> cells_;
  std::uint64_t bound_ = 0;
};

// A subset of 2^{<D}, length-lexicographic order.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::vector<BinaryString> nodes, int depth);

  int depth() const { return depth_; }
  const std::vector<BinaryString>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(const BinaryString& s) const;
  bool is_subset_of(const NodeSet& other) const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<BinaryString> nodes_;
  int depth_ = 0;
};

using DensityProfile = std::vector<Rational>;

enum class DensityMode { kDyadic, kNatural };

// Dyadic: d_n = |A ∩ [2^n, 2^{n+1})| / 2^n for every window inside [0, N).
// Natural: |A ∩ [0, n)| / n for n = 1..N.
DensityProfile density_profile(const NatSet& a, DensityMode mode);

// Sum of 1/(n+1) over A.
Rational summable_weight(const NatSet& a);

enum class Comparison { kAtLeast, kGreater };

// Number of windows [m, m+ell) inside [0, N) whose hit count compares to
// `threshold` as requested. Errc::kArgument if ell == 0.
std::uint64_t interval_count(const NatSet& a, std::uint64_t ell, std::uint64_t threshold, Comparison cmp);

// Hits per column over [0, N).
std::vector<std::uint64_t> column_profile(const GridSet& e);

// M(a): members with no proper prefix in a.
NodeSet minimal_elements(const NodeSet& a);

// Sum of 2^{-|s|} over M(a).
Rational phi(const NodeSet& a);

// Largest antichain weight, by the recursion
// W(s) = max([s in a] 2^{-|s|}, W(s0) + W(s1)).
Rational max_antichain_weight(const NodeSet& a);

// phi(a minus 2^{<n}) for n = 0..D-1. Errc::kRange if a has a node of
// length >= D.
std::vector<Rational> phi_bar_profile(const NodeSet& a, int depth);

}  // namespace hlbench
