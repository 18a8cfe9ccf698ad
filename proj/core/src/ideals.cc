#include "hlbench/ideals.h"

#include <algorithm>
#include <map>

#include "hlbench/error.h"

namespace hlbench {

NatSet::NatSet(std::vector<std::uint64_t> members, std::uint64_t bound)
    : members_(std::move(members)), bound_(bound) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= bound_) {
    throw Error(Errc::kRange, "member " + std::to_string(members_.back()) + " outside [0, " +
                                  std::to_string(bound_) + ")");
  }
}

NatSet NatSet::interval(std::uint64_t lo, std::uint64_t hi, std::uint64_t bound) {
  std::vector<std::uint64_t> m;
  for (std::uint64_t i = lo; i < hi; ++i) m.push_back(i);
  return NatSet(std::move(m), bound);
}

bool NatSet::contains(std::uint64_t n) const { return std::binary_search(members_.begin(), members_.end(), n); }

std::size_t NatSet::count_in(std::uint64_t lo, std::uint64_t hi) const {
  if (lo >= hi) return 0;
  return static_cast<std::size_t>(std::lower_bound(members_.begin(), members_.end(), hi) -
                                  std::lower_bound(members_.begin(), members_.end(), lo));
}

NatSet NatSet::complement() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < bound_; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return NatSet(std::move(out), bound_);
}

NatSet NatSet::unite(const NatSet& other) const {
  std::vector<std::uint64_t> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  return NatSet(std::move(out), std::max(bound_, other.bound_));
}

bool NatSet::is_subset_of(const NatSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

GridSet::GridSet(std::vector<Cell> cells, std::uint64_t bound) : cells_(std::move(cells)), bound_(bound) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (const auto& [col, row] : cells_) {
    if (col >= bound_ || row >= bound_) throw Error(Errc::kRange, "grid cell outside [0, N)^2");
  }
}

NodeSet::NodeSet(std::vector<BinaryString> nodes, int depth) : nodes_(std::move(nodes)), depth_(depth) {
  if (depth < 1 || depth > kMaxDepth) throw Error(Errc::kRange, "node set depth outside [1, 64]");
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  if (!nodes_.empty() && nodes_.back().length() >= depth) {
    throw Error(Errc::kRange, "node '" + nodes_.back().to_token() + "' not below depth " + std::to_string(depth));
  }
}

bool NodeSet::contains(const BinaryString& s) const { return std::binary_search(nodes_.begin(), nodes_.end(), s); }

bool NodeSet::is_subset_of(const NodeSet& other) const {
  return std::includes(other.nodes_.begin(), other.nodes_.end(), nodes_.begin(), nodes_.end());
}

DensityProfile density_profile(const NatSet& a, DensityMode mode) {
  DensityProfile out;
  const std::uint64_t n_bound = a.bound();
  if (mode == DensityMode::kDyadic) {
    for (int n = 0; n < 63 && (std::uint64_t{2} << n) <= n_bound; ++n) {
      const std::uint64_t lo = std::uint64_t{1} << n;
      out.emplace_back(BigInt(a.count_in(lo, 2 * lo)), BigInt(lo));
    }
    return out;
  }
  std::size_t hits = 0;
  auto it = a.members().begin();
  for (std::uint64_t n = 1; n <= n_bound; ++n) {
    while (it != a.members().end() && *it < n) {
      ++hits;
      ++it;
    }
    out.emplace_back(BigInt(hits), BigInt(n));
  }
  return out;
}

Rational summable_weight(const NatSet& a) {
  Rational total = 0;
  for (auto n : a.members()) total += Rational(BigInt(1), BigInt(n) + 1);
  return total;
}

std::uint64_t interval_count(const NatSet& a, std::uint64_t ell, std::uint64_t threshold, Comparison cmp) {
  if (ell == 0) throw Error(Errc::kArgument, "interval length must be positive");
  if (ell > a.bound()) return 0;
  std::uint64_t windows = 0;
  std::uint64_t hits = a.count_in(0, ell);
  for (std::uint64_t m = 0;; ++m) {
    const bool pass = cmp == Comparison::kAtLeast ? hits >= threshold : hits > threshold;
    if (pass) ++windows;
    if (m + ell >= a.bound()) break;
    if (a.contains(m)) --hits;
    if (a.contains(m + ell)) ++hits;
  }
  return windows;
}

std::vector<std::uint64_t> column_profile(const GridSet& e) {
  std::vector<std::uint64_t> counts(e.bound(), 0);
  for (const auto& cell : e.cells()) ++counts[cell.first];
  return counts;
}

NodeSet minimal_elements(const NodeSet& a) {
  std::vector<BinaryString> out;
  // Length-lex order visits every prefix before its extensions.
  for (const auto& s : a.nodes()) {
    bool dominated = false;
    for (int n = 0; n < s.length() && !dominated; ++n) dominated = a.contains(s.prefix(n));
    if (!dominated) out.push_back(s);
  }
  return NodeSet(std::move(out), a.depth());
}

Rational phi(const NodeSet& a) {
  Rational total = 0;
  const NodeSet minimal = minimal_elements(a);
  for (const auto& s : minimal.nodes()) total += inverse_power_of_two(s.length());
  return total;
}

Rational max_antichain_weight(const NodeSet& a) {
  std::map<BinaryString, Rational> weight;
  for (const auto& s : a.nodes()) {
    for (int n = 0; n <= s.length(); ++n) weight.emplace(s.prefix(n), Rational(0));
  }
  // Reverse length-lex order handles children before parents.
  for (auto it = weight.rbegin(); it != weight.rend(); ++it) {
    const auto& s = it->first;
    Rational below = 0;
    if (s.length() < kMaxDepth) {
      for (int b = 0; b < 2; ++b) {
        auto child = weight.find(s.child(b));
        if (child != weight.end()) below += child->second;
      }
    }
    Rational own = a.contains(s) ? inverse_power_of_two(s.length()) : Rational(0);
    it->second = std::max(own, below);
  }
  auto root = weight.find(BinaryString{});
  return root == weight.end() ? Rational(0) : root->second;
}

std::vector<Rational> phi_bar_profile(const NodeSet& a, int depth) {
  if (!a.nodes().empty() && a.nodes().back().length() >= depth) {
    throw Error(Errc::kRange, "node set reaches depth " + std::to_string(depth));
  }
  std::vector<Rational> out;
  for (int n = 0; n < depth; ++n) {
    std::vector<BinaryString> tail;
    for (const auto& s : a.nodes()) {
      if (s.length() >= n) tail.push_back(s);
    }
    out.push_back(phi(NodeSet(std::move(tail), std::max(a.depth(), 1))));
  }
  return out;
}

}  // namespace hlbench
