#include "hlbench/level_tree.h"

#include <algorithm>

#include "hlbench/error.h"

namespace hlbench {
namespace {

void check_depth(int depth) {
  if (depth < 1 || depth > kMaxDepth) {
    throw Error(Errc::kRange, "depth " + std::to_string(depth) + " outside [1, " +
                                  std::to_string(kMaxDepth) + "]");
  }
}

bool sorted_contains(const std::vector<BinaryString>& level, const BinaryString& s) {
  return std::binary_search(level.begin(), level.end(), s);
}

}  // namespace

LevelTree::LevelTree(int depth, std::vector<std::vector<BinaryString>> levels)
    : depth_(depth), levels_(std::move(levels)) {
  check_depth(depth);
  if (levels_.size() != static_cast<std::size_t>(depth)) {
    throw Error(Errc::kShape, "expected " + std::to_string(depth) + " levels, got " +
                                  std::to_string(levels_.size()));
  }
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    auto& lv = levels_[n];
    for (const auto& s : lv) {
      if (static_cast<std::size_t>(s.length()) != n) {
        throw Error(Errc::kShape, "node '" + s.to_token() + "' stored on level " + std::to_string(n));
      }
    }
    std::sort(lv.begin(), lv.end());
    lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
  }
}

LevelTree LevelTree::closure_of(int depth, std::span<const BinaryString> tops) {
  check_depth(depth);
  std::vector<std::vector<BinaryString>> levels(static_cast<std::size_t>(depth));
  for (const auto& top : tops) {
    if (top.length() != depth - 1) {
      throw Error(Errc::kShape, "closure input '" + top.to_token() + "' is not on level " +
                                    std::to_string(depth - 1));
    }
    for (int n = 0; n < depth; ++n) levels[static_cast<std::size_t>(n)].push_back(top.prefix(n));
  }
  return LevelTree(depth, std::move(levels));
}

std::size_t LevelTree::node_count() const {
  std::size_t total = 0;
  for (const auto& lv : levels_) total += lv.size();
  return total;
}

bool LevelTree::contains(const BinaryString& s) const {
  if (s.length() >= depth_) return false;
  return sorted_contains(levels_[static_cast<std::size_t>(s.length())], s);
}

std::vector<BinaryString> LevelTree::nodes() const {
  std::vector<BinaryString> out;
  out.reserve(node_count());
  for (const auto& lv : levels_) out.insert(out.end(), lv.begin(), lv.end());
  return out;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.rule + " at node " + v.node.to_token();
  }
  return out;
}

LevelTree make_full(int depth) {
  check_depth(depth);
  if (depth > 22) {
    throw Error(Errc::kRange, "full tree of depth " + std::to_string(depth) +
                                  " exceeds the materialization limit");
  }
  std::vector<std::vector<BinaryString>> levels;
  levels.reserve(static_cast<std::size_t>(depth));
  for (int n = 0; n < depth; ++n) levels.push_back(BinaryString::level(n));
  return LevelTree(depth, std::move(levels));
}

ValidationReport validate(const LevelTree& t) {
  ValidationReport report;
  if (t.depth() == 0) {
    report.violations.push_back({"root", BinaryString{}});
    return report;
  }
  if (t.level(0).size() != 1) report.violations.push_back({"root", BinaryString{}});
  for (int n = 1; n < t.depth(); ++n) {
    for (const auto& s : t.level(n)) {
      if (!sorted_contains(t.level(n - 1), s.parent())) {
        report.violations.push_back({"prefix-closed", s});
      }
    }
  }
  for (int n = 0; n + 1 < t.depth(); ++n) {
    const auto& next = t.level(n + 1);
    for (const auto& s : t.level(n)) {
      if (!sorted_contains(next, s.child(0)) && !sorted_contains(next, s.child(1))) {
        report.violations.push_back({"pruned", s});
      }
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.node < b.node; });
  return report;
}

void require_valid(const LevelTree& t) {
  auto report = validate(t);
  if (!report.ok()) throw Error(Errc::kValidation, report.to_string());
}

LevelTree subtree_at(const LevelTree& t, const BinaryString& s) {
  if (!t.contains(s)) throw Error(Errc::kNotFound, "node '" + s.to_token() + "' not in tree");
  std::vector<std::vector<BinaryString>> levels(static_cast<std::size_t>(t.depth()));
  for (int n = 0; n < t.depth(); ++n) {
    for (const auto& u : t.level(n)) {
      if (u.compatible_with(s)) levels[static_cast<std::size_t>(n)].push_back(u);
    }
  }
  return LevelTree(t.depth(), std::move(levels));
}

std::vector<BinaryString> branches(const LevelTree& t) {
  require_valid(t);
  return t.level(t.depth() - 1);
}

bool is_subtree(const LevelTree& q, const LevelTree& p) {
  if (q.depth() != p.depth()) return false;
  for (int n = 0; n < q.depth(); ++n) {
    const auto& a = q.level(n);
    const auto& b = p.level(n);
    if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
  }
  return true;
}

}  // namespace hlbench
