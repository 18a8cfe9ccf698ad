#include "hlbench/coloring.h"

#include <algorithm>
#include <bit>

#include "hlbench/error.h"
#include "hlbench/splitmix.h"

namespace hlbench {
namespace {

std::uint64_t level_size(int level) { return std::uint64_t{1} << level; }

std::uint64_t mask_between(unsigned from, unsigned to) {  // bits [from, to) of a word
  const std::uint64_t upper = to >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << to) - 1);
  return upper & ~((std::uint64_t{1} << from) - 1);
}

}  // namespace

Coloring::Coloring(int depth, int fill) : depth_(depth) {
  if (depth < 1 || depth > kMaxDepth) {
    throw Error(Errc::kRange, "coloring depth " + std::to_string(depth) + " outside [1, " +
                                  std::to_string(kMaxDepth) + "]");
  }
  levels_.resize(static_cast<std::size_t>(depth));
  for (int n = 0; n < depth; ++n) {
    auto& lv = levels_[static_cast<std::size_t>(n)];
    if (is_dense(n)) {
      const std::size_t words = (level_size(n) + 63) / 64;
      lv.words.assign(words, fill ? ~std::uint64_t{0} : 0);
      if (fill && level_size(n) % 64 != 0) lv.words.back() = mask_between(0, static_cast<unsigned>(level_size(n) % 64));
    } else {
      lv.runs.emplace(0, static_cast<std::uint8_t>(fill & 1));
    }
  }
}

Coloring::Level& Coloring::level_at(int level) {
  if (level < 0 || level >= depth_) throw Error(Errc::kRange, "level outside coloring depth");
  return levels_[static_cast<std::size_t>(level)];
}

const Coloring::Level& Coloring::level_at(int level) const {
  if (level < 0 || level >= depth_) throw Error(Errc::kRange, "level outside coloring depth");
  return levels_[static_cast<std::size_t>(level)];
}

int Coloring::color(const BinaryString& s) const {
  const auto& lv = level_at(s.length());
  if (is_dense(s.length())) return static_cast<int>((lv.words[s.value() / 64] >> (s.value() % 64)) & 1u);
  auto it = lv.runs.upper_bound(s.value());
  return std::prev(it)->second;
}

void Coloring::set(const BinaryString& s, int color) { set_range(s.length(), s.value(), s.value() + 1, color); }

void Coloring::set_range(int level, std::uint64_t lo, std::uint64_t hi, int color) {
  auto& lv = level_at(level);
  const std::uint64_t size = level_size(level);
  hi = std::min(hi, size);
  if (lo >= hi) return;
  const auto c = static_cast<std::uint8_t>(color & 1);
  if (is_dense(level)) {
    for (std::uint64_t v = lo; v < hi;) {
      const std::uint64_t w = v / 64;
      const auto from = static_cast<unsigned>(v % 64);
      const auto to = static_cast<unsigned>(std::min<std::uint64_t>(64, from + (hi - v)));
      const std::uint64_t m = mask_between(from, to);
      if (c) lv.words[w] |= m; else lv.words[w] &= ~m;
      v += to - from;
    }
    return;
  }
  auto& runs = lv.runs;
  std::uint8_t after = 0;
  if (hi < size) after = std::prev(runs.upper_bound(hi))->second;
  runs.erase(runs.lower_bound(lo), runs.lower_bound(hi));
  runs[lo] = c;
  if (hi < size && !runs.contains(hi)) runs[hi] = after;
  // Merge neighbours so equal colorings have equal maps.
  auto it = runs.find(lo);
  if (it != runs.begin() && std::prev(it)->second == c) it = runs.erase(it); else ++it;
  if (it != runs.end() && it->first == hi && it->second == c) runs.erase(it);
}

void Coloring::set_extensions(const BinaryString& s, int level, int color) {
  if (level < s.length()) throw Error(Errc::kRange, "extension level below node length");
  const int shift = level - s.length();
  const std::uint64_t lo = s.value() << shift;
  set_range(level, lo, lo + (std::uint64_t{1} << shift), color);
}

std::uint64_t Coloring::count(int level, std::uint64_t lo, std::uint64_t hi, int color) const {
  const auto& lv = level_at(level);
  hi = std::min(hi, level_size(level));
  if (lo >= hi) return 0;
  std::uint64_t total = 0;
  if (is_dense(level)) {
    for (std::uint64_t v = lo; v < hi;) {
      const auto from = static_cast<unsigned>(v % 64);
      const auto to = static_cast<unsigned>(std::min<std::uint64_t>(64, from + (hi - v)));
      const std::uint64_t ones = static_cast<std::uint64_t>(std::popcount(lv.words[v / 64] & mask_between(from, to)));
      total += color ? ones : (to - from) - ones;
      v += to - from;
    }
    return total;
  }
  auto it = std::prev(lv.runs.upper_bound(lo));
  for (; it != lv.runs.end() && it->first < hi; ++it) {
    const std::uint64_t start = std::max(it->first, lo);
    auto nx = std::next(it);
    const std::uint64_t end = std::min(nx == lv.runs.end() ? level_size(level) : nx->first, hi);
    if (it->second == color) total += end - start;
  }
  return total;
}

std::vector<std::uint64_t> Coloring::find(int level, std::uint64_t lo, std::uint64_t hi, int color,
                                          std::size_t limit) const {
  const auto& lv = level_at(level);
  hi = std::min(hi, level_size(level));
  std::vector<std::uint64_t> out;
  if (lo >= hi || limit == 0) return out;
  if (is_dense(level)) {
    for (std::uint64_t v = lo; v < hi && out.size() < limit;) {
      const auto from = static_cast<unsigned>(v % 64);
      const auto to = static_cast<unsigned>(std::min<std::uint64_t>(64, from + (hi - v)));
      std::uint64_t w = color ? lv.words[v / 64] : ~lv.words[v / 64];
      w &= mask_between(from, to);
      while (w != 0 && out.size() < limit) {
        out.push_back(v - from + static_cast<std::uint64_t>(std::countr_zero(w)));
        w &= w - 1;
      }
      v += to - from;
    }
    return out;
  }
  auto it = std::prev(lv.runs.upper_bound(lo));
  for (; it != lv.runs.end() && it->first < hi && out.size() < limit; ++it) {
    if (it->second != color) continue;
    auto nx = std::next(it);
    const std::uint64_t end = std::min(nx == lv.runs.end() ? level_size(level) : nx->first, hi);
    for (std::uint64_t v = std::max(it->first, lo); v < end && out.size() < limit; ++v) out.push_back(v);
  }
  return out;
}

unsigned slice_colors(const Coloring& c, const LevelTree& p, int level) {
  unsigned mask = 0;
  for (const auto& s : p.level(level)) {
    mask |= 1u << c.color(s);
    if (mask == 3u) break;
  }
  return mask;
}

LevelSet h_set(const Coloring& c, const LevelTree& p) {
  if (c.depth() != p.depth()) {
    throw Error(Errc::kShape, "coloring depth " + std::to_string(c.depth()) + " != tree depth " +
                                  std::to_string(p.depth()));
  }
  require_valid(p);
  std::vector<int> levels;
  for (int n = 0; n < p.depth(); ++n) {
    if (slice_colors(c, p, n) != 3u) levels.push_back(n);
  }
  return LevelSet(std::move(levels), p.depth());
}

LevelSet i_set(const Coloring& c, const BinaryString& s) {
  if (s.length() > c.depth() - 1) throw Error(Errc::kRange, "node longer than coloring depth");
  std::vector<int> levels;
  for (int n = s.length() + 2; n < c.depth(); ++n) {
    const int shift = n - s.length();
    const std::uint64_t lo = s.value() << shift;
    const std::uint64_t hi = lo + (std::uint64_t{1} << shift);
    if (c.find(n, lo, hi, 0, 2).size() <= 1) levels.push_back(n);
  }
  return LevelSet(std::move(levels), c.depth());
}

Coloring random_coloring(int depth, std::uint64_t seed) {
  if (depth > kDenseLevelLimit + 1) {
    throw Error(Errc::kRange, "random colorings are limited to depth " + std::to_string(kDenseLevelLimit + 1));
  }
  Coloring c(depth, 0);
  SplitMix64 rng(seed);
  for (int n = 0; n < depth; ++n) {
    for (std::uint64_t v = 0; v < level_size(n); ++v) {
      if (rng.next_bit()) c.set_range(n, v, v + 1, 1);
    }
  }
  return c;
}

}  // namespace hlbench
