#include "hlbench/constructions.h"

#include <algorithm>
#include <bit>
#include <functional>

#include "hlbench/error.h"

namespace hlbench {

bool ZDensityBand::is_bijection() const {
  const std::size_t size = std::size_t{1} << n;
  if (assignments.size() != size) return false;
  std::vector<bool> seen(size, false);
  for (auto a : assignments) {
    if (a >= size || seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

ZDensityInstance zdensity_coloring(int n_max) {
  if (n_max < 1) throw Error(Errc::kRange, "n_max must be at least 1");
  if (n_max > 4) {
    throw Error(Errc::kRange, "n_max " + std::to_string(n_max) + " needs depth above " +
                                  std::to_string(kMaxDepth));
  }
  const int depth = (1 << (n_max + 1)) + 1;

  // Slowly branching host: one split at level 2^n for each n in [2, n_max].
  std::vector<std::vector<BinaryString>> levels(static_cast<std::size_t>(depth));
  levels[0].push_back(BinaryString{});
  for (int m = 0; m + 1 < depth; ++m) {
    const auto& cur = levels[static_cast<std::size_t>(m)];
    auto& next = levels[static_cast<std::size_t>(m + 1)];
    const bool split_here = m >= 4 && std::has_single_bit(static_cast<unsigned>(m)) && m <= (1 << n_max);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next.push_back(cur[i].child(0));
      if (split_here && i == 0) next.push_back(cur[i].child(1));
    }
  }
  ZDensityInstance inst;
  inst.n_max = n_max;
  inst.host = LevelTree(depth, std::move(levels));
  inst.coloring = Coloring(depth, 0);

  for (int n = 1; n <= n_max; ++n) {
    ZDensityBand band;
    band.n = n;
    band.first_level = (1 << n) + 1;
    band.last_level = 1 << (n + 1);
    band.branches = inst.host.level(band.last_level);
    std::sort(band.branches.begin(), band.branches.end(), lex_less);
    const int band_size = 1 << n;
    for (std::size_t j = 0; j < band.branches.size(); ++j) {
      for (int m = 0; m < band_size; ++m) {
        const int bit = (m >> j) & 1;
        inst.coloring.set(band.branches[j].prefix(band.first_level + m), bit);
      }
    }
    inst.bands.push_back(std::move(band));
  }
  for (auto& band : inst.bands) {
    for (int level = band.first_level; level <= band.last_level; ++level) {
      std::uint64_t a = 0;
      for (std::size_t j = 0; j < band.branches.size(); ++j) {
        a |= static_cast<std::uint64_t>(inst.coloring.color(band.branches[j].prefix(level))) << j;
      }
      band.assignments.push_back(a);
    }
  }
  return inst;
}

std::vector<Matching> enumerate_matchings(int n, std::size_t cap) {
  if (n < 1 || n > 5) throw Error(Errc::kConstruction, "matching level " + std::to_string(n) + " outside [1, 5]");
  const std::size_t size = std::size_t{1} << n;
  std::vector<Matching> out;
  std::vector<bool> used(size, false);
  std::vector<std::pair<BinaryString, BinaryString>> pairs;

  std::function<void()> rec = [&]() {
    if (out.size() >= cap) return;
    std::size_t first = 0;
    while (first < size && used[first]) ++first;
    if (first == size) {
      out.push_back({n, pairs});
      return;
    }
    used[first] = true;
    for (std::size_t partner = first + 1; partner < size && out.size() < cap; ++partner) {
      if (used[partner]) continue;
      used[partner] = true;
      pairs.emplace_back(BinaryString(first, n), BinaryString(partner, n));
      rec();
      pairs.pop_back();
      used[partner] = false;
    }
    used[first] = false;
  };
  rec();
  return out;
}

std::optional<std::string> check_pairing_system(const PairingSystem& system) {
  if (system.matchings.size() != system.level_sets.size()) return "matching and level-set counts differ";
  for (std::size_t i = 0; i < system.matchings.size(); ++i) {
    const auto& x = system.matchings[i];
    std::vector<bool> hit(std::size_t{1} << x.n, false);
    for (const auto& [a, b] : x.pairs) {
      if (a.length() != x.n || b.length() != x.n) return "pair member on wrong level in x_" + std::to_string(i);
      if (!lex_less(a, b)) return "pair not stored in lexicographic order in x_" + std::to_string(i);
      for (const auto& s : {a, b}) {
        if (hit[s.value()]) return "string " + s.to_token() + " covered twice in x_" + std::to_string(i);
        hit[s.value()] = true;
      }
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return "x_" + std::to_string(i) + " is not perfect";
    const auto& a = system.level_sets[i];
    if (!a.empty() && a.members().front() < x.n) return "min A_x below n for x_" + std::to_string(i);
    for (std::size_t j = 0; j < i; ++j) {
      if (!a.intersect(system.level_sets[j]).empty()) {
        return "A_x_" + std::to_string(j) + " and A_x_" + std::to_string(i) + " intersect";
      }
    }
  }
  return std::nullopt;
}

PairingColoring pairing_coloring(std::vector<int> base_levels, std::size_t per_level_cap, int depth) {
  if (depth < 1 || depth > kMaxDepth) throw Error(Errc::kRange, "depth outside [1, 64]");
  std::sort(base_levels.begin(), base_levels.end());
  base_levels.erase(std::unique(base_levels.begin(), base_levels.end()), base_levels.end());
  PairingSystem system;
  system.depth = depth;
  system.base_levels = base_levels;
  for (int n : base_levels) {
    if (n < 1) throw Error(Errc::kConstruction, "base level " + std::to_string(n) + " has an odd number of strings");
    if (n >= depth) throw Error(Errc::kConstruction, "base level " + std::to_string(n) + " not below depth");
    auto ms = enumerate_matchings(n, per_level_cap);
    system.matchings.insert(system.matchings.end(), ms.begin(), ms.end());
  }
  if (system.matchings.empty()) throw Error(Errc::kConstruction, "no matchings enumerated");

  const std::size_t total = system.matchings.size();
  system.level_sets.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::vector<int> members;
    for (std::size_t k = i; k < static_cast<std::size_t>(depth); k += total) {
      if (static_cast<int>(k) >= system.matchings[i].n) members.push_back(static_cast<int>(k));
    }
    system.level_sets[i] = LevelSet(std::move(members), depth);
  }

  Coloring c(depth, 0);
  for (std::size_t i = 0; i < total; ++i) {
    for (int k : system.level_sets[i].members()) {
      for (const auto& pair : system.matchings[i].pairs) c.set_extensions(pair.second, k, 1);
    }
  }
  return {std::move(c), std::move(system)};
}

std::optional<std::string> check_splitting(const SplittingAssignment& s) {
  if (s.domain.size() != s.sets.size()) return "domain and set counts differ";
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    const auto& set = s.sets[i];
    if (!set.empty() && set.members().front() < s.domain[i].length() + 1) {
      return "S(" + s.domain[i].to_token() + ") has a level at most |t|";
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!set.intersect(s.sets[j]).empty()) {
        return "S(" + s.domain[j].to_token() + ") and S(" + s.domain[i].to_token() + ") overlap";
      }
    }
  }
  return std::nullopt;
}

SplittingAssignment residue_splitting(int max_len, int depth) {
  if (max_len < 0 || max_len > 16) throw Error(Errc::kRange, "max_len outside [0, 16]");
  if (depth < 1 || depth > kMaxDepth) throw Error(Errc::kRange, "depth outside [1, 64]");
  SplittingAssignment s;
  for (int len = 0; len <= max_len; ++len) {
    auto lv = BinaryString::level(len);
    s.domain.insert(s.domain.end(), lv.begin(), lv.end());
  }
  const std::size_t total = s.domain.size();
  for (std::size_t i = 0; i < total; ++i) {
    std::vector<int> members;
    for (std::size_t k = i; k < static_cast<std::size_t>(depth); k += total) {
      if (static_cast<int>(k) >= s.domain[i].length() + 1) members.push_back(static_cast<int>(k));
    }
    s.sets.emplace_back(std::move(members), depth);
  }
  return s;
}

Coloring levels_coloring(const SplittingAssignment& s, int depth) {
  if (auto err = check_splitting(s)) throw Error(Errc::kInvariant, *err);
  Coloring c(depth, 0);
  for (std::size_t i = 0; i < s.domain.size(); ++i) {
    for (int k : s.sets[i].members()) {
      if (k >= depth) throw Error(Errc::kRange, "splitting level " + std::to_string(k) + " not below depth");
      c.set_extensions(s.domain[i].child(1), k, 1);
    }
  }
  return c;
}

}  // namespace hlbench
