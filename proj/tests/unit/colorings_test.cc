#include <map>
#include <random>

#include "hlbench/coloring.h"
#include "hlbench/constructions.h"
#include "hlbench/level_tree.h"
#include "oracles.h"
#include "test_util.h"

using namespace hlbench;
using testing_util::as_oracle;
using testing_util::bs;
using testing_util::bss;
using testing_util::last_bit_coloring;
using testing_util::strs;

namespace {

LevelTree single_branch(int depth, std::uint64_t value) {
  return LevelTree::closure_of(depth, std::vector<BinaryString>{BinaryString(value, depth - 1)});
}

std::vector<int> all_levels(int depth) {
  std::vector<int> v;
  for (int n = 0; n < depth; ++n) v.push_back(n);
  return v;
}

std::set<std::string> node_strings(const LevelTree& t) {
  std::set<std::string> out;
  for (const auto& s : t.nodes()) out.insert(s.to_string());
  return out;
}

}  // namespace

TEST(Coloring, DenseAndSparseStorageAgree) {
  // Level 24 uses run-length storage; compare against a plain map.
  Coloring c(26, 0);
  std::map<std::pair<int, std::uint64_t>, int> ref;
  std::mt19937_64 rng(7);
  for (int step = 0; step < 400; ++step) {
    const int level = (step % 2) ? 24 : 9;
    const std::uint64_t width = std::uint64_t{1} << level;
    const std::uint64_t lo = rng() % width;
    const std::uint64_t hi = std::min(width, lo + 1 + rng() % 40);
    const int color = static_cast<int>(rng() & 1u);
    c.set_range(level, lo, hi, color);
    for (std::uint64_t v = lo; v < hi; ++v) ref[{level, v}] = color;
  }
  for (const auto& [key, color] : ref) {
    EXPECT_EQ(c.color(BinaryString(key.second, key.first)), color);
  }
  for (int level : {9, 24}) {
    std::uint64_t ones = 0;
    for (const auto& [key, color] : ref) ones += key.first == level && color == 1;
    EXPECT_EQ(c.count(level, 0, std::uint64_t{1} << level, 1), ones);
    const auto first = c.find(level, 0, std::uint64_t{1} << level, 1, 3);
    std::vector<std::uint64_t> expect;
    for (const auto& [key, color] : ref) {
      if (key.first == level && color == 1 && expect.size() < 3) expect.push_back(key.second);
    }
    EXPECT_EQ(first, expect);
  }
}

TEST(Coloring, SetExtensionsAndErrors) {
  Coloring c(30, 0);
  c.set_extensions(bs("101"), 29, 1);
  EXPECT_EQ(c.count(29, 0, std::uint64_t{1} << 29, 1), std::uint64_t{1} << 26);
  EXPECT_EQ(c.color(BinaryString(std::uint64_t{5} << 26, 29)), 1);
  EXPECT_EQ(c.color(BinaryString(std::uint64_t{4} << 26, 29)), 0);
  EXPECT_ERRC(Coloring(0), Errc::kRange);
  EXPECT_ERRC(Coloring(65), Errc::kRange);
  EXPECT_ERRC(c.set_extensions(bs("101"), 2, 1), Errc::kRange);
  EXPECT_ERRC(c.count(30, 0, 1, 0), Errc::kRange);
}

TEST(HSet, SpecExamples) {
  const int d = 4;
  EXPECT_EQ(h_set(Coloring(d, 0), make_full(d)).members(), all_levels(d));
  EXPECT_EQ(h_set(Coloring(d, 0), single_branch(d, 5)).members(), all_levels(d));
  EXPECT_EQ(h_set(last_bit_coloring(d), make_full(d)).members(), std::vector<int>{0});
  EXPECT_EQ(h_set(last_bit_coloring(d), single_branch(d, 0)).members(), all_levels(d));
  EXPECT_ERRC(h_set(Coloring(5, 0), make_full(4)), Errc::kShape);
}

TEST(HSet, SingleBranchIsEveryLevel) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Coloring c = random_coloring(9, seed);
    EXPECT_EQ(h_set(c, single_branch(9, seed * 37 % 256)).members(), all_levels(9));
  }
}

TEST(HSet, MatchesOracleAndIsAntitone) {
  std::mt19937_64 rng(31337);
  const int depth = 8;
  for (int trial = 0; trial < 150; ++trial) {
    const Coloring c = random_coloring(depth, trial);
    std::vector<BinaryString> big;
    for (int i = 0; i < 6; ++i) big.emplace_back(rng() % 128, depth - 1);
    std::sort(big.begin(), big.end());
    big.erase(std::unique(big.begin(), big.end()), big.end());
    std::vector<BinaryString> small(big.begin(), big.begin() + static_cast<std::ptrdiff_t>(1 + rng() % big.size()));
    const LevelTree p = LevelTree::closure_of(depth, big);
    const LevelTree q = LevelTree::closure_of(depth, small);
    ASSERT_TRUE(is_subtree(q, p));
    const auto hp = h_set(c, p);
    const auto hq = h_set(c, q);
    EXPECT_EQ(hp.members(), oracle::h_set(node_strings(p), depth, as_oracle(c)));
    for (int n : hp.members()) EXPECT_TRUE(hq.contains(n)) << "level " << n;
  }
}

TEST(ISet, SpecExamples) {
  const int d = 10;
  const Coloring ones(d, 1);
  const Coloring zeros(d, 0);
  const Coloring last = last_bit_coloring(d);
  for (int len = 0; len < d; ++len) {
    for (const auto& s : BinaryString::level(len)) {
      std::vector<int> expected;
      for (int n = len + 2; n < d; ++n) expected.push_back(n);
      EXPECT_EQ(i_set(ones, s).members(), expected);
      EXPECT_TRUE(i_set(zeros, s).empty());
      if (len <= d - 3) {
        EXPECT_TRUE(i_set(last, s).empty()) << s.to_token();
      }
    }
  }
  EXPECT_ERRC(i_set(ones, BinaryString(0, d)), Errc::kRange);
}

TEST(ISet, MatchesOracle) {
  const int d = 8;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Coloring c = random_coloring(d, seed);
    for (int len = 0; len < d; ++len) {
      for (const auto& s : BinaryString::level(len)) {
        EXPECT_EQ(i_set(c, s).members(), oracle::i_set(s.to_string(), d, as_oracle(c)));
      }
    }
  }
}

TEST(RandomColoring, Determinism) {
  EXPECT_EQ(random_coloring(12, 42), random_coloring(12, 42));
  EXPECT_EQ(random_coloring(1, 5).depth(), 1);
  EXPECT_ERRC(random_coloring(22, 1), Errc::kRange);
}

TEST(RandomColoring, FrozenSeedPair) {
  // Low bits of the first three splitmix64 outputs: seed 1 gives 1 1 0,
  // seed 2 gives 0 0 1.
  const Coloring a = random_coloring(6, 1);
  const Coloring b = random_coloring(6, 2);
  EXPECT_NE(a, b);
  EXPECT_EQ(a.color(BinaryString{}), 1);
  EXPECT_EQ(b.color(BinaryString{}), 0);
  EXPECT_EQ(a.color(bs("0")), 1);
  EXPECT_EQ(b.color(bs("0")), 0);
  EXPECT_EQ(a.color(bs("1")), 0);
  EXPECT_EQ(b.color(bs("1")), 1);
}

TEST(RandomColoring, LowBitOfSplitmixInLengthLexOrder) {
  // Independent splitmix64.
  std::uint64_t state = 77;
  auto next = [&state] {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  const Coloring c = random_coloring(7, 77);
  for (int n = 0; n < 7; ++n) {
    for (const auto& s : BinaryString::level(n)) EXPECT_EQ(c.color(s), static_cast<int>(next() & 1u));
  }
}

TEST(ZDensity, BandOneHasOneBranch) {
  const auto inst = zdensity_coloring(1);
  EXPECT_EQ(inst.depth(), 5);
  const auto& b = inst.band(1);
  EXPECT_EQ(b.first_level, 3);
  EXPECT_EQ(b.last_level, 4);
  ASSERT_EQ(b.branches.size(), 1u);
  // Level 3 carries bit 0 of m = 0, level 4 bit 0 of m = 1.
  EXPECT_EQ(b.assignments, (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(inst.coloring.color(b.branches[0].prefix(3)), 0);
  EXPECT_EQ(inst.coloring.color(b.branches[0].prefix(4)), 1);
  EXPECT_TRUE(b.is_bijection());
}

TEST(ZDensity, HostShapeAndBijections) {
  for (int n_max = 1; n_max <= 4; ++n_max) {
    const auto inst = zdensity_coloring(n_max);
    EXPECT_EQ(inst.depth(), (1 << (n_max + 1)) + 1);
    ASSERT_TRUE(validate(inst.host).ok());
    for (int m = 0; m <= 2; ++m) EXPECT_EQ(inst.host.width(m), 1u);
    for (int n = 1; n <= n_max; ++n) {
      const auto& band = inst.band(n);
      EXPECT_EQ(band.first_level, (1 << n) + 1);
      EXPECT_EQ(band.last_level, 1 << (n + 1));
      for (int m = band.first_level; m <= band.last_level; ++m) EXPECT_EQ(inst.host.width(m), std::size_t(n));
      EXPECT_EQ(band.branches.size(), std::size_t(n));
      EXPECT_TRUE(std::is_sorted(band.branches.begin(), band.branches.end(), lex_less));
      EXPECT_TRUE(band.is_bijection());
      for (std::size_t m = 0; m < band.assignments.size(); ++m) EXPECT_EQ(band.assignments[m], m);
    }
    // The split entering band n sits at the length-lex least node of level 2^n.
    for (int n = 2; n <= n_max; ++n) {
      const auto& below = inst.host.level(1 << n);
      const auto& above = inst.host.level((1 << n) + 1);
      EXPECT_TRUE(std::find(above.begin(), above.end(), below.front().child(1)) != above.end());
    }
  }
  EXPECT_ERRC(zdensity_coloring(0), Errc::kRange);
  EXPECT_ERRC(zdensity_coloring(5), Errc::kRange);
}

TEST(ZDensity, OffHostNodesAreZero) {
  const auto inst = zdensity_coloring(3);
  for (int n = 0; n < inst.depth(); ++n) {
    for (const auto& s : BinaryString::level(n)) {
      if (!inst.host.contains(s)) {
        EXPECT_EQ(inst.coloring.color(s), 0) << s.to_token();
      }
    }
  }
}

TEST(Matchings, Enumeration) {
  const auto one = enumerate_matchings(1, 100);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].pairs.size(), 1u);
  EXPECT_EQ(one[0].pairs[0], std::make_pair(bs("0"), bs("1")));

  const auto two = enumerate_matchings(2, 100);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0].pairs, (std::vector<std::pair<BinaryString, BinaryString>>{{bs("00"), bs("01")}, {bs("10"), bs("11")}}));
  EXPECT_EQ(two[1].pairs, (std::vector<std::pair<BinaryString, BinaryString>>{{bs("00"), bs("10")}, {bs("01"), bs("11")}}));
  EXPECT_EQ(two[2].pairs, (std::vector<std::pair<BinaryString, BinaryString>>{{bs("00"), bs("11")}, {bs("01"), bs("10")}}));

  // (2k-1)!! perfect matchings of 2k points.
  EXPECT_EQ(enumerate_matchings(3, 1000).size(), 105u);
  EXPECT_EQ(enumerate_matchings(4, 500).size(), 500u);
  EXPECT_ERRC(enumerate_matchings(0, 1), Errc::kConstruction);
  EXPECT_ERRC(enumerate_matchings(6, 1), Errc::kConstruction);
}

TEST(Pairing, SpecExamples) {
  const auto pc = pairing_coloring({1}, 10, 6);
  ASSERT_EQ(pc.system.size(), 1u);
  EXPECT_EQ(pc.system.level_sets[0].members(), (std::vector<int>{1, 2, 3, 4, 5}));
  for (int k : pc.system.level_sets[0].members()) {
    for (const auto& t : BinaryString::level(k)) EXPECT_EQ(pc.coloring.color(t), t.bit(0));
  }

  const auto pc2 = pairing_coloring({1, 2}, 1000, 8);
  EXPECT_EQ(pc2.system.size(), 4u);
  EXPECT_FALSE(check_pairing_system(pc2.system).has_value());
  for (std::size_t i = 0; i < pc2.system.size(); ++i) {
    for (std::size_t j = i + 1; j < pc2.system.size(); ++j) {
      EXPECT_TRUE(pc2.system.level_sets[i].intersect(pc2.system.level_sets[j]).empty());
    }
    const auto& levels = pc2.system.level_sets[i].members();
    if (!levels.empty()) {
      EXPECT_GE(levels.front(), pc2.system.matchings[i].n);
    }
  }
}

TEST(Pairing, ColorsFollowTheMatching) {
  const auto pc = pairing_coloring({2}, 3, 9);
  for (std::size_t i = 0; i < pc.system.size(); ++i) {
    const auto& x = pc.system.matchings[i];
    for (int k = 0; k < 9; ++k) {
      for (const auto& t : BinaryString::level(k)) {
        int expected = 0;
        if (pc.system.level_sets[i].contains(k)) {
          for (const auto& [lo, hi] : x.pairs) {
            if (hi == t.prefix(x.n)) expected = 1;
          }
          EXPECT_EQ(pc.coloring.color(t), expected) << "x_" << i << " " << t.to_token();
        }
      }
    }
  }
}

TEST(Pairing, Errors) {
  EXPECT_ERRC(pairing_coloring({0}, 1, 5), Errc::kConstruction);
  EXPECT_ERRC(pairing_coloring({5}, 1, 5), Errc::kConstruction);
  EXPECT_ERRC(pairing_coloring({}, 1, 5), Errc::kConstruction);
  EXPECT_ERRC(pairing_coloring({1}, 0, 5), Errc::kConstruction);
}

TEST(Pairing, CheckerCatchesBrokenSystems) {
  auto pc = pairing_coloring({1, 2}, 1000, 8);
  auto system = pc.system;
  system.level_sets[1] = system.level_sets[0];
  EXPECT_TRUE(check_pairing_system(system).has_value());
  system = pc.system;
  system.level_sets[1] = LevelSet({1}, 8);
  EXPECT_TRUE(check_pairing_system(system).has_value());
  system = pc.system;
  system.matchings[1].pairs.pop_back();
  EXPECT_TRUE(check_pairing_system(system).has_value());
}

TEST(Levels, SpecExamples) {
  const auto s = residue_splitting(2, 10);
  EXPECT_FALSE(check_splitting(s).has_value());
  EXPECT_EQ(s.domain.size(), 7u);
  EXPECT_EQ(s.domain.front(), BinaryString{});
  const Coloring c = levels_coloring(s, 10);
  // Nothing reaches level 0; it stays at the default.
  EXPECT_EQ(c.color(BinaryString{}), 0);
  // t = empty is t_0, S(t_0) = {7} (k = 0 mod 7, k >= 1): first-bit coloring.
  EXPECT_EQ(s.sets[0].members(), std::vector<int>{7});
  for (const auto& t : BinaryString::level(7)) EXPECT_EQ(c.color(t), t.bit(0));
  for (std::size_t i = 0; i < s.domain.size(); ++i) {
    for (int n : s.sets[i].members()) {
      EXPECT_GE(n, s.domain[i].length() + 1);
      for (const auto& t : BinaryString::level(n)) {
        if (s.domain[i].is_prefix_of(t)) {
          EXPECT_EQ(c.color(t), t.bit(s.domain[i].length()));
        }
      }
    }
  }
}

TEST(Levels, OverlappingSetsAreRejected) {
  auto s = residue_splitting(2, 10);
  s.sets[1] = s.sets[2];
  EXPECT_TRUE(check_splitting(s).has_value());
  EXPECT_ERRC(levels_coloring(s, 10), Errc::kInvariant);
  auto low = residue_splitting(2, 10);
  low.sets[3] = LevelSet({1}, 10);  // |t_3| = 2 needs levels >= 3
  EXPECT_TRUE(check_splitting(low).has_value());
}
