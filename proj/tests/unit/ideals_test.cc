#include <random>

#include "hlbench/ideals.h"
#include "oracles.h"
#include "test_util.h"

using namespace hlbench;
using testing_util::bs;
using testing_util::bss;
using testing_util::strs;

namespace {

Rational q(long p, long r) { return Rational(BigInt(p), BigInt(r)); }

NatSet where(std::uint64_t bound, const std::function<bool(std::uint64_t)>& pred) {
  std::vector<std::uint64_t> m;
  for (std::uint64_t i = 0; i < bound; ++i) {
    if (pred(i)) m.push_back(i);
  }
  return NatSet(std::move(m), bound);
}

NodeSet full_level(int n, int depth) { return NodeSet(BinaryString::level(n), depth); }

NodeSet random_nodes(std::mt19937_64& rng, int depth, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<BinaryString> nodes;
  for (int n = 0; n < depth; ++n) {
    for (const auto& s : BinaryString::level(n)) {
      if (keep(rng)) nodes.push_back(s);
    }
  }
  return NodeSet(std::move(nodes), depth);
}

}  // namespace

TEST(NatSet, Basics) {
  const NatSet a({5, 1, 3, 3}, 8);
  EXPECT_EQ(a.members(), (std::vector<std::uint64_t>{1, 3, 5}));
  EXPECT_EQ(a.count_in(2, 6), 2u);
  EXPECT_EQ(a.complement().members(), (std::vector<std::uint64_t>{0, 2, 4, 6, 7}));
  EXPECT_EQ(a.unite(NatSet({0, 1}, 8)).members(), (std::vector<std::uint64_t>{0, 1, 3, 5}));
  EXPECT_TRUE(NatSet({3}, 8).is_subset_of(a));
  EXPECT_EQ(NatSet::interval(2, 5, 8).members(), (std::vector<std::uint64_t>{2, 3, 4}));
  EXPECT_ERRC(NatSet({8}, 8), Errc::kRange);
}

TEST(Density, SpecExamples) {
  const auto evens = density_profile(where(1024, [](auto i) { return i % 2 == 0; }), DensityMode::kDyadic);
  ASSERT_EQ(evens.size(), 10u);
  for (std::size_t n = 1; n < evens.size(); ++n) EXPECT_EQ(evens[n], q(1, 2));

  const auto powers =
      density_profile(where(1024, [](auto i) { return i != 0 && (i & (i - 1)) == 0; }), DensityMode::kDyadic);
  for (std::size_t n = 0; n < powers.size(); ++n) EXPECT_EQ(powers[n], inverse_power_of_two(static_cast<int>(n)));

  for (const auto& d : density_profile(NatSet({}, 64), DensityMode::kDyadic)) EXPECT_EQ(d, 0);
  for (const auto& d : density_profile(NatSet({}, 64), DensityMode::kNatural)) EXPECT_EQ(d, 0);
}

TEST(Density, NaturalProfile) {
  const auto d = density_profile(NatSet({0, 2}, 4), DensityMode::kNatural);
  EXPECT_EQ(d, (DensityProfile{q(1, 1), q(1, 2), q(2, 3), q(2, 4)}));
}

TEST(Density, ComplementSumsToOne) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const NatSet a = where(512, [&](auto) { return rng() % 3 == 0; });
    const auto da = density_profile(a, DensityMode::kDyadic);
    const auto dc = density_profile(a.complement(), DensityMode::kDyadic);
    ASSERT_EQ(da.size(), dc.size());
    for (std::size_t n = 0; n < da.size(); ++n) EXPECT_EQ(da[n] + dc[n], 1);
  }
}

TEST(Summable, SpecExamples) {
  EXPECT_EQ(summable_weight(NatSet({0}, 4)), 1);
  EXPECT_EQ(summable_weight(NatSet::interval(0, 10, 10)), q(7381, 2520));
  EXPECT_EQ(summable_weight(NatSet({}, 10)), 0);
}

TEST(Summable, MatchesOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const NatSet a = where(300, [&](auto) { return rng() % 5 == 0; });
    EXPECT_EQ(summable_weight(a), oracle::harmonic(a.members()));
  }
}

TEST(IntervalCount, SpecExamples) {
  EXPECT_EQ(interval_count(NatSet::interval(0, 20, 20), 3, 3, Comparison::kAtLeast), 18u);
  EXPECT_EQ(interval_count(NatSet({}, 20), 4, 1, Comparison::kAtLeast), 0u);
  const NatSet fours = where(64, [](auto i) { return i % 4 == 0; });
  EXPECT_EQ(interval_count(fours, 4, 2, Comparison::kAtLeast), 0u);
  EXPECT_EQ(interval_count(fours, 4, 1, Comparison::kAtLeast), 61u);
  EXPECT_EQ(interval_count(fours, 4, 0, Comparison::kGreater), 61u);
  EXPECT_ERRC(interval_count(fours, 0, 1, Comparison::kAtLeast), Errc::kArgument);
  EXPECT_EQ(interval_count(fours, 65, 0, Comparison::kAtLeast), 0u);
}

TEST(IntervalCount, MonotoneInSetAntitoneInThreshold) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const NatSet a = where(128, [&](auto) { return rng() % 4 == 0; });
    const NatSet b = a.unite(where(128, [&](auto) { return rng() % 6 == 0; }));
    for (std::uint64_t ell : {1u, 3u, 8u}) {
      std::uint64_t prev = ~std::uint64_t{0};
      for (std::uint64_t t = 0; t <= ell + 1; ++t) {
        const auto ca = interval_count(a, ell, t, Comparison::kAtLeast);
        EXPECT_LE(ca, interval_count(b, ell, t, Comparison::kAtLeast));
        EXPECT_LE(ca, prev);
        EXPECT_EQ(interval_count(a, ell, t, Comparison::kGreater), interval_count(a, ell, t + 1, Comparison::kAtLeast));
        prev = ca;
      }
    }
  }
}

TEST(ColumnProfile, SpecExamples) {
  std::vector<GridSet::Cell> graph, column, two;
  for (std::uint64_t i = 0; i < 8; ++i) {
    graph.emplace_back(i, i);
    column.emplace_back(3, i);
    two.emplace_back(i, i);
    two.emplace_back(i, (i * 5 + 1) % 8);
  }
  EXPECT_EQ(column_profile(GridSet(graph, 8)), std::vector<std::uint64_t>(8, 1));
  auto col = column_profile(GridSet(column, 8));
  EXPECT_EQ(col[3], 8u);
  col[3] = 0;
  EXPECT_EQ(col, std::vector<std::uint64_t>(8, 0));
  for (auto c : column_profile(GridSet(two, 8))) EXPECT_LE(c, 2u);
  EXPECT_ERRC(GridSet({{8, 0}}, 8), Errc::kRange);
}

TEST(MinimalElements, SpecExamples) {
  EXPECT_EQ(strs(minimal_elements(NodeSet(bss({"0", "00", "01"}), 4)).nodes()), std::vector<std::string>{"0"});
  const auto antichain = NodeSet(bss({"00", "01", "1"}), 4);
  EXPECT_EQ(minimal_elements(antichain), antichain);
  EXPECT_EQ(strs(minimal_elements(NodeSet(bss({"-", "0", "101"}), 4)).nodes()), std::vector<std::string>{""});
}

TEST(Phi, SpecExamples) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(phi(full_level(n, 11)), 1);
  EXPECT_EQ(phi(NodeSet(bss({"0"}), 3)), q(1, 2));
  EXPECT_EQ(phi(NodeSet(bss({"00", "01", "1"}), 3)), 1);
  EXPECT_EQ(phi(NodeSet({}, 3)), 0);
}

TEST(MaxAntichain, SpecExamples) {
  EXPECT_EQ(max_antichain_weight(NodeSet(bss({"0", "00", "000"}), 4)), q(1, 2));
  EXPECT_EQ(max_antichain_weight(NodeSet({}, 4)), 0);
  EXPECT_EQ(max_antichain_weight(NodeSet(bss({"0", "00", "01"}), 4)), q(1, 2));
}

TEST(MaxAntichain, EqualsPhiAndOracleOnEverySubsetOfDepthFour) {
  std::vector<BinaryString> all;
  for (int n = 0; n < 4; ++n) {
    for (const auto& s : BinaryString::level(n)) all.push_back(s);
  }
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<BinaryString> pick;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask & (1u << i)) pick.push_back(all[i]);
    }
    const NodeSet a(pick, 4);
    const Rational w = max_antichain_weight(a);
    ASSERT_EQ(phi(a), w) << mask;
    if (mask % 97 == 0) {
      ASSERT_EQ(w, oracle::max_antichain(strs(pick))) << mask;
    }
  }
}

TEST(Phi, MatchesOraclesOnRandomSets) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const NodeSet a = random_nodes(rng, 7, 0.08);
    EXPECT_EQ(phi(a), oracle::phi(strs(a.nodes())));
    if (a.size() <= 14) {
      EXPECT_EQ(max_antichain_weight(a), oracle::max_antichain(strs(a.nodes())));
    }
  }
}

TEST(PhiBar, SpecExamples) {
  for (int k = 0; k < 6; ++k) {
    const auto profile = phi_bar_profile(full_level(k, 7), 7);
    ASSERT_EQ(profile.size(), 7u);
    for (int n = 0; n < 7; ++n) EXPECT_EQ(profile[static_cast<std::size_t>(n)], n <= k ? 1 : 0);
  }
  EXPECT_ERRC(phi_bar_profile(full_level(5, 7), 5), Errc::kRange);
}

TEST(PhiBar, LevelsTwoFourSixByOracle) {
  std::vector<BinaryString> nodes;
  for (int k : {2, 4, 6}) {
    for (const auto& s : BinaryString::level(k)) nodes.push_back(s);
  }
  const NodeSet a(nodes, 8);
  const auto profile = phi_bar_profile(a, 8);
  ASSERT_EQ(profile.size(), 8u);
  for (int n = 0; n < 8; ++n) {
    std::vector<std::string> tail;
    for (const auto& s : nodes) {
      if (s.length() >= n) tail.push_back(s.to_string());
    }
    EXPECT_EQ(profile[static_cast<std::size_t>(n)], oracle::phi(tail)) << n;
  }
  // Frozen: 1 while some full level remains, 0 past level 6.
  EXPECT_EQ(profile, (std::vector<Rational>{1, 1, 1, 1, 1, 1, 1, 0}));
}

TEST(PhiBar, NonIncreasingAndPhiMonotone) {
  std::mt19937_64 rng(161803);
  for (int trial = 0; trial < 100; ++trial) {
    const NodeSet a = random_nodes(rng, 9, 0.02);
    std::vector<BinaryString> more = a.nodes();
    const NodeSet extra = random_nodes(rng, 9, 0.02);
    more.insert(more.end(), extra.nodes().begin(), extra.nodes().end());
    const NodeSet b(more, 9);
    ASSERT_TRUE(a.is_subset_of(b));
    EXPECT_LE(phi(a), phi(b));
    const auto profile = phi_bar_profile(a, 9);
    for (std::size_t n = 1; n < profile.size(); ++n) EXPECT_LE(profile[n], profile[n - 1]);
  }
}
