#include "hlbench/search.h"
#include "oracles.h"
#include "test_util.h"

using namespace hlbench;
using testing_util::as_oracle;
using testing_util::bs;
using testing_util::bss;
using testing_util::last_bit_coloring;
using testing_util::strs;

namespace {

SearchBudget budget_for(int height, int workers = 1, std::uint64_t nodes = 50'000'000) {
  SearchBudget b;
  b.height = height;
  b.workers = workers;
  b.node_budget = nodes;
  return b;
}

HLCertificate cert(int height, const std::vector<std::string>& leaves, std::vector<int> levels, int depth,
                   HLMode mode, std::vector<int> witness) {
  HLCertificate c;
  c.embedding = TreeEmbedding::from_leaves(height, bss(leaves));
  c.levels = LevelSet(std::move(levels), depth);
  c.mode = mode;
  c.color_witness = std::move(witness);
  return c;
}

std::vector<std::string> host_top(const LevelTree& host) { return strs(host.level(host.depth() - 1)); }

}  // namespace

TEST(VerifyCertificate, SpecExamples) {
  EXPECT_TRUE(verify_certificate(Coloring(5, 0), cert(1, {"0000", "1111"}, {0, 1, 2, 3, 4}, 5, HLMode::kUniform, {0})));
  EXPECT_TRUE(verify_certificate(Coloring(5, 1), cert(2, {"0000", "0011", "1100", "1111"}, {0, 2, 4}, 5,
                                                      HLMode::kUniform, {1})));
  const Coloring last = last_bit_coloring(5);
  // Split at the root: level 1 holds "0" and "1".
  EXPECT_FALSE(verify_certificate(last, cert(1, {"0000", "1111"}, {1}, 5, HLMode::kUniform, {0})));
  EXPECT_FALSE(verify_certificate(last, cert(1, {"0000", "1111"}, {1}, 5, HLMode::kUniform, {1})));
  EXPECT_TRUE(verify_certificate(last, cert(0, {"0110"}, {0, 1, 2, 3, 4}, 5, HLMode::kByLevels, {0, 0, 1, 1, 0})));
  EXPECT_FALSE(verify_certificate(last, cert(0, {"0110"}, {0, 1, 2, 3, 4}, 5, HLMode::kByLevels, {0, 0, 1, 1, 1})));
}

TEST(VerifyCertificate, Errors) {
  HLCertificate bad;
  bad.embedding = TreeEmbedding(1, bss({"1", "00", "01"}), 2);
  bad.levels = LevelSet({0}, 3);
  bad.color_witness = {0};
  EXPECT_ERRC(verify_certificate(Coloring(3, 0), bad), Errc::kEmbedding);
  EXPECT_ERRC(verify_certificate(Coloring(6, 0), cert(1, {"0000", "1111"}, {0}, 5, HLMode::kUniform, {0})),
              Errc::kShape);
}

TEST(BruteForce, SpecExamples) {
  EXPECT_EQ(brute_force_max(Coloring(5, 0), budget_for(2), HLMode::kUniform).m, 5);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(brute_force_max(random_coloring(7, seed), budget_for(0), HLMode::kByLevels).m, 7);
  }
}

TEST(BruteForce, LastBitUniformFrozen) {
  const Coloring last = last_bit_coloring(5);
  const int expected = oracle::brute_force_m(5, 1, as_oracle(last), false);
  // Frozen from the oracle. Splitting at "000" would also give 4 levels, but
  // the root split comes first: arms "0000" and "1000" differ only on level 1.
  EXPECT_EQ(expected, 4);
  const auto r = brute_force_max(last, budget_for(1), HLMode::kUniform);
  EXPECT_EQ(r.m, expected);
  EXPECT_EQ(r.certificate.levels.members(), (std::vector<int>{0, 2, 3, 4}));
  EXPECT_EQ(strs(r.certificate.embedding.leaf_images()), (std::vector<std::string>{"0000", "1000"}));
  EXPECT_TRUE(verify_certificate(last, r.certificate));
}

TEST(BruteForce, BudgetGuard) {
  EXPECT_ERRC(brute_force_max(random_coloring(10, 1), budget_for(2, 1, 1000), HLMode::kUniform), Errc::kBudget);
  EXPECT_ERRC(brute_force_max(Coloring(4, 0), budget_for(4), HLMode::kUniform), Errc::kArgument);
}

TEST(EnumerationBound, MatchesOracleCount) {
  for (int depth = 2; depth <= 6; ++depth) {
    for (int h = 0; h < depth && h <= 2; ++h) {
      std::uint64_t count = 0;
      const auto top = oracle::level(depth - 1);
      std::vector<std::string> pick;
      const std::size_t want = std::size_t{1} << h;
      std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (pick.size() == want) {
          count += oracle::perfect_shape(pick, h);
          return;
        }
        for (std::size_t i = from; i < top.size(); ++i) {
          pick.push_back(top[i]);
          rec(i + 1);
          pick.pop_back();
        }
      };
      rec(0);
      EXPECT_EQ(enumeration_bound(depth, h), count) << depth << " " << h;
    }
  }
  EXPECT_EQ(enumeration_bound(5, 0, nullptr), 16);
  const auto inst = zdensity_coloring(3);
  EXPECT_EQ(enumeration_bound(inst.depth(), 1, &inst.host), 3);
  EXPECT_EQ(enumeration_bound(inst.depth(), 2, &inst.host), 0);
}

TEST(SearchBest, ConstantColoringReachesDepth) {
  for (auto mode : {HLMode::kUniform, HLMode::kByLevels}) {
    const auto r = search_best(Coloring(9, 1), budget_for(2), mode);
    EXPECT_EQ(r.m, 9);
    EXPECT_TRUE(r.complete);
    EXPECT_TRUE(verify_certificate(Coloring(9, 1), r.certificate));
  }
}

TEST(SearchBest, AgreesWithOraclesAndIsSound) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Coloring c = random_coloring(6, seed);
    for (int h : {1, 2}) {
      for (auto mode : {HLMode::kUniform, HLMode::kByLevels}) {
        const auto fast = search_best(c, budget_for(h), mode);
        const auto slow = brute_force_max(c, budget_for(h), mode);
        ASSERT_TRUE(fast.complete);
        EXPECT_EQ(fast.m, slow.m) << "seed " << seed << " h " << h;
        EXPECT_EQ(fast.certificate, slow.certificate) << "seed " << seed << " h " << h;
        EXPECT_TRUE(verify_certificate(c, fast.certificate));
        if (h == 1) {
          EXPECT_EQ(fast.m, oracle::brute_force_m(6, h, as_oracle(c), mode == HLMode::kByLevels));
        }
      }
    }
  }
}

TEST(SearchBest, IndependentOfWorkers) {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const Coloring c = random_coloring(8, seed);
    const auto one = search_best(c, budget_for(2, 1), HLMode::kUniform);
    for (int w : {2, 3, 4}) {
      const auto many = search_best(c, budget_for(2, w), HLMode::kUniform);
      EXPECT_EQ(many.m, one.m);
      EXPECT_EQ(many.certificate, one.certificate);
      EXPECT_EQ(many.explored, one.explored);
    }
  }
}

TEST(SearchBest, BudgetExhaustionIsDeterministic) {
  const Coloring c = random_coloring(10, 3);
  const auto full = search_best(c, budget_for(2), HLMode::kByLevels);
  ASSERT_TRUE(full.complete);
  const auto a = search_best(c, budget_for(2, 1, 50), HLMode::kByLevels);
  const auto b = search_best(c, budget_for(2, 4, 50), HLMode::kByLevels);
  EXPECT_FALSE(a.complete);
  EXPECT_LE(a.m, full.m);
  EXPECT_EQ(a.m, b.m);
  EXPECT_EQ(a.certificate, b.certificate);
  EXPECT_TRUE(verify_certificate(c, a.certificate));
}

TEST(SearchBest, MonotoneInHeightAndDepth) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Coloring c = random_coloring(7, seed);
    int prev = 1 << 20;
    for (int h = 0; h <= 3; ++h) {
      const int m = search_best(c, budget_for(h), HLMode::kUniform).m;
      EXPECT_LE(m, prev);
      prev = m;
    }
  }
}

TEST(SearchBest, TargetMet) {
  SearchBudget b = budget_for(1);
  b.min_levels = 6;
  EXPECT_TRUE(search_best(Coloring(6, 0), b, HLMode::kUniform).target_met);
  b.min_levels = 7;
  EXPECT_FALSE(search_best(Coloring(6, 0), b, HLMode::kUniform).target_met);
}

TEST(SearchBest, ZDensityHostFrozen) {
  struct Row {
    int n_max;
    HLMode mode;
    int m;
  };
  // Frozen from the string oracle restricted to the host's top level.
  for (const Row& row : {Row{2, HLMode::kUniform, 5}, Row{2, HLMode::kByLevels, 7}, Row{3, HLMode::kUniform, 8},
                         Row{3, HLMode::kByLevels, 13}}) {
    const auto inst = zdensity_coloring(row.n_max);
    const int want = oracle::brute_force_m(inst.depth(), 1, as_oracle(inst.coloring), row.mode == HLMode::kByLevels,
                                           host_top(inst.host));
    EXPECT_EQ(want, row.m);
    const auto r = search_best(inst.coloring, budget_for(1), row.mode, &inst.host);
    EXPECT_EQ(r.m, row.m);
    EXPECT_EQ(brute_force_max(inst.coloring, budget_for(1), row.mode, &inst.host).m, row.m);
    for (const auto& leaf : r.certificate.embedding.leaf_images()) EXPECT_TRUE(inst.host.contains(leaf));
  }
  const auto one = zdensity_coloring(1);
  EXPECT_ERRC(search_best(one.coloring, budget_for(1), HLMode::kUniform, &one.host), Errc::kNotFound);
}

TEST(BandCheck, SpecExamples) {
  const auto inst = zdensity_coloring(4);
  EXPECT_EQ(check_band(inst, 3, {0, 2}).actual, 4u);
  EXPECT_EQ(check_band(inst, 3, {0, 2}).expected, 4u);
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> all;
    for (int j = 0; j < n; ++j) all.push_back(j);
    EXPECT_EQ(check_band(inst, n, all).actual, 2u);
    for (int j = 0; j < n; ++j) EXPECT_EQ(check_band(inst, n, {j}).actual, std::uint64_t{1} << n);
  }
  EXPECT_ERRC(check_band(inst, 2, {}), Errc::kArgument);
  EXPECT_ERRC(check_band(inst, 2, {2}), Errc::kArgument);
  EXPECT_ERRC(zdensity_band_check(inst, {{0}, {0}}), Errc::kArgument);
  const auto rows = zdensity_band_check(inst, {{0}, {1}, {0, 1, 2}, {1, 3}});
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) EXPECT_TRUE(r.pass());
}

TEST(BandCheck, ExhaustiveIdentity) {
  const auto inst = zdensity_coloring(4);
  const auto rows = zdensity_exhaustive_check(inst);
  EXPECT_EQ(rows.size(), 1u + 3u + 7u + 15u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.pass()) << r.n;
    EXPECT_EQ(r.expected, std::uint64_t{1} << (r.n - static_cast<int>(r.selection.size()) + 1));
  }
}

TEST(BandCheck, BandDensityIsTwoToTheOneMinusK) {
  // With k branches kept in every band n >= k the band density is 2^{1-k}.
  const auto inst = zdensity_coloring(4);
  for (int k = 1; k <= 4; ++k) {
    for (int n = k; n <= 4; ++n) {
      std::vector<int> sel;
      for (int j = 0; j < k; ++j) sel.push_back(j);
      const auto r = check_band(inst, n, sel);
      EXPECT_EQ(Rational(BigInt(r.actual), BigInt(1) << n), inverse_power_of_two(k - 1));
    }
  }
}

TEST(Mode, Names) {
  EXPECT_STREQ(mode_name(HLMode::kUniform), "uniform");
  EXPECT_STREQ(mode_name(HLMode::kByLevels), "by_levels");
  EXPECT_EQ(parse_mode("by_levels"), HLMode::kByLevels);
  EXPECT_ERRC(parse_mode("levels"), Errc::kArgument);
}
