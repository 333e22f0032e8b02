#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "foulkes/set_partition.hpp"
#include "oracles.hpp"

using namespace foulkes;

TEST(Canonicalize, SortsBlocksByMinimum) {
  auto p = canonicalize({{3}, {1, 2, 4}}, 4);
  EXPECT_EQ(p.to_string(), "{1,2,4|3}");
  EXPECT_EQ(p.block_count(), 2);
}

TEST(Canonicalize, SingletonsAreFixed) {
  auto p = canonicalize({{1}, {2}, {3}, {4}, {5}}, 5);
  EXPECT_EQ(p, SetPartition::singletons(5));
  EXPECT_EQ(p.to_string(), "{1|2|3|4|5}");
}

TEST(Canonicalize, NinePointExample) {
  auto p = canonicalize({{5, 7, 8}, {6, 9}, {1, 2, 4}, {3}}, 9);
  EXPECT_EQ(p.to_string(), "{1,2,4|3|5,7,8|6,9}");
  std::vector<std::vector<int>> want = {{1, 2, 4}, {3}, {5, 7, 8}, {6, 9}};
  EXPECT_EQ(p.blocks(), want);
}

TEST(Canonicalize, RejectsMalformedInput) {
  EXPECT_THROW(canonicalize({{1, 2}, {2, 3}}, 3), ParseError);
  EXPECT_THROW(canonicalize({{1, 2}}, 3), ParseError);
  EXPECT_THROW(canonicalize({{1}, {}}, 1), ParseError);
  EXPECT_THROW(canonicalize({{1, 4}}, 3), ParseError);
  EXPECT_THROW(parse_set_partition("1,2|3"), ParseError);
  EXPECT_THROW(parse_set_partition("{1,,2}"), ParseError);
}

TEST(Canonicalize, IdempotentOnEveryPartition) {
  for (int r = 1; r <= 6; ++r)
    for (const auto& p : enumerate_set_partitions(r)) EXPECT_EQ(canonicalize(p.blocks(), r), p);
}

TEST(Parse, RoundTrip) {
  auto p = parse_set_partition("{6,9|1,2,4|3|5,7,8}");
  EXPECT_EQ(p.to_string(), "{1,2,4|3|5,7,8|6,9}");
  EXPECT_EQ(parse_set_partition(p.to_string()), p);
  auto q = parse_foulkes_pair("{1|2,3} ; {1,2,3}");
  EXPECT_EQ(q.to_string(), "{1|2,3} ; {1,2,3}");
  EXPECT_THROW(parse_foulkes_pair("{1,2|3} ; {1|2,3}"), ParseError);
}

TEST(Refines, Examples) {
  EXPECT_TRUE(refines(SetPartition::singletons(4), SetPartition::one_block(4)));
  EXPECT_TRUE(refines(SetPartition::singletons(3), parse_set_partition("{1,3|2}")));
  EXPECT_FALSE(refines(SetPartition::one_block(3), SetPartition::singletons(3)));
  auto lambda = parse_set_partition("{1,2,4|3|5,7,8|6,9}");
  auto lambda_p = parse_set_partition("{1,2,3,4|5,6,7,8,9}");
  EXPECT_TRUE(refines(lambda, lambda_p));
  EXPECT_FALSE(refines(lambda_p, lambda));
  EXPECT_THROW(refines(SetPartition::singletons(2), SetPartition::singletons(3)), SizeMismatch);
}

TEST(Refines, IsAPartialOrder) {
  for (int r = 1; r <= 5; ++r) {
    auto all = enumerate_set_partitions(r);
    for (const auto& a : all) {
      EXPECT_TRUE(refines(a, a));
      for (const auto& b : all) {
        if (refines(a, b) && refines(b, a)) EXPECT_EQ(a, b);
        if (!refines(a, b)) continue;
        for (const auto& c : all)
          if (refines(b, c)) EXPECT_TRUE(refines(a, c));
      }
    }
  }
}

// Refinement checked against the definition: a ~ b in the finer partition
// implies a ~ b in the coarser one.
TEST(Refines, MatchesPairwiseDefinition) {
  auto all = enumerate_set_partitions(5);
  for (const auto& a : all)
    for (const auto& b : all) {
      bool def = true;
      for (int x = 1; x <= 5; ++x)
        for (int y = 1; y <= 5; ++y)
          if (a.same_block(x, y) && !b.same_block(x, y)) def = false;
      EXPECT_EQ(refines(a, b), def);
    }
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_set_partitions(1).size(), 1u);
  EXPECT_EQ(enumerate_set_partitions(3).size(), 5u);
  EXPECT_EQ(enumerate_set_partitions(4).size(), 15u);
}

TEST(Enumerate, MatchesBruteForce) {
  for (int r = 1; r <= 7; ++r) {
    auto all = enumerate_set_partitions(r);
    std::set<std::vector<int>> got;
    for (const auto& p : all) got.insert(std::vector<int>(p.labels().begin(), p.labels().end()));
    EXPECT_EQ(got.size(), all.size()) << "duplicates at r=" << r;
    EXPECT_EQ(got, oracle::all_set_partitions(r));
    EXPECT_EQ(static_cast<long long>(all.size()), oracle::bell(r));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Enumerate, RespectsCap) {
  EXPECT_THROW(enumerate_set_partitions(0), DomainError);
  setenv("PLETHYSM_MAX_R", "5", 1);
  EXPECT_THROW(enumerate_set_partitions(6), ResourceError);
  EXPECT_EQ(enumerate_set_partitions(5).size(), 52u);
  unsetenv("PLETHYSM_MAX_R");
  EXPECT_EQ(enumerate_set_partitions(6).size(), 203u);
}

TEST(FoulkesPoset, Counts) {
  EXPECT_EQ(enumerate_foulkes_poset(2).size(), 3u);
  EXPECT_EQ(enumerate_foulkes_poset(3).size(), 12u);
  EXPECT_EQ(enumerate_foulkes_poset(4).size(), 60u);
}

TEST(FoulkesPoset, DoubleCount) {
  for (int r = 1; r <= 8; ++r) {
    long long expected = 0;
    for (const auto& labels : oracle::all_set_partitions(r)) {
      std::map<int, int> sizes;
      for (int l : labels) ++sizes[l];
      long long prod = 1;
      for (auto [b, s] : sizes) prod *= oracle::bell(s);
      expected += prod;
    }
    EXPECT_EQ(static_cast<long long>(enumerate_foulkes_poset(r).size()), expected) << r;
  }
}

TEST(FoulkesPoset, SortedByDepthAndRefining) {
  auto poset = enumerate_foulkes_poset(5);
  for (std::size_t i = 0; i < poset.size(); ++i) {
    EXPECT_TRUE(refines(poset[i].inner, poset[i].outer));
    if (i) EXPECT_LE(depth(poset[i - 1]), depth(poset[i]));
  }
  std::set<FoulkesPair> unique(poset.begin(), poset.end());
  EXPECT_EQ(unique.size(), poset.size());
}

TEST(FoulkesPair, RejectsNonRefining) {
  EXPECT_THROW(FoulkesPair(SetPartition::one_block(2), SetPartition::singletons(2)), DomainError);
}

TEST(Truncation, ExamplesAtRankThree) {
  FoulkesPair three_in_one(SetPartition::singletons(3), SetPartition::one_block(3));
  EXPECT_FALSE(in_truncated_poset(three_in_one, 2, 3));
  FoulkesPair all_singletons(SetPartition::singletons(3), SetPartition::singletons(3));
  EXPECT_FALSE(in_truncated_poset(all_singletons, 3, 2));
  // F³_{2,3} misses exactly one pair.
  int excluded = 0;
  for (const auto& p : enumerate_foulkes_poset(3)) excluded += !in_truncated_poset(p, 2, 3);
  EXPECT_EQ(excluded, 1);
}

TEST(Truncation, TrivialWhenBoundsAreLarge) {
  for (int r = 1; r <= 5; ++r)
    for (const auto& p : enumerate_foulkes_poset(r)) EXPECT_TRUE(in_truncated_poset(p, r, r));
}

TEST(Truncation, MatchesDefinition) {
  for (const auto& p : enumerate_foulkes_poset(4))
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) {
        bool def = p.outer.block_count() <= n;
        for (const auto& ob : p.outer.blocks()) {
          std::set<int> inner_blocks;
          for (int e : ob) inner_blocks.insert(p.inner.block_of(e));
          def = def && static_cast<int>(inner_blocks.size()) <= m;
        }
        EXPECT_EQ(in_truncated_poset(p, m, n), def);
      }
}

TEST(Depth, Examples) {
  auto p = SetPartition::one_block(3);
  EXPECT_EQ(depth(FoulkesPair(p, p)), 0);
  FoulkesPair nine(parse_set_partition("{1,2,4|3|5,7,8|6,9}"), parse_set_partition("{1,2,3,4|5,6,7,8,9}"));
  EXPECT_EQ(depth(nine), 2);
  EXPECT_EQ(depth(FoulkesPair(SetPartition::singletons(4), SetPartition::one_block(4))), 3);
}

TEST(SetPartition, ShapeAndConsecutive) {
  auto p = SetPartition::consecutive(IntegerPartition{3, 2, 2});
  EXPECT_EQ(p.to_string(), "{1,2,3|4,5|6,7}");
  EXPECT_EQ(p.shape(), (IntegerPartition{3, 2, 2}));
  EXPECT_FALSE(p.has_singleton_block());
  EXPECT_TRUE(p.has_non_singleton_block());
}

TEST(SetPartition, PermutedAndFixed) {
  auto p = parse_set_partition("{1,2|3,4}");
  std::vector<int> swap12 = {1, 0, 2, 3};
  std::vector<int> swap23 = {0, 2, 1, 3};
  EXPECT_TRUE(p.fixed_by(swap12));
  EXPECT_FALSE(p.fixed_by(swap23));
  EXPECT_EQ(p.permuted(swap23).to_string(), "{1,3|2,4}");
}
