#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cutree/canonical.hpp"
#include "cutree/construction.hpp"
#include "cutree/enumerate.hpp"
#include "cutree/families.hpp"
#include "cutree/minor.hpp"
#include "cutree/tree_ops.hpp"
#include "oracles.hpp"

namespace cutree {
namespace {

std::vector<RootedTree> rooted_trees_up_to(int max_m) {
  std::vector<RootedTree> out;
  for (int m = 0; m <= max_m; ++m) {
    for (auto& t : enumerate_rooted_trees(m)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<RootedTree> unrooted_trees_up_to(int max_m) {
  std::vector<RootedTree> out;
  std::set<std::string> seen;
  for (const RootedTree& t : rooted_trees_up_to(max_m)) {
    if (seen.insert(unrooted_code(t).text).second) out.push_back(t);
  }
  return out;
}

TEST(RootedContraction, Examples) {
  EXPECT_TRUE(is_rooted_contraction(new_path(1), new_path(2)));
  EXPECT_FALSE(is_rooted_contraction(new_spider({1, 1}), new_path(2)));
  EXPECT_FALSE(is_rooted_contraction(new_path(3), new_spider({1, 1, 1})));
  EXPECT_TRUE(is_rooted_contraction(RootedTree::single_vertex(), new_spider({2, 3})));
  EXPECT_THROW(is_rooted_contraction(RootedTree{}, new_path(1)), InvalidArgument);
  EXPECT_THROW(is_rooted_contraction(new_path(1), RootedTree{}), InvalidArgument);
}

TEST(RootedContraction, AllSizeThreeTreesInsidePhiTree) {
  const RootedTree host = ramify(phi_sequence(), 3);
  const auto guests = enumerate_rooted_trees(3);
  ASSERT_EQ(guests.size(), 4u);
  for (const RootedTree& g : guests) {
    EXPECT_TRUE(is_rooted_contraction(g, host)) << canonical_code(g).text;
    EXPECT_TRUE(brute_force_contraction(g, host)) << canonical_code(g).text;
  }
}

TEST(RootedContraction, GuestDegreeLimit) {
  const RootedTree star = new_spider(std::vector<int>(21, 1));
  EXPECT_THROW(is_rooted_contraction(star, star), ResourceLimit);
  const RootedTree ok = new_spider(std::vector<int>(20, 1));
  EXPECT_TRUE(is_rooted_contraction(ok, ok));
}

TEST(BruteForce, ReflexiveAndStarClosure) {
  for (const RootedTree& t : rooted_trees_up_to(5)) EXPECT_TRUE(brute_force_contraction(t, t));
  EXPECT_FALSE(brute_force_contraction(new_path(3), new_spider({1, 1, 1})));
}

TEST(BruteForce, HostCap) {
  EXPECT_THROW(brute_force_contraction(new_path(1), new_path(10)), ResourceLimit);
  EXPECT_NO_THROW(brute_force_contraction(new_path(1), new_path(10), OracleLimits{10}));
}

TEST(RootedContraction, AgreesWithOracleOnAllSmallHosts) {
  const auto trees = rooted_trees_up_to(7);
  long disagreements = 0;
  long pairs = 0;
  for (const RootedTree& host : trees) {
    const auto closure = rooted_contraction_closure(host);
    for (const RootedTree& guest : trees) {
      if (guest.edge_count() > host.edge_count()) continue;
      ++pairs;
      const bool expected = closure.count(canonical_code(guest).text) > 0;
      if (is_rooted_contraction(guest, host) != expected) ++disagreements;
    }
  }
  EXPECT_GT(pairs, 0);
  EXPECT_EQ(disagreements, 0);
}

TEST(Witness, Examples) {
  const RootedTree t = parse_code("((())(()()))");
  const auto self = contraction_witness(t, t);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->size(), 0);

  const auto one = contraction_witness(new_path(1), new_path(2));
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->size(), 1);
  EXPECT_FALSE(contraction_witness(new_spider({1, 1}), new_path(2)).has_value());
}

TEST(Witness, PrefersKeepingEarlyEdges) {
  // Both edges of a 2-path are valid choices; the later edge is contracted.
  const auto w = contraction_witness(new_path(1), new_path(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->contracted, (std::vector<Vertex>{2}));
}

TEST(Witness, ReplaysAgainstGeneralizedComb) {
  const RootedTree host = ramify(g_sequence(), 4);
  for (const RootedTree& guest : enumerate_rooted_trees(4)) {
    const auto w = contraction_witness(guest, host);
    ASSERT_TRUE(w.has_value()) << canonical_code(guest).text;
    EXPECT_EQ(w->size(), host.edge_count() - guest.edge_count());
    EXPECT_EQ(canonical_code(testing::replay_one_by_one(host, w->contracted)), canonical_code(guest));
  }
}

TEST(Witness, SoundOnAllSmallPairs) {
  const auto trees = rooted_trees_up_to(6);
  std::mt19937 rng(17);
  for (const RootedTree& host : trees) {
    for (const RootedTree& guest : trees) {
      const auto w = contraction_witness(guest, host);
      EXPECT_EQ(w.has_value(), is_rooted_contraction(guest, host));
      if (!w) continue;
      ASSERT_EQ(w->size(), host.edge_count() - guest.edge_count());
      // Any contraction order gives the same result.
      std::vector<Vertex> order = w->contracted;
      std::shuffle(order.begin(), order.end(), rng);
      EXPECT_EQ(canonical_code(testing::replay_one_by_one(host, order)), canonical_code(guest));
      EXPECT_EQ(canonical_code(apply_witness(host, *w)), canonical_code(guest));
    }
  }
}

TEST(Order, ReflexiveAndTransitive) {
  const auto trees = rooted_trees_up_to(5);
  for (const RootedTree& t : trees) EXPECT_TRUE(is_rooted_contraction(t, t));
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
  int checked = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const RootedTree& a = trees[pick(rng)];
    const RootedTree& b = trees[pick(rng)];
    const RootedTree& c = trees[pick(rng)];
    if (is_rooted_contraction(a, b) && is_rooted_contraction(b, c)) {
      ++checked;
      EXPECT_TRUE(is_rooted_contraction(a, c));
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Order, SizeMonotoneAndAntisymmetric) {
  const auto trees = rooted_trees_up_to(6);
  for (const RootedTree& host : trees) {
    for (const RootedTree& guest : trees) {
      if (!is_rooted_contraction(guest, host)) continue;
      EXPECT_LE(guest.edge_count(), host.edge_count());
      if (guest.edge_count() == host.edge_count()) {
        EXPECT_EQ(canonical_code(guest), canonical_code(host));
      }
    }
  }
}

TEST(Order, DownwardClosedAlongWitnessEdges) {
  const auto trees = rooted_trees_up_to(6);
  for (const RootedTree& host : trees) {
    for (const RootedTree& guest : trees) {
      const auto w = contraction_witness(guest, host);
      if (!w) continue;
      for (Vertex e : w->contracted) {
        EXPECT_TRUE(is_rooted_contraction(guest, contract_edge(host, e)));
      }
    }
  }
}

TEST(Unrooted, Examples) {
  EXPECT_TRUE(is_minor_unrooted(new_path(2), new_spider({1, 1, 1})));
  EXPECT_FALSE(is_minor_unrooted(new_spider({1, 1, 1, 1}), new_path(4)));
  for (const RootedTree& t : rooted_trees_up_to(5)) EXPECT_TRUE(is_minor_unrooted(t, t));
}

TEST(Unrooted, WitnessNamesARerootingOfTheGuest) {
  const RootedTree guest = new_path(2);
  const RootedTree host = new_spider({1, 1, 1});
  const auto w = minor_witness(guest, host);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(unrooted_code(w->rooted_guest), unrooted_code(guest));
  EXPECT_EQ(canonical_code(apply_witness(host, w->contraction)), canonical_code(w->rooted_guest));
}

TEST(Unrooted, MatchesClosureWithDeletions) {
  const auto trees = unrooted_trees_up_to(5);
  int mismatches = 0;
  for (const RootedTree& host : trees) {
    const auto closure = testing::connected_minor_closure(host);
    for (const RootedTree& guest : trees) {
      const bool expected = closure.count(unrooted_code(guest).text) > 0;
      if (is_minor_unrooted(guest, host) != expected) ++mismatches;
    }
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(Unrooted, IgnoresHostRootPlacement) {
  const auto trees = unrooted_trees_up_to(6);
  for (const RootedTree& host : trees) {
    for (const RootedTree& guest : trees) {
      const bool base = is_minor_unrooted(guest, host);
      for (Vertex r = 1; r < host.vertex_count(); ++r) {
        ASSERT_EQ(is_minor_unrooted(guest, reroot(host, r)), base);
      }
    }
  }
}

}  // namespace
}  // namespace cutree
