#include <gtest/gtest.h>

#include <random>

#include "plabica/families.hpp"
#include "plabica/quiver.hpp"

using namespace plabica;

namespace {

void expect_well_formed(const Quiver& q) {
  for (const auto& [a, m] : q.arrows()) {
    EXPECT_GT(m, 0);
    EXPECT_NE(a.first, a.second);
    EXPECT_EQ(q.multiplicity(a.second, a.first), 0) << "2-cycle";
    EXPECT_FALSE(q.is_frozen(a.first) && q.is_frozen(a.second)) << "frozen-frozen arrow";
  }
}

}  // namespace

TEST(Quiver, FromGraph) {
  const auto q = quiver_from_graph(build_rectangle(3, 6));
  EXPECT_EQ(q.vertex_count(), 10u);
  EXPECT_EQ(q.frozen_count(), 6u);
  expect_well_formed(q);

  const auto q24 = quiver_from_graph(build_rectangle(2, 4));
  ASSERT_EQ(q24.vertex_count(), 5u);
  ASSERT_EQ(q24.frozen_count(), 4u);
  for (const auto& [v, f] : q24.vertices()) {
    if (f) continue;
    EXPECT_EQ(q24.in_neighbours(v).size(), 2u);
    EXPECT_EQ(q24.out_neighbours(v).size(), 2u);
  }
  EXPECT_EQ(q24.arrows().size(), 4u);
}

TEST(Quiver, TwoCyclesCancel) {
  Quiver q;
  const KSubset a(4, {1, 2}), b(4, {1, 3});
  q.add_vertex(a, false);
  q.add_vertex(b, false);
  q.add_arrows(a, b, 2);
  q.add_arrows(b, a, 1);
  EXPECT_EQ(q.multiplicity(a, b), 1);
  EXPECT_EQ(q.multiplicity(b, a), 0);
  q.add_arrows(b, a, 1);
  EXPECT_TRUE(q.arrows().empty());
  EXPECT_THROW(q.add_arrows(a, a), PreconditionError);
}

// The worked mutation of the quiver-mutation figure; frozen: A, D, E.
TEST(Quiver, FigureExample) {
  const KSubset A(6, {1}), B(6, {2}), W(6, {3}), D(6, {4}), E(6, {5}), F(6, {6});
  Quiver q;
  for (auto [v, f] : {std::pair{A, true}, {B, false}, {W, false}, {D, true}, {E, true}, {F, false}}) q.add_vertex(v, f);
  q.add_arrows(A, B);
  q.add_arrows(B, W, 2);
  q.add_arrows(W, D);
  q.add_arrows(D, F);
  q.add_arrows(F, W);
  q.add_arrows(B, E);
  Quiver expected;
  for (const auto& [v, f] : q.vertices()) expected.add_vertex(v, f);
  expected.add_arrows(A, B);
  expected.add_arrows(W, B, 2);
  expected.add_arrows(D, W);
  expected.add_arrows(W, F);
  expected.add_arrows(B, E);
  expected.add_arrows(B, D, 2);
  const auto m = mutate_quiver(q, W);
  EXPECT_EQ(m, expected);
  EXPECT_EQ(mutate_quiver(m, W), q);
  EXPECT_THROW(mutate_quiver(q, A), PreconditionError);
  EXPECT_THROW(mutate_quiver(q, KSubset(6, {1, 2})), PreconditionError);
}

TEST(Quiver, Involution) {
  std::mt19937 rng(7);
  auto g = build_checkboard(3, 7);
  const auto q = quiver_from_graph(g);
  std::vector<KSubset> mut;
  for (const auto& [v, f] : q.vertices())
    if (!f) mut.push_back(v);
  for (int t = 0; t < 20; ++t) {
    const auto& w = mut[rng() % mut.size()];
    const auto m = mutate_quiver(q, w);
    expect_well_formed(m);
    EXPECT_EQ(mutate_quiver(m, w), q);
  }
}

TEST(Quiver, SquareFacesHaveTwoInTwoOut) {
  for (auto [k, n] : {std::pair{3, 6}, {4, 8}, {3, 7}}) {
    const auto g = build_checkboard(k, n);
    const auto q = quiver_from_graph(g);
    for (const auto& l : mutable_labels(g)) {
      EXPECT_EQ(q.in_neighbours(l).size(), 2u);
      EXPECT_EQ(q.out_neighbours(l).size(), 2u);
      for (const auto& [v, m] : q.in_neighbours(l)) EXPECT_EQ(m, 1);
    }
  }
}

TEST(Quiver, Compatibility) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}}) {
    for (auto f : {Family::checkboard, Family::dual_checkboard, Family::rectangle, Family::dual_rectangle}) {
      auto g = build_family(f, k, n);
      auto q = quiver_from_graph(g);
      EXPECT_EQ(q.vertex_count(), size_t(k * (n - k) + 1));
      EXPECT_EQ(q.frozen_count(), size_t(n));
      for (const auto& l : mutable_labels(g)) {
        auto r = mutate_with_label(g, l);
        EXPECT_EQ(quiver_from_graph(r.graph), mutate_quiver(q, l).relabelled(l, r.added)) << l.to_string();
        EXPECT_EQ(mutate_quiver(mutate_quiver(q, l), l), q);
      }
    }
  }
}
