#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "plabica/grassmann.hpp"
#include "plabica/mutation_search.hpp"

using namespace plabica;

namespace {

using Pos = std::pair<int, int>;

Polynomial minor_power_product(const std::vector<std::pair<KSubset, int>>& vs) {
  Polynomial p(1L);
  for (const auto& [v, m] : vs) p *= generic_minor(v).pow(static_cast<unsigned>(m));
  return p;
}

std::vector<PlabicGraph> sample_graphs(int k, int n) {
  return {build_checkboard(k, n), build_rectangle(k, n), build_family(Family::dual_checkboard, k, n),
          dihedral_act(DihedralElement(n, 1, true), build_checkboard(k, n))};
}

}  // namespace

TEST(Seed, FromGraph) {
  const auto s = seed_from_graph(build_checkboard(3, 6));
  EXPECT_EQ(s.variables.size(), 10u);
  int ones = 0;
  for (const auto& [J, e] : s.variables) ones += e == RationalExpr(1L) ? 1 : 0;
  EXPECT_EQ(ones, 1);
  EXPECT_EQ(s.variable(frozen_right_label(6, 3, 6)), RationalExpr(1L));
  std::set<KSubset> frozen;
  for (const auto& [J, f] : s.quiver.vertices())
    if (f) frozen.insert(J);
  std::set<KSubset> expected;
  for (int i = 1; i <= 6; ++i) expected.insert(frozen_right_label(i, 3, 6));
  EXPECT_EQ(frozen, expected);
  for (const auto& [J, e] : s.variables) EXPECT_EQ(J.size(), 3);
}

TEST(Seed, RelabelledByDihedralAction) {
  const auto G = build_checkboard(3, 7);
  const auto s = seed_from_graph(G, false);
  for (const auto& g : {DihedralElement::sigma(7), DihedralElement(7, 2, true)}) {
    const auto t = seed_from_graph(dihedral_act(g, G), false);
    ASSERT_EQ(t.variables.size(), s.variables.size());
    for (const auto& [J, e] : s.variables) EXPECT_EQ(t.variable(g.apply(J)), relabel_expr(e, g));
  }
}

// p_{Sac} p_{Sbd} = p_{Sab} p_{Scd} + p_{Sbc} p_{Sad}, in the polynomial ring of the matrix entries.
TEST(Seed, ThreeTermRelation) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {2, 6}}) {
    for (const auto& g : sample_graphs(k, n)) {
      const auto s = seed_from_graph(g, false);
      for (const auto& I : mutable_labels(g)) {
        const auto J = I.complement();
        const auto ins = s.quiver.in_neighbours(J);
        const auto outs = s.quiver.out_neighbours(J);
        ASSERT_EQ(ins.size(), 2u);
        ASSERT_EQ(outs.size(), 2u);
        const auto Jp = exchanged_label(s.quiver, J);
        EXPECT_EQ(Jp, mutate_with_label(g, I).added.complement());
        const auto S = J & Jp;
        const auto ac = J - S, bd = Jp - S;
        ASSERT_EQ(ac.size(), 2);
        ASSERT_EQ(bd.size(), 2);
        for (const auto* side : {&ins, &outs})
          for (const auto& [v, m] : *side) {
            EXPECT_EQ((v & S), S);
            EXPECT_EQ(((v - S) & ac).size(), 1);
            EXPECT_EQ(((v - S) & bd).size(), 1);
          }
        EXPECT_EQ(generic_minor(J) * generic_minor(Jp), minor_power_product(ins) + minor_power_product(outs))
            << J.to_string() << " " << Jp.to_string();
        const auto t = mutate_seed(s, J);
        RationalExpr in(1L), out(1L);
        for (const auto& [v, m] : ins) in *= s.variable(v);
        for (const auto& [v, m] : outs) out *= s.variable(v);
        EXPECT_EQ(t.variable(Jp) * s.variable(J), in + out);
      }
    }
  }
}

TEST(Seed, MutationInvolution) {
  for (auto [k, n] : {std::pair{3, 6}, {2, 5}, {3, 7}}) {
    const auto g = build_checkboard(k, n);
    const auto s = seed_from_graph(g);
    for (const auto& I : mutable_labels(g)) {
      const auto J = I.complement();
      const auto t = mutate_seed(s, J);
      const auto Jp = exchanged_label(s.quiver, J);
      const auto u = mutate_seed(t, Jp);
      EXPECT_EQ(u.quiver, s.quiver);
      EXPECT_EQ(u.variables, s.variables);
    }
  }
  const auto s = seed_from_graph(build_checkboard(3, 6));
  EXPECT_THROW(mutate_seed(s, frozen_right_label(1, 3, 6)), PreconditionError);
  EXPECT_THROW(mutate_seed(s, KSubset(6, {1, 3, 5})), PreconditionError);
}

// Random mutation walks stay Laurent with positive coefficients.
TEST(Seed, LaurentPositivity) {
  std::mt19937 rng(11);
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}}) {
    for (int walk = 0; walk < 6; ++walk) {
      auto g = build_checkboard(k, n);
      auto s = seed_from_graph(g);
      for (int step = 0; step < 10; ++step) {
        const auto mut = mutable_labels(g);
        const auto& I = mut[rng() % mut.size()];
        const auto r = mutate_with_label(g, I);
        s = mutate_seed(s, I.complement());
        g = r.graph;
        ASSERT_TRUE(s.has(r.added.complement()));
        for (const auto& [J, e] : s.variables) ASSERT_TRUE(e.is_positive_laurent()) << J.to_string() << " = " << expr_text(e, n);
      }
    }
  }
}

TEST(Express, DepthZero) {
  const auto g = build_checkboard(3, 6);
  for (const auto& J : right_labels(g)) EXPECT_EQ(express_plucker(g, J), plucker_symbol(J, 3));
  PluckerExpander ex(g);
  EXPECT_TRUE(ex.path_to(KSubset(6, {2, 3, 5})).empty());
  EXPECT_THROW(ex.express(KSubset(6, {1, 2})), PreconditionError);
}

TEST(Express, ExampleSequenceForJ3Plus) {
  const KSubset target = superpotential_label(3, 3, 6);
  auto w = checkboard_walker(3, 6, 0);
  w.mutate(2, 1);
  w.mutate(1, 1);
  EXPECT_EQ(w.mutate(2, 2), target);
  const auto bfs = express_plucker(build_checkboard(3, 6), target);
  EXPECT_EQ(w.seed().variable(target), bfs);  // path independence
  PluckerExpander ex(build_checkboard(3, 6));
  EXPECT_EQ(ex.path_to(target).size(), 3u);
  EXPECT_TRUE(bfs.is_positive_laurent());
}

TEST(Express, NumericAgreement) {
  std::mt19937_64 rng(99);
  for (auto [k, n] : {std::pair{3, 6}, {2, 5}, {2, 6}}) {
    for (const auto& g : sample_graphs(k, n)) {
      PluckerExpander ex(g);
      std::vector<std::pair<KSubset, RationalExpr>> exprs;
      for (const auto& J : all_k_subsets(n, n - k)) exprs.emplace_back(J, ex.express(J));
      const auto R = right_labels(g).labels();
      for (int t = 0; t < 20; ++t) {
        const auto p = GrassmannPoint::random(k, n, rng, R);
        const auto val = p.valuation();
        for (const auto& [J, e] : exprs) {
          ASSERT_TRUE(e.is_positive_laurent()) << J.to_string();
          ASSERT_EQ(e.evaluate(val), p.normalized(J)) << J.to_string();
        }
      }
    }
  }
}

TEST(Express, BudgetExceeded) {
  const auto g = build_rectangle(3, 7);
  const auto far = KSubset(7, {1, 3, 5, 7});
  EXPECT_THROW(express_plucker(g, far, 0), BudgetExceeded);
  EXPECT_NO_THROW(express_plucker(g, far, 16));
}

TEST(Diagonal, PaperTables) {
  EXPECT_EQ(diagonal_sequence(DiagonalKind::down, -2, 5, 9), (std::vector<Pos>{{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}}));
  EXPECT_EQ(diagonal_sequence(DiagonalKind::up, 0, 5, 9), (std::vector<Pos>{{1, 2}, {2, 3}, {3, 4}, {3, 3}, {2, 2}, {1, 1}}));
  EXPECT_THROW(diagonal_sequence(DiagonalKind::down, -1, 5, 9), PreconditionError);
  EXPECT_THROW(diagonal_sequence(DiagonalKind::down, -4, 5, 9), PreconditionError);
  EXPECT_THROW(diagonal_sequence(DiagonalKind::down, 4, 5, 9), PreconditionError);
}

// Down: last face carries sigma^{d/2} J_k^+; up: sigma^{-d/2} J_n^+.
TEST(Diagonal, LastLabel) {
  for (auto [k, n] : {std::pair{3, 6}, {4, 8}, {5, 9}, {3, 8}, {2, 6}}) {
    for (int d = 2 - k; d <= n - k - 2; ++d) {
      if (d % 2 != 0) continue;
      for (auto kind : {DiagonalKind::down, DiagonalKind::up}) {
        auto w = checkboard_walker(k, n, 0);
        KSubset last;
        for (auto [i, j] : diagonal_sequence(kind, d, k, n)) last = w.mutate(i, j);
        const auto expected = kind == DiagonalKind::down ? superpotential_label(k + d / 2, k, n) : superpotential_label(n - d / 2, k, n);
        EXPECT_EQ(last, expected) << "k=" << k << " n=" << n << " d=" << d;
      }
    }
  }
}

// The first half of a downward sequence may run in any order.
TEST(Diagonal, FirstHalfOrderIndependent) {
  std::mt19937 rng(3);
  for (auto [k, n] : {std::pair{4, 8}, {5, 9}}) {
    for (int d = 2 - k; d <= n - k - 2; d += 2) {
      if (d % 2 != 0) continue;
      auto seq = diagonal_sequence(DiagonalKind::down, d, k, n);
      std::size_t first = 0;
      for (auto [i, j] : seq) first += (i - j == d + 1) ? 1 : 0;
      auto ref = checkboard_walker(k, n, 0);
      for (auto [i, j] : seq) ref.mutate(i, j);
      for (int t = 0; t < 4; ++t) {
        std::shuffle(seq.begin(), seq.begin() + static_cast<long>(first), rng);
        auto w = checkboard_walker(k, n, 0);
        for (auto [i, j] : seq) w.mutate(i, j);
        EXPECT_EQ(w.seed().variables, ref.seed().variables);
      }
    }
  }
}

TEST(Diagonal, AgreesWithSearch) {
  for (auto [k, n] : {std::pair{3, 6}, {2, 5}, {3, 7}}) {
    for (int m = 0; m < n; ++m) {
      const auto diag = checkboard_plus_expressions(k, n, m);
      ASSERT_EQ(diag.size(), static_cast<std::size_t>(n));
      PluckerExpander ex(dihedral_act(DihedralElement::rotation(n, m), build_checkboard(k, n)));
      for (const auto& [J, e] : diag) EXPECT_EQ(e, ex.express(J)) << J.to_string();
    }
  }
}
