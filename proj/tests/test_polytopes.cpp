#include <gtest/gtest.h>

#include "plabica/conjecture.hpp"

using namespace plabica;

namespace {

RationalExpr rx(int i) { return RationalExpr::var(static_cast<VarId>(i)); }

HPolytope cube(int d, long side) {
  std::vector<std::string> names;
  std::vector<Inequality> rows;
  for (int i = 0; i < d; ++i) {
    names.push_back("x" + std::to_string(i));
    Inequality lo{std::vector<mpz_class>(d, 0), 0}, hi{std::vector<mpz_class>(d, 0), side};
    lo.a[i] = 1;
    hi.a[i] = -1;
    rows.push_back(lo);
    rows.push_back(hi);
  }
  return HPolytope(names, rows);
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const std::vector<std::pair<int, int>> kSmall{{2, 4}, {2, 5}, {2, 6}, {3, 6}};

}  // namespace

TEST(Tropical, Examples) {
  auto val = [](std::vector<long> v) {
    return [v](VarId id) { return mpq_class(v.at(static_cast<std::size_t>(id) - 1)); };
  };
  EXPECT_EQ(tropicalize(rx(1) / rx(2)).evaluate(val({4, 7})), -3);
  EXPECT_EQ(tropicalize(rx(1) + rx(2)).evaluate(val({3, 5})), 3);
  EXPECT_EQ(tropicalize(rx(1) * rx(1) + rx(2) / rx(1)).evaluate(val({1, 5})), 2);
  EXPECT_THROW(tropicalize(rx(1) - rx(2)), PreconditionError);
  EXPECT_THROW(tropicalize(rx(1) / (rx(1) + rx(2))), PreconditionError);
  EXPECT_THROW(tropicalize(RationalExpr()), PreconditionError);

  const auto W = superpotential(build_rectangle(2, 4));
  EXPECT_EQ(tropicalize(W).evaluate([](VarId) { return mpq_class(0); }), 0);
}

TEST(Polytope, Cube) {
  const auto c = cube(3, 1);
  const auto V = vertices(c);
  EXPECT_EQ(V.size(), 8u);
  EXPECT_EQ(V, vertices_bruteforce(c));
  EXPECT_EQ(lattice_points(c).size(), 8u);
  EXPECT_EQ(lattice_points(cube(3, 2)).size(), 27u);
  EXPECT_EQ(affine_dimension(V), 3u);
  EXPECT_TRUE(c.contains(Point{mpq_class(1, 2), 0, 1}));
  EXPECT_FALSE(c.contains(Point{mpq_class(3, 2), 0, 1}));
}

TEST(Polytope, Unbounded) {
  const HPolytope quadrant({"x", "y"}, {Inequality{{1, 0}, 0}, Inequality{{0, 1}, 0}});
  EXPECT_THROW(vertices(quadrant), UnboundedPolytope);
  const HPolytope empty({"x"}, {Inequality{{1}, -2}, Inequality{{-1}, 1}});
  EXPECT_TRUE(vertices(empty).empty());
  EXPECT_TRUE(lattice_points(empty).empty());
}

TEST(Polytope, RedundantRows) {
  auto rows = cube(2, 1).rows();
  rows.push_back(Inequality{{1, 1}, 5});
  const HPolytope p({"x0", "x1"}, rows);
  EXPECT_EQ(remove_redundant(p).rows().size(), 4u);
  EXPECT_TRUE(polytopes_equal(p, cube(2, 1)));
}

TEST(Polytope, DoubleDescriptionMatchesBruteForce) {
  for (auto [k, n] : kSmall) {
    const auto gamma = superpotential_polytope(build_rectangle(k, n));
    EXPECT_EQ(vertices(gamma), vertices_bruteforce(gamma)) << k << "," << n;
    const auto gt = gt_polytope(k, n);
    EXPECT_EQ(vertices(gt), vertices_bruteforce(gt));
  }
}

TEST(GelfandTsetlin, Counts) {
  for (auto [k, n] : kSmall) {
    const auto gt = gt_polytope(k, n);
    EXPECT_EQ(gt.dim(), static_cast<std::size_t>(k * (n - k)));
    EXPECT_EQ(static_cast<long>(lattice_points(gt).size()), binom(n, k));
    const auto V = vertices(gt);
    EXPECT_NE(std::find(V.begin(), V.end(), Point(gt.dim(), 0)), V.end());
    for (const auto& v : V)
      for (const auto& c : v) EXPECT_EQ(c.get_den(), 1);
  }
}

TEST(Gamma, BasicShape) {
  for (auto [k, n] : kSmall)
    for (const auto& g : {build_checkboard(k, n), build_rectangle(k, n)}) {
      const auto W = superpotential(g);
      const auto coords = polytope_coordinates(g);
      ASSERT_EQ(coords.size(), static_cast<std::size_t>(k * (n - k)));
      EXPECT_TRUE(tropical_polytope(W, coords, 0).contains(Point(coords.size(), 0)));
      const auto V1 = vertices(tropical_polytope(W, coords, 1));
      EXPECT_EQ(affine_dimension(V1), coords.size());
      auto V2 = V1;
      for (auto& v : V2)
        for (auto& c : v) c *= 2;
      EXPECT_EQ(vertices(tropical_polytope(W, coords, 2)), V2);
      const auto half = tropical_polytope(W, coords, mpq_class(1, 2));
      EXPECT_TRUE(half.contains(Point(coords.size(), 0)));
    }
}

TEST(Gamma, UnimodularMap) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}})
    for (auto f : {OrbitFamily::ch_rot, OrbitFamily::ch_refl, OrbitFamily::dual_ch_rot, OrbitFamily::dual_ch_refl})
      for (int m = 1; m <= n; ++m) {
        const auto F = unimodular_map_F(f, m, k, n);
        ASSERT_TRUE(F.is_unimodular());
        const auto inv = F.inverse();
        const auto g = orbit_graph(f, m, k, n);
        const auto gamma = superpotential_polytope(g);
        const auto gt = gt_polytope(k, n);
        for (const auto& x : lattice_points(gamma)) {
          EXPECT_EQ(inv.apply(F.apply(x)), x);
          EXPECT_TRUE(gt.contains(F.apply(x)));
        }
        const auto derived = tropical_polytope(closed_form_W(f, m, k, n), polytope_coordinates(g), 1);
        EXPECT_TRUE(derived.same_system(gamma));
        EXPECT_TRUE(polytopes_equal(F.image(gamma), gt)) << orbit_family_name(f) << " m=" << m;
      }
}

TEST(Gamma, CheckboardOrbitsAreGt) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
    for (const auto& base : {build_checkboard(k, n), build_family(Family::dual_checkboard, k, n)})
      for (const auto& e : DihedralElement::all(n)) {
        const auto check = check_no_body_is_gt(dihedral_act(e, base));
        EXPECT_TRUE(check.ok()) << orbit_family_name(check.family) << " m=" << check.m;
        EXPECT_EQ(static_cast<long>(check.lattice_points), binom(n, k));
      }
  }
  EXPECT_THROW(check_no_body_is_gt(build_rectangle(3, 6)), PreconditionError);
}

TEST(Gamma, IdentityMapEquality) {
  const auto g = build_checkboard(2, 5);
  const auto P = superpotential_polytope(g);
  const auto Q = tropical_polytope(closed_form_W(OrbitFamily::ch_base, 0, 2, 5), polytope_coordinates(g), 1);
  EXPECT_TRUE(polytopes_equal(P, Q));
  EXPECT_FALSE(polytopes_equal(P, superpotential_polytope(g, 2)));
}

TEST(Conjecture, ScanSmall) {
  for (const auto& g : {build_rectangle(2, 5), build_checkboard(2, 5)}) {
    const auto r = conjecture_scan(g);
    EXPECT_EQ(r.rotations.size(), 5u);
    EXPECT_EQ(r.reflections.size(), 5u);
    EXPECT_TRUE(r.rotations_agree);
    EXPECT_EQ(r.rotations.front().stats.lattice_points, 10u);
    const auto only = conjecture_scan(g, false);
    EXPECT_TRUE(only.reflections.empty());
  }
}
