// Acceptance run: one PASS/FAIL line per criterion, INFO lines for side results.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plabica.hpp"

using namespace plabica;

namespace {

using KN = std::pair<int, int>;

struct Checker {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

int failed = 0;

void criterion(int id, const std::string& name, const std::function<void(Checker&)>& body) {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures++;
    if (c.first.empty()) c.first = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = c.failures == 0 && c.checks > 0;
  if (!ok) ++failed;
  std::printf("%s %d %s (%zu checks, %.1fs)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), c.checks, secs, ok ? "" : ": ",
              ok ? "" : (c.first.empty() ? "no checks ran" : c.first).c_str());
  std::fflush(stdout);
}

void info(const std::string& s) { std::printf("INFO %s\n", s.c_str()); }

std::string kn(int k, int n) { return "(" + std::to_string(k) + "," + std::to_string(n) + ")"; }

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Distinct graphs in the D_n orbit of g, one per label collection.
std::vector<PlabicGraph> orbit_graphs(const PlabicGraph& g) {
  std::set<LabelCollection> seen;
  std::vector<PlabicGraph> out;
  for (const auto& e : DihedralElement::all(g.n())) {
    auto h = dihedral_act(e, g);
    if (seen.insert(face_labels(h)).second) out.push_back(std::move(h));
  }
  return out;
}

const Family kFamilies[] = {Family::rectangle, Family::checkboard, Family::dual_rectangle, Family::dual_checkboard};
const std::vector<KN> kFive{{2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}};

}  // namespace

int main() {
  criterion(1, "family correctness for n <= 8", [](Checker& c) {
    for (int n = 4; n <= 8; ++n)
      for (int k = 2; k <= n - 2; ++k)
        for (auto f : kFamilies) {
          const auto g = build_family(f, k, n);
          const std::string tag = std::string(family_name(f)) + kn(k, n);
          c(is_reduced(g).reduced, tag + " not reduced");
          c(trip_permutation(g) == pi_kn(k, n), tag + " trip permutation");
          c(g.inner_face_count() == k * (n - k) + 1, tag + " inner face count");
          c(face_labels(g) == family_label_formula(f, k, n), tag + " labels differ from formula");
        }
    for (int n = 4; n <= 8; ++n)
      for (int k = 2; k <= n - 2; ++k) {
        const auto grid = build_checkboard_grid(k, n);
        const auto labels = face_label_vector(grid.graph);
        for (const auto& [pos, face] : grid.grid_faces)
          c(labels[static_cast<std::size_t>(face)] == checkboard_label(k, n, pos.first, pos.second), "ch" + kn(k, n) + " grid label");
        const auto dual = build_dual_checkboard_grid(k, n);
        const auto dl = face_label_vector(dual.graph);
        for (const auto& [pos, face] : dual.grid_faces)
          c(dl[static_cast<std::size_t>(face)] == dual_checkboard_label(k, n, pos.first, pos.second), "dual-ch" + kn(k, n) + " grid label");
      }
  });

  criterion(2, "weak-separation preservers are exactly D_n (n = 5, 6)", [](Checker& c) {
    for (int n = 5; n <= 6; ++n)
      for (int k = 2; k <= n - 2; ++k) {
        const WeakSeparationTable table(n, k);
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 1);
        std::set<DihedralElement> found;
        std::size_t count = 0;
        do {
          const Permutation rho(p);
          if (!table.preserved_by(rho)) continue;
          ++count;
          const auto d = as_dihedral(rho);
          c(d.has_value(), "non-dihedral preserver for n=" + std::to_string(n));
          if (d) found.insert(*d);
        } while (std::next_permutation(p.begin(), p.end()));
        c(count == static_cast<std::size_t>(2 * n) && found.size() == count, "preserver count " + std::to_string(count) + " for " + kn(k, n));
        info("preservers " + kn(k, n) + ": " + std::to_string(count));
      }
  });

  criterion(3, "orbits and stabilizers for n <= 9", [](Checker& c) {
    for (int n = 5; n <= 9; ++n)
      for (int k = 2; k <= n - 2; ++k) {
        const std::string tag = kn(k, n);
        const auto ch = face_labels(build_checkboard(k, n));
        const auto dch = face_labels(build_family(Family::dual_checkboard, k, n));
        c(stabilizer(ch) == predicted_checkboard_stabilizer(k, n, false), tag + " checkboard stabilizer");
        c(stabilizer(dch) == predicted_checkboard_stabilizer(k, n, true), tag + " dual checkboard stabilizer");
        std::set<LabelCollection> a, b;
        for (const auto& m : orbit(ch)) a.insert(m.labels);
        for (const auto& m : orbit(dch)) b.insert(m.labels);
        std::set<LabelCollection> both = a;
        both.insert(b.begin(), b.end());
        c(both.size() == static_cast<std::size_t>(n), tag + " orbit union size " + std::to_string(both.size()));
        const auto rec = build_rectangle(k, n);
        c(face_labels(dihedral_act(DihedralElement::tau(n) * DihedralElement::sigma(n), rec)) ==
              face_labels(build_family(Family::dual_rectangle, k, n)),
          tag + " dual rectangle is tau sigma rectangle");
        if (k % 2 == 0) c(DihedralElement::rotation(n, k / 2).apply(ch) == dch, tag + " dual checkboard is sigma^{k/2} checkboard");
        if (k % 2 == 1 && (n - k) % 2 == 1) {
          bool disjoint = true;
          for (const auto& x : b) disjoint = disjoint && !a.count(x);
          c(disjoint, tag + " orbits should be disjoint");
        }
      }
    std::ostringstream rec;
    for (int n = 5; n <= 9; ++n)
      for (int k = 2; k <= n - 2; ++k) rec << " " << kn(k, n) << ":" << stabilizer(build_rectangle(k, n)).size();
    info("rectangle stabilizer orders" + rec.str() + " (order 2 at k = 2 and k = n-2)");
    info("checkboard stabilizer order at (2,4): " + std::to_string(stabilizer(build_checkboard(2, 4)).size()) + " (formulas assume n > 4)");
    std::set<LabelCollection> u;
    for (const auto& m : orbit(build_checkboard(2, 4))) u.insert(m.labels);
    for (const auto& m : orbit(build_family(Family::dual_checkboard, 2, 4))) u.insert(m.labels);
    info("checkboard orbit union at (2,4): " + std::to_string(u.size()));
  });

  criterion(4, "quiver mutation compatibility on all orbit members", [](Checker& c) {
    for (auto [k, n] : kFive)
      for (auto f : kFamilies)
        for (const auto& g : orbit_graphs(build_family(f, k, n))) {
          const auto q = quiver_from_graph(g);
          for (const auto& I : mutable_labels(g)) {
            const auto r = mutate_with_label(g, I);
            c(quiver_from_graph(r.graph) == mutate_quiver(q, I).relabelled(I, r.added),
              std::string(family_name(f)) + kn(k, n) + " at " + I.to_string());
          }
        }
  });

  criterion(5, "exact cluster arithmetic", [](Checker& c) {
    std::mt19937_64 rng(20240501);
    std::size_t exprs = 0;
    for (auto [k, n] : kFive)
      for (auto f : kFamilies) {
        const auto g = build_family(f, k, n);
        const auto s = seed_from_graph(g, false);
        const std::string tag = std::string(family_name(f)) + kn(k, n);
        for (const auto& I : mutable_labels(g)) {
          const auto J = I.complement();
          const auto Jp = exchanged_label(s.quiver, J);
          Polynomial in(1L), out(1L);
          for (const auto& [v, m] : s.quiver.in_neighbours(J)) in *= generic_minor(v).pow(static_cast<unsigned>(m));
          for (const auto& [v, m] : s.quiver.out_neighbours(J)) out *= generic_minor(v).pow(static_cast<unsigned>(m));
          c(generic_minor(J) * generic_minor(Jp) == in + out, tag + " three-term relation at " + J.to_string());
        }
        PluckerExpander ex(g);
        std::vector<std::pair<KSubset, RationalExpr>> all;
        for (const auto& J : all_k_subsets(n, n - k)) {
          all.emplace_back(J, ex.express(J));
          c(all.back().second.is_positive_laurent(), tag + " not a positive Laurent polynomial: " + J.to_string());
        }
        exprs += all.size();
        const auto R = right_labels(g).labels();
        for (int t = 0; t < 20; ++t) {
          const auto p = GrassmannPoint::random(k, n, rng, R);
          const auto val = p.valuation();
          for (const auto& [J, e] : all) c(e.evaluate(val) == p.normalized(J), tag + " numeric mismatch at " + J.to_string());
        }
      }
    info("expressions checked on 20 random points each: " + std::to_string(exprs));
  });

  criterion(6, "closed superpotential formulas", [](Checker& c) {
    for (auto [k, n] : kFive) {
      c(closed_form_W(OrbitFamily::ch_base, 0, k, n) == superpotential(build_checkboard(k, n)), "ch-base" + kn(k, n));
      for (auto f : {OrbitFamily::ch_rot, OrbitFamily::ch_refl, OrbitFamily::dual_ch_rot, OrbitFamily::dual_ch_refl})
        for (int m = 1; m <= n; ++m) {
          const auto w = closed_form_W(f, m, k, n);
          const std::string tag = std::string(orbit_family_name(f)) + " m=" + std::to_string(m) + " " + kn(k, n);
          c(w == superpotential(orbit_graph(f, m, k, n)), tag + " differs from search");
          if (f == OrbitFamily::ch_rot) c(w == checkboard_superpotential_by_diagonals(k, n, m % n), tag + " differs from diagonal route");
        }
    }
  });

  criterion(7, "Newton-Okounkov bodies of the checkboard orbits are GT polytopes", [](Checker& c) {
    for (auto [k, n] : std::vector<KN>{{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
      std::size_t members = 0;
      std::set<LabelCollection> seen;
      for (const auto& base : {build_checkboard(k, n), build_family(Family::dual_checkboard, k, n)})
        for (const auto& g : orbit_graphs(base)) {
          if (!seen.insert(face_labels(g)).second) continue;
          ++members;
          const auto r = check_no_body_is_gt(g);
          const std::string tag = std::string(orbit_family_name(r.family)) + " m=" + std::to_string(r.m) + " " + kn(k, n);
          c(r.unimodular, tag + " F not unimodular");
          c(r.equal, tag + " F(Gamma) != GT");
          c(static_cast<long>(r.lattice_points) == binom(n, k), tag + " lattice points " + std::to_string(r.lattice_points));
          c(static_cast<long>(r.gt_lattice_points) == binom(n, k), tag + " GT lattice points");
        }
      info("orbit members at " + kn(k, n) + ": " + std::to_string(members) + ", lattice points " + std::to_string(binom(n, k)));
    }
  });

  criterion(8, "conjecture scan self-consistency at (2,5)", [](Checker& c) {
    for (const auto& [name, g] : std::vector<std::pair<std::string, PlabicGraph>>{{"rec", build_rectangle(2, 5)}, {"ch", build_checkboard(2, 5)}}) {
      const auto r = conjecture_scan(g);
      c(r.rotations.size() == 5, name + " rotation count");
      c(r.rotations_agree, name + " rotations disagree");
      c(r.reflections.size() == 5, name + " reflections not reported");
      const auto& s = r.rotations.front().stats;
      info(name + "(2,5) rotations: lattice points " + std::to_string(s.lattice_points) + ", vertices " + std::to_string(s.vertices) +
           ", r=2 lattice points " + std::to_string(s.lattice_points_r2) + "; reflections listed separately, same statistics: " +
           (r.reflections_match_rotation_stats ? "yes" : "no") + " (no equivalence claimed)");
    }
  });

  return failed == 0 ? 0 : 1;
}
