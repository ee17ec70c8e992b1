// plabica: command-line front end. Graph-consuming commands read graph JSON
// from --in (default stdin) and write JSON to stdout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include <plabica.hpp>

using namespace plabica;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;

std::string input_path = "-";

json read_input() {
  std::string text;
  if (input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input_path);
    require(static_cast<bool>(in), "cannot open " + input_path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("input is not JSON: ") + e.what());
  }
}

PlabicGraph read_graph() { return graph_from_json(read_input()); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

/// Accepts "1,4,6", "{1,4,6}" or "[1,4,6]".
KSubset parse_label(const std::string& text, int n) {
  std::string s;
  for (char c : text) s += (c == '{' || c == '}' || c == '[' || c == ']') ? ' ' : (c == ',' ? ' ' : c);
  std::istringstream is(s);
  std::vector<int> el;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == tok.size(), "malformed label '" + text + "'");
    el.push_back(x);
  }
  return KSubset(n, std::span<const int>(el));
}

json labels_document(const PlabicGraph& g) {
  const auto left = face_labels(g);
  json doc = to_json(left);
  doc["right_labels"] = to_json(left.complemented())["labels"];
  return doc;
}

json scan_document(const ScanReport& r) {
  auto entries = [](const std::vector<ScanEntry>& es) {
    json out = json::array();
    for (const auto& e : es)
      out.push_back({{"element", to_json(e.element)},
                     {"lattice_points", e.stats.lattice_points},
                     {"vertices", e.stats.vertices},
                     {"lattice_points_r2", e.stats.lattice_points_r2}});
    return out;
  };
  return {{"rotations", entries(r.rotations)},
          {"rotations_agree", r.rotations_agree},
          {"reflections", entries(r.reflections)},
          {"reflections_match_rotation_stats", r.reflections_match_rotation_stats},
          {"note", "reflections are listed separately; matching statistics do not imply equivalence"}};
}

int check_gt_union(int k, int n) {
  require_grassmannian_range(k, n);
  std::set<LabelCollection> seen;
  int total = 0, good = 0;
  for (auto f : {OrbitFamily::ch_rot, OrbitFamily::ch_refl, OrbitFamily::dual_ch_rot, OrbitFamily::dual_ch_refl})
    for (int m = 1; m <= n; ++m) {
      const auto g = orbit_graph(f, m, k, n);
      if (!seen.insert(face_labels(g)).second) continue;
      const auto c = check_no_body_is_gt(g);
      ++total;
      good += c.ok() ? 1 : 0;
      std::cout << orbit_family_name(c.family) << " m=" << c.m << ": " << (c.ok() ? "equivalent" : "NOT equivalent") << " ("
                << c.lattice_points << " lattice points, GT " << c.gt_lattice_points << ")\n";
    }
  std::cout << good << "/" << total << " equivalent\n";
  return good == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plabic graphs, superpotentials and Newton-Okounkov bodies for Gr(k,n)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--in", input_path, "graph JSON input file, - for stdin");

  std::string family = "ch";
  int k = 0, n = 0, shift = 0;
  bool reflect = false;
  auto* build = app.add_subcommand("build", "build a family graph");
  build->add_option("--family", family, "rec, ch, dual-rec or dual-ch")->required();
  build->add_option("--k", k)->required();
  build->add_option("--n", n)->required();
  build->add_option("--shift", shift, "apply sigma^shift");
  build->add_flag("--reflect", reflect, "apply sigma^shift tau");

  auto* labels = app.add_subcommand("labels", "left and right face labels");

  std::string label_text;
  auto* mutate_cmd = app.add_subcommand("mutate", "square move at a face, by left label");
  mutate_cmd->add_option("--label", label_text, "e.g. 1,4,6")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "D_n orbit of the label collection");
  auto* stab_cmd = app.add_subcommand("stabilizer", "stabilizer in D_n");

  bool dot = false, right = false;
  auto* quiver_cmd = app.add_subcommand("quiver", "quiver of the graph");
  quiver_cmd->add_flag("--dot", dot, "DOT output");
  quiver_cmd->add_flag("--right", right, "right labels");

  auto* dot_cmd = app.add_subcommand("dot", "DOT drawing of the graph");

  bool closed_form = false;
  auto* super_cmd = app.add_subcommand("superpotential", "superpotential in the Pluecker cluster chart");
  super_cmd->add_flag("--closed-form", closed_form, "also evaluate the closed formula for (dual) checkboard orbit members");

  std::string r_text = "1";
  auto* poly_cmd = app.add_subcommand("polytope", "superpotential polytope Gamma^r");
  poly_cmd->add_option("--r", r_text, "rational dilation");

  int gk = 0, gn = 0;
  auto* gt_cmd = app.add_subcommand("check-gt", "compare the body with the Gelfand-Tsetlin polytope");
  gt_cmd->add_option("--k", gk, "with --n: check every member of the (dual) checkboard orbit union");
  gt_cmd->add_option("--n", gn);

  bool no_reflections = false;
  auto* scan_cmd = app.add_subcommand("conjecture-scan", "invariants of the body over the D_n orbit");
  scan_cmd->add_flag("--no-reflections", no_reflections);

  int port = 8080;
  std::string host = "127.0.0.1", session;
  auto* serve = app.add_subcommand("serve", "HTTP service");
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--session", session, "session file, replayed on start");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    if (*build) {
      const auto f = parse_family(family);
      require_grassmannian_range(k, n);
      emit(graph_document(contract(dihedral_act(DihedralElement(n, shift, reflect), build_family(f, k, n)))));
    } else if (*labels) {
      emit(labels_document(read_graph()));
    } else if (*mutate_cmd) {
      const auto g = read_graph();
      const auto res = mutate_with_label(g, parse_label(label_text, g.n()));
      json doc = graph_document(res.graph);
      doc["removed"] = to_json(res.removed);
      doc["added"] = to_json(res.added);
      emit(doc);
    } else if (*orbit_cmd) {
      json out = json::array();
      for (const auto& m : orbit(read_graph())) out.push_back({{"element", to_json(m.element)}, {"labels", to_json(m.labels)}});
      emit(out);
    } else if (*stab_cmd) {
      json out = json::array();
      for (const auto& g : stabilizer(read_graph())) out.push_back(to_json(g));
      emit({{"order", out.size()}, {"elements", out}});
    } else if (*quiver_cmd) {
      const auto q = quiver_from_graph(read_graph());
      const auto qq = right ? right_label_quiver(q) : q;
      if (dot)
        std::cout << to_dot(qq);
      else
        emit(to_json(qq));
    } else if (*dot_cmd) {
      std::cout << to_dot(read_graph());
    } else if (*super_cmd) {
      const auto g = read_graph();
      const auto terms = superpotential_terms(g);
      json t = json::array();
      for (std::size_t i = 0; i < terms.size(); ++i)
        t.push_back({{"i", i + 1}, {"expr", to_json(terms[i], g.n())}, {"text", expr_text(terms[i], g.n())}});
      const auto W = assemble_superpotential(terms, g.k());
      json doc = {{"terms", t}, {"W", to_json(W, g.n())}, {"text", expr_text(W, g.n())}};
      if (closed_form) {
        const auto member = identify_orbit_member(g);
        require(member.has_value(), "closed form needs a (dual) checkboard orbit member");
        const auto C = closed_form_W(member->first, member->second, g.k(), g.n());
        doc["closed_form"] = {{"family", orbit_family_name(member->first)},
                              {"m", member->second},
                              {"W", to_json(C, g.n())},
                              {"text", expr_text(C, g.n())},
                              {"matches", C == W}};
      }
      emit(doc);
    } else if (*poly_cmd) {
      mpq_class r;
      try {
        r = mpq_class(r_text);
        r.canonicalize();
      } catch (const std::exception&) {
        throw PreconditionError("--r must be a rational number");
      }
      const auto P = superpotential_polytope(read_graph(), r);
      json doc = to_json(P);
      doc["vertices"] = to_json(vertices(P));
      if (r.get_den() == 1) doc["lattice_points"] = lattice_points(P).size();
      emit(doc);
    } else if (*gt_cmd) {
      if (gk != 0 || gn != 0) return check_gt_union(gk, gn);
      const auto c = check_no_body_is_gt(read_graph());
      std::cout << orbit_family_name(c.family) << " m=" << c.m << ": " << (c.ok() ? "equivalent" : "NOT equivalent") << " ("
                << c.lattice_points << " lattice points, GT " << c.gt_lattice_points << ")\n";
      std::cout << (c.ok() ? 1 : 0) << "/1 equivalent\n";
      return c.ok() ? 0 : 1;
    } else if (*scan_cmd) {
      emit(scan_document(conjecture_scan(read_graph(), !no_reflections)));
    } else if (*serve) {
      Service service(session.empty() ? std::nullopt : std::optional<std::filesystem::path>(session));
      httplib::Server server;
      service.bind(server);
      std::cerr << "listening on " << host << ":" << port << '\n';
      if (!server.listen(host, port)) {
        std::cerr << "cannot bind " << host << ":" << port << '\n';
        return 1;
      }
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
