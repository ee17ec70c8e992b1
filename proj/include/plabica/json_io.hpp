#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "plabica/families.hpp"
#include "plabica/moves.hpp"
#include "plabica/polytope.hpp"
#include "plabica/quiver.hpp"
#include "plabica/rational_expr.hpp"
#include "plabica/seed.hpp"

namespace plabica {

using json = nlohmann::ordered_json;

inline json to_json(const KSubset& s) { return s.elements(); }

inline KSubset subset_from_json(const json& j, int n) {
  require(j.is_array(), "subset must be an integer array");
  std::vector<int> el;
  for (const auto& x : j) {
    require(x.is_number_integer(), "subset entries must be integers");
    el.push_back(x.get<int>());
  }
  return KSubset(n, std::span<const int>(el));
}

inline json to_json(const LabelCollection& c) {
  json labels = json::array();
  for (const auto& l : c) labels.push_back(to_json(l));
  return {{"n", c.n()}, {"k", c.k()}, {"labels", labels}};
}

inline LabelCollection collection_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  std::vector<KSubset> labels;
  for (const auto& l : j.at("labels")) labels.push_back(subset_from_json(l, n));
  return LabelCollection(n, k, std::move(labels));
}

inline json to_json(const PlabicGraph& g) {
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    vertices.push_back({{"id", v}, {"colour", colour_name(g.colour(v))}, {"rotation", g.rotation(v)}});
  json edges = json::array();
  for (const auto& e : g.endpoints()) edges.push_back({e[0], e[1]});
  return {{"n", g.n()}, {"k", g.k()}, {"vertices", vertices}, {"edges", edges}};
}

inline Colour parse_colour(const std::string& s) {
  if (s == "black") return Colour::black;
  if (s == "white") return Colour::white;
  if (s == "boundary") return Colour::boundary;
  throw PreconditionError("unknown colour '" + s + "'");
}

inline PlabicGraph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    const auto& vs = j.at("vertices");
    std::vector<Colour> colours(vs.size());
    std::vector<std::vector<int>> rotations(vs.size());
    for (const auto& v : vs) {
      const auto id = v.at("id").get<std::size_t>();
      require(id < vs.size(), "vertex id out of range");
      colours[id] = parse_colour(v.at("colour").get<std::string>());
      rotations[id] = v.at("rotation").get<std::vector<int>>();
    }
    std::vector<std::array<int, 2>> endpoints;
    for (const auto& e : j.at("edges")) endpoints.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return PlabicGraph::from_parts(n, k, std::move(colours), std::move(endpoints), std::move(rotations));
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed graph JSON: ") + e.what());
  }
}

inline json to_json(const Quiver& q) {
  json vertices = json::array();
  for (const auto& [v, f] : q.vertices()) vertices.push_back({{"label", to_json(v)}, {"frozen", f}});
  json arrows = json::array();
  for (const auto& [a, m] : q.arrows()) arrows.push_back({{"from", to_json(a.first)}, {"to", to_json(a.second)}, {"multiplicity", m}});
  return {{"vertices", vertices}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const json& j, int n) {
  Quiver q;
  for (const auto& v : j.at("vertices")) q.add_vertex(subset_from_json(v.at("label"), n), v.at("frozen").get<bool>());
  for (const auto& a : j.at("arrows"))
    q.add_arrows(subset_from_json(a.at("from"), n), subset_from_json(a.at("to"), n), a.at("multiplicity").get<int>());
  return q;
}

inline json to_json(const Polynomial& p, int n) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (const auto& [v, e] : m.factors()) {
      require(!is_matrix_entry_var(v), "matrix-entry variables have no JSON form");
      exps[v == kQVar ? std::string("q") : KSubset::from_mask(n, v).key()] = e;
    }
    terms.push_back({{"coeff", c.get_str()}, {"exps", exps}});
  }
  return terms;
}

inline Polynomial polynomial_from_json(const json& j, int n) {
  Polynomial p;
  for (const auto& t : j) {
    Monomial m;
    for (const auto& [key, e] : t.at("exps").items()) {
      VarId v = kQVar;
      if (key != "q") {
        std::vector<int> el;
        std::size_t pos = 0;
        while (pos < key.size()) {
          const auto comma = key.find(',', pos);
          el.push_back(std::stoi(key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
        v = plucker_var(KSubset(n, std::span<const int>(el)));
      }
      m = m * Monomial::var(v, e.get<int>());
    }
    p.add_term(m, mpz_class(t.at("coeff").get<std::string>()));
  }
  return p;
}

inline json to_json(const RationalExpr& e, int n) {
  return {{"num", to_json(e.numerator(), n)}, {"den", to_json(e.denominator(), n)}};
}

inline RationalExpr expr_from_json(const json& j, int n) {
  return {polynomial_from_json(j.at("num"), n), polynomial_from_json(j.at("den"), n)};
}

inline json to_json(const HPolytope& P) {
  json rows = json::array();
  for (const auto& r : P.rows()) {
    json a = json::array();
    for (const auto& c : r.a) {
      require(c.fits_slong_p(), "inequality coefficient too large for JSON integers");
      a.push_back(c.get_si());
    }
    rows.push_back({{"a", a}, {"b", r.b.get_str()}});
  }
  return {{"coords", P.coords()}, {"rows", rows}};
}

inline HPolytope polytope_from_json(const json& j) {
  const auto coords = j.at("coords").get<std::vector<std::string>>();
  std::vector<Inequality> rows;
  for (const auto& r : j.at("rows")) {
    Inequality in;
    for (const auto& c : r.at("a")) in.a.emplace_back(c.get<long>());
    in.b = r.at("b").is_string() ? mpz_class(r.at("b").get<std::string>()) : mpz_class(r.at("b").get<long>());
    rows.push_back(std::move(in));
  }
  return HPolytope(coords, rows);
}

inline json to_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) {
    json row = json::array();
    for (const auto& c : p) row.push_back(c.get_str());
    out.push_back(row);
  }
  return out;
}

inline json to_json(const DihedralElement& g) {
  return {{"shift", g.shift()}, {"reflected", g.reflected()}, {"name", g.to_string()}};
}

/// Graph plus its faces: labels, right labels, boundary and mutability flags.
inline json graph_document(const PlabicGraph& g) {
  json doc = to_json(g);
  const auto labels = face_label_vector(g);
  const auto mut = mutable_labels(g);
  json faces = json::array();
  for (int f = 0; f < g.face_count(); ++f) {
    if (f == g.outer_face()) continue;
    const auto& l = labels[static_cast<std::size_t>(f)];
    json darts = g.face_darts(f);
    faces.push_back({{"face", f},
                     {"label", to_json(l)},
                     {"right_label", to_json(l.complement())},
                     {"boundary", g.is_boundary_face(f)},
                     {"mutable", std::binary_search(mut.begin(), mut.end(), l)},
                     {"darts", darts}});
  }
  doc["faces"] = faces;
  doc["inner_faces"] = faces.size();
  return doc;
}

}  // namespace plabica
