#pragma once

#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "plabica/gelfand_tsetlin.hpp"
#include "plabica/json_io.hpp"

namespace plabica {

/// The one graph the service works on, with the moves that produced it.
struct SessionState {
  Family family = Family::checkboard;
  int k = 3;
  int n = 6;
  DihedralElement element = DihedralElement::identity(6);
  PlabicGraph graph;
  std::vector<KSubset> history;  // left labels, in mutation order

  static PlabicGraph seed_graph(Family f, int k, int n, const DihedralElement& g) {
    return contract(dihedral_act(g, build_family(f, k, n)));
  }

  static SessionState start(Family f, int k, int n, const DihedralElement& g) {
    require_grassmannian_range(k, n);
    require(g.n() == n, "dihedral element has the wrong order");
    return {f, k, n, g, seed_graph(f, k, n, g), {}};
  }

  /// Rebuilds the graph from the family seed and the history.
  PlabicGraph replay() const {
    PlabicGraph g = seed_graph(family, k, n, element);
    for (const auto& l : history) g = mutate(g, l);
    return g;
  }

  json to_document() const {
    json hist = json::array();
    for (const auto& l : history) hist.push_back(to_json(l));
    return {{"family", family_name(family)},
            {"k", k},
            {"n", n},
            {"dihedral", {{"shift", element.shift()}, {"reflected", element.reflected()}}},
            {"history", hist}};
  }

  static SessionState from_document(const json& j) {
    const int k = j.at("k").get<int>();
    const int n = j.at("n").get<int>();
    require_grassmannian_range(k, n);
    const auto& d = j.at("dihedral");
    SessionState s = start(parse_family(j.at("family").get<std::string>()), k, n,
                           DihedralElement(n, d.at("shift").get<int>(), d.at("reflected").get<bool>()));
    for (const auto& l : j.at("history")) s.history.push_back(subset_from_json(l, n));
    s.graph = s.replay();
    return s;
  }
};

/// HTTP-free request handlers; Service::bind attaches them to a server.
class Service {
 public:
  struct Response {
    int status = 200;
    json body;
  };

  explicit Service(std::optional<std::filesystem::path> session_file = std::nullopt)
      : file_(std::move(session_file)), state_(SessionState::start(Family::checkboard, 3, 6, DihedralElement::identity(6))) {
    if (file_ && std::filesystem::exists(*file_)) {
      std::ifstream in(*file_);
      state_ = SessionState::from_document(json::parse(in));
    }
  }

  SessionState snapshot() const {
    std::shared_lock lock(mutex_);
    return state_;
  }

  Response get_graph() const {
    const auto s = snapshot();
    json doc = graph_document(s.graph);
    doc["family"] = family_name(s.family);
    doc["dihedral"] = to_json(s.element);
    doc["history_length"] = s.history.size();
    return {200, doc};
  }

  Response post_mutate(const std::string& body) {
    json req;
    try {
      req = json::parse(body);
    } catch (const json::exception& e) {
      return error(400, std::string("malformed JSON: ") + e.what());
    }
    std::unique_lock lock(mutex_);
    KSubset label;
    try {
      require(req.is_object() && req.contains("label"), "request needs a \"label\" field");
      label = subset_from_json(req.at("label"), state_.n);
      require(label.size() == state_.k, "label must have " + std::to_string(state_.k) + " elements");
    } catch (const std::exception& e) {
      return error(400, e.what());
    }
    if (!is_mutable(state_.graph, label)) return error(409, "face " + label.to_string() + " is not mutable");
    auto res = mutate_with_label(state_.graph, label);
    state_.graph = std::move(res.graph);
    state_.history.push_back(label);
    persist();
    json doc = graph_document(state_.graph);
    return {200, {{"graph", doc}, {"removed", to_json(res.removed)}, {"added", to_json(res.added)}, {"history_length", state_.history.size()}}};
  }

  Response post_reset(const std::string& body) {
    json req;
    try {
      req = json::parse(body);
    } catch (const json::exception& e) {
      return error(400, std::string("malformed JSON: ") + e.what());
    }
    SessionState next;
    try {
      const int k = req.at("k").get<int>();
      const int n = req.at("n").get<int>();
      const Family f = parse_family(req.at("family").get<std::string>());
      require_grassmannian_range(k, n);
      DihedralElement g = DihedralElement::identity(n);
      if (req.contains("dihedral")) {
        const auto& d = req.at("dihedral");
        g = DihedralElement(n, d.value("shift", 0), d.value("reflected", false));
      }
      next = SessionState::start(f, k, n, g);
    } catch (const json::exception& e) {
      return error(422, std::string("invalid reset request: ") + e.what());
    } catch (const PreconditionError& e) {
      return error(422, e.what());
    }
    {
      std::unique_lock lock(mutex_);
      state_ = std::move(next);
      persist();
    }
    return get_graph();
  }

  Response get_history() const {
    const auto s = snapshot();
    json doc = s.to_document();
    return {200, doc};
  }

  Response get_orbit() const {
    const auto s = snapshot();
    const auto labels = face_labels(s.graph);
    json members = json::array();
    for (const auto& m : orbit(labels)) members.push_back({{"element", to_json(m.element)}, {"labels", to_json(m.labels)}});
    json stab = json::array();
    for (const auto& g : stabilizer(labels)) stab.push_back(to_json(g));
    return {200, {{"size", members.size()}, {"members", members}, {"stabilizer", stab}}};
  }

  Response get_superpotential() const {
    const auto s = snapshot();
    try {
      const auto terms = superpotential_terms(s.graph);
      json t = json::array();
      for (std::size_t i = 0; i < terms.size(); ++i)
        t.push_back({{"i", i + 1}, {"expr", to_json(terms[i], s.n)}, {"text", expr_text(terms[i], s.n)}});
      const auto W = assemble_superpotential(terms, s.k);
      return {200, {{"terms", t}, {"W", to_json(W, s.n)}, {"text", expr_text(W, s.n)}}};
    } catch (const BudgetExceeded& e) {
      return error(503, e.what());
    }
  }

  Response get_polytope(const std::string& r_text) const {
    mpq_class r;
    try {
      r = mpq_class(r_text.empty() ? std::string("1") : r_text);
      r.canonicalize();
    } catch (const std::exception&) {
      return error(400, "r must be a rational number");
    }
    const auto s = snapshot();
    try {
      const auto P = superpotential_polytope(s.graph, r);
      json doc = to_json(P);
      const auto V = vertices(P);
      doc["vertices"] = to_json(V);
      if (r.get_den() == 1) doc["lattice_points"] = lattice_points(P).size();
      return {200, doc};
    } catch (const BudgetExceeded& e) {
      return error(503, e.what());
    }
  }

  void bind(httplib::Server& server) {
    auto send = [](httplib::Response& res, const Response& r) {
      res.status = r.status;
      res.set_content(r.body.dump(), "application/json");
    };
    auto guard = [send](httplib::Response& res, auto&& fn) {
      try {
        send(res, fn());
      } catch (const PreconditionError& e) {
        send(res, error(422, e.what()));
      } catch (const std::exception& e) {
        send(res, error(500, e.what()));
      }
    };
    server.Get("/graph", [this, guard](const httplib::Request&, httplib::Response& res) { guard(res, [&] { return get_graph(); }); });
    server.Get("/history", [this, guard](const httplib::Request&, httplib::Response& res) { guard(res, [&] { return get_history(); }); });
    server.Get("/orbit", [this, guard](const httplib::Request&, httplib::Response& res) { guard(res, [&] { return get_orbit(); }); });
    server.Get("/superpotential",
               [this, guard](const httplib::Request&, httplib::Response& res) { guard(res, [&] { return get_superpotential(); }); });
    server.Get("/polytope", [this, guard](const httplib::Request& req, httplib::Response& res) {
      guard(res, [&] { return get_polytope(req.has_param("r") ? req.get_param_value("r") : ""); });
    });
    server.Post("/mutate",
                [this, guard](const httplib::Request& req, httplib::Response& res) { guard(res, [&] { return post_mutate(req.body); }); });
    server.Post("/reset",
                [this, guard](const httplib::Request& req, httplib::Response& res) { guard(res, [&] { return post_reset(req.body); }); });
  }

 private:
  static Response error(int status, const std::string& message) { return {status, {{"error", message}}}; }

  void persist() const {
    if (!file_) return;
    const auto tmp = std::filesystem::path(file_->string() + ".tmp");
    {
      std::ofstream out(tmp);
      out << state_.to_document().dump(2) << '\n';
    }
    std::filesystem::rename(tmp, *file_);
  }

  std::optional<std::filesystem::path> file_;
  mutable std::shared_mutex mutex_;
  SessionState state_;
};

}  // namespace plabica
