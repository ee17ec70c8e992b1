#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <random>
#include <set>
#include <tuple>
#include <thread>

#include <unistd.h>

#include "plabica/service.hpp"

using namespace plabica;

namespace {

std::string label_body(const KSubset& l) { return json{{"label", to_json(l)}}.dump(); }

std::filesystem::path temp_session(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("plabica_" + name + "_" + std::to_string(::getpid()) + ".json");
  std::filesystem::remove(p);
  return p;
}

// Faces by label; edge numbering is not preserved by a move and its inverse.
std::set<std::tuple<std::vector<int>, bool, bool>> face_summary(const json& doc) {
  std::set<std::tuple<std::vector<int>, bool, bool>> out;
  for (const auto& f : doc.at("faces"))
    out.emplace(f.at("label").get<std::vector<int>>(), f.at("boundary").get<bool>(), f.at("mutable").get<bool>());
  return out;
}

}  // namespace

TEST(Service, DefaultGraph) {
  Service s;
  const auto r = s.get_graph();
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("inner_faces").get<int>(), 10);
  EXPECT_EQ(r.body.at("family").get<std::string>(), "ch");
  EXPECT_EQ(r.body.at("history_length").get<int>(), 0);
}

TEST(Service, MutateTwiceRestores) {
  Service s;
  const auto before = s.get_graph().body;
  const auto l = mutable_labels(s.snapshot().graph).front();
  const auto first = s.post_mutate(label_body(l));
  ASSERT_EQ(first.status, 200);
  const KSubset added = subset_from_json(first.body.at("added"), 6);
  EXPECT_EQ(subset_from_json(first.body.at("removed"), 6), l);
  EXPECT_NE(added, l);
  const auto second = s.post_mutate(label_body(added));
  ASSERT_EQ(second.status, 200);
  EXPECT_EQ(second.body.at("history_length").get<int>(), 2);
  EXPECT_EQ(face_labels(s.snapshot().graph), face_labels(build_checkboard(3, 6)));
  EXPECT_EQ(face_summary(s.get_graph().body), face_summary(before));
}

TEST(Service, ExampleSequence) {
  Service s;
  KSubset last;
  for (auto [i, j] : {std::pair{2, 1}, {1, 1}, {2, 2}}) {
    const auto r = s.post_mutate(label_body(checkboard_label(3, 6, i, j)));
    ASSERT_EQ(r.status, 200);
    last = subset_from_json(r.body.at("added"), 6);
  }
  EXPECT_EQ(last.complement(), superpotential_label(3, 3, 6));
}

TEST(Service, Errors) {
  Service s;
  EXPECT_EQ(s.post_mutate("{not json").status, 400);
  EXPECT_EQ(s.post_mutate("{}").status, 400);
  EXPECT_EQ(s.post_mutate(R"({"label":[1,2]})").status, 400);
  EXPECT_EQ(s.post_mutate(R"({"label":[1,2,9]})").status, 400);
  EXPECT_EQ(s.post_mutate(R"({"label":"1,2,3"})").status, 400);
  EXPECT_EQ(s.post_mutate(label_body(frozen_label(1, 3, 6))).status, 409);
  EXPECT_EQ(s.post_mutate(R"({"label":[1,3,5]})").status, 409);
  EXPECT_EQ(s.post_reset(R"({"family":"ch","k":1,"n":6})").status, 422);
  EXPECT_EQ(s.post_reset(R"({"family":"hex","k":3,"n":6})").status, 422);
  EXPECT_EQ(s.post_reset(R"({"family":"ch","k":3})").status, 422);
  EXPECT_EQ(s.post_reset("[").status, 400);
  EXPECT_EQ(s.get_polytope("abc").status, 400);
  EXPECT_EQ(s.snapshot().history.size(), 0u);
}

TEST(Service, Reset) {
  Service s;
  auto r = s.post_reset(R"({"family":"rec","k":2,"n":5,"dihedral":{"shift":2,"reflected":true}})");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("inner_faces").get<int>(), 7);
  EXPECT_EQ(face_labels(s.snapshot().graph), DihedralElement(5, 2, true).apply(face_labels(build_rectangle(2, 5))));
  r = s.post_reset(R"({"family":"ch","k":3,"n":6})");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("inner_faces").get<int>(), 10);
}

TEST(Service, ReadEndpoints) {
  Service s;
  const auto orbit = s.get_orbit();
  EXPECT_EQ(orbit.body.at("size").get<int>(), static_cast<int>(orbit.body.at("members").size()));
  const auto w = s.get_superpotential();
  ASSERT_EQ(w.status, 200);
  EXPECT_EQ(w.body.at("terms").size(), 6u);
  EXPECT_EQ(expr_from_json(w.body.at("W"), 6), superpotential(build_checkboard(3, 6)));
  const auto p = s.get_polytope("1");
  ASSERT_EQ(p.status, 200);
  EXPECT_EQ(p.body.at("lattice_points").get<int>(), 20);
  EXPECT_FALSE(s.get_polytope("1/2").body.contains("lattice_points"));
}

TEST(Service, ReplayIsByteIdentical) {
  Service s;
  std::mt19937 rng(4);
  for (int t = 0; t < 12; ++t) {
    const auto mut = mutable_labels(s.snapshot().graph);
    ASSERT_EQ(s.post_mutate(label_body(mut[rng() % mut.size()])).status, 200);
  }
  const auto snap = s.snapshot();
  const auto doc = s.get_history().body;
  const auto replayed = SessionState::from_document(json::parse(doc.dump()));
  EXPECT_EQ(to_json(replayed.graph).dump(), to_json(snap.graph).dump());
  EXPECT_EQ(face_labels(replayed.graph), face_labels(snap.graph));
}

TEST(Service, PersistsSession) {
  const auto file = temp_session("persist");
  {
    Service s(file);
    ASSERT_EQ(s.post_reset(R"({"family":"dual-ch","k":2,"n":6})").status, 200);
    ASSERT_EQ(s.post_mutate(label_body(mutable_labels(s.snapshot().graph).back())).status, 200);
  }
  ASSERT_TRUE(std::filesystem::exists(file));
  Service reloaded(file);
  const auto snap = reloaded.snapshot();
  EXPECT_EQ(snap.family, Family::dual_checkboard);
  EXPECT_EQ(snap.history.size(), 1u);
  EXPECT_EQ(reloaded.get_graph().body.at("history_length").get<int>(), 1);
  std::filesystem::remove(file);
}

TEST(Service, Http) {
  Service service;
  httplib::Server server;
  service.bind(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client cli("127.0.0.1", port);

  auto res = cli.Get("/graph");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_NE(res->get_header_value("Content-Type").find("application/json"), std::string::npos);
  EXPECT_EQ(json::parse(res->body).at("inner_faces").get<int>(), 10);

  res = cli.Post("/reset", R"({"family":"ch","k":1,"n":6})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 422);

  const auto l = mutable_labels(build_checkboard(3, 6)).front();
  res = cli.Post("/mutate", label_body(l), "application/json");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200);
  const auto added = json::parse(res->body).at("added");
  res = cli.Post("/mutate", json{{"label", added}}.dump(), "application/json");
  ASSERT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body).at("history_length").get<int>(), 2);
  EXPECT_EQ(face_labels(service.snapshot().graph), face_labels(build_checkboard(3, 6)));

  res = cli.Post("/mutate", R"({"label":[1,2,3]})", "application/json");
  EXPECT_EQ(res->status, 409);
  res = cli.Post("/mutate", "oops", "application/json");
  EXPECT_EQ(res->status, 400);

  for (const char* path : {"/history", "/orbit", "/superpotential", "/polytope?r=1"}) {
    res = cli.Get(path);
    ASSERT_TRUE(res) << path;
    EXPECT_EQ(res->status, 200) << path;
    EXPECT_NO_THROW(json::parse(res->body)) << path;
  }
  res = cli.Get("/polytope?r=x");
  EXPECT_EQ(res->status, 400);

  server.stop();
  th.join();
}
