// Copyright 2026 The quadqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>

#include "quadqaoa/errors.hpp"
#include "quadqaoa/io.hpp"
#include "quadqaoa/problems.hpp"
#include "quadqaoa/quadratizer.hpp"

namespace quadqaoa {
namespace {

TEST(Io, PolynomialRoundTrip) {
  ZPolynomial h = build_labs(7);
  h.add_constant(0.125);
  h.add_term({3}, -0.3);
  EXPECT_EQ(polynomial_from_json(Json::parse(to_json(h).dump())), h);
}

TEST(Io, PolynomialRejectsMalformedInput) {
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"terms": []})")), FormatError);
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"n": 2, "terms": [{"q": [0, 5], "w": 1.0}]})")),
               FormatError);
}

TEST(Io, ScheduleRoundTrip) {
  const SwapSchedule s = build_schedule(7, 4, {3, 1, 0, 6, 2, 5, 4});
  const SwapSchedule back = schedule_from_json(to_json(s));
  EXPECT_EQ(back.num_layers(), 4);
  EXPECT_EQ(back.initial_mapping(), s.initial_mapping());
  EXPECT_EQ(back.final_mapping(), s.final_mapping());
  Json bad = to_json(s);
  bad["layers"][0]["parity"] = "odd";
  EXPECT_THROW(schedule_from_json(bad), FormatError);
}

TEST(Io, CircuitRoundTrip) {
  const ZPolynomial q = clique_expand(build_labs(6)).to_polynomial();
  const QaoaCircuit c = synthesize_line(q, {{0.1, 0.2}, {0.3, 0.4}}, build_schedule(6, 3));
  EXPECT_EQ(circuit_from_json(Json::parse(to_json(c).dump())), c);
}

TEST(Io, AnglesAndTrainResultRoundTrip) {
  TrainResult r;
  r.angles = {{0.1, 0.2}, {0.3, 0.4}};
  r.theta = {1.0, -1.0};
  r.energy = -3.5;
  r.trace = {0.0, -1.0, -3.5};
  r.evaluations = 3;
  r.grid_energy = -1.0;
  r.restart = 2;
  const TrainResult back = train_result_from_json(Json::parse(to_json(r).dump()));
  EXPECT_EQ(back.angles.beta, r.angles.beta);
  EXPECT_EQ(back.angles.gamma, r.angles.gamma);
  EXPECT_EQ(back.theta, r.theta);
  EXPECT_EQ(back.energy, r.energy);
  EXPECT_EQ(back.trace, r.trace);
  EXPECT_EQ(back.restart, 2);
  EXPECT_EQ(trace_csv(r), "iteration,energy\n0,0\n1,-1\n2,-3.5\n");
  EXPECT_THROW(angles_from_json(Json::parse(R"({"beta": [0.1], "gamma": []})")), FormatError);
}

TEST(Io, GraphRoundTrip) {
  const Graph g = random_regular_graph(10, 3, 1);
  const Graph back = graph_from_json(to_json(g));
  ASSERT_EQ(back.edges.size(), g.edges.size());
  EXPECT_EQ(back.num_nodes, 10);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    EXPECT_EQ(back.edges[i].u, g.edges[i].u);
    EXPECT_EQ(back.edges[i].weight, g.edges[i].weight);
  }
}

TEST(Io, CliqueSidecarListsDiagnostics) {
  const Json j = clique_sidecar(clique_expand(build_labs(6)));
  ASSERT_TRUE(j.is_array());
  ASSERT_FALSE(j.empty());
  for (const char* key : {"edge", "w", "I", "N"})
    EXPECT_TRUE(j[0].contains(key)) << key;
}

TEST(Io, FilesRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "quadqaoa_io_test";
  std::filesystem::remove_all(dir);
  write_json(dir / "nested" / "h.json", to_json(build_labs(5)));
  EXPECT_EQ(polynomial_from_json(read_json(dir / "nested" / "h.json")), build_labs(5));
  write_text(dir / "t.txt", "abc\n");
  EXPECT_EQ(read_text(dir / "t.txt"), "abc\n");
  EXPECT_THROW(read_text(dir / "missing.txt"), Error);
  write_text(dir / "bad.json", "{not json");
  EXPECT_THROW(read_json(dir / "bad.json"), FormatError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace quadqaoa
