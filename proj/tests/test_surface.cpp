// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include "surface.hpp"

using namespace ucn;
using nlohmann::json;

static std::string dataPath(const char* name) {
  return std::string(UCN_SOURCE_DIR) + "/data/" + name;
}

TEST_CASE("once-punctured torus: counts and corner cycle") {
  Triangulation T = Triangulation::fromFile(dataPath("once_punctured_torus.json"));
  CHECK(T.numEdges() == 3);
  CHECK(T.numTriangles() == 2);
  CHECK(T.numPunctures() == 1);
  CHECK(T.eulerCharacteristic() == -1);
  CHECK(T.fareyChart());

  // the single corner cycle, traced by hand on the two-triangle gluing
  std::vector<Corner> expected = {{0, 0}, {1, 2}, {0, 2}, {1, 1}, {0, 1}, {1, 0}};
  Corner c{0, 0};
  for (const Corner& want : expected) {
    CHECK(c == want);
    c = T.cornerNext(c);
  }
  CHECK(c == Corner{0, 0});
  CHECK(T.punctureCycles()[0].size() == 6);
  for (int t = 0; t < 2; t++)
    for (int k = 0; k < 3; k++) CHECK(T.punctureOf({t, k}) == 0);
}

TEST_CASE("once-punctured torus: builtin matches the data file") {
  Triangulation a = Triangulation::builtin("S_1_1");
  Triangulation b = Triangulation::fromFile(dataPath("once_punctured_torus.json"));
  CHECK(a.sameData(b));
  CHECK(a.twists().size() == 4);
  CHECK(a.twist("R").inverseName == "Rinv");
  CHECK(a.twist("L").inverseName == "Linv");
}

TEST_CASE("four-punctured sphere: puncture classes") {
  Triangulation T = Triangulation::fromFile(dataPath("four_punctured_sphere.json"));
  CHECK(T.numEdges() == 6);
  CHECK(T.numTriangles() == 4);
  CHECK(T.numPunctures() == 4);
  CHECK(T.eulerCharacteristic() == -2);
  CHECK(!T.fareyChart());

  for (const auto& cycle : T.punctureCycles()) CHECK(cycle.size() == 3);

  // corner-to-vertex table for the tetrahedral gluing
  std::vector<std::vector<int>> vertexOf = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  std::map<int, int> punctureToVertex;
  for (int t = 0; t < 4; t++) {
    for (int k = 0; k < 3; k++) {
      int p = T.punctureOf({t, k});
      int v = vertexOf[static_cast<size_t>(t)][static_cast<size_t>(k)];
      auto [it, inserted] = punctureToVertex.emplace(p, v);
      CHECK(it->second == v);
    }
  }
  CHECK(punctureToVertex.size() == 4);
}

TEST_CASE("puncture partition is natural under edge relabeling") {
  Triangulation T = Triangulation::fromFile(dataPath("four_punctured_sphere.json"));
  std::vector<int> perm = {2, 0, 1, 5, 3, 4};
  std::vector<Triangle> tris;
  for (const Triangle& tri : T.triangles()) {
    Triangle out = tri;
    for (EdgeSide& es : out) es.edge = perm[static_cast<size_t>(es.edge)];
    tris.push_back(out);
  }
  Triangulation U("relabeled", T.numEdges(), tris, false, {});
  for (int t = 0; t < T.numTriangles(); t++)
    for (int k = 0; k < 3; k++) CHECK(U.punctureOf({t, k}) == T.punctureOf({t, k}));
}

TEST_CASE("validation errors") {
  // one triangle cannot pair its three sides
  json oneTri = {{"format", 1},
                 {"edges", 2},
                 {"triangles", json::array({json::array(
                     {json::array({0, 0}), json::array({0, 1}), json::array({1, 0})})})}};
  CHECK_THROWS_WITH_AS(Triangulation::fromJson(oneTri), doctest::Contains("edge 1 used 1"), Error);
  try {
    Triangulation::fromJson(oneTri);
  } catch (const Error& e) {
    CHECK(e.status() == Status::EdgeDegree);
  }

  // same side flag twice is an orientation error
  json badFlags = {{"format", 1},
                   {"edges", 3},
                   {"triangles",
                    json::array({json::array({json::array({0, 0}), json::array({1, 0}), json::array({2, 0})}),
                                 json::array({json::array({2, 0}), json::array({0, 1}), json::array({1, 1})})})}};
  try {
    Triangulation::fromJson(badFlags);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::MalformedInput);
  }

  // missing file
  try {
    Triangulation::fromFile("/nonexistent/surface.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::MalformedInput);
  }

  // wrong format tag
  json badFormat = {{"format", 2}, {"edges", 3}, {"triangles", json::array()}};
  try {
    Triangulation::fromJson(badFormat);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::MalformedInput);
  }
}

TEST_CASE("edge coordinates: sentinel shape and norm") {
  Triangulation T = Triangulation::builtin("S_1_1");

  EdgeCoordinates s = EdgeCoordinates::sentinel(3, 1);
  CHECK(s.sentinelEdge() == 1);
  CHECK(s.norm() == 0);
  checkCoordinateShape(T, s);

  EdgeCoordinates x = EdgeCoordinates::zero(3);
  x.w = {BigInt(1), BigInt(0), BigInt(1)};
  CHECK(x.sentinelEdge() == -1);
  CHECK(x.norm() == 1);
  checkCoordinateShape(T, x);

  EdgeCoordinates mixed;
  mixed.w = {BigInt(-1), BigInt(2), BigInt(0)};
  try {
    checkCoordinateShape(T, mixed);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::EdgeParallelAmbiguity);
  }

  EdgeCoordinates twoSentinels;
  twoSentinels.w = {BigInt(-1), BigInt(-1), BigInt(0)};
  try {
    checkCoordinateShape(T, twoSentinels);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::EdgeParallelAmbiguity);
  }

  EdgeCoordinates tooNegative;
  tooNegative.w = {BigInt(-2), BigInt(0), BigInt(0)};
  try {
    checkCoordinateShape(T, tooNegative);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::MalformedInput);
  }
}

TEST_CASE("coordinates JSON round-trip, including big weights") {
  EdgeCoordinates x;
  x.w = {BigInt("123456789012345678901234567890"), BigInt(-1), BigInt(7)};
  json j = coordsToJson(x);
  CHECK(j["format"] == 1);
  CHECK(j["weights"][0].is_string());
  CHECK(j["weights"][2].is_number());
  EdgeCoordinates y = coordsFromJson(j, 3);
  CHECK(x == y);

  // bare arrays are accepted on input
  EdgeCoordinates z = coordsFromJson(json::array({1, 2, 3}), 3);
  CHECK(z.w[0] == 1);
  CHECK(z.w[2] == 3);
}

TEST_CASE("surface JSON round-trip") {
  Triangulation T = Triangulation::builtin("S_1_1");
  Triangulation U = Triangulation::fromJson(T.toJson());
  CHECK(T.sameData(U));
  CHECK(U.twists().size() == 4);
  CHECK(U.fareyChart());
}
