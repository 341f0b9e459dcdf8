// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#include "surface.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ucn {

using nlohmann::json;

const char* statusName(Status s) {
  switch (s) {
    case Status::Ok: return "Ok";
    case Status::MalformedInput: return "MalformedInput";
    case Status::EdgeDegree: return "EdgeDegree";
    case Status::NonNegativeChi: return "NonNegativeChi";
    case Status::Unrealizable: return "Unrealizable";
    case Status::EdgeParallelAmbiguity: return "EdgeParallelAmbiguity";
    case Status::NotFlippable: return "NotFlippable";
    case Status::SameClass: return "SameClass";
    case Status::NotAnArc: return "NotAnArc";
    case Status::NotMinimalPosition: return "NotMinimalPosition";
    case Status::SeedTooLarge: return "SeedTooLarge";
    case Status::Disconnected: return "Disconnected";
    case Status::Uncertified: return "Uncertified";
    case Status::NotGrowing: return "NotGrowing";
    case Status::LimitsCoincide: return "LimitsCoincide";
    case Status::IndexOutOfRange: return "IndexOutOfRange";
    case Status::LemmaViolated: return "LemmaViolated";
    case Status::PropertyViolation: return "PropertyViolation";
    case Status::Internal: return "Internal";
  }
  return "Unknown";
}

// == Triangulation

Triangulation::Triangulation(std::string name, int edges, std::vector<Triangle> triangles,
                             bool fareyChart, std::map<std::string, TwistWord> twists)
    : name_(std::move(name)), numEdges_(edges), triangles_(std::move(triangles)),
      fareyChart_(fareyChart), twists_(std::move(twists)) {
  validate();
}

void Triangulation::validate() {
  require(numEdges_ > 0, Status::MalformedInput, "edge count must be positive");
  require(!triangles_.empty(), Status::MalformedInput, "triangulation has no triangles");

  // each edge side glued to exactly one slot
  sideLoc_.assign(static_cast<size_t>(numEdges_), {Corner{-1, -1}, Corner{-1, -1}});
  std::vector<int> degree(static_cast<size_t>(numEdges_), 0);
  for (int t = 0; t < numTriangles(); t++) {
    for (int i = 0; i < 3; i++) {
      EdgeSide es = side(t, i);
      require(es.edge >= 0 && es.edge < numEdges_, Status::MalformedInput,
              "edge index out of range in triangle " + std::to_string(t));
      require(es.side == 0 || es.side == 1, Status::MalformedInput,
              "side flag must be 0 or 1 in triangle " + std::to_string(t));
      degree[static_cast<size_t>(es.edge)]++;
      Corner& loc = sideLoc_[static_cast<size_t>(es.edge)][static_cast<size_t>(es.side)];
      require(loc.tri < 0, Status::MalformedInput,
              "edge " + std::to_string(es.edge) + " side " + std::to_string(es.side) +
                  " glued twice; side flags must alternate");
      loc = Corner{t, i};
    }
  }
  for (int e = 0; e < numEdges_; e++) {
    require(degree[static_cast<size_t>(e)] == 2, Status::EdgeDegree,
            "edge " + std::to_string(e) + " used " + std::to_string(degree[static_cast<size_t>(e)]) +
                " times, expected 2");
  }

  // connectivity over the dual graph
  {
    std::vector<char> seen(triangles_.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int i = 0; i < 3; i++) {
        EdgeSide es = side(t, i);
        int u = sideLocation({es.edge, 1 - es.side}).tri;
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    require(std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }),
            Status::MalformedInput, "triangulation is not connected");
  }

  // trace corner cycles to find the punctures
  punctureIndex_.assign(triangles_.size(), std::vector<int>(3, -1));
  punctureCycles_.clear();
  for (int t = 0; t < numTriangles(); t++) {
    for (int k = 0; k < 3; k++) {
      if (punctureIndex_[static_cast<size_t>(t)][static_cast<size_t>(k)] >= 0) continue;
      int id = static_cast<int>(punctureCycles_.size());
      std::vector<Corner> cycle;
      Corner c{t, k};
      do {
        require(punctureIndex_[static_cast<size_t>(c.tri)][static_cast<size_t>(c.k)] < 0,
                Status::Internal, "corner cycle is not a simple cycle");
        punctureIndex_[static_cast<size_t>(c.tri)][static_cast<size_t>(c.k)] = id;
        cycle.push_back(c);
        c = cornerNext(c);
      } while (!(c == Corner{t, k}));
      punctureCycles_.push_back(std::move(cycle));
    }
  }

  int chi = eulerCharacteristic();
  require(chi < 0, Status::NonNegativeChi,
          "Euler characteristic " + std::to_string(chi) + " is not negative");

  // structural checks on twist words; the geometric content is exercised by
  // the mapping machinery when a word is applied
  for (auto& [wname, word] : twists_) {
    require(!word.steps.empty(), Status::MalformedInput, "twist word " + wname + " is empty");
    for (const WordStep& st : word.steps) {
      if (st.isFlip) {
        require(st.edge >= 0 && st.edge < numEdges_, Status::MalformedInput,
                "twist word " + wname + " flips an unknown edge");
      } else {
        require(static_cast<int>(st.relabel.size()) == numEdges_, Status::MalformedInput,
                "twist word " + wname + " relabel has wrong length");
        std::vector<char> hit(static_cast<size_t>(numEdges_), 0);
        for (int img : st.relabel) {
          require(img >= 0 && img < numEdges_ && !hit[static_cast<size_t>(img)],
                  Status::MalformedInput, "twist word " + wname + " relabel is not a permutation");
          hit[static_cast<size_t>(img)] = 1;
        }
      }
    }
    require(!word.inverseName.empty() && twists_.count(word.inverseName) == 1,
            Status::MalformedInput, "twist word " + wname + " lacks a named inverse");
  }
}

Corner Triangulation::cornerNext(Corner c) const {
  EdgeSide es = side(c.tri, c.k);
  Corner mate = sideLocation({es.edge, 1 - es.side});
  return Corner{mate.tri, (mate.k + 1) % 3};
}

const TwistWord& Triangulation::twist(const std::string& name) const {
  auto it = twists_.find(name);
  require(it != twists_.end(), Status::MalformedInput, "unknown twist word: " + name);
  return it->second;
}

// == JSON input/output

static int jsonInt(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(Status::MalformedInput, std::string(what) + " must be an integer");
  return j.get<int>();
}

Triangulation Triangulation::fromJson(const json& j) {
  if (!j.is_object()) fail(Status::MalformedInput, "surface file must be a JSON object");
  if (!j.contains("format") || !j["format"].is_number_integer() || j["format"].get<int>() != 1)
    fail(Status::MalformedInput, "surface file needs \"format\": 1");
  if (!j.contains("edges") || !j.contains("triangles"))
    fail(Status::MalformedInput, "surface file needs \"edges\" and \"triangles\"");

  int edges = jsonInt(j["edges"], "edges");
  std::vector<Triangle> tris;
  if (!j["triangles"].is_array()) fail(Status::MalformedInput, "triangles must be an array");
  for (const json& jt : j["triangles"]) {
    if (!jt.is_array() || jt.size() != 3)
      fail(Status::MalformedInput, "each triangle must be a triple of [edge, side] pairs");
    Triangle tri;
    for (size_t i = 0; i < 3; i++) {
      const json& js = jt[i];
      if (!js.is_array() || js.size() != 2)
        fail(Status::MalformedInput, "each triangle side must be an [edge, side] pair");
      tri[i] = EdgeSide{jsonInt(js[0], "edge index"), jsonInt(js[1], "side flag")};
    }
    tris.push_back(tri);
  }

  std::map<std::string, TwistWord> twists;
  if (j.contains("twists")) {
    if (!j["twists"].is_object()) fail(Status::MalformedInput, "twists must be an object");
    for (auto& [wname, jw] : j["twists"].items()) {
      if (!jw.is_object() || !jw.contains("word") || !jw["word"].is_array())
        fail(Status::MalformedInput, "twist " + wname + " needs a \"word\" array");
      TwistWord word;
      for (const json& js : jw["word"]) {
        WordStep step;
        if (js.is_object() && js.contains("flip")) {
          step.isFlip = true;
          step.edge = jsonInt(js["flip"], "flip edge");
        } else if (js.is_object() && js.contains("relabel")) {
          step.isFlip = false;
          if (!js["relabel"].is_array())
            fail(Status::MalformedInput, "relabel step must carry an array");
          for (const json& jr : js["relabel"]) step.relabel.push_back(jsonInt(jr, "relabel entry"));
        } else {
          fail(Status::MalformedInput, "twist step must be {\"flip\": e} or {\"relabel\": [...]}");
        }
        word.steps.push_back(std::move(step));
      }
      if (jw.contains("inverse") && jw["inverse"].is_string())
        word.inverseName = jw["inverse"].get<std::string>();
      twists[wname] = std::move(word);
    }
  }

  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "surface";
  bool farey = j.contains("fareyChart") && j["fareyChart"].is_boolean() && j["fareyChart"].get<bool>();
  return Triangulation(name, edges, std::move(tris), farey, std::move(twists));
}

Triangulation Triangulation::fromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Status::MalformedInput, "cannot open surface file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Status::MalformedInput, "surface file is not valid JSON: " + std::string(e.what()));
  }
  return fromJson(j);
}

json Triangulation::toJson() const {
  json jt = json::array();
  for (const Triangle& tri : triangles_) {
    json row = json::array();
    for (const EdgeSide& es : tri) row.push_back(json::array({es.edge, es.side}));
    jt.push_back(row);
  }
  json j{{"format", 1}, {"name", name_}, {"edges", numEdges_}, {"triangles", jt}};
  if (fareyChart_) j["fareyChart"] = true;
  if (!twists_.empty()) {
    json jw = json::object();
    for (const auto& [wname, word] : twists_) {
      json steps = json::array();
      for (const WordStep& st : word.steps) {
        if (st.isFlip)
          steps.push_back(json{{"flip", st.edge}});
        else
          steps.push_back(json{{"relabel", st.relabel}});
      }
      jw[wname] = json{{"word", steps}, {"inverse", word.inverseName}};
    }
    j["twists"] = jw;
  }
  return j;
}

bool Triangulation::sameData(const Triangulation& o) const {
  return numEdges_ == o.numEdges_ && triangles_ == o.triangles_;
}

// == built-in surfaces

static const char* kOncePuncturedTorus = R"json({
  "format": 1,
  "name": "once_punctured_torus",
  "edges": 3,
  "triangles": [[[0,0],[1,0],[2,0]], [[2,1],[0,1],[1,1]]],
  "fareyChart": true,
  "twists": {
    "R":    {"word": [{"flip": 2}, {"relabel": [2,1,0]}], "inverse": "Rinv"},
    "Rinv": {"word": [{"flip": 0}, {"relabel": [2,1,0]}], "inverse": "R"},
    "L":    {"word": [{"flip": 2}, {"relabel": [0,2,1]}], "inverse": "Linv"},
    "Linv": {"word": [{"flip": 1}, {"relabel": [0,2,1]}], "inverse": "L"}
  }
})json";

static const char* kFourPuncturedSphere = R"json({
  "format": 1,
  "name": "four_punctured_sphere",
  "edges": 6,
  "triangles": [
    [[0,0],[3,0],[1,0]],
    [[1,1],[5,0],[2,0]],
    [[2,1],[4,0],[0,1]],
    [[4,1],[5,1],[3,1]]
  ]
})json";

Triangulation Triangulation::builtin(const std::string& name) {
  if (name == "S_1_1" || name == "once_punctured_torus") return fromJson(json::parse(kOncePuncturedTorus));
  if (name == "S_0_4" || name == "four_punctured_sphere") return fromJson(json::parse(kFourPuncturedSphere));
  fail(Status::MalformedInput, "unknown builtin surface: " + name);
}

// == EdgeCoordinates

bool EdgeCoordinates::isZero() const {
  return std::all_of(w.begin(), w.end(), [](const BigInt& v) { return v == 0; });
}

int EdgeCoordinates::sentinelEdge() const {
  int at = -1;
  for (int e = 0; e < size(); e++) {
    const BigInt& v = w[static_cast<size_t>(e)];
    if (v == -1) {
      if (at >= 0) return -1;
      at = e;
    } else if (v != 0) {
      return -1;
    }
  }
  return at;
}

bool EdgeCoordinates::hasNegative() const {
  return std::any_of(w.begin(), w.end(), [](const BigInt& v) { return v < 0; });
}

BigInt EdgeCoordinates::norm() const {
  BigInt m = 0;
  for (const BigInt& v : w)
    if (v > m) m = v;
  return m;
}

void checkCoordinateShape(const Triangulation& T, const EdgeCoordinates& x) {
  require(x.size() == T.numEdges(), Status::MalformedInput,
          "coordinate vector length " + std::to_string(x.size()) + " does not match edge count " +
              std::to_string(T.numEdges()));
  if (!x.hasNegative()) return;
  for (const BigInt& v : x.w)
    require(v >= -1, Status::MalformedInput, "edge weights must be >= -1");
  require(x.sentinelEdge() >= 0, Status::EdgeParallelAmbiguity,
          "-1 entries must form a pure edge-parallel vector: -1 on one edge, 0 elsewhere");
}

json coordsToJson(const EdgeCoordinates& x) {
  json weights = json::array();
  static const BigInt kBig = BigInt(1) << 62;
  for (const BigInt& v : x.w) {
    if (bigAbs(v) < kBig)
      weights.push_back(static_cast<int64_t>(v));
    else
      weights.push_back(v.str());
  }
  return json{{"format", 1}, {"weights", weights}};
}

static BigInt bigFromJson(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<uint64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      fail(Status::MalformedInput, "weight string is not an integer: " + j.get<std::string>());
    }
  }
  fail(Status::MalformedInput, "weights must be integers or integer strings");
}

EdgeCoordinates coordsFromJson(const json& j, int numEdges) {
  const json* weights = nullptr;
  if (j.is_array()) {
    weights = &j;
  } else if (j.is_object() && j.contains("weights") && j["weights"].is_array()) {
    if (!j.contains("format") || !j["format"].is_number_integer() || j["format"].get<int>() != 1)
      fail(Status::MalformedInput, "coordinates file needs \"format\": 1");
    weights = &j["weights"];
  } else {
    fail(Status::MalformedInput, "coordinates must be an array or {format, weights}");
  }
  EdgeCoordinates x;
  for (const json& jv : *weights) x.w.push_back(bigFromJson(jv));
  if (numEdges >= 0 && x.size() != numEdges)
    fail(Status::MalformedInput, "coordinate vector length " + std::to_string(x.size()) +
                                     " does not match edge count " + std::to_string(numEdges));
  return x;
}

EdgeCoordinates coordsFromFile(const std::string& path, int numEdges) {
  std::ifstream in(path);
  if (!in) fail(Status::MalformedInput, "cannot open coordinates file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Status::MalformedInput, "coordinates file is not valid JSON: " + std::string(e.what()));
  }
  return coordsFromJson(j, numEdges);
}

} // namespace ucn
