// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "status.hpp"

namespace ucn {

// Side s of edge e. The two sides are glued to two triangle slots and are
// traversed in opposite directions, so all triangles stay counterclockwise.
struct EdgeSide {
  int edge = -1;
  int side = -1;
  bool operator==(const EdgeSide&) const = default;
  bool operator<(const EdgeSide& o) const {
    return edge != o.edge ? edge < o.edge : side < o.side;
  }
};

// Corner k of triangle tri. Corner k sits between side slots (k+2)%3 and k;
// slot i runs from corner i to corner (i+1)%3. The same struct doubles as a
// (triangle, slot) locator for edge sides.
struct Corner {
  int tri = -1;
  int k = -1;
  bool operator==(const Corner&) const = default;
  bool operator<(const Corner& o) const { return tri != o.tri ? tri < o.tri : k < o.k; }
};

using Triangle = std::array<EdgeSide, 3>;

// One step of a mapping-class word: either a flip of one edge or an edge
// relabeling. relabel[i] is the new index of edge i.
struct WordStep {
  bool isFlip = true;
  int edge = -1;
  std::vector<int> relabel;
};

struct TwistWord {
  std::vector<WordStep> steps;
  std::string inverseName;
};

class Triangulation {
public:
  Triangulation() = default;
  Triangulation(std::string name, int edges, std::vector<Triangle> triangles, bool fareyChart,
                std::map<std::string, TwistWord> twists);

  static Triangulation fromJson(const nlohmann::json& j);
  static Triangulation fromFile(const std::string& path);
  static Triangulation builtin(const std::string& name);

  int numEdges() const { return numEdges_; }
  int numTriangles() const { return static_cast<int>(triangles_.size()); }
  int numPunctures() const { return static_cast<int>(punctureCycles_.size()); }
  int eulerCharacteristic() const { return numTriangles() - numEdges(); }
  const std::string& name() const { return name_; }
  bool fareyChart() const { return fareyChart_; }

  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Triangle& triangle(int t) const { return triangles_[static_cast<size_t>(t)]; }
  EdgeSide side(int t, int i) const { return triangles_[static_cast<size_t>(t)][static_cast<size_t>(i)]; }

  // (triangle, slot) carrying the given edge side
  Corner sideLocation(EdgeSide es) const { return sideLoc_[static_cast<size_t>(es.edge)][static_cast<size_t>(es.side)]; }

  // one counterclockwise step around the puncture at a corner
  Corner cornerNext(Corner c) const;

  int punctureOf(Corner c) const { return punctureIndex_[static_cast<size_t>(c.tri)][static_cast<size_t>(c.k)]; }
  const std::vector<std::vector<Corner>>& punctureCycles() const { return punctureCycles_; }

  const std::map<std::string, TwistWord>& twists() const { return twists_; }
  const TwistWord& twist(const std::string& name) const;

  nlohmann::json toJson() const;
  bool sameData(const Triangulation& o) const;

private:
  void validate();

  std::string name_;
  int numEdges_ = 0;
  std::vector<Triangle> triangles_;
  bool fareyChart_ = false;
  std::map<std::string, TwistWord> twists_;

  std::vector<std::array<Corner, 2>> sideLoc_;
  std::vector<std::vector<int>> punctureIndex_;
  std::vector<std::vector<Corner>> punctureCycles_;
};

// Integer weight per edge; one isotopy class of a multiarc/multicurve.
// A class isotopic onto edge e has no transverse normal form and is written
// as the sentinel vector: -1 at e, 0 elsewhere.
struct EdgeCoordinates {
  std::vector<BigInt> w;

  static EdgeCoordinates zero(int numEdges) {
    EdgeCoordinates x;
    x.w.assign(static_cast<size_t>(numEdges), BigInt(0));
    return x;
  }
  static EdgeCoordinates sentinel(int numEdges, int edge) {
    EdgeCoordinates x = zero(numEdges);
    x.w[static_cast<size_t>(edge)] = -1;
    return x;
  }

  int size() const { return static_cast<int>(w.size()); }
  bool isZero() const;
  // index of the sentinel edge, or -1 if the vector is not a pure sentinel
  int sentinelEdge() const;
  bool hasNegative() const;
  BigInt norm() const; // max over edges of max(w_e, 0)

  bool operator==(const EdgeCoordinates&) const = default;
  bool operator<(const EdgeCoordinates& o) const { return w < o.w; }
};

// Throws on negative entries other than a pure sentinel.
void checkCoordinateShape(const Triangulation& T, const EdgeCoordinates& x);

nlohmann::json coordsToJson(const EdgeCoordinates& x);
EdgeCoordinates coordsFromJson(const nlohmann::json& j, int numEdges);
EdgeCoordinates coordsFromFile(const std::string& path, int numEdges);

} // namespace ucn
