// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "surface.hpp"

namespace ucn {

// Reduced slope p/q with q >= 0; infinity is 1/0.
struct Slope {
  int64_t p = 0;
  int64_t q = 1;
  bool operator==(const Slope&) const = default;
  bool operator<(const Slope& o) const { return p != o.p ? p < o.p : q < o.q; }
};

Slope slopeNormalize(int64_t p, int64_t q);
Slope slopeParse(const std::string& text);
std::string slopeStr(Slope s);

// |ps - qr| == 1
bool fareyAdjacent(Slope a, Slope b);

// Row-major integer 2x2 matrix acting on column vectors (p, q).
using Mat2 = std::array<int64_t, 4>;

Mat2 matMul(const Mat2& a, const Mat2& b);
Slope matApply(const Mat2& m, Slope s);
Mat2 matInverse(const Mat2& m); // determinant must be +-1

// Some unimodular matrix sending s to 1/0.
Mat2 toInfinity(Slope s);

// The two neighbors of p/q (q >= 2) with strictly smaller denominator.
std::pair<Slope, Slope> fareyParents(Slope s);

// Neighbors u/v of s with |pv - qu| = 1, sampled as k runs over
// [kLo, kHi] in the one-parameter family u = u0 + k p, v = v0 + k q.
std::vector<Slope> fareyNeighbors(Slope s, int kLo, int kHi);

// Exact distances and geodesics in the graph of slopes joined by
// Farey adjacency; memoized, so reuse one oracle across queries.
class FareyOracle {
public:
  int distance(Slope x, Slope y);
  // Vertices from x to y inclusive; deterministic, matching the
  // smallest-next-slope descent.
  std::vector<Slope> geodesic(Slope x, Slope y);
  // Twice the product (x . y)_o = (d(o,x) + d(o,y) - d(x,y)) / 2.
  int64_t gromov2(Slope o, Slope x, Slope y);

private:
  struct SlopeHash {
    size_t operator()(const Slope& s) const;
  };
  int distToInf(Slope z);
  std::unordered_map<Slope, int, SlopeHash> memo_;
};

// == slope chart on surfaces that carry one

// Edge weights of the arc of a slope (the three edge-parallel arcs are the
// slopes of the chart edges themselves).
EdgeCoordinates arcCoords(const Triangulation& T, Slope s);
EdgeCoordinates curveCoords(const Triangulation& T, Slope s);
Slope slopeOfArc(const Triangulation& T, const EdgeCoordinates& x);
Slope slopeOfCurve(const Triangulation& T, const EdgeCoordinates& x);

} // namespace ucn
