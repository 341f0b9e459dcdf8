// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "mapping.hpp"
#include "overlay.hpp"

namespace ucn {

// == unicorn arcs

// An embedded concatenation of an initial segment of arc a (from its chosen
// end) with a final segment of arc b (into its chosen end), meeting at one
// crossing. Index fields are 0-based positions of the witness crossing among
// the i(a,b) crossings, counted from each arc's chosen end; prefixLenA is its
// 1-based ordinal along a, so larger means more of a retained.
struct UnicornArc {
  int64_t indexAlongA = 0;
  int64_t indexAlongB = 0;
  int64_t prefixLenA = 0;
  EdgeCoordinates arcClass; // tightened class of the concatenation
  int aSideEnd = 0;         // canonical end of arcClass at a's chosen endpoint
  bool operator==(const UnicornArc&) const = default;
};

// All unicorn arcs of the oriented pair, ordered by decreasing a-segment.
// A crossing yields a unicorn arc exactly when the two segments it selects
// have no transverse crossing besides the shared witness point, which on the
// crossing grid means no other crossing precedes it along both arcs at once.
std::vector<UnicornArc> unicornArcs(const Triangulation& T, const OrientedArc& a,
                                    const OrientedArc& b);

// == unicorn paths

// The sequence a = v0, v1, ..., vn = b with the unicorn arcs in between.
// Construction verifies the staircase shape of the witness grid: prefixLenA
// strictly decreasing, indexAlongB strictly increasing, first witness at
// b-index 0 and last at a-index 0. Those conditions force every consecutive
// pair of vertices to be disjoint: the mixed prefix-suffix rectangles between
// neighboring witnesses are empty, so the drawn concatenations only meet in
// shared sub-strands and the witness tangency, all of which isotope off.
struct UnicornPath {
  OrientedArc a, b;
  std::vector<EdgeCoordinates> vertices;
  std::vector<UnicornArc> witnesses; // aligned with vertices[1..n-1]

  int64_t length() const { return static_cast<int64_t>(vertices.size()) - 1; }
};

UnicornPath unicornPath(const Triangulation& T, const OrientedArc& a, const OrientedArc& b);

// Vertex k of the path in the a role (keeping the end inherited from a's
// chosen endpoint) or in the b role; the far endpoint of each role is
// rejected since its inherited end is the other one.
OrientedArc pathOrientedA(const UnicornPath& p, int64_t k);
OrientedArc pathOrientedB(const UnicornPath& p, int64_t k);

// {"vertices": [...], "witnesses": [{index_along_a, index_along_b,
// prefix_len_a}, ...]}
nlohmann::json pathToJson(const UnicornPath& p);

// == subpath dichotomy

// For 0 <= i < j <= n on P(a,b): either the unicorn path between vertices i
// and j (with their inherited ends) reproduces P(a,b)[i..j], or j = i+2 and
// the two vertices are already disjoint. Throws LemmaViolated when neither
// holds.
struct SubpathWitness {
  bool isSubpath = false;
  bool isAdjacency = false;
  UnicornPath sub;        // path between vertex i (a role) and vertex j (b role)
  int64_t crossings = -1; // i(vertex i, vertex j) when computed for adjacency
};

SubpathWitness verifySubpathLemma(const Triangulation& T, const OrientedArc& a,
                                  const OrientedArc& b, int64_t i, int64_t j);

// == truncated infinite paths

// Stage n of the infinite unicorn path from a toward the f-orbit of b:
// P(a, f^n b) with b's end transported through every application of f, plus
// the number of leading vertices shared with stage n-1 (0 at n = 0).
struct TruncatedPath {
  UnicornPath path;
  int64_t commonPrefix = 0;
  OrientedArc movedEnd; // f^n b with its transported endpoint
};

TruncatedPath truncatedInfinitePath(const Triangulation& T, const OrientedArc& a,
                                    const OrientedArc& b, const Word& f, int64_t n);

} // namespace ucn
