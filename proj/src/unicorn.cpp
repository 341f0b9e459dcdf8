// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#include "unicorn.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ucn {

namespace {

inline int m3(int k) { return k % 3; }

const Component& theArc(const ResolveInfo& info, const char* which) {
  require(info.kind == ClassKind::Multiarc && info.components.size() == 1, Status::NotAnArc,
          std::string(which) + " does not resolve to a single arc");
  return info.components.front();
}

// == splicing

// A drawing of an arc between two corners, free to be non-taut.
struct DrawnArc {
  Corner start, end;
  std::vector<TraceStep> steps;
};

// The concatenation through the crossing in a-sector sa and b-sector sb:
// a's segment from its chosen end into the crossing triangle, then b's
// segment from there into b's chosen end.
DrawnArc spliceAt(const Component& A, const Component& B, int ea, int eb, int64_t sa,
                  int64_t sb) {
  DrawnArc d;
  d.start = ea == 0 ? A.trace.start.corner : A.trace.end.corner;
  d.end = eb == 0 ? B.trace.start.corner : B.trace.end.corner;
  const std::vector<TraceStep>& as = A.trace.steps;
  const std::vector<TraceStep>& bs = B.trace.steps;
  const int64_t ma = static_cast<int64_t>(as.size());
  d.steps.reserve(as.size() + bs.size());
  if (ea == 0)
    d.steps.insert(d.steps.end(), as.begin(), as.begin() + sa);
  else
    for (int64_t i = ma - 1; i >= sa; --i) d.steps.push_back(reversed(as[static_cast<size_t>(i)]));
  if (eb == 0)
    for (int64_t i = sb - 1; i >= 0; --i) d.steps.push_back(reversed(bs[static_cast<size_t>(i)]));
  else
    d.steps.insert(d.steps.end(), bs.begin() + sb, bs.end());
  return d;
}

void validateDrawn(const Triangulation& T, const DrawnArc& d) {
  int tri = d.start.tri;
  for (const TraceStep& s : d.steps) {
    require(T.sideLocation({s.edge, s.fromSide}).tri == tri, Status::Internal,
            "spliced trace breaks between crossings");
    tri = T.sideLocation({s.edge, 1 - s.fromSide}).tri;
  }
  require(tri == d.end.tri, Status::Internal, "spliced trace ends in the wrong triangle");
}

// == tightening

// Reduces a drawing to taut position. Consecutive crossings of one edge from
// opposite sides bound a disk with it and cancel; an end segment reaching a
// side adjacent to its corner cuts a half-bigon at the puncture and slides
// across that edge, moving the end corner to the matching corner on the far
// side (base and tip swap across a side pair). What survives is normal:
// every interior passage a chord, every end segment meeting the opposite
// side, or the 0-step corner-to-corner form of an edge-parallel class.
void tightenDrawn(const Triangulation& T, DrawnArc& d) {
  std::vector<TraceStep> kept;
  kept.reserve(d.steps.size());
  for (const TraceStep& s : d.steps) {
    if (!kept.empty() && s == reversed(kept.back()))
      kept.pop_back();
    else
      kept.push_back(s);
  }
  size_t lo = 0, hi = kept.size();
  bool moved = true;
  while (moved && lo < hi) {
    moved = false;
    {
      const TraceStep& f = kept[lo];
      Corner loc = T.sideLocation({f.edge, f.fromSide});
      require(loc.tri == d.start.tri, Status::Internal, "trace start detached while sliding");
      if (loc.k != m3(d.start.k + 1)) {
        Corner far = T.sideLocation({f.edge, 1 - f.fromSide});
        d.start = loc.k == d.start.k ? Corner{far.tri, m3(far.k + 1)} : Corner{far.tri, far.k};
        ++lo;
        moved = true;
      }
    }
    if (lo >= hi) break;
    {
      const TraceStep& l = kept[hi - 1];
      Corner loc = T.sideLocation({l.edge, 1 - l.fromSide});
      require(loc.tri == d.end.tri, Status::Internal, "trace end detached while sliding");
      if (loc.k != m3(d.end.k + 1)) {
        Corner far = T.sideLocation({l.edge, l.fromSide});
        d.end = loc.k == d.end.k ? Corner{far.tri, m3(far.k + 1)} : Corner{far.tri, far.k};
        --hi;
        moved = true;
      }
    }
  }
  d.steps.assign(kept.begin() + static_cast<std::ptrdiff_t>(lo),
                 kept.begin() + static_cast<std::ptrdiff_t>(hi));
}

struct TightArc {
  EdgeCoordinates coords;
  int aSideEnd = 0;
};

// Coordinates of the taut drawing plus which canonical end its start is.
// With distinct end corners the canonical direction is the corner order; a
// 0-step trace is edge-parallel and keyed to the base corner of side 0.
TightArc classify(const Triangulation& T, const DrawnArc& d) {
  if (d.steps.empty()) {
    require(d.start.tri == d.end.tri, Status::Internal, "0-step trace with split corners");
    require(d.start.k != d.end.k, Status::Internal, "unicorn tightened to a trivial loop");
    int slot;
    bool startIsBase;
    if (d.end.k == m3(d.start.k + 1)) {
      slot = d.start.k;
      startIsBase = true;
    } else {
      require(d.start.k == m3(d.end.k + 1), Status::Internal, "0-step corners not adjacent");
      slot = d.end.k;
      startIsBase = false;
    }
    EdgeSide es = T.side(d.start.tri, slot);
    return {EdgeCoordinates::sentinel(T.numEdges(), es.edge),
            startIsBase == (es.side == 0) ? 0 : 1};
  }
  TightArc out;
  out.coords = coordsOfTrace(T, d.steps);
  if (!(d.start == d.end)) {
    out.aSideEnd = d.start < d.end ? 0 : 1;
    return out;
  }
  ResolveInfo info = resolve(T, out.coords);
  require(info.kind == ClassKind::Multiarc && info.components.size() == 1, Status::Internal,
          "taut unicorn trace does not resolve to a single arc");
  const ArcTrace& canon = info.components.front().trace;
  std::vector<TraceStep> rev(d.steps.rbegin(), d.steps.rend());
  for (TraceStep& s : rev) s = reversed(s);
  bool fwd = canon.steps == d.steps && canon.start.corner == d.start && canon.end.corner == d.end;
  bool bwd = canon.steps == rev && canon.start.corner == d.end && canon.end.corner == d.start;
  require(fwd != bwd, Status::Internal, "palindromic unicorn trace leaves its ends unresolved");
  out.aSideEnd = fwd ? 0 : 1;
  return out;
}

} // namespace

// == unicorn arcs

std::vector<UnicornArc> unicornArcs(const Triangulation& T, const OrientedArc& a,
                                    const OrientedArc& b) {
  require(a.endIndex == 0 || a.endIndex == 1, Status::MalformedInput,
          "endpoint index must be 0 or 1");
  require(b.endIndex == 0 || b.endIndex == 1, Status::MalformedInput,
          "endpoint index must be 0 or 1");
  require(!(a.arc == b.arc), Status::SameClass, "unicorn arcs need two distinct arc classes");
  Overlay ov(T, a.arc, b.arc);
  const Component& A = theArc(ov.infoA(), "first class");
  const Component& B = theArc(ov.infoB(), "second class");
  std::vector<Crossing> cross = ov.crossingsOf(0, 0);
  const int64_t n = static_cast<int64_t>(cross.size());

  struct Witness {
    int64_t aOrd = 0, bOrd = 0, sa = 0, sb = 0;
  };
  std::vector<Witness> ws(cross.size());
  for (size_t k = 0; k < cross.size(); ++k) {
    const Crossing& c = cross[k];
    ws[k] = {a.endIndex ? n - 1 - c.alongA : c.alongA,
             b.endIndex ? n - 1 - c.alongB : c.alongB, c.aSector, c.bSector};
  }
  std::sort(ws.begin(), ws.end(),
            [](const Witness& x, const Witness& y) { return x.aOrd < y.aOrd; });
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int64_t k = 0; k < n; ++k) {
    // ties cannot occur: crossings are strictly ordered along both arcs
    require(ws[static_cast<size_t>(k)].aOrd == k, Status::Internal,
            "crossing ordinals along a collide");
    int64_t bo = ws[static_cast<size_t>(k)].bOrd;
    require(bo >= 0 && bo < n && !seen[static_cast<size_t>(bo)], Status::Internal,
            "crossing ordinals along b collide");
    seen[static_cast<size_t>(bo)] = 1;
  }

  // a crossing is a unicorn witness exactly when no earlier crossing along a
  // is also earlier along b; listed by decreasing a-segment
  std::vector<Witness> stair;
  int64_t minB = n;
  for (const Witness& w : ws)
    if (w.bOrd < minB) {
      minB = w.bOrd;
      stair.push_back(w);
    }
  std::reverse(stair.begin(), stair.end());

  std::vector<UnicornArc> out;
  out.reserve(stair.size());
  for (const Witness& w : stair) {
    DrawnArc d = spliceAt(A, B, a.endIndex, b.endIndex, w.sa, w.sb);
    validateDrawn(T, d);
    tightenDrawn(T, d);
    TightArc t = classify(T, d);
    require(t.coords.sentinelEdge() >= 0 || !t.coords.isZero(), Status::Internal,
            "unicorn class is not essential");
    out.push_back({w.aOrd, w.bOrd, w.aOrd + 1, std::move(t.coords), t.aSideEnd});
  }
  for (size_t k = 0; k + 1 < out.size(); ++k)
    require(out[k].prefixLenA > out[k + 1].prefixLenA &&
                out[k].indexAlongB < out[k + 1].indexAlongB,
            Status::Internal, "unicorn witnesses do not form a staircase");
  if (!out.empty())
    require(out.front().indexAlongB == 0 && out.back().indexAlongA == 0, Status::Internal,
            "unicorn staircase misses an endpoint-adjacent witness");
  return out;
}

// == unicorn paths

UnicornPath unicornPath(const Triangulation& T, const OrientedArc& a, const OrientedArc& b) {
  UnicornPath p;
  p.a = a;
  p.b = b;
  p.witnesses = unicornArcs(T, a, b);
  p.vertices.reserve(p.witnesses.size() + 2);
  p.vertices.push_back(a.arc);
  for (const UnicornArc& w : p.witnesses) p.vertices.push_back(w.arcClass);
  p.vertices.push_back(b.arc);
  return p;
}

OrientedArc pathOrientedA(const UnicornPath& p, int64_t k) {
  require(k >= 0 && k < p.length(), Status::IndexOutOfRange, "a-role vertex index out of range");
  if (k == 0) return p.a;
  return {p.vertices[static_cast<size_t>(k)], p.witnesses[static_cast<size_t>(k - 1)].aSideEnd};
}

OrientedArc pathOrientedB(const UnicornPath& p, int64_t k) {
  require(k >= 1 && k <= p.length(), Status::IndexOutOfRange, "b-role vertex index out of range");
  if (k == p.length()) return p.b;
  return {p.vertices[static_cast<size_t>(k)],
          1 - p.witnesses[static_cast<size_t>(k - 1)].aSideEnd};
}

nlohmann::json pathToJson(const UnicornPath& p) {
  nlohmann::json vs = nlohmann::json::array();
  for (const EdgeCoordinates& v : p.vertices) vs.push_back(coordsToJson(v));
  nlohmann::json witnesses = nlohmann::json::array();
  for (const UnicornArc& w : p.witnesses)
    witnesses.push_back({{"index_along_a", w.indexAlongA},
                         {"index_along_b", w.indexAlongB},
                         {"prefix_len_a", w.prefixLenA}});
  return {{"vertices", vs}, {"witnesses", witnesses}};
}

// == subpath dichotomy

SubpathWitness verifySubpathLemma(const Triangulation& T, const OrientedArc& a,
                                  const OrientedArc& b, int64_t i, int64_t j) {
  UnicornPath p = unicornPath(T, a, b);
  require(i >= 0 && i < j && j <= p.length(), Status::IndexOutOfRange,
          "need 0 <= i < j <= path length");
  SubpathWitness w;
  const EdgeCoordinates& vi = p.vertices[static_cast<size_t>(i)];
  const EdgeCoordinates& vj = p.vertices[static_cast<size_t>(j)];
  if (vi == vj) {
    require(j == i + 2, Status::LemmaViolated, "repeated class outside the two-step disjunct");
    w.isAdjacency = true;
    w.crossings = 0;
    return w;
  }
  w.sub = unicornPath(T, pathOrientedA(p, i), pathOrientedB(p, j));
  w.isSubpath = static_cast<int64_t>(w.sub.vertices.size()) == j - i + 1 &&
                std::equal(w.sub.vertices.begin(), w.sub.vertices.end(),
                           p.vertices.begin() + static_cast<std::ptrdiff_t>(i));
  if (!w.isSubpath && j == i + 2) {
    w.crossings = intersectionNumber(T, vi, vj);
    w.isAdjacency = w.crossings == 0;
  }
  require(w.isSubpath || w.isAdjacency, Status::LemmaViolated,
          "neither the subpath nor the adjacency disjunct holds");
  return w;
}

// == truncated infinite paths

TruncatedPath truncatedInfinitePath(const Triangulation& T, const OrientedArc& a,
                                    const OrientedArc& b, const Word& f, int64_t n) {
  require(n >= 0, Status::MalformedInput, "orbit stage must be nonnegative");
  WordApplication app(T, f);
  OrientedArc cur = b, prev = b;
  for (int64_t k = 0; k < n; ++k) {
    prev = cur;
    cur = app.applyOriented(cur);
  }
  TruncatedPath out;
  out.movedEnd = cur;
  out.path = unicornPath(T, a, cur);
  if (n == 0) return out;
  UnicornPath prevPath = unicornPath(T, a, prev);
  const int64_t m = std::min(out.path.length(), prevPath.length()) + 1;
  int64_t shared = 0;
  while (shared < m && out.path.vertices[static_cast<size_t>(shared)] ==
                           prevPath.vertices[static_cast<size_t>(shared)])
    ++shared;
  out.commonPrefix = shared;
  return out;
}

} // namespace ucn
