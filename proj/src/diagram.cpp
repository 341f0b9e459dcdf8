// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#include "diagram.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ucn {

namespace {

inline int m3(int k) { return k % 3; }

// == per-triangle decomposition

// Corner defects D[k] = s[k] + s[k+2] - s[k+1] determine the cells: with all
// defects nonnegative and even, chords[k] = D[k]/2; a single negative defect
// forces that corner to absorb vertex strands instead.
TriangleCells cellsForTriangle(const std::array<int64_t, 3>& s, int tri) {
  std::array<int64_t, 3> defect{};
  for (int k = 0; k < 3; ++k) defect[k] = s[k] + s[m3(k + 2)] - s[m3(k + 1)];
  int neg = -1;
  for (int k = 0; k < 3; ++k)
    if (defect[k] < 0) {
      require(neg < 0, Status::Internal, "two negative corner defects in one triangle");
      neg = k;
    }
  TriangleCells out;
  if (neg >= 0) {
    out.vertex[neg] = -defect[neg];
    out.chords[m3(neg + 1)] = s[neg];
    out.chords[m3(neg + 2)] = s[m3(neg + 2)];
  } else {
    for (int k = 0; k < 3; ++k) {
      require(defect[k] % 2 == 0, Status::Unrealizable,
              "triangle " + std::to_string(tri) +
                  " has an odd corner defect; no normal diagram has these weights");
      out.chords[k] = defect[k] / 2;
    }
  }
  return out;
}

// == component tracing

struct TraceResult {
  std::vector<TraceStep> steps;
  std::vector<int64_t> pos; // edge-canonical position of each crossing
  std::vector<Corner> cuts; // corner cut by the chord after each step
  EndRef end;
};

using Visited = std::vector<std::vector<uint8_t>>;

void markPoint(Visited& visited, EdgeSide es, int64_t canon) {
  uint8_t& flag = visited[static_cast<size_t>(es.edge)][static_cast<size_t>(canon - 1)];
  require(!flag, Status::Internal, "strand point crossed twice while tracing");
  flag = 1;
}

TraceResult traceArc(const Triangulation& T, const DiagramGeometry& G, Visited& visited,
                     EndRef from) {
  TraceResult out;
  auto [slot, pos] = G.endSlotPos(from.corner, from.strand);
  EdgeSide es = T.side(from.corner.tri, slot);
  int64_t canon = G.canonicalPos(es, pos);
  for (;;) {
    out.steps.push_back({es.edge, es.side});
    out.pos.push_back(canon);
    markPoint(visited, es, canon);
    Corner in = T.sideLocation({es.edge, 1 - es.side});
    int64_t p = G.localPos({es.edge, 1 - es.side}, canon);
    Continuation c = G.enterFrom(in.tri, in.k, p);
    if (c.cat == 1) {
      out.end = EndRef{c.corner, c.strand};
      return out;
    }
    out.cuts.push_back(Corner{in.tri, c.cat == 0 ? in.k : m3(in.k + 1)});
    es = T.side(in.tri, c.exitSlot);
    canon = G.canonicalPos(es, c.exitPos);
  }
}

TraceResult traceClosed(const Triangulation& T, const DiagramGeometry& G, Visited& visited,
                        int e0, int64_t p0) {
  TraceResult out;
  EdgeSide es{e0, 0};
  int64_t canon = p0;
  for (;;) {
    out.steps.push_back({es.edge, es.side});
    out.pos.push_back(canon);
    markPoint(visited, es, canon);
    Corner in = T.sideLocation({es.edge, 1 - es.side});
    int64_t p = G.localPos({es.edge, 1 - es.side}, canon);
    Continuation c = G.enterFrom(in.tri, in.k, p);
    require(c.cat != 1, Status::Internal, "open strand found while tracing a closed component");
    out.cuts.push_back(Corner{in.tri, c.cat == 0 ? in.k : m3(in.k + 1)});
    es = T.side(in.tri, c.exitSlot);
    canon = G.canonicalPos(es, c.exitPos);
    if (es.edge == e0 && es.side == 0 && canon == p0) return out;
  }
}

void canonicalizeArc(ArcTrace& tr) {
  if (tr.end < tr.start) {
    std::swap(tr.start, tr.end);
    std::reverse(tr.steps.begin(), tr.steps.end());
    for (auto& s : tr.steps) s = reversed(s);
    std::reverse(tr.stepPos.begin(), tr.stepPos.end());
  }
}

// Lexicographically least rotation over both traversal directions; positions
// travel with their steps and break ties between rotations of a periodic loop.
void canonicalizeLoop(std::vector<TraceStep>& steps, std::vector<int64_t>& pos) {
  const size_t n = steps.size();
  if (n == 0 || n > 20000) return;
  std::vector<TraceStep> bestS = steps;
  std::vector<int64_t> bestP = pos;
  auto lessAt = [&](const std::vector<TraceStep>& s, const std::vector<int64_t>& sp, size_t r) {
    for (size_t i = 0; i < n; ++i) {
      const TraceStep& a = s[(i + r) % n];
      if (a < bestS[i]) return true;
      if (!(a == bestS[i])) return false;
    }
    for (size_t i = 0; i < n; ++i)
      if (sp[(i + r) % n] != bestP[i]) return sp[(i + r) % n] < bestP[i];
    return false;
  };
  auto consider = [&](const std::vector<TraceStep>& s, const std::vector<int64_t>& sp) {
    for (size_t r = 0; r < n; ++r)
      if (lessAt(s, sp, r)) {
        std::vector<TraceStep> rs(n);
        std::vector<int64_t> rp(n);
        for (size_t i = 0; i < n; ++i) {
          rs[i] = s[(i + r) % n];
          rp[i] = sp[(i + r) % n];
        }
        bestS = std::move(rs);
        bestP = std::move(rp);
      }
  };
  consider(steps, pos);
  std::vector<TraceStep> rev(n);
  std::vector<int64_t> rpos(n);
  for (size_t i = 0; i < n; ++i) {
    rev[i] = reversed(steps[n - 1 - i]);
    rpos[i] = pos[n - 1 - i];
  }
  consider(rev, rpos);
  steps = std::move(bestS);
  pos = std::move(bestP);
}

// A closed component is vertex-linking exactly when its chords cut each corner
// of one puncture's cycle once.
bool isPeripheral(const Triangulation& T, const std::vector<Corner>& cuts) {
  if (cuts.empty()) return false;
  int cls = T.punctureOf(cuts.front());
  if (cuts.size() != T.punctureCycles()[static_cast<size_t>(cls)].size()) return false;
  std::set<Corner> seen;
  for (const Corner& c : cuts) {
    if (T.punctureOf(c) != cls) return false;
    if (!seen.insert(c).second) return false;
  }
  return true;
}

} // namespace

// == DiagramGeometry

DiagramGeometry::DiagramGeometry(const Triangulation& T, std::vector<TriangleCells> cells,
                                 std::vector<int64_t> weights)
    : T_(&T), cells_(std::move(cells)), weights_(std::move(weights)) {}

int64_t DiagramGeometry::sideCount(int t, int i) const {
  return weight(T_->side(t, i).edge);
}

std::array<int64_t, 3> DiagramGeometry::sideBlocks(int t, int i) const {
  const TriangleCells& c = cells_[static_cast<size_t>(t)];
  return {c.chords[static_cast<size_t>(i)], c.vertex[static_cast<size_t>(m3(i + 2))],
          c.chords[static_cast<size_t>(m3(i + 1))]};
}

Continuation DiagramGeometry::enterFrom(int t, int i, int64_t p) const {
  auto b = sideBlocks(t, i);
  require(p >= 1 && p <= b[0] + b[1] + b[2], Status::Internal, "strand position out of range");
  Continuation out;
  if (p <= b[0]) {
    out.cat = 0;
    out.exitSlot = m3(i + 2);
    out.exitPos = sideCount(t, out.exitSlot) + 1 - p;
  } else if (p <= b[0] + b[1]) {
    out.cat = 1;
    out.corner = Corner{t, m3(i + 2)};
    out.strand = p - b[0];
  } else {
    out.cat = 2;
    out.exitSlot = m3(i + 1);
    out.exitPos = sideCount(t, i) + 1 - p;
  }
  return out;
}

std::pair<int, int64_t> DiagramGeometry::endSlotPos(Corner c, int64_t strand) const {
  int slot = m3(c.k + 1);
  const TriangleCells& cells = cells_[static_cast<size_t>(c.tri)];
  require(strand >= 1 && strand <= cells.vertex[static_cast<size_t>(c.k)], Status::Internal,
          "no such terminating strand at this corner");
  return {slot, cells.chords[static_cast<size_t>(slot)] + strand};
}

// == ResolveInfo

int ResolveInfo::numArcs() const {
  int n = 0;
  for (const Component& c : components) n += c.kind == ComponentKind::Arc ? 1 : 0;
  return n;
}

int ResolveInfo::numClosed() const { return static_cast<int>(components.size()) - numArcs(); }

// == resolve

ResolveInfo resolve(const Triangulation& T, const EdgeCoordinates& x) {
  checkCoordinateShape(T, x);
  ResolveInfo info;
  info.weights.assign(static_cast<size_t>(T.numEdges()), 0);
  info.cells.assign(static_cast<size_t>(T.numTriangles()), TriangleCells{});

  int se = x.sentinelEdge();
  if (se >= 0) {
    info.isSentinel = true;
    info.sentinelEdge = se;
    Corner c0 = T.sideLocation({se, 0});
    Component comp;
    comp.kind = ComponentKind::Arc;
    comp.trace.start = EndRef{c0, 1};
    comp.trace.end = EndRef{Corner{c0.tri, m3(c0.k + 1)}, 1};
    comp.coords = EdgeCoordinates::sentinel(T.numEdges(), se);
    info.components.push_back(std::move(comp));
    info.kind = ClassKind::Multiarc;
    return info;
  }
  if (x.isZero()) return info;

  int64_t total = 0;
  for (int e = 0; e < T.numEdges(); ++e) {
    info.weights[static_cast<size_t>(e)] = toInt64(x.w[static_cast<size_t>(e)], "edge weight");
    total += info.weights[static_cast<size_t>(e)];
    require(total <= 50'000'000, Status::Internal, "diagram too large to materialize");
  }
  for (int t = 0; t < T.numTriangles(); ++t) {
    std::array<int64_t, 3> sw{};
    for (int i = 0; i < 3; ++i) sw[static_cast<size_t>(i)] = info.weights[static_cast<size_t>(T.side(t, i).edge)];
    info.cells[static_cast<size_t>(t)] = cellsForTriangle(sw, t);
  }

  DiagramGeometry G = info.geometry(T);
  Visited visited(static_cast<size_t>(T.numEdges()));
  for (int e = 0; e < T.numEdges(); ++e)
    visited[static_cast<size_t>(e)].assign(static_cast<size_t>(info.weights[static_cast<size_t>(e)]), 0);

  std::vector<Component> arcs, loops;
  for (int t = 0; t < T.numTriangles(); ++t)
    for (int k = 0; k < 3; ++k)
      for (int64_t u = 1; u <= info.cells[static_cast<size_t>(t)].vertex[static_cast<size_t>(k)]; ++u) {
        EndRef from{Corner{t, k}, u};
        auto [slot, pos] = G.endSlotPos(from.corner, u);
        EdgeSide es = T.side(t, slot);
        int64_t canon = G.canonicalPos(es, pos);
        if (visited[static_cast<size_t>(es.edge)][static_cast<size_t>(canon - 1)]) continue;
        TraceResult tr = traceArc(T, G, visited, from);
        require(!(tr.end == from), Status::Internal, "arc closed up on its own end");
        Component comp;
        comp.kind = ComponentKind::Arc;
        comp.trace.start = from;
        comp.trace.end = tr.end;
        comp.trace.steps = std::move(tr.steps);
        comp.trace.stepPos = std::move(tr.pos);
        canonicalizeArc(comp.trace);
        comp.coords = coordsOfTrace(T, comp.trace.steps);
        arcs.push_back(std::move(comp));
      }
  for (int e = 0; e < T.numEdges(); ++e)
    for (int64_t p0 = 1; p0 <= info.weights[static_cast<size_t>(e)]; ++p0) {
      if (visited[static_cast<size_t>(e)][static_cast<size_t>(p0 - 1)]) continue;
      TraceResult tr = traceClosed(T, G, visited, e, p0);
      Component comp;
      comp.kind = isPeripheral(T, tr.cuts) ? ComponentKind::Peripheral : ComponentKind::ClosedCurve;
      canonicalizeLoop(tr.steps, tr.pos);
      comp.trace.steps = std::move(tr.steps);
      comp.trace.stepPos = std::move(tr.pos);
      comp.coords = coordsOfTrace(T, comp.trace.steps);
      loops.push_back(std::move(comp));
    }

  std::sort(arcs.begin(), arcs.end(), [](const Component& a, const Component& b) {
    if (!(a.trace.start == b.trace.start)) return a.trace.start < b.trace.start;
    if (!(a.trace.end == b.trace.end)) return a.trace.end < b.trace.end;
    return a.trace.steps < b.trace.steps;
  });
  std::sort(loops.begin(), loops.end(),
            [](const Component& a, const Component& b) { return a.trace.steps < b.trace.steps; });

  info.hasPeripheral = std::any_of(loops.begin(), loops.end(), [](const Component& c) {
    return c.kind == ComponentKind::Peripheral;
  });
  bool anyArc = !arcs.empty(), anyLoop = !loops.empty();
  info.components = std::move(arcs);
  info.components.insert(info.components.end(), std::make_move_iterator(loops.begin()),
                         std::make_move_iterator(loops.end()));
  info.kind = anyArc && anyLoop ? ClassKind::Mixed
              : anyArc          ? ClassKind::Multiarc
              : anyLoop         ? ClassKind::Multicurve
                                : ClassKind::Empty;
  return info;
}

EdgeCoordinates coordsOfTrace(const Triangulation& T, const std::vector<TraceStep>& steps) {
  EdgeCoordinates c = EdgeCoordinates::zero(T.numEdges());
  for (const TraceStep& s : steps) c.w[static_cast<size_t>(s.edge)] += 1;
  return c;
}

} // namespace ucn
