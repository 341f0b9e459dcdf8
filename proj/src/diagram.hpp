// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <vector>

#include "surface.hpp"

namespace ucn {

// Forced normal decomposition of one triangle: chords[k] strands cut corner k
// (joining the two sides flanking it), vertex[k] strands terminate at corner k
// (crossing the opposite side).
struct TriangleCells {
  std::array<int64_t, 3> chords{};
  std::array<int64_t, 3> vertex{};
};

// One edge-crossing event: the strand crosses `edge` coming from side `fromSide`.
struct TraceStep {
  int edge = -1;
  int fromSide = -1;
  bool operator==(const TraceStep&) const = default;
  bool operator<(const TraceStep& o) const {
    return edge != o.edge ? edge < o.edge : fromSide < o.fromSide;
  }
};

inline TraceStep reversed(TraceStep s) { return TraceStep{s.edge, 1 - s.fromSide}; }

// One end of an arc: the corner sector it terminates in, plus its 1-based rank
// within that corner's block of terminating strands.
struct EndRef {
  Corner corner;
  int64_t strand = 1;
  bool operator==(const EndRef&) const = default;
  bool operator<(const EndRef& o) const {
    if (!(corner == o.corner)) return corner < o.corner;
    return strand < o.strand;
  }
};

struct ArcTrace {
  EndRef start, end;
  std::vector<TraceStep> steps; // closed components: steps only, corners unset
  // edge-canonical position of each crossing, aligned with steps
  std::vector<int64_t> stepPos;
};

enum class ComponentKind { Arc, ClosedCurve, Peripheral };

struct Component {
  ComponentKind kind = ComponentKind::Arc;
  ArcTrace trace;
  EdgeCoordinates coords;
};

enum class ClassKind { Empty, Multiarc, Multicurve, Mixed };

// Strand continuation inside one triangle, entered through slot i.
struct Continuation {
  int cat = -1;        // 0: chord at the entry corner, 1: terminates at the far
                       // corner, 2: chord at the next corner
  Corner corner;       // cat 1
  int64_t strand = 0;  // cat 1: rank within the corner block
  int exitSlot = -1;   // cat 0 / 2
  int64_t exitPos = 0; // cat 0 / 2: local position on the exit slot
};

// Pure position arithmetic over the decomposition; needs no materialized
// strand objects, so it also works at mapping-class-iteration scale.
class DiagramGeometry {
public:
  DiagramGeometry() = default;
  DiagramGeometry(const Triangulation& T, std::vector<TriangleCells> cells,
                  std::vector<int64_t> weights);

  const Triangulation& surface() const { return *T_; }
  int64_t weight(int e) const { return weights_[static_cast<size_t>(e)]; }
  const TriangleCells& cellsAt(int t) const { return cells_[static_cast<size_t>(t)]; }

  // strands crossing slot i of triangle t, grouped ascending from corner i:
  // [chords at corner i | ends at corner i+2 | chords at corner i+1]
  int64_t sideCount(int t, int i) const;
  std::array<int64_t, 3> sideBlocks(int t, int i) const;

  Continuation enterFrom(int t, int i, int64_t p) const;

  // local slot position (ascending from the slot's base corner) vs
  // edge-canonical position (side-0 ascending)
  int64_t canonicalPos(EdgeSide es, int64_t local) const {
    return es.side == 0 ? local : weight(es.edge) + 1 - local;
  }
  int64_t localPos(EdgeSide es, int64_t canonical) const { return canonicalPos(es, canonical); }

  // the side position of the vertex strand with the given rank at a corner
  // (it crosses the side opposite the corner)
  std::pair<int, int64_t> endSlotPos(Corner c, int64_t strand) const;

private:
  const Triangulation* T_ = nullptr;
  std::vector<TriangleCells> cells_;
  std::vector<int64_t> weights_;
};

struct ResolveInfo {
  std::vector<TriangleCells> cells;
  std::vector<int64_t> weights;
  std::vector<Component> components;
  ClassKind kind = ClassKind::Empty;
  bool hasPeripheral = false;
  bool isSentinel = false;
  int sentinelEdge = -1;

  DiagramGeometry geometry(const Triangulation& T) const { return {T, cells, weights}; }
  int numArcs() const;
  int numClosed() const;
};

// Untangles edge coordinates into their unique normal diagram; reports the
// connected components with their traces. Throws Unrealizable when no
// nonnegative decomposition matches, EdgeParallelAmbiguity for impure -1 use.
ResolveInfo resolve(const Triangulation& T, const EdgeCoordinates& x);

// Coordinates of the class traced out by an arc trace (steps counted per edge).
EdgeCoordinates coordsOfTrace(const Triangulation& T, const std::vector<TraceStep>& steps);

} // namespace ucn
