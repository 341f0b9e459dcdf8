// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "diagram.hpp"

namespace ucn {

// How the two diagrams' points are interleaved along each edge. Canonical
// orders every pair by cutting-sequence comparison and lands in minimal
// position directly; the other modes exist to exercise tighten().
enum class OverlayMode { Canonical, Naive, Random };

// One transverse crossing between a component of the first diagram and a
// component of the second. Sectors count the strand's edge events before the
// crossing; ordinals number the crossings of this component pair along each
// strand's canonical traversal.
struct Crossing {
  int tri = -1;
  int64_t aSector = 0, bSector = 0;
  int64_t alongA = 0, alongB = 0;
};

// Two resolved diagrams superimposed on one surface. Points of both diagrams
// share each edge in a single merged order; crossings are read off from the
// interleaving of strand pieces around each triangle's boundary.
class Overlay {
public:
  Overlay(const Triangulation& T, const EdgeCoordinates& xa, const EdgeCoordinates& xb,
          OverlayMode mode = OverlayMode::Canonical, uint64_t seed = 0);

  const Triangulation& surface() const { return *T_; }
  const ResolveInfo& infoA() const { return ra_; }
  const ResolveInfo& infoB() const { return rb_; }

  // merged point order per edge: 0 = first diagram, 1 = second
  const std::vector<std::vector<uint8_t>>& pattern() const { return pattern_; }

  int64_t crossingCount() const;

  // crossings of first-diagram component ca with second-diagram component cb,
  // sorted along ca's canonical traversal
  std::vector<Crossing> crossingsOf(int ca, int cb) const;

  // innermost empty bigon or cusp half-bigon; removing one swaps the two
  // strands past each other along their shared corridor
  bool removeOneBigon();
  int64_t tighten();
  bool isTight() const;

private:
  struct Piece {
    int who = 0;
    int comp = 0;
    int64_t sector = 0;
    int64_t lo = 0, hi = 0;
    int64_t entry = 0;
  };
  struct FanEntry {
    int who = 0, comp = 0, endTag = 0;
    int64_t key = 0;
    int otherCornerK = -1;
  };
  struct RawCrossing {
    int tri = -1, ca = 0, cb = 0;
    int64_t sa = 0, sb = 0;
    int64_t wa = 0, wb = 0;
  };
  struct SwapPlan {
    std::vector<std::pair<int, int64_t>> swaps; // (edge, lower merged rank)
  };

  bool aFirst(int e, int64_t posA, int64_t posB) const;
  void rebuild();
  std::vector<RawCrossing> rawCrossings() const;
  std::optional<SwapPlan> findBigonPlan() const;

  const Triangulation* T_ = nullptr;
  ResolveInfo ra_, rb_;
  DiagramGeometry ga_, gb_;
  int64_t walkCap_ = 0;
  std::vector<std::vector<uint8_t>> pattern_;
  std::array<std::vector<std::vector<uint8_t>>, 2> crossDir_;
  std::array<std::vector<std::vector<int64_t>>, 2> rank_;
  std::vector<std::vector<Piece>> pieces_;
  std::vector<std::vector<FanEntry>> fans_;
  std::vector<int64_t> boundaryLen_;
};

// Geometric intersection number of the two classes.
int64_t intersectionNumber(const Triangulation& T, const EdgeCoordinates& x,
                           const EdgeCoordinates& y);

// For a single arc `a`: walking along `a`, the ordinal along `b` of each
// successive crossing with `b` (which must be a single component).
std::vector<int64_t> crossingSequence(const Triangulation& T, const EdgeCoordinates& a,
                                      const EdgeCoordinates& b);

} // namespace ucn
