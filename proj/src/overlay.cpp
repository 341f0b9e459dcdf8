// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#include "overlay.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <utility>

#include "rand.hpp"

namespace ucn {

namespace {

bool interleaves(int64_t alo, int64_t ahi, int64_t blo, int64_t bhi) {
  bool l = alo < blo && blo < ahi;
  bool h = alo < bhi && bhi < ahi;
  return l != h;
}

struct Fenwick {
  std::vector<int64_t> t;
  explicit Fenwick(int64_t n) : t(static_cast<size_t>(n) + 1, 0) {}
  void add(int64_t i) {
    for (++i; i < static_cast<int64_t>(t.size()); i += i & -i) ++t[static_cast<size_t>(i)];
  }
  int64_t countUpTo(int64_t i) const {
    int64_t s = 0;
    for (++i; i > 0; i -= i & -i) s += t[static_cast<size_t>(i)];
    return s;
  }
};

using Interval = std::pair<int64_t, int64_t>;

// Interleaved pairs = endpoints inside minus twice the fully nested intervals.
int64_t countInterleavedSweep(const std::vector<Interval>& A, std::vector<Interval> B,
                              int64_t coords) {
  Fenwick ends(coords);
  for (const auto& [lo, hi] : A) {
    ends.add(lo);
    ends.add(hi);
  }
  std::vector<Interval> byLo = A;
  std::sort(byLo.begin(), byLo.end(), [](const Interval& x, const Interval& y) {
    return x.first > y.first;
  });
  std::sort(B.begin(), B.end(), [](const Interval& x, const Interval& y) {
    return x.first > y.first;
  });
  Fenwick his(coords);
  int64_t total = 0;
  size_t ia = 0;
  for (const auto& [lo, hi] : B) {
    while (ia < byLo.size() && byLo[ia].first > lo) his.add(byLo[ia++].second);
    int64_t inside = ends.countUpTo(hi - 1) - ends.countUpTo(lo);
    int64_t nested = his.countUpTo(hi - 1);
    total += inside - 2 * nested;
  }
  return total;
}

// Edges crossed traveling forward along a component between two crossings,
// identified by the sectors holding them.
struct Segment {
  std::vector<TraceStep> steps;
  std::vector<int64_t> pos;
};

Segment forwardSegment(const Component& c, int64_t s1, int64_t s2) {
  Segment out;
  const auto& st = c.trace.steps;
  const auto& sp = c.trace.stepPos;
  const int64_t m = static_cast<int64_t>(st.size());
  if (c.kind == ComponentKind::Arc) {
    for (int64_t i = s1; i < s2; ++i) {
      out.steps.push_back(st[static_cast<size_t>(i)]);
      out.pos.push_back(sp[static_cast<size_t>(i)]);
    }
  } else {
    int64_t len = ((s2 - s1) % m + m) % m;
    for (int64_t k = 1; k <= len; ++k) {
      size_t i = static_cast<size_t>((s1 + k) % m);
      out.steps.push_back(st[i]);
      out.pos.push_back(sp[i]);
    }
  }
  return out;
}

Segment reversedSegment(Segment s) {
  std::reverse(s.steps.begin(), s.steps.end());
  for (TraceStep& st : s.steps) st = reversed(st);
  std::reverse(s.pos.begin(), s.pos.end());
  return s;
}

// Tail of an arc from one of its ends up to (not including) the crossing in
// the given sector, traversed end-first.
Segment tailSegment(const Component& c, int end, int64_t sector) {
  if (end == 0) return forwardSegment(c, 0, sector);
  Segment s;
  const int64_t m = static_cast<int64_t>(c.trace.steps.size());
  for (int64_t i = sector; i < m; ++i) {
    s.steps.push_back(c.trace.steps[static_cast<size_t>(i)]);
    s.pos.push_back(c.trace.stepPos[static_cast<size_t>(i)]);
  }
  return reversedSegment(std::move(s));
}

} // namespace

// == construction

Overlay::Overlay(const Triangulation& T, const EdgeCoordinates& xa, const EdgeCoordinates& xb,
                 OverlayMode mode, uint64_t seed)
    : T_(&T), ra_(resolve(T, xa)), rb_(resolve(T, xb)) {
  ga_ = ra_.geometry(T);
  gb_ = rb_.geometry(T);
  walkCap_ = 4;
  for (int64_t w : ra_.weights) walkCap_ += w;
  for (int64_t w : rb_.weights) walkCap_ += w;

  for (int who = 0; who < 2; ++who) {
    const ResolveInfo& info = who ? rb_ : ra_;
    auto& dirs = crossDir_[who];
    dirs.assign(static_cast<size_t>(T.numEdges()), {});
    for (int e = 0; e < T.numEdges(); ++e)
      dirs[static_cast<size_t>(e)].assign(static_cast<size_t>(info.weights[static_cast<size_t>(e)]), 0);
    for (const Component& comp : info.components)
      for (size_t k = 0; k < comp.trace.steps.size(); ++k) {
        const TraceStep& s = comp.trace.steps[k];
        dirs[static_cast<size_t>(s.edge)][static_cast<size_t>(comp.trace.stepPos[k] - 1)] =
            static_cast<uint8_t>(s.fromSide);
      }
  }

  pattern_.assign(static_cast<size_t>(T.numEdges()), {});
  Rng rng(seed);
  for (int e = 0; e < T.numEdges(); ++e) {
    int64_t wa = ra_.weights[static_cast<size_t>(e)];
    int64_t wb = rb_.weights[static_cast<size_t>(e)];
    auto& pat = pattern_[static_cast<size_t>(e)];
    pat.reserve(static_cast<size_t>(wa + wb));
    if (mode == OverlayMode::Canonical) {
      int64_t i = 1, j = 1;
      while (i <= wa || j <= wb) {
        bool takeA = j > wb || (i <= wa && aFirst(e, i, j));
        pat.push_back(takeA ? 0 : 1);
        ++(takeA ? i : j);
      }
    } else {
      pat.insert(pat.end(), static_cast<size_t>(wa), 0);
      pat.insert(pat.end(), static_cast<size_t>(wb), 1);
      if (mode == OverlayMode::Random)
        for (int64_t k = static_cast<int64_t>(pat.size()) - 1; k > 0; --k)
          std::swap(pat[static_cast<size_t>(k)], pat[static_cast<size_t>(rng.uniform(0, k))]);
    }
  }
  rebuild();
}

// == cutting-sequence comparison

// Orders one point of each diagram on a shared edge by walking both strand
// continuations in lockstep on both sides of the edge. The entry frames stay
// aligned step over step (chord reversal and the edge mirror cancel), so each
// walk reads off the order of the two escape directions on its side. When the
// two sides agree the strands do not cross along this stretch and that order
// stands. When they disagree the strands cross exactly once inside the shared
// corridor, and the crossing is drawn at the corridor's middle: each edge
// takes the verdict of its nearer divergence end, ties toward side 0. Every
// edge of the corridor then sees the same single placement, which keeps the
// per-edge verdicts mergeable even when the stack mixes strands traveling in
// opposite directions. Strands parallel in both directions stack without
// crossing, sided by the first strand's travel direction.
bool Overlay::aFirst(int e, int64_t posA, int64_t posB) const {
  struct WalkRec {
    bool decided = false;
    int catA = 0, catB = 0;
    int64_t depth = 0;
  };
  auto walk = [&](int side) {
    WalkRec rec;
    Corner in = T_->sideLocation({e, side});
    int64_t pA = side == 0 ? posA : ga_.weight(e) + 1 - posA;
    int64_t pB = side == 0 ? posB : gb_.weight(e) + 1 - posB;
    int t = in.tri, i = in.k;
    for (int64_t guard = 0; guard < walkCap_; ++guard) {
      Continuation ca = ga_.enterFrom(t, i, pA);
      Continuation cb = gb_.enterFrom(t, i, pB);
      if (ca.cat != cb.cat) {
        rec.decided = true;
        rec.catA = ca.cat;
        rec.catB = cb.cat;
        rec.depth = guard + 1;
        return rec;
      }
      if (ca.cat == 1) return rec;
      EdgeSide es = T_->side(t, ca.exitSlot);
      Corner nxt = T_->sideLocation({es.edge, 1 - es.side});
      pA = ga_.weight(es.edge) + 1 - ca.exitPos;
      pB = gb_.weight(es.edge) + 1 - cb.exitPos;
      t = nxt.tri;
      i = nxt.k;
    }
    return rec;
  };
  WalkRec w0 = walk(0);
  WalkRec w1 = walk(1);
  std::optional<bool> fwd, bwd;
  if (w0.decided) fwd = w0.catA < w0.catB;
  if (w1.decided) bwd = !(w1.catA < w1.catB);
  if (!fwd && !bwd)
    return crossDir_[0][static_cast<size_t>(e)][static_cast<size_t>(posA - 1)] == 0;
  if (fwd && !bwd) return *fwd;
  if (!fwd && bwd) return *bwd;
  if (*fwd == *bwd) return *fwd;
  return w0.depth <= w1.depth ? *fwd : *bwd;
}

// == derived boundary tables

void Overlay::rebuild() {
  const Triangulation& T = *T_;
  const int E = T.numEdges();
  const int F = T.numTriangles();

  for (int who = 0; who < 2; ++who) {
    const ResolveInfo& info = who ? rb_ : ra_;
    rank_[who].assign(static_cast<size_t>(E), {});
    for (int e = 0; e < E; ++e)
      rank_[who][static_cast<size_t>(e)].assign(
          static_cast<size_t>(info.weights[static_cast<size_t>(e)]), 0);
  }
  for (int e = 0; e < E; ++e) {
    const auto& pat = pattern_[static_cast<size_t>(e)];
    size_t ia = 0, ib = 0;
    for (size_t idx = 0; idx < pat.size(); ++idx) {
      auto& ranks = rank_[pat[idx]][static_cast<size_t>(e)];
      size_t& i = pat[idx] ? ib : ia;
      require(i < ranks.size(), Status::Internal, "merged pattern does not match the weights");
      ranks[i++] = static_cast<int64_t>(idx);
    }
    require(ia == rank_[0][static_cast<size_t>(e)].size() &&
                ib == rank_[1][static_cast<size_t>(e)].size(),
            Status::Internal, "merged pattern does not match the weights");
  }

  auto mergedCount = [&](int e) {
    return static_cast<int64_t>(pattern_[static_cast<size_t>(e)].size());
  };
  auto mergedOff = [&](int who, EdgeSide es, int64_t canon) {
    int64_t r = rank_[who][static_cast<size_t>(es.edge)][static_cast<size_t>(canon - 1)];
    return es.side == 0 ? r : mergedCount(es.edge) - 1 - r;
  };

  // provisional boundary walk with one slot per corner, for fan sorting
  auto provCorner = [&](int t, int k) {
    int64_t base = 0;
    for (int i = 0; i < k; ++i) base += 1 + mergedCount(T.side(t, i).edge);
    return base;
  };
  auto provLen = [&](int t) { return provCorner(t, 2) + 1 + mergedCount(T.side(t, 2).edge); };
  auto provKey = [&](Corner at, int64_t provIdx) {
    int64_t n = provLen(at.tri);
    return ((provIdx - provCorner(at.tri, at.k)) % n + n) % n;
  };

  fans_.assign(static_cast<size_t>(F) * 3, {});
  auto addFan = [&](Corner c, FanEntry fe) {
    fans_[static_cast<size_t>(c.tri) * 3 + static_cast<size_t>(c.k)].push_back(fe);
  };
  for (int who = 0; who < 2; ++who) {
    const ResolveInfo& info = who ? rb_ : ra_;
    for (int ci = 0; ci < static_cast<int>(info.components.size()); ++ci) {
      const Component& comp = info.components[static_cast<size_t>(ci)];
      if (comp.kind != ComponentKind::Arc) continue;
      Corner cs = comp.trace.start.corner, ce = comp.trace.end.corner;
      const auto& st = comp.trace.steps;
      if (st.empty()) {
        addFan(cs, {who, ci, 0, provKey(cs, provCorner(ce.tri, ce.k)), ce.k});
        addFan(ce, {who, ci, 1, provKey(ce, provCorner(cs.tri, cs.k)), cs.k});
        continue;
      }
      EdgeSide esStart{st.front().edge, st.front().fromSide};
      Corner locS = T.sideLocation(esStart);
      addFan(cs, {who, ci, 0,
                  provKey(cs, provCorner(locS.tri, locS.k) + 1 +
                                  mergedOff(who, esStart, comp.trace.stepPos.front())),
                  -1});
      EdgeSide esEnd{st.back().edge, 1 - st.back().fromSide};
      Corner locE = T.sideLocation(esEnd);
      addFan(ce, {who, ci, 1,
                  provKey(ce, provCorner(locE.tri, locE.k) + 1 +
                                  mergedOff(who, esEnd, comp.trace.stepPos.back())),
                  -1});
    }
  }
  // farther-reaching strands attach closer to the corner's leading side; ties
  // only happen between the two diagrams' edge-parallel pieces
  for (size_t f = 0; f < fans_.size(); ++f) {
    int thisK = static_cast<int>(f % 3);
    std::sort(fans_[f].begin(), fans_[f].end(), [&](const FanEntry& x, const FanEntry& y) {
      if (x.key != y.key) return x.key > y.key;
      return x.otherCornerK > thisK ? x.who < y.who : x.who > y.who;
    });
  }

  boundaryLen_.assign(static_cast<size_t>(F), 0);
  std::vector<std::array<int64_t, 3>> cornerBase(static_cast<size_t>(F));
  std::vector<std::array<int64_t, 3>> sideBase(static_cast<size_t>(F));
  for (int t = 0; t < F; ++t) {
    int64_t acc = 0;
    for (int k = 0; k < 3; ++k) {
      cornerBase[static_cast<size_t>(t)][static_cast<size_t>(k)] = acc;
      acc += static_cast<int64_t>(fans_[static_cast<size_t>(t) * 3 + static_cast<size_t>(k)].size());
      sideBase[static_cast<size_t>(t)][static_cast<size_t>(k)] = acc;
      acc += mergedCount(T.side(t, k).edge);
    }
    boundaryLen_[static_cast<size_t>(t)] = acc;
  }
  auto coordCorner = [&](Corner c, int who, int ci, int endTag) {
    const auto& v = fans_[static_cast<size_t>(c.tri) * 3 + static_cast<size_t>(c.k)];
    for (size_t s = 0; s < v.size(); ++s)
      if (v[s].who == who && v[s].comp == ci && v[s].endTag == endTag)
        return cornerBase[static_cast<size_t>(c.tri)][static_cast<size_t>(c.k)] +
               static_cast<int64_t>(s);
    fail(Status::Internal, "arc end missing from its corner fan");
  };
  auto sideCoord = [&](int who, EdgeSide es, int64_t canon) {
    Corner loc = T.sideLocation(es);
    return std::pair<int, int64_t>(
        loc.tri, sideBase[static_cast<size_t>(loc.tri)][static_cast<size_t>(loc.k)] +
                     mergedOff(who, es, canon));
  };

  pieces_.assign(static_cast<size_t>(F), {});
  auto addPiece = [&](int t, int who, int ci, int64_t sector, int64_t p, int64_t q,
                      int64_t entry) {
    pieces_[static_cast<size_t>(t)].push_back(
        {who, ci, sector, std::min(p, q), std::max(p, q), entry});
  };
  for (int who = 0; who < 2; ++who) {
    const ResolveInfo& info = who ? rb_ : ra_;
    for (int ci = 0; ci < static_cast<int>(info.components.size()); ++ci) {
      const Component& comp = info.components[static_cast<size_t>(ci)];
      const auto& st = comp.trace.steps;
      const auto& sp = comp.trace.stepPos;
      const int64_t m = static_cast<int64_t>(st.size());
      if (comp.kind == ComponentKind::Arc) {
        Corner cs = comp.trace.start.corner, ce = comp.trace.end.corner;
        if (m == 0) {
          int64_t p = coordCorner(cs, who, ci, 0);
          int64_t q = coordCorner(ce, who, ci, 1);
          addPiece(cs.tri, who, ci, 0, p, q, p);
          continue;
        }
        auto [t0, c0] = sideCoord(who, {st[0].edge, st[0].fromSide}, sp[0]);
        require(t0 == cs.tri, Status::Internal, "arc start detached from its first crossing");
        int64_t start = coordCorner(cs, who, ci, 0);
        addPiece(t0, who, ci, 0, start, c0, start);
        for (int64_t j = 1; j < m; ++j) {
          auto [tIn, pIn] = sideCoord(
              who, {st[static_cast<size_t>(j - 1)].edge, 1 - st[static_cast<size_t>(j - 1)].fromSide},
              sp[static_cast<size_t>(j - 1)]);
          auto [tOut, pOut] = sideCoord(
              who, {st[static_cast<size_t>(j)].edge, st[static_cast<size_t>(j)].fromSide},
              sp[static_cast<size_t>(j)]);
          require(tIn == tOut, Status::Internal, "strand piece spans two triangles");
          addPiece(tIn, who, ci, j, pIn, pOut, pIn);
        }
        auto [tEnd, cEnd] = sideCoord(
            who, {st[static_cast<size_t>(m - 1)].edge, 1 - st[static_cast<size_t>(m - 1)].fromSide},
            sp[static_cast<size_t>(m - 1)]);
        require(tEnd == ce.tri, Status::Internal, "arc end detached from its last crossing");
        addPiece(tEnd, who, ci, m, cEnd, coordCorner(ce, who, ci, 1), cEnd);
      } else {
        for (int64_t j = 0; j < m; ++j) {
          auto [tIn, pIn] = sideCoord(
              who, {st[static_cast<size_t>(j)].edge, 1 - st[static_cast<size_t>(j)].fromSide},
              sp[static_cast<size_t>(j)]);
          size_t j2 = static_cast<size_t>((j + 1) % m);
          auto [tOut, pOut] = sideCoord(who, {st[j2].edge, st[j2].fromSide}, sp[j2]);
          require(tIn == tOut, Status::Internal, "strand piece spans two triangles");
          addPiece(tIn, who, ci, j, pIn, pOut, pIn);
        }
      }
    }
  }
}

// == crossings

int64_t Overlay::crossingCount() const {
  int64_t total = 0;
  for (int t = 0; t < T_->numTriangles(); ++t) {
    std::vector<Interval> A, B;
    for (const Piece& p : pieces_[static_cast<size_t>(t)])
      (p.who ? B : A).push_back({p.lo, p.hi});
    if (A.empty() || B.empty()) continue;
    if (A.size() * B.size() <= 4096) {
      for (const auto& a : A)
        for (const auto& b : B)
          total += interleaves(a.first, a.second, b.first, b.second) ? 1 : 0;
    } else {
      total += countInterleavedSweep(A, B, boundaryLen_[static_cast<size_t>(t)]);
    }
  }
  return total;
}

std::vector<Overlay::RawCrossing> Overlay::rawCrossings() const {
  std::vector<RawCrossing> out;
  for (int t = 0; t < T_->numTriangles(); ++t) {
    const auto& ps = pieces_[static_cast<size_t>(t)];
    const int64_t n = boundaryLen_[static_cast<size_t>(t)];
    auto cyc = [&](int64_t from, int64_t x) { return ((x - from) % n + n) % n; };
    for (const Piece& pa : ps) {
      if (pa.who != 0) continue;
      for (const Piece& pb : ps) {
        if (pb.who != 1) continue;
        if (!interleaves(pa.lo, pa.hi, pb.lo, pb.hi)) continue;
        int64_t spanA = cyc(pa.entry, pa.entry == pa.lo ? pa.hi : pa.lo);
        int64_t zlo = cyc(pa.entry, pb.lo);
        int64_t wa = (zlo > 0 && zlo < spanA) ? zlo : cyc(pa.entry, pb.hi);
        int64_t spanB = cyc(pb.entry, pb.entry == pb.lo ? pb.hi : pb.lo);
        int64_t ylo = cyc(pb.entry, pa.lo);
        int64_t wb = (ylo > 0 && ylo < spanB) ? ylo : cyc(pb.entry, pa.hi);
        out.push_back({t, pa.comp, pb.comp, pa.sector, pb.sector, wa, wb});
      }
    }
  }
  return out;
}

std::vector<Crossing> Overlay::crossingsOf(int ca, int cb) const {
  require(ca >= 0 && ca < static_cast<int>(ra_.components.size()) && cb >= 0 &&
              cb < static_cast<int>(rb_.components.size()),
          Status::IndexOutOfRange, "component index out of range");
  std::vector<RawCrossing> mine;
  for (const RawCrossing& r : rawCrossings())
    if (r.ca == ca && r.cb == cb) mine.push_back(r);
  std::sort(mine.begin(), mine.end(), [](const RawCrossing& x, const RawCrossing& y) {
    return std::pair(x.sa, x.wa) < std::pair(y.sa, y.wa);
  });
  std::vector<size_t> byB(mine.size());
  for (size_t i = 0; i < byB.size(); ++i) byB[i] = i;
  std::sort(byB.begin(), byB.end(), [&](size_t x, size_t y) {
    return std::pair(mine[x].sb, mine[x].wb) < std::pair(mine[y].sb, mine[y].wb);
  });
  std::vector<Crossing> out(mine.size());
  for (size_t i = 0; i < mine.size(); ++i)
    out[i] = Crossing{mine[i].tri, mine[i].sa, mine[i].sb, static_cast<int64_t>(i), 0};
  for (size_t j = 0; j < byB.size(); ++j) out[byB[j]].alongB = static_cast<int64_t>(j);
  return out;
}

// == bigon removal

std::optional<Overlay::SwapPlan> Overlay::findBigonPlan() const {
  std::vector<RawCrossing> raw = rawCrossings();
  if (raw.empty()) return std::nullopt;
  const int nA = static_cast<int>(ra_.components.size());
  const int nB = static_cast<int>(rb_.components.size());
  std::vector<std::vector<int>> listA(static_cast<size_t>(nA)), listB(static_cast<size_t>(nB));
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    listA[static_cast<size_t>(raw[static_cast<size_t>(i)].ca)].push_back(i);
    listB[static_cast<size_t>(raw[static_cast<size_t>(i)].cb)].push_back(i);
  }
  for (auto& l : listA)
    std::sort(l.begin(), l.end(), [&](int x, int y) {
      return std::pair(raw[static_cast<size_t>(x)].sa, raw[static_cast<size_t>(x)].wa) <
             std::pair(raw[static_cast<size_t>(y)].sa, raw[static_cast<size_t>(y)].wa);
    });
  for (auto& l : listB)
    std::sort(l.begin(), l.end(), [&](int x, int y) {
      return std::pair(raw[static_cast<size_t>(x)].sb, raw[static_cast<size_t>(x)].wb) <
             std::pair(raw[static_cast<size_t>(y)].sb, raw[static_cast<size_t>(y)].wb);
    });
  std::vector<int64_t> posB(raw.size(), 0);
  for (const auto& l : listB)
    for (size_t j = 0; j < l.size(); ++j) posB[static_cast<size_t>(l[j])] = static_cast<int64_t>(j);

  auto adjacentEverywhere = [&](const Segment& a, const Segment& b) {
    for (size_t k = 0; k < a.steps.size(); ++k) {
      int e = a.steps[k].edge;
      int64_t rA = rank_[0][static_cast<size_t>(e)][static_cast<size_t>(a.pos[k] - 1)];
      int64_t rB = rank_[1][static_cast<size_t>(e)][static_cast<size_t>(b.pos[k] - 1)];
      if (rA != rB + 1 && rB != rA + 1) return false;
    }
    return true;
  };
  auto planOf = [&](const Segment& a, const Segment& b) {
    SwapPlan plan;
    for (size_t k = 0; k < a.steps.size(); ++k) {
      int e = a.steps[k].edge;
      int64_t rA = rank_[0][static_cast<size_t>(e)][static_cast<size_t>(a.pos[k] - 1)];
      int64_t rB = rank_[1][static_cast<size_t>(e)][static_cast<size_t>(b.pos[k] - 1)];
      plan.swaps.push_back({e, std::min(rA, rB)});
    }
    return plan;
  };

  for (int ca = 0; ca < nA; ++ca) {
    const auto& L = listA[static_cast<size_t>(ca)];
    const Component& compA = ra_.components[static_cast<size_t>(ca)];
    const int mA = static_cast<int>(L.size());
    if (mA < 2) continue;
    const bool closedA = compA.kind != ComponentKind::Arc;
    const int pairs = closedA ? mA : mA - 1;
    for (int i = 0; i < pairs; ++i) {
      int x = L[static_cast<size_t>(i)];
      int y = L[static_cast<size_t>((i + 1) % mA)];
      const RawCrossing& cx = raw[static_cast<size_t>(x)];
      const RawCrossing& cy = raw[static_cast<size_t>(y)];
      if (cx.cb != cy.cb) continue;
      const Component& compB = rb_.components[static_cast<size_t>(cx.cb)];
      const bool closedB = compB.kind != ComponentKind::Arc;
      const int mB = static_cast<int>(listB[static_cast<size_t>(cx.cb)].size());
      int64_t ox = posB[static_cast<size_t>(x)], oy = posB[static_cast<size_t>(y)];
      // a closed partner with exactly two crossings is adjacent both ways
      bool fwdAdj = closedB ? (ox + 1) % mB == oy : ox + 1 == oy;
      bool bwdAdj = closedB ? (oy + 1) % mB == ox : oy + 1 == ox;
      Segment sa = forwardSegment(compA, cx.sa, cy.sa);
      if (sa.steps.empty()) continue;
      for (int bdir : {1, -1}) {
        if (bdir > 0 ? !fwdAdj : !bwdAdj) continue;
        Segment sb = bdir > 0 ? forwardSegment(compB, cx.sb, cy.sb)
                              : reversedSegment(forwardSegment(compB, cy.sb, cx.sb));
        if (!(sa.steps == sb.steps)) continue;
        if (!adjacentEverywhere(sa, sb)) continue;
        return planOf(sa, sb);
      }
    }
  }

  for (int ca = 0; ca < nA; ++ca) {
    const auto& L = listA[static_cast<size_t>(ca)];
    const Component& compA = ra_.components[static_cast<size_t>(ca)];
    if (compA.kind != ComponentKind::Arc || L.empty()) continue;
    for (int endA = 0; endA < 2; ++endA) {
      int x = endA == 0 ? L.front() : L.back();
      const RawCrossing& cx = raw[static_cast<size_t>(x)];
      const Component& compB = rb_.components[static_cast<size_t>(cx.cb)];
      if (compB.kind != ComponentKind::Arc) continue;
      const auto& LB = listB[static_cast<size_t>(cx.cb)];
      for (int endB = 0; endB < 2; ++endB) {
        if ((endB == 0 ? LB.front() : LB.back()) != x) continue;
        Corner cornA = endA == 0 ? compA.trace.start.corner : compA.trace.end.corner;
        Corner cornB = endB == 0 ? compB.trace.start.corner : compB.trace.end.corner;
        if (!(cornA == cornB)) continue;
        Segment ta = tailSegment(compA, endA, cx.sa);
        Segment tb = tailSegment(compB, endB, cx.sb);
        if (ta.steps.empty() || !(ta.steps == tb.steps)) continue;
        if (!adjacentEverywhere(ta, tb)) continue;
        return planOf(ta, tb);
      }
    }
  }
  return std::nullopt;
}

bool Overlay::removeOneBigon() {
  auto plan = findBigonPlan();
  if (!plan) return false;
  for (const auto& [e, r] : plan->swaps)
    std::swap(pattern_[static_cast<size_t>(e)][static_cast<size_t>(r)],
              pattern_[static_cast<size_t>(e)][static_cast<size_t>(r + 1)]);
  rebuild();
  return true;
}

int64_t Overlay::tighten() {
  int64_t before = crossingCount();
  while (removeOneBigon()) {
  }
  return before - crossingCount();
}

bool Overlay::isTight() const { return !findBigonPlan().has_value(); }

// == free functions

int64_t intersectionNumber(const Triangulation& T, const EdgeCoordinates& x,
                           const EdgeCoordinates& y) {
  checkCoordinateShape(T, x);
  checkCoordinateShape(T, y);
  if (x == y) return 0;
  Overlay ov(T, x, y);
  return ov.crossingCount();
}

std::vector<int64_t> crossingSequence(const Triangulation& T, const EdgeCoordinates& a,
                                      const EdgeCoordinates& b) {
  Overlay ov(T, a, b);
  require(ov.infoA().components.size() == 1 &&
              ov.infoA().components.front().kind == ComponentKind::Arc,
          Status::NotAnArc, "crossing sequences are read along a single arc");
  require(ov.infoB().components.size() == 1, Status::MalformedInput,
          "the crossing partner must be a single component");
  std::vector<int64_t> out;
  for (const Crossing& c : ov.crossingsOf(0, 0)) out.push_back(c.alongB);
  return out;
}

} // namespace ucn
