// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#include "mapping.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>

namespace ucn {

namespace {

inline int m3(int k) { return k % 3; }

void checkPermutation(int numEdges, const std::vector<int>& perm) {
  require(static_cast<int>(perm.size()) == numEdges, Status::MalformedInput,
          "relabel permutation must list every edge once");
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    require(v >= 0 && v < numEdges, Status::MalformedInput, "relabel entry out of range");
    require(!seen[static_cast<size_t>(v)], Status::MalformedInput, "relabel entry repeated");
    seen[static_cast<size_t>(v)] = 1;
  }
}

} // namespace

// == elementary flip

QuadFrame quadFrame(const Triangulation& T, int e) {
  require(e >= 0 && e < T.numEdges(), Status::IndexOutOfRange,
          "edge " + std::to_string(e) + " out of range");
  Corner a = T.sideLocation({e, 0});
  Corner b = T.sideLocation({e, 1});
  require(a.tri != b.tri, Status::NotFlippable,
          "edge " + std::to_string(e) + " has the same triangle on both sides");
  return QuadFrame{e, a.tri, a.k, b.tri, b.k};
}

Triangulation flipTriangulation(const Triangulation& T, const QuadFrame& q) {
  EdgeSide x = T.side(q.t1, m3(q.i1 + 2));
  EdgeSide u = T.side(q.t1, m3(q.i1 + 1));
  EdgeSide y = T.side(q.t2, m3(q.i2 + 1));
  EdgeSide z = T.side(q.t2, m3(q.i2 + 2));
  std::vector<Triangle> tris = T.triangles();
  tris[static_cast<size_t>(q.t1)] = Triangle{x, y, EdgeSide{q.edge, 0}};
  tris[static_cast<size_t>(q.t2)] = Triangle{z, u, EdgeSide{q.edge, 1}};
  return Triangulation(T.name(), T.numEdges(), std::move(tris), false, {});
}

namespace {

// BigInt mirror of the per-triangle decomposition used by resolve.
struct BigCells {
  std::array<BigInt, 3> chords{};
  std::array<BigInt, 3> vertex{};
};

BigCells bigCellsFor(const Triangulation& T, const EdgeCoordinates& x, int t) {
  std::array<BigInt, 3> s;
  for (int i = 0; i < 3; ++i) s[i] = x.w[static_cast<size_t>(T.side(t, i).edge)];
  std::array<BigInt, 3> defect;
  for (int k = 0; k < 3; ++k) defect[k] = s[k] + s[m3(k + 2)] - s[m3(k + 1)];
  int neg = -1;
  for (int k = 0; k < 3; ++k)
    if (defect[k] < 0) {
      require(neg < 0, Status::Internal, "two negative corner defects in one triangle");
      neg = k;
    }
  BigCells out;
  if (neg >= 0) {
    out.vertex[neg] = -defect[neg];
    out.chords[m3(neg + 1)] = s[neg];
    out.chords[m3(neg + 2)] = s[m3(neg + 2)];
  } else {
    for (int k = 0; k < 3; ++k) {
      require(defect[k] % 2 == 0, Status::Unrealizable,
              "triangle " + std::to_string(t) +
                  " has an odd corner defect; no normal diagram has these weights");
      out.chords[k] = defect[k] / 2;
    }
  }
  return out;
}

} // namespace

EdgeCoordinates flipCoordinates(const Triangulation& T, const QuadFrame& q,
                                const EdgeCoordinates& x) {
  checkCoordinateShape(T, x);
  int se = x.sentinelEdge();
  if (se >= 0) {
    if (se != q.edge) return x;
    EdgeCoordinates unit = EdgeCoordinates::zero(T.numEdges());
    unit.w[static_cast<size_t>(q.edge)] = 1;
    return unit;
  }
  if (x.isZero()) return x;

  BigCells c1 = bigCellsFor(T, x, q.t1);
  BigCells c2 = bigCellsFor(T, x, q.t2);
  const BigInt& w = x.w[static_cast<size_t>(q.edge)];
  const BigInt& nQ1 = c1.chords[q.i1];
  const BigInt& nS1 = c1.chords[m3(q.i1 + 1)];
  const BigInt& nS2 = c2.chords[q.i2];
  const BigInt& nQ2 = c2.chords[m3(q.i2 + 1)];

  // Strands through the quad cross the new diagonal iff they join its two
  // sides: chords between opposite boundary sides, chords cutting an apex, and
  // strands ending at a corner of the old diagonal.
  BigInt wNew = 0;
  if (nQ1 + nS2 > w) wNew += nQ1 + nS2 - w;
  if (nS1 + nQ2 > w) wNew += nS1 + nQ2 - w;
  wNew += c1.chords[m3(q.i1 + 2)] + c2.chords[m3(q.i2 + 2)];
  wNew += c1.vertex[q.i1] + c1.vertex[m3(q.i1 + 1)];
  wNew += c2.vertex[q.i2] + c2.vertex[m3(q.i2 + 1)];

  // Strands running apex to apex are parallel to the new diagonal; only a
  // lone one with nothing else alongside has edge coordinates afterwards.
  const BigInt& vP = c1.vertex[m3(q.i1 + 2)];
  const BigInt& vR = c2.vertex[m3(q.i2 + 2)];
  BigInt lo = std::max(BigInt(nQ1 + 1), BigInt(w - nS2 - vR + 1));
  BigInt hi = std::min(BigInt(nQ1 + vP), BigInt(w - nS2));
  BigInt par = hi >= lo ? BigInt(hi - lo + 1) : BigInt(0);

  EdgeCoordinates out = x;
  out.w[static_cast<size_t>(q.edge)] = wNew;
  if (par > 0) {
    if (par == 1 && out.norm() == 0)
      return EdgeCoordinates::sentinel(T.numEdges(), q.edge);
    fail(Status::EdgeParallelAmbiguity,
         "class has a component isotopic onto edge " + std::to_string(q.edge) +
             " after the flip and more besides");
  }
  return out;
}

// == relabeling

Triangulation relabelTriangulation(const Triangulation& T, const std::vector<int>& perm) {
  checkPermutation(T.numEdges(), perm);
  std::vector<Triangle> tris = T.triangles();
  for (Triangle& tri : tris)
    for (EdgeSide& es : tri) es.edge = perm[static_cast<size_t>(es.edge)];
  return Triangulation(T.name(), T.numEdges(), std::move(tris), false, {});
}

EdgeCoordinates relabelCoordinates(const EdgeCoordinates& x, const std::vector<int>& perm) {
  checkPermutation(x.size(), perm);
  EdgeCoordinates out = EdgeCoordinates::zero(x.size());
  for (size_t e = 0; e < x.w.size(); ++e) out.w[static_cast<size_t>(perm[e])] = x.w[e];
  return out;
}

// == mapping-class words

namespace {

std::vector<std::string> tokenizeTwists(const Triangulation& T, const std::string& names) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < names.size()) {
    if (std::isspace(static_cast<unsigned char>(names[i]))) {
      ++i;
      continue;
    }
    size_t best = 0;
    for (const auto& kv : T.twists())
      if (kv.first.size() > best && names.compare(i, kv.first.size(), kv.first) == 0)
        best = kv.first.size();
    require(best > 0, Status::MalformedInput,
            "no twist of " + T.name() + " matches \"" + names.substr(i) + "\"");
    tokens.push_back(names.substr(i, best));
    i += best;
  }
  return tokens;
}

} // namespace

Word twistWord(const Triangulation& T, const std::string& names) {
  std::vector<std::string> tokens = tokenizeTwists(T, names);
  Word w;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    const TwistWord& tw = T.twist(*it);
    w.insert(w.end(), tw.steps.begin(), tw.steps.end());
  }
  return w;
}

std::string inverseTwists(const Triangulation& T, const std::string& names) {
  std::vector<std::string> tokens = tokenizeTwists(T, names);
  std::string out;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) out += T.twist(*it).inverseName;
  return out;
}

Word wordFromJson(const Triangulation& T, const nlohmann::json& j) {
  if (j.is_string()) return twistWord(T, j.get<std::string>());
  require(j.is_array(), Status::MalformedInput, "word must be a twist string or an array of steps");
  Word w;
  for (const auto& item : j) {
    require(item.is_object(), Status::MalformedInput, "word step must be an object");
    if (item.contains("twist")) {
      Word tw = twistWord(T, item.at("twist").get<std::string>());
      w.insert(w.end(), tw.begin(), tw.end());
    } else if (item.contains("flip")) {
      int e = item.at("flip").get<int>();
      require(e >= 0 && e < T.numEdges(), Status::MalformedInput, "flip edge out of range");
      w.push_back(WordStep{true, e, {}});
    } else if (item.contains("relabel")) {
      std::vector<int> perm = item.at("relabel").get<std::vector<int>>();
      checkPermutation(T.numEdges(), perm);
      w.push_back(WordStep{false, -1, std::move(perm)});
    } else {
      fail(Status::MalformedInput, "word step needs a \"twist\", \"flip\", or \"relabel\" key");
    }
  }
  return w;
}

// == endpoint transport

namespace {

// Sides of the new diagonal inside the quad: Bottom holds corner Q, Top holds
// corner S, the apexes P and R are its endpoints.
enum class Zone { Bottom, Top, Apex, Outside };

Zone zoneOfSlot(const QuadFrame& q, Corner loc) {
  if (loc.tri == q.t1) {
    require(loc.k != q.i1, Status::Internal, "gate slot has no zone");
    return loc.k == m3(q.i1 + 1) ? Zone::Top : Zone::Bottom;
  }
  if (loc.tri == q.t2) {
    require(loc.k != q.i2, Status::Internal, "gate slot has no zone");
    return loc.k == m3(q.i2 + 1) ? Zone::Bottom : Zone::Top;
  }
  return Zone::Outside;
}

Zone zoneOfCorner(const QuadFrame& q, Corner c) {
  if (c.tri == q.t1) {
    if (c.k == q.i1) return Zone::Bottom;
    if (c.k == m3(q.i1 + 1)) return Zone::Top;
    return Zone::Apex;
  }
  if (c.tri == q.t2) {
    if (c.k == q.i2) return Zone::Top;
    if (c.k == m3(q.i2 + 1)) return Zone::Bottom;
    return Zone::Apex;
  }
  return Zone::Outside;
}

// Corner names after the flip; an apex needs the side of the new diagonal the
// arc approaches it from.
Corner renameCorner(const QuadFrame& q, Corner c, Zone apexSide) {
  auto pickApex = [&](Corner bottom, Corner top) {
    require(apexSide == Zone::Bottom || apexSide == Zone::Top, Status::Internal,
            "arc end at a quad apex without an approach side");
    return apexSide == Zone::Bottom ? bottom : top;
  };
  if (c.tri == q.t1) {
    if (c.k == q.i1) return Corner{q.t1, 1};
    if (c.k == m3(q.i1 + 1)) return Corner{q.t2, 1};
    return pickApex(Corner{q.t1, 0}, Corner{q.t2, 2});
  }
  if (c.tri == q.t2) {
    if (c.k == q.i2) return Corner{q.t2, 1};
    if (c.k == m3(q.i2 + 1)) return Corner{q.t1, 1};
    return pickApex(Corner{q.t1, 2}, Corner{q.t2, 0});
  }
  return c;
}

// Rewrites a carried arc across one flip. Crossings of the old diagonal fold
// into their neighbor attachments: the arc crosses the new diagonal once for
// every passage between its two sides. Ends at an apex ride along the
// boundary instead and only rename.
MovingArc carryFlip(const Triangulation& T, const QuadFrame& q, const MovingArc& m) {
  if (m.parallel) {
    if (m.edge != q.edge) return m;
    MovingArc out;
    if (m.startEnd == 0) {
      out.start = Corner{q.t1, 1};
      out.end = Corner{q.t2, 1};
      out.steps = {TraceStep{q.edge, 0}};
    } else {
      out.start = Corner{q.t2, 1};
      out.end = Corner{q.t1, 1};
      out.steps = {TraceStep{q.edge, 1}};
    }
    return out;
  }

  const int n = static_cast<int>(m.steps.size());
  require(n > 0, Status::Internal, "carried arc has no crossings");
  auto slotEntered = [&](TraceStep s) { return T.sideLocation({s.edge, 1 - s.fromSide}); };
  auto slotExited = [&](TraceStep s) { return T.sideLocation({s.edge, s.fromSide}); };

  MovingArc out = m;
  out.steps.clear();
  std::optional<Zone> startApex, endApex;

  for (int i = 0; i < n; ++i) {
    TraceStep s = m.steps[static_cast<size_t>(i)];
    bool prevIsGate = i > 0 && m.steps[static_cast<size_t>(i - 1)].edge == q.edge;
    if (s.edge == q.edge) {
      require(!prevIsGate, Status::Internal, "consecutive crossings of the flipped edge");
      Zone za = i == 0 ? zoneOfCorner(q, m.start)
                       : zoneOfSlot(q, slotEntered(m.steps[static_cast<size_t>(i - 1)]));
      Zone zb = i == n - 1 ? zoneOfCorner(q, m.end)
                           : zoneOfSlot(q, slotExited(m.steps[static_cast<size_t>(i + 1)]));
      require(za != Zone::Outside && zb != Zone::Outside, Status::Internal,
              "crossing of the flipped edge with an attachment outside its quad");
      if (za == Zone::Apex && zb == Zone::Apex) {
        require(n == 1, Status::Internal, "apex-to-apex strand with extra crossings");
        MovingArc par;
        par.parallel = true;
        par.edge = q.edge;
        par.startEnd = m.start.tri == q.t2 ? 0 : 1;
        return par;
      }
      if (za == Zone::Apex) {
        startApex = zb;
      } else if (zb == Zone::Apex) {
        endApex = za;
      } else if (za != zb) {
        out.steps.push_back(TraceStep{q.edge, za == Zone::Bottom ? 0 : 1});
      }
      continue;
    }
    if (!prevIsGate) {
      Corner at = slotExited(s);
      if (at.tri == q.t1 || at.tri == q.t2) {
        Zone zb = zoneOfSlot(q, at);
        Zone za = i == 0 ? zoneOfCorner(q, m.start)
                         : zoneOfSlot(q, slotEntered(m.steps[static_cast<size_t>(i - 1)]));
        require(za != Zone::Apex, Status::Internal,
                "arc leaves a quad apex away from the flipped edge");
        if (za != zb) out.steps.push_back(TraceStep{q.edge, za == Zone::Bottom ? 0 : 1});
      }
    }
    out.steps.push_back(s);
  }

  if (m.steps[static_cast<size_t>(n - 1)].edge != q.edge) {
    Corner at = slotEntered(m.steps[static_cast<size_t>(n - 1)]);
    if (at.tri == q.t1 || at.tri == q.t2) {
      Zone za = zoneOfSlot(q, at);
      Zone zb = zoneOfCorner(q, m.end);
      require(zb != Zone::Apex, Status::Internal,
              "arc reaches a quad apex away from the flipped edge");
      if (za != zb) out.steps.push_back(TraceStep{q.edge, za == Zone::Bottom ? 0 : 1});
    }
  }

  out.start = renameCorner(q, m.start, startApex.value_or(Zone::Outside));
  out.end = renameCorner(q, m.end, endApex.value_or(Zone::Outside));
  return out;
}

MovingArc carryRelabel(const MovingArc& m, const std::vector<int>& perm) {
  MovingArc out = m;
  if (out.parallel) {
    out.edge = perm[static_cast<size_t>(out.edge)];
    return out;
  }
  for (TraceStep& s : out.steps) s.edge = perm[static_cast<size_t>(s.edge)];
  return out;
}

} // namespace

// == word application

WordApplication::WordApplication(const Triangulation& T, Word w) : T_(&T), word_(std::move(w)) {
  Triangulation cur = T;
  for (const WordStep& step : word_) {
    Stage st;
    st.before = cur;
    st.step = step;
    if (step.isFlip) {
      st.frame = quadFrame(cur, step.edge);
      cur = flipTriangulation(cur, st.frame);
    } else {
      cur = relabelTriangulation(cur, step.relabel);
    }
    stages_.push_back(std::move(st));
  }
  raw_ = std::move(cur);
  std::vector<Alignment> cands = alignmentsOnto(raw_, *T_);
  closes_ = !cands.empty();
  if (closes_) align_ = cands.size() == 1 ? cands.front() : pickAlignment(cands);
}

std::vector<WordApplication::Alignment> WordApplication::alignmentsOnto(
    const Triangulation& raw, const Triangulation& target) {
  std::vector<Alignment> out;
  const int E = raw.numEdges();
  const int F = raw.numTriangles();
  if (E != target.numEdges() || F != target.numTriangles()) return out;
  require(E < 20, Status::Internal, "side-flag search too large");

  std::vector<uint32_t> masks(static_cast<size_t>(1) << E);
  std::iota(masks.begin(), masks.end(), 0u);
  std::sort(masks.begin(), masks.end(), [](uint32_t l, uint32_t r) {
    int pl = std::popcount(l), pr = std::popcount(r);
    return pl != pr ? pl < pr : l < r;
  });

  for (uint32_t mask : masks) {
    std::vector<int> triMap(static_cast<size_t>(F), -1);
    std::vector<int> rot(static_cast<size_t>(F), 0);
    std::vector<char> used(static_cast<size_t>(F), 0);
    auto fits = [&](int t, int tt, int r) {
      for (int k = 0; k < 3; ++k) {
        EdgeSide es = raw.side(t, k);
        if (mask >> es.edge & 1u) es.side = 1 - es.side;
        if (!(es == target.side(tt, m3(k + r)))) return false;
      }
      return true;
    };
    std::function<void(int)> place = [&](int t) {
      if (t == F) {
        Alignment a;
        a.found = true;
        a.triMap = triMap;
        a.rot = rot;
        a.flagSwap.assign(static_cast<size_t>(E), 0);
        for (int e = 0; e < E; ++e) a.flagSwap[static_cast<size_t>(e)] = (mask >> e) & 1u;
        out.push_back(std::move(a));
        return;
      }
      for (int tt = 0; tt < F; ++tt) {
        if (used[static_cast<size_t>(tt)]) continue;
        for (int r = 0; r < 3; ++r) {
          if (!fits(t, tt, r)) continue;
          used[static_cast<size_t>(tt)] = 1;
          triMap[static_cast<size_t>(t)] = tt;
          rot[static_cast<size_t>(t)] = r;
          place(t + 1);
          used[static_cast<size_t>(tt)] = 0;
        }
      }
    };
    place(0);
  }
  return out;
}

// A closing word pins its mapping class only up to the label-preserving chart
// symmetries, which fix every coordinate vector and differ only in where they
// put marked ends. Twist recipes are resolved by the defining property of a
// twist: every arc disjoint from the twisting curve is fixed pointwise, so an
// edge-parallel class the word fixes as a class must keep its marked end. A
// word that revisits the chart midway factors there; each factor is resolved
// on its own and their composite pins the whole word on edge-parallel probes.
// Anything still ambiguous takes the first alignment in search order.
WordApplication::Alignment WordApplication::pickAlignment(
    const std::vector<Alignment>& cands) const {
  const int E = T_->numEdges();
  std::vector<Alignment> live = cands;
  auto filter = [&](const OrientedArc& probe, const OrientedArc& image) {
    CarriedArc c = carryStages(probe);
    std::vector<Alignment> next;
    for (const Alignment& al : live)
      if (finishTransport(al, c) == image) next.push_back(al);
    if (!next.empty()) live = std::move(next);
  };

  std::vector<size_t> cuts;
  for (size_t i = 1; i < stages_.size(); ++i)
    if (!alignmentsOnto(stages_[i].before, *T_).empty()) cuts.push_back(i);

  if (!cuts.empty()) {
    std::vector<WordApplication> parts;
    size_t from = 0;
    cuts.push_back(stages_.size());
    for (size_t cut : cuts) {
      parts.emplace_back(*T_, Word(word_.begin() + static_cast<ptrdiff_t>(from),
                                   word_.begin() + static_cast<ptrdiff_t>(cut)));
      require(parts.back().closes(), Status::Internal, "word factor fails to close");
      from = cut;
    }
    for (int e = 0; e < E && live.size() > 1; ++e) {
      OrientedArc probe{EdgeCoordinates::sentinel(E, e), 0};
      OrientedArc image = probe;
      for (const WordApplication& part : parts) image = part.applyOriented(image);
      filter(probe, image);
    }
    return live.front();
  }

  for (int e = 0; e < E && live.size() > 1; ++e) {
    OrientedArc probe{EdgeCoordinates::sentinel(E, e), 0};
    if (!(apply(probe.arc) == probe.arc)) continue;
    filter(probe, probe);
  }
  return live.front();
}

EdgeCoordinates WordApplication::apply(const EdgeCoordinates& x) const {
  checkCoordinateShape(*T_, x);
  EdgeCoordinates cur = x;
  for (const Stage& st : stages_)
    cur = st.step.isFlip ? flipCoordinates(st.before, st.frame, cur)
                         : relabelCoordinates(cur, st.step.relabel);
  return cur;
}

WordApplication::CarriedArc WordApplication::carryStages(const OrientedArc& a) const {
  require(a.endIndex == 0 || a.endIndex == 1, Status::MalformedInput, "endIndex must be 0 or 1");

  ResolveInfo info = resolve(*T_, a.arc);
  require(info.kind == ClassKind::Multiarc && info.components.size() == 1, Status::NotAnArc,
          "oriented transport needs a single-arc class");

  CarriedArc c;
  MovingArc& m = c.m;
  if (info.isSentinel) {
    m.parallel = true;
    m.edge = info.sentinelEdge;
    m.startEnd = a.endIndex;
  } else {
    const ArcTrace& tr = info.components[0].trace;
    if (a.endIndex == 0) {
      m.start = tr.start.corner;
      m.end = tr.end.corner;
      m.steps = tr.steps;
    } else {
      m.start = tr.end.corner;
      m.end = tr.start.corner;
      m.steps.reserve(tr.steps.size());
      for (auto it = tr.steps.rbegin(); it != tr.steps.rend(); ++it)
        m.steps.push_back(reversed(*it));
    }
  }

  EdgeCoordinates x = a.arc;
  for (size_t i = 0; i < stages_.size(); ++i) {
    const Stage& st = stages_[i];
    if (st.step.isFlip) {
      m = carryFlip(st.before, st.frame, m);
      x = flipCoordinates(st.before, st.frame, x);
    } else {
      m = carryRelabel(m, st.step.relabel);
      x = relabelCoordinates(x, st.step.relabel);
    }
    if (m.parallel) {
      require(x.sentinelEdge() == m.edge, Status::Internal,
              "carried arc lost sync with its coordinates");
    } else {
      const Triangulation& after = i + 1 < stages_.size() ? stages_[i + 1].before : raw_;
      require(coordsOfTrace(after, m.steps) == x, Status::Internal,
              "carried arc lost sync with its coordinates");
    }
  }
  c.coords = std::move(x);
  return c;
}

OrientedArc WordApplication::finishTransport(const Alignment& al, CarriedArc c) const {
  MovingArc& m = c.m;
  if (m.parallel) {
    if (al.flagSwap[static_cast<size_t>(m.edge)]) m.startEnd = 1 - m.startEnd;
  } else {
    auto moveCorner = [&](Corner c2) {
      int tt = al.triMap[static_cast<size_t>(c2.tri)];
      return Corner{tt, m3(c2.k + al.rot[static_cast<size_t>(c2.tri)])};
    };
    m.start = moveCorner(m.start);
    m.end = moveCorner(m.end);
    for (TraceStep& s : m.steps)
      if (al.flagSwap[static_cast<size_t>(s.edge)]) s.fromSide = 1 - s.fromSide;
  }

  ResolveInfo fin = resolve(*T_, c.coords);
  OrientedArc out{c.coords, 0};
  if (fin.isSentinel) {
    require(m.parallel && m.edge == fin.sentinelEdge, Status::Internal,
            "carried arc lost sync with its coordinates");
    out.endIndex = m.startEnd;
    return out;
  }
  require(!m.parallel, Status::Internal, "carried arc lost sync with its coordinates");
  const ArcTrace& tr = fin.components[0].trace;
  bool fwd = m.start == tr.start.corner && m.end == tr.end.corner && m.steps == tr.steps;
  std::vector<TraceStep> rev;
  rev.reserve(tr.steps.size());
  for (auto it = tr.steps.rbegin(); it != tr.steps.rend(); ++it) rev.push_back(reversed(*it));
  bool bwd = m.start == tr.end.corner && m.end == tr.start.corner && m.steps == rev;
  require(fwd != bwd, Status::Internal,
          fwd ? "transported arc matches both orientations of its class"
              : "transported arc matches neither orientation of its class");
  out.endIndex = fwd ? 0 : 1;
  return out;
}

OrientedArc WordApplication::applyOriented(const OrientedArc& a) const {
  require(closes_, Status::MalformedInput, "word does not return to the starting triangulation");
  return finishTransport(align_, carryStages(a));
}

EdgeCoordinates applyMappingClass(const Triangulation& T, const Word& w, const EdgeCoordinates& x) {
  WordApplication app(T, w);
  require(app.closes(), Status::MalformedInput,
          "word does not return to the starting triangulation");
  return app.apply(x);
}

} // namespace ucn
