// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "diagram.hpp"
#include "surface.hpp"

namespace ucn {

// == elementary flip

// Frame of the quadrilateral around a flippable edge, in the labels of the
// triangulation before the flip: side (edge,0) fills slot i1 of t1 and side
// (edge,1) fills slot i2 of t2. The quad corners are Q at the base of slot i1,
// S at its tip, P the remaining corner of t1, and R the remaining corner of
// t2. Flipping replaces the diagonal QS by PR and keeps the edge index: t1
// becomes [x y (edge,0)] over corners P,Q,R and t2 becomes [z u (edge,1)] over
// R,S,P, where x,u are the other sides of t1 and y,z the other sides of t2.
struct QuadFrame {
  int edge = -1;
  int t1 = -1, i1 = -1;
  int t2 = -1, i2 = -1;
};

QuadFrame quadFrame(const Triangulation& T, int e);
Triangulation flipTriangulation(const Triangulation& T, const QuadFrame& q);

// Coordinates of the same class after the flip. A class isotopic onto the old
// diagonal becomes the unit vector at the new one; a class with one strand
// running corner to corner through the quad becomes edge-parallel, which only
// the pure single-strand case can express.
EdgeCoordinates flipCoordinates(const Triangulation& T, const QuadFrame& q,
                                const EdgeCoordinates& x);

Triangulation relabelTriangulation(const Triangulation& T, const std::vector<int>& perm);
EdgeCoordinates relabelCoordinates(const EdgeCoordinates& x, const std::vector<int>& perm);

// == mapping-class words

using Word = std::vector<WordStep>;

// Array form: steps in application order, each {"flip": e}, {"relabel": [..]},
// or {"twist": name}. String form: a composition of twist names, rightmost
// factor applied first, tokenized by greedy longest match.
Word wordFromJson(const Triangulation& T, const nlohmann::json& j);
Word twistWord(const Triangulation& T, const std::string& names);

// Name string of the inverse composition.
std::string inverseTwists(const Triangulation& T, const std::string& names);

// == oriented arcs

// A single-arc class with one of its two ends marked: 0 is the canonical
// trace start (for an edge-parallel class, the base corner of side 0).
struct OrientedArc {
  EdgeCoordinates arc;
  int endIndex = 0;
  bool operator==(const OrientedArc&) const = default;
};

// An arc mid-transport: its crossing list and end corners on the current
// triangulation, or the bare edge when the class is edge-parallel.
struct MovingArc {
  bool parallel = false;
  int edge = -1;
  int startEnd = 0;
  Corner start, end;
  std::vector<TraceStep> steps;
};

// == word application

// One word executed on a triangulation, with enough per-step data to carry
// coordinates and arc endpoints through it. Words used for group actions must
// return to the starting chart; the final state is aligned back onto it by
// matching triangle order, rotation, and side flags, none of which carry
// coordinate content. When the chart has label-preserving symmetries several
// alignments close the word; they agree on every coordinate vector and differ
// only in where marked ends land, and the constructor resolves the choice so
// that twist words act as the twists they name (see pickAlignment).
class WordApplication {
public:
  WordApplication(const Triangulation& T, Word w);

  const Triangulation& surface() const { return *T_; }
  const Word& word() const { return word_; }
  bool closes() const { return closes_; }
  const Triangulation& rawResult() const { return raw_; }

  EdgeCoordinates apply(const EdgeCoordinates& x) const;

  // Transports the marked end along with the class; needs closes().
  OrientedArc applyOriented(const OrientedArc& a) const;

private:
  struct Stage {
    Triangulation before;
    WordStep step;
    QuadFrame frame;
  };
  struct Alignment {
    bool found = false;
    std::vector<int> triMap;
    std::vector<int> rot;
    std::vector<char> flagSwap;
  };
  struct CarriedArc {
    MovingArc m;
    EdgeCoordinates coords;
  };

  // Every alignment of raw onto target, in a fixed search order.
  static std::vector<Alignment> alignmentsOnto(const Triangulation& raw,
                                               const Triangulation& target);

  CarriedArc carryStages(const OrientedArc& a) const;
  OrientedArc finishTransport(const Alignment& al, CarriedArc c) const;
  Alignment pickAlignment(const std::vector<Alignment>& cands) const;

  const Triangulation* T_ = nullptr;
  Word word_;
  std::vector<Stage> stages_;
  Triangulation raw_;
  Alignment align_;
  bool closes_ = false;
};

// Convenience for closing words; the image coordinates live on T again.
EdgeCoordinates applyMappingClass(const Triangulation& T, const Word& w, const EdgeCoordinates& x);

} // namespace ucn
