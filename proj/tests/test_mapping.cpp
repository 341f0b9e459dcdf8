// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "farey.hpp"
#include "mapping.hpp"
#include "overlay.hpp"
#include "rand.hpp"
#include "surface.hpp"

using namespace ucn;

namespace {

EdgeCoordinates ec(std::vector<int64_t> w) {
  EdgeCoordinates x;
  for (int64_t v : w) x.w.emplace_back(v);
  return x;
}

Status statusOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.status();
  }
  return Status::Ok;
}

EdgeCoordinates plus(const EdgeCoordinates& a, const EdgeCoordinates& b) {
  EdgeCoordinates out = a;
  for (size_t e = 0; e < out.w.size(); ++e) out.w[e] += b.w[e];
  return out;
}

// Disjoint unions on the torus chart: parallel copies of one slope's arc and
// curve; peripheral loops ride with curves only, since every essential arc
// must cross them.
std::vector<EdgeCoordinates> torusClasses(const Triangulation& T) {
  std::vector<EdgeCoordinates> out;
  EdgeCoordinates peri = ec({2, 2, 2});
  for (Slope s : {Slope{0, 1}, Slope{1, 1}, Slope{1, 2}, Slope{2, 1}, Slope{-1, 2}, Slope{5, 3}}) {
    EdgeCoordinates a = arcCoords(T, s);
    EdgeCoordinates c = curveCoords(T, s);
    out.push_back(a);
    out.push_back(c);
    if (a.sentinelEdge() < 0) {
      out.push_back(plus(a, a));
      out.push_back(plus(a, c));
    }
    out.push_back(plus(c, peri));
  }
  out.push_back(peri);
  return out;
}

std::vector<EdgeCoordinates> sphereClasses(const Triangulation& T, Rng& rng, int want) {
  std::vector<EdgeCoordinates> out;
  while (static_cast<int>(out.size()) < want) {
    EdgeCoordinates x = ec({rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(0, 5),
                            rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(0, 5)});
    try {
      resolve(T, x);
    } catch (const Error& err) {
      REQUIRE(err.status() == Status::Unrealizable);
      continue;
    }
    if (!x.isZero()) out.push_back(x);
  }
  return out;
}

Slope randomSlope(Rng& rng, int64_t lim) {
  for (;;) {
    int64_t p = rng.uniform(-lim, lim);
    int64_t q = rng.uniform(0, lim);
    if (q == 0) return Slope{1, 0};
    if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
    return Slope{p, q};
  }
}

std::string randomTwistString(Rng& rng, int len) {
  static const std::vector<std::string> names = {"R", "L", "Rinv", "Linv"};
  std::string out;
  for (int i = 0; i < len; ++i) out += names[static_cast<size_t>(rng.uniform(0, 3))];
  return out;
}

bool sameWord(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].isFlip != b[i].isFlip) return false;
    if (a[i].isFlip && a[i].edge != b[i].edge) return false;
    if (!a[i].isFlip && a[i].relabel != b[i].relabel) return false;
  }
  return true;
}

} // namespace

TEST_CASE("flips want an edge with two distinct triangles") {
  // edge 0 doubles back on the first triangle and edge 2 on the second, so
  // only edge 1 spans a quadrilateral
  Triangulation gadget("pinched", 3,
                       {Triangle{EdgeSide{0, 0}, EdgeSide{0, 1}, EdgeSide{1, 0}},
                        Triangle{EdgeSide{1, 1}, EdgeSide{2, 0}, EdgeSide{2, 1}}},
                       false, {});
  CHECK(statusOf([&] { quadFrame(gadget, 0); }) == Status::NotFlippable);
  CHECK(statusOf([&] { quadFrame(gadget, 2); }) == Status::NotFlippable);
  CHECK(statusOf([&] { quadFrame(gadget, 1); }) == Status::Ok);
  CHECK(statusOf([&] { quadFrame(gadget, 3); }) == Status::IndexOutOfRange);
  CHECK(statusOf([&] { quadFrame(gadget, -1); }) == Status::IndexOutOfRange);

  Triangulation T = Triangulation::builtin("S_1_1");
  for (int e = 0; e < 3; ++e) CHECK(statusOf([&] { quadFrame(T, e); }) == Status::Ok);
}

TEST_CASE("a flip rewrites edge weights in place") {
  Triangulation T = Triangulation::builtin("S_1_1");
  QuadFrame q = quadFrame(T, 2);
  Triangulation F = flipTriangulation(T, q);
  CHECK(F.numEdges() == 3);
  CHECK(F.numTriangles() == 2);
  CHECK(F.numPunctures() == T.numPunctures());
  CHECK(F.eulerCharacteristic() == T.eulerCharacteristic());
  CHECK_FALSE(F.sameData(T));

  CHECK(flipCoordinates(T, q, ec({0, 1, 0})) == ec({0, 1, 2}));
  CHECK(flipCoordinates(T, q, ec({1, 1, 0})) == ec({1, 1, 2}));
  CHECK(flipCoordinates(T, q, EdgeCoordinates::zero(3)) == EdgeCoordinates::zero(3));

  Triangulation S = Triangulation::builtin("S_0_4");
  QuadFrame qs = quadFrame(S, 0);
  EdgeCoordinates far = ec({0, 0, 0, 0, 0, 2});
  CHECK(flipCoordinates(S, qs, far) == far);
}

TEST_CASE("flips exchange edge-parallel classes and unit crossings") {
  Triangulation T = Triangulation::builtin("S_1_1");
  QuadFrame q2 = quadFrame(T, 2);
  QuadFrame q0 = quadFrame(T, 0);

  CHECK(flipCoordinates(T, q2, EdgeCoordinates::sentinel(3, 2)) == ec({0, 0, 1}));
  CHECK(flipCoordinates(T, q2, ec({0, 0, 1})) == EdgeCoordinates::sentinel(3, 2));
  CHECK(flipCoordinates(T, q0, ec({1, 0, 0})) == EdgeCoordinates::sentinel(3, 0));
  CHECK(flipCoordinates(T, q2, EdgeCoordinates::sentinel(3, 0)) == EdgeCoordinates::sentinel(3, 0));
  CHECK(flipCoordinates(T, q2, EdgeCoordinates::sentinel(3, 1)) == EdgeCoordinates::sentinel(3, 1));

  // an arc landing on the flipped edge with company left over has no
  // coordinate vector
  EdgeCoordinates mixed = plus(arcCoords(T, Slope{2, 1}), curveCoords(T, Slope{2, 1}));
  CHECK(statusOf([&] { flipCoordinates(T, q0, mixed); }) == Status::EdgeParallelAmbiguity);
}

TEST_CASE("flipping an edge twice restores every class") {
  Triangulation T = Triangulation::builtin("S_1_1");
  Rng rng(23);
  Triangulation S = Triangulation::builtin("S_0_4");
  std::vector<EdgeCoordinates> torus = torusClasses(T);
  for (int e = 0; e < 3; ++e) torus.push_back(EdgeCoordinates::sentinel(3, e));
  std::vector<EdgeCoordinates> sphere = sphereClasses(S, rng, 20);
  for (int e = 0; e < 6; ++e) sphere.push_back(EdgeCoordinates::sentinel(6, e));

  int skipped = 0;
  auto runAll = [&](const Triangulation& X, const std::vector<EdgeCoordinates>& classes) {
    for (int e = 0; e < X.numEdges(); ++e) {
      WordApplication twice(X, Word{WordStep{true, e, {}}, WordStep{true, e, {}}});
      CHECK(twice.closes());
      for (const EdgeCoordinates& x : classes) {
        EdgeCoordinates out;
        Status st = Status::Ok;
        try {
          out = twice.apply(x);
        } catch (const Error& err) {
          st = err.status();
        }
        if (st == Status::EdgeParallelAmbiguity) {
          ++skipped;
          continue;
        }
        REQUIRE(st == Status::Ok);
        CHECK(out == x);
      }
    }
  };
  runAll(T, torus);
  runAll(S, sphere);
  CHECK(skipped < 24);
}

TEST_CASE("flips preserve intersection numbers") {
  Triangulation T = Triangulation::builtin("S_1_1");
  std::vector<EdgeCoordinates> classes = torusClasses(T);
  for (int e = 0; e < 3; ++e) {
    QuadFrame q = quadFrame(T, e);
    Triangulation F = flipTriangulation(T, q);
    for (const EdgeCoordinates& x : classes)
      for (const EdgeCoordinates& y : classes) {
        EdgeCoordinates fx, fy;
        try {
          fx = flipCoordinates(T, q, x);
          fy = flipCoordinates(T, q, y);
        } catch (const Error& err) {
          REQUIRE(err.status() == Status::EdgeParallelAmbiguity);
          continue;
        }
        CHECK(intersectionNumber(F, fx, fy) == intersectionNumber(T, x, y));
      }
  }
}

TEST_CASE("twist words act on slopes as their matrices") {
  Triangulation T = Triangulation::builtin("S_1_1");
  Mat2 mR{1, 1, 0, 1};
  Mat2 mL{1, 0, 1, 1};
  std::vector<std::pair<std::string, Mat2>> table = {
      {"R", mR}, {"L", mL}, {"Rinv", matInverse(mR)}, {"Linv", matInverse(mL)}};

  std::vector<Slope> slopes = {Slope{1, 0}, Slope{0, 1}, Slope{1, 1}};
  Rng rng(5);
  for (int i = 0; i < 12; ++i) slopes.push_back(randomSlope(rng, 9));

  for (const auto& row : table) {
    const std::string& name = row.first;
    WordApplication app(T, twistWord(T, name));
    CHECK(app.closes());
    for (Slope s : slopes) {
      CAPTURE(name);
      CAPTURE(s.p);
      CAPTURE(s.q);
      Slope img = matApply(row.second, s);
      CHECK(app.apply(arcCoords(T, s)) == arcCoords(T, img));
      CHECK(app.apply(curveCoords(T, s)) == curveCoords(T, img));
    }
  }
}

TEST_CASE("composed twist strings follow their matrix products") {
  Triangulation T = Triangulation::builtin("S_1_1");
  Mat2 mRL = matMul(Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1});
  CHECK(mRL == Mat2{2, 1, 1, 1});

  WordApplication rl(T, twistWord(T, "RL"));
  CHECK(rl.closes());

  // rightmost twist acts first, so the golden trajectory of [[2,1],[1,1]]
  // comes out of the string "RL"
  Slope s{1, 0};
  EdgeCoordinates x = arcCoords(T, s);
  std::vector<Slope> expect = {Slope{2, 1}, Slope{5, 3}, Slope{13, 8}};
  for (Slope e : expect) {
    x = rl.apply(x);
    s = matApply(mRL, s);
    CHECK(s == e);
    CHECK(x == arcCoords(T, s));
    CHECK(slopeOfArc(T, x) == e);
  }

  WordApplication lr(T, twistWord(T, "LR"));
  Slope t{1, 0};
  t = matApply(matMul(Mat2{1, 0, 1, 1}, Mat2{1, 1, 0, 1}), t);
  CHECK(t == Slope{1, 1});
  CHECK(lr.apply(arcCoords(T, Slope{1, 0})) == arcCoords(T, t));
}

TEST_CASE("words cancel against their inverse strings") {
  Triangulation T = Triangulation::builtin("S_1_1");
  CHECK(inverseTwists(T, "RL") == "LinvRinv");
  CHECK(inverseTwists(T, "RinvL") == "LinvR");
  CHECK(inverseTwists(T, "") == "");

  Rng rng(71);
  std::vector<EdgeCoordinates> classes = torusClasses(T);
  for (int e = 0; e < 3; ++e) classes.push_back(EdgeCoordinates::sentinel(3, e));
  int skipped = 0;
  for (int iter = 0; iter < 12; ++iter) {
    std::string names = randomTwistString(rng, rng.uniform(1, 5));
    CAPTURE(names);
    Word w = twistWord(T, names);
    Word inv = twistWord(T, inverseTwists(T, names));
    Word both = w;
    both.insert(both.end(), inv.begin(), inv.end());
    WordApplication cancel(T, both);
    CHECK(cancel.closes());
    for (const EdgeCoordinates& x : classes) {
      EdgeCoordinates out;
      Status st = Status::Ok;
      try {
        out = cancel.apply(x);
      } catch (const Error& err) {
        st = err.status();
      }
      if (st == Status::EdgeParallelAmbiguity) {
        ++skipped;
        continue;
      }
      REQUIRE(st == Status::Ok);
      CHECK(out == x);
    }
  }
  CHECK(skipped < 60);
}

TEST_CASE("mapping classes preserve intersection numbers") {
  Triangulation T = Triangulation::builtin("S_1_1");
  Rng rng(97);
  for (int iter = 0; iter < 24; ++iter) {
    std::string names = randomTwistString(rng, rng.uniform(1, 4));
    CAPTURE(names);
    Word w = twistWord(T, names);
    Slope s1 = randomSlope(rng, 8);
    Slope s2 = randomSlope(rng, 8);
    EdgeCoordinates x = rng.coin() ? arcCoords(T, s1) : curveCoords(T, s1);
    EdgeCoordinates y = rng.coin() ? arcCoords(T, s2) : curveCoords(T, s2);
    EdgeCoordinates wx = applyMappingClass(T, w, x);
    EdgeCoordinates wy = applyMappingClass(T, w, y);
    CHECK(intersectionNumber(T, wx, wy) == intersectionNumber(T, x, y));
  }
}

TEST_CASE("words must return to their chart before acting") {
  Triangulation T = Triangulation::builtin("S_1_1");
  WordApplication once(T, Word{WordStep{true, 2, {}}});
  CHECK_FALSE(once.closes());
  CHECK(statusOf([&] { once.applyOriented(OrientedArc{arcCoords(T, Slope{1, 2}), 0}); }) ==
        Status::MalformedInput);
  CHECK(statusOf([&] {
          applyMappingClass(T, Word{WordStep{true, 2, {}}}, ec({0, 1, 0}));
        }) == Status::MalformedInput);

  // the lone flip still acts on coordinates, just on the flipped chart
  CHECK(once.apply(ec({0, 1, 0})) == ec({0, 1, 2}));
  CHECK_FALSE(once.rawResult().sameData(T));

  WordApplication twice(T, Word{WordStep{true, 2, {}}, WordStep{true, 2, {}}});
  CHECK(twice.closes());
}

TEST_CASE("words parse from twist strings and step arrays") {
  Triangulation T = Triangulation::builtin("S_1_1");
  Word fromString = wordFromJson(T, nlohmann::json("R"));
  CHECK(sameWord(fromString, twistWord(T, "R")));

  Word fromArray = wordFromJson(T, nlohmann::json::parse(R"([{"flip": 2}, {"relabel": [2, 1, 0]}])"));
  CHECK(sameWord(fromArray, twistWord(T, "R")));

  Word fromTwistRef = wordFromJson(T, nlohmann::json::parse(R"([{"twist": "L"}, {"twist": "R"}])"));
  Word lThenR = twistWord(T, "RL");
  CHECK(sameWord(fromTwistRef, lThenR));

  CHECK(statusOf([&] { wordFromJson(T, nlohmann::json::parse(R"([{"flip": 9}])")); }) ==
        Status::MalformedInput);
  CHECK(statusOf([&] { wordFromJson(T, nlohmann::json::parse(R"([{"relabel": [0, 0, 2]}])")); }) ==
        Status::MalformedInput);
  CHECK(statusOf([&] { wordFromJson(T, nlohmann::json::parse(R"([{"spin": 1}])")); }) ==
        Status::MalformedInput);
  CHECK(statusOf([&] { wordFromJson(T, nlohmann::json::parse("7")); }) == Status::MalformedInput);
  CHECK(statusOf([&] { twistWord(T, "RQ"); }) == Status::MalformedInput);

  Triangulation S = Triangulation::builtin("S_0_4");
  CHECK(statusOf([&] { twistWord(S, "R"); }) == Status::MalformedInput);
  CHECK(twistWord(S, "").empty());
}

TEST_CASE("oriented transport round-trips through inverse twist words") {
  // a word and its inverse string complete independently; honest end
  // transport makes their composite the identity on oriented arcs, marked
  // ends included
  Triangulation T = Triangulation::builtin("S_1_1");
  std::vector<Slope> slopes = {Slope{1, 2}, Slope{2, 1}, Slope{5, 3}, Slope{1, 0}, Slope{0, 1}};
  for (const std::string names : {"R", "L", "RL", "LR", "RRL"}) {
    WordApplication fwd(T, twistWord(T, names));
    WordApplication bwd(T, twistWord(T, inverseTwists(T, names)));
    REQUIRE(fwd.closes());
    REQUIRE(bwd.closes());
    for (Slope s : slopes) {
      EdgeCoordinates a = arcCoords(T, s);
      for (int end = 0; end < 2; ++end) {
        CAPTURE(names);
        CAPTURE(s.p);
        CAPTURE(s.q);
        CAPTURE(end);
        OrientedArc oa{a, end};
        OrientedArc img = fwd.applyOriented(oa);
        CHECK(img.arc == fwd.apply(a));
        CHECK(fwd.applyOriented(oa) == img);
        CHECK(bwd.applyOriented(img) == oa);
      }
    }
  }
}

TEST_CASE("oriented transport measures how twists move marked ends") {
  Triangulation T = Triangulation::builtin("S_1_1");
  // each twist fixes the arc disjoint from its twisting curve pointwise, so
  // transport must keep both of its marked ends in place
  EdgeCoordinates inf = arcCoords(T, Slope{1, 0});
  EdgeCoordinates zero = arcCoords(T, Slope{0, 1});
  CHECK(inf == EdgeCoordinates::sentinel(3, 1));
  CHECK(zero == EdgeCoordinates::sentinel(3, 0));
  for (auto [names, fixed] : std::vector<std::pair<std::string, EdgeCoordinates>>{
           {"R", inf}, {"Rinv", inf}, {"L", zero}, {"Linv", zero}}) {
    CAPTURE(names);
    WordApplication w(T, twistWord(T, names));
    REQUIRE(w.closes());
    for (int end = 0; end < 2; ++end)
      CHECK(w.applyOriented(OrientedArc{fixed, end}) == OrientedArc{fixed, end});
  }

  // this twist composition is the elliptic involution: it fixes every class
  // and swaps the two ends of every slope arc, so honest transport must swap
  // marked ends even though the coordinate action is trivial
  WordApplication invol(T, twistWord(T, "RLinvRLinvRLinv"));
  REQUIRE(invol.closes());
  for (Slope s : {Slope{0, 1}, Slope{1, 0}, Slope{1, 1}, Slope{2, 5}}) {
    CAPTURE(s.p);
    CAPTURE(s.q);
    EdgeCoordinates x = arcCoords(T, s);
    CHECK(invol.apply(x) == x);
    CHECK(invol.applyOriented(OrientedArc{x, 0}) == OrientedArc{x, 1});
    CHECK(invol.applyOriented(OrientedArc{x, 1}) == OrientedArc{x, 0});
  }

  // transport refuses classes that are not a single arc
  WordApplication r(T, twistWord(T, "R"));
  EdgeCoordinates curve = curveCoords(T, Slope{1, 2});
  CHECK(statusOf([&] { r.applyOriented(OrientedArc{curve, 0}); }) == Status::NotAnArc);
  EdgeCoordinates doubled = plus(arcCoords(T, Slope{1, 2}), arcCoords(T, Slope{1, 2}));
  CHECK(statusOf([&] { r.applyOriented(OrientedArc{doubled, 0}); }) == Status::NotAnArc);
  CHECK(statusOf([&] { r.applyOriented(OrientedArc{inf, 2}); }) == Status::MalformedInput);
}

TEST_CASE("relabeling permutes weights and triangle sides together") {
  Triangulation T = Triangulation::builtin("S_1_1");
  std::vector<int> perm = {2, 0, 1};
  Triangulation P = relabelTriangulation(T, perm);
  EdgeCoordinates x = ec({3, 1, 2});
  EdgeCoordinates px = relabelCoordinates(x, perm);
  CHECK(px == ec({1, 2, 3}));
  CHECK(intersectionNumber(P, px, relabelCoordinates(curveCoords(T, Slope{1, 2}), perm)) ==
        intersectionNumber(T, x, curveCoords(T, Slope{1, 2})));

  CHECK(statusOf([&] { relabelTriangulation(T, {0, 1}); }) == Status::MalformedInput);
  CHECK(statusOf([&] { relabelTriangulation(T, {0, 1, 1}); }) == Status::MalformedInput);
  CHECK(statusOf([&] { relabelCoordinates(x, {0, 1, 3}); }) == Status::MalformedInput);
}
