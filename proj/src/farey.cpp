// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#include "farey.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ucn {

namespace {

void egcd(int64_t a, int64_t b, int64_t& g, int64_t& x, int64_t& y) {
  if (b == 0) {
    g = a >= 0 ? a : -a;
    x = a >= 0 ? 1 : -1;
    y = 0;
    return;
  }
  int64_t x1, y1;
  egcd(b, a % b, g, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

int64_t checkedMulAdd(int64_t a, int64_t p, int64_t b, int64_t q) {
  __int128 v = static_cast<__int128>(a) * p + static_cast<__int128>(b) * q;
  require(v > INT64_MIN / 2 && v < INT64_MAX / 2, Status::Internal,
          "slope arithmetic overflow");
  return static_cast<int64_t>(v);
}

uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

} // namespace

// == slopes

Slope slopeNormalize(int64_t p, int64_t q) {
  require(p != 0 || q != 0, Status::MalformedInput, "slope 0/0 is not defined");
  int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

Slope slopeParse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  require(!t.empty(), Status::MalformedInput, "empty slope");
  size_t slash = t.find('/');
  try {
    if (slash == std::string::npos) return slopeNormalize(std::stoll(t), 1);
    return slopeNormalize(std::stoll(t.substr(0, slash)), std::stoll(t.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Status::MalformedInput, "cannot parse slope '" + text + "'");
  }
}

std::string slopeStr(Slope s) { return std::to_string(s.p) + "/" + std::to_string(s.q); }

bool fareyAdjacent(Slope a, Slope b) {
  int64_t det = checkedMulAdd(a.p, b.q, -a.q, b.p);
  return det == 1 || det == -1;
}

// == matrices

Mat2 matMul(const Mat2& a, const Mat2& b) {
  return {checkedMulAdd(a[0], b[0], a[1], b[2]), checkedMulAdd(a[0], b[1], a[1], b[3]),
          checkedMulAdd(a[2], b[0], a[3], b[2]), checkedMulAdd(a[2], b[1], a[3], b[3])};
}

Slope matApply(const Mat2& m, Slope s) {
  return slopeNormalize(checkedMulAdd(m[0], s.p, m[1], s.q),
                        checkedMulAdd(m[2], s.p, m[3], s.q));
}

Mat2 matInverse(const Mat2& m) {
  int64_t det = checkedMulAdd(m[0], m[3], -m[1], m[2]);
  require(det == 1 || det == -1, Status::Internal, "matrix is not unimodular");
  return {det * m[3], det * -m[1], det * -m[2], det * m[0]};
}

Mat2 toInfinity(Slope s) {
  s = slopeNormalize(s.p, s.q);
  int64_t g, a, b;
  egcd(s.p, s.q, g, a, b);
  require(g == 1, Status::Internal, "slope not reduced");
  return Mat2{a, b, -s.q, s.p};
}

// == parents and neighbors

std::pair<Slope, Slope> fareyParents(Slope s) {
  require(s.q >= 2, Status::Internal, "slope has no smaller-denominator neighbors");
  int64_t g, x, y;
  egcd(s.p, s.q, g, x, y);
  require(g == 1, Status::Internal, "slope not reduced");
  // v = p^{-1} mod q in (0, q), u = (p v - 1) / q, so p v - q u = 1
  int64_t v = ((x % s.q) + s.q) % s.q;
  int64_t u = (s.p * v - 1) / s.q;
  return {Slope{u, v}, Slope{s.p - u, s.q - v}};
}

std::vector<Slope> fareyNeighbors(Slope s, int kLo, int kHi) {
  s = slopeNormalize(s.p, s.q);
  int64_t g, x, y;
  egcd(s.p, s.q, g, x, y);
  // p v0 - q u0 = 1 with (u0, v0) = (-y, x)
  int64_t u0 = -y, v0 = x;
  std::vector<Slope> out;
  for (int k = kLo; k <= kHi; ++k) {
    Slope n = slopeNormalize(u0 + k * s.p, v0 + k * s.q);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  return out;
}

// == oracle

size_t FareyOracle::SlopeHash::operator()(const Slope& s) const {
  return static_cast<size_t>(mix(static_cast<uint64_t>(s.p) * 0x100000001b3ULL ^
                                 mix(static_cast<uint64_t>(s.q))));
}

int FareyOracle::distToInf(Slope z) {
  std::vector<Slope> stack{z};
  while (!stack.empty()) {
    Slope c = stack.back();
    if (memo_.count(c)) {
      stack.pop_back();
      continue;
    }
    if (c.q == 0) {
      memo_[c] = 0;
      stack.pop_back();
      continue;
    }
    if (c.q == 1) {
      memo_[c] = 1;
      stack.pop_back();
      continue;
    }
    auto [pa, pb] = fareyParents(c);
    auto ia = memo_.find(pa), ib = memo_.find(pb);
    if (ia != memo_.end() && ib != memo_.end()) {
      memo_[c] = 1 + std::min(ia->second, ib->second);
      stack.pop_back();
    } else {
      if (ia == memo_.end()) stack.push_back(pa);
      if (ib == memo_.end()) stack.push_back(pb);
    }
  }
  return memo_.at(z);
}

int FareyOracle::distance(Slope x, Slope y) {
  x = slopeNormalize(x.p, x.q);
  y = slopeNormalize(y.p, y.q);
  if (x == y) return 0;
  return distToInf(matApply(toInfinity(y), x));
}

std::vector<Slope> FareyOracle::geodesic(Slope x, Slope y) {
  x = slopeNormalize(x.p, x.q);
  y = slopeNormalize(y.p, y.q);
  std::vector<Slope> out{x};
  if (x == y) return out;
  Mat2 m = toInfinity(y);
  Mat2 minv = matInverse(m);
  Slope z = matApply(m, x);
  while (z.q != 0) {
    Slope next;
    if (z.q == 1) {
      next = Slope{1, 0};
    } else {
      int d = distToInf(z);
      auto [pa, pb] = fareyParents(z);
      int da = distToInf(pa), db = distToInf(pb);
      require(std::min(da, db) == d - 1, Status::Internal, "parent descent lost the geodesic");
      if (da == d - 1 && db == d - 1)
        next = matApply(minv, pa) < matApply(minv, pb) ? pa : pb;
      else
        next = da == d - 1 ? pa : pb;
    }
    z = next;
    out.push_back(matApply(minv, z));
  }
  return out;
}

int64_t FareyOracle::gromov2(Slope o, Slope x, Slope y) {
  return static_cast<int64_t>(distance(o, x)) + distance(o, y) - distance(x, y);
}

// == slope chart

namespace {

void requireChart(const Triangulation& T) {
  require(T.fareyChart(), Status::MalformedInput,
          "surface '" + T.name() + "' carries no slope chart");
  require(T.numEdges() == 3, Status::Internal, "slope chart expects three edges");
}

} // namespace

EdgeCoordinates arcCoords(const Triangulation& T, Slope s) {
  requireChart(T);
  s = slopeNormalize(s.p, s.q);
  if (s == Slope{0, 1}) return EdgeCoordinates::sentinel(3, 0);
  if (s == Slope{1, 0}) return EdgeCoordinates::sentinel(3, 1);
  if (s == Slope{1, 1}) return EdgeCoordinates::sentinel(3, 2);
  EdgeCoordinates x = EdgeCoordinates::zero(3);
  x.w[0] = (s.p >= 0 ? s.p : -s.p) - 1;
  x.w[1] = s.q - 1;
  x.w[2] = (s.p >= s.q ? s.p - s.q : s.q - s.p) - 1;
  require(!x.hasNegative(), Status::Internal, "slope chart produced negative weights");
  return x;
}

EdgeCoordinates curveCoords(const Triangulation& T, Slope s) {
  requireChart(T);
  s = slopeNormalize(s.p, s.q);
  EdgeCoordinates x = EdgeCoordinates::zero(3);
  x.w[0] = s.p >= 0 ? s.p : -s.p;
  x.w[1] = s.q;
  x.w[2] = s.p >= s.q ? s.p - s.q : s.q - s.p;
  return x;
}

Slope slopeOfArc(const Triangulation& T, const EdgeCoordinates& x) {
  requireChart(T);
  checkCoordinateShape(T, x);
  int se = x.sentinelEdge();
  if (se == 0) return Slope{0, 1};
  if (se == 1) return Slope{1, 0};
  if (se == 2) return Slope{1, 1};
  int64_t w0 = toInt64(x.w[0], "weight") + 1;
  int64_t w1 = toInt64(x.w[1], "weight") + 1;
  int64_t w2 = toInt64(x.w[2], "weight") + 1;
  for (int64_t p : {w0, -w0}) {
    if ((p >= w1 ? p - w1 : w1 - p) != w2) continue;
    if (std::gcd(p, w1) != 1) continue;
    Slope s{p, w1};
    if (arcCoords(T, s) == x) return s;
  }
  fail(Status::NotAnArc, "weights are not those of a single slope arc");
}

Slope slopeOfCurve(const Triangulation& T, const EdgeCoordinates& x) {
  requireChart(T);
  checkCoordinateShape(T, x);
  require(x.sentinelEdge() < 0 && !x.isZero(), Status::MalformedInput,
          "weights are not those of a closed curve");
  int64_t w0 = toInt64(x.w[0], "weight");
  int64_t w1 = toInt64(x.w[1], "weight");
  for (int64_t p : {w0, -w0}) {
    if (p == 0 && w1 == 0) continue;
    if (std::gcd(p, w1) != 1) continue;
    Slope s = slopeNormalize(p, w1);
    if (curveCoords(T, s) == x) return s;
  }
  fail(Status::MalformedInput, "weights are not those of a single closed slope curve");
}

} // namespace ucn
