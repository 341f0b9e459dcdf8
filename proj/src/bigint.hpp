// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "status.hpp"

namespace ucn {

// Mapping-class iteration grows edge weights geometrically, so coordinates are
// arbitrary precision end to end; strand-level work narrows explicitly.
using BigInt = boost::multiprecision::cpp_int;

inline int64_t toInt64(const BigInt& v, const char* what = "value") {
  if (v < std::numeric_limits<int64_t>::min() || v > std::numeric_limits<int64_t>::max())
    fail(Status::Internal, std::string(what) + " exceeds 64-bit range: " + v.str());
  return static_cast<int64_t>(v);
}

inline BigInt bigAbs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

} // namespace ucn
