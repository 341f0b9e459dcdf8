// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace ucn {

// Outcome codes shared with the C API; keep values in sync with unicorn.h.
enum class Status : int {
  Ok = 0,
  MalformedInput = 1,
  EdgeDegree = 2,
  NonNegativeChi = 3,
  Unrealizable = 4,
  EdgeParallelAmbiguity = 5,
  NotFlippable = 6,
  SameClass = 7,
  NotAnArc = 8,
  NotMinimalPosition = 9,
  SeedTooLarge = 10,
  Disconnected = 11,
  Uncertified = 12,
  NotGrowing = 13,
  LimitsCoincide = 14,
  IndexOutOfRange = 15,
  LemmaViolated = 16,
  PropertyViolation = 17,
  Internal = 18,
};

const char* statusName(Status s);

class Error : public std::runtime_error {
public:
  Error(Status s, const std::string& what) : std::runtime_error(what), status_(s) {}
  Status status() const { return status_; }

private:
  Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

inline void require(bool cond, Status s, const std::string& msg) {
  if (!cond) fail(s, msg);
}

} // namespace ucn
