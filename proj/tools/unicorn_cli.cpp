// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#include <cstdio>

int main(int, char**) {
  std::fprintf(stderr, "unicorn-cli: not wired up yet\n");
  return 2;
}
