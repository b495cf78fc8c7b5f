// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>

#include "sublrc/sublrc.hpp"

namespace sublrc::testing {

inline FieldPtr gf(unsigned p, unsigned m = 1) { return FieldContext::make(p, m); }

// The [3x8, 6, 7] generator printed for the b=3, M=6, q=2 parallel class.
inline Mat example1_generator() {
  static constexpr std::array<std::array<const char*, 8>, 6> rows{{
      {"100", "100", "100", "100", "100", "100", "100", "100"},
      {"010", "010", "010", "010", "010", "010", "010", "010"},
      {"001", "001", "001", "001", "001", "001", "001", "001"},
      {"000", "100", "001", "010", "101", "011", "111", "110"},
      {"000", "010", "101", "011", "111", "110", "100", "001"},
      {"000", "001", "010", "101", "011", "111", "110", "100"},
  }};
  Mat g(gf(2), 6, 24);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t i = 0; i < 3; ++i) g(r, j * 3 + i) = static_cast<Elem>(rows[r][j][i] - '0');
  return g;
}

}  // namespace sublrc::testing
