// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace sublrc {

/// Guards against accidental combinatorial blow-up. All counts are in
/// elements (vectors, subspaces, messages or candidate sets).
struct Limits {
  std::uint64_t enumeration = std::uint64_t{1} << 20;
  std::uint64_t exhaustive = std::uint64_t{1} << 20;
  std::uint64_t packing = 5000;
  std::uint64_t field_table = std::uint64_t{1} << 16;

  /// Defaults, with `enumeration` and `exhaustive` overridden by the
  /// SUBSPACE_LRC_LIMIT environment variable when it holds a positive integer.
  static Limits from_env();
};

}  // namespace sublrc
