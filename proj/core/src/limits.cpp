// SPDX-License-Identifier: Apache-2.0

#include "sublrc/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace sublrc {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("SUBSPACE_LRC_LIMIT")) {
    std::uint64_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec == std::errc() && ptr == end && value > 0) {
      limits.enumeration = value;
      limits.exhaustive = value;
    }
  }
  return limits;
}

}  // namespace sublrc
