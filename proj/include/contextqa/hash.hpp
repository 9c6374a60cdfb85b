#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace contextqa {

inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

// Alternate basis for deriving an independent second hash from the same input.
inline constexpr std::uint64_t kFnvAltBasis = 0x84222325cbf29ce4ULL;

constexpr std::uint64_t fnv1a64(std::string_view data, std::uint64_t basis = kFnvOffsetBasis) {
  std::uint64_t h = basis;
  for (unsigned char c : data) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data, std::uint64_t basis = kFnvOffsetBasis);

}  // namespace contextqa
