#include "contextqa/hash.hpp"

#include <array>

namespace contextqa {

std::string fnv1a64_hex(std::string_view data, std::uint64_t basis) {
  static constexpr char digits[] = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data, basis);
  std::array<char, 16> out{};
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return std::string(out.data(), out.size());
}

}  // namespace contextqa
