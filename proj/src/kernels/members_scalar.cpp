#include "sidon/kernels.hpp"

namespace sidon::kernels {

std::size_t count_members_scalar(std::span<const std::uint64_t> bitmap,
                                 std::span<const std::uint32_t> indices) {
  std::size_t total = 0;
  for (std::uint32_t x : indices) total += (bitmap[x >> 6] >> (x & 63)) & 1;
  return total;
}

}  // namespace sidon::kernels
