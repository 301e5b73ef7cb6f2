#include "navembed/rng.hpp"

namespace navembed {
namespace {
__extension__ typedef unsigned __int128 uint128;
}  // namespace

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  // https://arxiv.org/abs/1805.10941
  uint128 product = static_cast<uint128>(engine_()) * n;
  auto low = static_cast<std::uint64_t>(product);
  if (low < n) {
    const std::uint64_t threshold = -n % n;
    while (low < threshold) {
      product = static_cast<uint128>(engine_()) * n;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace navembed
