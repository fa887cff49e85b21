#include "rvd/simd/bitops.hpp"

#include <bit>

namespace rvd::simd::scalar {

std::size_t popcount(WordSpan a) {
  std::size_t total = 0;
  for (Word w : a) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t and_popcount(WordSpan a, WordSpan b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

std::size_t nor_popcount(WordSpan a, WordSpan b, WordSpan mask) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(~(a[i] | b[i]) & mask[i]));
  return total;
}

}  // namespace rvd::simd::scalar
