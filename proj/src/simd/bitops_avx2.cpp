// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "rvd/simd/bitops.hpp"

namespace rvd::simd::avx2 {
namespace {

// Nibble-LUT population count (Mula), accumulated per 64-bit lane.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes =
      _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

}  // namespace

std::size_t popcount(WordSpan a) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(&a[i])));
  std::size_t total = horizontal_sum(acc);
  for (; i < a.size(); ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return total;
}

std::size_t and_popcount(WordSpan a, WordSpan b) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4)
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(&a[i]), load(&b[i]))));
  std::size_t total = horizontal_sum(acc);
  for (; i < a.size(); ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

std::size_t nor_popcount(WordSpan a, WordSpan b, WordSpan mask) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    // andnot(x, m) = ~x & m
    const __m256i either = _mm256_or_si256(load(&a[i]), load(&b[i]));
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_andnot_si256(either, load(&mask[i]))));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < a.size(); ++i)
    total += static_cast<std::size_t>(_mm_popcnt_u64(~(a[i] | b[i]) & mask[i]));
  return total;
}

}  // namespace rvd::simd::avx2
