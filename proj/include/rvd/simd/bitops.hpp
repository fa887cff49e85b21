#pragma once

// Word-parallel kernels over packed 64-bit vertex sets.
//
// Every kernel has a scalar reference in namespace `scalar`; vectorized
// variants live in their own namespaces and are only compiled on targets
// that support them. The unqualified entry points dispatch at runtime to
// the best variant the CPU reports, or to the one forced through the
// RVD_SIMD environment variable ("scalar", "avx2").

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace rvd::simd {

using Word = std::uint64_t;
using WordSpan = std::span<const Word>;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// ISA selected for the unqualified kernels (fixed after first call).
Isa active_isa();

/// True when `isa` can run on this machine.
bool isa_supported(Isa isa);

namespace scalar {
std::size_t popcount(WordSpan a);
std::size_t and_popcount(WordSpan a, WordSpan b);
/// popcount(~a & ~b & mask)
std::size_t nor_popcount(WordSpan a, WordSpan b, WordSpan mask);
}  // namespace scalar

#if defined(RVD_HAVE_AVX2)
namespace avx2 {
std::size_t popcount(WordSpan a);
std::size_t and_popcount(WordSpan a, WordSpan b);
std::size_t nor_popcount(WordSpan a, WordSpan b, WordSpan mask);
}  // namespace avx2
#endif

/// Dispatched kernels. Spans must have equal length.
std::size_t popcount(WordSpan a);
std::size_t and_popcount(WordSpan a, WordSpan b);
std::size_t nor_popcount(WordSpan a, WordSpan b, WordSpan mask);

/// Variant lookup used by the equivalence tests.
struct KernelTable {
  std::size_t (*popcount)(WordSpan);
  std::size_t (*and_popcount)(WordSpan, WordSpan);
  std::size_t (*nor_popcount)(WordSpan, WordSpan, WordSpan);
};

KernelTable kernels_for(Isa isa);

}  // namespace rvd::simd
