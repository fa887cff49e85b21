#include <cstdlib>
#include <string_view>

#include "rvd/simd/bitops.hpp"

namespace rvd::simd {
namespace {

Isa detect() {
  if (const char* forced = std::getenv("RVD_SIMD")) {
    const std::string_view name(forced);
    if (name == "scalar") return Isa::kScalar;
    if (name == "avx2" && isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  }
  if (isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  return Isa::kScalar;
}

const KernelTable& active() {
  static const KernelTable table = kernels_for(active_isa());
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(RVD_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

KernelTable kernels_for(Isa isa) {
#if defined(RVD_HAVE_AVX2)
  if (isa == Isa::kAvx2 && isa_supported(Isa::kAvx2))
    return {&avx2::popcount, &avx2::and_popcount, &avx2::nor_popcount};
#endif
  (void)isa;
  return {&scalar::popcount, &scalar::and_popcount, &scalar::nor_popcount};
}

std::size_t popcount(WordSpan a) { return active().popcount(a); }
std::size_t and_popcount(WordSpan a, WordSpan b) { return active().and_popcount(a, b); }
std::size_t nor_popcount(WordSpan a, WordSpan b, WordSpan mask) {
  return active().nor_popcount(a, b, mask);
}

}  // namespace rvd::simd
