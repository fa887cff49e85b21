#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "rvd/simd/bitops.hpp"

using namespace rvd::simd;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t len) {
  std::vector<Word> w(len);
  for (auto& x : w) x = rng();
  return w;
}

std::vector<Isa> supported() {
  std::vector<Isa> out{Isa::kScalar};
  if (isa_supported(Isa::kAvx2)) out.push_back(Isa::kAvx2);
  return out;
}

}  // namespace

TEST(Simd, ScalarAlwaysSupported) {
  EXPECT_TRUE(isa_supported(Isa::kScalar));
  EXPECT_EQ(isa_name(Isa::kScalar), "scalar");
  EXPECT_TRUE(isa_supported(active_isa()));
}

TEST(Simd, VariantsMatchScalarOnRandomLengths) {
  std::mt19937_64 rng(7);
  const KernelTable ref = kernels_for(Isa::kScalar);
  for (Isa isa : supported()) {
    const KernelTable k = kernels_for(isa);
    for (std::size_t len = 0; len <= 67; ++len) {
      for (int rep = 0; rep < 8; ++rep) {
        const auto a = random_words(rng, len);
        const auto b = random_words(rng, len);
        const auto m = random_words(rng, len);
        EXPECT_EQ(k.popcount(a), ref.popcount(a)) << isa_name(isa) << " len " << len;
        EXPECT_EQ(k.and_popcount(a, b), ref.and_popcount(a, b)) << isa_name(isa) << " len " << len;
        EXPECT_EQ(k.nor_popcount(a, b, m), ref.nor_popcount(a, b, m))
            << isa_name(isa) << " len " << len;
      }
    }
  }
}

TEST(Simd, DispatchedMatchesScalar) {
  std::mt19937_64 rng(11);
  for (std::size_t len : {1u, 4u, 5u, 16u, 17u, 100u}) {
    const auto a = random_words(rng, len);
    const auto b = random_words(rng, len);
    const auto m = random_words(rng, len);
    EXPECT_EQ(popcount(a), scalar::popcount(a));
    EXPECT_EQ(and_popcount(a, b), scalar::and_popcount(a, b));
    EXPECT_EQ(nor_popcount(a, b, m), scalar::nor_popcount(a, b, m));
  }
}

TEST(Simd, ExtremeBitPatterns) {
  for (Isa isa : supported()) {
    const KernelTable k = kernels_for(isa);
    for (std::size_t len : {1u, 3u, 4u, 8u, 9u, 33u}) {
      const std::vector<Word> ones(len, ~Word{0});
      const std::vector<Word> zeros(len, 0);
      EXPECT_EQ(k.popcount(ones), 64 * len);
      EXPECT_EQ(k.popcount(zeros), 0u);
      EXPECT_EQ(k.and_popcount(ones, ones), 64 * len);
      EXPECT_EQ(k.and_popcount(ones, zeros), 0u);
      EXPECT_EQ(k.nor_popcount(zeros, zeros, ones), 64 * len);
      EXPECT_EQ(k.nor_popcount(ones, zeros, ones), 0u);
    }
  }
}
