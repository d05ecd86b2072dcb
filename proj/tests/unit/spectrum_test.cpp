#include <gtest/gtest.h>

#include "indigenous/errors.hpp"
#include "indigenous/spectrum.hpp"

namespace indigenous {
namespace {

TEST(Spectrum, IsSierpinskiSpace) {
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const SemiringCtx ctx(k);
    const auto view = spectrum(ctx);
    ASSERT_EQ(view.points.size(), 2u) << "k=" << k;
    EXPECT_EQ(view.points[0], zero_ideal(ctx));
    EXPECT_EQ(view.points[1], maximal_ideal(ctx));
    const std::vector<std::vector<std::size_t>> closed{{}, {0, 1}, {1}};
    EXPECT_EQ(view.closed_sets, closed);
    EXPECT_TRUE(is_sierpinski(view));
  }
}

TEST(Spectrum, VanishingSets) {
  const SemiringCtx ctx(4);
  const auto view = spectrum(ctx);
  EXPECT_EQ(vanishing_set(view.points, zero_ideal(ctx)), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(vanishing_set(view.points, smallest_nonzero_ideal(ctx)), (std::vector<std::size_t>{1}));
  EXPECT_TRUE(vanishing_set(view.points, whole_ideal(ctx)).empty());
}

TEST(Spectrum, NonSierpinskiShapesAreRejected) {
  SpectrumView view = spectrum(SemiringCtx(3));
  view.closed_sets.pop_back();
  EXPECT_FALSE(is_sierpinski(view));
}

TEST(Spectrum, BoundIsEnforced) { EXPECT_THROW(spectrum(SemiringCtx(17)), BoundExceeded); }

}  // namespace
}  // namespace indigenous
