#include <gtest/gtest.h>

#include "trigdecomp/chebyshev.hpp"
#include "trigdecomp/trig.hpp"

using namespace trigdecomp;

TEST(Chebyshev, SmallCases) {
  EXPECT_EQ(cheb_T(0), RealPoly(RealSub(1)));
  EXPECT_EQ(cheb_T(1), RealPoly::x());
  EXPECT_EQ(cheb_T(2), RealPoly({RealSub(-1), RealSub(0), RealSub(2)}));
  EXPECT_EQ(cheb_T(3), RealPoly({RealSub(0), RealSub(-3), RealSub(0), RealSub(4)}));
  EXPECT_EQ(trig_compose(cheb_T(3), TrigPoly::cos_k(1)), TrigPoly::cos_k(3));
  EXPECT_THROW(cheb_T(-1), DomainError);
}

TEST(Chebyshev, LaurentForms) {
  EXPECT_EQ(laurent_U(1), phi(TrigPoly::cos_k(1)));
  const Tower c = Tower(1) / (Tower(2) * imag_unit());
  EXPECT_EQ(laurent_V(2), c * (Laurent::z(2) - Laurent::z(-2)));
  EXPECT_EQ(laurent_U(2), compose_outer(cheb_T(2), laurent_U(1)));
  EXPECT_EQ(laurent_U(0), Laurent(Tower(1)));
  EXPECT_TRUE(laurent_V(0).is_zero());
}

TEST(Chebyshev, Identities) {
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 8; ++m) EXPECT_EQ(compose(cheb_T(n), cheb_T(m)), cheb_T(n * m));
  }
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(compose_outer(cheb_T(n), laurent_U(1)), laurent_U(n));
    EXPECT_EQ(phi(TrigPoly::sin_k(n)), laurent_V(n));
    EXPECT_EQ(phi(TrigPoly::cos_k(n)), laurent_U(n));
    const RealPoly t = cheb_T(n);
    const RealPoly flipped = compose(t, RealPoly({RealSub(0), RealSub(-1)}));
    EXPECT_EQ(flipped, RealSub(n % 2 ? -1 : 1) * t);
  }
}
