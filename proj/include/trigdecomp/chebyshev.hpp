#pragma once

#include <mutex>
#include <vector>

#include "trigdecomp/laurent.hpp"
#include "trigdecomp/polynomial.hpp"

namespace trigdecomp {

/// Chebyshev polynomial of the first kind, T_{n+1} = 2z T_n - T_{n-1}.
inline RealPoly cheb_T(int n) {
  if (n < 0) throw DomainError("Chebyshev index must be nonnegative");
  static std::mutex mu;
  static std::vector<RealPoly> memo{RealPoly(RealSub(1)), RealPoly::x()};
  std::lock_guard<std::mutex> lock(mu);
  const RealPoly two_z = RealPoly::monomial(RealSub(2), 1);
  while (static_cast<int>(memo.size()) <= n) {
    const std::size_t k = memo.size();
    memo.push_back(two_z * memo[k - 1] - memo[k - 2]);
  }
  return memo[static_cast<std::size_t>(n)];
}

/// U_n = (z^n + z^-n)/2; U_0 = 1.
inline Laurent laurent_U(int n) {
  if (n < 0) throw DomainError("index must be nonnegative");
  if (n == 0) return Laurent(Tower(1));
  const Tower half(Rational(1, 2));
  return Laurent::monomial(half, n) + Laurent::monomial(half, -n);
}

/// V_n = (z^n - z^-n)/(2i); V_0 = 0.
inline Laurent laurent_V(int n) {
  if (n < 0) throw DomainError("index must be nonnegative");
  if (n == 0) return {};
  const Tower c = Tower(1) / (Tower(2) * imag_unit());
  return Laurent::monomial(c, n) - Laurent::monomial(c, -n);
}

}  // namespace trigdecomp
