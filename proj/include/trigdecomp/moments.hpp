#pragma once

// Exact moments ∫₀^{2π} p^i dq and ∫₀¹ P^i dQ.

#include <optional>
#include <string>
#include <vector>

#include "trigdecomp/polynomial.hpp"
#include "trigdecomp/tower.hpp"
#include "trigdecomp/trig.hpp"

namespace trigdecomp {

/// coefficient * π
struct PiMultiple {
  RealSub coefficient;
  bool is_zero() const { return coefficient.is_zero(); }
  friend bool operator==(const PiMultiple& a, const PiMultiple& b) { return a.coefficient == b.coefficient; }
  friend bool operator!=(const PiMultiple& a, const PiMultiple& b) { return !(a == b); }
  friend PiMultiple operator+(const PiMultiple& a, const PiMultiple& b) {
    return {a.coefficient + b.coefficient};
  }
};

inline std::string to_string(const PiMultiple& v) {
  if (v.is_zero()) return "0";
  if (v.coefficient == RealSub(1)) return "pi";
  if (v.coefficient == RealSub(-1)) return "-pi";
  const std::string c = to_string(v.coefficient);
  if (term_count(v.coefficient) > 1) return "(" + c + ")*pi";
  return c + "*pi";
}

template <class V>
struct MomentReport {
  std::vector<V> moments;
  bool all_vanish = true;
  std::optional<int> first_nonzero;
};

/// ∫₀^{2π} p^i q′ dθ = 2π times the constant term of p^i q′.
inline PiMultiple trig_moment(const TrigPoly& p, const TrigPoly& q, int i) {
  if (i < 0) throw DomainError("moment index must be nonnegative");
  const TrigPoly integrand = p.pow(i) * q.derivative();
  return {RealSub(2) * integrand.constant_term()};
}

inline MomentReport<PiMultiple> trig_moments_vanish(const TrigPoly& p, const TrigPoly& q, int n) {
  if (n < 0) throw DomainError("N must be nonnegative");
  MomentReport<PiMultiple> r;
  const TrigPoly dq = q.derivative();
  TrigPoly pi(1);
  for (int i = 0; i <= n; ++i) {
    if (i > 0) pi = pi * p;
    r.moments.push_back({RealSub(2) * (pi * dq).constant_term()});
    if (!r.moments.back().is_zero() && !r.first_nonzero) r.first_nonzero = i;
  }
  r.all_vanish = !r.first_nonzero;
  return r;
}

/// ∫₀¹ P^i Q′ dx
inline RealSub poly_moment(const RealPoly& p, const RealPoly& q, int i) {
  if (i < 0) throw DomainError("moment index must be nonnegative");
  const RealPoly integrand = p.pow(i) * q.derivative();
  RealSub acc(0);
  for (int k = 0; k <= integrand.degree(); ++k) {
    if (!integrand[k].is_zero()) acc += integrand[k] / RealSub(k + 1);
  }
  return acc;
}

inline MomentReport<RealSub> poly_moments_vanish(const RealPoly& p, const RealPoly& q, int n) {
  if (n < 0) throw DomainError("N must be nonnegative");
  MomentReport<RealSub> r;
  for (int i = 0; i <= n; ++i) {
    r.moments.push_back(poly_moment(p, q, i));
    if (!r.moments.back().is_zero() && !r.first_nonzero) r.first_nonzero = i;
  }
  r.all_vanish = !r.first_nonzero;
  return r;
}

}  // namespace trigdecomp
