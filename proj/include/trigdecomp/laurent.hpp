#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "trigdecomp/polynomial.hpp"
#include "trigdecomp/tower.hpp"

namespace trigdecomp {

/// Sparse Laurent polynomial in C[z, 1/z] with tower coefficients.
class Laurent {
 public:
  using Terms = std::map<int, Tower>;

  Laurent() = default;
  Laurent(const Tower& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) t_[0] = c;
  }
  Laurent(const RealSub& c) : Laurent(embed(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Laurent(Terms t) : t_(std::move(t)) { prune(); }

  static Laurent monomial(const Tower& c, int e) {
    Laurent l;
    if (!c.is_zero()) l.t_[e] = c;
    return l;
  }
  static Laurent z(int e = 1) { return monomial(Tower(1), e); }
  static Laurent from_polynomial(const ComplexPoly& p) {
    Laurent l;
    for (int k = 0; k <= p.degree(); ++k) l.t_[k] = p[k];
    l.prune();
    return l;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }

  Tower coefficient(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Tower(0) : it->second;
  }
  int max_exponent() const { return t_.empty() ? kZeroDegree : t_.rbegin()->first; }
  int min_exponent() const { return t_.empty() ? kZeroDegree : t_.begin()->first; }

  /// Pole order at infinity (n1) and at zero (n2), both clamped at 0.
  int n1() const { return t_.empty() ? 0 : std::max(0, max_exponent()); }
  int n2() const { return t_.empty() ? 0 : std::max(0, -min_exponent()); }
  /// Degree as a rational function.
  int degree() const { return n1() + n2(); }
  bool is_proper() const { return n1() > 0 && n2() > 0; }
  bool is_polynomial() const { return n2() == 0; }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.t_) t_[e] += c;
    prune();
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.t_) t_[e] -= c;
    prune();
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.t_) {
      for (const auto& [eb, cb] : b.t_) r.t_[ea + eb] += ca * cb;
    }
    r.prune();
    return r;
  }
  friend Laurent operator*(const Tower& s, const Laurent& l) {
    if (s.is_zero()) return {};
    Laurent r = l;
    for (auto& [e, c] : r.t_) c = s * c;
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent pow(int e) const {
    Laurent r(Tower(1)), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  /// z -> c * z^k.
  Laurent substitute(const Tower& c, int k) const {
    if (c.is_zero()) throw DomainError("substitution z -> c z^k needs c != 0");
    if (k < 1) throw DomainError("substitution z -> c z^k needs k >= 1");
    const Tower cinv = Tower(1) / c;
    Laurent r;
    for (const auto& [e, coef] : t_) {
      Tower f(1);
      const Tower& base = e >= 0 ? c : cinv;
      for (int j = 0; j < std::abs(e); ++j) f = f * base;
      r.t_[e * k] = coef * f;
    }
    return r;
  }

  /// L̄(1/z): conjugate every coefficient and swap z^j with z^-j.
  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[-e] = conjugate(c);
    return r;
  }
  bool is_self_reciprocal() const { return bar() == *this; }

  /// gcd of the exponents in the support (0 for constants).
  int support_gcd() const {
    int g = 0;
    for (const auto& [e, c] : t_) g = std::gcd(g, std::abs(e));
    return g;
  }

  /// Conversion back to a polynomial in z when there are no negative exponents.
  std::optional<ComplexPoly> as_polynomial() const {
    if (!t_.empty() && min_exponent() < 0) return std::nullopt;
    std::vector<Tower> c(static_cast<std::size_t>(std::max(0, max_exponent() + 1)));
    for (const auto& [e, v] : t_) c[static_cast<std::size_t>(e)] = v;
    return ComplexPoly(std::move(c));
  }

 private:
  void prune() {
    for (auto it = t_.begin(); it != t_.end();) {
      it = it->second.is_zero() ? t_.erase(it) : std::next(it);
    }
  }
  Terms t_;
};

/// A∘L by Horner's rule.
inline Laurent compose_outer(const ComplexPoly& outer, const Laurent& inner) {
  return horner(outer, inner);
}
inline Laurent compose_outer(const RealPoly& outer, const Laurent& inner) {
  return horner(to_complex(outer), inner);
}

inline Laurent inner_substitute(const Laurent& l, const Tower& c, int k) {
  return l.substitute(c, k);
}

/// Solves A∘inner = target for a polynomial A, peeling from the pole at
/// infinity (or at zero when inner has no positive part).
inline std::optional<ComplexPoly> solve_outer(const Laurent& target, const Laurent& inner) {
  if (inner.is_constant()) throw DomainError("inner Laurent polynomial must be nonconstant");
  if (target.is_zero()) return ComplexPoly();
  const bool top = inner.n1() > 0;
  const int d = top ? inner.n1() : inner.n2();
  const int tdeg = top ? target.n1() : target.n2();
  if (tdeg % d != 0) return std::nullopt;
  const int k = tdeg / d;
  std::vector<Laurent> powers{Laurent(Tower(1))};
  for (int j = 1; j <= k; ++j) powers.push_back(powers.back() * inner);
  auto lead_at = [&](const Laurent& l, int e) { return l.coefficient(top ? e : -e); };
  auto pole = [&](const Laurent& l) { return top ? l.n1() : l.n2(); };
  std::vector<Tower> outer(static_cast<std::size_t>(k) + 1);
  Laurent rest = target;
  for (int j = k; j >= 0; --j) {
    const int want = j * d;
    if (pole(rest) > want) return std::nullopt;
    const Tower c = lead_at(rest, want);
    if (c.is_zero()) continue;
    const Tower a = c / lead_at(powers[static_cast<std::size_t>(j)], want);
    outer[static_cast<std::size_t>(j)] = a;
    rest -= a * powers[static_cast<std::size_t>(j)];
  }
  if (!rest.is_zero()) return std::nullopt;
  return ComplexPoly(std::move(outer));
}

}  // namespace trigdecomp
