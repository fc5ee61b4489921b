#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "trigdecomp/tower.hpp"

namespace trigdecomp {

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over K, constant term first.
template <class K>
class Polynomial {
 public:
  using Coeff = K;

  Polynomial() = default;
  Polynomial(std::initializer_list<K> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<K> c) : c_(std::move(c)) { trim(); }
  Polynomial(const K& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(constant);
  }

  static Polynomial monomial(const K& coeff, int degree) {
    std::vector<K> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(K(1), 1); }

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }

  K operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<std::size_t>(k)];
  }
  K leading() const { return c_.empty() ? K(0) : c_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const K& s, const Polynomial& p) {
    if (s.is_zero()) return {};
    std::vector<K> r = p.c_;
    for (auto& x : r) x = s * x;
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(int e) const {
    Polynomial r(K(1)), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  K evaluate(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<K> r;
    for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(K(static_cast<long>(k)) * c_[k]);
    return Polynomial(std::move(r));
  }

  /// Polynomial in x^k obtained by x -> x^k.
  Polynomial inflate(int k) const {
    if (is_zero()) return {};
    std::vector<K> r(static_cast<std::size_t>(degree() * k) + 1);
    for (std::size_t j = 0; j < c_.size(); ++j) r[j * static_cast<std::size_t>(k)] = c_[j];
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

using RealPoly = Polynomial<RealSub>;
using ComplexPoly = Polynomial<Tower>;

inline ComplexPoly to_complex(const RealPoly& p) {
  std::vector<Tower> c;
  for (const auto& x : p.coeffs()) c.push_back(embed(x));
  return ComplexPoly(std::move(c));
}
inline ComplexPoly to_complex(const ComplexPoly& p) { return p; }

inline bool is_real(const ComplexPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Tower& c) { return is_real(c); });
}

inline std::optional<RealPoly> as_real(const ComplexPoly& p) {
  if (!is_real(p)) return std::nullopt;
  std::vector<RealSub> c;
  for (const auto& x : p.coeffs()) c.push_back(real_part(x));
  return RealPoly(std::move(c));
}

inline ComplexPoly conjugate(const ComplexPoly& p) {
  std::vector<Tower> c;
  for (const auto& x : p.coeffs()) c.push_back(conjugate(x));
  return ComplexPoly(std::move(c));
}

/// Horner evaluation of `outer` at an element of any ring R that accepts
/// scalars from K (R(K) constructor, R * R and R + R).
template <class K, class R>
R horner(const Polynomial<K>& outer, const R& at) {
  if (outer.is_zero()) return R();
  const auto& c = outer.coeffs();
  R acc(c.back());
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * at + R(*it);
  return acc;
}

/// Polynomial composition A∘B.
template <class K>
Polynomial<K> compose(const Polynomial<K>& a, const Polynomial<K>& b) {
  return horner(a, b);
}

/// Degree-one map z -> alpha*z + beta.
template <class K>
struct AffineMap {
  K alpha{1};
  K beta{0};

  static AffineMap identity() { return {K(1), K(0)}; }

  AffineMap inverse() const {
    if (alpha.is_zero()) throw DomainError("affine map with zero slope");
    const K inv = K(1) / alpha;
    return {inv, -beta * inv};
  }
  K operator()(const K& z) const { return alpha * z + beta; }
  Polynomial<K> as_polynomial() const { return Polynomial<K>({beta, alpha}); }
  bool is_identity() const { return alpha == K(1) && beta.is_zero(); }

  /// this∘other
  AffineMap after(const AffineMap& other) const {
    return {alpha * other.alpha, alpha * other.beta + beta};
  }

  /// Applies the map to a value of an additive ring: alpha*v + beta.
  template <class R>
  R apply(const R& v) const {
    return R(alpha) * v + R(beta);
  }

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
};

using RealAffine = AffineMap<RealSub>;
using ComplexAffine = AffineMap<Tower>;

inline ComplexAffine to_complex(const RealAffine& m) {
  return {embed(m.alpha), embed(m.beta)};
}

/// P∘μ for an affine μ.
template <class K>
Polynomial<K> compose(const Polynomial<K>& p, const AffineMap<K>& mu) {
  return compose(p, mu.as_polynomial());
}

/// Solves outer∘inner = target for the outer polynomial by peeling powers of
/// `inner` off from the top. Returns nullopt when no polynomial outer exists.
template <class K>
std::optional<Polynomial<K>> solve_outer(const Polynomial<K>& target, const Polynomial<K>& inner) {
  const int m = inner.degree();
  if (m < 1) throw DomainError("inner polynomial must be nonconstant");
  if (target.is_zero()) return Polynomial<K>();
  if (target.degree() % m != 0) return std::nullopt;
  const int k = target.degree() / m;
  std::vector<Polynomial<K>> powers{Polynomial<K>(K(1))};
  for (int j = 1; j <= k; ++j) powers.push_back(powers.back() * inner);
  std::vector<K> outer(static_cast<std::size_t>(k) + 1);
  Polynomial<K> rest = target;
  for (int j = k; j >= 0; --j) {
    const int want = j * m;
    if (rest.degree() > want) return std::nullopt;
    if (rest.degree() == want) {
      const K a = rest.leading() / powers[static_cast<std::size_t>(j)].leading();
      outer[static_cast<std::size_t>(j)] = a;
      rest -= a * powers[static_cast<std::size_t>(j)];
    }
  }
  if (!rest.is_zero()) return std::nullopt;
  return Polynomial<K>(std::move(outer));
}

}  // namespace trigdecomp
