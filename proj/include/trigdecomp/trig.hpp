#pragma once

// Real trigonometric polynomials a0 + sum_k (a_k cos kθ + b_k sin kθ) and the
// isomorphisms φ (onto self-reciprocal Laurent polynomials) and ψ (x = tan θ/2).

#include <cstdlib>
#include <utility>
#include <vector>

#include "trigdecomp/laurent.hpp"
#include "trigdecomp/polynomial.hpp"
#include "trigdecomp/roots.hpp"
#include "trigdecomp/tower.hpp"

namespace trigdecomp {

struct Harmonic {
  RealSub cos;
  RealSub sin;
  bool is_zero() const { return cos.is_zero() && sin.is_zero(); }
  friend bool operator==(const Harmonic& a, const Harmonic& b) {
    return a.cos == b.cos && a.sin == b.sin;
  }
};

/// A rotation angle b given exactly by (cos b, sin b).
class Rotation {
 public:
  Rotation() : cos_(1), sin_(0) {}
  Rotation(RealSub c, RealSub s) : cos_(std::move(c)), sin_(std::move(s)) {
    if (cos_ * cos_ + sin_ * sin_ != RealSub(1)) {
      throw DomainError("rotation needs cos^2 + sin^2 = 1");
    }
  }
  /// b = j * pi / 12.
  static Rotation from_twelfths(int j) {
    const Tower e = root_of_unity_24(j);
    return Rotation(real_part(e), imag_part(e));
  }
  /// b = (num/den) * pi; only multiples of pi/12 are representable.
  static Rotation from_pi_fraction(long num, long den) {
    if (den == 0) throw DomainError("zero denominator in angle");
    if ((12 * num) % den != 0) {
      throw DomainError("angle " + std::to_string(num) + "/" + std::to_string(den) +
                        "*pi is not a multiple of pi/12");
    }
    return from_twelfths(static_cast<int>(12 * num / den));
  }
  const RealSub& cos() const { return cos_; }
  const RealSub& sin() const { return sin_; }
  /// e^{ib}
  Tower unit() const { return make_tower(cos_, sin_); }
  Rotation inverse() const { return Rotation(cos_, -sin_); }
  friend bool operator==(const Rotation& a, const Rotation& b) {
    return a.cos_ == b.cos_ && a.sin_ == b.sin_;
  }

 private:
  RealSub cos_;
  RealSub sin_;
};

class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(const RealSub& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) h_.push_back({c, RealSub(0)});
  }
  TrigPoly(int c) : TrigPoly(RealSub(c)) {}  // NOLINT(google-explicit-constructor)
  explicit TrigPoly(std::vector<Harmonic> h) : h_(std::move(h)) {
    if (!h_.empty()) h_[0].sin = RealSub(0);
    trim();
  }

  static TrigPoly cos_k(int k, const RealSub& coeff = RealSub(1)) {
    TrigPoly p;
    p.add_cos(k, coeff);
    p.trim();
    return p;
  }
  static TrigPoly sin_k(int k, const RealSub& coeff = RealSub(1)) {
    TrigPoly p;
    p.add_sin(k, coeff);
    p.trim();
    return p;
  }

  const std::vector<Harmonic>& harmonics() const { return h_; }
  bool is_zero() const { return h_.empty(); }
  bool is_constant() const { return h_.size() <= 1; }
  int degree() const { return h_.empty() ? kZeroDegree : static_cast<int>(h_.size()) - 1; }
  Harmonic harmonic(int k) const {
    if (k < 0 || k >= static_cast<int>(h_.size())) return {};
    return h_[static_cast<std::size_t>(k)];
  }
  RealSub constant_term() const { return h_.empty() ? RealSub(0) : h_[0].cos; }
  /// Number of nonzero harmonics of positive index.
  int harmonic_count() const {
    int n = 0;
    for (std::size_t k = 1; k < h_.size(); ++k) n += !h_[k].is_zero();
    return n;
  }

  TrigPoly& operator+=(const TrigPoly& o) {
    if (o.h_.size() > h_.size()) h_.resize(o.h_.size());
    for (std::size_t k = 0; k < o.h_.size(); ++k) {
      h_[k].cos += o.h_[k].cos;
      h_[k].sin += o.h_[k].sin;
    }
    trim();
    return *this;
  }
  TrigPoly& operator-=(const TrigPoly& o) { return *this += -o; }
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  TrigPoly operator-() const {
    TrigPoly r = *this;
    for (auto& h : r.h_) {
      h.cos = -h.cos;
      h.sin = -h.sin;
    }
    return r;
  }

  /// Product by the product-to-sum rules.
  friend TrigPoly operator*(const TrigPoly& p, const TrigPoly& q) {
    TrigPoly r;
    if (p.is_zero() || q.is_zero()) return r;
    r.h_.resize(p.h_.size() + q.h_.size() - 1);
    const RealSub half = RealSub(Rational(1, 2));
    for (int i = 0; i < static_cast<int>(p.h_.size()); ++i) {
      const Harmonic& a = p.h_[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      for (int j = 0; j < static_cast<int>(q.h_.size()); ++j) {
        const Harmonic& b = q.h_[static_cast<std::size_t>(j)];
        if (b.is_zero()) continue;
        if (!a.cos.is_zero() && !b.cos.is_zero()) {
          const RealSub v = half * a.cos * b.cos;
          r.add_cos(i - j, v);
          r.add_cos(i + j, v);
        }
        if (!a.sin.is_zero() && !b.sin.is_zero()) {
          const RealSub v = half * a.sin * b.sin;
          r.add_cos(i - j, v);
          r.add_cos(i + j, -v);
        }
        if (!a.cos.is_zero() && !b.sin.is_zero()) {
          const RealSub v = half * a.cos * b.sin;
          r.add_sin(i + j, v);
          r.add_sin(i - j, -v);
        }
        if (!a.sin.is_zero() && !b.cos.is_zero()) {
          const RealSub v = half * a.sin * b.cos;
          r.add_sin(i + j, v);
          r.add_sin(i - j, v);
        }
      }
    }
    r.trim();
    return r;
  }
  TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }

  friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.h_ == b.h_; }
  friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

  TrigPoly pow(int e) const {
    TrigPoly r(1), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  /// d/dθ
  TrigPoly derivative() const {
    TrigPoly r;
    r.h_.resize(h_.size());
    for (std::size_t k = 1; k < h_.size(); ++k) {
      const RealSub kk(static_cast<long>(k));
      r.h_[k].cos = kk * h_[k].sin;
      r.h_[k].sin = -(kk * h_[k].cos);
    }
    r.trim();
    return r;
  }

 private:
  void ensure(int k) {
    if (static_cast<int>(h_.size()) <= k) h_.resize(static_cast<std::size_t>(k) + 1);
  }
  void add_cos(int k, const RealSub& v) {
    k = std::abs(k);
    ensure(k);
    h_[static_cast<std::size_t>(k)].cos += v;
  }
  void add_sin(int k, const RealSub& v) {
    if (k == 0) return;
    ensure(std::abs(k));
    if (k > 0) {
      h_[static_cast<std::size_t>(k)].sin += v;
    } else {
      h_[static_cast<std::size_t>(-k)].sin -= v;
    }
  }
  void trim() {
    while (!h_.empty() && h_.back().is_zero()) h_.pop_back();
  }
  std::vector<Harmonic> h_;
};

/// P∘w evaluated in the trigonometric ring.
inline TrigPoly trig_compose(const RealPoly& outer, const TrigPoly& w) {
  return horner(outer, w);
}

/// φ: cos kθ -> (z^k + z^-k)/2, sin kθ -> (z^k - z^-k)/(2i).
inline Laurent phi(const TrigPoly& p) {
  Laurent::Terms t;
  const auto& h = p.harmonics();
  const Tower half(Rational(1, 2));
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (k == 0) {
      t[0] = embed(h[0].cos);
      continue;
    }
    const Tower a = embed(h[k].cos), b = embed(h[k].sin);
    const Tower ib = imag_unit() * b;
    t[static_cast<int>(k)] = half * (a - ib);
    t[-static_cast<int>(k)] = half * (a + ib);
  }
  return Laurent(std::move(t));
}

/// Inverse of φ; the argument must be self-reciprocal.
inline TrigPoly phi_inverse(const Laurent& l) {
  if (!l.is_self_reciprocal()) {
    throw DomainError("Laurent polynomial is not self-reciprocal, so it is not the image of a real "
                      "trigonometric polynomial");
  }
  std::vector<Harmonic> h(static_cast<std::size_t>(l.n1()) + 1);
  h[0].cos = real_part(l.coefficient(0));
  for (int k = 1; k <= l.n1(); ++k) {
    const Tower ck = l.coefficient(k), cmk = l.coefficient(-k);
    h[static_cast<std::size_t>(k)].cos = real_part(ck + cmk);
    h[static_cast<std::size_t>(k)].sin = real_part(imag_unit() * (ck - cmk));
  }
  return TrigPoly(std::move(h));
}

/// θ -> kθ + b.
inline TrigPoly trig_shift(const TrigPoly& w, int k, const Rotation& b) {
  if (k < 1) throw DomainError("shift needs k >= 1");
  std::vector<Harmonic> out(static_cast<std::size_t>(std::max(0, w.degree()) * k) + 1);
  const auto& h = w.harmonics();
  if (h.empty()) return {};
  out[0].cos = h[0].cos;
  const Tower e = b.unit();
  Tower ej = e;
  for (std::size_t j = 1; j < h.size(); ++j, ej = ej * e) {
    if (h[j].is_zero()) continue;
    const RealSub cj = real_part(ej), sj = imag_part(ej);
    Harmonic& o = out[j * static_cast<std::size_t>(k)];
    o.cos = h[j].cos * cj + h[j].sin * sj;
    o.sin = h[j].sin * cj - h[j].cos * sj;
  }
  return TrigPoly(std::move(out));
}

/// ψ: p = N(x)/(1+x^2)^d with x = tan(θ/2), d = degree(p).
inline std::pair<RealPoly, RealPoly> psi(const TrigPoly& p) {
  if (p.is_constant()) return {RealPoly(p.constant_term()), RealPoly(RealSub(1))};
  const int d = p.degree();
  const RealPoly one_plus_x2({RealSub(1), RealSub(0), RealSub(1)});
  const ComplexPoly one_plus_ix({Tower(1), imag_unit()});
  const ComplexPoly e2 = one_plus_ix * one_plus_ix;
  RealPoly numer;
  ComplexPoly epow(Tower(1));
  for (int k = 0; k <= d; ++k) {
    const Harmonic hk = p.harmonic(k);
    if (!hk.is_zero()) {
      std::vector<RealSub> re, im;
      for (const auto& c : epow.coeffs()) {
        re.push_back(real_part(c));
        im.push_back(imag_part(c));
      }
      const RealPoly term = hk.cos * RealPoly(re) + hk.sin * RealPoly(im);
      numer += term * one_plus_x2.pow(d - k);
    }
    epow = epow * e2;
  }
  return {numer, one_plus_x2.pow(d)};
}

}  // namespace trigdecomp
