#pragma once

// Radicals inside Q(i, sqrt2, sqrt3): exact square roots by descent through
// the quadratic tower, odd prime roots by a numeric candidate search that is
// confirmed exactly, and the 24th roots of unity.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "trigdecomp/tower.hpp"

namespace trigdecomp {

namespace detail {

inline std::optional<mpz_class> exact_root_z(const mpz_class& v, unsigned long n) {
  if (sgn(v) < 0) {
    if (n % 2 == 0) return std::nullopt;
    auto r = exact_root_z(-v, n);
    if (!r) return std::nullopt;
    return mpz_class(-*r);
  }
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), n) == 0) return std::nullopt;
  return r;
}

inline std::optional<Rational> exact_root_q(const Rational& v, unsigned long n) {
  auto num = exact_root_z(v.get_num(), n);
  if (!num) return std::nullopt;
  auto den = exact_root_z(v.get_den(), n);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

// Square root of u + v*sqrt(d) in a quadratic extension M(sqrt d), given a
// square-root oracle for M. Returns (s, t) with (s + t sqrt d)^2 = u + v sqrt d.
template <class T, class BaseSqrt>
std::optional<std::pair<T, T>> quadratic_sqrt(const T& u, const T& v, const T& d,
                                               BaseSqrt base_sqrt) {
  if (v.is_zero()) {
    if (auto r = base_sqrt(u)) return std::pair<T, T>{*r, T(0)};
    if (auto r = base_sqrt(u / d)) return std::pair<T, T>{T(0), *r};
    return std::nullopt;
  }
  const auto n = base_sqrt(u * u - d * v * v);
  if (!n) return std::nullopt;
  for (const T& branch : {*n, -*n}) {
    const T s2 = (u + branch) / T(2);
    auto s = base_sqrt(s2);
    if (s && !s->is_zero()) return std::pair<T, T>{*s, v / (T(2) * *s)};
  }
  return std::nullopt;
}

// Q(sqrt2) elements are carried as RealSub values with zero sqrt3/sqrt6 parts.
inline std::optional<RealSub> sqrt_q(const RealSub& x) {
  auto r = exact_root_q(x[0], 2);
  if (!r) return std::nullopt;
  return RealSub(*r);
}

inline std::optional<RealSub> sqrt_q2(const RealSub& x) {
  auto st = quadratic_sqrt<RealSub>(RealSub(x[0]), RealSub(x[1]), RealSub(2), sqrt_q);
  if (!st) return std::nullopt;
  return st->first + st->second * sqrt2();
}

}  // namespace detail

/// Exact square root in the real subfield, if one exists there.
inline std::optional<RealSub> sqrt_exact(const RealSub& x) {
  const RealSub u = RealSub(x[0]) + RealSub(x[1]) * sqrt2();
  const RealSub v = RealSub(x[2]) + RealSub(x[3]) * sqrt2();
  auto st = detail::quadratic_sqrt<RealSub>(u, v, RealSub(3), detail::sqrt_q2);
  if (!st) return std::nullopt;
  return st->first + st->second * sqrt3();
}

/// Exact square root in the tower, if one exists there.
inline std::optional<Tower> sqrt_exact(const Tower& x) {
  auto base = [](const Tower& y) -> std::optional<Tower> {
    if (!is_real(y)) return std::nullopt;
    auto r = sqrt_exact(real_part(y));
    if (!r) return std::nullopt;
    return embed(*r);
  };
  auto st = detail::quadratic_sqrt<Tower>(embed(real_part(x)), embed(imag_part(x)),
                                          Tower(-1), base);
  if (!st) return std::nullopt;
  return st->first + st->second * imag_unit();
}

/// e^{i pi j / 12}.
inline Tower root_of_unity_24(int j) {
  static const std::vector<Tower> table = [] {
    std::vector<Tower> t;
    // cos(pi/12) = (sqrt6 + sqrt2)/4, sin(pi/12) = (sqrt6 - sqrt2)/4
    const RealSub c = (sqrt6() + sqrt2()) / RealSub(4);
    const RealSub s = (sqrt6() - sqrt2()) / RealSub(4);
    const Tower zeta = make_tower(c, s);
    Tower cur(1);
    for (int k = 0; k < 24; ++k) {
      t.push_back(cur);
      cur = cur * zeta;
    }
    return t;
  }();
  return table[static_cast<std::size_t>(((j % 24) + 24) % 24)];
}

/// If `x` is a root of unity in the tower, its exponent j with x = e^{i pi j/12}.
inline std::optional<int> root_of_unity_index(const Tower& x) {
  for (int j = 0; j < 24; ++j) {
    if (root_of_unity_24(j) == x) return j;
  }
  return std::nullopt;
}

namespace detail {

// High-precision helpers used to identify candidate roots; every candidate is
// confirmed by exact arithmetic before it is returned.
inline constexpr mp_bitcnt_t kRootBits = 640;

struct MpComplex {
  mpf_class re{0, kRootBits};
  mpf_class im{0, kRootBits};
};

inline MpComplex mul(const MpComplex& a, const MpComplex& b) {
  MpComplex r;
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

inline MpComplex div(const MpComplex& a, const MpComplex& b) {
  mpf_class d(b.re * b.re + b.im * b.im, kRootBits);
  MpComplex r;
  r.re = (a.re * b.re + a.im * b.im) / d;
  r.im = (a.im * b.re - a.re * b.im) / d;
  return r;
}

inline mpf_class to_mpf(const Rational& q) { return mpf_class(q, kRootBits); }

// Value of a real-subfield element under sqrt2 -> s2*sqrt2, sqrt3 -> s3*sqrt3.
inline mpf_class embed_mpf(const RealSub& a, int s2, int s3) {
  static const mpf_class r2 = sqrt(mpf_class(2, kRootBits));
  static const mpf_class r3 = sqrt(mpf_class(3, kRootBits));
  mpf_class v(to_mpf(a[0]), kRootBits);
  v += to_mpf(a[1]) * r2 * s2;
  v += to_mpf(a[2]) * r3 * s3;
  v += to_mpf(a[3]) * r2 * r3 * (s2 * s3);
  return v;
}

inline std::optional<Rational> recognize_rational(const mpf_class& v) {
  static const mpz_class bound("10000000000000000000000000000000000000000");
  const mpf_class tol = mpf_class("1e-110", kRootBits) * (abs(v) > 1 ? mpf_class(abs(v)) : mpf_class(1));
  mpf_class x(v, kRootBits);
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  for (int iter = 0; iter < 200; ++iter) {
    mpf_class a = floor(x);
    const mpz_class ai(a);
    mpz_class h2 = ai * h0 + h1;
    mpz_class k2 = ai * k0 + k1;
    h1 = h0;
    h0 = h2;
    k1 = k0;
    k0 = k2;
    if (k0 > bound) return std::nullopt;
    mpf_class approx(h0, kRootBits);
    approx /= mpf_class(k0, kRootBits);
    if (abs(approx - v) <= tol) {
      Rational r(h0, k0);
      r.canonicalize();
      return r;
    }
    mpf_class frac = x - a;
    if (frac == 0) break;
    x = 1 / frac;
  }
  return std::nullopt;
}

inline std::vector<unsigned long> prime_factors(unsigned long m) {
  std::vector<unsigned long> f;
  for (unsigned long p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      f.push_back(p);
      m /= p;
    }
  }
  if (m > 1) f.push_back(m);
  return f;
}

// All x in the tower with x^p = y for an odd prime p.
inline std::vector<Tower> odd_prime_roots(const Tower& y, unsigned long p) {
  std::vector<Tower> out;
  if (!exact_root_q(y.norm(), p)) return out;
  // x = a + i b is fixed by the values of a and b under the four real
  // embeddings of Q(sqrt2, sqrt3).
  constexpr std::array<std::pair<int, int>, 4> kEmb{{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};
  // For p >= 5 the tower holds no nontrivial p-th root of unity, so the root
  // is unique, and it is real whenever y is.
  const bool unique = p >= 5;
  const bool real_only = unique && is_real(y);
  const unsigned long width = real_only ? 1 : p;
  if (width > 31) {
    throw FieldExtensionError("root search of order " + std::to_string(p) + " is too large");
  }
  const RealSub yr = real_part(y), yi = imag_part(y);
  std::array<std::vector<MpComplex>, 4> cands;
  for (std::size_t e = 0; e < 4; ++e) {
    const int s2 = kEmb[e].first, s3 = kEmb[e].second;
    MpComplex v{embed_mpf(yr, s2, s3), embed_mpf(yi, s2, s3)};
    const std::complex<long double> vl(v.re.get_d(), v.im.get_d());
    const long double mod = std::pow(std::abs(vl), 1.0L / p);
    const long double arg = std::arg(vl);
    for (unsigned long j = 0; j < width; ++j) {
      std::complex<long double> seed;
      if (real_only) {
        seed = vl.real() < 0 ? -mod : mod;
      } else {
        seed = std::polar(mod, (arg + 2 * std::numbers::pi_v<long double> * j) / p);
      }
      MpComplex z{mpf_class(static_cast<double>(seed.real()), kRootBits),
                  mpf_class(static_cast<double>(seed.imag()), kRootBits)};
      // Newton: z <- ((p-1) z + v / z^(p-1)) / p
      for (int it = 0; it < 12; ++it) {
        MpComplex zp{mpf_class(1, kRootBits), mpf_class(0, kRootBits)};
        for (unsigned long k = 1; k < p; ++k) zp = mul(zp, z);
        const MpComplex q = div(v, zp);
        z.re = (z.re * (p - 1) + q.re) / p;
        z.im = (z.im * (p - 1) + q.im) / p;
      }
      cands[e].push_back(z);
    }
  }
  static const mpf_class r2 = sqrt(mpf_class(2, kRootBits));
  static const mpf_class r3 = sqrt(mpf_class(3, kRootBits));
  // Coordinate k of a real-subfield element from its four embedding values.
  auto coord = [&](const std::array<const mpf_class*, 4>& val, std::size_t k) {
    mpf_class c(0, kRootBits);
    for (std::size_t e = 0; e < 4; ++e) {
      int sign = 1;
      if (k == 1 || k == 3) sign *= kEmb[e].first;
      if (k == 2 || k == 3) sign *= kEmb[e].second;
      if (sign > 0) {
        c += *val[e];
      } else {
        c -= *val[e];
      }
    }
    c /= 4;
    if (k == 1) c /= r2;
    if (k == 2) c /= r3;
    if (k == 3) c /= r2 * r3;
    return c;
  };
  const unsigned long combos = width * width * width * width;
  std::array<unsigned long, 4> idx{};
  for (unsigned long n = 0; n < combos; ++n) {
    unsigned long rest = n;
    for (auto& i : idx) {
      i = rest % width;
      rest /= width;
    }
    std::array<const mpf_class*, 4> re{}, im{};
    for (std::size_t e = 0; e < 4; ++e) {
      re[e] = &cands[e][idx[e]].re;
      im[e] = &cands[e][idx[e]].im;
    }
    RealSub::Coords a{}, b{};
    bool ok = true;
    for (std::size_t k = 0; k < 4 && ok; ++k) {
      auto qa = recognize_rational(coord(re, k));
      auto qb = qa ? recognize_rational(coord(im, k)) : std::nullopt;
      if (!qa || !qb) {
        ok = false;
      } else {
        a[k] = *qa;
        b[k] = *qb;
      }
    }
    if (!ok) continue;
    Tower x = make_tower(RealSub(a), RealSub(b));
    Tower pw(1);
    for (unsigned long k = 0; k < p; ++k) pw = pw * x;
    if (pw == y && std::find(out.begin(), out.end(), x) == out.end()) {
      out.push_back(x);
      if (unique) break;
    }
  }
  return out;
}

}  // namespace detail

/// All m-th roots of `y` that lie in the tower, in canonical order.
inline std::vector<Tower> nth_roots(const Tower& y, unsigned long m) {
  if (m == 0) throw DomainError("root order must be positive");
  if (y.is_zero()) return {Tower(0)};
  std::vector<Tower> cur{y};
  for (unsigned long p : detail::prime_factors(m)) {
    std::vector<Tower> next;
    for (const Tower& v : cur) {
      if (p == 2) {
        if (auto r = sqrt_exact(v)) {
          next.push_back(*r);
          next.push_back(-*r);
        }
      } else {
        for (auto& r : detail::odd_prime_roots(v, p)) next.push_back(r);
      }
    }
    cur = std::move(next);
    if (cur.empty()) break;
  }
  std::sort(cur.begin(), cur.end(), [](const Tower& a, const Tower& b) {
    return canonical_less(a, b);
  });
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  return cur;
}

/// Real m-th roots of a real value that lie in the real subfield.
inline std::vector<RealSub> real_nth_roots(const RealSub& y, unsigned long m) {
  std::vector<RealSub> out;
  for (const Tower& r : nth_roots(embed(y), m)) {
    if (is_real(r)) out.push_back(real_part(r));
  }
  return out;
}

/// Among candidate roots, pick the one whose first nonzero coordinate is
/// positive (the library-wide convention for choosing a square root).
inline std::optional<Tower> preferred_root(const std::vector<Tower>& roots) {
  for (const Tower& r : roots) {
    if (r.leading_sign() > 0) return r;
  }
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

}  // namespace trigdecomp
