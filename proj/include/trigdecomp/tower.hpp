#pragma once

// Exact arithmetic in Q(i, sqrt2, sqrt3) and its real subfield Q(sqrt2, sqrt3).

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstddef>
#include <string>

#include "trigdecomp/errors.hpp"

namespace trigdecomp {

using Rational = mpq_class;

namespace detail {

// Basis elements are encoded by generator bits: 1 = sqrt2, 2 = sqrt3, 4 = i.
// Coordinate order of the 8-dimensional tower is {1, i, sqrt2, sqrt3, sqrt6,
// i*sqrt2, i*sqrt3, i*sqrt6}; the real subfield uses {1, sqrt2, sqrt3, sqrt6}.
inline constexpr std::array<unsigned, 8> kTowerCodes{0, 4, 1, 2, 3, 5, 6, 7};
inline constexpr std::array<unsigned, 4> kRealCodes{0, 1, 2, 3};

inline constexpr std::array<const char*, 8> kTowerNames{
    "", "i", "sqrt(2)", "sqrt(3)", "sqrt(6)", "i*sqrt(2)", "i*sqrt(3)", "i*sqrt(6)"};
inline constexpr std::array<const char*, 4> kRealNames{"", "sqrt(2)", "sqrt(3)",
                                                       "sqrt(6)"};

constexpr int basis_product_scalar(unsigned a, unsigned b) {
  int s = 1;
  if (a & b & 1u) s *= 2;
  if (a & b & 2u) s *= 3;
  if (a & b & 4u) s = -s;
  return s;
}

struct TableEntry {
  int index;
  int scalar;
};

template <std::size_t N>
constexpr const std::array<unsigned, N>& basis_codes() {
  if constexpr (N == 8) {
    return kTowerCodes;
  } else {
    return kRealCodes;
  }
}

template <std::size_t N>
constexpr int index_of_code(unsigned code) {
  const auto& codes = basis_codes<N>();
  for (std::size_t k = 0; k < N; ++k) {
    if (codes[k] == code) return static_cast<int>(k);
  }
  return -1;
}

template <std::size_t N>
constexpr std::array<std::array<TableEntry, N>, N> make_table() {
  std::array<std::array<TableEntry, N>, N> t{};
  const auto& codes = basis_codes<N>();
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      t[a][b] = TableEntry{index_of_code<N>(codes[a] ^ codes[b]),
                           basis_product_scalar(codes[a], codes[b])};
    }
  }
  return t;
}

template <std::size_t N>
inline constexpr auto kMulTable = make_table<N>();

constexpr int parity(unsigned v) {
  int p = 0;
  while (v) {
    p ^= static_cast<int>(v & 1u);
    v >>= 1;
  }
  return p;
}

}  // namespace detail

/// Element of a multiquadratic field stored as N rational coordinates.
/// N = 8 is the tower Q(i, sqrt2, sqrt3); N = 4 its real subfield.
template <std::size_t N>
class QuadraticElement {
  static_assert(N == 4 || N == 8);

 public:
  static constexpr std::size_t kDim = N;
  using Coords = std::array<Rational, N>;

  QuadraticElement() = default;
  QuadraticElement(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  QuadraticElement(int v) { c_[0] = v; }   // NOLINT(google-explicit-constructor)
  QuadraticElement(const Rational& v) { c_[0] = v; }  // NOLINT
  explicit QuadraticElement(Coords c) : c_(std::move(c)) {
    for (auto& x : c_) x.canonicalize();
  }

  static QuadraticElement basis(std::size_t k) {
    QuadraticElement e;
    e.c_[k] = 1;
    return e;
  }

  const Coords& coords() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (sgn(x) != 0) return false;
    }
    return true;
  }
  bool is_rational() const {
    for (std::size_t k = 1; k < N; ++k) {
      if (sgn(c_[k]) != 0) return false;
    }
    return true;
  }
  bool is_one() const { return is_rational() && c_[0] == 1; }

  QuadraticElement& operator+=(const QuadraticElement& o) {
    for (std::size_t k = 0; k < N; ++k) {
      if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
    }
    return *this;
  }
  QuadraticElement& operator-=(const QuadraticElement& o) {
    for (std::size_t k = 0; k < N; ++k) {
      if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
    }
    return *this;
  }
  QuadraticElement& operator*=(const QuadraticElement& o) {
    *this = *this * o;
    return *this;
  }
  QuadraticElement& operator/=(const QuadraticElement& o) {
    *this = *this / o;
    return *this;
  }

  friend QuadraticElement operator+(QuadraticElement a, const QuadraticElement& b) {
    a += b;
    return a;
  }
  friend QuadraticElement operator-(QuadraticElement a, const QuadraticElement& b) {
    a -= b;
    return a;
  }
  QuadraticElement operator-() const {
    QuadraticElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend QuadraticElement operator*(const QuadraticElement& a, const QuadraticElement& b) {
    QuadraticElement r;
    // Sparse loop; most constants in practice have one or two coordinates.
    Rational tmp;
    for (std::size_t i = 0; i < N; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < N; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        const auto e = detail::kMulTable<N>[i][j];
        tmp = a.c_[i] * b.c_[j];
        if (e.scalar != 1) tmp *= e.scalar;
        r.c_[e.index] += tmp;
      }
    }
    return r;
  }

  friend QuadraticElement operator/(const QuadraticElement& a, const QuadraticElement& b) {
    if (b.is_rational()) {
      if (sgn(b.c_[0]) == 0) throw DivisionByZero();
      QuadraticElement r = a;
      for (auto& x : r.c_) {
        if (sgn(x) != 0) x /= b.c_[0];
      }
      return r;
    }
    return a * b.inverse();
  }

  friend bool operator==(const QuadraticElement& a, const QuadraticElement& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const QuadraticElement& a, const QuadraticElement& b) {
    return !(a == b);
  }

  /// Image under the automorphism that negates the generators in `mask`
  /// (bit 1: sqrt2, bit 2: sqrt3, bit 4: i).
  QuadraticElement galois(unsigned mask) const {
    QuadraticElement r = *this;
    const auto& codes = detail::basis_codes<N>();
    for (std::size_t k = 0; k < N; ++k) {
      if (detail::parity(codes[k] & mask)) r.c_[k] = -r.c_[k];
    }
    return r;
  }

  QuadraticElement inverse() const {
    if (is_zero()) throw DivisionByZero();
    // Multiply by conjugates one generator at a time until the value is rational.
    QuadraticElement num(1);
    QuadraticElement y = *this;
    for (unsigned mask : {4u, 2u, 1u}) {
      if (N == 4 && mask == 4u) continue;
      const QuadraticElement conj = y.galois(mask);
      num = num * conj;
      y = y * conj;
    }
    return num / QuadraticElement(y.c_[0]);
  }

  /// Field norm down to Q.
  Rational norm() const {
    QuadraticElement y = *this;
    for (unsigned mask : {4u, 2u, 1u}) {
      if (N == 4 && mask == 4u) continue;
      y = y * y.galois(mask);
    }
    return y.c_[0];
  }

  /// Numeric value under the embedding sqrt2 -> s2*sqrt2, sqrt3 -> s3*sqrt3.
  std::complex<long double> numeric(int s2 = 1, int s3 = 1) const {
    const long double r2 = std::sqrt(2.0L) * s2;
    const long double r3 = std::sqrt(3.0L) * s3;
    std::complex<long double> v = 0;
    const auto& codes = detail::basis_codes<N>();
    for (std::size_t k = 0; k < N; ++k) {
      if (sgn(c_[k]) == 0) continue;
      std::complex<long double> b = 1;
      if (codes[k] & 1u) b *= r2;
      if (codes[k] & 2u) b *= r3;
      if (codes[k] & 4u) b *= std::complex<long double>(0, 1);
      v += b * static_cast<long double>(c_[k].get_d());
    }
    return v;
  }

  /// Sign of the first nonzero coordinate; 0 for zero.
  int leading_sign() const {
    for (const auto& x : c_) {
      if (sgn(x) != 0) return sgn(x);
    }
    return 0;
  }

  friend bool canonical_less(const QuadraticElement& a, const QuadraticElement& b) {
    for (std::size_t k = 0; k < N; ++k) {
      if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
    }
    return false;
  }

 private:
  Coords c_{};
};

using RealSub = QuadraticElement<4>;
using Tower = QuadraticElement<8>;

inline Tower embed(const RealSub& r) {
  Tower::Coords c{};
  for (std::size_t k = 0; k < 4; ++k) {
    c[detail::index_of_code<8>(detail::kRealCodes[k])] = r[k];
  }
  return Tower(c);
}

inline RealSub real_part(const Tower& t) {
  RealSub::Coords c{};
  for (std::size_t k = 0; k < 8; ++k) {
    const unsigned code = detail::kTowerCodes[k];
    if (!(code & 4u)) c[code] = t[k];
  }
  return RealSub(c);
}

inline RealSub imag_part(const Tower& t) {
  RealSub::Coords c{};
  for (std::size_t k = 0; k < 8; ++k) {
    const unsigned code = detail::kTowerCodes[k];
    if (code & 4u) c[code & 3u] = t[k];
  }
  return RealSub(c);
}

inline Tower make_tower(const RealSub& re, const RealSub& im) {
  return embed(re) + Tower::basis(1) * embed(im);
}

inline Tower conjugate(const Tower& a) { return a.galois(4u); }
inline RealSub conjugate(const RealSub& a) { return a; }

inline bool is_real(const Tower& a) { return imag_part(a).is_zero(); }
inline bool is_real(const RealSub&) { return true; }

/// Throws DomainError unless `a` lies in the real subfield.
inline RealSub require_real(const Tower& a) {
  if (!is_real(a)) throw DomainError("expected a real constant");
  return real_part(a);
}

inline Tower imag_unit() { return Tower::basis(1); }
inline RealSub sqrt2() { return RealSub::basis(1); }
inline RealSub sqrt3() { return RealSub::basis(2); }
inline RealSub sqrt6() { return RealSub::basis(3); }

inline Tower to_tower(const Tower& a) { return a; }
inline Tower to_tower(const RealSub& a) { return embed(a); }

/// |a|^2 = a * conj(a).
inline Tower abs2(const Tower& a) { return a * conjugate(a); }

template <std::size_t N>
std::string to_string(const QuadraticElement<N>& a) {
  std::string out;
  for (std::size_t k = 0; k < N; ++k) {
    const Rational& c = a[k];
    if (sgn(c) == 0) continue;
    const char* name = N == 8 ? detail::kTowerNames[k] : detail::kRealNames[k];
    Rational mag = abs(c);
    std::string term;
    if (k == 0) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = name;
    } else {
      term = mag.get_str() + "*" + name;
    }
    if (out.empty()) {
      out = sgn(c) < 0 ? "-" + term : term;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

/// Number of nonzero coordinates.
template <std::size_t N>
int term_count(const QuadraticElement<N>& a) {
  int n = 0;
  for (std::size_t k = 0; k < N; ++k) n += sgn(a[k]) != 0;
  return n;
}

}  // namespace trigdecomp
