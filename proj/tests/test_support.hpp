#pragma once

// Shared random generators and high-precision numeric oracles for the tests.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <random>
#include <vector>

#include "trigdecomp/laurent.hpp"
#include "trigdecomp/polynomial.hpp"
#include "trigdecomp/trig.hpp"

namespace trigdecomp::testing {

using HP = boost::multiprecision::cpp_bin_float_50;
using HPC = boost::multiprecision::cpp_complex_50;

inline HP pi_hp() { return boost::math::constants::pi<HP>(); }

inline HP to_hp(const Rational& q) {
  return HP(q.get_num().get_str()) / HP(q.get_den().get_str());
}

inline HP to_hp(const RealSub& a) {
  static const HP r2 = boost::multiprecision::sqrt(HP(2));
  static const HP r3 = boost::multiprecision::sqrt(HP(3));
  return to_hp(a[0]) + to_hp(a[1]) * r2 + to_hp(a[2]) * r3 + to_hp(a[3]) * r2 * r3;
}

inline HPC to_hp(const Tower& a) { return HPC(to_hp(real_part(a)), to_hp(imag_part(a))); }

inline HP eval_hp(const RealPoly& p, const HP& x) {
  HP acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_hp(*it);
  return acc;
}

inline HP eval_hp(const TrigPoly& p, const HP& theta) {
  HP acc = 0;
  const auto& h = p.harmonics();
  for (std::size_t k = 0; k < h.size(); ++k) {
    const HP kt = HP(static_cast<int>(k)) * theta;
    acc += to_hp(h[k].cos) * boost::multiprecision::cos(kt) +
           to_hp(h[k].sin) * boost::multiprecision::sin(kt);
  }
  return acc;
}

inline Rational random_rational(std::mt19937_64& rng, int range = 4) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Mostly rational values with occasional surds, to keep coefficient growth sane.
inline RealSub random_real(std::mt19937_64& rng) {
  RealSub::Coords c{};
  c[0] = random_rational(rng);
  if (rng() % 4 == 0) c[1 + rng() % 3] = random_rational(rng, 2);
  return RealSub(c);
}

inline Tower random_tower(std::mt19937_64& rng) {
  Tower t = embed(random_real(rng));
  if (rng() % 2 == 0) t += imag_unit() * embed(random_real(rng));
  return t;
}

inline RealPoly random_real_poly(std::mt19937_64& rng, int max_degree) {
  std::vector<RealSub> c;
  for (int k = 0; k <= max_degree; ++k) c.push_back(random_real(rng));
  return RealPoly(std::move(c));
}

inline ComplexPoly random_complex_poly(std::mt19937_64& rng, int max_degree) {
  std::vector<Tower> c;
  for (int k = 0; k <= max_degree; ++k) c.push_back(random_tower(rng));
  return ComplexPoly(std::move(c));
}

/// Polynomial of exactly the given degree.
inline ComplexPoly random_complex_poly_exact(std::mt19937_64& rng, int degree) {
  ComplexPoly p;
  while (p.degree() != degree) p = random_complex_poly(rng, degree);
  return p;
}

inline RealPoly random_real_poly_exact(std::mt19937_64& rng, int degree) {
  RealPoly p;
  while (p.degree() != degree) p = random_real_poly(rng, degree);
  return p;
}

inline TrigPoly random_trig(std::mt19937_64& rng, int max_degree) {
  std::vector<Harmonic> h(static_cast<std::size_t>(max_degree) + 1);
  for (auto& x : h) {
    if (rng() % 3 == 0) continue;
    x.cos = random_real(rng);
    x.sin = random_real(rng);
  }
  return TrigPoly(std::move(h));
}

inline TrigPoly random_trig_exact(std::mt19937_64& rng, int degree) {
  TrigPoly p;
  while (p.degree() != degree) p = random_trig(rng, degree);
  return p;
}

inline Laurent random_laurent(std::mt19937_64& rng, int n1, int n2) {
  Laurent::Terms t;
  for (int e = -n2; e <= n1; ++e) {
    if (rng() % 4 == 0 && e != n1 && e != -n2) continue;
    t[e] = random_tower(rng);
  }
  return Laurent(std::move(t));
}

inline Laurent random_laurent_exact(std::mt19937_64& rng, int n1, int n2) {
  Laurent l;
  while (l.n1() != n1 || l.n2() != n2) l = random_laurent(rng, n1, n2);
  return l;
}

}  // namespace trigdecomp::testing
