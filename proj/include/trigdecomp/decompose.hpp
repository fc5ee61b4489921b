#pragma once

// Functional decomposition of polynomials, Laurent polynomials and real
// trigonometric polynomials, plus the constructive realification of a
// complex decomposition of a self-reciprocal Laurent polynomial.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "trigdecomp/laurent.hpp"
#include "trigdecomp/polynomial.hpp"
#include "trigdecomp/roots.hpp"
#include "trigdecomp/tower.hpp"
#include "trigdecomp/trig.hpp"

namespace trigdecomp {

inline constexpr int kDefaultDegreeCap = 64;

/// A/(x^2+1)^k.
struct OuterRational {
  RealPoly numerator;
  int pole_order = 0;
  friend bool operator==(const OuterRational& a, const OuterRational& b) {
    return a.numerator == b.numerator && a.pole_order == b.pole_order;
  }
};

/// The inner function tan(dθ/2).
struct TanInner {
  int d = 1;
  friend bool operator==(const TanInner& a, const TanInner& b) { return a.d == b.d; }
};

enum class DecompositionKind { PolyPoly, PolyLaurent, LaurentPower, TrigPolyInner, TrigTanInner };

inline const char* to_string(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::PolyPoly: return "poly-poly";
    case DecompositionKind::PolyLaurent: return "poly-laurent";
    case DecompositionKind::LaurentPower: return "laurent-power";
    case DecompositionKind::TrigPolyInner: return "trig-poly-inner";
    case DecompositionKind::TrigTanInner: return "trig-tan-inner";
  }
  return "?";
}

struct Decomposition {
  using Outer = std::variant<RealPoly, ComplexPoly, OuterRational, Laurent>;
  using Inner = std::variant<Laurent, TrigPoly, TanInner, RealPoly, ComplexPoly>;

  DecompositionKind kind;
  Outer outer;
  Inner inner;
  /// v taking the normalized complex factors (A, B) to the reported ones
  /// (A∘v⁻¹, v∘B); identity when nothing was adjusted.
  ComplexAffine adjuster = ComplexAffine::identity();

  /// Degree of the outer factor as a function (rational degree for OuterRational).
  int outer_degree() const {
    return std::visit(
        [](const auto& o) -> int {
          if constexpr (std::is_same_v<std::decay_t<decltype(o)>, OuterRational>) {
            return std::max(o.numerator.degree(), 2 * o.pole_order);
          } else {
            return o.degree();
          }
        },
        outer);
  }
};

namespace detail {

// h with h^r = g modulo t^terms, for g[0] = 1 (J.C.P. Miller recurrence).
template <class K>
std::vector<K> series_root(const std::vector<K>& g, int r, int terms) {
  std::vector<K> h(static_cast<std::size_t>(terms));
  if (terms == 0) return h;
  h[0] = K(1);
  const Rational alpha(1, r);
  for (int k = 1; k < terms; ++k) {
    K acc(0);
    for (int j = 1; j <= k && j < static_cast<int>(g.size()); ++j) {
      if (g[static_cast<std::size_t>(j)].is_zero()) continue;
      const Rational w = (alpha + 1) * j - k;
      acc += K(w) * g[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(k - j)];
    }
    h[static_cast<std::size_t>(k)] = acc / K(k);
  }
  return h;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0) d.push_back(k);
  }
  return d;
}

// Whenever inner and composition are both self-reciprocal, the outer must be real.
inline void check_real_outer(const ComplexPoly& a, const Laurent& inner, const Laurent& target) {
  if (inner.is_self_reciprocal() && target.is_self_reciprocal() && !is_real(a)) {
    throw std::logic_error("outer factor of a self-reciprocal composition is not real");
  }
}

}  // namespace detail

/// The normalized right factor B (monic, B(0) = 0) of degree m with F = A∘B,
/// together with A. 1 <= m <= deg F.
template <class K>
std::optional<std::pair<Polynomial<K>, Polynomial<K>>> right_factor(const Polynomial<K>& f, int m) {
  const int n = f.degree();
  if (n < 1 || m < 1 || m > n || n % m != 0) {
    throw DomainError("right factor degree " + std::to_string(m) + " must divide " +
                      std::to_string(n));
  }
  const int r = n / m;
  const K lc = f.leading();
  std::vector<K> g;
  for (int k = 0; k < m; ++k) g.push_back(f[n - k] / lc);
  const auto h = detail::series_root(g, r, m);
  std::vector<K> b(static_cast<std::size_t>(m) + 1);
  b[static_cast<std::size_t>(m)] = K(1);
  for (int k = 1; k < m; ++k) b[static_cast<std::size_t>(m - k)] = h[static_cast<std::size_t>(k)];
  Polynomial<K> inner(std::move(b));
  auto outer = solve_outer(f, inner);
  if (!outer || compose(*outer, inner) != f) return std::nullopt;
  return std::pair{*outer, inner};
}

/// F = A∘B with deg B = m, B monic and B(0) = 0.
template <class K>
std::optional<std::pair<Polynomial<K>, Polynomial<K>>> poly_decompose(const Polynomial<K>& f, int m) {
  const int n = f.degree();
  if (m < 2 || m >= n) {
    throw DomainError("inner degree " + std::to_string(m) + " must lie in [2, " +
                      std::to_string(n) + ")");
  }
  if (n % m != 0) {
    throw DomainError("inner degree " + std::to_string(m) + " does not divide " + std::to_string(n));
  }
  return right_factor(f, m);
}

/// All decompositions L = A∘B with A a polynomial of degree m and B normalized
/// (coefficient 1 at its top exponent, zero constant term). Distinct entries
/// differ in the bottom coefficient of B and are pairwise inequivalent.
inline std::vector<std::pair<ComplexPoly, Laurent>> laurent_decompose_type1_all(const Laurent& l,
                                                                               int m) {
  if (m < 2) throw DomainError("outer degree must be at least 2");
  const int n1 = l.n1(), n2 = l.n2();
  if (l.is_constant()) throw DomainError("cannot decompose a constant");
  if (n1 % m != 0 || n2 % m != 0) {
    throw DomainError("outer degree " + std::to_string(m) + " must divide both degrees (" +
                      std::to_string(n1) + ", " + std::to_string(n2) + ")");
  }
  const int p = n1 / m, q = n2 / m;
  // One side of B is obtained from a series root of the matching end of L.
  auto side = [&](bool top) {
    const int n = top ? n1 : n2;
    const int len = top ? p : q;
    const Tower lead = l.coefficient(top ? n1 : -n2);
    std::vector<Tower> g;
    for (int k = 0; k < len; ++k) g.push_back(l.coefficient(top ? n - k : -(n - k)) / lead);
    const auto h = detail::series_root(g, m, len);
    Laurent::Terms t;
    t[top ? len : -len] = Tower(1);
    for (int k = 1; k < len; ++k) t[top ? len - k : -(len - k)] = h[static_cast<std::size_t>(k)];
    return Laurent(std::move(t));
  };
  std::vector<std::pair<ComplexPoly, Laurent>> out;
  auto attempt = [&](const Laurent& inner) {
    auto a = solve_outer(l, inner);
    if (!a || compose_outer(*a, inner) != l) return;
    detail::check_real_outer(*a, inner, l);
    out.emplace_back(*a, inner);
  };
  if (p > 0 && q > 0) {
    const Laurent pos = side(true), neg = side(false);
    const Tower ratio = l.coefficient(-n2) / l.coefficient(n1);
    auto betas = nth_roots(ratio, static_cast<unsigned long>(m));
    std::stable_partition(betas.begin(), betas.end(),
                          [](const Tower& b) { return b.leading_sign() > 0; });
    if (betas.empty()) {
      throw FieldExtensionError("bottom coefficient needs a " + std::to_string(m) +
                                "-th root of " + to_string(ratio));
    }
    for (const Tower& beta : betas) attempt(pos + beta * neg);
  } else {
    attempt(side(p > 0));
  }
  return out;
}

/// First entry of laurent_decompose_type1_all, if any.
inline std::optional<std::pair<ComplexPoly, Laurent>> laurent_decompose_type1(const Laurent& l, int m) {
  auto all = laurent_decompose_type1_all(l, m);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// A with L = A∘z^d.
inline std::optional<Laurent> laurent_decompose_type2(const Laurent& l, int d) {
  if (d < 1) throw DomainError("power must be positive");
  Laurent::Terms t;
  for (const auto& [e, c] : l.terms()) {
    if (e % d != 0) return std::nullopt;
    t[e / d] = c;
  }
  return Laurent(std::move(t));
}

/// All decompositions with outer degree >= 2 (and inner degree >= 2), one
/// normalized representative per class, by outer degree then kind.
inline std::vector<Decomposition> enumerate_decompositions(const Laurent& l,
                                                           int cap = kDefaultDegreeCap) {
  if (l.degree() > cap) throw DegreeCapExceeded(l.degree(), cap);
  std::vector<Decomposition> out;
  if (l.degree() < 2) return out;
  const int n1 = l.n1(), n2 = l.n2();
  const bool proper = l.is_proper();
  struct Item {
    int outer_degree;
    int kind_rank;
    Decomposition d;
  };
  std::vector<Item> items;
  const int g = proper ? std::gcd(n1, n2) : std::max(n1, n2);
  for (int m : detail::divisors(g)) {
    if (m < 2) continue;
    if (!proper && m == g) continue;
    std::vector<std::pair<ComplexPoly, Laurent>> found;
    try {
      found = laurent_decompose_type1_all(l, m);
    } catch (const FieldExtensionError&) {
      continue;
    }
    for (auto& [a, b] : found) {
      items.push_back({m, 0, Decomposition{DecompositionKind::PolyLaurent, a, b}});
    }
  }
  if (proper) {
    for (int d : detail::divisors(l.support_gcd())) {
      if (d < 2) continue;
      if (auto a = laurent_decompose_type2(l, d)) {
        items.push_back({l.degree() / d, 1,
                         Decomposition{DecompositionKind::LaurentPower, *a, Laurent::z(d)}});
      }
    }
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    return std::pair(x.outer_degree, x.kind_rank) < std::pair(y.outer_degree, y.kind_rank);
  });
  for (auto& it : items) out.push_back(std::move(it.d));
  return out;
}

/// Polynomial decompositions F = A∘B, 2 <= deg A, deg B, by outer degree.
template <class K>
std::vector<Decomposition> enumerate_poly_decompositions(const Polynomial<K>& f,
                                                         int cap = kDefaultDegreeCap) {
  if (f.degree() > cap) throw DegreeCapExceeded(f.degree(), cap);
  std::vector<Decomposition> out;
  const int n = f.degree();
  if (n < 4) return out;
  auto ds = detail::divisors(n);
  std::reverse(ds.begin(), ds.end());
  for (int m : ds) {
    if (m < 2 || m >= n) continue;
    if (auto r = poly_decompose(f, m)) {
      out.push_back(Decomposition{DecompositionKind::PolyPoly, r->first, r->second});
    }
  }
  return out;
}

struct Realification {
  ComplexAffine v;
  RealPoly outer;
  Laurent inner;
};

/// Given A∘L1 self-reciprocal, a degree-one v with A∘v⁻¹ real and v∘L1 self-reciprocal.
inline Realification realify(const ComplexPoly& a, const Laurent& l1) {
  const Laurent l = compose_outer(a, l1);
  if (!l.is_self_reciprocal()) {
    throw DomainError("composition is not self-reciprocal");
  }
  if (l1.is_constant()) throw DomainError("inner factor must be nonconstant");
  if (is_real(a) && l1.is_self_reciprocal()) {
    return {ComplexAffine::identity(), *as_real(a), l1};
  }
  if (!l1.is_proper() || l1.n1() != l1.n2()) {
    throw DomainError("inner factor of a self-reciprocal composition must have equal degrees");
  }
  const int n = l1.n1();
  // bar(L1) = a_w L1 + b_w
  const Laurent m = l1.bar();
  const Tower aw = m.coefficient(n) / l1.coefficient(n);
  const Tower bw = m.coefficient(0) - aw * l1.coefficient(0);
  if (m != aw * l1 + Laurent(bw)) {
    throw DomainError("no degree-one relation between the inner factor and its reciprocal");
  }
  if (abs2(aw) != Tower(1)) throw std::logic_error("relation coefficient is not unimodular");
  const Tower cn = l1.coefficient(n), cmn = l1.coefficient(-n);
  if (cn * cmn == Tower(1)) {
    if (!is_real(a.leading()) || abs2(cn) != Tower(1)) {
      throw std::logic_error("inner with c_{-n} = 1/c_n but non-real leading coefficient");
    }
  }
  // λ / conj(λ) = a_w; λ^2 = a_w when that root is available.
  Tower lambda;
  if (auto s = preferred_root(nth_roots(aw, 2))) {
    lambda = *s;
  } else if (aw == Tower(-1)) {
    lambda = imag_unit();
  } else {
    lambda = Tower(1) + aw;
  }
  const Tower mu = conjugate(lambda * l1.coefficient(0));
  const ComplexAffine v{lambda, mu};
  const Laurent inner = lambda * l1 + Laurent(mu);
  const ComplexPoly outer = compose(a, v.inverse());
  if (!inner.is_self_reciprocal() || !is_real(outer)) {
    throw std::logic_error("realification produced a non-real pair");
  }
  return {v, *as_real(outer), inner};
}

struct RealDescent {
  RealPoly outer;
  RealPoly inner;
  /// Constant removed from the input inner factor (inner = B - shift).
  Tower shift;
};

/// P = A∘B with P real and lc(B) real gives a real pair; the purely imaginary
/// constant of B (which the composition cannot see) is split off as `shift`.
inline RealDescent descend_real(const RealPoly& p, const ComplexPoly& b) {
  if (b.degree() < 1) throw DomainError("inner polynomial must be nonconstant");
  if (!is_real(b.leading())) {
    throw DomainError("leading coefficient of the inner polynomial is not real");
  }
  const ComplexPoly pc = to_complex(p);
  if (!solve_outer(pc, b)) throw DomainError("P is not a composition with the given inner factor");
  const Tower shift = imag_unit() * embed(imag_part(b[0]));
  const ComplexPoly rb = b - ComplexPoly(shift);
  auto a = solve_outer(pc, rb);
  if (!a || !is_real(*a) || !is_real(rb)) {
    throw std::logic_error("descent produced non-real factors");
  }
  return {*as_real(*a), *as_real(rb), shift};
}

struct NormalForm {
  int r;
  Tower a;
  Tower nu;
  ComplexAffine w1;
  ComplexAffine w2;
};

using Alignment = std::variant<ComplexAffine, NormalForm>;

namespace detail {

inline std::optional<ComplexAffine> affine_relation(const Laurent& w, const Laurent& wt) {
  // w = α wt + β
  if (wt.is_constant()) return std::nullopt;
  const int e = wt.max_exponent() != 0 ? wt.max_exponent() : wt.min_exponent();
  const Tower alpha = w.coefficient(e) / wt.coefficient(e);
  if (alpha.is_zero()) return std::nullopt;
  const Tower beta = w.coefficient(0) - alpha * wt.coefficient(0);
  if (w != alpha * wt + Laurent(beta)) return std::nullopt;
  return ComplexAffine{alpha, beta};
}

inline std::optional<RealAffine> affine_relation(const TrigPoly& w, const TrigPoly& wt) {
  if (wt.is_constant()) return std::nullopt;
  const Harmonic top = wt.harmonic(wt.degree()), wtop = w.harmonic(wt.degree());
  const RealSub alpha = top.cos.is_zero() ? wtop.sin / top.sin : wtop.cos / top.cos;
  if (alpha.is_zero()) return std::nullopt;
  const RealSub beta = w.constant_term() - alpha * wt.constant_term();
  if (w != TrigPoly(alpha) * wt + TrigPoly(beta)) return std::nullopt;
  return RealAffine{alpha, beta};
}

template <class K>
std::optional<AffineMap<K>> affine_relation(const Polynomial<K>& w, const Polynomial<K>& wt) {
  if (wt.degree() < 1 || w.degree() != wt.degree()) return std::nullopt;
  const K alpha = w.leading() / wt.leading();
  const K beta = w[0] - alpha * wt[0];
  if (w != alpha * wt + Polynomial<K>(beta)) return std::nullopt;
  return AffineMap<K>{alpha, beta};
}

}  // namespace detail

/// For A∘L1 = B∘L2 with deg A = deg B: either w with B = A∘w⁻¹, L2 = w∘L1, or
/// the z^r + z^-r normal form of both inner factors.
inline Alignment align_equal_degree(const ComplexPoly& a, const Laurent& l1, const ComplexPoly& b,
                                    const Laurent& l2) {
  if (a.degree() != b.degree() || a.degree() < 1) {
    throw DomainError("outer factors must have equal positive degree");
  }
  if (compose_outer(a, l1) != compose_outer(b, l2)) {
    throw DomainError("the two compositions differ");
  }
  if (auto w = detail::affine_relation(l2, l1)) {
    if (compose(a, w->inverse()) == b) return *w;
  }
  const int r = l1.max_exponent();
  auto shape_ok = [r](const Laurent& l) {
    if (r < 1 || l.max_exponent() != r || l.min_exponent() != -r) return false;
    return std::all_of(l.terms().begin(), l.terms().end(),
                       [r](const auto& kv) { return kv.first == r || kv.first == -r || kv.first == 0; });
  };
  if (!shape_ok(l1) || !shape_ok(l2)) {
    throw DomainError("inner factors are neither affinely related nor of the form c0 + c1 z^r + c2 z^-r");
  }
  const Tower alpha0 = l1.coefficient(0), alpha1 = l1.coefficient(r), alpha2 = l1.coefficient(-r);
  const Tower beta0 = l2.coefficient(0);
  const Tower nu1 = l2.coefficient(r) / alpha1, nu2 = l2.coefficient(-r) / alpha2;
  const auto as = nth_roots(alpha1 / alpha2, static_cast<unsigned long>(2 * r));
  if (as.empty()) {
    throw FieldExtensionError("normal form needs a " + std::to_string(2 * r) + "-th root of " +
                              to_string(alpha1 / alpha2));
  }
  const Tower av = *preferred_root(as);
  const Tower target = nu1 / nu2;
  std::optional<Tower> nu;
  for (int j = 0; j < 24; ++j) {
    const Tower cand = root_of_unity_24(j);
    Tower pw(1);
    for (int k = 0; k < 2 * r; ++k) pw = pw * cand;
    if (pw == target && (!nu || (cand.leading_sign() > 0 && nu->leading_sign() <= 0))) nu = cand;
  }
  if (!nu) throw FieldExtensionError("ratio " + to_string(target) + " needs a root of unity outside the tower");
  Tower ar(1), nur(1);
  for (int k = 0; k < r; ++k) {
    ar = ar * av;
    nur = nur * *nu;
  }
  const Tower s1 = ar / alpha1, s2 = ar * nur / (alpha1 * nu1);
  NormalForm nf{r, av, *nu, ComplexAffine{s1, -s1 * alpha0}, ComplexAffine{s2, -s2 * beta0}};
  const Laurent base = Laurent::z(r) + Laurent::z(-r);
  if (nf.w1.apply(l1) != base.substitute(av, 1) || nf.w2.apply(l2) != base.substitute(av * *nu, 1)) {
    throw std::logic_error("normal form verification failed");
  }
  return nf;
}

/// Degree-one μ with P̃ = P∘μ and W̃ = μ⁻¹∘W, if the decompositions are equivalent.
template <class P, class W>
auto equivalence_witness(const P& p, const W& w, const P& pt, const W& wt)
    -> decltype(detail::affine_relation(w, wt)) {
  if (p.degree() != pt.degree()) return std::nullopt;
  auto mu = detail::affine_relation(w, wt);
  if (!mu) return std::nullopt;
  if (compose(p, *mu) != pt) return std::nullopt;
  return mu;
}

inline std::optional<ComplexAffine> equivalence_witness(const RealPoly& p, const Laurent& w,
                                                        const RealPoly& pt, const Laurent& wt) {
  return equivalence_witness(to_complex(p), w, to_complex(pt), wt);
}

namespace detail {

// A(e^{idθ}) as N(t)/(1+t^2)^k with t = tan(dθ/2), for self-reciprocal A.
inline OuterRational tan_outer(const Laurent& a) {
  const int k = std::max(a.n1(), a.n2());
  const ComplexPoly plus({Tower(1), imag_unit()}), minus({Tower(1), -imag_unit()});
  const ComplexPoly one_t2({Tower(1), Tower(0), Tower(1)});
  ComplexPoly num;
  for (const auto& [j, c] : a.terms()) {
    const int aj = std::abs(j);
    num += c * ((j >= 0 ? plus : minus).pow(2 * aj) * one_t2.pow(k - aj));
  }
  auto real = as_real(num);
  if (!real) throw std::logic_error("tan outer is not real");
  return {*real, k};
}

// Scale a real trig inner so its top harmonic leads with coefficient 1.
inline RealSub trig_scale(const TrigPoly& w) {
  const Harmonic top = w.harmonic(w.degree());
  return top.cos.is_zero() ? top.sin : top.cos;
}

}  // namespace detail

/// Decompositions p = P∘w of a real trigonometric polynomial: real polynomial
/// outers with trigonometric inners, and rational outers of tan(dθ/2).
inline std::vector<Decomposition> trig_decompose(const TrigPoly& p, int cap = kDefaultDegreeCap) {
  std::vector<Decomposition> out;
  if (p.is_constant()) return out;
  const Laurent l = phi(p);
  if (l.degree() > cap) throw DegreeCapExceeded(l.degree(), cap);
  for (const auto& d : enumerate_decompositions(l, cap)) {
    if (d.kind == DecompositionKind::PolyLaurent) {
      const auto& a = std::get<ComplexPoly>(d.outer);
      const auto& b = std::get<Laurent>(d.inner);
      Realification rf = realify(a, b);
      TrigPoly w = phi_inverse(rf.inner);
      const RealSub c = w.constant_term();
      const RealSub s = detail::trig_scale(w);
      // w_final = (w - c)/s
      const RealAffine norm{RealSub(1) / s, -c / s};
      w = (w - TrigPoly(c)) * TrigPoly(RealSub(1) / s);
      const RealPoly outer = compose(rf.outer, norm.inverse());
      out.push_back({DecompositionKind::TrigPolyInner, outer, w,
                     to_complex(norm).after(rf.v)});
    } else {
      const int dd = std::get<Laurent>(d.inner).max_exponent();
      out.push_back({DecompositionKind::TrigTanInner,
                     detail::tan_outer(std::get<Laurent>(d.outer)), TanInner{dd}});
    }
  }
  out.push_back({DecompositionKind::TrigTanInner, detail::tan_outer(l), TanInner{1}});
  return out;
}

/// Recomposes a trigonometric decomposition with a polynomial outer.
inline TrigPoly recompose_trig(const Decomposition& d) {
  return trig_compose(std::get<RealPoly>(d.outer), std::get<TrigPoly>(d.inner));
}

}  // namespace trigdecomp
