#pragma once

// Double decompositions P1∘w1 = P2∘w2: solution-family generators, the
// degree-gcd reduction of polynomial solutions, and the classifier into the
// four real cases a) to d).

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trigdecomp/chebyshev.hpp"
#include "trigdecomp/decompose.hpp"
#include "trigdecomp/laurent.hpp"
#include "trigdecomp/polynomial.hpp"
#include "trigdecomp/roots.hpp"
#include "trigdecomp/trig.hpp"

namespace trigdecomp {

enum class CaseLabel { A, B, C, D, Laurent1, Laurent2, Laurent3, Laurent4, Laurent5 };

inline const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::A: return "a";
    case CaseLabel::B: return "b";
    case CaseLabel::C: return "c";
    case CaseLabel::D: return "d";
    case CaseLabel::Laurent1: return "laurent-1";
    case CaseLabel::Laurent2: return "laurent-2";
    case CaseLabel::Laurent3: return "laurent-3";
    case CaseLabel::Laurent4: return "laurent-4";
    case CaseLabel::Laurent5: return "laurent-5";
  }
  return "?";
}

/// Certificate for one real solution P1∘w1 = P2∘w2.
///
/// Always P_i = U∘P̃_i (sides exchanged when `swapped`). Cases a/b carry a
/// common inner w with w_i = W_i∘w and templates P̃_i = X_i∘μ_i,
/// W_i = μ_i⁻¹∘Y_i. Cases c/d carry w_i = w̃_i(kθ + b) and templates
/// P̃_i = X_i∘μ_i, w̃_i = μ_i⁻¹∘Y_i with trigonometric Y_i.
struct SolutionWitness {
  CaseLabel label = CaseLabel::A;
  bool swapped = false;
  RealPoly U = RealPoly::x();
  RealPoly P1t, P2t;

  RealPoly W1, W2;
  TrigPoly w;

  TrigPoly w1t, w2t;
  int k = 1;
  Rotation b;

  RealPoly X1, X2;
  RealPoly Y1, Y2;
  TrigPoly Y1t, Y2t;
  RealAffine mu1 = RealAffine::identity();
  RealAffine mu2 = RealAffine::identity();

  int n = 0, m = 0, r = 0, l = 0, s = 0;
  RealPoly R, S;
};

struct Quadruple {
  RealPoly P1;
  TrigPoly w1;
  RealPoly P2;
  TrigPoly w2;
};

struct Family {
  Quadruple q;
  SolutionWitness witness;
};

/// Parameters of the generators; fields not used by a case are ignored.
struct FamilyParams {
  int n = 1, m = 1, r = 0, l = 2, s = 0;
  RealPoly R = RealPoly(RealSub(1));
  RealPoly S = RealPoly(RealSub(1));
  RealPoly U = RealPoly::x();
  TrigPoly w = TrigPoly::cos_k(1);
  int k = 1;
  Rotation b;
};

inline bool verify_solution(const RealPoly& p1, const TrigPoly& w1, const RealPoly& p2,
                            const TrigPoly& w2) {
  return trig_compose(p1, w1) == trig_compose(p2, w2);
}
inline bool verify_solution(const Quadruple& q) { return verify_solution(q.P1, q.w1, q.P2, q.w2); }

namespace detail {

inline RealPoly zpow(int n) { return RealPoly::monomial(RealSub(1), n); }

// θ -> kθ + b for every trigonometric inner of a witness.
inline TrigPoly shifted(const TrigPoly& w, int k, const Rotation& b) { return trig_shift(w, k, b); }

// X(θ) with w(θ) = X(kθ + b); nullopt unless the harmonics of w are multiples of k.
inline std::optional<TrigPoly> unshift(const TrigPoly& w, int k, const Rotation& b) {
  std::vector<Harmonic> h;
  const auto& src = w.harmonics();
  for (std::size_t j = 0; j < src.size(); ++j) {
    if (j % static_cast<std::size_t>(k) != 0) {
      if (!src[j].is_zero()) return std::nullopt;
      continue;
    }
    h.push_back(src[j]);
  }
  return trig_shift(TrigPoly(std::move(h)), 1, b.inverse());
}

// Positive square root of a^2 + c^2 in the real subfield.
inline std::optional<RealSub> amplitude(const RealSub& a, const RealSub& c) {
  auto r = sqrt_exact(a * a + c * c);
  if (!r) return std::nullopt;
  return r->numeric().real() < 0 ? -*r : *r;
}

// X = E(sinθ) + cosθ F(sinθ).
inline std::pair<RealPoly, RealPoly> sin_cos_split(const TrigPoly& x) {
  const TrigPoly s = TrigPoly::sin_k(1), c = TrigPoly::cos_k(1);
  const int deg = std::max(0, x.degree());
  std::vector<TrigPoly> spow{TrigPoly(1)};
  for (int j = 1; j <= deg; ++j) spow.push_back(spow.back() * s);
  std::vector<RealSub> e(static_cast<std::size_t>(deg) + 1), f(static_cast<std::size_t>(deg) + 1);
  TrigPoly rest = x;
  for (int j = deg; j >= 1; --j) {
    const Harmonic h = rest.harmonic(j);
    if (h.is_zero()) continue;
    const TrigPoly b2 = c * spow[static_cast<std::size_t>(j - 1)];
    const Harmonic h1 = spow[static_cast<std::size_t>(j)].harmonic(j), h2 = b2.harmonic(j);
    const RealSub det = h1.cos * h2.sin - h2.cos * h1.sin;
    const RealSub ej = (h.cos * h2.sin - h2.cos * h.sin) / det;
    const RealSub fj = (h1.cos * h.sin - h.cos * h1.sin) / det;
    e[static_cast<std::size_t>(j)] = ej;
    f[static_cast<std::size_t>(j - 1)] = fj;
    rest -= TrigPoly(ej) * spow[static_cast<std::size_t>(j)] + TrigPoly(fj) * b2;
  }
  if (!rest.is_constant()) throw std::logic_error("sin/cos split left a remainder");
  e[0] = rest.constant_term();
  return {RealPoly(std::move(e)), RealPoly(std::move(f))};
}

}  // namespace detail

/// Checks every identity a witness asserts against the quadruple it describes.
inline bool check_witness(const SolutionWitness& wt, const Quadruple& q) {
  const RealPoly& p1 = wt.swapped ? q.P2 : q.P1;
  const RealPoly& p2 = wt.swapped ? q.P1 : q.P2;
  const TrigPoly& w1 = wt.swapped ? q.w2 : q.w1;
  const TrigPoly& w2 = wt.swapped ? q.w1 : q.w2;
  if (compose(wt.U, wt.P1t) != p1 || compose(wt.U, wt.P2t) != p2) return false;
  if (compose(wt.X1, wt.mu1) != wt.P1t || compose(wt.X2, wt.mu2) != wt.P2t) return false;
  switch (wt.label) {
    case CaseLabel::A:
    case CaseLabel::B:
      if (trig_compose(wt.W1, wt.w) != w1 || trig_compose(wt.W2, wt.w) != w2) return false;
      if (compose(wt.P1t, wt.W1) != compose(wt.P2t, wt.W2)) return false;
      if (compose(wt.mu1.inverse().as_polynomial(), wt.Y1) != wt.W1) return false;
      if (compose(wt.mu2.inverse().as_polynomial(), wt.Y2) != wt.W2) return false;
      return true;
    case CaseLabel::C:
    case CaseLabel::D:
      if (detail::shifted(wt.w1t, wt.k, wt.b) != w1 || detail::shifted(wt.w2t, wt.k, wt.b) != w2) {
        return false;
      }
      if (trig_compose(wt.P1t, wt.w1t) != trig_compose(wt.P2t, wt.w2t)) return false;
      if (trig_compose(wt.mu1.inverse().as_polynomial(), wt.Y1t) != wt.w1t) return false;
      if (trig_compose(wt.mu2.inverse().as_polynomial(), wt.Y2t) != wt.w2t) return false;
      return true;
    default:
      return false;
  }
}

/// Builds a solution of case a, b, c or d and verifies it.
inline Family gen_family(char which, const FamilyParams& p) {
  SolutionWitness wt;
  wt.U = p.U;
  if (p.U.degree() < 1) throw DomainError("U must be nonconstant");
  if (p.k < 1) throw DomainError("shift needs k >= 1");
  const auto check_coprime = [&] {
    if (p.n < 1 || p.m < 1) throw DomainError("n and m must be positive");
    if (std::gcd(p.n, p.m) != 1) {
      throw DomainError("GCD(n, m) = " + std::to_string(std::gcd(p.n, p.m)) + " must be 1");
    }
  };
  switch (which) {
    case 'a': {
      if (p.n < 1 || p.r < 0) throw DomainError("case a needs n >= 1 and r >= 0");
      if (p.R.is_zero()) throw DomainError("R must be nonzero");
      wt.label = CaseLabel::A;
      wt.n = p.n;
      wt.r = p.r;
      wt.R = p.R;
      wt.X1 = detail::zpow(p.n);
      wt.Y1 = detail::zpow(p.r) * p.R.inflate(p.n);
      wt.X2 = detail::zpow(p.r) * p.R.pow(p.n);
      wt.Y2 = detail::zpow(p.n);
      if (wt.Y1.degree() < 1) throw DomainError("z^r R(z^n) must be nonconstant");
      break;
    }
    case 'b': {
      check_coprime();
      wt.label = CaseLabel::B;
      wt.n = p.n;
      wt.m = p.m;
      wt.X1 = cheb_T(p.n);
      wt.Y1 = cheb_T(p.m);
      wt.X2 = cheb_T(p.m);
      wt.Y2 = cheb_T(p.n);
      break;
    }
    case 'c': {
      if (p.S.is_zero()) throw DomainError("S must be nonzero");
      wt.label = CaseLabel::C;
      wt.S = p.S;
      wt.X1 = detail::zpow(2);
      wt.Y1t = TrigPoly::cos_k(1) * trig_compose(p.S, TrigPoly::sin_k(1));
      wt.X2 = RealPoly({RealSub(1), RealSub(0), RealSub(-1)}) * p.S * p.S;
      wt.Y2t = TrigPoly::sin_k(1);
      break;
    }
    case 'd': {
      check_coprime();
      if (p.l < 2) throw DomainError("case d needs l > 1");
      const int nl = p.n * p.l;
      if (p.s < 0 || p.s >= nl) {
        throw DomainError("case d needs 0 <= s < nl = " + std::to_string(nl));
      }
      if ((12 * (2 * p.s + 1)) % nl != 0) {
        throw DomainError("phase (2s+1)pi/nl = " + std::to_string(2 * p.s + 1) + "pi/" +
                          std::to_string(nl) + " is not a multiple of pi/12");
      }
      wt.label = CaseLabel::D;
      wt.n = p.n;
      wt.m = p.m;
      wt.l = p.l;
      wt.s = p.s;
      wt.X1 = -cheb_T(nl);
      wt.Y1t = trig_shift(TrigPoly::cos_k(1), p.m, Rotation::from_pi_fraction(2 * p.s + 1, nl));
      wt.X2 = cheb_T(p.m * p.l);
      wt.Y2t = TrigPoly::cos_k(p.n);
      break;
    }
    default:
      throw DomainError(std::string("unknown case '") + which + "'");
  }
  wt.P1t = wt.X1;
  wt.P2t = wt.X2;
  Quadruple q;
  q.P1 = compose(wt.U, wt.P1t);
  q.P2 = compose(wt.U, wt.P2t);
  if (wt.label == CaseLabel::A || wt.label == CaseLabel::B) {
    if (p.w.is_constant()) throw DomainError("base inner must be nonconstant");
    wt.W1 = wt.Y1;
    wt.W2 = wt.Y2;
    wt.w = trig_shift(p.w, p.k, p.b);
    q.w1 = trig_compose(wt.W1, wt.w);
    q.w2 = trig_compose(wt.W2, wt.w);
  } else {
    wt.w1t = wt.Y1t;
    wt.w2t = wt.Y2t;
    wt.k = p.k;
    wt.b = p.b;
    q.w1 = trig_shift(wt.w1t, p.k, p.b);
    q.w2 = trig_shift(wt.w2t, p.k, p.b);
  }
  if (!verify_solution(q) || !check_witness(wt, q)) {
    throw std::logic_error("generated family does not satisfy its identity");
  }
  return {q, wt};
}

struct LaurentQuadruple {
  ComplexPoly P1;
  Laurent W1;
  ComplexPoly P2;
  Laurent W2;
};

struct LaurentFamily {
  LaurentQuadruple q;
  CaseLabel label;
  std::optional<Tower> epsilon;
};

struct LaurentFamilyParams {
  int n = 1, m = 1, r = 0, l = 2;
  ComplexPoly R = ComplexPoly(Tower(1));
  ComplexPoly S = ComplexPoly(Tower(1));
  ComplexPoly U = ComplexPoly::x();
  Laurent W = Laurent::z(1);
  /// ε = e^{iπj/12}; when absent the smallest j with ε^{nlm} = -1 is used.
  std::optional<int> epsilon_index;
};

inline bool verify_laurent_solution(const LaurentQuadruple& q) {
  return compose_outer(q.P1, q.W1) == compose_outer(q.P2, q.W2);
}

/// The five Laurent solution families, closed under U∘(.) and (.)∘W.
inline LaurentFamily gen_laurent_family(int which, const LaurentFamilyParams& p) {
  if (p.U.degree() < 1) throw DomainError("U must be nonconstant");
  if (p.W.is_constant()) throw DomainError("W must be nonconstant");
  ComplexPoly x1, x2;
  Laurent y1, y2;
  CaseLabel label;
  std::optional<Tower> eps;
  const auto check_coprime = [&] {
    if (p.n < 1 || p.m < 1) throw DomainError("n and m must be positive");
    if (std::gcd(p.n, p.m) != 1) throw DomainError("GCD(n, m) must be 1");
  };
  const ComplexPoly z = ComplexPoly::x();
  switch (which) {
    case 1: {
      if (p.n < 1 || p.r < 0 || p.R.is_zero()) throw DomainError("case 1 needs n >= 1, r >= 0, R != 0");
      if (std::gcd(p.n, p.r) != 1) throw DomainError("case 1 needs GCD(n, r) = 1");
      label = CaseLabel::Laurent1;
      x1 = z.pow(p.n);
      const ComplexPoly inner = z.pow(p.r) * p.R.inflate(p.n);
      if (inner.degree() < 1) throw DomainError("z^r R(z^n) must be nonconstant");
      y1 = Laurent::from_polynomial(inner);
      x2 = z.pow(p.r) * p.R.pow(p.n);
      y2 = Laurent::z(p.n);
      break;
    }
    case 2: {
      check_coprime();
      label = CaseLabel::Laurent2;
      x1 = to_complex(cheb_T(p.n));
      y1 = Laurent::from_polynomial(to_complex(cheb_T(p.m)));
      x2 = to_complex(cheb_T(p.m));
      y2 = Laurent::from_polynomial(to_complex(cheb_T(p.n)));
      break;
    }
    case 3: {
      if (p.S.is_zero()) throw DomainError("S must be nonzero");
      label = CaseLabel::Laurent3;
      x1 = z.pow(2);
      y1 = laurent_U(1) * compose_outer(p.S, laurent_V(1));
      x2 = ComplexPoly({Tower(1), Tower(0), Tower(-1)}) * p.S * p.S;
      y2 = laurent_V(1);
      break;
    }
    case 4: {
      check_coprime();
      if (p.l < 2) throw DomainError("case 4 needs l > 1");
      label = CaseLabel::Laurent4;
      const int e = p.n * p.l * p.m;
      auto power = [e](const Tower& t) {
        Tower r(1);
        for (int k = 0; k < e; ++k) r = r * t;
        return r;
      };
      if (p.epsilon_index) {
        eps = root_of_unity_24(*p.epsilon_index);
      } else {
        for (int j = 0; j < 24 && !eps; ++j) {
          if (power(root_of_unity_24(j)) == Tower(-1)) eps = root_of_unity_24(j);
        }
      }
      if (!eps || power(*eps) != Tower(-1)) {
        throw FieldExtensionError("no root of unity in the tower with eps^" + std::to_string(e) +
                                  " = -1");
      }
      x1 = -to_complex(cheb_T(p.n * p.l));
      y1 = laurent_U(p.m).substitute(*eps, 1);
      x2 = to_complex(cheb_T(p.m * p.l));
      y2 = laurent_U(p.n);
      break;
    }
    case 5: {
      label = CaseLabel::Laurent5;
      const Tower i = imag_unit();
      const Tower r2 = embed(sqrt2()), r3 = embed(sqrt3());
      x1 = ComplexPoly({Tower(-1), Tower(0), Tower(1)}).pow(3);
      y1 = (i / r3) * laurent_V(2) + (Tower(2) * r2 / r3) * laurent_U(1);
      x2 = ComplexPoly({Tower(0), Tower(0), Tower(0), Tower(-4), Tower(3)});
      y2 = (i / (Tower(3) * r2)) * laurent_V(3) + laurent_U(2) + (i / r2) * laurent_V(1) +
           Laurent(Tower(Rational(2, 3)));
      break;
    }
    default:
      throw DomainError("Laurent case must be 1..5");
  }
  LaurentQuadruple q{compose(p.U, x1), Laurent(), compose(p.U, x2), Laurent()};
  // (.)∘W on the right
  auto right = [&](const Laurent& y) {
    Laurent out;
    for (const auto& [e, c] : y.terms()) {
      if (e < 0) throw DomainError("right factor W is only applied to polynomial templates");
      out += c * p.W.pow(e);
    }
    return out;
  };
  if (!p.W.is_constant() && p.W != Laurent::z(1)) {
    if (label == CaseLabel::Laurent1 || label == CaseLabel::Laurent2) {
      y1 = right(y1);
      y2 = right(y2);
    } else {
      // Laurent templates take W = c z^k only.
      if (p.W.terms().size() != 1 || p.W.max_exponent() < 1) {
        throw DomainError("Laurent templates only compose with W = c z^k");
      }
      const auto& [kk, cc] = *p.W.terms().begin();
      y1 = y1.substitute(cc, kk);
      y2 = y2.substitute(cc, kk);
    }
  }
  q.W1 = y1;
  q.W2 = y2;
  if (!verify_laurent_solution(q)) throw std::logic_error("Laurent family identity failed");
  return {q, label, eps};
}

struct EngstromReduction {
  RealPoly U, V;
  RealPoly At, Ct, Bt, Dt;
};

/// A∘C = B∘D gives U, V with deg U = GCD(deg A, deg B), deg V = GCD(deg C, deg D)
/// and A = U∘Ã, B = U∘B̃, C = C̃∘V, D = D̃∘V, Ã∘C̃ = B̃∘D̃.
inline EngstromReduction engstrom_reduce(const RealPoly& a, const RealPoly& c, const RealPoly& b,
                                         const RealPoly& d, int cap = 32) {
  if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1 || d.degree() < 1) {
    throw DomainError("all four polynomials must be nonconstant");
  }
  if (a.degree() * c.degree() > cap) throw DegreeCapExceeded(a.degree() * c.degree(), cap);
  if (compose(a, c) != compose(b, d)) throw DomainError("A∘C differs from B∘D");
  const int g = std::gcd(a.degree(), b.degree());
  const int gp = std::gcd(c.degree(), d.degree());
  auto ra = right_factor(a, a.degree() / g);
  auto rb = right_factor(b, b.degree() / g);
  auto rc = right_factor(c, gp);
  auto rd = right_factor(d, gp);
  if (!ra || !rb || !rc || !rd || rc->second != rd->second) {
    throw std::logic_error("common left or right factor not found");
  }
  const RealPoly& u = ra->first;
  const RealPoly& ub = rb->first;
  const RealPoly& v = rc->second;
  // U_B = U∘μ with μ = αz + β.
  const RealSub ratio = ub.leading() / u.leading();
  std::vector<RealSub> alphas;
  for (const Tower& t : nth_roots(embed(ratio), static_cast<unsigned long>(g))) {
    if (is_real(t)) alphas.push_back(real_part(t));
  }
  for (const RealSub& alpha : alphas) {
    RealSub beta(0);
    if (g > 1) {
      RealSub ap(1);
      for (int k = 0; k < g - 1; ++k) ap = ap * alpha;
      beta = (ub[g - 1] / ap - u[g - 1]) / (RealSub(g) * u.leading());
    } else {
      beta = (ub[0] - u[0]) / u.leading();
    }
    const RealAffine mu{alpha, beta};
    if (compose(u, mu) != ub) continue;
    EngstromReduction er{u, v, ra->second, rc->first, compose(mu.as_polynomial(), rb->second), rd->first};
    if (compose(er.At, er.Ct) == compose(er.Bt, er.Dt)) return er;
  }
  throw std::logic_error("no compatible common left factor");
}

namespace detail {

// F = λ∘T_N∘ρ over the real subfield.
struct ChebyshevForm {
  RealAffine lambda;
  RealAffine rho;
};

inline std::optional<ChebyshevForm> chebyshev_form(const RealPoly& f) {
  const int n = f.degree();
  if (n < 3) return std::nullopt;
  const RealSub c = f[n - 1] / (RealSub(n) * f.leading());
  const RealPoly h = compose(f, RealPoly({-c, RealSub(1)}));
  if (h[n - 2].is_zero()) return std::nullopt;
  const RealSub a2 = -(RealSub(n) * h.leading()) / (RealSub(4) * h[n - 2]);
  auto alpha = sqrt_exact(a2);
  if (!alpha) return std::nullopt;
  const RealPoly tn = cheb_T(n);
  const RealPoly ta = compose(tn, RealPoly({RealSub(0), *alpha}));
  const RealSub kappa = h.leading() / ta.leading();
  const RealSub delta = h[0] - kappa * ta[0];
  if (h != kappa * ta + RealPoly(delta)) return std::nullopt;
  return ChebyshevForm{{kappa, delta}, {*alpha, *alpha * c}};
}

// c (z - x0)^n + d
inline std::optional<std::pair<RealSub, RealAffine>> power_form(const RealPoly& f) {
  const int n = f.degree();
  const RealSub x0 = -f[n - 1] / (RealSub(n) * f.leading());
  const RealPoly shifted = compose(f, RealPoly({x0, RealSub(1)}));
  const RealPoly want = RealPoly::monomial(f.leading(), n) + RealPoly(shifted[0]);
  if (shifted != want) return std::nullopt;
  return std::pair{x0, RealAffine{f.leading(), shifted[0]}};
}

struct PolyBranch {
  SolutionWitness wt;
  RealAffine v_adjust;  // new V = v_adjust∘V
};

inline std::optional<PolyBranch> try_chebyshev(const RealPoly& u, const RealPoly& a, const RealPoly& c,
                                               const RealPoly& b, const RealPoly& d) {
  const int n = a.degree(), m = c.degree();
  if (n < 2 || m < 2) return std::nullopt;
  auto form = chebyshev_form(compose(a, c));
  if (!form) return std::nullopt;
  const RealPoly li = form->lambda.inverse().as_polynomial();
  const RealPoly ri = form->rho.inverse().as_polynomial();
  const RealPoly a2 = compose(li, a), b2 = compose(li, b);
  const RealPoly c2 = compose(c, ri), d2 = compose(d, ri);
  auto mu1 = equivalence_witness(cheb_T(n), cheb_T(m), a2, c2);
  auto mu2 = equivalence_witness(cheb_T(m), cheb_T(n), b2, d2);
  if (!mu1 || !mu2) return std::nullopt;
  PolyBranch pb;
  auto& wt = pb.wt;
  wt.label = CaseLabel::B;
  wt.U = compose(u, form->lambda.as_polynomial());
  wt.P1t = a2;
  wt.P2t = b2;
  wt.W1 = c2;
  wt.W2 = d2;
  wt.X1 = cheb_T(n);
  wt.Y1 = cheb_T(m);
  wt.X2 = cheb_T(m);
  wt.Y2 = cheb_T(n);
  wt.mu1 = *mu1;
  wt.mu2 = *mu2;
  wt.n = n;
  wt.m = m;
  pb.v_adjust = form->rho;
  return pb;
}

inline std::optional<PolyBranch> try_power(const RealPoly& u, const RealPoly& a, const RealPoly& c,
                                           const RealPoly& b, const RealPoly& d) {
  const int n = a.degree();
  if (d.degree() != n) return std::nullopt;
  RealAffine lambda, rho;
  RealSub x0(0);
  RealAffine nu;  // D' = ν∘z^n
  if (n == 1) {
    lambda = {a[1], a[0]};
    rho = {d[1], d[0]};
    nu = RealAffine::identity();
  } else {
    auto pa = power_form(a);
    auto pd = power_form(d);
    if (!pa || !pd) return std::nullopt;
    lambda = pa->second;
    x0 = pa->first;
    rho = {RealSub(1), -pd->first};
    nu = pd->second;
  }
  const RealPoly li = lambda.inverse().as_polynomial();
  const RealPoly a2 = n == 1 ? RealPoly::x() : compose(RealPoly({-x0, RealSub(1)}), RealPoly::x()).pow(n);
  const RealPoly b2 = compose(li, b);
  const RealPoly c2 = compose(c, rho.inverse().as_polynomial());
  const RealPoly d2 = compose(d, rho.inverse().as_polynomial());
  if (compose(lambda.as_polynomial(), a2) != a) return std::nullopt;
  const RealAffine mu1{RealSub(1), -x0};
  const RealPoly y1 = c2 - RealPoly(x0);
  if (y1.is_zero()) return std::nullopt;
  int r = 0;
  while (y1[r].is_zero()) ++r;
  std::vector<RealSub> rc;
  for (int e = r; e <= y1.degree(); ++e) {
    if ((e - r) % n != 0) {
      if (!y1[e].is_zero()) return std::nullopt;
      continue;
    }
    rc.push_back(y1[e]);
  }
  const RealPoly rpoly(std::move(rc));
  const RealPoly x2 = zpow(r) * rpoly.pow(n);
  const RealAffine mu2 = nu.inverse();
  if (compose(x2, mu2) != b2) return std::nullopt;
  if (compose(nu.as_polynomial(), zpow(n)) != d2) return std::nullopt;
  PolyBranch pb;
  auto& wt = pb.wt;
  wt.label = CaseLabel::A;
  wt.U = compose(u, lambda.as_polynomial());
  wt.P1t = a2;
  wt.P2t = b2;
  wt.W1 = c2;
  wt.W2 = d2;
  wt.X1 = zpow(n);
  wt.Y1 = y1;
  wt.X2 = x2;
  wt.Y2 = zpow(n);
  wt.mu1 = mu1;
  wt.mu2 = mu2;
  wt.n = n;
  wt.r = r;
  wt.R = rpoly;
  pb.v_adjust = rho;
  return pb;
}

// Real polynomial solution A∘C = B∘D with coprime outer and inner degrees.
inline std::optional<PolyBranch> ritt_branch(const RealPoly& u, const RealPoly& a, const RealPoly& c,
                                             const RealPoly& b, const RealPoly& d) {
  if (auto pb = try_chebyshev(u, a, c, b, d)) return pb;
  if (a.degree() == 1 || b.degree() != 1) {
    if (auto pb = try_power(u, a, c, b, d)) return pb;
  }
  if (auto pb = try_power(u, b, d, a, c)) {
    pb->wt.swapped = true;
    return pb;
  }
  if (auto pb = try_power(u, a, c, b, d)) return pb;
  return std::nullopt;
}

// Common right factor w of w1 and w2 of the largest degree, with the outers.
struct CommonInner {
  TrigPoly w;
  RealPoly W1, W2;
};

inline std::optional<RealPoly> solve_trig_outer(const TrigPoly& target, const TrigPoly& inner) {
  auto a = solve_outer(phi(target), phi(inner));
  if (!a) return std::nullopt;
  return as_real(*a);
}

inline std::optional<CommonInner> common_inner(const TrigPoly& w1, const TrigPoly& w2) {
  std::vector<TrigPoly> cands{w1};
  for (const auto& d : trig_decompose(w1)) {
    if (d.kind == DecompositionKind::TrigPolyInner) cands.push_back(std::get<TrigPoly>(d.inner));
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const TrigPoly& x, const TrigPoly& y) { return x.degree() > y.degree(); });
  for (const auto& w : cands) {
    auto a = solve_trig_outer(w1, w);
    auto b = solve_trig_outer(w2, w);
    if (a && b) return CommonInner{w, *a, *b};
  }
  return std::nullopt;
}

struct HarmonicForm {
  int index;
  RealSub amplitude;
  Tower phase;  // e^{iψ} with w = amplitude cos(index θ + ψ) + offset
  RealSub offset;
};

inline std::optional<HarmonicForm> single_harmonic(const TrigPoly& w) {
  if (w.harmonic_count() != 1) return std::nullopt;
  const int j = w.degree();
  const Harmonic h = w.harmonic(j);
  auto amp = amplitude(h.cos, h.sin);
  if (!amp) return std::nullopt;
  return HarmonicForm{j, *amp, make_tower(h.cos / *amp, -h.sin / *amp), w.constant_term()};
}

inline std::optional<SolutionWitness> try_case_d(const RealPoly& p1, const TrigPoly& w1,
                                                 const RealPoly& p2, const TrigPoly& w2) {
  auto h1 = single_harmonic(w1);
  auto h2 = single_harmonic(w2);
  if (!h1 || !h2) return std::nullopt;
  const int k = std::gcd(h1->index, h2->index);
  const int m = h1->index / k, n = h2->index / k;
  if (p2.degree() % m != 0 || p1.degree() % n != 0 || p2.degree() / m != p1.degree() / n) {
    return std::nullopt;
  }
  const int dd = p2.degree() / m;
  auto divs = divisors(dd);
  std::reverse(divs.begin(), divs.end());
  for (int l : divs) {
    if (l < 2) continue;
    const int nl = n * l;
    for (int sg2 : {1, -1}) {
      const RealAffine mu2inv{RealSub(sg2) * h2->amplitude, h2->offset};
      const Tower ph2 = sg2 > 0 ? h2->phase : -h2->phase;
      const RealPoly g2 = compose(p2, mu2inv);
      auto u = solve_outer(g2, cheb_T(m * l));
      if (!u) continue;
      for (const Tower& eb : nth_roots(ph2, static_cast<unsigned long>(n))) {
        if (abs2(eb) != Tower(1)) continue;
        const Rotation b(real_part(eb), imag_part(eb));
        for (int sg1 : {1, -1}) {
          const RealAffine mu1inv{RealSub(sg1) * h1->amplitude, h1->offset};
          const Tower ph1 = sg1 > 0 ? h1->phase : -h1->phase;
          Tower ebm(1);
          for (int t = 0; t < m; ++t) ebm = ebm * eb;
          const Tower e0 = ph1 / ebm;
          Tower pw(1);
          for (int t = 0; t < nl; ++t) pw = pw * e0;
          if (pw != Tower(-1)) continue;
          auto j = root_of_unity_index(e0);
          if (!j || (*j * nl) % 12 != 0) continue;
          int odd = ((*j * nl / 12) % (2 * nl) + 2 * nl) % (2 * nl);
          if (odd % 2 == 0) continue;
          if (compose(p1, mu1inv) != compose(*u, -cheb_T(nl))) continue;
          SolutionWitness wt;
          wt.label = CaseLabel::D;
          wt.U = *u;
          wt.mu1 = mu1inv.inverse();
          wt.mu2 = mu2inv.inverse();
          wt.X1 = -cheb_T(nl);
          wt.X2 = cheb_T(m * l);
          wt.P1t = compose(wt.X1, wt.mu1);
          wt.P2t = compose(wt.X2, wt.mu2);
          wt.Y1t = trig_shift(TrigPoly::cos_k(1), m, Rotation::from_twelfths(*j));
          wt.Y2t = TrigPoly::cos_k(n);
          wt.w1t = trig_compose(mu1inv.as_polynomial(), wt.Y1t);
          wt.w2t = trig_compose(mu2inv.as_polynomial(), wt.Y2t);
          wt.k = k;
          wt.b = b;
          wt.n = n;
          wt.m = m;
          wt.l = l;
          wt.s = (odd - 1) / 2;
          return wt;
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<SolutionWitness> try_case_c(const RealPoly& p1, const TrigPoly& w1,
                                                 const RealPoly& p2, const TrigPoly& w2) {
  // w2 = ρ sin(kθ + b) + γ
  if (w2.harmonic_count() != 1) return std::nullopt;
  const int k = w2.degree();
  const Harmonic h = w2.harmonic(k);
  auto rho0 = amplitude(h.cos, h.sin);
  if (!rho0) return std::nullopt;
  for (int sg : {1, -1}) {
    const RealSub rho = RealSub(sg) * *rho0;
    const Rotation b(h.sin / rho, h.cos / rho);
    auto x = unshift(w1, k, b);
    if (!x) return std::nullopt;
    auto [e, f] = sin_cos_split(*x);
    if (!e.is_constant() || f.is_zero()) continue;
    const RealSub alpha1 = f.leading();
    const RealPoly s = RealSub(1) / alpha1 * f;
    const RealAffine mu1inv{alpha1, e[0]};
    const RealAffine mu2inv{rho, w2.constant_term()};
    auto u = solve_outer(compose(p1, mu1inv), zpow(2));
    if (!u) continue;
    const RealPoly x2 = RealPoly({RealSub(1), RealSub(0), RealSub(-1)}) * s * s;
    if (compose(p2, mu2inv) != compose(*u, x2)) continue;
    SolutionWitness wt;
    wt.label = CaseLabel::C;
    wt.U = *u;
    wt.mu1 = mu1inv.inverse();
    wt.mu2 = mu2inv.inverse();
    wt.X1 = zpow(2);
    wt.X2 = x2;
    wt.P1t = compose(wt.X1, wt.mu1);
    wt.P2t = compose(wt.X2, wt.mu2);
    wt.Y1t = TrigPoly::cos_k(1) * trig_compose(s, TrigPoly::sin_k(1));
    wt.Y2t = TrigPoly::sin_k(1);
    wt.w1t = trig_compose(mu1inv.as_polynomial(), wt.Y1t);
    wt.w2t = trig_compose(mu2inv.as_polynomial(), wt.Y2t);
    wt.k = k;
    wt.b = b;
    wt.S = s;
    return wt;
  }
  return std::nullopt;
}

// Does φ(w) match μ∘(i/√3 V2 + 2√2/√3 U1)∘(c z^k)?
inline bool matches_sporadic(const Laurent& l) {
  const int k = l.support_gcd();
  if (k == 0 || l.n1() != 2 * k) return false;
  for (const auto& [e, c] : l.terms()) {
    if (e != 0 && std::abs(e) != k && std::abs(e) != 2 * k) return false;
  }
  const Tower a = l.coefficient(k), am = l.coefficient(-k), b = l.coefficient(2 * k),
              bm = l.coefficient(-2 * k);
  if (a.is_zero() || am.is_zero() || b.is_zero() || bm.is_zero()) return false;
  return a * am == Tower(-8) * b * bm && a * a * bm == -(am * am * b);
}
inline bool matches_sporadic(const TrigPoly& w) { return matches_sporadic(phi(w)); }

}  // namespace detail

/// Classifies a real solution P1∘w1 = P2∘w2 into the cases a) to d).
inline SolutionWitness classify_solution(const Quadruple& q, int cap = 32) {
  if (q.P1.degree() < 1 || q.P2.degree() < 1 || q.w1.is_constant() || q.w2.is_constant()) {
    throw DomainError("outer and inner functions must be nonconstant");
  }
  const int total = q.P1.degree() * q.w1.degree();
  if (total > cap) throw DegreeCapExceeded(total, cap);
  if (!verify_solution(q)) throw DomainError("P1∘w1 differs from P2∘w2");

  if (auto ci = detail::common_inner(q.w1, q.w2)) {
    const auto er = engstrom_reduce(q.P1, ci->W1, q.P2, ci->W2, cap);
    auto pb = detail::ritt_branch(er.U, er.At, er.Ct, er.Bt, er.Dt);
    if (!pb) throw std::logic_error("polynomial solution fits neither power nor Chebyshev template");
    pb->wt.w = trig_compose(compose(pb->v_adjust.as_polynomial(), er.V), ci->w);
    if (!check_witness(pb->wt, q)) throw std::logic_error("polynomial witness does not recompose");
    return pb->wt;
  }

  std::optional<SolutionWitness> c;
  for (bool sw : {false, true}) {
    const auto& [p1, w1, p2, w2] = sw ? std::tie(q.P2, q.w2, q.P1, q.w1) : std::tie(q.P1, q.w1, q.P2, q.w2);
    if (auto wt = detail::try_case_c(p1, w1, p2, w2)) {
      wt->swapped = sw;
      c = wt;
      break;
    }
  }
  if (c && c->S.degree() >= 1) {
    if (!check_witness(*c, q)) throw std::logic_error("case c witness does not recompose");
    return *c;
  }
  for (bool sw : {false, true}) {
    const auto& [p1, w1, p2, w2] = sw ? std::tie(q.P2, q.w2, q.P1, q.w1) : std::tie(q.P1, q.w1, q.P2, q.w2);
    if (auto wt = detail::try_case_d(p1, w1, p2, w2)) {
      wt->swapped = sw;
      if (!check_witness(*wt, q)) throw std::logic_error("case d witness does not recompose");
      return *wt;
    }
  }
  if (c) {
    if (!check_witness(*c, q)) throw std::logic_error("case c witness does not recompose");
    return *c;
  }
  if (detail::matches_sporadic(q.w1) || detail::matches_sporadic(q.w2)) {
    throw std::logic_error("sporadic Laurent template matched a real solution");
  }
  throw DomainError("solution is outside the implemented parameter ranges (no template matched)");
}

inline SolutionWitness classify_solution(const RealPoly& p1, const TrigPoly& w1, const RealPoly& p2,
                                         const TrigPoly& w2, int cap = 32) {
  return classify_solution(Quadruple{p1, w1, p2, w2}, cap);
}

}  // namespace trigdecomp
