#pragma once

// Expression parser and canonical printer.
//
// Grammar (lowest precedence first):
//   expr    := sum ('@' expr)?
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' signed-integer)?
//   atom    := integer | 'z' | 'i' | 'pi' | 't' | 'θ' | 'sqrt2' | 'sqrt3' | 'sqrt6'
//            | 'sqrt(' 2|3|6 ')' | ('cos' | 'sin') '(' linear ')' | '(' expr ')'
// The argument of cos/sin is a linear form k*t + q*pi with integer k and
// 12q integral. `P @ w` composes a polynomial P in z with w.

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigdecomp/decompose.hpp"
#include "trigdecomp/errors.hpp"
#include "trigdecomp/laurent.hpp"
#include "trigdecomp/polynomial.hpp"
#include "trigdecomp/tower.hpp"
#include "trigdecomp/trig.hpp"

namespace trigdecomp {

enum class Ring { Trig, Laurent, Poly };

inline const char* to_string(Ring r) {
  switch (r) {
    case Ring::Trig: return "trig";
    case Ring::Laurent: return "laurent";
    case Ring::Poly: return "poly";
  }
  return "?";
}

namespace detail {

struct Node {
  enum class Op { Num, Z, T, Pi, Trig, Add, Sub, Mul, Div, Neg, Pow, Compose };
  Op op;
  std::size_t offset = 0;
  Tower value;             // Num
  bool is_sin = false;     // Trig
  int exponent = 0;        // Pow
  std::unique_ptr<Node> a, b;
};
using NodePtr = std::unique_ptr<Node>;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("'" + std::string(tok) + "'");
  }
  static NodePtr make(Node::Op op, std::size_t at, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_unique<Node>();
    n->op = op;
    n->offset = at;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  NodePtr expr() {
    auto left = sum();
    skip();
    const std::size_t at = pos_;
    if (eat("@") || eat("\xE2\x88\x98")) return make(Node::Op::Compose, at, std::move(left), expr());
    return left;
  }
  NodePtr sum() {
    auto left = product();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (eat("+")) {
        left = make(Node::Op::Add, at, std::move(left), product());
      } else if (eat("-")) {
        left = make(Node::Op::Sub, at, std::move(left), product());
      } else {
        return left;
      }
    }
  }
  NodePtr product() {
    auto left = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (eat("*")) {
        left = make(Node::Op::Mul, at, std::move(left), unary());
      } else if (eat("/")) {
        left = make(Node::Op::Div, at, std::move(left), unary());
      } else {
        return left;
      }
    }
  }
  NodePtr unary() {
    skip();
    const std::size_t at = pos_;
    if (eat("-")) return make(Node::Op::Neg, at, unary());
    return power();
  }
  NodePtr power() {
    auto base = atom();
    skip();
    const std::size_t at = pos_;
    if (!eat("^")) return base;
    auto n = make(Node::Op::Pow, at, std::move(base));
    const bool paren = eat("(");
    bool neg = eat("-");
    skip();
    n->exponent = integer();
    if (neg) n->exponent = -n->exponent;
    if (paren) expect(")");
    return n;
  }
  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("integer below 10^9");
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  bool word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }
  NodePtr atom() {
    skip();
    const std::size_t at = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto n = make(Node::Op::Num, at);
      n->value = Tower(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
      return n;
    }
    if (eat("(")) {
      auto e = expr();
      expect(")");
      return e;
    }
    if (word("cos") || word("sin")) {
      const bool is_sin = s_.substr(at, 3) == "sin";
      expect("(");
      auto n = make(Node::Op::Trig, at, sum());
      n->is_sin = is_sin;
      expect(")");
      return n;
    }
    if (word("z")) return make(Node::Op::Z, at);
    if (word("t") || eat("\xCE\xB8")) return make(Node::Op::T, at);
    if (word("pi")) return make(Node::Op::Pi, at);
    if (word("i")) {
      auto n = make(Node::Op::Num, at);
      n->value = imag_unit();
      return n;
    }
    for (auto [name, r] : {std::pair{"sqrt2", 1}, std::pair{"sqrt3", 2}, std::pair{"sqrt6", 3}}) {
      if (word(name)) {
        auto n = make(Node::Op::Num, at);
        n->value = embed(RealSub::basis(static_cast<std::size_t>(r)));
        return n;
      }
    }
    if (word("sqrt")) {
      expect("(");
      skip();
      const std::size_t argpos = pos_;
      const int v = integer();
      if (v != 2 && v != 3 && v != 6) {
        pos_ = argpos;
        fail("2, 3 or 6 (constants outside Q(i, sqrt2, sqrt3) are not supported)");
      }
      expect(")");
      auto n = make(Node::Op::Num, at);
      n->value = embed(v == 2 ? sqrt2() : v == 3 ? sqrt3() : sqrt6());
      return n;
    }
    fail("number, variable, function or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// k*t + q*pi + c with rational coefficients.
struct Linear {
  Rational t, pi, c;
};

inline Linear linear(const Node& n) {
  using Op = Node::Op;
  auto scalar = [&](const Linear& l) { return sgn(l.t) == 0 && sgn(l.pi) == 0; };
  switch (n.op) {
    case Op::Num:
      if (!n.value.is_rational()) throw ParseError(n.offset, "rational coefficient in angle");
      return {0, 0, n.value[0]};
    case Op::T: return {1, 0, 0};
    case Op::Pi: return {0, 1, 0};
    case Op::Neg: {
      const Linear a = linear(*n.a);
      return {-a.t, -a.pi, -a.c};
    }
    case Op::Add:
    case Op::Sub: {
      const Linear a = linear(*n.a), b = linear(*n.b);
      const int s = n.op == Op::Add ? 1 : -1;
      return {a.t + s * b.t, a.pi + s * b.pi, a.c + s * b.c};
    }
    case Op::Mul: {
      const Linear a = linear(*n.a), b = linear(*n.b);
      if (scalar(a)) return {a.c * b.t, a.c * b.pi, a.c * b.c};
      if (scalar(b)) return {b.c * a.t, b.c * a.pi, b.c * a.c};
      throw ParseError(n.offset, "angle linear in t and pi");
    }
    case Op::Div: {
      const Linear a = linear(*n.a), b = linear(*n.b);
      if (!scalar(b) || sgn(b.c) == 0) throw ParseError(n.b->offset, "nonzero rational divisor");
      return {a.t / b.c, a.pi / b.c, a.c / b.c};
    }
    default:
      throw ParseError(n.offset, "angle of the form k*t + q*pi");
  }
}

// Angle q*pi as a rotation; 12q must be an integer.
inline Rotation rotation_of(const Rational& q, std::size_t offset) {
  const Rational j = q * 12;
  if (j.get_den() != 1) throw ParseError(offset, "phase that is a multiple of pi/12");
  long jj = mpz_class(j.get_num() % 24).get_si();
  return Rotation::from_twelfths(static_cast<int>(jj));
}

struct Context {
  bool allow_z;
  bool allow_trig;
};

inline Laurent eval(const Node& n, Context ctx) {
  using Op = Node::Op;
  switch (n.op) {
    case Op::Num: return Laurent(n.value);
    case Op::Z:
      if (!ctx.allow_z) throw ParseError(n.offset, "trigonometric expression (z only on the left of '@')");
      return Laurent::z(1);
    case Op::T:
    case Op::Pi: throw ParseError(n.offset, "t and pi only inside cos(...) or sin(...)");
    case Op::Trig: {
      if (!ctx.allow_trig) throw ParseError(n.offset, "polynomial in z");
      const Linear l = linear(*n.a);
      if (sgn(l.c) != 0) throw ParseError(n.a->offset, "angle without a constant term besides pi");
      if (l.t.get_den() != 1) throw ParseError(n.a->offset, "integer multiple of t");
      long k = l.t.get_num().get_si();
      Rational q = l.pi;
      int sign = 1;
      if (k < 0) {  // cos(-x) = cos x, sin(-x) = -sin x
        k = -k;
        q = -q;
        if (n.is_sin) sign = -1;
      }
      const Rotation b = rotation_of(q, n.a->offset);
      TrigPoly w;
      if (k == 0) {
        w = TrigPoly(n.is_sin ? b.sin() : b.cos());
      } else {
        const TrigPoly base = n.is_sin ? TrigPoly::sin_k(1) : TrigPoly::cos_k(1);
        w = trig_shift(base, static_cast<int>(k), b);
      }
      return sign > 0 ? phi(w) : -phi(w);
    }
    case Op::Add: return eval(*n.a, ctx) + eval(*n.b, ctx);
    case Op::Sub: return eval(*n.a, ctx) - eval(*n.b, ctx);
    case Op::Mul: return eval(*n.a, ctx) * eval(*n.b, ctx);
    case Op::Neg: return -eval(*n.a, ctx);
    case Op::Div: {
      const Laurent d = eval(*n.b, ctx);
      if (d.is_zero()) throw DivisionByZero();
      if (d.terms().size() != 1) throw ParseError(n.b->offset, "constant or monomial divisor");
      const auto& [e, c] = *d.terms().begin();
      return eval(*n.a, ctx) * Laurent::monomial(c.inverse(), -e);
    }
    case Op::Pow: {
      const Laurent base = eval(*n.a, ctx);
      if (n.exponent >= 0) return base.pow(n.exponent);
      if (base.terms().size() != 1) throw ParseError(n.offset, "nonnegative exponent for a non-monomial base");
      const auto& [e, c] = *base.terms().begin();
      return Laurent::monomial(c.inverse(), -e).pow(-n.exponent);
    }
    case Op::Compose: {
      const Laurent outer = eval(*n.a, Context{true, false});
      auto p = outer.as_polynomial();
      if (!p) throw ParseError(n.a->offset, "polynomial in z on the left of '@'");
      return compose_outer(*p, eval(*n.b, ctx));
    }
  }
  throw std::logic_error("unreachable");
}

inline ComplexPoly require_polynomial(const Laurent& l) {
  auto p = l.as_polynomial();
  if (!p) throw DomainError("expected a polynomial in z, got negative powers");
  return *p;
}

}  // namespace detail

inline Laurent parse_laurent(std::string_view text) {
  auto n = detail::Parser(text).parse();
  return detail::eval(*n, {true, true});
}

inline ComplexPoly parse_complex_poly(std::string_view text) {
  auto n = detail::Parser(text).parse();
  return detail::require_polynomial(detail::eval(*n, {true, false}));
}

inline RealPoly parse_real_poly(std::string_view text) {
  auto p = as_real(parse_complex_poly(text));
  if (!p) throw DomainError("expected real coefficients");
  return *p;
}

inline TrigPoly parse_trig(std::string_view text) {
  auto n = detail::Parser(text).parse();
  return phi_inverse(detail::eval(*n, {false, true}));
}

/// "P @ w" split into its outer polynomial and trigonometric inner.
inline std::pair<RealPoly, TrigPoly> parse_composition(std::string_view text) {
  auto n = detail::Parser(text).parse();
  if (n->op != detail::Node::Op::Compose) throw ParseError(0, "an expression of the form P @ w");
  auto p = as_real(detail::require_polynomial(detail::eval(*n->a, {true, false})));
  if (!p) throw DomainError("outer polynomial must have real coefficients");
  return {*p, phi_inverse(detail::eval(*n->b, {false, true}))};
}

/// Angle q*pi, e.g. "pi/4", "-pi/6", "0".
inline Rotation parse_angle(std::string_view text) {
  auto n = detail::Parser(text).parse();
  const detail::Linear l = detail::linear(*n);
  if (sgn(l.t) != 0 || sgn(l.c) != 0) throw ParseError(0, "angle of the form q*pi");
  return detail::rotation_of(l.pi, 0);
}

namespace detail {

template <class K>
std::string coefficient_times(const K& c, const std::string& mono) {
  if (mono.empty()) return to_string(c);
  if (c == K(1)) return mono;
  if (c == K(-1)) return "-" + mono;
  if (term_count(c) > 1) return "(" + to_string(c) + ")*" + mono;
  return to_string(c) + "*" + mono;
}

inline void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term[0] == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

inline std::string zpow_text(int e, const char* var) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace detail

template <class K>
std::string to_text(const Polynomial<K>& p, const char* var = "z") {
  std::string out;
  for (int e = p.degree(); e >= 0; --e) {
    if (!p[e].is_zero()) detail::append_term(out, detail::coefficient_times(p[e], detail::zpow_text(e, var)));
  }
  return out.empty() ? "0" : out;
}

inline std::string to_text(const Laurent& l) {
  std::string out;
  for (auto it = l.terms().rbegin(); it != l.terms().rend(); ++it) {
    detail::append_term(out, detail::coefficient_times(it->second, detail::zpow_text(it->first, "z")));
  }
  return out.empty() ? "0" : out;
}

inline std::string to_text(const TrigPoly& p) {
  std::string out;
  const auto& h = p.harmonics();
  if (!h.empty() && !h[0].cos.is_zero()) out = to_string(h[0].cos);
  for (std::size_t k = 1; k < h.size(); ++k) {
    const std::string arg = k == 1 ? "t" : std::to_string(k) + "*t";
    if (!h[k].cos.is_zero()) detail::append_term(out, detail::coefficient_times(h[k].cos, "cos(" + arg + ")"));
    if (!h[k].sin.is_zero()) detail::append_term(out, detail::coefficient_times(h[k].sin, "sin(" + arg + ")"));
  }
  return out.empty() ? "0" : out;
}

/// b as a multiple of pi when it is one of pi/12, else "(cos b, sin b)".
inline std::string to_text(const Rotation& b) {
  if (auto j = root_of_unity_index(b.unit())) {
    if (*j == 0) return "0";
    Rational q(*j, 12);
    q.canonicalize();
    if (q > 1) q -= 2;
    std::string out = q < 0 ? "-" : "";
    const Rational a = abs(q);
    if (a.get_num() != 1) out += a.get_num().get_str() + "*";
    out += "pi";
    if (a.get_den() != 1) out += "/" + a.get_den().get_str();
    return out;
  }
  return "(" + to_string(b.cos()) + ", " + to_string(b.sin()) + ")";
}

template <class K>
std::string to_text(const AffineMap<K>& m) {
  return to_text(m.as_polynomial());
}

inline std::string to_text(const OuterRational& r) {
  const std::string den = r.pole_order == 1 ? "(1 + x^2)" : "(1 + x^2)^" + std::to_string(r.pole_order);
  return "(" + to_text(r.numerator, "x") + ")/" + den;
}

inline std::string to_text(const TanInner& t) {
  return t.d == 1 ? "tan(t/2)" : "tan(" + std::to_string(t.d) + "*t/2)";
}

}  // namespace trigdecomp
