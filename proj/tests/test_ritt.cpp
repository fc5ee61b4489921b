#include <gtest/gtest.h>

#include <random>

#include "sweeps.hpp"
#include "test_support.hpp"
#include "trigdecomp/ritt.hpp"

using namespace trigdecomp;
using namespace trigdecomp::testing;

namespace {

RealPoly rp(std::initializer_list<int> c) {
  std::vector<RealSub> v;
  for (int x : c) v.push_back(RealSub(x));
  return RealPoly(std::move(v));
}
const TrigPoly kCos = TrigPoly::cos_k(1);
const TrigPoly kSin = TrigPoly::sin_k(1);

}  // namespace

TEST(Verify, Examples) {
  EXPECT_TRUE(verify_solution(rp({0, 0, 1}), kCos, rp({1, 0, -1}), kSin));
  EXPECT_FALSE(verify_solution(rp({0, 0, 1}), kCos, rp({0, 0, 1}), kSin));
}

TEST(GenFamily, SpecExamples) {
  FamilyParams c;
  auto fc = gen_family('c', c);
  EXPECT_EQ(fc.q.P1, rp({0, 0, 1}));
  EXPECT_EQ(fc.q.w1, kCos);
  EXPECT_EQ(fc.q.P2, rp({1, 0, -1}));
  EXPECT_EQ(fc.q.w2, kSin);

  FamilyParams a;
  a.n = 2;
  a.r = 1;
  a.R = rp({0, 1});
  auto fa = gen_family('a', a);
  EXPECT_EQ(fa.witness.P1t, rp({0, 0, 1}));
  EXPECT_EQ(fa.witness.W1, rp({0, 0, 0, 1}));
  EXPECT_EQ(compose(fa.witness.P1t, fa.witness.W1), RealPoly::monomial(RealSub(1), 6));
  EXPECT_EQ(compose(fa.witness.P2t, fa.witness.W2), RealPoly::monomial(RealSub(1), 6));

  FamilyParams b;
  b.n = 2;
  b.m = 3;
  auto fb = gen_family('b', b);
  EXPECT_EQ(trig_compose(fb.q.P1, fb.q.w1), TrigPoly::cos_k(6));

  FamilyParams d;
  d.n = 1;
  d.m = 1;
  d.l = 2;
  d.s = 0;
  auto fd = gen_family('d', d);
  EXPECT_EQ(fd.q.w1, -kSin);
  EXPECT_EQ(trig_compose(fd.q.P1, fd.q.w1), TrigPoly::cos_k(2));
  EXPECT_EQ(trig_compose(fd.q.P2, fd.q.w2), TrigPoly::cos_k(2));
}

TEST(GenFamily, Errors) {
  FamilyParams p;
  p.n = 2;
  p.m = 4;
  EXPECT_THROW(gen_family('b', p), DomainError);
  p.m = 3;
  p.l = 1;
  EXPECT_THROW(gen_family('d', p), DomainError);
  p.n = 1;
  p.m = 1;
  p.l = 5;
  p.s = 0;
  EXPECT_THROW(gen_family('d', p), DomainError);  // pi/5
  p.l = 2;
  p.s = 2;
  EXPECT_THROW(gen_family('d', p), DomainError);  // s >= nl
  FamilyParams c;
  c.S = RealPoly();
  EXPECT_THROW(gen_family('c', c), DomainError);
  EXPECT_THROW(gen_family('e', c), DomainError);
  FamilyParams a;
  a.r = 0;
  a.R = rp({3});
  EXPECT_THROW(gen_family('a', a), DomainError);
}

TEST(GenFamily, SweepSoundness) {
  for (const auto& pt : sweeps::points()) {
    auto f = gen_family(pt.family, pt.params);
    EXPECT_TRUE(verify_solution(f.q)) << pt.name;
    EXPECT_TRUE(check_witness(f.witness, f.q)) << pt.name;
  }
}

TEST(LaurentFamily, Examples) {
  LaurentFamilyParams p;
  auto f5 = gen_laurent_family(5, p);
  EXPECT_TRUE(verify_laurent_solution(f5.q));
  EXPECT_EQ(f5.q.P2, ComplexPoly({Tower(0), Tower(0), Tower(0), Tower(-4), Tower(3)}));

  auto f3 = gen_laurent_family(3, p);
  EXPECT_EQ(f3.q.W1, laurent_U(1));
  EXPECT_EQ(f3.q.W2, laurent_V(1));
  EXPECT_EQ(f3.q.W1 * f3.q.W1, Laurent(Tower(1)) - f3.q.W2 * f3.q.W2);

  auto f4 = gen_laurent_family(4, p);
  ASSERT_TRUE(f4.epsilon);
  EXPECT_EQ(*f4.epsilon, imag_unit());
  EXPECT_EQ(laurent_U(1).substitute(imag_unit(), 1), -laurent_V(1));
  EXPECT_EQ(f4.q.W1, -laurent_V(1));
  EXPECT_EQ(f4.q.P1, -to_complex(cheb_T(2)));
  EXPECT_TRUE(verify_laurent_solution(f4.q));
}

TEST(LaurentFamily, Sweep) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      if (std::gcd(n, m) != 1) continue;
      LaurentFamilyParams p;
      p.n = n;
      p.m = m;
      p.r = 1;
      p.R = ComplexPoly({Tower(1), imag_unit()});
      EXPECT_TRUE(verify_laurent_solution(gen_laurent_family(1, p).q));
      EXPECT_TRUE(verify_laurent_solution(gen_laurent_family(2, p).q));
      for (int l = 2; l <= 3; ++l) {
        p.l = l;
        bool representable = false;
        for (int j = 0; j < 24; ++j) representable |= (n * l * m * j) % 24 == 12;
        if (representable) {
          EXPECT_TRUE(verify_laurent_solution(gen_laurent_family(4, p).q)) << n << m << l;
        } else {
          EXPECT_THROW(gen_laurent_family(4, p), FieldExtensionError) << n << m << l;
        }
      }
    }
  }
  LaurentFamilyParams p;
  p.S = ComplexPoly({Tower(1), Tower(2), embed(sqrt2())});
  p.U = ComplexPoly({Tower(0), Tower(1), imag_unit()});
  p.W = Laurent::monomial(embed(sqrt3()), 2);
  EXPECT_TRUE(verify_laurent_solution(gen_laurent_family(3, p).q));
  EXPECT_TRUE(verify_laurent_solution(gen_laurent_family(5, p).q));
  LaurentFamilyParams bad;
  bad.n = 1;
  bad.m = 1;
  bad.l = 8;
  EXPECT_THROW(gen_laurent_family(4, bad), FieldExtensionError);
}

// The phase (2s+1)π/nl of case d corresponds to ε = e^{i(2s+1)π/(nlm)} in the
// Laurent case 4: φ(cos(mθ + φ0)) = U_m(εz).
TEST(LaurentFamily, EpsilonMatchesPhase) {
  int checked = 0;
  for (const auto& pt : sweeps::points()) {
    if (pt.family != 'd') continue;
    const auto& p = pt.params;
    const int nlm = p.n * p.l * p.m;
    if ((12 * (2 * p.s + 1)) % nlm != 0) continue;
    auto fd = gen_family('d', p);
    LaurentFamilyParams lp;
    lp.n = p.n;
    lp.m = p.m;
    lp.l = p.l;
    lp.epsilon_index = 12 * (2 * p.s + 1) / nlm;
    auto fl = gen_laurent_family(4, lp);
    EXPECT_EQ(fl.q.W1, phi(fd.witness.w1t)) << pt.name;
    EXPECT_EQ(fl.q.W2, phi(fd.witness.w2t)) << pt.name;
    EXPECT_EQ(fl.q.P1, to_complex(fd.witness.P1t));
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(Engstrom, Examples) {
  auto e1 = engstrom_reduce(rp({0, 0, 1}), rp({0, 0, 0, 1}), rp({0, 0, 1}), rp({0, 0, 0, 1}));
  EXPECT_EQ(e1.U, rp({0, 0, 1}));
  EXPECT_EQ(e1.V, rp({0, 0, 0, 1}));
  EXPECT_EQ(e1.At.degree(), 1);
  EXPECT_EQ(e1.Ct.degree(), 1);

  auto e2 = engstrom_reduce(cheb_T(2), cheb_T(3), cheb_T(3), cheb_T(2));
  EXPECT_EQ(e2.U.degree(), 1);
  EXPECT_EQ(e2.V.degree(), 1);

  auto e3 = engstrom_reduce(rp({0, 0, 1}), rp({0, 1, 0, 1}), rp({0, 1, 2, 1}), rp({0, 0, 1}));
  EXPECT_EQ(e3.U.degree(), 1);
  EXPECT_EQ(e3.V.degree(), 1);
  EXPECT_EQ(compose(e3.At, e3.Ct), compose(e3.Bt, e3.Dt));

  EXPECT_THROW(engstrom_reduce(rp({0, 0, 1}), rp({0, 1}), rp({0, 1}), rp({0, 0, 0, 1})), DomainError);
  EXPECT_THROW(engstrom_reduce(cheb_T(6), cheb_T(6), cheb_T(6), cheb_T(6)), DegreeCapExceeded);
}

TEST(Engstrom, RandomDegreeContract) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const RealPoly u = random_real_poly_exact(rng, 1 + t % 2);
    const RealPoly v = random_real_poly_exact(rng, 1 + (t / 2) % 2);
    const int n = 1 + t % 3, m = 1 + (t / 3) % 3;
    if (std::gcd(n, m) != 1) continue;
    const RealPoly a = compose(u, cheb_T(n)), b = compose(u, cheb_T(m));
    const RealPoly c = compose(cheb_T(m), v), d = compose(cheb_T(n), v);
    auto e = engstrom_reduce(a, c, b, d);
    EXPECT_EQ(e.U.degree() * e.At.degree(), a.degree());
    EXPECT_EQ(std::gcd(e.At.degree(), e.Bt.degree()), 1);
    EXPECT_EQ(e.V.degree(), std::gcd(c.degree(), d.degree()));
    EXPECT_EQ(compose(e.U, e.At), a);
    EXPECT_EQ(compose(e.U, e.Bt), b);
    EXPECT_EQ(compose(e.Ct, e.V), c);
    EXPECT_EQ(compose(e.Dt, e.V), d);
    EXPECT_EQ(compose(e.At, e.Ct), compose(e.Bt, e.Dt));
  }
}

TEST(Classify, SpecExamples) {
  FamilyParams c;
  c.S = rp({0, 1});
  auto fc = gen_family('c', c);
  auto wc = classify_solution(fc.q);
  EXPECT_EQ(wc.label, CaseLabel::C);
  EXPECT_EQ(wc.S.degree(), 1);
  EXPECT_TRUE(check_witness(wc, fc.q));

  auto wb = classify_solution(cheb_T(2), TrigPoly::cos_k(3), cheb_T(3), TrigPoly::cos_k(2));
  EXPECT_EQ(wb.label, CaseLabel::B);
  EXPECT_TRUE(detail::affine_relation(wb.w, kCos).has_value());

  FamilyParams d;
  d.l = 2;
  auto fd = gen_family('d', d);
  EXPECT_EQ(classify_solution(fd.q).label, CaseLabel::D);
}

TEST(Classify, Errors) {
  EXPECT_THROW(classify_solution(rp({0, 0, 1}), kCos, rp({0, 0, 1}), kSin), DomainError);
  EXPECT_THROW(classify_solution(rp({1}), kCos, rp({1}), kSin), DomainError);
  FamilyParams b;
  b.n = 5;
  b.m = 7;
  auto fb = gen_family('b', b);
  EXPECT_THROW(classify_solution(fb.q), DegreeCapExceeded);
}

TEST(Classify, SweepMatchesOracle) {
  for (const auto& pt : sweeps::points()) {
    auto f = gen_family(pt.family, pt.params);
    SolutionWitness w;
    ASSERT_NO_THROW(w = classify_solution(f.q)) << pt.name;
    EXPECT_EQ(std::string(to_string(w.label)), std::string(1, sweeps::expected_label(pt))) << pt.name;
    EXPECT_TRUE(check_witness(w, f.q)) << pt.name;
    if (w.label == CaseLabel::B || w.label == CaseLabel::D) EXPECT_EQ(std::gcd(w.n, w.m), 1) << pt.name;
  }
}

TEST(Classify, SporadicNeverMatchesRealInners) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    EXPECT_FALSE(detail::matches_sporadic(random_trig_exact(rng, 2)));
  }
  // The complex inner of the sporadic solution does match.
  EXPECT_TRUE(detail::matches_sporadic(gen_laurent_family(5, {}).q.W1));
}
