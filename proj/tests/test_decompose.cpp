#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"
#include "trigdecomp/chebyshev.hpp"
#include "trigdecomp/decompose.hpp"

using namespace trigdecomp;
using namespace trigdecomp::testing;

namespace {

RealPoly rp(std::initializer_list<int> c) {
  std::vector<RealSub> v;
  for (int x : c) v.push_back(RealSub(x));
  return RealPoly(std::move(v));
}
ComplexPoly cp(std::initializer_list<int> c) { return to_complex(rp(c)); }
Laurent U1() { return laurent_U(1); }

}  // namespace

TEST(PolyDecompose, Examples) {
  auto r = poly_decompose(rp({0, 0, 2, 0, 1}), 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, rp({0, 2, 1}));
  EXPECT_EQ(r->second, rp({0, 0, 1}));
  auto t = poly_decompose(cheb_T(6), 2);
  ASSERT_TRUE(t);
  EXPECT_EQ(compose(t->first, t->second), cheb_T(6));
  EXPECT_TRUE(equivalence_witness(cheb_T(3), cheb_T(2), t->first, t->second));
  EXPECT_FALSE(poly_decompose(rp({1, 1, 0, 0, 1}), 2));
  EXPECT_THROW(poly_decompose(rp({1, 1, 0, 0, 1}), 3), DomainError);
  EXPECT_THROW(poly_decompose(rp({1, 1, 0, 0, 1}), 4), DomainError);
}

TEST(LaurentDecompose, Type1Examples) {
  auto u = laurent_decompose_type1(laurent_U(2), 2);
  ASSERT_TRUE(u);
  EXPECT_EQ(u->second, Laurent::z(1) + Laurent::z(-1));
  EXPECT_EQ(compose_outer(u->first, u->second), laurent_U(2));
  EXPECT_TRUE(equivalence_witness(to_complex(cheb_T(2)), U1(), u->first, u->second));
  auto v = laurent_decompose_type1(Laurent::z(2) + Laurent::z(-2), 2);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->first, cp({-2, 0, 1}));
  EXPECT_EQ(v->second, Laurent::z(1) + Laurent::z(-1));
  EXPECT_THROW(laurent_decompose_type1(Laurent::z(2) + Laurent::z(1) + Laurent::z(-1), 2), DomainError);
  // Both bottom coefficients are genuine and inequivalent.
  const auto all = laurent_decompose_type1_all(laurent_U(2), 2);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_FALSE(equivalence_witness(all[0].first, all[0].second, all[1].first, all[1].second));
}

TEST(LaurentDecompose, Type2Examples) {
  EXPECT_EQ(laurent_decompose_type2(Laurent::z(2) + Laurent::z(-2), 2), Laurent::z(1) + Laurent::z(-1));
  EXPECT_FALSE(laurent_decompose_type2(Laurent::z(1) + Laurent::z(-1), 2));
  EXPECT_EQ(laurent_decompose_type2(laurent_U(6), 3), laurent_U(2));
}

TEST(LaurentDecompose, Enumerate) {
  const auto e = enumerate_decompositions(laurent_U(6));
  std::set<int> t1, t2;
  for (const auto& d : e) {
    if (d.kind == DecompositionKind::PolyLaurent) t1.insert(d.outer_degree());
    if (d.kind == DecompositionKind::LaurentPower) t2.insert(std::get<Laurent>(d.inner).max_exponent());
  }
  EXPECT_EQ(t1, (std::set<int>{2, 3, 6}));
  EXPECT_EQ(t2, (std::set<int>{2, 3, 6}));
  for (std::size_t k = 1; k < e.size(); ++k) EXPECT_LE(e[k - 1].outer_degree(), e[k].outer_degree());
  EXPECT_TRUE(enumerate_decompositions(Laurent::z(1) + Laurent::z(-1)).empty());
  const auto z6 = enumerate_decompositions(Laurent::z(6));
  const auto p6 = enumerate_poly_decompositions(rp({0, 0, 0, 0, 0, 0, 1}));
  ASSERT_EQ(z6.size(), 2u);
  ASSERT_EQ(p6.size(), 2u);
  std::set<int> zo, po;
  for (const auto& d : z6) zo.insert(d.outer_degree());
  for (const auto& d : p6) po.insert(d.outer_degree());
  EXPECT_EQ(zo, po);
  EXPECT_THROW(enumerate_decompositions(Laurent::z(40) + Laurent::z(-40)), DegreeCapExceeded);
}

TEST(LaurentDecompose, EnumeratePairwiseInequivalent) {
  for (const Laurent& l : {laurent_U(6), laurent_U(12), laurent_U(4) + laurent_V(2),
                           compose_outer(cheb_T(3), Laurent::z(2) + Laurent::z(-2))}) {
    const auto e = enumerate_decompositions(l);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (e[i].kind != DecompositionKind::PolyLaurent || e[j].kind != e[i].kind) continue;
        EXPECT_FALSE(equivalence_witness(std::get<ComplexPoly>(e[i].outer), std::get<Laurent>(e[i].inner),
                                         std::get<ComplexPoly>(e[j].outer), std::get<Laurent>(e[j].inner)));
      }
    }
  }
}

TEST(TrigDecompose, Examples) {
  bool found = false;
  for (const auto& d : trig_decompose(TrigPoly::cos_k(2))) {
    if (d.kind != DecompositionKind::TrigPolyInner) continue;
    found |= std::get<RealPoly>(d.outer) == cheb_T(2) && std::get<TrigPoly>(d.inner) == TrigPoly::cos_k(1);
  }
  EXPECT_TRUE(found);
  const auto s = trig_decompose(TrigPoly::sin_k(1));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(std::get<OuterRational>(s[0].outer), (OuterRational{rp({0, 2}), 1}));
  EXPECT_EQ(std::get<TanInner>(s[0].inner).d, 1);
  const auto c = trig_decompose(TrigPoly::cos_k(1));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].kind, DecompositionKind::TrigTanInner);
  EXPECT_TRUE(trig_decompose(TrigPoly(3)).empty());
}

TEST(TrigDecompose, Cos6) {
  const TrigPoly p = TrigPoly::cos_k(6);
  const auto e = trig_decompose(p);
  bool t2 = false, t3 = false;
  for (const auto& d : e) {
    if (d.kind == DecompositionKind::TrigPolyInner) {
      EXPECT_EQ(recompose_trig(d), p);
      const auto& w = std::get<TrigPoly>(d.inner);
      t2 |= std::get<RealPoly>(d.outer) == cheb_T(2) && w == TrigPoly::cos_k(3);
      t3 |= std::get<RealPoly>(d.outer) == cheb_T(3) && w == TrigPoly::cos_k(2);
    } else {
      const auto& o = std::get<OuterRational>(d.outer);
      const int dd = std::get<TanInner>(d.inner).d;
      for (int j = 0; j < 8; ++j) {
        const HP th = HP(j) / HP(5) + HP(1) / HP(9);
        const HP x = boost::multiprecision::tan(HP(dd) * th / HP(2));
        const HP v = eval_hp(o.numerator, x) / boost::multiprecision::pow(HP(1) + x * x, o.pole_order);
        EXPECT_LT(boost::multiprecision::abs(v - eval_hp(p, th)), HP("1e-35"));
      }
    }
  }
  EXPECT_TRUE(t2);
  EXPECT_TRUE(t3);
  EXPECT_EQ(std::get<OuterRational>(e.back().outer).numerator, psi(p).first);
}

TEST(Realify, Examples) {
  const Laurent l1 = -imag_unit() * U1();
  const auto r = realify(cp({0, 0, -1}), l1);
  EXPECT_EQ(r.v, (ComplexAffine{imag_unit(), Tower(0)}));
  EXPECT_EQ(r.outer, rp({0, 0, 1}));
  EXPECT_EQ(r.inner, U1());
  const auto id = realify(to_complex(cheb_T(3)), U1());
  EXPECT_TRUE(id.v.is_identity());
  const Laurent s = imag_unit() * Laurent::z(1) - imag_unit() * Laurent::z(-1);
  const auto id2 = realify(cp({0, 1}), s);
  EXPECT_TRUE(id2.v.is_identity());
  EXPECT_EQ(id2.outer, rp({0, 1}));
  EXPECT_THROW(realify(cp({0, 1}), Laurent::z(1)), DomainError);
}

TEST(Realify, RandomTwists) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 60; ++it) {
    const RealPoly ar = random_real_poly_exact(rng, 1 + static_cast<int>(rng() % 3));
    const Laurent lr = phi(random_trig_exact(rng, 1 + static_cast<int>(rng() % 3)));
    Tower alpha;
    while (alpha.is_zero()) alpha = random_tower(rng);
    const ComplexAffine v{alpha, random_tower(rng)};
    const ComplexPoly a = compose(to_complex(ar), v);
    const Laurent l1 = v.inverse().apply(lr);
    const auto r = realify(a, l1);
    EXPECT_TRUE(r.inner.is_self_reciprocal());
    EXPECT_EQ(compose_outer(r.outer, r.inner), compose_outer(a, l1));
  }
}

TEST(Realify, UnimodularBranch) {
  for (int j = 0; j < 24; ++j) {
    const Tower c = root_of_unity_24(j);
    const Laurent l1 = Laurent::monomial(c, 2) + Laurent::monomial(Tower(1) / c, -2);
    const ComplexPoly a = cp({1, 0, 3});
    ASSERT_TRUE(compose_outer(a, l1).is_self_reciprocal() || j % 12 != 0);
    if (!compose_outer(a, l1).is_self_reciprocal()) continue;
    const auto r = realify(a, l1);
    EXPECT_EQ(compose_outer(r.outer, r.inner), compose_outer(a, l1));
  }
}

TEST(DescendReal, Examples) {
  const RealPoly p = rp({0, 0, 2, 0, 1});
  const auto d = descend_real(p, cp({0, 0, 1}));
  EXPECT_EQ(d.outer, rp({0, 2, 1}));
  EXPECT_EQ(d.inner, rp({0, 0, 1}));
  EXPECT_THROW(descend_real(p, ComplexPoly({Tower(0), Tower(0), imag_unit()})), DomainError);
  const auto t = descend_real(cheb_T(6), to_complex(cheb_T(3)));
  EXPECT_EQ(t.outer, cheb_T(2));
  // Real leading coefficient but an imaginary constant term.
  const auto s = descend_real(p, ComplexPoly({imag_unit(), Tower(0), Tower(1)}));
  EXPECT_EQ(s.outer, rp({0, 2, 1}));
  EXPECT_EQ(s.shift, imag_unit());
}

TEST(AlignEqualDegree, Examples) {
  const auto a = align_equal_degree(cp({0, 0, 1}), U1(), cp({0, 0, 1}), -U1());
  ASSERT_TRUE(std::holds_alternative<ComplexAffine>(a));
  EXPECT_EQ(std::get<ComplexAffine>(a), (ComplexAffine{Tower(-1), Tower(0)}));
  const auto id = align_equal_degree(cp({0, 0, 1}), U1(), cp({0, 0, 1}), U1());
  EXPECT_TRUE(std::get<ComplexAffine>(id).is_identity());
  const Laurent l1 = Laurent::z(1) + Laurent::z(-1), l2 = Laurent::z(1) - Laurent::z(-1);
  const auto nf = align_equal_degree(cp({-2, 0, 1}), l1, cp({2, 0, 1}), l2);
  ASSERT_TRUE(std::holds_alternative<NormalForm>(nf));
  const auto& n = std::get<NormalForm>(nf);
  EXPECT_EQ(n.r, 1);
  EXPECT_EQ(n.a, Tower(1));
  EXPECT_EQ(n.nu, imag_unit());
  EXPECT_EQ(n.w2.apply(l2), l1.substitute(imag_unit(), 1));
}

TEST(EquivalenceWitness, Examples) {
  const RealPoly p = rp({1, -1, 3});
  const TrigPoly w = TrigPoly::cos_k(2) + TrigPoly::sin_k(1);
  const RealAffine mu{RealSub(2), RealSub(1)};
  const TrigPoly wt = (w - TrigPoly(1)) * TrigPoly(RealSub(Rational(1, 2)));
  EXPECT_EQ(equivalence_witness(p, w, compose(p, mu), wt), mu);
  EXPECT_FALSE(equivalence_witness(cheb_T(2), cheb_T(3), cheb_T(3), cheb_T(2)));
  EXPECT_TRUE(equivalence_witness(p, w, p, w)->is_identity());
}

TEST(PolyDecompose, RandomRoundTrip) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 60; ++it) {
    const RealPoly a = random_real_poly_exact(rng, 2 + static_cast<int>(rng() % 3));
    const RealPoly b = random_real_poly_exact(rng, 2 + static_cast<int>(rng() % 3));
    const auto r = poly_decompose(compose(a, b), b.degree());
    ASSERT_TRUE(r);
    EXPECT_TRUE(equivalence_witness(a, b, r->first, r->second));
  }
  for (int it = 0; it < 30; ++it) {
    const ComplexPoly a = random_complex_poly_exact(rng, 2 + static_cast<int>(rng() % 2));
    const ComplexPoly b = random_complex_poly_exact(rng, 2 + static_cast<int>(rng() % 2));
    const auto r = poly_decompose(compose(a, b), b.degree());
    ASSERT_TRUE(r);
    EXPECT_TRUE(equivalence_witness(a, b, r->first, r->second));
  }
}

TEST(LaurentDecompose, RandomRoundTrip) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 40; ++it) {
    const ComplexPoly a = random_complex_poly_exact(rng, 2 + static_cast<int>(rng() % 2));
    const Laurent l = random_laurent_exact(rng, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3));
    const auto all = laurent_decompose_type1_all(compose_outer(a, l), a.degree());
    ASSERT_FALSE(all.empty());
    bool eq = false;
    for (const auto& [aa, bb] : all) {
      EXPECT_EQ(compose_outer(aa, bb), compose_outer(a, l));
      eq |= equivalence_witness(a, l, aa, bb).has_value();
    }
    EXPECT_TRUE(eq);
  }
}
