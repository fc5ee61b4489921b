#pragma once

// Parameter sweeps over the four real solution families and the expected
// classifier label for each point.

#include <numeric>
#include <string>
#include <vector>

#include "trigdecomp/ritt.hpp"

namespace sweeps {

using namespace trigdecomp;

struct Point {
  char family;
  FamilyParams params;
  std::string name;
};

inline RealPoly poly(std::initializer_list<long> c) {
  std::vector<RealSub> v;
  for (long x : c) v.push_back(RealSub(x));
  return RealPoly(std::move(v));
}

inline std::vector<Point> points() {
  std::vector<Point> out;
  const std::vector<RealPoly> rs{poly({1}),     poly({1, 1}),     poly({1, 0, 1}), poly({2, -1, 1}),
                                 poly({0, 1}),  poly({0, 0, 1}),  poly({-3, 4})};
  for (std::size_t ri = 0; ri < rs.size(); ++ri) {
    for (int n = 1; n <= 3; ++n) {
      for (int r = 0; r <= 2; ++r) {
        if (r == 0 && rs[ri].degree() == 0) continue;
        FamilyParams p;
        p.n = n;
        p.r = r;
        p.R = rs[ri];
        out.push_back({'a', p, "a R" + std::to_string(ri) + " n" + std::to_string(n) + " r" + std::to_string(r)});
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 5; ++m) {
      if (std::gcd(n, m) != 1) continue;
      FamilyParams p;
      p.n = n;
      p.m = m;
      out.push_back({'b', p, "b n" + std::to_string(n) + " m" + std::to_string(m)});
    }
  }
  const std::vector<RealPoly> ss{poly({1}),     poly({0, 1}),    poly({1, 1}),      poly({-1, 0, 2}),
                                 poly({1, 0, -4}), poly({0, 1, 0, 1}), poly({1, 2, 0, 1})};
  for (std::size_t si = 0; si < ss.size(); ++si) {
    for (int k = 1; k <= 2; ++k) {
      for (int bj : {0, 2, 3}) {
        FamilyParams p;
        p.S = ss[si];
        p.k = k;
        p.b = Rotation::from_twelfths(bj);
        out.push_back({'c', p,
                       "c S" + std::to_string(si) + " k" + std::to_string(k) + " b" + std::to_string(bj) + "pi/12"});
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      if (std::gcd(n, m) != 1) continue;
      for (int l : {2, 3}) {
        for (int s = 0; s < n * l; ++s) {
          if ((12 * (2 * s + 1)) % (n * l) != 0) continue;
          FamilyParams p;
          p.n = n;
          p.m = m;
          p.l = l;
          p.s = s;
          out.push_back({'d', p,
                         "d n" + std::to_string(n) + " m" + std::to_string(m) + " l" + std::to_string(l) +
                             " s" + std::to_string(s)});
        }
      }
    }
  }
  // outer U and shifted base inners on a few points
  const std::vector<RealPoly> us{poly({0, 1, 1}), poly({1, -2, 0, 1})};
  for (const auto& u : us) {
    for (char c : {'a', 'b', 'c', 'd'}) {
      FamilyParams p;
      p.U = u;
      p.b = Rotation::from_twelfths(2);
      if (c == 'a') {
        p.n = 2;
        p.r = 1;
        p.R = poly({1, 1});
      } else if (c == 'b') {
        p.n = 2;
        p.m = 3;
      } else if (c == 'c') {
        p.S = poly({1, 1});
        p.k = 1;
      } else {
        p.l = 3;
      }
      out.push_back({c, p, std::string(1, c) + " with U of degree " + std::to_string(u.degree())});
    }
  }
  return out;
}

/// Label the classifier must report. Solutions lying in two families get the
/// label of the first test that succeeds: common inner (b before a), then c
/// with nonconstant S, then d, then c with constant S.
inline char expected_label(const Point& pt) {
  const FamilyParams& p = pt.params;
  switch (pt.family) {
    case 'a': {
      const RealPoly y = RealPoly::monomial(RealSub(1), p.r) * p.R.inflate(p.n);
      const int deg = y.degree();
      if (p.n == 2 && p.r % 2 == 1 && deg >= 3) {
        const RealPoly t = cheb_T(deg);
        if (y == (y.leading() / t.leading()) * t) return 'b';
      }
      return 'a';
    }
    case 'b':
      return std::min(p.n, p.m) == 1 ? 'a' : 'b';
    case 'c':
      return p.S.degree() == 0 ? 'd' : 'c';
    case 'd':
      if ((2 * p.s + 1) % p.l == 0) return std::min(p.n, p.m) == 1 ? 'a' : 'b';
      if (p.l == 2 && std::min(p.n, p.m) == 1 && std::max(p.n, p.m) >= 2) return 'c';
      return 'd';
  }
  return '?';
}

}  // namespace sweeps
