// cos²θ = 1 − sin²θ and cos 6θ, taken apart.

#include <iostream>

#include "trigdecomp/trigdecomp.hpp"

using namespace trigdecomp;

int main() {
  const TrigPoly c = parse_trig("cos(t)");
  const TrigPoly s = parse_trig("sin(t)");
  const RealPoly sq = parse_real_poly("z^2");
  const RealPoly one_minus = parse_real_poly("1 - z^2");

  std::cout << "z^2 @ cos(t)     = " << to_text(trig_compose(sq, c)) << "\n";
  std::cout << "(1 - z^2) @ sin(t) = " << to_text(trig_compose(one_minus, s)) << "\n";
  std::cout << "phi(cos(t)^2)    = " << to_text(phi(trig_compose(sq, c))) << "\n";

  const SolutionWitness w = classify_solution(sq, c, one_minus, s);
  std::cout << "solution type    = " << to_string(w.label) << " (shift k=" << w.k << ", b=" << to_text(w.b)
            << ")\n\n";

  const TrigPoly c6 = parse_trig("cos(6*t)");
  std::cout << "decompositions of cos(6*t):\n";
  for (const Decomposition& d : trig_decompose(c6)) {
    if (d.kind != DecompositionKind::TrigPolyInner) continue;
    std::cout << "  " << to_text(std::get<RealPoly>(d.outer)) << "  @  " << to_text(std::get<TrigPoly>(d.inner))
              << "\n";
  }

  // p = T2(cos t) and q = T3(cos t) share the inner cos t, so every moment vanishes.
  const auto report = trig_moments_vanish(trig_compose(cheb_T(2), c), trig_compose(cheb_T(3), c), 8);
  std::cout << "\nmoments of cos(2t) d cos(3t), i <= 8: " << (report.all_vanish ? "all zero" : "not all zero")
            << "\n";
  const auto r2 = trig_moments_vanish(c, s, 3);
  std::cout << "first nonzero moment of cos(t) d sin(t): i = " << *r2.first_nonzero << ", value "
            << to_string(r2.moments[static_cast<std::size_t>(*r2.first_nonzero)]) << "\n";
}
