#pragma once

#include "psurf/tri_state.hpp"

namespace psurf {

// Numerical divisor lattice of a geometrically ruled surface pi: X -> C,
// generated by the normalized section class tau (tau^2 = -e) and a fibre f.
struct RuledNum {
  int genus;  // genus of the base curve
  int e;      // -deg V for the normalized rank-2 bundle V

  friend bool operator==(const RuledNum&, const RuledNum&) = default;
};

// Class a*tau + b*f.
struct NumClass {
  int a = 0;
  int b = 0;

  friend bool operator==(const NumClass&, const NumClass&) = default;
};

// Intersection form: tau^2 = -e, tau.f = 1, f^2 = 0.
int intersect(const RuledNum& s, NumClass d1, NumClass d2);

// -K_X = 2*tau + (e - 2g + 2)*f.
NumClass anticanonical_class(const RuledNum& s);

// a > 0 and b > a*e when e >= 0; a > 0 and 2b > a*e when e < 0.
bool is_ample(const RuledNum& s, NumClass d);

// Intersection-number test against a small fixed battery of ample classes.
// Only ever refutes: a nonzero effective class meets every ample class
// strictly positively, so a non-positive product forces No. Returns Unknown
// in every other case, including for the zero class.
TriState numerically_effective(const RuledNum& s, NumClass d);

}  // namespace psurf
