#include "psurf/ruled_num.hpp"

namespace psurf {

int intersect(const RuledNum& s, NumClass d1, NumClass d2) {
  return -s.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
}

NumClass anticanonical_class(const RuledNum& s) { return {2, s.e - 2 * s.genus + 2}; }

bool is_ample(const RuledNum& s, NumClass d) {
  if (d.a <= 0) return false;
  return s.e >= 0 ? d.b > d.a * s.e : 2 * d.b > d.a * s.e;
}

TriState numerically_effective(const RuledNum& s, NumClass d) {
  if (d.a == 0 && d.b == 0) return TriState::Unknown;
  // tau + k*f with k just past the ampleness threshold. For e < 0 integer
  // division truncates toward zero, which is exactly ceil(e/2).
  const int k = s.e >= 0 ? s.e + 1 : s.e / 2 + 1;
  const NumClass battery[] = {{1, 0}, {0, 1}, {1, k}};
  for (const NumClass& test : battery) {
    if (!is_ample(s, test)) continue;
    if (intersect(s, d, test) <= 0) return TriState::No;
  }
  return TriState::Unknown;
}

}  // namespace psurf
