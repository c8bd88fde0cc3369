#pragma once

#include <optional>
#include <string>

#include "psurf/errors.hpp"
#include "psurf/tri_state.hpp"

namespace psurf {

// Smooth projective curve, known to the library only through its genus.
class Curve {
 public:
  explicit Curve(int genus);

  int genus() const { return genus_; }
  int canonical_degree() const { return 2 * genus_ - 2; }

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  int genus_;
};

// Structural information a divisor class may carry beyond its degree.
enum class TagKind {
  Unspecified,  // degree only
  Trivial,      // the class of O_C
  Canonical,    // k * K_C, k != 0
  Torsion,      // nontrivial class of finite order m >= 2 (degree 0)
  PointSum,     // n * P for a marked point P, n >= 1
};

struct ClassTag {
  TagKind kind = TagKind::Unspecified;
  int value = 0;  // Canonical: k, Torsion: m, PointSum: n

  friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

// Divisor (line-bundle) class on a fixed curve: exact degree, an optional
// structural tag, and an optional externally supplied effectiveness answer.
// Immutable; the factories normalize tags that are forced to be trivial
// (canonical classes on an elliptic base, order-1 torsion, empty point sums).
class CurveClass {
 public:
  static CurveClass of_degree(int degree);
  static CurveClass trivial();
  static CurveClass canonical(const Curve& c, int multiple);
  static CurveClass torsion(int order);
  static CurveClass point_sum(int multiplicity);

  // Deserialization entry; rejects degree/tag combinations that can never occur.
  static CurveClass from_parts(int degree, ClassTag tag, std::optional<bool> user_effective);

  CurveClass with_effective(bool effective) const;
  CurveClass without_effective() const;

  int degree() const { return degree_; }
  const ClassTag& tag() const { return tag_; }
  std::optional<bool> user_effective() const { return user_effective_; }

  std::string describe() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

  friend CurveClass add(const CurveClass&, const CurveClass&);
  friend CurveClass dual(const CurveClass&);

 private:
  CurveClass(int degree, ClassTag tag) : degree_(degree), tag_(tag) {}

  int degree_ = 0;
  ClassTag tag_;
  std::optional<bool> user_effective_;
};

// Dimension of a section space: exact value, finite interval of integers, or
// an answer pending the effectiveness of a named curve class (which is 0 when
// the class is not effective and lies in [1, upper] when it is).
class DimAnswer {
 public:
  enum class Kind { Exact, Interval, Conditional };

  DimAnswer() : DimAnswer(Kind::Exact, 0, 0) {}

  static DimAnswer exact(int n);
  static DimAnswer interval(int lo, int hi);  // collapses to exact when lo == hi
  static DimAnswer conditional_on(CurveClass cls, int upper_if_effective);

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::Exact; }
  int value() const;  // Exact only

  // Bounds valid for every kind; a conditional answer has lower 0.
  int lower() const { return lo_; }
  int upper() const { return hi_; }

  const CurveClass& condition_class() const;  // Conditional only

  friend bool operator==(const DimAnswer&, const DimAnswer&) = default;

 private:
  DimAnswer(Kind kind, int lo, int hi) : kind_(kind), lo_(lo), hi_(hi) {}

  Kind kind_;
  int lo_;
  int hi_;
  std::optional<CurveClass> condition_;
};

std::string describe(const DimAnswer& dim);

// Class-group arithmetic. Degrees are exact; tags combine only where the
// result is determined (Trivial is the identity, canonical multiples add) and
// coarsen to Unspecified otherwise. Effectiveness answers do not survive
// arithmetic. Both operands must live on the same curve.
CurveClass add(const CurveClass& x, const CurveClass& y);

// Negation in the class group. Torsion classes keep their order; point sums
// lose their tag (a negative multiple of a point is tracked by degree only).
CurveClass dual(const CurveClass& x);

// h^0(C, x) with exact integer bounds:
//   degree < 0            -> 0
//   degree > 2g - 2       -> degree + 1 - g   (Riemann-Roch, h^1 = 0)
//   0 <= degree <= 2g - 2 -> forced by the tag where possible, otherwise the
//                            interval [max(0, degree + 1 - g), degree/2 + 1]
//                            (Riemann-Roch below, Clifford above).
// A user_effective answer narrows the result and raises EffectivenessConflict
// when it contradicts a forced value.
DimAnswer h0(const Curve& c, const CurveClass& x);

// h^1 via Serre duality: h^1(x) = h^0(K_C - x).
DimAnswer h1(const Curve& c, const CurveClass& x);

// Yes when h^0 is forced positive, No when forced zero, Unknown otherwise;
// user_effective settles Unknown only.
TriState is_effective(const Curve& c, const CurveClass& x);

}  // namespace psurf
