#include "psurf/curve.hpp"

#include <algorithm>

namespace psurf {

Curve::Curve(int genus) : genus_(genus) {
  if (genus < 0) throw InadmissibleInvariant("curve genus must be non-negative; got " + std::to_string(genus));
}

CurveClass CurveClass::of_degree(int degree) { return CurveClass(degree, {}); }

CurveClass CurveClass::trivial() { return CurveClass(0, {TagKind::Trivial, 0}); }

CurveClass CurveClass::canonical(const Curve& c, int multiple) {
  // K_C is trivial on an elliptic base, so every multiple collapses.
  if (multiple == 0 || c.genus() == 1) return trivial();
  return CurveClass(multiple * c.canonical_degree(), {TagKind::Canonical, multiple});
}

CurveClass CurveClass::torsion(int order) {
  if (order < 1) throw InadmissibleInvariant("torsion order must be positive; got " + std::to_string(order));
  if (order == 1) return trivial();
  return CurveClass(0, {TagKind::Torsion, order});
}

CurveClass CurveClass::point_sum(int multiplicity) {
  if (multiplicity < 0)
    throw InadmissibleInvariant("point multiplicity must be non-negative; got " + std::to_string(multiplicity));
  if (multiplicity == 0) return trivial();
  return CurveClass(multiplicity, {TagKind::PointSum, multiplicity});
}

CurveClass CurveClass::from_parts(int degree, ClassTag tag, std::optional<bool> user_effective) {
  switch (tag.kind) {
    case TagKind::Unspecified:
      break;
    case TagKind::Trivial:
      if (degree != 0) throw InadmissibleInvariant("the trivial class has degree 0");
      break;
    case TagKind::Canonical:
      if (tag.value == 0) throw InadmissibleInvariant("a canonical tag needs a nonzero multiple");
      if (degree % tag.value != 0 || (degree / tag.value) % 2 != 0)
        throw InadmissibleInvariant("a canonical multiple has degree k(2g - 2)");
      break;
    case TagKind::Torsion:
      if (degree != 0 || tag.value < 2)
        throw InadmissibleInvariant("a torsion class has degree 0 and order >= 2");
      break;
    case TagKind::PointSum:
      if (tag.value < 1 || degree != tag.value)
        throw InadmissibleInvariant("a point sum has degree equal to its multiplicity >= 1");
      break;
  }
  CurveClass result(degree, tag);
  result.user_effective_ = user_effective;
  return result;
}

CurveClass CurveClass::with_effective(bool effective) const {
  CurveClass copy = *this;
  copy.user_effective_ = effective;
  return copy;
}

CurveClass CurveClass::without_effective() const {
  CurveClass copy = *this;
  copy.user_effective_.reset();
  return copy;
}

std::string CurveClass::describe() const {
  switch (tag_.kind) {
    case TagKind::Trivial: return "the trivial class";
    case TagKind::Canonical:
      return std::to_string(tag_.value) + "*K_C (degree " + std::to_string(degree_) + ")";
    case TagKind::Torsion:
      return "degree-0 torsion class of order " + std::to_string(tag_.value);
    case TagKind::PointSum:
      return std::to_string(tag_.value) + "*P for a point P";
    case TagKind::Unspecified: break;
  }
  return "class of degree " + std::to_string(degree_);
}

CurveClass add(const CurveClass& x, const CurveClass& y) {
  const int degree = x.degree_ + y.degree_;
  ClassTag tag;
  if (x.tag_.kind == TagKind::Trivial) {
    tag = y.tag_;
  } else if (y.tag_.kind == TagKind::Trivial) {
    tag = x.tag_;
  } else if (x.tag_.kind == TagKind::Canonical && y.tag_.kind == TagKind::Canonical) {
    const int multiple = x.tag_.value + y.tag_.value;
    tag = multiple == 0 ? ClassTag{TagKind::Trivial, 0} : ClassTag{TagKind::Canonical, multiple};
  }
  // Distinct torsion classes and distinct marked points are not tracked, so
  // every other combination coarsens to Unspecified.
  return CurveClass(degree, tag);
}

CurveClass dual(const CurveClass& x) {
  switch (x.tag_.kind) {
    case TagKind::Trivial: return CurveClass::trivial();
    case TagKind::Canonical: return CurveClass(-x.degree_, {TagKind::Canonical, -x.tag_.value});
    case TagKind::Torsion: return CurveClass(0, x.tag_);
    case TagKind::PointSum:
    case TagKind::Unspecified: break;
  }
  return CurveClass(-x.degree_, {});
}

DimAnswer DimAnswer::exact(int n) {
  if (n < 0) throw InadmissibleInvariant("section-space dimensions are non-negative");
  return DimAnswer(Kind::Exact, n, n);
}

DimAnswer DimAnswer::interval(int lo, int hi) {
  if (lo < 0 || lo > hi) throw InadmissibleInvariant("dimension interval needs 0 <= lo <= hi");
  if (lo == hi) return exact(lo);
  return DimAnswer(Kind::Interval, lo, hi);
}

DimAnswer DimAnswer::conditional_on(CurveClass cls, int upper_if_effective) {
  if (upper_if_effective < 1)
    throw InadmissibleInvariant("a conditional answer needs a positive upper bound");
  DimAnswer result(Kind::Conditional, 0, upper_if_effective);
  result.condition_ = std::move(cls);
  return result;
}

int DimAnswer::value() const {
  if (kind_ != Kind::Exact) throw ClassificationError("dimension answer is not exact");
  return lo_;
}

const CurveClass& DimAnswer::condition_class() const {
  if (!condition_) throw ClassificationError("dimension answer carries no pending class");
  return *condition_;
}

std::string describe(const DimAnswer& dim) {
  switch (dim.kind()) {
    case DimAnswer::Kind::Exact: return std::to_string(dim.value());
    case DimAnswer::Kind::Interval:
      return std::to_string(dim.lower()) + ".." + std::to_string(dim.upper());
    case DimAnswer::Kind::Conditional:
      return "0.." + std::to_string(dim.upper());
  }
  return "";
}

namespace {

struct Bounds {
  int lo;
  int hi;
};

// Exact h^0 bounds from degree and tag alone, before any external answer.
Bounds h0_bounds(const Curve& c, const CurveClass& x) {
  const int g = c.genus();
  const int d = x.degree();
  if (d < 0) return {0, 0};
  if (d > c.canonical_degree()) {
    const int n = d + 1 - g;  // Riemann-Roch with h^1 = 0 by Serre duality
    return {n, n};
  }
  // Special range 0 <= d <= 2g - 2, so g >= 1 here.
  switch (x.tag().kind) {
    case TagKind::Trivial: return {1, 1};
    case TagKind::Torsion: return {0, 0};
    case TagKind::Canonical: return {g, g};  // only k = 1 lands in this range
    case TagKind::PointSum: {
      // Effective by construction, so at least one section.
      const int lo = std::max(1, d + 1 - g);
      return {lo, d / 2 + 1};
    }
    case TagKind::Unspecified: break;
  }
  return {std::max(0, d + 1 - g), d / 2 + 1};
}

Bounds fold_user_effective(Bounds b, std::optional<bool> user_effective) {
  if (!user_effective) return b;
  if (*user_effective) {
    if (b.hi == 0)
      throw EffectivenessConflict("class declared effective but h^0 is forced to be 0");
    b.lo = std::max(b.lo, 1);
  } else {
    if (b.lo >= 1)
      throw EffectivenessConflict("class declared non-effective but h^0 is forced positive");
    b = {0, 0};
  }
  return b;
}

}  // namespace

DimAnswer h0(const Curve& c, const CurveClass& x) {
  const Bounds b = fold_user_effective(h0_bounds(c, x), x.user_effective());
  return DimAnswer::interval(b.lo, b.hi);
}

DimAnswer h1(const Curve& c, const CurveClass& x) {
  return h0(c, add(dual(x), CurveClass::canonical(c, 1)));
}

TriState is_effective(const Curve& c, const CurveClass& x) {
  const Bounds b = h0_bounds(c, x);
  const TriState forced =
      b.lo >= 1 ? TriState::Yes : (b.hi == 0 ? TriState::No : TriState::Unknown);
  if (x.user_effective()) {
    const bool claim = *x.user_effective();
    if (forced == TriState::Yes && !claim)
      throw EffectivenessConflict("class declared non-effective but h^0 is forced positive");
    if (forced == TriState::No && claim)
      throw EffectivenessConflict("class declared effective but h^0 is forced to be 0");
    if (forced == TriState::Unknown) return claim ? TriState::Yes : TriState::No;
  }
  return forced;
}

}  // namespace psurf
