#include "psurf/anticanonical.hpp"

#include <cassert>
#include <string>

#include "psurf/ruled_num.hpp"

namespace psurf {

BundleSpec BundleSpec::decomposable(CurveClass det) {
  return BundleSpec(Kind::Decomposable, std::move(det));
}

BundleSpec BundleSpec::indecomposable_genus1_e0() {
  // det of the nonsplit extension of O by O is trivial.
  return BundleSpec(Kind::IndecomposableGenus1E0, CurveClass::trivial());
}

BundleSpec BundleSpec::indecomposable_genus1_e_minus1() {
  // det of the nonsplit extension of O(P) by O is O(P).
  return BundleSpec(Kind::IndecomposableGenus1EMinus1, CurveClass::point_sum(1));
}

BundleSpec BundleSpec::indecomposable(CurveClass det) {
  return BundleSpec(Kind::IndecomposableGeneral, std::move(det));
}

void check_bundle_admissible(int genus, const BundleSpec& bundle) {
  const int e = bundle.e();
  switch (bundle.kind()) {
    case BundleSpec::Kind::Decomposable:
      if (e < 0)
        throw InadmissibleInvariant("a normalized split bundle O + L has e = -deg L >= 0; got e = " +
                                    std::to_string(e));
      return;
    case BundleSpec::Kind::IndecomposableGenus1E0:
    case BundleSpec::Kind::IndecomposableGenus1EMinus1:
      if (genus != 1)
        throw InconsistentBundleKind("the genus-1 indecomposable forms need an elliptic base; got genus " +
                                     std::to_string(genus));
      return;
    case BundleSpec::Kind::IndecomposableGeneral: {
      if (genus == 0)
        throw InconsistentBundleKind("every rank-2 bundle on a rational base splits");
      if (genus == 1)
        throw InconsistentBundleKind(
            "indecomposable bundles on an elliptic base are the dedicated e = 0 and e = -1 forms");
      if (e < -genus)
        throw InadmissibleInvariant("indecomposable bundles satisfy -g <= e <= 2g-2; got e = " +
                                    std::to_string(e) + " < -g = " + std::to_string(-genus));
      if (e > 2 * genus - 2) {
        if (e < 3 * genus - 3)
          throw InconsistentBundleKind("a normalized bundle with 2g-2 < e (e = " + std::to_string(e) +
                                       ", g = " + std::to_string(genus) + ") splits; the kind is inconsistent");
        throw InadmissibleInvariant("indecomposable bundles satisfy -g <= e <= 2g-2; got e = " +
                                    std::to_string(e) + " > 2g-2 = " + std::to_string(2 * genus - 2));
      }
      return;
    }
  }
}

int anticanonical_h0_rational(int e, RuleTrace* trace) {
  if (e < 0)
    throw InadmissibleInvariant("rational ruled surfaces have e >= 0; got e = " + std::to_string(e));
  if (e == 1)
    throw InadmissibleInvariant("the e = 1 rational surface is the plane blown up at a point, not minimal");
  if (e == 0 || e == 2) {
    cite(trace, "rational-ruled-count", "h^0(-K) = 9 on the e = 0 and e = 2 rational ruled surfaces");
    return 9;
  }
  cite(trace, "rational-ruled-count", "h^0(-K) = e + 6 on rational ruled surfaces with e >= 3");
  return e + 6;
}

int anticanonical_h0_elliptic(const BundleSpec& bundle, RuleTrace* trace) {
  check_bundle_admissible(1, bundle);
  switch (bundle.kind()) {
    case BundleSpec::Kind::IndecomposableGenus1EMinus1:
      cite(trace, "elliptic-two-torsion",
           "S^2(V)(-P) splits into the three nontrivial 2-torsion bundles, none of which has sections");
      return 0;
    case BundleSpec::Kind::IndecomposableGenus1E0:
      cite(trace, "elliptic-indecomposable",
           "S^2(V) is indecomposable of degree 0, so h^0(-K) = h^0(S^2 V) = 1");
      return 1;
    case BundleSpec::Kind::IndecomposableGeneral:
      break;  // rejected by the admissibility check
    case BundleSpec::Kind::Decomposable: {
      if (bundle.e() >= 1) {
        cite(trace, "elliptic-split-positive",
             "pushing -K forward gives O + dual(L) + dual(L)^2, so h^0(-K) = e + 1");
        return bundle.e() + 1;
      }
      // e = 0: the answer depends on whether det V is trivial.
      const DimAnswer det_sections = h0(Curve(1), bundle.det());
      if (det_sections == DimAnswer::exact(1)) {
        cite(trace, "elliptic-split-trivial",
             "V = O + O: h^0(-K) = h^0(O_C) * h^0(O_P1(2)) = 3");
        return 3;
      }
      if (det_sections == DimAnswer::exact(0)) {
        cite(trace, "elliptic-split-nontrivial",
             "V = O + L with L nontrivial of degree 0: h^0(-K) = 1");
        return 1;
      }
      throw InadmissibleInvariant(
          "the e = 0 split case needs the determinant class determined: tag it trivial or "
          "torsion, or supply an effectiveness answer");
    }
  }
  throw InconsistentBundleKind("unsupported bundle kind on an elliptic base");
}

DimAnswer anticanonical_h0_high_genus(int genus, const BundleSpec& bundle, RuleTrace* trace) {
  if (genus < 2)
    throw InadmissibleInvariant("the high-genus rule needs base genus >= 2; got " + std::to_string(genus));
  check_bundle_admissible(genus, bundle);

  const Curve base(genus);
  const std::optional<bool> supplied = bundle.det().user_effective();

  if (genus == 2 && bundle.e() == -2) {
    // The curve-level reduction breaks down here; intersection numbers settle it.
    const RuledNum lattice{2, -2};
    const TriState refuted = numerically_effective(lattice, anticanonical_class(lattice));
    assert(refuted == TriState::No);
    (void)refuted;
    if (supplied && *supplied)
      throw EffectivenessConflict(
          "the section class is ample and meets -K in zero, so -K cannot be effective");
    cite(trace, "ample-intersection-obstruction",
         "tau is ample and -K.tau = 0, so -K has no sections");
    return DimAnswer::exact(0);
  }

  if (bundle.kind() == BundleSpec::Kind::IndecomposableGeneral && bundle.e() == 2 * genus - 2) {
    if (supplied && !*supplied)
      throw EffectivenessConflict(
          "a nonsplit bundle with e = 2g-2 forces -K_C - det V to be trivial, hence effective");
    cite(trace, "serre-duality-boundary",
         "nonsplit with e = 2g-2: h^1(dual(det V)) != 0, so Serre duality forces det V = K_C and "
         "h^0(-K) = h^0(O_C) = 1");
    return DimAnswer::exact(1);
  }

  cite(trace, "anticanonical-pushforward",
       "for base genus >= 2, h^0(X, -K) = h^0(C, dual(det V) - K_C)");
  CurveClass question = add(dual(bundle.det()), CurveClass::canonical(base, -1));
  if (supplied) {
    // The supplied answer addresses the only effectiveness question the
    // procedure ever asks at genus >= 2: is -K_C - det V effective?
    question = question.with_effective(*supplied);
    cite(trace, "user-effectiveness", "externally supplied effectiveness answer applied");
  }

  const DimAnswer sections = h0(base, question);
  const int degree = question.degree();
  if (sections.is_exact()) {
    if (degree < 0)
      cite(trace, "negative-degree-vanishing", "deg(dual(det V) - K_C) < 0 forces h^0 = 0");
    else if (degree > base.canonical_degree())
      cite(trace, "riemann-roch-exact", "h^0 = deg + 1 - g, with h^1 = 0 by Serre duality");
    else
      cite(trace, "class-data-forced", "the class data pin h^0 inside the special range");
    return sections;
  }
  if (sections.lower() >= 1) {
    cite(trace, "riemann-roch-clifford-interval",
         "h^0 boxed between the Riemann-Roch and Clifford bounds");
    return sections;
  }
  cite(trace, "effectiveness-question",
       "X is Poisson exactly when -K_C - det V is effective");
  return DimAnswer::conditional_on(question.without_effective(), sections.upper());
}

int anticanonical_h0_pushforward(int genus, const CurveClass& det) {
  if (genus != 0 && genus != 1)
    throw InadmissibleInvariant("the pushforward count is restricted to base genus 0 and 1");
  if (det.degree() > 0)
    throw InadmissibleInvariant("a normalized split bundle has deg(det V) = -e <= 0; got degree " +
                                std::to_string(det.degree()));
  const Curve base(genus);
  const CurveClass minus_canonical = CurveClass::canonical(base, -1);
  const CurveClass terms[] = {
      add(dual(det), minus_canonical),
      minus_canonical,
      add(det, minus_canonical),
  };
  int total = 0;
  for (const CurveClass& term : terms) {
    const DimAnswer sections = h0(base, term);
    if (!sections.is_exact())
      throw InadmissibleInvariant(
          "pushforward terms must be degree- or tag-forced; tag the determinant class");
    total += sections.value();
  }
  return total;
}

}  // namespace psurf
