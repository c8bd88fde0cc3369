#pragma once

#include "psurf/curve.hpp"
#include "psurf/rules.hpp"

namespace psurf {

// Normalized rank-2 bundle V on the base curve, described by how it splits
// and by the class of its determinant det V = L (of degree -e). The two
// genus-1 forms are the indecomposable bundles on an elliptic base; every
// other indecomposable bundle lives on a base of genus >= 2.
class BundleSpec {
 public:
  enum class Kind {
    Decomposable,                 // V = O + L
    IndecomposableGenus1E0,       // nonsplit extension of O by O (e = 0)
    IndecomposableGenus1EMinus1,  // nonsplit extension of O(P) by O (e = -1)
    IndecomposableGeneral,        // indecomposable, base genus >= 2
  };

  static BundleSpec decomposable(CurveClass det);
  static BundleSpec indecomposable_genus1_e0();
  static BundleSpec indecomposable_genus1_e_minus1();
  static BundleSpec indecomposable(CurveClass det);

  Kind kind() const { return kind_; }
  const CurveClass& det() const { return det_; }
  int e() const { return -det_.degree(); }

  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;

 private:
  BundleSpec(Kind kind, CurveClass det) : kind_(kind), det_(std::move(det)) {}

  Kind kind_;
  CurveClass det_;
};

// Throws when (genus, e, kind) violates the bundle-existence bounds:
// decomposable normalized bundles have e >= 0; indecomposable ones satisfy
// -g <= e <= 2g - 2, exist only in the two listed forms when g = 1, and never
// on a rational base (rank-2 bundles on P^1 always split).
void check_bundle_admissible(int genus, const BundleSpec& bundle);

// h^0(X, -K_X) for the minimal rational ruled surface with invariant e:
// 9 when e is 0 or 2, e + 6 when e >= 3. The e = 1 surface is not minimal
// and is rejected here (the classifier treats it as a blow-up of the plane).
int anticanonical_h0_rational(int e, RuleTrace* trace = nullptr);

// h^0(X, -K_X) for a minimal ruled surface over an elliptic base:
//   e = -1 indecomposable        -> 0
//   e =  0 indecomposable        -> 1
//   e =  0 split, det trivial    -> 3
//   e =  0 split, det nontrivial -> 1
//   e >= 1 split                 -> e + 1
// The e = 0 split case needs the triviality of det V determined, through its
// tag or a supplied effectiveness answer (a degree-0 class is effective
// exactly when it is trivial).
int anticanonical_h0_elliptic(const BundleSpec& bundle, RuleTrace* trace = nullptr);

// h^0(X, -K_X) for base genus >= 2, reduced to the curve-level count
// h^0(C, dual(det V) - K_C) with two boundary rules: g = 2, e = -2 is settled
// by the ample-intersection obstruction, and e = 2g - 2 with an indecomposable
// bundle forces det V = K_C by Serre duality, hence an exact answer 1. When
// the effectiveness of -K_C - det V is the only open question, the answer is
// conditional on that class; an effectiveness answer supplied with det V is
// interpreted as answering exactly that question.
DimAnswer anticanonical_h0_high_genus(int genus, const BundleSpec& bundle,
                                      RuleTrace* trace = nullptr);

// Independent section count for split bundles on a base of genus 0 or 1,
// expanding the pushforward of -K_X fibrewise:
//   h^0(dual(L) - K_C) + h^0(-K_C) + h^0(L - K_C).
// Every term is degree- or tag-forced in the supported range, so the result
// is exact and shares no code path with the case analysis above.
int anticanonical_h0_pushforward(int genus, const CurveClass& det);

}  // namespace psurf
