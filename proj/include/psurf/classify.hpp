#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "psurf/anticanonical.hpp"
#include "psurf/curve.hpp"
#include "psurf/rules.hpp"
#include "psurf/tri_state.hpp"

namespace psurf {

// One blown-up point, described only by whether it is a base point of the
// anticanonical system of the surface being blown up at that step.
struct BlowUpPoint {
  TriState base_point = TriState::Unknown;

  friend bool operator==(const BlowUpPoint&, const BlowUpPoint&) = default;
};

// Description of a projective surface as far as the decision procedure needs
// it. Blow-ups compose: the flags of each point refer to the surface after
// the previous blow-ups in list order. OtherKodaira marks any surface of
// Kodaira dimension 0, 1 or 2 that is neither K3 nor abelian.
class SurfaceSpec {
 public:
  enum class Kind {
    K3,
    Abelian,
    ProjectivePlane,
    MinimalRuledRational,
    MinimalRuledOverCurve,
    BlowUp,
    OtherKodaira,
  };

  static SurfaceSpec k3();
  static SurfaceSpec abelian();
  static SurfaceSpec projective_plane();
  static SurfaceSpec minimal_ruled_rational(int e);
  static SurfaceSpec minimal_ruled_over_curve(int genus, BundleSpec bundle);
  static SurfaceSpec blow_up(SurfaceSpec base, std::vector<BlowUpPoint> points);
  static SurfaceSpec other_kodaira(int kodaira_dimension);

  Kind kind() const { return kind_; }
  int e() const;                              // MinimalRuledRational
  int genus() const;                          // MinimalRuledOverCurve
  const BundleSpec& bundle() const;           // MinimalRuledOverCurve
  const SurfaceSpec& base() const;            // BlowUp
  std::span<const BlowUpPoint> points() const;  // BlowUp
  int kodaira_dimension() const;              // OtherKodaira

  friend bool operator==(const SurfaceSpec& a, const SurfaceSpec& b);

 private:
  explicit SurfaceSpec(Kind kind) : kind_(kind) {}

  Kind kind_;
  int e_ = 0;
  int genus_ = 0;
  int kod_ = 0;
  std::optional<BundleSpec> bundle_;
  std::shared_ptr<const SurfaceSpec> base_;
  std::vector<BlowUpPoint> points_;
};

enum class VerdictKind { Poisson, NotPoisson, Conditional };

std::string_view to_string(VerdictKind v);

// Verdict determined by the dimension answer alone: Poisson when the lower
// bound is positive, NotPoisson when the dimension is forced to 0,
// Conditional otherwise.
VerdictKind verdict_for(const DimAnswer& dim);

struct ClassificationReport {
  VerdictKind verdict = VerdictKind::NotPoisson;
  DimAnswer dim;
  // The pending curve-class question, when the conditional verdict has one
  // (uncertainty coming only from unknown blow-up flags carries no class).
  std::optional<CurveClass> condition;
  RuleTrace rules;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

// Checks the admissibility bounds and returns the normalized description
// (the e = 1 rational surface becomes the plane blown up at one point, which
// is never a base point of the plane's anticanonical system).
SurfaceSpec validate(const SurfaceSpec& spec);

// Full decision procedure. Throws the validation errors of validate().
ClassificationReport classify(const SurfaceSpec& spec);

// Dimension bookkeeping for blowing up: per point, an exact value n stays n at
// a base point, drops to max(0, n-1) at any other point, and becomes the
// interval [max(0, n-1), n] when the flag is unknown; intervals propagate
// endpoint-wise. Conditional answers must be resolved to bounds first.
DimAnswer blowup_propagate(const DimAnswer& base_dim, std::span<const BlowUpPoint> points);

}  // namespace psurf
