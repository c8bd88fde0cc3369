#include "psurf/classify.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace psurf {

SurfaceSpec SurfaceSpec::k3() { return SurfaceSpec(Kind::K3); }

SurfaceSpec SurfaceSpec::abelian() { return SurfaceSpec(Kind::Abelian); }

SurfaceSpec SurfaceSpec::projective_plane() { return SurfaceSpec(Kind::ProjectivePlane); }

SurfaceSpec SurfaceSpec::minimal_ruled_rational(int e) {
  SurfaceSpec s(Kind::MinimalRuledRational);
  s.e_ = e;
  return s;
}

SurfaceSpec SurfaceSpec::minimal_ruled_over_curve(int genus, BundleSpec bundle) {
  SurfaceSpec s(Kind::MinimalRuledOverCurve);
  s.genus_ = genus;
  s.e_ = bundle.e();
  s.bundle_ = std::move(bundle);
  return s;
}

SurfaceSpec SurfaceSpec::blow_up(SurfaceSpec base, std::vector<BlowUpPoint> points) {
  SurfaceSpec s(Kind::BlowUp);
  s.base_ = std::make_shared<const SurfaceSpec>(std::move(base));
  s.points_ = std::move(points);
  return s;
}

SurfaceSpec SurfaceSpec::other_kodaira(int kodaira_dimension) {
  SurfaceSpec s(Kind::OtherKodaira);
  s.kod_ = kodaira_dimension;
  return s;
}

int SurfaceSpec::e() const {
  if (kind_ != Kind::MinimalRuledRational && kind_ != Kind::MinimalRuledOverCurve)
    throw ClassificationError("surface kind carries no invariant e");
  return e_;
}

int SurfaceSpec::genus() const {
  if (kind_ != Kind::MinimalRuledOverCurve)
    throw ClassificationError("surface kind carries no base genus");
  return genus_;
}

const BundleSpec& SurfaceSpec::bundle() const {
  if (!bundle_) throw ClassificationError("surface kind carries no bundle");
  return *bundle_;
}

const SurfaceSpec& SurfaceSpec::base() const {
  if (!base_) throw ClassificationError("surface kind is not a blow-up");
  return *base_;
}

std::span<const BlowUpPoint> SurfaceSpec::points() const { return points_; }

int SurfaceSpec::kodaira_dimension() const {
  if (kind_ != Kind::OtherKodaira) throw ClassificationError("surface kind carries no Kodaira marker");
  return kod_;
}

bool operator==(const SurfaceSpec& a, const SurfaceSpec& b) {
  if (a.kind_ != b.kind_ || a.e_ != b.e_ || a.genus_ != b.genus_ || a.kod_ != b.kod_ ||
      a.bundle_ != b.bundle_ || a.points_ != b.points_)
    return false;
  if (!a.base_ != !b.base_) return false;
  return !a.base_ || *a.base_ == *b.base_;
}

std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Poisson: return "poisson";
    case VerdictKind::NotPoisson: return "not-poisson";
    case VerdictKind::Conditional: return "conditional";
  }
  return "";
}

VerdictKind verdict_for(const DimAnswer& dim) {
  if (dim.kind() == DimAnswer::Kind::Conditional) return VerdictKind::Conditional;
  if (dim.lower() >= 1) return VerdictKind::Poisson;
  if (dim.upper() == 0) return VerdictKind::NotPoisson;
  return VerdictKind::Conditional;
}

DimAnswer blowup_propagate(const DimAnswer& base_dim, std::span<const BlowUpPoint> points) {
  if (base_dim.kind() == DimAnswer::Kind::Conditional)
    throw ClassificationError("resolve a conditional answer to bounds before blow-up propagation");
  int lo = base_dim.lower();
  int hi = base_dim.upper();
  for (const BlowUpPoint& p : points) {
    switch (p.base_point) {
      case TriState::Yes:
        break;
      case TriState::No:
        lo = std::max(0, lo - 1);
        hi = std::max(0, hi - 1);
        break;
      case TriState::Unknown:
        lo = std::max(0, lo - 1);
        break;
    }
  }
  return DimAnswer::interval(lo, hi);
}

namespace {

SurfaceSpec validate_impl(const SurfaceSpec& spec, RuleTrace* trace) {
  switch (spec.kind()) {
    case SurfaceSpec::Kind::K3:
    case SurfaceSpec::Kind::Abelian:
    case SurfaceSpec::Kind::ProjectivePlane:
      return spec;
    case SurfaceSpec::Kind::OtherKodaira:
      if (spec.kodaira_dimension() < 0 || spec.kodaira_dimension() > 2)
        throw InadmissibleInvariant("the Kodaira marker covers dimensions 0, 1 and 2; got " +
                                    std::to_string(spec.kodaira_dimension()));
      return spec;
    case SurfaceSpec::Kind::MinimalRuledRational:
      if (spec.e() < 0)
        throw InadmissibleInvariant("rational ruled surfaces have e >= 0; got e = " +
                                    std::to_string(spec.e()));
      if (spec.e() == 1) {
        cite(trace, "plane-blowup-normalization",
             "the e = 1 rational surface is the plane blown up at one point; the plane's "
             "anticanonical system has no base points");
        return SurfaceSpec::blow_up(SurfaceSpec::projective_plane(), {BlowUpPoint{TriState::No}});
      }
      return spec;
    case SurfaceSpec::Kind::MinimalRuledOverCurve:
      if (spec.genus() < 1)
        throw InadmissibleInvariant(
            "a geometrically ruled surface over a curve needs base genus >= 1; use the rational "
            "kind for genus 0");
      check_bundle_admissible(spec.genus(), spec.bundle());
      return spec;
    case SurfaceSpec::Kind::BlowUp: {
      SurfaceSpec base = validate_impl(spec.base(), trace);
      return SurfaceSpec::blow_up(std::move(base),
                                  std::vector<BlowUpPoint>(spec.points().begin(), spec.points().end()));
    }
  }
  throw ClassificationError("unsupported surface kind");
}

ClassificationReport finish(DimAnswer dim, std::optional<CurveClass> condition, RuleTrace rules) {
  const VerdictKind verdict = verdict_for(dim);
  if (verdict != VerdictKind::Conditional)
    condition.reset();
  else if (dim.kind() == DimAnswer::Kind::Conditional)
    condition = dim.condition_class();
  return {verdict, std::move(dim), std::move(condition), std::move(rules)};
}

ClassificationReport classify_validated(const SurfaceSpec& spec, RuleTrace rules) {
  switch (spec.kind()) {
    case SurfaceSpec::Kind::K3:
      cite(&rules, "trivial-canonical", "K3: the canonical bundle is trivial, so h^0(-K) = h^0(O) = 1");
      return finish(DimAnswer::exact(1), std::nullopt, std::move(rules));
    case SurfaceSpec::Kind::Abelian:
      cite(&rules, "trivial-canonical",
           "abelian surface: the canonical bundle is trivial, so h^0(-K) = h^0(O) = 1");
      return finish(DimAnswer::exact(1), std::nullopt, std::move(rules));
    case SurfaceSpec::Kind::OtherKodaira:
      cite(&rules, "kodaira-gate",
           "a surface carrying a nonzero anticanonical section has Kodaira dimension 0 (K3 or "
           "abelian) or is ruled; this one is neither");
      return finish(DimAnswer::exact(0), std::nullopt, std::move(rules));
    case SurfaceSpec::Kind::ProjectivePlane:
      cite(&rules, "plane-cubics", "h^0(P^2, O(3)) = 10, the space of plane cubics");
      return finish(DimAnswer::exact(10), std::nullopt, std::move(rules));
    case SurfaceSpec::Kind::MinimalRuledRational: {
      const int n = anticanonical_h0_rational(spec.e(), &rules);
      return finish(DimAnswer::exact(n), std::nullopt, std::move(rules));
    }
    case SurfaceSpec::Kind::MinimalRuledOverCurve: {
      if (spec.genus() == 1) {
        const int n = anticanonical_h0_elliptic(spec.bundle(), &rules);
        return finish(DimAnswer::exact(n), std::nullopt, std::move(rules));
      }
      DimAnswer dim = anticanonical_h0_high_genus(spec.genus(), spec.bundle(), &rules);
      return finish(std::move(dim), std::nullopt, std::move(rules));
    }
    case SurfaceSpec::Kind::BlowUp: {
      ClassificationReport base_report = classify_validated(spec.base(), std::move(rules));
      rules = std::move(base_report.rules);
      std::optional<CurveClass> condition = std::move(base_report.condition);
      DimAnswer dim = std::move(base_report.dim);
      if (dim.kind() == DimAnswer::Kind::Conditional)
        dim = DimAnswer::interval(0, dim.upper());
      for (const BlowUpPoint& p : spec.points()) {
        switch (p.base_point) {
          case TriState::Yes:
            cite(&rules, "blowup-base-point", "blowing up a base point of |-K| preserves h^0(-K)");
            break;
          case TriState::No:
            cite(&rules, "blowup-generic-point",
                 "blowing up outside the base locus of |-K| drops h^0(-K) by one (never below 0)");
            break;
          case TriState::Unknown:
            cite(&rules, "blowup-unknown-point", "blowing up a point drops h^0(-K) by at most one");
            break;
        }
      }
      dim = blowup_propagate(dim, spec.points());
      return finish(std::move(dim), std::move(condition), std::move(rules));
    }
  }
  throw ClassificationError("unsupported surface kind");
}

}  // namespace

SurfaceSpec validate(const SurfaceSpec& spec) { return validate_impl(spec, nullptr); }

ClassificationReport classify(const SurfaceSpec& spec) {
  RuleTrace rules;
  const SurfaceSpec normalized = validate_impl(spec, &rules);
  return classify_validated(normalized, std::move(rules));
}

}  // namespace psurf
