#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clift/errors.hpp"

namespace clift {

enum class SigmoidId {
  kTan,           // lift tan(pi x / 2),        unlift (2/pi) atan(z)
  kAtanh,         // lift atanh(x),             unlift tanh(z)
  kRationalAbs,   // lift x / (1 - |x|),        unlift z / (1 + |z|)
  kRationalSqrt,  // lift x / sqrt(1 - x^2),    unlift z / sqrt(1 + z^2)
  kErf,           // lift (2/sqrt(pi)) erfinv(x), unlift erf(sqrt(pi) z / 2)
  kAsinhTan,      // lift (2/pi) asinh(tan(pi x / 2)), unlift (2/pi) atan(sinh(pi z / 2))
  kIdentity,      // lift x, unconstrained components only
};

/// One strictly increasing sigmoid bundle: the lifting map phi : (-1,1) -> R,
/// its inverse psi : R -> (-1,1), both derivatives, and the integral
/// function of psi from 0 (quadratic near the origin, slope-1 linear far
/// away). Instances are value types; all evaluations are pure and
/// thread-safe.
class SigmoidFamily {
 public:
  static SigmoidFamily from_id(SigmoidId id);

  /// Looks up a family by its scenario-file id ("tan", "atanh",
  /// "rational_abs", "rational_sqrt", "erf", "asinh_tan", "identity").
  /// Throws ConfigError on unknown names.
  static SigmoidFamily from_name(std::string_view name);

  SigmoidId id() const { return id_; }
  std::string_view name() const;          // scenario-file id
  std::string_view display_name() const;  // e.g. "Atanh"

  /// False only for the identity family, which maps R -> R and is meant for
  /// components the scenario declares unconstrained.
  bool constrained() const { return id_ != SigmoidId::kIdentity; }

  /// phi(x). Odd, strictly increasing, diverges as |x| -> 1.
  /// Throws DomainError for constrained families when |x| >= 1 - 1e-15
  /// (an explicit failure beats silently returning +-inf mid-simulation).
  double lift(double x) const;

  /// psi(z) = lift^{-1}(z); |psi(z)| < 1 for constrained families.
  double unlift(double z) const;

  /// phi'(x) > 0 on (-1,1). Same domain guard as lift().
  double lift_deriv(double x) const;

  /// psi'(z) > 0 on R. Satisfies lift_deriv(x) * unlift_deriv(lift(x)) = 1.
  double unlift_deriv(double z) const;

  /// Integral of psi from 0 to zeta: nonnegative, even, zero only at zero.
  double integral(double zeta) const;

  bool operator==(const SigmoidFamily& o) const { return id_ == o.id_; }

 private:
  explicit SigmoidFamily(SigmoidId id) : id_(id) {}
  SigmoidId id_;
};

struct FamilyDescriptor {
  std::string name;          // scenario-file id
  std::string display_name;
  std::string lift_formula;
  std::string unlift_formula;
  std::string integral_formula;
  std::string note;          // usage restrictions, empty if none
};

/// All seven families with human-readable formulas, in declaration order.
std::vector<FamilyDescriptor> list_families();

}  // namespace clift
