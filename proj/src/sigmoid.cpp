#include "clift/sigmoid.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace clift {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kTwoOverPi = 2.0 / kPi;

// Constrained lifts fail loudly this close to the boundary instead of
// returning huge or infinite values.
constexpr double kBoundaryTol = 1e-15;

// Largest double below 1; unlift results are clamped to +-this so that
// recovered states stay strictly inside the box even when the exact value
// rounds to 1.
constexpr double kOneMinusUlp = 0x1.fffffffffffffp-1;

void check_open_interval(double x, SigmoidId id) {
  if (id == SigmoidId::kIdentity) return;
  if (!(std::abs(x) < 1.0 - kBoundaryTol)) {
    throw DomainError("lift: |x| = " + std::to_string(std::abs(x)) +
                      " is at or beyond 1 - 1e-15");
  }
}

// log(cosh(z)) without overflowing cosh.
double log_cosh(double z) {
  const double a = std::abs(z);
  return a + std::log1p(std::exp(-2.0 * a)) - 0.6931471805599453094;
}

// sech(w) and sech^2(w), stable for large |w| (plain 1 - tanh^2 hits zero
// already near |w| ~ 19).
double sech(double w) {
  const double e = std::exp(-std::abs(w));
  return 2.0 * e / (1.0 + e * e);
}
double sech2(double w) {
  const double e = std::exp(-2.0 * std::abs(w));
  return 4.0 * e / ((1.0 + e) * (1.0 + e));
}

// Inverse error function on [0, 1): bisection bracket, Newton polish.
double erf_inv(double x) {
  if (x == 0.0) return 0.0;
  double lo = 0.0, hi = 6.0;  // erf(6) rounds to 1, so the bracket always holds
  for (int i = 0; i < 40; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (std::erf(mid) < x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double y = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double deriv = (2.0 / kSqrtPi) * std::exp(-y * y);
    if (deriv <= 0.0) break;
    const double step = (std::erf(y) - x) / deriv;
    y -= step;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(y))) break;
  }
  return y;
}

// int_0^w r*sech(r) dr. The integrand decays like 2r*exp(-r), so the tail
// beyond 40 is below 2e-16 and the domain can be capped there.
double sech_moment(double w) {
  const double upper = std::min(w, 40.0);
  if (upper <= 0.0) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(
      [](double r) { return r * sech(r); }, 0.0, upper, 15, 1e-12);
}

}  // namespace

SigmoidFamily SigmoidFamily::from_id(SigmoidId id) { return SigmoidFamily(id); }

SigmoidFamily SigmoidFamily::from_name(std::string_view name) {
  if (name == "tan") return SigmoidFamily(SigmoidId::kTan);
  if (name == "atanh") return SigmoidFamily(SigmoidId::kAtanh);
  if (name == "rational_abs") return SigmoidFamily(SigmoidId::kRationalAbs);
  if (name == "rational_sqrt") return SigmoidFamily(SigmoidId::kRationalSqrt);
  if (name == "erf") return SigmoidFamily(SigmoidId::kErf);
  if (name == "asinh_tan") return SigmoidFamily(SigmoidId::kAsinhTan);
  if (name == "identity") return SigmoidFamily(SigmoidId::kIdentity);
  throw ConfigError("unknown sigmoid family id: \"" + std::string(name) + "\"");
}

std::string_view SigmoidFamily::name() const {
  switch (id_) {
    case SigmoidId::kTan: return "tan";
    case SigmoidId::kAtanh: return "atanh";
    case SigmoidId::kRationalAbs: return "rational_abs";
    case SigmoidId::kRationalSqrt: return "rational_sqrt";
    case SigmoidId::kErf: return "erf";
    case SigmoidId::kAsinhTan: return "asinh_tan";
    case SigmoidId::kIdentity: return "identity";
  }
  return "?";
}

std::string_view SigmoidFamily::display_name() const {
  switch (id_) {
    case SigmoidId::kTan: return "Tan";
    case SigmoidId::kAtanh: return "Atanh";
    case SigmoidId::kRationalAbs: return "RationalAbs";
    case SigmoidId::kRationalSqrt: return "RationalSqrt";
    case SigmoidId::kErf: return "Erf";
    case SigmoidId::kAsinhTan: return "AsinhTan";
    case SigmoidId::kIdentity: return "Identity";
  }
  return "?";
}

double SigmoidFamily::lift(double x) const {
  check_open_interval(x, id_);
  const double a = std::abs(x);
  double v = 0.0;
  switch (id_) {
    case SigmoidId::kTan:
      v = std::tan(kHalfPi * a);
      break;
    case SigmoidId::kAtanh:
      v = std::atanh(a);
      break;
    case SigmoidId::kRationalAbs:
      v = a / (1.0 - a);
      break;
    case SigmoidId::kRationalSqrt:
      // 1 - a^2 as (1-a)(1+a) keeps precision near the boundary.
      v = a / std::sqrt((1.0 - a) * (1.0 + a));
      break;
    case SigmoidId::kErf:
      v = (2.0 / kSqrtPi) * erf_inv(a);
      break;
    case SigmoidId::kAsinhTan:
      v = kTwoOverPi * std::asinh(std::tan(kHalfPi * a));
      break;
    case SigmoidId::kIdentity:
      v = a;
      break;
  }
  return std::copysign(v, x);
}

double SigmoidFamily::unlift(double z) const {
  const double a = std::abs(z);
  double v = 0.0;
  switch (id_) {
    case SigmoidId::kTan:
      v = kTwoOverPi * std::atan(a);
      break;
    case SigmoidId::kAtanh:
      v = std::tanh(a);
      break;
    case SigmoidId::kRationalAbs:
      v = a / (1.0 + a);
      break;
    case SigmoidId::kRationalSqrt:
      v = a / std::hypot(1.0, a);
      break;
    case SigmoidId::kErf:
      v = std::erf(kSqrtPi * a / 2.0);
      break;
    case SigmoidId::kAsinhTan:
      v = kTwoOverPi * std::atan(std::sinh(kHalfPi * a));
      break;
    case SigmoidId::kIdentity:
      return std::copysign(a, z);
  }
  // The exact value is strictly below 1; keep the rounded one off the
  // boundary too, so recovered states never land exactly on a bound.
  return std::copysign(std::min(v, kOneMinusUlp), z);
}

double SigmoidFamily::lift_deriv(double x) const {
  check_open_interval(x, id_);
  const double a = std::abs(x);
  switch (id_) {
    case SigmoidId::kTan: {
      const double c = std::cos(kHalfPi * a);
      return kHalfPi / (c * c);
    }
    case SigmoidId::kAtanh:
      return 1.0 / ((1.0 - a) * (1.0 + a));
    case SigmoidId::kRationalAbs: {
      const double d = 1.0 - a;
      return 1.0 / (d * d);
    }
    case SigmoidId::kRationalSqrt: {
      const double d = (1.0 - a) * (1.0 + a);
      return 1.0 / (d * std::sqrt(d));
    }
    case SigmoidId::kErf: {
      const double y = erf_inv(a);
      return std::exp(y * y);
    }
    case SigmoidId::kAsinhTan:
      return 1.0 / std::cos(kHalfPi * a);
    case SigmoidId::kIdentity:
      return 1.0;
  }
  return 0.0;
}

double SigmoidFamily::unlift_deriv(double z) const {
  const double a = std::abs(z);
  switch (id_) {
    case SigmoidId::kTan:
      return kTwoOverPi / (1.0 + a * a);
    case SigmoidId::kAtanh:
      return sech2(a);
    case SigmoidId::kRationalAbs: {
      const double d = 1.0 + a;
      return 1.0 / (d * d);
    }
    case SigmoidId::kRationalSqrt: {
      const double h = std::hypot(1.0, a);
      return 1.0 / (h * h * h);
    }
    case SigmoidId::kErf:
      return std::exp(-kPi * a * a / 4.0);
    case SigmoidId::kAsinhTan:
      return sech(kHalfPi * a);
    case SigmoidId::kIdentity:
      return 1.0;
  }
  return 0.0;
}

double SigmoidFamily::integral(double zeta) const {
  const double a = std::abs(zeta);  // even function
  switch (id_) {
    case SigmoidId::kTan:
      return kTwoOverPi * (a * std::atan(a) - 0.5 * std::log1p(a * a));
    case SigmoidId::kAtanh:
      return log_cosh(a);
    case SigmoidId::kRationalAbs:
      return a - std::log1p(a);
    case SigmoidId::kRationalSqrt:
      // sqrt(1+a^2) - 1 without cancellation for small a.
      return a * a / (std::hypot(1.0, a) + 1.0);
    case SigmoidId::kErf:
      return a * std::erf(kSqrtPi * a / 2.0) + kTwoOverPi * std::expm1(-kPi * a * a / 4.0);
    case SigmoidId::kAsinhTan:
      return kTwoOverPi * a * std::atan(std::sinh(kHalfPi * a)) -
             kTwoOverPi * kTwoOverPi * sech_moment(kHalfPi * a);
    case SigmoidId::kIdentity:
      return 0.5 * a * a;
  }
  return 0.0;
}

std::vector<FamilyDescriptor> list_families() {
  return {
      {"tan", "Tan", "tan(pi*x/2)", "(2/pi)*atan(z)",
       "(2/pi)*(z*atan(z) - log(1+z^2)/2)", ""},
      {"atanh", "Atanh", "atanh(x)", "tanh(z)", "log(cosh(z))", ""},
      {"rational_abs", "RationalAbs", "x/(1-|x|)", "z/(1+|z|)",
       "|z| - log(1+|z|)", ""},
      {"rational_sqrt", "RationalSqrt", "x/sqrt(1-x^2)", "z/sqrt(1+z^2)",
       "sqrt(1+z^2) - 1", ""},
      {"erf", "Erf", "(2/sqrt(pi))*erfinv(x)", "erf(sqrt(pi)*z/2)",
       "z*erf(sqrt(pi)*z/2) + (2/pi)*(exp(-pi*z^2/4) - 1)", ""},
      {"asinh_tan", "AsinhTan", "(2/pi)*asinh(tan(pi*x/2))",
       "(2/pi)*atan(sinh(pi*z/2))",
       "(2/pi)*z*atan(sinh(pi*z/2)) - (2/pi)^2 * integral_0^{pi*z/2} r*sech(r) dr",
       ""},
      {"identity", "Identity", "x", "z", "z^2/2",
       "unconstrained components only"},
  };
}

}  // namespace clift
