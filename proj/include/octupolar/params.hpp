#pragma once

#include <cmath>
#include <numbers>

#include "octupolar/tensor3.hpp"

namespace octupolar {

/// The irreducible three-parameter family: alpha3 is normalised to 1 and the
/// potential reads
///   Phi(x) = alpha2 x2^3 + x3^3 + 6 alpha0 x1 x2 x3 + 3 beta3 x1^2 x3
///            - 3 alpha2 x1^2 x2 - 3 (1 + beta3) x2^2 x3.
struct OctupolarParams {
  double alpha0 = 0.0;
  double beta3 = 0.0;
  double alpha2 = 0.0;
};

/// The seven free entries of a traceless tensor before any reduction.
struct GeneralParams {
  double alpha0 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
};

/// Polar coordinates on the (alpha0, beta3) disk centred at (0, -1/2).
struct PolarPoint {
  double rho = 0.0;
  double chi = 0.0;
};

/// Reduced tensor A(alpha0, beta3, alpha2). Traceless by construction.
inline SymTensor3 build_tensor(const OctupolarParams& p) {
  if (!(p.alpha2 >= 0.0)) throw ParameterError("alpha2 must be nonnegative");
  const double a0 = p.alpha0, b3 = p.beta3, a2 = p.alpha2;
  // 111, 112, 113, 122, 123, 133, 222, 223, 233, 333
  return SymTensor3({0.0, -a2, b3, 0.0, a0, 0.0, a2, -1.0 - b3, 0.0, 1.0});
}

/// General traceless tensor from its seven independent entries; the three
/// remaining entries follow from the slice-trace relations.
inline SymTensor3 build_general(const GeneralParams& g) {
  return SymTensor3({
      g.alpha1,              // a111
      -g.alpha2 - g.beta2,   // a112
      g.beta3,               // a113
      g.beta1,               // a122
      g.alpha0,              // a123
      -g.alpha1 - g.beta1,   // a133
      g.alpha2,              // a222
      -g.alpha3 - g.beta3,   // a223
      g.beta2,               // a233
      g.alpha3,              // a333
  });
}

/// Potential of the reduced tensor, written out term by term.
inline double potential(const OctupolarParams& p, const Vec3& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2];
  return p.alpha2 * x2 * x2 * x2 + x3 * x3 * x3 + 6.0 * p.alpha0 * x1 * x2 * x3 +
         3.0 * p.beta3 * x1 * x1 * x3 - 3.0 * p.alpha2 * x1 * x1 * x2 -
         3.0 * (1.0 + p.beta3) * x2 * x2 * x3;
}

struct Admissibility {
  bool inside;
  double margin;  ///< 3 - 4 alpha0^2 - 4 beta3^2 - 4 beta3
};

/// North pole is a (local) maximum iff margin >= 0, i.e. alpha0^2 + (beta3 + 1/2)^2 <= 1.
inline Admissibility admissible(double alpha0, double beta3) {
  const double margin = 3.0 - 4.0 * alpha0 * alpha0 - 4.0 * beta3 * beta3 - 4.0 * beta3;
  return {margin >= 0.0, margin};
}

/// alpha0^2 + beta3^2 + beta3; nonpositive on the base disk under the dome.
inline double base_disk_excess(double alpha0, double beta3) {
  return alpha0 * alpha0 + beta3 * beta3 + beta3;
}

inline PolarPoint make_polar(double rho, double chi) {
  if (!(rho >= 0.0 && rho <= 0.5)) throw ParameterError("rho must lie in [0, 1/2]");
  return {rho, chi};
}

struct DiskPoint {
  double alpha0;
  double beta3;
};

inline DiskPoint polar_to_params(const PolarPoint& pt) {
  return {pt.rho * std::cos(pt.chi), -0.5 + pt.rho * std::sin(pt.chi)};
}

/// Inverse of polar_to_params; chi in (-pi, pi], chi = 0 at the centre.
inline PolarPoint params_to_polar(double alpha0, double beta3) {
  const double dy = beta3 + 0.5;
  const double rho = std::hypot(alpha0, dy);
  double chi = rho > 0.0 ? std::atan2(dy, alpha0) : 0.0;
  if (chi <= -std::numbers::pi) chi += 2.0 * std::numbers::pi;
  return {rho, chi};
}

}  // namespace octupolar
