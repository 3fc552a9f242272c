#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "octupolar/params.hpp"
#include "octupolar/spectra.hpp"
#include "octupolar/tensor3.hpp"

namespace octupolar {

struct NormalForm {
  Rotation3 q;                 ///< rotate(T, q) / scale == build_tensor(params)
  double scale = 0.0;          ///< max of Tx^3 on the unit sphere; 0 flags the zero tensor
  OctupolarParams params;
  bool degenerate_zero = false;
  bool boundary = false;       ///< north pole is only marginally admissible (margin ~ 0)
  double defect = 0.0;         ///< max entrywise |rotate(T,q)/scale - build_tensor(params)|
};

/// Rotates a traceless tensor into the reduced three-parameter family.
///
/// The global maximiser goes to the north pole (ties: lexicographically largest
/// vector), then an azimuthal turn zeroes Phi(1,0,0) while keeping Phi(0,1,0) >= 0
/// (smallest such nonnegative angle).
inline NormalForm normal_form(const SymTensor3& t, double tol, const SolverConfig& cfg = {}) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  NormalForm nf;
  if (t.max_abs() <= tol) {
    nf.degenerate_zero = true;
    return nf;
  }

  const std::vector<ZEigenpair> pairs = z_eigenpairs(t, cfg);
  const double top = pairs.front().lambda;
  Vec3 pole = pairs.front().x;
  for (const ZEigenpair& e : pairs) {
    if (top - e.lambda > 1e-9 * std::max(1.0, top)) break;
    if (std::lexicographical_compare(pole.begin(), pole.end(), e.x.begin(), e.x.end())) pole = e.x;
  }
  nf.scale = top;

  const Rotation3 r1 = rotation_to_north(pole);
  const SymTensor3 t1 = rotate(t, r1);
  // equatorial cubic Phi(cos th, sin th, 0) = A cos 3th + B sin 3th
  const double a = t1.a(1, 1, 1), b = -t1.a(2, 2, 2);
  const double delta = std::atan2(b, a);
  Rotation3 best;
  bool chosen = false;
  for (int k = -3; k <= 6 && !chosen; ++k) {
    const double th = (delta + std::numbers::pi / 2.0 + k * std::numbers::pi) / 3.0;
    if (th < -1e-15) continue;
    // rotating by -th about e3 moves the direction at angle th onto e1
    const Rotation3 rz = rotation_about_z(-th);
    const SymTensor3 cand = rotate(t1, rz);
    if (cand.a(2, 2, 2) >= -tol * nf.scale) {
      best = rz * r1;
      chosen = true;
    }
  }
  if (!chosen) throw NumericalFailure("no azimuthal rotation yields a nonnegative alpha2");
  nf.q = best;

  SymTensor3 red = rotate(t, nf.q);
  red *= 1.0 / nf.scale;
  nf.params = {red.a(1, 2, 3), red.a(1, 1, 3), std::max(0.0, red.a(2, 2, 2))};
  nf.boundary = std::abs(admissible(nf.params.alpha0, nf.params.beta3).margin) <= std::sqrt(tol);
  const SymTensor3 ref = build_tensor(nf.params);
  for (int s = 0; s < SymTensor3::kUnique; ++s)
    nf.defect = std::max(nf.defect, std::abs(red.unique()[s] - ref.unique()[s]));
  return nf;
}

}  // namespace octupolar
