#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "octupolar/macaulay.hpp"
#include "octupolar/params.hpp"
#include "octupolar/poly.hpp"
#include "octupolar/tensor3.hpp"

namespace octupolar {

/// Res(Ax^2) of the reduced tensor, in closed form. Its sign agrees with the
/// Macaulay ratio built by `ax2_forms`.
inline double resultant_closed_form(const OctupolarParams& p) {
  const double a0 = p.alpha0, b3 = p.beta3, a2 = p.alpha2;
  const double a02 = a0 * a0, a04 = a02 * a02, a06 = a04 * a02, a08 = a04 * a04;
  const double a22 = a2 * a2, a24 = a22 * a22;
  const double b32 = b3 * b3, b33 = b32 * b3;
  const double core =
      48.0 * a08 * b3 + 4.0 * a06 * (a22 + b3 * (32.0 * b32 + 24.0 * b3 - 9.0)) +
      3.0 * a04 * (a22 * (52.0 * b32 + 28.0 * b3 - 1.0) + 4.0 * b32 * (8.0 * b33 + 8.0 * b32 - 9.0 * b3 - 9.0)) +
      6.0 * a02 *
          (a24 * (4.0 * b3 + 1.0) - a22 * b3 * (14.0 * b33 + 36.0 * b32 + 35.0 * b3 + 10.0) -
           2.0 * b33 * (b3 + 1.0) * (b3 + 1.0) * (8.0 * b3 + 9.0)) +
      (a22 - 4.0 * std::pow(b3 + 1.0, 3)) * std::pow(a22 - b32 * (2.0 * b3 + 3.0), 2);
  return 16.0 * a22 * core;
}

/// Leading coefficient c12 of the cofactor phi_A(lambda) / (lambda^2 - 1), in closed form.
inline double c12_closed_form(const OctupolarParams& p) {
  const double a0 = p.alpha0, b3 = p.beta3, a2 = p.alpha2;
  const double a02 = a0 * a0, a04 = a02 * a02, a06 = a04 * a02, a08 = a04 * a04, a010 = a08 * a02;
  const double a22 = a2 * a2, a24 = a22 * a22, a26 = a24 * a22, a28 = a24 * a24;
  const double b2 = b3 * b3, b3p = b2 * b3, b4 = b2 * b2, b6 = b4 * b2, b5 = b4 * b3;
  const double s = 2.0 * b3 + 1.0;
  return 82944.0 * a010 - 11520.0 * a08 * (a22 - 36.0 * b2 - 36.0 * b3 + 1.0) -
         320.0 * a06 *
             (2.0 * a22 * (72.0 * b2 - 1053.0 * b3 - 577.0) + 73.0 * a24 - 2592.0 * b4 - 5184.0 * b3p -
              2448.0 * b2 + 144.0 * b3 + 73.0) -
         240.0 * a04 *
             (a26 - a24 * (1583.0 * b2 + 1208.0 * b3 + 922.0) +
              a22 * (288.0 * b4 - 4424.0 * b3p - 7328.0 * b2 - 116.0 * b3 + 1203.0) -
              s * s * (864.0 * b4 + 1728.0 * b3p + 576.0 * b2 - 288.0 * b3 - 1.0)) +
         60.0 * a02 *
             (32.0 * a28 + a26 * (-8.0 * b2 + 1992.0 * b3 + 678.0) -
              a24 * (6168.0 * b4 + 13336.0 * b3p + 5042.0 * b2 - 4376.0 * b3 + 1083.0) -
              2.0 * a22 * (384.0 * b6 - 848.0 * b5 - 4080.0 * b4 - 80.0 * b3p + 4580.0 * b2 + 437.0 * b3 - 714.0) +
              8.0 * std::pow(s, 4) * (54.0 * b4 + 108.0 * b3p + 21.0 * b2 - 33.0 * b3 + 4.0)) +
         (a22 + (3.0 * b3 + 4.0) * (3.0 * b3 + 4.0)) *
             std::pow(16.0 * a24 + a22 * (-12.0 * b2 - 132.0 * b3 + 37.0) + 4.0 * s * s * s * (3.0 * b3 - 1.0), 2);
}

/// The three quadratics of Ax^2 = 0 for a general symmetric tensor, ordered so that
/// form i is paired with x_i: (Tx^2)_2, (Tx^2)_3, (Tx^2)_1. For the reduced tensor
/// these are F1, F2, F3 with F1 carrying -alpha2 x1^2 and F2 carrying x3^2.
inline std::vector<HomQuadratic> ax2_forms(const SymTensor3& t) {
  std::vector<HomQuadratic> forms;
  for (int row : {1, 2, 0}) {
    HomQuadratic f(3);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) f.add(j, k, t(row, j, k));
    forms.push_back(std::move(f));
  }
  return forms;
}

inline std::vector<HomQuadratic> ax2_forms(const OctupolarParams& p) { return ax2_forms(build_tensor(p)); }

/// Homogenised eigen-system in (x0, x1, x2, x3):
///   x1^2 + x2^2 + x3^2 - x0^2,  (Tx^2)_i - lambda x0 x_i for i = 2, 3, 1,
/// paired with x0, x1, x2, x3 respectively.
inline std::vector<HomQuadratic> eigen_forms(const SymTensor3& t, double lambda) {
  std::vector<HomQuadratic> forms;
  HomQuadratic sphere(4);
  sphere.add(0, 0, -1.0).add(1, 1, 1.0).add(2, 2, 1.0).add(3, 3, 1.0);
  forms.push_back(std::move(sphere));
  for (int row : {1, 2, 0}) {
    HomQuadratic f(4);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) f.add(j + 1, k + 1, t(row, j, k));
    f.add(0, row + 1, -lambda);
    forms.push_back(std::move(f));
  }
  return forms;
}

struct EcharConfig {
  int samples = 24;                  ///< Chebyshev nodes on [-half_width, half_width]
  double half_width = 2.0;
  double degeneracy_tol = 1e-12;     ///< relative |det D'| below which a sample is dropped
  double residual_tol = 1e-8;        ///< relative residual gate of the even fit
  int min_samples = 8;
};

/// Result of reconstructing the E-characteristic polynomial from determinant samples.
struct EcharFit {
  UnivariatePoly phi;        ///< degree 14, even; phi = (lambda^2 - 1) * cofactor
  UnivariatePoly cofactor;   ///< sum c_{2i} lambda^{2i}, constant term c0 = Res(Ax^2)^2
  UnivariatePoly raw;        ///< unconstrained degree-14 fit, before parity is imposed
  double odd_ratio = 0.0;    ///< max |odd coefficient of raw| / max |coefficient of raw|
  double division_remainder = 0.0;  ///< remainder of phi / (lambda^2 - 1), relative
  double residual = 0.0;     ///< relative residual of the even fit
  int valid_samples = 0;
  bool rotated = false;      ///< samples taken on a rotated copy of the tensor
};

namespace detail {

/// Fixed generic rotations used when the extraneous factor degenerates for the tensor as
/// given (e.g. alpha2 = 0). E-characteristic coefficients are orthonormal invariants.
inline Rotation3 echar_fallback_rotation(int which) {
  static constexpr std::array<std::array<double, 3>, 3> kAngles{{{0.7, 1.1, -0.4}, {-1.3, 0.5, 2.2}, {2.9, -0.8, 0.3}}};
  const auto& a = kAngles[which % 3];
  const Eigen::Matrix3d m = (Eigen::AngleAxisd(a[0], Eigen::Vector3d::UnitZ()) *
                             Eigen::AngleAxisd(a[1], Eigen::Vector3d::UnitY()) *
                             Eigen::AngleAxisd(a[2], Eigen::Vector3d::UnitZ()))
                                .toRotationMatrix();
  return Rotation3::from_matrix(m, 1e-12);
}

struct Samples {
  std::vector<double> lambda;
  std::vector<double> value;
};

inline Samples sample_echar(const SymTensor3& t, const EcharConfig& cfg) {
  Samples s;
  for (int k = 0; k < cfg.samples; ++k) {
    const double node =
        cfg.half_width * std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * cfg.samples));
    const MacaulayRatio r = macaulay_ratio(build_macaulay(eigen_forms(t, node)));
    if (r.degenerate(cfg.degeneracy_tol)) continue;
    s.lambda.push_back(node);
    // the Macaulay ratio is -(lambda^2 - 1) * sum c_{2i} lambda^{2i}
    s.value.push_back(-r.value());
  }
  return s;
}

/// Least squares in the basis {(lambda / half_width)^(step*k)}, returned in plain powers.
inline std::vector<double> fit_powers(const Samples& s, int nterms, int step, double half_width,
                                      double* rel_residual) {
  const int m = static_cast<int>(s.lambda.size());
  Eigen::MatrixXd a(m, nterms);
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    const double u = s.lambda[i] / half_width;
    double pw = 1.0;
    const double stepu = std::pow(u, step);
    for (int k = 0; k < nterms; ++k, pw *= stepu) a(i, k) = pw;
    b[i] = s.value[i];
  }
  const Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
  if (rel_residual) {
    const double bn = b.norm();
    *rel_residual = bn > 0.0 ? (a * x - b).norm() / bn : 0.0;
  }
  std::vector<double> out(static_cast<std::size_t>((nterms - 1) * step + 1), 0.0);
  for (int k = 0; k < nterms; ++k) out[static_cast<std::size_t>(k * step)] = x[k] / std::pow(half_width, k * step);
  return out;
}

}  // namespace detail

/// E-characteristic polynomial of a symmetric tensor, reconstructed by sampling the
/// 56x56 Macaulay ratio of the homogenised eigen-system at Chebyshev nodes and fitting
/// an even degree-14 polynomial. The sign is that of the factored form
/// (lambda^2 - 1) * sum c_{2i} lambda^{2i} with c0 = Res(Ax^2)^2 >= 0.
inline EcharFit echar_fit(const SymTensor3& t, const EcharConfig& cfg = {}) {
  detail::Samples s = detail::sample_echar(t, cfg);
  bool rotated = false;
  for (int which = 0; static_cast<int>(s.lambda.size()) < cfg.samples && which < 3; ++which) {
    detail::Samples alt = detail::sample_echar(rotate(t, detail::echar_fallback_rotation(which)), cfg);
    if (alt.lambda.size() > s.lambda.size()) {
      s = std::move(alt);
      rotated = true;
    }
  }
  if (static_cast<int>(s.lambda.size()) < cfg.min_samples) {
    throw NumericalFailure("too few non-degenerate samples for the E-characteristic fit");
  }

  EcharFit fit;
  fit.valid_samples = static_cast<int>(s.lambda.size());
  fit.rotated = rotated;

  double raw_residual = 0.0;
  fit.raw = UnivariatePoly(detail::fit_powers(s, 15, 1, cfg.half_width, &raw_residual));
  double odd = 0.0;
  for (std::size_t k = 1; k < fit.raw.coefficients().size(); k += 2) odd = std::max(odd, std::abs(fit.raw.coefficient(k)));
  const double scale = fit.raw.max_abs_coefficient();
  fit.odd_ratio = scale > 0.0 ? odd / scale : 0.0;

  fit.phi = UnivariatePoly(detail::fit_powers(s, 8, 2, cfg.half_width, &fit.residual));
  if (!(fit.residual <= cfg.residual_tol)) {
    throw NumericalFailure("E-characteristic fit residual above tolerance");
  }
  const DivisionResult div = divide(fit.phi, UnivariatePoly({-1.0, 0.0, 1.0}));
  fit.cofactor = div.quotient;
  const double phi_scale = fit.phi.max_abs_coefficient();
  fit.division_remainder = phi_scale > 0.0 ? div.remainder.max_abs_coefficient() / phi_scale : 0.0;
  return fit;
}

inline EcharFit echar_fit(const OctupolarParams& p, const EcharConfig& cfg = {}) {
  return echar_fit(build_tensor(p), cfg);
}

/// phi_A(lambda) of the reduced tensor, ascending coefficients in lambda (15 of them).
inline UnivariatePoly echar_poly(const OctupolarParams& p, const EcharConfig& cfg = {}) {
  return echar_fit(p, cfg).phi;
}

}  // namespace octupolar
