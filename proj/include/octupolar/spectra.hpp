#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "octupolar/params.hpp"
#include "octupolar/tensor3.hpp"

namespace octupolar {

struct SolverConfig {
  std::uint64_t seed = 20160901;
  int n_seeds = 2000;             ///< Fibonacci-lattice starting points
  int max_iter = 100;
  double step_tol = 1e-13;        ///< Newton stops once the step norm falls below this
  double residual_tol = 1e-10;    ///< accepted pairs satisfy |Ax^2 - lambda x| <= residual_tol
  double dedup_angle = 1e-6;      ///< radians
  double degeneracy_rel = 1e-7;   ///< |mu| <= degeneracy_rel * max(1, |lambda|) => Degenerate
};

enum class Kind { Maximum, Minimum, Saddle, Degenerate };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::Maximum: return "maximum";
    case Kind::Minimum: return "minimum";
    case Kind::Saddle: return "saddle";
    case Kind::Degenerate: return "degenerate";
  }
  return "unknown";
}

struct ZEigenpair {
  double lambda;
  Vec3 x;
  double mu2;  ///< larger nonzero projected-Hessian eigenvalue
  double mu3;  ///< smaller one
  Kind kind;
};

/// lambda (I + x x^T) - 2 Ax.
inline Mat3 projected_hessian(const SymTensor3& t, const Vec3& x, double lambda) {
  return lambda * (Mat3::Identity() + x * x.transpose()) - 2.0 * contract<1>(t, x);
}

/// Orthonormal basis (rows) of the tangent plane at the unit vector x.
inline Eigen::Matrix<double, 2, 3> tangent_basis(const Vec3& x) {
  const Vec3 seed = std::abs(x[0]) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 u = x.cross(seed).normalized();
  const Vec3 v = x.cross(u);
  Eigen::Matrix<double, 2, 3> b;
  b.row(0) = u.transpose();
  b.row(1) = v.transpose();
  return b;
}

/// The two eigenvalues of the projected Hessian on the tangent plane, larger first.
inline std::pair<double, double> tangent_eigenvalues(const SymTensor3& t, const Vec3& x, double lambda) {
  const auto b = tangent_basis(x);
  const Eigen::Matrix2d h = b * projected_hessian(t, x, lambda) * b.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h, Eigen::EigenvaluesOnly);
  return {es.eigenvalues()[1], es.eigenvalues()[0]};
}

inline Kind classify(double mu2, double mu3, double lambda, double degeneracy_rel) {
  const double tol = degeneracy_rel * std::max(1.0, std::abs(lambda));
  if (std::min(std::abs(mu2), std::abs(mu3)) <= tol) return Kind::Degenerate;
  if (mu2 > 0.0 && mu3 > 0.0) return Kind::Maximum;
  if (mu2 < 0.0 && mu3 < 0.0) return Kind::Minimum;
  return Kind::Saddle;
}

/// Sum of the 2x2 principal minors of the projected Hessian; equals mu2 * mu3 at a
/// critical point because the third eigenvalue vanishes there.
inline double sigma_invariant(const SymTensor3& t, const Vec3& x, double lambda) {
  const Mat3 h = projected_hessian(t, x, lambda);
  return h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0) + h(0, 0) * h(2, 2) - h(0, 2) * h(2, 0) + h(1, 1) * h(2, 2) -
         h(1, 2) * h(2, 1);
}

/// The same invariant written out in the parameters of the reduced tensor, valid at
/// critical points (it uses Ax^2 = lambda x to eliminate the cubic terms).
inline double sigma_invariant(const OctupolarParams& p, const Vec3& x, double lambda) {
  const double a0 = p.alpha0, b3 = p.beta3, a2 = p.alpha2;
  const double x1 = x[0], x2 = x[1], x3 = x[2];
  const double a02 = a0 * a0, a22 = a2 * a2, b32 = b3 * b3;
  const double quad = (a02 + a22 + b32) * x1 * x1 + (a02 + a22 + (b3 + 1.0) * (b3 + 1.0)) * x2 * x2 +
                      (a02 + b32 + b3 + 1.0) * x3 * x3 - 2.0 * a0 * x1 * x2 - 2.0 * a0 * a2 * x1 * x3 -
                      a2 * (2.0 * b3 + 1.0) * x2 * x3;
  return 7.0 * lambda * lambda - 4.0 * quad;
}

/// n points spread evenly over the unit sphere.
inline std::vector<Vec3> fibonacci_sphere(int n) {
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  const double golden = std::numbers::pi * (1.0 + std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double th = golden * (i + 0.5);
    pts.emplace_back(r * std::cos(th), r * std::sin(th), z);
  }
  return pts;
}

namespace detail {

/// Newton on F(x, lambda) = [Ax^2 - lambda x; (1 - x.x) / 2]. Returns false on breakdown.
inline bool newton_eigen(const SymTensor3& t, Vec3& x, double& lambda, const SolverConfig& cfg) {
  lambda = contract<3>(t, x);
  for (int it = 0; it < cfg.max_iter; ++it) {
    const Mat3 ax = contract<1>(t, x);
    Eigen::Vector4d f;
    f.head<3>() = ax * x - lambda * x;
    f[3] = 0.5 * (1.0 - x.squaredNorm());
    Eigen::Matrix4d j;
    j.topLeftCorner<3, 3>() = 2.0 * ax - lambda * Mat3::Identity();
    j.topRightCorner<3, 1>() = -x;
    j.bottomLeftCorner<1, 3>() = -x.transpose();
    j(3, 3) = 0.0;
    const Eigen::Vector4d step = j.fullPivLu().solve(-f);
    if (!step.allFinite()) return false;
    x += step.head<3>();
    lambda += step[3];
    if (!x.allFinite() || x.norm() > 1e6) return false;
    if (step.norm() <= cfg.step_tol) break;
  }
  return true;
}

}  // namespace detail

/// All real Z-eigenpairs (Ax^2 = lambda x, |x| = 1) reachable from a dense multistart,
/// one representative per antipodal pair (lambda >= 0), sorted by lambda descending.
inline std::vector<ZEigenpair> z_eigenpairs(const SymTensor3& t, const SolverConfig& cfg = {}) {
  std::mt19937_64 rng(cfg.seed);
  const Mat3 spin = random_orthogonal(rng).matrix();

  std::vector<ZEigenpair> found;
  const double cos_tol = std::cos(cfg.dedup_angle);
  int converged = 0;
  for (const Vec3& s : fibonacci_sphere(cfg.n_seeds)) {
    Vec3 x = spin * s;
    double lambda = 0.0;
    if (!detail::newton_eigen(t, x, lambda, cfg)) continue;
    x.normalize();
    lambda = contract<3>(t, x);
    if ((contract<2>(t, x) - lambda * x).norm() > cfg.residual_tol) continue;
    ++converged;
    if (lambda < 0.0) {
      lambda = -lambda;
      x = -x;
    }
    const bool near_zero = std::abs(lambda) <= cfg.residual_tol;
    const bool seen = std::any_of(found.begin(), found.end(), [&](const ZEigenpair& e) {
      const double c = e.x.dot(x);
      return c >= cos_tol || (near_zero && std::abs(e.lambda) <= cfg.residual_tol && -c >= cos_tol);
    });
    if (seen) continue;
    const auto [mu2, mu3] = tangent_eigenvalues(t, x, lambda);
    found.push_back({lambda, x, mu2, mu3, classify(mu2, mu3, lambda, cfg.degeneracy_rel)});
  }
  if (converged == 0) throw NumericalFailure("Z-eigenpair solver did not converge from any start");

  std::sort(found.begin(), found.end(), [](const ZEigenpair& a, const ZEigenpair& b) {
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    return std::lexicographical_compare(b.x.begin(), b.x.end(), a.x.begin(), a.x.end());
  });
  return found;
}

/// Number of local maxima of the potential (positive lambda). Throws
/// DegenerateConfiguration when a positive-lambda critical point is non-Morse.
inline int count_maxima(const SymTensor3& t, const SolverConfig& cfg = {}) {
  int n = 0;
  for (const ZEigenpair& e : z_eigenpairs(t, cfg)) {
    if (e.lambda <= 1e-9) continue;
    if (e.kind == Kind::Degenerate) throw DegenerateConfiguration("degenerate critical point with positive lambda");
    if (e.kind == Kind::Maximum) ++n;
  }
  return n;
}

inline int count_maxima(const OctupolarParams& p, const SolverConfig& cfg = {}) {
  return count_maxima(build_tensor(p), cfg);
}

}  // namespace octupolar
