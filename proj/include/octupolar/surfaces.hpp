#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <thread>
#include <vector>

#include "octupolar/params.hpp"
#include "octupolar/poly.hpp"
#include "octupolar/separatrix_coefficients.hpp"
#include "octupolar/spectra.hpp"

namespace octupolar {

struct DomeFactors {
  double g1;  ///< admissibility margin
  double g2;
  double g3;  ///< its smallest nonnegative root in alpha2 is the dome
};

/// g3 as a cubic in t = alpha2^2, ascending coefficients.
inline UnivariatePoly dome_cubic(double a0, double b3) {
  const double a02 = a0 * a0, a04 = a02 * a02, a06 = a04 * a02;
  const double b2 = b3 * b3, b3c = b2 * b3, b4 = b2 * b2, b5 = b4 * b3, b6 = b4 * b2;
  const double excess = a02 + b2 + b3;
  const double c0 = -16.0 * excess * excess * (4.0 * a02 + 4.0 * b2 + 4.0 * b3 - 3.0);
  const double c1 = 8.0 * (8.0 * a06 + 6.0 * a04 * (4.0 * b2 - 2.0 * b3 - 5.0) +
                           3.0 * a02 * (8.0 * b4 + 8.0 * b3c - 12.0 * b2 - 3.0 * b3 + 6.0) + 8.0 * b6 + 36.0 * b5 +
                           42.0 * b4 + 3.0 * b3c - 9.0 * b2 - 2.0);
  const double c2 = -48.0 * a04 * (3.0 * b2 - 1.0) + 12.0 * a02 * (8.0 * b4 + 24.0 * b3c + 26.0 * b2 - 4.0 * b3 - 11.0) -
                    16.0 * b6 - 96.0 * b5 - 168.0 * b4 - 72.0 * b3c - 21.0 * b2 - 24.0 * b3 + 40.0;
  const double c3 = (2.0 * b3 - 1.0) * ((2.0 * b3 + 5.0) * (2.0 * b3 + 5.0) - 12.0 * a02);
  return UnivariatePoly({c0, c1, c2, c3});
}

/// g3 as a degree-6 polynomial in alpha2.
inline UnivariatePoly dome_poly(double a0, double b3) { return dome_cubic(a0, b3).in_square(); }

inline DomeFactors dome_factors(double a0, double b3, double a2) {
  const double t = a2 * a2;
  const double s = 1.0 + 2.0 * b3;
  const double w = 4.0 * a0 * a0 + s * s;
  const double g2 = 64.0 * t * t - 16.0 * t * s * (-12.0 * a0 * a0 + s * s) + w * w * w;
  return {admissible(a0, b3).margin, g2, dome_cubic(a0, b3)(t)};
}

namespace detail {

inline void require_base_disk(double a0, double b3) {
  if (base_disk_excess(a0, b3) > 1e-12) throw DomainError("point lies outside the base disk");
}

}  // namespace detail

/// Nonnegative roots of g3 in alpha2, ascending, with multiplicities in alpha2.
inline std::vector<RealRoot> dome_roots(double a0, double b3) {
  std::vector<RealRoot> out;
  for (const RealRoot& r : poly_real_roots(dome_cubic(a0, b3), -1e-12, 16.0)) {
    const double t = std::max(0.0, r.value);
    // a root at t = 0 is a root of even multiplicity 2m in alpha2
    out.push_back({std::sqrt(t), t == 0.0 ? 2 * r.multiplicity : r.multiplicity});
  }
  return out;
}

/// Height of the dome over a point of the base disk: the smallest nonnegative root of g3.
inline double dome_alpha2(double a0, double b3) {
  detail::require_base_disk(a0, b3);
  const std::vector<RealRoot> roots = dome_roots(a0, b3);
  if (roots.empty()) throw NumericalFailure("g3 has no nonnegative root");
  return roots.front().value;
}

/// Full left-hand side 1792 g1^2 sum d_{2i} alpha2^{2i}, a degree-16 polynomial in alpha2.
inline UnivariatePoly separatrix_poly(double a0, double b3) {
  const double g1 = admissible(a0, b3).margin;
  const std::array<double, 9> d = separatrix_coefficients(a0, b3);
  std::vector<double> c(17, 0.0);
  for (int i = 0; i < 9; ++i) c[2 * i] = 1792.0 * g1 * g1 * d[i];
  return UnivariatePoly(std::move(c));
}

struct CrossSection {
  double dome;
  double sepa;
};

/// Closed-form dome and separatrix heights along the rays chi = -pi/2 and chi = -pi/6.
inline CrossSection cross_section(double chi, double rho) {
  if (!(rho >= 0.0 && rho <= 0.5)) throw ParameterError("rho must lie in [0, 1/2]");
  constexpr double pi = std::numbers::pi;
  if (std::abs(chi + pi / 2.0) <= 1e-12) {
    return {std::sqrt((1.0 - 2.0 * rho) / (2.0 - rho)),
            2.0 * rho / std::sqrt(3.0) * std::sqrt((1.0 - 2.0 * rho) / (3.0 - rho))};
  }
  if (std::abs(chi + pi / 6.0) <= 1e-12) {
    return {(1.0 - 2.0 * rho) / std::sqrt(2.0) * std::sqrt(1.0 + rho),
            2.0 * rho / std::sqrt(3.0) * std::sqrt((1.0 + 2.0 * rho) / (3.0 + rho))};
  }
  throw DomainError("closed-form cross-sections exist only for chi = -pi/2 and chi = -pi/6");
}

struct SeparatrixConfig {
  SolverConfig solver = [] {
    SolverConfig s;
    s.n_seeds = 400;
    return s;
  }();
  double min_offset = 1e-3;
  double rel_offset = 0.02;   ///< probe offset relative to the dome height
  double ray_tol = 1e-6;      ///< switch to closed forms this close to a special ray
};

namespace detail {

/// Representative ray (-pi/2 or -pi/6) when chi lies on one of its symmetric images.
inline std::optional<double> special_ray(double chi, double tol) {
  constexpr double pi = std::numbers::pi;
  auto near = [&](double target) {
    const double d = std::remainder(chi - target, 2.0 * pi);
    return std::abs(d) <= tol;
  };
  for (double c : {-pi / 2.0, pi / 6.0, 5.0 * pi / 6.0})
    if (near(c)) return -pi / 2.0;
  for (double c : {-pi / 6.0, pi / 2.0, -5.0 * pi / 6.0})
    if (near(c)) return -pi / 6.0;
  return std::nullopt;
}

}  // namespace detail

/// Oracle verdict on a candidate root: count below, count above, and whether it flips 3 -> 4.
struct ProbeResult {
  double lo, hi;
  std::optional<int> below, above;
  bool flips() const { return below == 3 && above == 4; }
};

inline ProbeResult probe_separatrix(double a0, double b3, double root, double dome, const SeparatrixConfig& cfg) {
  const double off = std::max(cfg.min_offset, cfg.rel_offset * dome);
  ProbeResult pr{std::max(root - off, root / 2.0), std::min(root + off, (root + dome) / 2.0), {}, {}};
  try {
    pr.below = count_maxima(OctupolarParams{a0, b3, pr.lo}, cfg.solver);
  } catch (const DegenerateConfiguration&) {
  }
  try {
    pr.above = count_maxima(OctupolarParams{a0, b3, pr.hi}, cfg.solver);
  } catch (const DegenerateConfiguration&) {
  }
  return pr;
}

/// Separatrix height over a point of the base disk, or nothing when no root of the
/// separatrix polynomial in (0, dome] separates a three-maxima state (below) from a
/// four-maxima state (above).
inline std::optional<double> separatrix_alpha2(double a0, double b3, const SeparatrixConfig& cfg = {}) {
  detail::require_base_disk(a0, b3);
  const PolarPoint pp = params_to_polar(a0, b3);
  if (pp.rho <= 1e-12) return 0.0;
  const double rho = 0.5 - pp.rho <= 1e-12 ? 0.5 : pp.rho;  // rounding from the polar round trip
  if (const auto ray = detail::special_ray(pp.chi, cfg.ray_tol)) {
    const CrossSection cs = cross_section(*ray, rho);
    if (cs.sepa > cs.dome) return std::nullopt;
    return cs.sepa;
  }
  if (0.5 - pp.rho <= 1e-9) return std::nullopt;  // base circle away from the tangency rays

  const double dome = dome_alpha2(a0, b3);
  const std::array<double, 9> d = separatrix_coefficients(a0, b3);
  const UnivariatePoly in_t(std::vector<double>(d.begin(), d.end()));
  bool all_degenerate = true;
  bool any_candidate = false;
  for (const RealRoot& r : poly_real_roots(in_t, 0.0, dome * dome)) {
    if (r.value <= 0.0) continue;
    const double root = std::sqrt(r.value);
    any_candidate = true;
    const ProbeResult pr = probe_separatrix(a0, b3, root, dome, cfg);
    if (pr.below || pr.above) all_degenerate = false;
    if (pr.flips()) return root;
  }
  if (any_candidate && all_degenerate) throw DegenerateConfiguration("both oracle probes are degenerate");
  return std::nullopt;
}

enum SampleFlag : unsigned { kOutsideDisk = 1u, kSpurious = 2u, kDegenerate = 4u };

struct SurfaceSample {
  double alpha0 = 0.0, beta3 = 0.0, rho = 0.0, chi = 0.0;
  std::optional<double> dome_alpha2;
  std::optional<double> sepa_alpha2;
  unsigned flags = 0;
};

inline SurfaceSample sample_point(double rho, double chi, const SeparatrixConfig& cfg) {
  SurfaceSample s;
  s.rho = rho;
  s.chi = chi;
  const DiskPoint dp = polar_to_params({rho, chi});
  s.alpha0 = dp.alpha0;
  s.beta3 = dp.beta3;
  try {
    if (const auto ray = detail::special_ray(chi, cfg.ray_tol)) {
      s.dome_alpha2 = cross_section(*ray, rho).dome;
    } else {
      s.dome_alpha2 = dome_alpha2(s.alpha0, s.beta3);
    }
    s.sepa_alpha2 = separatrix_alpha2(s.alpha0, s.beta3, cfg);
    if (!s.sepa_alpha2) s.flags |= kSpurious;
  } catch (const DomainError&) {
    s.flags |= kOutsideDisk;
  } catch (const DegenerateConfiguration&) {
    s.flags |= kDegenerate;
  } catch (const NumericalFailure&) {
    s.flags |= kDegenerate;
  }
  return s;
}

/// Polar grid over the base disk, rho-major: rho_i = i / (2 (n_rho - 1)),
/// chi_j = -pi + 2 pi (j + 1) / n_chi. Per-point failures are recorded in flags.
inline std::vector<SurfaceSample> sample_disk(int n_rho, int n_chi, const SeparatrixConfig& cfg = {},
                                              unsigned threads = 0) {
  if (n_rho < 2 || n_chi < 2) throw ParameterError("grid sizes must be at least 2");
  const std::size_t total = static_cast<std::size_t>(n_rho) * static_cast<std::size_t>(n_chi);
  std::vector<SurfaceSample> out(total);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t k = begin; k < total; k += stride) {
      const int i = static_cast<int>(k / static_cast<std::size_t>(n_chi));
      const int j = static_cast<int>(k % static_cast<std::size_t>(n_chi));
      const double rho = 0.5 * i / (n_rho - 1);
      const double chi = -std::numbers::pi + 2.0 * std::numbers::pi * (j + 1) / n_chi;
      out[k] = sample_point(rho, chi, cfg);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
  }
  return out;
}

}  // namespace octupolar
