#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "octupolar/errors.hpp"

namespace octupolar {

/// Real polynomial, coefficients in ascending order: c[0] + c[1] x + ...
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<double> ascending) : c_(std::move(ascending)) {}

  const std::vector<double>& coefficients() const { return c_; }
  double coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

  /// Degree after ignoring trailing zeros; -1 for the zero polynomial.
  int degree() const {
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
      if (c_[k] != 0.0) return k;
    return -1;
  }

  bool is_zero() const { return degree() < 0; }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Drops trailing coefficients with |c| <= rel_tol * max|c|.
  UnivariatePoly trimmed(double rel_tol = 0.0) const {
    const double cut = rel_tol * max_abs_coefficient();
    std::vector<double> out = c_;
    while (!out.empty() && std::abs(out.back()) <= cut) out.pop_back();
    return UnivariatePoly(std::move(out));
  }

  template <class T>
  T operator()(T x) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  /// sum |c_k| |x|^k, the natural rounding scale of an evaluation at x.
  double magnitude(double x) const {
    double acc = 0.0;
    const double ax = std::abs(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * ax + std::abs(*it);
    return acc;
  }

  UnivariatePoly derivative() const {
    if (c_.size() <= 1) return UnivariatePoly();
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return UnivariatePoly(std::move(d));
  }

  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UnivariatePoly();
    std::vector<double> out(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePoly(std::move(out));
  }

  friend UnivariatePoly operator*(double s, UnivariatePoly p) {
    for (double& v : p.c_) v *= s;
    return p;
  }

  /// Substitutes x -> x^2 (spreads coefficients onto even powers).
  UnivariatePoly in_square() const {
    std::vector<double> out(c_.empty() ? 0 : 2 * c_.size() - 1, 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k) out[2 * k] = c_[k];
    return UnivariatePoly(std::move(out));
  }

 private:
  std::vector<double> c_;
};

struct DivisionResult {
  UnivariatePoly quotient;
  UnivariatePoly remainder;
};

/// Polynomial long division, a = q * b + r with deg r < deg b.
inline DivisionResult divide(const UnivariatePoly& a, const UnivariatePoly& b) {
  const int db = b.degree();
  if (db < 0) throw ParameterError("division by the zero polynomial");
  std::vector<double> r = a.coefficients();
  const int da = a.degree();
  if (da < db) return {UnivariatePoly({0.0}), a};
  std::vector<double> q(da - db + 1, 0.0);
  for (int k = da - db; k >= 0; --k) {
    const double f = r[k + db] / b.coefficient(db);
    q[k] = f;
    for (int j = 0; j <= db; ++j) r[k + j] -= f * b.coefficient(j);
  }
  r.resize(std::max(db, 1));
  return {UnivariatePoly(std::move(q)), UnivariatePoly(std::move(r))};
}

/// All complex roots via eigenvalues of the (balanced) companion matrix.
inline std::vector<std::complex<double>> complex_roots(const UnivariatePoly& p) {
  const UnivariatePoly q = p.trimmed();
  const int n = q.degree();
  if (n < 0) throw ParameterError("the zero polynomial has no isolated roots");
  if (n == 0) return {};
  const double lead = q.coefficient(n);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -q.coefficient(i) / lead;
  // diagonal balancing by powers of two (Parlett-Reinsch)
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(companion(j, i));
        r += std::abs(companion(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / 2.0) c *= 2.0, r /= 2.0, f *= 2.0;
      while (c >= r * 2.0) c /= 2.0, r *= 2.0, f /= 2.0;
      if ((c + r) / f < 0.95 * s) {
        changed = true;
        companion.row(i) /= f;
        companion.col(i) *= f;
      }
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  if (es.info() != Eigen::Success) throw NumericalFailure("companion eigenvalue solver failed");
  std::vector<std::complex<double>> roots(es.eigenvalues().begin(), es.eigenvalues().end());
  return roots;
}

struct RealRoot {
  double value;
  int multiplicity;  ///< estimate from the number of vanishing derivatives
};

namespace detail {

/// Newton iteration on p started at x0; returns the last iterate.
inline double newton_polish(const UnivariatePoly& p, double x0, int max_iter = 60) {
  const UnivariatePoly dp = p.derivative();
  double x = x0;
  for (int it = 0; it < max_iter; ++it) {
    const double f = p(x), d = dp(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    const double step = f / d;
    if (!std::isfinite(step)) break;
    x -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

inline bool vanishes(const UnivariatePoly& p, double x, double rel_tol) {
  return std::abs(p(x)) <= rel_tol * std::max(p.magnitude(x), std::numeric_limits<double>::min());
}

/// Single-linkage clusters of points closer than radius * max(1, |z|).
inline std::vector<std::vector<std::complex<double>>> cluster(const std::vector<std::complex<double>>& z,
                                                               double radius) {
  std::vector<std::vector<std::complex<double>>> clusters;
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::complex<double>> cl{z[i]};
    used[i] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (used[j]) continue;
        for (const auto& m : cl) {
          if (std::abs(z[j] - m) <= radius * std::max(1.0, std::abs(m))) {
            cl.push_back(z[j]);
            used[j] = true;
            grew = true;
            break;
          }
        }
      }
    }
    clusters.push_back(std::move(cl));
  }
  return clusters;
}

}  // namespace detail

struct RootOptions {
  /// Relative tolerance for |q^{(j)}(r)| when deciding a root and its multiplicity.
  double tol = 1e-6;
  /// Companion eigenvalues closer than this (times max(1,|z|)) are treated as one cluster.
  double cluster_radius = 5e-2;
  /// Eigenvalues with |Im z| above this (times max(1,|z|)) are complex unless clustered.
  double imag_tol = 1e-6;
};

/// Real roots of q in [lo, hi], sorted, each with a multiplicity estimate.
///
/// Companion eigenvalues are grouped into clusters; a cluster of size m is
/// accepted as an m-fold root when q and its first m-1 derivatives vanish
/// (relative to evaluation magnitude) at the Newton-polished zero of q^{(m-1)}.
/// Clusters that fail the test are split into their individual members.
inline std::vector<RealRoot> poly_real_roots(const UnivariatePoly& q, double lo, double hi,
                                             const RootOptions& opt = {}) {
  if (!(lo < hi)) throw ParameterError("root interval must satisfy lo < hi");
  const UnivariatePoly p = q.trimmed();
  if (p.is_zero()) throw ParameterError("identically zero polynomial");
  if (p.degree() == 0) return {};

  std::vector<std::complex<double>> z = complex_roots(p);
  std::sort(z.begin(), z.end(), [](auto a, auto b) { return a.real() < b.real(); });

  std::vector<UnivariatePoly> derivs{p};
  for (int k = 1; k <= p.degree(); ++k) derivs.push_back(derivs.back().derivative());

  std::vector<RealRoot> found;
  auto accept_simple = [&](std::complex<double> zz) {
    if (std::abs(zz.imag()) > opt.imag_tol * std::max(1.0, std::abs(zz))) return;
    const double r = detail::newton_polish(p, zz.real());
    // near x = 0 a single term dominates, so also accept a negligible Newton step
    const double d = derivs[1](r);
    const bool tiny_step = d != 0.0 && std::abs(p(r) / d) <= 1e-12 * std::max(1.0, std::abs(r));
    if (detail::vanishes(p, r, opt.tol) || tiny_step) found.push_back({r, 1});
  };

  // A cluster that fails the multiple-root test is re-clustered at a smaller radius.
  auto process = [&](auto&& self, const std::vector<std::complex<double>>& pts, double radius) -> void {
    for (const auto& cl : detail::cluster(pts, radius)) {
      const int m = static_cast<int>(cl.size());
      if (m == 1) {
        accept_simple(cl.front());
        continue;
      }
      std::complex<double> centre = 0.0;
      for (const auto& v : cl) centre += v;
      centre /= static_cast<double>(m);
      double spread = 0.0;
      for (const auto& v : cl) spread = std::max(spread, std::abs(v - centre));
      if (std::abs(centre.imag()) <= std::max(spread, opt.imag_tol * std::max(1.0, std::abs(centre)))) {
        const double r = detail::newton_polish(derivs[m - 1], centre.real());
        bool ok = std::abs(r - centre.real()) <= 2.0 * spread + 1e-12;
        for (int j = 0; ok && j < m - 1; ++j) ok = detail::vanishes(derivs[j], r, opt.tol);
        if (ok) {
          found.push_back({r, m});
          continue;
        }
      }
      if (radius < 1e-10) {
        for (const auto& v : cl) accept_simple(v);
      } else {
        self(self, cl, radius / 8.0);
      }
    }
  };
  process(process, z, opt.cluster_radius);

  std::sort(found.begin(), found.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  // merge members of split clusters that polished onto the same root
  std::vector<RealRoot> merged;
  for (const RealRoot& r : found) {
    if (!merged.empty() && std::abs(merged.back().value - r.value) <= 1e-9 * std::max(1.0, std::abs(r.value))) {
      merged.back().multiplicity += r.multiplicity;
    } else {
      merged.push_back(r);
    }
  }
  std::vector<RealRoot> out;
  const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  for (RealRoot r : merged) {
    if (r.value < lo - slack || r.value > hi + slack) continue;
    r.value = std::clamp(r.value, lo, hi);
    out.push_back(r);
  }
  return out;
}

inline std::vector<RealRoot> poly_real_roots(const UnivariatePoly& q, double lo, double hi, double tol) {
  RootOptions opt;
  opt.tol = tol;
  return poly_real_roots(q, lo, hi, opt);
}

}  // namespace octupolar
