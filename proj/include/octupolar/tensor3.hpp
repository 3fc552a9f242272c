#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <span>
#include <sstream>

#include "octupolar/errors.hpp"

namespace octupolar {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// One stored component of a symmetric tensor, addressed by a 1-based index
/// triple as in a_{113}. The triple must be sorted (i <= j <= k).
struct Component {
  std::array<int, 3> index;
  double value;
};

/// Order-3 fully symmetric tensor on R^3.
///
/// Only the 10 unique entries are stored, in the canonical order
/// 111, 112, 113, 122, 123, 133, 222, 223, 233, 333. Every accessor maps an
/// arbitrary index permutation to that storage, so symmetry holds by construction.
class SymTensor3 {
 public:
  static constexpr int kUnique = 10;

  SymTensor3() { data_.fill(0.0); }
  explicit SymTensor3(const std::array<double, kUnique>& unique) : data_(unique) {}

  /// Slot of a 0-based index triple in the unique storage.
  static constexpr int slot(int i, int j, int k) {
    // sort three values
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    constexpr std::array<int, 27> table = [] {
      std::array<int, 27> t{};
      int s = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b)
          for (int c = b; c < 3; ++c) t[a * 9 + b * 3 + c] = s++;
      return t;
    }();
    return table[i * 9 + j * 3 + k];
  }

  /// Entry with 0-based indices; any permutation gives the same value.
  double operator()(int i, int j, int k) const { return data_[slot(i, j, k)]; }

  /// Entry with 1-based indices, matching the a_{ijk} labelling.
  double a(int i, int j, int k) const { return data_[slot(i - 1, j - 1, k - 1)]; }

  const std::array<double, kUnique>& unique() const { return data_; }

  SymTensor3& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }
  friend SymTensor3 operator*(SymTensor3 t, double s) { return t *= s; }
  friend SymTensor3 operator*(double s, SymTensor3 t) { return t *= s; }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  std::array<double, kUnique> data_;
};

/// Builds a tensor from exactly one value per sorted 1-based index triple.
inline SymTensor3 build_symmetric(std::span<const Component> components) {
  std::array<double, SymTensor3::kUnique> values{};
  std::array<bool, SymTensor3::kUnique> seen{};
  for (const Component& c : components) {
    const auto [i, j, k] = c.index;
    if (i < 1 || k > 3 || i > j || j > k) {
      std::ostringstream msg;
      msg << "component index (" << i << ',' << j << ',' << k << ") is not a sorted triple in 1..3";
      throw ConstructionError(msg.str());
    }
    const int s = SymTensor3::slot(i - 1, j - 1, k - 1);
    if (seen[s]) {
      std::ostringstream msg;
      msg << "duplicate component a" << i << j << k;
      throw ConstructionError(msg.str());
    }
    seen[s] = true;
    values[s] = c.value;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw ConstructionError("missing components: all 10 sorted index triples are required");
  }
  return SymTensor3(values);
}

inline SymTensor3 build_symmetric(std::initializer_list<Component> components) {
  return build_symmetric(std::span<const Component>(components.begin(), components.size()));
}

/// Largest absolute slice trace, max_j |sum_i T(i,i,j)|.
inline double trace_defect(const SymTensor3& t) {
  double worst = 0.0;
  for (int j = 0; j < 3; ++j) {
    worst = std::max(worst, std::abs(t(0, 0, j) + t(1, 1, j) + t(2, 2, j)));
  }
  return worst;
}

inline bool is_traceless(const SymTensor3& t, double tol) {
  if (!(tol >= 0.0)) throw ParameterError("tolerance must be nonnegative");
  return trace_defect(t) <= tol;
}

/// Orthogonal 3x3 matrix (proper or improper).
class Rotation3 {
 public:
  Rotation3() : q_(Mat3::Identity()) {}

  /// Validates Q^T Q = I to within `tol` (max-norm).
  static Rotation3 from_matrix(const Mat3& q, double tol = 1e-10) {
    const double defect = orthogonality_defect(q);
    if (!(defect <= tol)) {
      std::ostringstream msg;
      msg << "matrix is not orthogonal: max|Q^T Q - I| = " << defect << " > " << tol;
      throw PreconditionError(msg.str());
    }
    return Rotation3(q);
  }

  static double orthogonality_defect(const Mat3& q) {
    return (q.transpose() * q - Mat3::Identity()).cwiseAbs().maxCoeff();
  }

  const Mat3& matrix() const { return q_; }
  double det() const { return q_.determinant(); }

  friend Rotation3 operator*(const Rotation3& a, const Rotation3& b) { return Rotation3(a.q_ * b.q_); }

 private:
  explicit Rotation3(const Mat3& q) : q_(q) {}
  Mat3 q_;
};

/// [T Q^3]_{ijk} = sum_{abc} t_{abc} q_{ia} q_{jb} q_{kc}.
///
/// The potential transforms as (T Q^3) y^3 = T (Q^T y)^3.
inline SymTensor3 rotate(const SymTensor3& t, const Rotation3& rot) {
  const Mat3& q = rot.matrix();
  std::array<double, SymTensor3::kUnique> out{};
  int s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = j; k < 3; ++k) {
        double acc = 0.0;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) acc += t(a, b, c) * q(i, a) * q(j, b) * q(k, c);
        out[s++] = acc;
      }
  return SymTensor3(out);
}

/// Contraction of T against x, `Order` times:
///   1 -> symmetric matrix (Tx)_{ij} = sum_k t_{ijk} x_k
///   2 -> vector (Tx^2)_i = sum_{jk} t_{ijk} x_j x_k
///   3 -> scalar Tx^3
template <int Order>
auto contract(const SymTensor3& t, const Vec3& x) {
  static_assert(Order >= 1 && Order <= 3, "contraction order must be 1, 2 or 3");
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = t(i, j, 0) * x[0] + t(i, j, 1) * x[1] + t(i, j, 2) * x[2];
  if constexpr (Order == 1) {
    return m;
  } else if constexpr (Order == 2) {
    return Vec3(m * x);
  } else {
    return x.dot(m * x);
  }
}

/// Haar-ish random orthogonal matrix: Gram-Schmidt of a Gaussian 3x3 matrix.
template <class Rng>
Rotation3 random_orthogonal(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat3 g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Mat3> qr(g);
  Mat3 q = qr.householderQ();
  // fix column signs so the distribution does not depend on the QR convention
  const Mat3 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 3; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return Rotation3::from_matrix(q, 1e-12);
}

/// Proper rotation whose third row is the unit vector `pole`, so Q * pole = e3.
inline Rotation3 rotation_to_north(const Vec3& pole) {
  const Vec3 z = pole.normalized();
  // seed the first axis with the coordinate direction least aligned with z
  int least = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(z[i]) < std::abs(z[least])) least = i;
  Vec3 e = Vec3::Zero();
  e[least] = 1.0;
  const Vec3 x = (e - e.dot(z) * z).normalized();
  const Vec3 y = z.cross(x);
  Mat3 q;
  q.row(0) = x.transpose();
  q.row(1) = y.transpose();
  q.row(2) = z.transpose();
  return Rotation3::from_matrix(q, 1e-12);
}

/// Proper rotation by `angle` about e3.
inline Rotation3 rotation_about_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 q;
  q << c, -s, 0, s, c, 0, 0, 0, 1;
  return Rotation3::from_matrix(q, 1e-12);
}

}  // namespace octupolar
