#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "octupolar/errors.hpp"

namespace octupolar {

using Exponents = std::vector<int>;

/// Homogeneous quadratic form in n variables, stored as a map monomial -> coefficient.
class HomQuadratic {
 public:
  explicit HomQuadratic(int nvars) : n_(nvars) {
    if (nvars < 1) throw ConstructionError("a form needs at least one variable");
  }

  int nvars() const { return n_; }

  /// Adds c * x_i x_j (i == j gives the square term). Indices are 0-based.
  HomQuadratic& add(int i, int j, double c) {
    Exponents e(n_, 0);
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ConstructionError("variable index out of range");
    ++e[i];
    ++e[j];
    terms_[e] += c;
    return *this;
  }

  /// Adds an arbitrary monomial; rejected unless it has total degree 2.
  HomQuadratic& add(const Exponents& e, double c) {
    if (static_cast<int>(e.size()) != n_) throw ConstructionError("exponent vector has the wrong length");
    if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; }) ||
        std::accumulate(e.begin(), e.end(), 0) != 2) {
      throw ConstructionError("non-homogeneous term: every monomial must have total degree 2");
    }
    terms_[e] += c;
    return *this;
  }

  const std::map<Exponents, double>& terms() const { return terms_; }

 private:
  int n_;
  std::map<Exponents, double> terms_;
};

/// All monomials x^v with |v| = degree in n variables, in descending lexicographic order
/// of the exponent vector (x1^d first).
inline std::vector<Exponents> monomials(int nvars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == nvars - 1) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

/// Macaulay's construction for n quadratics F_1..F_n in n variables, F_i paired with x_i.
///
/// Degree d = n + 1. Monomials of degree d are partitioned into S_i = {x^v : x_i^2 | x^v,
/// x_j^2 does not divide x^v for j < i}; row x^v in S_i holds the coefficients of
/// (x^v / x_i^2) F_i. A monomial is reduced when exactly one x_i^2 divides it; the
/// extraneous-factor matrix keeps the non-reduced rows and columns.
struct MacaulaySystem {
  int nvars = 0;
  int degree = 0;
  std::vector<Exponents> monomials;
  std::vector<int> partition;  ///< index i of the set S_i holding each monomial
  std::vector<bool> reduced;
  std::vector<int> nonreduced;  ///< positions of non-reduced monomials
  Eigen::MatrixXd d;
  Eigen::MatrixXd d_prime;
};

inline MacaulaySystem build_macaulay(const std::vector<HomQuadratic>& forms) {
  const int n = static_cast<int>(forms.size());
  if (n < 2) throw ConstructionError("need at least two forms");
  for (const HomQuadratic& f : forms) {
    if (f.nvars() != n) throw ConstructionError("the number of forms must equal the number of variables");
    for (const auto& [e, c] : f.terms()) {
      if (std::accumulate(e.begin(), e.end(), 0) != 2) throw ConstructionError("non-homogeneous form");
    }
  }

  MacaulaySystem sys;
  sys.nvars = n;
  sys.degree = n + 1;  // sum (d_i - 1) + 1 with every d_i = 2
  sys.monomials = monomials(n, sys.degree);
  const int size = static_cast<int>(sys.monomials.size());

  std::map<Exponents, int> column;
  for (int k = 0; k < size; ++k) column[sys.monomials[k]] = k;

  sys.d = Eigen::MatrixXd::Zero(size, size);
  sys.partition.resize(size);
  sys.reduced.resize(size);
  for (int r = 0; r < size; ++r) {
    const Exponents& m = sys.monomials[r];
    int owner = -1, squares = 0;
    for (int i = 0; i < n; ++i) {
      if (m[i] >= 2) {
        ++squares;
        if (owner < 0) owner = i;
      }
    }
    sys.partition[r] = owner;
    sys.reduced[r] = squares == 1;
    if (!sys.reduced[r]) sys.nonreduced.push_back(r);

    Exponents shift = m;
    shift[owner] -= 2;
    for (const auto& [e, c] : forms[owner].terms()) {
      Exponents target = shift;
      for (int i = 0; i < n; ++i) target[i] += e[i];
      sys.d(r, column.at(target)) += c;
    }
  }

  const int nr = static_cast<int>(sys.nonreduced.size());
  sys.d_prime.resize(nr, nr);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) sys.d_prime(i, j) = sys.d(sys.nonreduced[i], sys.nonreduced[j]);
  return sys;
}

/// Determinant by partial-pivot LU in long double.
inline long double determinant(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 1.0L;
  using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const MatL ml = m.cast<long double>();
  return Eigen::PartialPivLU<MatL>(ml).determinant();
}

/// Product of row norms; |det M| <= hadamard_bound(M).
inline double hadamard_bound(const Eigen::MatrixXd& m) {
  double b = 1.0;
  for (int i = 0; i < m.rows(); ++i) b *= m.row(i).norm();
  return b;
}

struct MacaulayRatio {
  long double det_d;
  long double det_d_prime;
  double relative_d_prime;  ///< |det D'| / hadamard_bound(D'), 0 when D' is singular

  bool degenerate(double tol) const { return !(relative_d_prime > tol); }
  double value() const { return static_cast<double>(det_d / det_d_prime); }
};

inline MacaulayRatio macaulay_ratio(const MacaulaySystem& sys) {
  MacaulayRatio r;
  r.det_d = determinant(sys.d);
  r.det_d_prime = determinant(sys.d_prime);
  const double h = hadamard_bound(sys.d_prime);
  r.relative_d_prime = h > 0.0 ? static_cast<double>(std::abs(r.det_d_prime)) / h : 0.0;
  return r;
}

/// det D / det D', which equals the resultant of the forms. Throws when D' is
/// singular relative to `tol` (in units of its Hadamard bound).
inline double resultant_via_macaulay(const std::vector<HomQuadratic>& forms, double tol = 1e-12) {
  const MacaulayRatio r = macaulay_ratio(build_macaulay(forms));
  if (r.degenerate(tol)) {
    std::ostringstream msg;
    msg << "extraneous factor is singular (|det D'| / Hadamard bound = " << r.relative_d_prime << ")";
    throw DegenerateConfiguration(msg.str());
  }
  return r.value();
}

}  // namespace octupolar
