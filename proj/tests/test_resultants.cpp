#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace octupolar;
using namespace octupolar::testing;

namespace {

const OctupolarParams kApex{0.0, -0.5, std::sqrt(0.5)};

}  // namespace

TEST(ResultantClosedForm, VanishesWithAlpha2AndAtApex) {
  EXPECT_EQ(resultant_closed_form({0.3, -0.2, 0.0}), 0.0);
  EXPECT_NEAR(resultant_closed_form(kApex), 0.0, 1e-14);
}

TEST(ResultantClosedForm, SignMatchesMacaulayAtReference) {
  const OctupolarParams ref{0.1, -0.3, 0.5};
  const double cf = resultant_closed_form(ref);
  const double mac = resultant_via_macaulay(ax2_forms(ref));
  EXPECT_GT(cf * mac, 0.0);
  EXPECT_NEAR(mac, cf, 1e-10 * std::abs(cf));
}

TEST(ResultantClosedForm, AgreesWithMacaulayUpToSign) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    const OctupolarParams p = random_admissible_params(rng, 0.05, 1.0);
    const double cf = resultant_closed_form(p);
    const double mac = resultant_via_macaulay(ax2_forms(p));
    EXPECT_LE(std::abs(std::abs(mac) - std::abs(cf)), 1e-8 * std::abs(cf)) << p.alpha0 << ' ' << p.beta3 << ' ' << p.alpha2;
  }
}

TEST(ResultantClosedForm, InvariantUnderRotationOfTheSystem) {
  // the Macaulay ratio of a rotated tensor equals the closed form up to sign
  const OctupolarParams p{0.15, -0.35, 0.4};
  std::mt19937_64 rng(kSeed + 1);
  const double cf = resultant_closed_form(p);
  for (int k = 0; k < 5; ++k) {
    const SymTensor3 t = rotate(build_tensor(p), random_orthogonal(rng));
    EXPECT_NEAR(std::abs(resultant_via_macaulay(ax2_forms(t))), std::abs(cf), 1e-8 * std::abs(cf));
  }
}

TEST(EcharPoly, ApexFactorisation) {
  const UnivariatePoly phi = echar_poly(kApex);
  EXPECT_LE(coefficient_distance(phi, monomial_times_power(19683.0, 6, 4)), 1e-6);
}

TEST(EcharPoly, BasePointMatchesExactRationalEvaluation) {
  // exact rational elimination on a rationally rotated copy gives 256 lambda^8 (lambda^2 - 1)^3
  const EcharFit fit = echar_fit(OctupolarParams{0.0, 0.0, 0.0});
  EXPECT_TRUE(fit.rotated);
  EXPECT_LE(coefficient_distance(fit.phi, monomial_times_power(256.0, 8, 3)), 1e-6);
  EXPECT_EQ(fit.phi.trimmed(1e-9).degree(), 14);
}

TEST(EcharPoly, StructuralProperties) {
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 40; ++trial) {
    const OctupolarParams p = random_admissible_params(rng);
    const EcharFit fit = echar_fit(p);
    const double res = resultant_closed_form(p);
    EXPECT_LE(fit.odd_ratio, 1e-8);
    EXPECT_LE(fit.division_remainder, 1e-8);
    EXPECT_LE(std::abs(fit.cofactor.coefficient(0) - res * res), 1e-6 * std::max(1.0, res * res));
    const double c12 = c12_closed_form(p);
    EXPECT_LE(std::abs(fit.cofactor.coefficient(12) - c12), 1e-6 * std::abs(c12));
    for (std::size_t k = 1; k < 15; k += 2) EXPECT_EQ(fit.phi.coefficient(k), 0.0);
  }
}

TEST(EcharPoly, NonzeroRootsWhenResultantIsNonzero) {
  std::mt19937_64 rng(kSeed + 3);
  int checked = 0;
  while (checked < 20) {
    const OctupolarParams p = random_admissible_params(rng);
    if (std::abs(resultant_closed_form(p)) <= 0.01) continue;
    ++checked;
    for (const RealRoot& r : poly_real_roots(echar_poly(p), -4.0, 4.0)) EXPECT_GT(std::abs(r.value), 1e-6);
  }
}

TEST(EcharPoly, ZEigenvaluesAreRoots) {
  std::mt19937_64 rng(kSeed + 4);
  for (int trial = 0; trial < 10; ++trial) {
    const OctupolarParams p = random_admissible_params(rng);
    const UnivariatePoly phi = echar_poly(p);
    for (const ZEigenpair& e : z_eigenpairs(build_tensor(p))) {
      // the fit is only trusted to its residual gate, relative to the coefficient scale
      const double floor = 1e-8 * phi.max_abs_coefficient();
      EXPECT_LE(std::abs(phi(e.lambda)), 1e-6 * phi.magnitude(e.lambda) + floor) << e.lambda;
    }
  }
}

TEST(EcharPoly, RotationFallbackMatchesDirectFit) {
  // alpha2 > 0: the tensor is fitted directly; its rotated copies must agree
  const OctupolarParams p{0.2, -0.3, 0.45};
  const EcharFit direct = echar_fit(p);
  EXPECT_FALSE(direct.rotated);
  const EcharFit turned = echar_fit(rotate(build_tensor(p), detail::echar_fallback_rotation(1)));
  EXPECT_LE(coefficient_distance(turned.phi, direct.phi), 1e-6);
}

TEST(EcharPoly, TooFewSamplesIsANumericalFailure) {
  EcharConfig cfg;
  cfg.degeneracy_tol = 2.0;  // nothing can pass: |det D'| never exceeds its Hadamard bound
  EXPECT_THROW(echar_fit(OctupolarParams{0.1, -0.2, 0.3}, cfg), NumericalFailure);
}

TEST(C12ClosedForm, MatchesFitAtApex) {
  const EcharFit fit = echar_fit(kApex);
  EXPECT_NEAR(fit.cofactor.coefficient(12), c12_closed_form(kApex), 1e-6 * 19683.0);
  EXPECT_NEAR(c12_closed_form(kApex), 19683.0, 1e-8);
}
