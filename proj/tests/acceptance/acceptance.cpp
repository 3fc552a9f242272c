// Acceptance suite: one line per criterion, "[PASS]" or "[FAIL]".
// Usage: acceptance [criterion ...]   (no arguments runs all twelve)

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "octupolar/cli.hpp"
#include "test_support.hpp"

using namespace octupolar;
using namespace octupolar::testing;

namespace {

constexpr double kPi = std::numbers::pi;
const OctupolarParams kApex{0.0, -0.5, std::sqrt(0.5)};
const OctupolarParams kBase{0.0, 0.0, 0.0};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED{" << what << "}";
    }
  }
};

/// Largest angle from any wanted vector to the nearest eigenvector with the given lambda.
double worst_angle(const std::vector<ZEigenpair>& pairs, double lambda, const std::vector<Vec3>& want, int* count) {
  *count = 0;
  for (const ZEigenpair& e : pairs) *count += std::abs(e.lambda - lambda) <= 1e-8;
  double worst = 0.0;
  for (const Vec3& v : want) {
    double best = 10.0;
    for (const ZEigenpair& e : pairs)
      if (std::abs(e.lambda - lambda) <= 1e-8) best = std::min(best, angle_between(e.x, v));
    worst = std::max(worst, best);
  }
  return worst;
}

Outcome dome_root_table() {
  Outcome o;
  const double double_root = 2.0 / std::sqrt(17.0);
  const double simple_root = 4.0 * std::sqrt(7.0) / (5.0 * std::sqrt(5.0));
  const double dome = dome_alpha2(0.0, -0.8);
  o.require(std::abs(dome - double_root) <= 1e-10, "dome(0,-0.8) = 2/sqrt(17)");
  const auto roots = dome_roots(0.0, -0.8);
  o.require(roots.size() == 2, "two distinct nonnegative roots at (0,-0.8)");
  if (roots.size() == 2) {
    o.require(roots[0].multiplicity == 2, "double root detected");
    o.require(std::abs(roots[0].value - double_root) <= 1e-10, "first root");
    o.require(roots[1].multiplicity == 1 && std::abs(roots[1].value - simple_root) <= 1e-10, "second root");
  }
  const auto other = dome_roots(0.1, -0.8);
  const std::array<double, 3> table{0.3765, 0.5862, 0.9459};
  o.require(other.size() == 3, "three roots at (0.1,-0.8)");
  double worst = 0.0;
  for (std::size_t k = 0; k < std::min<std::size_t>(3, other.size()); ++k)
    worst = std::max(worst, std::abs(other[k].value - table[k]));
  o.require(worst <= 5e-4, "roots at (0.1,-0.8) within 5e-4");
  o.detail << "dome err=" << std::abs(dome - double_root) << " table err=" << worst;
  return o;
}

Outcome apex_spectrum() {
  Outcome o;
  const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
  int count = 0;
  const double worst = worst_angle(z_eigenpairs(build_tensor(kApex)), 1.0,
                                   {Vec3(0, 0, 1), Vec3(0, 2 * r2 / 3, -1.0 / 3), Vec3(r6 / 3, -r2 / 3, -1.0 / 3),
                                    Vec3(-r6 / 3, -r2 / 3, -1.0 / 3)},
                                   &count);
  o.require(count == 4, "four lambda=1 eigenvectors");
  o.require(worst <= 1e-8, "angular error <= 1e-8");
  const double dist = coefficient_distance(echar_poly(kApex), monomial_times_power(19683.0, 6, 4));
  o.require(dist <= 1e-6, "phi = 19683 l^6 (l^2-1)^4");
  o.detail << "lambda=1 count=" << count << " angle=" << worst << " coeff rel err=" << dist;
  return o;
}

Outcome base_point() {
  Outcome o;
  const double h = std::sqrt(3.0) / 2;
  int count = 0;
  const double worst =
      worst_angle(z_eigenpairs(build_tensor(kBase)), 1.0, {Vec3(0, 0, 1), Vec3(0, h, -0.5), Vec3(0, -h, -0.5)}, &count);
  o.require(count == 3, "three lambda=1 eigenvectors");
  o.require(worst <= 1e-8, "angular error <= 1e-8");
  const UnivariatePoly phi = echar_poly(kBase);
  const UnivariatePoly target = monomial_times_power(64.0, 8, 6);
  const double dist = std::min(coefficient_distance(phi, target), coefficient_distance((-1.0) * phi, target));
  o.require(dist <= 1e-6, "phi = +-64 l^8 (l^2-1)^6");
  o.detail << "lambda=1 count=" << count << " angle=" << worst << " coeff rel err vs +-64 l^8 (l^2-1)^6 = " << dist
           << " (fitted degree " << phi.trimmed(1e-9).degree() << ", rel err vs 256 l^8 (l^2-1)^3 = "
           << coefficient_distance(phi, monomial_times_power(256.0, 8, 3)) << ")";
  return o;
}

Outcome constant_term_identity() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  double worst = 0.0, worst_sign = 0.0;
  for (int k = 0; k < 200; ++k) {
    const OctupolarParams p = random_admissible_params(rng);
    const EcharFit fit = echar_fit(p);
    const double res2 = std::pow(resultant_closed_form(p), 2);
    const double c0 = fit.cofactor.coefficient(0);
    worst = std::max(worst, std::abs(c0 - res2) / std::max(1.0, res2));
    worst_sign = std::max(worst_sign, std::abs(fit.phi(0.0) + c0) / std::max(1.0, res2));
  }
  o.require(worst <= 1e-6, "|c0 - Res^2| <= 1e-6 max(1, Res^2)");
  o.detail << "200 params, max rel |c0 - Res^2| = " << worst << ", max |phi(0) + c0| = " << worst_sign;
  return o;
}

Outcome macaulay_validation() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 1);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const OctupolarParams p = random_admissible_params(rng, 0.05, 1.0);
    const double cf = std::abs(resultant_closed_form(p));
    worst = std::max(worst, std::abs(std::abs(resultant_via_macaulay(ax2_forms(p))) - cf) / cf);
  }
  std::vector<HomQuadratic> squares;
  for (int i = 0; i < 3; ++i) squares.push_back(HomQuadratic(3).add(i, i, 1.0));
  const double unit = resultant_via_macaulay(squares);
  o.require(worst <= 1e-8, "Macaulay vs closed form rel err <= 1e-8");
  o.require(std::abs(unit - 1.0) <= 1e-12, "Res(x1^2, x2^2, x3^2) = 1");
  o.detail << "100 params max rel err=" << worst << " Res(squares)-1=" << unit - 1.0;
  return o;
}

Outcome c12_check() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 2);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const OctupolarParams p = random_admissible_params(rng);
    const double want = c12_closed_form(p);
    worst = std::max(worst, std::abs(echar_fit(p).cofactor.coefficient(12) - want) / std::abs(want));
  }
  o.require(worst <= 1e-6, "c12 rel err <= 1e-6");
  o.detail << "100 params max rel err=" << worst;
  return o;
}

Outcome cross_section_identities() {
  Outcome o;
  double worst_dome = 0.0, worst_sepa = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double rho = 0.5 * i / 99.0;
    const CrossSection cs = cross_section(-kPi / 2, rho);
    const DiskPoint d = polar_to_params({rho, -kPi / 2});
    worst_dome = std::max(worst_dome, relative_value(dome_poly(d.alpha0, d.beta3), cs.dome));
    worst_sepa = std::max(worst_sepa, relative_value(separatrix_poly(d.alpha0, d.beta3), cs.sepa));
  }
  const CrossSection meet = cross_section(-kPi / 6, 1.0 / 3.0);
  const double want = std::sqrt(2.0) / (3.0 * std::sqrt(3.0));
  const double meet_err = std::max(std::abs(meet.dome - want), std::abs(meet.sepa - want));
  o.require(worst_dome <= 1e-9, "dome closed form solves g3");
  o.require(worst_sepa <= 1e-9, "separatrix closed form solves the separatrix polynomial");
  o.require(meet_err <= 1e-10, "-pi/6 curves meet at (1/3, sqrt2/(3 sqrt3))");
  o.detail << "g3 rel=" << worst_dome << " sepa rel=" << worst_sepa << " meet err=" << meet_err;
  return o;
}

Outcome gap_identity() {
  Outcome o;
  double worst = 0.0, min_interior = 1e300;
  for (int i = 0; i < 100; ++i) {
    const double rho = 0.5 * i / 99.0;
    const CrossSection cs = cross_section(-kPi / 2, rho);
    const double gap = cs.dome * cs.dome - cs.sepa * cs.sepa;
    const double want = std::pow(3 - 2 * rho, 2) * (1 - rho - 2 * rho * rho) / (3 * (2 - rho) * (3 - rho));
    worst = std::max(worst, std::abs(gap - want));
    if (i < 99) min_interior = std::min(min_interior, gap);
    else o.require(std::abs(gap) <= 1e-12, "gap vanishes at rho = 1/2");
  }
  o.require(worst <= 1e-10, "identity within 1e-10");
  o.require(min_interior > 0.0, "gap positive for rho < 1/2");
  o.detail << "max err=" << worst << " min gap (rho<1/2)=" << min_interior;
  return o;
}

Outcome transition_oracle() {
  Outcome o;
  SolverConfig solver;  // default density: 2000 starts
  o.require(count_maxima(OctupolarParams{0.0, -0.8, 0.13334 - 0.02}, solver) == 3, "3 maxima below at rho=0.3");
  o.require(count_maxima(OctupolarParams{0.0, -0.8, 0.13334 + 0.02}, solver) == 4, "4 maxima above at rho=0.3");
  o.require(count_maxima(kApex, solver) == 4, "apex has 4 maxima");
  o.require(count_maxima(kBase, solver) == 3, "base point has 3 maxima");

  std::mt19937_64 rng(kSeed + 3);
  int checked = 0, attempts = 0;
  while (checked < 10 && attempts < 100) {
    ++attempts;
    const DiskPoint d = random_base_point(rng, 0.45);
    const auto root = separatrix_alpha2(d.alpha0, d.beta3);
    if (!root || *root <= 0.0) continue;
    const double dome = dome_alpha2(d.alpha0, d.beta3);
    const double off = std::min({0.02, 0.5 * *root, 0.5 * (dome - *root)});
    ++checked;
    o.require(count_maxima(OctupolarParams{d.alpha0, d.beta3, *root - off}, solver) == 3, "3 below a validated root");
    o.require(count_maxima(OctupolarParams{d.alpha0, d.beta3, *root + off}, solver) == 4, "4 above a validated root");
  }
  o.require(checked == 10, "ten seeded disk points with validated roots");
  o.detail << "reference probes + " << checked << " seeded points (" << attempts << " drawn)";
  return o;
}

Outcome dome_semantics() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 4);
  double worst = 0.0;
  int fewest = 100;
  for (int k = 0; k < 20; ++k) {
    const DiskPoint d = random_base_point(rng);
    const auto pairs = z_eigenpairs(build_tensor({d.alpha0, d.beta3, dome_alpha2(d.alpha0, d.beta3)}));
    worst = std::max(worst, std::abs(pairs.front().lambda - 1.0));
    int at_top = 0;
    for (const ZEigenpair& e : pairs) at_top += std::abs(e.lambda - 1.0) <= 1e-6;
    fewest = std::min(fewest, at_top);
  }
  o.require(worst <= 1e-6, "max lambda = 1 on the dome");
  o.require(fewest >= 2, "attained in at least two directions");
  o.detail << "20 points, max |lambda_max - 1|=" << worst << " min #directions=" << fewest;
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 5);

  bool traceless = true;
  for (int k = 0; k < 200; ++k) traceless &= is_traceless(rotate(random_traceless(rng), random_orthogonal(rng)), 1e-10);
  o.require(traceless, "tracelessness under 200 rotations");

  double spec_err = 0.0;
  for (int k = 0; k < 10; ++k) {
    const SymTensor3 t = random_traceless(rng);
    const auto a = z_eigenpairs(t), b = z_eigenpairs(rotate(t, random_orthogonal(rng)));
    if (a.size() != b.size()) {
      spec_err = 1.0;
      break;
    }
    for (std::size_t i = 0; i < a.size(); ++i) spec_err = std::max(spec_err, std::abs(a[i].lambda - b[i].lambda));
  }
  o.require(spec_err <= 1e-8, "spectrum rotation invariance");

  double sigma_err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const OctupolarParams p = random_admissible_params(rng);
    for (const ZEigenpair& e : z_eigenpairs(build_tensor(p)))
      sigma_err = std::max(sigma_err, std::abs(sigma_invariant(p, e.x, e.lambda) - e.mu2 * e.mu3));
  }
  o.require(sigma_err <= 1e-8, "sigma = mu2 mu3");

  double grad_err = 0.0, hess_err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const SymTensor3 t = random_traceless(rng);
    const Vec3 x = random_unit(rng);
    const Vec3 grad = 3.0 * contract<2>(t, x);
    const double h = 1e-5;
    for (int i = 0; i < 3; ++i) {
      Vec3 e = Vec3::Zero();
      e[i] = h;
      const double fd = (contract<3>(t, Vec3(x + e)) - contract<3>(t, Vec3(x - e))) / (2 * h);
      grad_err = std::max(grad_err, std::abs(fd - grad[i]) / std::max(1.0, grad.norm()));
    }
    for (const ZEigenpair& z : z_eigenpairs(t)) {
      const auto b = tangent_basis(z.x);
      const Eigen::Matrix2d exact = b * projected_hessian(t, z.x, z.lambda) * b.transpose();
      const double s = 1e-4;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          auto phi = [&](double s1, double s2) {
            const Vec3 y = z.x + s1 * b.row(i).transpose() + s2 * b.row(j).transpose();
            return contract<3>(t, Vec3(y.normalized()));
          };
          const double d2 = (phi(s, s) - phi(s, -s) - phi(-s, s) + phi(-s, -s)) / (4 * s * s);
          hess_err = std::max(hess_err, std::abs(-d2 / 3.0 - exact(i, j)) / std::max(1.0, exact.cwiseAbs().maxCoeff()));
        }
    }
  }
  o.require(grad_err <= 1e-5, "finite-difference gradient");
  o.require(hess_err <= 1e-5, "finite-difference projected Hessian");

  double sym_err = 0.0;
  int mismatched = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = 0; j < 6; ++j) {
      const double rho = 0.1 * i, chi = -kPi + 2 * kPi * (j + 0.37) / 6.0;
      auto at = [&](double c) {
        const DiskPoint d = polar_to_params({rho, c});
        return separatrix_alpha2(d.alpha0, d.beta3);
      };
      const auto base = at(chi);
      for (double image : {chi + 2 * kPi / 3, kPi - chi}) {
        const auto other = at(image);
        if (base.has_value() != other.has_value()) ++mismatched;
        else if (base) sym_err = std::max(sym_err, std::abs(*base - *other));
      }
    }
  o.require(mismatched == 0 && sym_err <= 1e-6, "separatrix six-fold symmetry");
  o.detail << "spectrum err=" << spec_err << " sigma err=" << sigma_err << " grad rel=" << grad_err
           << " hess rel=" << hess_err << " symmetry err=" << sym_err;
  return o;
}

std::string run_capture(const std::string& args, int* code) {
  namespace fs = std::filesystem;
  const fs::path out = fs::temp_directory_path() / "octupolar_acceptance_stdout.txt";
  const int status = std::system((std::string(OCTUPOLAR_CLI_PATH) + " " + args + " > " + out.string()).c_str());
  *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream f(out, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome cli_determinism() {
  Outcome o;
  for (const std::string args : {"spectra --params 0.1,-0.4,0.2 --seed 11", "algebra --params 0.1,-0.3,0.5",
                                 "surfaces --grid 4x6 --format csv --seed 3", "surfaces --xsection -pi/6 --n 20"}) {
    int c1 = 0, c2 = 0;
    const std::string a = run_capture(args, &c1), b = run_capture(args, &c2);
    o.require(c1 == 0 && c2 == 0, "exit 0: " + args);
    o.require(a == b && !a.empty(), "byte-identical: " + args);
  }
  int code = 0;
  const std::string csv = run_capture("surfaces --grid 2x4", &code);
  o.require(csv.substr(0, csv.find('\n')) == "alpha0,beta3,rho,chi,dome_alpha2,sepa_alpha2,flags", "CSV header");
  o.detail << "4 commands rerun, header checked";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"dome root table", dome_root_table},
      {"apex spectrum and E-characteristic polynomial", apex_spectrum},
      {"base point spectrum and E-characteristic polynomial", base_point},
      {"constant term equals squared resultant", constant_term_identity},
      {"Macaulay resultant validation", macaulay_validation},
      {"leading cofactor coefficient c12", c12_check},
      {"cross-section identities", cross_section_identities},
      {"dome-separatrix gap identity", gap_identity},
      {"maxima-count transition across the separatrix", transition_oracle},
      {"dome is the unit-eigenvalue locus", dome_semantics},
      {"property suites", property_suites},
      {"CLI determinism and CSV header", cli_determinism},
  };

  std::vector<int> selected;
  for (int k = 1; k < argc; ++k) selected.push_back(std::atoi(argv[k]));
  if (selected.empty())
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) selected.push_back(k);

  int failures = 0;
  for (int k : selected) {
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "no criterion " << k << '\n';
      return 2;
    }
    Outcome o;
    try {
      o = criteria[k - 1].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << k << ": " << criteria[k - 1].first << " -- "
              << o.detail.str() << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
