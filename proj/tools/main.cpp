#include <CLI11.hpp>

#include <iostream>

#include "octupolar/cli.hpp"

namespace oc = octupolar::cli;

int main(int argc, char** argv) {
  CLI::App app{"Spectra, resultants and phase surfaces of octupolar tensors"};
  app.require_subcommand(1);

  std::string params, polar, grid, xsection, format, output;
  double tol = 0.0;
  std::uint64_t seed = oc::RunConfig{}.seed;
  int n = 100;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "Residual tolerance (> 0)");
    sub->add_option("--seed", seed, "Seed of the multistart solver");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "Output path (default: standard output)");
  };
  auto add_point = [&](CLI::App* sub) {
    auto* p = sub->add_option("--params", params, "alpha0,beta3,alpha2");
    auto* q = sub->add_option("--polar", polar, "rho,chi,alpha2 (chi may be written as pi, -pi/2, ...)");
    p->excludes(q);
    q->excludes(p);
  };

  auto* spectra = app.add_subcommand("spectra", "Z-eigenpairs and critical-point classification");
  add_point(spectra);
  add_common(spectra);
  auto* algebra = app.add_subcommand("algebra", "Resultant and E-characteristic polynomial");
  add_point(algebra);
  add_common(algebra);
  auto* surfaces = app.add_subcommand("surfaces", "Dome and separatrix over the base disk");
  surfaces->add_option("--grid", grid, "RxC polar grid (default 50x180)");
  auto* xs = surfaces->add_option("--xsection", xsection, "Closed-form cross-section at chi = -pi/2 or -pi/6");
  surfaces->add_option("--n", n, "Rows of a cross-section")->needs(xs);
  surfaces->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  add_common(surfaces);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    oc::RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    if (!params.empty()) cfg.params = oc::parse_params(params);
    if (!polar.empty()) cfg.params = oc::parse_polar(polar);
    if (!grid.empty()) std::tie(cfg.n_rho, cfg.n_chi) = oc::parse_grid(grid);
    if (!xsection.empty()) cfg.xsection_chi = oc::parse_angle(xsection);
    cfg.xsection_n = n;
    if (app.get_subcommands().front()->count("--tol")) cfg.tol = tol;
    cfg.seed = seed;
    if (format == "csv") cfg.format = oc::Format::Csv;
    if (format == "json") cfg.format = oc::Format::Json;
    cfg.threads = threads;

    const std::string text = oc::run(cfg);
    if (output.empty()) {
      std::cout << text;
      std::cout.flush();
      if (!std::cout) throw octupolar::IoError("writing to standard output failed");
    } else {
      oc::write_atomic(output, text);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return oc::exit_code_for(e);
  }
}
