// Command-line front end: every toolkit module as a subcommand with
// file-based, reproducible outputs.
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure,
// 4 undecided simulation outcome.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fstef/essential.hpp"
#include "fstef/io.hpp"
#include "fstef/prufer.hpp"
#include "fstef/profile.hpp"
#include "fstef/stefan.hpp"
#include "fstef/vanishing.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUndecided = 4;

void emit(const json& j, const std::string& out_path) {
  std::cout << j.dump(2) << '\n';
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << j.dump(2) << '\n';
  }
}

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0, hi = 0;
  int n = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2 || hi < lo)
    throw std::invalid_argument("grid spec must be lo:hi:n, e.g. 0:100:41");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return g;
}

struct WaveArgs {
  double c = 1.0;
  double tol = 1e-8;
  double z_span = 400.0;
  double step = 0.01;
  double delta = 1e-8;
};

fstef::WaveProfile shoot_from(const WaveArgs& w) {
  fstef::ShootOptions opt;
  opt.tol = w.tol;
  opt.z_span = w.z_span;
  opt.step = w.step;
  opt.delta = w.delta;
  return fstef::shoot_profile(w.c, opt);
}

int run(int argc, char** argv) {
  CLI::App app{"Fisher-Stefan travelling-wave stability toolkit"};
  app.require_subcommand(1);
  app.set_config("--config");

  // wave
  auto* wave = app.add_subcommand("wave", "shoot the travelling-wave profile and export it");
  WaveArgs wargs;
  std::string wave_csv, wave_json;
  wave->add_option("--c", wargs.c, "wave speed, 0 <= c < 2");
  wave->add_option("--tol", wargs.tol, "endpoint tolerance");
  wave->add_option("--z-span", wargs.z_span, "maximum shooting length");
  wave->add_option("--step", wargs.step, "export grid spacing");
  wave->add_option("--delta", wargs.delta, "initial distance from the saddle");
  wave->add_option("--out-csv", wave_csv, "profile CSV path (z,u,v)");
  wave->add_option("--out-json", wave_json, "profile JSON path");

  // series
  auto* series = app.add_subcommand("series", "unstable-manifold series coefficients");
  double se_c = 1.0;
  int se_order = 20;
  std::string se_csv, se_json;
  series->add_option("--c", se_c, "wave speed");
  series->add_option("--order", se_order, "series order N (>= 2)");
  series->add_option("--out-csv", se_csv, "coefficient CSV path (j,a_j)");
  series->add_option("--out-json", se_json, "coefficient JSON path");

  // mu-of-c / c-of-mu
  auto* muofc = app.add_subcommand("mu-of-c", "Stefan coefficient mu from wave speed c");
  double mc_c = 1.0;
  int mc_order = 20;
  std::string mc_out;
  muofc->add_option("--c", mc_c, "wave speed, 0 < c < 2")->required();
  muofc->add_option("--order", mc_order, "series order");
  muofc->add_option("--out", mc_out, "JSON output path");

  auto* cofmu = app.add_subcommand("c-of-mu", "wave speed c from Stefan coefficient mu");
  double cm_mu = 1.0;
  int cm_order = 20;
  std::string cm_out;
  cofmu->add_option("--mu", cm_mu, "Stefan coefficient, mu > 0")->required();
  cofmu->add_option("--order", cm_order, "series order");
  cofmu->add_option("--out", cm_out, "JSON output path");

  // vanishing
  auto* vanish = app.add_subcommand("vanishing", "vanishing-case spectrum and classification");
  double va_h = 1.0;
  int va_n = 5;
  std::string va_csv, va_out;
  vanish->add_option("--h-inf", va_h, "interval length h_inf > 0")->required();
  vanish->add_option("--n", va_n, "number of eigenvalues");
  vanish->add_option("--out-csv", va_csv, "spectrum CSV path (n,lambda)");
  vanish->add_option("--out", va_out, "classification JSON path");

  // essential
  auto* ess = app.add_subcommand("essential", "essential-spectrum border, classification, Green's function");
  double es_c = 1.0, es_kmax = 5.0;
  int es_n = 201;
  std::string es_csv, es_out;
  std::vector<double> es_classify, es_greens;
  ess->add_option("--c", es_c, "wave speed");
  ess->add_option("--k-max", es_kmax, "border sampling |k| <= k-max");
  ess->add_option("--n", es_n, "border sample count");
  ess->add_option("--out-csv", es_csv, "border CSV path (k,re,im)");
  ess->add_option("--classify", es_classify, "re im of lambda to classify")->expected(2);
  ess->add_option("--greens", es_greens, "x y re(lambda) im(lambda)")->expected(4);
  ess->add_option("--out", es_out, "JSON output path");

  // prufer
  auto* pru = app.add_subcommand("prufer", "Prufer trajectories, oscillation report, scans");
  WaveArgs pargs;
  std::string pr_grid = "0:100:41";
  double pr_linf = 100.0, pr_L = 40.0;
  int pr_n = 2001;
  std::string pr_out, pr_traj_csv, pr_profile;
  std::vector<double> pr_scan;
  bool pr_kpp = false;
  double pr_kpp_L = 50.0;
  pru->add_option("--c", pargs.c, "wave speed");
  pru->add_option("--profile", pr_profile, "profile JSON (shoots one when omitted)");
  pru->add_option("--lambda-grid", pr_grid, "lo:hi:n grid of spectral parameters");
  pru->add_option("--lambda-inf", pr_linf, "upper squeeze parameter");
  pru->add_option("--L", pr_L, "truncation length");
  pru->add_option("--n", pr_n, "trajectory sample count");
  pru->add_option("--scan", pr_scan, "eigenvalue scan interval lo hi")->expected(2);
  pru->add_flag("--kpp-demo", pr_kpp, "full-line Fisher-KPP winding contrast");
  pru->add_option("--demo-L", pr_kpp_L, "winding demo length");
  pru->add_option("--out", pr_out, "report JSON path");
  pru->add_option("--out-traj-csv", pr_traj_csv, "lambda=0 trajectory CSV path (z,theta,r)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "time-dependent Fisher-Stefan run");
  fstef::StefanParams sp;
  double sim_amp = 0.01;
  std::optional<double> sim_c;
  std::string sim_prefix = "run";
  sim->add_option("--h0", sp.h0, "initial interval length");
  auto* omu = sim->add_option("--mu", sp.mu, "Stefan coefficient");
  auto* oc = sim->add_option("--c", sim_c, "target wave speed (mu = mu_from_c(c))");
  oc->excludes(omu);
  sim->add_option("--amplitude", sim_amp, "initial amplitude of cos(pi x / 2 h0)");
  sim->add_option("--T", sp.T, "time horizon");
  sim->add_option("--dt", sp.dt, "time step");
  sim->add_option("--nx", sp.nx, "grid nodes");
  sim->add_option("--out-prefix", sim_prefix, "artifact prefix (trace CSV + outcome JSON)");

  // stability
  auto* stab = app.add_subcommand("stability", "nonlinear perturbation-decay experiment");
  double st_c = 1.0, st_amp = 0.01;
  fstef::DecayParams dp;
  std::string st_csv, st_out;
  stab->add_option("--c", st_c, "wave speed");
  stab->add_option("--amplitude", st_amp, "perturbation amplitude");
  stab->add_option("--T", dp.T, "experiment horizon");
  stab->add_option("--L", dp.L, "domain length");
  stab->add_option("--nz", dp.nz, "grid nodes");
  stab->add_option("--dt", dp.dt, "time step");
  stab->add_option("--out-csv", st_csv, "norm history CSV path (t,h1)");
  stab->add_option("--out", st_out, "decay report JSON path");

  CLI11_PARSE(app, argc, argv);

  if (wave->parsed()) {
    const auto profile = shoot_from(wargs);
    if (!wave_csv.empty()) fstef::io::write_profile_csv(wave_csv, profile);
    if (!wave_json.empty()) fstef::io::write_profile_json(wave_json, profile);
    json j{{"c", profile.c},
           {"z_min", profile.z_min()},
           {"samples", profile.samples.size()},
           {"slope_at_origin", profile.slope_at_origin()}};
    emit(j, "");
    return kExitOk;
  }

  if (series->parsed()) {
    const auto s = fstef::manifold_series(se_c, se_order);
    if (!se_csv.empty()) fstef::io::write_series_csv(se_csv, s);
    if (!se_json.empty()) fstef::io::write_series_json(se_json, s);
    const auto jm1 = fstef::evaluate_manifold(s, -1.0);
    json j{{"c", se_c}, {"nu", s.nu}, {"order", s.order},
           {"J_minus_1", jm1.value}, {"contracting", jm1.contracting}};
    emit(j, "");
    return kExitOk;
  }

  if (muofc->parsed()) {
    const auto s = fstef::manifold_series(mc_c, mc_order);
    const double jm1 = fstef::evaluate_manifold(s, -1.0).value;
    json j{{"c", mc_c}, {"nu", s.nu}, {"J_minus_1", jm1},
           {"mu", fstef::mu_from_c(mc_c, mc_order)}};
    emit(j, mc_out);
    return kExitOk;
  }

  if (cofmu->parsed()) {
    const double c = fstef::c_from_mu(cm_mu, cm_order);
    json j{{"mu", cm_mu}, {"c", c}};
    emit(j, cm_out);
    return kExitOk;
  }

  if (vanish->parsed()) {
    const auto spec = fstef::vanishing_spectrum(va_h, va_n);
    if (!va_csv.empty()) fstef::io::write_spectrum_csv(va_csv, spec);
    const auto cls = fstef::classify_vanishing(va_h);
    json j{{"h_inf", va_h}, {"verdict", fstef::to_string(cls.verdict)},
           {"lambda1", cls.lambda1}, {"eigenvalues", spec.eigenvalues}};
    emit(j, va_out);
    return kExitOk;
  }

  if (ess->parsed()) {
    json j{{"c", es_c}, {"q_essential_border", fstef::q_essential_border(es_c)}};
    if (!es_csv.empty()) {
      const auto curve = fstef::fredholm_border_curve(es_c, es_kmax, es_n);
      fstef::io::CsvTable t;
      t.header = {"k", "re_lambda", "im_lambda"};
      for (const auto& s : curve)
        t.rows.push_back({s.k, s.lambda.real(), s.lambda.imag()});
      fstef::io::write_csv(es_csv, t);
      j["border_csv"] = es_csv;
    }
    if (!es_classify.empty()) {
      const std::complex<double> lam(es_classify[0], es_classify[1]);
      j["classify"] = {{"re", lam.real()}, {"im", lam.imag()},
                       {"region", fstef::to_string(fstef::classify_lambda(es_c, lam))}};
    }
    if (!es_greens.empty()) {
      const std::complex<double> lam(es_greens[2], es_greens[3]);
      const auto g = fstef::greens_function(es_c, lam, es_greens[0], es_greens[1]);
      j["greens"] = {{"x", es_greens[0]}, {"y", es_greens[1]},
                     {"re", g.real()}, {"im", g.imag()}};
    }
    emit(j, es_out);
    return kExitOk;
  }

  if (pru->parsed()) {
    json j{{"c", pargs.c}};
    if (pr_kpp) {
      j["kpp_line_winding"] = fstef::kpp_line_winding_demo(pargs.c, pr_kpp_L);
      j["demo_L"] = pr_kpp_L;
    }
    const auto profile = pr_profile.empty() ? shoot_from(pargs)
                                            : fstef::io::load_profile_json(pr_profile);
    fstef::PruferOptions popt;
    popt.L = pr_L;
    popt.n = pr_n;
    const auto grid = parse_grid(pr_grid);
    const auto rep = fstef::oscillation_check(pargs.c, grid, pr_linf, profile, popt);
    if (!pr_out.empty()) fstef::io::write_oscillation_json(pr_out, rep);
    if (!pr_traj_csv.empty())
      fstef::io::write_trajectory_csv(pr_traj_csv,
                                      fstef::integrate_prufer(pargs.c, 0.0, profile, popt));
    j["no_point_spectrum"] = rep.no_point_spectrum;
    j["verdict"] = rep.no_point_spectrum ? "no point spectrum, lambda >= 0"
                                         : "candidate eigenvalue locus";
    j["half_line_winding"] =
        fstef::winding_count(fstef::integrate_prufer(pargs.c, 0.0, profile, popt));
    if (!pr_scan.empty()) {
      const auto eigs =
          fstef::eigenvalue_scan(pargs.c, pr_scan[0], pr_scan[1], profile, popt);
      j["scan"] = {{"lo", pr_scan[0]}, {"hi", pr_scan[1]}, {"eigenvalues", eigs}};
    }
    emit(j, "");
    return kExitOk;
  }

  if (sim->parsed()) {
    if (sim_c) sp.mu = fstef::mu_from_c(*sim_c);
    const double h0 = sp.h0, amp = sim_amp;
    auto u0 = [h0, amp](double x) {
      return amp * std::cos(std::numbers::pi * x / (2.0 * h0));
    };
    const auto run = fstef::simulate(u0, sp);
    const auto outcome = fstef::detect_outcome(run);
    fstef::io::write_trace_csv(sim_prefix + "_trace.csv", run.trace);
    fstef::io::write_outcome_json(sim_prefix + "_outcome.json", outcome);
    json j{{"kind", fstef::to_string(outcome.kind)},
           {"final_h", run.trace.back().h},
           {"final_umax", run.trace.back().umax}};
    if (outcome.kind == fstef::OutcomeKind::Vanishing) j["h_inf_est"] = outcome.h_inf_est;
    if (outcome.kind == fstef::OutcomeKind::Spreading) j["c_est"] = outcome.c_est;
    emit(j, "");
    return outcome.kind == fstef::OutcomeKind::Undecided ? kExitUndecided : kExitOk;
  }

  if (stab->parsed()) {
    WaveArgs w;
    w.c = st_c;
    const auto profile = shoot_from(w);
    auto bump = [](double z) { return z * std::exp(2.0 * z); };
    const auto rep = fstef::perturb_decay_experiment(st_c, profile, bump, st_amp, dp);
    if (!st_csv.empty()) {
      fstef::io::CsvTable t;
      t.header = {"t", "h1_norm"};
      for (std::size_t i = 0; i < rep.times.size(); ++i)
        t.rows.push_back({rep.times[i], rep.h1_norms[i]});
      fstef::io::write_csv(st_csv, t);
    }
    json j{{"c", st_c}, {"amplitude", st_amp}, {"beta", rep.beta},
           {"r2", rep.r2}, {"growth_detected", rep.growth_detected}};
    emit(j, st_out);
    if (rep.growth_detected) return kExitNumerical;
    return kExitOk;
  }

  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fstef::NoCrossingError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}
