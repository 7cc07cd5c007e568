// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fstef/essential.hpp"
#include "fstef/prufer.hpp"
#include "fstef/profile.hpp"
#include "fstef/stefan.hpp"
#include "fstef/vanishing.hpp"

namespace {

using namespace fstef;
using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %-34s %s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion1_closed_form_oracle() {
  const auto t0 = Clock::now();
  const auto profile = shoot_profile(0.0);
  double sup = 0.0;
  for (double z = -10.0; z <= 0.0; z += 0.005)
    sup = std::max(sup, std::abs(profile.u(z) - closed_form_u0(z)));
  const double dt = seconds_since(t0);
  report(1, "closed-form oracle (c = 0)", sup <= 1e-8 && dt < 1.0,
         "sup-norm = " + sci(sup) + ", " + sci(dt) + " s");
}

void criterion2_series_cross_validation() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (double c : {0.5, 1.5}) {
    const auto s = manifold_series(c, 20);
    const double j_series = evaluate_manifold(s, -1.0).value;
    const double j_shoot = shoot_profile(c).slope_at_origin() + s.nu;
    const double err = std::abs(j_series - j_shoot);
    ok = ok && err <= 1e-6;
    detail += "c=" + sci(c) + " err=" + sci(err) + " ";
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 5.0;
  report(2, "20-term series vs shooting J(-1)", ok, detail + sci(dt) + " s");
}

void criterion3_mu_c_round_trip() {
  bool ok = true;
  double worst = 0.0;
  for (double c : {0.1, 0.5, 1.0, 1.5, 1.9}) {
    const double back = c_from_mu(mu_from_c(c));
    worst = std::max(worst, std::abs(back - c));
    ok = ok && std::abs(back - c) <= 1e-6;
  }
  // increasing and steep toward c -> 2
  double prev = 0.0;
  for (double c = 0.05; c <= 1.95; c += 0.05) {
    const double m = mu_from_c(c);
    ok = ok && m > prev;
    prev = m;
  }
  ok = ok && mu_from_c(1.95) > 10.0 * mu_from_c(1.0);
  report(3, "mu <-> c round trip", ok, "worst |dc| = " + sci(worst));
}

void criterion4_vanishing_spectrum() {
  const double l1 = vanishing_eigenvalue(1, kPi / 2);
  const double hc = critical_length();
  const bool ok = l1 == 0.0 && std::abs(hc - kPi / 2) <= 1e-12 &&
                  classify_vanishing(hc - 1e-6).verdict == VanishingVerdict::Stable &&
                  classify_vanishing(kPi / 2).verdict == VanishingVerdict::Marginal &&
                  classify_vanishing(hc + 1e-6).verdict == VanishingVerdict::Unstable;
  report(4, "vanishing spectrum / critical length", ok,
         "lambda1(pi/2) = " + sci(l1) +
             ", |h_c - pi/2| = " + sci(std::abs(hc - kPi / 2)));
}

void criterion5_essential_spectrum() {
  bool ok = true;
  std::string detail;

  double max_re = -1e300;
  for (const auto& s : fredholm_border_curve(1.0, 8.0, 1001))
    max_re = std::max(max_re, s.lambda.real());
  ok = ok && std::abs(max_re - (-1.0)) < 1e-14;

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uc(0.0, 1.9), uy(-6.0, -0.5), ure(-0.5, 2.0),
      uim(-1.5, 1.5);
  auto dGdx = [](double c, std::complex<double> lam, double y, double sgn) {
    auto G = [&](double x) { return greens_function(c, lam, x, y); };
    auto D = [&](double hh) {
      return sgn * (-3.0 * G(y) + 4.0 * G(y + sgn * hh) - G(y + 2.0 * sgn * hh)) /
             (2.0 * hh);
    };
    const double h = 3e-4;
    return (4.0 * D(h / 2) - D(h)) / 3.0;
  };
  int done = 0;
  double worst_jump = 0.0;
  while (done < 10) {
    const double c = uc(rng);
    const std::complex<double> lam(ure(rng), uim(rng));
    if (classify_lambda(c, lam) != SpectralRegion::Resolvent) continue;
    const double y = uy(rng);
    const auto jump = dGdx(c, lam, y, +1.0) - dGdx(c, lam, y, -1.0);
    worst_jump = std::max(worst_jump, std::abs(jump - std::complex<double>(1.0)));
    ++done;
  }
  ok = ok && worst_jump <= 1e-8;

  // manufactured-solution residual at 1e4 nodes
  const double c = 1.0, L = 40.0;
  const std::complex<double> lam(1.0, 0.0);
  const std::size_t n = 10001;
  const double h = L / static_cast<double>(n - 1);
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = -L + h * static_cast<double>(i);
    f[i] = std::exp(z) * ((2.0 + c) + z * (c - lam.real()));
  }
  std::vector<double> probe;
  for (std::size_t i = 500; i < n; i += 500) probe.push_back(-L + h * static_cast<double>(i));
  const auto p = apply_resolvent(c, lam, f, L, probe);
  double worst_res = 0.0;
  for (std::size_t i = 0; i < probe.size(); ++i)
    worst_res = std::max(worst_res, std::abs(p[i] - probe[i] * std::exp(probe[i])));
  ok = ok && worst_res <= 1e-6;

  report(5, "essential spectrum / Green's fn", ok,
         "max re = " + sci(max_re) + ", jump err = " + sci(worst_jump) +
             ", resolvent err = " + sci(worst_res));
}

void criterion6_point_spectrum_exclusion() {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst_dL = 0.0;
  for (double c : {0.0, 0.5, 1.0, 1.5, 1.9}) {
    const auto profile = shoot_profile(c);
    const auto grid = default_lambda_grid(100.0, 41);
    for (double lambda_inf : {50.0, 100.0, 200.0}) {
      const auto rep = oscillation_check(c, grid, std::max(lambda_inf, 100.0), profile);
      ok = ok && rep.no_point_spectrum;
      const auto top = oscillation_check(c, {0.0, lambda_inf}, lambda_inf, profile);
      ok = ok && top.no_point_spectrum;
    }
    for (double lam : {0.0, 2.5, 100.0}) {
      PruferOptions a, b;
      a.L = 40.0;
      b.L = 80.0;
      const double d = std::abs(integrate_prufer(c, lam, profile, a).theta_at_origin() -
                                integrate_prufer(c, lam, profile, b).theta_at_origin());
      worst_dL = std::max(worst_dL, d);
    }
    ok = ok && eigenvalue_scan(c, 0.0, 100.0, profile, {}, 41).empty();
  }
  ok = ok && worst_dL <= 1e-8;
  const double dt = seconds_since(t0);
  ok = ok && dt < 30.0;
  report(6, "point-spectrum exclusion", ok,
         "worst L-sensitivity = " + sci(worst_dL) + ", " + sci(dt) +
             " s");
}

void criterion7_winding_contrast() {
  const int line = kpp_line_winding_demo(1.0, 50.0);
  const auto profile = shoot_profile(1.0);
  const int half = winding_count(integrate_prufer(1.0, 0.0, profile));
  const bool ok = line >= 1 && half == 0;
  report(7, "line vs half-line winding", ok,
         "line = " + std::to_string(line) + ", half-line = " + std::to_string(half));
}

void criterion8_dichotomy() {
  const auto t0v = Clock::now();
  bool ok = true;
  std::string detail;

  StefanParams pv;
  pv.h0 = 1.0;
  pv.mu = 1.0;
  pv.T = 12.0;
  const auto vrun = simulate(
      [&](double x) { return 0.01 * std::cos(kPi * x / (2.0 * pv.h0)); }, pv);
  const auto vout = detect_outcome(vrun);
  ok = ok && vout.kind == OutcomeKind::Vanishing && vout.h_inf_est <= kPi / 2 + 0.05;
  ok = ok && seconds_since(t0v) < 60.0;
  detail += "h_inf = " + sci(vout.h_inf_est) + " ";

  const auto t0s = Clock::now();
  StefanParams ps;
  ps.h0 = 4.0;
  ps.mu = mu_from_c(1.0);
  ps.T = 30.0;
  const auto srun = simulate(
      [&](double x) { return 0.5 * std::cos(kPi * x / (2.0 * ps.h0)); }, ps);
  const auto sout = detect_outcome(srun);
  ok = ok && sout.kind == OutcomeKind::Spreading && std::abs(sout.c_est - 1.0) <= 0.05;
  detail += "c_est = " + sci(sout.c_est) + " ";

  const auto frame = moving_frame_compare(srun, shoot_profile(1.0));
  ok = ok && frame.back().second <= 0.02;
  detail += "frame sup = " + sci(frame.back().second) + " ";
  ok = ok && seconds_since(t0s) < 60.0;

  // self-convergence: dt/2, 2 nx moves c_est by < 0.01
  StefanParams pr = ps;
  pr.dt = ps.dt / 2;
  pr.nx = 2 * ps.nx - 1;
  pr.keep_snapshots = false;
  const auto rrun = simulate(
      [&](double x) { return 0.5 * std::cos(kPi * x / (2.0 * pr.h0)); }, pr);
  const auto rout = detect_outcome(rrun);
  const double dc = std::abs(rout.c_est - sout.c_est);
  ok = ok && rout.kind == OutcomeKind::Spreading && dc < 0.01;
  detail += "refine dc = " + sci(dc);

  report(8, "spreading-vanishing dichotomy", ok, detail);
}

void criterion9_nonlinear_decay() {
  const auto profile = shoot_profile(1.0);
  auto bump = [](double z) { return z * std::exp(2.0 * z); };
  const auto r1 = perturb_decay_experiment(1.0, profile, bump, 0.01);
  const auto r2 = perturb_decay_experiment(1.0, profile, bump, 0.005);
  const bool ok = r1.beta > 0.0 && r1.r2 >= 0.99 &&
                  std::abs(r2.beta - r1.beta) <= 0.10 * r1.beta && !r1.growth_detected;
  report(9, "nonlinear decay rate", ok,
         "beta = " + sci(r1.beta) + ", R^2 = " + sci(r1.r2) +
             ", half-amplitude beta = " + sci(r2.beta));
}

void criterion10_no_wave_guard() {
  bool ok = false;
  std::string what;
  try {
    shoot_profile(2.5);
  } catch (const NoCrossingError& e) {
    ok = true;
    what = e.what();
  } catch (const std::exception& e) {
    what = e.what();
  }
  report(10, "no wave for c = 2.5", ok, what);
}

}  // namespace

int main() {
  criterion1_closed_form_oracle();
  criterion2_series_cross_validation();
  criterion3_mu_c_round_trip();
  criterion4_vanishing_spectrum();
  criterion5_essential_spectrum();
  criterion6_point_spectrum_exclusion();
  criterion7_winding_contrast();
  criterion8_dichotomy();
  criterion9_nonlinear_decay();
  criterion10_no_wave_guard();
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
