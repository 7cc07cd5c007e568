#include "fstef/prufer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fstef/essential.hpp"
#include "fstef/ode.hpp"

namespace fstef {

namespace {

constexpr double kPi = std::numbers::pi;

double pi_branch(double theta) { return std::floor(theta / kPi); }

}  // namespace

double theta_minus_infinity(double c, double lambda) {
  if (c < 0) throw std::invalid_argument("theta_minus_infinity: c < 0");
  if (lambda <= q_essential_border(c))
    throw std::invalid_argument(
        "theta_minus_infinity: lambda at or below the essential spectrum");
  return std::atan(2.0 / std::sqrt(c * c + 4.0 * (lambda + 1.0)));
}

PruferTrajectory integrate_prufer(double c, double lambda, const WaveProfile& profile,
                                  const PruferOptions& opt) {
  if (profile.c != c)
    throw std::invalid_argument("integrate_prufer: profile speed mismatch");
  if (opt.n < 2) throw std::invalid_argument("integrate_prufer: n < 2");
  const double theta0 = theta_minus_infinity(c, lambda);

  // Start at the deeper of -L and the profile support so the frozen-angle
  // initialization sits where u_c is 1 to within the shooting offset.
  const double z_start = std::min(-opt.L, profile.z_min());

  using Ode = Dopri5<2>;  // [theta, log r]
  Ode::Rhs rhs = [c, lambda, &profile](double z, const Ode::State& y, Ode::State& dy) {
    const double u = z < 0.0 ? profile.u(z) : 0.0;
    const double K = c * c / 4.0 + 2.0 * u + lambda;
    const double s = std::sin(y[0]);
    dy[0] = 1.0 - K * s * s;
    dy[1] = K * s * std::cos(y[0]);
  };

  Ode::Options oopt;
  oopt.rtol = opt.rtol;
  oopt.atol = opt.atol;
  oopt.h_max = 0.5;
  const auto res = Ode::integrate(rhs, {theta0, 0.0}, z_start, 0.0, oopt);

  PruferTrajectory traj;
  traj.lambda = lambda;
  traj.theta_start = theta0;
  traj.L = opt.L;
  traj.samples.reserve(static_cast<std::size_t>(opt.n));
  const double logr_ref = res.eval(-opt.L)[1];
  for (int i = 0; i < opt.n; ++i) {
    const double z = -opt.L + opt.L * static_cast<double>(i) / (opt.n - 1);
    const auto y = i + 1 == opt.n ? res.y_end : res.eval(z);
    traj.samples.push_back({z, y[0], std::exp(y[1] - logr_ref)});
  }
  return traj;
}

int winding_count(const PruferTrajectory& traj) {
  int count = 0;
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    const double b0 = pi_branch(traj.samples[i - 1].theta);
    const double b1 = pi_branch(traj.samples[i].theta);
    count += static_cast<int>(std::abs(b1 - b0));
  }
  return count;
}

double min_distance_to_pi_grid(const PruferTrajectory& traj) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : traj.samples) {
    const double d = std::abs(s.theta - kPi * std::round(s.theta / kPi));
    best = std::min(best, d);
  }
  return best;
}

OscillationReport oscillation_check(double c, const std::vector<double>& lambda_grid,
                                    double lambda_inf, const WaveProfile& profile,
                                    const PruferOptions& opt, double tol) {
  if (lambda_grid.empty()) throw std::invalid_argument("oscillation_check: empty grid");
  for (const double l : lambda_grid)
    if (l < 0 || l > lambda_inf)
      throw std::invalid_argument("oscillation_check: grid outside [0, lambda_inf]");

  OscillationReport rep;
  rep.c = c;
  rep.lambda_inf = lambda_inf;
  rep.lambda_grid = lambda_grid;
  if (rep.lambda_grid.front() != 0.0) rep.lambda_grid.insert(rep.lambda_grid.begin(), 0.0);

  std::vector<PruferTrajectory> trajs;
  trajs.reserve(rep.lambda_grid.size());
  for (const double l : rep.lambda_grid) trajs.push_back(integrate_prufer(c, l, profile, opt));
  const PruferTrajectory top = integrate_prufer(c, lambda_inf, profile, opt);

  bool all_ok = true;
  for (const auto& t : trajs) {
    rep.theta_at_origin.push_back(t.theta_at_origin());
    const bool free = min_distance_to_pi_grid(t) > 0.0 && winding_count(t) == 0;
    rep.crossing_free.push_back(free ? 1 : 0);
    all_ok = all_ok && free;
  }
  if (!(min_distance_to_pi_grid(top) > 0.0 && winding_count(top) == 0)) all_ok = false;

  for (std::size_t i = 1; i < trajs.size(); ++i) {
    bool mono = true;
    for (std::size_t k = 0; k < trajs[i].samples.size(); ++k)
      mono = mono && trajs[i].samples[k].theta <= trajs[i - 1].samples[k].theta + tol;
    rep.monotone_pairs.push_back(mono ? 1 : 0);
    all_ok = all_ok && mono;
  }

  rep.squeeze_ok = true;
  for (const auto& t : trajs) {
    for (std::size_t k = 0; k < t.samples.size(); ++k) {
      const bool ok = top.samples[k].theta <= t.samples[k].theta + tol &&
                      t.samples[k].theta <= trajs.front().samples[k].theta + tol;
      rep.squeeze_ok = rep.squeeze_ok && ok;
    }
  }
  all_ok = all_ok && rep.squeeze_ok;

  rep.no_point_spectrum = all_ok;
  return rep;
}

std::vector<double> eigenvalue_scan(double c, double lambda_lo, double lambda_hi,
                                    const WaveProfile& profile, const PruferOptions& opt,
                                    int grid_n) {
  if (!(lambda_hi > lambda_lo))
    throw std::invalid_argument("eigenvalue_scan: empty interval");
  if (lambda_lo <= q_essential_border(c))
    throw std::invalid_argument("eigenvalue_scan: interval touches the essential spectrum");

  auto theta0 = [&](double l) {
    return integrate_prufer(c, l, profile, opt).theta_at_origin();
  };

  std::vector<double> eigs;
  double l_prev = lambda_lo;
  double t_prev = theta0(l_prev);
  for (int i = 1; i < grid_n; ++i) {
    const double l = lambda_lo + (lambda_hi - lambda_lo) * i / (grid_n - 1);
    const double t = theta0(l);
    if (pi_branch(t) != pi_branch(t_prev)) {
      // theta(0; lambda) crossed a multiple of pi: bracket each one
      const double lo_b = std::min(pi_branch(t), pi_branch(t_prev));
      const double hi_b = std::max(pi_branch(t), pi_branch(t_prev));
      for (double b = lo_b + 1; b <= hi_b; ++b) {
        const double target = b * kPi;
        double la = l_prev, lb = l, ta = t_prev;
        for (int it = 0; it < 100 && lb - la > 1e-10 * std::max(1.0, std::abs(lb)); ++it) {
          const double lm = 0.5 * (la + lb);
          const double tm = theta0(lm);
          if ((tm - target) * (ta - target) > 0) {
            la = lm;
            ta = tm;
          } else {
            lb = lm;
          }
        }
        eigs.push_back(0.5 * (la + lb));
      }
    }
    l_prev = l;
    t_prev = t;
  }
  return eigs;
}

int kpp_line_winding_demo(double c, double L) {
  if (c < 0 || c >= 2) throw std::invalid_argument("kpp_line_winding_demo: need 0 <= c < 2");
  if (!(L > 0)) throw std::invalid_argument("kpp_line_winding_demo: L <= 0");
  const double nu = unstable_eigenvalue(c);
  const double delta = 1e-8;

  using Ode = Dopri5<2>;
  Ode::Rhs front_rhs = [c](double, const Ode::State& y, Ode::State& dy) {
    dy[0] = y[1];
    dy[1] = -c * y[1] - y[0] * (1.0 - y[0]);
  };
  Ode::Options oopt;
  oopt.h_max = 0.1;
  Ode::EventFn crossing = [](double, const Ode::State& y) { return y[0]; };

  // leg 1: saddle to the u = 0 crossing; leg 2: onward into the spiral
  const auto leg1 =
      Ode::integrate(front_rhs, {1.0 - delta, -delta * nu}, 0.0, 60.0 / nu, oopt, crossing);
  if (!leg1.event_hit)
    throw std::runtime_error("kpp_line_winding_demo: front crossing not found");
  const double z_c = leg1.z_end;
  const auto leg2 = Ode::integrate(front_rhs, leg1.y_end, z_c, z_c + L, oopt);

  auto u_line = [&](double z) {
    if (z <= 0.0) return 1.0 - delta;
    if (z <= z_c) return leg1.eval(z)[0];
    return leg2.eval(std::min(z, z_c + L))[0];
  };

  Ode::Rhs angle_rhs = [c, &u_line](double z, const Ode::State& y, Ode::State& dy) {
    const double K = c * c / 4.0 + 2.0 * u_line(z);
    const double s = std::sin(y[0]);
    dy[0] = 1.0 - K * s * s;
    dy[1] = K * s * std::cos(y[0]);
  };
  const double theta0 = theta_minus_infinity(c, 0.0);
  const auto ang = Ode::integrate(angle_rhs, {theta0, 0.0}, 0.0, z_c + L, oopt);

  int count = 0;
  const int n = static_cast<int>((z_c + L) / 0.01);
  double prev = theta0;
  for (int i = 1; i <= n; ++i) {
    const double z = (z_c + L) * static_cast<double>(i) / n;
    const double th = i == n ? ang.y_end[0] : ang.eval(z)[0];
    count += static_cast<int>(std::abs(pi_branch(th) - pi_branch(prev)));
    prev = th;
  }
  return count;
}

std::vector<double> default_lambda_grid(double lambda_inf, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lambda_inf * i / (n - 1);
  return g;
}

}  // namespace fstef
