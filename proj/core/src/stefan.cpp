#include "fstef/stefan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fstef {

namespace {

// Thomas solve for a constant-coefficient tridiagonal row pattern with
// custom first and last rows; overwrites rhs with the solution.
struct Tridiag {
  std::vector<double> a, b, c;  // sub, diag, super
  std::vector<double> cp, dp;   // scratch

  explicit Tridiag(std::size_t n) : a(n), b(n), c(n), cp(n), dp(n) {}

  void solve(std::vector<double>& d) {
    const std::size_t n = b.size();
    cp[0] = c[0] / b[0];
    dp[0] = d[0] / b[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double m = b[i] - a[i] * cp[i - 1];
      cp[i] = c[i] / m;
      dp[i] = (d[i] - a[i] * dp[i - 1]) / m;
    }
    d[n - 1] = dp[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) d[i] = dp[i] - cp[i] * d[i + 1];
  }
};

double one_sided_front_slope(const std::vector<double>& u, double dxi) {
  const std::size_t n = u.size();
  return (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * dxi);
}

struct LinearFit {
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  LinearFit f;
  const double denom = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0;
  const double mean_y = sy / n;
  double ss_tot = syy - n * mean_y * mean_y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.intercept + f.slope * x[i]);
    ss_res += e * e;
  }
  f.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return f;
}

}  // namespace

StefanRun simulate(const std::function<double(double)>& u0, const StefanParams& p) {
  if (!(p.h0 > 0) || !(p.mu > 0) || !(p.T > 0) || !(p.dt > 0))
    throw std::invalid_argument("simulate: h0, mu, T, dt must be positive");
  if (p.nx < 3) throw std::invalid_argument("simulate: nx < 3");

  const int nx = p.nx;
  const double dxi = 1.0 / (nx - 1);
  std::vector<double> u(static_cast<std::size_t>(nx));
  for (int i = 0; i < nx; ++i) u[static_cast<std::size_t>(i)] = u0(p.h0 * i * dxi);
  u.back() = 0.0;

  double h = p.h0;
  const auto nsteps = static_cast<long>(std::llround(p.T / p.dt));
  const long stride = std::max<long>(1, std::llround(p.record_dt / p.dt));

  StefanRun run;
  run.params = p;
  Tridiag tri(static_cast<std::size_t>(nx));
  std::vector<double> rhs(static_cast<std::size_t>(nx));

  auto record = [&](double t, double hp) {
    const double umax = *std::max_element(u.begin(), u.end());
    run.trace.push_back({t, h, hp, umax});
    if (p.keep_snapshots) run.snapshots.push_back({t, h, u});
  };

  for (long step = 0; step <= nsteps; ++step) {
    const double t = step * p.dt;
    const double hp = -(p.mu / h) * one_sided_front_slope(u, dxi);
    if (step % stride == 0 || step == nsteps) record(t, hp);
    if (step == nsteps) break;

    // advance the front first, then the field on the new domain
    h += p.dt * hp;
    if (!(h > 0)) throw std::runtime_error("simulate: front collapsed to h <= 0");

    const double adv_fac = hp / h;
    rhs[0] = u[0] + p.dt * u[0] * (1.0 - u[0]);
    for (int i = 1; i < nx - 1; ++i) {
      const auto k = static_cast<std::size_t>(i);
      const double adv = (i * dxi) * adv_fac * (u[k + 1] - u[k - 1]) / (2.0 * dxi);
      rhs[k] = u[k] + p.dt * (adv + u[k] * (1.0 - u[k]));
    }
    rhs.back() = 0.0;

    const double r = p.dt / (h * h * dxi * dxi);
    tri.b[0] = 1.0 + 2.0 * r;
    tri.c[0] = -2.0 * r;  // Neumann ghost u_{-1} = u_1
    for (int i = 1; i < nx - 1; ++i) {
      const auto k = static_cast<std::size_t>(i);
      tri.a[k] = -r;
      tri.b[k] = 1.0 + 2.0 * r;
      tri.c[k] = -r;
    }
    tri.a.back() = 0.0;
    tri.b.back() = 1.0;

    tri.solve(rhs);
    u.swap(rhs);
    u.back() = 0.0;

    if (*std::max_element(u.begin(), u.end()) > p.blowup_guard)
      throw std::runtime_error("simulate: blow-up guard tripped");
  }
  return run;
}

RunOutcome detect_outcome(const StefanRun& run, const OutcomeThresholds& thr) {
  if (run.trace.size() < 4) return {OutcomeKind::Undecided, 0.0, 0.0};
  const auto& trace = run.trace;

  if (trace.back().umax < thr.vanish_umax)
    return {OutcomeKind::Vanishing, trace.back().h, 0.0};

  const double t_end = trace.back().t;
  const double t_from = t_end * (1.0 - thr.tail_fraction);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
  std::size_t count = 0;
  for (const auto& pt : trace) {
    if (pt.t < t_from) continue;
    lo = std::min(lo, pt.hp);
    hi = std::max(hi, pt.hp);
    sum += pt.hp;
    ++count;
  }
  // A spreading verdict needs a developed front (bulk near the carrying
  // capacity) moving at a settled speed, not just a momentarily steady h'.
  if (count >= 5 && trace.back().umax > 0.5) {
    const double mean = sum / static_cast<double>(count);
    if (mean > 0 && (hi - lo) / mean <= thr.speed_sway)
      return {OutcomeKind::Spreading, 0.0, mean};
  }
  return {OutcomeKind::Undecided, 0.0, 0.0};
}

std::vector<std::pair<double, double>> moving_frame_compare(const StefanRun& run,
                                                            const WaveProfile& profile,
                                                            double L) {
  std::vector<std::pair<double, double>> history;
  const int m = 801;
  for (const auto& snap : run.snapshots) {
    if (snap.h < 1.0) continue;  // frame not meaningful yet
    const double zmax = std::min(snap.h, L);
    const int nx = static_cast<int>(snap.u.size());
    const double dxi = 1.0 / (nx - 1);
    double sup = 0.0;
    for (int j = 0; j <= m; ++j) {
      const double z = -zmax + zmax * j / m;
      const double xi = 1.0 + z / snap.h;
      const double s = xi / dxi;
      const int i = std::clamp(static_cast<int>(s), 0, nx - 2);
      const double frac = s - i;
      const double uval = (1.0 - frac) * snap.u[static_cast<std::size_t>(i)] +
                          frac * snap.u[static_cast<std::size_t>(i) + 1];
      sup = std::max(sup, std::abs(uval - profile.u(std::min(z, 0.0))));
    }
    history.emplace_back(snap.t, sup);
  }
  if (history.empty())
    throw std::runtime_error("moving_frame_compare: no snapshot with h >= 1");
  return history;
}

namespace {

// One IMEX step of U_t = U_zz + c U_z + U(1-U) on a fixed grid with
// U(-L) = 1, U(0) = 0.
void wave_frame_step(std::vector<double>& u, double c, double dz, double dt, Tridiag& tri,
                     std::vector<double>& rhs) {
  const std::size_t n = u.size();
  rhs[0] = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double adv = c * (u[i + 1] - u[i - 1]) / (2.0 * dz);
    rhs[i] = u[i] + dt * (adv + u[i] * (1.0 - u[i]));
  }
  rhs[n - 1] = 0.0;

  const double r = dt / (dz * dz);
  tri.b[0] = 1.0;
  tri.c[0] = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    tri.a[i] = -r;
    tri.b[i] = 1.0 + 2.0 * r;
    tri.c[i] = -r;
  }
  tri.a[n - 1] = 0.0;
  tri.b[n - 1] = 1.0;
  tri.solve(rhs);
  u.swap(rhs);
}

double h1_norm(const std::vector<double>& w, double dz) {
  double acc = 0.0;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    double wz;
    if (i == 0)
      wz = (w[1] - w[0]) / dz;
    else if (i + 1 == n)
      wz = (w[n - 1] - w[n - 2]) / dz;
    else
      wz = (w[i + 1] - w[i - 1]) / (2.0 * dz);
    acc += (w[i] * w[i] + wz * wz) * dz;
  }
  return std::sqrt(acc);
}

}  // namespace

DecayReport perturb_decay_experiment(double c, const WaveProfile& profile,
                                     const std::function<double(double)>& bump,
                                     double amplitude, const DecayParams& p) {
  if (profile.c != c)
    throw std::invalid_argument("perturb_decay_experiment: profile speed mismatch");
  const int nz = p.nz;
  const double dz = p.L / (nz - 1);
  auto zat = [&](int i) { return -p.L + dz * i; };

  std::vector<double> v(static_cast<std::size_t>(nz));
  for (int i = 0; i < nz; ++i) v[static_cast<std::size_t>(i)] = profile.u(std::min(zat(i), 0.0));
  v.front() = 1.0;
  v.back() = 0.0;

  Tridiag tri(static_cast<std::size_t>(nz));
  std::vector<double> rhs(static_cast<std::size_t>(nz));

  const auto settle_steps = static_cast<long>(std::llround(p.settle / p.dt));
  for (long s = 0; s < settle_steps; ++s) wave_frame_step(v, c, dz, p.dt, tri, rhs);
  const std::vector<double> v_ref = v;

  if (std::abs(bump(0.0)) > 1e-12)
    throw std::invalid_argument("perturb_decay_experiment: perturbation must vanish at z = 0");
  for (int i = 1; i < nz - 1; ++i)
    v[static_cast<std::size_t>(i)] += amplitude * bump(zat(i));
  v.front() = 1.0;
  v.back() = 0.0;

  DecayReport rep;
  const auto nsteps = static_cast<long>(std::llround(p.T / p.dt));
  const long stride = std::max<long>(1, std::llround(p.record_dt / p.dt));
  std::vector<double> w(static_cast<std::size_t>(nz));
  for (long s = 0; s <= nsteps; ++s) {
    if (s % stride == 0 || s == nsteps) {
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = v[i] - v_ref[i];
      rep.times.push_back(s * p.dt);
      rep.h1_norms.push_back(h1_norm(w, dz));
    }
    if (s == nsteps) break;
    wave_frame_step(v, c, dz, p.dt, tri, rhs);
  }

  if (rep.h1_norms.front() == 0.0) {
    rep.beta = 0.0;
    rep.r2 = 1.0;
    return rep;  // zero perturbation: nothing to fit
  }
  rep.growth_detected = rep.h1_norms.back() > 2.0 * rep.h1_norms.front();

  std::vector<double> tx, ly;
  const double t_from = p.T * (1.0 - p.fit_window);
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    if (rep.times[i] < t_from || rep.h1_norms[i] <= 0) continue;
    tx.push_back(rep.times[i]);
    ly.push_back(std::log(rep.h1_norms[i]));
  }
  if (tx.size() >= 3) {
    const LinearFit f = fit_line(tx, ly);
    rep.beta = -f.slope;
    rep.r2 = f.r2;
  }
  return rep;
}

std::string to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Vanishing: return "Vanishing";
    case OutcomeKind::Spreading: return "Spreading";
    case OutcomeKind::Undecided: return "Undecided";
  }
  return "?";
}

}  // namespace fstef
