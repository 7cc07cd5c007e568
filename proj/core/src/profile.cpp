#include "fstef/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "fstef/ode.hpp"

namespace fstef {

namespace {

// interval index for Hermite interpolation on a uniform z-grid
std::size_t interval_index(const std::vector<WaveSample>& s, double z) {
  const double step = s[1].z - s[0].z;
  const double t = (z - s.front().z) / step;
  auto i = static_cast<std::ptrdiff_t>(t);
  i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(s.size()) - 2);
  return static_cast<std::size_t>(i);
}

}  // namespace

double WaveProfile::u(double z) const {
  if (z > 1e-12) throw std::out_of_range("WaveProfile::u: z > 0");
  if (z < z_min()) return 1.0;
  const std::size_t i = interval_index(samples, z);
  const WaveSample &a = samples[i], &b = samples[i + 1];
  const double h = b.z - a.z, t = (z - a.z) / h;
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
  return h00 * a.u + h * h10 * a.v + h01 * b.u + h * h11 * b.v;
}

double WaveProfile::v(double z) const {
  if (z > 1e-12) throw std::out_of_range("WaveProfile::v: z > 0");
  if (z < z_min()) return 0.0;
  const std::size_t i = interval_index(samples, z);
  const WaveSample &a = samples[i], &b = samples[i + 1];
  const double h = b.z - a.z, t = (z - a.z) / h;
  // v' at the nodes from the ODE: v' = -c v - u(1 - u)
  const double dva = -c * a.v - a.u * (1 - a.u);
  const double dvb = -c * b.v - b.u * (1 - b.u);
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
  return h00 * a.v + h * h10 * dva + h01 * b.v + h * h11 * dvb;
}

double unstable_eigenvalue(double c) {
  if (c < 0) throw std::invalid_argument("unstable_eigenvalue: c < 0");
  return (-c + std::sqrt(c * c + 4.0)) / 2.0;
}

ManifoldSeries manifold_series(double c, int order) {
  if (order < 2) throw std::invalid_argument("manifold_series: order < 2");
  const double nu = unstable_eigenvalue(c);
  ManifoldSeries s;
  s.nu = nu;
  s.order = order;
  s.coeffs.resize(static_cast<std::size_t>(order) - 1, 0.0);
  auto a = [&s](int j) -> double& { return s.coeffs[static_cast<std::size_t>(j) - 2]; };

  // Matching powers of w in (nu w + J) J' = w^2 - J/nu:
  //   n = 2:  a2 (2 nu + 1/nu) = 1
  //   n >= 3: a_n (n nu + 1/nu) = -sum_{j=2}^{n-1} (n+1-j) a_j a_{n+1-j}
  a(2) = nu / (1.0 + 2.0 * nu * nu);
  for (int n = 3; n <= order; ++n) {
    double conv = 0.0;
    for (int j = 2; j <= n - 1; ++j) conv += (n + 1 - j) * a(j) * a(n + 1 - j);
    a(n) = -nu * conv / (n * nu * nu + 1.0);
  }
  return s;
}

namespace {

// Horner over a_2..a_N, times w^2
double horner(const ManifoldSeries& series, double w) {
  double acc = 0.0;
  for (auto it = series.coeffs.rbegin(); it != series.coeffs.rend(); ++it)
    acc = acc * w + *it;
  return acc * w * w;
}

}  // namespace

ManifoldEvaluation evaluate_manifold(const ManifoldSeries& series, double w) {
  if (std::abs(w) > 1.0 + 1e-12)
    throw std::invalid_argument("evaluate_manifold: |w| > 1");
  ManifoldEvaluation out;
  out.value = horner(series, w);

  const int N = series.order;
  if (N >= 3 && w != 0.0) {
    const double tN = series.a(N) * std::pow(w, N);
    const double tN1 = series.a(N - 1) * std::pow(w, N - 1);
    out.last_term = tN;
    out.contracting = std::abs(tN) <= std::abs(tN1) || std::abs(tN) < 1e-15;
  }

  // The fold of the graph (nu w + J = 0) sits just beyond w = -1, so the raw
  // partial sums lose accuracy near the rim of the disc. When the truncation
  // tail at w is not negligible, restart from the germ at w0 = sign(w)/2 --
  // where the tail is ~|a_N| 2^-N -- and continue J along the invariance ODE.
  const bool tail_negligible =
      std::abs(out.last_term) <= 1e-12 * (1.0 + std::abs(out.value));
  if (N >= 8 && std::abs(w) > 0.55 && !tail_negligible) {
    const double w0 = w > 0 ? 0.5 : -0.5;
    const double j0 = horner(series, w0);
    const double nu = series.nu;
    const double span = w - w0;

    using Ode = Dopri5<1>;
    Ode::Rhs rhs = [nu, w0, span](double s, const Ode::State& y, Ode::State& dy) {
      const double ws = w0 + s * span;
      dy[0] = span * (ws * ws - y[0] / nu) / (nu * ws + y[0]);
    };
    Ode::Options opt;
    opt.rtol = 1e-12;
    opt.atol = 1e-14;
    opt.h_max = 0.05;
    out.value = Ode::integrate(rhs, {j0}, 0.0, 1.0, opt).y_end[0];
  }
  return out;
}

double mu_from_c(double c, int order) {
  if (c <= 0.0) throw std::invalid_argument("mu_from_c: c <= 0");
  if (c >= 2.0) throw std::invalid_argument("mu_from_c: no wave exists for c >= 2");
  const ManifoldSeries s = manifold_series(c, order);
  const double jm1 = evaluate_manifold(s, -1.0).value;
  return c / (s.nu - jm1);
}

double c_from_mu(double mu, int order) {
  if (mu <= 0.0) throw std::invalid_argument("c_from_mu: mu <= 0");
  // nu - J(-1) decays super-exponentially as c -> 2 and drops below the
  // double-precision noise floor near c ~ 1.97; stop safely short of that.
  const double c_lo = 1e-8, c_hi = 1.96;

  // monotonicity of mu(c) is checked, not assumed
  {
    double prev = mu_from_c(c_lo, order);
    for (int i = 1; i <= 64; ++i) {
      const double c = c_lo + (c_hi - c_lo) * i / 64.0;
      const double m = mu_from_c(c, order);
      if (m <= prev)
        throw std::runtime_error("c_from_mu: mu(c) not monotone on sampled grid");
      prev = m;
    }
  }

  const double mu_max = mu_from_c(c_hi, order);
  if (mu > mu_max)
    throw std::out_of_range("c_from_mu: mu exceeds computable range; largest resolvable c = " +
                            std::to_string(c_hi));
  if (mu < mu_from_c(c_lo, order)) return c_lo;

  double lo = c_lo, hi = c_hi;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (mu_from_c(mid, order) < mu ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double closed_form_u0(double z) {
  if (z > 1e-12) throw std::invalid_argument("closed_form_u0: z > 0");
  return 1.0 - 3.0 / (1.0 + 2.0 * std::cosh(z) - std::sqrt(3.0) * std::sinh(z));
}

WaveProfile shoot_profile(double c, const ShootOptions& opt) {
  if (c < 0) throw std::invalid_argument("shoot_profile: c < 0");
  if (!(opt.tol > 0)) throw std::invalid_argument("shoot_profile: tol <= 0");
  const double nu = unstable_eigenvalue(c);

  using Ode = Dopri5<2>;
  Ode::Rhs rhs = [c](double, const Ode::State& y, Ode::State& dy) {
    dy[0] = y[1];
    dy[1] = -c * y[1] - y[0] * (1.0 - y[0]);
  };
  // into quadrant IV along the unstable eigenvector (1, nu) of (1, 0)
  Ode::State y0{1.0 - opt.delta, -opt.delta * nu};

  Ode::Options oopt;
  oopt.rtol = opt.rtol;
  oopt.atol = opt.atol;
  oopt.h_init = 1e-4;
  oopt.h_max = 0.1;
  Ode::EventFn crossing = [](double, const Ode::State& y) { return y[0]; };

  const auto res = Ode::integrate(rhs, y0, 0.0, opt.z_span, oopt, crossing);
  if (!res.event_hit) {
    if (res.y_end[0] < 1e-4)
      throw NoCrossingError("shoot_profile: u decays to 0 without crossing (c >= 2)");
    throw std::runtime_error("shoot_profile: z_span exhausted before u reached 0");
  }

  const double z_cross = res.z_end;
  const auto m = static_cast<std::size_t>(std::floor(z_cross / opt.step));

  WaveProfile profile;
  profile.c = c;
  profile.samples.reserve(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    const double z = -static_cast<double>(m - k) * opt.step;  // shifted grid, front at 0
    const auto s = res.eval(z + z_cross);
    profile.samples.push_back({z, s[0], s[1]});
  }
  // pin the front sample to the located crossing
  profile.samples.back() = {0.0, 0.0, res.y_end[1]};
  return profile;
}

double profile_residual(const WaveProfile& profile, double z, double h) {
  const double upp = (profile.v(z + h) - profile.v(z - h)) / (2.0 * h);
  const double u = profile.u(z), v = profile.v(z);
  return std::abs(upp + profile.c * v + u * (1.0 - u));
}

}  // namespace fstef
