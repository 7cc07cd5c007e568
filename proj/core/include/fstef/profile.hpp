#pragma once

#include <stdexcept>
#include <vector>

namespace fstef {

// Travelling-wave machinery for u'' + c u' + u(1-u) = 0 on (-inf, 0],
// u(-inf) = 1, u(0) = 0, with 0 <= c < 2, and the mu <-> c relation
// mu = -c / u'(0).

struct WaveSample {
  double z;  // position, <= 0
  double u;  // amplitude
  double v;  // derivative u_z
};

// Sampled wave profile on [z_min, 0], uniform step, front at z = 0.
struct WaveProfile {
  double c = 0.0;
  std::vector<WaveSample> samples;  // ascending z, last sample at z = 0

  double z_min() const { return samples.front().z; }
  double slope_at_origin() const { return samples.back().v; }

  // Cubic Hermite interpolation from (u, v) samples; returns the far-field
  // state (u = 1, v = 0) for z < z_min. Rejects z > 0.
  double u(double z) const;
  double v(double z) const;
};

// Coefficients a_2..a_N of the unstable-manifold graph y = J(w) in the
// shifted/sheared phase plane, J(w) = sum_{j>=2} a_j w^j.
struct ManifoldSeries {
  double nu = 0.0;
  int order = 0;
  std::vector<double> coeffs;  // coeffs[j-2] = a_j, j = 2..order

  double a(int j) const { return coeffs.at(static_cast<std::size_t>(j) - 2); }
};

struct ManifoldEvaluation {
  double value = 0.0;
  bool contracting = true;  // successive partial sums shrink at this w
  double last_term = 0.0;
};

// Thrown by shoot_profile when the trajectory decays to u = 0 without
// crossing it (no wave exists, c >= 2).
class NoCrossingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ShootOptions {
  double delta = 1e-8;   // initial distance from the saddle (1, 0)
  double rtol = 1e-10;
  double atol = 1e-12;
  double z_span = 400.0; // maximum integration length
  double step = 0.01;    // export grid spacing
  double tol = 1e-8;     // endpoint tolerance recorded in the profile
};

// Unstable eigenvalue of the saddle (1,0): nu = (-c + sqrt(c^2 + 4)) / 2,
// the positive root of nu^2 + c nu - 1 = 0.
double unstable_eigenvalue(double c);

// Solve the invariance condition (nu w + J) J' = w^2 - J/nu order by order.
ManifoldSeries manifold_series(double c, int order);

// Evaluate J(w) for |w| <= 1. Well inside the disc of convergence the series
// is summed directly; when the truncation tail at w is not negligible the
// manifold is continued from w0 = sign(w)/2 along its own invariance ODE
// dJ/dw = (w^2 - J/nu)/(nu w + J), which stays regular up to the fold just
// beyond w = -1 and recovers the accuracy the raw partial sums lose there.
ManifoldEvaluation evaluate_manifold(const ManifoldSeries& series, double w);

// mu = c / (nu - J(-1)); valid for 0 < c < 2.
double mu_from_c(double c, int order = 20);

// Inverse of mu_from_c by bracketing (monotonicity checked numerically).
double c_from_mu(double mu, int order = 20);

// Exact standing-wave solution (c = 0): 1 - 3/(1 + 2cosh z - sqrt(3) sinh z).
double closed_form_u0(double z);

// Phase-plane shooting from near the saddle along its unstable eigenvector
// into quadrant IV; the u = 0 crossing is relocated to z = 0.
WaveProfile shoot_profile(double c, const ShootOptions& opt = {});

// ODE residual |u'' + c u' + u(1-u)| of the interpolated profile at z,
// with u'' from centred differencing of v.
double profile_residual(const WaveProfile& profile, double z, double h = 1e-4);

}  // namespace fstef
