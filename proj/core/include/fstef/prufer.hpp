#pragma once

#include <cstdint>
#include <vector>

#include "fstef/profile.hpp"

namespace fstef {

// Point-spectrum machinery for the symmetrised eigenvalue problem
// q'' + (1 - c^2/4 - 2 u_c(z)) q = lambda q, q(-inf) = q(0) = 0,
// in polar (Prufer) coordinates q = r sin(theta), q_z = r cos(theta):
//   theta' = 1 - (c^2/4 + 2 u_c + lambda) sin^2(theta)
//   (log r)' = (c^2/4 + 2 u_c + lambda) sin(theta) cos(theta)
// An eigenvalue corresponds to theta(0; lambda) hitting a multiple of pi.

struct PruferSample {
  double z = 0.0;
  double theta = 0.0;  // continuous lift, no mod-pi reduction
  double r = 0.0;      // radius relative to the start point
};

struct PruferTrajectory {
  double lambda = 0.0;
  double theta_start = 0.0;  // asymptotic angle theta_{-inf}(lambda)
  double L = 0.0;            // requested truncation length
  std::vector<PruferSample> samples;  // uniform on [-L, 0]

  double theta_at_origin() const { return samples.back().theta; }
};

struct PruferOptions {
  double L = 40.0;
  int n = 2001;  // exported sample count (n points incl. both ends)
  double rtol = 1e-10;
  double atol = 1e-12;
};

struct OscillationReport {
  double c = 0.0;
  double lambda_inf = 0.0;
  std::vector<double> lambda_grid;
  std::vector<double> theta_at_origin;   // per grid value
  std::vector<std::uint8_t> crossing_free;   // per grid value
  std::vector<std::uint8_t> monotone_pairs;  // per adjacent pair
  bool squeeze_ok = false;
  bool no_point_spectrum = false;  // overall verdict for lambda >= 0
};

// theta_{-inf}(lambda) = arctan(2 / sqrt(c^2 + 4(lambda + 1))); defined for
// lambda > -1 - c^2/4, strictly decreasing in lambda.
double theta_minus_infinity(double c, double lambda);

// Integrates the angle flow from min(-L, profile z_min) to 0, starting at
// the far-field fixed point theta_{-inf}(lambda).
PruferTrajectory integrate_prufer(double c, double lambda, const WaveProfile& profile,
                                  const PruferOptions& opt = {});

// Number of multiples of pi crossed by theta along the trajectory.
int winding_count(const PruferTrajectory& traj);

// Smallest distance of theta to a multiple of pi over the samples.
double min_distance_to_pi_grid(const PruferTrajectory& traj);

OscillationReport oscillation_check(double c, const std::vector<double>& lambda_grid,
                                    double lambda_inf, const WaveProfile& profile,
                                    const PruferOptions& opt = {}, double tol = 1e-8);

// Bracketing scan for theta(0; lambda) in pi Z over [lambda_lo, lambda_hi].
std::vector<double> eigenvalue_scan(double c, double lambda_lo, double lambda_hi,
                                    const WaveProfile& profile,
                                    const PruferOptions& opt = {}, int grid_n = 201);

// Line-case contrast: the full-line Fisher-KPP front at lambda = 0 winds.
// Returns the winding count accumulated over length L past the u = 0
// crossing of the line heteroclinic.
int kpp_line_winding_demo(double c, double L);

// 41-point uniform grid on [0, lambda_inf].
std::vector<double> default_lambda_grid(double lambda_inf = 100.0, int n = 41);

}  // namespace fstef
