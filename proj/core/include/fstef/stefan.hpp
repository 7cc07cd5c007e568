#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fstef/profile.hpp"

namespace fstef {

// Front-fixed Fisher-Stefan solver. With xi = x / h(t) the PDE becomes
//   u_t = u_xixi / h^2 + xi (h'/h) u_xi + u (1 - u),  0 < xi < 1,
//   u_xi(0) = 0, u(1) = 0, h' = -(mu/h) u_xi(1).
// Diffusion is implicit (tridiagonal solve), advection and reaction explicit;
// h is advanced from the current field before each PDE step.

struct StefanParams {
  double h0 = 1.0;
  double mu = 1.0;
  double T = 10.0;
  double dt = 1e-3;
  int nx = 801;
  double record_dt = 0.05;    // trace/snapshot stride
  double blowup_guard = 10.0; // abort when max u exceeds this
  bool keep_snapshots = true;
};

struct StefanTracePoint {
  double t = 0.0;
  double h = 0.0;
  double hp = 0.0;    // h'
  double umax = 0.0;
};

struct StefanSnapshot {
  double t = 0.0;
  double h = 0.0;
  std::vector<double> u;  // on the uniform xi grid
};

struct StefanRun {
  StefanParams params;
  std::vector<StefanTracePoint> trace;
  std::vector<StefanSnapshot> snapshots;
};

enum class OutcomeKind { Vanishing, Spreading, Undecided };

struct RunOutcome {
  OutcomeKind kind = OutcomeKind::Undecided;
  double h_inf_est = 0.0;  // Vanishing
  double c_est = 0.0;      // Spreading
};

struct OutcomeThresholds {
  double vanish_umax = 1e-4;
  double tail_fraction = 0.2;
  double speed_sway = 0.01;  // relative spread of h' over the tail window
};

StefanRun simulate(const std::function<double(double)>& u0, const StefanParams& params);

RunOutcome detect_outcome(const StefanRun& run, const OutcomeThresholds& thr = {});

// (t, sup-norm) of |u - u_c| in the frame attached to the front, over
// z in [-min(h, L), 0], for each stored snapshot.
std::vector<std::pair<double, double>> moving_frame_compare(const StefanRun& run,
                                                            const WaveProfile& profile,
                                                            double L = 40.0);

struct DecayParams {
  double L = 40.0;
  int nz = 1601;
  double dt = 1e-3;
  double T = 8.0;
  double settle = 40.0;     // unperturbed relaxation to the discrete steady state
  double record_dt = 0.05;
  double fit_window = 0.5;  // tail fraction used for the log-linear fit
};

struct DecayReport {
  std::vector<double> times;
  std::vector<double> h1_norms;  // ||V - V_ref|| in the discrete H^1 norm
  double beta = 0.0;             // fitted decay rate (positive = decay)
  double r2 = 0.0;
  bool growth_detected = false;
};

// Evolves the wave-frame PDE U_t = U_zz + c U_z + U(1-U) on [-L, 0] with
// U(0) = 0 and U(-L) clamped to 1, from u_c plus a small perturbation, and
// fits the exponential decay of the H^1 distance to the relaxed wave.
DecayReport perturb_decay_experiment(double c, const WaveProfile& profile,
                                     const std::function<double(double)>& bump,
                                     double amplitude, const DecayParams& params = {});

std::string to_string(OutcomeKind k);

}  // namespace fstef
