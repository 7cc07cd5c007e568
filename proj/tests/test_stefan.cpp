#include <cmath>
#include <numbers>

#include <doctest.h>

#include "fstef/profile.hpp"
#include "fstef/stefan.hpp"

using namespace fstef;

namespace {

constexpr double kPi = std::numbers::pi;

StefanParams fast_params() {
  StefanParams p;
  p.dt = 2e-3;
  p.nx = 401;
  return p;
}

}  // namespace

TEST_CASE("zero initial data is an equilibrium") {
  StefanParams p = fast_params();
  p.h0 = 2.0;
  p.T = 1.0;
  const auto run = simulate([](double) { return 0.0; }, p);
  CHECK(run.trace.back().umax == 0.0);
  CHECK(run.trace.back().h == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(simulate([](double) { return 0.0; }, StefanParams{.h0 = -1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate([](double) { return 0.0; }, StefanParams{.nx = 2}),
                  std::invalid_argument);
}

TEST_CASE("short interval with small data vanishes below pi/2 + 0.05") {
  StefanParams p = fast_params();
  p.h0 = 1.0;
  p.mu = 1.0;
  p.T = 12.0;
  const auto run = simulate(
      [&](double x) { return 0.01 * std::cos(kPi * x / (2.0 * p.h0)); }, p);
  const auto outcome = detect_outcome(run);
  CHECK(outcome.kind == OutcomeKind::Vanishing);
  CHECK(outcome.h_inf_est <= kPi / 2 + 0.05);
}

TEST_CASE("long interval spreads at the speed selected by mu") {
  StefanParams p = fast_params();
  p.h0 = 4.0;
  p.mu = mu_from_c(1.0);
  p.T = 25.0;
  const auto run = simulate(
      [&](double x) { return 0.5 * std::cos(kPi * x / (2.0 * p.h0)); }, p);
  const auto outcome = detect_outcome(run);
  CHECK(outcome.kind == OutcomeKind::Spreading);
  CHECK(outcome.c_est == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("dichotomy corner: long interval, small data still spreads") {
  StefanParams p = fast_params();
  p.h0 = 4.0;
  p.mu = mu_from_c(1.0);
  p.T = 25.0;
  const auto run = simulate(
      [&](double x) { return 0.01 * std::cos(kPi * x / (2.0 * p.h0)); }, p);
  CHECK(detect_outcome(run).kind == OutcomeKind::Spreading);
}

TEST_CASE("too short a horizon is undecided") {
  StefanParams p = fast_params();
  p.h0 = 1.0;
  p.T = 0.01;
  p.record_dt = 0.002;
  const auto run = simulate(
      [&](double x) { return 0.01 * std::cos(kPi * x / 2.0); }, p);
  CHECK(detect_outcome(run).kind == OutcomeKind::Undecided);
}

TEST_CASE("scheme positivity and Stefan consistency") {
  StefanParams p = fast_params();
  p.h0 = 3.0;
  p.mu = 1.5;
  p.T = 5.0;
  const auto run = simulate(
      [&](double x) { return 0.4 * std::cos(kPi * x / (2.0 * p.h0)); }, p);

  for (const auto& snap : run.snapshots)
    for (const double u : snap.u) CHECK(u >= -1e-10);

  // recorded h' equals -mu * (one-sided u_x at the front) at every trace point
  const double dxi = 1.0 / (p.nx - 1);
  for (std::size_t i = 0; i < run.trace.size(); ++i) {
    const auto& snap = run.snapshots[i];
    const auto n = snap.u.size();
    const double uxi = (3.0 * snap.u[n - 1] - 4.0 * snap.u[n - 2] + snap.u[n - 3]) /
                       (2.0 * dxi);
    const double hp_expected = -(p.mu / snap.h) * uxi;
    CHECK(run.trace[i].hp == doctest::Approx(hp_expected).epsilon(1e-12));
  }
}

TEST_CASE("moving-frame comparison converges for the right speed only") {
  StefanParams p = fast_params();
  p.h0 = 4.0;
  p.mu = mu_from_c(1.0);
  p.T = 25.0;
  const auto run = simulate(
      [&](double x) { return 0.5 * std::cos(kPi * x / (2.0 * p.h0)); }, p);
  REQUIRE(detect_outcome(run).kind == OutcomeKind::Spreading);

  const auto right = moving_frame_compare(run, shoot_profile(1.0));
  CHECK(right.back().second < 0.05);
  // monotone decreasing after the transient
  const std::size_t half = right.size() / 2;
  for (std::size_t i = half + 1; i < right.size(); ++i)
    CHECK(right[i].second <= right[i - 1].second + 1e-6);

  const auto wrong = moving_frame_compare(run, shoot_profile(0.5));
  CHECK(wrong.back().second > 0.05);  // negative control
}

TEST_CASE("perturbation decay experiment") {
  const double c = 1.0;
  const auto profile = shoot_profile(c);
  DecayParams dp;
  dp.L = 20.0;
  dp.nz = 801;
  dp.settle = 32.0;
  dp.T = 6.0;
  auto bump = [](double z) { return z * std::exp(2.0 * z); };

  SUBCASE("zero perturbation stays put") {
    const auto rep = perturb_decay_experiment(c, profile, bump, 0.0, dp);
    for (const double n : rep.h1_norms) CHECK(n < 1e-10);
  }

  SUBCASE("small perturbations decay exponentially, rate independent of size") {
    const auto r1 = perturb_decay_experiment(c, profile, bump, 0.01, dp);
    CHECK(!r1.growth_detected);
    CHECK(r1.beta > 0.0);
    CHECK(r1.r2 >= 0.99);

    const auto r2 = perturb_decay_experiment(c, profile, bump, 0.005, dp);
    CHECK(r2.beta == doctest::Approx(r1.beta).epsilon(0.10));
  }

  SUBCASE("perturbation must vanish at the front") {
    auto bad = [](double) { return 1.0; };
    CHECK_THROWS_AS(perturb_decay_experiment(c, profile, bad, 0.01, dp),
                    std::invalid_argument);
  }
}
