#include <cmath>
#include <numbers>

#include <doctest.h>

#include "fstef/profile.hpp"

using namespace fstef;

TEST_CASE("unstable eigenvalue closed form") {
  CHECK(unstable_eigenvalue(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(unstable_eigenvalue(1.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(unstable_eigenvalue(2.0) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  CHECK_THROWS_AS(unstable_eigenvalue(-0.1), std::invalid_argument);

  // nu^2 + c nu - 1 = 0 to machine precision across speeds
  for (double c = 0.0; c <= 3.0; c += 0.125) {
    const double nu = unstable_eigenvalue(c);
    CHECK(std::abs(nu * nu + c * nu - 1.0) < 1e-14);
  }
}

TEST_CASE("manifold series matches the closed-form low-order coefficients") {
  // closed forms in terms of nu for a_2..a_5
  for (double c : {0.0, 0.25, 0.5, 1.0, 1.5, 1.9}) {
    const auto s = manifold_series(c, 6);
    const double nu = s.nu;
    const double n2 = nu * nu;
    const double a2 = nu / (1 + 2 * n2);
    const double a3 = -2 * nu * n2 / (std::pow(1 + 2 * n2, 2) * (1 + 3 * n2));
    const double a4 = 10 * std::pow(nu, 5) /
                      (std::pow(1 + 2 * n2, 3) * (1 + 3 * n2) * (1 + 4 * n2));
    const double a5 = -12 * std::pow(nu, 7) * (6 + 19 * n2) /
                      (std::pow(1 + 2 * n2, 4) * std::pow(1 + 3 * n2, 2) * (1 + 4 * n2) *
                       (1 + 5 * n2));
    CHECK(s.a(2) == doctest::Approx(a2).epsilon(1e-14));
    CHECK(s.a(3) == doctest::Approx(a3).epsilon(1e-13));
    CHECK(s.a(4) == doctest::Approx(a4).epsilon(1e-13));
    CHECK(s.a(5) == doctest::Approx(a5).epsilon(1e-12));
  }
}

TEST_CASE("manifold series point values") {
  const auto s0 = manifold_series(0.0, 5);  // nu = 1
  CHECK(s0.a(2) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(s0.a(3) == doctest::Approx(-1.0 / 18).epsilon(1e-14));

  const auto s15 = manifold_series(1.5, 3);  // nu = 0.5
  CHECK(s15.a(2) == doctest::Approx(1.0 / 3).epsilon(1e-15));

  CHECK_THROWS_AS(manifold_series(1.0, 1), std::invalid_argument);
}

TEST_CASE("alternating-sign pattern of the leading coefficients") {
  for (double c : {0.0, 0.3, 0.8, 1.2, 1.618}) {  // nu in (0, 1]
    const auto s = manifold_series(c, 5);
    CHECK(s.a(2) > 0);
    CHECK(s.a(3) < 0);
    CHECK(s.a(4) > 0);
    CHECK(s.a(5) < 0);
  }
}

TEST_CASE("manifold evaluation") {
  const auto s = manifold_series(0.0, 20);
  CHECK(evaluate_manifold(s, 0.0).value == 0.0);

  const auto s2 = manifold_series(0.0, 2);
  CHECK(evaluate_manifold(s2, -1.0).value == doctest::Approx(1.0 / 3).epsilon(1e-15));

  CHECK_THROWS_AS(evaluate_manifold(s, -1.5), std::invalid_argument);
  CHECK(evaluate_manifold(s, -1.0).contracting);
}

TEST_CASE("series and shooting give the same J(-1)") {
  for (double c : {0.25, 0.5, 1.0, 1.5}) {
    const auto s = manifold_series(c, 20);
    const double j_series = evaluate_manifold(s, -1.0).value;
    // sheared image of the shooting crossing: y(0) = v(0) + nu
    const auto profile = shoot_profile(c);
    const double j_shoot = profile.slope_at_origin() + s.nu;
    CHECK(std::abs(j_series - j_shoot) < 1e-6);
  }
}

TEST_CASE("sheared shooting samples lie on the manifold graph") {
  const double c = 0.5;
  const auto s = manifold_series(c, 20);
  const auto profile = shoot_profile(c);
  for (const auto& smp : profile.samples) {
    const double w = smp.u - 1.0;
    if (w < -0.6) continue;  // stay well inside the series radius
    const double y = smp.v - s.nu * w;
    CHECK(std::abs(y - evaluate_manifold(s, w).value) < 1e-8);
  }
}

TEST_CASE("mu_from_c validation and oracles") {
  CHECK_THROWS_AS(mu_from_c(0.0), std::invalid_argument);
  CHECK_THROWS_AS(mu_from_c(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(mu_from_c(2.0), std::invalid_argument);

  // continuity toward c -> 0+: numerator -> 0, denominator stays positive
  CHECK(mu_from_c(1e-4) > 0);
  CHECK(mu_from_c(1e-4) < 1e-3);

  // independent shooting oracle: mu = -c / u'(0)
  for (double c : {0.5, 1.5}) {
    const auto profile = shoot_profile(c);
    const double mu_shoot = -c / profile.slope_at_origin();
    CHECK(mu_from_c(c) == doctest::Approx(mu_shoot).epsilon(1e-6));
  }
}

TEST_CASE("c_from_mu round trips") {
  for (double c : {0.05, 0.5, 1.0}) {
    CHECK(c_from_mu(mu_from_c(c)) == doctest::Approx(c).epsilon(1e-6));
  }
  CHECK_THROWS_AS(c_from_mu(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(c_from_mu(1e12), std::out_of_range);
}

TEST_CASE("mu(c) is increasing on the sampled range") {
  double prev = 0.0;
  for (double c = 0.05; c < 1.999; c += 0.05) {
    const double m = mu_from_c(c);
    CHECK(m > prev);
    prev = m;
  }
}

TEST_CASE("closed-form standing wave") {
  CHECK(closed_form_u0(0.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(closed_form_u0(-40.0) == doctest::Approx(1.0).epsilon(1e-12));
  const double expected =
      1.0 - 3.0 / (1.0 + 2.0 * std::cosh(1.0) + std::sqrt(3.0) * std::sinh(1.0));
  CHECK(closed_form_u0(-1.0) == doctest::Approx(expected).epsilon(1e-15));

  // residual in the standing-wave ODE
  for (double z : {-0.5, -2.0, -5.0}) {
    const double h = 1e-4;
    const double upp =
        (closed_form_u0(z + h) - 2 * closed_form_u0(z) + closed_form_u0(z - h)) / (h * h);
    const double u = closed_form_u0(z);
    CHECK(std::abs(upp + u * (1.0 - u)) < 1e-6);
  }
}

TEST_CASE("shooting at c = 0 reproduces the closed form") {
  const auto profile = shoot_profile(0.0);
  double sup = 0.0;
  for (double z = -10.0; z <= 0.0; z += 0.01)
    sup = std::max(sup, std::abs(profile.u(z) - closed_form_u0(z)));
  CHECK(sup < 1e-8);
  CHECK(profile.slope_at_origin() ==
        doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-8));
}

TEST_CASE("no crossing for c >= 2") {
  CHECK_THROWS_AS(shoot_profile(2.5), NoCrossingError);
}

TEST_CASE("profile invariants") {
  for (double c : {0.0, 1.0, 1.9}) {
    const auto profile = shoot_profile(c);
    // shooting seeds a distance delta = 1e-8 from the saddle
    CHECK(std::abs(profile.samples.front().u - 1.0) <= 2e-8);
    CHECK(std::abs(profile.samples.front().v) <= 1e-7);
    CHECK(std::abs(profile.samples.back().u) <= 1e-8);
    CHECK(profile.samples.back().v < 0);

    // strictly decreasing, v <= 0
    for (std::size_t i = 1; i < profile.samples.size(); ++i) {
      CHECK(profile.samples[i].u < profile.samples[i - 1].u);
      CHECK(profile.samples[i].v <= 0);
      CHECK(profile.samples[i].u >= 0);
      CHECK(profile.samples[i].u < 1);
    }

    // ODE residual of the interpolated profile
    for (double z = profile.z_min() + 0.5; z < -0.5; z += 0.37)
      CHECK(profile_residual(profile, z) < 1e-6);
  }
}
