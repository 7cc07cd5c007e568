#pragma once

#include <string>
#include <vector>

namespace fstef {

// Exact spectrum of the linearization p_t = p_xx + p on [0, h_inf] with
// p_x(0) = p(h_inf) = 0: eigenfunctions cos((2n-1) pi x / (2 h_inf)) and
// eigenvalues 1 - (n - 1/2)^2 pi^2 / h_inf^2.

enum class VanishingVerdict { Stable, Marginal, Unstable };

struct VanishingClassification {
  VanishingVerdict verdict = VanishingVerdict::Stable;
  double lambda1 = 0.0;
};

struct VanishingSpectrum {
  double h_inf = 0.0;
  std::vector<double> eigenvalues;  // lambda_1..lambda_n
};

double vanishing_eigenvalue(int n, double h_inf);
double vanishing_eigenfunction(int n, double h_inf, double x);
VanishingSpectrum vanishing_spectrum(double h_inf, int n_max);

// Stable iff lambda_1 < 0, Marginal iff |lambda_1| <= marginal_tol.
VanishingClassification classify_vanishing(double h_inf, double marginal_tol = 1e-12);

// Unique h_inf with lambda_1 = 0 (= pi/2), located by bracketing.
double critical_length(double tol = 1e-12);

std::string to_string(VanishingVerdict v);

}  // namespace fstef
