#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace fstef {

// Essential-spectrum geometry of the far-field operator
// Linf p = p_zz + c p_z - p on L^2(R^-) with p(0) = 0:
// Fredholm border lambda = -k^2 - 1 + i c k, resolvent to its right.

enum class SpectralRegion { Resolvent, Border, EssentialInterior };

struct BorderSample {
  double k = 0.0;
  std::complex<double> lambda;
};

std::complex<double> fredholm_border(double c, double k);

std::vector<BorderSample> fredholm_border_curve(double c, double k_max, int n);

// Region test via the sign of Re(sqrt(c^2 + 4 lambda + 4)) - c (principal
// branch), which also covers the degenerate c = 0 ray.
SpectralRegion classify_lambda(double c, std::complex<double> lambda, double tol = 1e-12);

// Left edge of the essential spectrum of the symmetrised (q) operator:
// -1 - c^2/4.
double q_essential_border(double c);

// Green's function of Linf - lambda; requires lambda in the resolvent set
// and x, y <= 0.
std::complex<double> greens_function(double c, std::complex<double> lambda, double x,
                                     double y);

// p(x) = int_{-L}^0 G(x; y, lambda) f(y) dy by composite Simpson.
// f sampled uniformly on [-L, 0] with an odd number of nodes.
std::vector<std::complex<double>> apply_resolvent(double c, std::complex<double> lambda,
                                                  std::span<const double> f, double L,
                                                  std::span<const double> x_targets);

// Full-grid convenience overload (targets = the f grid).
std::vector<std::complex<double>> apply_resolvent(double c, std::complex<double> lambda,
                                                  std::span<const double> f, double L);

std::string to_string(SpectralRegion r);

}  // namespace fstef
