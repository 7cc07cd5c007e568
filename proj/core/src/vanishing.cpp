#include "fstef/vanishing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fstef {

double vanishing_eigenvalue(int n, double h_inf) {
  if (n < 1) throw std::invalid_argument("vanishing_eigenvalue: n < 1");
  if (!(h_inf > 0)) throw std::invalid_argument("vanishing_eigenvalue: h_inf <= 0");
  const double k = (n - 0.5) * std::numbers::pi / h_inf;
  return 1.0 - k * k;
}

double vanishing_eigenfunction(int n, double h_inf, double x) {
  if (n < 1) throw std::invalid_argument("vanishing_eigenfunction: n < 1");
  if (!(h_inf > 0)) throw std::invalid_argument("vanishing_eigenfunction: h_inf <= 0");
  if (x < 0 || x > h_inf)
    throw std::out_of_range("vanishing_eigenfunction: x outside [0, h_inf]");
  return std::cos((2 * n - 1) * std::numbers::pi * x / (2.0 * h_inf));
}

VanishingSpectrum vanishing_spectrum(double h_inf, int n_max) {
  if (n_max < 1) throw std::invalid_argument("vanishing_spectrum: n_max < 1");
  VanishingSpectrum s;
  s.h_inf = h_inf;
  s.eigenvalues.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) s.eigenvalues.push_back(vanishing_eigenvalue(n, h_inf));
  return s;
}

VanishingClassification classify_vanishing(double h_inf, double marginal_tol) {
  VanishingClassification out;
  out.lambda1 = vanishing_eigenvalue(1, h_inf);
  if (std::abs(out.lambda1) <= marginal_tol)
    out.verdict = VanishingVerdict::Marginal;
  else
    out.verdict = out.lambda1 < 0 ? VanishingVerdict::Stable : VanishingVerdict::Unstable;
  return out;
}

double critical_length(double tol) {
  double lo = 1.0, hi = 2.0;  // lambda1(1) < 0 < lambda1(2) in h
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (vanishing_eigenvalue(1, mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::string to_string(VanishingVerdict v) {
  switch (v) {
    case VanishingVerdict::Stable: return "Stable";
    case VanishingVerdict::Marginal: return "Marginal";
    case VanishingVerdict::Unstable: return "Unstable";
  }
  return "?";
}

}  // namespace fstef
