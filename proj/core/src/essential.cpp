#include "fstef/essential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fstef {

namespace {

std::complex<double> principal_root(double c, std::complex<double> lambda) {
  return std::sqrt(std::complex<double>(c * c + 4.0, 0.0) + 4.0 * lambda);
}

}  // namespace

std::complex<double> fredholm_border(double c, double k) {
  return {-k * k - 1.0, c * k};
}

std::vector<BorderSample> fredholm_border_curve(double c, double k_max, int n) {
  if (n < 2) throw std::invalid_argument("fredholm_border_curve: n < 2");
  std::vector<BorderSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double k = -k_max + 2.0 * k_max * i / (n - 1);
    out.push_back({k, fredholm_border(c, k)});
  }
  return out;
}

SpectralRegion classify_lambda(double c, std::complex<double> lambda, double tol) {
  const double gap = principal_root(c, lambda).real() - c;
  if (std::abs(gap) <= tol) return SpectralRegion::Border;
  return gap > 0 ? SpectralRegion::Resolvent : SpectralRegion::EssentialInterior;
}

double q_essential_border(double c) {
  if (c < 0) throw std::invalid_argument("q_essential_border: c < 0");
  return -1.0 - c * c / 4.0;
}

std::complex<double> greens_function(double c, std::complex<double> lambda, double x,
                                     double y) {
  if (x > 1e-12 || y > 1e-12)
    throw std::invalid_argument("greens_function: x, y must be <= 0");
  if (classify_lambda(c, lambda) != SpectralRegion::Resolvent)
    throw std::domain_error("greens_function: lambda not in the resolvent set");
  const std::complex<double> s = principal_root(c, lambda);

  // sinh expanded so that both exponents have non-positive real part
  std::complex<double> ep, em;
  if (x < y) {
    ep = (s * (x + y) + c * (y - x)) * 0.5;
    em = (x - y) * (s - c) * 0.5;
  } else {
    ep = (s * (x + y) + c * (y - x)) * 0.5;
    em = (y - x) * (s + c) * 0.5;
  }
  return (std::exp(ep) - std::exp(em)) / s;
}

namespace {

// cubic Lagrange interpolation through four uniformly spaced samples
double lagrange4(double y, const double ys[4], const double fs[4]) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    double li = fs[i];
    for (int j = 0; j < 4; ++j)
      if (j != i) li *= (y - ys[j]) / (ys[i] - ys[j]);
    acc += li;
  }
  return acc;
}

// 7-point Gauss-Legendre on [a, b]
template <typename F>
std::complex<double> gauss7(double a, double b, const F& phi) {
  static constexpr double xg[7] = {0.0,
                                   -0.4058451513773972, 0.4058451513773972,
                                   -0.7415311855993945, 0.7415311855993945,
                                   -0.9491079123427585, 0.9491079123427585};
  static constexpr double wg[7] = {0.4179591836734694,
                                   0.3818300505051189, 0.3818300505051189,
                                   0.2797053914892766, 0.2797053914892766,
                                   0.1294849661688697, 0.1294849661688697};
  const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
  std::complex<double> acc = 0.0;
  for (int g = 0; g < 7; ++g) acc += wg[g] * phi(mid + rad * xg[g]);
  return rad * acc;
}

}  // namespace

std::vector<std::complex<double>> apply_resolvent(double c, std::complex<double> lambda,
                                                  std::span<const double> f, double L,
                                                  std::span<const double> x_targets) {
  const std::size_t n = f.size();
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("apply_resolvent: need an odd number of nodes >= 3");
  if (!(L > 0)) throw std::invalid_argument("apply_resolvent: L <= 0");
  if (classify_lambda(c, lambda) != SpectralRegion::Resolvent)
    throw std::domain_error("apply_resolvent: lambda not in the resolvent set");

  const double h = L / static_cast<double>(n - 1);
  std::vector<double> w(n, 0.0);
  w[0] = w[n - 1] = h / 3.0;
  for (std::size_t j = 1; j + 1 < n; ++j) w[j] = (j % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
  auto node = [&](std::size_t j) { return -L + h * static_cast<double>(j); };

  std::vector<std::complex<double>> p;
  p.reserve(x_targets.size());
  for (const double x : x_targets) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (f[j] == 0.0) continue;
      acc += w[j] * f[j] * greens_function(c, lambda, x, node(j));
    }

    // G(x, .) has a derivative jump at y = x. When x falls inside a Simpson
    // panel, replace that panel's contribution with Gauss quadrature split at
    // the kink (f interpolated cubically), restoring O(h^4) accuracy.
    if (x > -L && x < 0.0) {
      const std::size_t j0 =
          std::min(2 * static_cast<std::size_t>((x + L) / (2.0 * h)), n - 3);
      const bool on_boundary = std::abs(x - node(j0)) < 1e-12 * L ||
                               std::abs(x - node(j0 + 2)) < 1e-12 * L;
      if (!on_boundary) {
        acc -= (h / 3.0) * (f[j0] * greens_function(c, lambda, x, node(j0)) +
                            4.0 * f[j0 + 1] * greens_function(c, lambda, x, node(j0 + 1)) +
                            f[j0 + 2] * greens_function(c, lambda, x, node(j0 + 2)));
        const std::size_t base = std::clamp<std::size_t>(j0, 1, n - 4) - 1;
        const double ys[4] = {node(base), node(base + 1), node(base + 2), node(base + 3)};
        const double fs[4] = {f[base], f[base + 1], f[base + 2], f[base + 3]};
        auto phi = [&](double y) {
          return lagrange4(y, ys, fs) * greens_function(c, lambda, x, y);
        };
        acc += gauss7(node(j0), x, phi) + gauss7(x, node(j0 + 2), phi);
      }
    }
    p.push_back(acc);
  }
  return p;
}

std::vector<std::complex<double>> apply_resolvent(double c, std::complex<double> lambda,
                                                  std::span<const double> f, double L) {
  std::vector<double> xs(f.size());
  const double h = L / static_cast<double>(f.size() - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = -L + h * static_cast<double>(i);
  return apply_resolvent(c, lambda, f, L, xs);
}

std::string to_string(SpectralRegion r) {
  switch (r) {
    case SpectralRegion::Resolvent: return "Resolvent";
    case SpectralRegion::Border: return "Border";
    case SpectralRegion::EssentialInterior: return "EssentialInterior";
  }
  return "?";
}

}  // namespace fstef
