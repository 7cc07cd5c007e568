#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fstef {

// Adaptive Dormand-Prince 5(4) with a 4th-order dense-output interpolant
// and sign-change event location on the dense output. Forward integration
// only (z increasing).
template <std::size_t N>
class Dopri5 {
public:
  using State = std::array<double, N>;
  using Rhs = std::function<void(double, const State&, State&)>;
  using EventFn = std::function<double(double, const State&)>;

  struct Options {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h_init = 1e-4;
    double h_max = 1.0;
    std::size_t max_steps = 2'000'000;
  };

  // One accepted step with its interpolant coefficients.
  struct DenseStep {
    double z0 = 0.0;
    double h = 0.0;
    State r1{}, r2{}, r3{}, r4{}, r5{};

    State eval(double z) const {
      const double th = (z - z0) / h;
      const double th1 = 1.0 - th;
      State y{};
      for (std::size_t i = 0; i < N; ++i)
        y[i] = r1[i] + th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
      return y;
    }
  };

  struct Result {
    double z_end = 0.0;
    State y_end{};
    std::vector<DenseStep> steps;
    bool event_hit = false;

    State eval(double z) const {
      const DenseStep& s = locate(z);
      return s.eval(z);
    }

    const DenseStep& locate(double z) const {
      if (steps.empty()) throw std::runtime_error("empty trajectory");
      auto it = std::upper_bound(steps.begin(), steps.end(), z,
                                 [](double zz, const DenseStep& s) { return zz < s.z0; });
      if (it != steps.begin()) --it;
      return *it;
    }
  };

  // Integrates from (z0, y0) toward z1. If `event` is given, stops at the
  // first sign change of event(z, y) and sets event_hit.
  static Result integrate(const Rhs& f, State y0, double z0, double z1,
                          const Options& opt = {}, const EventFn& event = nullptr) {
    if (!(z1 > z0)) throw std::invalid_argument("Dopri5: need z1 > z0");
    Result res;
    res.steps.reserve(256);

    State y = y0, k1{}, k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, ytmp{}, ynew{};
    double z = z0;
    double h = std::min(opt.h_init, z1 - z0);
    f(z, y, k1);
    double g_prev = event ? event(z, y) : 0.0;

    for (std::size_t step = 0; step < opt.max_steps; ++step) {
      if (z >= z1) break;
      h = std::min(h, z1 - z);

      stage(f, z, y, h, k1, k2, k3, k4, k5, k6, k7, ytmp, ynew);

      // embedded error estimate
      double err = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                              e6 * k6[i] + e7 * k7[i]);
        const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        err += (e / sc) * (e / sc);
      }
      err = std::sqrt(err / N);

      if (err <= 1.0) {
        DenseStep ds = make_dense(z, h, y, ynew, k1, k3, k4, k5, k6, k7);
        res.steps.push_back(ds);

        if (event) {
          const double g_new = event(z + h, ynew);
          if (g_prev != 0.0 && g_new * g_prev < 0.0) {
            const double ze = locate_event(event, ds, z, z + h);
            res.z_end = ze;
            res.y_end = ds.eval(ze);
            res.event_hit = true;
            return res;
          }
          g_prev = g_new;
        }

        z += h;
        y = ynew;
        k1 = k7;  // FSAL
      }

      double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
      fac = std::clamp(fac, 0.2, 10.0);
      h = std::min(h * fac, opt.h_max);
      if (!(h > 0.0) || z + h == z)
        throw std::runtime_error("Dopri5: step size underflow");
    }
    if (z < z1) throw std::runtime_error("Dopri5: max step count exceeded");

    res.z_end = z;
    res.y_end = y;
    return res;
  }

private:
  static void stage(const Rhs& f, double z, const State& y, double h,
                    const State& k1, State& k2, State& k3, State& k4, State& k5,
                    State& k6, State& k7, State& ytmp, State& ynew) {
    auto comb = [&](State& out, std::initializer_list<std::pair<double, const State*>> terms) {
      for (std::size_t i = 0; i < N; ++i) {
        double acc = 0.0;
        for (const auto& [c, k] : terms) acc += c * (*k)[i];
        out[i] = y[i] + h * acc;
      }
    };
    comb(ytmp, {{a21, &k1}});
    f(z + c2 * h, ytmp, k2);
    comb(ytmp, {{a31, &k1}, {a32, &k2}});
    f(z + c3 * h, ytmp, k3);
    comb(ytmp, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
    f(z + c4 * h, ytmp, k4);
    comb(ytmp, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    f(z + c5 * h, ytmp, k5);
    comb(ytmp, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    f(z + h, ytmp, k6);
    comb(ynew, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
    f(z + h, ynew, k7);
  }

  static DenseStep make_dense(double z, double h, const State& y, const State& ynew,
                              const State& k1, const State& k3, const State& k4,
                              const State& k5, const State& k6, const State& k7) {
    DenseStep ds;
    ds.z0 = z;
    ds.h = h;
    for (std::size_t i = 0; i < N; ++i) {
      const double ydiff = ynew[i] - y[i];
      const double bspl = h * k1[i] - ydiff;
      ds.r1[i] = y[i];
      ds.r2[i] = ydiff;
      ds.r3[i] = bspl;
      ds.r4[i] = ydiff - h * k7[i] - bspl;
      ds.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                      d6 * k6[i] + d7 * k7[i]);
    }
    return ds;
  }

  static double locate_event(const EventFn& event, const DenseStep& ds, double lo, double hi) {
    double glo = event(lo, ds.eval(lo));
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (hi - lo < 1e-14 * std::max(1.0, std::abs(mid))) break;
      const double gm = event(mid, ds.eval(mid));
      if (gm == 0.0) return mid;
      if (gm * glo < 0.0) {
        hi = mid;
      } else {
        lo = mid;
        glo = gm;
      }
    }
    return 0.5 * (lo + hi);
  }

  // Dormand-Prince tableau
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                          a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  static constexpr double d1 = -12715105075.0 / 11282082432.0,
                          d3 = 87487479700.0 / 32700410799.0,
                          d4 = -10690763975.0 / 1880347072.0,
                          d5 = 701980252875.0 / 199316789632.0,
                          d6 = -1453857185.0 / 822651844.0,
                          d7 = 69997945.0 / 29380423.0;
};

}  // namespace fstef
