#include "semigen/semiflow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "semigen/errors.hpp"

namespace semigen {
namespace {

constexpr double kEscape = 1.0 + 1e-6;

// Dormand-Prince 4(5) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                 e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                 e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

struct Step {
  cdouble u;
  double err;
};

template <typename Rhs>
Step dp45(const Rhs& rhs, cdouble u, double h) {
  const cdouble k1 = rhs(u);
  const cdouble k2 = rhs(u + h * (a21 * k1));
  const cdouble k3 = rhs(u + h * (a31 * k1 + a32 * k2));
  const cdouble k4 = rhs(u + h * (a41 * k1 + a42 * k2 + a43 * k3));
  const cdouble k5 = rhs(u + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
  const cdouble k6 = rhs(u + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
  const cdouble u5 = u + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
  const cdouble k7 = rhs(u5);
  const cdouble err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
  return {u5, std::abs(err)};
}

}  // namespace

Trajectory integrate(const PowerSeries& f, cdouble z0, double T, double step_tol,
                     std::size_t samples) {
  if (!(std::abs(z0) < 1.0)) throw BadParams("start point must satisfy |z0| < 1");
  if (!(T > 0.0)) throw BadParams("horizon T must be positive");
  if (!(step_tol > 0.0)) throw BadParams("step_tol must be positive");
  if (samples < 1) throw BadParams("need at least one sample");

  const auto rhs = [&f](cdouble u) { return -eval(f, u); };

  Trajectory traj;
  traj.z0 = z0;
  traj.times.push_back(0.0);
  traj.points.push_back(z0);

  cdouble u = z0;
  double t = 0.0;
  double h = std::min(0.01, T / static_cast<double>(samples));
  for (std::size_t i = 1; i <= samples; ++i) {
    const double ts = T * static_cast<double>(i) / static_cast<double>(samples);
    while (t < ts) {
      const double h_try = std::min(h, ts - t);
      const Step s = dp45(rhs, u, h_try);
      if (s.err <= step_tol) {
        u = s.u;
        t += h_try;
        if (std::abs(u) > kEscape) {
          traj.escaped = true;
          traj.escape_time = t;
          return traj;
        }
      }
      const double scale =
          s.err > 0.0 ? 0.9 * std::pow(step_tol / s.err, 0.2) : 5.0;
      h = h_try * std::clamp(scale, 0.2, 5.0);
      if (h < 1e-14 * std::max(1.0, t))
        throw StepUnderflow("step size collapsed; right-hand side too stiff here");
    }
    traj.times.push_back(ts);
    traj.points.push_back(u);
  }
  return traj;
}

DecayCertificate verify_decay(const Trajectory& traj, double k, double tol) {
  if (k < 0.0) throw BadParams("rate must be nonnegative");
  DecayCertificate cert;
  cert.rate_k = k;
  const double mod0 = std::abs(traj.z0);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    worst = std::max(worst, std::abs(traj.points[i]) - mod0 * std::exp(-k * traj.times[i]));
  cert.max_violation = worst;
  cert.holds = worst <= tol;
  return cert;
}

double verify_semigroup_law(const PowerSeries& f, cdouble z0, double t, double s,
                            double step_tol) {
  if (t < 0.0 || s < 0.0) throw BadParams("times must be nonnegative");
  if (t == 0.0 && s == 0.0) return 0.0;
  const auto endpoint = [&](cdouble start, double horizon) {
    if (horizon == 0.0) return start;
    const Trajectory traj = integrate(f, start, horizon, step_tol, 1);
    if (traj.escaped) throw EscapedDisk("flow left the disk during the law check");
    return traj.points.back();
  };
  const cdouble direct = endpoint(z0, t + s);
  const cdouble composed = endpoint(endpoint(z0, s), t);
  return std::abs(direct - composed);
}

cdouble wolff_limit(const PowerSeries& f, cdouble z0, double horizon, double step_tol) {
  const Trajectory traj = integrate(f, z0, horizon, step_tol, 8);
  if (traj.escaped) throw EscapedDisk("flow left the disk; no attracting point estimate");
  return traj.points.back();
}

}  // namespace semigen
