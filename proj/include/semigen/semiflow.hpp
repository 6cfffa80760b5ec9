#pragma once

#include <vector>

#include "semigen/series.hpp"

namespace semigen {

// Orbit of the initial value problem u' = -f(u), u(0) = z0, reported at
// evenly spaced sample times. A modulus crossing 1 + 1e-6 marks the input as
// not a generator at this truncation: integration stops, `escaped` is set,
// and only the samples reached so far are kept (all with |u| <= 1).
struct Trajectory {
  std::vector<double> times;
  std::vector<cdouble> points;
  cdouble z0 = 0.0;
  bool escaped = false;
  double escape_time = 0.0;  // meaningful only when escaped
};

// Adaptive Dormand-Prince 4(5) with local error per step <= step_tol and
// exact landing on the sample times. Throws StepUnderflow if the step
// collapses; requires |z0| < 1 and T > 0.
Trajectory integrate(const PowerSeries& f, cdouble z0, double T,
                     double step_tol = 1e-9, std::size_t samples = 64);

struct DecayCertificate {
  double rate_k = 0.0;
  double max_violation = 0.0;  // max over samples of |u| - |z0| e^{-kt}
  bool holds = false;          // max_violation <= tolerance used
};

// Checks |u(t_i)| <= |z0| e^{-k t_i} + tol at every recorded sample.
DecayCertificate verify_decay(const Trajectory& traj, double k, double tol = 1e-9);

// |u(t+s, z0) - u(t, u(s, z0))| via two independent integrations.
double verify_semigroup_law(const PowerSeries& f, cdouble z0, double t, double s,
                            double step_tol = 1e-9);

// u(horizon, z0); estimates the flow's attracting point (0 for the classes here).
cdouble wolff_limit(const PowerSeries& f, cdouble z0, double horizon,
                    double step_tol = 1e-9);

}  // namespace semigen
