#pragma once

#include <functional>

#include "semigen/errors.hpp"

namespace semigen {

// Root of a continuous sign-changing function on [lo, hi]; bisection to xtol.
// Throws NoRootInRange when f(lo) and f(hi) have the same strict sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol = 1e-12);

// Argmin of a unimodal function on [a, b]; golden-section to xtol.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double xtol = 1e-12);

// Adaptive Simpson quadrature with absolute error target.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-10);

struct BoundaryMin {
  double theta;
  double value;
};

// Minimum of a 2pi-periodic function: dense scan at `samples` points,
// then golden-section polish of the best bracket.
BoundaryMin periodic_min(const std::function<double(double)>& f, int samples = 2048,
                         double xtol = 1e-10);

}  // namespace semigen
