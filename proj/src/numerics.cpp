#include "semigen/numerics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace semigen {

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double xtol) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NoRootInRange("bisect_root: no sign change on the bracket");
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double golden_min(const std::function<double(double)>& f, double a, double b, double xtol) {
  constexpr double g = 0.6180339887498949;  // (sqrt(5)-1)/2
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

namespace {

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = f(0.5 * (a + m)), rm = f(0.5 * (m + b));
  const double left = simpson(fa, lm, fm, m - a);
  const double right = simpson(fm, rm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adapt(f, a, m, fa, lm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, rm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_quad(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
  return adapt(f, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), abs_tol, 48);
}

BoundaryMin periodic_min(const std::function<double(double)>& f, int samples, double xtol) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double step = two_pi / samples;
  int best = 0;
  double best_v = f(0.0);
  for (int i = 1; i < samples; ++i) {
    const double v = f(i * step);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  const double t = golden_min(f, best * step - step, best * step + step, xtol);
  const double v = f(t);
  if (v <= best_v) return {t, v};
  return {best * step, best_v};
}

}  // namespace semigen
