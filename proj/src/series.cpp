#include "semigen/series.hpp"

#include <algorithm>
#include <cmath>

namespace semigen {

cdouble eval(const PowerSeries& f, cdouble z) {
  const auto& c = f.coeffs();
  cdouble acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

PowerSeries derivative(const PowerSeries& f) {
  if (f.order() == 0) return PowerSeries(std::size_t{0});
  std::vector<cdouble> d(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) d[n - 1] = double(n) * f[n];
  return PowerSeries(std::move(d));
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n - i; ++j) out[i + j] += a[i] * b[j];
  return out;
}

PowerSeries reciprocal(const PowerSeries& f) {
  if (std::abs(f[0]) <= PowerSeries::kZeroTol)
    throw ZeroConstantTerm("reciprocal: constant term within 1e-12 of zero");
  std::size_t deg = 0;  // effective degree caps the convolution window
  for (std::size_t k = 0; k <= f.order(); ++k)
    if (f[k] != cdouble{0.0}) deg = k;
  PowerSeries r(f.order());
  r[0] = 1.0 / f[0];
  for (std::size_t n = 1; n <= f.order(); ++n) {
    cdouble s = 0.0;
    for (std::size_t k = 1; k <= std::min(n, deg); ++k) s += f[k] * r[n - k];
    r[n] = -s / f[0];
  }
  return r;
}

PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] * b[i];
  return out;
}

PowerSeries log_deriv_ratio(const PowerSeries& f) {
  if (!f.normalized()) throw BadNormalization("log_deriv_ratio: requires f(0)=0, f'(0)=1");
  const std::size_t n = f.order() - 1;
  PowerSeries num(n), den(n);  // z f'(z)/z and f(z)/z
  for (std::size_t k = 0; k <= n; ++k) {
    num[k] = double(k + 1) * f[k + 1];
    den[k] = f[k + 1];
  }
  return multiply(num, reciprocal(den));
}

PowerSeries exp_integral_transform(const PowerSeries& h) {
  if (std::abs(h[0]) > PowerSeries::kZeroTol)
    throw NonVanishingConstant("exp_integral_transform: requires h(0)=0");
  PowerSeries e(h.order());
  e[0] = 1.0;
  for (std::size_t n = 1; n <= h.order(); ++n) {
    cdouble s = 0.0;
    for (std::size_t k = 1; k <= n; ++k) s += h[k] * e[n - k];
    e[n] = s / double(n);
  }
  return e;
}

PowerSeries rescale(const PowerSeries& f, double r) {
  if (!(r > 0.0) || r > 1.0) throw BadRadius("rescale: r must lie in (0,1]");
  PowerSeries out(f.order());
  double p = 1.0 / r;  // c_n r^{n-1}
  for (std::size_t n = 0; n <= f.order(); ++n) {
    out[n] = f[n] * p;
    p *= r;
  }
  return out;
}

PowerSeries pad(const PowerSeries& f, std::size_t order) {
  if (order <= f.order()) return f;
  std::vector<cdouble> c = f.coeffs();
  c.resize(order + 1, 0.0);
  return PowerSeries(std::move(c));
}

PowerSeries divide_by_z(const PowerSeries& f) {
  if (std::abs(f[0]) > PowerSeries::kZeroTol)
    throw ZeroConstantTerm("divide_by_z: constant term must vanish");
  if (f.order() == 0) return PowerSeries(std::size_t{0});
  std::vector<cdouble> c(f.coeffs().begin() + 1, f.coeffs().end());
  return PowerSeries(std::move(c));
}

PowerSeries multiply_by_z(const PowerSeries& f) {
  std::vector<cdouble> c(f.order() + 2, 0.0);
  for (std::size_t n = 0; n <= f.order(); ++n) c[n + 1] = f[n];
  return PowerSeries(std::move(c));
}

}  // namespace semigen
