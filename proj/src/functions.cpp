#include "semigen/functions.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

#include "semigen/errors.hpp"

namespace semigen {
namespace {

PowerSeries half_plane_extremal(std::size_t order) {
  // z(1+z)/(1-z) = z + 2z^2 + 2z^3 + ...
  std::vector<cdouble> c(order + 1, 2.0);
  c[0] = 0.0;
  if (order >= 1) c[1] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries starlike_non_generator(std::size_t order) {
  // z/(1-z+z^2); period-6 coefficients 1,1,0,-1,-1,0.
  PowerSeries den(pad(PowerSeries({1.0, -1.0, 1.0}), order));
  return multiply_by_z(reciprocal(den));
}

PowerSeries koebe(std::size_t order) {
  std::vector<cdouble> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = static_cast<double>(n);
  return PowerSeries(std::move(c));
}

PowerSeries u_lambda_extremal(double lambda, std::size_t order) {
  if (lambda < 0.0 || lambda > 1.0) throw BadParams("lambda must lie in [0,1]");
  PowerSeries den(pad(PowerSeries({1.0, 1.0 + lambda, lambda}), order));
  return multiply_by_z(reciprocal(den));
}

PowerSeries hypergeometric_extremal(double beta, std::size_t order) {
  if (beta < 0.0 || beta > 1.0) throw BadParams("beta must lie in [0,1]");
  std::vector<cdouble> c(order + 1, 0.0);
  if (order >= 1) c[1] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) {
    double dn = static_cast<double>(n);
    c[n] = 2.0 / (dn - (dn - 1.0) * beta);
  }
  return PowerSeries(std::move(c));
}

PowerSeries bernardi_kernel(cdouble gamma, std::size_t order) {
  if (gamma.real() < -0.5) throw BadParams("Re gamma must be >= -1/2");
  std::vector<cdouble> c(order + 1, 0.0);
  for (std::size_t n = 1; n <= order; ++n)
    c[n] = (1.0 + gamma) / (static_cast<double>(n) + gamma);
  return PowerSeries(std::move(c));
}

PowerSeries log_kernel(std::size_t order) {
  std::vector<cdouble> c(order + 1, 0.0);
  for (std::size_t n = 1; n <= order; ++n) c[n] = 1.0 / static_cast<double>(n);
  return PowerSeries(std::move(c));
}

PowerSeries xlog_kernel(cdouble x, std::size_t order) {
  if (std::abs(x) > 1.0 + 1e-12) throw BadParams("|x| must be <= 1");
  if (std::abs(x - 1.0) < 1e-12) throw BadParams("x = 1 is excluded");
  std::vector<cdouble> c(order + 1, 0.0);
  cdouble xn = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    xn *= x;
    c[n] = (1.0 - xn) / ((1.0 - x) * static_cast<double>(n));
  }
  return PowerSeries(std::move(c));
}

PowerSeries janowski_phi(double A, double B, std::size_t order) {
  if (!(B >= -1.0 && A <= 1.0 && B < A)) throw BadParams("need -1 <= B < A <= 1");
  // (1+Az)/(1+Bz) = 1 + (A-B) z sum_{k>=0} (-B)^k z^k.
  std::vector<cdouble> c(order + 1, 0.0);
  c[0] = 1.0;
  double p = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = (A - B) * p;
    p *= -B;
  }
  return PowerSeries(std::move(c));
}

PowerSeries two_point_herglotz(double theta, std::size_t order) {
  // (1-z^2)/(1-2cz+z^2), c = cos(theta); p_n = 2 cos(n theta).
  std::vector<cdouble> c(order + 1, 0.0);
  c[0] = 1.0;
  for (std::size_t n = 1; n <= order; ++n)
    c[n] = 2.0 * std::cos(static_cast<double>(n) * theta);
  return PowerSeries(std::move(c));
}

}  // namespace

PowerSeries make_named(NamedFunction id, const FunctionParams& p, std::size_t order) {
  switch (id) {
    case NamedFunction::HalfPlaneExtremal: return half_plane_extremal(order);
    case NamedFunction::StarlikeNonGenerator: return starlike_non_generator(order);
    case NamedFunction::Koebe: return koebe(order);
    case NamedFunction::ULambdaExtremal: return u_lambda_extremal(p.lambda, order);
    case NamedFunction::HypergeometricExtremal:
      return hypergeometric_extremal(p.beta, order);
    case NamedFunction::BernardiKernel: return bernardi_kernel(p.gamma, order);
    case NamedFunction::LogKernel: return log_kernel(order);
    case NamedFunction::XLogKernel: return xlog_kernel(p.x, order);
    case NamedFunction::MaMindaExtremal:
      return ma_minda_extremal(janowski_phi(p.A, p.B, order));
    case NamedFunction::TwoPointHerglotz: return two_point_herglotz(p.theta, order);
  }
  throw BadParams("unknown function id");
}

PowerSeries herglotz_p(const std::vector<HerglotzAtom>& atoms, std::size_t order) {
  if (atoms.empty()) throw BadParams("need at least one atom");
  double wsum = 0.0;
  for (const auto& a : atoms) {
    if (std::abs(std::abs(a.point) - 1.0) > 1e-12)
      throw BadParams("atom points must lie on the unit circle");
    if (!(a.weight > 0.0)) throw BadWeights("atom weights must be positive");
    wsum += a.weight;
  }
  if (std::abs(wsum - 1.0) > 1e-10) throw BadNormalization("weights must sum to 1");
  // p(z) = sum_j w_j (1 + cj z)/(1 - cj z), cj = conj(x_j); p_n = 2 sum_j w_j cj^n.
  std::vector<cdouble> c(order + 1, 0.0);
  c[0] = 1.0;
  for (const auto& a : atoms) {
    cdouble cj = std::conj(a.point);
    cdouble pw = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
      pw *= cj;
      c[n] += 2.0 * a.weight * pw;
    }
  }
  return PowerSeries(std::move(c));
}

PowerSeries solve_a_beta_from_p(const PowerSeries& p, double beta) {
  if (beta < 0.0 || beta > 1.0) throw BadParams("beta must lie in [0,1]");
  if (std::abs(p[0] - cdouble{1.0}) > 1e-12)
    throw BadNormalization("p(0) must equal 1");
  std::size_t order = p.order() + 1;
  std::vector<cdouble> a(order + 1, 0.0);
  if (order >= 1) a[1] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) {
    double dn = static_cast<double>(n);
    a[n] = p[n - 1] / (beta + dn * (1.0 - beta));
  }
  return PowerSeries(std::move(a));
}

PowerSeries ma_minda_extremal(const PowerSeries& phi) {
  if (std::abs(phi[0] - cdouble{1.0}) > 1e-12)
    throw BadNormalization("phi(0) must equal 1");
  std::vector<cdouble> h(phi.order() + 1, 0.0);
  for (std::size_t n = 1; n <= phi.order(); ++n) h[n] = phi[n];
  return multiply_by_z(exp_integral_transform(PowerSeries(std::move(h))));
}

PowerSeries generator_from_psi(const PowerSeries& psi) {
  if (std::abs(psi[0]) > 1e-12) throw BadNormalization("psi(0) must equal 0");
  return multiply_by_z(exp_integral_transform(psi));
}

}  // namespace semigen
