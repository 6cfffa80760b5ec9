#include "semigen/membership.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "semigen/errors.hpp"

namespace semigen {
namespace {

constexpr double kPi = std::numbers::pi;

// Applies fn to every grid point z = r e^{i theta}.
template <typename Fn>
void for_each_grid_point(const GridSpec& grid, Fn&& fn) {
  const double step = 2.0 * kPi / static_cast<double>(grid.angular_samples);
  for (double r : grid.radii)
    for (std::size_t j = 0; j < grid.angular_samples; ++j)
      fn(std::polar(r, static_cast<double>(j) * step));
}

MembershipReport report_from_min(double margin, double witness_min, cdouble witness_point,
                                 std::string functional) {
  MembershipReport rep;
  rep.member = witness_min > margin;
  rep.witness_min = witness_min;
  rep.witness_point = witness_point;
  rep.functional = std::move(functional);
  return rep;
}

}  // namespace

void GridSpec::validate() const {
  if (radii.empty()) throw BadParams("grid needs at least one radius");
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0)) throw BadParams("grid radii must lie in (0,1)");
  if (angular_samples < 8) throw BadParams("grid needs at least 8 angular samples");
  if (margin < 0.0) throw BadParams("grid margin must be nonnegative");
}

MembershipReport check_a_beta(const PowerSeries& f, double beta, const GridSpec& grid) {
  if (beta < 0.0 || beta > 1.0) throw BadParams("beta must lie in [0,1]");
  grid.validate();
  // beta f/z + (1-beta) f' has coefficients (beta + (1-beta)(n+1)) a_{n+1}.
  PowerSeries fun(f.order() >= 1 ? f.order() - 1 : 0);
  for (std::size_t n = 0; n + 1 <= f.order(); ++n)
    fun[n] = (beta + (1.0 - beta) * static_cast<double>(n + 1)) * f[n + 1];
  double best = std::numeric_limits<double>::infinity();
  cdouble at = 0.0;
  for_each_grid_point(grid, [&](cdouble z) {
    const double v = eval(fun, z).real();
    if (v < best) {
      best = v;
      at = z;
    }
  });
  return report_from_min(grid.margin, best, at, "min Re(beta f/z + (1-beta) f')");
}

std::pair<bool, double> coeff_sufficient_a_beta(const PowerSeries& f, double beta,
                                                CoeffVariant variant) {
  if (beta < 0.0 || beta > 1.0) throw BadParams("beta must lie in [0,1]");
  cdouble acc = 0.0;
  double abs_acc = 0.0;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    const double dn = static_cast<double>(n);
    const cdouble c =
        (dn * (beta - 1.0) - beta) * f.at(n) + (dn * (1.0 - beta) + 1.0) * f.at(n + 1);
    acc += c;
    abs_acc += std::abs(c);
  }
  const double value =
      variant == CoeffVariant::LiteralTelescoped ? std::abs(acc) : abs_acc;
  return {value <= 1.0 + 1e-12, value};
}

MembershipReport hadamard_criterion_a_beta(const PowerSeries& f, double beta,
                                           std::size_t zeta_samples, const GridSpec& grid) {
  if (beta < 0.0 || beta > 1.0) throw BadParams("beta must lie in [0,1]");
  if (zeta_samples < 16) throw BadParams("need at least 16 zeta samples");
  grid.validate();

  // Convolving with K(z) = z(1 - beta z)/(1-z)^2 (coefficients n(1-beta)+beta)
  // gives z (beta f/z + (1-beta) f'); the criterion asks that this never meets
  // w(zeta) z for unimodular zeta != 1, where w = (1+zeta)/(1-zeta) sweeps the
  // imaginary axis. Work with G = (f*K)/z and measure |z| |G(z) - w|.
  PowerSeries K(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n)
    K[n] = static_cast<double>(n) * (1.0 - beta) + beta;
  const PowerSeries G = divide_by_z(hadamard(f, K));

  // Admissible w values are i cot(psi/2) with |psi| >= 2 pi / zeta_samples.
  std::vector<double> cots(zeta_samples - 1);
  for (std::size_t k = 1; k < zeta_samples; ++k)
    cots[k - 1] = 1.0 / std::tan(kPi * static_cast<double>(k) /
                                 static_cast<double>(zeta_samples));
  std::sort(cots.begin(), cots.end());
  const double cot_max = cots.back();

  const auto dist_to_sampled = [&](double y) {
    auto it = std::lower_bound(cots.begin(), cots.end(), y);
    double d = std::numeric_limits<double>::infinity();
    if (it != cots.end()) d = std::min(d, std::abs(*it - y));
    if (it != cots.begin()) d = std::min(d, std::abs(*std::prev(it) - y));
    return d;
  };

  double best = std::numeric_limits<double>::infinity();
  cdouble at = 0.0;
  const auto consider = [&](cdouble z, cdouble g, bool continuum_w) {
    const double y = g.imag();
    const double dy =
        continuum_w ? std::max(0.0, std::abs(y) - cot_max) : dist_to_sampled(y);
    const double d = std::abs(z) * std::hypot(g.real(), dy);
    if (d < best) {
      best = d;
      at = z;
    }
  };

  const double step = 2.0 * kPi / static_cast<double>(grid.angular_samples);
  for (double r : grid.radii) {
    std::vector<double> re(grid.angular_samples);
    for (std::size_t j = 0; j < grid.angular_samples; ++j) {
      const cdouble z = std::polar(r, static_cast<double>(j) * step);
      const cdouble g = eval(G, z);
      re[j] = g.real();
      consider(z, g, false);
    }
    // A sign change of Re G along the ring pins a point where G is purely
    // imaginary, hence (for zeta dense enough) a zero of the convolution.
    for (std::size_t j = 0; j < grid.angular_samples; ++j) {
      const std::size_t jn = (j + 1) % grid.angular_samples;
      if ((re[j] > 0.0) == (re[jn] > 0.0)) continue;
      double lo = static_cast<double>(j) * step, hi = lo + step;
      for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((eval(G, std::polar(r, mid)).real() > 0.0) == (re[j] > 0.0))
          lo = mid;
        else
          hi = mid;
      }
      const double theta = 0.5 * (lo + hi);
      consider(std::polar(r, theta), eval(G, std::polar(r, theta)), true);
    }
  }
  return report_from_min(grid.margin, best, at, "min |f * (K - w z)| over zeta, z");
}

MembershipReport check_u_lambda(const PowerSeries& f, double lambda, const GridSpec& grid) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw BadParams("lambda must lie in (0,1]");
  grid.validate();
  const PowerSeries df = derivative(f);
  double worst = 0.0;
  cdouble at = 0.0;
  for_each_grid_point(grid, [&](cdouble z) {
    const cdouble fz = eval(f, z);
    const cdouble ratio = z / fz;  // near-zeros of f blow this up and fail the test
    const double v = std::abs(eval(df, z) * ratio * ratio - 1.0);
    if (v > worst) {
      worst = v;
      at = z;
    }
  });
  return report_from_min(grid.margin, lambda - worst, at, "lambda - max |f'(z)(z/f)^2 - 1|");
}

MembershipReport check_bs_subordination(const PowerSeries& f, double alpha,
                                        const GridSpec& grid) {
  if (alpha < 0.0 || alpha >= 1.0) throw BadParams("alpha must lie in [0,1)");
  grid.validate();
  const PowerSeries df = derivative(f);
  double worst = 0.0;
  cdouble at = 0.0;
  for_each_grid_point(grid, [&](cdouble z) {
    const cdouble w = z * eval(df, z) / eval(f, z) - 1.0;
    double mod;
    if (alpha == 0.0 || std::abs(w) == 0.0) {
      mod = std::abs(w);
    } else {
      // Preimages of w under v -> v/(1 - alpha v^2); the branch with
      // v -> w as alpha -> 0 is (-1 + sqrt(1 + 4 alpha w^2))/(2 alpha w).
      const cdouble disc = std::sqrt(1.0 + 4.0 * alpha * w * w);
      const cdouble v1 = (-1.0 + disc) / (2.0 * alpha * w);
      const cdouble v2 = (-1.0 - disc) / (2.0 * alpha * w);
      mod = std::min(std::abs(v1), std::abs(v2));
    }
    if (mod > worst) {
      worst = mod;
      at = z;
    }
  });
  return report_from_min(grid.margin, 1.0 - worst, at, "1 - max |target preimage of zf'/f - 1|");
}

double inclusion_rate_from_psi(const PowerSeries& psi, const GridSpec& grid) {
  grid.validate();
  const PowerSeries E = exp_integral_transform(psi);
  double best = std::numeric_limits<double>::infinity();
  for_each_grid_point(grid, [&](cdouble z) { best = std::min(best, eval(E, z).real()); });
  return best;
}

double inclusion_rate_from_phi(const PowerSeries& phi, const GridSpec& grid) {
  if (std::abs(phi[0] - cdouble{1.0}) > 1e-12)
    throw BadNormalization("phi(0) must equal 1");
  PowerSeries h = phi;
  h[0] = 0.0;
  return inclusion_rate_from_psi(h, grid);
}

double sector_extension_angle(const PowerSeries& f, const GridSpec& grid) {
  grid.validate();
  double sup = 0.0;
  for_each_grid_point(grid, [&](cdouble z) {
    const cdouble q = eval(f, z) / z;
    if (std::abs(q) < 1e-12)
      throw ArgUndefined("f(z)/z vanishes on the grid; no sector angle");
    sup = std::max(sup, std::abs(std::arg(q)));
  });
  return std::clamp(1.0 - 2.0 / kPi * sup, 0.0, 1.0);
}

std::pair<PowerSeries, MembershipReport> generator_from_starlike(const PowerSeries& f,
                                                                 const GridSpec& grid) {
  PowerSeries g = multiply(f, reciprocal(derivative(f)));
  MembershipReport rep = check_a_beta(g, 1.0, grid);
  rep.functional = "min Re(g/z) for g = f/f'";
  return {std::move(g), std::move(rep)};
}

}  // namespace semigen
