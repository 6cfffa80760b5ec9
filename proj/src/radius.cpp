#include "semigen/radius.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "semigen/errors.hpp"
#include "semigen/numerics.hpp"

namespace semigen {
namespace {

constexpr double kPi = std::numbers::pi;

// Clamp radicands: tiny negatives are roundoff, anything larger means the
// query left the formula's hypothesis region.
double checked_radicand(double x) {
  if (x >= 0.0) return x;
  if (x > -1e-12) return 0.0;
  throw BadRange("negative radicand: parameters outside the stated hypothesis");
}

// Minimum of fn over theta in (0, 2pi): half-step offset keeps parameter
// singularities at theta = 0 out of the sample set; non-finite values are
// treated as +inf. Golden-section polish of the best bracket.
struct CircleMin {
  double theta;
  double value;
};

CircleMin sampled_circle_min(const std::function<double(double)>& fn, int samples,
                             double xtol = 1e-10) {
  const double step = 2.0 * kPi / samples;
  double best_t = 0.0;
  double best_v = std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j) {
    const double t = (j + 0.5) * step;
    const double v = fn(t);
    if (std::isfinite(v) && v < best_v) {
      best_v = v;
      best_t = t;
    }
  }
  const double t = golden_min(fn, best_t - step, best_t + step, xtol);
  const double v = fn(t);
  if (std::isfinite(v) && v < best_v) return {t, v};
  return {best_t, best_v};
}

double case1_quadratic(double k, double m) {
  // Smallest positive root of
  // r^2 (2k - m(2k-1) - 1) + r (4k - m(2k-1) - m - 2) + (1 - m) = 0,
  // the polynomial whose root the Case1 quotient expresses; stable where the
  // quotient form is 0/0 (k near 1/2, m near 1).
  const double a = 2.0 * k - m * (2.0 * k - 1.0) - 1.0;
  const double b = 4.0 * k - m * (2.0 * k - 1.0) - m - 2.0;
  const double c = 1.0 - m;
  if (std::abs(a) < 1e-14) {
    if (std::abs(b) < 1e-14) return 2.0;  // constant positive: never binds; clamps to 1
    const double r = -c / b;
    return r >= 0.0 ? r : 2.0;  // r = 0 is the genuine limit at m = 1
  }
  const double sq = std::sqrt(checked_radicand(b * b - 4.0 * a * c));
  const double q = -0.5 * (b + std::copysign(sq, b));
  double best = std::numeric_limits<double>::infinity();
  for (double r : {q / a, q != 0.0 ? c / q : std::numeric_limits<double>::infinity()})
    if (r > 0.0 && r < best) best = r;
  return std::isfinite(best) ? best : 2.0;
}

double case1_radius(double k, double m) {
  if (std::abs(1.0 - 2.0 * k) <= 1e-6 || std::abs(1.0 - m) <= 1e-8)
    return case1_quadratic(k, m);
  const double rad =
      checked_radicand((k - 1.0) * (k * (m - 2.0) * (m - 2.0) - (m - 2.0) * m - 2.0));
  return (2.0 * k - m * k - 1.0 + std::sqrt(rad)) / ((1.0 - 2.0 * k) * (1.0 - m));
}

double case2_radius(double k, double m) {
  const double inner = checked_radicand((m - 1.0) * (k - 1.0) * k);
  const double num =
      m * m * (1.0 - k) - m * (2.0 - 6.0 * k) - 4.0 * k + 4.0 * std::sqrt(inner);
  const double den = m * m * (1.0 - k) - m * (4.0 - 8.0 * k) - 8.0 * k + 4.0;
  return std::sqrt(checked_radicand(num / den));
}

// Image-disk geometry of alpha + (1-alpha)p over |z| <= r, p Caratheodory,
// and the sharp lower bound of Re(z q'/q) it yields.
struct ShiftGeometry {
  double R1, R2, a, bound;
  ShiftedLogDerivBranch branch;
};

ShiftGeometry shift_geometry(double alpha, double r) {
  if (alpha < 0.0 || alpha >= 1.0) throw BadRange("alpha must lie in [0,1)");
  if (r < 0.0 || r >= 1.0) throw BadRange("r must lie in [0,1)");
  const double r2 = r * r;
  ShiftGeometry g;
  g.a = (1.0 - (2.0 * alpha - 1.0) * r2) / (1.0 - r2);
  g.R1 = std::sqrt(std::max(0.0, (alpha - alpha * (2.0 * alpha - 1.0) * r2) / (1.0 - r2)));
  g.R2 = (1.0 + (2.0 * alpha - 1.0) * r) / (1.0 + r);
  if (g.R1 <= g.R2) {
    g.branch = ShiftedLogDerivBranch::R1leR2;
    g.bound = -2.0 * (1.0 - alpha) * r / ((1.0 + (2.0 * alpha - 1.0) * r) * (1.0 + r));
  } else {
    g.branch = ShiftedLogDerivBranch::R2leR1;
    g.bound = -alpha / (1.0 - alpha) + (2.0 * g.R1 - g.a) / (1.0 - alpha);
  }
  return g;
}

// min over |z| = r of Re(z q'/q) for the two-point extremal
// q = (1 - 2 alpha c z + (2 alpha - 1) z^2)/(1 - 2 c z + z^2), c = cos theta.
double two_point_attained_min(double alpha, double r, double c, int samples = 720) {
  const auto fn = [alpha, r, c](double t) {
    const cdouble z = std::polar(r, t);
    const cdouble N = 1.0 - 2.0 * alpha * c * z + (2.0 * alpha - 1.0) * z * z;
    const cdouble D = 1.0 - 2.0 * c * z + z * z;
    const cdouble Np = -2.0 * alpha * c + 2.0 * (2.0 * alpha - 1.0) * z;
    const cdouble Dp = -2.0 * c + 2.0 * z;
    return (z * (Np / N - Dp / D)).real();
  };
  return sampled_circle_min(fn, samples).value;
}

double janowski_m(double A, double B) {
  if (!(B >= -1.0 && A <= 1.0 && B < A)) throw BadParams("need -1 <= B < A <= 1");
  return (1.0 - A) / (1.0 - B);
}

}  // namespace

double kappa(double beta) {
  if (beta < 0.0 || beta > 1.0) throw BadParams("beta must lie in [0,1]");
  if (beta == 1.0) return 0.0;  // integrand vanishes identically
  const auto g = [beta](double t) {
    const double u = std::pow(t, 1.0 - beta);
    return (1.0 - u) / (1.0 + u);
  };
  // Split keeps the adaptive subdivision away from the t -> 0 power behavior.
  return adaptive_quad(g, 0.0, 1e-4, 5e-11) + adaptive_quad(g, 1e-4, 1.0, 5e-11);
}

PhiTarget PhiTarget::janowski(double A, double B) {
  janowski_m(A, B);
  PhiTarget t;
  t.tag = Tag::Janowski;
  t.A = A;
  t.B = B;
  return t;
}

PhiTarget PhiTarget::sg() {
  PhiTarget t;
  t.tag = Tag::SG;
  return t;
}

PhiTarget PhiTarget::parabolic() {
  PhiTarget t;
  t.tag = Tag::Parabolic;
  return t;
}

PhiTarget PhiTarget::rho_exp() {
  PhiTarget t;
  t.tag = Tag::RhoExp;
  return t;
}

PhiTarget PhiTarget::custom(PowerSeries phi) {
  if (std::abs(phi[0] - cdouble{1.0}) > 1e-12)
    throw BadNormalization("phi(0) must equal 1");
  PhiTarget t;
  t.tag = Tag::Custom;
  t.series = std::move(phi);
  return t;
}

double phi_inf_re_sampled(const PhiTarget& target, int samples) {
  if (samples < 360) throw BadParams("need at least 360 boundary samples");
  std::function<double(double)> fn;
  switch (target.tag) {
    case PhiTarget::Tag::Janowski:
      fn = [A = target.A, B = target.B](double t) {
        const cdouble z = std::polar(1.0, t);
        return ((1.0 + A * z) / (1.0 + B * z)).real();
      };
      break;
    case PhiTarget::Tag::SG:
      fn = [](double t) {
        const cdouble z = std::polar(1.0, t);
        return (2.0 / (1.0 + std::exp(-z))).real();
      };
      break;
    case PhiTarget::Tag::Parabolic:
      fn = [](double t) {
        const cdouble z = std::polar(1.0, t);
        const cdouble s = std::sqrt(z);
        const cdouble L = std::log((1.0 + s) / (1.0 - s));
        return (1.0 + 2.0 / (kPi * kPi) * L * L).real();
      };
      break;
    case PhiTarget::Tag::RhoExp:
      fn = [](double t) {
        const cdouble z = std::polar(1.0, t);
        return (1.0 + z * std::exp(z)).real();
      };
      break;
    case PhiTarget::Tag::Custom:
      fn = [&series = target.series](double t) {
        return eval(series, std::polar(1.0, t)).real();
      };
      break;
  }
  return sampled_circle_min(fn, samples, 1e-10).value;
}

double phi_inf_re(const PhiTarget& target, int samples) {
  switch (target.tag) {
    case PhiTarget::Tag::Janowski: return janowski_m(target.A, target.B);
    case PhiTarget::Tag::SG: return 2.0 / (1.0 + std::numbers::e);
    case PhiTarget::Tag::Parabolic: return 0.5;  // vertex of the parabolic region
    case PhiTarget::Tag::RhoExp:
    case PhiTarget::Tag::Custom: return phi_inf_re_sampled(target, samples);
  }
  throw BadParams("unknown target");
}

double k0_of(double m) {
  if (m < 0.0 || m > 1.0) throw BadParams("m must lie in [0,1]");
  const double m1 = m - 1.0;
  const double rad = checked_radicand(m1 * m1 * m1 * m1 * (m * (m - 2.0) + 4.0));
  const double num = 2.0 * m * m * m - 6.0 * m * m + 9.0 * m - 6.0 + 2.0 * std::sqrt(rad);
  const double den = 4.0 * m * m * m - 21.0 * m * m + 36.0 * m - 20.0;
  return num / den;  // den = 4(m-2)^2 (m - 5/4) < 0 on [0,1]
}

double k1_of(double m) {
  if (m < 0.0 || m > 1.0) throw BadParams("m must lie in [0,1]");
  return (m * m - 4.0 * m + 4.0) / (m * m - 8.0 * m + 8.0);
}

RadiusResult radius_km(const RadiusQuery& q) {
  if (q.k < 0.0 || q.k >= 1.0) throw BadParams("k must lie in [0,1)");
  if (q.m < 0.0 || q.m > 1.0) throw BadParams("m must lie in [0,1]");
  RadiusResult res;
  res.k = q.k;
  res.m = q.m;
  res.k0 = k0_of(q.m);
  res.k1 = k1_of(q.m);
  if (std::abs(q.k - res.k1) <= 1e-8) {
    res.branch = RadiusBranch::Case3Degenerate;
    res.r = std::sqrt((1.0 - q.m) / (2.0 - q.m));
  } else if (q.k <= res.k0) {
    res.branch = RadiusBranch::Case1;
    res.r = case1_radius(q.k, q.m);
  } else {
    res.branch = RadiusBranch::Case2;
    res.r = case2_radius(q.k, q.m);
  }
  if (res.r > 1.0) {
    res.r = 1.0;
    res.clamped = true;
  }
  return res;
}

std::optional<double> beta_star_for(double m) {
  const double k0 = k0_of(m);
  if (k0 > kappa(0.0)) return std::nullopt;  // kappa never reaches k0 on [0,1]
  return bisect_root([k0](double b) { return kappa(b) - k0; }, 0.0, 1.0, 1e-10);
}

RadiusResult radius_a_beta(double beta, const PhiTarget& target, int samples) {
  const double m = phi_inf_re(target, samples);
  RadiusResult res = radius_km({kappa(beta), m});
  res.beta_star = beta_star_for(m);
  return res;
}

RadiusResult radius_janowski_closed_form(double beta, double A, double B) {
  const double m = janowski_m(A, B);
  const double kap = kappa(beta);
  RadiusResult res;
  res.k = kap;
  res.m = m;
  res.k0 = k0_of(m);
  res.k1 = k1_of(m);
  res.beta_star = beta_star_for(m);
  if (std::abs(kap - res.k1) <= 1e-8) {
    res.branch = RadiusBranch::Case3Degenerate;
    res.r = std::sqrt((1.0 - m) / (2.0 - m));
  } else if (kap > res.k0) {
    res.branch = RadiusBranch::Case2;
    const double s =
        checked_radicand((A - B) * (1.0 - B) * (1.0 - B) * (1.0 - B) * (1.0 - kap) * kap);
    const double num = 4.0 * std::sqrt(s) - (1.0 - A) * (1.0 + A - 2.0 * B) +
                       (1.0 - A * (4.0 + A) + 2.0 * B + 6.0 * A * B - 4.0 * B * B) * kap;
    const double den = (1.0 + A - 2.0 * B) * (1.0 + A - 2.0 * B) -
                       (1.0 + A * A + A * (6.0 - 8.0 * B) - 8.0 * (1.0 - B) * B) * kap;
    res.r = std::sqrt(checked_radicand(num / den));
  } else {
    res.branch = RadiusBranch::Case1;
    const double c = 1.0 + A - 2.0 * B;
    const double rad = checked_radicand(
        (1.0 - kap) * (1.0 + A * A - 2.0 * B - 2.0 * A * B + 2.0 * B * B - c * c * kap));
    res.r = (std::sqrt(rad) + c * kap - (1.0 - B)) / ((1.0 - 2.0 * kap) * (A - B));
  }
  if (res.r > 1.0) {
    res.r = 1.0;
    res.clamped = true;
  }
  return res;
}

std::vector<double> attaining_cos_theta(double alpha, double r) {
  if (!(r > 0.0 && r < 1.0)) throw BadRange("r must lie in (0,1)");
  const ShiftGeometry g = shift_geometry(alpha, r);
  if (g.R1 < g.R2) throw BadRange("extremal angle applies to the R2 <= R1 branch only");
  const double S = 2.0 * g.R1 - g.a - alpha;
  const double oma = (1.0 - alpha) * (1.0 - alpha);

  // Candidate relation collected as a quadratic in c = cos theta.
  const double A2 = 4.0 * alpha * S * r * r;
  const double A1 = -2.0 * r * r * r * (S * (3.0 * alpha - 1.0) + oma) -
                    2.0 * r * (S * (1.0 + alpha) + oma);
  const double A0 =
      (2.0 * alpha - 1.0) * r * r * r * r + (2.0 * alpha * S + 4.0 * oma) * r * r + S;

  std::vector<double> candidates;
  if (std::abs(A2) < 1e-14) {
    if (std::abs(A1) >= 1e-14) candidates.push_back(-A0 / A1);
  } else {
    const double disc = A1 * A1 - 4.0 * A2 * A0;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      candidates.push_back((-A1 + sq) / (2.0 * A2));
      candidates.push_back((-A1 - sq) / (2.0 * A2));
    }
  }

  std::vector<double> validated;
  for (double c : candidates) {
    if (std::abs(c) > 1.0 + 1e-12) continue;
    c = std::clamp(c, -1.0, 1.0);
    if (std::abs(two_point_attained_min(alpha, r, c) - g.bound) <= 1e-3)
      validated.push_back(c);
  }
  if (!validated.empty()) return validated;

  // No quadratic root attains the bound: minimize the attained minimum over c.
  const int scan = 201;
  double best_c = -1.0;
  double best_v = std::numeric_limits<double>::infinity();
  for (int i = 0; i < scan; ++i) {
    const double c = -1.0 + 2.0 * i / (scan - 1.0);
    const double v = two_point_attained_min(alpha, r, c);
    if (v < best_v) {
      best_v = v;
      best_c = c;
    }
  }
  const double lo = std::max(-1.0, best_c - 2.0 / (scan - 1.0));
  const double hi = std::min(1.0, best_c + 2.0 / (scan - 1.0));
  const double c = golden_min(
      [alpha, r](double x) { return two_point_attained_min(alpha, r, x); }, lo, hi, 1e-10);
  if (std::abs(two_point_attained_min(alpha, r, c) - g.bound) <= 1e-3) return {c};
  throw NoRootInRange("no extremal angle attains the stated bound");
}

ShiftedLogDerivBound shifted_log_deriv_bound(double alpha, double r) {
  const ShiftGeometry g = shift_geometry(alpha, r);
  ShiftedLogDerivBound out;
  out.bound = g.bound;
  out.branch = g.branch;
  out.R1 = g.R1;
  out.R2 = g.R2;
  out.a = g.a;
  if (g.branch == ShiftedLogDerivBranch::R2leR1) {
    try {
      const auto roots = attaining_cos_theta(alpha, r);
      if (!roots.empty()) out.cos_theta = roots.front();
    } catch (const NoRootInRange&) {
      // bound still valid; extremal angle just not certified
    }
  }
  return out;
}

double radius_numeric_oracle(const PowerSeries& f, double m, double tol) {
  if (!(tol > 1e-12 && tol < 1e-2)) throw BadParams("tol must lie in (1e-12, 1e-2)");
  const PowerSeries g = log_deriv_ratio(f);
  const auto inner_min = [&g](double r) {
    return sampled_circle_min(
               [&g, r](double t) { return eval(g, std::polar(r, t)).real(); }, 720)
        .value;
  };
  double lo = 1e-9, hi = 1.0 - 1e-9;
  if (inner_min(hi) >= m) return 1.0;
  if (inner_min(lo) < m) return 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (inner_min(mid) >= m ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double decay_rate_janowski(double A, double B) {
  if (!(B >= -1.0 && B < A && A <= 0.0))
    throw OutOfStatedRange("rate stated for -1 <= B < A <= 0");
  return std::pow(1.0 - B, (A - B) / B);
}

double decay_rate_bs(double alpha) {
  if (!(alpha > 0.0 && alpha <= 3.0 - 2.0 * std::sqrt(2.0) + 1e-12))
    throw OutOfStatedRange("rate stated for 0 < alpha <= 3 - 2 sqrt 2");
  const double s = std::sqrt(alpha);
  return std::pow((1.0 - s) / (1.0 + s), 1.0 / (2.0 * s));
}

double decay_rate_u(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0 / 3.0 + 1e-12))
    throw OutOfStatedRange("rate stated for 0 <= lambda <= 1/3");
  return (1.0 - 3.0 * lambda) / (2.0 * lambda * lambda - 4.0 * lambda + 2.0);
}

double decay_rate(const ClassSpec& spec) {
  switch (spec.family) {
    case ClassSpec::Family::JanowskiStarlike: return decay_rate_janowski(spec.A, spec.B);
    case ClassSpec::Family::BoothSubordination: return decay_rate_bs(spec.alpha);
    case ClassSpec::Family::ULambda: return decay_rate_u(spec.lambda);
  }
  throw BadParams("unknown class family");
}

}  // namespace semigen
