#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "semigen/errors.hpp"
#include "semigen/functions.hpp"
#include "semigen/numerics.hpp"
#include "semigen/radius.hpp"
#include "semigen/series.hpp"

using namespace semigen;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// min over |z| = r of Re(z q'/q) for q = (1 - 2acz + (2a-1)z^2)/(1 - 2cz + z^2),
// evaluated from the rational form; independent of the series machinery.
double two_point_min(double alpha, double r, double c, int samples = 1440) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const std::complex<double> z = std::polar(r, 2.0 * kPi * i / samples);
    const auto N = 1.0 - 2.0 * alpha * c * z + (2.0 * alpha - 1.0) * z * z;
    const auto D = 1.0 - 2.0 * c * z + z * z;
    const auto Np = -2.0 * alpha * c + 2.0 * (2.0 * alpha - 1.0) * z;
    const auto Dp = -2.0 * c + 2.0 * z;
    best = std::min(best, (z * (Np / N - Dp / D)).real());
  }
  return best;
}

// Sharpness function of the first branch: f = z (1 + (2k-1) z)/(1 + z).
PowerSeries case1_extremal(double k, std::size_t order) {
  PowerSeries num(order);
  num[0] = 1.0;
  num[1] = 2.0 * k - 1.0;
  PowerSeries den(order);
  den[0] = 1.0;
  den[1] = 1.0;
  return multiply_by_z(multiply(num, reciprocal(den)));
}

// Sharpness function of the second branch: f = z (k + (1-k) p), p two-point.
PowerSeries case2_extremal(double k, double c, std::size_t order) {
  FunctionParams params;
  params.theta = std::acos(std::clamp(c, -1.0, 1.0));
  PowerSeries q = make_named(NamedFunction::TwoPointHerglotz, params, order);
  for (std::size_t n = 1; n <= order; ++n) q[n] *= 1.0 - k;
  return multiply_by_z(q);
}

}  // namespace

TEST_CASE("kappa closed forms, frozen midpoints, monotonicity") {
  CHECK(kappa(1.0) == 0.0);
  CHECK(kappa(0.0) == doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-10));
  CHECK(kappa(0.5) == doctest::Approx(3.0 - 4.0 * std::log(2.0)).epsilon(1e-10));

  CHECK(kappa(0.25) == doctest::Approx(0.314809213882).epsilon(1e-9));
  CHECK(kappa(0.75) == doctest::Approx(0.121489222187).epsilon(1e-9));
  CHECK(kappa(0.9) == doctest::Approx(0.049754801500).epsilon(1e-9));

  double prev = kappa(0.0);
  for (int i = 1; i <= 100; ++i) {
    const double next = kappa(i / 100.0);
    CHECK(next < prev);
    prev = next;
  }

  CHECK_THROWS_AS(kappa(-0.1), BadParams);
  CHECK_THROWS_AS(kappa(1.1), BadParams);
}

TEST_CASE("boundary minima of the named targets, closed vs sampled") {
  CHECK(phi_inf_re(PhiTarget::janowski(1.0, -1.0)) == 0.0);
  for (double alpha : {0.25, 0.5, 0.75})
    CHECK(phi_inf_re(PhiTarget::janowski(1.0 - 2.0 * alpha, -1.0)) ==
          doctest::Approx(alpha).epsilon(1e-12));

  const double m_sg = 2.0 / (1.0 + kE);
  CHECK(phi_inf_re(PhiTarget::sg()) == doctest::Approx(m_sg).epsilon(1e-15));
  CHECK(phi_inf_re_sampled(PhiTarget::sg()) == doctest::Approx(m_sg).epsilon(1e-7));

  CHECK(phi_inf_re(PhiTarget::parabolic()) == 0.5);
  CHECK(phi_inf_re_sampled(PhiTarget::parabolic()) == doctest::Approx(0.5).epsilon(1e-7));

  CHECK(phi_inf_re_sampled(PhiTarget::janowski(0.3, -0.7)) ==
        doctest::Approx(phi_inf_re(PhiTarget::janowski(0.3, -0.7))).epsilon(1e-7));

  // min over the circle of Re(1 + z e^z); no closed form, frozen from the
  // polished boundary scan.
  CHECK(phi_inf_re(PhiTarget::rho_exp()) ==
        doctest::Approx(0.136038490737).epsilon(1e-9));

  PowerSeries one_plus_z(4);
  one_plus_z[0] = 1.0;
  one_plus_z[1] = 1.0;
  CHECK(phi_inf_re(PhiTarget::custom(one_plus_z)) == doctest::Approx(0.0).epsilon(1e-9));

  PowerSeries off(4);
  off[0] = 0.9;
  CHECK_THROWS_AS(PhiTarget::custom(off), BadNormalization);
  CHECK_THROWS_AS(phi_inf_re_sampled(PhiTarget::sg(), 100), BadParams);
  CHECK_THROWS_AS(PhiTarget::janowski(0.5, 0.5), BadParams);
  CHECK_THROWS_AS(PhiTarget::janowski(0.5, -1.5), BadParams);
}

TEST_CASE("case thresholds in the k-m square") {
  CHECK(k0_of(0.5) == doctest::Approx((11.0 - std::sqrt(13.0)) / 27.0).epsilon(1e-12));
  CHECK(k0_of(0.0) == 0.1);
  CHECK(k0_of(1.0) == 1.0);
  CHECK(k0_of(0.75) == 0.5);

  for (int i = 0; i <= 100; ++i) {
    const double k0 = k0_of(i / 100.0);
    CHECK(k0 >= 0.1 - 1e-12);
    CHECK(k0 <= 1.0 + 1e-12);
  }

  CHECK(k1_of(0.0) == 0.5);
  CHECK(k1_of(1.0) == 1.0);

  CHECK_THROWS_AS(k0_of(-0.1), BadParams);
  CHECK_THROWS_AS(k1_of(1.1), BadParams);
}

TEST_CASE("radius formula, first branch") {
  const RadiusResult half = radius_km({0.0, 0.5});
  CHECK(half.branch == RadiusBranch::Case1);
  CHECK(half.r == doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));
  CHECK(half.k0 == doctest::Approx((11.0 - std::sqrt(13.0)) / 27.0).epsilon(1e-12));
  CHECK_FALSE(half.clamped);
  CHECK_FALSE(half.beta_star.has_value());

  CHECK(radius_km({0.0, 2.0 / (1.0 + kE)}).r ==
        doctest::Approx(0.219886844507).epsilon(1e-9));
  CHECK(radius_km({0.0, 0.0}).r ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
  CHECK(radius_km({0.0, 0.3}).r == doctest::Approx(0.315222230819).epsilon(1e-9));

  const RadiusResult third = radius_km({0.2, 0.5});
  CHECK(third.branch == RadiusBranch::Case1);
  CHECK(third.r == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // k = 1/2 rides the removable singularity: quadratic route gives (1-m)/m.
  const RadiusResult ninth = radius_km({0.5, 0.9});
  CHECK(ninth.branch == RadiusBranch::Case1);
  CHECK(ninth.r == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(radius_km({0.5 + 2e-6, 0.9}).r == doctest::Approx(1.0 / 9.0).epsilon(1e-4));
  CHECK(radius_km({0.5 - 2e-6, 0.9}).r == doctest::Approx(1.0 / 9.0).epsilon(1e-4));

  // m = 1: the target half-plane excludes zf'/f(0) = 1, so no disk works.
  CHECK(radius_km({0.3, 1.0}).r == 0.0);
  CHECK_FALSE(radius_km({0.3, 1.0}).clamped);
  CHECK(radius_km({0.5, 1.0}).r == 0.0);

  // At the branch point the two expressions agree.
  for (double m : {0.0, 0.25, 0.5, 0.75}) {
    const double k0 = k0_of(m);
    const RadiusResult lo = radius_km({k0 - 1e-9, m});
    const RadiusResult hi = radius_km({k0 + 1e-9, m});
    CHECK(lo.branch == RadiusBranch::Case1);
    CHECK(hi.branch == RadiusBranch::Case2);
    CHECK(lo.r == doctest::Approx(hi.r).epsilon(1e-6));
  }
  CHECK(radius_km({0.1, 0.0}).r == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(radius_km({-0.1, 0.5}), BadParams);
  CHECK_THROWS_AS(radius_km({1.0, 0.5}), BadParams);
  CHECK_THROWS_AS(radius_km({0.0, 1.0001}), BadParams);
}

TEST_CASE("radius formula, second branch and degenerate line") {
  const RadiusResult r20 = radius_km({0.2, 0.0});
  CHECK(r20.branch == RadiusBranch::Case2);
  CHECK(r20.r == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

  CHECK(radius_km({0.2, 0.3}).r == doctest::Approx(0.459958332969).epsilon(1e-9));
  CHECK(radius_km({0.4, 0.0}).r == doctest::Approx(0.670439962102).epsilon(1e-9));
  CHECK(radius_km({0.4, 0.3}).r == doctest::Approx(0.589694508436).epsilon(1e-9));
  CHECK(radius_km({0.4, 0.5}).r == doctest::Approx(0.496607849781).epsilon(1e-9));
  CHECK(radius_km({kappa(0.0), 0.0}).r ==
        doctest::Approx(0.665125918681).epsilon(1e-7));

  const RadiusResult deg0 = radius_km({k1_of(0.0), 0.0});
  CHECK(deg0.branch == RadiusBranch::Case3Degenerate);
  CHECK(deg0.r == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  const RadiusResult deg5 = radius_km({k1_of(0.5), 0.5});
  CHECK(deg5.branch == RadiusBranch::Case3Degenerate);
  CHECK(deg5.r == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("second-branch radius is where the sharp shifted bound meets the target") {
  struct Pair {
    double k, m, abs_c;
  };
  // |cos theta| of the attaining two-point extremal, frozen from the vertex of
  // the tangent relation (0 means the symmetric two-point measure).
  const std::vector<Pair> pairs = {{0.2, 0.0, 0.0},
                                   {0.2, 0.3, 0.7317689296},
                                   {0.4, 0.0, 0.5781689431},
                                   {0.4, 0.3, 0.3331624843},
                                   {0.4, 0.5, 0.0586722457},
                                   {kappa(0.0), 0.0, 0.5559577256}};
  for (const Pair& p : pairs) {
    CAPTURE(p.k);
    CAPTURE(p.m);
    const RadiusResult res = radius_km({p.k, p.m});
    REQUIRE(res.branch == RadiusBranch::Case2);

    const ShiftedLogDerivBound tb = shifted_log_deriv_bound(p.k, res.r);
    CHECK(tb.branch == ShiftedLogDerivBranch::R2leR1);
    CHECK(1.0 + tb.bound == doctest::Approx(p.m).epsilon(1e-9));

    const auto roots = attaining_cos_theta(p.k, res.r);
    REQUIRE_FALSE(roots.empty());
    if (p.abs_c == 0.0)
      CHECK(std::abs(roots.front()) <= 1e-5);
    else
      CHECK(std::abs(roots.front()) == doctest::Approx(p.abs_c).epsilon(1e-5));
    CHECK(two_point_min(p.k, res.r, roots.front()) ==
          doctest::Approx(tb.bound).epsilon(2e-3));
  }
}

TEST_CASE("shifted caratheodory bound branches") {
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const ShiftedLogDerivBound tb = shifted_log_deriv_bound(0.0, r);
    CHECK(tb.branch == ShiftedLogDerivBranch::R1leR2);
    CHECK(tb.bound == doctest::Approx(-2.0 * r / (1.0 - r * r)).epsilon(1e-12));
    CHECK_FALSE(tb.cos_theta.has_value());
  }

  const ShiftedLogDerivBound origin = shifted_log_deriv_bound(0.25, 0.0);
  CHECK(origin.bound == 0.0);
  CHECK(origin.R1 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(origin.R2 == 1.0);
  CHECK(origin.a == 1.0);

  const ShiftedLogDerivBound deep = shifted_log_deriv_bound(0.9, 0.9);
  CHECK(deep.branch == ShiftedLogDerivBranch::R2leR1);
  CHECK(deep.bound == doctest::Approx(-1.700991620723).epsilon(1e-9));
  CHECK(deep.R1 == doctest::Approx(1.291266208438).epsilon(1e-9));
  CHECK(deep.R2 == doctest::Approx(1.72 / 1.9).epsilon(1e-12));
  CHECK(deep.a == doctest::Approx(1.852631578947).epsilon(1e-12));
  REQUIRE(deep.cos_theta.has_value());
  CHECK(std::abs(*deep.cos_theta) == doctest::Approx(0.9785776174).epsilon(1e-4));
  CHECK(two_point_min(0.9, 0.9, *deep.cos_theta) ==
        doctest::Approx(deep.bound).epsilon(2e-3));

  CHECK_THROWS_AS(shifted_log_deriv_bound(1.0, 0.5), BadRange);
  CHECK_THROWS_AS(shifted_log_deriv_bound(-0.1, 0.5), BadRange);
  CHECK_THROWS_AS(shifted_log_deriv_bound(0.5, 1.0), BadRange);
  CHECK_THROWS_AS(attaining_cos_theta(0.5, 0.0), BadRange);
  // Small r keeps R1 < R2, where no extremal angle is defined.
  CHECK_THROWS_AS(attaining_cos_theta(0.2, 0.2), BadRange);
}

TEST_CASE("janowski radius closed form matches the general engine") {
  const RadiusResult full = radius_janowski_closed_form(1.0, 1.0, -1.0);
  CHECK(full.branch == RadiusBranch::Case1);
  CHECK(full.m == 0.0);
  CHECK(full.r == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));

  CHECK(radius_janowski_closed_form(1.0, 0.0, -1.0).r ==
        doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));

  for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double kap = kappa(beta);
    for (double A : {-0.4, -0.1, 0.2, 0.5, 0.8}) {
      for (double B : {-1.0, -0.75, -0.5}) {
        CAPTURE(beta);
        CAPTURE(A);
        CAPTURE(B);
        const RadiusResult closed = radius_janowski_closed_form(beta, A, B);
        const RadiusResult engine = radius_km({kap, (1.0 - A) / (1.0 - B)});
        CHECK(closed.branch == engine.branch);
        CHECK(closed.r == doctest::Approx(engine.r).epsilon(1e-10));
        const RadiusResult from_target =
            radius_a_beta(beta, PhiTarget::janowski(A, B));
        // Two code paths assemble m = (1-A)/(1-B) with different rounding.
        CHECK(from_target.r == doctest::Approx(closed.r).epsilon(1e-12));
        CHECK(from_target.beta_star.has_value() == closed.beta_star.has_value());
      }
    }
  }
}

TEST_CASE("class radius against the named targets") {
  const RadiusResult par = radius_a_beta(1.0, PhiTarget::parabolic());
  CHECK(par.branch == RadiusBranch::Case1);
  CHECK(par.k == 0.0);
  CHECK(par.m == 0.5);
  CHECK(par.r == doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));
  REQUIRE(par.beta_star.has_value());
  CHECK(*par.beta_star == doctest::Approx(0.373394201865).epsilon(1e-6));

  const RadiusResult sg = radius_a_beta(1.0, PhiTarget::sg());
  CHECK(sg.r == doctest::Approx(0.219886844507).epsilon(1e-9));
  REQUIRE(sg.beta_star.has_value());
  CHECK(*sg.beta_star == doctest::Approx(0.300447832966).epsilon(1e-6));

  const RadiusResult rho = radius_a_beta(1.0, PhiTarget::rho_exp());
  CHECK(rho.r == doctest::Approx(0.372152505524).epsilon(1e-6));
  CHECK(rho.m == doctest::Approx(0.136038490737).epsilon(1e-8));

  const RadiusResult g0 = radius_a_beta(0.0, PhiTarget::janowski(1.0, -1.0));
  CHECK(g0.branch == RadiusBranch::Case2);
  CHECK(g0.r == doctest::Approx(0.665125918681).epsilon(1e-7));
  REQUIRE(g0.beta_star.has_value());
  CHECK(*g0.beta_star == doctest::Approx(0.796062879337).epsilon(1e-6));

  CHECK_FALSE(beta_star_for(0.9).has_value());
  for (double m : {0.0, 0.25, 0.5}) {
    const auto bs = beta_star_for(m);
    REQUIRE(bs.has_value());
    CHECK(kappa(*bs) == doctest::Approx(k0_of(m)).epsilon(1e-8));
  }
}

TEST_CASE("formula radius agrees with the numeric oracle on sharpness functions") {
  PowerSeries id(4);
  id[1] = 1.0;
  CHECK(radius_numeric_oracle(id, 0.9) == 1.0);

  CHECK(radius_numeric_oracle(make_named(NamedFunction::Koebe, {}, 256), 0.5) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-4));

  for (double k : {0.0, 0.2, 0.4}) {
    for (double m : {0.0, 0.3, 0.5}) {
      CAPTURE(k);
      CAPTURE(m);
      const RadiusResult res = radius_km({k, m});
      PowerSeries extremal;
      if (res.branch == RadiusBranch::Case1) {
        extremal = case1_extremal(k, 256);
      } else {
        const auto roots = attaining_cos_theta(k, res.r);
        REQUIRE_FALSE(roots.empty());
        extremal = case2_extremal(k, std::abs(roots.front()), 256);
      }
      CHECK(radius_numeric_oracle(extremal, m) == doctest::Approx(res.r).epsilon(1e-4));
    }
  }

  // Members are starlike at least as far as the class radius; this one much
  // farther (the class bound is a worst case, not tight for every member).
  FunctionParams beta0;
  beta0.beta = 0.0;
  const PowerSeries hyper =
      make_named(NamedFunction::HypergeometricExtremal, beta0, 512);
  CHECK(radius_numeric_oracle(hyper, 0.0) > 0.9);
}

TEST_CASE("decay rates of the three classes") {
  CHECK(decay_rate_janowski(0.0, -1.0) == 0.5);
  CHECK(decay_rate_janowski(-0.5, -1.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(decay_rate_janowski(-0.2, -0.8) ==
        doctest::Approx(0.643495658493).epsilon(1e-10));

  const double crit = 3.0 - 2.0 * std::sqrt(2.0);
  const double root = std::sqrt(2.0) - 1.0;
  CHECK(decay_rate_bs(crit) == doctest::Approx(0.345103111169).epsilon(1e-9));
  CHECK(decay_rate_bs(crit) ==
        doctest::Approx(std::pow(root, 1.0 / (2.0 * root))).epsilon(1e-12));

  CHECK(decay_rate_u(0.0) == 0.5);
  CHECK(decay_rate_u(0.25) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
  CHECK(decay_rate_u(1.0 / 3.0) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(decay_rate_janowski(0.1, -1.0), OutOfStatedRange);
  CHECK_THROWS_AS(decay_rate_janowski(-0.1, -0.05), OutOfStatedRange);
  CHECK_THROWS_AS(decay_rate_bs(0.0), OutOfStatedRange);
  CHECK_THROWS_AS(decay_rate_bs(0.2), OutOfStatedRange);
  CHECK_THROWS_AS(decay_rate_u(0.4), OutOfStatedRange);
  CHECK_THROWS_AS(decay_rate_u(-0.1), OutOfStatedRange);

  ClassSpec jan;
  jan.family = ClassSpec::Family::JanowskiStarlike;
  jan.A = -0.5;
  jan.B = -1.0;
  CHECK(decay_rate(jan) == decay_rate_janowski(-0.5, -1.0));
  ClassSpec booth;
  booth.family = ClassSpec::Family::BoothSubordination;
  booth.alpha = 0.1;
  CHECK(decay_rate(booth) == decay_rate_bs(0.1));
  ClassSpec u;
  u.family = ClassSpec::Family::ULambda;
  u.lambda = 0.25;
  CHECK(decay_rate(u) == decay_rate_u(0.25));
}

TEST_CASE("the headline radius solves its quartic") {
  // (sqrt 2 - 1)^2 = 3 - 2 sqrt 2 is a root of r^4 - 6 r^2 + 1.
  const double r = bisect_root(
      [](double x) { return x * x * x * x - 6.0 * x * x + 1.0; }, 0.0, 1.0, 1e-12);
  CHECK(r == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-10));
  CHECK_THROWS_AS(
      bisect_root([](double x) { return x * x + 1.0; }, 0.0, 1.0, 1e-12),
      NoRootInRange);
}
