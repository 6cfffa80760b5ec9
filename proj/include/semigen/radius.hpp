#pragma once

#include <optional>
#include <vector>

#include "semigen/series.hpp"

namespace semigen {

// kappa(beta) = int_0^1 (1 - t^{1-beta})/(1 + t^{1-beta}) dt; strictly
// decreasing, maps [0,1] onto [2 ln 2 - 1, 0]. The sharp lower bound for
// Re(f/z) over the class with Re(beta f/z + (1-beta) f') > 0.
double kappa(double beta);

// A convexity target phi (phi(0)=1, Re phi > 0) identified by its boundary
// minimum m = inf Re phi on the unit circle.
struct PhiTarget {
  enum class Tag { Janowski, SG, Parabolic, RhoExp, Custom };
  Tag tag = Tag::Janowski;
  double A = 1.0, B = -1.0;  // Janowski only
  PowerSeries series;        // Custom only

  static PhiTarget janowski(double A, double B);
  static PhiTarget sg();         // 2/(1 + e^{-z})
  static PhiTarget parabolic();  // 1 + (2/pi^2) log^2((1+sqrt z)/(1-sqrt z))
  static PhiTarget rho_exp();    // 1 + z e^z
  static PhiTarget custom(PowerSeries phi);
};

// inf Re phi over the unit circle: closed form where one exists, otherwise
// dense boundary sampling refined by golden-section search (tolerance 1e-8).
double phi_inf_re(const PhiTarget& target, int samples = 2048);

// Sampling route unconditionally (cross-check for the closed forms).
double phi_inf_re_sampled(const PhiTarget& target, int samples = 2048);

// Case-transition thresholds of the radius formula in the (k, m) square.
double k0_of(double m);
double k1_of(double m);

struct RadiusQuery {
  double k;  // lower bound of Re(f/z), in [0,1)
  double m;  // inf Re of the target, in [0,1]
};

enum class RadiusBranch { Case1, Case2, Case3Degenerate };

struct RadiusResult {
  double r = 0.0;
  RadiusBranch branch = RadiusBranch::Case1;
  double k = 0.0, m = 0.0, k0 = 0.0, k1 = 0.0;
  bool clamped = false;  // formula exceeded 1; r reported as 1
  std::optional<double> beta_star;
};

// Largest r with: Re(f/z) > k forces zf'/f to stay in {Re > m} on |z| <= r.
// Branch by k against k0(m); k within 1e-8 of k1(m) takes the degenerate
// formula. Near k = 1/2 or m = 1 the Case1 quotient is evaluated as the
// smallest admissible root of its defining quadratic (removable singularity);
// at m = 1 that root is 0: no disk maps into {Re > 1}.
RadiusResult radius_km(const RadiusQuery& q);

// radius_km at k = kappa(beta); beta_star solves kappa(beta*) = k0(m)
// (absent when k0(m) exceeds kappa(0), i.e. no beta in [0,1] reaches it).
RadiusResult radius_a_beta(double beta, const PhiTarget& target, int samples = 2048);

std::optional<double> beta_star_for(double m);

// The same radius for the target (1+Az)/(1+Bz) evaluated from explicit
// expressions in (kappa, A, B) rather than through radius_km.
RadiusResult radius_janowski_closed_form(double beta, double A, double B);

// Sharp lower bound of Re((1-alpha) z p'/(alpha + (1-alpha) p)) over
// |z| <= r and Caratheodory p, with the geometry of the image disk of
// alpha + (1-alpha)p: center a, left edge R2, and R1 = sqrt(alpha a).
enum class ShiftedLogDerivBranch { R1leR2, R2leR1 };

struct ShiftedLogDerivBound {
  double bound = 0.0;
  ShiftedLogDerivBranch branch = ShiftedLogDerivBranch::R1leR2;
  double R1 = 0.0, R2 = 0.0, a = 0.0;
  std::optional<double> cos_theta;  // extremal angle, R2 <= R1 branch only
};

ShiftedLogDerivBound shifted_log_deriv_bound(double alpha, double r);

// cos(theta) of the two-point extremal attaining the R2 <= R1 bound.
// Roots of the candidate quadratic (in cos theta) are kept only when the
// extremal they define attains the bound within 1e-3; when none does, the
// attained minimum is minimized over cos theta directly.
std::vector<double> attaining_cos_theta(double alpha, double r);

// Independent check: largest r in (0,1) with min_theta Re(zf'/f) >= m on
// |z| = r, by bisection over r (inner minimum by sampling + golden section).
// Returns 1 when the condition holds on the whole disk.
double radius_numeric_oracle(const PowerSeries& f, double m, double tol = 1e-6);

// Exponential decay rates |u(t,z)| <= e^{-kt}|z| for the stated ranges.
struct ClassSpec {
  enum class Family { JanowskiStarlike, BoothSubordination, ULambda };
  Family family = Family::JanowskiStarlike;
  double A = 0.0, B = -1.0;  // Janowski, -1 <= B < A <= 0
  double alpha = 0.0;        // Booth, 0 < alpha <= 3 - 2 sqrt 2
  double lambda = 0.0;       // U, 0 <= lambda <= 1/3
};

double decay_rate(const ClassSpec& spec);
double decay_rate_janowski(double A, double B);  // (1-B)^((A-B)/B)
double decay_rate_bs(double alpha);              // ((1-sqrt a)/(1+sqrt a))^(1/(2 sqrt a))
double decay_rate_u(double lambda);              // (1-3l)/(2l^2-4l+2)

}  // namespace semigen
