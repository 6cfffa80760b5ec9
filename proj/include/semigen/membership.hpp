#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semigen/series.hpp"

namespace semigen {

// Sampling grid for "for all z in the disk" predicates: concentric rings with
// equally spaced angles. Strict inequalities are tested against margin.
struct GridSpec {
  std::vector<double> radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6,
                               0.7, 0.8, 0.9, 0.99, 0.999};
  std::size_t angular_samples = 720;
  double margin = 1e-9;

  void validate() const;  // radii strictly in (0,1), angular_samples >= 8
};

struct MembershipReport {
  bool member = false;
  double witness_min = 0.0;  // minimized functional value; member <=> > margin
  cdouble witness_point = 0.0;
  std::string functional;
};

// min over grid of Re(beta f/z + (1-beta) f'). beta=1 tests Re(f/z) > 0,
// beta=0 tests Re f' > 0 (bounded turning).
MembershipReport check_a_beta(const PowerSeries& f, double beta,
                              const GridSpec& grid = {});

// Coefficient sufficiency: c_n = (n(beta-1)-beta) a_n + (n(1-beta)+1) a_{n+1}.
// LiteralTelescoped bounds |sum c_n|; AbsoluteSeries bounds sum |c_n|.
// Returns {value <= 1, value}.
enum class CoeffVariant { LiteralTelescoped, AbsoluteSeries };
std::pair<bool, double> coeff_sufficient_a_beta(const PowerSeries& f, double beta,
                                                CoeffVariant variant);

// Convolution nonvanishing test: f * (K(z) - zeta-dependent multiple of z)
// must stay away from 0 over the grid and a unimodular zeta sweep, where
// K(z) = z(1 - beta z)/(1-z)^2. zeta excludes a neighborhood of 1 (pole).
// Sampled near-zeros are refined by sign-crossing bisection along each ring.
MembershipReport hadamard_criterion_a_beta(const PowerSeries& f, double beta,
                                           std::size_t zeta_samples = 360,
                                           const GridSpec& grid = {});

// witness_min = lambda - max over grid of |f'(z) (z/f(z))^2 - 1|.
MembershipReport check_u_lambda(const PowerSeries& f, double lambda,
                                const GridSpec& grid = {});

// Subordination of w = zf'/f - 1 to z/(1 - alpha z^2): invert the target at
// each grid point (quadratic alpha w v^2 + v - w = 0; either root inside
// passes) and require max |v| < 1. witness_min = 1 - max |v|.
MembershipReport check_bs_subordination(const PowerSeries& f, double alpha,
                                        const GridSpec& grid = {});

// delta = min over grid of Re exp(int_0^z psi(t)/t dt); positive values
// certify that zf'/f - 1 == psi forces Re(f/z) >= delta, hence a generator
// with decay rate delta. Requires psi(0) = 0.
double inclusion_rate_from_psi(const PowerSeries& psi, const GridSpec& grid = {});

// Same certificate driven by a target phi with phi(0) = 1 (uses phi - 1).
double inclusion_rate_from_phi(const PowerSeries& phi, const GridSpec& grid = {});

// alpha = 1 - (2/pi) sup over grid |arg(f(z)/z)|, clamped to [0,1]; the flow
// of f extends analytically to the sector |arg t| < pi alpha / 2.
double sector_extension_angle(const PowerSeries& f, const GridSpec& grid = {});

// Factor f = f' g; returns g = f / f' and its Re(g/z) > 0 report.
std::pair<PowerSeries, MembershipReport> generator_from_starlike(
    const PowerSeries& f, const GridSpec& grid = {});

}  // namespace semigen
