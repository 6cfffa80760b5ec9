#pragma once

#include <vector>

#include "semigen/series.hpp"

namespace semigen {

// Closed-coefficient reference functions. All are normalized (f(0)=0, f'(0)=1)
// except TwoPointHerglotz, which returns a p-type series with p(0)=1.
enum class NamedFunction {
  HalfPlaneExtremal,       // z(1+z)/(1-z)
  StarlikeNonGenerator,    // z/(1-z+z^2)
  Koebe,                   // z/(1-z)^2
  ULambdaExtremal,         // z/((1+z)(1+lambda z))
  HypergeometricExtremal,  // a_n = 2/(n-(n-1)beta)
  BernardiKernel,          // a_n = (1+gamma)/(n+gamma)
  LogKernel,               // -log(1-z), a_n = 1/n
  XLogKernel,              // (1/(1-x)) log((1-xz)/(1-z)), a_n = (1-x^n)/((1-x)n)
  MaMindaExtremal,         // z exp(int (phi(t)-1)/t dt) for phi = (1+Az)/(1+Bz)
  TwoPointHerglotz,        // (1-z^2)/(1-2 cos(theta) z + z^2)
};

struct FunctionParams {
  double beta = 1.0;         // HypergeometricExtremal, 0 <= beta <= 1
  double lambda = 0.0;       // ULambdaExtremal, 0 <= lambda <= 1
  cdouble gamma = 1.0;       // BernardiKernel, Re gamma >= -1/2
  cdouble x = -1.0;          // XLogKernel, |x| <= 1, x != 1
  double A = 0.0, B = -1.0;  // MaMindaExtremal, -1 <= B < A <= 1
  double theta = 0.0;        // TwoPointHerglotz
};

PowerSeries make_named(NamedFunction id, const FunctionParams& p = {},
                       std::size_t order = PowerSeries::kDefaultOrder);

// Finite convex combination of rotated half-plane kernels:
// p(z) = sum_j w_j (1 + conj(x_j) z)/(1 - conj(x_j) z).
struct HerglotzAtom {
  cdouble point;  // |point| == 1 within 1e-12
  double weight;  // > 0; weights sum to 1 within 1e-10
};

PowerSeries herglotz_p(const std::vector<HerglotzAtom>& atoms,
                       std::size_t order = PowerSeries::kDefaultOrder);

// Unique normalized f with beta f/z + (1-beta) f' == p; requires p(0)=1, 0<=beta<=1.
// a_n = p_{n-1} / (beta + n(1-beta)) for n >= 2.
PowerSeries solve_a_beta_from_p(const PowerSeries& p, double beta);

// z exp(int_0^z (phi(t)-1)/t dt) for a given phi series with phi(0)=1.
PowerSeries ma_minda_extremal(const PowerSeries& phi);

// z exp(int_0^z psi(t)/t dt) for a given psi series with psi(0)=0;
// satisfies z f'/f - 1 == psi exactly in coefficients.
PowerSeries generator_from_psi(const PowerSeries& psi);

}  // namespace semigen
