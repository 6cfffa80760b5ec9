#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "semigen/errors.hpp"

namespace semigen {

using cdouble = std::complex<double>;

// Truncated power series sum_{n=0..N} c_n z^n over complex<double>.
// N is the truncation order; arithmetic truncates to the shorter operand.
class PowerSeries {
 public:
  static constexpr std::size_t kDefaultOrder = 128;
  static constexpr double kZeroTol = 1e-12;  // |c0| below this counts as a zero constant term

  PowerSeries() : c_(1, 0.0) {}
  explicit PowerSeries(std::size_t order) : c_(order + 1, 0.0) {}
  explicit PowerSeries(std::vector<cdouble> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, 0.0);
  }

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<cdouble>& coeffs() const { return c_; }

  cdouble& operator[](std::size_t n) { return c_[n]; }
  const cdouble& operator[](std::size_t n) const { return c_[n]; }

  // Coefficient with zero-extension past the truncation order.
  cdouble at(std::size_t n) const { return n < c_.size() ? c_[n] : cdouble{0.0}; }

  // f(0) == 0 and f'(0) == 1 within kZeroTol.
  bool normalized() const {
    return std::abs(c_[0]) <= kZeroTol && order() >= 1 && std::abs(c_[1] - 1.0) <= kZeroTol;
  }

 private:
  std::vector<cdouble> c_;
};

// Horner evaluation of the truncated polynomial at z.
cdouble eval(const PowerSeries& f, cdouble z);

// Termwise derivative; order drops by one.
PowerSeries derivative(const PowerSeries& f);

// Cauchy product truncated to min(order_a, order_b).
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);

// Series r with multiply(f, r) == 1 to the truncation order.
// Throws ZeroConstantTerm when |f_0| <= kZeroTol.
PowerSeries reciprocal(const PowerSeries& f);

// Coefficientwise (Hadamard) product, truncated to the shorter operand.
PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b);

// z f'(z) / f(z) for normalized f; output order N-1 with constant term exactly 1.
PowerSeries log_deriv_ratio(const PowerSeries& f);

// E = exp(integral_0^z h(t)/t dt) via n E_n = sum_{k=1..n} h_k E_{n-k}.
// Requires h_0 == 0 (NonVanishingConstant otherwise); E_0 == 1.
PowerSeries exp_integral_transform(const PowerSeries& h);

// f(rz)/r, r in (0,1] (BadRadius otherwise); keeps normalization.
PowerSeries rescale(const PowerSeries& f, double r);

// Zero-extend to the requested order (no-op when already longer).
PowerSeries pad(const PowerSeries& f, std::size_t order);

// f(z)/z for f with vanishing constant term (ZeroConstantTerm tolerance applies).
PowerSeries divide_by_z(const PowerSeries& f);

// z * f(z); order grows by one.
PowerSeries multiply_by_z(const PowerSeries& f);

}  // namespace semigen
