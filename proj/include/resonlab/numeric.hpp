#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace resonlab {

using complex = std::complex<double>;

/// Euler–Mascheroni constant, 30 significant digits.
inline constexpr long double kEulerGammaL = 0.577215664901532860606512090082L;
inline constexpr double kEulerGamma = static_cast<double>(kEulerGammaL);

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Iterated logarithms log_2 x = log log x, log_3 x = log log log x.
inline double log2_iter(double x) { return std::log(std::log(x)); }
inline double log3_iter(double x) { return std::log(std::log(std::log(x))); }

/// Neumaier-compensated running sum. Order of add() calls determines the
/// result bit-for-bit, so callers that need determinism fix the order.
template <typename Real = double>
class CompensatedSum {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

/// Gaussian weight e^{-x^2/2}.
inline double gaussian_weight(double x) { return std::exp(-0.5 * x * x); }

}  // namespace resonlab
