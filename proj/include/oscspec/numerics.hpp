// Shared numeric helpers: branch conventions, periodic quadrature, errors.
#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscspec {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Inputs outside a function's domain (bad grids, bad spec strings).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numeric procedure failed to reach its contract (divergence, no bracket).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// z^{3/2} with the principal branch on C \ R_-, and the lower-side limit on
// the negative real axis (arg = -pi there, so (-y)^{3/2} = +i y^{3/2}).
inline cplx pow32_lower(cplx z) {
  if (z.imag() == 0.0 && z.real() < 0.0) {
    double m = std::pow(-z.real(), 1.5);
    return {0.0, m};
  }
  return std::pow(z, 1.5);
}

// sqrt with the same lower-side-of-the-cut convention.
inline cplx sqrt_lower(cplx z) {
  if (z.imag() == 0.0 && z.real() < 0.0) return {0.0, -std::sqrt(-z.real())};
  return std::sqrt(z);
}

// sin(pi*x) with exact zeros at integer x.
inline double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1], exact
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  return std::sin(kPi * r);
}

// Trapezoid rule over one full period of a smooth periodic integrand,
// doubling the node count until the value settles below tol.
// Spectrally accurate for periodic f.
double periodic_trapezoid(const std::function<double(double)>& f, double a,
                          double b, int n_min, double tol, int n_cap = 1 << 22);

// Least-squares line through (x_i, y_i): y = slope*x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace oscspec
