#include "oscspec/numerics.hpp"

#include <cmath>

namespace oscspec {

double periodic_trapezoid(const std::function<double(double)>& f, double a,
                          double b, int n_min, double tol, int n_cap) {
  int n = n_min < 4 ? 4 : n_min;
  double h = (b - a) / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f(a + i * h);  // f(a) == f(b) for periodic f
  double value = sum * h;
  while (n < n_cap) {
    // add midpoints of the current grid
    double add = 0.0;
    for (int i = 0; i < n; ++i) add += f(a + (i + 0.5) * h);
    n *= 2;
    h *= 0.5;
    double next = (value + add * 2.0 * h) * 0.5;
    double change = std::abs(next - value);
    value = next;
    if (change < tol) return value;
  }
  return value;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw DomainError("fit_line: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double d = n * sxx - sx * sx;
  if (d == 0.0) throw NumericalError("fit_line: degenerate abscissae");
  LineFit out;
  out.slope = (n * sxy - sx * sy) / d;
  out.intercept = (sy - out.slope * sx) / n;
  return out;
}

}  // namespace oscspec
