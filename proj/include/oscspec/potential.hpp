// Bounded potentials q (with derivative and antiderivative) and their
// discrete Fourier form.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscspec/numerics.hpp"

namespace oscspec {

enum class PotentialKind { constant, trig_sum, gaussian_bump, tabulated };

// One cosine atom q_k cos(|t_k| x + phase_k); sine components are phase
// pi/2 atoms.
struct TrigAtom {
  double amplitude = 0.0;
  double freq = 0.0;  // t_k != 0
  double phase = 0.0;
};

// Immutable after construction; evaluation is pure.
class Potential {
 public:
  static Potential constant(double c);
  static Potential trig(std::vector<TrigAtom> atoms);
  static Potential cosine(double amplitude, double freq);
  // a * exp(-(x-x0)^2 / (2 s^2))
  static Potential gaussian(double a, double x0, double s);
  // cubic-spline interpolant of samples on a uniform grid [x0, x0+(n-1)h]
  static Potential tabulated(double x0, double h, std::vector<double> values);

  PotentialKind kind() const { return kind_; }

  double q(double x) const;        // q(x)
  double q_prime(double x) const;  // q'(x)
  double q1(double x) const;       // int_0^x q, exactly 0 at x = 0

  // Upper bound on sup(|q| + |q'| + |q_1|). Throws DomainError for kinds with
  // no global bound (tabulated) and for constants (q_1 unbounded).
  double b_norm() const;

  // True when q, q', q_1 are all bounded (class-B membership); constants are
  // admitted for oracle tests but flagged false here.
  bool in_class_b() const;

  // Limit (trig: mean) of q_1 at +infinity, used to split off the
  // non-decaying part in tail integrations by parts.
  double q1_tail_constant() const;

  // Whether int q over R exists (gaussian bump); its closed-form value.
  std::optional<double> integral_over_line() const;

  // q(-x) as a Potential (for the left fundamental solution).
  Potential reflected() const;

  const std::vector<TrigAtom>& atoms() const { return atoms_; }
  double constant_value() const { return c_; }

 private:
  Potential() = default;
  PotentialKind kind_ = PotentialKind::constant;
  double c_ = 0.0;                                // constant
  std::vector<TrigAtom> atoms_;                   // trig_sum
  double ga_ = 0.0, gx0_ = 0.0, gs_ = 1.0;        // gaussian_bump
  double tx0_ = 0.0, th_ = 1.0;                   // tabulated grid
  std::vector<double> tv_;                        // samples
  std::vector<double> tm_;                        // spline second derivatives
  std::vector<double> tint_;                      // antiderivative at knots
  double q1_at_zero_ = 0.0;                       // tabulated: int offset
};

// Discrete Fourier measure: atoms (t_k, weight, phase) with moment order
// p > 3/2 and C_q = sum (1 + |t_k|^-p) |q_k| finite.
struct TrigSpectrum {
  std::vector<TrigAtom> atoms;
  double moment_order = 2.0;

  // C_q; throws DomainError if an atom has t_k = 0 or p <= 3/2.
  double cq() const;
  // q(x) = sum q_k cos(|t_k| x + phase_k)
  double reconstruct(double x) const;
};

// Spectrum of a trig_sum potential (1:1); throws for other kinds.
TrigSpectrum spectrum_of(const Potential& p, double moment_order = 2.0);

// CLI spec strings: const:<c>, cos:<amp>:<freq>, gauss:<a>:<x0>:<s>,
// trig:<path.json> (array of {"qk":..,"tk":..,"phase":..}).
Potential parse_potential_spec(const std::string& spec);

}  // namespace oscspec
