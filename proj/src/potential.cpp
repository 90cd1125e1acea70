#include "oscspec/potential.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace oscspec {

namespace {
constexpr double kSqrtHalfPi = 1.2533141373155002512;  // sqrt(pi/2)
}

Potential Potential::constant(double c) {
  Potential p;
  p.kind_ = PotentialKind::constant;
  p.c_ = c;
  return p;
}

Potential Potential::trig(std::vector<TrigAtom> atoms) {
  for (const auto& a : atoms)
    if (a.freq == 0.0) throw DomainError("trig atom with zero frequency");
  Potential p;
  p.kind_ = PotentialKind::trig_sum;
  p.atoms_ = std::move(atoms);
  for (auto& a : p.atoms_) a.freq = std::abs(a.freq);
  return p;
}

Potential Potential::cosine(double amplitude, double freq) {
  return trig({TrigAtom{amplitude, freq, 0.0}});
}

Potential Potential::gaussian(double a, double x0, double s) {
  if (s <= 0.0) throw DomainError("gaussian width must be positive");
  Potential p;
  p.kind_ = PotentialKind::gaussian_bump;
  p.ga_ = a;
  p.gx0_ = x0;
  p.gs_ = s;
  return p;
}

Potential Potential::tabulated(double x0, double h, std::vector<double> v) {
  if (v.size() < 4 || h <= 0.0)
    throw DomainError("tabulated potential needs h > 0 and >= 4 samples");
  Potential p;
  p.kind_ = PotentialKind::tabulated;
  p.tx0_ = x0;
  p.th_ = h;
  p.tv_ = std::move(v);
  // natural cubic spline second derivatives (tridiagonal solve)
  const std::size_t n = p.tv_.size();
  p.tm_.assign(n, 0.0);
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double sig = 0.5;
    const double den = sig * p.tm_[i - 1] + 2.0;
    p.tm_[i] = (sig - 1.0) / den;
    const double d = (p.tv_[i + 1] - 2.0 * p.tv_[i] + p.tv_[i - 1]) / (h * h);
    u[i] = (3.0 * d - sig * u[i - 1]) / den;
  }
  for (std::size_t i = n - 1; i-- > 1;) p.tm_[i] = p.tm_[i] * p.tm_[i + 1] + u[i];
  p.tm_.front() = p.tm_.back() = 0.0;
  // exact integral of the spline, accumulated at knots
  p.tint_.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = p.tv_[i], b = p.tv_[i + 1];
    const double ma = p.tm_[i], mb = p.tm_[i + 1];
    // int over one interval of the cubic segment
    p.tint_[i + 1] =
        p.tint_[i] + h * (a + b) / 2.0 - h * h * h * (ma + mb) / 24.0;
  }
  // offset so q1(0) = 0 exactly if 0 is inside the grid
  p.q1_at_zero_ = 0.0;
  if (x0 <= 0.0 && 0.0 <= x0 + (n - 1) * h) {
    p.q1_at_zero_ = 0.0;  // computed below through q1_raw; set after
  }
  // compute via the same interpolation path used by q1()
  Potential tmp = p;
  tmp.q1_at_zero_ = 0.0;
  p.q1_at_zero_ = (x0 <= 0.0 && 0.0 <= x0 + (n - 1) * h) ? tmp.q1(0.0) : 0.0;
  return p;
}

namespace {
struct SplinePos {
  std::size_t i;
  double a, b;  // Lagrange weights of the two knots
  double t;     // local coordinate
};
SplinePos locate(double x, double x0, double h, std::size_t n) {
  const double xmax = x0 + (n - 1) * h;
  if (x < x0 || x > xmax)
    throw DomainError("tabulated potential evaluated outside its grid");
  std::size_t i = static_cast<std::size_t>((x - x0) / h);
  if (i >= n - 1) i = n - 2;
  const double t = (x - (x0 + i * h)) / h;
  return {i, 1.0 - t, t, t};
}
}  // namespace

double Potential::q(double x) const {
  switch (kind_) {
    case PotentialKind::constant:
      return c_;
    case PotentialKind::trig_sum: {
      double s = 0.0;
      for (const auto& a : atoms_) s += a.amplitude * std::cos(a.freq * x + a.phase);
      return s;
    }
    case PotentialKind::gaussian_bump: {
      const double u = (x - gx0_) / gs_;
      return ga_ * std::exp(-0.5 * u * u);
    }
    case PotentialKind::tabulated: {
      const SplinePos p = locate(x, tx0_, th_, tv_.size());
      const double h2 = th_ * th_;
      return p.a * tv_[p.i] + p.b * tv_[p.i + 1] +
             ((p.a * p.a * p.a - p.a) * tm_[p.i] +
              (p.b * p.b * p.b - p.b) * tm_[p.i + 1]) *
                 h2 / 6.0;
    }
  }
  return 0.0;
}

double Potential::q_prime(double x) const {
  switch (kind_) {
    case PotentialKind::constant:
      return 0.0;
    case PotentialKind::trig_sum: {
      double s = 0.0;
      for (const auto& a : atoms_)
        s -= a.amplitude * a.freq * std::sin(a.freq * x + a.phase);
      return s;
    }
    case PotentialKind::gaussian_bump: {
      const double u = (x - gx0_) / gs_;
      return -ga_ * u / gs_ * std::exp(-0.5 * u * u);
    }
    case PotentialKind::tabulated: {
      const SplinePos p = locate(x, tx0_, th_, tv_.size());
      return (tv_[p.i + 1] - tv_[p.i]) / th_ +
             th_ / 6.0 *
                 ((3.0 * p.b * p.b - 1.0) * tm_[p.i + 1] -
                  (3.0 * p.a * p.a - 1.0) * tm_[p.i]);
    }
  }
  return 0.0;
}

double Potential::q1(double x) const {
  switch (kind_) {
    case PotentialKind::constant:
      return c_ * x;
    case PotentialKind::trig_sum: {
      double s = 0.0;
      for (const auto& a : atoms_)
        s += a.amplitude * (std::sin(a.freq * x + a.phase) - std::sin(a.phase)) /
             a.freq;
      return s;
    }
    case PotentialKind::gaussian_bump: {
      const double r = 1.0 / (gs_ * std::sqrt(2.0));
      return ga_ * gs_ * kSqrtHalfPi *
             (std::erf((x - gx0_) * r) - std::erf(-gx0_ * r));
    }
    case PotentialKind::tabulated: {
      if (x == 0.0) return 0.0;
      const SplinePos p = locate(x, tx0_, th_, tv_.size());
      // integral over the partial interval [x_i, x]
      const double t = p.t, h = th_;
      const double a = tv_[p.i], b = tv_[p.i + 1];
      const double ma = tm_[p.i], mb = tm_[p.i + 1];
      const double t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
      const double part =
          h * (a * (t - t2 / 2.0) + b * t2 / 2.0) +
          h * h * h / 6.0 *
              (ma * (-t4 / 4.0 + t3 - 3.0 * t2 / 2.0 + t / 2.0 - (t - t2 / 2.0)) +
               mb * (t4 / 4.0 - t2 / 2.0));
      return tint_[p.i] + part - q1_at_zero_;
    }
  }
  return 0.0;
}

bool Potential::in_class_b() const {
  return kind_ == PotentialKind::trig_sum || kind_ == PotentialKind::gaussian_bump;
}

double Potential::b_norm() const {
  switch (kind_) {
    case PotentialKind::constant:
      if (c_ == 0.0) return 0.0;
      throw DomainError("constant potential is not in class B (q1 unbounded)");
    case PotentialKind::trig_sum: {
      double s = 0.0;
      for (const auto& a : atoms_)
        s += std::abs(a.amplitude) *
             (1.0 + a.freq + (1.0 + std::abs(std::sin(a.phase))) / a.freq);
      return s;
    }
    case PotentialKind::gaussian_bump: {
      const double qa = std::abs(ga_);
      // sup|q| = |a|, sup|q'| = |a| e^{-1/2}/s, sup|q1| <= |a| s sqrt(2 pi)
      return qa * (1.0 + std::exp(-0.5) / gs_ + gs_ * 2.0 * kSqrtHalfPi);
    }
    case PotentialKind::tabulated:
      throw DomainError("tabulated potential has no global sup bound");
  }
  return 0.0;
}

double Potential::q1_tail_constant() const {
  switch (kind_) {
    case PotentialKind::constant:
      throw DomainError("constant potential: q1 has no limit at infinity");
    case PotentialKind::trig_sum: {
      double s = 0.0;
      for (const auto& a : atoms_) s -= a.amplitude * std::sin(a.phase) / a.freq;
      return s;
    }
    case PotentialKind::gaussian_bump: {
      const double r = 1.0 / (gs_ * std::sqrt(2.0));
      return ga_ * gs_ * kSqrtHalfPi * (1.0 - std::erf(-gx0_ * r));
    }
    case PotentialKind::tabulated:
      // q treated as 0 beyond the grid
      return q1(tx0_ + (tv_.size() - 1) * th_);
  }
  return 0.0;
}

std::optional<double> Potential::integral_over_line() const {
  if (kind_ == PotentialKind::gaussian_bump)
    return ga_ * gs_ * 2.0 * kSqrtHalfPi;  // a s sqrt(2 pi)
  if (kind_ == PotentialKind::constant && c_ == 0.0) return 0.0;
  return std::nullopt;
}

Potential Potential::reflected() const {
  Potential p = *this;
  switch (kind_) {
    case PotentialKind::constant:
      return p;
    case PotentialKind::trig_sum:
      // cos(t(-x) + phi) = cos(tx - phi)
      for (auto& a : p.atoms_) a.phase = -a.phase;
      return p;
    case PotentialKind::gaussian_bump:
      p.gx0_ = -gx0_;
      return p;
    case PotentialKind::tabulated: {
      std::vector<double> v(tv_.rbegin(), tv_.rend());
      return Potential::tabulated(-(tx0_ + (tv_.size() - 1) * th_), th_,
                                  std::move(v));
    }
  }
  return p;
}

double TrigSpectrum::cq() const {
  if (moment_order <= 1.5)
    throw DomainError("TrigSpectrum moment order must exceed 3/2");
  double s = 0.0;
  for (const auto& a : atoms) {
    if (a.freq == 0.0) throw DomainError("TrigSpectrum atom with t_k = 0");
    s += (1.0 + std::pow(std::abs(a.freq), -moment_order)) * std::abs(a.amplitude);
  }
  if (!std::isfinite(s)) throw DomainError("TrigSpectrum C_q not finite");
  return s;
}

double TrigSpectrum::reconstruct(double x) const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.amplitude * std::cos(std::abs(a.freq) * x + a.phase);
  return s;
}

TrigSpectrum spectrum_of(const Potential& p, double moment_order) {
  if (p.kind() != PotentialKind::trig_sum)
    throw DomainError("spectrum_of: only trig_sum potentials have a discrete spectrum");
  TrigSpectrum s;
  s.atoms = p.atoms();
  s.moment_order = moment_order;
  s.cq();  // validates
  return s;
}

Potential parse_potential_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw DomainError("potential spec must look like kind:args, got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  auto split = [&rest]() {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto next = rest.find(':', pos);
      const std::string tok =
          rest.substr(pos, next == std::string::npos ? next : next - pos);
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw DomainError("bad number in potential spec: " + tok);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return out;
  };
  try {
    if (kind == "const") {
      const auto v = split();
      if (v.size() != 1) throw DomainError("const:<c>");
      return Potential::constant(v[0]);
    }
    if (kind == "cos") {
      const auto v = split();
      if (v.size() != 2) throw DomainError("cos:<amp>:<freq>");
      return Potential::cosine(v[0], v[1]);
    }
    if (kind == "gauss") {
      const auto v = split();
      if (v.size() != 3) throw DomainError("gauss:<a>:<x0>:<s>");
      return Potential::gaussian(v[0], v[1], v[2]);
    }
    if (kind == "trig") {
      std::ifstream in(rest);
      if (!in) throw DomainError("cannot open trig spec file: " + rest);
      nlohmann::json j;
      in >> j;
      std::vector<TrigAtom> atoms;
      for (const auto& e : j) {
        TrigAtom a;
        a.amplitude = e.at("qk").get<double>();
        a.freq = e.at("tk").get<double>();
        a.phase = e.value("phase", 0.0);
        atoms.push_back(a);
      }
      return Potential::trig(std::move(atoms));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad trig spec json: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw DomainError("bad number in potential spec '" + spec + "'");
  }
  throw DomainError("unknown potential kind '" + kind + "'");
}

}  // namespace oscspec
