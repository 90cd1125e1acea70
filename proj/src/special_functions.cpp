#include "oscspec/special_functions.hpp"

#include <array>
#include <cmath>

namespace oscspec {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt3 = 1.7320508075688772935;
// Ai(0) and -Ai'(0)
constexpr double kC1 = 0.35502805388781723926;
constexpr double kC2 = 0.25881940379280679841;

// Maclaurin/asymptotic switch radius. The series loses ~|e^{2/3 |z|^{3/2}}|
// of relative accuracy to cancellation, which caps the usable radius near 7
// in double precision; the u_k expansions take over from there.
constexpr double kSeriesRadius = 7.0;

// u_k, v_k of the Airy asymptotic expansions.
constexpr int kNU = 40;
struct UVTables {
  std::array<double, kNU> u{}, v{};
  UVTables() {
    u[0] = v[0] = 1.0;
    for (int k = 1; k < kNU; ++k) {
      u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) /
             ((2 * k - 1) * 216.0 * k);
      v[k] = u[k] * (6 * k + 1) / (1.0 - 6 * k);
    }
  }
};
const UVTables kUV;

struct AiAip {
  cplx ai, aip;
};

// Power series about 0; fine for |z| <= kSeriesRadius.
// f  = sum a_k z^{3k},   a_0 = 1, a_{k+1} = a_k /((3k+2)(3k+3))
// g  = sum b_k z^{3k+1}, b_0 = 1, b_{k+1} = b_k /((3k+3)(3k+4))
// f' = sum a_k 3k z^{3k-1},  g' = sum b_k (3k+1) z^{3k}
void airy_maclaurin(cplx z, AiryPair& out) {
  const cplx z3 = z * z * z;
  cplx f = 1.0, g = z, fp = 0.0, gp = 1.0;
  cplx fterm = 1.0, gterm = z;
  cplx fpterm = z * z * 0.5, gpterm = z3 / 3.0;  // k=1 terms of f', g'
  for (int k = 0; k < 80; ++k) {
    const double d1 = (3.0 * k + 2) * (3.0 * k + 3);
    const double d2 = (3.0 * k + 3) * (3.0 * k + 4);
    fterm *= z3 / d1;
    gterm *= z3 / d2;
    f += fterm;
    g += gterm;
    fp += fpterm;
    gp += gpterm;
    fpterm *= z3 * (k + 2.0) / ((k + 1.0) * (3.0 * k + 5) * (3.0 * k + 6));
    gpterm *= z3 / ((3.0 * k + 4) * (3.0 * k + 6));
    if (std::abs(fterm) + std::abs(gterm) <
        1e-19 * (std::abs(f) + std::abs(g)))
      break;
  }
  out.ai = kC1 * f - kC2 * g;
  out.ai_prime = kC1 * fp - kC2 * gp;
  out.bi = kSqrt3 * (kC1 * f + kC2 * g);
  out.bi_prime = kSqrt3 * (kC1 * fp + kC2 * gp);
  out.scaled_only = false;
}

// Scaled Poincare expansion for |arg z| <= 2 pi/3:
// Ai(z) e^{zeta} = (1/(2 sqrt(pi) z^{1/4})) sum (-1)^k u_k zeta^{-k}.
AiAip airy_poincare_scaled(cplx z) {
  const cplx zeta = 2.0 / 3.0 * std::pow(z, 1.5);
  cplx su = 0.0, sv = 0.0;
  double prev = 1e300;
  cplx zp = 1.0;
  for (int k = 0; k < kNU; ++k) {
    const double sgn = (k & 1) ? -1.0 : 1.0;
    const cplx tu = sgn * kUV.u[k] * zp;
    if (std::abs(tu) > prev) break;
    su += tu;
    sv += sgn * kUV.v[k] * zp;
    prev = std::abs(tu);
    zp /= zeta;
  }
  const cplx z14 = std::pow(z, 0.25);
  AiAip r;
  r.ai = su / (2.0 * kSqrtPi * z14);
  r.aip = -z14 * sv / (2.0 * kSqrtPi);
  return r;
}

// Compound (oscillatory) expansion for 2 pi/3 < |arg z| <= pi, via w = -z:
// Ai(-w) = (cos(zw - pi/4) P + sin(zw - pi/4) Q) / (sqrt(pi) w^{1/4}).
AiAip airy_compound(cplx z) {
  const cplx w = -z;
  const cplx zw = 2.0 / 3.0 * std::pow(w, 1.5);
  cplx P = 0.0, Q = 0.0, Pp = 0.0, Qp = 0.0;
  double prev = 1e300;
  cplx zp = 1.0;  // zw^{-2k}
  for (int k = 0; 2 * k + 1 < kNU; ++k) {
    const double sgn = (k & 1) ? -1.0 : 1.0;
    const cplx te = sgn * kUV.u[2 * k] * zp;
    if (std::abs(te) > prev) break;
    prev = std::abs(te);
    P += te;
    Q += sgn * kUV.u[2 * k + 1] * zp / zw;
    Pp += sgn * kUV.v[2 * k] * zp;
    Qp += sgn * kUV.v[2 * k + 1] * zp / zw;
    zp /= zw * zw;
  }
  const cplx c = std::cos(zw - kPi / 4.0), s = std::sin(zw - kPi / 4.0);
  const cplx w14 = std::pow(w, 0.25);
  AiAip r;
  r.ai = (c * P + s * Q) / (kSqrtPi * w14);
  r.aip = w14 / kSqrtPi * (s * Pp - c * Qp);
  return r;
}

// Unscaled Ai, Ai' for any z with |z| > kSeriesRadius.
AiAip airy_ai_large(cplx z) {
  if (std::abs(std::arg(z)) <= 2.0 * kPi / 3.0) {
    AiAip r = airy_poincare_scaled(z);
    const cplx e = std::exp(-2.0 / 3.0 * std::pow(z, 1.5));
    r.ai *= e;
    r.aip *= e;
    return r;
  }
  return airy_compound(z);
}

const cplx kOmega{-0.5, 0.86602540378443864676};       // e^{2 pi i/3}
const cplx kPhase{0.5, -0.86602540378443864676};       // e^{-i pi/3}

// One Taylor step of the Airy ODE y'' = zy from z0 to z0 + h.
// c_{n+2} = (z0 c_n + c_{n-1}) / ((n+1)(n+2)), c_{-1} := 0.
void airy_taylor_step(cplx z0, cplx h, cplx& y, cplx& yp) {
  cplx cm1 = 0.0, c0 = y, c1 = yp;
  cplx val = c0 + c1 * h;
  cplx der = c1;
  cplx hp = h;  // h^n for the derivative sum (n starts at 1)
  for (int n = 0; n < 60; ++n) {
    const cplx c2 = (z0 * c0 + cm1) / ((n + 1.0) * (n + 2.0));
    hp *= h;  // h^{n+2}
    const cplx tv = c2 * hp;
    const cplx td = c2 * (n + 2.0) * hp / h;
    val += tv;
    der += td;
    cm1 = c0;
    c0 = c1;
    c1 = c2;
    if (std::abs(tv) < 1e-18 * std::abs(val) &&
        std::abs(td) < 1e-18 * std::abs(der))
      break;
  }
  y = val;
  yp = der;
}

// Ai, Ai' for |z| <= kSeriesRadius in the region where the Maclaurin sums
// cancel (Re zeta large positive): march inward along the ray from a
// Poincare anchor. Inward is the stable direction for the recessive Ai.
AiAip airy_ai_march(cplx z) {
  const double anchor_mod = 10.5;
  const cplx dir = z / std::abs(z);
  cplx za = dir * anchor_mod;
  AiAip a = airy_poincare_scaled(za);
  const cplx e = std::exp(-2.0 / 3.0 * std::pow(za, 1.5));
  cplx y = a.ai * e, yp = a.aip * e;
  const int nsteps = 4;
  const cplx h = (z - za) / static_cast<double>(nsteps);
  for (int i = 0; i < nsteps; ++i) {
    airy_taylor_step(za, h, y, yp);
    za += h;
  }
  return {y, yp};
}

}  // namespace

AiryPair airy(cplx z) {
  AiryPair out;
  if (std::abs(z) <= kSeriesRadius) {
    airy_maclaurin(z, out);
    // The Maclaurin Ai loses ~e^{2 Re zeta} of relative accuracy where it is
    // recessive; refresh it by the marched evaluation there. Bi is dominant
    // and stays accurate.
    if (std::abs(z) > 1.5) {
      const cplx zeta = 2.0 / 3.0 * std::pow(z, 1.5);
      if (zeta.real() > 2.5) {
        const AiAip m = airy_ai_march(z);
        out.ai = m.ai;
        out.ai_prime = m.aip;
      }
    }
    return out;
  }
  const cplx zeta = 2.0 / 3.0 * std::pow(z, 1.5);
  if (std::abs(zeta.real()) > 400.0) {  // |Re z^{3/2}| > 600
    // Scaled-only mode: Ai e^{+zeta}, Bi e^{-zeta}.
    out.scaled_only = true;
    AiAip a = airy_poincare_scaled(z);  // only reachable in the monotone sector
    out.ai = a.ai;
    out.ai_prime = a.aip;
    // Bi e^{-zeta} = i(2 e^{-i pi/3} Ai(wz) - Ai(z)) e^{-zeta}; the Ai(z)
    // term is ~ e^{-2 zeta}, negligible at this magnitude.
    AiAip aw = airy_poincare_scaled(z * kOmega);
    // zeta(wz) = -zeta(z) in this sector, so Ai(wz) = aw.ai * e^{+zeta}.
    out.bi = 2.0 * kPhase * cplx(0, 1) * aw.ai;
    out.bi_prime = 2.0 * kPhase * cplx(0, 1) * kOmega * aw.aip;
    return out;
  }
  AiAip a = airy_ai_large(z);
  AiAip aw = airy_ai_large(z * kOmega);
  out.ai = a.ai;
  out.ai_prime = a.aip;
  out.bi = cplx(0, 1) * (2.0 * kPhase * aw.ai - a.ai);
  out.bi_prime = cplx(0, 1) * (2.0 * kPhase * kOmega * aw.aip - a.aip);
  return out;
}

cplx scaled_a(cplx z) {
  if (std::abs(z) <= kSeriesRadius) {
    AiryPair p = airy(z);
    return p.ai * std::exp(2.0 / 3.0 * pow32_lower(z));
  }
  if (std::abs(std::arg(z)) <= 2.0 * kPi / 3.0 &&
      !(z.imag() == 0.0 && z.real() < 0.0)) {
    return airy_poincare_scaled(z).ai;  // already Ai e^{+zeta}, branch agrees
  }
  AiAip r = airy_ai_large(z);
  return r.ai * std::exp(2.0 / 3.0 * pow32_lower(z));
}

cplx scaled_a_prime(cplx z) {
  const cplx e = std::exp(2.0 / 3.0 * pow32_lower(z));
  if (std::abs(z) <= kSeriesRadius) {
    AiryPair p = airy(z);
    return (p.ai_prime + sqrt_lower(z) * p.ai) * e;
  }
  if (std::abs(std::arg(z)) <= 2.0 * kPi / 3.0 &&
      !(z.imag() == 0.0 && z.real() < 0.0)) {
    AiAip r = airy_poincare_scaled(z);
    return r.aip + std::sqrt(z) * r.ai;
  }
  AiAip r = airy_ai_large(z);
  return (r.aip + sqrt_lower(z) * r.ai) * e;
}

ScaledAiryReal scaled_airy_real(double z) {
  ScaledAiryReal out;
  const cplx zc(z, 0.0);
  if (z >= 0.0 && z > kSeriesRadius) {
    const AiAip a = airy_poincare_scaled(zc);
    out.ai_s = a.ai;
    out.aip_s = a.aip;
    // Bi e^{-zeta} from the connection formula, all in scaled form:
    // zeta(wz) = -zeta(z) here, so Ai(wz) e^{-zeta} = [Ai(wz) e^{+zeta(wz)}].
    const AiAip aw = airy_poincare_scaled(zc * kOmega);
    const double zeta = 2.0 / 3.0 * std::pow(z, 1.5);
    const cplx e2 = (zeta < 300.0) ? std::exp(cplx(-2.0 * zeta)) : cplx(0.0);
    out.bi_s = cplx(0, 1) * (2.0 * kPhase * aw.ai - a.ai * e2);
    out.bip_s = cplx(0, 1) * (2.0 * kPhase * kOmega * aw.aip - a.aip * e2);
    return out;
  }
  // z <= r0 or z < 0: no overflow risk, use plain values and multiply.
  const AiryPair p = airy(zc);
  const cplx zeta = 2.0 / 3.0 * pow32_lower(zc);
  const cplx ep = std::exp(zeta), em = std::exp(-zeta);
  out.ai_s = p.ai * ep;
  out.aip_s = p.ai_prime * ep;
  out.bi_s = p.bi * em;
  out.bip_s = p.bi_prime * em;
  return out;
}

cplx kernel_j0(cplx z, cplx s) {
  const AiryPair pz = airy(z);
  const AiryPair ps = airy(s);
  if (pz.scaled_only || ps.scaled_only)
    throw NumericalError("kernel_j0: arguments beyond the overflow guard");
  return kPi * (ps.ai * pz.bi - pz.ai * ps.bi);
}

double bessel_j0(double x) {
  if (x < 0.0) throw DomainError("bessel_j0: negative argument");
  if (x <= 12.0) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 60; ++k) {
      term *= -q / (static_cast<double>(k) * k);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
  }
  // Hankel expansion: J0 = sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)]
  // a_k = ((2k-1)!!)^2 / (k! 8^k), signs (-) alternating in pairs.
  double P = 1.0, Q = 0.0;
  double ak = 1.0;
  double xp = 1.0;
  for (int k = 1; k <= 17; ++k) {
    const double odd = 2.0 * k - 1.0;
    ak *= odd * odd / (8.0 * k);
    xp /= x;
    const int m = k % 4;  // term sign pattern: Q-, P-, Q+, P+
    if (k & 1) {
      Q += ((m == 1) ? -1.0 : 1.0) * ak * xp;
    } else {
      P += ((m == 2) ? -1.0 : 1.0) * ak * xp;
    }
  }
  const double c = std::cos(x - kPi / 4.0), s = std::sin(x - kPi / 4.0);
  return std::sqrt(2.0 / (kPi * x)) * (P * c - Q * s);
}

namespace {
// Lanczos approximation, g = 7, 9 coefficients (~15 significant digits).
double gamma_positive(double x) {
  static const double coef[9] = {0.99999999999980993,
                                 676.5203681218851,
                                 -1259.1392167224028,
                                 771.32342877765313,
                                 -176.61502916214059,
                                 12.507343278686905,
                                 -0.13857109526572012,
                                 9.9843695780195716e-6,
                                 1.5056327351493116e-7};
  const double z = x - 1.0;
  double a = coef[0];
  for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}
}  // namespace

double gamma_real(double x) {
  if (x >= 0.5) return gamma_positive(x);
  // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
  const double s = sin_pi(x);
  if (s == 0.0) return std::numeric_limits<double>::infinity();
  return kPi / (s * gamma_positive(1.0 - x));
}

double w0(double lambda) {
  const double s = (1.0 - lambda) / 2.0;
  // 1/Gamma(s) = sin(pi s) Gamma(1-s) / pi, with exact zeros at s = 0,-1,...
  const double sp = sin_pi(s);
  if (sp == 0.0 && s <= 0.0) return 0.0;
  double rgamma;
  if (s >= 0.5) {
    rgamma = 1.0 / gamma_positive(s);
  } else {
    rgamma = sp * gamma_positive(1.0 - s) / kPi;
  }
  return -2.0 * kSqrtPi * rgamma;
}

double log_phi2(double lambda) {
  if (lambda <= 0.0) throw DomainError("log_phi2: lambda must be positive");
  return 1.5 * std::log(2.0) + 0.5 * lambda * std::log(lambda / (2.0 * std::exp(1.0)));
}

}  // namespace oscspec
