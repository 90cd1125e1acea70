// Complex Airy functions, real Bessel J0, real Gamma, the scaled Airy a(z),
// and the pi-normalized Airy kernel. Self-contained (series + asymptotics),
// no external special-function library.
#pragma once

#include "oscspec/numerics.hpp"

namespace oscspec {

// Values of Ai, Bi and derivatives at one point.
// If scaled_only is set (overflow guard |Re z^{3/2}| > 600), ai/ai_prime hold
// Ai*e^{+zeta} and bi/bi_prime hold Bi*e^{-zeta}, zeta = (2/3) z^{3/2}
// (principal branch).
struct AiryPair {
  cplx ai;
  cplx ai_prime;
  cplx bi;
  cplx bi_prime;
  bool scaled_only = false;
};

AiryPair airy(cplx z);

// a(z) = Ai(z) e^{(2/3) z^{3/2}} with z^{3/2} on the lower side of the cut for
// z < 0. Bounded like <z>^{-1/4} away from the negative axis.
cplx scaled_a(cplx z);
// a'(z) = (Ai'(z) + sqrt(z) Ai(z)) e^{(2/3) z^{3/2}}, same branch.
cplx scaled_a_prime(cplx z);

// Scaled quadruple on the real axis (the Picard contour for real lambda):
// ai_s = Ai(z) e^{+zeta}, aip_s = Ai'(z) e^{+zeta},
// bi_s = Bi(z) e^{-zeta}, bip_s = Bi'(z) e^{-zeta},
// with zeta = (2/3) z^{3/2} taken on the lower side of the cut for z < 0.
struct ScaledAiryReal {
  cplx ai_s, aip_s, bi_s, bip_s;
};
ScaledAiryReal scaled_airy_real(double z);

// pi * (Ai(s) Bi(z) - Ai(z) Bi(s)): the kernel in the {Ai,Bi} = 1
// normalization, so identities written in that convention hold verbatim.
cplx kernel_j0(cplx z, cplx s);

// J0(x) for x >= 0; power series for x <= 12, Hankel expansion beyond.
double bessel_j0(double x);

// Gamma on the real line (Lanczos + reflection), poles -> +/-inf.
double gamma_real(double x);

// w0(lambda) = -2 sqrt(pi) / Gamma((1-lambda)/2); exactly 0 at the
// unperturbed eigenvalues lambda = 1, 3, 5, ...
double w0(double lambda);

// log of phi^2(lambda) = 2^{3/2} (lambda/2e)^{lambda/2}, lambda > 0.
double log_phi2(double lambda);

}  // namespace oscspec
