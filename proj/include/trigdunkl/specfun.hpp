#pragma once

// Special functions needed by the rank-one trigonometric Dunkl setting:
// Gamma on the positive axis, a complex log-Gamma for Re z > 0, the Gauss
// hypergeometric function on (-inf, 1), the Jacobi function and the Opdam
// hypergeometric function G_{i lambda}.

#include <complex>
#include <cstddef>

#include "trigdunkl/multiplicity.hpp"

namespace trigdunkl {

using cplx = std::complex<double>;

/// Spectral parameter lambda of G_{i lambda}; must be finite.
class SpectralParam {
public:
    SpectralParam(double lambda) : SpectralParam(cplx(lambda, 0.0)) {}  // NOLINT implicit
    SpectralParam(cplx lambda);                                           // NOLINT implicit

    cplx value() const noexcept { return lambda_; }

private:
    cplx lambda_;
};

/// Gamma function for finite x > 0. Throws DomainError otherwise.
double gamma_real(double x);

/// Principal log-Gamma for Re z > 0 (Stirling series after upward shift).
cplx log_gamma(cplx z);

/// Arguments of 2F1(a, b; c; Z) restricted to real Z < 1.
struct Hyp2F1Args {
    cplx a;
    cplx b;
    cplx c;
    double z;
};

inline constexpr std::size_t kHyp2F1TermCap = 20000;

/// Gauss hypergeometric function. |Z| < 0.5 (and 0.5 <= Z < 1) by the direct
/// series, Z <= -0.5 by the Pfaff transformation onto w = Z/(Z-1) in [1/3, 1).
/// Throws DomainError for c in {0,-1,-2,...} or Z >= 1, NonConvergenceError
/// when the series does not settle within term_cap terms.
cplx hyp2f1(const Hyp2F1Args& args, std::size_t term_cap = kHyp2F1TermCap);

/// Jacobi function phi_lambda^{alpha,beta}(t)
///   = 2F1((rho + i lambda)/2, (rho - i lambda)/2; alpha + 1; -sinh^2 t),
/// rho = alpha + beta + 1.
cplx jacobi_phi(double alpha, double beta, SpectralParam lambda, double t);

/// Same, with complex alpha and beta (used for complex multiplicities).
cplx jacobi_phi(cplx alpha, cplx beta, SpectralParam lambda, double t);

/// Opdam hypergeometric function G_{i lambda}(x) for multiplicity k:
///   phi_{2 lambda}^{k1+k2-1/2, k2-1/2}(x/2)
///   + (k1/2 + k2 + i lambda)/(2 k1 + 2 k2 + 1) sinh(x) phi_{2 lambda}^{k1+k2+1/2, k2+1/2}(x/2).
cplx opdam_G(const Multiplicity& k, SpectralParam lambda, double x);

}  // namespace trigdunkl
