#include "trigdunkl/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

namespace {

constexpr cplx kI(0.0, 1.0);

bool is_nonpositive_integer(cplx c) {
    return c.imag() == 0.0 && c.real() <= 0.0 && std::floor(c.real()) == c.real();
}

// Power series sum_n (a)_n (b)_n / ((c)_n n!) z^n. Stops once three
// consecutive terms are below 1e-17 of the partial sum.
cplx hyp2f1_series(cplx a, cplx b, cplx c, double z, std::size_t term_cap) {
    constexpr double kRelStop = 1e-17;
    constexpr int kQuietTerms = 3;
    cplx term = 1.0;
    cplx sum = 1.0;
    int quiet = 0;
    for (std::size_t n = 0; n < term_cap; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= kRelStop * std::abs(sum)) {
            if (++quiet >= kQuietTerms) return sum;
        } else {
            quiet = 0;
        }
    }
    std::ostringstream os;
    os << "hyp2f1: series did not converge within " << term_cap << " terms at z = " << z;
    throw NonConvergenceError(os.str(), sum, std::abs(term) / (1.0 - std::min(std::abs(z), 0.999999)));
}

}  // namespace

SpectralParam::SpectralParam(cplx lambda) : lambda_(lambda) {
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
        throw DomainError("spectral parameter must be finite");
}

double gamma_real(double x) {
    if (!std::isfinite(x) || !(x > 0.0)) throw DomainError("gamma_real: require finite x > 0");
    return std::tgamma(x);
}

cplx log_gamma(cplx z) {
    if (!(z.real() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: require finite z with Re z > 0");
    // Shift up until the Stirling tail is below double precision.
    cplx shift = 0.0;
    while (std::abs(z) < 16.0 || z.real() < 8.0) {
        shift += std::log(z);
        z += 1.0;
    }
    // B_2m / (2m (2m - 1)) for m = 1..8
    static constexpr std::array<double, 8> kStirling = {
        1.0 / 12.0,          -1.0 / 360.0,          1.0 / 1260.0,        -1.0 / 1680.0,
        1.0 / 1188.0,        -691.0 / 360360.0,     1.0 / 156.0,         -3617.0 / 122400.0,
    };
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx tail = 0.0;
    cplx power = inv;
    for (double coeff : kStirling) {
        tail += coeff * power;
        power *= inv2;
    }
    const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return (z - 0.5) * std::log(z) - z + half_log_two_pi + tail - shift;
}

cplx hyp2f1(const Hyp2F1Args& args, std::size_t term_cap) {
    if (is_nonpositive_integer(args.c)) throw DomainError("hyp2f1: c must not be a non-positive integer");
    if (!std::isfinite(args.z) || !(args.z < 1.0)) throw DomainError("hyp2f1: require finite Z < 1");
    if (term_cap == 0) throw DomainError("hyp2f1: term cap must be positive");
    if (args.z == 0.0) return 1.0;
    if (args.z <= -0.5) {
        // Pfaff: 2F1(a,b;c;Z) = (1-Z)^(-a) 2F1(a, c-b; c; Z/(Z-1))
        const double w = args.z / (args.z - 1.0);
        const cplx prefactor = std::exp(-args.a * std::log1p(-args.z));
        return prefactor * hyp2f1_series(args.a, args.c - args.b, args.c, w, term_cap);
    }
    return hyp2f1_series(args.a, args.b, args.c, args.z, term_cap);
}

cplx jacobi_phi(cplx alpha, cplx beta, SpectralParam lambda, double t) {
    const cplx rho = alpha + beta + 1.0;
    // phi depends on lambda only up to sign; fixing the sign makes the
    // symmetry exact (the Pfaff branch is not symmetric in a and b)
    cplx lam = lambda.value();
    if (lam.real() < 0.0 || (lam.real() == 0.0 && lam.imag() < 0.0)) lam = -lam;
    const cplx il = kI * lam;
    const double s = std::sinh(t);
    return hyp2f1({0.5 * (rho + il), 0.5 * (rho - il), alpha + 1.0, -s * s});
}

cplx jacobi_phi(double alpha, double beta, SpectralParam lambda, double t) {
    return jacobi_phi(cplx(alpha), cplx(beta), lambda, t);
}

cplx opdam_G(const Multiplicity& k, SpectralParam lambda, double x) {
    if (!std::isfinite(x)) throw DomainError("opdam_G: x must be finite");
    const cplx k1 = k.k1();
    const cplx k2 = k.k2();
    const SpectralParam doubled(2.0 * lambda.value());
    const cplx even = jacobi_phi(k1 + k2 - 0.5, k2 - 0.5, doubled, 0.5 * x);
    if (x == 0.0) return even;
    const cplx odd = jacobi_phi(k1 + k2 + 0.5, k2 + 0.5, doubled, 0.5 * x);
    const cplx coeff = (k.rho() + kI * lambda.value()) / (2.0 * k1 + 2.0 * k2 + 1.0);
    return even + coeff * std::sinh(x) * odd;
}

}  // namespace trigdunkl
