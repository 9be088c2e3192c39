#pragma once

#include <complex>

namespace trigdunkl {

/// Multiplicity parameters (k1, k2) of the rank-one trigonometric Dunkl
/// setting. Both must have strictly positive real part.
class Multiplicity {
public:
    Multiplicity(double k1, double k2) : Multiplicity(std::complex<double>(k1), std::complex<double>(k2)) {}
    Multiplicity(std::complex<double> k1, std::complex<double> k2);

    std::complex<double> k1() const noexcept { return k1_; }
    std::complex<double> k2() const noexcept { return k2_; }

    /// k1/2 + k2
    std::complex<double> rho() const noexcept { return 0.5 * k1_ + k2_; }

    /// True iff both parameters are real (and hence > 0).
    bool real_positive() const noexcept { return k1_.imag() == 0.0 && k2_.imag() == 0.0; }

    double k1_real() const noexcept { return k1_.real(); }
    double k2_real() const noexcept { return k2_.real(); }

private:
    std::complex<double> k1_;
    std::complex<double> k2_;
};

}  // namespace trigdunkl
