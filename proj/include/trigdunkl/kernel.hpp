#pragma once

// The kernel of the trigonometric Dunkl intertwining operator in rank one,
//
//   K(x, y) = c/4 A(x)^{-1} int_{|y|}^{|x|} sigma(x, y, z)
//             (cosh z/2 - cosh y/2)^{k1-1} (cosh x - cosh z)^{k2-1} sinh(z/2) dz,
//
// its closed forms at k1 = 0 and k2 = 0, and the Jacobi-setting building
// blocks from which the same kernel can be assembled independently.
//
// All integrals over [|y|, |x|] are evaluated after the substitution
// u = cosh(z/2) - cosh(|y|/2) (u = cosh z - cosh |y| for the Jacobi kernels).
// The two endpoint factors then become exactly u^{k1-1} (U - u)^{k2-1}, every
// other factor is analytic on [0, U], and the singular powers are carried by
// the weights of a Gauss-Jacobi rule (real k) or by a tanh-sinh rule with
// weights multiplied by the complex powers (complex k).

#include <complex>
#include <memory>
#include <string>

#include "trigdunkl/config.hpp"
#include "trigdunkl/multiplicity.hpp"
#include "trigdunkl/quadrature.hpp"

namespace trigdunkl {

using cplx = std::complex<double>;

/// (x, y) with x != 0 and |y| < |x|.
class KernelPoint {
public:
    KernelPoint(double x, double y);

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    /// |x| - |y| > 0
    double gap() const noexcept { return std::abs(x_) - std::abs(y_); }

private:
    double x_;
    double y_;
};

/// A(x) = |2 sinh(x/2)|^{2 k1} |2 sinh x|^{2 k2}; A(0) = 0.
cplx weight_A(const Multiplicity& k, double x);

/// c = 2^{3k1+3k2} Gamma(k1+k2+1/2) / (sqrt(pi) Gamma(k1) Gamma(k2)), real k only.
double constant_c(const Multiplicity& k);

/// Same constant for complex k (principal branch via log-Gamma).
cplx constant_c_complex(const Multiplicity& k);

/// sigma(x, y, z) = sign(x) {e^{x/2} 2cosh(x/2) - e^{-y/2} 2cosh(z/2)}
double sigma(double x, double y, double z);

/// Convention for the y-derivative term when the kernel is assembled from
/// the Jacobi-setting pieces at (x/2, y/2). `total` differentiates the map
/// y -> K~(x/2, y/2) (a factor 1/2 from the chain rule); `partial` uses the
/// partial derivative of K~ evaluated at (x/2, y/2). Only `total` reproduces
/// kernel_K.
enum class DerivativeConvention { total, partial };

enum class KTildeForm { direct, byparts, defining };

/// Kernel evaluation for a fixed multiplicity with the quadrature rules built
/// once. Immutable after construction and safe to share between threads.
///
/// Methods taking `gap` expect gap = |x| - |y| > 0, computed by the caller
/// without cancellation when y is close to +-x.
class KernelEvaluator {
public:
    /// `refined` selects the refinement of the configured inner rule
    /// (2n Gauss-Jacobi nodes or one more tanh-sinh level).
    explicit KernelEvaluator(const Multiplicity& k, const QuadratureConfig& cfg = {},
                             bool refined = false);

    const Multiplicity& multiplicity() const noexcept;
    const std::string& method() const noexcept;

    cplx kernel(double x, double y, double gap) const;
    /// A(x) K(x, y), finite as x -> 0.
    cplx weighted_kernel(double x, double y, double gap) const;

    cplx jacobi_kernel(double x, double y, double gap) const;
    cplx ktilde(double x, double y, double gap, KTildeForm form) const;
    /// Partial derivative of K~(x, y) in y.
    cplx dktilde_dy(double x, double y, double gap) const;
    cplx kernel_mourou(double x, double y, double gap,
                       DerivativeConvention conv = DerivativeConvention::total) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// Free functions: value from the configured rule, error estimated against
// its refinement.

EvalResult kernel_K(const Multiplicity& k, const KernelPoint& p, const QuadratureConfig& cfg = {});

EvalResult kernel_K_mourou(const Multiplicity& k, const KernelPoint& p, const QuadratureConfig& cfg = {},
                           DerivativeConvention conv = DerivativeConvention::total);

/// Jacobi-setting kernel K(x, y), |y| < |x|.
EvalResult jacobi_kernel(const Multiplicity& k, double x, double y, const QuadratureConfig& cfg = {});

/// K~(x, y) in one of its three forms, |y| < |x|.
EvalResult ktilde(const Multiplicity& k, double x, double y, KTildeForm form,
                  const QuadratureConfig& cfg = {});

/// d/dy K~(x, y), |y| < |x|; exactly 0 at y = 0.
EvalResult dktilde_dy(const Multiplicity& k, double x, double y, const QuadratureConfig& cfg = {});

/// Closed form of the kernel at k1 = 0, k2 > 0.
double kernel_K_limit_k1zero(double k2, const KernelPoint& p);

/// Closed form of the kernel at k2 = 0, k1 > 0.
double kernel_K_limit_k2zero(double k1, const KernelPoint& p);

}  // namespace trigdunkl
