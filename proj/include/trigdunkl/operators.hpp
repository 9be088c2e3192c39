#pragma once

// The Cherednik operator D, the intertwining operator V with
// V o d/dx = D o V and delta_0 o V = delta_0, its dual tV with respect to the
// pairing  int V f . g . A dx = int f . tV g dy,  and a positivity scan of
// the kernel.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigdunkl/config.hpp"
#include "trigdunkl/kernel.hpp"
#include "trigdunkl/multiplicity.hpp"
#include "trigdunkl/quadrature.hpp"

namespace trigdunkl {

/// A registered analytic test function.
class TestFunction {
public:
    using Fn = std::function<cplx(double)>;

    TestFunction(std::string id, Fn eval, std::optional<Fn> deriv = std::nullopt,
                 std::optional<Interval> support = std::nullopt);

    const std::string& id() const noexcept { return id_; }
    cplx operator()(double x) const { return eval_(x); }

    bool has_derivative() const noexcept { return deriv_.has_value(); }
    /// Throws ContractError when no derivative is registered.
    cplx derivative(double x) const;
    /// The derivative as a test function of its own (no derivative attached).
    TestFunction derivative_function() const;

    /// Half-width a of the smallest symmetric interval [-a, a] containing
    /// the declared support.
    std::optional<double> support() const noexcept;
    /// The declared support [lo, hi]; the function vanishes outside it.
    std::optional<Interval> support_interval() const noexcept { return support_; }

    /// Multiplies by a constant; derivative and support carry over.
    TestFunction scaled(cplx factor) const;

    // registry
    static TestFunction constant(cplx value);
    static TestFunction plane_wave(double lambda);  // e^{i lambda y}
    static TestFunction monomial(int degree);       // y^n
    static TestFunction gaussian(double centre);    // exp(-(y - centre)^2)
    /// exp(-1 / (1 - ((y - centre)/radius)^2)) inside the support, 0 outside;
    /// declared support [centre - radius, centre + radius].
    static TestFunction bump(double radius, double centre = 0.0);

private:
    std::string id_;
    Fn eval_;
    std::optional<Fn> deriv_;
    std::optional<Interval> support_;
};

/// Looks up a registered function by name: "one", "plane-wave" (param =
/// lambda), "monomial" (param = degree), "gaussian" (param = centre),
/// "bump" (param = radius, centred at 0). Throws DomainError for unknown ids.
TestFunction test_function_from_id(std::string_view id, double param);

/// The bump pair used for the duality checks: f is a bump of radius 1.5
/// centred at 0.5, g a bump of radius `support` centred at 0.
struct BumpPair {
    TestFunction f;
    TestFunction g;
};
BumpPair registered_bump_pair(double support = 2.0);

enum class DForm { regularized, cothtanh };
enum class AtOrigin { reject, limit };

/// Cherednik operator
///   regularized: f' + {k1/(1 - e^{-x}) + 2 k2/(1 - e^{-2x})}(f(x) - f(-x)) - (k1/2 + k2) f(x)
///   cothtanh:    f' + {(k1 + k2)/2 coth(x/2) + k2/2 tanh(x/2)}(f(x) - f(-x)) - (k1/2 + k2) f(-x)
/// At x = 0 the coefficients have poles; with AtOrigin::limit the removable
/// limit f'(0)(1 + 2 k1 + 2 k2) - (k1/2 + k2) f(0) is returned, otherwise
/// DomainError is thrown.
cplx cherednik_D(const Multiplicity& k, const TestFunction& f, double x, DForm form,
                 AtOrigin at_origin = AtOrigin::reject);

/// Same operator applied to plain callables (value and derivative).
cplx cherednik_D(const Multiplicity& k, const std::function<cplx(double)>& f,
                 const std::function<cplx(double)>& df, double x, DForm form,
                 AtOrigin at_origin = AtOrigin::reject);

/// V f(x) = int_{|y| < |x|} K(x, y) f(y) dy; V f(0) = f(0).
/// The integral is split at 0 and at the ends of a declared support. Full
/// accuracy holds for |x| >= 1e-250; closer to 0 the outer nodes reach the
/// subnormal range.
EvalResult apply_V(const Multiplicity& k, const TestFunction& f, double x, const QuadratureConfig& cfg = {});
EvalResult apply_V(const KernelEvaluator& kernel, const TestFunction& f, double x, int level);

/// tV g(y) = int_{|y| < |x| <= a} K(x, y) g(x) A(x) dx for g supported in [-a, a].
EvalResult apply_Vt(const Multiplicity& k, const TestFunction& g, double y, const QuadratureConfig& cfg = {});
EvalResult apply_Vt(const KernelEvaluator& kernel, const TestFunction& g, double y, int level);

struct DualityTerms {
    cplx lhs;  // int V f . g . A dx
    cplx rhs;  // int f . tV g dy
    double gap;
};

/// |LHS - RHS| / max(|LHS|, |RHS|, 1).
DualityTerms duality_terms(const Multiplicity& k, const TestFunction& f, const TestFunction& g,
                           const QuadratureConfig& cfg = {});
double duality_gap(const Multiplicity& k, const TestFunction& f, const TestFunction& g,
                   const QuadratureConfig& cfg = {});

struct IntertwineTerms {
    cplx d_of_vf;  // D (V f)(x), derivative by centred difference
    cplx v_of_df;  // V (f')(x)
    double gap;
};

/// |D(V f)(x) - V(f')(x)|, x != 0; the derivative of V f uses the step
/// h = step_rel * max(1, |x|).
IntertwineTerms intertwine_terms(const Multiplicity& k, const TestFunction& f, double x,
                                 const QuadratureConfig& cfg = {}, double step_rel = 1e-4);
double intertwine_gap(const Multiplicity& k, const TestFunction& f, double x, const QuadratureConfig& cfg = {},
                      double step_rel = 1e-4);

struct ScanGrid {
    std::vector<double> k1;
    std::vector<double> k2;
    std::vector<double> x;
    std::vector<double> y_fraction;  // y = fraction * |x|, fraction in (-1, 1)
};

struct ScanCell {
    double k1;
    double k2;
    double x;
    double y;
    double value;
};

struct ScanReport {
    ScanGrid grid;
    std::vector<ScanCell> cells;  // ordered k1, k2, x, fraction (last fastest)
    double min_value;
    std::size_t argmin;
    bool all_positive;
};

/// The acceptance grid: k in {0.3, 0.7, 1.5}^2, x in {+-0.6, +-1.3, +-2.4},
/// fractions {0, +-0.5, +-0.9, +-0.99, +-0.9999}.
ScanGrid default_scan_grid();

/// Evaluates the kernel at every grid cell (real k > 0 only).
ScanReport positivity_scan(const ScanGrid& grid, const QuadratureConfig& cfg = {});

}  // namespace trigdunkl
