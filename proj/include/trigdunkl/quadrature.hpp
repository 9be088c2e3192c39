#pragma once

// Quadrature rules on the reference interval (-1, 1) and an integration
// driver with refinement-based error estimates.
//
// Every rule also stores 1 + t and 1 - t for each node, computed without
// cancellation; tanh-sinh nodes approach the endpoints far closer than the
// spacing of doubles near +-1, and singular integrands need those distances.

#include <cmath>
#include <complex>
#include <concepts>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

enum class RuleKind { legendre, jacobi, tanh_sinh };

struct RuleSpec {
    RuleKind kind = RuleKind::legendre;
    int size = 1;  // node count n, or the tanh-sinh level
    double alpha = 0.0;
    double beta = 0.0;

    /// Next refinement: n -> 2n, or level -> level + 1.
    RuleSpec refined() const;
    std::string describe() const;
};

class QuadratureRule {
public:
    QuadratureRule(RuleSpec spec, std::vector<double> nodes, std::vector<double> weights,
                   std::vector<double> one_plus, std::vector<double> one_minus);

    const RuleSpec& spec() const noexcept { return spec_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::span<const double> one_plus() const noexcept { return one_plus_; }
    std::span<const double> one_minus() const noexcept { return one_minus_; }

private:
    RuleSpec spec_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> one_plus_;
    std::vector<double> one_minus_;
};

inline constexpr int kMaxGaussNodes = 512;
inline constexpr int kMaxTanhSinhLevel = 12;

/// Gauss-Legendre rule, 1 <= n <= 512.
QuadratureRule gauss_legendre(int n);

/// Gauss-Jacobi rule for the weight (1 - t)^alpha (1 + t)^beta, alpha, beta > -1.
/// Nodes come from the symmetric tridiagonal Jacobi matrix, are polished by
/// Newton steps on the orthonormal recurrence, and the weights are the
/// reciprocal Christoffel sums.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

/// Tanh-sinh rule with step h = 2^(4 - level), 1 <= level <= 12. Level L is
/// nested in level L + 1. Nodes are truncated once 1 - |t| drops below 1e-300.
QuadratureRule tanh_sinh(int level);

/// Builds any rule from its spec. Accepts one refinement step beyond the
/// public ranges so that the largest public rule can still be refined.
QuadratureRule make_rule(const RuleSpec& spec);

/// sum of weights = 2^(a+b+1) Gamma(a+1) Gamma(b+1) / Gamma(a+b+2)
double jacobi_weight_mass(double alpha, double beta);

struct EvalResult {
    std::complex<double> value;
    double est_error = 0.0;
    std::string method;
};

struct Interval {
    double lo;
    double hi;
};

/// A node mapped onto [lo, hi], with its distances to both ends.
struct MappedNode {
    double x;
    double from_lo;
    double from_hi;
};

namespace detail {

void check_interval(const Interval& iv);
[[noreturn]] void throw_non_finite(double x);

template <class F>
std::complex<double> call_at(F& f, const MappedNode& node) {
    if constexpr (std::is_invocable_v<F&, const MappedNode&>) {
        return std::complex<double>(f(node));
    } else {
        return std::complex<double>(f(node.x));
    }
}

template <class F>
std::complex<double> apply_rule(const QuadratureRule& rule, F& f, const Interval& iv) {
    const double half = 0.5 * (iv.hi - iv.lo);
    const auto t = rule.nodes();
    const auto w = rule.weights();
    const auto tp = rule.one_plus();
    const auto tm = rule.one_minus();
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double from_lo = half * tp[i];
        const double from_hi = half * tm[i];
        const double x = t[i] <= 0.0 ? iv.lo + from_lo : iv.hi - from_hi;
        const std::complex<double> v = call_at(f, MappedNode{x, from_lo, from_hi});
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw_non_finite(x);
        sum += w[i] * v;
    }
    return half * sum;
}

}  // namespace detail

/// (hi - lo)/2 * sum_i w_i f(x_i), i.e. the integral over [lo, hi] of f times
/// the rule's reference weight carried through the affine map. The error
/// estimate compares against the next refinement of the rule.
///
/// f may take the mapped abscissa as a double or a MappedNode, and may return
/// a real or complex value.
template <class F>
EvalResult integrate(const QuadratureRule& rule, F&& f, Interval iv) {
    detail::check_interval(iv);
    const std::complex<double> base = detail::apply_rule(rule, f, iv);
    const QuadratureRule finer = make_rule(rule.spec().refined());
    const std::complex<double> fine = detail::apply_rule(finer, f, iv);
    return EvalResult{base, std::abs(fine - base), rule.spec().describe()};
}

/// Tanh-sinh integration at one level with the error estimated from the
/// embedded coarser level (every other node), so no extra evaluations.
template <class F>
EvalResult integrate_embedded(const QuadratureRule& rule, F&& f, Interval iv) {
    detail::check_interval(iv);
    if (rule.spec().kind != RuleKind::tanh_sinh)
        throw ContractError("embedded error estimate requires a tanh-sinh rule");
    const double half = 0.5 * (iv.hi - iv.lo);
    const auto t = rule.nodes();
    const auto w = rule.weights();
    const auto tp = rule.one_plus();
    const auto tm = rule.one_minus();
    const std::size_t centre = rule.size() / 2;
    std::complex<double> fine = 0.0;
    std::complex<double> coarse = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double from_lo = half * tp[i];
        const double from_hi = half * tm[i];
        const double x = t[i] <= 0.0 ? iv.lo + from_lo : iv.hi - from_hi;
        const std::complex<double> v = detail::call_at(f, MappedNode{x, from_lo, from_hi});
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) detail::throw_non_finite(x);
        fine += w[i] * v;
        const std::size_t offset = i > centre ? i - centre : centre - i;
        if (offset % 2 == 0) coarse += w[i] * v;
    }
    fine *= half;
    coarse *= 2.0 * half;
    return EvalResult{fine, std::abs(fine - coarse), rule.spec().describe() + "+embedded"};
}

}  // namespace trigdunkl
