#include "trigdunkl/kernel.hpp"

#include <cmath>
#include <numbers>
#include <type_traits>
#include <variant>
#include <vector>

#include "trigdunkl/errors.hpp"
#include "trigdunkl/specfun.hpp"

namespace trigdunkl {

namespace {

template <class S>
S rpow(double base, S expo) {
    if constexpr (std::is_same_v<S, double>) {
        return std::pow(base, expo);
    } else {
        return std::exp(expo * std::log(base));
    }
}

template <class S>
S from_complex(cplx v) {
    if constexpr (std::is_same_v<S, double>) {
        return v.real();
    } else {
        return v;
    }
}

// Nodes on (-1, 1) whose weights already contain (1 + t)^{b} (1 - t)^{a}.
template <class S>
struct WeightedNodes {
    std::vector<double> one_plus;
    std::vector<double> one_minus;
    std::vector<S> weight;
};

template <class S>
WeightedNodes<S> singular_rule(S a, S b, const QuadratureConfig& cfg, bool refined) {
    WeightedNodes<S> out;
    if constexpr (std::is_same_v<S, double>) {
        const int n = refined ? 2 * cfg.jacobi_nodes : cfg.jacobi_nodes;
        const QuadratureRule rule = make_rule(RuleSpec{RuleKind::jacobi, n, a, b});
        out.one_plus.assign(rule.one_plus().begin(), rule.one_plus().end());
        out.one_minus.assign(rule.one_minus().begin(), rule.one_minus().end());
        out.weight.assign(rule.weights().begin(), rule.weights().end());
    } else {
        const int level = refined ? cfg.tanh_sinh_level + 1 : cfg.tanh_sinh_level;
        const QuadratureRule rule = make_rule(RuleSpec{RuleKind::tanh_sinh, level, 0.0, 0.0});
        out.one_plus.assign(rule.one_plus().begin(), rule.one_plus().end());
        out.one_minus.assign(rule.one_minus().begin(), rule.one_minus().end());
        out.weight.resize(rule.size());
        for (std::size_t i = 0; i < rule.size(); ++i) {
            out.weight[i] = rule.weights()[i] * std::exp(b * std::log(out.one_plus[i]) +
                                                          a * std::log(out.one_minus[i]));
        }
    }
    return out;
}

// x + y without cancellation when y is close to -x.
double sum_xy(double x, double y, double gap) {
    if ((x > 0.0) == (y > 0.0) || y == 0.0) return x + y;
    return x > 0.0 ? gap : -gap;
}

template <class S>
class Core {
public:
    Core(S k1, S k2, S c, const QuadratureConfig& cfg, bool refined)
        : k1_(k1), k2_(k2), c_(c), log_c_(std::log(c)), cfg_(cfg), refined_(refined),
          nodes_(singular_rule<S>(k2 - 1.0, k1 - 1.0, cfg, refined)) {}

    S weight(double x) const {
        const double ax = std::abs(x);
        if (ax == 0.0) return S(0.0);
        return rpow(2.0 * std::sinh(0.5 * ax), 2.0 * k1_) * rpow(2.0 * std::sinh(ax), 2.0 * k2_);
    }

    S weighted_kernel(double x, double y, double gap) const { return main_kernel(x, y, gap, false); }

    S kernel(double x, double y, double gap) const { return main_kernel(x, y, gap, true); }

    S jacobi_kernel(double x, double y, double gap) const {
        const Jac j = jacobi_setup(x, y, gap);
        const S e2 = k2_ - 1.0;
        const S integral = sum(j.upper, 0, 0, [&](double u) { return rpow(2.0 * (j.cx + j.cy + u), e2); });
        return 2.0 * c_ / weight(2.0 * x) * std::sinh(2.0 * std::abs(x)) *
               rpow(0.5 * j.upper, k1_ + k2_ - 1.0) * integral;
    }

    S ktilde_direct(double x, double y, double gap) const {
        const Jac j = jacobi_setup(x, y, gap);
        const S integral = sum(j.upper, 0, 1, [&](double u) { return rpow(2.0 * (j.cx + j.cy + u), k2_); });
        return c_ / k2_ * rpow(0.5 * j.upper, k1_ + k2_) * integral;
    }

    S ktilde_byparts(double x, double y, double gap) const {
        const Jac j = jacobi_setup(x, y, gap);
        const S e2 = k2_ - 1.0;
        const S integral = sum(j.upper, 1, 0, [&](double u) {
            return rpow(2.0 * (j.cx + j.cy + u), e2) * (j.cy + u);
        });
        return 4.0 * c_ / k1_ * rpow(0.5 * j.upper, k1_ + k2_) * integral;
    }

    // int_{|y|}^{|x|} K(w, y) A(2w) dw with v = cosh w - cosh y as outer variable.
    S ktilde_defining(double x, double y, double gap) const {
        const Jac j = jacobi_setup(x, y, gap);
        const S kappa = k1_ + k2_;
        const WeightedNodes<S> outer = singular_rule<S>(S(0.0), kappa - 1.0, cfg_, refined_);
        const S e2 = k2_ - 1.0;
        S total = 0.0;
        for (std::size_t jn = 0; jn < outer.weight.size(); ++jn) {
            const double v = 0.5 * j.upper * outer.one_plus[jn];
            const S inner = sum(v, 0, 0, [&](double u) { return rpow(2.0 * (2.0 * j.cy + v + u), e2); });
            total += outer.weight[jn] * (j.cy + v) * inner;
        }
        return 4.0 * c_ * rpow(2.0, 1.0 - kappa) * rpow(0.5 * j.upper, kappa) * total;
    }

    S dktilde_dy(double x, double y, double gap) const {
        if (y == 0.0) return S(0.0);
        const Jac j = jacobi_setup(x, y, gap);
        const S e2 = k2_ - 1.0;
        const S integral = sum(j.upper, 0, 0, [&](double u) {
            return rpow(2.0 * (j.cx + j.cy + u), e2) * (j.cy + u);
        });
        return -4.0 * c_ * std::sinh(y) * rpow(0.5 * j.upper, k1_ + k2_ - 1.0) * integral;
    }

    S kernel_mourou(double x, double y, double gap, DerivativeConvention conv) const {
        const double hx = 0.5 * x;
        const double hy = 0.5 * y;
        const double hgap = 0.5 * gap;
        const double sgn = x > 0.0 ? 1.0 : -1.0;
        const S inv_a = 1.0 / weight(x);
        const double chain = conv == DerivativeConvention::total ? 0.5 : 1.0;
        return 0.25 * jacobi_kernel(hx, hy, hgap) +
               sgn * (0.25 * k1_ + 0.5 * k2_) * inv_a * ktilde_direct(hx, hy, hgap) -
               sgn * 0.5 * inv_a * chain * dktilde_dy(hx, hy, hgap);
    }

private:
    // The prefactor c/2 (U/2)^{k1+k2-1} [A(x)^{-1}] and the size of sigma are
    // combined in log space: near x = 0 the pieces over- and underflow
    // separately while the kernel itself stays representable.
    S main_kernel(double x, double y, double gap, bool divide_by_weight) const {
        const double ax = std::abs(x);
        const double ay = std::abs(y);
        const double cx = std::cosh(0.5 * ax);
        const double cy = std::cosh(0.5 * ay);
        const double a = std::sinh(0.25 * (ax + ay));
        const double b = std::sinh(0.25 * gap);
        const double upper = 2.0 * a * b;
        // sigma = sign(x) {(e^x - e^{-y}) - 2 e^{-y/2} u}
        const double lead = std::exp(-y) * std::expm1(sum_xy(x, y, gap));
        const double slope = 2.0 * std::exp(-0.5 * y);
        const double scale = std::abs(lead) + slope * upper;
        const double sgn = x > 0.0 ? 1.0 : -1.0;
        const double lead_s = sgn * lead / scale;
        // slope u / scale written as (slope upper / scale) (u / upper) so that
        // a subnormal scale or upper limit cannot overflow
        const double mu = sgn * slope * upper / scale;
        const S e2 = k2_ - 1.0;
        const S integral = sum(upper, 0, 0, [&](double u, double frac) {
            return (lead_s - mu * frac) * rpow(2.0 * (cx + cy + u), e2);
        });
        S log_pref = log_c_ - std::numbers::ln2 + (k1_ + k2_ - 1.0) * (std::log(a) + std::log(b)) +
                     std::log(scale);
        if (divide_by_weight)
            log_pref -= 2.0 * k1_ * std::log(2.0 * std::sinh(0.5 * ax)) + 2.0 * k2_ * std::log(2.0 * std::sinh(ax));
        return std::exp(log_pref) * integral;
    }

    struct Jac {
        double cx;
        double cy;
        double upper;
    };

    static Jac jacobi_setup(double x, double y, double gap) {
        const double ax = std::abs(x);
        const double ay = std::abs(y);
        return {std::cosh(ax), std::cosh(ay), 2.0 * std::sinh(0.5 * (ax + ay)) * std::sinh(0.5 * gap)};
    }

    // sum_i W_i (1 + t_i)^{p1} (1 - t_i)^{p2} g(u_i), u_i = upper (1 + t_i) / 2
    template <class G>
    S sum(double upper, int p1, int p2, G&& g) const {
        S acc = 0.0;
        const std::size_t n = nodes_.weight.size();
        for (std::size_t i = 0; i < n; ++i) {
            const double tp = nodes_.one_plus[i];
            double factor = 1.0;
            if (p1 == 1) factor *= tp;
            if (p2 == 1) factor *= nodes_.one_minus[i];
            if constexpr (std::is_invocable_v<G, double, double>) {
                acc += nodes_.weight[i] * (factor * g(0.5 * upper * tp, 0.5 * tp));
            } else {
                acc += nodes_.weight[i] * (factor * g(0.5 * upper * tp));
            }
        }
        return acc;
    }

    S k1_;
    S k2_;
    S c_;
    S log_c_;
    QuadratureConfig cfg_;
    bool refined_;
    WeightedNodes<S> nodes_;
};

void require_ordered(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("x and y must be finite");
    if (!(std::abs(y) < std::abs(x))) throw DomainError("require |y| < |x|");
}

template <class F>
EvalResult with_refinement(const Multiplicity& k, const QuadratureConfig& cfg, F&& f) {
    const KernelEvaluator base(k, cfg, false);
    const KernelEvaluator fine(k, cfg, true);
    const cplx v = f(base);
    const cplx vf = f(fine);
    return EvalResult{v, std::abs(vf - v), base.method()};
}

double limit_prefactor(double k) {
    return gamma_real(k + 0.5) / (std::sqrt(std::numbers::pi) * gamma_real(k));
}

}  // namespace

// ---------------------------------------------------------------------------

Multiplicity::Multiplicity(std::complex<double> k1, std::complex<double> k2) : k1_(k1), k2_(k2) {
    const bool finite = std::isfinite(k1.real()) && std::isfinite(k1.imag()) && std::isfinite(k2.real()) &&
                        std::isfinite(k2.imag());
    if (!finite || !(k1.real() > 0.0) || !(k2.real() > 0.0))
        throw DomainError("multiplicity requires Re k1 > 0 and Re k2 > 0");
}

KernelPoint::KernelPoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("kernel point must be finite");
    if (x == 0.0) throw DomainError("kernel point requires x != 0");
    if (!(std::abs(y) < std::abs(x))) throw DomainError("require |y| < |x|");
}

cplx weight_A(const Multiplicity& k, double x) {
    if (!std::isfinite(x)) throw DomainError("weight_A: x must be finite");
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    const double a = 2.0 * std::sinh(0.5 * ax);
    const double b = 2.0 * std::sinh(ax);
    if (k.real_positive()) return std::pow(a, 2.0 * k.k1_real()) * std::pow(b, 2.0 * k.k2_real());
    return std::exp(2.0 * k.k1() * std::log(a) + 2.0 * k.k2() * std::log(b));
}

double constant_c(const Multiplicity& k) {
    if (!k.real_positive()) throw DomainError("constant_c: requires real k1, k2 > 0");
    const double k1 = k.k1_real();
    const double k2 = k.k2_real();
    const double value = std::exp2(3.0 * (k1 + k2)) * gamma_real(k1 + k2 + 0.5) /
                         (std::sqrt(std::numbers::pi) * gamma_real(k1) * gamma_real(k2));
    if (!std::isfinite(value)) throw DomainError("constant_c: value overflows for this multiplicity");
    return value;
}

cplx constant_c_complex(const Multiplicity& k) {
    const cplx k1 = k.k1();
    const cplx k2 = k.k2();
    return std::exp(3.0 * (k1 + k2) * std::numbers::ln2 + log_gamma(k1 + k2 + 0.5) -
                    0.5 * std::log(std::numbers::pi) - log_gamma(k1) - log_gamma(k2));
}

double sigma(double x, double y, double z) {
    const double sgn = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    return sgn * (std::exp(0.5 * x) * 2.0 * std::cosh(0.5 * x) - std::exp(-0.5 * y) * 2.0 * std::cosh(0.5 * z));
}

// ---------------------------------------------------------------------------

struct KernelEvaluator::Impl {
    Multiplicity k;
    std::string method;
    std::variant<Core<double>, Core<cplx>> core;
};

namespace {

std::variant<Core<double>, Core<cplx>> make_core(const Multiplicity& k, const QuadratureConfig& cfg,
                                                 bool refined) {
    if (k.real_positive())
        return Core<double>(k.k1_real(), k.k2_real(), constant_c(k), cfg, refined);
    return Core<cplx>(k.k1(), k.k2(), constant_c_complex(k), cfg, refined);
}

std::string make_method(const Multiplicity& k, const QuadratureConfig& cfg, bool refined) {
    RuleSpec spec;
    if (k.real_positive()) {
        spec = RuleSpec{RuleKind::jacobi, cfg.jacobi_nodes, k.k2_real() - 1.0, k.k1_real() - 1.0};
    } else {
        spec = RuleSpec{RuleKind::tanh_sinh, cfg.tanh_sinh_level, 0.0, 0.0};
    }
    if (refined) spec = spec.refined();
    return spec.describe();
}

}  // namespace

KernelEvaluator::KernelEvaluator(const Multiplicity& k, const QuadratureConfig& cfg, bool refined)
    : impl_(std::make_shared<const Impl>(Impl{k, make_method(k, cfg, refined), make_core(k, cfg, refined)})) {}

const Multiplicity& KernelEvaluator::multiplicity() const noexcept { return impl_->k; }
const std::string& KernelEvaluator::method() const noexcept { return impl_->method; }

cplx KernelEvaluator::kernel(double x, double y, double gap) const {
    return std::visit([&](const auto& c) { return cplx(c.kernel(x, y, gap)); }, impl_->core);
}

cplx KernelEvaluator::weighted_kernel(double x, double y, double gap) const {
    return std::visit([&](const auto& c) { return cplx(c.weighted_kernel(x, y, gap)); }, impl_->core);
}

cplx KernelEvaluator::jacobi_kernel(double x, double y, double gap) const {
    return std::visit([&](const auto& c) { return cplx(c.jacobi_kernel(x, y, gap)); }, impl_->core);
}

cplx KernelEvaluator::ktilde(double x, double y, double gap, KTildeForm form) const {
    return std::visit(
        [&](const auto& c) {
            switch (form) {
                case KTildeForm::direct: return cplx(c.ktilde_direct(x, y, gap));
                case KTildeForm::byparts: return cplx(c.ktilde_byparts(x, y, gap));
                case KTildeForm::defining: return cplx(c.ktilde_defining(x, y, gap));
            }
            return cplx(0.0);
        },
        impl_->core);
}

cplx KernelEvaluator::dktilde_dy(double x, double y, double gap) const {
    return std::visit([&](const auto& c) { return cplx(c.dktilde_dy(x, y, gap)); }, impl_->core);
}

cplx KernelEvaluator::kernel_mourou(double x, double y, double gap, DerivativeConvention conv) const {
    return std::visit([&](const auto& c) { return cplx(c.kernel_mourou(x, y, gap, conv)); }, impl_->core);
}

// ---------------------------------------------------------------------------

EvalResult kernel_K(const Multiplicity& k, const KernelPoint& p, const QuadratureConfig& cfg) {
    return with_refinement(k, cfg, [&](const KernelEvaluator& e) { return e.kernel(p.x(), p.y(), p.gap()); });
}

EvalResult kernel_K_mourou(const Multiplicity& k, const KernelPoint& p, const QuadratureConfig& cfg,
                           DerivativeConvention conv) {
    return with_refinement(
        k, cfg, [&](const KernelEvaluator& e) { return e.kernel_mourou(p.x(), p.y(), p.gap(), conv); });
}

EvalResult jacobi_kernel(const Multiplicity& k, double x, double y, const QuadratureConfig& cfg) {
    require_ordered(x, y);
    const double gap = std::abs(x) - std::abs(y);
    return with_refinement(k, cfg, [&](const KernelEvaluator& e) { return e.jacobi_kernel(x, y, gap); });
}

EvalResult ktilde(const Multiplicity& k, double x, double y, KTildeForm form, const QuadratureConfig& cfg) {
    require_ordered(x, y);
    const double gap = std::abs(x) - std::abs(y);
    return with_refinement(k, cfg, [&](const KernelEvaluator& e) { return e.ktilde(x, y, gap, form); });
}

EvalResult dktilde_dy(const Multiplicity& k, double x, double y, const QuadratureConfig& cfg) {
    require_ordered(x, y);
    const double gap = std::abs(x) - std::abs(y);
    return with_refinement(k, cfg, [&](const KernelEvaluator& e) { return e.dktilde_dy(x, y, gap); });
}

double kernel_K_limit_k1zero(double k2, const KernelPoint& p) {
    if (!std::isfinite(k2) || !(k2 > 0.0)) throw DomainError("kernel_K_limit_k1zero: require k2 > 0");
    const double x = p.x();
    const double y = p.y();
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    const double cosh_diff = 2.0 * std::sinh(0.5 * (ax + ay)) * std::sinh(0.5 * p.gap());
    const double sgn = x > 0.0 ? 1.0 : -1.0;
    const double exp_diff = sgn * std::exp(-y) * std::expm1(sum_xy(x, y, p.gap()));  // sign(x) (e^x - e^{-y})
    return std::exp2(k2 - 1.0) * limit_prefactor(k2) * std::pow(std::sinh(ax), -2.0 * k2) *
           std::pow(cosh_diff, k2 - 1.0) * exp_diff;
}

double kernel_K_limit_k2zero(double k1, const KernelPoint& p) {
    if (!std::isfinite(k1) || !(k1 > 0.0)) throw DomainError("kernel_K_limit_k2zero: require k1 > 0");
    const double x = p.x();
    const double y = p.y();
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    const double cosh_diff = 2.0 * std::sinh(0.25 * (ax + ay)) * std::sinh(0.25 * p.gap());
    const double sgn = x > 0.0 ? 1.0 : -1.0;
    const double exp_diff = sgn * std::exp(-0.5 * y) * std::expm1(0.5 * sum_xy(x, y, p.gap()));
    return std::exp2(k1 - 2.0) * limit_prefactor(k1) * std::pow(std::sinh(0.5 * ax), -2.0 * k1) *
           std::pow(cosh_diff, k1 - 1.0) * exp_diff;
}

}  // namespace trigdunkl
