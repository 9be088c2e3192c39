#include "trigdunkl/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "trigdunkl/errors.hpp"
#include "trigdunkl/format.hpp"

namespace trigdunkl {

namespace {

// Nodes whose distance to the singular endpoint is subnormal carry a
// negligible weight; the kernel cannot be evaluated there.
bool underflowed(double distance) { return !(distance >= std::numeric_limits<double>::min()); }

constexpr cplx kI(0.0, 1.0);

std::string fmt_param(double v) { return format_double(v); }

void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

EvalResult add(const EvalResult& a, const EvalResult& b) {
    return EvalResult{a.value + b.value, a.est_error + b.est_error, a.method};
}

// [lo, hi] cut at every breakpoint strictly inside it and clipped to the
// support of the integrand, so that each piece has a smooth integrand.
std::vector<Interval> pieces(double lo, double hi, const std::optional<Interval>& support,
                             std::vector<double> breaks = {}) {
    if (support) {
        lo = std::max(lo, support->lo);
        hi = std::min(hi, support->hi);
    }
    std::vector<Interval> out;
    if (!(lo < hi)) return out;
    std::sort(breaks.begin(), breaks.end());
    double start = lo;
    for (double b : breaks) {
        if (b > start && b < hi) {
            out.push_back(Interval{start, b});
            start = b;
        }
    }
    out.push_back(Interval{start, hi});
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// TestFunction

TestFunction::TestFunction(std::string id, Fn eval, std::optional<Fn> deriv, std::optional<Interval> support)
    : id_(std::move(id)), eval_(std::move(eval)), deriv_(std::move(deriv)), support_(support) {
    if (!eval_) throw ContractError("test function needs an evaluator");
    if (support_ && !(std::isfinite(support_->lo) && std::isfinite(support_->hi) && support_->lo < support_->hi))
        throw ContractError("declared support must be a finite interval lo < hi");
}

std::optional<double> TestFunction::support() const noexcept {
    if (!support_) return std::nullopt;
    return std::max(std::abs(support_->lo), std::abs(support_->hi));
}

cplx TestFunction::derivative(double x) const {
    if (!deriv_) throw ContractError("test function '" + id_ + "' has no registered derivative");
    return (*deriv_)(x);
}

TestFunction TestFunction::derivative_function() const {
    if (!deriv_) throw ContractError("test function '" + id_ + "' has no registered derivative");
    return TestFunction(id_ + "'", *deriv_, std::nullopt, support_);
}

TestFunction TestFunction::scaled(cplx factor) const {
    std::optional<Fn> d;
    if (deriv_) {
        d = [inner = *deriv_, factor](double x) { return factor * inner(x); };
    }
    return TestFunction(id_, [inner = eval_, factor](double x) { return factor * inner(x); }, d, support_);
}

TestFunction TestFunction::constant(cplx value) {
    return TestFunction("one", [value](double) { return value; }, Fn([](double) { return cplx(0.0); }));
}

TestFunction TestFunction::plane_wave(double lambda) {
    check_finite(lambda, "plane wave frequency");
    return TestFunction(
        "plane-wave(" + fmt_param(lambda) + ")", [lambda](double y) { return std::exp(kI * lambda * y); },
        Fn([lambda](double y) { return kI * lambda * std::exp(kI * lambda * y); }));
}

TestFunction TestFunction::monomial(int degree) {
    if (degree < 0) throw DomainError("monomial degree must be non-negative");
    return TestFunction(
        "monomial(" + std::to_string(degree) + ")", [degree](double y) { return cplx(std::pow(y, degree)); },
        Fn([degree](double y) {
            return degree == 0 ? cplx(0.0) : cplx(degree * std::pow(y, degree - 1));
        }));
}

TestFunction TestFunction::gaussian(double centre) {
    check_finite(centre, "gaussian centre");
    return TestFunction(
        "gaussian(" + fmt_param(centre) + ")",
        [centre](double y) { return cplx(std::exp(-(y - centre) * (y - centre))); },
        Fn([centre](double y) { return cplx(-2.0 * (y - centre) * std::exp(-(y - centre) * (y - centre))); }));
}

TestFunction TestFunction::bump(double radius, double centre) {
    check_finite(centre, "bump centre");
    if (!std::isfinite(radius) || !(radius > 0.0)) throw DomainError("bump radius must be positive");
    auto value = [radius, centre](double y) {
        const double s = (y - centre) / radius;
        const double q = 1.0 - s * s;
        return q > 0.0 ? cplx(std::exp(-1.0 / q)) : cplx(0.0);
    };
    auto deriv = [radius, centre](double y) {
        const double s = (y - centre) / radius;
        const double q = 1.0 - s * s;
        if (!(q > 0.0)) return cplx(0.0);
        return cplx(std::exp(-1.0 / q) * (-2.0 * s / (q * q)) / radius);
    };
    return TestFunction("bump(" + fmt_param(radius) + "," + fmt_param(centre) + ")", value, Fn(deriv),
                        Interval{centre - radius, centre + radius});
}

TestFunction test_function_from_id(std::string_view id, double param) {
    if (id == "one") return TestFunction::constant(1.0);
    if (id == "plane-wave") return TestFunction::plane_wave(param);
    if (id == "monomial") {
        if (param < 0.0 || std::floor(param) != param || param > 64.0)
            throw DomainError("monomial degree must be an integer in [0, 64]");
        return TestFunction::monomial(static_cast<int>(param));
    }
    if (id == "gaussian") return TestFunction::gaussian(param);
    if (id == "bump") return TestFunction::bump(param);
    throw DomainError("unknown test function '" + std::string(id) +
                      "' (expected one, plane-wave, monomial, gaussian, bump)");
}

BumpPair registered_bump_pair(double support) {
    if (!(support > 2.0 - 1e-12)) throw DomainError("bump pair needs support >= 2");
    return BumpPair{TestFunction::bump(1.5, 0.5), TestFunction::bump(support)};
}

// ---------------------------------------------------------------------------
// Cherednik operator

cplx cherednik_D(const Multiplicity& k, const std::function<cplx(double)>& f,
                 const std::function<cplx(double)>& df, double x, DForm form, AtOrigin at_origin) {
    check_finite(x, "x");
    const cplx k1 = k.k1();
    const cplx k2 = k.k2();
    if (x == 0.0) {
        if (at_origin == AtOrigin::reject)
            throw DomainError("cherednik_D: x = 0 needs the limit mode (coefficient poles)");
        return df(0.0) * (1.0 + 2.0 * k1 + 2.0 * k2) - k.rho() * f(0.0);
    }
    const cplx fx = f(x);
    const cplx fmx = f(-x);
    const cplx odd = fx - fmx;
    if (form == DForm::regularized) {
        const cplx coeff = -k1 / std::expm1(-x) - 2.0 * k2 / std::expm1(-2.0 * x);
        return df(x) + coeff * odd - k.rho() * fx;
    }
    const double th = std::tanh(0.5 * x);
    const cplx coeff = 0.5 * (k1 + k2) / th + 0.5 * k2 * th;
    return df(x) + coeff * odd - k.rho() * fmx;
}

cplx cherednik_D(const Multiplicity& k, const TestFunction& f, double x, DForm form, AtOrigin at_origin) {
    if (!f.has_derivative())
        throw ContractError("cherednik_D: test function '" + f.id() + "' has no registered derivative");
    return cherednik_D(
        k, [&f](double t) { return f(t); }, [&f](double t) { return f.derivative(t); }, x, form, at_origin);
}

// ---------------------------------------------------------------------------
// V and tV

EvalResult apply_V(const KernelEvaluator& kernel, const TestFunction& f, double x, int level) {
    check_finite(x, "x");
    if (x == 0.0) return EvalResult{f(0.0), 0.0, "delta0"};
    const QuadratureRule rule = tanh_sinh(level);
    const double ax = std::abs(x);
    EvalResult out{0.0, 0.0, "outer " + rule.spec().describe() + ", inner " + kernel.method()};
    // |x| - |y| is formed from the distance to the nearer end of [-|x|, |x|]
    for (const Interval& iv : pieces(-ax, 0.0, f.support_interval())) {
        const double offset = iv.lo + ax;
        out = add(out, integrate_embedded(
                           rule,
                           [&](const MappedNode& n) {
                               const double gap = offset + n.from_lo;
                               const cplx fy = f(n.x);
                               if (fy == 0.0 || underflowed(gap)) return cplx(0.0);
                               return kernel.kernel(x, n.x, gap) * fy;
                           },
                           iv));
    }
    for (const Interval& iv : pieces(0.0, ax, f.support_interval())) {
        const double offset = ax - iv.hi;
        out = add(out, integrate_embedded(
                           rule,
                           [&](const MappedNode& n) {
                               const double gap = offset + n.from_hi;
                               const cplx fy = f(n.x);
                               if (fy == 0.0 || underflowed(gap)) return cplx(0.0);
                               return kernel.kernel(x, n.x, gap) * fy;
                           },
                           iv));
    }
    return out;
}

EvalResult apply_V(const Multiplicity& k, const TestFunction& f, double x, const QuadratureConfig& cfg) {
    const KernelEvaluator kernel(k, cfg);
    return apply_V(kernel, f, x, cfg.outer_level);
}

EvalResult apply_Vt(const KernelEvaluator& kernel, const TestFunction& g, double y, int level) {
    check_finite(y, "y");
    if (!g.support())
        throw ContractError("apply_Vt: test function '" + g.id() + "' has no declared compact support");
    const double a = *g.support();
    const double ay = std::abs(y);
    const QuadratureRule rule = tanh_sinh(level);
    EvalResult out{0.0, 0.0, "outer " + rule.spec().describe() + ", inner " + kernel.method()};
    if (ay >= a) return out;
    for (const Interval& iv : pieces(ay, a, g.support_interval())) {
        const double offset = iv.lo - ay;
        out = add(out, integrate_embedded(
                           rule,
                           [&](const MappedNode& n) {
                               const double gap = offset + n.from_lo;
                               const cplx gx = g(n.x);
                               if (gx == 0.0 || underflowed(gap)) return cplx(0.0);
                               return kernel.weighted_kernel(n.x, y, gap) * gx;
                           },
                           iv));
    }
    for (const Interval& iv : pieces(-a, -ay, g.support_interval())) {
        const double offset = -ay - iv.hi;
        out = add(out, integrate_embedded(
                           rule,
                           [&](const MappedNode& n) {
                               const double gap = offset + n.from_hi;
                               const cplx gx = g(n.x);
                               if (gx == 0.0 || underflowed(gap)) return cplx(0.0);
                               return kernel.weighted_kernel(n.x, y, gap) * gx;
                           },
                           iv));
    }
    return out;
}

EvalResult apply_Vt(const Multiplicity& k, const TestFunction& g, double y, const QuadratureConfig& cfg) {
    if (!g.support())
        throw ContractError("apply_Vt: test function '" + g.id() + "' has no declared compact support");
    const KernelEvaluator kernel(k, cfg);
    return apply_Vt(kernel, g, y, cfg.outer_level);
}

DualityTerms duality_terms(const Multiplicity& k, const TestFunction& f, const TestFunction& g,
                           const QuadratureConfig& cfg) {
    if (!g.support())
        throw ContractError("duality: test function '" + g.id() + "' has no declared compact support");
    const double a = *g.support();
    const KernelEvaluator kernel(k, cfg);
    const QuadratureRule rule = tanh_sinh(cfg.pairing_level);

    auto lhs_integrand = [&](double x) {
        const cplx gx = g(x);
        if (gx == 0.0) return cplx(0.0);
        return apply_V(kernel, f, x, cfg.outer_level).value * gx * weight_A(k, x);
    };
    auto rhs_integrand = [&](double y) {
        const cplx fy = f(y);
        if (fy == 0.0) return cplx(0.0);
        return fy * apply_Vt(kernel, g, y, cfg.outer_level).value;
    };
    // V f is not analytic where |x| meets an end of the support of f
    std::vector<double> breaks = {0.0};
    if (const auto sf = f.support_interval()) {
        for (double e : {sf->lo, sf->hi}) {
            breaks.push_back(std::abs(e));
            breaks.push_back(-std::abs(e));
        }
    }
    cplx lhs = 0.0;
    for (const Interval& iv : pieces(-a, a, g.support_interval(), breaks))
        lhs += integrate_embedded(rule, lhs_integrand, iv).value;
    cplx rhs = 0.0;
    for (const Interval& iv : pieces(-a, a, f.support_interval(), {0.0}))
        rhs += integrate_embedded(rule, rhs_integrand, iv).value;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    return DualityTerms{lhs, rhs, std::abs(lhs - rhs) / scale};
}

double duality_gap(const Multiplicity& k, const TestFunction& f, const TestFunction& g,
                   const QuadratureConfig& cfg) {
    return duality_terms(k, f, g, cfg).gap;
}

IntertwineTerms intertwine_terms(const Multiplicity& k, const TestFunction& f, double x,
                                 const QuadratureConfig& cfg, double step_rel) {
    check_finite(x, "x");
    if (x == 0.0) throw DomainError("intertwine_gap: require x != 0");
    if (!f.has_derivative())
        throw ContractError("intertwine_gap: test function '" + f.id() + "' has no registered derivative");
    if (!(step_rel > 0.0)) throw DomainError("intertwine_gap: step must be positive");
    const KernelEvaluator kernel(k, cfg);
    const int level = cfg.outer_level;
    const double h = step_rel * std::max(1.0, std::abs(x));
    if (!(h < std::abs(x))) throw DomainError("intertwine_gap: difference step must be smaller than |x|");

    auto vf = [&](double t) { return apply_V(kernel, f, t, level).value; };
    const cplx dvf = (vf(x + h) - vf(x - h)) / (2.0 * h);
    const cplx d_of_vf = cherednik_D(
        k, vf, [dvf](double) { return dvf; }, x, DForm::regularized);
    const cplx v_of_df = apply_V(kernel, f.derivative_function(), x, level).value;
    return IntertwineTerms{d_of_vf, v_of_df, std::abs(d_of_vf - v_of_df)};
}

double intertwine_gap(const Multiplicity& k, const TestFunction& f, double x, const QuadratureConfig& cfg,
                      double step_rel) {
    return intertwine_terms(k, f, x, cfg, step_rel).gap;
}

// ---------------------------------------------------------------------------
// Positivity scan

ScanGrid default_scan_grid() {
    return ScanGrid{{0.3, 0.7, 1.5},
                    {0.3, 0.7, 1.5},
                    {-2.4, -1.3, -0.6, 0.6, 1.3, 2.4},
                    {-0.9999, -0.99, -0.9, -0.5, 0.0, 0.5, 0.9, 0.99, 0.9999}};
}

ScanReport positivity_scan(const ScanGrid& grid, const QuadratureConfig& cfg) {
    if (grid.k1.empty() || grid.k2.empty() || grid.x.empty() || grid.y_fraction.empty())
        throw DomainError("positivity_scan: every grid axis needs at least one value");
    for (double v : grid.k1)
        if (!std::isfinite(v) || !(v > 0.0)) throw DomainError("positivity_scan: require real k1 > 0");
    for (double v : grid.k2)
        if (!std::isfinite(v) || !(v > 0.0)) throw DomainError("positivity_scan: require real k2 > 0");
    for (double v : grid.x)
        if (!std::isfinite(v) || v == 0.0) throw DomainError("positivity_scan: require finite x != 0");
    for (double v : grid.y_fraction)
        if (!(std::abs(v) < 1.0)) throw DomainError("positivity_scan: require |y fraction| < 1");

    ScanReport report{grid, {}, std::numeric_limits<double>::infinity(), 0, false};
    report.cells.reserve(grid.k1.size() * grid.k2.size() * grid.x.size() * grid.y_fraction.size());
    for (double k1 : grid.k1) {
        for (double k2 : grid.k2) {
            const KernelEvaluator kernel(Multiplicity(k1, k2), cfg);
            for (double x : grid.x) {
                for (double frac : grid.y_fraction) {
                    const KernelPoint p(x, frac * std::abs(x));
                    const double value = kernel.kernel(p.x(), p.y(), p.gap()).real();
                    report.cells.push_back(ScanCell{k1, k2, p.x(), p.y(), value});
                }
            }
        }
    }
    bool any_nan = false;
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        const double v = report.cells[i].value;
        if (std::isnan(v)) {
            if (!any_nan) report.argmin = i;
            any_nan = true;
        } else if (!any_nan && (i == 0 || v < report.min_value)) {
            report.min_value = v;
            report.argmin = i;
        }
    }
    if (any_nan) report.min_value = std::numeric_limits<double>::quiet_NaN();
    report.all_positive = !any_nan && report.min_value > 0.0;
    return report;
}

}  // namespace trigdunkl
