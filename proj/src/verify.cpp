#include "trigdunkl/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "trigdunkl/format.hpp"
#include "trigdunkl/kernel.hpp"
#include "trigdunkl/operators.hpp"
#include "trigdunkl/quadrature.hpp"
#include "trigdunkl/specfun.hpp"

namespace trigdunkl {

namespace {

constexpr cplx kI(0.0, 1.0);

struct SuiteEntry {
    Suite suite;
    std::string_view name;
};

constexpr std::array<SuiteEntry, 10> kSuites = {{
    {Suite::all, "all"},
    {Suite::eigen, "eigen"},
    {Suite::duality, "duality"},
    {Suite::intertwine, "intertwine"},
    {Suite::kernel_consistency, "kernel-consistency"},
    {Suite::positivity, "positivity"},
    {Suite::limits, "limits"},
    {Suite::cherednik, "cherednik"},
    {Suite::delta0, "delta0"},
    {Suite::quadrature, "quadrature"},
}};

std::string kstr(double k1, double k2) {
    return "k=(" + format_double(k1) + "," + format_double(k2) + ")";
}

double rel_gap(cplx a, cplx b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

class RowSink {
public:
    explicit RowSink(std::optional<double> tol_override) : tol_override_(tol_override) {}

    void add(std::string check, std::string point, cplx lhs, cplx rhs, double gap, double tol) {
        const double t = tol_override_ ? *tol_override_ : tol;
        const bool pass = std::isfinite(gap) && gap <= t;
        rows_.push_back(CheckRow{std::move(check), std::move(point), lhs, rhs, gap, t, pass});
    }

    void add_flag(std::string check, std::string point, cplx lhs, cplx rhs, double gap, bool pass) {
        rows_.push_back(CheckRow{std::move(check), std::move(point), lhs, rhs, gap, 0.0, pass});
    }

    std::vector<CheckRow> take() { return std::move(rows_); }

private:
    std::optional<double> tol_override_;
    std::vector<CheckRow> rows_;
};

// Uniform double in [lo, hi) from the raw engine output; the standard
// distributions are not reproducible across library implementations.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

void suite_eigen(const NumericConfig& cfg, RowSink& sink) {
    for (double k1 : grid_k_values()) {
        for (double k2 : grid_k_values()) {
            const Multiplicity k(k1, k2);
            const KernelEvaluator kernel(k, cfg.quad);
            for (double lambda : grid_eigen_lambda()) {
                const TestFunction wave = TestFunction::plane_wave(lambda);
                for (double x : grid_eigen_x()) {
                    const cplx v = apply_V(kernel, wave, x, cfg.quad.outer_level).value;
                    const cplx g = opdam_G(k, lambda, x);
                    sink.add("eigen", kstr(k1, k2) + " lambda=" + format_double(lambda) + " x=" + format_double(x),
                             v, g, std::abs(v - g) / (1.0 + std::abs(g)), cfg.tol.eigen);
                }
            }
        }
    }
}

void suite_kernel_consistency(const NumericConfig& cfg, RowSink& sink) {
    const double h = cfg.ktilde_fd_step;
    for (double k1 : grid_k_values()) {
        for (double k2 : grid_k_values()) {
            const KernelEvaluator kernel(Multiplicity(k1, k2), cfg.quad);
            for (double x : grid_kernel_x()) {
                for (double frac : grid_kernel_y_fraction()) {
                    const KernelPoint p(x, frac * std::abs(x));
                    const double y = p.y();
                    const std::string point = kstr(k1, k2) + " x=" + format_double(x) + " y=" + format_double(y);

                    const cplx direct = kernel.kernel(x, y, p.gap());
                    const cplx assembled = kernel.kernel_mourou(x, y, p.gap());
                    sink.add("kernel-oracle", point, direct, assembled, rel_gap(direct, assembled),
                             cfg.tol.kernel_consistency);

                    const cplx kt = kernel.ktilde(x, y, p.gap(), KTildeForm::direct);
                    const cplx kb = kernel.ktilde(x, y, p.gap(), KTildeForm::byparts);
                    sink.add("ktilde-byparts", point, kt, kb, rel_gap(kt, kb), cfg.tol.byparts);

                    if (y != 0.0) {
                        const double yp = y + h;
                        const double ym = y - h;
                        const double ax = std::abs(x);
                        const cplx fd = (kernel.ktilde(x, yp, ax - std::abs(yp), KTildeForm::byparts) -
                                         kernel.ktilde(x, ym, ax - std::abs(ym), KTildeForm::byparts)) /
                                        (2.0 * h);
                        const cplx d = kernel.dktilde_dy(x, y, p.gap());
                        sink.add("dktilde-fd", point, d, fd, rel_gap(d, fd), cfg.tol.derivative_fd);
                    }
                }
            }
        }
    }
}

void suite_limits(const NumericConfig& cfg, RowSink& sink) {
    constexpr double kSmall = 1e-4;
    const std::array<std::pair<double, double>, 3> points = {{{1.3, 0.4}, {-0.6, 0.2}, {2.4, -1.8}}};
    for (double other : grid_k_values()) {
        for (const auto& [x, y] : points) {
            const KernelPoint p(x, y);
            const std::string at = " x=" + format_double(x) + " y=" + format_double(y);

            const cplx k1_small = kernel_K(Multiplicity(kSmall, other), p, cfg.quad).value;
            const double k1_zero = kernel_K_limit_k1zero(other, p);
            sink.add("limit-k1", kstr(kSmall, other) + at, k1_small, k1_zero, rel_gap(k1_small, k1_zero),
                     cfg.tol.limits);

            const cplx k2_small = kernel_K(Multiplicity(other, kSmall), p, cfg.quad).value;
            const double k2_zero = kernel_K_limit_k2zero(other, p);
            sink.add("limit-k2", kstr(other, kSmall) + at, k2_small, k2_zero, rel_gap(k2_small, k2_zero),
                     cfg.tol.limits);
        }
    }
}

void suite_positivity(const NumericConfig& cfg, RowSink& sink) {
    const ScanReport report = positivity_scan(default_scan_grid(), cfg.quad);
    for (const ScanCell& c : report.cells) {
        sink.add_flag("kernel-positive", kstr(c.k1, c.k2) + " x=" + format_double(c.x) + " y=" + format_double(c.y),
                      c.value, 0.0, c.value, c.value > 0.0);
    }
    const ScanCell& m = report.cells[report.argmin];
    sink.add_flag("positivity-min", kstr(m.k1, m.k2) + " x=" + format_double(m.x) + " y=" + format_double(m.y),
                  report.min_value, 0.0, report.min_value, report.all_positive);
}

void suite_duality(const NumericConfig& cfg, RowSink& sink) {
    const BumpPair pair = registered_bump_pair(2.0);
    for (double k1 : grid_k_values()) {
        for (double k2 : grid_k_values()) {
            const DualityTerms t = duality_terms(Multiplicity(k1, k2), pair.f, pair.g, cfg.quad);
            sink.add("duality", kstr(k1, k2) + " f=" + pair.f.id() + " g=" + pair.g.id(), t.lhs, t.rhs, t.gap,
                     cfg.tol.duality);
        }
    }
}

void suite_intertwine(const NumericConfig& cfg, RowSink& sink) {
    const std::array<TestFunction, 2> functions = {TestFunction::plane_wave(1.0), TestFunction::monomial(2)};
    for (double k1 : grid_k_values()) {
        for (double k2 : grid_k_values()) {
            const Multiplicity k(k1, k2);
            for (const TestFunction& f : functions) {
                for (double x : grid_eigen_x()) {
                    const IntertwineTerms t = intertwine_terms(k, f, x, cfg.quad, cfg.intertwine_step);
                    sink.add("intertwine", kstr(k1, k2) + " f=" + f.id() + " x=" + format_double(x), t.d_of_vf,
                             t.v_of_df, t.gap, cfg.tol.intertwine);
                }
            }
        }
    }
}

void suite_cherednik(const NumericConfig& cfg, RowSink& sink) {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 100; ++i) {
        const double k1 = uniform(rng, 0.05, 3.0);
        const double k2 = uniform(rng, 0.05, 3.0);
        const double sign = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        const double x = sign * uniform(rng, 0.05, 3.0);
        const int family = static_cast<int>(uniform(rng, 0.0, 3.0));
        const double param = uniform(rng, -2.0, 2.0);
        TestFunction f = family == 0   ? TestFunction::plane_wave(1.5 * param)
                         : family == 1 ? TestFunction::gaussian(0.5 * param)
                                       : TestFunction::monomial(1 + static_cast<int>(std::abs(param) * 1.5));
        const Multiplicity k(k1, k2);
        const cplx reg = cherednik_D(k, f, x, DForm::regularized);
        const cplx ct = cherednik_D(k, f, x, DForm::cothtanh);
        sink.add("cherednik-forms", kstr(k1, k2) + " f=" + f.id() + " x=" + format_double(x), reg, ct,
                 rel_gap(reg, ct), cfg.tol.cherednik_forms);
    }

    const double h = cfg.opdam_fd_step;
    for (double k1 : grid_k_values()) {
        for (double k2 : grid_k_values()) {
            const Multiplicity k(k1, k2);
            for (double lambda : grid_eigen_lambda()) {
                auto g = [&](double t) { return opdam_G(k, lambda, t); };
                auto dg = [&](double t) { return (g(t + h) - g(t - h)) / (2.0 * h); };
                for (double x : grid_eigen_x()) {
                    const cplx d = cherednik_D(k, g, dg, x, DForm::regularized);
                    const cplx expected = kI * lambda * g(x);
                    sink.add("cherednik-eigen",
                             kstr(k1, k2) + " lambda=" + format_double(lambda) + " x=" + format_double(x), d,
                             expected, std::abs(d - expected) / (1.0 + std::abs(g(x))), cfg.tol.cherednik_eigen);
                }
            }
        }
    }
}

// |V f(x) - f(0)| <= C |x| with C taken at the coarsest x, and strictly
// decreasing as x shrinks. gap = |V f(x) - f(0)| / (C |x|), compared with 1.
void suite_delta0(const NumericConfig& cfg, RowSink& sink) {
    const TestFunction f = TestFunction::gaussian(0.3);
    const std::array<double, 3> steps = {1e-1, 1e-2, 1e-3};
    for (double k1 : grid_k_values()) {
        for (double k2 : grid_k_values()) {
            const KernelEvaluator kernel(Multiplicity(k1, k2), cfg.quad);
            for (double sign : {1.0, -1.0}) {
                double bound = 0.0;
                double previous = 0.0;
                for (std::size_t i = 0; i < steps.size(); ++i) {
                    const double x = sign * steps[i];
                    const cplx v = apply_V(kernel, f, x, cfg.quad.outer_level).value;
                    const double err = std::abs(v - f(0.0));
                    if (i == 0) bound = err / steps[0];
                    const double ratio = bound > 0.0 ? err / (bound * steps[i]) : (err == 0.0 ? 0.0 : INFINITY);
                    const bool decreasing = i == 0 || err < previous;
                    previous = err;
                    const std::string point = kstr(k1, k2) + " f=" + f.id() + " x=" + format_double(x);
                    // lhs = |V f(x) - f(0)|, rhs = C |x| with C from the coarsest step
                    sink.add_flag("delta0-bound", point, err, bound * steps[i], ratio,
                                  ratio <= 1.0 + 1e-12 && decreasing);
                }
            }
        }
    }
}

void suite_quadrature(const NumericConfig& cfg, RowSink& sink) {
    std::mt19937_64 rng(7);
    for (int n : {1, 2, 3, 8, 32, 64}) {
        const QuadratureRule rule = gauss_legendre(n);
        const int degree = 2 * n - 1;
        std::vector<double> coeff(degree + 1);
        for (double& c : coeff) c = uniform(rng, -1.0, 1.0);
        double exact = 0.0;
        for (int j = 0; j <= degree; j += 2) exact += coeff[j] * 2.0 / (j + 1);
        const auto poly = [&](double t) {
            double acc = 0.0;
            for (int j = degree; j >= 0; --j) acc = acc * t + coeff[j];
            return acc;
        };
        double q = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) q += rule.weights()[i] * poly(rule.nodes()[i]);
        sink.add("legendre-exactness", "n=" + std::to_string(n) + " degree=" + std::to_string(degree), q, exact,
                 std::abs(q - exact) / std::max(std::abs(exact), 1.0), cfg.tol.legendre_exactness);
    }

    const std::array<double, 5> exps = {-0.7, -0.3, 0.0, 0.5, 2.0};
    for (double a : exps) {
        for (double b : exps) {
            for (int n : {16, 64}) {
                const QuadratureRule rule = gauss_jacobi(n, a, b);
                double sum = 0.0;
                for (double w : rule.weights()) sum += w;
                const double beta_integral =
                    std::pow(2.0, a + b + 1.0) * gamma_real(a + 1.0) * gamma_real(b + 1.0) / gamma_real(a + b + 2.0);
                sink.add("jacobi-mass",
                         "n=" + std::to_string(n) + " alpha=" + format_double(a) + " beta=" + format_double(b), sum,
                         beta_integral, rel_gap(sum, beta_integral), cfg.tol.jacobi_mass);
            }
        }
    }

    const QuadratureRule ts = tanh_sinh(cfg.quad.tanh_sinh_level);
    for (double p : {0.1, 0.3, 0.5, 1.0}) {
        const EvalResult r = integrate(
            ts, [p](const MappedNode& n) { return std::pow(n.from_lo, p - 1.0); }, Interval{0.0, 1.0});
        sink.add("tanh-sinh-power", "p=" + format_double(p) + " level=" + std::to_string(ts.spec().size), r.value,
                 1.0 / p, std::abs(r.value - 1.0 / p), cfg.tol.tanh_sinh);
    }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    for (const SuiteEntry& e : kSuites)
        if (e.name == name) return e.suite;
    return std::nullopt;
}

std::string_view suite_name(Suite s) {
    for (const SuiteEntry& e : kSuites)
        if (e.suite == s) return e.name;
    return "unknown";
}

std::vector<double> grid_k_values() { return {0.3, 0.7, 1.5}; }
std::vector<double> grid_eigen_x() { return {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}; }
std::vector<double> grid_eigen_lambda() { return {0.0, 1.0, 2.5}; }
std::vector<double> grid_kernel_x() { return {-2.4, -1.3, -0.6, 0.6, 1.3, 2.4}; }
std::vector<double> grid_kernel_y_fraction() { return {-0.95, -0.7, -0.2, 0.0, 0.2, 0.7, 0.95}; }

std::vector<CheckRow> run_suite(Suite suite, const NumericConfig& cfg, std::optional<double> tol_override) {
    RowSink sink(tol_override);
    auto run = [&](Suite s) {
        switch (s) {
            case Suite::eigen: suite_eigen(cfg, sink); break;
            case Suite::duality: suite_duality(cfg, sink); break;
            case Suite::intertwine: suite_intertwine(cfg, sink); break;
            case Suite::kernel_consistency: suite_kernel_consistency(cfg, sink); break;
            case Suite::positivity: suite_positivity(cfg, sink); break;
            case Suite::limits: suite_limits(cfg, sink); break;
            case Suite::cherednik: suite_cherednik(cfg, sink); break;
            case Suite::delta0: suite_delta0(cfg, sink); break;
            case Suite::quadrature: suite_quadrature(cfg, sink); break;
            case Suite::all: break;
        }
    };
    if (suite == Suite::all) {
        for (const SuiteEntry& e : kSuites)
            if (e.suite != Suite::all) run(e.suite);
    } else {
        run(suite);
    }
    return sink.take();
}

}  // namespace trigdunkl
