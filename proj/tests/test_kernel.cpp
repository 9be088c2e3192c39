#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trigdunkl/errors.hpp"
#include "trigdunkl/kernel.hpp"
#include "trigdunkl/quadrature.hpp"

using namespace trigdunkl;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// The kernel integral in its original z variable, by plain Gauss-Legendre.
// Only for integer k1, k2 >= 1, where the integrand is analytic up to the ends.
double kernel_brute(double k1, double k2, double x, double y) {
    const Multiplicity k(k1, k2);
    const double c = constant_c(k);
    const EvalResult r = integrate(
        gauss_legendre(200),
        [&](double z) {
            return sigma(x, y, z) * std::pow(std::cosh(0.5 * z) - std::cosh(0.5 * y), k1 - 1.0) *
                   std::pow(std::cosh(x) - std::cosh(z), k2 - 1.0) * std::sinh(0.5 * z);
        },
        Interval{std::abs(y), std::abs(x)});
    return 0.25 * c / weight_A(k, x).real() * r.value.real();
}

}  // namespace

TEST_CASE("Multiplicity validation") {
    CHECK_NOTHROW(Multiplicity(0.3, 1.5));
    CHECK_NOTHROW(Multiplicity(cplx(0.3, -2.0), cplx(1.0, 4.0)));
    CHECK_THROWS_AS(Multiplicity(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(Multiplicity(1.0, -0.5), DomainError);
    CHECK_THROWS_AS(Multiplicity(cplx(-0.1, 1.0), 1.0), DomainError);
    CHECK_THROWS_AS(Multiplicity(NAN, 1.0), DomainError);
    const Multiplicity k(0.6, 0.5);
    CHECK(k.rho() == cplx(0.8));
    CHECK(k.real_positive());
    CHECK_FALSE(Multiplicity(cplx(0.6, 0.1), 0.5).real_positive());
}

TEST_CASE("KernelPoint validation") {
    CHECK_NOTHROW(KernelPoint(1.0, -0.999));
    CHECK_THROWS_AS(KernelPoint(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(KernelPoint(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(KernelPoint(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(KernelPoint(NAN, 0.0), DomainError);
    try {
        KernelPoint(1.0, 2.0);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("require |y| < |x|") != std::string::npos);
    }
    CHECK(KernelPoint(-2.0, 0.5).gap() == 1.5);
}

TEST_CASE("weight_A") {
    const Multiplicity half(0.5, 0.5);
    CHECK(weight_A(half, 0.0) == cplx(0.0));
    CHECK(weight_A(half, 1.0).real() == doctest::Approx(2.0 * std::sinh(0.5) * 2.0 * std::sinh(1.0)).epsilon(1e-15));
    CHECK(weight_A(half, 1.0).real() == doctest::Approx(2.4495673).epsilon(1e-7));
    const Multiplicity k(0.3, 1.7);
    for (double x : {0.1, 0.8, 2.9}) CHECK(weight_A(k, x) == weight_A(k, -x));
}

TEST_CASE("constant_c") {
    CHECK(constant_c(Multiplicity(0.5, 0.5)) == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-14));
    CHECK(constant_c(Multiplicity(1.0, 1.0)) == doctest::Approx(48.0).epsilon(1e-14));
    for (double k1 : {0.1, 0.7, 3.0})
        for (double k2 : {0.2, 1.1, 2.5}) CHECK(constant_c(Multiplicity(k1, k2)) > 0.0);
    CHECK_THROWS_AS(constant_c(Multiplicity(cplx(0.5, 0.1), 0.5)), DomainError);
    CHECK(rel(constant_c_complex(Multiplicity(0.7, 0.4)), constant_c(Multiplicity(0.7, 0.4))) < 1e-13);
}

TEST_CASE("sigma") {
    CHECK(sigma(1.0, 0.0, 0.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
    CHECK(sigma(-1.0, 0.0, 0.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    for (double x : {-2.5, -1.0, -0.3, 0.3, 1.0, 2.5}) {
        for (double fy : {-0.99, -0.5, 0.0, 0.5, 0.99}) {
            const double y = fy * std::abs(x);
            for (double fz : {0.01, 0.5, 0.99}) {
                const double z = std::abs(y) + fz * (std::abs(x) - std::abs(y));
                CHECK(sigma(x, y, z) > 0.0);
            }
        }
    }
}

TEST_CASE("kernel_K against the untransformed integral") {
    for (double k1 : {1.0, 2.0}) {
        for (double k2 : {1.0, 3.0}) {
            for (auto [x, y] : {std::pair{1.0, 0.3}, std::pair{-1.7, 0.9}, std::pair{2.4, -2.0}}) {
                const EvalResult r = kernel_K(Multiplicity(k1, k2), KernelPoint(x, y));
                CHECK(rel(r.value, kernel_brute(k1, k2, x, y)) < 1e-11);
            }
        }
    }
}

TEST_CASE("kernel_K examples") {
    SUBCASE("vanishes at the edge for k = (1, 1)") {
        const double x = 1.3;
        const EvalResult r = kernel_K(Multiplicity(1.0, 1.0), KernelPoint(x, x * (1.0 - 1e-12)));
        CHECK(std::abs(r.value) < 1e-6);
    }
    SUBCASE("k = (0.5, 0.5), x = 1, y = 0.3 matches the assembled kernel") {
        const Multiplicity k(0.5, 0.5);
        const KernelPoint p(1.0, 0.3);
        const EvalResult a = kernel_K(k, p);
        const EvalResult b = kernel_K_mourou(k, p);
        CHECK(a.value.real() > 0.0);
        CHECK(rel(a.value, b.value) < 1e-8);
        CHECK(a.est_error < 1e-10);
        CHECK(a.method == "gauss-jacobi(64,-0.5,-0.5)");
    }
    SUBCASE("positive at k = (0.5, 0.5)") {
        const Multiplicity k(0.5, 0.5);
        for (double x : {-2.0, -0.4, 0.4, 2.0})
            for (double f : {-0.999999, -0.5, 0.0, 0.5, 0.999999})
                CHECK(kernel_K(k, KernelPoint(x, f * std::abs(x))).value.real() > 0.0);
    }
    SUBCASE("y close to -x for x > 0 stays positive") {
        for (double k1 : {0.3, 1.5})
            for (double k2 : {0.3, 1.5})
                for (double eps : {1e-2, 1e-4, 1e-6})
                    CHECK(kernel_K(Multiplicity(k1, k2), KernelPoint(1.3, -1.3 * (1.0 - eps))).value.real() > 0.0);
    }
}

TEST_CASE("kernel_K for complex k") {
    SUBCASE("zero imaginary parts reproduce the real path") {
        const KernelPoint p(1.1, -0.4);
        const EvalResult real = kernel_K(Multiplicity(0.7, 0.4), p);
        KernelEvaluator complex_eval(Multiplicity(cplx(0.7, 1e-300), cplx(0.4, 0.0)));
        CHECK(complex_eval.method() == "tanh-sinh(8)");
        CHECK(rel(complex_eval.kernel(p.x(), p.y(), p.gap()), real.value) < 1e-9);
    }
    SUBCASE("direct and assembled kernels agree") {
        const Multiplicity k(cplx(0.8, 0.5), cplx(1.2, -0.3));
        for (auto [x, y] : {std::pair{1.0, 0.3}, std::pair{-2.0, 1.1}, std::pair{0.7, -0.6}}) {
            const KernelPoint p(x, y);
            const EvalResult a = kernel_K(k, p);
            const EvalResult b = kernel_K_mourou(k, p);
            CHECK(std::abs(a.value.imag()) > 1e-6);
            CHECK(rel(a.value, b.value) < 1e-7);
        }
    }
}

TEST_CASE("limit kernels") {
    SUBCASE("k1 = 0 closed form at k2 = 1/2, x = 1, y = 0") {
        const double expected = 1.0 / (std::sqrt(2.0) * std::numbers::pi) / std::sinh(1.0) /
                                std::sqrt(std::cosh(1.0) - 1.0) * (std::exp(1.0) - 1.0);
        CHECK(kernel_K_limit_k1zero(0.5, KernelPoint(1.0, 0.0)) == doctest::Approx(expected).epsilon(1e-14));
    }
    SUBCASE("k2 = 0 closed form at k1 = 1, x = 2, y = 0") {
        const double expected = 0.25 / (std::sinh(1.0) * std::sinh(1.0)) * (std::exp(1.0) - 1.0);
        CHECK(kernel_K_limit_k2zero(1.0, KernelPoint(2.0, 0.0)) == doctest::Approx(expected).epsilon(1e-14));
    }
    SUBCASE("positive on both sign branches") {
        for (double x : {-2.4, -0.6, 0.6, 2.4}) {
            for (double f : {-0.9999, -0.5, 0.0, 0.5, 0.9999}) {
                const KernelPoint p(x, f * std::abs(x));
                CHECK(kernel_K_limit_k1zero(0.7, p) > 0.0);
                CHECK(kernel_K_limit_k2zero(0.7, p) > 0.0);
            }
        }
    }
    SUBCASE("kernel_K near the limits") {
        for (auto [x, y] : {std::pair{1.3, 0.4}, std::pair{-0.6, 0.2}, std::pair{2.4, -1.8}}) {
            const KernelPoint p(x, y);
            CHECK(rel(kernel_K(Multiplicity(1e-4, 0.7), p).value, kernel_K_limit_k1zero(0.7, p)) < 1e-3);
            CHECK(rel(kernel_K(Multiplicity(0.7, 1e-4), p).value, kernel_K_limit_k2zero(0.7, p)) < 1e-3);
        }
    }
    CHECK_THROWS_AS(kernel_K_limit_k1zero(0.0, KernelPoint(1.0, 0.0)), DomainError);
    CHECK_THROWS_AS(kernel_K_limit_k2zero(-1.0, KernelPoint(1.0, 0.0)), DomainError);
}

TEST_CASE("Jacobi-setting kernels") {
    const Multiplicity k(0.7, 0.4);
    SUBCASE("jacobi_kernel is positive and vanishes at the edge") {
        for (double y : {-0.9, 0.0, 0.5}) CHECK(jacobi_kernel(k, 1.0, y).value.real() > 0.0);
        CHECK(std::abs(jacobi_kernel(Multiplicity(1.0, 1.0), 1.0, 1.0 - 1e-12).value) < 1e-6);
    }
    SUBCASE("direct and by-parts forms of K~") {
        const cplx a = ktilde(k, 1.2, 0.5, KTildeForm::direct).value;
        const cplx b = ktilde(k, 1.2, 0.5, KTildeForm::byparts).value;
        CHECK(rel(a, b) < 1e-8);
    }
    SUBCASE("defining form of K~") {
        for (auto [x, y] : {std::pair{1.2, 0.5}, std::pair{-0.8, 0.1}, std::pair{1.5, -1.4}}) {
            const cplx a = ktilde(k, x, y, KTildeForm::direct).value;
            const cplx b = ktilde(k, x, y, KTildeForm::defining).value;
            CHECK(rel(b, a) < 1e-6);
        }
    }
    SUBCASE("K~ vanishes at the edge") {
        CHECK(std::abs(ktilde(k, 1.0, 1.0 - 1e-10, KTildeForm::direct).value) < 1e-6);
    }
    SUBCASE("derivative of K~") {
        CHECK(dktilde_dy(k, 1.0, 0.0).value == cplx(0.0));
        const double h = 1e-5;
        for (double y : {-0.7, -0.2, 0.3, 0.8}) {
            const cplx fd = (ktilde(k, 1.0, y + h, KTildeForm::byparts).value -
                             ktilde(k, 1.0, y - h, KTildeForm::byparts).value) /
                            (2.0 * h);
            const cplx d = dktilde_dy(k, 1.0, y).value;
            CHECK(rel(d, fd) < 1e-5);
            CHECK(std::abs(dktilde_dy(k, 1.0, -y).value + d) <= 1e-14 * std::abs(d));
        }
    }
}

TEST_CASE("derivative convention of the assembled kernel") {
    const Multiplicity k(0.7, 0.4);
    const KernelEvaluator eval(k);
    for (auto [x, y] : {std::pair{1.3, 0.4}, std::pair{-2.4, 1.0}, std::pair{0.6, -0.5}}) {
        const KernelPoint p(x, y);
        const cplx direct = eval.kernel(x, y, p.gap());
        const cplx total = eval.kernel_mourou(x, y, p.gap(), DerivativeConvention::total);
        const cplx partial = eval.kernel_mourou(x, y, p.gap(), DerivativeConvention::partial);
        CHECK(rel(total, direct) < 1e-10);
        CHECK(rel(partial, direct) > 1e-3);
    }
    // at y = 0 the derivative term vanishes and both conventions coincide
    const cplx t0 = eval.kernel_mourou(1.0, 0.0, 1.0, DerivativeConvention::total);
    const cplx p0 = eval.kernel_mourou(1.0, 0.0, 1.0, DerivativeConvention::partial);
    CHECK(t0 == p0);
}

TEST_CASE("kernel scale near x = 0") {
    // x K(x, s x) tends to a finite profile as x -> 0; no overflow on the way
    const KernelEvaluator eval(Multiplicity(0.7, 0.7));
    for (double s : {-0.9, 0.0, 0.9}) {
        const double ref = 1e-3 * eval.kernel(-1e-3, s * 1e-3, 1e-3 * (1.0 - std::abs(s))).real();
        for (double x : {1e-50, 1e-150, 1e-250}) {
            const double v = x * eval.kernel(-x, s * x, x * (1.0 - std::abs(s))).real();
            CHECK(std::isfinite(v));
            CHECK(v == doctest::Approx(ref).epsilon(1e-3));
        }
    }
}
