#include "trigdunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

namespace trigdunkl {

namespace {

struct JacobiMatrix {
    std::vector<double> diag;  // a_0 .. a_{n-1}
    std::vector<double> off;   // b_1 .. b_n (b_n needed for p_n)
};

// Recurrence coefficients of the monic Jacobi polynomials for the weight
// (1 - t)^alpha (1 + t)^beta. The j = 0 and j = 1 cases are written out
// because the generic formula has removable 0/0 at alpha + beta in {0, -1}.
JacobiMatrix jacobi_matrix(int n, double alpha, double beta) {
    JacobiMatrix m;
    m.diag.resize(n);
    m.off.resize(n);
    const double ab = alpha + beta;
    for (int j = 0; j < n; ++j) {
        if (j == 0) {
            m.diag[j] = (beta - alpha) / (ab + 2.0);
        } else {
            const double s = 2.0 * j + ab;
            m.diag[j] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
        }
    }
    for (int j = 1; j <= n; ++j) {
        double b2;
        if (j == 1) {
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            const double s = 2.0 * j + ab;
            b2 = 4.0 * j * (j + alpha) * (j + beta) * (j + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        m.off[j - 1] = std::sqrt(b2);
    }
    return m;
}

struct OrthoEval {
    double pn;        // orthonormal p_n(x)
    double dpn;       // p_n'(x)
    double christoffel;  // sum_{j<n} p_j(x)^2
};

OrthoEval eval_orthonormal(const JacobiMatrix& m, double p0, double x) {
    const int n = static_cast<int>(m.diag.size());
    double prev = 0.0, cur = p0;
    double dprev = 0.0, dcur = 0.0;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        sum += cur * cur;
        const double bj = j == 0 ? 0.0 : m.off[j - 1];
        const double next = ((x - m.diag[j]) * cur - bj * prev) / m.off[j];
        const double dnext = (cur + (x - m.diag[j]) * dcur - bj * dprev) / m.off[j];
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
    }
    return {cur, dcur, sum};
}

QuadratureRule build_gauss(RuleSpec spec) {
    const int n = spec.size;
    const double alpha = spec.alpha;
    const double beta = spec.beta;
    const JacobiMatrix m = jacobi_matrix(n, alpha, beta);

    std::vector<double> nodes(n);
    if (n == 1) {
        nodes[0] = m.diag[0];
    } else {
        Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(m.diag.data(), n);
        Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(m.off.data(), n - 1);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw NonConvergenceError("Jacobi matrix eigen-solver did not converge", 0.0, 0.0);
        for (int i = 0; i < n; ++i) nodes[i] = solver.eigenvalues()[i];
    }

    const double p0 = 1.0 / std::sqrt(jacobi_weight_mass(alpha, beta));
    std::vector<double> weights(n), one_plus(n), one_minus(n);
    for (int i = 0; i < n; ++i) {
        double x = nodes[i];
        for (int it = 0; it < 3; ++it) {
            const OrthoEval ev = eval_orthonormal(m, p0, x);
            if (ev.dpn == 0.0) break;
            const double step = ev.pn / ev.dpn;
            const double polished = x - step;
            if (!(polished > -1.0 && polished < 1.0)) break;
            x = polished;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
        }
        nodes[i] = x;
        weights[i] = 1.0 / eval_orthonormal(m, p0, x).christoffel;
        one_plus[i] = 1.0 + x;
        one_minus[i] = 1.0 - x;
    }
    if (spec.kind == RuleKind::legendre) {
        // exact symmetry
        for (int i = 0; i < n / 2; ++i) {
            const double t = 0.5 * (nodes[n - 1 - i] - nodes[i]);
            const double w = 0.5 * (weights[i] + weights[n - 1 - i]);
            nodes[i] = -t;
            nodes[n - 1 - i] = t;
            weights[i] = weights[n - 1 - i] = w;
            one_plus[i] = one_minus[n - 1 - i] = 1.0 - t;
            one_minus[i] = one_plus[n - 1 - i] = 1.0 + t;
        }
        if (n % 2 == 1) {
            nodes[n / 2] = 0.0;
            one_plus[n / 2] = one_minus[n / 2] = 1.0;
        }
    }
    return QuadratureRule(spec, std::move(nodes), std::move(weights), std::move(one_plus),
                          std::move(one_minus));
}

QuadratureRule build_tanh_sinh(RuleSpec spec) {
    constexpr double kHalfPi = 0.5 * std::numbers::pi;
    constexpr double kMinComplement = 1e-300;
    const double h = std::ldexp(1.0, 4 - spec.size);

    // positive half, j = 0, 1, ...
    std::vector<double> t_pos, w_pos, c_pos;
    for (int j = 0;; ++j) {
        const double s = j * h;
        const double u = kHalfPi * std::sinh(s);
        const double e = std::exp(-2.0 * u);
        const double comp = 2.0 * e / (1.0 + e);  // 1 - tanh(u)
        if (comp < kMinComplement) break;
        const double w = h * kHalfPi * std::cosh(s) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if (w == 0.0) break;
        t_pos.push_back(std::tanh(u));
        w_pos.push_back(w);
        c_pos.push_back(comp);
    }

    const std::size_t m = t_pos.size();
    const std::size_t n = 2 * m - 1;
    std::vector<double> nodes(n), weights(n), one_plus(n), one_minus(n);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t up = m - 1 + j;
        const std::size_t down = m - 1 - j;
        nodes[up] = t_pos[j];
        weights[up] = w_pos[j];
        one_minus[up] = c_pos[j];
        one_plus[up] = 1.0 + t_pos[j];
        nodes[down] = -t_pos[j];
        weights[down] = w_pos[j];
        one_plus[down] = c_pos[j];
        one_minus[down] = 1.0 + t_pos[j];
    }
    return QuadratureRule(spec, std::move(nodes), std::move(weights), std::move(one_plus),
                          std::move(one_minus));
}

}  // namespace

RuleSpec RuleSpec::refined() const {
    RuleSpec r = *this;
    if (kind == RuleKind::tanh_sinh)
        r.size = size + 1;
    else
        r.size = 2 * size;
    return r;
}

std::string RuleSpec::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
        case RuleKind::legendre: os << "gauss-legendre(" << size << ")"; break;
        case RuleKind::jacobi:
            os << "gauss-jacobi(" << size << "," << alpha << "," << beta << ")";
            break;
        case RuleKind::tanh_sinh: os << "tanh-sinh(" << size << ")"; break;
    }
    return os.str();
}

QuadratureRule::QuadratureRule(RuleSpec spec, std::vector<double> nodes, std::vector<double> weights,
                               std::vector<double> one_plus, std::vector<double> one_minus)
    : spec_(spec),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      one_plus_(std::move(one_plus)),
      one_minus_(std::move(one_minus)) {}

double jacobi_weight_mass(double alpha, double beta) {
    return std::exp((alpha + beta + 1.0) * std::numbers::ln2 + std::lgamma(alpha + 1.0) +
                    std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1 || n > kMaxGaussNodes)
        throw DomainError("gauss_legendre: n must lie in [1, 512], got " + std::to_string(n));
    return build_gauss(RuleSpec{RuleKind::legendre, n, 0.0, 0.0});
}

QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1 || n > kMaxGaussNodes)
        throw DomainError("gauss_jacobi: n must lie in [1, 512], got " + std::to_string(n));
    if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw DomainError("gauss_jacobi: require alpha > -1 and beta > -1");
    return build_gauss(RuleSpec{RuleKind::jacobi, n, alpha, beta});
}

QuadratureRule tanh_sinh(int level) {
    if (level < 1 || level > kMaxTanhSinhLevel)
        throw DomainError("tanh_sinh: level must lie in [1, 12], got " + std::to_string(level));
    return build_tanh_sinh(RuleSpec{RuleKind::tanh_sinh, level, 0.0, 0.0});
}

QuadratureRule make_rule(const RuleSpec& spec) {
    switch (spec.kind) {
        case RuleKind::legendre:
        case RuleKind::jacobi:
            if (spec.size < 1 || spec.size > 2 * kMaxGaussNodes)
                throw DomainError("make_rule: node count out of range");
            if (!(spec.alpha > -1.0) || !(spec.beta > -1.0))
                throw DomainError("make_rule: require alpha > -1 and beta > -1");
            return build_gauss(spec);
        case RuleKind::tanh_sinh:
            if (spec.size < 1 || spec.size > kMaxTanhSinhLevel + 1)
                throw DomainError("make_rule: tanh-sinh level out of range");
            return build_tanh_sinh(spec);
    }
    throw DomainError("make_rule: unknown rule kind");
}

namespace detail {

void check_interval(const Interval& iv) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo < iv.hi))
        throw DomainError("integrate: require finite lo < hi");
}

void throw_non_finite(double x) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand is not finite at node x = " << x;
    throw EvaluationError(os.str(), x);
}

}  // namespace detail

}  // namespace trigdunkl
