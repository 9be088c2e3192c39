#pragma once

// Verification suites over the built-in grids. Each suite returns one row
// per check; the CLI serialises the rows and the acceptance test asserts on
// them.

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigdunkl/config.hpp"

namespace trigdunkl {

enum class Suite {
    all,
    eigen,
    duality,
    intertwine,
    kernel_consistency,
    positivity,
    limits,
    cherednik,
    delta0,
    quadrature,
};

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct CheckRow {
    std::string check;
    std::string point;
    std::complex<double> lhs;
    std::complex<double> rhs;
    double gap;
    double tol;
    bool pass;
};

/// Runs one suite (or all of them, in the enum order). A set `tol_override`
/// replaces the tolerance of every row.
std::vector<CheckRow> run_suite(Suite suite, const NumericConfig& cfg = {},
                                std::optional<double> tol_override = std::nullopt);

// The grids shared by the suites.
std::vector<double> grid_k_values();           // {0.3, 0.7, 1.5}
std::vector<double> grid_eigen_x();            // {+-0.5, +-1, +-2}
std::vector<double> grid_eigen_lambda();       // {0, 1, 2.5}
std::vector<double> grid_kernel_x();           // {+-0.6, +-1.3, +-2.4}
std::vector<double> grid_kernel_y_fraction();  // {0, +-0.2, +-0.7, +-0.95}

}  // namespace trigdunkl
