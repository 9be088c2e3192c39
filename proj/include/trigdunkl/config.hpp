#pragma once

// Every numerical default of the library and CLI lives here. The CLI exposes
// each field as a flag; nothing is read from the environment.

namespace trigdunkl {

struct QuadratureConfig {
    /// Gauss-Jacobi nodes for the inner kernel integral (real k).
    int jacobi_nodes = 64;
    /// Tanh-sinh level for the inner kernel integral (complex k).
    int tanh_sinh_level = 8;
    /// Tanh-sinh level for the outer integral of V f(x) and tV g(y).
    int outer_level = 8;
    /// Tanh-sinh level for the outermost integral of nested pairings (duality).
    int pairing_level = 7;
};

struct Tolerances {
    double eigen = 1e-6;               // |V e^{i lambda .} - G| / (1 + |G|)
    double kernel_consistency = 1e-7;  // theorem kernel vs. assembled kernel, relative
    double byparts = 1e-8;             // two forms of the integrated Jacobi kernel, relative
    double derivative_fd = 1e-5;       // derivative vs. centred difference, relative
    double limits = 1e-3;              // k_i = 1e-4 vs. closed limit forms, relative
    double duality = 1e-6;             // duality_gap
    double intertwine = 1e-4;          // intertwine_gap
    double cherednik_forms = 1e-12;    // two displayed forms of D, relative
    double cherednik_eigen = 1e-5;     // D G = i lambda G, relative to 1 + |G|
    double legendre_exactness = 1e-12; // Gauss-Legendre on degree <= 2n - 1, relative
    double jacobi_mass = 1e-12;        // Gauss-Jacobi weight sum vs. Beta integral, relative
    double tanh_sinh = 1e-9;           // tanh-sinh on int_0^1 t^{p-1} dt, absolute
};

struct NumericConfig {
    QuadratureConfig quad;
    Tolerances tol;
    /// Relative step of the centred difference applied to V f in intertwine_gap.
    double intertwine_step = 1e-4;
    /// Step of the centred difference in y used to check the derivative of K~.
    double ktilde_fd_step = 1e-5;
    /// Step of the centred difference used to differentiate G numerically.
    double opdam_fd_step = 1e-5;
};

}  // namespace trigdunkl
