"""Trigonometric Dunkl intertwining operator in rank one."""

from ._trigdunkl import (
    ContractError,
    DomainError,
    EvalResult,
    EvaluationError,
    Multiplicity,
    NonConvergenceError,
    TestFunction,
    apply_V,
    apply_Vt,
    cherednik_D,
    constant_c,
    duality_gap,
    gamma_real,
    gauss_jacobi,
    gauss_legendre,
    hyp2f1,
    intertwine_gap,
    jacobi_phi,
    kernel_K,
    kernel_K_limit_k1zero,
    kernel_K_limit_k2zero,
    opdam_G,
    positivity_scan,
    run_suite,
    sigma,
    tanh_sinh,
    weight_A,
)

__all__ = [
    "ContractError",
    "DomainError",
    "EvalResult",
    "EvaluationError",
    "Multiplicity",
    "NonConvergenceError",
    "TestFunction",
    "apply_V",
    "apply_Vt",
    "cherednik_D",
    "constant_c",
    "duality_gap",
    "gamma_real",
    "gauss_jacobi",
    "gauss_legendre",
    "hyp2f1",
    "intertwine_gap",
    "jacobi_phi",
    "kernel_K",
    "kernel_K_limit_k1zero",
    "kernel_K_limit_k2zero",
    "opdam_G",
    "positivity_scan",
    "run_suite",
    "sigma",
    "tanh_sinh",
    "weight_A",
]
