"""Finite Toeplitz sections, Wiener-Hopf factorization, and Szego constants."""

from szego._core import (  # noqa: F401
    FourierSymbol,
    KreinIndex,
    NumericalError,
    bo_verify,
    catalog,
    constant_m,
    e_of,
    ef,
    error_sequence,
    g_of,
    gf,
    hankel_section,
    invert,
    krein_norm,
    multiply,
    rate_fit,
    reflect,
    scalar_factorization,
    singular_values,
    tail,
    toeplitz_determinant,
    toeplitz_section,
    trace_f_tn,
    winding_number,
)

__all__ = [
    "FourierSymbol",
    "KreinIndex",
    "NumericalError",
    "bo_verify",
    "catalog",
    "constant_m",
    "e_of",
    "ef",
    "error_sequence",
    "g_of",
    "gf",
    "hankel_section",
    "invert",
    "krein_norm",
    "multiply",
    "rate_fit",
    "reflect",
    "scalar_factorization",
    "singular_values",
    "tail",
    "toeplitz_determinant",
    "toeplitz_section",
    "trace_f_tn",
    "winding_number",
]
