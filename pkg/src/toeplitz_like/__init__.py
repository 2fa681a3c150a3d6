"""Toeplitz-like operators on the Hardy space with rational symbols.

Symbols are rational functions ``omega = s/q`` whose poles may sit on the
unit circle. The package decides Fredholmness, computes the index, kernel
and range data, the factorization ``omega_minus * z**kappa * omega0 *
omega_plus``, applies ``T_omega`` and its inverse to rational inputs, and
builds the Toeplitz matrix representation.
"""

from .errors import (
    CircleRoot,
    DivisionByZeroPoly,
    DomainError,
    NoConvergence,
    NotCoprime,
    NotInDomain,
    NotInvertible,
    NotSupported,
    NumericalError,
    PreconditionError,
    SingularSystem,
    ToeplitzError,
)
from .factor import WHFactorization, apply_factored, factorize, kappa_of
from .fredholm import (
    FredholmReport,
    analyze,
    apply_inverse,
    apply_right_inverse,
    hp_divide,
    kernel_basis,
    range_descriptor,
)
from .matrixrep import growth_check, binomial_divide, symbol_coefficients, truncated_matrix
from .poly import Poly, from_roots, monomial
from .roots import classify, find_roots
from .symbol import RationalFn, apply_toeplitz, normalize, partial_fractions
from .tolerances import DEFAULT, Tolerances

__version__ = "0.1.0"
