"""Exact and floating-point verification of the operator algebras attached to the discrete Fourier transform."""
from ._kernels import HAVE_COMPILED, KERNEL
from .backend import ExactBackend, FloatBackend, get_backend
from .cyclo import CycloScalar, cyclotomic_polynomial, field_order_for
from .errors import (
    DegenerateDimension,
    DivisionByZero,
    InternalError,
    NotHermitian,
    OrderMismatch,
    UnsupportedNormalization,
)
from .matrix import ExactMatrix, FloatMatrix, anticommutator, commutator

__version__ = "0.1.0"
