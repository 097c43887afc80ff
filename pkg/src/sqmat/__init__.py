"""Split quaternion matrix algebra.

Scalars with an indefinite quadratic form, dense matrices over them, their
4m-by-4n real block representations, right coneigenvalues computed through
those representations, and a solver for the twisted Stein equation
X - A @ j_conjugate(X) @ B = C.
"""

from . import cli, densemat, errors, numkernel, realrep, scalar, spectral, stein
from .densemat import SQMatrix
from .errors import SqmatError
from .scalar import (
    CausalCharacter,
    ConsimKind,
    ConsimSolutionFamily,
    SplitQuaternion,
)
from .spectral import Coneigenpair
from .stein import SteinProblem, SteinSolution, Uniqueness

__version__ = "0.1.0"

__all__ = [
    "SQMatrix",
    "SplitQuaternion",
    "CausalCharacter",
    "ConsimKind",
    "ConsimSolutionFamily",
    "Coneigenpair",
    "SteinProblem",
    "SteinSolution",
    "Uniqueness",
    "SqmatError",
    "scalar",
    "densemat",
    "realrep",
    "numkernel",
    "spectral",
    "stein",
    "errors",
    "cli",
    "__version__",
]
