"""Exact-arithmetic kernel for finite-dimensional quasi-Hopf algebras.

The central object is :class:`quasihopf.algebra.QuasiHopfAlgebra`; bundled
examples live in :mod:`quasihopf.generators`, the verification suites in
:mod:`quasihopf.report`, and the command line in :mod:`quasihopf.cli`.
"""

from .algebra import QuasiHopfAlgebra, verify_axioms
from .field import FieldSpec
from .generators import dual_group_cocycle, group_algebra, h2, sweedler

__version__ = "0.1.0"

__all__ = [
    "FieldSpec",
    "QuasiHopfAlgebra",
    "verify_axioms",
    "group_algebra",
    "dual_group_cocycle",
    "sweedler",
    "h2",
    "__version__",
]
