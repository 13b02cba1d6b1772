"""Cohomology of fibered simplicial complexes."""

from fractions import Fraction

from ._lamcoh import *  # noqa: F401,F403
from ._lamcoh import l2_betti_exact as _l2_betti_exact


def betti(complex, degree):
    """Exact Lambda-Betti number as a Fraction."""
    return Fraction(_l2_betti_exact(complex, degree))
