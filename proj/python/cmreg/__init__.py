"""Exact commutative algebra: Groebner bases, Hilbert series and
polynomials, Gotzmann decompositions, local cohomology of Borel-type
monomial ideals, Castelnuovo-Mumford regularity, arithmetic degree, and an
audit registry of degree/regularity bound formulas.

Everything is computed over exact rational (or prime-field) arithmetic;
randomized reductions are deterministic in their (seed, trials) arguments.
"""

try:
    from ._core import *  # noqa: F401,F403
    from . import _core as _impl
except ImportError:  # in-tree builds keep _core next to the package
    from _core import *  # noqa: F401,F403
    import _core as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
