"""Limit points of ||xi alpha^n|| for integer bases and quadratic Pisot units."""
from .surd import QuadraticSurd, eps, dist_to_int, nearest_integer
from .algebra import CertifiedReal, GeneralPisot, PisotQuadraticUnit, parse_alpha
from .words import BiEPWord, EPWord

__all__ = ["QuadraticSurd", "eps", "dist_to_int", "nearest_integer", "CertifiedReal",
           "GeneralPisot", "PisotQuadraticUnit", "parse_alpha", "BiEPWord", "EPWord"]
__version__ = "0.1.0"
