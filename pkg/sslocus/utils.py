"""Utility functions for sslocus"""

from sympy import isprime
from sympy.ntheory import is_quad_residue


def is_odd_prime(p) -> bool:
    """True for odd primes; rejects bools and non-integers"""
    if isinstance(p, bool) or not isinstance(p, int):
        return False
    return p > 2 and isprime(p)


def least_nonresidue(p: int) -> int:
    """Least quadratic nonresidue mod an odd prime p"""
    for candidate in range(2, p):
        if not is_quad_residue(candidate, p):
            return candidate
    raise ValueError(f"No quadratic nonresidue mod {p}")


def render_count(value: int, formula: str, p: int) -> str:
    """
    Render an exact count with its formula, e.g. "756 = p^3(p^3+1) @ p=3"
    """
    return f"{value} = {formula} @ p={p}"


def isomorphism_type(curves: int, surfaces: int, lines: int) -> str:
    """Isomorphism type string C^r x S^s x P1^l; zero exponents are omitted"""
    parts = []
    if curves:
        parts.append(f"C^{curves}")
    if surfaces:
        parts.append(f"S^{surfaces}")
    if lines:
        parts.append(f"P1^{lines}")
    return " x ".join(parts) if parts else "pt"
