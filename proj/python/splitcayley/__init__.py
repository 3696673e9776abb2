"""Exact split-octonion kernel with the Cayley structures on the pseudospheres.

Thin wrapper over the compiled extension. Exact scalars cross the boundary
as strings in the "p/q" form; the helpers below convert to fractions.
"""

from fractions import Fraction

from splitcayley._core import (  # noqa: F401
    __version__,
    associator,
    cross,
    domega8,
    fundamental_form,
    hitchin_K,
    inner,
    laplacian_check,
    metric,
    nijenhuis,
    norm,
    oct_conj,
    oct_mul,
    omega8,
    product_structure_pullback,
    psi,
    run_suite,
    stereographic,
    stereographic_inverse,
    structure8_apply,
    structure_apply,
    suite_names,
    triple,
)


def to_fraction(value):
    """Parses an exact scalar emitted by the kernel."""
    return Fraction(value)


def from_fraction(value):
    """Formats a number as an exact scalar accepted by the kernel."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)
