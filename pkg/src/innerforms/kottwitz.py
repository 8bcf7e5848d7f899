"""Inner-form classification data: the finite group A(G) and GL_n torsion classes.

For a split group the Galois action on the dual center is trivial, so A(G)
is the Pontryagin dual of the component group of the dual center; its
invariant factors are read off the character lattice of that center, i.e.
the torsion of Y/<coroots>.  For GL_n the classes match the n-torsion of the
Brauer group and are labelled by residues j mod n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import GroupSpecError
from .rootdata import (
    BasedRootDatum,
    FiniteAbelianGroup,
    adjoint_datum,
    center_character_quotient,
    classify,
    dual_datum,
)


@dataclass(frozen=True)
class InnerFormClass:
    """One inner form of GL_n: residue label j and its division data (d, j')."""

    n: int
    label: int  # j mod n
    d: int  # division algebra degree, d | n
    invariant_numerator: int  # j' with j/n = j'/d and gcd(j', d) = 1

    @property
    def matrix_size(self) -> int:
        return self.n // self.d

    def describe(self) -> str:
        if self.d == 1:
            return f"GL_{self.n}(F) (split)"
        return f"GL_{self.matrix_size}(D_{self.d}), invariant {self.invariant_numerator}/{self.d}"


def kottwitz_group(datum: BasedRootDatum) -> FiniteAbelianGroup:
    """A(G) for a split group: the component group of the dual group's center.

    Computed on the dual datum (roots and coroots swapped) as the torsion of
    its center-character lattice; equivalently the torsion of Y/<coroots> of
    the original datum.  Trivial for simply connected semisimple groups;
    order |det Cartan| for adjoint ones.
    """
    torsion, _ = center_character_quotient(dual_datum(datum))
    return torsion


def dual_center_positive_dimensional(datum: BasedRootDatum) -> bool:
    """Whether Z(G^) has positive dimension (non-semisimple G), so pi_0 is a quotient."""
    _, free = center_character_quotient(dual_datum(datum))
    return free > 0


def inner_form_classes_gl(n: int) -> list[InnerFormClass]:
    """The n classes of inner forms of GL_n, labelled j = 0..n-1.

    Class j corresponds to the invariant j/n: the division degree is
    d = n/gcd(j, n) and the form is GL_{n/d}(D_d).  The number of classes
    with a given d equals Euler's phi(d).
    """
    if n < 1:
        raise GroupSpecError("inner_form_classes_gl requires n >= 1")
    out = []
    for j in range(n):
        g = gcd(j, n)
        d = n // g
        out.append(
            InnerFormClass(n=n, label=j, d=d, invariant_numerator=j // g)
        )
    return out


def ad_quotient_order(datum: BasedRootDatum) -> int:
    """|A(G^ad)| for the adjoint form of the datum's semisimple part."""
    dynkin = classify(datum)
    order = 1
    for series, rank in dynkin.components:
        order *= kottwitz_group(adjoint_datum(series, rank)).order
    return order
