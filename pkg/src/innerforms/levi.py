"""Levi subgroup calculus: derived type, the GL-product sandwich test, envelopes.

A standard Levi is cut out of a based root datum by a subset theta of the
simple roots.  ``analyze_levi`` decides whether the derived group is a
product of SL's sitting inside a product of GL's (the sandwich condition
that makes division-algebra transfer available) and reports the GL envelope
together with exactness data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DatumError
from .rootdata import (
    BasedRootDatum,
    DynkinType,
    FiniteAbelianGroup,
    classify,
    classify_component,
    cokernel_invariants,
    dynkin_components,
    pairing_surjective,
)


@dataclass(frozen=True)
class LeviDescriptor:
    """Ambient datum plus the sorted subset of Delta generating the Levi."""

    ambient: BasedRootDatum
    theta: tuple[int, ...]

    def __post_init__(self):
        theta = tuple(sorted(set(self.theta)))
        object.__setattr__(self, "theta", theta)
        k = self.ambient.semisimple_rank
        if any(t < 0 or t >= k for t in theta):
            raise DatumError(f"theta {theta} out of range for {k} simple roots")


@dataclass(frozen=True)
class LeviReport:
    """What the Levi looks like as a group, and whether it transfers.

    ``gl_envelope`` lists the n_i of the enveloping product of GL_{n_i}
    (one per type-A component of theta, in ambient node order); it is None
    unless the sandwich condition holds.  ``envelope_exact`` records whether
    the Levi *is* the envelope times ``central_gl1s`` extra GL_1 factors, as
    decided by rank bookkeeping plus pairing-lattice surjectivity on both
    sides; when False the Levi sits strictly between the SL- and GL-products
    and the quotient lattice is not chosen here.
    """

    derived_type: DynkinType
    split_component_rank: int
    derived_pi1: FiniteAbelianGroup
    condition_one: bool
    gl_envelope: tuple[int, ...] | None
    components: tuple[tuple[int, ...], ...]
    envelope_exact: bool
    central_gl1s: int | None


def levi_datum(desc: LeviDescriptor) -> BasedRootDatum:
    """Sub-root-datum of the Levi: same lattices, simple roots restricted to theta."""
    amb = desc.ambient
    return BasedRootDatum(
        rank=amb.rank,
        simple_roots=tuple(amb.simple_roots[t] for t in desc.theta),
        simple_coroots=tuple(amb.simple_coroots[t] for t in desc.theta),
        name=f"{amb.name}|theta={list(desc.theta)}",
    )


def is_maximal(desc: LeviDescriptor) -> bool:
    return len(desc.theta) == desc.ambient.semisimple_rank - 1


def analyze_levi(desc: LeviDescriptor) -> LeviReport:
    """Derived type, split-component rank, and the GL-sandwich verdict.

    condition_one holds iff every component of theta is series A and the
    derived group of the Levi is simply connected; the envelope then lists
    each component's GL size (component rank + 1).
    """
    amb = desc.ambient
    theta = desc.theta
    comps = tuple(tuple(c) for c in dynkin_components(amb, theta))
    sub = levi_datum(desc)
    derived_type = classify(sub)

    pi1_factors, _ = cokernel_invariants(
        [amb.simple_coroots[t] for t in theta], amb.rank
    )
    derived_pi1 = FiniteAbelianGroup(tuple(pi1_factors))

    root_rows = [amb.simple_roots[t] for t in theta]
    _, free_rank = cokernel_invariants(root_rows, amb.rank)
    split_component_rank = free_rank  # = rank of the integer annihilator of theta

    all_a = all(classify_component(amb, list(c))[0] == "A" for c in comps)
    condition_one = all_a and derived_pi1.is_trivial

    gl_envelope = tuple(len(c) + 1 for c in comps) if condition_one else None

    extra = amb.rank - len(theta) - len(comps)
    exact = (
        condition_one
        and extra >= 0
        and pairing_surjective(root_rows)
        and pairing_surjective([amb.simple_coroots[t] for t in theta])
    )
    return LeviReport(
        derived_type=derived_type,
        split_component_rank=split_component_rank,
        derived_pi1=derived_pi1,
        condition_one=condition_one,
        gl_envelope=gl_envelope,
        components=comps,
        envelope_exact=exact,
        central_gl1s=extra if exact else None,
    )


def remove_indices(datum: BasedRootDatum, removed) -> tuple[int, ...]:
    """theta = Delta minus the removed (0-based) indices."""
    removed = set(removed)
    k = datum.semisimple_rank
    if any(r < 0 or r >= k for r in removed):
        raise DatumError(f"removed indices {sorted(removed)} out of range")
    return tuple(i for i in range(k) if i not in removed)
