"""Weyl group computations on based root data.

Roots are manipulated in simple-root coordinates (integer vectors indexed by
Delta), so positivity is coordinatewise nonnegativity and every reflection
is Cartan-matrix arithmetic.  Enumeration of whole Weyl groups is
deliberately capped at semisimple rank 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DatumError, EnumerationLimitError
from .rootdata import (
    BasedRootDatum,
    DynkinType,
    Vector,
    classify_component,
    dynkin_components,
    integer_kernel_basis,
)

ENUMERATION_RANK_BOUND = 6


@dataclass(frozen=True)
class WeylWord:
    """Word in the simple reflections, 0-based indices into Delta."""

    letters: tuple[int, ...]

    def __post_init__(self):
        if any(i < 0 for i in self.letters):
            raise DatumError("negative reflection index")

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class RestrictedRoot:
    """A reduced root of P with respect to the split component of the Levi.

    ``direction`` is a primitive integer vector in A_M-coordinates;
    ``preimages`` collects the roots of G (ambient coordinates) that restrict
    to a positive multiple of it.
    """

    direction: Vector
    preimages: tuple[Vector, ...]

    def __post_init__(self):
        g = 0
        for x in self.direction:
            g = gcd(g, x)
        if g != 1:
            raise DatumError(f"direction {self.direction} is not primitive")
        if not self.preimages:
            raise DatumError("restricted root with no preimages")


# ---------------------------------------------------------------------------
# root generation in simple-root coordinates


def _reflect_coords(cartan, coords: Vector, j: int) -> Vector:
    # s_j(v) = v - <v, alpha_j^vee> alpha_j with <alpha_i, alpha_j^vee> = C[j][i]
    pairing = sum(coords[i] * cartan[j][i] for i in range(len(coords)))
    out = list(coords)
    out[j] -= pairing
    return tuple(out)


def all_roots_coords(datum: BasedRootDatum, subset=None) -> list[Vector]:
    """All roots of the subsystem generated by ``subset`` of Delta, as coordinates."""
    k = datum.semisimple_rank
    if subset is None:
        subset = range(k)
    subset = sorted(set(subset))
    cartan = datum.cartan_matrix()
    roots = set()
    frontier = [tuple(1 if i == s else 0 for i in range(k)) for s in subset]
    roots.update(frontier)
    while frontier:
        new = []
        for r in frontier:
            for j in subset:
                image = _reflect_coords(cartan, r, j)
                if image not in roots:
                    roots.add(image)
                    new.append(image)
        frontier = new
    return sorted(roots)


def positive_roots_coords(datum: BasedRootDatum, subset=None) -> list[Vector]:
    return [r for r in all_roots_coords(datum, subset) if all(c >= 0 for c in r)]


def coords_to_vector(datum: BasedRootDatum, coords: Vector) -> Vector:
    out = [0] * datum.rank
    for c, root in zip(coords, datum.simple_roots):
        for i in range(datum.rank):
            out[i] += c * root[i]
    return tuple(out)


# ---------------------------------------------------------------------------
# group order by closure enumeration


def weyl_group_order(datum: BasedRootDatum) -> int:
    """Order of the Weyl group, by breadth-first closure over root images.

    A Weyl element is pinned down by the images of the simple roots, so the
    closure runs over tuples of root indices.  Raises EnumerationLimitError
    above semisimple rank 6: this is an oracle for small rank, not a group
    library.
    """
    k = datum.semisimple_rank
    if k > ENUMERATION_RANK_BOUND:
        raise EnumerationLimitError(
            f"semisimple rank {k} exceeds the enumeration bound {ENUMERATION_RANK_BOUND}"
        )
    if k == 0:
        return 1
    cartan = datum.cartan_matrix()
    roots = all_roots_coords(datum)
    index = {r: i for i, r in enumerate(roots)}
    action = [
        [index[_reflect_coords(cartan, r, j)] for r in roots] for j in range(k)
    ]
    simple = tuple(index[tuple(1 if i == s else 0 for i in range(k))] for s in range(k))
    seen = {simple}
    frontier = [simple]
    while frontier:
        new = []
        for state in frontier:
            for j in range(k):
                nxt = tuple(action[j][x] for x in state)
                if nxt not in seen:
                    seen.add(nxt)
                    new.append(nxt)
        frontier = new
    return len(seen)


# ---------------------------------------------------------------------------
# longest elements and the representative mapping theta into Delta


class _CoordAction:
    """A Weyl element as its matrix on simple-root coordinates (columns = images)."""

    __slots__ = ("cartan", "cols")

    def __init__(self, cartan):
        self.cartan = cartan
        k = len(cartan)
        self.cols = [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]

    def right_multiply(self, j: int) -> None:
        # (w s_j)(alpha_i) = w(alpha_i) - C[j][i] w(alpha_j) for every i
        old = self.cols[j]
        k = len(self.cartan)
        for i in range(k):
            c = self.cartan[j][i]
            if c:
                self.cols[i] = tuple(x - c * y for x, y in zip(self.cols[i], old))

    def image(self, coords: Vector) -> Vector:
        k = len(self.cartan)
        out = [0] * k
        for i, c in enumerate(coords):
            if c:
                for t in range(k):
                    out[t] += c * self.cols[i][t]
        return tuple(out)


def longest_word(datum: BasedRootDatum, subset) -> WeylWord:
    """Reduced word for the longest element of the parabolic subgroup W_subset.

    Greedy exchange: while some simple root of the subset is kept positive,
    multiply by that reflection on the right (least index first).  The word
    length equals the number of positive roots of the subsystem.
    """
    subset = sorted(set(subset))
    cartan = datum.cartan_matrix()
    w = _CoordAction(cartan)
    word: list[int] = []
    while True:
        chosen = -1
        for j in subset:
            if all(c >= 0 for c in w.cols[j]):
                chosen = j
                break
        if chosen < 0:
            break
        w.right_multiply(chosen)
        word.append(chosen)
    return WeylWord(tuple(word))


def word_action(datum: BasedRootDatum, word: WeylWord) -> _CoordAction:
    """Action of the word (applied as s_{i1} o s_{i2} o ... o s_{ik}) on root coordinates."""
    action = _CoordAction(datum.cartan_matrix())
    for letter in word.letters:
        action.right_multiply(letter)
    return action


def word_matrix(datum: BasedRootDatum, word: WeylWord):
    """Matrix of the word on the character lattice (rightmost letter acts first)."""
    n = datum.rank
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for letter in reversed(word.letters):
        root = datum.simple_roots[letter]
        coroot = datum.simple_coroots[letter]
        pair_rows = [sum(coroot[t] * mat[t][j] for t in range(n)) for j in range(n)]
        mat = [
            [mat[i][j] - root[i] * pair_rows[j] for j in range(n)] for i in range(n)
        ]
    return mat


def find_w_theta(datum: BasedRootDatum, theta) -> tuple[WeylWord, tuple[int, ...]]:
    """The representative w = w_{l,Delta} w_{l,theta} with w(theta) inside Delta.

    Returns the word and the image subset (0-based indices into Delta), after
    verifying by explicit action that every root of theta lands on a simple
    root.
    """
    theta = sorted(set(theta))
    k = datum.semisimple_rank
    if any(t < 0 or t >= k for t in theta):
        raise DatumError(f"theta {theta} out of range for {k} simple roots")
    w_long_full = longest_word(datum, range(k))
    w_long_theta = longest_word(datum, theta)
    word = WeylWord(w_long_full.letters + w_long_theta.letters)

    action = word_action(datum, word)
    image = []
    for t in theta:
        img = action.cols[t]
        support = [i for i, c in enumerate(img) if c != 0]
        if len(support) != 1 or img[support[0]] != 1:
            raise DatumError(
                f"w(alpha_{t}) = {img} is not a simple root; construction violated"
            )
        image.append(support[0])
    return word, tuple(sorted(image))


# ---------------------------------------------------------------------------
# restricted roots and the rank-one decomposition


def split_component_basis(datum: BasedRootDatum, theta) -> list[Vector]:
    """Basis of the cocharacter lattice of A_M (integer annihilator of theta's roots)."""
    rows = [datum.simple_roots[t] for t in sorted(set(theta))]
    return integer_kernel_basis(rows, datum.rank)


def _primitive(v: Vector) -> Vector:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else v


def reduced_roots(datum: BasedRootDatum, theta) -> list[RestrictedRoot]:
    """The reduced roots of P_theta with respect to A_M.

    Positive roots not supported on theta are restricted to A_M-coordinates
    and grouped by positive-rational proportionality (alpha and 2 alpha
    collapse into one class).  The classes partition the restricted roots.
    """
    theta_set = set(theta)
    basis = split_component_basis(datum, theta)
    classes: dict[Vector, list[Vector]] = {}
    for coords in positive_roots_coords(datum):
        support = {i for i, c in enumerate(coords) if c != 0}
        if support <= theta_set:
            continue
        vec = coords_to_vector(datum, coords)
        restriction = tuple(sum(a * b for a, b in zip(vec, col)) for col in basis)
        key = _primitive(restriction)
        classes.setdefault(key, []).append(vec)
    return [
        RestrictedRoot(direction=key, preimages=tuple(sorted(classes[key])))
        for key in sorted(classes)
    ]


def rank_one_decomposition(
    datum: BasedRootDatum, theta
) -> list[tuple[RestrictedRoot, DynkinType]]:
    """For each reduced root, the type of the rank-one group M_alpha = Z_G(A_alpha).

    A_alpha is the identity component of (ker alpha) inside A_M; its
    centralizer is read off as the subsystem of roots vanishing on A_alpha,
    classified together with the ambient torus rank.
    """
    basis = split_component_basis(datum, theta)
    out = []
    for rr in reduced_roots(datum, theta):
        s = len(basis)
        # cocharacters of A_alpha: z in Z^s with direction . z = 0, through the basis
        zker = integer_kernel_basis([rr.direction], s)
        a_alpha = [
            tuple(sum(z[i] * basis[i][t] for i in range(s)) for t in range(datum.rank))
            for z in zker
        ]
        member_coords = []
        for coords in positive_roots_coords(datum):
            vec = coords_to_vector(datum, coords)
            if all(sum(a * b for a, b in zip(vec, y)) == 0 for y in a_alpha):
                member_coords.append(coords)
        members = set(member_coords)
        simples = [
            c
            for c in member_coords
            if not any(
                tuple(x - y for x, y in zip(c, other)) in members
                for other in member_coords
                if other != c
            )
        ]
        out.append((rr, subsystem_type(datum, simples)))
    return out


def subsystem_type(datum: BasedRootDatum, simple_coords: list[Vector]) -> DynkinType:
    """Classify a subsystem given the simple-root coordinates of its simples."""
    roots = tuple(coords_to_vector(datum, c) for c in simple_coords)
    coroots = tuple(_coroot_of(datum, c) for c in simple_coords)
    sub = BasedRootDatum(datum.rank, roots, coroots, name=f"{datum.name}|sub")
    comps = dynkin_components(sub)
    labels = tuple(classify_component(sub, comp) for comp in comps)
    return DynkinType(components=labels, torus_rank=datum.rank - len(roots))


def _coroot_of(datum: BasedRootDatum, coords: Vector) -> Vector:
    """Coroot of the root with the given simple-root coordinates.

    With a W-invariant form normalized per component, r^vee expands as
    sum_i (d_i c_i / ((r,r)/2)) alpha_i^vee; the coefficients are integers
    for any root of a finite system.
    """
    cartan = datum.cartan_matrix()
    k = len(cartan)
    d = _symmetrizer(cartan)
    norm2 = Fraction(0)
    for i in range(k):
        if coords[i]:
            for j in range(k):
                if coords[j]:
                    norm2 += coords[i] * coords[j] * d[i] * cartan[i][j]
    half = norm2 / 2
    out = [0] * datum.rank
    for i in range(k):
        if not coords[i]:
            continue
        c = Fraction(d[i] * coords[i]) / half
        if c.denominator != 1:
            raise DatumError("coroot coefficients not integral; corrupted subsystem")
        for t in range(datum.rank):
            out[t] += int(c) * datum.simple_coroots[i][t]
    return tuple(out)


def _symmetrizer(cartan) -> list[Fraction]:
    """Per-component rational d_i with d_i C[i][j] = d_j C[j][i]."""
    k = len(cartan)
    d: list[Fraction | None] = [None] * k
    for start in range(k):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(k):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
    scale = lcm(*(x.denominator for x in d)) if d else 1
    return [x * scale for x in d]
