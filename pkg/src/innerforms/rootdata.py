"""Exact-arithmetic based root data and the integer linear algebra behind them.

Everything here works over plain Python integers, so lattice computations
(Smith normal form, saturated kernels, torsion quotients) are exact at any
size.  A :class:`BasedRootDatum` stores a character lattice Z^rank together
with simple roots and simple coroots in explicit coordinates; the catalog
constructors build the split groups used elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DatumError, GroupSpecError

Vector = tuple[int, ...]
IntMatrix = list[list[int]]

# ---------------------------------------------------------------------------
# integer matrix helpers


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in range(len(a))]
    cols = len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for i in range(len(a))
    ]


def mat_vec(a: IntMatrix, v: Vector) -> Vector:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


def transpose(a: IntMatrix) -> IntMatrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def det_int(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_unimodular(a: IntMatrix) -> bool:
    return abs(det_int(a)) == 1


def smith_normal_form(matrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U*matrix*V = D, U and V unimodular.

    D is diagonal with nonnegative entries satisfying d_i | d_{i+1}.  The
    input may be any rectangular integer matrix (including empty ones).

    >>> u, d, v = smith_normal_form([[2, 4], [6, 8]])
    >>> [d[0][0], d[1][1]]
    [2, 4]
    """
    a = [[int(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def row_add(dst: int, src: int, c: int) -> None:
        for j in range(cols):
            a[dst][j] += c * a[src][j]
        for j in range(rows):
            u[dst][j] += c * u[src][j]

    def col_add(dst: int, src: int, c: int) -> None:
        for i in range(rows):
            a[i][dst] += c * a[i][src]
        for i in range(cols):
            v[i][dst] += c * v[i][src]

    def row_swap(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def col_swap(j: int, k: int) -> None:
        for i in range(rows):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        for i in range(cols):
            v[i][j], v[i][k] = v[i][k], v[i][j]

    def row_negate(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        while True:
            # Rosser pivoting: re-select the least-magnitude nonzero entry of
            # the trailing block every round, which keeps entry growth tame
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = a[i][j]
                    if x != 0 and (pivot is None or abs(x) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                row_swap(t, pivot[0])
            if pivot[1] != t:
                col_swap(t, pivot[1])

            p = a[t][t]
            reduced = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // p
                    if q:
                        row_add(i, t, -q)
                    if a[i][t] != 0:
                        reduced = True
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // p
                    if q:
                        col_add(j, t, -q)
                    if a[t][j] != 0:
                        reduced = True
            if reduced:
                continue  # nonzero remainders shrink the next pivot strictly
            # pivot must divide the rest of the block for the chain to hold
            fix = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % p != 0:
                        fix = i
                        break
                if fix is not None:
                    break
            if fix is None:
                break
            row_add(t, fix, 1)

        if a[t][t] == 0:
            break
        if a[t][t] < 0:
            row_negate(t)
        t += 1

    d = [[a[i][j] if i == j else 0 for j in range(cols)] for i in range(rows)]
    return u, d, v


def diagonal_of(d: IntMatrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def cokernel_invariants(rows: list[Vector], ambient_rank: int) -> tuple[list[int], int]:
    """Invariant factors (>1) and free rank of Z^ambient_rank / <rows>."""
    if not rows:
        return [], ambient_rank
    _, d, _ = smith_normal_form([list(r) for r in rows])
    diag = [x for x in diagonal_of(d) if x != 0]
    torsion = [x for x in diag if x > 1]
    return torsion, ambient_rank - len(diag)


def integer_kernel_basis(rows: list[Vector], n: int) -> list[Vector]:
    """Basis of the saturated kernel {x in Z^n : row . x = 0 for all rows}."""
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    u, d, v = smith_normal_form([list(r) for r in rows])
    nonzero = sum(1 for x in diagonal_of(d) if x != 0)
    vt = transpose(v)  # columns of v as rows
    return [tuple(vt[j]) for j in range(nonzero, n)]


def lattice_saturated(rows: list[Vector]) -> bool:
    """Whether the row span is a saturated sublattice (all invariant factors 1)."""
    if not rows:
        return True
    _, d, _ = smith_normal_form([list(r) for r in rows])
    return all(x in (0, 1) for x in diagonal_of(d))


def pairing_surjective(rows: list[Vector]) -> bool:
    """Whether x -> (row_i . x) maps Z^n onto Z^{#rows}."""
    if not rows:
        return True
    _, d, _ = smith_normal_form([list(r) for r in rows])
    diag = diagonal_of(d)
    return len([x for x in diag if x != 0]) == len(rows) and all(
        x in (0, 1) for x in diag
    )


def random_unimodular(rank: int, rng, steps: int = 12) -> IntMatrix:
    """Random unimodular matrix built from shears and signed swaps."""
    m = identity_matrix(rank)
    for _ in range(steps):
        i, j = rng.randrange(rank), rng.randrange(rank)
        if i == j:
            m[i] = [-x for x in m[i]]
            continue
        c = rng.randint(-2, 2)
        for k in range(rank):
            m[i][k] += c * m[j][k]
    return m


# ---------------------------------------------------------------------------
# finite abelian groups and Dynkin types


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group as an invariant-factor list d_1 | d_2 | ... (each >= 2)."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        facts = self.invariant_factors
        if any(d < 2 for d in facts):
            raise DatumError(f"invariant factors must be >= 2: {facts}")
        for a, b in zip(facts, facts[1:]):
            if b % a != 0:
                raise DatumError(f"divisibility chain broken: {facts}")

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


SERIES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True)
class DynkinType:
    """Multiset of irreducible series labels plus the rank of the central torus.

    Canonical conventions: D_3 appears as A_3, D_2 as A_1+A_1, and the
    rank-2 double-bond diagram as C_2 (B_2 and C_2 are the same diagram).
    """

    components: tuple[tuple[str, int], ...]
    torus_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(sorted(self.components)))
        for series, rank in self.components:
            if series not in SERIES or rank < 1:
                raise DatumError(f"bad component {(series, rank)}")
            if series == "B" and rank < 3:
                raise DatumError("B-components have rank >= 3 (C2 is canonical at rank 2)")
            if series == "C" and rank < 2:
                raise DatumError("C-components have rank >= 2")
            if series == "D" and rank < 4:
                raise DatumError("D-components have rank >= 4 (D3 = A3, D2 = A1+A1)")
            if series == "E" and rank not in (6, 7, 8):
                raise DatumError("E-components have rank 6, 7 or 8")
            if series == "F" and rank != 4:
                raise DatumError("F4 is the only F-component")
            if series == "G" and rank != 2:
                raise DatumError("G2 is the only G-component")
        if self.torus_rank < 0:
            raise DatumError("negative torus rank")

    @property
    def semisimple_rank(self) -> int:
        return sum(rank for _, rank in self.components)

    def __str__(self) -> str:
        if not self.components:
            body = "0"
        else:
            body = " + ".join(f"{s}{r}" for s, r in self.components)
        if self.torus_rank:
            body += f" (torus rank {self.torus_rank})"
        return body


#: |W| and |det Cartan| for the irreducible series, used as test oracles.
def weyl_order_closed_form(series: str, rank: int) -> int:
    fact = 1
    for k in range(2, rank + 1):
        fact *= k
    if series == "A":
        return fact * (rank + 1)
    if series in ("B", "C"):
        return (2**rank) * fact
    if series == "D":
        return (2 ** (rank - 1)) * fact
    if series == "G":
        return 12
    if series == "F":
        return 1152
    if series == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    raise GroupSpecError(f"unknown series {series}")


def cartan_determinant_closed_form(series: str, rank: int) -> int:
    if series == "A":
        return rank + 1
    if series in ("B", "C"):
        return 2
    if series == "D":
        return 4
    if series == "E":
        return {6: 3, 7: 2, 8: 1}[rank]
    return 1  # F4, G2


# ---------------------------------------------------------------------------
# based root data


@dataclass(frozen=True)
class BasedRootDatum:
    """Character lattice Z^rank with chosen simple roots and simple coroots.

    The pairing <alpha_j, alpha_i^vee> is the plain dot product; validation
    checks that it forms a classifiable Cartan matrix.
    """

    rank: int
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    name: str = ""

    def __post_init__(self):
        if self.rank < 0:
            raise DatumError("negative rank")
        if len(self.simple_roots) != len(self.simple_coroots):
            raise DatumError("root/coroot counts differ")
        if len(self.simple_roots) > self.rank:
            raise DatumError("more simple roots than the lattice rank")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != self.rank:
                raise DatumError("vector length does not match rank")
        validate_cartan_matrix(self.cartan_matrix())
        # classifiability check; raises DatumError on garbage
        classify(self)

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    def pairing(self, root_index: int, coroot_index: int) -> int:
        r = self.simple_roots[root_index]
        c = self.simple_coroots[coroot_index]
        return sum(a * b for a, b in zip(r, c))

    def cartan_matrix(self) -> IntMatrix:
        """C[i][j] = <alpha_j, alpha_i^vee>."""
        k = self.semisimple_rank
        return [[self.pairing(j, i) for j in range(k)] for i in range(k)]

    def adjacency(self) -> list[list[int]]:
        c = self.cartan_matrix()
        k = len(c)
        return [
            [j for j in range(k) if j != i and c[i][j] != 0] for i in range(k)
        ]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "simple_roots": [list(v) for v in self.simple_roots],
            "simple_coroots": [list(v) for v in self.simple_coroots],
        }

    @staticmethod
    def from_json(data: dict) -> "BasedRootDatum":
        return BasedRootDatum(
            rank=int(data["rank"]),
            simple_roots=tuple(tuple(int(x) for x in v) for v in data["simple_roots"]),
            simple_coroots=tuple(tuple(int(x) for x in v) for v in data["simple_coroots"]),
            name=str(data.get("name", "")),
        )


def validate_cartan_matrix(c: IntMatrix) -> None:
    k = len(c)
    for i in range(k):
        if c[i][i] != 2:
            raise DatumError(f"Cartan diagonal entry {c[i][i]} != 2 at {i}")
        for j in range(k):
            if i == j:
                continue
            if c[i][j] > 0:
                raise DatumError(f"positive off-diagonal Cartan entry at {(i, j)}")
            if (c[i][j] == 0) != (c[j][i] == 0):
                raise DatumError(f"asymmetric zero pattern at {(i, j)}")
            if c[i][j] * c[j][i] > 3:
                raise DatumError(f"bond multiplicity > 3 at {(i, j)} (not finite type)")


def dynkin_components(datum: BasedRootDatum, indices=None) -> list[list[int]]:
    """Connected components of the Dynkin graph on the given node subset.

    Components are returned in ambient node order (sorted by least node).
    """
    if indices is None:
        indices = range(datum.semisimple_rank)
    nodes = sorted(set(indices))
    adj = datum.adjacency()
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in nodes:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y in nodes and y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def classify_component(datum: BasedRootDatum, comp: list[int]) -> tuple[str, int]:
    """Series/rank of one connected component (canonical labels)."""
    k = len(comp)
    c = datum.cartan_matrix()
    local = {v: i for i, v in enumerate(comp)}
    adj = {v: [w for w in comp if w != v and c[v][w] != 0] for v in comp}
    degrees = {v: len(adj[v]) for v in comp}
    edges = [(v, w) for v in comp for w in adj[v] if v < w]
    if len(edges) != k - 1:
        raise DatumError(f"component {comp} is not a tree")
    multi = [(v, w, c[v][w] * c[w][v]) for v, w in edges]
    triple = [(v, w) for v, w, m in multi if m == 3]
    double = [(v, w) for v, w, m in multi if m == 2]

    if triple:
        if k != 2 or double:
            raise DatumError(f"component {comp}: triple bond outside G2")
        return ("G", 2)
    if double:
        if len(double) > 1 or any(degrees[v] > 2 for v in comp):
            raise DatumError(f"component {comp}: unclassifiable double-bond layout")
        v, w = double[0]
        if k == 2:
            return ("C", 2)  # B2 = C2 as a diagram; C2 is the canonical label
        leaf = None
        for x in (v, w):
            if degrees[x] == 1:
                leaf = x
        if leaf is None:
            if k == 4:
                return ("F", 4)
            raise DatumError(f"component {comp}: interior double bond but not F4")
        nbr = w if leaf == v else v
        # C[leaf][nbr] == -2 means the leaf root is short (type B tail)
        return ("B", k) if c[leaf][nbr] == -2 else ("C", k)

    # simply laced
    branch = [v for v in comp if degrees[v] == 3]
    if any(degrees[v] > 3 for v in comp):
        raise DatumError(f"component {comp}: node of degree > 3")
    if not branch:
        return ("A", k)
    if len(branch) > 1:
        raise DatumError(f"component {comp}: more than one branch node")
    b = branch[0]
    arms = []
    for start in adj[b]:
        length = 1
        prev, cur = b, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("A", 3) if k == 3 else ("D", k)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", k)
    raise DatumError(f"component {comp}: arms {arms} not of finite type")


def classify(datum: BasedRootDatum) -> DynkinType:
    """Dynkin type of the datum: component multiset plus central torus rank.

    >>> classify(build_catalog_group("GL", [3]))
    DynkinType(components=(('A', 2),), torus_rank=1)
    """
    comps = dynkin_components(datum)
    labels = tuple(classify_component(datum, comp) for comp in comps)
    return DynkinType(components=labels, torus_rank=datum.rank - datum.semisimple_rank)


def fundamental_group(datum: BasedRootDatum) -> FiniteAbelianGroup:
    """Torsion of (cocharacter lattice) / (span of the simple coroots).

    Trivial exactly when the derived group is simply connected; for an
    adjoint datum its order is |det Cartan|.
    """
    torsion, _ = cokernel_invariants(list(datum.simple_coroots), datum.rank)
    return FiniteAbelianGroup(tuple(torsion))


def center_character_quotient(datum: BasedRootDatum) -> tuple[FiniteAbelianGroup, int]:
    """Character group of the center: torsion part and free rank of X/<roots>."""
    torsion, free = cokernel_invariants(list(datum.simple_roots), datum.rank)
    return FiniteAbelianGroup(tuple(torsion)), free


def dual_datum(datum: BasedRootDatum) -> BasedRootDatum:
    """Swap the roles of roots and coroots (the Langlands dual's datum)."""
    return BasedRootDatum(
        rank=datum.rank,
        simple_roots=datum.simple_coroots,
        simple_coroots=datum.simple_roots,
        name=f"dual({datum.name})" if datum.name else "dual",
    )


def change_basis(datum: BasedRootDatum, u: IntMatrix) -> BasedRootDatum:
    """Apply a unimodular change of basis of the character lattice.

    Roots transform by u, coroots by the inverse transpose, so all pairings
    are preserved exactly.
    """
    if not is_unimodular(u):
        raise DatumError("change of basis must be unimodular")
    n = datum.rank
    uu, d, v = smith_normal_form(u)
    # UuV = 1 for unimodular u, so u^{-1} = V U; verified before use
    inv = mat_mul(v, uu)
    if mat_mul(u, inv) != identity_matrix(n):
        raise DatumError("failed to invert unimodular matrix")
    inv_t = transpose(inv)
    return BasedRootDatum(
        rank=n,
        simple_roots=tuple(mat_vec(u, r) for r in datum.simple_roots),
        simple_coroots=tuple(mat_vec(inv_t, c) for c in datum.simple_coroots),
        name=datum.name,
    )


def datum_product(data: list[BasedRootDatum], name: str | None = None) -> BasedRootDatum:
    """Direct sum of root data (block coordinates, roots/coroots padded)."""
    total = sum(d.rank for d in data)
    roots: list[Vector] = []
    coroots: list[Vector] = []
    offset = 0
    for d in data:
        for r in d.simple_roots:
            roots.append((0,) * offset + r + (0,) * (total - offset - d.rank))
        for c in d.simple_coroots:
            coroots.append((0,) * offset + c + (0,) * (total - offset - d.rank))
        offset += d.rank
    return BasedRootDatum(
        rank=total,
        simple_roots=tuple(roots),
        simple_coroots=tuple(coroots),
        name=name if name is not None else "x".join(d.name for d in data),
    )


# ---------------------------------------------------------------------------
# catalog constructors

BOURBAKI_EDGES = {
    # 1-based adjacency for the exceptional simply-laced types
    "E6": [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
    "E7": [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
    "E8": [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
}


def cartan_matrix_of(series: str, rank: int) -> IntMatrix:
    """Bourbaki Cartan matrix, C[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>."""
    if rank < 1:
        raise GroupSpecError(f"{series}{rank}: rank must be positive")
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain_edge(i, j):
        c[i][j] = -1
        c[j][i] = -1

    if series == "A":
        for i in range(rank - 1):
            chain_edge(i, i + 1)
    elif series in ("B", "C"):
        if rank < 2:
            raise GroupSpecError(f"{series}{rank}: rank must be >= 2")
        for i in range(rank - 2):
            chain_edge(i, i + 1)
        # last root short for B, long for C
        if series == "B":
            c[rank - 1][rank - 2] = -2
            c[rank - 2][rank - 1] = -1
        else:
            c[rank - 1][rank - 2] = -1
            c[rank - 2][rank - 1] = -2
    elif series == "D":
        if rank < 2:
            raise GroupSpecError(f"D{rank}: rank must be >= 2")
        for i in range(rank - 2):
            chain_edge(i, i + 1)
        if rank >= 3:
            chain_edge(rank - 3, rank - 1)
    elif series == "E":
        if rank not in (6, 7, 8):
            raise GroupSpecError(f"E{rank}: rank must be 6, 7 or 8")
        for i, j in BOURBAKI_EDGES[f"E{rank}"]:
            chain_edge(i - 1, j - 1)
    elif series == "F":
        if rank != 4:
            raise GroupSpecError("F-series has rank 4 only")
        chain_edge(0, 1)
        chain_edge(2, 3)
        c[1][2] = -1
        c[2][1] = -2  # alpha_3 short
    elif series == "G":
        if rank != 2:
            raise GroupSpecError("G-series has rank 2 only")
        c[0][1] = -3  # alpha_1 short
        c[1][0] = -1
    else:
        raise GroupSpecError(f"unknown series {series}")
    return c


def simply_connected_datum(series: str, rank: int, name: str | None = None) -> BasedRootDatum:
    """Simply connected datum: coroots are the standard basis, roots the Cartan columns."""
    c = cartan_matrix_of(series, rank)
    roots = tuple(tuple(c[i][j] for i in range(rank)) for j in range(rank))
    coroots = tuple(tuple(1 if i == j else 0 for i in range(rank)) for j in range(rank))
    return BasedRootDatum(rank, roots, coroots, name or f"{series}{rank}sc")


def adjoint_datum(series: str, rank: int, name: str | None = None) -> BasedRootDatum:
    """Adjoint datum: roots are the standard basis, coroots the Cartan rows."""
    c = cartan_matrix_of(series, rank)
    roots = tuple(tuple(1 if i == j else 0 for i in range(rank)) for j in range(rank))
    coroots = tuple(tuple(c[j][i] for i in range(rank)) for j in range(rank))
    return BasedRootDatum(rank, roots, coroots, name or f"{series}{rank}ad")


def _torus(n: int, name: str) -> BasedRootDatum:
    return BasedRootDatum(n, (), (), name)


def _unit(n: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(n))


def _gl_datum(n: int, name: str) -> BasedRootDatum:
    roots = tuple(
        tuple((1 if j == i else -1 if j == i + 1 else 0) for j in range(n))
        for i in range(n - 1)
    )
    return BasedRootDatum(n, roots, roots, name)


def build_catalog_group(name: str, parameters: list[int]) -> BasedRootDatum:
    """Construct a split group from its catalog tag.

    Tags: GL(n), SL(n), PGL(n), Sp(2n), GSp(2n), Spin(m), GSpin(m), SO(2n),
    E6sc, E7sc, E8, F4, G2.  Raises GroupSpecError for unknown tags or
    parameters outside the tag's domain.
    """
    tag = name.strip()
    exceptional = {
        "E6sc": ("E", 6, simply_connected_datum),
        "E7sc": ("E", 7, simply_connected_datum),
        "E8": ("E", 8, simply_connected_datum),
        "F4": ("F", 4, simply_connected_datum),
        "G2": ("G", 2, simply_connected_datum),
    }
    if tag in exceptional:
        if parameters:
            raise GroupSpecError(f"{tag} takes no parameters")
        series, rank, builder = exceptional[tag]
        return builder(series, rank, tag)

    if len(parameters) != 1:
        raise GroupSpecError(f"{tag} takes exactly one integer parameter")
    n = parameters[0]

    if tag == "GL":
        if n < 1:
            raise GroupSpecError("GL(n) requires n >= 1")
        return _torus(1, "GL(1)") if n == 1 else _gl_datum(n, f"GL({n})")
    if tag == "SL":
        if n < 2:
            raise GroupSpecError("SL(n) requires n >= 2")
        return simply_connected_datum("A", n - 1, f"SL({n})")
    if tag == "PGL":
        if n < 2:
            raise GroupSpecError("PGL(n) requires n >= 2")
        return adjoint_datum("A", n - 1, f"PGL({n})")
    if tag == "Sp":
        if n < 2 or n % 2:
            raise GroupSpecError("Sp(2n) requires an even parameter >= 2")
        half = n // 2
        rank = half
        roots = [
            tuple((1 if j == i else -1 if j == i + 1 else 0) for j in range(rank))
            for i in range(rank - 1)
        ]
        roots.append(tuple(2 if j == rank - 1 else 0 for j in range(rank)))
        coroots = [
            tuple((1 if j == i else -1 if j == i + 1 else 0) for j in range(rank))
            for i in range(rank - 1)
        ]
        coroots.append(_unit(rank, rank - 1))
        return BasedRootDatum(rank, tuple(roots), tuple(coroots), f"Sp({n})")
    if tag == "GSp":
        if n < 2 or n % 2:
            raise GroupSpecError("GSp(2n) requires an even parameter >= 2")
        half = n // 2
        rank = half + 1  # coordinates e_1..e_n, e_0 (similitude) last
        roots = [
            tuple((1 if j == i else -1 if j == i + 1 else 0) for j in range(rank))
            for i in range(half - 1)
        ]
        roots.append(tuple(2 if j == half - 1 else (-1 if j == half else 0) for j in range(rank)))
        coroots = [
            tuple((1 if j == i else -1 if j == i + 1 else 0) for j in range(rank))
            for i in range(half - 1)
        ]
        coroots.append(_unit(rank, half - 1))
        return BasedRootDatum(rank, tuple(roots), tuple(coroots), f"GSp({n})")
    if tag == "Spin":
        if n < 3:
            raise GroupSpecError("Spin(m) requires m >= 3")
        if n % 2:
            return simply_connected_datum("B", (n - 1) // 2, f"Spin({n})") if n > 3 else simply_connected_datum("A", 1, "Spin(3)")
        half = n // 2
        if half == 2:
            return datum_product(
                [simply_connected_datum("A", 1), simply_connected_datum("A", 1)],
                name="Spin(4)",
            )
        if half == 3:
            return simply_connected_datum("A", 3, "Spin(6)")
        return simply_connected_datum("D", half, f"Spin({n})")
    if tag == "GSpin":
        if n < 3:
            raise GroupSpecError("GSpin(m) requires m >= 3")
        if n % 2:
            half = (n - 1) // 2
            rank = half + 1
            roots = [
                tuple((1 if j == i else -1 if j == i + 1 else 0) for j in range(rank))
                for i in range(half - 1)
            ]
            roots.append(_unit(rank, half - 1))
            coroots = [
                tuple((1 if j == i else -1 if j == i + 1 else 0) for j in range(rank))
                for i in range(half - 1)
            ]
            coroots.append(
                tuple(2 if j == half - 1 else (-1 if j == half else 0) for j in range(rank))
            )
            return BasedRootDatum(rank, tuple(roots), tuple(coroots), f"GSpin({n})")
        half = n // 2
        if half < 2:
            raise GroupSpecError("GSpin(2n) requires n >= 2")
        rank = half + 1
        roots = [
            tuple((1 if j == i else -1 if j == i + 1 else 0) for j in range(rank))
            for i in range(half - 1)
        ]
        roots.append(
            tuple(1 if j in (half - 2, half - 1) else 0 for j in range(rank))
        )
        coroots = [
            tuple((1 if j == i else -1 if j == i + 1 else 0) for j in range(rank))
            for i in range(half - 1)
        ]
        coroots.append(
            tuple(1 if j in (half - 2, half - 1) else (-1 if j == half else 0) for j in range(rank))
        )
        return BasedRootDatum(rank, tuple(roots), tuple(coroots), f"GSpin({n})")
    if tag == "SO":
        if n < 4 or n % 2:
            raise GroupSpecError("SO(2n) requires an even parameter >= 4")
        half = n // 2
        rank = half
        roots = [
            tuple((1 if j == i else -1 if j == i + 1 else 0) for j in range(rank))
            for i in range(rank - 1)
        ]
        roots.append(tuple(1 if j in (rank - 2, rank - 1) else 0 for j in range(rank)))
        return BasedRootDatum(rank, tuple(roots), tuple(roots), f"SO({n})")

    raise GroupSpecError(
        f"unknown catalog tag {tag!r}; known tags: GL, SL, PGL, Sp, GSp, Spin, "
        f"GSpin, SO, E6sc, E7sc, E8, F4, G2"
    )
