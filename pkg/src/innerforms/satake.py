"""Satake diagrams for inner forms of split groups, and the Levi transfer map.

A diagram is a based root datum plus a set of black vertices (the simple
roots of the minimal Levi of the non-split form).  Type-A periodic patterns
encode the inner forms GL_m(D_d); ``transfer_levi`` carries a GL-sandwich
Levi to its division-algebra shape.  Rendering is deterministic text with a
Unicode default and an ASCII fallback, and round-trips through
``parse_ascii`` for diagrams over canonical simply connected data.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import DatumError, TransferError
from .levi import LeviDescriptor, LeviReport, levi_datum
from .rootdata import (
    BasedRootDatum,
    build_catalog_group,
    classify_component,
    datum_product,
    dynkin_components,
    simply_connected_datum,
)

ASCII_ENV_VAR = "INNERFORMS_ASCII"


@dataclass(frozen=True)
class SatakeDiagram:
    """Dynkin diagram of ``base`` with a black-vertex subset."""

    base: BasedRootDatum
    black: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "black", frozenset(self.black))
        k = self.base.semisimple_rank
        if any(b < 0 or b >= k for b in self.black):
            raise DatumError(f"black vertices {sorted(self.black)} out of range")


@dataclass(frozen=True)
class InnerFactor:
    """One factor GL_m(D_d); ``kind`` records how much of the GL the group fills."""

    m: int
    d: int
    kind: str  # "GL" | "SL" | "sandwich"

    def __post_init__(self):
        if self.m < 1 or self.d < 1:
            raise DatumError("factor sizes must be positive")
        if self.kind not in ("GL", "SL", "sandwich"):
            raise DatumError(f"unknown factor kind {self.kind!r}")

    @property
    def n(self) -> int:
        return self.m * self.d

    def __str__(self) -> str:
        body = f"GL_{self.m}(D_{self.d})" if self.d > 1 else f"GL_{self.m}(F)"
        if self.kind == "SL":
            body = body.replace("GL", "SL", 1)
        return body


@dataclass(frozen=True)
class InnerFormShape:
    factors: tuple[InnerFactor, ...]
    field_note: str = ""

    def __str__(self) -> str:
        body = " x ".join(str(f) for f in self.factors) if self.factors else "(torus)"
        return f"{body} [{self.field_note}]" if self.field_note else body


# ---------------------------------------------------------------------------
# type-A periodic patterns


def type_a_white_positions(n: int, d: int) -> list[int]:
    """1-based white positions d, 2d, ..., n-d on the A_{n-1} chain."""
    if n < 1 or d < 1 or n % d != 0:
        raise TransferError(f"no inner-form diagram: {d} does not divide {n}")
    return list(range(d, n, d))


def type_a_satake(n: int, d: int) -> SatakeDiagram:
    """Satake diagram of the inner form GL_{n/d}(D_d) of GL_n.

    White vertices sit at positions d, 2d, ..., n-d; black vertices fill
    runs of length d-1 between them.  d = 1 is the split (all-white) form,
    d = n the form anisotropic modulo the center (all-black).
    """
    base = build_catalog_group("GL", [n])
    white = set(type_a_white_positions(n, d))
    black = frozenset(i for i in range(n - 1) if (i + 1) not in white)
    return SatakeDiagram(base=base, black=black)


def validate_type_a_period(diagram: SatakeDiagram, d: int) -> bool:
    """Check the black set is the period-d pattern on a single A-chain."""
    n = diagram.base.semisimple_rank + 1
    try:
        white = set(type_a_white_positions(n, d))
    except TransferError:
        return False
    expected = {i for i in range(n - 1) if (i + 1) not in white}
    return set(diagram.black) == expected


# ---------------------------------------------------------------------------
# Levi transfer


def transfer_levi(report: LeviReport, division_degrees) -> InnerFormShape:
    """Transfer a sandwich Levi to its inner form shape prod GL_{m_i}(D_{d_i}).

    Each division degree must divide its envelope size n_i; otherwise the
    inner form has no corresponding Levi and TransferError is raised.
    Factor kind is GL when the Levi is exactly the GL-envelope (times
    central GL_1 factors) and sandwich otherwise.
    """
    if not report.condition_one:
        raise TransferError(
            "Levi does not satisfy the SL-GL sandwich condition; no transfer"
        )
    envelope = report.gl_envelope or ()
    degrees = tuple(int(d) for d in division_degrees)
    if len(degrees) != len(envelope):
        raise TransferError(
            f"expected {len(envelope)} division degrees for envelope {envelope}, "
            f"got {len(degrees)}"
        )
    factors = []
    for n_i, d_i in zip(envelope, degrees):
        if d_i < 1:
            raise TransferError(f"division degree {d_i} must be >= 1")
        if n_i % d_i:
            raise TransferError(
                f"degree {d_i} does not divide {n_i}: no corresponding Levi "
                f"in this inner form"
            )
        kind = "GL" if report.envelope_exact else "sandwich"
        factors.append(InnerFactor(m=n_i // d_i, d=d_i, kind=kind))
    if report.envelope_exact:
        note = f"central GL_1 factors: {report.central_gl1s}"
    else:
        note = (
            "proper sandwich between the SL- and GL-products; "
            f"split component rank {report.split_component_rank}"
        )
    return InnerFormShape(factors=tuple(factors), field_note=note)


def forget_division_algebras(shape: InnerFormShape) -> tuple[int, ...]:
    """Envelope sizes recovered by setting every d_i = 1."""
    return tuple(f.n for f in shape.factors)


def shares_derived_type_with_envelope(report: LeviReport) -> bool:
    """Structural fact behind normalization-constant invariance.

    A sandwich Levi and its GL-envelope have the same derived root system
    (a product of type-A systems of ranks n_i - 1), so any constant that
    depends only on the derived data is common to both.  Returns True for
    every condition-one report; never computes such a constant.
    """
    if not report.condition_one:
        return False
    envelope_derived = tuple(sorted(("A", n - 1) for n in report.gl_envelope if n > 1))
    return envelope_derived == report.derived_type.components


def _chain_order(datum: BasedRootDatum, comp: list[int]) -> list[int]:
    """Path order of an A-component, starting from its least endpoint."""
    adj = datum.adjacency()
    inside = set(comp)
    ends = [v for v in comp if len([w for w in adj[v] if w in inside]) <= 1]
    start = min(ends)
    order = [start]
    prev = None
    cur = start
    while len(order) < len(comp):
        nxt = [w for w in adj[cur] if w in inside and w != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def levi_satake_diagram(desc: LeviDescriptor, division_degrees) -> SatakeDiagram:
    """Satake diagram of the Levi's inner form: period-d_i black runs per factor."""
    sub = levi_datum(desc)
    comps = dynkin_components(sub)
    degrees = tuple(int(d) for d in division_degrees)
    if len(degrees) != len(comps):
        raise TransferError(
            f"expected {len(comps)} degrees (one per component), got {len(degrees)}"
        )
    black: set[int] = set()
    for comp, d in zip(comps, degrees):
        series, rank = classify_component(sub, comp)
        if series != "A":
            raise TransferError("period patterns only exist on type-A components")
        n = rank + 1
        white = set(type_a_white_positions(n, d))
        order = _chain_order(sub, comp)
        for pos, node in enumerate(order, start=1):
            if pos not in white:
                black.add(node)
    return SatakeDiagram(base=sub, black=frozenset(black))


# ---------------------------------------------------------------------------
# rendering

_GLYPHS = {
    True: {  # unicode
        "black": "●",
        "white": "○",
        1: "—",
        (2, "right"): "⇒",
        (2, "left"): "⇐",
        (3, "right"): "⇛",
        (3, "left"): "⇚",
    },
    False: {  # ascii
        "black": "*",
        "white": "o",
        1: "--",
        (2, "right"): "=>",
        (2, "left"): "<=",
        (3, "right"): "3>",
        (3, "left"): "<3",
    },
}


def _use_unicode(unicode: bool | None) -> bool:
    if unicode is not None:
        return unicode
    return not os.environ.get(ASCII_ENV_VAR)


def _component_layout(datum: BasedRootDatum, comp: list[int]) -> tuple[list[int], int | None, int]:
    """(chain order, hanging node, attach position in the chain)."""
    adj = datum.adjacency()
    inside = set(comp)
    local_adj = {v: [w for w in adj[v] if w in inside] for v in comp}
    branch = [v for v in comp if len(local_adj[v]) == 3]
    if not branch:
        # path: orient with the lex-min endpoint first
        if len(comp) == 1:
            return [comp[0]], None, -1
        ends = [v for v in comp if len(local_adj[v]) == 1]
        start = min(ends)
        order = [start]
        prev, cur = None, start
        while len(order) < len(comp):
            nxt = [w for w in local_adj[cur] if w != prev]
            prev, cur = cur, nxt[0]
            order.append(cur)
        return order, None, -1
    b = branch[0]
    arms = []
    for nbr in local_adj[b]:
        arm = [nbr]
        prev, cur = b, nbr
        while True:
            nxt = [w for w in local_adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    short = [a for a in arms if len(a) == 1]
    if len(short) >= 2:
        hanging = max(a[0] for a in short)  # D-type: larger index hangs
    else:
        hanging = short[0][0]  # E-type
    rest = [a for a in arms if not (len(a) == 1 and a[0] == hanging)]
    # D-pictures put the fork at the right end (long arm first); E-pictures
    # lead with the length-2 arm, matching the usual Bourbaki figures.
    d_like = min(len(a) for a in rest) == 1
    rest.sort(key=len, reverse=d_like)
    first, second = rest[0], rest[1]
    chain = list(reversed(first)) + [b] + second
    attach = len(first)
    return chain, hanging, attach


def render_ascii(diagram: SatakeDiagram, unicode: bool | None = None) -> str:
    """Deterministic text rendering; components are blocks separated by blank lines.

    Double and triple bonds carry an arrow pointing at the short root; a
    branch node (D/E types) hangs below its attachment.  Honors the
    INNERFORMS_ASCII environment variable unless ``unicode`` is forced.
    """
    uni = _use_unicode(unicode)
    g = _GLYPHS[uni]
    datum = diagram.base
    cartan = datum.cartan_matrix()
    blocks = []
    for comp in dynkin_components(datum):
        chain, hanging, attach = _component_layout(datum, comp)
        line = ""
        cols = []
        for idx, node in enumerate(chain):
            cols.append(len(line))
            line += g["black"] if node in diagram.black else g["white"]
            if idx + 1 < len(chain):
                nxt = chain[idx + 1]
                mult = cartan[node][nxt] * cartan[nxt][node]
                if mult == 1:
                    line += g[1]
                else:
                    # C[a][b] == -mult means a is the short root
                    side = "left" if cartan[node][nxt] == -mult else "right"
                    line += g[(mult, side)]
        if hanging is None:
            blocks.append(line)
        else:
            pad = " " * cols[attach]
            sym = g["black"] if hanging in diagram.black else g["white"]
            blocks.append("\n".join([line, pad + "|", pad + sym]))
    return "\n\n".join(blocks)


# ---------------------------------------------------------------------------
# parsing back to a canonical diagram


def canonical_diagram(components) -> SatakeDiagram:
    """Diagram over a product of canonical simply connected data.

    ``components`` is a list of (series, rank, black_positions) with
    0-based black positions in Bourbaki numbering.
    """
    data = [simply_connected_datum(series, rank) for series, rank, _ in components]
    base = datum_product(data)
    black: set[int] = set()
    offset = 0
    for (series, rank, positions), d in zip(components, data):
        for p in positions:
            if p < 0 or p >= rank:
                raise DatumError(f"black position {p} out of range for {series}{rank}")
            black.add(offset + p)
        offset += d.semisimple_rank
    return SatakeDiagram(base=base, black=frozenset(black))


def _tokenize_chain(line: str) -> tuple[list[bool], list[tuple[int, str]], list[int]]:
    """Colors (True = black), bonds (mult, direction), and node columns."""
    symbols = {"●": True, "*": True, "○": False, "o": False}
    bonds = {
        "—": (1, ""),
        "--": (1, ""),
        "⇒": (2, "right"),
        "=>": (2, "right"),
        "⇐": (2, "left"),
        "<=": (2, "left"),
        "⇛": (3, "right"),
        "3>": (3, "right"),
        "⇚": (3, "left"),
        "<3": (3, "left"),
    }
    colors: list[bool] = []
    edges: list[tuple[int, str]] = []
    cols: list[int] = []
    i = 0
    expect_node = True
    while i < len(line):
        ch = line[i]
        if expect_node:
            if ch not in symbols:
                raise DatumError(f"expected a vertex symbol at column {i}: {line!r}")
            colors.append(symbols[ch])
            cols.append(i)
            i += 1
            expect_node = False
        else:
            matched = None
            for tok, info in bonds.items():
                if line.startswith(tok, i):
                    matched = (tok, info)
                    break
            if matched is None:
                raise DatumError(f"expected a bond at column {i}: {line!r}")
            edges.append(matched[1])
            i += len(matched[0])
            expect_node = True
    if expect_node:
        raise DatumError(f"dangling bond in {line!r}")
    return colors, edges, cols


def _parse_component(block: str) -> tuple[str, int, list[int]]:
    """One component block -> (series, rank, black positions in canonical order)."""
    lines = block.split("\n")
    colors, edges, cols = _tokenize_chain(lines[0])
    hanging_color = None
    attach_idx = None
    if len(lines) > 1:
        if len(lines) != 3 or lines[1].strip() != "|":
            raise DatumError(f"malformed branch block: {block!r}")
        bar_col = lines[1].index("|")
        sym = lines[2].strip()
        if sym not in ("●", "○", "*", "o"):
            raise DatumError(f"bad hanging vertex {sym!r}")
        if lines[2].index(sym) != bar_col or bar_col not in cols:
            raise DatumError(f"branch not aligned under a chain vertex: {block!r}")
        hanging_color = sym in ("●", "*")
        attach_idx = cols.index(bar_col)

    k = len(colors) + (1 if hanging_color is not None else 0)
    multis = [(i, e) for i, e in enumerate(edges) if e[0] > 1]

    if hanging_color is None and not multis:
        # type A as read
        return ("A", k, [i for i, c in enumerate(colors) if c])

    if multis:
        if hanging_color is not None or len(multis) > 1:
            raise DatumError(f"unclassifiable bond layout: {block!r}")
        pos, (mult, direction) = multis[0]
        if mult == 3:
            if k != 2:
                raise DatumError("triple bond outside G2")
            # canonical G2 order: short root first; arrow points at the short root
            flip = direction == "right"
            cc = list(reversed(colors)) if flip else colors
            return ("G", 2, [i for i, c in enumerate(cc) if c])
        # double bond
        if k == 2:
            # canonical C2: arrow points left (first root short)
            flip = direction == "right"
            cc = list(reversed(colors)) if flip else colors
            return ("C", 2, [i for i, c in enumerate(cc) if c])
        if 0 < pos < len(edges) - 1:
            if k != 4:
                raise DatumError("interior double bond outside F4")
            flip = direction == "left"
            cc = list(reversed(colors)) if flip else colors
            return ("F", 4, [i for i, c in enumerate(cc) if c])
        flip = pos == 0  # canonical layout keeps the multiple bond at the right end
        cc = list(reversed(colors)) if flip else colors
        dd = direction
        if flip:
            dd = "left" if direction == "right" else "right"
        series = "B" if dd == "right" else "C"
        return (series, k, [i for i, c in enumerate(cc) if c])

    # branch node: D_k has chain arms (k-3, 1); E_k has chain arms (2, k-4)
    if attach_idx is None:
        raise DatumError("unreachable branch state")
    left_arm = attach_idx
    right_arm = len(colors) - 1 - attach_idx
    if min(left_arm, right_arm) < 1:
        raise DatumError(f"branch at a chain end: {block!r}")
    if 1 in (left_arm, right_arm):
        if k < 4 or max(left_arm, right_arm) != k - 3:
            raise DatumError(f"branch arms ({left_arm},{right_arm}) not of finite type")
        flip = left_arm == 1 and right_arm != 1  # canonical fork is at the right
        cc = list(reversed(colors)) if flip else colors
        # canonical node order: chain alpha_1..alpha_{k-1}, hanging alpha_k
        positions = [i for i, c in enumerate(cc) if c]
        if hanging_color:
            positions.append(k - 1)
        return ("D", k, sorted(positions))
    if k not in (6, 7, 8) or sorted((left_arm, right_arm)) != [2, k - 4]:
        raise DatumError(f"branch arms ({left_arm},{right_arm}) not of finite type")
    flip = left_arm != 2
    cc = list(reversed(colors)) if flip else colors
    # canonical Bourbaki order: chain = alpha_1, alpha_3, ..., alpha_k; hanging = alpha_2
    chain_names = [0] + list(range(2, k))
    positions = [chain_names[i] for i, c in enumerate(cc) if c]
    if hanging_color:
        positions.append(1)
    return ("E", k, sorted(positions))


def parse_ascii(text: str) -> SatakeDiagram:
    """Parse a rendered diagram back into canonical simply connected form.

    Inverse to render_ascii on diagrams produced by ``canonical_diagram``;
    for other bases it recovers the same picture over canonical data (the
    torus part and lattice gluing are not encoded in the picture).
    """
    blocks = [b for b in text.split("\n\n") if b.strip()]
    comps = [_parse_component(b) for b in blocks]
    return canonical_diagram(comps)
