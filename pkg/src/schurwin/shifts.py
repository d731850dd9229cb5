"""Window-shift actions on generators: graded term complexes and K-matrices.

Degree conventions: the one-step shift toward the lower window places its
left-most (highest wedge power) term in degree 0 with degrees increasing
rightward; the inverse direction places the right-most term in degree 0 with
degrees decreasing leftward. Together these make the two K-class matrices
mutually inverse, which is what the relation tests check.

Single-step outputs are honest complexes. Multi-step outputs are skeletons:
only the graded terms and the K-class are meaningful, like terms are not
collapsed, and an inherited wedge factor may be folded into the copy count.
The trivialization det V ~ C is applied by dropping wedge^d V factors unless
`keep_det` asks to retain them for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .partitions import Context, GeneratorLabel, Partition, ShapeError, canonicalize
from .staircase import base_from_top, staircase_diagrams
from .windows import enumerate_window, in_window


@dataclass(frozen=True)
class Term:
    degree: int
    label: GeneratorLabel
    ext_power: int = 0
    copies: int = 1


@dataclass(frozen=True)
class TermComplex:
    terms: tuple[Term, ...]
    honest: bool = True

    def __post_init__(self):
        if not self.terms:
            raise ShapeError("a term complex needs at least one term")
        degs = sorted({t.degree for t in self.terms})
        if degs != list(range(degs[0], degs[-1] + 1)):
            raise ShapeError(f"degrees must form a contiguous interval, got {degs}")

    @property
    def degree_span(self) -> tuple[int, int]:
        degs = [t.degree for t in self.terms]
        return (min(degs), max(degs))

    def is_single_generator(self) -> bool:
        t = self.terms
        return (
            len(t) == 1
            and t[0].degree == 0
            and t[0].ext_power == 0
            and t[0].copies == 1
        )


def shift_down_generator(ctx: Context, g: GeneratorLabel) -> TermComplex:
    """Express a W_+1 generator in W_0 terms (the one-step downward shift).

    Generators in the overlap map to themselves. An out-of-window generator
    is replaced by the truncated staircase sequence over the base recovered
    from its weight, left-most term in degree 0; the dropped top term's
    wedge^d V factor is where the trivialization det V ~ C happens.
    """
    if not in_window(g, 1, ctx):
        raise ShapeError(f"generator not in W_+1: {g}")
    if in_window(g, 0, ctx):
        return TermComplex((Term(0, g),), honest=True)
    base = base_from_top(ctx, Partition(g.weight(ctx.r)))
    data = staircase_diagrams(ctx, base)
    terms = []
    for idx, st in enumerate(reversed(data.steps[:-1])):
        terms.append(Term(idx, canonicalize(st.delta.pad(ctx.r)), st.s))
    terms.append(Term(len(data.steps) - 1, canonicalize(base.pad(ctx.r)), 0))
    return TermComplex(tuple(terms), honest=True)


def shift_up_generator(
    ctx: Context, g: GeneratorLabel, keep_det: bool = False
) -> TermComplex:
    """Express a W_0 generator in W_+1 terms (the one-step upward shift).

    Out-of-overlap generators have a box-partition weight ending in zero,
    which is exactly a staircase base; the full staircase above it is the
    answer, right-most term in degree 0, degrees decreasing to -(K-1). The
    top term's wedge^d V factor is trivialized away unless keep_det is set.
    """
    if not in_window(g, 0, ctx):
        raise ShapeError(f"generator not in W_0: {g}")
    if in_window(g, 1, ctx):
        return TermComplex((Term(0, g),), honest=True)
    base = Partition(g.weight(ctx.r))
    data = staircase_diagrams(ctx, base)
    span = len(data.steps) - 1
    terms = []
    for idx, st in enumerate(reversed(data.steps)):
        ext = st.s
        if ext == ctx.d and not keep_det:
            ext = 0
        terms.append(Term(-span + idx, canonicalize(st.delta.pad(ctx.r)), ext))
    return TermComplex(tuple(terms), honest=True)


def _unit_step(
    ctx: Context, g: GeneratorLabel, from_k: int, to_k: int, keep_det: bool = False
) -> TermComplex:
    """One-step shift between adjacent windows, via det-twist conjugation."""
    if abs(from_k - to_k) != 1:
        raise ShapeError("unit step requires adjacent windows")
    if ctx.r == 0:
        # rank zero: every window is generated by the trivial bundle; the
        # shift is the identity, relabelled with the target window's marker
        return TermComplex((Term(0, GeneratorLabel(Partition(()), to_k)),))
    twist = to_k if to_k < from_k else from_k
    g0 = GeneratorLabel(g.delta, g.det_power - twist)
    if to_k < from_k:
        tc = shift_down_generator(ctx, g0)
    else:
        tc = shift_up_generator(ctx, g0, keep_det=keep_det)
    terms = tuple(
        Term(
            t.degree,
            GeneratorLabel(t.label.delta, t.label.det_power + twist),
            t.ext_power,
            t.copies,
        )
        for t in tc.terms
    )
    return TermComplex(terms, honest=True)


def general_shift(
    ctx: Context, from_k: int, to_k: int, g: GeneratorLabel, keep_det: bool = False
) -> TermComplex:
    """Iterate unit steps from W_from to W_to by termwise substitution.

    Degrees add; like terms are never collapsed. The result is an honest
    complex only for |from - to| <= 1, otherwise a skeleton whose contract is
    its graded terms and K-class.
    """
    if not in_window(g, from_k, ctx):
        raise ShapeError(f"generator not in W_{from_k}: {g}")
    terms: list[Term] = [Term(0, g)]
    current = from_k
    step = -1 if to_k < from_k else 1
    while current != to_k:
        nxt = current + step
        new_terms: list[Term] = []
        for t in terms:
            for u in _unit_step(ctx, t.label, current, nxt, keep_det=keep_det).terms:
                copies = t.copies * u.copies
                if t.ext_power == 0:
                    ext = u.ext_power
                elif u.ext_power == 0:
                    ext = t.ext_power
                else:
                    # two wedge factors on one term: fold the inherited one
                    # into the copy count, keeping the K-class intact
                    ext = u.ext_power
                    copies *= comb(ctx.d, t.ext_power)
                new_terms.append(Term(t.degree + u.degree, u.label, ext, copies))
        terms = new_terms
        current = nxt
    terms.sort(key=lambda t: t.degree)
    return TermComplex(tuple(terms), honest=abs(from_k - to_k) <= 1)


def k_class(ctx: Context, tc: TermComplex, basis: list[GeneratorLabel]) -> tuple[int, ...]:
    """Alternating-sum class of a complex in the given generator basis."""
    index = {g: i for i, g in enumerate(basis)}
    vec = [0] * len(basis)
    for t in tc.terms:
        if t.label not in index:
            raise ShapeError(f"term {t.label} lies outside the target basis")
        sign = -1 if t.degree % 2 else 1
        vec[index[t.label]] += sign * t.copies * comb(ctx.d, t.ext_power)
    return tuple(vec)


@dataclass(frozen=True)
class KMatrix:
    """Integer change-of-basis matrix between two window generator bases.

    Rows are indexed by the source window basis, columns by the target one:
    row i expands the shift image of source generator i. Always unimodular.
    """

    ctx: Context
    from_k: int
    to_k: int
    entries: tuple[tuple[int, ...], ...]

    def row_basis(self) -> list[GeneratorLabel]:
        return enumerate_window(self.ctx, self.from_k)

    def col_basis(self) -> list[GeneratorLabel]:
        return enumerate_window(self.ctx, self.to_k)

    def __matmul__(self, other: "KMatrix") -> "KMatrix":
        if self.ctx != other.ctx or self.to_k != other.from_k:
            raise ShapeError("K-matrices do not compose")
        return KMatrix(
            self.ctx, self.from_k, other.to_k, _mat_mul(self.entries, other.entries)
        )

    def determinant(self) -> int:
        return int_determinant(self.entries)

    def is_identity(self) -> bool:
        n = len(self.entries)
        return all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(n)
            for j in range(n)
        )


def _mat_mul(a, b) -> tuple[tuple[int, ...], ...]:
    n, mid, m = len(a), len(b), len(b[0]) if b else 0
    assert all(len(row) == mid for row in a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(mid)) for j in range(m))
        for i in range(n)
    )


def int_determinant(rows) -> int:
    """Exact integer determinant by the Bareiss fraction-free elimination."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def k_matrix(ctx: Context, from_k: int, to_k: int) -> KMatrix:
    """K-class matrix of the window shift, composed from unit steps."""
    if from_k == to_k:
        n = len(enumerate_window(ctx, from_k))
        entries = tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        )
        return KMatrix(ctx, from_k, to_k, entries)
    step = -1 if to_k < from_k else 1
    current = from_k
    entries = None
    while current != to_k:
        nxt = current + step
        b_from = enumerate_window(ctx, current)
        b_to = enumerate_window(ctx, nxt)
        unit = tuple(
            k_class(ctx, _unit_step(ctx, g, current, nxt), b_to) for g in b_from
        )
        entries = unit if entries is None else _mat_mul(entries, unit)
        current = nxt
    return KMatrix(ctx, from_k, to_k, entries)


def cotwist_shift_amount(ctx: Context) -> int:
    """Homological shift relating the downward inverse shift to the cotwist."""
    return 2 * (ctx.d - ctx.r) - 1
