"""Young diagrams, GL(r) weights, and canonically named window generators.

Values here are immutable and usable as dict keys; every operation is a pure
function, so everything is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass


class ShapeError(ValueError):
    """Raised when a partition, weight, or label violates a shape bound."""


def _normalized(parts) -> tuple[int, ...]:
    out = tuple(int(p) for p in parts)
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ShapeError(f"parts not weakly decreasing: {list(out)}")
    if out and out[-1] < 0:
        raise ShapeError(f"negative part in partition: {list(out)}")
    while out and out[-1] == 0:
        out = out[:-1]
    return out


@dataclass(frozen=True)
class Partition:
    """A Young diagram: weakly decreasing parts, trailing zeros stripped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", _normalized(self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def size(self) -> int:
        """Total number of boxes."""
        return sum(self.parts)

    def row(self, i: int) -> int:
        """Length of the i-th row, 1-indexed; zero beyond the diagram."""
        if i < 1:
            raise ShapeError("row index is 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def col(self, i: int) -> int:
        """Length of the i-th column, 1-indexed: the number of parts >= i."""
        if i < 1:
            raise ShapeError("column index is 1-based")
        return sum(1 for p in self.parts if p >= i)

    def conjugate(self) -> "Partition":
        """Transpose the diagram, exchanging rows and columns."""
        if not self.parts:
            return Partition()
        return Partition(tuple(self.col(i) for i in range(1, self.parts[0] + 1)))

    def fits_box(self, rows: int, cols: int) -> bool:
        """True iff there are at most `rows` parts, each at most `cols`."""
        if rows < 0 or cols < 0:
            raise ShapeError("box dimensions must be non-negative")
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def pad(self, n: int) -> tuple[int, ...]:
        """The parts as a length-n weight, zero-padded on the right."""
        if len(self.parts) > n:
            raise ShapeError(f"partition {list(self.parts)} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))


def check_weight(entries, length: int | None = None) -> tuple[int, ...]:
    """Validate a weakly decreasing integer weight and return it as a tuple."""
    w = tuple(int(x) for x in entries)
    for a, b in zip(w, w[1:]):
        if a < b:
            raise ShapeError(f"weight not weakly decreasing: {list(w)}")
    if length is not None and len(w) != length:
        raise ShapeError(f"weight {list(w)} should have length {length}")
    return w


def dual_weight(w) -> tuple[int, ...]:
    """Highest weight of the dual representation: negate and reverse."""
    return tuple(-x for x in reversed(tuple(w)))


def graded_lex_key(w):
    """Sort key ordering weights by total size, then lexicographically."""
    w = tuple(w)
    return (sum(w), w)


@dataclass(frozen=True)
class Context:
    """Global parameters: dim V = d and the tautological rank r, 0 <= r <= d.

    Derived data: window generators live in the r x (d-r) box, and staircase
    resolutions have d-r+1 steps.
    """

    d: int
    r: int

    def __post_init__(self):
        if self.d < 1:
            raise ShapeError(f"d must be a positive integer, got {self.d}")
        if not 0 <= self.r <= self.d:
            raise ShapeError(f"need 0 <= r <= d, got r={self.r}, d={self.d}")

    @property
    def box_rows(self) -> int:
        return self.r

    @property
    def box_cols(self) -> int:
        return self.d - self.r

    @property
    def staircase_length(self) -> int:
        """Number of staircase steps, d - r + 1."""
        return self.d - self.r + 1


@dataclass(frozen=True)
class GeneratorLabel:
    """Canonical name for the bundle S^v(delta) (x) det(S^v)^det_power.

    Canonical form pins the r-th entry of delta to zero, pushing the rest into
    det_power, so every bundle has exactly one name (see `canonicalize`).
    """

    delta: Partition = Partition()
    det_power: int = 0

    def weight(self, r: int) -> tuple[int, ...]:
        """Full highest weight on S^v: delta padded to length r plus det_power."""
        return tuple(p + self.det_power for p in self.delta.pad(r))


def canonicalize(w, det_power: int = 0) -> GeneratorLabel:
    """Fold the last weight entry into the determinant power.

    (w, m) and (w + c*(1,...,1), m - c) name the same bundle for every integer
    c; the canonical representative has last weight entry zero. Idempotent on
    its own output. For the empty weight (r = 0) the label is just ((), m).
    """
    w = check_weight(w)
    if not w:
        return GeneratorLabel(Partition(), det_power)
    shift = w[-1]
    return GeneratorLabel(Partition(tuple(x - shift for x in w)), det_power + shift)


def box_partitions(rows: int, cols: int) -> list[Partition]:
    """All partitions in a rows x cols box, in graded lexicographic order."""
    if rows < 0 or cols < 0:
        raise ShapeError("box dimensions must be non-negative")
    shapes: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], depth: int, maxpart: int):
        shapes.append(prefix)
        if depth == rows:
            return
        for p in range(1, maxpart + 1):
            grow(prefix + (p,), depth + 1, p)

    grow((), 0, cols)
    shapes.sort(key=graded_lex_key)
    return [Partition(s) for s in shapes]


def parse_int_tuple(text: str) -> tuple[int, ...]:
    """Parse comma-separated integers; an empty string is the empty tuple."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"cannot parse integer list from {text!r}") from exc
