"""Bipartite multigraphs stored as dense multiplicity matrices.

The on-disk text format ("BMG") is line oriented:

    # comment lines and blank lines are ignored
    bmg <n_u> <n_v>
    e <u> <v> <mult>

The ``bmg`` header must be the first non-comment line and appear exactly
once.  Vertices are 1-indexed in files and 0-indexed everywhere in code.
Repeated ``e`` lines for the same pair sum their multiplicities.  The
serializer is canonical: header first, then one ``e`` line per nonzero
entry in row-major order, single spaces, trailing newline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

# Multiplicities are kept within signed 64-bit range; the parser rejects
# anything larger, including sums of repeated lines.
MAX_MULTIPLICITY = 2**63 - 1


class BmgFormatError(ValueError):
    """Malformed BMG text; ``line`` is the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class BipartiteMultigraph:
    """Immutable bipartite multigraph on parts U (rows) and V (columns).

    ``mult[u][v]`` is the number of parallel edges between the u-th
    U-vertex and the v-th V-vertex.  Instances are hashable and safe to
    share between threads.
    """

    n_u: int
    n_v: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n_u < 0 or self.n_v < 0:
            raise ValueError("part sizes must be nonnegative")
        if len(self.mult) != self.n_u:
            raise ValueError("multiplicity matrix has wrong number of rows")
        for row in self.mult:
            if len(row) != self.n_v:
                raise ValueError("multiplicity matrix has ragged rows")
            for m in row:
                if not isinstance(m, int) or m < 0:
                    raise ValueError("multiplicities must be nonnegative integers")
                if m > MAX_MULTIPLICITY:
                    raise ValueError("multiplicity exceeds 64-bit range")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], n_v: int | None = None) -> "BipartiteMultigraph":
        """Build a graph from any iterable of rows, normalizing to tuples."""
        mult = tuple(tuple(int(m) for m in row) for row in rows)
        if n_v is None:
            n_v = len(mult[0]) if mult else 0
        return cls(len(mult), n_v, mult)

    # -- structure queries ------------------------------------------------

    def degree_u(self, u: int) -> int:
        """Total degree (with multiplicity) of the u-th U-vertex."""
        if not 0 <= u < self.n_u:
            raise IndexError(f"U-index {u} out of range")
        return sum(self.mult[u])

    def degree_v(self, v: int) -> int:
        """Total degree (with multiplicity) of the v-th V-vertex."""
        if not 0 <= v < self.n_v:
            raise IndexError(f"V-index {v} out of range")
        return sum(row[v] for row in self.mult)

    def regularity(self) -> int | None:
        """The common degree q >= 1 if the graph is q-regular, else None."""
        if self.n_u == 0 or self.n_v == 0:
            return None
        q = sum(self.mult[0])
        if q < 1:
            return None
        for u in range(self.n_u):
            if sum(self.mult[u]) != q:
                return None
        for v in range(self.n_v):
            if sum(row[v] for row in self.mult) != q:
                return None
        return q

    def neighbors_u(self, u: int) -> tuple[int, ...]:
        """Distinct V-neighbors of u, in increasing order."""
        return tuple(v for v in range(self.n_v) if self.mult[u][v] > 0)

    def neighbors_v(self, v: int) -> tuple[int, ...]:
        """Distinct U-neighbors of v, in increasing order."""
        return tuple(u for u in range(self.n_u) if self.mult[u][v] > 0)

    def is_connected(self) -> bool:
        """Connectivity of the support over the vertex set U + V.

        The empty graph and single-vertex graphs count as connected.
        """
        total = self.n_u + self.n_v
        if total <= 1:
            return True
        # BFS over U + V; U-vertex u is node u, V-vertex v is node n_u + v.
        seen = [False] * total
        stack = [0]
        seen[0] = True
        visited = 1
        while stack:
            node = stack.pop()
            if node < self.n_u:
                nexts = (self.n_u + v for v in self.neighbors_u(node))
            else:
                nexts = iter(self.neighbors_v(node - self.n_u))
            for other in nexts:
                if not seen[other]:
                    seen[other] = True
                    visited += 1
                    stack.append(other)
        return visited == total

    def is_simple(self) -> bool:
        return all(m <= 1 for row in self.mult for m in row)

    def max_multiplicity(self) -> int:
        return max((m for row in self.mult for m in row), default=0)

    def total_multiplicity(self) -> int:
        return sum(sum(row) for row in self.mult)

    # -- serialization ----------------------------------------------------

    def to_bmg(self) -> str:
        """Canonical BMG text (round-trips exactly through parse_bmg)."""
        lines = [f"bmg {self.n_u} {self.n_v}"]
        for u in range(self.n_u):
            for v in range(self.n_v):
                if self.mult[u][v] > 0:
                    lines.append(f"e {u + 1} {v + 1} {self.mult[u][v]}")
        return "\n".join(lines) + "\n"


def parse_bmg(text: str) -> BipartiteMultigraph:
    """Parse BMG text; raise BmgFormatError with a line number on bad input."""
    n_u = n_v = None
    rows: list[list[int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "bmg":
            if n_u is not None:
                raise BmgFormatError(line_no, "duplicate header")
            if len(tokens) != 3:
                raise BmgFormatError(line_no, "header must be 'bmg <n_u> <n_v>'")
            try:
                n_u, n_v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise BmgFormatError(line_no, "header sizes must be integers") from None
            if n_u < 0 or n_v < 0:
                raise BmgFormatError(line_no, "part sizes must be nonnegative")
            rows = [[0] * n_v for _ in range(n_u)]
        elif tokens[0] == "e":
            if n_u is None:
                raise BmgFormatError(line_no, "edge line before header")
            if len(tokens) != 4:
                raise BmgFormatError(line_no, "edge line must be 'e <u> <v> <mult>'")
            try:
                u, v, m = int(tokens[1]), int(tokens[2]), int(tokens[3])
            except ValueError:
                raise BmgFormatError(line_no, "edge fields must be integers") from None
            if not 1 <= u <= n_u:
                raise BmgFormatError(line_no, "U-index out of range")
            if not 1 <= v <= n_v:
                raise BmgFormatError(line_no, "V-index out of range")
            if m < 0:
                raise BmgFormatError(line_no, "negative multiplicity")
            if m > MAX_MULTIPLICITY or rows[u - 1][v - 1] + m > MAX_MULTIPLICITY:
                raise BmgFormatError(line_no, "multiplicity exceeds 64-bit range")
            rows[u - 1][v - 1] += m
        else:
            raise BmgFormatError(line_no, f"unknown directive {tokens[0]!r}")
    if n_u is None:
        raise BmgFormatError(1, "missing 'bmg' header")
    return BipartiteMultigraph.from_rows(rows, n_v=n_v)
