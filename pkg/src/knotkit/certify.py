"""Unknot certification: bounded best-first search over Reidemeister moves.

A Certificate is a replayable text artifact: the canonical code of the
starting diagram followed by one serialized move per line.  Replaying the
moves must reach the 0-crossing diagram; anything else is treated as a
failed (hence worthless) certificate, so the search can never over-claim.

``certify_unknot`` returning None means Unknown - the search budget ran out
- and says nothing about knottedness.  ``prove_knotted`` is the one-sided
converse: a nontrivial Jones polynomial certifies a knot.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .codec import canonical_code, parse_pd
from .diagram import Diagram
from .errors import KnotError
from .invariants import jones
from .moves import (
    DOWN_KINDS,
    R1DOWN,
    R1UP,
    R2DOWN,
    R2UP,
    R3,
    Move,
    apply_move,
    enumerate_moves,
    parse_move_text,
)
from .poly import Laurent

_ONE = Laurent.one()


@dataclass(frozen=True)
class SearchLimits:
    """Budget for the certification search.

    max_crossings None means input size + 3.  max_nodes caps the number of
    distinct canonical codes admitted to the search.
    """
    max_crossings: int | None = None
    max_nodes: int = 1_000_000
    allow_r1up: bool = False

    def resolve_cap(self, n: int) -> int:
        cap = self.max_crossings if self.max_crossings is not None else n + 3
        if cap < n:
            raise ValueError(f"max_crossings {cap} below input crossing count {n}")
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be at least 1")
        return cap


DEFAULT_LIMITS = SearchLimits()


@dataclass(frozen=True)
class Certificate:
    """Start code plus the move lines that take it to the 0-crossing diagram."""
    start: str
    moves: tuple[str, ...] = field(default_factory=tuple)

    def to_text(self) -> str:
        lines = [f"start {self.start}"]
        lines.extend(self.moves)
        lines.append("end PD[]")
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "Certificate":
        start = None
        moves = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("start "):
                start = line[6:].strip()
            elif line == "end PD[]":
                break
            else:
                moves.append(line)
        if start is None:
            raise KnotError("certificate has no start line")
        return Certificate(start, tuple(moves))


def simplify_greedy(d: Diagram) -> Diagram:
    """Apply R1Down/R2Down until none applies (first listed move each round)."""
    cur = d
    while True:
        downs = enumerate_moves(cur, DOWN_KINDS)
        if not downs:
            return cur
        cur = apply_move(cur, downs[0])


def certify_unknot(d: Diagram, lim: SearchLimits | None = None) -> Certificate | None:
    """Best-first search for a move sequence reaching the 0-crossing diagram.

    Priority is (crossing count, insertion order); nodes are deduplicated by
    canonical code and children are materialized lazily when popped, since
    a move's crossing delta already determines the child's priority.
    Returns None (Unknown) when the budget is exhausted.
    """
    lim = lim or DEFAULT_LIMITS
    cap = lim.resolve_cap(d.n)
    start_code = canonical_code(d)
    if d.n == 0:
        return Certificate(start_code, ())

    kinds = (R1DOWN, R2DOWN, R3, R2UP) + ((R1UP,) if lim.allow_r1up else ())
    visited = {start_code}
    parents: dict[str, tuple[str | None, str | None]] = {start_code: (None, None)}
    instances = {start_code: d}
    heap: list[tuple[int, int, str, Move]] = []
    seq = 0

    def expand(code: str, diagram: Diagram) -> None:
        nonlocal seq
        for m in enumerate_moves(diagram, kinds):
            child_n = diagram.n + m.crossing_delta
            if child_n > cap:
                continue
            seq += 1
            heapq.heappush(heap, (child_n, seq, code, m))

    expand(start_code, d)
    while heap:
        child_n, _, pcode, move = heapq.heappop(heap)
        try:
            child = apply_move(instances[pcode], move)
        except KnotError:
            continue
        ccode = canonical_code(child)
        if ccode in visited:
            continue
        if len(visited) >= lim.max_nodes:
            return None
        visited.add(ccode)
        parents[ccode] = (pcode, move.text)
        if child.n == 0:
            lines = []
            cur = ccode
            while parents[cur][0] is not None:
                cur, text = parents[cur]
                lines.append(text)
            lines.reverse()
            return Certificate(start_code, tuple(lines))
        instances[ccode] = child
        expand(ccode, child)
    return None


def replay(start: Diagram, cert: Certificate) -> bool:
    """True iff the certificate applies move-by-move from start to PD[]."""
    try:
        if canonical_code(start) != cert.start:
            return False
        cur = parse_pd(cert.start)
        for line in cert.moves:
            move = parse_move_text(line, canonical_code(cur))
            cur = apply_move(cur, move)
        return cur.n == 0
    except KnotError:
        return False


def prove_knotted(d: Diagram) -> bool:
    """True certifies d is knotted (Jones differs from 1); False says nothing."""
    return jones(d) != _ONE
