"""Parsing, emission and canonicalization of PD diagram codes.

Grammar (whitespace-insensitive)::

    PD[]                                   the 0-crossing unknot
    PD[X(a,b,c,d),X(e,f,g,h),...]          positive integer arc labels

``X[...]`` brackets are accepted on input; output always uses ``X(...)``.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .diagram import Diagram, _build
from .errors import PDSyntaxError

_ENTRY = re.compile(r"X(?:\((\d+),(\d+),(\d+),(\d+)\)|\[(\d+),(\d+),(\d+),(\d+)\])")


def parse_pd(text: str) -> Diagram:
    """Parse a PD code, validate it, and renumber arcs along the orientation."""
    compact = "".join(text.split())
    if not compact.startswith("PD[") or not compact.endswith("]"):
        raise PDSyntaxError("code must look like PD[...]" )
    inner = compact[3:-1]
    if inner == "":
        return Diagram(())
    raw = []
    pos = 0
    while True:
        m = _ENTRY.match(inner, pos)
        if m is None:
            raise PDSyntaxError(f"bad crossing entry at offset {pos}: {inner[pos:pos+24]!r}")
        labels = tuple(int(g) for g in m.groups() if g is not None)
        if any(x <= 0 for x in labels):
            raise PDSyntaxError("arc labels must be positive integers")
        raw.append(labels)
        pos = m.end()
        if pos == len(inner):
            break
        if inner[pos] != ",":
            raise PDSyntaxError(f"expected ',' between crossings at offset {pos}")
        pos += 1
    return _build(raw, strict=True)


def emit_pd(d: Diagram) -> str:
    """Emit the stored tuples verbatim."""
    return _emit(d.crossings)


def _emit(tuples) -> str:
    return "PD[" + ",".join("X(%d,%d,%d,%d)" % t for t in tuples) + "]"


@lru_cache(maxsize=None)
def canonical_code(d: Diagram) -> str:
    """Deterministic label-free code: lexicographically least emitted text.

    Candidates are all 2*(2n) traversal relabelings (every starting arc in
    both orientations) with tuples rotated to put the under-strand entry
    first and sorted; only starts that place label 1 on an under-strand
    entry can win, which halves the enumeration.
    """
    m = d.arc_count
    if m == 0:
        return "PD[]"
    best = None
    for t0 in d.crossings:
        # forward: label 1 on this under-in arc
        start = t0[0]
        cand = sorted(
            tuple((u - start) % m + 1 for u in t) for t in d.crossings
        )
        text = _emit(cand)
        if best is None or text < best:
            best = text
        # reversed orientation: label 1 on this under-out arc (which becomes
        # an under-in once the tuple is rotated by two)
        start = t0[2]
        cand = sorted(
            (
                (start - t[2]) % m + 1,
                (start - t[3]) % m + 1,
                (start - t[0]) % m + 1,
                (start - t[1]) % m + 1,
            )
            for t in d.crossings
        )
        text = _emit(cand)
        if text < best:
            best = text
    return best


@lru_cache(maxsize=None)
def _parse_cached(text: str) -> Diagram:
    return parse_pd(text)


def canonical_instance(d: Diagram) -> Diagram:
    """The deterministic re-parse of canonical_code(d).

    Move sites refer to the labels of this instance, so any diagram with the
    same canonical code resolves them identically.
    """
    return _parse_cached(canonical_code(d))
