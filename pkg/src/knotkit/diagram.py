"""Combinatorial knot diagrams as PD-style crossing lists.

A diagram with n crossings stores n tuples (a, b, c, d) of arc labels, listed
counterclockwise from the incoming under-strand a; the under-strand runs
a -> c.  Arc labels are kept normalized: arcs are numbered 1..2n along the
knot's orientation, so arc i is always succeeded by i+1 (arc 2n by arc 1) and
c is the successor of a in every stored tuple.  The 0-crossing unknot is the
empty crossing list.

The rotation system implied by the tuples must embed in the sphere: face
traversal has to produce exactly n+2 faces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ArcError,
    MultiComponentError,
    NonPlanarError,
    PairingError,
    ParityError,
    StructureError,
)

Crossing = tuple[int, int, int, int]
Slot = tuple[int, int]  # (crossing index, tuple position 0..3)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    def succ(self, arc: int) -> int:
        return arc % self.arc_count + 1

    def pred(self, arc: int) -> int:
        return (arc - 2) % self.arc_count + 1

    def __repr__(self):
        return f"Diagram({list(self.crossings)!r})"


UNKNOT = Diagram(())


# ---------------------------------------------------------------------------
# occurrence bookkeeping and face traversal (shared with raw tuple lists)
# ---------------------------------------------------------------------------

def _occurrences(tuples) -> dict[int, list[Slot]]:
    occ: dict[int, list[Slot]] = {}
    for ci, t in enumerate(tuples):
        for p, u in enumerate(t):
            occ.setdefault(u, []).append((ci, p))
    return occ


def _check_pairing(occ) -> None:
    for u, slots in occ.items():
        if len(slots) != 2:
            raise PairingError(f"arc label {u} appears {len(slots)} times (expected 2)")


def _face_orbits(tuples) -> list[tuple[Slot, ...]]:
    """Orbit decomposition of the face-successor permutation on arrival darts.

    A dart is identified with the slot it arrives at; the face boundary
    continues along the edge at the counterclockwise-next slot.  Each slot
    lies in exactly one orbit as an arrival and borders one more face as a
    departure, so every arc-end touches two faces.
    """
    occ = _occurrences(tuples)

    def other(ci: int, p: int) -> Slot:
        s = occ[tuples[ci][p]]
        return s[1] if s[0] == (ci, p) else s[0]

    seen: set[Slot] = set()
    orbits: list[tuple[Slot, ...]] = []
    for ci in range(len(tuples)):
        for p in range(4):
            if (ci, p) in seen:
                continue
            orb = []
            cur = (ci, p)
            while cur not in seen:
                seen.add(cur)
                orb.append(cur)
                cur = other(cur[0], (cur[1] + 1) % 4)
            orbits.append(tuple(orb))
    return orbits


def _renumber(tuples, strict: bool) -> tuple[Crossing, ...]:
    """Walk the underlying closed curve and relabel arcs 1..2n along it.

    In strict mode every under-strand must already be entered at tuple
    position 0 (the PD input convention).  In lenient mode a crossing whose
    under-strand is met at position 2 is rotated by two, which internal
    constructions rely on.
    """
    n = len(tuples)
    if n == 0:
        return ()
    occ = _occurrences(tuples)
    _check_pairing(occ)

    def other(slot: Slot, label: int) -> Slot:
        s = occ[label]
        return s[1] if s[0] == slot else s[0]

    rot: list[int | None] = [None] * n
    newlab: dict[int, int] = {}
    start = (0, 0)
    ci, p = start
    newlab[tuples[0][0]] = 1
    count = 0
    while True:
        count += 1
        if p % 2 == 0:  # under-strand entry fixes the tuple rotation
            if rot[ci] is not None:
                raise MultiComponentError("under-strand of a crossing traversed twice")
            if p == 2:
                if strict:
                    raise StructureError(
                        f"crossing {ci} lists its under-strand against the orientation"
                    )
                rot[ci] = 2
            else:
                rot[ci] = 0
        q = (p + 2) % 4
        out = tuples[ci][q]
        if out not in newlab:
            newlab[out] = count + 1
        nxt = other((ci, q), out)
        if nxt == start:
            break
        ci, p = nxt
    if count != 2 * n:
        raise MultiComponentError(
            f"traversal closed after {count} of {2 * n} passages (extra components)"
        )

    result = []
    for i, t in enumerate(tuples):
        r = rot[i]
        if r is None:
            raise MultiComponentError(f"crossing {i} never reached by traversal")
        result.append(tuple(newlab[t[(k + r) % 4]] for k in range(4)))
    return tuple(result)


def _build(tuples, strict: bool = False) -> Diagram:
    """Renumber raw tuples, check planarity, and wrap them in a Diagram."""
    normal = _renumber(tuples, strict)
    nf = len(_face_orbits(normal))
    want = len(normal) + 2
    if normal and nf != want:
        raise NonPlanarError(f"rotation system has {nf} faces, needs {want}")
    return Diagram(normal)


# ---------------------------------------------------------------------------
# validation and basic queries
# ---------------------------------------------------------------------------

def validate(d: Diagram) -> None:
    """Raise PairingError / MultiComponentError / NonPlanarError as needed."""
    n = d.n
    if n == 0:
        return
    occ = _occurrences(d.crossings)
    if set(occ) != set(range(1, 2 * n + 1)):
        raise PairingError("arc labels are not exactly 1..2n")
    _check_pairing(occ)

    transitions = set()
    for ci, t in enumerate(d.crossings):
        a, b, c, dd = t
        if d.succ(a) != c:
            raise MultiComponentError(
                f"crossing {ci}: under-strand exit {c} is not the successor of {a}"
            )
        transitions.add((a, c))
        if n == 1:
            transitions.add((c, a))
        elif d.succ(b) == dd:
            transitions.add((b, dd))
        elif d.succ(dd) == b:
            transitions.add((dd, b))
        else:
            raise MultiComponentError(
                f"crossing {ci}: over-strand {b},{dd} breaks the arc sequence"
            )
    if transitions != {(u, d.succ(u)) for u in range(1, 2 * n + 1)}:
        raise MultiComponentError("arc transitions do not close a single loop")

    nf = len(_face_orbits(d.crossings))
    if nf != n + 2:
        raise NonPlanarError(f"rotation system has {nf} faces, needs {n + 2}")


def faces(d: Diagram) -> tuple[tuple[Slot, ...], ...]:
    """Face boundaries as cyclic tuples of arc-ends, in deterministic order.

    The 0-crossing diagram has two faces with empty boundary lists.
    """
    if d.n == 0:
        return ((), ())
    return tuple(_face_orbits(d.crossings))


def over_in_position(d: Diagram, i: int) -> int:
    """Tuple position (1 or 3) where the over-strand enters crossing i."""
    a, b, c, dd = d.crossings[i]
    if d.n == 1:
        return 1 if b == c else 3
    if d.succ(b) == dd:
        return 1
    if d.succ(dd) == b:
        return 3
    raise StructureError(f"crossing {i} has no consistent over-strand direction")


def sign(d: Diagram, i: int) -> int:
    """+1 when the over-strand runs d -> b, else -1.

    Calibrated so the positive 2-braid closure has writhe +n.
    """
    if not 0 <= i < d.n:
        raise IndexError(f"crossing index {i} out of range")
    return 1 if over_in_position(d, i) == 3 else -1


def writhe(d: Diagram) -> int:
    return sum(sign(d, i) for i in range(d.n))


def arc_ends(d: Diagram) -> tuple[dict[int, Slot], dict[int, Slot]]:
    """(head, tail) slots per arc: where the arc enters / leaves a crossing."""
    head: dict[int, Slot] = {}
    tail: dict[int, Slot] = {}
    for ci, t in enumerate(d.crossings):
        head[t[0]] = (ci, 0)
        tail[t[2]] = (ci, 2)
        oip = over_in_position(d, ci)
        head[t[oip]] = (ci, oip)
        oop = (oip + 2) % 4
        tail[t[oop]] = (ci, oop)
    return head, tail


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------

def mirror(d: Diagram) -> Diagram:
    """Swap over/under at every crossing (same rotation system)."""
    out = []
    for i, t in enumerate(d.crossings):
        k = over_in_position(d, i)
        out.append(t[k:] + t[:k])
    m = Diagram(tuple(out))
    validate(m)
    return m


def crossing_change(d: Diagram, i: int) -> Diagram:
    """Swap over/under at crossing i only; labels and planarity unchanged."""
    if not 0 <= i < d.n:
        raise IndexError(f"crossing index {i} out of range")
    k = over_in_position(d, i)
    t = d.crossings[i]
    out = list(d.crossings)
    out[i] = t[k:] + t[:k]
    m = Diagram(tuple(out))
    validate(m)
    return m


def connected_sum(d1: Diagram, a1: int, d2: Diagram, a2: int) -> Diagram:
    """Cut arcs a1 and a2 and splice the knots respecting orientation."""
    for d, a in ((d1, a1), (d2, a2)):
        legal = {1} if d.n == 0 else set(range(1, d.arc_count + 1))
        if a not in legal:
            raise ArcError(f"arc {a} is not a legal splice arc")
    if d1.n == 0:
        return d2
    if d2.n == 0:
        return d1

    m2 = d2.arc_count
    head1, tail1 = arc_ends(d1)
    head2, tail2 = arc_ends(d2)

    # d1 labels: arcs above a1 shift by 2*n2; a1's head end becomes the far
    # half of the cut arc.  d2 labels: walk starts right after a2.
    def f1(u: int, slot: Slot) -> int:
        if u < a1:
            return u
        if u > a1:
            return u + m2
        return a1 + m2 if slot == head1[a1] else a1

    def f2(v: int, slot: Slot) -> int:
        if v != a2:
            return a1 + ((v - a2 - 1) % m2) + 1
        return a1 if slot == head2[a2] else a1 + m2

    out = []
    for ci, t in enumerate(d1.crossings):
        out.append(tuple(f1(u, (ci, p)) for p, u in enumerate(t)))
    for ci, t in enumerate(d2.crossings):
        out.append(tuple(f2(u, (ci, p)) for p, u in enumerate(t)))
    s = Diagram(tuple(out))
    validate(s)
    return s


def torus_knot(n: int) -> Diagram:
    """Standard n-crossing closed 2-braid diagram of T(2, n), all crossings +1.

    Crossings are stacked braid rows; the strand entering a row from the
    upper left always passes under, so rows alternate between carrying the
    low arc run (odd rows) and the high run (even rows).
    """
    if n < 1 or n % 2 == 0:
        raise ParityError(f"torus_knot needs an odd n >= 1, got {n}")
    m = 2 * n

    def w(x: int) -> int:
        return (x - 1) % m + 1

    raw = []
    for i in range(1, n + 1):
        if i % 2 == 1:
            raw.append((w(i), w(n + i + 1), w(i + 1), w(n + i)))
        else:
            raw.append((w(n + i), w(i + 1), w(n + i + 1), w(i)))
    return _build(raw, strict=True)
