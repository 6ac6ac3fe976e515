"""Reidemeister moves detected and applied through face inspection.

Move sites are expressed in the labels of the *canonical instance* of a
diagram (the deterministic re-parse of its canonical code), so a move is
meaningful for any diagram with the same canonical code and for nothing
else.  Faces are numbered in the deterministic order produced by
diagram.faces on that instance.

Serialized forms, one move per line inside certificates::

    R1Down@f3(c2)
    R2Down@f1(c0,c4)
    R3@f2(p1)                 slide the side between orbit darts 1 and 2
    R2Up@f0(p2,p5,over)       push dart 2's arc across dart 5's arc
    R2Up@f0(self,under)       the 0-crossing circle across itself
    R1Up@a3(left,+)
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .codec import canonical_code, canonical_instance
from .diagram import Diagram, _build, arc_ends, faces
from .errors import StaleMoveError

R1DOWN = "R1Down"
R2DOWN = "R2Down"
R3 = "R3"
R1UP = "R1Up"
R2UP = "R2Up"
ALL_KINDS = (R1DOWN, R2DOWN, R3, R2UP, R1UP)
DOWN_KINDS = (R1DOWN, R2DOWN)

_DELTA_N = {R1DOWN: -1, R2DOWN: -2, R3: 0, R1UP: 1, R2UP: 2}


@dataclass(frozen=True)
class Move:
    kind: str
    site: tuple
    code: str  # canonical code of the diagram this move was enumerated on

    @property
    def crossing_delta(self) -> int:
        return _DELTA_N[self.kind]

    @property
    def text(self) -> str:
        k, s = self.kind, self.site
        if k == R1DOWN:
            return f"R1Down@f{s[0]}(c{s[1]})"
        if k == R2DOWN:
            return f"R2Down@f{s[0]}(c{s[1]},c{s[2]})"
        if k == R3:
            return f"R3@f{s[0]}(p{s[1]})"
        if k == R2UP:
            if s[1] == "self":
                return f"R2Up@f{s[0]}(self,{s[2]})"
            return f"R2Up@f{s[0]}(p{s[1]},p{s[2]},{s[3]})"
        if k == R1UP:
            return f"R1Up@a{s[0]}({s[1]},{s[2]})"
        raise ValueError(k)

    def __str__(self):
        return self.text


_MOVE_RES = (
    (R1DOWN, re.compile(r"R1Down@f(\d+)\(c(\d+)\)")),
    (R2DOWN, re.compile(r"R2Down@f(\d+)\(c(\d+),c(\d+)\)")),
    (R3, re.compile(r"R3@f(\d+)\(p(\d+)\)")),
    (R2UP, re.compile(r"R2Up@f(\d+)\(p(\d+),p(\d+),(over|under)\)")),
    (R2UP, re.compile(r"R2Up@f(\d+)\(self,(over|under)\)")),
    (R1UP, re.compile(r"R1Up@a(\d+)\((left|right),([+-])\)")),
)


def parse_move_text(text: str, code: str) -> Move:
    text = text.strip()
    for kind, rx in _MOVE_RES:
        m = rx.fullmatch(text)
        if not m:
            continue
        g = m.groups()
        if kind == R1DOWN:
            return Move(R1DOWN, (int(g[0]), int(g[1])), code)
        if kind == R2DOWN:
            return Move(R2DOWN, (int(g[0]), int(g[1]), int(g[2])), code)
        if kind == R3:
            return Move(R3, (int(g[0]), int(g[1])), code)
        if kind == R2UP and len(g) == 2:
            return Move(R2UP, (int(g[0]), "self", g[1]), code)
        if kind == R2UP:
            return Move(R2UP, (int(g[0]), int(g[1]), int(g[2]), g[3]), code)
        if kind == R1UP:
            return Move(R1UP, (int(g[0]), g[1], g[2]), code)
    raise StaleMoveError(f"unparseable move {text!r}")


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _bigon_removable(tuples, orb) -> bool:
    (x_ci, x_p), (y_ci, y_p) = orb
    if x_ci == y_ci:
        return False
    if tuples[x_ci][x_p] == tuples[x_ci][(x_p + 1) % 4]:
        return False
    # the strand between the crossings must be over (or under) at both
    return ((x_p + 1) % 2) == (y_p % 2)


def _triangle_slides(tuples, orb) -> list[int]:
    cs = {slot[0] for slot in orb}
    if len(cs) != 3:
        return []
    out = []
    for r in range(3):
        (xc, xp), (yc, yq) = orb[r], orb[(r + 1) % 3]
        if ((xp + 1) % 2) == (yq % 2):
            out.append(r)
    return out


def enumerate_moves(d: Diagram, kinds=None) -> list[Move]:
    """Complete deterministic list of applicable moves of the given kinds.

    Down-move enumeration is exhaustive: every monogon face yields its
    R1Down and every removable bigon its R2Down.  R2Up sites are ordered
    dart pairs on a common face; an arc is never pushed across itself except
    for the 0-crossing circle, whose self-push is the special ``self`` site.
    """
    wanted = set(ALL_KINDS if kinds is None else kinds)
    dc = canonical_instance(d)
    code = canonical_code(d)
    fs = faces(dc)
    tuples = dc.crossings
    out: list[Move] = []

    if R1DOWN in wanted:
        kinked: set[int] = set()
        for fi, orb in enumerate(fs):
            # a 1-crossing diagram bounds two monogons with the same kink;
            # one R1Down per crossing
            if len(orb) == 1 and orb[0][0] not in kinked:
                kinked.add(orb[0][0])
                out.append(Move(R1DOWN, (fi, orb[0][0]), code))
    if R2DOWN in wanted:
        for fi, orb in enumerate(fs):
            if len(orb) == 2 and _bigon_removable(tuples, orb):
                out.append(Move(R2DOWN, (fi, orb[0][0], orb[1][0]), code))
    if R3 in wanted:
        for fi, orb in enumerate(fs):
            if len(orb) == 3:
                for r in _triangle_slides(tuples, orb):
                    out.append(Move(R3, (fi, r), code))
    if R2UP in wanted:
        if dc.n == 0:
            for fi in (0, 1):
                for flag in ("over", "under"):
                    out.append(Move(R2UP, (fi, "self", flag), code))
        else:
            for fi, orb in enumerate(fs):
                k = len(orb)
                for i in range(k):
                    for j in range(k):
                        if i == j:
                            continue
                        xi, xp = orb[i]
                        yi, yp = orb[j]
                        if tuples[xi][xp] == tuples[yi][yp]:
                            continue
                        for flag in ("over", "under"):
                            out.append(Move(R2UP, (fi, i, j, flag), code))
    if R1UP in wanted:
        arcs = [1] if dc.n == 0 else range(1, dc.arc_count + 1)
        for u in arcs:
            for side in ("left", "right"):
                for sg in ("+", "-"):
                    out.append(Move(R1UP, (u, side, sg), code))
    return out


# ---------------------------------------------------------------------------
# application
# ---------------------------------------------------------------------------

class _Joiner:
    """Label union-find used when crossings are deleted."""

    def __init__(self):
        self.parent: dict[int, int] = {}
        self.circles = 0

    def find(self, x):
        p = self.parent
        r = p.get(x, x)
        while r != p.get(r, r):
            r = p[r]
        while x != r:
            p[x], x = r, p.get(x, x)
        return r

    def unite(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            self.circles += 1
        else:
            self.parent[max(rx, ry)] = min(rx, ry)


def _stale(msg: str) -> StaleMoveError:
    return StaleMoveError(msg)


def apply_move(d: Diagram, m: Move) -> Diagram:
    """Apply a move enumerated on (a diagram equal to) d.

    Raises StaleMoveError when the move's source code differs from d's
    canonical code or its site no longer matches.
    """
    if m.code != canonical_code(d):
        raise _stale("move belongs to a different diagram")
    dc = canonical_instance(d)
    fs = faces(dc)
    tuples = [list(t) for t in dc.crossings]

    try:
        if m.kind == R1DOWN:
            return _apply_r1down(dc, fs, m.site)
        if m.kind == R2DOWN:
            return _apply_r2down(dc, fs, m.site)
        if m.kind == R3:
            return _apply_r3(dc, fs, m.site)
        if m.kind == R2UP:
            return _apply_r2up(dc, fs, m.site)
        if m.kind == R1UP:
            return _apply_r1up(dc, m.site)
    except (IndexError, KeyError) as exc:
        raise _stale(f"site {m.text} does not exist on this diagram") from exc
    raise _stale(f"unknown move kind {m.kind}")


def _apply_r1down(dc: Diagram, fs, site) -> Diagram:
    fi, ci = site
    orb = fs[fi]
    if len(orb) != 1 or orb[0][0] != ci:
        raise _stale("R1Down site is not a monogon of this diagram")
    p = orb[0][1]
    t = dc.crossings[ci]
    j = _Joiner()
    j.unite(t[(p + 2) % 4], t[(p + 3) % 4])
    rest = [tuple(j.find(x) for x in tt) for k, tt in enumerate(dc.crossings) if k != ci]
    if not rest:
        return Diagram(())
    return _build(rest)


def _apply_r2down(dc: Diagram, fs, site) -> Diagram:
    fi, ci, cj = site
    orb = fs[fi]
    if len(orb) != 2 or (orb[0][0], orb[1][0]) != (ci, cj):
        raise _stale("R2Down site is not a bigon of this diagram")
    if not _bigon_removable(dc.crossings, orb):
        raise _stale("bigon is a clasp, not an R2 pair")
    (x_ci, x_p), (y_ci, y_p) = orb
    tx, ty = dc.crossings[x_ci], dc.crossings[y_ci]
    e1 = tx[x_p]
    e2 = tx[(x_p + 1) % 4]
    j = _Joiner()
    j.unite(tx[(x_p + 2) % 4], e1)
    j.unite(e1, ty[(y_p + 3) % 4])
    j.unite(tx[(x_p + 3) % 4], e2)
    j.unite(e2, ty[(y_p + 2) % 4])
    rest = [
        tuple(j.find(x) for x in tt)
        for k, tt in enumerate(dc.crossings)
        if k not in (x_ci, y_ci)
    ]
    if not rest:
        return Diagram(())
    return _build(rest)


def _apply_r3(dc: Diagram, fs, site) -> Diagram:
    fi, r = site
    orb = fs[fi]
    if len(orb) != 3 or r not in _triangle_slides(dc.crossings, orb):
        raise _stale("R3 site is not an admissible triangle slide")
    orb = orb[r:] + orb[:r]
    (xc, xp), (yc, yq), (zc, zr) = orb
    tx, ty, tz = dc.crossings[xc], dc.crossings[yc], dc.crossings[zc]
    e1 = tx[xp]
    e2 = tx[(xp + 1) % 4]
    e3 = ty[(yq + 1) % 4]
    a_x = tx[(xp + 2) % 4]
    b_x = tx[(xp + 3) % 4]
    b_y = ty[(yq + 2) % 4]
    c_y = ty[(yq + 3) % 4]
    c_z = tz[(zr + 2) % 4]
    a_z = tz[(zr + 3) % 4]
    fresh = 2 * dc.n
    e1n, e2n, e3n = fresh + 1, fresh + 2, fresh + 3

    new_z = list(tz)
    new_z[zr] = c_y
    new_z[(zr + 1) % 4] = a_x
    new_z[(zr + 2) % 4] = e3n
    new_z[(zr + 3) % 4] = e1n

    b_over = (yq % 2) == 1  # the slid strand passes over at both corners
    if b_over:
        new_x = (e1n, e2n, a_z, b_y)
        new_y = (e3n, b_x, c_z, e2n)
    else:
        new_x = (e2n, a_z, b_y, e1n)
        new_y = (b_x, c_z, e2n, e3n)

    raw = [tuple(new_z) if k == zc else tuple(t) for k, t in enumerate(dc.crossings) if k not in (xc, yc)]
    raw.append(new_x)
    raw.append(new_y)
    return _build(raw)


def _apply_r2up(dc: Diagram, fs, site) -> Diagram:
    if site[1] == "self":
        if dc.n != 0:
            raise _stale("self push is only defined on the 0-crossing diagram")
        flag = site[2]
        if flag == "over":
            raw = [(3, 4, 4, 1), (2, 2, 3, 1)]
        else:
            raw = [(4, 4, 1, 3), (1, 2, 2, 3)]
        return _build(raw)
    fi, i, j, flag = site
    orb = fs[fi]
    if i == j or i >= len(orb) or j >= len(orb):
        raise _stale("R2Up dart positions out of range")
    (xc, xp), (yc, yp) = orb[i], orb[j]
    x = dc.crossings[xc][xp]
    y = dc.crossings[yc][yp]
    if x == y:
        raise _stale("R2Up would push an arc across itself")
    # The orbit darts run clockwise around the face, so the pushed arc x is
    # walked with the face on its right; the finger leaves x's right flank,
    # its outbound lane crosses y at P and the return lane at Q.
    fresh = 2 * dc.n
    x2, x3, y2, y3 = fresh + 1, fresh + 2, fresh + 3, fresh + 4
    tuples = [list(t) for t in dc.crossings]
    tuples[xc][xp] = x3  # head end of x now belongs to the last segment
    tuples[yc][yp] = y3
    if flag == "over":
        p_cross = (y2, x, y3, x2)
        q_cross = (y, x3, y2, x2)
    else:
        p_cross = (x, y3, x2, y2)
        q_cross = (x2, y, x3, y2)
    raw = [tuple(t) for t in tuples] + [p_cross, q_cross]
    return _build(raw)


def _apply_r1up(dc: Diagram, site) -> Diagram:
    u, side, sg = site
    if dc.n == 0:
        if u != 1:
            raise _stale("the 0-crossing diagram only has arc 1")
        pattern = {
            ("right", "-"): (1, 2, 2, 1),
            ("left", "+"): (1, 1, 2, 2),
            ("right", "+"): (2, 2, 1, 1),
            ("left", "-"): (2, 1, 1, 2),
        }[(side, sg)]
        return _build([pattern])
    if not 1 <= u <= dc.arc_count:
        raise _stale(f"arc {u} out of range")
    head, _ = arc_ends(dc)
    hc, hp = head[u]
    fresh = 2 * dc.n
    u2, loop = fresh + 1, fresh + 2
    tuples = [list(t) for t in dc.crossings]
    tuples[hc][hp] = u2
    kink = {
        ("right", "-"): (u, loop, loop, u2),
        ("left", "+"): (u, u2, loop, loop),
        ("right", "+"): (loop, loop, u2, u),
        ("left", "-"): (loop, u, u2, loop),
    }[(side, sg)]
    raw = [tuple(t) for t in tuples] + [kink]
    return _build(raw)


# ---------------------------------------------------------------------------
# scrambling (test-corpus generator)
# ---------------------------------------------------------------------------

def scramble(d: Diagram, steps: int, max_crossings: int, seed: int) -> Diagram:
    """Apply `steps` random moves without ever exceeding max_crossings."""
    rng = random.Random(seed)
    cur = d
    for _ in range(steps):
        options = [
            m for m in enumerate_moves(cur)
            if cur.n + m.crossing_delta <= max_crossings
        ]
        if not options:
            break
        cur = apply_move(cur, rng.choice(options))
    return cur
