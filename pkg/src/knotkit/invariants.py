"""Diagram invariants: Kauffman bracket, Jones polynomial, signature.

Two independent bracket routes are kept side by side.  ``bracket_oracle``
is the literal state sum over all 2^n smoothings; ``bracket_fast`` is a
recursive smoothing evaluator with greedy loop/kink/bigon simplification and
memoization on a label-independent canonical form of the intermediate
shadows.  They must agree bit-exactly on every diagram.

The signature is computed from the Goeritz matrix of the white checkerboard
surface with the Gordon-Litherland correction term, using exact rational
arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import Diagram, _face_orbits, arc_ends, faces, sign, writhe
from .errors import (
    DegenerateError,
    LimitError,
    NonKnotExponentError,
    SizeError,
    StructureError,
)
from .poly import Laurent

# loop value delta = -A^2 - A^-2
_DELTA = Laurent({2: -1, -2: -1})
_ONE = Laurent.one()

ORACLE_SIZE_GUARD = 24
FAST_STATE_GUARD = 5_000_000


# ---------------------------------------------------------------------------
# brute-force state sum
# ---------------------------------------------------------------------------

def _oracle_counts(crossings, lo: int, hi: int) -> dict[tuple[int, int], int]:
    """Tally states lo..hi-1 by (A-exponent, loop count).

    Loops are counted with a union-find over arcs: every self-union closes
    one circle, and after all 2n unions every class is closed, so the
    collision count is exactly the number of loops of the state.
    """
    n = len(crossings)
    arcs = 2 * n
    cr = [tuple(x - 1 for x in t) for t in crossings]
    counts: dict[tuple[int, int], int] = {}
    base = list(range(arcs))
    parent = base[:]
    for state in range(lo, hi):
        parent[:] = base
        loops = 0
        for i in range(n):
            a, b, c, d = cr[i]
            if (state >> i) & 1:  # B: join (a,d) and (b,c)
                pairs = ((a, d), (b, c))
            else:  # A: join (a,b) and (c,d)
                pairs = ((a, b), (c, d))
            for x, y in pairs:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x == y:
                    loops += 1
                else:
                    parent[x] = y
        key = (n - 2 * state.bit_count(), loops)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _counts_to_poly(counts: dict[tuple[int, int], int]) -> Laurent:
    max_loops = max(l for _, l in counts)
    deltas = [_ONE]
    for _ in range(max_loops - 1):
        deltas.append(deltas[-1].mul(_DELTA))
    out = Laurent.zero()
    for (a_exp, loops), cnt in sorted(counts.items()):
        out = out.add(Laurent.monomial(cnt, a_exp).mul(deltas[loops - 1]))
    return out


def bracket_oracle(d: Diagram, jobs: int = 1) -> Laurent:
    """Kauffman bracket by full enumeration of the 2^n smoothing states.

    <unknot> = 1; each state contributes A^(#A - #B) * delta^(loops-1).
    With jobs > 1 the state range is split into contiguous chunks that are
    reduced in fixed order, so the result is identical for any job count.
    """
    n = d.n
    if n > ORACLE_SIZE_GUARD:
        raise SizeError(f"state sum over 2^{n} states refused (guard {ORACLE_SIZE_GUARD})")
    if n == 0:
        return _ONE
    total = 1 << n
    if jobs <= 1 or total < 4096:
        counts = _oracle_counts(d.crossings, 0, total)
    else:
        from concurrent.futures import ProcessPoolExecutor

        jobs = min(jobs, 8)
        step = -(-total // jobs)
        spans = [(i, min(i + step, total)) for i in range(0, total, step)]
        counts = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futs = [pool.submit(_oracle_counts, d.crossings, lo, hi) for lo, hi in spans]
            for fut in futs:  # fixed reduction order
                for key, cnt in fut.result().items():
                    counts[key] = counts.get(key, 0) + cnt
    return _counts_to_poly(counts)


# ---------------------------------------------------------------------------
# fast bracket: recursive smoothing over unoriented shadows
# ---------------------------------------------------------------------------
#
# A shadow is a list of 4-tuples of edge ids with the under-strand on the
# even positions; free circles are factored into the coefficient as soon as
# they appear, so the empty shadow never occurs with no pending circle.

class _Merger:
    """Union-find over edge ids that counts circle closures."""

    def __init__(self):
        self.parent: dict[int, int] = {}
        self.circles = 0

    def find(self, x: int) -> int:
        p = self.parent
        r = p.get(x, x)
        while r != p.get(r, r):
            r = p[r]
        while x != r:
            p[x], x = r, p.get(x, x)
        return r

    def unite(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            self.circles += 1
        else:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def _rewrite(tuples, merger: _Merger, skip: set[int]):
    return [
        tuple(merger.find(x) for x in t)
        for ci, t in enumerate(tuples)
        if ci not in skip
    ]


def _shadow_components(tuples):
    if len(tuples) <= 1:
        return [tuples]
    adj: dict[int, set[int]] = {ci: set() for ci in range(len(tuples))}
    where: dict[int, int] = {}
    for ci, t in enumerate(tuples):
        for x in t:
            if x in where and where[x] != ci:
                adj[ci].add(where[x])
                adj[where[x]].add(ci)
            where[x] = ci
    seen: set[int] = set()
    comps = []
    for start in range(len(tuples)):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            c = stack.pop()
            comp.append(c)
            for nb in adj[c]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        comps.append([tuples[c] for c in sorted(comp)])
    return comps


def _canon_component(tuples) -> tuple:
    """Lexicographically least relabeling of one connected shadow.

    Candidates walk the strands from every possible starting dart; crossings
    are emitted in first-visit order with a local frame anchored at the
    entry slot, plus a parity bit recording whether that slot carries the
    under-strand.  The result is independent of the incoming edge labels.
    """
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, t in enumerate(tuples):
        for p, x in enumerate(t):
            occ.setdefault(x, []).append((ci, p))

    def other(slot, label):
        s = occ[label]
        return s[1] if s[0] == slot else s[0]

    nc = len(tuples)
    best = None
    for sc in range(nc):
        for ss in range(4):
            elab: dict[int, int] = {}
            enext = 1
            frame: dict[int, int] = {}
            order: list[int] = []
            visited: set[tuple[int, int]] = set()
            start = (sc, ss)
            cur = start
            while True:
                ci, p = cur
                if ci not in frame:
                    frame[ci] = p
                    order.append(ci)
                e = tuples[ci][p]
                if e not in elab:
                    elab[e] = enext
                    enext += 1
                visited.add(cur)
                q = (p + 2) % 4
                f = tuples[ci][q]
                if f not in elab:
                    elab[f] = enext
                    enext += 1
                visited.add((ci, q))
                cur = other((ci, q), f)
                if cur in visited:
                    # strand closed; open the next one deterministically
                    nxt = None
                    for cj in order:
                        for k in range(4):
                            slot = (cj, (frame[cj] + k) % 4)
                            if slot not in visited:
                                nxt = slot
                                break
                        if nxt:
                            break
                    if nxt is None:
                        break
                    cur = nxt
            cand = tuple(
                (frame[ci] % 2,) + tuple(elab[tuples[ci][(frame[ci] + k) % 4]] for k in range(4))
                for ci in order
            )
            if best is None or cand < best:
                best = cand
    return best


def _shadow_key(tuples) -> tuple:
    return tuple(sorted(_canon_component(c) for c in _shadow_components(tuples)))


_KINK_FACTOR = {0: Laurent({3: -1}), 1: Laurent({-3: -1})}


def _simplify_shadow(tuples):
    """Factor out kinks and removable bigons; returns (tuples, coeff, circles)."""
    coeff = _ONE
    circles = 0
    changed = True
    while changed and tuples:
        changed = False
        orbits = _face_orbits(tuples)
        occ: dict[int, list[tuple[int, int]]] = {}
        for ci, t in enumerate(tuples):
            for p, x in enumerate(t):
                occ.setdefault(x, []).append((ci, p))
        for orb in orbits:
            if len(orb) == 1:
                ci, p = orb[0]
                t = tuples[ci]
                coeff = coeff.mul(_KINK_FACTOR[p % 2])
                m = _Merger()
                m.unite(t[(p + 2) % 4], t[(p + 3) % 4])
                tuples = _rewrite(tuples, m, {ci})
                circles += m.circles
                changed = True
                break
            if len(orb) == 2:
                (x_ci, x_p), (y_ci, y_p) = orb
                if x_ci == y_ci:
                    continue
                e2 = tuples[x_ci][(x_p + 1) % 4]
                e1 = tuples[x_ci][x_p]
                if e1 == e2:
                    continue
                if ((x_p + 1) % 2) != (y_p % 2):
                    continue  # clasp, not a Reidemeister-2 pair
                tx, ty = tuples[x_ci], tuples[y_ci]
                m = _Merger()
                m.unite(tx[(x_p + 2) % 4], e1)
                m.unite(e1, ty[(y_p + 3) % 4])
                m.unite(tx[(x_p + 3) % 4], e2)
                m.unite(e2, ty[(y_p + 2) % 4])
                tuples = _rewrite(tuples, m, {x_ci, y_ci})
                circles += m.circles
                changed = True
                break
    return tuples, coeff, circles


def _bracket_rec(tuples, memo, stats) -> Laurent:
    """Sum of A^(+-) * delta^(loops-1) over the states of this shadow."""
    stats[0] += 1
    if stats[0] > FAST_STATE_GUARD:
        raise LimitError("fast bracket exceeded its state guard")
    tuples, coeff, circles = _simplify_shadow(tuples)
    if not tuples:
        if circles < 1:
            raise StructureError("smoothing bookkeeping lost every loop")
        return coeff.mul(_delta_power(circles - 1))
    key = _shadow_key(tuples)
    sub = memo.get(key)
    if sub is None:
        stats[1] += 1
        t = tuples[0]
        acc = Laurent.zero()
        for bit, pairs in ((0, ((t[0], t[1]), (t[2], t[3]))), (1, ((t[0], t[3]), (t[1], t[2])))):
            m = _Merger()
            for x, y in pairs:
                m.unite(x, y)
            rest = _rewrite(tuples, m, {0})
            term = Laurent.monomial(1, 1 - 2 * bit).mul(_delta_power(m.circles))
            if rest:
                term = term.mul(_bracket_rec(rest, memo, stats))
            else:
                if m.circles < 1:
                    raise StructureError("terminal state with no loop")
                term = Laurent.monomial(1, 1 - 2 * bit).mul(_delta_power(m.circles - 1))
            acc = acc.add(term)
        memo[key] = acc
        sub = acc
    return coeff.mul(_delta_power(circles)).mul(sub)


_DELTA_POWERS = [_ONE]


def _delta_power(k: int) -> Laurent:
    while len(_DELTA_POWERS) <= k:
        _DELTA_POWERS.append(_DELTA_POWERS[-1].mul(_DELTA))
    return _DELTA_POWERS[k]


def bracket_fast(d: Diagram) -> Laurent:
    """Same value as bracket_oracle, via recursive smoothing with memoization."""
    return _bracket_fast_stats(d)[0]


def _bracket_fast_stats(d: Diagram) -> tuple[Laurent, int]:
    """(bracket, number of states evaluated) - the counter feeds tests."""
    if d.n == 0:
        return _ONE, 0
    stats = [0, 0]  # [recursion entries, branch expansions]
    memo: dict[tuple, Laurent] = {}
    val = _bracket_rec(list(d.crossings), memo, stats)
    return val, stats[0]


# ---------------------------------------------------------------------------
# Jones polynomial and chirality
# ---------------------------------------------------------------------------

def jones(d: Diagram, oracle: bool = False, jobs: int = 1) -> Laurent:
    """Jones polynomial V in t: (-A)^(-3w) <D> with A = t^(-1/4).

    The substitution scales exponents by -1 and then shrinks them by 4; a
    remainder there means the input was not a knot diagram.
    """
    br = bracket_oracle(d, jobs=jobs) if oracle else bracket_fast(d)
    w = writhe(d)
    norm = br.mul(Laurent.monomial(-1 if w % 2 else 1, -3 * w))
    quarters = norm.scale_exponents(-1)
    out = {}
    for e, c in quarters.terms():
        if e % 4 != 0:
            raise NonKnotExponentError(f"Jones exponent {e} not divisible by 4")
        out[e // 4] = c
    return Laurent(out)


SAME_JONES = "SameJones"
MIRROR_JONES = "MirrorJones"
UNRELATED = "Unrelated"


def detect_mirror_pair(d1: Diagram, d2: Diagram) -> str:
    """Compare Jones polynomials of two diagrams.

    MirrorJones certifies the diagrams are *not* the same knot (a chiral
    knot and its mirror); SameJones is inconclusive as identity.
    """
    v1, v2 = jones(d1), jones(d2)
    if v1 == v2:
        return SAME_JONES
    if v1 == v2.invert_var():
        return MIRROR_JONES
    return UNRELATED


def chiral_by_jones(d: Diagram) -> bool:
    """True certifies chirality: V(t) != V(1/t)."""
    v = jones(d)
    return v != v.invert_var()


# ---------------------------------------------------------------------------
# Goeritz matrix, Gordon-Litherland correction, signature
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GoeritzData:
    """Goeritz matrix over white faces minus the anchor, mu, and sigma.

    matrix is None only for the 0-crossing diagram, where sigma = 0 without
    any matrix.
    """
    matrix: tuple[tuple[int, ...], ...] | None
    mu: int
    sigma: int


def _checkerboard(d: Diagram):
    """(faces, colors, anchor_face) with the anchor painted white.

    The anchor is the face on the right of arc 1 (the orbit of arc 1's
    incoming dart); on the sphere any anchor gives the same signature.
    """
    fs = faces(d)
    slot_face: dict[tuple[int, int], int] = {}
    for fi, orb in enumerate(fs):
        for slot in orb:
            slot_face[slot] = fi
    head, _ = arc_ends(d)
    anchor = slot_face[head[1]]
    colors: dict[int, bool] = {anchor: True}  # True = white
    stack = [anchor]
    adj: dict[int, list[int]] = {fi: [] for fi in range(len(fs))}
    _, tail = arc_ends(d)
    for u in range(1, d.arc_count + 1):
        f1 = slot_face[head[u]]
        f2 = slot_face[tail[u]]
        adj[f1].append(f2)
        adj[f2].append(f1)
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if g not in colors:
                colors[g] = not colors[f]
                stack.append(g)
            elif colors[g] == colors[f]:
                raise StructureError("checkerboard coloring failed")
    return fs, slot_face, colors, anchor


def goeritz_matrix(d: Diagram):
    """Full white-face Goeritz data: (matrix rows, white ids, anchor, etas).

    Raises DegenerateError on the 0-crossing diagram.
    """
    if d.n == 0:
        raise DegenerateError("0-crossing diagram has no Goeritz matrix")
    fs, slot_face, colors, anchor = _checkerboard(d)
    whites = [fi for fi in range(len(fs)) if colors[fi]]
    windex = {fi: k for k, fi in enumerate(whites)}
    m = len(whites)
    g = [[0] * m for _ in range(m)]
    etas = []
    for ci in range(d.n):
        corner_face = [slot_face[(ci, p)] for p in range(4)]
        white_corners = [p for p in range(4) if colors[corner_face[p]]]
        if white_corners not in ([0, 2], [1, 3]):
            raise StructureError("crossing corners not checkerboard-alternating")
        eta = -1 if white_corners == [1, 3] else 1
        etas.append(eta)
        wi = windex[corner_face[white_corners[0]]]
        wj = windex[corner_face[white_corners[1]]]
        if wi != wj:
            g[wi][wj] -= eta
            g[wj][wi] -= eta
    for i in range(m):
        g[i][i] = -sum(g[i][j] for j in range(m) if j != i)
    return g, whites, windex[anchor], etas


def _exact_signature(rows) -> int:
    """Signature of a symmetric integer matrix by rational congruence."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    active = list(range(n))
    sig = 0
    while active:
        piv = next((r for r in active if a[r][r] != 0), None)
        if piv is None:
            pair = None
            for r in active:
                for s in active:
                    if s != r and a[r][s] != 0:
                        pair = (r, s)
                        break
                if pair:
                    break
            if pair is None:
                break  # zero block contributes nothing
            r, s = pair
            for t in active:
                a[r][t] += a[s][t]
            for t in active:
                a[t][r] += a[t][s]
            piv = r
        p = a[piv][piv]
        sig += 1 if p > 0 else -1
        active.remove(piv)
        prow = {s: a[piv][s] for s in active}
        for r in active:
            f = a[r][piv] / p
            if f:
                for s in active:
                    a[r][s] -= f * prow[s]
            a[r][piv] = Fraction(0)
            a[piv][r] = Fraction(0)
    return sig


def signature(d: Diagram) -> GoeritzData:
    """Knot signature via the corrected Goeritz form.

    A crossing is type II exactly when its Goeritz sign equals its
    orientation sign; mu sums the Goeritz signs of the type II crossings and
    sigma = sig(G) - mu.  The convention is pinned by the Reidemeister-move
    invariance property tests, which fail loudly if either sign is wrong.
    """
    if d.n == 0:
        return GoeritzData(None, 0, 0)
    g, whites, anchor_idx, etas = goeritz_matrix(d)
    keep = [k for k in range(len(whites)) if k != anchor_idx]
    reduced = [[g[i][j] for j in keep] for i in keep]
    mu = sum(etas[ci] for ci in range(d.n) if etas[ci] == sign(d, ci))
    sig = _exact_signature(reduced)
    return GoeritzData(tuple(tuple(row) for row in reduced), mu, sig - mu)


def unknotting_lower_bound(d: Diagram) -> int:
    """|sigma| / 2, the classical signature bound on the unknotting number."""
    return abs(signature(d).sigma) // 2
