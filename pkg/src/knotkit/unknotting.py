"""Unknotting-number bounds: change-set search up, signature down.

The upper-bound search enumerates crossing-change sets in size-then-
lexicographic order and certifies each candidate diagram.  A candidate whose
Jones polynomial differs from 1 is skipped outright: certification could
never succeed on it, so the result is unchanged and the scan is cheap enough
to finish at desk scale.  Candidates that pass the Jones screen but miss
under the quick per-candidate budget are retried once with the caller's full
limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .certify import Certificate, SearchLimits, certify_unknot, replay
from .codec import canonical_code
from .diagram import Diagram, crossing_change
from .errors import DuplicateError
from .invariants import jones, unknotting_lower_bound
from .poly import Laurent

_ONE = Laurent.one()

QUICK_NODE_BUDGET = 100_000


def apply_changes(d: Diagram, changes) -> Diagram:
    """Change every crossing listed; order-independent, involutive."""
    seen = set()
    for i in changes:
        if i in seen:
            raise DuplicateError(f"crossing index {i} repeated in change set")
        seen.add(i)
        if not 0 <= i < d.n:
            raise IndexError(f"crossing index {i} out of range for {d.n} crossings")
    cur = d
    for i in sorted(seen):
        cur = crossing_change(cur, i)
    return cur


def unknotting_upper(
    d: Diagram, k: int, lim: SearchLimits | None = None
) -> tuple[tuple[int, ...], Certificate] | None:
    """First change set of size <= k whose result certifies as the unknot.

    Enumeration is by cardinality 0..k, lexicographic within each size, so a
    returned witness is reproducible.  None means Unknown.
    """
    if not 0 <= k <= max(d.n, 0):
        raise IndexError(f"change budget {k} out of range for {d.n} crossings")
    lim = lim or SearchLimits()
    quick = SearchLimits(
        max_crossings=lim.max_crossings,
        max_nodes=min(lim.max_nodes, QUICK_NODE_BUDGET),
        allow_r1up=lim.allow_r1up,
    )
    near_misses: list[tuple[tuple[int, ...], Diagram]] = []
    for size in range(k + 1):
        for combo in combinations(range(d.n), size):
            cand = apply_changes(d, combo)
            if jones(cand) != _ONE:
                continue  # certification cannot succeed on a knotted diagram
            cert = certify_unknot(cand, quick)
            if cert is not None:
                return combo, cert
            near_misses.append((combo, cand))
    if quick.max_nodes < lim.max_nodes:
        for combo, cand in near_misses:
            cert = certify_unknot(cand, lim)
            if cert is not None:
                return combo, cert
    return None


@dataclass(frozen=True)
class UnknottingReport:
    """Proven interval for the unknotting number of one diagram's knot."""
    code: str
    lower: int
    searched_to: int
    upper: tuple[tuple[int, ...], Certificate] | None

    @property
    def verdict(self) -> str:
        if self.upper is not None:
            return f"{self.lower} ≤ u ≤ {len(self.upper[0])}"
        return f"{self.lower} ≤ u (no witness with ≤ {self.searched_to} changes found)"

    def render(self) -> str:
        lines = [
            f"diagram: {self.code}",
            f"lower bound: {self.lower} (signature)",
        ]
        if self.upper is not None:
            changes, cert = self.upper
            lines.append(f"upper bound: {len(changes)} via changes {list(changes)}")
            lines.append(f"certificate moves: {len(cert.moves)}")
        else:
            lines.append(f"upper bound: unknown (searched sets of size ≤ {self.searched_to})")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)

    def as_dict(self) -> dict:
        out = {
            "diagram": self.code,
            "lower": self.lower,
            "searched_to": self.searched_to,
            "verdict": self.verdict,
        }
        if self.upper is not None:
            changes, cert = self.upper
            out["upper"] = len(changes)
            out["changes"] = list(changes)
            out["certificate"] = cert.to_text()
        else:
            out["upper"] = None
        return out


def report(d: Diagram, k: int, lim: SearchLimits | None = None) -> UnknottingReport:
    """Combine the signature lower bound with the change-set search."""
    lower = unknotting_lower_bound(d)
    upper = unknotting_upper(d, k, lim)
    if upper is not None:
        combo, cert = upper
        if not replay(apply_changes(d, combo), cert):
            raise AssertionError("unknotting witness failed to replay")
    return UnknottingReport(canonical_code(d), lower, k, upper)
