import pytest

from knotkit import UNKNOT, mirror, scramble, torus_knot, validate


def scrambled_corpus(count, max_crossings=12, steps=12, seed0=0):
    """Deterministic pile of valid diagrams built by random Reidemeister moves."""
    bases = [UNKNOT, torus_knot(3), torus_knot(5), torus_knot(7), mirror(torus_knot(3))]
    out = []
    seed = seed0
    while len(out) < count:
        d = scramble(bases[seed % len(bases)], steps=steps,
                     max_crossings=max_crossings, seed=seed)
        validate(d)
        out.append(d)
        seed += 1
    return out


@pytest.fixture(scope="session")
def small_corpus():
    return scrambled_corpus(30, max_crossings=10, steps=10)
