import pytest

from knotkit import (
    Diagram,
    UNKNOT,
    canonical_code,
    emit_pd,
    mirror,
    parse_pd,
    torus_knot,
    validate,
)
from knotkit.errors import (
    MultiComponentError,
    NonPlanarError,
    PairingError,
    PDSyntaxError,
    StructureError,
)

TREFOIL = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"


def test_empty_code_is_unknot():
    d = parse_pd("PD[]")
    assert d.n == 0
    assert emit_pd(d) == "PD[]"
    assert canonical_code(d) == "PD[]"


def test_parse_trefoil():
    d = parse_pd(TREFOIL)
    assert d.n == 3
    validate(d)
    # each label appears twice and the traversal closes one loop
    labels = [u for t in d.crossings for u in t]
    assert sorted(labels) == sorted(list(range(1, 7)) * 2)


def test_parse_is_whitespace_insensitive_and_accepts_brackets():
    d1 = parse_pd(" PD[ X(1,4,2,5), X(3,6,4,1) ,X(5,2,6,3) ] ")
    d2 = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")
    assert canonical_code(d1) == canonical_code(d2) == canonical_code(parse_pd(TREFOIL))


@pytest.mark.parametrize("bad", [
    "PD", "PD[", "X(1,2,3,4)", "PD[X(1,2,3)]", "PD[X(1,2,3,4,5)]",
    "PD[X(1,2,3,4)X(1,2,3,4)]", "PD[X(0,1,1,2)]", "PD[Y(1,2,3,4)]",
    "PD[X(1,2,3,4),]",
])
def test_syntax_errors(bad):
    with pytest.raises(PDSyntaxError):
        parse_pd(bad)


def test_pairing_error():
    # labels 2,3,5,6 appear once
    with pytest.raises(PairingError):
        parse_pd("PD[X(1,4,2,5),X(3,6,4,1)]")


def test_multi_component_rejected():
    # two unknot components crossing twice
    with pytest.raises(MultiComponentError):
        parse_pd("PD[X(1,3,2,4),X(3,1,4,2)]")


def test_inconsistent_orientation_rejected():
    # reverse one under-strand of the trefoil: label pairing survives but the
    # under-in convention breaks
    with pytest.raises(StructureError):
        parse_pd("PD[X(2,5,1,4),X(3,6,4,1),X(5,2,6,3)]")


def test_nonplanar_rejected():
    # take the valid 2-crossing unknot and swap one tuple's cyclic order;
    # the rotation system then closes on a torus (2 faces), not the sphere
    good = parse_pd("PD[X(1,3,2,4),X(2,3,1,4)]")
    assert good.n == 2
    t = list(good.crossings)
    a, b, c, d = t[0]
    bad = emit_pd(Diagram((( (a, d, c, b), ) + tuple(t[1:]))))
    with pytest.raises(NonPlanarError):
        parse_pd(bad)


def test_roundtrip_canonical_stability(small_corpus):
    for d in small_corpus:
        assert canonical_code(parse_pd(emit_pd(d))) == canonical_code(d)
        assert canonical_code(parse_pd(canonical_code(d))) == canonical_code(d)


def test_canonical_invariant_under_cyclic_relabeling():
    for base in (torus_knot(3), torus_knot(5), torus_knot(7)):
        m = base.arc_count
        for k in (1, 3, m - 1):
            shifted = Diagram(
                tuple(tuple((u - 1 + k) % m + 1 for u in t) for t in base.crossings)
            )
            validate(shifted)
            assert canonical_code(shifted) == canonical_code(base)


def test_canonical_invariant_under_orientation_reversal():
    for base in (torus_knot(3), torus_knot(5)):
        m = base.arc_count
        # reversed traversal: tuples rotate by two, labels run backwards
        rev = Diagram(
            tuple(
                (
                    (1 - t[2]) % m + 1,
                    (1 - t[3]) % m + 1,
                    (1 - t[0]) % m + 1,
                    (1 - t[1]) % m + 1,
                )
                for t in base.crossings
            )
        )
        validate(rev)
        assert canonical_code(rev) == canonical_code(base)


def test_trefoil_and_mirror_have_distinct_codes():
    t3 = torus_knot(3)
    assert canonical_code(t3) != canonical_code(mirror(t3))


def test_atlas_trefoil_is_the_mirror_of_the_positive_generator():
    assert canonical_code(parse_pd(TREFOIL)) == canonical_code(mirror(torus_knot(3)))


def test_emitted_torus_labels_are_sequential():
    d = torus_knot(7)
    labels = sorted({u for t in d.crossings for u in t})
    assert labels == list(range(1, 15))
    assert emit_pd(d).startswith("PD[X(")
