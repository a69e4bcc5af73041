from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from symalg import (
    DenseTensor,
    GroupAlgebraElement as G,
    Tableau,
    TableauVerdict,
    admissibility_check,
    all_tableaux,
    antisymmetrizer_e_a,
    apply,
    classify_frame,
    full_symmetrizer_f,
    h_component,
    hs_negative_check,
    exclusion_idempotent,
    multiply,
    normalized_idempotent,
    standard_tableau_theorem_check,
    star,
    symmetrizer_e_s,
)
from symalg.classify import (
    ANNIHILATES,
    NEITHER,
    REPRODUCES,
    classify_tableaux,
    compare_with_appendix,
    frame_for,
    group_verdicts,
    load_appendix,
    parse_tableau_listing,
)

ZR = G(3, {(1, 2, 3): Fraction(1, 2), (3, 2, 1): Fraction(-1, 2)})


def as_sets(verdicts):
    return {k: set(v) for k, v in group_verdicts(verdicts).items()}


def test_r2_example_sets():
    groups = as_sets(classify_frame(h_component(2, signed=True), (2, 1)))
    assert groups[REPRODUCES] == {Tableau([[1, 3], [2]]), Tableau([[2, 3], [1]])}
    assert groups[ANNIHILATES] == {Tableau([[1, 2], [3]]), Tableau([[2, 1], [3]])}
    assert groups[NEITHER] == {Tableau([[3, 1], [2]]), Tableau([[3, 2], [1]])}


@pytest.mark.parametrize("r,counts", [(3, (6, 12, 6)), (4, (24, 72, 24))])
def test_counts(r, counts):
    verdicts = classify_frame(h_component(r, signed=True), frame_for(r, "ha"))
    groups = group_verdicts(verdicts)
    assert tuple(len(groups[s]) for s in (REPRODUCES, ANNIHILATES, NEITHER)) == counts
    assert [v.tableau for v in verdicts] == all_tableaux(frame_for(r, "ha"))


@pytest.mark.parametrize("r", [2, 3])
def test_fourier_method_agrees_with_direct(r):
    for against in ("ha", "hs"):
        h = h_component(r, signed=(against == "ha"))
        shape = frame_for(r, against)
        assert classify_frame(h, shape, "fourier") == classify_frame(h, shape, "direct")


def test_classify_rejections():
    with pytest.raises(ValueError):
        classify_frame(G(3, {(1, 2, 3): 2}), (2, 1))
    with pytest.raises(ValueError):
        classify_frame(h_component(2), (2, 2))
    with pytest.raises(ValueError):
        classify_frame(h_component(2), (2, 1), method="fast")
    with pytest.raises(ValueError):
        frame_for(2, "hx")
    with pytest.raises(ValueError):
        classify_tableaux(h_component(2), [Tableau([[1, 2]])])


def test_standard_theorem_small():
    assert standard_tableau_theorem_check(2)
    assert standard_tableau_theorem_check(3)


def test_hs_negative_small():
    assert hs_negative_check(2) == {"no_reproducer": True, "no_annihilator": True}
    assert hs_negative_check(3) == {"no_reproducer": True, "no_annihilator": True}


def test_admissibility_products():
    f = exclusion_idempotent()
    prod_s = multiply(f, h_component(2))
    assert prod_s == G(3, {
        (1, 2, 3): Fraction(1, 4), (2, 1, 3): Fraction(1, 4),
        (2, 3, 1): Fraction(-1, 4), (3, 2, 1): Fraction(-1, 4),
    })
    assert multiply(ZR, symmetrizer_e_s(2)) == prod_s
    prod_a = multiply(f, h_component(2, signed=True))
    assert prod_a == multiply(ZR, antisymmetrizer_e_a(2)) - full_symmetrizer_f(2, signed=True)
    assert admissibility_check(h_component(2))
    assert admissibility_check(h_component(2, signed=True))
    assert not admissibility_check(f)
    with pytest.raises(ValueError):
        admissibility_check(h_component(3))


def test_reproduction_is_symmetric_for_primitive_idempotents():
    pool = [normalized_idempotent(t) for t in all_tableaux((2, 1))]
    pool += [h_component(2), h_component(2, signed=True), exclusion_idempotent()]
    for e, f in product(pool, repeat=2):
        assert (multiply(e, f) == e) == (multiply(f, e) == f)


@pytest.mark.parametrize("r,d", [(2, 3), (3, 4)])
def test_tensor_route_agrees(r, d):
    h = h_component(r, signed=True)
    rng = np.random.default_rng(r)
    U = apply(star(h), DenseTensor.random(r + 1, d, rng))
    tableaux = all_tableaux(frame_for(r, "ha"))
    sample = [tableaux[int(k)] for k in rng.choice(len(tableaux), min(8, len(tableaux)), replace=False)]
    for v in classify_tableaux(h, sample):
        out = apply(star(normalized_idempotent(v.tableau)), U)
        assert (out == U) == (v.status == REPRODUCES)
        assert out.is_zero() == (v.status == ANNIHILATES)


def test_parse_tableau_listing():
    lines = [
        "  {1, 4}, {2, 4}",
        "  {2}     {1}",
        "  {3}     {3}",
        "",
        "  {3, 4}",
        "  {1}",
        "  {2}",
    ]
    assert parse_tableau_listing(lines) == [
        Tableau([[1, 4], [2], [3]]),
        Tableau([[2, 4], [1], [3]]),
        Tableau([[3, 4], [1], [2]]),
    ]


def test_reference_tables_load():
    tables = load_appendix()
    counts = {k: len(v) for k, v in tables.items()}
    assert counts == {
        (2, "reproduce"): 2, (2, "annihilate"): 2,
        (3, "reproduce"): 6, (3, "annihilate"): 12,
        (4, "reproduce"): 24, (4, "annihilate"): 72,
    }
    for (r, _), ts in tables.items():
        assert len(set(ts)) == len(ts)
        assert all(t.frame == frame_for(r, "ha") for t in ts)


def test_compare_with_appendix_r2():
    assert all(c.matches for c in compare_with_appendix(2))
    with pytest.raises(ValueError):
        compare_with_appendix(5)


def test_verdict_json():
    v = classify_frame(h_component(2, signed=True), (2, 1))[0]
    assert TableauVerdict.from_json(v.to_json()) == v
    with pytest.raises(ValueError):
        TableauVerdict.from_json({"tableau": [[1, 2], [3]], "status": "maybe", "standard": True})


def test_hs_scan_r5_has_no_reproducer():
    report = hs_negative_check(5)
    assert report["no_reproducer"]
    assert report["no_annihilator"]
