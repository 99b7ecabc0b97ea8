"""Triple classification, the six maps per case, and preimage bookkeeping."""

import pytest

from qident import counting as C
from qident.bijections import (ALL_EQUAL, CaseMismatch, NotASolution, Triple,
                               case4_triple_category, case_of, classify_form,
                               classify_triple, invert_map, map_triple,
                               solution_triples, verify_case)
from qident.quadforms import QuadForm, enumerate_reduced


def test_classify_examples():
    assert classify_triple(Triple(2, 1, 1, 5, "shifted")) == 3
    assert classify_triple(Triple(1, 1, 3, 11, "shifted")) == 1
    assert classify_triple(Triple(5, 1, 1, 11, "shifted")) == 3
    assert classify_triple(Triple(1, 1, 1, 3, "shifted")) == ALL_EQUAL


def test_classify_rejects_non_solutions():
    with pytest.raises(NotASolution):
        classify_triple(Triple(1, 1, 1, 10, "shifted"))


def test_map_examples():
    assert map_triple(Triple(2, 1, 1, 5, "shifted")) == QuadForm(2, 2, 3)
    assert map_triple(Triple(1, 2, 1, 14, "open")) == QuadForm(3, -2, 5)
    for tr in (Triple(1, 1, 3, 11, "shifted"), Triple(1, 3, 1, 11, "shifted"),
               Triple(5, 1, 1, 11, "shifted")):
        assert map_triple(tr) == QuadForm(1, 1, 3)
    assert map_triple(Triple(1, 1, 1, 3, "shifted")) == QuadForm(1, 1, 1)


def test_all_equal_image_has_right_discriminant():
    # n = 3k^2 instances: the all-equal triple maps onto (k, k, k)
    for n, k in ((3, 1), (27, 3), (75, 5), (147, 7)):
        tr = Triple(k, (k + 1) // 2, (k + 1) // 2, n, "shifted")
        assert classify_triple(tr) == ALL_EQUAL
        f = map_triple(tr)
        assert f == QuadForm(k, k, k) and f.discriminant == -n


def test_case_dispatch():
    assert case_of(14, 1) == "1"
    assert case_of(5, 2) == "2"
    assert case_of(11, 2) == "3a"
    assert case_of(11, 1) == "3b"
    assert case_of(7, 4) == "4a"
    assert case_of(7, 3) == "4b"
    with pytest.raises(CaseMismatch):
        case_of(8, 1)


def test_shape_mismatch_is_error():
    with pytest.raises(CaseMismatch):
        solution_triples(8)


def test_classify_form_examples():
    assert classify_form(QuadForm(1, 0, 14), "1", 14) == 7
    assert classify_form(QuadForm(3, 2, 5), "1", 14) == 1
    assert classify_form(QuadForm(3, -2, 5), "1", 14) == 6
    assert classify_form(QuadForm(2, 2, 6), "3a", 11) == 7
    assert classify_form(QuadForm(3, 0, 3), "2", 9) == 7


def test_classify_form_wrong_discriminant():
    with pytest.raises(CaseMismatch):
        classify_form(QuadForm(1, 0, 5), "1", 14)


def test_every_form_classifies():
    # exhaustiveness of the category lists over real discriminants
    for n in range(1, 400):
        if n % 4 == 0:
            continue
        case = "1" if n % 4 == 2 else ("2" if n % 4 == 1 else "3a")
        for f in enumerate_reduced(-4 * n):
            assert 1 <= classify_form(f, case, n) <= 8


def test_case4_categories_at_7():
    sizes = {}
    for tr in solution_triples(7):
        cat = case4_triple_category(tr)
        sizes[cat] = sizes.get(cat, 0) + 1
    assert sizes == {2: 1, 3: 1, 4: 1}


def test_preimage_multiplicity_at_11():
    images = {}
    for tr in solution_triples(11):
        if tr.r % 2:
            images.setdefault(map_triple(tr), 0)
            images[map_triple(tr)] += 1
    assert images == {QuadForm(1, 1, 3): 3}


def test_map_invert_roundtrip_sweep():
    for n in range(1, 300):
        if n % 4 == 0:
            continue
        for tr in solution_triples(n):
            cat = classify_triple(tr)
            if cat == ALL_EQUAL:
                continue
            case = case_of(n, tr.r)
            back = invert_map(case, cat, map_triple(tr))
            assert back == (tr.r, tr.s, tr.t), (n, tr, case, cat)


def test_verify_case_examples():
    for n in (7, 9, 3, 5, 14, 11, 23, 27, 49):
        report = verify_case(n)
        assert report.passed, (n, report.failures)


def test_verify_case_sweep():
    for n in range(1, 260):
        if n % 4 == 0:
            continue
        assert verify_case(n).passed, n


def test_square_n_case2_weight():
    # n = 9 exercises the weight-1/2 form (3,0,3) of discriminant -36
    report = verify_case(9)
    assert report.passed
    assert len(solution_triples(9)) == 1
