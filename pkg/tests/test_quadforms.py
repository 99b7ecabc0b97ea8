"""Reduced forms, class numbers, and Hurwitz values against brute force."""

from fractions import Fraction

import pytest

from qident.quadforms import (BadDiscriminantResidue, NotPositiveDefinite,
                              QuadForm, class_number_h, enumerate_reduced,
                              enumerate_reduced_bruteforce, hurwitz_H,
                              is_reduced, verify_hurwitz_doubling)


def test_is_reduced_examples():
    assert is_reduced(QuadForm(1, 1, 1))
    assert not is_reduced(QuadForm(2, -2, 3))
    assert is_reduced(QuadForm(3, -2, 5))


def test_is_reduced_requires_positive_definite():
    with pytest.raises(NotPositiveDefinite):
        is_reduced(QuadForm(1, 5, 1))
    with pytest.raises(NotPositiveDefinite):
        is_reduced(QuadForm(-1, 0, -1))


def test_enumerate_examples():
    assert enumerate_reduced(-3) == [QuadForm(1, 1, 1)]
    assert enumerate_reduced(-20) == [QuadForm(1, 0, 5), QuadForm(2, 2, 3)]
    assert enumerate_reduced(-36) == [QuadForm(1, 0, 9), QuadForm(2, 2, 5),
                                      QuadForm(3, 0, 3)]


def test_enumerate_rejects_bad_discriminants():
    for D in (0, 4, -2, -5, -10):
        with pytest.raises(BadDiscriminantResidue):
            enumerate_reduced(D)


def test_enumeration_invariants():
    for D in range(-3, -250, -1):
        if D % 4 not in (0, 1):
            continue
        forms = enumerate_reduced(D)
        assert len(set(forms)) == len(forms)
        assert forms == sorted(forms)
        for f in forms:
            assert is_reduced(f) and f.discriminant == D


def test_oracle_equivalence_to_200():
    for D in range(-3, -201, -1):
        if D % 4 in (0, 1):
            assert enumerate_reduced(D) == enumerate_reduced_bruteforce(D), D


def test_class_numbers():
    assert class_number_h(-3) == 1
    assert class_number_h(-20) == 2
    assert class_number_h(-12) == 1  # (2,2,2) is imprimitive


def test_hurwitz_values():
    assert hurwitz_H(0) == Fraction(-1, 12)
    assert hurwitz_H(1) == 0 and hurwitz_H(2) == 0
    assert hurwitz_H(3) == Fraction(1, 3)
    assert hurwitz_H(4) == Fraction(1, 2)
    assert hurwitz_H(20) == 2
    assert hurwitz_H(36) == Fraction(5, 2)


def test_hurwitz_vanishes_on_1_2_mod_4():
    for n in range(1, 300):
        if n % 4 in (1, 2):
            assert hurwitz_H(n) == 0


def test_hurwitz_value_lattice():
    # every value is 0, -1/12, or a positive multiple of 1/6
    for n in range(0, 300):
        h = hurwitz_H(n)
        if n == 0:
            assert h == Fraction(-1, 12)
        elif h:
            assert h > 0 and (6 * h).denominator == 1


def test_weighted_forms_only_change_weighted_counts():
    for n in range(3, 200):
        if n % 4 in (1, 2):
            continue
        forms = enumerate_reduced(-n)
        weighted = [f for f in forms
                    if (f.b == 0 and f.a == f.c) or f.a == f.b == f.c]
        assert (hurwitz_H(n) == len(forms)) == (not weighted)


def test_doubling_examples_and_sweep():
    assert hurwitz_H(12) == 4 * hurwitz_H(3)
    assert hurwitz_H(28) == 2 * hurwitz_H(7)
    assert verify_hurwitz_doubling(600).passed
