from fractions import Fraction as F

import pytest

from conftest import interval, triangle
from wkstab import (
    Convention,
    FutakiNotVanishing,
    Polynomial,
    crease_family,
    default_base_point,
    extremal_affine,
    probe,
    projective_bundle,
    stability_weight,
)
from wkstab.probe import _offset_grid, _primitive_directions


def rank_one(p=1, c=15, convention=Convention.CANONICAL):
    return projective_bundle([[p]], [(3, -6)], [c], t=1, convention=convention)


def keys(family):
    return {(cr.h.gradient, cr.h.constant) for cr in family}


def test_interval_family_r1_is_exactly_four_creases():
    fam = crease_family(interval(), (F(0),), 1)
    assert keys(fam) == {
        ((F(1),), F(0)),
        ((F(-1),), F(0)),
        ((F(1),), F(-1, 2)),
        ((F(-1),), F(-1, 2)),
    }
    # x - 1 and x + 1 vanish only at the endpoints: both pieces must be
    # full-dimensional, so they are dropped
    assert ((F(1),), F(-1)) not in keys(fam)
    assert ((F(-1),), F(-1)) not in keys(fam)


def test_primitive_directions_half_lattice():
    assert _primitive_directions(2, 1) == [(0, 1), (1, -1), (1, 0), (1, 1)]
    dirs = _primitive_directions(2, 2)
    assert (2, 4) not in dirs  # not primitive
    assert (2, 1) in dirs and (1, 2) in dirs
    assert all(next(c for c in d if c) > 0 for d in dirs)


def test_offset_grid_subdivides_to_vertices():
    grid = _offset_grid(interval(), 1)
    assert set(grid) == {(F(-1),), (F(-1, 2),), (F(0),), (F(1, 2),), (F(1),)}


def test_family_requires_interior_base_point():
    with pytest.raises(ValueError):
        crease_family(interval(), (F(1),), 1)
    with pytest.raises(ValueError):
        crease_family(interval(), (F(0),), 0)


def test_family_is_deterministic():
    a = crease_family(triangle(), (F(0), F(0)), 2)
    b = crease_family(triangle(), (F(0), F(0)), 2)
    assert [(c.h.gradient, c.h.constant) for c in a] == [
        (c.h.gradient, c.h.constant) for c in b
    ]


def test_df_value_matches_direct_recompute():
    fib = projective_bundle([[1, 2]], [(3, 18)], [12], t=1)
    w = stability_weight(fib)
    fam = crease_family(fib.fiber, default_base_point(fib.fiber), 1)
    assert fam
    for crease in fam:
        assert crease.df_value(fib.v, w) == crease.df_value_direct(fib.v, w)


def test_probe_on_certified_instance_finds_nothing():
    fib = rank_one()
    w = stability_weight(fib)
    fam = crease_family(fib.fiber, default_base_point(fib.fiber), 2)
    report = probe(fib.fiber, fib.v, w, fam)
    assert report.n_creases == len(fam)
    assert report.min_ratio is not None and report.min_ratio > 0
    assert not report.found_destabilizer
    assert report.destabilizer is None


def test_probe_on_refuted_instance_witness_reverifies():
    fib = rank_one(c=F(11, 10))
    w = stability_weight(fib)
    fam = crease_family(fib.fiber, default_base_point(fib.fiber), 3)
    report = probe(fib.fiber, fib.v, w, fam)
    assert report.found_destabilizer
    destab = report.destabilizer
    value = destab.df_value(fib.v, w)
    assert value < 0
    # the witness re-verifies through the independent integration path
    assert destab.df_value_direct(fib.v, w) == value
    assert report.min_ratio == value / destab.l1_norm()


def test_probe_min_over_superset_is_no_larger():
    fib = rank_one()
    w = stability_weight(fib)
    x0 = default_base_point(fib.fiber)
    small = crease_family(fib.fiber, x0, 1)
    big = small + crease_family(fib.fiber, x0, 2)
    lo = probe(fib.fiber, fib.v, w, small).min_ratio
    hi = probe(fib.fiber, fib.v, w, big).min_ratio
    assert hi <= lo


def test_probe_empty_family():
    P = interval()
    report = probe(P, Polynomial.constant(1, 1), Polynomial.constant(1, 2), [])
    assert report.min_ratio is None
    assert report.argmin is None
    assert not report.found_destabilizer
    assert report.n_creases == 0


def test_probe_checks_futaki_character():
    P = interval()
    v = Polynomial.constant(1, 1)
    bad_w = Polynomial.constant(1, 5)  # F does not vanish on affine functions
    fam = crease_family(P, (F(0),), 1)
    with pytest.raises(FutakiNotVanishing):
        probe(P, v, bad_w, fam)
    report = probe(P, v, bad_w, fam, verify_futaki=False)
    assert report.n_creases == len(fam)


def test_legacy_weights_probe_without_futaki_check():
    fib = rank_one(convention=Convention.LEGACY)
    sol = extremal_affine(fib)
    w = stability_weight(fib, sol.l_ext)
    fam = crease_family(fib.fiber, default_base_point(fib.fiber), 1)
    with pytest.raises(FutakiNotVanishing):
        probe(fib.fiber, fib.v, w, fam)
    report = probe(fib.fiber, fib.v, w, fam, verify_futaki=False)
    assert report.min_ratio is not None
