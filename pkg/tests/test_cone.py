from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from vgit.catalog import region_from_tuples, tuples_of, wall_configuration
from vgit.cone_walls import (Membership, WallFamily, active_walls, ample_cone, enumerate_walls,
                             expected_wall_count, make_wall, membership, parse_wall_label,
                             wall_activity, wall_representative)
from vgit.weightspace import WeightVector


def test_membership_examples():
    cone = ample_cone(2, 3)
    assert cone.membership(WeightVector(1, (Q(1), Q(1)))) is Membership.INSIDE
    assert cone.membership(WeightVector(1, (Q(0), Q(1, 2)))) is Membership.BOUNDARY
    assert cone.membership(WeightVector(1, (Q(2), Q(1)))) is Membership.BOUNDARY
    assert cone.membership(WeightVector(1, (Q(3), Q(1)))) is Membership.OUTSIDE
    with pytest.raises(ValueError):
        cone.membership(WeightVector(1, (Q(1),)))
    with pytest.raises(ValueError):
        ample_cone(2, 2)


def test_n1_slice_is_the_unit_interval():
    cone = ample_cone(1, 3)
    for w, expect in [(Q(1, 2), Membership.INSIDE), (Q(0), Membership.BOUNDARY),
                      (Q(1), Membership.BOUNDARY), (Q(11, 10), Membership.OUTSIDE)]:
        assert cone.membership(WeightVector(1, (w,))) is expect


@given(st.integers(2, 5), st.fractions(min_value=Q(1, 10), max_value=10, max_denominator=10))
def test_cone_is_a_cone(n, c):
    cone = ample_cone(n, 3)
    wv = WeightVector(1, tuple(Q(1, n) for _ in range(n)))
    scaled = WeightVector(c, tuple(c * v for v in wv.w))
    assert cone.membership(wv) is cone.membership(scaled)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_wall_count(n):
    walls = enumerate_walls(n)
    assert len(walls) == expected_wall_count(n)
    assert len({w.label for w in walls}) == len(walls)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_labels_round_trip(n):
    for w in enumerate_walls(n):
        back = parse_wall_label(w.label, n)
        assert back.label == w.label and back.hyperplane == w.hyperplane


def test_bad_labels():
    for bad in ["W(A3,{1})", "W(X,{1})", "A2,{1}", "W(3A1,1)"]:
        with pytest.raises(ValueError):
            parse_wall_label(bad, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_representatives_lie_on_active_walls(n):
    cone = ample_cone(n, 3)
    for w in enumerate_walls(n):
        rep = wall_representative(w, cone)
        if rep is None:
            assert not wall_activity(w, cone)
            continue
        assert wall_activity(w, cone)
        assert membership(w, rep) == "On"
        assert cone.membership(rep) is Membership.INSIDE


def test_active_counts():
    assert [len(active_walls(n)) for n in (1, 2, 3)] == [1, 8, 30]


def test_membership_off_the_hyperplane():
    w = make_wall("A2", 2, {1})
    assert membership(w, WeightVector(1, (Q(1), Q(1)))) == "Off"


@pytest.mark.parametrize("n", [2, 3])
def test_wall_hyperplane_supports_its_configuration(n):
    # on the wall the configuration is strictly semistable, so h shows up among its forms
    for w in active_walls(n):
        if w.family is WallFamily.D4:
            continue
        forms = region_from_tuples(tuples_of(wall_configuration(w)), prune=False).forms
        keys = {f.hyperplane_key() for f in forms}
        assert w.hyperplane.hyperplane_key() in keys, w.label


@pytest.mark.parametrize("n", [3, 4, 5])
def test_d4_union_covers_each_alternative(n):
    cone = ample_cone(n, 3)
    for w in enumerate_walls(n):
        if w.family is not WallFamily.D4:
            continue
        opts = w.boundary_options()
        assert opts
        rep = wall_representative(w, cone)
        if rep is not None:
            assert any(all(f.evaluate(rep) <= 0 for f in bd) for bd in opts)
