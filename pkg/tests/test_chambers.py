import json
from fractions import Fraction as Q

import pytest

from vgit.chambers import (OnWall, build_slice, chamber_cap, chambers_to_json, enumerate_chambers, locate)
from vgit.errors import OutOfRange
from vgit.weightspace import WeightVector


@pytest.fixture(scope="module")
def n2():
    sl = build_slice(2)
    return sl, enumerate_chambers(sl)


def test_n1_has_two_chambers():
    sl = build_slice(1)
    ch = enumerate_chambers(sl)
    assert len(ch) == 2
    assert len(sl.hyperplanes) == 1
    assert sl.values((Q(3, 4),)) == [0]
    assert isinstance(locate(sl, ch, WeightVector(1, (Q(3, 4),))), OnWall)
    assert locate(sl, ch, WeightVector(1, (Q(1, 2),))).id != locate(sl, ch, WeightVector(1, (Q(9, 10),))).id


def test_n2_counts(n2):
    sl, ch = n2
    assert len(sl.walls) == 8 and len(sl.hyperplanes) == 8
    assert len(ch) == 20
    assert len({c.signs for c in ch}) == 20


def test_grid_oracle_finds_the_same_sign_vectors(n2):
    sl, ch = n2
    N = 24
    found = set()
    for i in range(1, 3 * N):
        for j in range(1, 3 * N):
            p = (Q(i, N), Q(j, N))
            if not sl.strictly_inside(p):
                continue
            v = sl.values(p)
            if 0 not in v:
                found.add(tuple(1 if x > 0 else -1 for x in v))
    assert found == {c.signs for c in ch}


def test_adjacency_is_symmetric_and_single_flip(n2):
    _, ch = n2
    by_id = {c.id: c for c in ch}
    for c in ch:
        for other, k in c.adjacent:
            o = by_id[other]
            assert (c.id, k) in o.adjacent
            diff = [i for i, (a, b) in enumerate(zip(c.signs, o.signs)) if a != b]
            assert diff == [k]


def test_reps_locate_to_themselves(n2):
    sl, ch = n2
    for c in ch:
        assert sl.strictly_inside(c.rep)
        assert locate(sl, ch, c.rep_weights()) == c


def test_locate_on_a_wall_and_out_of_range(n2):
    sl, ch = n2
    res = locate(sl, ch, WeightVector(1, (Q(1, 2), Q(1, 2))))
    assert isinstance(res, OnWall) and res.labels
    with pytest.raises(OutOfRange):
        locate(sl, ch, WeightVector(1, (Q(3), Q(1, 2))))
    with pytest.raises(OutOfRange):
        locate(sl, ch, WeightVector(2, (Q(1, 2), Q(1, 2))))


def test_json_is_deterministic(n2):
    sl, ch = n2
    a = json.dumps(chambers_to_json(sl, ch), sort_keys=True)
    b = json.dumps(chambers_to_json(build_slice(2), enumerate_chambers(build_slice(2))), sort_keys=True)
    assert a == b


def test_cap(monkeypatch):
    assert chamber_cap() == 4
    monkeypatch.setenv("VGIT_CHAMBER_CAP", "1")
    with pytest.raises(OutOfRange):
        build_slice(2)
    monkeypatch.setenv("VGIT_CHAMBER_CAP", "many")
    with pytest.raises(ValueError):
        chamber_cap()


def test_n3_slice():
    sl = build_slice(3)
    assert len(sl.walls) == 30
    t = Q(1, 2)
    assert sl.strictly_inside((t, t, t))
