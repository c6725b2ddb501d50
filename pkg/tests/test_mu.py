from fractions import Fraction as Q

from hypothesis import given, settings, strategies as st

from vgit.mu_engine import (SupportTuple, Verdict, candidate_rs, max_mu_over_r, mu_at, mu_form_at, mu_profile,
                            region_from_tuples, verdict, verdict_from_values)
from vgit.weightspace import WeightVector, X, Y, Z, all_monomials, monomials

from oracles import ref_candidates, ref_mu

nonneg = st.fractions(min_value=0, max_value=4, max_denominator=6)
points = st.sets(st.sampled_from([X, Y, Z]), min_size=1)


@st.composite
def support_tuples(draw, n=None, d=3):
    n = draw(st.integers(1, 3)) if n is None else n
    curve = draw(st.sets(st.sampled_from(all_monomials(d)), min_size=1, max_size=6))
    return SupportTuple(curve, tuple(draw(points) for _ in range(n)))


@st.composite
def tuple_and_weights(draw):
    t = draw(support_tuples())
    wv = WeightVector(draw(nonneg), tuple(draw(nonneg) for _ in range(t.n)))
    return t, wv


def test_support_tuple_validation():
    import pytest
    with pytest.raises(ValueError):
        SupportTuple(frozenset(), ())
    with pytest.raises(ValueError):
        SupportTuple(monomials("x^3, xy"), ())
    with pytest.raises(ValueError):
        SupportTuple(monomials("x^3"), (monomials("xy"),))


@given(tuple_and_weights(), st.fractions(min_value=Q(-1, 2), max_value=1, max_denominator=40))
def test_mu_matches_reference(tw, r):
    t, wv = tw
    assert mu_at(t, wv, r) == ref_mu(t.curve, t.points, wv.gamma, wv.w, r)
    assert mu_form_at(t, r).evaluate(wv) == mu_at(t, wv, r)


@given(support_tuples())
def test_candidates_match_reference(t):
    assert candidate_rs(t) == ref_candidates(t.curve, t.points)


@given(tuple_and_weights(), st.lists(st.fractions(min_value=Q(-1, 2), max_value=1, max_denominator=30),
                                     min_size=2, max_size=2),
       st.fractions(min_value=0, max_value=1, max_denominator=7))
def test_mu_is_concave_in_r(tw, ab, s):
    t, wv = tw
    a, b = ab
    m = s * a + (1 - s) * b
    assert mu_at(t, wv, m) >= s * mu_at(t, wv, a) + (1 - s) * mu_at(t, wv, b)


@given(tuple_and_weights())
def test_profile_is_affine_on_pieces(tw):
    t, wv = tw
    for piece in mu_profile(t):
        mid = (piece.lo + piece.hi) / 2
        for r in (piece.lo, mid, piece.hi):
            assert piece.const.evaluate(wv) + r * piece.slope.evaluate(wv) == mu_at(t, wv, r)


@given(tuple_and_weights(), st.lists(st.fractions(min_value=Q(-1, 2), max_value=1, max_denominator=50),
                                     max_size=20))
def test_maximum_dominates_samples(tw, sample):
    t, wv = tw
    res = max_mu_over_r(t, wv)
    assert res.argmax_lo <= res.argmax_hi
    assert mu_at(t, wv, res.argmax_lo) == res.value == mu_at(t, wv, res.argmax_hi)
    for r in sample:
        v = mu_at(t, wv, r)
        assert v <= res.value
        assert (v == res.value) == res.attains(r)


@settings(max_examples=60)
@given(st.lists(support_tuples(n=2), min_size=1, max_size=4),
       st.lists(st.tuples(nonneg, nonneg, nonneg), min_size=1, max_size=6))
def test_region_verdict_agrees_with_direct_maximum(ts, ws):
    region = region_from_tuples(ts)
    full = region_from_tuples(ts, prune=False)
    assert set(region.forms) <= set(full.forms)
    for g, a, b in ws:
        wv = WeightVector(g, (a, b))
        direct = verdict_from_values(max_mu_over_r(t, wv).value for t in ts)
        assert verdict(ts, wv, region) == direct
        assert verdict_from_values(full.values(wv)) == direct


def test_shrinking_point_support_raises_mu():
    # fewer monomials in a point support can only increase its min
    t_big = SupportTuple(monomials("x^3, y^3"), (monomials("x, y, z"),))
    t_small = SupportTuple(monomials("x^3, y^3"), (monomials("x"),))
    wv = WeightVector(1, (Q(1),))
    for r in candidate_rs(t_big) + candidate_rs(t_small):
        assert mu_at(t_small, wv, r) >= mu_at(t_big, wv, r)


def test_verdict_thresholds():
    assert verdict_from_values([Q(-1), Q(-2)]) is Verdict.STABLE
    assert verdict_from_values([Q(-1), Q(0)]) is Verdict.STRICTLY_SEMISTABLE
    assert verdict_from_values([Q(0), Q(1, 100)]) is Verdict.UNSTABLE
    assert str(Verdict.STRICTLY_SEMISTABLE) == "StrictlySemistable"
