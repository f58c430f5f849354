import json

import pytest
from hypothesis import given, strategies as st

from s1redux.errors import EmptyLevelSet, HypothesisViolated, SchemaError
from s1redux.verdict import (ORBIFOLD_CANDIDATE, OUTCOMES, REGULAR_ORBIFOLD, SMOOTH_MODEL,
                             WEAKLY_UNREPRESENTABLE, analyze, consistency_audit, hss_cross_check,
                             main_theorem_verdict, mixed_weight_vectors, parse_bundle)
from s1redux.weights import WeightVector, classify_signs, normalize_effective

weights = st.lists(st.integers(-6, 6), min_size=1, max_size=6).filter(any).map(normalize_effective)


@pytest.mark.parametrize("w, a, outcome", [((1, 1, -1, -1), 0, WEAKLY_UNREPRESENTABLE),
                                           ((1, 2), 0.5, REGULAR_ORBIFOLD),
                                           ((-1, 1, 1), 0, ORBIFOLD_CANDIDATE),
                                           ((1, 2), 0, SMOOTH_MODEL),
                                           ((1, 2, 0), 0, SMOOTH_MODEL),
                                           ((2, -3, 0), 0, ORBIFOLD_CANDIDATE),
                                           ((1, -1), -2.0, REGULAR_ORBIFOLD)])
def test_verdict_examples(w, a, outcome):
    assert main_theorem_verdict(WeightVector(w), a).outcome == outcome


def test_verdict_empty_level():
    with pytest.raises(EmptyLevelSet):
        main_theorem_verdict(WeightVector((1, 2)), -1.0)


def test_candidate_makes_no_claim():
    v = main_theorem_verdict(WeightVector((-1, 1, 1)), 0)
    assert "no claim" in v.evidence["clause"]
    assert "fixedPoints" in v.evidence


@given(weights, st.sampled_from([0, 0, 0.5, -0.5, 3.0]))
def test_trichotomy_total(w, a):
    try:
        v = main_theorem_verdict(w, a)
    except EmptyLevelSet:
        s = classify_signs(w)
        assert (a > 0 and not s.num_positive) or (a < 0 and not s.num_negative)
        return
    assert v.outcome in OUTCOMES
    s = classify_signs(w)
    if v.outcome == WEAKLY_UNREPRESENTABLE:
        assert a == 0 and s.num_positive >= 2 and s.num_negative >= 2


@given(weights, st.randoms())
def test_permutation_and_negation_invariance(w, rnd):
    order = list(range(w.n))
    rnd.shuffle(order)
    base = main_theorem_verdict(w, 0).outcome
    assert main_theorem_verdict(w.permuted(order), 0).outcome == base
    assert main_theorem_verdict(-w, 0).outcome == base


@pytest.mark.parametrize("w, expected", [((1, -1), True), ((1, 1, -1, -1), False), ((-1, 1, 1), False)])
def test_hss_examples(w, expected):
    assert hss_cross_check(WeightVector(w)) is expected


def test_hss_hypotheses():
    with pytest.raises(HypothesisViolated):
        hss_cross_check(WeightVector((1, -1, 0)))
    with pytest.raises(HypothesisViolated):
        hss_cross_check(WeightVector((1, 2)))


def test_hss_flag_in_verdict():
    assert main_theorem_verdict(WeightVector((1, -1)), 0).hss_orbifold is True
    assert main_theorem_verdict(WeightVector((1, -1, 0)), 0).hss_orbifold is None
    assert main_theorem_verdict(WeightVector((1, -1)), 1.0).hss_orbifold is None


def test_audit_small_range_clean():
    rep = consistency_audit(4, 3)
    assert rep.ok and rep.vectors > 0 and rep.checks > rep.vectors


def test_audit_single_vector():
    rep = consistency_audit(vectors=[(1, 1, -1, -1)])
    assert rep.ok and rep.vectors == 1


def test_negation_pair():
    assert main_theorem_verdict(WeightVector((2, -3)), 0) == main_theorem_verdict(WeightVector((-2, 3)), 0)


def test_mixed_enumeration_is_sorted_and_effective():
    vecs = list(mixed_weight_vectors(3, 2))
    assert (1, -1) not in vecs and (-1, 1) in vecs
    assert all(list(v) == sorted(v) for v in vecs)
    assert (-2, 2) not in vecs


def test_analyze_examples():
    doc = analyze(WeightVector((1, -1)), 0)
    assert doc["hilbert"]["k"] == 4 and doc["coneLink"]["kind"] == "CONE"
    assert (doc["obstruction"]["l1"], doc["obstruction"]["l2"]) == (1, 1)
    assert doc["verdict"]["outcome"] == ORBIFOLD_CANDIDATE
    doc = analyze(WeightVector((3, 5)), 1)
    assert doc["verdict"]["outcome"] == REGULAR_ORBIFOLD and "obstruction" not in doc
    doc = analyze(WeightVector((1, 1, -1, -1)), 0)
    assert doc["obstruction"]["status"] == "NoSolution"
    assert doc["verdict"]["outcome"] == WEAKLY_UNREPRESENTABLE


def test_bundle_schema():
    doc = analyze(WeightVector((1, -2)), 0)
    assert parse_bundle(json.dumps(doc)) == json.loads(json.dumps(doc))
    for mutate in (lambda d: d.update(extra=1), lambda d: d.update(schema="s1redux/2"),
                   lambda d: d["verdict"].update(note=""), lambda d: d.pop("verdict")):
        bad = json.loads(json.dumps(doc))
        mutate(bad)
        with pytest.raises(SchemaError):
            parse_bundle(bad)
