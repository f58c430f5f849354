"""Acceptance criteria 1-7, each with its stated tolerance and time budget.

Every test prints one PASS/FAIL line (also collected into the pytest summary).
Run standalone with ``python3 tests/test_acceptance.py``.
"""

import itertools
import time

import numpy as np

from oracles import hilbert_basis_brute
from s1redux.errors import AllZeroWeights, NotEffective
from s1redux.finite_groups import abelian_invariants, cyclic_group, parse_group, symmetric_group
from s1redux.homotopy import Z, hopf_constraints, obstruction_search, sphere_pi, sphere_pi_finite
from s1redux.homotopy.les import ISO, GroupExpr, compare
from s1redux.homotopy.spheres import table_entries
from s1redux.invariants import MonomialExponent, invariant_monoid_basis
from s1redux.momentum import CONE, cone_link_decomposition, momentum, reduced_dimension, sample_zero_fiber
from s1redux.nerve import (FinitePresentationResult, Functor, action_groupoid,
                           check_simplicial_identities, group_groupoid, morita_pi1_check,
                           pair_groupoid, pi1_of_classifying_space, trivial_groupoid)
from s1redux.verdict import (WEAKLY_UNREPRESENTABLE, all_weight_vectors, hss_cross_check,
                             main_theorem_verdict, mixed_weight_vectors)
from s1redux.weights import WeightVector


def report(record_property, number, ok, elapsed, budget, detail):
    status = "PASS" if ok else "FAIL"
    limit = f" / {budget}s" if budget else ""
    line = f"criterion {number}: {status} ({elapsed:.2f}s{limit}) {detail}"
    print(line)
    if record_property is not None:
        record_property("acceptance", line)
    assert ok, line


def test_criterion_1_truth_table(record_property):
    start = time.perf_counter()
    mismatches, count = [], 0
    for combo in all_weight_vectors(5, 4):
        pos = sum(1 for a in combo if a > 0)
        neg = sum(1 for a in combo if a < 0)
        got = main_theorem_verdict(WeightVector(combo), 0).outcome == WEAKLY_UNREPRESENTABLE
        count += 1
        if got != (min(pos, neg) >= 2):
            mismatches.append(combo)
    elapsed = time.perf_counter() - start
    report(record_property, 1, not mismatches and elapsed < 10, elapsed, 10,
           f"{count} effective vectors, {len(mismatches)} mismatches")


EQUATION_FACTS = ("pi_1(X) ≅ pi_0(H)", "pi_2(X) ≅ pi_1(H)")


def test_criterion_2_obstruction_replay(record_property):
    start = time.perf_counter()
    problems = []
    for l1, l2 in itertools.combinations_with_replacement((3, 5, 7), 2):
        res = obstruction_search(l1, l2, 15)
        if not res.no_solution:
            problems.append(f"({l1},{l2}) has survivors")
        log = res.derivation
        texts = [e["constraint"] for e in log]
        provs = [e["provenance"] for e in log]
        for fact in EQUATION_FACTS:
            if not any(fact in t for t in texts):
                problems.append(f"({l1},{l2}) log lacks {fact}")
        k_min = l1 + l2 - 1
        missing = [p for p in range(3, k_min)
                   if not any(f"pi_{p}(X) ≅ pi_{p - 1}(H)" in t for t in texts)]
        if missing:
            problems.append(f"({l1},{l2}) log lacks degrees {missing}")
        else:
            first = [next(i for i, t in enumerate(texts) if t.startswith(f"pi_{p}(X) ≅ pi_{p - 1}(H)"))
                     for p in (1, 2, 3)]
            if first != sorted(first):
                problems.append(f"({l1},{l2}) facts out of order")
        sphere_side = [t for t in texts if f"x pi_3(S^{l2})" in t or f"pi_2(X) ≅ pi_1(S^1) = Z" in t]
        if not sphere_side:
            problems.append(f"({l1},{l2}) log lacks the quotient-side facts")
        if not all(provs):
            problems.append(f"({l1},{l2}) entry without provenance")
    for l2 in (3, 5, 7):
        res = obstruction_search(1, l2, 15)
        if any(c.dim != 0 for c in res.survivors):
            problems.append(f"(1,{l2}) positive-dimensional survivor")
    elapsed = time.perf_counter() - start
    report(record_property, 2, not problems and elapsed < 5, elapsed, 5,
           "; ".join(problems) or "9 NoSolution cases, l1=1 survivors finite, chain logged")


def test_criterion_3_hilbert_oracle(record_property):
    start = time.perf_counter()
    mismatches, count = [], 0
    for n in range(1, 4):
        for combo in itertools.product(range(-4, 5), repeat=n):
            try:
                w = WeightVector(combo)
            except (AllZeroWeights, NotEffective):
                continue
            count += 1
            h = invariant_monoid_basis(w)
            if not h.complete or sorted(h.vectors()) != hilbert_basis_brute(combo):
                mismatches.append(combo)
    h = invariant_monoid_basis(WeightVector((1, -1)))
    expected = {MonomialExponent((1, 0), (1, 0)), MonomialExponent((0, 1), (0, 1)),
                MonomialExponent((1, 1), (0, 0)), MonomialExponent((0, 0), (1, 1))}
    example_ok = set(h.generators) == expected and h.k == 4
    elapsed = time.perf_counter() - start
    report(record_property, 3, not mismatches and example_ok and elapsed < 30, elapsed, 30,
           f"{count} weight vectors, {len(mismatches)} mismatches, [1,-1] k={h.k}")


def test_criterion_4_hss(record_property):
    start = time.perf_counter()
    violations, unrep = [], 0
    for combo in mixed_weight_vectors(5, 4):
        w = WeightVector(combo)
        v = main_theorem_verdict(w, 0)
        if v.outcome == WEAKLY_UNREPRESENTABLE:
            unrep += 1
            if reduced_dimension(w, 0) < 6 or hss_cross_check(w):
                violations.append(combo)
    base = main_theorem_verdict(WeightVector((1, -1)), 0)
    example_ok = base.reduced_dim == 2 and base.hss_orbifold is True
    elapsed = time.perf_counter() - start
    report(record_property, 4, not violations and example_ok, elapsed, None,
           f"{unrep} unrepresentable vectors, {len(violations)} violations, [1,-1] dim {base.reduced_dim}")


def test_criterion_5_sphere_table(record_property):
    start = time.perf_counter()
    problems = []
    hopf = {c.degree: c for c in hopf_constraints(9)}
    if not (hopf[2].relation == ISO and hopf[2].rhs.known == Z and sphere_pi(2, 2) == Z):
        problems.append("pi_2(S^2)")
    if not (hopf[3].relation == ISO and compare(hopf[3].rhs, GroupExpr.of(sphere_pi(3, 2)))
            and sphere_pi(3, 2) == sphere_pi(3, 3)):
        problems.append("pi_3(S^2)")
    entries = 0
    for p, k, g in table_entries():
        entries += 1
        if p < k and not g.is_trivial:
            problems.append(f"pi_{p}(S^{k}) nonzero")
        if sphere_pi_finite(p, k) != g.is_finite:
            problems.append(f"finiteness of pi_{p}(S^{k})")
    elapsed = time.perf_counter() - start
    report(record_property, 5, not problems and elapsed < 1, elapsed, 1,
           "; ".join(problems) or f"Hopf LES consistent, {entries} table entries checked")


def test_criterion_6_nerve_lab(record_property):
    start = time.perf_counter()
    problems = []
    for spec in ("Z_2", "Z_3", "Z_4", "Z_2xZ_2"):
        g = parse_group(spec)
        if pi1_of_classifying_space(group_groupoid(g)) != abelian_invariants(g):
            problems.append(spec)
    s3 = pi1_of_classifying_space(group_groupoid(symmetric_group(3)))
    if not (isinstance(s3, FinitePresentationResult) and (s3.order, s3.exponent) == (6, 6)):
        problems.append("S_3")
    swap = action_groupoid(cyclic_group(2), "pq", [[0, 1], [1, 0]])
    fixed = action_groupoid(cyclic_group(2), ["p"], [[0], [0]])
    corpus = [group_groupoid(parse_group(s)) for s in ("Z_2", "Z_3", "Z_4", "Z_2xZ_2", "S_3")]
    corpus += [pair_groupoid(3), trivial_groupoid("abc"), swap, fixed,
               action_groupoid(cyclic_group(4), "ab", [[0, 1], [1, 0], [0, 1], [1, 0]])]
    for G in corpus:
        if not check_simplicial_identities(G, 4).ok:
            problems.append(f"simplicial identities on {G.objects}")
    pairs = [
        (trivial_groupoid(["*"]), pair_groupoid(3), Functor({0: 0}, {0: 0})),
        (fixed, group_groupoid(cyclic_group(2)), Functor({"p": "*"}, {"(0,p)": "0", "(1,p)": "1"})),
        (swap, trivial_groupoid(["*"]), Functor({"p": "*", "q": "*"}, {a: "1_*" for a in swap.arrows})),
    ]
    for G1, G2, F in pairs:
        if not morita_pi1_check(G1, G2, F).agree:
            problems.append(f"Morita pair {G1.objects} / {G2.objects}")
    elapsed = time.perf_counter() - start
    report(record_property, 6, not problems and elapsed < 10, elapsed, 10,
           "; ".join(problems) or f"5 groups, {len(corpus)} groupoids to level 4, 3 Morita pairs")


CONE_VECTORS = [(1, -1), (-1, 1, 1), (1, 1, -1, -1), (2, -3), (3, -1, 2, 0), (4, -3, 1, -2, 1),
                (-4, -4, 3, 1, 0)]


def test_criterion_7_momentum_sampling(record_property):
    start = time.perf_counter()
    worst_fiber, worst_scale = 0.0, 0.0
    for entries in CONE_VECTORS:
        w = WeightVector(entries)
        assert cone_link_decomposition(w).kind == CONE
        z = sample_zero_fiber(w, 10_000, seed=sum(map(abs, entries)))
        phi = momentum(w, z)
        worst_fiber = max(worst_fiber, float(np.max(np.abs(phi))))
        for t in (0.0, 0.5, 2.0):
            scaled = momentum(w, t * z)
            worst_scale = max(worst_scale, float(np.max(np.abs(scaled - t * t * phi))))
            worst_fiber = max(worst_fiber, float(np.max(np.abs(scaled))))
    elapsed = time.perf_counter() - start
    ok = worst_fiber <= 1e-9 and worst_scale <= 1e-12 and elapsed < 5
    report(record_property, 7, ok, elapsed, 5,
           f"{len(CONE_VECTORS)} x 10^4 points, max |Phi| {worst_fiber:.1e}, "
           f"max scaling error {worst_scale:.1e}")


if __name__ == "__main__":
    import sys
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(None)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
