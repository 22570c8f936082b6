"""Scan layer: claim registry shape, sample capture, violation reporting."""

import pytest

from sevencores.inequalities import (
    CLAIMS,
    DEFAULT_DEPTH,
    SAMPLE_COUNT,
    check_b_vanishing,
    check_corollary_4_1,
    check_referee_progressions,
    check_theorem_1_1,
    claim_ids,
    core_split,
    positivity,
    run_all,
    run_claim,
)
from sevencores.theta import euler_E


def test_core_split_heads():
    cs = core_split(10)
    assert cs.a7.coeffs[:9] == (1, 1, 2, 3, 5, 7, 11, 8, 15)
    # alternating-sign companion: 1 - 3q + 5q^3 - 7q^6 + 9q^8 - ...
    assert cs.b.coeffs == (1, -3, 0, 5, 0, 0, -7, -3, 9, 0, -6)


def test_rank_columns_add_up():
    cs = core_split(24)
    total = cs.a7_m1 + cs.a7_0 + cs.a7_1 + cs.a7_2
    assert total == cs.a7


def test_registry_partition():
    kinds = {c.kind for c in CLAIMS}
    assert kinds == {"theorem", "conjecture"}
    assert len(CLAIMS) == 29
    assert len(claim_ids("theorem")) == 19
    assert len(claim_ids("conjecture")) == 10
    assert set(claim_ids()) == set(claim_ids("theorem")) | set(claim_ids("conjecture"))


def test_run_claim_unknown():
    with pytest.raises(KeyError):
        run_claim("no-such-claim", 50)


def test_doubling_bound_holds():
    r = run_claim("ineq-1.11", 400)
    assert r.status == "holds"
    assert r.violation is None
    assert len(r.samples) == SAMPLE_COUNT
    # a7(2n+2) vs 2*a7(n) at n=0: 2 >= 2, tight
    assert r.samples[0] == (0, 2, 2)


def test_progression_sample_instance():
    r = run_claim("prog-1.15-r1", 600)
    assert r.status == "holds"
    assert r.samples[0] == (0, 5, 5)


def test_boundary_of_mixed_sign_bound():
    r = check_corollary_4_1(300)
    assert r.status == "holds"
    assert r.n_range == (1, 300)
    # 3*a7(0) + b(1) = 3 - 3 = 0 sits exactly on the bound
    assert r.samples[0] == (1, 0, 0)


def test_b_vanishing_residues():
    cs = core_split(60)
    for n in range(61):
        if n % 7 in (2, 4, 5):
            assert cs.b[n] == 0
    # negative control: residues that do carry mass
    assert cs.b[1] == -3
    assert cs.b[6] == -7
    r = check_b_vanishing(500)
    assert r.status == "holds"


def test_theorem_bundle():
    reports = check_theorem_1_1(600)
    assert len(reports) == 10
    assert all(r.status == "holds" for r in reports)


def test_referee_progressions_need_depth():
    reports = check_referee_progressions(1000)
    assert {r.claim for r in reports} == {"prog-ext-r10", "prog-ext-r17", "prog-ext-r45"}
    assert all(r.status == "holds" for r in reports)


def test_positivity_violation_reports_witness():
    # Euler product itself goes negative at q^1
    r = positivity(
        lambda order: euler_E(1, order),
        50,
        claim="synthetic-negative",
        description="euler product coefficients",
    )
    assert r.status == "violated"
    assert r.violation == (1, -1, 0)
    assert r.claim == "synthetic-negative"


def test_violation_stops_sampling_early():
    r = positivity(
        lambda order: euler_E(1, order),
        50,
        claim="synthetic-negative",
        description="euler product coefficients",
    )
    # only exponent 0 passes before the failure at exponent 1
    assert len(r.samples) <= SAMPLE_COUNT


def test_run_all_kinds():
    reports = run_all(200, "conjecture")
    assert len(reports) == 10
    assert all(r.kind == "conjecture" for r in reports)
    assert all(r.status == "holds" for r in reports)
    everything = run_all(150)
    assert len(everything) == 29


def test_default_depth_constant():
    assert DEFAULT_DEPTH == 2000
