import json

import pytest

from isospec import verify
from isospec.spectra import Family, GroupId

F = Family
S6_5 = GroupId(F.S6, 5)
S6_7 = GroupId(F.S6, 7)

PASSING = [
    "zsigmondy",
    "kn-formula",
    "nl4",
    "k6-exclusions",
    "cyclotomic-bound",
    "totient-table",
    "exponent-bounds",
    "spectra-consistency",
    "psl2-oracle",
    "prime-graph",
    "exceptional-filters",
]


@pytest.mark.parametrize("check_id", PASSING)
def test_check_passes_at_defaults(check_id):
    rep = verify.run_check(check_id)
    assert rep.passed, rep.summary()
    assert rep.items_scanned > 0


def test_every_check_registered():
    assert set(PASSING) | {"k-tables", "q5-scan"} == set(verify.CHECKS)


def test_report_json_shape():
    rep = verify.verify_zsigmondy(3, 6)
    d = json.loads(rep.to_json())
    assert list(d)[:5] == ["check_id", "params", "passed", "counterexamples", "items_scanned"]
    assert d["check_id"] == "zsigmondy" and d["params"] == {"amax": 3, "mmax": 6}
    assert d["passed"] is True


def test_empty_report_does_not_pass():
    assert not verify.VerificationReport("x", {}).passed


def test_range_preconditions():
    with pytest.raises(ValueError):
        verify.verify_zsigmondy(2, 30)
    with pytest.raises(ValueError):
        verify.verify_k_tables(40)
    with pytest.raises(ValueError):
        verify.verify_exponent_bounds(5)
    with pytest.raises(ValueError):
        verify.run_check("nope")


def test_run_check_maps_flags():
    rep = verify.run_check("zsigmondy", amax=5, mmax=8, qmax=None)
    assert rep.parameters == {"amax": 5, "mmax": 8}


def test_k_tables_only_disagree_on_swapped_column():
    rep = verify.verify_k_tables()
    assert rep.counterexamples == [
        "k_6 table at q=25: computed 601, tabulated 757",
        "k_6 table at q=27: computed 757, tabulated 601",
    ]
    assert verify.k6(25) == 601 and verify.k6(27) == 757
    assert {q: verify.k3(q) for q in verify.K3_TABLE} == verify.K3_TABLE


def test_nl4_reports_239():
    rep = verify.verify_nl4(1000)
    assert rep.passed
    assert any("q=239" in n for n in rep.notes)


def test_k6_replay():
    assert verify._k6_replay(19) == [7]
    assert verify._k6_replay(601) == [25]
    assert verify._k6_replay(757) == [27]
    for target, _ in verify.K6_EXCLUDED:
        assert verify._k6_replay(target) == []


def test_k6_excluded_sources():
    from isospec.arith import largest_primitive_divisor

    for target, source in verify.K6_EXCLUDED:
        if source is not None:
            assert largest_primitive_divisor(*source) == target


class TestElimination:
    def test_pi_filter(self):
        v = verify.eliminate_candidate(S6_5, GroupId(F.Sz, 32))
        assert v.eliminated_by is verify.Reason.PI_NOT_CONTAINED and v.witness == 41

    def test_k6_filter(self):
        v = verify.eliminate_candidate(S6_5, GroupId(F.PSL2, 4))
        assert v.eliminated_by is verify.Reason.K6_NOT_IN_SPECTRUM and v.witness == 7

    def test_spectrum_filter(self):
        v = verify.eliminate_candidate(S6_5, GroupId(F.PSL2, 27))
        assert v.eliminated_by is verify.Reason.SPECTRUM_NOT_CONTAINED and v.witness == 14

    def test_survivor(self):
        v = verify.eliminate_candidate(S6_5, GroupId(F.Sz, 8))
        assert v.survived and str(v) == "2B2(8) vs S6(5): NOT_ELIMINATED"

    def test_exponent_filter(self):
        v = verify.eliminate_candidate(S6_7, GroupId(F.E8, 2))
        assert v.eliminated_by is verify.Reason.EXPONENT_EXCEEDS_Q9
        assert v.witness == 2 * 2**80 and v.witness >= 7**9

    def test_exponent_filter_keeps_small_classical(self):
        v = verify.eliminate_candidate(S6_7, GroupId(F.LinearN, 2, 3))
        assert v.survived

    def test_target_checked(self):
        with pytest.raises(ValueError):
            verify.eliminate_candidate(GroupId(F.G2, 5), GroupId(F.Sz, 8))
        with pytest.raises(ValueError):
            verify.eliminate_candidate(GroupId(F.S6, 3), GroupId(F.Sz, 8))

    def test_to_dict(self):
        d = verify.eliminate_candidate(S6_5, GroupId(F.Sz, 32)).to_dict()
        assert d == {
            "target": "S6(5)",
            "candidate": "2B2(32)",
            "eliminated_by": "PI_NOT_CONTAINED",
            "witness": 41,
        }


class TestScan:
    def test_candidates_skip_nonsimple(self):
        assert GroupId(F.G2, 3) in verify.candidates_for(F.G2, 4)
        assert [g.q for g in verify.candidates_for(F.G2, 4)] == [3, 4]
        assert [g.q for g in verify.candidates_for(F.Sz, 128)] == [8, 32, 128]
        assert len(verify.candidates_for(F.E6, 4)) == 6

    def test_survivors_first_and_cross_characteristic(self):
        verdicts = verify.scan_candidates(S6_5, verify.Q5_FAMILIES, 64)
        flags = [v.survived for v in verdicts]
        assert flags == sorted(flags, reverse=True)
        assert all(v.candidate.char != 5 for v in verdicts)

    def test_q5_survivors(self):
        # the three filters leave four groups beyond the expected list
        for fam in (F.S6, F.O7):
            verdicts = verify.scan_candidates(GroupId(fam, 5), verify.Q5_FAMILIES, 64)
            survivors = {v.candidate for v in verdicts if v.survived}
            extra = {GroupId(F.PSL2, u) for u in (7, 8, 49, 64)}
            assert survivors == set(verify.Q5_SURVIVORS) | extra

    def test_coclique_annotation(self):
        assert verify.coclique_uncovered(S6_5, GroupId(F.PSL2, 7), (7, 13, 31)) == [13, 31]
        assert verify.coclique_uncovered(S6_5, GroupId(F.PSL2, 64), (7, 13, 31)) == [31]
        assert verify.coclique_uncovered(S6_5, GroupId(F.G2, 3), (7, 13, 31)) == [31]
        with pytest.raises(ValueError):
            verify.coclique_uncovered(S6_5, GroupId(F.PSL2, 7), (2, 3, 5))

    def test_e_series_vs_s6_7(self):
        verdicts = verify.scan_candidates(S6_7, [F.E8, F.E7], 4)
        assert len(verdicts) == 6
        assert all(v.eliminated_by is verify.Reason.EXPONENT_EXCEEDS_Q9 for v in verdicts)
