"""Identity catalog: entries, evaluation, and the verification engine."""

from fractions import Fraction

import pytest

from hforge.bivar import BiFrac, BiPoly, bifrac_eq
from hforge.catalog import (
    IdentityEntry,
    ParamSpec,
    binom_factor,
    eval_side,
    lookup,
    onepx_pow,
    plan_cells,
    psi1_factor,
    psi_factor,
    tags,
    verify,
    verify_all,
    xratio_pow,
)
from hforge.catalog import catalog as catalog_entries
from hforge.special import binom_shift, psi1_diff, psi_diff

DOMAINS = {"Q", "Q(s)", "Q(x)", "Q(s,x)"}


def entry_map():
    return {e.tag: e for e in catalog_entries()}


class TestCatalogShape:
    def test_thirty_four_entries_with_unique_tags(self):
        entries = catalog_entries()
        assert len(entries) == 34
        assert len({e.tag for e in entries}) == 34

    def test_every_entry_is_well_formed(self):
        for e in catalog_entries():
            assert e.domain in DOMAINS
            assert e.anchor.strip()
            assert e.n_min >= 1
            assert e.id == e.tag

    def test_lookup(self):
        assert lookup("ID-5").tag == "ID-5"
        with pytest.raises(KeyError):
            lookup("ID-99")
        assert tags() == [e.tag for e in catalog_entries()]

    def test_parameterized_entries(self):
        e13 = lookup("ID-13")
        assert [s.name for s in e13.extra_params] == ["m"]
        assert e13.default_param_grid() == ({"m": 2}, {"m": 3}, {"m": 4}, {"m": 5})
        e14 = lookup("ID-14")
        assert e14.default_param_grid() == ({"m": 2}, {"m": 3})
        assert lookup("ID-5").default_param_grid() == ({},)

    def test_only_one_entry_carries_variants(self):
        flagged = [e.tag for e in catalog_entries() if e.rhs_variants]
        assert flagged == ["INTRO-2"]
        e = lookup("INTRO-2")
        assert set(e.rhs_variants) == {"corrected", "printed"}
        assert e.expected_fail_variants == frozenset({"printed"})


class TestValidation:
    def test_n_below_minimum(self):
        with pytest.raises(ValueError):
            lookup("ID-5").validate(0, {})

    def test_param_errors(self):
        e = lookup("ID-13")
        with pytest.raises(ValueError):
            e.validate(1, {})
        with pytest.raises(ValueError):
            e.validate(1, {"m": 1})
        with pytest.raises(ValueError):
            e.validate(1, {"m": 2, "q": 1})
        with pytest.raises(ValueError):
            lookup("ID-14").validate(1, {"m": 5})

    def test_param_spec_rejects_bools_and_floats(self):
        spec = ParamSpec(name="m", minimum=2, default_grid=(2,))
        with pytest.raises(ValueError):
            spec.validate(True)
        with pytest.raises(ValueError):
            spec.validate(2.0)

    def test_rhs_for_unknown_variant(self):
        with pytest.raises(ValueError):
            lookup("INTRO-2").rhs_for("misremembered")
        with pytest.raises(ValueError):
            lookup("ID-5").rhs_for("corrected")


class TestFactorHelpers:
    def test_binom_factor_matches_univariate(self):
        for a in (-1, 0, 2):
            for k in range(0, 5):
                got = binom_factor(a, k).to_bifrac()
                want = BiFrac.from_ratfunc(binom_shift(a, k))
                assert bifrac_eq(got, want)

    def test_psi_factors_match_univariate(self):
        for a in range(0, 6):
            got = psi_factor(a, 0).to_bifrac()
            assert bifrac_eq(got, BiFrac.from_ratfunc(psi_diff(a, 0)))
            got1 = psi1_factor(a, 0).to_bifrac()
            assert bifrac_eq(got1, BiFrac.from_ratfunc(psi1_diff(a, 0)))

    def test_x_side_helpers(self):
        one_px = BiPoly.x() + 1
        assert bifrac_eq(onepx_pow(3).to_bifrac(), BiFrac(one_px ** 3, BiPoly.one()))
        assert bifrac_eq(onepx_pow(-2).to_bifrac(), BiFrac(BiPoly.one(), one_px ** 2))
        assert bifrac_eq(
            xratio_pow(2).to_bifrac(), BiFrac(BiPoly.x(2), one_px ** 2)
        )


class TestSpotValues:
    def test_constant_entries(self):
        assert eval_side(lookup("ID-5"), "lhs", 3).as_constant() == Fraction(11, 6)
        assert eval_side(lookup("ID-5"), "rhs", 3).as_constant() == Fraction(11, 6)
        assert eval_side(lookup("ID-17"), "lhs", 2).as_constant() == Fraction(7, 4)
        assert eval_side(lookup("ID-13"), "lhs", 1, {"m": 2}).as_constant() == Fraction(-1, 2)
        assert eval_side(lookup("INTRO-3"), "rhs", 1).as_constant() == Fraction(-5, 4)

    def test_rational_function_entries_at_integer_points(self):
        assert eval_side(lookup("THM-2.6"), "lhs", 2).subst_s(1).as_constant() == Fraction(3, 2)
        assert eval_side(lookup("THM-2.9"), "rhs", 2).subst_s(1).as_constant() == Fraction(9, 4)
        assert eval_side(lookup("COR-2.3"), "lhs", 2).subst_s(0).as_constant() == Fraction(1, 2)

    def test_alternative_right_sides_differ(self):
        e = lookup("INTRO-2")
        for n, want in ((1, Fraction(2)), (2, Fraction(4, 3)), (3, Fraction(16, 15))):
            assert eval_side(e, "rhs", n, variant="corrected").as_constant() == want
        assert eval_side(e, "rhs", 1, variant="printed").as_constant() == 16

    def test_eval_side_rejects_unknown_side(self):
        with pytest.raises(ValueError):
            eval_side(lookup("ID-5"), "middle", 1)


class TestVerify:
    def test_single_entry_sweep(self):
        report = verify(lookup("ID-5"), range(1, 6))
        assert report.total == 5
        assert report.all_ok()
        assert all(r.passed for r in report.rows)

    def test_plan_cells_requires_nonempty_grids(self):
        with pytest.raises(ValueError):
            plan_cells(lookup("ID-5"), range(1, 1))
        with pytest.raises(ValueError):
            plan_cells(lookup("ID-5"), range(1, 3), params_range=[])

    def test_default_variant_plan_covers_both_forms(self):
        report = verify(lookup("INTRO-2"), [1])
        kinds = {(r.params.get("variant"), r.expected_fail) for r in report.rows}
        assert kinds == {("corrected", False), ("printed", True)}
        assert report.all_ok()

    def test_explicit_variant_reports_the_true_verdict(self):
        report = verify(lookup("INTRO-2"), [1], variant="printed")
        (row,) = report.rows
        assert not row.passed and not row.expected_fail
        assert row.witness is not None
        assert row.witness.lhs_probe == "2"
        assert row.witness.rhs_probe == "16"

    def test_param_grid_override(self):
        report = verify(lookup("ID-13"), [1, 2], params_range=[{"m": 2}, {"m": 5}])
        assert report.total == 4
        assert {r.params["m"] for r in report.rows} == {2, 5}
        assert report.all_ok()

    def test_parallel_execution_matches_serial(self):
        serial = verify(lookup("ID-12"), range(1, 5), workers=1)
        parallel = verify(lookup("ID-12"), range(1, 5), workers=2)
        strip = lambda rep: [(r.id, r.n, r.passed) for r in rep.rows]
        assert strip(serial) == strip(parallel)

    def test_catalog_sweep_small(self):
        report = verify_all(2)
        assert report.failed == 0
        bad = [r for r in report.rows if r.expected_fail]
        assert {(r.id, r.params.get("variant")) for r in bad} == {("INTRO-2", "printed")}

    def test_bivariate_cap_limits_two_variable_entries(self):
        report = verify_all(3, bivariate_cap=2)
        two_var = {e.tag for e in catalog_entries() if e.domain == "Q(s,x)"}
        capped = [r for r in report.rows if r.id in two_var]
        assert capped and max(r.n for r in capped) == 2
        rest = [r for r in report.rows if r.id not in two_var]
        assert max(r.n for r in rest) == 3

    def test_verify_all_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            verify_all(0)
