"""Top-level acceptance gate: eight checks, one visible verdict line each.

Each test prints "ACCEPTANCE-<k> <label>: PASS|FAIL" on the real stdout
so the verdicts survive output capture, then asserts.
"""

import random
import re
import time
from fractions import Fraction
from pathlib import Path

import pytest

from hforge.bivar import BiFrac, BiPoly, bifrac_eq
from hforge.catalog import catalog as catalog_entries
from hforge.catalog import lookup, verify_all
from hforge.dsl import check, check_identity, load_corpus, parse_expr
from hforge.exact import Poly, RatFunc, poly_gcd
from hforge.oracle import degree_bound, integer_s_check, sampling_verify
from hforge.special import (
    binom_int,
    binom_neg3half,
    binom_shift,
    harmonic,
    psi1_diff,
    psi_diff,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus" / "paper.ids"
HALF = Fraction(1, 2)


@pytest.fixture()
def announce(capsys):
    """Verdict printer that bypasses output capture."""

    def emit(num, label, ok):
        with capsys.disabled():
            print(f"ACCEPTANCE-{num} {label}: {'PASS' if ok else 'FAIL'}")
        return ok

    return emit


@pytest.fixture(scope="module")
def full_sweep():
    start = time.time()
    report = verify_all(25)
    return report, time.time() - start


def row_key(row):
    params = {k: v for k, v in row.params.items() if k != "variant"}
    return (row.id, row.n, tuple(sorted(params.items())), row.params.get("variant"))


def test_acceptance_1_full_catalog_sweep(full_sweep, announce):
    report, elapsed = full_sweep
    unexpected = [r for r in report.rows if not r.ok]
    excused = [r for r in report.rows if r.expected_fail]
    only_known_misprint = all(
        r.id == "INTRO-2" and r.params.get("variant") == "printed" and not r.passed
        for r in excused
    ) and len(excused) == 25
    first = next(
        r for r in excused if r.n == 1
    )
    witness_ok = (
        first.witness is not None
        and first.witness.lhs_probe == "2"
        and first.witness.rhs_probe == "16"
    )
    ok = (
        not unexpected
        and only_known_misprint
        and witness_ok
        and report.total == 945
        and elapsed < 300
    )
    assert announce(1, "full catalog sweep to n=25", ok), (
        f"unexpected failures: {[(r.id, r.n, r.params) for r in unexpected][:5]}, "
        f"excused={len(excused)}, witness_ok={witness_ok}, "
        f"total={report.total}, elapsed={elapsed:.0f}s"
    )


def test_acceptance_2_spot_values(announce):
    id5 = lookup("ID-5")
    id16 = lookup("ID-16")
    ok = (
        id5.lhs(3, {}).as_constant() == Fraction(11, 6)
        and id5.rhs(3, {}).as_constant() == Fraction(11, 6)
        and lookup("ID-17").lhs(2, {}).as_constant() == Fraction(7, 4)
        and lookup("ID-17").rhs(2, {}).as_constant() == Fraction(7, 4)
        and all(
            lookup("ID-10").rhs(n, {}).as_constant() == Fraction(-2, n * n)
            for n in range(1, 26)
        )
        and all(
            lookup("ID-11").rhs(n, {}).as_constant() == Fraction((-1) ** n - 1, n + 1)
            for n in range(1, 26)
        )
        and all(
            id16.lhs(n, {}).as_constant()
            == id16.rhs(n, {}).as_constant()
            == Fraction(1, 2 * n - 1)
            for n in range(1, 26)
        )
    )
    assert announce(2, "frozen spot values", ok)


def test_acceptance_3_half_integer_reductions(announce):
    ok = True
    for k in range(0, 21):
        want = Fraction((-1) ** k, 4 ** k) * binom_int(2 * k, k)
        ok = ok and binom_shift(0, k)(-HALF) == want
    for n in range(0, 21):
        ok = ok and binom_shift(-1, n)(-HALF) == binom_neg3half(n)
    for k in range(1, 21):
        got = psi_diff(k, 0)(HALF - k)
        ok = ok and got == harmonic(k) - 2 * harmonic(2 * k)
    for n in range(1, 21):
        got = psi_diff(n, 0)(Fraction(-2 * n - 1, 2))
        want = Fraction(4 * n, 2 * n + 1) - 2 * harmonic(2 * n) + harmonic(n)
        ok = ok and got == want
    assert announce(3, "half-integer reductions", ok)


def test_acceptance_4_derivative_chains(announce):
    links = [
        ("THM-2.1", "THM-2.2"),
        ("THM-2.2", "THM-2.4"),
        ("THM-2.6", "THM-2.7"),
        ("THM-2.7", "THM-2.8"),
        ("THM-2.9", "THM-2.10"),
        ("THM-2.10", "THM-2.11"),
    ]
    ok = True
    for src, dst in links:
        a, b = lookup(src), lookup(dst)
        for n in range(1, 11):
            ok = ok and bifrac_eq(a.lhs(n, {}).deriv_s(), b.lhs(n, {}))
            ok = ok and bifrac_eq(a.rhs(n, {}).deriv_s(), b.rhs(n, {}))
    assert announce(4, "derivative chains", ok)


def test_acceptance_5_specializations(announce):
    ok = True
    for n in range(1, 16):
        for src, dst, x0 in (
            ("THM-2.2", "COR-2.3", -1),
            ("THM-2.4", "COR-2.5", -1),
            ("THM-2.1", "ID-1", -1),
            ("ID-7", "ID-8", 1),
        ):
            a, b = lookup(src), lookup(dst)
            ok = ok and bifrac_eq(a.lhs(n, {}).subst_x(x0), b.lhs(n, {}))
            ok = ok and bifrac_eq(a.rhs(n, {}).subst_x(x0), b.rhs(n, {}))
        for src, dst in (("THM-2.6", "ID-5"), ("THM-2.9", "ID-17")):
            a, b = lookup(src), lookup(dst)
            ok = ok and bifrac_eq(a.lhs(n, {}).subst_s(0), b.lhs(n, {}))
            ok = ok and bifrac_eq(a.rhs(n, {}).subst_s(0), b.rhs(n, {}))
        for m in (2, 3):
            a, b = lookup("ID-13"), lookup("ID-14")
            ok = ok and bifrac_eq(a.lhs(n, {"m": m}), b.lhs(n, {"m": m}))
            ok = ok and bifrac_eq(a.rhs(n, {"m": m}), b.rhs(n, {"m": m}))
    assert announce(5, "specialization lattice", ok)


def test_acceptance_6_oracle_equivalence(full_sweep, announce):
    report, _ = full_sweep
    verdicts = {row_key(r): r.passed for r in report.rows}
    ok = True
    for entry in catalog_entries():
        variants = sorted(entry.rhs_variants) if entry.rhs_variants else [None]
        for n in range(entry.n_min, 16):
            for params in entry.default_param_grid():
                for variant in variants:
                    key = (entry.tag, n, tuple(sorted(params.items())), variant)
                    symbolic = verdicts[key]
                    cert = sampling_verify(entry, n, params, variant)
                    bs, bx = degree_bound(entry, n)
                    ok = ok and cert.all_equal == symbolic
                    ok = ok and cert.point_count > bs * bx
                    ok = ok and cert.degree_bound == (bs, bx)
                    if "s" in entry.domain:
                        for s0 in (0, 1, 3):
                            got = integer_s_check(entry, n, s0, params, variant)
                            ok = ok and got == symbolic
    assert announce(6, "oracle equivalence", ok)


GOLDEN_DIAGNOSTICS = [
    ("H(n", False, (3, 3), "unclosed '(' in call to H"),
    ("2^(1/2)", True, (3, 6), "exponent must be integer-valued"),
    ("a^b^c", False, (3, 4), "'^' is non-associative"),
    ("H(x)", True, (2, 3), "argument 1 of H must be integer-valued"),
    ("G(2)", True, (0, 4), "unknown builtin 'G'"),
]


def test_acceptance_7_dsl_corpus(full_sweep, announce):
    report, _ = full_sweep
    verdicts = {row_key(r): r.passed for r in report.rows}
    entries, issues = load_corpus(CORPUS)
    ok = not issues and len(entries) == 38

    for entry in entries:
        match = re.fullmatch(r"(.+?)\[m=(\d+)\]", entry.name)
        tag = match.group(1) if match else entry.name
        params = (("m", int(match.group(2))),) if match else ()
        variant = "corrected" if tag == "INTRO-2" else None
        corpus_report = check_identity(
            entry.identity.lhs, entry.identity.rhs, range(1, 16), name=entry.name
        )
        for row in corpus_report.rows:
            ok = ok and row.passed
            ok = ok and row.passed == verdicts[(tag, row.n, params, variant)]

    for source, needs_check, span, message in GOLDEN_DIAGNOSTICS:
        result = parse_expr(source)
        if needs_check:
            result = check(result)
        ok = (
            ok
            and isinstance(result, list)
            and len(result) == 1
            and result[0].span == span
            and result[0].message == message
        )
    assert announce(7, "identity language corpus", ok)


def test_acceptance_8_kernel_property_suites(announce):
    rng = random.Random(20260822)

    def poly(max_deg=3, span=5):
        return Poly(
            [Fraction(rng.randint(-span, span)) for _ in range(rng.randint(0, max_deg + 1))]
        )

    def nonzero_poly():
        p = poly()
        while p.is_zero():
            p = poly()
        return p

    def bifrac():
        terms = {
            (rng.randint(0, 2), rng.randint(0, 2)): Fraction(rng.randint(-4, 4))
            for _ in range(rng.randint(1, 3))
        }
        num = BiPoly(terms)
        den = BiPoly({(rng.randint(0, 2), rng.randint(0, 2)): Fraction(rng.randint(1, 4))})
        return BiFrac(num, den)

    ok = True

    # ring and field axioms
    for _ in range(1000):
        p, q, r = poly(), poly(), poly()
        ok = ok and p + q == q + p and p * q == q * p
        ok = ok and (p + q) + r == p + (q + r) and (p * q) * r == p * (q * r)
        ok = ok and p * (q + r) == p * q + p * r
        f = RatFunc(nonzero_poly(), nonzero_poly())
        ok = ok and (f * (1 / f)).as_constant() == 1 and f - f == RatFunc(Poly.zero())

    # gcd and normalization idempotence
    for _ in range(1000):
        p, q = nonzero_poly(), nonzero_poly()
        g = poly_gcd(p, q)
        ok = ok and g.leading == 1 and (p % g).is_zero() and (q % g).is_zero()
        ok = ok and poly_gcd(p, q) == poly_gcd(q, p)
        f = RatFunc(p, q)
        c = Poly.const(Fraction(rng.randint(1, 5)))
        ok = ok and RatFunc(p * c, q * c) == f and RatFunc(f.num, f.den) == f

    # cross-multiplied equality is an equivalence relation
    for _ in range(1000):
        a = bifrac()
        scale = BiPoly.const(Fraction(rng.randint(1, 5)))
        b = BiFrac(a.num * scale, a.den * scale)
        c = BiFrac(b.num * scale, b.den * scale)
        other = bifrac()
        ok = ok and bifrac_eq(a, a) and bifrac_eq(a, b) and bifrac_eq(b, a)
        ok = ok and bifrac_eq(a, c)
        ok = ok and bifrac_eq(a, other) == bifrac_eq(other, a)

    # telescoping composition of digamma differences
    for _ in range(1000):
        b = rng.randint(0, 6)
        c = b + rng.randint(0, 6)
        a = c + rng.randint(0, 6)
        ok = ok and psi_diff(a, b) == psi_diff(a, c) + psi_diff(c, b)
        ok = ok and psi1_diff(a, b) == psi1_diff(a, c) + psi1_diff(c, b)
        ok = ok and psi_diff(a, b).derivative() == psi1_diff(a, b)

    # Pascal and absorption for shifted binomials
    s = RatFunc(Poly([0, 1]))
    for _ in range(1000):
        a = rng.randint(-6, 6)
        k = rng.randint(1, 8)
        ok = ok and binom_shift(a + 1, k) == binom_shift(a, k) + binom_shift(a, k - 1)
        ok = ok and binom_shift(a, k) == (s + a) / k * binom_shift(a - 1, k - 1)

    assert announce(8, "kernel property suites", ok)
