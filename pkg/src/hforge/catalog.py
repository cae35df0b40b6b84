"""Catalog of finite binomial-sum and harmonic-number identities.

Each entry packages two independently evaluable sides of one identity
under a stable tag, together with a citation anchor, the value domain
(``Q``, ``Q(s)``, ``Q(x)``, or ``Q(s,x)``), and parameter constraints.
Side evaluators assemble exact :class:`~hforge.bivar.FactoredFrac`
values from the shifted-binomial and digamma-difference primitives and
hand back :class:`~hforge.bivar.BiFrac` for cross-multiplied comparison.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .bivar import BiFrac, BiPoly, FactoredFrac, bifrac_eq, ffsum
from .exact import Poly
from .report import Report, ReportRow, make_witness
from .special import binom_int, binom_shift, harmonic, harmonic_gen, psi_diff, psi1_diff

# One shared (1+x) polynomial so every denominator factor built from it
# matches structurally inside FactoredFrac sums.
_XP1 = BiPoly.from_x_poly(Poly((1, 1)))


def binom_factor(shift: int, k: int) -> FactoredFrac:
    """C(s+shift, k) as a polynomial factor in s."""
    return FactoredFrac.from_ratfunc(binom_shift(shift, k))


def psi_factor(a: int, b: int) -> FactoredFrac:
    """psi(s+a) - psi(s+b) with the (s+j) poles kept as shared factors."""
    return FactoredFrac.from_ratfunc(psi_diff(a, b), [(j, 1) for j in range(b, a)])


def psi1_factor(a: int, b: int) -> FactoredFrac:
    """psi'(s+a) - psi'(s+b) with squared (s+j) poles kept as factors."""
    return FactoredFrac.from_ratfunc(psi1_diff(a, b), [(j, 2) for j in range(b, a)])


def onepx_pow(e: int) -> FactoredFrac:
    """(1+x)**e; a negative exponent keeps the power in the denominator."""
    if e >= 0:
        return FactoredFrac(_XP1 ** e)
    return FactoredFrac(BiPoly.one(), ((_XP1, -e),))


def xratio_pow(e: int) -> FactoredFrac:
    """(x/(1+x))**e for e >= 0, with the (1+x) factor shared."""
    if e < 0:
        raise ValueError("xratio_pow needs a nonnegative exponent")
    if e == 0:
        return FactoredFrac(BiPoly.one())
    return FactoredFrac(BiPoly.x(e), ((_XP1, e),))


_S = FactoredFrac.var_s()
_H = harmonic


def _H2(n: int) -> Fraction:
    return harmonic_gen(n, 2)


_C = binom_int


def _sgn(j: int) -> int:
    return 1 if j % 2 == 0 else -1


def _scalar(value) -> FactoredFrac:
    return FactoredFrac.from_scalar(value)


# ---------------------------------------------------------------------------
# Entry metadata
# ---------------------------------------------------------------------------

Params = Mapping[str, int]
SideBuilder = Callable[[int, Params], FactoredFrac]
SideEvaluator = Callable[..., BiFrac]


@dataclass(frozen=True)
class ParamSpec:
    """Descriptor for one extra integer parameter of an entry."""

    name: str
    minimum: int
    default_grid: tuple[int, ...]
    allowed: tuple[int, ...] | None = None

    def validate(self, value) -> None:
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"parameter {self.name} must be an integer")
        if value < self.minimum:
            raise ValueError(f"parameter {self.name} must be >= {self.minimum}")
        if self.allowed is not None and value not in self.allowed:
            raise ValueError(
                f"parameter {self.name} must be one of {sorted(self.allowed)}"
            )


@dataclass(frozen=True, eq=False)
class IdentityEntry:
    """One identity: tag, citation anchor, domain, and side evaluators.

    ``lhs`` and ``rhs`` map ``(n, params)`` to :class:`BiFrac`.  Entries
    with alternative right sides (INTRO-2) list them in ``rhs_variants``;
    variants named in ``expected_fail_variants`` are known-bad forms kept
    for auditability.
    """

    tag: str
    anchor: str
    domain: str
    lhs: SideEvaluator
    rhs: SideEvaluator
    n_min: int = 1
    extra_params: tuple[ParamSpec, ...] = ()
    rhs_variants: Mapping[str, SideEvaluator] = field(default_factory=dict)
    expected_fail_variants: frozenset = frozenset()
    note: str = ""

    @property
    def id(self) -> str:
        return self.tag

    def validate(self, n: int, params: Params) -> None:
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"n must be an integer for {self.tag}")
        if n < self.n_min:
            raise ValueError(f"n must be >= {self.n_min} for {self.tag}")
        specs = {sp.name: sp for sp in self.extra_params}
        for name in params:
            if name not in specs:
                raise ValueError(f"unknown parameter {name} for {self.tag}")
        for name, spec in specs.items():
            if name not in params:
                raise ValueError(f"missing parameter {name} for {self.tag}")
            spec.validate(params[name])

    def default_param_grid(self) -> tuple[dict, ...]:
        if not self.extra_params:
            return ({},)
        grids: tuple[dict, ...] = ({},)
        for spec in self.extra_params:
            grids = tuple(
                {**g, spec.name: v} for g in grids for v in spec.default_grid
            )
        return grids

    def rhs_for(self, variant: str | None) -> SideEvaluator:
        if variant is None:
            return self.rhs
        if variant not in self.rhs_variants:
            raise ValueError(f"{self.tag} has no variant {variant!r}")
        return self.rhs_variants[variant]


def _wrap(builder: SideBuilder) -> SideEvaluator:
    def run(n: int, params: Params | None = None) -> BiFrac:
        value = builder(n, dict(params or {}))
        if isinstance(value, FactoredFrac):
            return value.to_bifrac()
        return value

    return run


# ---------------------------------------------------------------------------
# Side builders.  Summation ranges and groupings follow the anchored
# statements term for term; simplification is left to the comparison.
# ---------------------------------------------------------------------------


def _lhs_thm21(n, p):
    return ffsum(binom_factor(n, k) * BiPoly.x(k) for k in range(n + 1))


def _rhs_thm21(n, p):
    inner = ffsum(
        binom_factor(k, k) * Fraction(1, k + 1) * xratio_pow(k + 1) for k in range(n)
    )
    return onepx_pow(n) * (1 + _S * inner)


def _lhs_thm22(n, p):
    return ffsum(
        binom_factor(n, k) * psi_factor(n + 1, n - k + 1) * BiPoly.x(k)
        for k in range(1, n + 1)
    )


def _rhs_thm22(n, p):
    return onepx_pow(n) * ffsum(
        binom_factor(k, k)
        * Fraction(1, k + 1)
        * (1 + _S * psi_factor(k + 1, 1))
        * xratio_pow(k + 1)
        for k in range(n)
    )


def _lhs_cor23(n, p):
    return ffsum(
        _sgn(k) * binom_factor(n, k) * psi_factor(n + 1, n - k + 1)
        for k in range(n + 1)
    )


def _rhs_cor23(n, p):
    return (
        Fraction(_sgn(n), n)
        * binom_factor(n - 1, n - 1)
        * (1 + _S * psi_factor(n, 1))
    )


def _lhs_thm24(n, p):
    return ffsum(
        binom_factor(n, k)
        * (psi_factor(n + 1, n - k + 1) ** 2 + psi1_factor(n + 1, n - k + 1))
        * BiPoly.x(k)
        for k in range(n + 1)
    )


def _rhs_thm24(n, p):
    def brace(k):
        d = psi_factor(k + 1, 1)
        return 2 * d + _S * (d ** 2 + psi1_factor(k + 1, 1))

    return onepx_pow(n) * ffsum(
        Fraction(1, k + 1) * binom_factor(k, k) * brace(k) * xratio_pow(k + 1)
        for k in range(n)
    )


def _lhs_cor25(n, p):
    return ffsum(
        _sgn(k)
        * binom_factor(n, k)
        * (psi_factor(n + 1, n - k + 1) ** 2 + psi1_factor(n + 1, n - k + 1))
        for k in range(n + 1)
    )


def _rhs_cor25(n, p):
    d = psi_factor(n, 1)
    return (
        Fraction(_sgn(n), n)
        * binom_factor(n - 1, n - 1)
        * (2 * d + _S * (d ** 2 + psi1_factor(n, 1)))
    )


def _lhs_thm26(n, p):
    return ffsum(
        binom_factor(n, k) * Fraction(_sgn(k - 1), k) for k in range(1, n + 1)
    )


def _rhs_thm26(n, p):
    inner = ffsum(
        binom_factor(k, k) * (Fraction(_sgn(k)) / ((k + 1) ** 2 * _C(n, k + 1)))
        for k in range(n)
    )
    return _H(n) + _S * inner


def _thm26_rhs_coeff(n, k):
    return binom_factor(k, k) * (Fraction(_sgn(k)) / ((k + 1) ** 2 * _C(n, k + 1)))


def _lhs_thm27(n, p):
    return ffsum(
        Fraction(_sgn(k - 1), k) * binom_factor(n, k) * psi_factor(n + 1, n - k + 1)
        for k in range(1, n + 1)
    )


def _rhs_thm27(n, p):
    first = ffsum(_thm26_rhs_coeff(n, k) for k in range(n))
    second = ffsum(_thm26_rhs_coeff(n, k) * psi_factor(k + 1, 1) for k in range(n))
    return first + _S * second


def _lhs_thm28(n, p):
    return ffsum(
        Fraction(_sgn(k - 1), k)
        * binom_factor(n, k)
        * (psi_factor(n + 1, n - k + 1) ** 2 + psi1_factor(n + 1, n - k + 1))
        for k in range(1, n + 1)
    )


def _rhs_thm28(n, p):
    first = ffsum(_thm26_rhs_coeff(n, k) * psi_factor(k + 1, 1) for k in range(n))
    second = ffsum(
        _thm26_rhs_coeff(n, k)
        * (psi_factor(k + 1, 1) ** 2 + psi1_factor(k + 1, 1))
        for k in range(n)
    )
    return 2 * first + _S * second


def _lhs_thm29(n, p):
    return ffsum(
        binom_factor(n, k) * Fraction(_sgn(k - 1), k * k) for k in range(1, n + 1)
    )


def _thm29_rhs_coeff(n, k):
    return binom_factor(k, k) * (
        Fraction(_sgn(k), k + 1) * (_H(n) - _H(k)) / ((n - k) * _C(n, k))
    )


def _rhs_thm29(n, p):
    inner = ffsum(_thm29_rhs_coeff(n, k) for k in range(n))
    return (_H(n) ** 2 + _H2(n)) / 2 + _S * inner


def _lhs_thm210(n, p):
    return ffsum(
        binom_factor(n, k)
        * Fraction(_sgn(k - 1), k * k)
        * psi_factor(n + 1, n - k + 1)
        for k in range(1, n + 1)
    )


def _rhs_thm210(n, p):
    first = ffsum(_thm29_rhs_coeff(n, k) for k in range(n))
    second = ffsum(_thm29_rhs_coeff(n, k) * psi_factor(k + 1, 1) for k in range(n))
    return first + _S * second


def _lhs_thm211(n, p):
    return ffsum(
        binom_factor(n, k)
        * Fraction(_sgn(k - 1), k * k)
        * (psi_factor(n + 1, n - k + 1) ** 2 + psi1_factor(n + 1, n - k + 1))
        for k in range(1, n + 1)
    )


def _rhs_thm211(n, p):
    first = ffsum(_thm29_rhs_coeff(n, k) * psi_factor(k + 1, 1) for k in range(n))
    second = ffsum(
        _thm29_rhs_coeff(n, k)
        * (psi_factor(k + 1, 1) ** 2 + psi1_factor(k + 1, 1))
        for k in range(n)
    )
    return 2 * first + _S * second


def _lhs_id1(n, p):
    return ffsum(_sgn(k) * binom_factor(n, k) for k in range(n + 1))


def _rhs_id1(n, p):
    return _sgn(n) * binom_factor(n - 1, n)


def _lhs_id2(n, p):
    return ffsum(_sgn(k) * binom_factor(0, k) for k in range(n + 1))


def _rhs_id2(n, p):
    return _sgn(n) * binom_factor(-1, n)


def _lhs_id3(n, p):
    return _scalar(sum((_C(2 * k, k) / 4 ** k for k in range(n + 1)), Fraction(0)))


def _rhs_id3(n, p):
    return _scalar(Fraction(2 * n + 1, 4 ** n) * _C(2 * n, n))


def _lhs_id4(n, p):
    return _scalar(
        sum(
            (_C(2 * k, k) / 4 ** k * (2 * _H(2 * k) - _H(k)) for k in range(1, n + 1)),
            Fraction(0),
        )
    )


def _rhs_id4(n, p):
    return _scalar(
        Fraction(2 * n + 1, 4 ** n)
        * _C(2 * n, n)
        * (2 * _H(2 * n) - _H(n) - Fraction(4 * n, 2 * n + 1))
    )


def _lhs_id5(n, p):
    return _scalar(
        sum((Fraction(_sgn(k - 1), k) * _C(n, k) for k in range(1, n + 1)), Fraction(0))
    )


def _rhs_id5(n, p):
    return _scalar(_H(n))


def _lhs_id6(n, p):
    return _scalar(
        sum(
            (Fraction(_sgn(k - 1), k) * _C(n, k) * _H(n - k) for k in range(1, n + 1)),
            Fraction(0),
        )
    )


def _rhs_id6(n, p):
    tail = sum(
        (Fraction(_sgn(k)) / (k * k * _C(n, k)) for k in range(1, n + 1)), Fraction(0)
    )
    return _scalar(_H(n) ** 2 + tail)


def _lhs_id7(n, p):
    return ffsum(
        FactoredFrac(BiPoly.x(k)) * (_C(n, k) * _H(n - k)) for k in range(n + 1)
    )


def _rhs_id7(n, p):
    inner = ffsum(xratio_pow(k) * Fraction(1, k) for k in range(1, n + 1))
    return onepx_pow(n) * (_H(n) - inner)


def _lhs_id8(n, p):
    return _scalar(sum((_C(n, k) * _H(k) for k in range(n + 1)), Fraction(0)))


def _rhs_id8(n, p):
    tail = sum((Fraction(1, k * 2 ** k) for k in range(1, n + 1)), Fraction(0))
    return _scalar(2 ** n * (_H(n) - tail))


def _lhs_id9(n, p):
    return ffsum(
        FactoredFrac(BiPoly.x(k)) * (_C(n, k) * (_H(k) ** 2 + _H2(k)))
        for k in range(1, n + 1)
    )


def _rhs_id9(n, p):
    inner = ffsum(
        FactoredFrac(BiPoly.one(), ((_XP1, k),))
        * (Fraction(1, k) * (_H(k - 1) - _H(n)))
        for k in range(1, n + 1)
    )
    return onepx_pow(n) * ((_H(n) ** 2 + _H2(n)) + 2 * inner)


def _lhs_id10(n, p):
    return _scalar(
        sum(
            (_sgn(k) * _C(n, k) * (_H(k) ** 2 + _H2(k)) for k in range(1, n + 1)),
            Fraction(0),
        )
    )


def _rhs_id10(n, p):
    return _scalar(Fraction(-2, n * n))


def _lhs_id11(n, p):
    return _scalar(
        sum((Fraction(_sgn(k)) / (k * _C(n, k)) for k in range(1, n + 1)), Fraction(0))
    )


def _rhs_id11(n, p):
    return _scalar(Fraction(_sgn(n) - 1, n + 1))


def _lhs_id12(n, p):
    return _scalar(
        sum(
            (
                Fraction(_sgn(k - 1), k) * _C(n, k) * (_H(n - k) ** 2 + _H2(n - k))
                for k in range(1, n + 1)
            ),
            Fraction(0),
        )
    )


def _rhs_id12(n, p):
    tail = sum(
        (
            _sgn(k) * (_H(n) - _H(k - 1)) / (k * k * _C(n, k))
            for k in range(1, n + 1)
        ),
        Fraction(0),
    )
    return _scalar(_H(n) ** 3 + _H(n) * _H2(n) + 2 * tail)


def _lhs_id13(n, p):
    m = p["m"]
    return _scalar(
        sum(
            (_sgn(k) * _C(m * n, k) * _H(m * n - k) for k in range(n + 1)), Fraction(0)
        )
    )


def _rhs_id13(n, p):
    m = p["m"]
    return _scalar(
        Fraction(_sgn(n), m)
        * _C(m * n, n)
        * ((m - 1) * _H((m - 1) * n) - Fraction(1, m * n))
    )


def _lhs_id15(n, p):
    return _scalar(
        sum(
            (_sgn(k) * _H(k) / (k * _C(n, k)) for k in range(1, n + 1)), Fraction(0)
        )
    )


def _rhs_id15(n, p):
    tail = sum(
        (Fraction(_sgn(k)) / (k * k * _C(n + 1, k)) for k in range(1, n + 2)),
        Fraction(0),
    )
    return _scalar(Fraction(_sgn(n)) * _H(n + 1) / (n + 1) + tail)


def _lhs_id16(n, p):
    return _scalar(
        sum(
            (_sgn(k - 1) * 4 ** k * _C(n, k) / _C(2 * k, k) for k in range(n + 1)),
            Fraction(0),
        )
    )


def _rhs_id16(n, p):
    return _scalar(Fraction(1, 2 * n - 1))


def _lhs_id17(n, p):
    return _scalar(
        sum(
            (_C(n, k) * Fraction(_sgn(k - 1), k * k) for k in range(1, n + 1)),
            Fraction(0),
        )
    )


def _rhs_id17(n, p):
    return _scalar((_H(n) ** 2 + _H2(n)) / 2)


def _lhs_id18(n, p):
    return _scalar(
        sum(
            (_sgn(k) * _H(n - k) / (k * _C(n, k)) for k in range(1, n + 1)),
            Fraction(0),
        )
    )


def _rhs_id18(n, p):
    return _scalar(Fraction(1 - _sgn(n), (n + 1) ** 2) - _H(n) / (n + 1))


def _lhs_id19(n, p):
    return _scalar(
        sum(
            (Fraction(_sgn(k - 1), k * k) * _C(n, k) * _H(n - k) for k in range(1, n + 1)),
            Fraction(0),
        )
    )


def _rhs_id19(n, p):
    tail = sum(
        (_sgn(k) * (_H(n) - _H(k)) / ((k + 1) * (n - k) * _C(n, k)) for k in range(n)),
        Fraction(0),
    )
    return _scalar(_H(n) * (_H(n) ** 2 + _H2(n)) / 2 - tail)


def _lhs_id20(n, p):
    return _scalar(
        sum(
            (
                Fraction(_sgn(k - 1), k * k)
                * _C(n, k)
                * (_H(n - k) ** 2 + _H2(n - k))
                for k in range(1, n + 1)
            ),
            Fraction(0),
        )
    )


def _rhs_id20(n, p):
    tail = sum(
        (
            _sgn(k) * (_H(n) - _H(k)) ** 2 / ((k + 1) * (n - k) * _C(n, k))
            for k in range(n)
        ),
        Fraction(0),
    )
    return _scalar((_H(n) ** 2 + _H2(n)) ** 2 / 2 - 2 * tail)


def _lhs_intro1(n, p):
    return _scalar(sum((_C(n, k) ** 2 * _H(k) for k in range(n + 1)), Fraction(0)))


def _rhs_intro1(n, p):
    return _scalar(_C(2 * n, n) * (2 * _H(n) - _H(2 * n)))


def _lhs_intro2(n, p):
    return _scalar(
        sum(
            (_sgn(k) * _C(n, k) * (_H(k) - 2 * _H(2 * k)) for k in range(n + 1)),
            Fraction(0),
        )
    )


def _rhs_intro2_printed(n, p):
    return _scalar(Fraction(4 ** n, n) * _C(2 * n, n) ** 2)


def _rhs_intro2_corrected(n, p):
    return _scalar(Fraction(4 ** n) / (n * _C(2 * n, n)))


def _lhs_intro3(n, p):
    return _scalar(
        sum((_sgn(k) * _C(n, k) * _H(n + k) ** 2 for k in range(n + 1)), Fraction(0))
    )


def _rhs_intro3(n, p):
    return _scalar((_H(n) - _H(2 * n) - Fraction(2, n)) / (n * _C(2 * n, n)))


# ---------------------------------------------------------------------------
# The catalog
# ---------------------------------------------------------------------------


def _entry(tag, anchor, domain, lhs, rhs, **kw) -> IdentityEntry:
    variants = kw.pop("rhs_variants", None)
    wrapped_variants = (
        {name: _wrap(b) for name, b in variants.items()} if variants else {}
    )
    return IdentityEntry(
        tag=tag,
        anchor=anchor,
        domain=domain,
        lhs=_wrap(lhs),
        rhs=_wrap(rhs),
        rhs_variants=wrapped_variants,
        **kw,
    )


_M_GRID = (ParamSpec("m", 2, (2, 3, 4, 5)),)
_M_PAIR = (ParamSpec("m", 2, (2, 3), allowed=(2, 3)),)

_ENTRIES: tuple[IdentityEntry, ...] = (
    _entry(
        "THM-2.1",
        'Eq. (14), "there holds the following identity"',
        "Q(s,x)",
        _lhs_thm21,
        _rhs_thm21,
    ),
    _entry(
        "THM-2.2",
        'Eq. (16), "$\\psi(s+n+1)-\\psi(s+n-k+1)\\}x^k$"',
        "Q(s,x)",
        _lhs_thm22,
        _rhs_thm22,
    ),
    _entry(
        "COR-2.3",
        'Eq. (17), "by taking $x=-1$"',
        "Q(s)",
        _lhs_cor23,
        _rhs_cor23,
    ),
    _entry(
        "THM-2.4",
        "Eq. (18), \"$\\psi'(s+n+1)-\\psi'(s+n-k+1)$\"",
        "Q(s,x)",
        _lhs_thm24,
        _rhs_thm24,
    ),
    _entry(
        "COR-2.5",
        'Eq. (19), "If we write Eq. (18) at $x=-1$"',
        "Q(s)",
        _lhs_cor25,
        _rhs_cor25,
    ),
    _entry(
        "THM-2.6",
        'Eq. (20), "$H_n+ s\\sum_{k=0}^{n-1}$"',
        "Q(s)",
        _lhs_thm26,
        _rhs_thm26,
    ),
    _entry(
        "THM-2.7",
        'Eq. (23), "follows immediately from differentiating both sides of (20)"',
        "Q(s)",
        _lhs_thm27,
        _rhs_thm27,
    ),
    _entry(
        "THM-2.8",
        'Eq. (24), "differentiate both sides of (23)"',
        "Q(s)",
        _lhs_thm28,
        _rhs_thm28,
    ),
    _entry(
        "THM-2.9",
        'Eq. (25), "$\\frac{H_n^2+H_n^{(2)}}{2}+s\\sum$"',
        "Q(s)",
        _lhs_thm29,
        _rhs_thm29,
    ),
    _entry(
        "THM-2.10",
        'Eq. (31), "differentiating both sides of the equation (25)"',
        "Q(s)",
        _lhs_thm210,
        _rhs_thm210,
    ),
    _entry(
        "THM-2.11",
        'Eq. (32), "differentiating both sides of the equation (31)"',
        "Q(s)",
        _lhs_thm211,
        _rhs_thm211,
    ),
    _entry(
        "ID-1",
        'Eq. (33), "$(-1)^n\\binom{s+n-1}{n}$"',
        "Q(s)",
        _lhs_id1,
        _rhs_id1,
    ),
    _entry(
        "ID-2",
        'Eq. (34), "the replacement $s\\to s-n$"',
        "Q(s)",
        _lhs_id2,
        _rhs_id2,
        note=(
            "The anchored statement restricts integer s to s >= n; both sides "
            "are polynomials in s, so symbolic equality holds with no "
            "restriction and the side condition is informational."
        ),
    ),
    _entry(
        "ID-3",
        '§3 Identity 3, "$\\frac{2n+1}{2^{2n}}\\binom{2n}{n}$"',
        "Q",
        _lhs_id3,
        _rhs_id3,
    ),
    _entry(
        "ID-4",
        '§3 Identity 4, "$2H_{2n}-H_n-\\frac{4n}{2n+1}$"',
        "Q",
        _lhs_id4,
        _rhs_id4,
    ),
    _entry(
        "ID-5",
        'Eq. (43), "originally due to Euler"',
        "Q",
        _lhs_id5,
        _rhs_id5,
    ),
    _entry(
        "ID-6",
        'Eq. (44), "$H_n^2+\\sum_{k=1}^{n}\\frac{(-1)^{k}}{k^2\\binom{n}{k}}$"',
        "Q",
        _lhs_id6,
        _rhs_id6,
    ),
    _entry(
        "ID-7",
        'Eq. (45), "$H_n-\\sum_{k=1}^{n}\\frac{1}{k}\\left(\\frac{x}{1+x}\\right)^k$"',
        "Q(x)",
        _lhs_id7,
        _rhs_id7,
    ),
    _entry(
        "ID-8",
        '§3 Identity 8, "$2^n\\left[H_n-\\sum_{k=1}^{n}\\frac{1}{k2^k}\\right]$"',
        "Q",
        _lhs_id8,
        _rhs_id8,
    ),
    _entry(
        "ID-9",
        'Eq. (48), "$H_n^2+H_n^{(2)}+2\\sum$"',
        "Q(x)",
        _lhs_id9,
        _rhs_id9,
    ),
    _entry(
        "ID-10",
        '§3 Identity 10, "$=-\\frac{2}{n^2}$"',
        "Q",
        _lhs_id10,
        _rhs_id10,
    ),
    _entry(
        "ID-11",
        'Eq. (51), "$\\frac{(-1)^n-1}{n+1}$"',
        "Q",
        _lhs_id11,
        _rhs_id11,
    ),
    _entry(
        "ID-12",
        '§3 Identity 12, "$H_n^3+H_nH_n^{(2)}+2\\sum$"',
        "Q",
        _lhs_id12,
        _rhs_id12,
    ),
    _entry(
        "ID-13",
        'Eq. (53), "$(m-1)H_{(m-1)n}-\\frac{1}{mn}$"',
        "Q",
        _lhs_id13,
        _rhs_id13,
        extra_params=_M_GRID,
    ),
    _entry(
        "ID-14",
        '§3 Identity 14, "$H_n-\\frac{1}{2n}$"',
        "Q",
        _lhs_id13,
        _rhs_id13,
        extra_params=_M_PAIR,
        note=(
            "Both cases restate the anchored general formula at m=2,3.  The "
            "anchored m=3 display shows 2H_n where the general formula gives "
            "2H_{2n}; the display fails at n=1 (-8/3 vs -5/3), so the general "
            "form is used here."
        ),
    ),
    _entry(
        "ID-15",
        '§3 Identity 15, "$\\frac{(-1)^{n}H_{n+1}}{n+1}+\\sum$"',
        "Q",
        _lhs_id15,
        _rhs_id15,
    ),
    _entry(
        "ID-16",
        '§3 Identity 16, "$\\frac{1}{2n-1}$"',
        "Q",
        _lhs_id16,
        _rhs_id16,
    ),
    _entry(
        "ID-17",
        'Eq. (61), "$\\frac{H_n^2+H_n^{(2)}}{2}$"',
        "Q",
        _lhs_id17,
        _rhs_id17,
    ),
    _entry(
        "ID-18",
        '§3 Identity 18, "$\\frac{1-(-1)^n}{(n+1)^2}-\\frac{H_n}{n+1}$"',
        "Q",
        _lhs_id18,
        _rhs_id18,
    ),
    _entry(
        "ID-19",
        'Eq. (65), "$\\frac{H_n\\left(H_n^2+H_n^{(2)}\\right)}{2}-\\sum$"',
        "Q",
        _lhs_id19,
        _rhs_id19,
    ),
    _entry(
        "ID-20",
        '§3 Identity 20, "$\\frac{\\left(H_n^2+H_n^{(2)}\\right)^2}{2}$"',
        "Q",
        _lhs_id20,
        _rhs_id20,
    ),
    _entry(
        "INTRO-1",
        '§1, "$\\binom{2n}{n}[2H_n-H_{2n}]$"',
        "Q",
        _lhs_intro1,
        _rhs_intro1,
    ),
    _entry(
        "INTRO-2",
        '§1, "$\\frac{4^n}{n}\\binom{2n}{n}^2$"',
        "Q",
        _lhs_intro2,
        _rhs_intro2_corrected,
        rhs_variants={
            "printed": _rhs_intro2_printed,
            "corrected": _rhs_intro2_corrected,
        },
        expected_fail_variants=frozenset({"printed"}),
        note=(
            "Variant 'printed' follows the anchored text and fails at n=1 "
            "(left 2, right 16).  Variant 'corrected' uses 4^n/(n*C(2n,n)), "
            "a derived repair that passes; it is also the default right side."
        ),
    ),
    _entry(
        "INTRO-3",
        '§1, "$H_n-H_{2n}-\\frac{2}{n}$"',
        "Q",
        _lhs_intro3,
        _rhs_intro3,
    ),
)

_BY_TAG = {e.tag: e for e in _ENTRIES}


def catalog() -> list[IdentityEntry]:
    """All entries, in catalog order."""
    return list(_ENTRIES)


def lookup(tag: str) -> IdentityEntry:
    try:
        return _BY_TAG[tag]
    except KeyError:
        raise KeyError(f"unknown identity tag {tag!r}") from None


def tags() -> list[str]:
    return [e.tag for e in _ENTRIES]


# ---------------------------------------------------------------------------
# Verification engine
# ---------------------------------------------------------------------------


def eval_side(
    entry: IdentityEntry,
    side: str,
    n: int,
    params: Params | None = None,
    variant: str | None = None,
) -> BiFrac:
    """Evaluate one side of an entry after validating n and params."""
    params = dict(params or {})
    entry.validate(n, params)
    key = side.strip().lower()
    if key == "lhs":
        return entry.lhs(n, params)
    if key == "rhs":
        return entry.rhs_for(variant)(n, params)
    raise ValueError("side must be 'LHS' or 'RHS'")


def _variant_plan(
    entry: IdentityEntry, variant: str | None
) -> list[tuple[str | None, bool]]:
    if variant is not None:
        if variant not in entry.rhs_variants:
            raise ValueError(f"{entry.tag} has no variant {variant!r}")
        # Explicitly selecting a variant asks for its true verdict, so the
        # expected-fail marking is dropped.
        return [(variant, False)]
    if entry.rhs_variants:
        return [
            (name, name in entry.expected_fail_variants)
            for name in sorted(entry.rhs_variants)
        ]
    return [(None, False)]


def _run_cell(
    tag: str,
    n: int,
    params: dict,
    variant: str | None,
    expected_fail: bool,
) -> ReportRow:
    entry = lookup(tag)
    start = time.perf_counter_ns()
    lhs = entry.lhs(n, params)
    rhs = entry.rhs_for(variant)(n, params)
    passed = bifrac_eq(lhs, rhs)
    elapsed = time.perf_counter_ns() - start
    witness = None if passed else make_witness(lhs, rhs)
    row_params = dict(params)
    if variant is not None:
        row_params["variant"] = variant
    return ReportRow(
        id=tag,
        n=n,
        params=row_params,
        passed=passed,
        expected_fail=expected_fail,
        witness=witness,
        elapsed_ns=elapsed,
    )


def _cell_args(args: tuple) -> ReportRow:
    return _run_cell(*args)


def plan_cells(
    entry: IdentityEntry,
    n_range: Sequence[int],
    params_range: Sequence[Params] | None = None,
    variant: str | None = None,
) -> list[tuple]:
    """Deterministic (tag, n, params, variant, expected_fail) work list."""
    grids = (
        [dict(p) for p in params_range]
        if params_range is not None
        else list(entry.default_param_grid())
    )
    if not grids or not len(n_range):
        raise ValueError("nonempty n and parameter ranges are required")
    cells = []
    for n in n_range:
        for params in grids:
            entry.validate(n, params)
            for name, expected_fail in _variant_plan(entry, variant):
                cells.append((entry.tag, n, dict(params), name, expected_fail))
    return cells


def verify(
    entry: IdentityEntry,
    n_range: Sequence[int],
    params_range: Sequence[Params] | None = None,
    variant: str | None = None,
    workers: int = 1,
) -> Report:
    """Check one entry over a grid; failures become report rows, not errors."""
    cells = plan_cells(entry, n_range, params_range, variant)
    return _execute(cells, workers)


def verify_all(
    n_max: int,
    *,
    n_min: int = 1,
    tags: Sequence[str] | None = None,
    bivariate_cap: int = 15,
    variant: str | None = None,
    workers: int = 1,
) -> Report:
    """Sweep the whole catalog (or a tag subset) up to n_max.

    Entries over Q(s,x) are capped at ``bivariate_cap`` to bound the
    cross-multiplication cost of the two-variable comparison.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    selected = [lookup(t) for t in tags] if tags is not None else list(_ENTRIES)
    cells: list[tuple] = []
    for entry in selected:
        top = min(n_max, bivariate_cap) if entry.domain == "Q(s,x)" else n_max
        lo = max(n_min, entry.n_min)
        if top < lo:
            continue
        cells.extend(plan_cells(entry, range(lo, top + 1), None, variant))
    return _execute(cells, workers)


def _execute(cells: list[tuple], workers: int) -> Report:
    report = Report()
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for row in pool.map(_cell_args, cells, chunksize=1):
                report.add(row)
    else:
        for cell in cells:
            report.add(_cell_args(cell))
    return report
