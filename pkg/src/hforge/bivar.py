"""Sparse bivariate polynomials in (x, s) and unreduced bivariate fractions.

``BiPoly`` maps ``(x_degree, s_degree)`` pairs to nonzero rational
coefficients.  ``BiFrac`` is a quotient of two ``BiPoly`` values that is
*never* reduced by a multivariate gcd; equality is decided by
cross-multiplication (``a/b == c/d`` iff ``a*d == c*b``), with only cheap
opportunistic stripping of shared rational content and shared monomials.

``FactoredFrac`` is the internal evaluation workhorse: a fraction whose
denominator is kept as a list of (factor, multiplicity) pairs so that long
summations can reuse structurally shared factors such as ``s + j`` and
``x + 1`` instead of letting cross-multiplied denominators grow
quadratically.  It converts to ``BiFrac`` for comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .exact import (
    Poly,
    PoleError,
    RatFunc,
    ZeroDenominatorError,
    _as_fraction,
)

Key = tuple[int, int]  # (x degree, s degree)


def _fgcd(a: Fraction, b: Fraction) -> Fraction:
    """Positive gcd on rationals: gcd(a/b, c/d) generates the same Z-module."""
    if not a:
        return abs(b)
    if not b:
        return abs(a)
    return Fraction(
        math.gcd(a.numerator * b.denominator, b.numerator * a.denominator),
        a.denominator * b.denominator,
    )


class BiPoly:
    """Sparse bivariate polynomial; no zero coefficients are stored."""

    __slots__ = ("terms", "_intform", "_hash")

    def __init__(self, terms: Mapping[Key, Union[int, Fraction]] = ()):
        clean: dict[Key, Fraction] = {}
        src = terms.items() if isinstance(terms, Mapping) else terms
        for (ix, js), c in src:
            c = _as_fraction(c)
            if c:
                k = (int(ix), int(js))
                v = clean.get(k)
                nv = c if v is None else v + c
                if nv:
                    clean[k] = nv
                elif v is not None:
                    del clean[k]
        self.terms: dict[Key, Fraction] = clean
        self._intform = None
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Key, Fraction]) -> "BiPoly":
        out = cls.__new__(cls)
        out.terms = terms
        out._intform = None
        out._hash = None
        return out

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls._raw({(0, 0): Fraction(1)})

    @classmethod
    def const(cls, c) -> "BiPoly":
        c = _as_fraction(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def x(cls, e: int = 1) -> "BiPoly":
        return cls._raw({(e, 0): Fraction(1)})

    @classmethod
    def s(cls, e: int = 1) -> "BiPoly":
        return cls._raw({(0, e): Fraction(1)})

    @classmethod
    def from_s_poly(cls, p: Poly) -> "BiPoly":
        return cls._raw({(0, j): c for j, c in enumerate(p.coeffs) if c})

    @classmethod
    def from_x_poly(cls, p: Poly) -> "BiPoly":
        return cls._raw({(i, 0): c for i, c in enumerate(p.coeffs) if c})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def as_constant(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if self.is_constant():
            return self.terms[(0, 0)]
        raise ValueError("not a constant")

    @property
    def deg_x(self) -> int:
        return max((k[0] for k in self.terms), default=-1)

    @property
    def deg_s(self) -> int:
        return max((k[1] for k in self.terms), default=-1)

    def min_x(self) -> int:
        return min((k[0] for k in self.terms), default=0)

    def min_s(self) -> int:
        return min((k[1] for k in self.terms), default=0)

    def content(self) -> Fraction:
        g = Fraction(0)
        for c in self.terms.values():
            g = _fgcd(g, c)
            if g == 1:
                break
        return g

    # -- arithmetic --------------------------------------------------------

    def _promote(self, other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        if not self.terms:
            return o
        if not o.terms:
            return self
        out = dict(self.terms)
        for k, c in o.terms.items():
            v = out.get(k)
            nv = c if v is None else v + c
            if nv:
                out[k] = nv
            elif v is not None:
                del out[k]
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "BiPoly":
        c = _as_fraction(c)
        if not c:
            return BiPoly.zero()
        if c == 1:
            return self
        return BiPoly._raw({k: v * c for k, v in self.terms.items()})

    def _int_form(self) -> tuple[Fraction, dict[Key, int]]:
        """Cached (content, primitive-integer-terms) decomposition."""
        if self._intform is None:
            if not self.terms:
                self._intform = (Fraction(0), {})
            else:
                scale = 1
                for c in self.terms.values():
                    scale = scale * c.denominator // math.gcd(scale, c.denominator)
                ints = {k: int(c * scale) for k, c in self.terms.items()}
                g = 0
                for v in ints.values():
                    g = math.gcd(g, v)
                    if g == 1:
                        break
                self._intform = (
                    Fraction(g, scale),
                    ints if g == 1 else {k: v // g for k, v in ints.items()},
                )
        return self._intform

    def __mul__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return BiPoly.zero()
        if o.is_constant():
            return self.scale(o.terms[(0, 0)])
        if self.is_constant():
            return o.scale(self.terms[(0, 0)])
        ca, ta = self._int_form()
        cb, tb = o._int_form()
        if len(ta) < len(tb):
            ta, tb = tb, ta
        out: dict[Key, int] = {}
        items_b = list(tb.items())
        for (xa, sa), va in ta.items():
            for (xb, sb), vb in items_b:
                k = (xa + xb, sa + sb)
                v = out.get(k)
                out[k] = va * vb if v is None else v + va * vb
        scale = ca * cb
        return BiPoly._raw({k: scale * v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers take nonnegative integer exponents")
        result = BiPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- evaluation / substitution ----------------------------------------

    def eval_x(self, x0) -> "BiPoly":
        """Collapse the x variable at a rational point; result is s-only."""
        x0 = _as_fraction(x0)
        powers: dict[int, Fraction] = {}
        out: dict[Key, Fraction] = {}
        for (ix, js), c in self.terms.items():
            p = powers.get(ix)
            if p is None:
                p = x0 ** ix
                powers[ix] = p
            k = (0, js)
            v = out.get(k)
            nv = c * p if v is None else v + c * p
            if nv:
                out[k] = nv
            elif v is not None:
                del out[k]
        return BiPoly._raw(out)

    def eval_s(self, s0) -> "BiPoly":
        s0 = _as_fraction(s0)
        powers: dict[int, Fraction] = {}
        out: dict[Key, Fraction] = {}
        for (ix, js), c in self.terms.items():
            p = powers.get(js)
            if p is None:
                p = s0 ** js
                powers[js] = p
            k = (ix, 0)
            v = out.get(k)
            nv = c * p if v is None else v + c * p
            if nv:
                out[k] = nv
            elif v is not None:
                del out[k]
        return BiPoly._raw(out)

    def eval(self, s0, x0) -> Fraction:
        v = self.eval_x(x0).eval_s(s0)
        return v.as_constant()

    def synth_div_x(self, x0) -> "BiPoly":
        """Exact division by ``x - x0``; raises if the remainder is nonzero."""
        x0 = _as_fraction(x0)
        cols: dict[int, dict[int, Fraction]] = {}
        for (ix, js), c in self.terms.items():
            cols.setdefault(ix, {})[js] = c
        d = max(cols, default=-1)
        out: dict[Key, Fraction] = {}
        carry: dict[int, Fraction] = {}
        for i in range(d, 0, -1):
            col = cols.get(i, {})
            q: dict[int, Fraction] = dict(carry)
            for js, c in col.items():
                v = q.get(js)
                nv = c if v is None else v + c
                if nv:
                    q[js] = nv
                elif v is not None:
                    del q[js]
            for js, c in q.items():
                out[(i - 1, js)] = c
            carry = {js: c * x0 for js, c in q.items()}
        rem = dict(carry)
        for js, c in cols.get(0, {}).items():
            v = rem.get(js)
            nv = c if v is None else v + c
            if nv:
                rem[js] = nv
            elif v is not None:
                del rem[js]
        if rem:
            raise ValueError("inexact division by linear x factor")
        return BiPoly._raw(out)

    def synth_div_s(self, s0) -> "BiPoly":
        """Exact division by ``s - s0``; raises if the remainder is nonzero."""
        s0 = _as_fraction(s0)
        cols: dict[int, dict[int, Fraction]] = {}
        for (ix, js), c in self.terms.items():
            cols.setdefault(js, {})[ix] = c
        d = max(cols, default=-1)
        out: dict[Key, Fraction] = {}
        carry: dict[int, Fraction] = {}
        for j in range(d, 0, -1):
            col = cols.get(j, {})
            q: dict[int, Fraction] = dict(carry)
            for ix, c in col.items():
                v = q.get(ix)
                nv = c if v is None else v + c
                if nv:
                    q[ix] = nv
                elif v is not None:
                    del q[ix]
            for ix, c in q.items():
                out[(ix, j - 1)] = c
            carry = {ix: c * s0 for ix, c in q.items()}
        rem = dict(carry)
        for ix, c in cols.get(0, {}).items():
            v = rem.get(ix)
            nv = c if v is None else v + c
            if nv:
                rem[ix] = nv
            elif v is not None:
                del rem[ix]
        if rem:
            raise ValueError("inexact division by linear s factor")
        return BiPoly._raw(out)

    def shift_down(self, dx: int, ds: int) -> "BiPoly":
        """Exact division by the monomial ``x^dx * s^ds``."""
        if not dx and not ds:
            return self
        return BiPoly._raw({(ix - dx, js - ds): c for (ix, js), c in self.terms.items()})

    def deriv_s(self) -> "BiPoly":
        return BiPoly._raw(
            {(ix, js - 1): c * js for (ix, js), c in self.terms.items() if js}
        )

    def to_s_poly(self) -> Poly:
        if self.deg_x > 0:
            raise ValueError("not univariate in s")
        coeffs = [Fraction(0)] * (self.deg_s + 1)
        for (_, js), c in self.terms.items():
            coeffs[js] = c
        return Poly(coeffs)

    def to_x_poly(self) -> Poly:
        if self.deg_s > 0:
            raise ValueError("not univariate in x")
        coeffs = [Fraction(0)] * (self.deg_x + 1)
        for (ix, _), c in self.terms.items():
            coeffs[ix] = c
        return Poly(coeffs)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (ix, js) in sorted(
            self.terms, key=lambda k: (-(k[0] + k[1]), -k[0], -k[1])
        ):
            c = self.terms[(ix, js)]
            monos = []
            if ix:
                monos.append("x" if ix == 1 else f"x^{ix}")
            if js:
                monos.append("s" if js == 1 else f"s^{js}")
            body = "*".join(monos)
            if not body:
                mono = str(abs(c))
            elif abs(c) == 1:
                mono = body
            else:
                mono = f"{abs(c)}*{body}"
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
        return " ".join(parts)

    def __repr__(self):
        return f"BiPoly({self})"


class BiFrac:
    """Unreduced bivariate fraction with cross-multiplication equality.

    Construction strips shared rational content and shared monomials (cheap,
    size-controlling) and normalizes the sign of the denominator's leading
    term, but never runs a polynomial gcd.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = self._coerce(num)
        den = BiPoly.one() if den is None else self._coerce(den)
        if den.is_zero():
            raise ZeroDenominatorError("bivariate fraction with zero denominator")
        if num.is_zero():
            self.num, self.den = BiPoly.zero(), BiPoly.one()
            return
        g = _fgcd(num.content(), den.content())
        mx = min(num.min_x(), den.min_x())
        ms = min(num.min_s(), den.min_s())
        lead_key = max(den.terms, key=lambda k: (k[0] + k[1], k[0], k[1]))
        if den.terms[lead_key] < 0:
            g = -g
        if g != 1:
            inv = 1 / g
            num = num.scale(inv)
            den = den.scale(inv)
        if mx or ms:
            num = num.shift_down(mx, ms)
            den = den.shift_down(mx, ms)
        self.num, self.den = num, den

    @staticmethod
    def _coerce(v) -> BiPoly:
        if isinstance(v, BiPoly):
            return v
        if isinstance(v, (int, Fraction)):
            return BiPoly.const(v)
        raise TypeError(f"cannot build a bivariate fraction from {type(v).__name__}")

    @classmethod
    def from_rational(cls, c) -> "BiFrac":
        return cls(BiPoly.const(c))

    @classmethod
    def from_ratfunc(cls, rf: RatFunc) -> "BiFrac":
        return cls(BiPoly.from_s_poly(rf.num), BiPoly.from_s_poly(rf.den))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant fraction")
        return self.num.as_constant() / self.den.as_constant()

    @property
    def deg_x(self) -> int:
        return max(self.num.deg_x, self.den.deg_x)

    @property
    def deg_s(self) -> int:
        return max(self.num.deg_s, self.den.deg_s)

    # -- arithmetic --------------------------------------------------------

    def _promote(self, other) -> "BiFrac | None":
        if isinstance(other, BiFrac):
            return other
        if isinstance(other, (int, Fraction, BiPoly)):
            return BiFrac(other)
        if isinstance(other, RatFunc):
            return BiFrac.from_ratfunc(other)
        return None

    def __add__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return BiFrac(self.num + o.num, self.den)
        return BiFrac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        out = BiFrac.__new__(BiFrac)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return BiFrac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDenominatorError("division by the zero fraction")
        return BiFrac(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise ValueError("fraction powers take integer exponents")
        if e >= 0:
            return BiFrac(self.num ** e, self.den ** e)
        if self.num.is_zero():
            raise ZeroDenominatorError("zero fraction has no inverse")
        return BiFrac(self.den ** (-e), self.num ** (-e))

    def deriv_s(self) -> "BiFrac":
        """Formal partial derivative in s via the quotient rule (unreduced)."""
        n, d = self.num, self.den
        return BiFrac(n.deriv_s() * d - n * d.deriv_s(), d * d)

    # -- substitution ------------------------------------------------------

    def subst_x(self, x0) -> "BiFrac":
        """Substitute a rational value for x, cancelling removable zeros.

        Shared roots of numerator and denominator at ``x0`` are removed by
        exact division by ``x - x0`` (ordinary synthetic division, not a
        gcd); a surviving denominator root raises :class:`PoleError`.
        """
        x0 = _as_fraction(x0)
        num, den = self.num, self.den
        while True:
            dv = den.eval_x(x0)
            if not dv.is_zero():
                return BiFrac(num.eval_x(x0), dv)
            if not num.eval_x(x0).is_zero():
                raise PoleError(x0, var="x")
            num = num.synth_div_x(x0)
            den = den.synth_div_x(x0)

    def subst_s(self, s0) -> "BiFrac":
        s0 = _as_fraction(s0)
        num, den = self.num, self.den
        while True:
            dv = den.eval_s(s0)
            if not dv.is_zero():
                return BiFrac(num.eval_s(s0), dv)
            if not num.eval_s(s0).is_zero():
                raise PoleError(s0, var="s")
            num = num.synth_div_s(s0)
            den = den.synth_div_s(s0)

    def eval(self, s0, x0) -> Fraction:
        return self.subst_x(x0).subst_s(s0).as_constant()

    def to_ratfunc(self) -> RatFunc:
        if self.num.deg_x > 0 or self.den.deg_x > 0:
            raise ValueError("fraction depends on x")
        return RatFunc(self.num.to_s_poly(), self.den.to_s_poly())

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        # hash-compatible with cross-multiplication equality only for the
        # stripped canonical-ish form; adequate because hashing is only used
        # incidentally (never as a semantic equality shortcut)
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_constant() and self.den.as_constant() == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"BiFrac({self})"


def bifrac_eq(a: BiFrac, b: BiFrac) -> bool:
    """Cross-multiplication equality: a.num*b.den == b.num*a.den."""
    return a == b


def cross_difference(a: BiFrac, b: BiFrac) -> BiPoly:
    """The polynomial a.num*b.den - b.num*a.den (zero iff the values agree)."""
    return a.num * b.den - b.num * a.den


class FactoredFrac:
    """Fraction with the denominator kept as (factor, multiplicity) pairs.

    Addition builds the factorwise least common denominator by structural
    factor matching, so repeated sums over ``1/(s+j)``- and ``1/(x+1)``-style
    terms never cross-multiply full denominators.  Purely an evaluation
    intermediate: comparisons go through :meth:`to_bifrac`.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: Iterable[tuple[BiPoly, int]] = ()):
        if num.is_zero():
            self.num, self.den = BiPoly.zero(), ()
            return
        clean: list[tuple[BiPoly, int]] = []
        for f, m in den:
            m = int(m)
            if m <= 0:
                continue
            if f.is_zero():
                raise ZeroDenominatorError("zero denominator factor")
            if f.is_constant():
                num = num.scale(f.as_constant() ** -m)
                continue
            for i, (g, mg) in enumerate(clean):
                if g == f:
                    clean[i] = (g, mg + m)
                    break
            else:
                clean.append((f, m))
        self.num, self.den = num, tuple(clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_scalar(cls, c) -> "FactoredFrac":
        return cls(BiPoly.const(c))

    @classmethod
    def var_x(cls) -> "FactoredFrac":
        return cls(BiPoly.x())

    @classmethod
    def var_s(cls) -> "FactoredFrac":
        return cls(BiPoly.s())

    @classmethod
    def from_ratfunc(
        cls, rf: RatFunc, linear_roots: Iterable[tuple[int, int]] | None = None
    ) -> "FactoredFrac":
        """Embed a reduced rational function.

        ``linear_roots`` lists (j, multiplicity) pairs asserting that the
        denominator is exactly ``prod (s+j)^multiplicity``; the factors are
        peeled off by exact division so they can be shared structurally.
        """
        num = BiPoly.from_s_poly(rf.num)
        if rf.den.is_one() or rf.num.is_zero():
            return cls(num)
        if linear_roots is None:
            return cls(num, ((BiPoly.from_s_poly(rf.den), 1),))
        den = rf.den
        factors = []
        for j, m in linear_roots:
            lin = Poly.linear(j)
            for _ in range(m):
                den = den.div_exact(lin)
            factors.append((BiPoly.from_s_poly(lin), m))
        if not den.is_one():
            raise ValueError("denominator not exhausted by the declared roots")
        return cls(num, factors)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and not self.den

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.as_constant()

    def _mult_of(self, f: BiPoly) -> int:
        for g, m in self.den:
            if g == f:
                return m
        return 0

    # -- arithmetic --------------------------------------------------------

    @classmethod
    def _promote(cls, v) -> "FactoredFrac | None":
        if isinstance(v, FactoredFrac):
            return v
        if isinstance(v, (int, Fraction)):
            return cls.from_scalar(v)
        if isinstance(v, BiPoly):
            return cls(v)
        if isinstance(v, RatFunc):
            return cls.from_ratfunc(v)
        return None

    def __add__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero():
            return o
        if o.num.is_zero():
            return self
        merged: list[tuple[BiPoly, int]] = list(self.den)
        for f, m in o.den:
            for i, (g, mg) in enumerate(merged):
                if g == f:
                    if m > mg:
                        merged[i] = (g, m)
                    break
            else:
                merged.append((f, m))
        num_a = self.num
        for f, m in merged:
            deficit = m - self._mult_of(f)
            if deficit:
                num_a = num_a * f ** deficit
        num_b = o.num
        for f, m in merged:
            deficit = m - o._mult_of(f)
            if deficit:
                num_b = num_b * f ** deficit
        return FactoredFrac(num_a + num_b, merged)

    __radd__ = __add__

    def __neg__(self):
        out = FactoredFrac.__new__(FactoredFrac)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return FactoredFrac(BiPoly.zero())
        merged = list(self.den)
        for f, m in o.den:
            for i, (g, mg) in enumerate(merged):
                if g == f:
                    merged[i] = (g, mg + m)
                    break
            else:
                merged.append((f, m))
        return FactoredFrac(self.num * o.num, merged)

    __rmul__ = __mul__

    def inverse(self) -> "FactoredFrac":
        if self.num.is_zero():
            raise ZeroDenominatorError("inverse of zero")
        new_num = BiPoly.one()
        for f, m in self.den:
            new_num = new_num * f ** m
        num = self.num
        if num.is_constant():
            return FactoredFrac(new_num.scale(1 / num.as_constant()))
        c = num.content()
        prim = num.scale(1 / c)
        mx, ms = prim.min_x(), prim.min_s()
        factors: list[tuple[BiPoly, int]] = []
        if mx or ms:
            prim = prim.shift_down(mx, ms)
            if mx:
                factors.append((BiPoly.x(), mx))
            if ms:
                factors.append((BiPoly.s(), ms))
        if not prim.is_constant():
            factors.append((prim, 1))
        else:
            c = c * prim.as_constant()
        return FactoredFrac(new_num.scale(1 / c), factors)

    def __truediv__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise ValueError("fraction powers take integer exponents")
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return FactoredFrac(BiPoly.one())
        return FactoredFrac(self.num ** e, tuple((f, m * e) for f, m in self.den))

    # -- conversion --------------------------------------------------------

    def to_bifrac(self) -> BiFrac:
        den = BiPoly.one()
        for f, m in self.den:
            den = den * f ** m
        return BiFrac(self.num, den)

    def __str__(self):
        if not self.den:
            return str(self.num)
        dens = " * ".join(
            f"({f})" if m == 1 else f"({f})^{m}" for f, m in self.den
        )
        return f"({self.num}) / [{dens}]"

    def __repr__(self):
        return f"FactoredFrac({self})"


def ffsum(values: Iterable) -> FactoredFrac:
    """Sum of factored fractions; the empty sum is zero."""
    acc = FactoredFrac(BiPoly.zero())
    for v in values:
        acc = acc + v
    return acc
