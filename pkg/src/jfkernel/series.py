"""Sparse truncated Puiseux series in q = e^{2 pi i tau}.

Exponents are exact rationals (denominators 24 for eta, r^2/4m for theta
components, and whatever products create), coefficients live in Q(zeta_24).
A series carries a validity bound ``valid_below``: all terms with exponent
strictly below the bound are exactly known, nothing is asserted at or above
it.  Truncation bookkeeping through arithmetic:

* add/sub:   bound = min of the two bounds;
* mul:       bound = min(a.bound + val(b), b.bound + val(a)), where val is
             the least stored exponent and val(zero) is the zero's bound;
* division:  see :func:`div_exact`.

All tau-derivatives are normalised: D = (1/2 pi i) d/dtau = q d/dq, acting
term-wise as c q^a -> a c q^a (:func:`euler_d`).  Storing hatted derivatives
keeps every identity in the package inside Q(zeta_24).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CYC24, CycNumber, coerce24


class ExactDivisionError(ArithmeticError):
    """Raised when a series division cannot be performed exactly."""


@dataclass(frozen=True)
class FormMeta:
    """Descriptive metadata attached to a series; never alters arithmetic.

    ``character`` is a symbolic tag such as "trivial", "omega_m",
    "omega_m_bar" or "chi*omega_m_bar"; ``kind`` is one of "modular",
    "cuspidal", "theta-component", "unchecked".  ``source`` records which
    construction produced the series.
    """

    weight: Fraction | None = None
    index: int | None = None
    level: int | None = None
    character: str | None = None
    kind: str | None = None
    source: str | None = None

    def to_json(self):
        out = {}
        if self.weight is not None:
            out["weight"] = _frac_str(Fraction(self.weight))
        if self.index is not None:
            out["index"] = self.index
        if self.level is not None:
            out["level"] = self.level
        if self.character is not None:
            out["character"] = self.character
        if self.kind is not None:
            out["kind"] = self.kind
        if self.source is not None:
            out["source"] = self.source
        return out

    @staticmethod
    def from_json(obj):
        if obj is None:
            return None
        return FormMeta(
            weight=Fraction(obj["weight"]) if "weight" in obj else None,
            index=obj.get("index"),
            level=obj.get("level"),
            character=obj.get("character"),
            kind=obj.get("kind"),
            source=obj.get("source"),
        )


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _as_coeff(c) -> CycNumber:
    return coerce24(c)


class PuiseuxSeries:
    """A truncated q-series with rational exponents and Q(zeta_24) coefficients.

    Instances are treated as immutable; operations return new series and
    never modify their arguments.
    """

    __slots__ = ("terms", "valid_below", "meta")

    def __init__(self, terms, valid_below, meta: FormMeta | None = None):
        vb = Fraction(valid_below)
        clean = {}
        for e, c in terms.items() if isinstance(terms, dict) else terms:
            e = Fraction(e)
            if e >= vb:
                continue
            c = _as_coeff(c)
            if not c.is_zero():
                clean[e] = c
        self.terms = clean
        self.valid_below = vb
        self.meta = meta

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(valid_below, meta=None) -> "PuiseuxSeries":
        return PuiseuxSeries({}, valid_below, meta)

    @staticmethod
    def one(valid_below, meta=None) -> "PuiseuxSeries":
        return PuiseuxSeries({Fraction(0): CYC24.one}, valid_below, meta)

    @staticmethod
    def monomial(coeff, exponent, valid_below, meta=None) -> "PuiseuxSeries":
        return PuiseuxSeries({Fraction(exponent): coeff}, valid_below, meta)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def val(self) -> Fraction:
        """Least stored exponent; for the zero series, the validity bound."""
        return min(self.terms) if self.terms else self.valid_below

    def coeff(self, exponent) -> CycNumber:
        return self.terms.get(Fraction(exponent), CYC24.zero)

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda t: t[0])

    def exponents(self):
        return sorted(self.terms)

    def with_meta(self, meta: FormMeta | None) -> "PuiseuxSeries":
        out = PuiseuxSeries.__new__(PuiseuxSeries)
        out.terms = self.terms
        out.valid_below = self.valid_below
        out.meta = meta
        return out

    def truncate(self, bound) -> "PuiseuxSeries":
        """Restrict to exponents below ``bound`` (must not exceed the bound)."""
        bound = Fraction(bound)
        if bound > self.valid_below:
            raise ValueError("cannot extend a series beyond its validity bound")
        return PuiseuxSeries(self.terms, bound, self.meta)

    # -- equality -----------------------------------------------------------

    def agreement_bound(self, other) -> Fraction:
        return min(self.valid_below, other.valid_below)

    def same_below(self, other, bound=None) -> bool:
        """Term-exact agreement strictly below ``bound``.

        The default bound is the common validity bound; asking for more than
        either series knows raises.
        """
        if bound is None:
            bound = self.agreement_bound(other)
        bound = Fraction(bound)
        if bound > self.valid_below or bound > other.valid_below:
            raise ValueError("comparison bound exceeds a validity bound")
        for e, c in self.terms.items():
            if e < bound and other.terms.get(e) != c:
                return False
        for e, c in other.terms.items():
            if e < bound and e not in self.terms:
                return False
        return True

    def first_difference(self, other, bound=None):
        """Smallest exponent below ``bound`` where the two series differ."""
        if bound is None:
            bound = self.agreement_bound(other)
        bound = Fraction(bound)
        exps = set(self.terms) | set(other.terms)
        for e in sorted(exps):
            if e >= bound:
                break
            if self.terms.get(e, CYC24.zero) != other.terms.get(e, CYC24.zero):
                return e
        return None

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self.valid_below == other.valid_below and self.terms == other.terms

    __hash__ = None

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        vb = min(self.valid_below, other.valid_below)
        out = {e: c for e, c in self.terms.items() if e < vb}
        for e, c in other.terms.items():
            if e < vb:
                s = out.get(e)
                out[e] = c if s is None else s + c
        return PuiseuxSeries(out, vb)

    def __sub__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        out = PuiseuxSeries.__new__(PuiseuxSeries)
        out.terms = {e: -c for e, c in self.terms.items()}
        out.valid_below = self.valid_below
        out.meta = self.meta
        return out

    def __mul__(self, other):
        if isinstance(other, PuiseuxSeries):
            vb = min(self.valid_below + other.val(), other.valid_below + self.val())
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = e1 + e2
                    if e < vb:
                        p = c1 * c2
                        s = out.get(e)
                        out[e] = p if s is None else s + p
            return PuiseuxSeries(out, vb)
        if isinstance(other, (int, Fraction, CycNumber)):
            c0 = _as_coeff(other)
            return PuiseuxSeries({e: c * c0 for e, c in self.terms.items()}, self.valid_below, self.meta)
        return NotImplemented

    __rmul__ = __mul__

    # -- rendering ------------------------------------------------------------

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<PuiseuxSeries {self.to_text(max_terms=6)} (below q^{self.valid_below})>"

    def to_text(self, var: str = "q", max_terms: int | None = None) -> str:
        items = self.items_sorted()
        if max_terms is not None and len(items) > max_terms:
            items = items[:max_terms]
            tail = " + ..."
        else:
            tail = ""
        if not items:
            return "0"
        parts = []
        for e, c in items:
            parts.append(_term_text(c, e, var))
        text = parts[0] if not parts[0].startswith("+") else parts[0][1:]
        for p in parts[1:]:
            if p.startswith("-"):
                text += " - " + p[1:]
            else:
                text += " + " + p
        return text + tail

    # -- serialization ----------------------------------------------------------

    def to_json(self):
        return {
            "valid_below": _frac_str(self.valid_below),
            "terms": [
                {"exp": _frac_str(e), "coeff": c.to_json()} for e, c in self.items_sorted()
            ],
            "meta": self.meta.to_json() if self.meta is not None else None,
        }

    @staticmethod
    def from_json(obj) -> "PuiseuxSeries":
        terms = {Fraction(t["exp"]): CycNumber.from_json(t["coeff"]) for t in obj["terms"]}
        return PuiseuxSeries(terms, Fraction(obj["valid_below"]), FormMeta.from_json(obj.get("meta")))


def _term_text(c: CycNumber, e: Fraction, var: str) -> str:
    if e == 0:
        return str(c)
    if e.denominator == 1:
        mono = var if e == 1 else f"{var}^{e.numerator}"
    else:
        mono = f"{var}^({e.numerator}/{e.denominator})"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    cs = str(c)
    if "+" in cs[1:] or "-" in cs[1:] or "[" in cs:
        cs = f"({cs})"
    return f"{cs}*{mono}"


# ---------------------------------------------------------------------------
# Operators


def euler_d(a: PuiseuxSeries) -> PuiseuxSeries:
    """The normalised derivative D = q d/dq: c q^e -> e c q^e."""
    return PuiseuxSeries({e: c * e for e, c in a.terms.items()}, a.valid_below, a.meta)


def dilate(a: PuiseuxSeries, m: int) -> PuiseuxSeries:
    """Substitute tau -> m tau: every exponent (and the bound) scales by m."""
    if m < 1:
        raise ValueError("dilation factor must be a positive integer")
    return PuiseuxSeries(
        {e * m: c for e, c in a.terms.items()}, a.valid_below * m, a.meta
    )


def div_exact(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    """Quotient c with c*b = a term-exactly on the inferred valid range.

    The divisor must have a nonzero leading coefficient inside its valid
    range.  The quotient bound is
    min(a.valid_below, b.valid_below + val(a) - val(b)) - val(b), which makes
    the round trip div_exact(a*b, b) = a hold term-exactly.
    """
    if b.is_zero():
        raise ExactDivisionError("division by a series that is zero on its valid range")
    vb_b = b.val()
    lead = b.terms[vb_b]
    vb = min(a.valid_below, b.valid_below + a.val() - vb_b) - vb_b
    rem = dict(a.terms)
    out = {}
    lead_inv = lead.inverse()
    b_items = sorted(b.terms.items())
    while rem:
        e = min(rem)
        ce = rem.pop(e)
        eq = e - vb_b
        if eq >= vb:
            break
        cq = ce * lead_inv
        out[eq] = cq
        for eb, cb in b_items[1:]:
            et = eq + eb
            s = rem.get(et)
            v = (s if s is not None else CYC24.zero) - cq * cb
            if v.is_zero():
                rem.pop(et, None)
            else:
                rem[et] = v
    return PuiseuxSeries(out, vb)


def eta(order) -> PuiseuxSeries:
    """Dedekind eta: q^{1/24} prod_{n>=1} (1 - q^n), expanded below ``order``."""
    order = Fraction(order)
    if order <= Fraction(1, 24):
        raise ValueError("order must exceed 1/24")
    bound = order - Fraction(1, 24)
    # product of (1 - q^n) truncated below `bound`
    prod = {Fraction(0): 1}
    n = 1
    while Fraction(n) < bound:
        nxt = dict(prod)
        for e, c in prod.items():
            e2 = e + n
            if e2 < bound:
                nxt[e2] = nxt.get(e2, 0) - c
        prod = {e: c for e, c in nxt.items() if c}
        n += 1
    shift = Fraction(1, 24)
    terms = {e + shift: coerce24(c) for e, c in prod.items()}
    meta = FormMeta(weight=Fraction(1, 2), level=1, kind="cuspidal", source="eta")
    return PuiseuxSeries(terms, order, meta)


def eta_power(exponent: int, order) -> PuiseuxSeries:
    """eta^exponent below ``order`` (exponent >= 1)."""
    if exponent < 1:
        raise ValueError("exponent must be a positive integer")
    base = eta(Fraction(order) - Fraction(exponent - 1, 24))
    out = base
    for _ in range(exponent - 1):
        out = out * base
    return out.with_meta(
        FormMeta(weight=Fraction(exponent, 2), level=1, kind="cuspidal", source=f"eta^{exponent}")
    )
