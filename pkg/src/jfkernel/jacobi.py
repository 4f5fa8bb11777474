"""Two-variable series phi(tau, z) = sum c(n, r) q^n zeta^r and the theta
machinery attached to an index m:

* the index-m theta functions theta_j(m, r) with terms
  q^{m(n + r/2m)^2} zeta^{2mn + r};
* the restriction map phi(tau, z) -> phi(tau, 0);
* the normalised heat operator acting on monomials as
  q^n zeta^r -> (k r^2 - 4n) q^n  (the plain operator divided by 2 pi i);
* the decomposition of a series into its 2m half-integral components
  h_r(tau), with the consistency condition that makes the decomposition
  well defined doubling as a validity check.

zeta-powers are integers throughout; only the q-exponents are rational.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CYC24, CycNumber, coerce24
from .series import FormMeta, PuiseuxSeries, _frac_str


class DecompositionInconsistent(ValueError):
    """The series is not a valid index-m theta combination.

    ``witnesses`` lists pairs of source terms ((n, r), (n', r')) that imply
    conflicting component coefficients.
    """

    def __init__(self, witnesses):
        self.witnesses = witnesses
        super().__init__(f"inconsistent theta components at {witnesses[:3]}")


class JacobiSeries:
    """Sparse truncated series in (q, zeta); immutable by convention.

    ``terms`` maps (q-exponent, zeta-power) to a Q(zeta_24) coefficient;
    ``valid_below`` bounds the known q-exponents exactly as for
    :class:`~jfkernel.series.PuiseuxSeries`.
    """

    __slots__ = ("terms", "valid_below", "meta")

    def __init__(self, terms, valid_below, meta: FormMeta | None = None):
        vb = Fraction(valid_below)
        clean = {}
        for key, c in terms.items() if isinstance(terms, dict) else terms:
            n, r = key
            n = Fraction(n)
            if n >= vb:
                continue
            c = coerce24(c)
            if not c.is_zero():
                clean[(n, int(r))] = c
        self.terms = clean
        self.valid_below = vb
        self.meta = meta

    @staticmethod
    def zero(valid_below, meta=None) -> "JacobiSeries":
        return JacobiSeries({}, valid_below, meta)

    @staticmethod
    def from_puiseux(a: PuiseuxSeries) -> "JacobiSeries":
        return JacobiSeries({(e, 0): c for e, c in a.terms.items()}, a.valid_below, a.meta)

    def is_zero(self) -> bool:
        return not self.terms

    def q_val(self) -> Fraction:
        return min((n for n, _ in self.terms), default=self.valid_below)

    def coeff(self, n, r) -> CycNumber:
        return self.terms.get((Fraction(n), int(r)), CYC24.zero)

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda t: (t[0][0], t[0][1]))

    def with_meta(self, meta) -> "JacobiSeries":
        out = JacobiSeries.__new__(JacobiSeries)
        out.terms = self.terms
        out.valid_below = self.valid_below
        out.meta = meta
        return out

    # -- equality ---------------------------------------------------------

    def same_below(self, other, bound=None) -> bool:
        if bound is None:
            bound = min(self.valid_below, other.valid_below)
        bound = Fraction(bound)
        if bound > self.valid_below or bound > other.valid_below:
            raise ValueError("comparison bound exceeds a validity bound")
        for (n, r), c in self.terms.items():
            if n < bound and other.terms.get((n, r)) != c:
                return False
        for (n, r), c in other.terms.items():
            if n < bound and (n, r) not in self.terms:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, JacobiSeries):
            return NotImplemented
        return self.valid_below == other.valid_below and self.terms == other.terms

    __hash__ = None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, PuiseuxSeries):
            other = JacobiSeries.from_puiseux(other)
        if not isinstance(other, JacobiSeries):
            return NotImplemented
        vb = min(self.valid_below, other.valid_below)
        out = {k: c for k, c in self.terms.items() if k[0] < vb}
        for k, c in other.terms.items():
            if k[0] < vb:
                s = out.get(k)
                out[k] = c if s is None else s + c
        return JacobiSeries(out, vb)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        out = JacobiSeries.__new__(JacobiSeries)
        out.terms = {k: -c for k, c in self.terms.items()}
        out.valid_below = self.valid_below
        out.meta = self.meta
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            c0 = coerce24(other)
            return JacobiSeries(
                {k: c * c0 for k, c in self.terms.items()}, self.valid_below, self.meta
            )
        if isinstance(other, PuiseuxSeries):
            other = JacobiSeries.from_puiseux(other)
        if not isinstance(other, JacobiSeries):
            return NotImplemented
        vb = min(self.valid_below + other.q_val(), other.valid_below + self.q_val())
        out = {}
        for (n1, r1), c1 in self.terms.items():
            for (n2, r2), c2 in other.terms.items():
                n = n1 + n2
                if n < vb:
                    k = (n, r1 + r2)
                    p = c1 * c2
                    s = out.get(k)
                    out[k] = p if s is None else s + p
        return JacobiSeries(out, vb, _mul_meta(self.meta, other.meta))

    __rmul__ = __mul__

    # -- rendering / serialization -------------------------------------------

    def __repr__(self):
        return f"<JacobiSeries {len(self.terms)} terms below q^{self.valid_below}>"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (n, r), c in self.items_sorted():
            if n == 0:
                qpart = ""
            elif n.denominator == 1:
                qpart = "q" if n == 1 else f"q^{n.numerator}"
            else:
                qpart = f"q^({n.numerator}/{n.denominator})"
            if r == 0:
                zpart = ""
            elif r == 1:
                zpart = "z"
            else:
                zpart = f"z^{r}" if r > 0 else f"z^({r})"
            mono = "*".join(x for x in (qpart, zpart) if x) or "1"
            cs = str(c)
            if cs == "1" and mono != "1":
                parts.append(mono)
            elif cs == "-1" and mono != "1":
                parts.append("-" + mono)
            else:
                if ("+" in cs[1:]) or ("-" in cs[1:]) or "[" in cs:
                    cs = f"({cs})"
                parts.append(cs if mono == "1" else f"{cs}*{mono}")
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def to_json(self):
        return {
            "valid_below": _frac_str(self.valid_below),
            "terms": [
                {"n": _frac_str(n), "r": r, "coeff": c.to_json()}
                for (n, r), c in self.items_sorted()
            ],
            "meta": self.meta.to_json() if self.meta is not None else None,
        }

    @staticmethod
    def from_json(obj) -> "JacobiSeries":
        terms = {
            (Fraction(t["n"]), int(t["r"])): CycNumber.from_json(t["coeff"])
            for t in obj["terms"]
        }
        return JacobiSeries(terms, Fraction(obj["valid_below"]), FormMeta.from_json(obj.get("meta")))


def _mul_meta(a: FormMeta | None, b: FormMeta | None) -> FormMeta | None:
    if a is None or b is None:
        return None
    weight = a.weight + b.weight if a.weight is not None and b.weight is not None else None
    index = a.index + b.index if a.index is not None and b.index is not None else None
    return FormMeta(weight=weight, index=index)


# ---------------------------------------------------------------------------
# Theta functions


def theta_j(m: int, r: int, order) -> JacobiSeries:
    """The index-m theta function with residue r, truncated below ``order``.

    Terms are q^{m(n + r/2m)^2} zeta^{2mn + r} with unit coefficients.
    """
    if m < 1:
        raise ValueError("index must be a positive integer")
    order = Fraction(order)
    terms = {}
    n = 0
    while True:
        added = False
        for s in {n, -n}:
            x = s + Fraction(r, 2 * m)
            e = m * x * x
            if e < order:
                terms[(e, 2 * m * s + r)] = 1
                added = True
        if not added and Fraction(m) * (n - 1) ** 2 > order:
            break
        n += 1
    meta = FormMeta(weight=Fraction(1, 2), index=m, kind="theta-component",
                    source=f"theta_j({m},{r})")
    return JacobiSeries(terms, order, meta)


@lru_cache(maxsize=None)
def _theta_component_terms(m: int, r: int, order: Fraction):
    acc = {}
    n = 0
    while True:
        added = False
        for s in {n, -n}:
            x = s + Fraction(r, 2 * m)
            e = m * x * x
            if e < order:
                acc[e] = acc.get(e, 0) + 1
                added = True
        if not added and Fraction(m) * (n - 1) ** 2 > order:
            break
        n += 1
    return tuple(sorted(acc.items()))


def theta_component(m: int, r: int, order) -> PuiseuxSeries:
    """theta_{m,r}(tau) = theta_j(m, r)(tau, 0), as a one-variable series."""
    order = Fraction(order)
    terms = dict(_theta_component_terms(m, r % (2 * m), order))
    meta = FormMeta(weight=Fraction(1, 2), index=m, kind="theta-component",
                    source=f"theta({m},{r})")
    return PuiseuxSeries(terms, order, meta)


# ---------------------------------------------------------------------------
# Operators


def restrict_z0(phi: JacobiSeries) -> PuiseuxSeries:
    """The restriction z = 0: collapse zeta-powers, keeping the q-exponent."""
    out = {}
    for (n, _r), c in phi.terms.items():
        s = out.get(n)
        out[n] = c if s is None else s + c
    meta = None
    if phi.meta is not None:
        meta = FormMeta(weight=phi.meta.weight, level=phi.meta.level,
                        character=phi.meta.character, source="restrict_z0")
    return PuiseuxSeries(out, phi.valid_below, meta)


def d2_hat(phi: JacobiSeries, k) -> PuiseuxSeries:
    """Normalised heat operator at weight k: q^n zeta^r -> (k r^2 - 4n) q^n.

    ``k`` is passed explicitly (not read from metadata) so the operator can
    be applied at any weight.
    """
    k = Fraction(k)
    out = {}
    for (n, r), c in phi.terms.items():
        factor = k * r * r - 4 * n
        if factor:
            v = c * factor
            s = out.get(n)
            out[n] = v if s is None else s + v
    meta = FormMeta(weight=k + 2, kind="unchecked", source="d2_hat")
    return PuiseuxSeries(out, phi.valid_below, meta)


def heat_check(m: int, r: int, order) -> bool:
    """True iff every term of theta_j(m, r) satisfies r_eff^2 = 4 m n_eff."""
    phi = theta_j(m, r, order)
    return all(Fraction(rr * rr) == 4 * m * n for (n, rr), _ in phi.terms.items())


def theta_decompose(phi: JacobiSeries, m: int) -> list[PuiseuxSeries]:
    """Split phi into its 2m components h_r with h_r exponents n - r^2/4m.

    The component coefficient may only depend on (4mn - r^2, r mod 2m); any
    two source terms violating that raise :class:`DecompositionInconsistent`.
    Component r is valid below phi.valid_below - min(r'^2)/4m, minimising
    over representatives r' = r mod 2m.
    """
    if m < 1:
        raise ValueError("index must be a positive integer")
    two_m = 2 * m
    slots = {}
    violations = []
    for (n, r), c in phi.terms.items():
        rr = r % two_m
        e = n - Fraction(r * r, 4 * m)
        key = (rr, e)
        prev = slots.get(key)
        if prev is None:
            slots[key] = (c, (n, r))
        elif prev[0] != c:
            violations.append((prev[1], (n, r)))
    if violations:
        raise DecompositionInconsistent(sorted(violations))
    comps = []
    for r in range(two_m):
        rmin = min(r, two_m - r) if r else 0
        bound = phi.valid_below - Fraction(rmin * rmin, 4 * m)
        terms = {
            e: c for (rr, e), (c, _) in slots.items() if rr == r and e < bound
        }
        meta = FormMeta(index=m, source=f"component({r})")
        if phi.meta is not None and phi.meta.weight is not None:
            meta = FormMeta(weight=phi.meta.weight - Fraction(1, 2), index=m,
                            level=phi.meta.level, character=phi.meta.character,
                            source=f"component({r})")
        comps.append(PuiseuxSeries(terms, bound, meta))
    return comps


def recompose(components, m: int, order) -> JacobiSeries:
    """sum_r h_r * theta_j(m, r); inverse of :func:`theta_decompose`."""
    if len(components) != 2 * m:
        raise ValueError("need exactly 2m components")
    out = JacobiSeries.zero(order)
    for r, h in enumerate(components):
        out = out + h * theta_j(m, r, Fraction(order))
    return out


def symmetry_check(phi: JacobiSeries, m: int) -> bool:
    """True iff the components satisfy h_r = h_{2m-r} on their common range."""
    comps = theta_decompose(phi, m)
    two_m = 2 * m
    for r in range(1, m):
        a, b = comps[r], comps[two_m - r]
        if not a.same_below(b, min(a.valid_below, b.valid_below)):
            return False
    return True


def tau_shift(a):
    """Formal substitution tau -> tau + 1: multiply c q^e by e^{2 pi i e}.

    Needs every exponent denominator to divide 24 so the phase stays inside
    Q(zeta_24).
    """
    if isinstance(a, PuiseuxSeries):
        items = a.terms.items()
        build = lambda terms: PuiseuxSeries(terms, a.valid_below, a.meta)
        keyed = [((e,), e, c) for e, c in items]
    else:
        keyed = [((n, r), n, c) for (n, r), c in a.terms.items()]
        build = lambda terms: JacobiSeries(terms, a.valid_below, a.meta)
    out = {}
    for key, e, c in keyed:
        frac = e - math.floor(e)
        if 24 % frac.denominator:
            raise ValueError(f"exponent {e} leaves Q(zeta_24) under the shift")
        phase = CYC24.zeta(int(24 * frac) % 24)
        k = key[0] if len(key) == 1 else key
        out[k] = c * phase
    return build(out)
