"""Multiplier matrices for the index-m theta vector.

``u_gen`` holds the explicitly known index-1 and index-2 generator matrices;
``u_gen_general`` builds the general-index generators

    U_m(T) = diag(e^{2 pi i r^2 / 4m}),
    U_m(S) = e^{-pi i/4} / sqrt(2m) * (e^{-2 pi i r r' / 2m}),

whose correctness is pinned numerically against the theta transformation law
by the verify module.  Entries live in Q(zeta_n) with n = lcm(24, 4m); the
1/sqrt(2m) factor is tracked as a separate positive radicand so that raw
word products stay integral.

A word product of generator matrices equals the true multiplier matrix of
the evaluated group element only up to a root-of-unity scalar (the square
root branch in the transformation law is a cocycle, not a homomorphism).
``resolve`` fits that scalar at one numeric point and snaps it to an exact
24th root of unity, after which all assertions are exact.

All matrices here are unitary, so inverses are conjugate transposes.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from .cyclotomic import CYC24, CycNumber, cyclotomic_field
from .numeric import principal_sqrt, theta_vector_num
from .sl2 import GroupWord, SL2Mat, gamma_dilate, sl2_word


class SnapFailed(ArithmeticError):
    """No root of unity within tolerance of the fitted projective scalar."""


class NotInX(ValueError):
    """Matrix is outside the checkerboard subgroup used at index 2."""


def field_order(m: int) -> int:
    return 24 * 4 * m // math.gcd(24, 4 * m)


class UMatrix:
    """A square matrix over a cyclotomic field divided by sqrt(radicand).

    The stored value is ``rows / sqrt(radicand)`` with radicand a positive
    integer; construction folds square factors of the radicand into the
    entries, so the radicand is always squarefree.
    """

    __slots__ = ("field", "rows", "radicand", "resolved", "index")

    def __init__(self, field, rows, radicand=1, resolved=False, index=None):
        if radicand < 1:
            raise ValueError("radicand must be positive")
        s, radicand = _square_part(radicand)
        if s != 1:
            rows = [[c / s for c in row] for row in rows]
        self.field = field
        self.rows = tuple(tuple(c for c in row) for row in rows)
        self.radicand = radicand
        self.resolved = resolved
        self.index = index

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> CycNumber:
        """Exact entry value; folds the radicand into the field."""
        if self.radicand == 1:
            return self.rows[i][j]
        return self.canonical().rows[i][j]

    @staticmethod
    def identity(field, size, index=None) -> "UMatrix":
        rows = [
            [field.one if i == j else field.zero for j in range(size)]
            for i in range(size)
        ]
        return UMatrix(field, rows, 1, resolved=True, index=index)

    def canonical(self) -> "UMatrix":
        """Fold sqrt(radicand) into the entries (radicand becomes 1)."""
        if self.radicand == 1:
            return self
        root = self.field.sqrt_int(self.radicand)
        inv = root.inverse()
        rows = [[c * inv for c in row] for row in self.rows]
        return UMatrix(self.field, rows, 1, self.resolved, self.index)

    def __matmul__(self, other: "UMatrix") -> "UMatrix":
        a, b = self, other
        if a.field is not b.field:
            n = a.field.n * b.field.n // math.gcd(a.field.n, b.field.n)
            big = cyclotomic_field(n)
            a, b = a.embed(big), b.embed(big)
        size = a.size
        rows = []
        for i in range(size):
            arow = a.rows[i]
            row = []
            for j in range(size):
                acc = a.field.zero
                for k in range(size):
                    if not arow[k].is_zero() and not b.rows[k][j].is_zero():
                        acc = acc + arow[k] * b.rows[k][j]
                row.append(acc)
            rows.append(row)
        return UMatrix(a.field, rows, a.radicand * b.radicand,
                       resolved=False, index=a.index)

    def scale(self, c) -> "UMatrix":
        return UMatrix(self.field, [[x * c for x in row] for row in self.rows],
                       self.radicand, self.resolved, self.index)

    def __pow__(self, e: int) -> "UMatrix":
        if e < 0:
            return self.conj_transpose() ** (-e)
        out = UMatrix.identity(self.field, self.size, self.index)
        base = self
        while e:
            if e & 1:
                out = out @ base
            base = base @ base
            e >>= 1
        return out

    def conj(self) -> "UMatrix":
        return UMatrix(self.field, [[c.conj() for c in row] for row in self.rows],
                       self.radicand, self.resolved, self.index)

    def transpose(self) -> "UMatrix":
        return UMatrix(self.field, list(zip(*self.rows)), self.radicand,
                       self.resolved, self.index)

    def conj_transpose(self) -> "UMatrix":
        """The inverse, for the unitary matrices produced in this module."""
        return self.conj().transpose()

    def embed(self, field) -> "UMatrix":
        rows = [[field.embed(c) for c in row] for row in self.rows]
        return UMatrix(field, rows, self.radicand, self.resolved, self.index)

    def det2(self) -> CycNumber:
        """Determinant of a 2x2 matrix (radicand divides out rationally)."""
        if self.size != 2:
            raise ValueError("det2 needs a 2x2 matrix")
        d = self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
        return d / self.radicand

    def __eq__(self, other):
        if not isinstance(other, UMatrix):
            return NotImplemented
        if self.size != other.size:
            return False
        a, b = self, other
        if a.radicand != b.radicand:
            a, b = a.canonical(), b.canonical()
        if a.field is not b.field:
            n = a.field.n * b.field.n // math.gcd(a.field.n, b.field.n)
            big = cyclotomic_field(n)
            a, b = a.embed(big), b.embed(big)
        return a.radicand == b.radicand and a.rows == b.rows

    __hash__ = None

    def to_complex(self):
        scale = 1.0 / math.sqrt(self.radicand)
        return [[c.to_complex() * scale for c in row] for row in self.rows]

    def __repr__(self):
        tag = "resolved" if self.resolved else "unresolved"
        return f"<UMatrix {self.size}x{self.size} over Q(zeta_{self.field.n}), {tag}>"

    def to_json(self):
        out = {
            "size": self.size,
            "order": self.field.n,
            "entries": [c.to_json() for row in self.rows for c in row],
            "resolved": self.resolved,
        }
        if self.radicand != 1:
            out["sqrt_radicand"] = self.radicand
        return out


def _square_part(n: int):
    """(s, f) with n = s^2 f and f squarefree (n has only small prime factors)."""
    s, f = 1, n
    p = 2
    while p * p <= f:
        while f % (p * p) == 0:
            f //= p * p
            s *= p
        p += 1
    return s, f


# ---------------------------------------------------------------------------
# Generators


@lru_cache(maxsize=None)
def u_gen(m: int, g: str) -> UMatrix:
    """The explicitly known index-1 / index-2 generator matrices.

    Scalars: sqrt(i) = zeta_8, e^{-pi i/4} = zeta_8^{-1}, both inside
    Q(zeta_24).  The index-1 matrix for -I is the square of the one for S.
    """
    f = CYC24
    i = f.zeta(6)
    z8 = f.zeta(3)
    z8i = f.zeta(-3)
    one, zero = f.one, f.zero
    if m == 1:
        if g == "T":
            return UMatrix(f, [[one, zero], [zero, i]], 1, True, 1)
        if g == "S":
            rows = [[z8i, z8i], [z8i, -z8i]]
            return UMatrix(f, rows, 2, True, 1)
        if g == "-I":
            s = u_gen(1, "S")
            out = s @ s
            return UMatrix(out.field, out.rows, out.radicand, True, 1)
    if m == 2:
        if g == "T":
            return UMatrix(f, [[one, zero, zero, zero],
                               [zero, z8, zero, zero],
                               [zero, zero, -one, zero],
                               [zero, zero, zero, z8]], 1, True, 2)
        if g == "S":
            # prefactor e^{-pi i/4}/2 = e^{-pi i/4}/sqrt(4)
            rows = [[z8i * x for x in row] for row in
                    [[one, one, one, one],
                     [one, -i, -one, i],
                     [one, -one, one, -one],
                     [one, i, -one, -i]]]
            return UMatrix(f, rows, 4, True, 2)
        if g == "-I":
            mi = -i
            return UMatrix(f, [[mi, zero, zero, zero],
                               [zero, zero, zero, mi],
                               [zero, zero, mi, zero],
                               [zero, mi, zero, zero]], 1, True, 2)
        if g == "ST2S":
            # (1/2i) times the displayed integer matrix
            hp = (one + i) / (2 * i)
            hm = (one - i) / (2 * i)
            return UMatrix(f, [[hp, zero, hm, zero],
                               [zero, hm, zero, hp],
                               [hm, zero, hp, zero],
                               [zero, hp, zero, hm]], 1, True, 2)
    raise ValueError(f"no displayed generator for index {m}, letter {g!r}")


@lru_cache(maxsize=None)
def u_gen_general(m: int, g: str) -> UMatrix:
    """Generator matrices for arbitrary positive index.

    U_m(T) is forced by the shift tau -> tau + 1 acting on exponents
    r^2/4m; the S matrix is the discrete Fourier kernel normalised by
    e^{-pi i/4}/sqrt(2m), validated numerically against the theta
    transformation law.
    """
    if m < 1:
        raise ValueError("index must be a positive integer")
    n = field_order(m)
    f = cyclotomic_field(n)
    two_m = 2 * m
    if g == "T":
        rows = [
            [f.zeta((n // (4 * m)) * (r * r % (4 * m))) if r == rp else f.zero
             for rp in range(two_m)]
            for r in range(two_m)
        ]
        return UMatrix(f, rows, 1, True, m)
    if g == "S":
        z8i = f.zeta(-(n // 8) % n)
        rows = [
            [z8i * f.zeta((-(n // two_m) * r * rp) % n) for rp in range(two_m)]
            for r in range(two_m)
        ]
        return UMatrix(f, rows, two_m, True, m)
    if g == "-I":
        s = u_gen_general(m, "S")
        out = s @ s
        return UMatrix(out.field, out.rows, out.radicand, True, m)
    raise ValueError(f"unsupported generator letter {g!r}")


@lru_cache(maxsize=None)
def _letter_matrix(m: int, name: str) -> UMatrix:
    if m == 2 and name == "ST2S":
        return u_gen(2, name)
    if name in ("S", "T", "-I"):
        return u_gen_general(m, name)
    if name == "ST2S":
        s, t = u_gen_general(m, "S"), u_gen_general(m, "T")
        return s @ t @ t @ s
    raise ValueError(f"unsupported generator letter {name!r}")


def word_product(m: int, word: GroupWord) -> UMatrix:
    """Product of generator matrices; unresolved (true matrix up to a scalar)."""
    out = UMatrix.identity(cyclotomic_field(field_order(m)), 2 * m, index=m)
    for name, power in word:
        g = _letter_matrix(m, name)
        out = out @ (g ** power)
    return out


# ---------------------------------------------------------------------------
# Scalar resolution against the transformation law


RESOLVE_TAU = 0.11 + 1.21j
RESOLVE_Z = 0.07 + 0.13j


def transform_rhs(m: int, gamma: SL2Mat, U_complex, tau: complex, z: complex):
    """e^{2 pi i m c z^2/(c tau+d)} (c tau+d)^{1/2} U Theta(tau, z)."""
    den = gamma.c * tau + gamma.d
    fac = cmath.exp(2j * cmath.pi * m * gamma.c * z * z / den) * principal_sqrt(den)
    theta = theta_vector_num(m, tau, z)
    return [fac * sum(U_complex[i][j] * theta[j] for j in range(2 * m)) for i in range(2 * m)]


def resolve_scalar(m: int, word: GroupWord, U: UMatrix | None = None,
                   tau: complex = RESOLVE_TAU, z: complex = RESOLVE_Z):
    """Fit the scalar between a word product and the true multiplier matrix.

    Evaluates both sides of the transformation law at one point (Im tau >=
    0.5 required), least-squares fits the ratio, snaps it to the nearest
    24th root of unity (tolerance 1e-6), and returns (resolved matrix,
    exact scalar).
    """
    if tau.imag < 0.5:
        raise ValueError("resolution point needs Im tau >= 0.5")
    if U is None:
        U = word_product(m, word)
    gamma = word.to_matrix()
    lhs = theta_vector_num(m, *gamma.act_jacobi(tau, z))
    rhs = transform_rhs(m, gamma, U.to_complex(), tau, z)
    num = sum(l * r.conjugate() for l, r in zip(lhs, rhs))
    den = sum(abs(r) ** 2 for r in rhs)
    sigma = num / den
    best_k, best_err = None, 1.0
    for k in range(24):
        err = abs(sigma - cmath.exp(2j * cmath.pi * k / 24))
        if err < best_err:
            best_k, best_err = k, err
    if best_err > 1e-6:
        raise SnapFailed(f"scalar {sigma} is no 24th root of unity (err {best_err:.2e})")
    exact = U.field.zeta((U.field.n // 24) * best_k)
    out = U.scale(exact)
    return UMatrix(out.field, out.rows, out.radicand, True, m), CYC24.zeta(best_k)


def resolve(m: int, word: GroupWord, tau: complex = RESOLVE_TAU,
            z: complex = RESOLVE_Z) -> UMatrix:
    return resolve_scalar(m, word, None, tau, z)[0]


# ---------------------------------------------------------------------------
# The index-2 checkerboard subgroup, its character, and the 2-dim rep


def in_X(V: UMatrix) -> bool:
    """Membership in the subgroup X: zeros on the odd checkerboard, equal
    (1,1)/(3,3) and (1,3)/(3,1) entries."""
    if V.size != 4:
        return False
    for i in range(4):
        for j in range(4):
            if (i + j) % 2 == 1 and not V.rows[i][j].is_zero():
                return False
    return V.rows[1][1] == V.rows[3][3] and V.rows[1][3] == V.rows[3][1]


def r_char(V: UMatrix) -> CycNumber:
    """The character V -> v_{11} + v_{13} on the subgroup X."""
    if not in_X(V):
        raise NotInX("matrix is not in the checkerboard subgroup")
    Vc = V.canonical()
    return Vc.rows[1][1] + Vc.rows[1][3]


def rho2(word: GroupWord, tau: complex = RESOLVE_TAU, z: complex = RESOLVE_Z) -> UMatrix:
    """The 2-dimensional representation r(U_2(g))^{-1} conj(U_1(g_2)) on the
    level-2 subgroup."""
    gamma = word.to_matrix()
    if gamma.c % 2:
        raise ValueError("word does not evaluate into the level-2 subgroup")
    U2 = resolve(2, word, tau, z)
    r = r_char(U2)
    gamma2 = gamma_dilate(gamma, 2)
    U1 = resolve(1, sl2_word(gamma2), tau, z)
    out = U1.conj().canonical().scale(r.inverse())
    return UMatrix(out.field, out.rows, out.radicand, True, 2)


def omega_m(gamma: SL2Mat, m: int, tau: complex = RESOLVE_TAU,
            z: complex = RESOLVE_Z) -> CycNumber:
    """The determinant character det U_1(gamma_m) on the level-m subgroup."""
    gm = gamma_dilate(gamma, m)
    U1 = resolve(1, sl2_word(gm), tau, z)
    return U1.det2()


def cusp_entry_values(c: int):
    """Exact (0,0) and (2,0) entries of the resolved index-2 matrix of
    S T^{-c} S, the scaling matrix of the cusp 1/c."""
    if c < 1:
        raise ValueError("c must be a positive integer")
    word = GroupWord.of(("S", 1), ("T", -c), ("S", 1))
    U = resolve(2, word).canonical()
    return U.rows[0][0], U.rows[2][0]


# ---------------------------------------------------------------------------
# Structure of level-m word products


def block_rows_vanish(m: int, W: UMatrix) -> bool:
    """Rows 0 and m of a level-m word product vanish outside columns {0, m}.

    Scalar-invariant, so it applies to unresolved products.
    """
    for i in (0, m):
        for j in range(2 * m):
            if j not in (0, m) and not W.rows[i][j].is_zero():
                return False
    return True


def submatrix_proportional(m: int, W: UMatrix, W1: UMatrix) -> bool:
    """The {0,m} x {0,m} submatrix of a level-m product is proportional to
    the corresponding index-1 product of the dilated word.

    Proportionality is scalar- and radicand-invariant: cross products of
    entries are compared exactly in the compositum field.
    """
    n = W.field.n * W1.field.n // math.gcd(W.field.n, W1.field.n)
    big = cyclotomic_field(n)
    sub = [[big.embed(W.rows[i][j]) for j in (0, m)] for i in (0, m)]
    ref = [[big.embed(W1.rows[i][j]) for j in (0, 1)] for i in (0, 1)]
    flat_a = [sub[i][j] for i in range(2) for j in range(2)]
    flat_b = [ref[i][j] for i in range(2) for j in range(2)]
    for i in range(4):
        for j in range(i + 1, 4):
            if flat_a[i] * flat_b[j] != flat_a[j] * flat_b[i]:
                return False
    # rule out the degenerate all-zero pairing
    return any(not x.is_zero() for x in flat_a) and any(not x.is_zero() for x in flat_b)
