"""Polynomial arithmetic over Z/nZ for composite as well as prime n.

Polynomials are coefficient sequences, lowest degree first, every
coefficient reduced into [0, n), no trailing zeros; the zero polynomial is
the empty sequence.  Remainders are only ever taken by monic divisors,
except inside gcmd where leading coefficients are inverted explicitly: a
failed inversion is not an error but a FactorFound outcome, because the
gcd it exposes is a nontrivial factor of the modulus.

The discriminant lives here too.  It is computed over the integers (not
mod n) as a signed resultant, so callers can reduce it by any modulus
they like afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

__all__ = [
    "PolyModN",
    "Found",
    "FactorFound",
    "GcmdOutcome",
    "poly_rem",
    "poly_powmod",
    "gcmd",
    "poly_compose_mod",
    "discriminant",
]


# ---------------------------------------------------------------------------
# Raw coefficient-list helpers.  These skip validation and are shared with
# the hot loops in the sequence and Frobenius engines.

def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _reduce(cs: Sequence[int], n: int) -> list[int]:
    return _trim([c % n for c in cs])


def _pmul(a: list[int], b: list[int], n: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([c % n for c in out])


def _prem_monic(a: list[int], f: list[int], n: int) -> list[int]:
    # Remainder of a by monic f, deg f >= 1.  No inversions needed.
    r = [c % n for c in a]
    df = len(f) - 1
    for i in range(len(r) - 1, df - 1, -1):
        c = r[i]
        if c:
            r[i] = 0
            base = i - df
            for j in range(df):
                r[base + j] = (r[base + j] - c * f[j]) % n
    del r[df:]
    return _trim(r)


def _pdivmod_monic(a: list[int], f: list[int], n: int) -> tuple[list[int], list[int]]:
    # Quotient and remainder by monic f.
    r = [c % n for c in a]
    df = len(f) - 1
    if len(r) < len(f):
        return [], _trim(r)
    q = [0] * (len(r) - df)
    for i in range(len(r) - 1, df - 1, -1):
        c = r[i]
        if c:
            q[i - df] = c
            r[i] = 0
            base = i - df
            for j in range(df):
                r[base + j] = (r[base + j] - c * f[j]) % n
    del r[df:]
    return _trim(q), _trim(r)


def _ppow_monic(g: list[int], e: int, f: list[int], n: int) -> list[int]:
    # g**e mod f for monic f, deg f >= 1, e >= 0.
    g = _prem_monic(g, f, n)
    if e == 0:
        return [1 % n]
    if not g:
        return []
    result = g
    for bit in bin(e)[3:]:
        result = _prem_monic(_pmul(result, result, n), f, n)
        if bit == "1":
            result = _prem_monic(_pmul(result, g, n), f, n)
    return result


def _prem_general(a: list[int], b: list[int], n: int):
    # Remainder of a by nonzero b.  The leading coefficient of b is
    # inverted lazily, only once a reduction step actually happens, so a
    # swap of already-reduced operands never manufactures a failure.
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    inv = None
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if not c:
            continue
        if inv is None:
            d = math.gcd(lc, n)
            if d > 1:
                return ("factor", d)
            inv = pow(lc, -1, n)
        quo = c * inv % n
        r[i] = 0
        base = i - db
        for j in range(db):
            r[base + j] = (r[base + j] - quo * b[j]) % n
    del r[db:]
    return ("ok", _trim(r))


def _gcmd(g: list[int], h: list[int], n: int):
    """Greatest common monic divisor over Z/nZ.

    Returns ("found", coeffs) with coeffs monic, or ("factor", m) when a
    required inversion fails; then 1 < m < n and m divides n.  A nonzero
    constant tail with gcd(tail, n) > 1 lands in the second case, since no
    monic gcd exists there either.
    """
    g = _reduce(g, n)
    h = _reduce(h, n)
    if not g and not h:
        raise ValueError("gcmd(0, 0) is undefined")
    while h:
        res = _prem_general(g, h, n)
        if res[0] == "factor":
            return res
        g, h = h, res[1]
    lc = g[-1]
    d = math.gcd(lc, n)
    if d > 1:
        return ("factor", d)
    inv = pow(lc, -1, n)
    return ("found", [c * inv % n for c in g])


# ---------------------------------------------------------------------------
# Public wrappers.

@dataclass(frozen=True)
class PolyModN:
    """A polynomial over Z/nZ: reduced coefficients, lowest degree first."""

    coeffs: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "coeffs", tuple(_reduce(self.coeffs, self.modulus)))

    @property
    def degree(self) -> int:
        # Degree of the zero polynomial is -1 by convention.
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(reversed(parts))


@dataclass(frozen=True)
class Found:
    poly: PolyModN


@dataclass(frozen=True)
class FactorFound:
    factor: int


GcmdOutcome = Union[Found, FactorFound]


def _require_same_modulus(*polys: PolyModN) -> int:
    n = polys[0].modulus
    for p in polys[1:]:
        if p.modulus != n:
            raise ValueError(f"modulus mismatch: {p.modulus} != {n}")
    return n


def poly_rem(a: PolyModN, f: PolyModN) -> PolyModN:
    """Remainder of a by f.  f must be monic with degree >= 1."""
    n = _require_same_modulus(a, f)
    if not f.is_monic or f.degree < 1:
        raise ValueError(f"divisor must be monic of degree >= 1, got {f}")
    return PolyModN(tuple(_prem_monic(list(a.coeffs), list(f.coeffs), n)), n)


def poly_powmod(g: PolyModN, e: int, f: PolyModN) -> PolyModN:
    """g**e mod f by square-and-multiply; f monic, degree >= 1, e >= 0."""
    n = _require_same_modulus(g, f)
    if not f.is_monic or f.degree < 1:
        raise ValueError(f"modulus polynomial must be monic of degree >= 1, got {f}")
    if e < 0:
        raise ValueError("negative exponent")
    return PolyModN(tuple(_ppow_monic(list(g.coeffs), e, list(f.coeffs), n)), n)


def gcmd(g: PolyModN, h: PolyModN) -> GcmdOutcome:
    """Greatest common monic divisor of g and h over Z/nZ.

    Over a composite modulus the gcd may fail to exist; the failing
    inversion then hands back a nontrivial factor of n as FactorFound.
    Exactly one of g, h may be zero; both zero is rejected.
    """
    n = _require_same_modulus(g, h)
    res = _gcmd(list(g.coeffs), list(h.coeffs), n)
    if res[0] == "factor":
        return FactorFound(res[1])
    return Found(PolyModN(tuple(res[1]), n))


def poly_compose_mod(outer: PolyModN, inner: PolyModN) -> PolyModN:
    """outer(inner(x)) reduced mod outer; outer monic with degree >= 1.

    Horner evaluation in the quotient ring Z/nZ[x]/(outer)."""
    n = _require_same_modulus(outer, inner)
    if not outer.is_monic or outer.degree < 1:
        raise ValueError(f"outer must be monic of degree >= 1, got {outer}")
    f = list(outer.coeffs)
    g = _prem_monic(list(inner.coeffs), f, n)
    acc: list[int] = []
    for c in reversed(f):
        acc = _pmul(acc, g, n)
        if c:
            if acc:
                acc[0] = (acc[0] + c) % n
                acc = _trim(acc)
            else:
                acc = [c % n]
        acc = _prem_monic(acc, f, n)
    return PolyModN(tuple(acc), n)


# ---------------------------------------------------------------------------
# Integer discriminant via the resultant of f and f'.

def _det_bareiss(mat: list[list[int]]) -> int:
    # Fraction-free Gaussian elimination; exact over the integers.
    m = [row[:] for row in mat]
    size = len(m)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def _sylvester(f_high: list[int], g_high: list[int]) -> list[list[int]]:
    # Coefficients highest degree first; matrix of size deg f + deg g.
    df = len(f_high) - 1
    dg = len(g_high) - 1
    size = df + dg
    rows = []
    for i in range(dg):
        rows.append([0] * i + f_high + [0] * (size - i - df - 1))
    for i in range(df):
        rows.append([0] * i + g_high + [0] * (size - i - dg - 1))
    return rows


def _resultant(f_low: list[int], g_low: list[int]) -> int:
    return _det_bareiss(_sylvester(list(reversed(f_low)), list(reversed(g_low))))


def discriminant(coeffs: Sequence[int]) -> int:
    """Discriminant of a monic integer polynomial of degree >= 2.

    Exact integer value: (-1)**(d*(d-1)/2) times the resultant of f and
    its derivative (the leading coefficient is 1, so no further division).
    """
    cs = _trim([int(c) for c in coeffs])
    d = len(cs) - 1
    if d < 2:
        raise ValueError("discriminant requires degree >= 2")
    if cs[-1] != 1:
        raise ValueError("polynomial must be monic")
    deriv = [i * cs[i] for i in range(1, d + 1)]
    res = _resultant(cs, deriv)
    return -res if (d * (d - 1) // 2) % 2 else res
