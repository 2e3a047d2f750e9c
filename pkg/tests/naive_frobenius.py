"""A second, independent implementation of the three-stage Frobenius
probable-prime test, written directly from its published description.

Used purely as a cross-check oracle.  Shares no code with the package:
polynomials are dicts {degree: coefficient}, the x^(n^i) powers are
computed from scratch with the full materialized exponent at every
stage, and the Jacobi symbol comes from factoring the modulus
(oracles.jacobi_naive) instead of binary reciprocity.
"""

import math

from oracles import discriminant_by_sylvester, jacobi_naive

Poly = dict[int, int]  # degree -> coefficient, no zero values stored


class CompositeWitness(Exception):
    """Raised internally when a stage proves n composite."""

    def __init__(self, stage: str, factor: int | None = None):
        self.stage = stage
        self.factor = factor


def _norm(p: Poly, n: int) -> Poly:
    return {d: c % n for d, c in p.items() if c % n}


def _deg(p: Poly) -> int:
    return max(p) if p else -1


def _mul(p: Poly, q: Poly, n: int) -> Poly:
    out: Poly = {}
    for d1, c1 in p.items():
        for d2, c2 in q.items():
            out[d1 + d2] = (out.get(d1 + d2, 0) + c1 * c2) % n
    return _norm(out, n)


def _add(p: Poly, q: Poly, n: int) -> Poly:
    out = dict(p)
    for d, c in q.items():
        out[d] = (out.get(d, 0) + c) % n
    return _norm(out, n)


def _sub(p: Poly, q: Poly, n: int) -> Poly:
    out = dict(p)
    for d, c in q.items():
        out[d] = (out.get(d, 0) - c) % n
    return _norm(out, n)


def _divmod(p: Poly, q: Poly, n: int) -> tuple[Poly, Poly]:
    """Polynomial division mod n.  Needs the leading coefficient of q to
    be invertible; a failed inversion is a composite witness."""
    dq = _deg(q)
    lead = q[dq]
    g = math.gcd(lead, n)
    if g > 1:
        raise CompositeWitness("factorization", g)
    inv = pow(lead, -1, n)
    rem = dict(p)
    quo: Poly = {}
    while _deg(rem) >= dq:
        dr = _deg(rem)
        coeff = rem[dr] * inv % n
        quo[dr - dq] = coeff
        rem = _sub(rem, _mul({dr - dq: coeff}, q, n), n)
    return _norm(quo, n), _norm(rem, n)


def _gcd_monic(a: Poly, b: Poly, n: int) -> Poly:
    while b:
        _, r = _divmod(a, b, n)
        a, b = b, r
    da = _deg(a)
    lead = a[da]
    g = math.gcd(lead, n)
    if g > 1:
        raise CompositeWitness("factorization", g)
    inv = pow(lead, -1, n)
    return _norm({d: c * inv for d, c in a.items()}, n)


def _powmod(base: Poly, e: int, mod: Poly, n: int) -> Poly:
    result: Poly = {0: 1}
    base = _divmod(base, mod, n)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, n), mod, n)[1]
        base = _divmod(_mul(base, base, n), mod, n)[1]
        e >>= 1
    return result


def _substitute(outer: Poly, value: Poly, mod: Poly, n: int) -> Poly:
    """outer(value) mod (mod, n), each power computed separately."""
    total: Poly = {}
    for d, c in outer.items():
        term = _mul({0: c}, _powmod(value, d, mod, n), n)
        total = _add(total, term, n)
    return _divmod(total, mod, n)[1]


def naive_frobenius(
    n: int, coeffs_low_first: tuple[int, ...]
) -> tuple[str, tuple[int, ...] | None]:
    """(verdict, stage-one degrees) for odd n > 1 and a monic squarefree
    polynomial, coefficients given lowest degree first.  Verdict is
    'probable-prime' or 'composite'; degrees are None when the
    factorization stage did not complete."""
    if n <= 1 or n % 2 == 0:
        raise ValueError("n must be odd and > 1")
    deg = len(coeffs_low_first) - 1
    if deg < 2 or coeffs_low_first[-1] != 1:
        raise ValueError("polynomial must be monic of degree >= 2")

    disc = discriminant_by_sylvester(list(coeffs_low_first))
    g = math.gcd(n, coeffs_low_first[0] * disc)
    if g == n:
        raise ValueError("gcd(n, f(0) disc) = n")
    if g > 1:
        return "composite", None

    f: Poly = _norm({d: c for d, c in enumerate(coeffs_low_first)}, n)
    degrees: tuple[int, ...] | None = None
    try:
        parts = _factorization_stage(n, f, deg)
        degrees = tuple(max(_deg(part), 0) for part in parts)
        _frobenius_stage(n, parts)
        if _jacobi_stage(n, parts, disc):
            return "probable-prime", degrees
        return "composite", degrees
    except CompositeWitness:
        return "composite", degrees


def _factorization_stage(n: int, f: Poly, deg: int) -> list[Poly]:
    parts = []
    remaining = f
    for i in range(1, deg + 1):
        if _deg(remaining) <= 0:
            parts.append({0: 1})
            continue
        # x^(n^i) - x mod remaining, exponent fully materialized.
        power = _powmod({1: 1}, n**i, remaining, n)
        diff = _sub(power, {1: 1}, n)
        if not diff:
            factor = remaining
        else:
            factor = _gcd_monic(remaining, diff, n)
        parts.append(factor)
        quo, rem = _divmod(remaining, factor, n)
        assert not rem, "computed gcd must divide exactly"
        remaining = quo
    if _deg(remaining) > 0:
        raise CompositeWitness("factorization")
    return parts


def _frobenius_stage(n: int, parts: list[Poly]) -> None:
    for i, part in enumerate(parts, start=1):
        if i < 2 or _deg(part) <= 0:
            continue
        image = _powmod({1: 1}, n, part, n)
        if _substitute(part, image, part, n):
            raise CompositeWitness("frobenius")


def _jacobi_stage(n: int, parts: list[Poly], disc: int) -> bool:
    total = 0
    for i, part in enumerate(parts, start=1):
        if i % 2:
            continue
        d = _deg(part)
        if d <= 0:
            continue
        if d % i:
            raise CompositeWitness("jacobi")
        total += d // i
    return (-1) ** total == jacobi_naive(disc, n)
