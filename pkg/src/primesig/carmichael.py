"""Korselt certificates and the Carmichael condition relative to a field.

korselt(n) factors n and records, per prime p, whether p - 1 divides
n - 1; the certificate validates exactly when n is an odd squarefree
composite with at least three prime factors and every divisibility check
holds, i.e. when n is a Carmichael number.

carmichael_frobenius(n, f) additionally demands that every prime factor
of n split completely for the monic polynomial f.  Degree-1 polynomials
model the rationals, where splitting is vacuous and the notion collapses
back to plain Carmichael.
"""

from __future__ import annotations

from dataclasses import dataclass

from .frobenius import splits_completely
from .modarith import Factorization, factorize
from .polymod import _trim, discriminant

__all__ = [
    "KorseltCertificate",
    "korselt",
    "SplittingEvidence",
    "CarmichaelFrobeniusResult",
    "carmichael_frobenius",
]


@dataclass(frozen=True)
class KorseltCertificate:
    """Self-contained evidence for (or against) n being Carmichael."""

    n: int
    factorization: Factorization
    checks: tuple[tuple[int, bool], ...]  # (p, p - 1 divides n - 1)
    squarefree: bool

    @property
    def composite(self) -> bool:
        return sum(e for _, e in self.factorization.factors) >= 2

    @property
    def validates(self) -> bool:
        return (self.squarefree
                and self.n % 2 == 1
                and self.composite
                and len(self.factorization.factors) >= 3
                and all(ok for _, ok in self.checks))

    @property
    def failure_reason(self) -> str | None:
        if not self.composite:
            return "prime"
        if not self.squarefree:
            return "not-squarefree"
        if self.n % 2 == 0:
            return "even"
        bad = [p for p, ok in self.checks if not ok]
        if bad:
            return f"divisibility fails at {','.join(map(str, bad))}"
        if len(self.factorization.factors) < 3:
            return "fewer than three prime factors"
        return None


def korselt(n: int, budget: int = 4_000_000) -> KorseltCertificate:
    """Factor n >= 2 and certify the Korselt divisibility conditions."""
    if n < 2:
        raise ValueError(f"korselt requires n >= 2, got {n}")
    fact = factorize(n, budget=budget)
    checks = tuple((p, (n - 1) % (p - 1) == 0) for p in fact.primes())
    return KorseltCertificate(n, fact, checks, fact.is_squarefree)


@dataclass(frozen=True)
class SplittingEvidence:
    p: int
    splits: bool
    ramified: bool = False


@dataclass(frozen=True)
class CarmichaelFrobeniusResult:
    value: bool
    korselt: KorseltCertificate
    splitting: tuple[SplittingEvidence, ...]
    reason: str | None

    def __bool__(self) -> bool:
        return self.value


def carmichael_frobenius(n: int, coeffs, budget: int = 4_000_000) -> CarmichaelFrobeniusResult:
    """Does n satisfy the Korselt conditions with every prime factor
    splitting completely for the monic polynomial f?

    A ramified prime (dividing the discriminant of f) does not split,
    so it yields a negative answer with evidence rather than an error.
    """
    cs = _trim([int(c) for c in coeffs])
    if not cs or cs[-1] != 1 or len(cs) < 2:
        raise ValueError("polynomial must be monic of degree >= 1")
    cert = korselt(n, budget=budget)
    if not cert.validates:
        return CarmichaelFrobeniusResult(False, cert, (), cert.failure_reason)
    if len(cs) == 2:
        # Degree 1: the splitting condition is vacuous.
        return CarmichaelFrobeniusResult(True, cert, (), None)
    delta = discriminant(cs)
    evidence = []
    for p in cert.factorization.primes():
        if delta % p == 0:
            evidence.append(SplittingEvidence(p, False, ramified=True))
        else:
            evidence.append(SplittingEvidence(p, splits_completely(p, cs)))
    value = all(e.splits for e in evidence)
    reason = None
    if not value:
        bad = [str(e.p) for e in evidence if not e.splits]
        reason = f"no complete splitting at {','.join(bad)}"
    return CarmichaelFrobeniusResult(value, cert, tuple(evidence), reason)
