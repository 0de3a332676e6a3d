"""Trial-division factorization and p-adic valuations.

A Factorization is a plain dict mapping prime -> exponent.  Individual
degrees stay small (the largest in any table is 600), so trial division
with a fixed bound is all that is needed; large total degrees are always
factored by merging per-degree factorizations, never directly.
"""

from collections import Counter
from typing import Dict, Iterable

Factorization = Dict[int, int]

FACTOR_LIMIT = 10**6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def factorize(v: int) -> Factorization:
    """Exact factorization of a positive integer up to FACTOR_LIMIT."""
    if v < 1:
        raise ValueError(f"cannot factor non-positive integer {v}")
    if v > FACTOR_LIMIT:
        raise ValueError(f"{v} exceeds the trial-division bound {FACTOR_LIMIT}")
    f: Factorization = {}
    i = 2
    while i * i <= v:
        while v % i == 0:
            f[i] = f.get(i, 0) + 1
            v //= i
        i += 1
    if v > 1:
        f[v] = f.get(v, 0) + 1
    return f


def merge_factorizations(fs: Iterable[Factorization]) -> Factorization:
    """Exponent-wise sum; the merged value is the product of the inputs."""
    total: Counter = Counter()
    for f in fs:
        total.update(f)
    return dict(total)


def factorize_multidegree(degrees: Iterable[int]) -> Factorization:
    """Factor a product of degrees without ever forming the product."""
    return merge_factorizations(factorize(d) for d in degrees)


def padic_valuation(f: Factorization, p: int) -> int:
    """Exponent of the prime p in f (0 if absent)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return f.get(p, 0)


def factorization_value(f: Factorization) -> int:
    v = 1
    for p, a in f.items():
        v *= p**a
    return v


def format_factorization(f: Factorization) -> str:
    """Render as e.g. ``2^6*3^4*11``; empty product renders as ``1``."""
    if not f:
        return "1"
    parts = []
    for p in sorted(f):
        a = f[p]
        parts.append(f"{p}^{a}" if a > 1 else f"{p}")
    return "*".join(parts)


def parse_factorization(text: str) -> Factorization:
    """Inverse of format_factorization."""
    text = text.strip()
    if text == "1":
        return {}
    f: Factorization = {}
    for part in text.split("*"):
        base, _, exp = part.partition("^")
        p = int(base)
        a = int(exp) if exp else 1
        if not is_prime(p) or a < 1:
            raise ValueError(f"bad factorization term {part!r}")
        f[p] = f.get(p, 0) + a
    return f
