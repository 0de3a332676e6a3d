"""Shared oracles and sweeps used by both the unit and acceptance suites."""

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial, prod

from citopo.invariants import power_sums, profile
from citopo.newton import newton_g

# Independent closed forms for g_1..g_7 (hand-expanded polynomials in the
# power sums; the recursion under test never sees these).
CLOSED_FORMS = {
    1: lambda s: s[0],
    2: lambda s: s[0] ** 2 - s[1],
    3: lambda s: s[0] ** 3 - 3 * s[0] * s[1] + 2 * s[2],
    4: lambda s: s[0] ** 4 - 6 * s[0] ** 2 * s[1] + 8 * s[0] * s[2]
    + 3 * s[1] ** 2 - 6 * s[3],
    5: lambda s: s[0] ** 5 - 10 * s[0] ** 3 * s[1] + 20 * s[0] ** 2 * s[2]
    - 30 * s[0] * s[3] + 15 * s[0] * s[1] ** 2 - 20 * s[1] * s[2] + 24 * s[4],
    6: lambda s: s[0] ** 6 - 15 * s[0] ** 4 * s[1] + 40 * s[0] ** 3 * s[2]
    - 90 * s[0] ** 2 * s[3] + 45 * s[0] ** 2 * s[1] ** 2
    - 120 * s[0] * s[1] * s[2] + 144 * s[0] * s[4] - 15 * s[1] ** 3
    + 90 * s[1] * s[3] + 40 * s[2] ** 2 - 120 * s[5],
    7: lambda s: s[0] ** 7 - 21 * s[0] ** 5 * s[1] + 70 * s[0] ** 4 * s[2]
    - 210 * s[0] ** 3 * s[3] + 105 * s[0] ** 3 * s[1] ** 2
    - 420 * s[0] ** 2 * s[1] * s[2] + 504 * s[0] ** 2 * s[4]
    - 105 * s[0] * s[1] ** 3 + 630 * s[0] * s[1] * s[3]
    + 280 * s[0] * s[2] ** 2 - 840 * s[0] * s[5]
    + 210 * s[1] ** 2 * s[2] - 504 * s[1] * s[4] - 420 * s[2] * s[3]
    + 720 * s[6],
}


def check_closed_forms(num_vectors: int = 1000, seed: int = 20240817) -> None:
    rng = random.Random(seed)
    for _ in range(num_vectors):
        k = rng.randint(1, 7)
        args = [rng.randint(-50, 50) for _ in range(k)]
        assert newton_g(k, args) == CLOSED_FORMS[k](args), (k, args)


def check_binomial_identity() -> None:
    # power sums of j unit roots are all j, so g_k = k! * C(j, k)
    for k in range(1, 8):
        for j in range(0, 13):
            assert newton_g(k, [j] * k) == factorial(k) * comb(j, k), (k, j)


def all_small_multidegrees(max_entry: int = 9, max_codim: int = 5):
    for r in range(1, max_codim + 1):
        for combo in combinations_with_replacement(range(2, max_entry + 1), r):
            yield tuple(sorted(combo, reverse=True))


def check_integrality_sweep() -> None:
    # every c_k, p_k integral and n! | d*g_n: no assertion may fire
    for md in all_small_multidegrees():
        for n in range(2, 8):
            profile(n, md, with_chern=True)


def padded_profile_fields(n: int, raw) -> tuple:
    """Evaluate the generic formulas directly on the raw list, 1s retained."""
    r = len(raw)
    d = prod(raw)
    s = [sum(v**i for v in raw) for i in range(1, n + 1)]
    c = n + r + 1
    c1 = c - s[0]
    p = tuple(
        newton_g(k, [c - s[2 * i - 1] for i in range(1, k + 1)]) // factorial(k)
        for k in range(1, n // 2 + 1)
    )
    e = d * newton_g(n, [c - si for si in s]) // factorial(n)
    return (d, c1, p, e)


def check_padding_invariance(cases: int = 200, seed: int = 991) -> None:
    from citopo.invariants import canonicalize

    rng = random.Random(seed)
    for _ in range(cases):
        n = rng.randint(2, 7)
        raw = [rng.randint(1, 9) for _ in range(rng.randint(1, 6))]
        pr = profile(n, canonicalize(raw))
        assert (pr.d, pr.c1, pr.p, pr.e) == padded_profile_fields(n, raw), (n, raw)


def check_projective_space_euler() -> None:
    from citopo.invariants import euler_characteristic

    for n in range(1, 8):
        assert euler_characteristic(n, ()) == n + 1


def check_hypersurface_euler() -> None:
    # e(X_2(d)) = d(d^2 - 4d + 6); at d=4 this is the K3 surface with e=24
    for d in range(2, 21):
        assert profile(2, (d,)).e == d * (d * d - 4 * d + 6)
    assert profile(2, (4,)).e == 24


# Per-dimension expanded formulas (the printed specializations used only as
# test oracles; p_3 for n=6,7 intentionally absent).
def specialized_fields(n: int, md) -> dict:
    r = len(md)
    d = prod(md)
    s = power_sums(md, n)
    c = n + r + 1
    out = {"d": d, "c1": c - s[0], "p1": c - s[1]}
    if n >= 4:
        half = Fraction((c - s[1]) ** 2 - (c - s[3]), 2)
        assert half.denominator == 1
        out["p2"] = int(half)
    e = Fraction(d) * CLOSED_FORMS[n]([c - si for si in s]) / factorial(n)
    assert e.denominator == 1
    out["e"] = int(e)
    return out


def check_specialized_agreement(per_dim: int = 500, seed: int = 7321) -> None:
    rng = random.Random(seed)
    for n in range(2, 8):
        for _ in range(per_dim):
            md = tuple(
                sorted((rng.randint(2, 30) for _ in range(rng.randint(1, 8))), reverse=True)
            )
            pr = profile(n, md)
            got = {"d": pr.d, "c1": pr.c1, "p1": pr.p[0], "e": pr.e}
            if n >= 4:
                got["p2"] = pr.p[1]
            assert got == specialized_fields(n, md), (n, md)
