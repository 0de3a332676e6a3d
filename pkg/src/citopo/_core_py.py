"""Pure-Python scan kernel: multidegree enumeration fused with key computation.

This is the hot inner loop of the search.  The compiled twin in
``_core_cy.pyx`` implements the identical contract; ``_core`` picks one at
import time.  All arithmetic stays on Python ints because the values
routinely exceed 64 bits.

The g ladder here uses the all-integer form of the Newton recursion,
    g_j = sum_{i=1..j} (-1)^{i-1} * (j-1)!/(j-i)! * g_{j-i} * s_i,
which avoids rationals entirely (the public ``newton.newton_g`` is the
independent rational-arithmetic route used to cross-check it).
"""

IMPL_NAME = "python"


def g_ladder(s):
    """Return [g_1, ..., g_m] for the power-sum values s = [s_1..s_m]."""
    m = len(s)
    g = [1] * (m + 1)
    for j in range(1, m + 1):
        acc = 0
        perm = 1  # (j-1)!/(j-i)! for the current i
        for i in range(1, j + 1):
            term = perm * g[j - i] * s[i - 1]
            acc = acc + term if i & 1 else acc - term
            perm *= j - i
        g[j] = acc
    return g[1:]


_FACT = [1, 1, 2, 6, 24, 120, 720, 5040]


def invariant_key(n, r, d, s):
    """Grouping key in invariant mode: mirrors the per-dimension criteria.

    n=2: (d*p_1, e, c_1 mod 2); n=3: (d, p_1, e); n=4..7: (d, p_1.., e).
    r is deliberately not part of the key: the invariants absorb it, and
    matches across distinct codimensions must stay discoverable.
    """
    c = n + r + 1
    gs = g_ladder([c - si for si in s])
    e = d * gs[n - 1] // _FACT[n]
    half = n // 2
    p = g_ladder([c - s[2 * i - 1] for i in range(1, half + 1)])
    if n == 2:
        return (d * p[0], e, (c - s[0]) & 1)
    if n == 3:
        return (d, p[0], e)
    return (d,) + tuple(p[k] // _FACT[k + 1] for k in range(half)) + (e,)


def power_key(n, r, d, s):
    """Grouping key in power-sum mode: (r, d, s_1..s_n).

    r is folded in so that equal keys force equal invariant profiles.
    """
    return (r, d) + tuple(s)


def scan(n, max_degree, min_codim, max_codim, max_total, power_mode, d1_values):
    """Enumerate canonical multidegrees with largest degree in d1_values and
    return [(key, multidegree), ...] for each codimension in range.

    Multidegrees are non-increasing tuples with entries in [2, max_degree];
    the product cap prunes during construction (the running product only
    grows as degrees are appended).
    """
    out = []
    key_fn = power_key if power_mode else invariant_key
    s = [0] * n
    degrees = []

    def extend(cap, prod):
        r = len(degrees)
        if r >= min_codim:
            out.append((key_fn(n, r, prod, s), tuple(degrees)))
        if r == max_codim:
            return
        for v in range(2, cap + 1):
            nxt = prod * v
            if max_total is not None and nxt > max_total:
                break
            pw = v
            for i in range(n):
                s[i] += pw
                pw *= v
            degrees.append(v)
            extend(v, nxt)
            degrees.pop()
            pw = v
            for i in range(n):
                s[i] -= pw
                pw *= v

    for d1 in d1_values:
        if d1 < 2 or d1 > max_degree:
            continue
        if max_total is not None and d1 > max_total:
            continue
        pw = d1
        for i in range(n):
            s[i] += pw
            pw *= d1
        degrees.append(d1)
        extend(d1, d1)
        degrees.pop()
        pw = d1
        for i in range(n):
            s[i] -= pw
            pw *= d1
    return out
