# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled scan kernel; same contract as ``_core_py``.

Values stay arbitrary-precision Python ints (they routinely exceed 64
bits); the win comes from compiling the enumeration and recursion
scaffolding around them.
"""

IMPL_NAME = "cython"

cdef list _FACT = [1, 1, 2, 6, 24, 120, 720, 5040]


cpdef list g_ladder(list s):
    """Return [g_1, ..., g_m] for the power-sum values s = [s_1..s_m]."""
    cdef Py_ssize_t m = len(s)
    cdef Py_ssize_t i, j
    cdef list g = [1] * (m + 1)
    cdef object acc, perm, term
    for j in range(1, m + 1):
        acc = 0
        perm = 1
        for i in range(1, j + 1):
            term = perm * g[j - i] * s[i - 1]
            if i & 1:
                acc = acc + term
            else:
                acc = acc - term
            perm = perm * (j - i)
        g[j] = acc
    return g[1:]


cpdef tuple invariant_key(Py_ssize_t n, Py_ssize_t r, object d, list s):
    cdef object c = n + r + 1
    cdef Py_ssize_t half = n // 2
    cdef Py_ssize_t i, k
    cdef list shifted = [c - si for si in s]
    cdef list gs = g_ladder(shifted)
    cdef object e = d * gs[n - 1] // _FACT[n]
    cdef list pargs = [c - s[2 * i - 1] for i in range(1, half + 1)]
    cdef list p = g_ladder(pargs)
    if n == 2:
        return (d * p[0], e, (c - s[0]) & 1)
    if n == 3:
        return (d, p[0], e)
    return (d,) + tuple([p[k] // _FACT[k + 1] for k in range(half)]) + (e,)


cpdef tuple power_key(Py_ssize_t n, Py_ssize_t r, object d, list s):
    return (r, d) + tuple(s)


cdef void _extend(list out, Py_ssize_t n, Py_ssize_t min_codim, Py_ssize_t max_codim,
                  object max_total, bint power_mode, list s, list degrees,
                  Py_ssize_t cap, object prod):
    cdef Py_ssize_t r = len(degrees)
    cdef Py_ssize_t v, i
    cdef object nxt, pw
    if r >= min_codim:
        if power_mode:
            out.append((power_key(n, r, prod, s), tuple(degrees)))
        else:
            out.append((invariant_key(n, r, prod, s), tuple(degrees)))
    if r == max_codim:
        return
    for v in range(2, cap + 1):
        nxt = prod * v
        if max_total is not None and nxt > max_total:
            break
        pw = v
        for i in range(n):
            s[i] = s[i] + pw
            pw = pw * v
        degrees.append(v)
        _extend(out, n, min_codim, max_codim, max_total, power_mode, s, degrees, v, nxt)
        degrees.pop()
        pw = v
        for i in range(n):
            s[i] = s[i] - pw
            pw = pw * v


cpdef list scan(Py_ssize_t n, Py_ssize_t max_degree, Py_ssize_t min_codim,
                Py_ssize_t max_codim, object max_total, bint power_mode,
                d1_values):
    cdef list out = []
    cdef list s = [0] * n
    cdef list degrees = []
    cdef Py_ssize_t d1, i
    cdef object pw
    for d1 in d1_values:
        if d1 < 2 or d1 > max_degree:
            continue
        if max_total is not None and d1 > max_total:
            continue
        pw = d1
        for i in range(n):
            s[i] = s[i] + pw
            pw = pw * d1
        degrees.append(d1)
        _extend(out, n, min_codim, max_codim, max_total, power_mode, s, degrees, d1, d1)
        degrees.pop()
        pw = d1
        for i in range(n):
            s[i] = s[i] - pw
            pw = pw * d1
    return out
