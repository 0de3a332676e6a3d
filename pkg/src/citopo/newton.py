"""Newton-identity engine: the integer polynomials g_k evaluated on power sums.

g_k/k! is the k-th elementary symmetric function written in terms of the
power sums of the roots.  The recursion is run in exact rational arithmetic
and the final value is asserted to be an integer.
"""

from fractions import Fraction
from math import factorial


class IntegralityError(ArithmeticError):
    """An exact computation that must produce an integer did not.

    This signals an implementation bug, never a bad input.
    """


def newton_g(k: int, args) -> int:
    """Evaluate g_k on the k power sums in ``args``.

    Defined by s_k - g_1 s_{k-1} + (1/2!) g_2 s_{k-2} - ...
    + (-1)^k (1/k!) g_k * k = 0, i.e. with e_j := g_j/j! the classical
    j*e_j = sum_{i=1..j} (-1)^{i-1} e_{j-i} s_i.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(args) != k:
        raise ValueError(f"g_{k} takes exactly {k} arguments, got {len(args)}")
    e = [Fraction(1)]
    for j in range(1, k + 1):
        acc = Fraction(0)
        for i in range(1, j + 1):
            term = e[j - i] * args[i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        e.append(acc / j)
    value = e[k] * factorial(k)
    if value.denominator != 1:
        raise IntegralityError(f"g_{k}{tuple(args)} evaluated to non-integer {value}")
    return int(value)
