"""Pure-Python kernel for the exact single-sum 6j evaluation.

spinnet._racah_c is the compiled twin with the same interface; the
active one is chosen by spinnet.kernel at import time.  Inputs are
twice-values of a symbol {a b x; c d y} whose four triads (abx), (bcy),
(cdx), (ady) have already been validated by the caller.

The value is returned as (num, den, rad): the exact number
(num/den)*sqrt(rad) with gcd(num, den) == 1, den > 0 and rad a
square-free positive integer.
"""

from math import gcd

from .exactnum import factorial

BACKEND = "python"


def _legendre(n, p):
    # exponent of prime p in n!
    e = 0
    while n:
        n //= p
        e += n
    return e


def _primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            step = bytearray(len(range(p * p, n + 1, p)))
            sieve[p * p:: p] = step
    return [p for p in range(2, n + 1) if sieve[p]]


def _falling(top, bottom):
    # top! / bottom! for top >= bottom >= 0
    r = 1
    for v in range(bottom + 1, top + 1):
        r *= v
    return r


def sixj_raw(ta, tb, tx, tc, td, ty):
    """Exact {a b x; c d y} from twice-values with valid triads."""
    # triad perimeters and the three four-spin sums, in integer units
    a1 = (ta + tb + tx) // 2
    a2 = (ta + td + ty) // 2
    a3 = (tc + tb + ty) // 2
    a4 = (tc + td + tx) // 2
    b1 = (ta + tb + tc + td) // 2
    b2 = (tb + tx + td + ty) // 2
    b3 = (tx + ta + ty + tc) // 2

    zmin = max(a1, a2, a3, a4)
    zmax = min(b1, b2, b3)

    # alternating sum over a common denominator built from falling factorials
    num = 0
    for z in range(zmin, zmax + 1):
        t = factorial(z + 1)
        t *= _falling(zmax - a1, z - a1)
        t *= _falling(zmax - a2, z - a2)
        t *= _falling(zmax - a3, z - a3)
        t *= _falling(zmax - a4, z - a4)
        t *= _falling(b1 - zmin, b1 - z)
        t *= _falling(b2 - zmin, b2 - z)
        t *= _falling(b3 - zmin, b3 - z)
        num = num - t if z % 2 else num + t
    if num == 0:
        return 0, 1, 1
    den = (factorial(zmax - a1) * factorial(zmax - a2)
           * factorial(zmax - a3) * factorial(zmax - a4)
           * factorial(b1 - zmin) * factorial(b2 - zmin)
           * factorial(b3 - zmin))

    # sqrt of the product of the four squared triangle coefficients,
    # via prime exponents of the factorials involved
    num2, den2, rad = _triangle_sqrt(
        ((ta, tb, tx), (ta, td, ty), (tc, tb, ty), (tc, td, tx)))
    num *= num2
    den *= den2
    g = gcd(num, den)
    return num // g, den // g, rad


def _triangle_sqrt(triads):
    """sqrt of prod over triads of (g1)!(g2)!(g3)!/(perim+1)!, exactly.

    Returns (num, den, rad) with a square-free integer radicand.
    """
    args_plus = []
    args_minus = []
    for t1, t2, t3 in triads:
        args_plus.append((t1 + t2 - t3) // 2)
        args_plus.append((t1 - t2 + t3) // 2)
        args_plus.append((-t1 + t2 + t3) // 2)
        args_minus.append((t1 + t2 + t3) // 2 + 1)
    num, den, rad = 1, 1, 1
    for p in _primes_upto(max(args_minus)):
        e = 0
        for n in args_plus:
            e += _legendre(n, p)
        for n in args_minus:
            e -= _legendre(n, p)
        half, odd = divmod(e, 2)
        if odd:
            rad *= p
        if half > 0:
            num *= p ** half
        elif half < 0:
            den *= p ** (-half)
    return num, den, rad
