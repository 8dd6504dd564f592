# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for the exact single-sum 6j evaluation.

Same contract as spinnet._racah_py.sixj_raw: twice-values in, exact
(num, den, rad) out.  Arithmetic stays on Python ints (the values are
arbitrary precision); the speedup comes from C-level loop and call
overhead, a C sieve, and C Legendre exponent counting.
"""

from libc.stdlib cimport free, malloc

from math import gcd

from .exactnum import factorial

BACKEND = "c"


cdef long _legendre(long n, long p):
    cdef long e = 0
    while n:
        n //= p
        e += n
    return e


def sixj_raw(ta, tb, tx, tc, td, ty):
    """Exact {a b x; c d y} from twice-values with valid triads."""
    cdef long a1 = (ta + tb + tx) // 2
    cdef long a2 = (ta + td + ty) // 2
    cdef long a3 = (tc + tb + ty) // 2
    cdef long a4 = (tc + td + tx) // 2
    cdef long b1 = (ta + tb + tc + td) // 2
    cdef long b2 = (tb + tx + td + ty) // 2
    cdef long b3 = (tx + ta + ty + tc) // 2
    cdef long zmin = max(a1, a2, a3, a4)
    cdef long zmax = min(b1, b2, b3)
    cdef long z, v

    num = 0
    for z in range(zmin, zmax + 1):
        t = factorial(z + 1)
        for v in range(z - a1 + 1, zmax - a1 + 1):
            t *= v
        for v in range(z - a2 + 1, zmax - a2 + 1):
            t *= v
        for v in range(z - a3 + 1, zmax - a3 + 1):
            t *= v
        for v in range(z - a4 + 1, zmax - a4 + 1):
            t *= v
        for v in range(b1 - z + 1, b1 - zmin + 1):
            t *= v
        for v in range(b2 - z + 1, b2 - zmin + 1):
            t *= v
        for v in range(b3 - z + 1, b3 - zmin + 1):
            t *= v
        num = num - t if z % 2 else num + t
    if num == 0:
        return 0, 1, 1
    den = (factorial(zmax - a1) * factorial(zmax - a2)
           * factorial(zmax - a3) * factorial(zmax - a4)
           * factorial(b1 - zmin) * factorial(b2 - zmin)
           * factorial(b3 - zmin))

    # prime-exponent sqrt of the product of the four triangle factors
    cdef long maxarg = zmin + 1
    cdef long plus[12]
    cdef long minus[4]
    plus[0] = a1 - tx; plus[1] = a1 - tb; plus[2] = a1 - ta
    plus[3] = a2 - ty; plus[4] = a2 - td; plus[5] = a2 - ta
    plus[6] = a3 - ty; plus[7] = a3 - tb; plus[8] = a3 - tc
    plus[9] = a4 - tx; plus[10] = a4 - td; plus[11] = a4 - tc
    minus[0] = a1 + 1; minus[1] = a2 + 1; minus[2] = a3 + 1; minus[3] = a4 + 1

    cdef char *comp = <char *> malloc((maxarg + 1) * sizeof(char))
    if comp == NULL:
        raise MemoryError()
    cdef long i, p, q, e, half
    try:
        for i in range(maxarg + 1):
            comp[i] = 0
        rad = 1
        p = 2
        while p <= maxarg:
            if not comp[p]:
                q = p * p
                while q <= maxarg:
                    comp[q] = 1
                    q += p
                e = 0
                for i in range(12):
                    e += _legendre(plus[i], p)
                for i in range(4):
                    e -= _legendre(minus[i], p)
                half = e >> 1
                if e & 1:
                    rad *= p
                if half > 0:
                    num *= int(p) ** int(half)
                elif half < 0:
                    den *= int(p) ** int(-half)
            p += 1
    finally:
        free(comp)

    g = gcd(num, den)
    return num // g, den // g, rad
