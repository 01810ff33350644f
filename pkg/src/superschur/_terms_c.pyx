# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of superschur._terms.

Same representation and contracts as the pure-Python kernel: term dicts map
flat monomial tuples to reduced (num, den) int pairs.  Coefficients stay
arbitrary-precision Python ints; the win is compiling the merge and
accumulation loops.
"""

from math import gcd


cpdef tuple frac_norm(num, den):
    """Reduce num/den to lowest terms with a positive denominator."""
    if den < 0:
        num = -num
        den = -den
    g = gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return num, den


cpdef tuple frac_add(n1, d1, n2, d2):
    """n1/d1 + n2/d2, reduced."""
    return frac_norm(n1 * d2 + n2 * d1, d1 * d2)


cpdef tuple frac_mul(n1, d1, n2, d2):
    """(n1/d1) * (n2/d2), reduced."""
    return frac_norm(n1 * n2, d1 * d2)


cpdef tuple mono_mul(tuple m1, tuple m2):
    """Merge two sorted flat monomials, adding exponents."""
    cdef Py_ssize_t i = 0, j = 0, len1 = len(m1), len2 = len(m2)
    if len1 == 0:
        return m2
    if len2 == 0:
        return m1
    out = []
    while i < len1 and j < len2:
        v1 = m1[i]
        v2 = m2[j]
        if v1 == v2:
            out.append(v1)
            out.append(m1[i + 1] + m2[j + 1])
            i += 2
            j += 2
        elif v1 < v2:
            out.append(v1)
            out.append(m1[i + 1])
            i += 2
        else:
            out.append(v2)
            out.append(m2[j + 1])
            j += 2
    while i < len1:
        out.append(m1[i])
        i += 1
    while j < len2:
        out.append(m2[j])
        j += 1
    return tuple(out)


cpdef mono_div(tuple m1, tuple m2):
    """m1 / m2 as a monomial, or None when m2 does not divide m1."""
    cdef Py_ssize_t i = 0, j = 0, len1 = len(m1), len2 = len(m2)
    if len2 == 0:
        return m1
    out = []
    while j < len2:
        if i >= len1:
            return None
        v1 = m1[i]
        v2 = m2[j]
        if v1 == v2:
            e = m1[i + 1] - m2[j + 1]
            if e < 0:
                return None
            if e > 0:
                out.append(v1)
                out.append(e)
            i += 2
            j += 2
        elif v1 < v2:
            out.append(v1)
            out.append(m1[i + 1])
            i += 2
        else:
            return None
    while i < len1:
        out.append(m1[i])
        i += 1
    return tuple(out)


cpdef mono_degree(tuple m):
    """Total degree of a monomial."""
    cdef Py_ssize_t i, n = len(m)
    deg = 0
    for i in range(1, n, 2):
        deg += m[i]
    return deg


cpdef dict terms_add(dict a, dict b):
    """a + b."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    for mono, c2 in b.items():
        c1 = out.get(mono)
        if c1 is None:
            out[mono] = c2
            continue
        d1 = c1[1]
        d2 = c2[1]
        if d1 == 1 and d2 == 1:
            n = c1[0] + c2[0]
            d = 1
        else:
            n, d = frac_add(c1[0], d1, c2[0], d2)
        if n == 0:
            del out[mono]
        else:
            out[mono] = (n, d)
    return out


cpdef dict terms_sub(dict a, dict b):
    """a - b."""
    cdef dict out = dict(a)
    if not b:
        return out
    for mono, c2 in b.items():
        c1 = out.get(mono)
        if c1 is None:
            out[mono] = (-c2[0], c2[1])
            continue
        d1 = c1[1]
        d2 = c2[1]
        if d1 == 1 and d2 == 1:
            n = c1[0] - c2[0]
            d = 1
        else:
            n, d = frac_add(c1[0], d1, -c2[0], d2)
        if n == 0:
            del out[mono]
        else:
            out[mono] = (n, d)
    return out


cpdef dict terms_neg(dict a):
    """-a."""
    cdef dict out = {}
    for mono, c in a.items():
        out[mono] = (-c[0], c[1])
    return out


cpdef dict terms_scale(dict a, num, den):
    """a * (num/den)."""
    cdef dict out = {}
    if num == 0:
        return out
    for mono, c in a.items():
        out[mono] = frac_mul(c[0], c[1], num, den)
    return out


cpdef dict terms_mul_term(dict a, tuple mono, num, den):
    """a * (num/den) * mono."""
    cdef dict out = {}
    if num == 0:
        return out
    for m, c in a.items():
        out[mono_mul(m, mono)] = frac_mul(c[0], c[1], num, den)
    return out


cpdef dict terms_mul(dict a, dict b):
    """a * b by distributing every term pair; the hot kernel.

    Integer coefficients (den == 1 throughout, the dominant case here) take
    a gcd-free path.
    """
    cdef dict out = {}
    if not a or not b:
        return out
    if len(a) < len(b):
        a, b = b, a
    for mb, cb in b.items():
        nb = cb[0]
        db = cb[1]
        if db == 1:
            for ma, ca in a.items():
                mono = mono_mul(ma, mb)
                c = out.get(mono)
                da = ca[1]
                if c is None:
                    if da == 1:
                        out[mono] = (ca[0] * nb, 1)
                    else:
                        out[mono] = frac_norm(ca[0] * nb, da)
                elif c[1] == 1 and da == 1:
                    n = c[0] + ca[0] * nb
                    if n == 0:
                        del out[mono]
                    else:
                        out[mono] = (n, 1)
                else:
                    n, d = frac_add(c[0], c[1], ca[0] * nb, da)
                    if n == 0:
                        del out[mono]
                    else:
                        out[mono] = (n, d)
        else:
            for ma, ca in a.items():
                mono = mono_mul(ma, mb)
                c = out.get(mono)
                if c is None:
                    out[mono] = frac_norm(ca[0] * nb, ca[1] * db)
                else:
                    n, d = frac_add(c[0], c[1], ca[0] * nb, ca[1] * db)
                    if n == 0:
                        del out[mono]
                    else:
                        out[mono] = (n, d)
    return out
