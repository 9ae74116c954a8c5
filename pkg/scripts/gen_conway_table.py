#!/usr/bin/env python3
"""Regenerate the frozen Conway polynomial table in src/seqcodes/gf2m.py.

A degree-m Conway polynomial over GF(2) is the lexicographically smallest
monic primitive polynomial (comparing coefficient tuples a_{m-1},...,a_0,
i.e. the integer value of the non-leading bits) that is norm-compatible
with the Conway polynomials of every proper subfield: for each d | m, d < m,
the element x^((2^m-1)/(2^d-1)) must be a root of the degree-d table entry.

Runs in a couple of minutes up to degree 26.  Output is meant to be pasted
into CONWAY_POLY; the packaged table never changes at runtime.
"""

import sys

# Polynomials are ints, bit i = coefficient of x^i.

_SPREAD = [0] * 256
for _b in range(256):
    _v = 0
    for _i in range(8):
        if _b >> _i & 1:
            _v |= 1 << (2 * _i)
    _SPREAD[_b] = _v


def poly_sq(a):
    # GF(2)[x] squaring = interleaving zero bits
    r = 0
    shift = 0
    while a:
        r |= _SPREAD[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return r


def poly_mulmod(a, b, p, m):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1 or a >> m:
            pass
        # reduce lazily below
        if a.bit_length() > m:
            a ^= p << (a.bit_length() - 1 - m)
    # a never exceeds deg m after the in-loop reduction; r may reach deg m
    while r.bit_length() > m:
        r ^= p << (r.bit_length() - 1 - m)
    return r


def poly_mod(a, p):
    dp = p.bit_length() - 1
    while a.bit_length() - 1 >= dp and a:
        a ^= p << (a.bit_length() - 1 - dp)
    return a


def poly_powmod(a, e, p):
    r = 1
    while e:
        if e & 1:
            r = poly_mod(_clmul(r, a), p)
        a = poly_mod(poly_sq(a), p)
        e >>= 1
    return r


def _clmul(a, b):
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def poly_gcd(a, b):
    while b:
        a, b = b, poly_mod(a, b)
    return a


def prime_factors(n):
    fs = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            fs.add(d)
            n //= d
        d += 1
    if n > 1:
        fs.add(n)
    return sorted(fs)


def is_irreducible(p, m):
    # x^(2^m) == x mod p, and x^(2^(m/q)) - x coprime to p for prime q | m
    x = poly_mod(2, p)
    t = x
    for _ in range(m):
        t = poly_mod(poly_sq(t), p)
    if t != x:
        return False
    for q in prime_factors(m):
        t = 2
        for _ in range(m // q):
            t = poly_mod(poly_sq(t), p)
        if poly_gcd(t ^ 2, p) != 1:
            return False
    return True


def is_primitive(p, m, n_factors):
    if not is_irreducible(p, m):
        return False
    n = (1 << m) - 1
    for r in n_factors:
        if poly_powmod(2, n // r, p) == 1:
            return False
    return True


def compatible(p, m, table):
    n = (1 << m) - 1
    for d in range(1, m):
        if m % d:
            continue
        y = poly_powmod(2, n // ((1 << d) - 1), p)
        # evaluate table[d] at y, mod p
        acc = 0
        c = table[d]
        i = 0
        while c:
            if c & 1:
                acc ^= poly_powmod(y, i, p)
            c >>= 1
            i += 1
        if acc != 0:
            return False
    return True


def conway(m, table):
    n = (1 << m) - 1
    nf = prime_factors(n)
    for low in range(1, 1 << m, 2):  # constant term must be 1
        p = (1 << m) | low
        if not is_primitive(p, m, nf):
            continue
        if compatible(p, m, table):
            return p
    raise AssertionError(f"no Conway polynomial of degree {m}?")


def main():
    max_m = int(sys.argv[1]) if len(sys.argv) > 1 else 26
    table = {}
    for m in range(1, max_m + 1):
        table[m] = conway(m, table)
        terms = [i for i in range(m, -1, -1) if table[m] >> i & 1]
        pretty = " + ".join("1" if i == 0 else "x" if i == 1 else f"x^{i}"
                            for i in terms)
        print(f"    {m}: 0x{table[m]:x},  # {pretty}")


if __name__ == "__main__":
    main()
