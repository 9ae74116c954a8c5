"""GF(2)[x] arithmetic on bit-packed ints (bit i = coefficient of x^i)."""


def degree(p: int) -> int:
    """Degree of p, with degree(0) = -1."""
    return p.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carry-less (polynomial) product."""
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def divmod_poly(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = degree(b)
    while degree(a) >= db:
        s = degree(a) - db
        q |= 1 << s
        a ^= b << s
    return q, a


def mod_poly(a: int, b: int) -> int:
    return divmod_poly(a, b)[1]


def reciprocal(p: int, deg: int) -> int:
    """x^deg * p(1/x): coefficients reversed across positions 0..deg."""
    if degree(p) > deg:
        raise ValueError("reciprocal degree smaller than polynomial degree")
    r = 0
    for i in range(deg + 1):
        if p >> i & 1:
            r |= 1 << (deg - i)
    return r


def eval_in_field(field, p: int, x: int) -> int:
    """Evaluate the GF(2) polynomial p at the GF(2^m) element x (Horner)."""
    acc = 0
    for i in range(degree(p), -1, -1):
        acc = field.mul(acc, x) ^ (p >> i & 1)
    return acc


def to_hex(p: int) -> str:
    """Ascending-degree bit packing rendered as a hex literal."""
    return format(p, "x")


def from_hex(s: str) -> int:
    return int(s, 16)


def to_monomial_str(p: int) -> str:
    """Human-readable sum of monomials, highest degree first (x^3 + x + 1)."""
    if p == 0:
        return "0"
    terms = []
    for i in range(degree(p), -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms)


def from_exponents(exps) -> int:
    p = 0
    for e in exps:
        p ^= 1 << int(e)  # int(): numpy integers would wrap at 64 bits
    return p
