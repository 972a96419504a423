"""Arithmetic in the finite field GF(s) for prime powers s <= 32.

Elements are addressed by integer index 0..s-1.  Index 0 is the additive
identity and index 1 the multiplicative identity.  For s = p^t with t > 1,
the element with index i is the residue-class polynomial whose coefficient
of x^k is the k-th base-p digit of i (constant term least significant).
The index -> element mapping is therefore a pure function of s: stable
across runs, platforms, and versions.

For prime s the index IS the residue, so add/mul agree with integer
arithmetic mod s.

Extension fields use the fixed monic reduction polynomials below
(coefficients listed constant term first):

    GF(4)  : x^2 + x + 1
    GF(8)  : x^3 + x + 1
    GF(9)  : x^2 + 1
    GF(16) : x^4 + x + 1
    GF(25) : x^2 + 2
    GF(27) : x^3 + 2x + 1
    GF(32) : x^5 + x^2 + 1

Every constructed field is verified exhaustively against the field axioms
(commutativity, associativity, identities, inverses, distributivity).
At s <= 32 the full s^3 sweep is a handful of vectorized comparisons.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import NotPrimePowerError, UnsupportedOrderError, ZeroInverseError

MAX_ORDER = 32

#: reduction polynomial per extension-field order, constant term first,
#: monic (trailing coefficient 1), degree t.
REDUCTION_POLYNOMIALS: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 0, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
}


def _factor_prime_power(s: int) -> tuple[int, int]:
    """Return (p, t) with s = p^t, or raise NotPrimePowerError."""
    if s < 2:
        raise NotPrimePowerError(f"field order must be at least 2, got {s}")
    p = None
    for cand in range(2, s + 1):
        if s % cand == 0:
            p = cand
            break
    assert p is not None
    t = 0
    rest = s
    while rest % p == 0:
        rest //= p
        t += 1
    if rest != 1:
        raise NotPrimePowerError(f"{s} is not a prime power")
    return p, t


def _digits(i: int, p: int, t: int) -> tuple[int, ...]:
    """Base-p digits of i, least significant (= constant term) first."""
    out = []
    for _ in range(t):
        out.append(i % p)
        i //= p
    return tuple(out)


def _poly_mul_reduce(a: tuple[int, ...], b: tuple[int, ...],
                     reduction: tuple[int, ...], p: int) -> tuple[int, ...]:
    """(a * b) mod reduction over GF(p), coefficients constant-first."""
    t = len(reduction) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    # long division by the monic reduction polynomial
    for k in range(len(prod) - 1, t - 1, -1):
        c = prod[k]
        if c == 0:
            continue
        prod[k] = 0
        for j in range(t):
            prod[k - t + j] = (prod[k - t + j] - c * reduction[j]) % p
    return tuple(prod[:t]) + (0,) * (t - len(prod))


class GaloisField:
    """GF(s) with full add/mul lookup tables and an inverse table.

    Not constructed directly in normal use -- call :func:`galois_field`,
    which validates the order and caches instances.
    """

    def __init__(self, s: int):
        if s > MAX_ORDER:
            raise UnsupportedOrderError(
                f"field order {s} exceeds the supported cap {MAX_ORDER}")
        p, t = _factor_prime_power(s)
        self.s = s
        self.p = p
        self.t = t
        self.reduction_polynomial: tuple[int, ...] = (
            REDUCTION_POLYNOMIALS[s] if t > 1 else ())

        digits = np.array([_digits(i, p, t) for i in range(s)], dtype=np.int64)
        powers = p ** np.arange(t, dtype=np.int64)

        # addition is digitwise mod p
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ powers

        if t == 1:
            mul = (np.arange(s)[:, None] * np.arange(s)[None, :]) % p
        else:
            red = self.reduction_polynomial
            mul = np.zeros((s, s), dtype=np.int64)
            for a in range(s):
                da = _digits(a, p, t)
                for b in range(a, s):
                    c = _poly_mul_reduce(da, _digits(b, p, t), red, p)
                    val = sum(ci * p ** k for k, ci in enumerate(c))
                    mul[a, b] = mul[b, a] = val

        self.add_table = add.astype(np.int64)
        self.mul_table = mul.astype(np.int64)
        self.neg_table = np.argwhere(self.add_table == 0)[:, 1].astype(np.int64)
        inv = np.zeros(s, dtype=np.int64)
        inv[1:] = np.argwhere(self.mul_table[1:] == 1)[:, 1]
        self.inv_table = inv
        for table in (self.add_table, self.mul_table,
                      self.neg_table, self.inv_table):
            table.setflags(write=False)
        self._check_axioms()

    # -- scalar operations ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverseError("zero has no multiplicative inverse")
        return int(self.inv_table[a])

    def elements(self) -> range:
        return range(self.s)

    def nonzero(self) -> range:
        return range(1, self.s)

    def __repr__(self) -> str:  # pragma: no cover
        return f"GaloisField({self.s})"

    # -- exhaustive self-check --------------------------------------------

    def _check_axioms(self) -> None:
        s, A, M = self.s, self.add_table, self.mul_table
        idx = np.arange(s)
        assert (A == A.T).all() and (M == M.T).all(), "commutativity"
        assert (A[0] == idx).all(), "additive identity"
        assert (M[1] == idx).all(), "multiplicative identity"
        assert (M[0] == 0).all(), "zero absorbs"
        assert ((A == 0).sum(axis=1) == 1).all(), "additive inverses"
        assert ((M[1:] == 1).sum(axis=1) == 1).all(), "multiplicative inverses"
        # a + (b + c) == (a + b) + c and a * (b * c) == (a * b) * c
        assert (A[A[:, :, None], idx[None, None, :]]
                == A[idx[:, None, None], A[None, :, :]]).all(), "assoc (+)"
        assert (M[M[:, :, None], idx[None, None, :]]
                == M[idx[:, None, None], M[None, :, :]]).all(), "assoc (*)"
        # a * (b + c) == a*b + a*c
        assert (M[idx[:, None, None], A[None, :, :]]
                == A[M[:, :, None], M[:, None, :]]).all(), "distributivity"


@lru_cache(maxsize=None)
def galois_field(s: int) -> GaloisField:
    """Return the (cached) field of order s.

    Raises NotPrimePowerError for composite-with-two-primes or s < 2,
    UnsupportedOrderError for prime powers above 32.
    """
    return GaloisField(s)
