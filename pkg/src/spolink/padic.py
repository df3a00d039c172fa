"""Exact base-p digit arithmetic: expansions, carries, binomial residues, valuations.

Everything here is integer-exact at a fixed odd prime p >= 3.  Characteristic 2
is rejected up front: the rank-one formulas downstream divide by 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INFINITY: float = math.inf


def is_odd_prime(p: int) -> bool:
    """True for odd primes >= 3 (2 is deliberately excluded)."""
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, slots=True)
class Prime:
    """A validated odd prime, the characteristic used by every module."""

    p: int

    def __post_init__(self) -> None:
        if not is_odd_prime(self.p):
            raise ValueError(f"need an odd prime >= 3, got {self.p!r}")

    def __int__(self) -> int:
        return self.p


def digits(n: int, p: int) -> list[int]:
    """Base-p digits of n >= 0, least significant first; 0 -> []."""
    if n < 0:
        raise ValueError(f"digits() needs n >= 0, got {n}")
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def carries(a: int, b: int, p: int) -> int:
    """Number of carries when a is added to b in base p.

    By Kummer's theorem this equals the p-adic valuation of C(a+b, a).
    """
    if a < 0 or b < 0:
        raise ValueError("carries() needs a, b >= 0")
    count = 0
    carry = 0
    while a or b or carry:
        carry = 1 if a % p + b % p + carry >= p else 0
        count += carry
        a //= p
        b //= p
    return count


def binom_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by digitwise products (Lucas); 0 when k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    r = 1
    while k:
        nd = n % p
        kd = k % p
        if kd > nd:
            return 0
        r = r * math.comb(nd, kd) % p
        n //= p
        k //= p
    return r


def a_val(l: int, p: int) -> int | float:
    """Exponent of the exact power of p dividing l; a_val(0) = INFINITY."""
    if l == 0:
        return INFINITY
    l = abs(l)
    v = 0
    while l % p == 0:
        v += 1
        l //= p
    return v


def defect(l: int, p: int) -> int:
    """Largest d such that p^d divides l + 1 (always finite for l >= 0)."""
    if l < 0:
        raise ValueError(f"defect() needs l >= 0, got {l}")
    return int(a_val(l + 1, p))


def all_divisible(k: int, j: int, p: int) -> bool:
    """Whether p divides every one of C(k-j, 1), C(k-j+1, 2), ..., C(k-1, j).

    For j = 0 the set is empty and the answer is vacuously True.  Otherwise
    the run is all-divisible exactly when j < p^a, where p^a is the exact
    power of p dividing k - j.  Callers that additionally need p | k check
    that themselves.
    """
    if not 0 <= j < k:
        raise ValueError(f"all_divisible() needs 0 <= j < k, got j={j}, k={k}")
    if j == 0:
        return True
    return j < p ** int(a_val(k - j, p))
