"""Formal characters as dict Laurent polynomials, plus the greedy peel oracle.

Rank-one characters are dicts {weight: coefficient} with int weights; the
multivariate characters used for flag comparisons are dicts keyed by integer
coordinate tuples.  Zero coefficients are never stored.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Callable

from .padic import digits

Poly1 = dict[int, int]
PolyN = dict[tuple[int, ...], int]


class NegativeResidualError(ValueError):
    """Raised when peel() drives some coefficient negative: the input was not
    a nonnegative sum of the supplied simple characters."""


def ch_H0_sl2(k: int) -> Poly1:
    """Character of the rank-one induced module: x^k + x^(k-2) + ... + x^(-k)."""
    if k < 0:
        raise ValueError("ch_H0_sl2() needs k >= 0")
    return {k - 2 * i: 1 for i in range(k + 1)}


def ch_L_sl2(k: int, p: int) -> Poly1:
    """Character of the simple of highest weight k: x^(k-2i) over i with p not
    dividing C(k, i), i.e. i digit-dominated by k in base p."""
    if k < 0:
        raise ValueError("ch_L_sl2() needs k >= 0")
    ranges = [range(d + 1) for d in digits(k, p)]
    out: Poly1 = {}
    for combo in product(*ranges):
        i = sum(c * p**t for t, c in enumerate(combo))
        out[k - 2 * i] = 1
    return out


def ch_H0_spo(l: int) -> Poly1:
    """Character of the rank-one super induced module: two interleaved strings,
    weights l, l-1, ..., -l, each once (dimension 2l + 1)."""
    if l < 0:
        raise ValueError("ch_H0_spo() needs l >= 0")
    return {l - j: 1 for j in range(2 * l + 1)}


def ch_L_spo(l: int, p: int) -> Poly1:
    """Character of the simple super module of highest weight l.

    One string when p | l, the two strings of weights l and l - 1 otherwise.
    """
    if l < 0:
        raise ValueError("ch_L_spo() needs l >= 0")
    out = ch_L_sl2(l, p)
    if l % p != 0:
        out.update(ch_L_sl2(l - 1, p))
    return out


def ch_truncate(ch: Poly1, l: int, r: int, p: int, side: str = "minus") -> Poly1:
    """Keep the window of 2 p^r weights starting at l: descending l, l-1, ...
    for the minus side, ascending l, l+1, ... for the plus side."""
    span = 2 * p**r
    if side == "minus":
        return {w: c for w, c in ch.items() if 0 <= l - w < span}
    if side == "plus":
        return {w: c for w, c in ch.items() if 0 <= w - l < span}
    raise ValueError(f"side must be 'minus' or 'plus', got {side!r}")


def peel(ch: Poly1, simple_ch: Callable[[int], Poly1]) -> Counter:
    """Greedy decomposition of ch into the given simple characters.

    Repeatedly take the largest weight with a positive residual coefficient,
    subtract that many copies of simple_ch at it, and record the factor.
    Raises NegativeResidualError unless the residual terminates at exactly
    zero; each simple character must have top coefficient 1 at its argument.
    """
    residual = {w: c for w, c in ch.items() if c}
    factors: Counter = Counter()
    if not residual:
        return factors
    w = max(residual)
    floor = min(residual)
    while w >= floor:
        c = residual.get(w, 0)
        if c < 0:
            raise NegativeResidualError(f"coefficient {c} at weight {w}")
        if c > 0:
            factors[w] = c
            for wt, coef in simple_ch(w).items():
                nv = residual.get(wt, 0) - c * coef
                if nv:
                    residual[wt] = nv
                else:
                    residual.pop(wt, None)
        w -= 1
    if residual:
        raise NegativeResidualError(f"nonzero residual left: {residual}")
    return factors


def poly_shift(a: Poly1, offset: int) -> Poly1:
    return {w + offset: c for w, c in a.items()}


def ch_product_Zr(
    lam: tuple[int, ...],
    even_pos: list[tuple[int, ...]],
    odd_pos: list[tuple[int, ...]],
    r: int,
    p: int,
) -> PolyN:
    """Product character e^lam * prod_even (1 + e^-a + ... + e^-(p^r-1)a)
    * prod_odd (1 + e^-a), all in integer coordinate tuples."""
    q = p**r
    acc: PolyN = {tuple(lam): 1}
    for alpha in even_pos:
        nxt: PolyN = {}
        for wt, c in acc.items():
            for t in range(q):
                key = tuple(w - t * a for w, a in zip(wt, alpha))
                nxt[key] = nxt.get(key, 0) + c
        acc = nxt
    for alpha in odd_pos:
        nxt = {}
        for wt, c in acc.items():
            for t in (0, 1):
                key = tuple(w - t * a for w, a in zip(wt, alpha))
                nxt[key] = nxt.get(key, 0) + c
        acc = nxt
    return acc


def factors_to_json(factors: Counter) -> dict:
    return {
        "factors": [
            {"hw": hw, "mult": m} for hw, m in sorted(factors.items(), reverse=True)
        ]
    }


def poly1_to_json(ch: Poly1) -> dict:
    return {
        "terms": [
            {"weight": [w], "coeff": ch[w]} for w in sorted(ch, reverse=True)
        ]
    }


def polyn_to_json(ch: PolyN) -> dict:
    return {
        "terms": [
            {"weight": list(w), "coeff": ch[w]} for w in sorted(ch, reverse=True)
        ]
    }
