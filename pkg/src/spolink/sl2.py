"""Closed-form constituents of rank-one induced modules and the matching
linkage predicate."""

from __future__ import annotations

from collections import Counter

from .padic import defect
from .words import pruned_words


def decompose_sl2(k: int, p: int) -> Counter:
    """Simple constituents of the induced module of highest weight k >= 0.

    One factor per surviving word; weights are pairwise distinct, so every
    multiplicity is 1.
    """
    if k < 0:
        raise ValueError("decompose_sl2() needs k >= 0")
    out: Counter = Counter()
    for pw in pruned_words(k, p):
        out[pw.ell] = 1
    assert out[k] == 1, f"head weight {k} missing from its own decomposition"
    return out


def linked_sl2(l: int, k: int, p: int) -> bool:
    """Whether the nonnegative weights l and k lie in one rank-one block:
    equal defects d, and l congruent to k or to -k-2 modulo 2 p^(d+1)."""
    if l < 0 or k < 0:
        raise ValueError("linked_sl2() needs l, k >= 0")
    d = defect(l, p)
    if defect(k, p) != d:
        return False
    mod = 2 * p ** (d + 1)
    return (l - k) % mod == 0 or (l + k + 2) % mod == 0
