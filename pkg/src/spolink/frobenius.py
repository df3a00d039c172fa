"""Thickened rank-one modules: 2p^r-dimensional induced modules over the r-th
thickening, their socles, the unique Hom criterion, the thickened morphism
tables, composition factors, and blocks.

Weights live in all of Z here; the group-like generators may carry negative
exponents.  Monomials are indexed by (head, idx, eps) with 0 <= idx < p^r:

    minus side, head l:    x(1,1)^(l-idx-eps)  x(1,-1)^idx  x(1,0')^eps
    plus side,  head k     x(-1,-1)^(k-idx-eps) x(-1,1)^idx x(-1,0')^eps
    (module of lowest weight -k)

with torus weights l - 2 idx - eps and 2 idx + eps - k respectively.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .characters import Poly1
from .padic import binom_mod
from .spo21 import MorphismTable, branch_parts, _sub_multiset

R_MINUS = "minus"
R_PLUS = "plus"


@dataclass(frozen=True, slots=True, order=True)
class GrtMonomial:
    side: str
    head: int
    idx: int
    eps: int

    def __post_init__(self) -> None:
        if self.side not in (R_MINUS, R_PLUS):
            raise ValueError(f"bad side {self.side!r}")
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps}")
        if self.idx < 0:
            raise ValueError(f"idx must be >= 0, got {self.idx}")

    @property
    def weight(self) -> int:
        if self.side == R_MINUS:
            return self.head - 2 * self.idx - self.eps
        return 2 * self.idx + self.eps - self.head

    def __str__(self) -> str:
        if self.side == R_MINUS:
            parts = [("x(1,1)", self.head - self.idx - self.eps), ("x(1,-1)", self.idx)]
            odd = "x(1,0')"
        else:
            parts = [
                ("x(-1,-1)", self.head - self.idx - self.eps),
                ("x(-1,1)", self.idx),
            ]
            odd = "x(-1,0')"
        if self.eps:
            parts.append((odd, 1))
        shown = [f"{name}^{e}" if e != 1 else name for name, e in parts if e != 0]
        return " ".join(shown) if shown else "1"


def basis_h0_r(l: int, r: int, p: int, side: str) -> list[GrtMonomial]:
    """The 2 p^r monomials with idx < p^r and eps in {0, 1}; any integer head."""
    q = p**r
    out = [GrtMonomial(side, l, idx, 0) for idx in range(q)]
    out += [GrtMonomial(side, l, idx, 1) for idx in range(q)]
    return out


def _binom_nonzero(l: int, idx: int, q: int, p: int) -> int:
    # C(l, idx) mod p for 0 <= idx < q = p^r and any integer l: only the
    # digits of l below p^r matter, so reduce l into [0, q).
    return binom_mod(l % q, idx, p)


def socle_basis_r(l: int, r: int, p: int, side: str) -> list[GrtMonomial]:
    """Socle basis: even monomials with C(l, idx) nonzero mod p, plus (when p
    does not divide l) odd monomials with C(l-1, idx) nonzero; idx < p^r.

    The index sets depend on l only through its residue mod p^r, which is what
    makes the p^r-shift isomorphisms work.
    """
    q = p**r
    out = [
        GrtMonomial(side, l, idx, 0)
        for idx in range(q)
        if _binom_nonzero(l, idx, q, p)
    ]
    if l % p != 0:
        out += [
            GrtMonomial(side, l, idx, 1)
            for idx in range(q)
            if _binom_nonzero(l - 1, idx, q, p)
        ]
    return out


def ch_h0_r(l: int, r: int, p: int) -> Poly1:
    """Minus-side induced character: weights l, l-1, ..., l - 2p^r + 1."""
    return {l - j: 1 for j in range(2 * p**r)}


def ch_l_r(l: int, r: int, p: int) -> Poly1:
    """Minus-side simple character, from the socle index sets."""
    return {m.weight: 1 for m in socle_basis_r(l, r, p, R_MINUS)}


def hom_r(k: int, l: int, r: int, p: int) -> int:
    """1 when l = 2p^r - k - 1, else 0: the only nonzero Hom space."""
    return int(l == 2 * p**r - k - 1)


def psi_r_table(k: int, r: int, p: int) -> MorphismTable:
    """The morphism from the plus module of head k into the minus module of
    head 2p^r - k - 1, on basis monomials.

    With kt the representative of k in [p^r, 2p^r):

        even (idx=i, 0) -> (kt-i) C(kt-i-1, kt-p^r) * minus(p^r-i-1, 1)
        odd  (idx=i, 1) -> C(kt-i-1, kt-p^r)        * minus(p^r-i-1, 0)

    normalised so the odd source with i = p^r - 1 hits the target head
    monomial with coefficient 1.
    """
    q = p**r
    kt = k % q + q
    lt = 2 * q - k - 1
    rows: dict[GrtMonomial, dict[GrtMonomial, int]] = {}
    for src in basis_h0_r(k, r, p, R_PLUS):
        i = src.idx
        b = binom_mod(kt - i - 1, kt - q, p)
        if src.eps == 0:
            c = (kt - i) * b % p
            tgt = GrtMonomial(R_MINUS, lt, q - i - 1, 1)
        else:
            c = b
            tgt = GrtMonomial(R_MINUS, lt, q - i - 1, 0)
        rows[src] = {tgt: c} if c else {}
        if c:
            assert tgt.weight == src.weight, (src, tgt)
    return MorphismTable(k, lt, None, rows)


def comp_factors_r(l: int, r: int, p: int) -> Counter:
    """Composition factor multiset of the minus induced module of any integer
    head l: normalise into [p^r, 2p^r), run the residue branches on the full
    word stock for that window (negative word weights stay), shift back."""
    q = p**r
    lt = (l - q) % q + q
    shift = l - lt
    out = Counter({e + shift: 1 for e in branch_parts(lt, p, drop_negative=False)})
    assert all(v == 1 for v in out.values()), f"multiplicity > 1 at l={l}: {out}"
    return out


def block_of_r(l: int, p: int) -> int:
    """Block id in [0, p) for any integer weight; independent of r."""
    m = l % (2 * p)
    return m if m < p else 2 * p - 1 - m


def psi_r_ker_im_coker(k: int, r: int, p: int) -> tuple[Counter, Counter, Counter]:
    """Kernel, image, cokernel factors of the thickened morphism at head k.

    The image is the single simple of highest weight 2p^r - k - 1; domain and
    codomain share a character, so kernel and cokernel both carry every other
    factor of the codomain.
    """
    lt = 2 * p**r - k - 1
    im = Counter({lt: 1})
    rest = _sub_multiset(comp_factors_r(lt, r, p), im)
    return Counter(rest), im, Counter(rest)
