"""Rank-one supergroup combinatorics: monomial bases of induced modules and
their socles, distribution-operator actions, Hom dimensions, the weight-lowering
morphisms with kernel/image/cokernel data, composition factors, and blocks.

Monomials are indexed side-uniformly by (head, i, eps):

    minus side   x(1,1)^(head-i-eps)   x(1,-1)^i  x(1,0')^eps
    plus side    x(-1,-1)^i  x(-1,1)^(head-i-eps) x(-1,0')^eps

where 0' marks the odd generator.  Both have torus weight head - 2i - eps, and
every weight space of a module here is one-dimensional, so spans of operator
images are plain monomial sets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .padic import all_divisible, binom_mod, digits
from .words import FIRST, SECOND, kind, pruned_words

MINUS = "minus"
PLUS = "plus"


@dataclass(frozen=True, slots=True, order=True)
class Monomial:
    side: str
    head: int
    i: int
    eps: int

    def __post_init__(self) -> None:
        if self.side not in (MINUS, PLUS):
            raise ValueError(f"bad side {self.side!r}")
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps}")
        if not 0 <= self.i <= self.head - self.eps:
            raise ValueError(
                f"exponent i={self.i} out of range for head={self.head}, eps={self.eps}"
            )

    @property
    def weight(self) -> int:
        return self.head - 2 * self.i - self.eps

    def __str__(self) -> str:
        if self.side == MINUS:
            parts = [("x(1,1)", self.head - self.i - self.eps), ("x(1,-1)", self.i)]
            odd = "x(1,0')"
        else:
            parts = [("x(-1,-1)", self.i), ("x(-1,1)", self.head - self.i - self.eps)]
            odd = "x(-1,0')"
        if self.eps:
            parts.append((odd, 1))
        shown = [f"{name}^{e}" if e != 1 else name for name, e in parts if e != 0]
        return " ".join(shown) if shown else "1"


VectorExpr = dict[Monomial, int]


def basis_h0(head: int, side: str) -> list[Monomial]:
    """Monomial basis of the induced module with the given head: head+1 even
    monomials followed by head odd ones (dimension 2*head + 1)."""
    if head < 0:
        raise ValueError("basis_h0() needs head >= 0")
    out = [Monomial(side, head, i, 0) for i in range(head + 1)]
    out += [Monomial(side, head, i, 1) for i in range(head)]
    return out


def socle_basis(l: int, p: int, side: str) -> list[Monomial]:
    """Basis of the simple socle: even monomials with C(l, i) nonzero mod p,
    plus (only when p does not divide l) odd monomials with C(l-1, i) nonzero."""
    if l < 0:
        raise ValueError("socle_basis() needs l >= 0")
    out = [Monomial(side, l, i, 0) for i in range(l + 1) if binom_mod(l, i, p)]
    if l % p != 0:
        out += [Monomial(side, l, i, 1) for i in range(l) if binom_mod(l - 1, i, p)]
    return out


def act(op: str, vec: VectorExpr, p: int, t: int = 1) -> VectorExpr:
    """Apply a distribution operator to a vector, coefficients mod p.

    f(t): (i, eps) -> C(head-i-eps, t) (i+t, eps)
    e(t): (i, eps) -> C(i, t) (i-t, eps)
    y:    (i, 0) -> (head-i) (i, 1);   (i, 1) -> (i+1, 0)
    x:    (i, 0) -> -i (i-1, 1);       (i, 1) -> (i, 0)

    The same index formulas hold on both sides.  Results whose coefficient
    vanishes mod p are dropped; a nonzero coefficient always lands in range.
    """
    out: VectorExpr = {}

    def add(mono: Monomial, c: int) -> None:
        c %= p
        if not c:
            return
        nv = (out.get(mono, 0) + c) % p
        if nv:
            out[mono] = nv
        else:
            out.pop(mono, None)

    for m, coeff in vec.items():
        h, i, eps, side = m.head, m.i, m.eps, m.side
        if op == "f":
            c = binom_mod(h - i - eps, t, p)
            if c:
                add(Monomial(side, h, i + t, eps), coeff * c)
        elif op == "e":
            c = binom_mod(i, t, p)
            if c:
                add(Monomial(side, h, i - t, eps), coeff * c)
        elif op == "y":
            if eps == 0:
                if (h - i) % p:
                    add(Monomial(side, h, i, 1), coeff * (h - i))
            else:
                add(Monomial(side, h, i + 1, 0), coeff)
        elif op == "x":
            if eps == 0:
                if i % p:
                    add(Monomial(side, h, i - 1, 1), -coeff * i)
            else:
                add(Monomial(side, h, i, 0), coeff)
        else:
            raise ValueError(f"unknown operator {op!r}")
    return out


def rad_basis(k: int, p: int) -> list[Monomial]:
    """Monomials spanning the radical of the plus-side induced module of head k
    under the lower-triangular Borel.

    Every weight space is one-dimensional, so the radical is spanned by the
    plus monomials it contains: all even ones with i >= 1; the odd one with
    i = 0 when p does not divide k; and the odd ones with 1 <= i <= k-1 whose
    binomial run is not all divisible by p.
    """
    if k < 0:
        raise ValueError("rad_basis() needs k >= 0")
    if k == 0:
        return []
    out = [Monomial(PLUS, k, i, 0) for i in range(1, k + 1)]
    if k % p != 0:
        out.append(Monomial(PLUS, k, 0, 1))
    out += [
        Monomial(PLUS, k, j, 1)
        for j in range(1, k)
        if not all_divisible(k, j, p)
    ]
    return out


def hom_dim(k: int, l: int, p: int) -> tuple[int, str | None]:
    """Dimension (0 or 1) of the morphism space from the plus module of head k
    to the minus module of head l, with its parity ("even"/"odd", None if 0).

    Nonzero exactly for l = k (even), or l = k - 1 - 2j (odd) with j = 0
    allowed only when p | k and j >= 1 requiring the all-divisible criterion.
    """
    if k < 0 or l < 0:
        raise ValueError("hom_dim() needs k, l >= 0")
    if l == k:
        return 1, "even"
    if k == 0:
        return 0, None
    d = k - 1 - l
    if d < 0 or d % 2:
        return 0, None
    j = d // 2
    if j == 0:
        ok = k % p == 0
    else:
        ok = all_divisible(k, j, p)
    return (1, "odd") if ok else (0, None)


def iso_k(mono: Monomial, k: int) -> Monomial:
    """The basis bijection between the plus and minus modules of equal head k."""
    if mono.side != PLUS or mono.head != k:
        raise ValueError("iso_k() expects a plus monomial of the given head")
    return Monomial(MINUS, k, mono.i, mono.eps)


def is_admissible_psi(k: int, j: int, p: int) -> bool:
    """Whether the weight-lowering morphism at (k, j) exists: head k - 1 - 2j
    stays nonnegative and hom_dim is one."""
    if k < 1 or j < 0:
        return False
    l = k - 1 - 2 * j
    if l < 0:
        return False
    return hom_dim(k, l, p)[0] == 1


def admissible_js(k: int, p: int) -> list[int]:
    return [j for j in range((k + 1) // 2) if is_admissible_psi(k, j, p)]


@dataclass(frozen=True, slots=True)
class MorphismTable:
    """Weight-preserving table of a morphism on monomial bases.

    rows maps every source monomial to a target expression (empty when the
    source is killed).  Weight spaces are one-dimensional, so each expression
    has at most one term.
    """

    source_head: int
    target_head: int
    j: int | None
    rows: dict

    def nonzero_rows(self) -> dict:
        return {s: expr for s, expr in self.rows.items() if expr}

    def to_tsv(self) -> str:
        lines = ["source\ttarget\tcoeff"]
        for src in self.rows:
            expr = self.rows[src]
            if not expr:
                lines.append(f"{src}\t0\t0")
            for tgt, c in expr.items():
                lines.append(f"{src}\t{tgt}\t{c}")
        return "\n".join(lines) + "\n"


def psi_table(k: int, j: int, p: int) -> MorphismTable:
    """The morphism from the plus module of head k to the minus module of head
    k - 1 - 2j, on basis monomials:

        even (i, 0) -> i * C(i-1, j) * minus(i-1-j, 1)
        odd  (i, 1) -> C(i, j)       * minus(i-j, 0)

    normalised so the odd source with i = j maps to the target highest even
    monomial with coefficient 1.  Coefficients live mod p; a vanishing
    coefficient marks a kernel monomial.
    """
    if not is_admissible_psi(k, j, p):
        raise ValueError(f"(k={k}, j={j}) is not admissible at p={p}")
    l = k - 1 - 2 * j
    rows: dict[Monomial, VectorExpr] = {}
    for src in basis_h0(k, PLUS):
        i = src.i
        if src.eps == 0:
            c = i * binom_mod(i - 1, j, p) % p
            if c:
                assert j + 1 <= i <= k - 1 - j, (k, j, i)
                rows[src] = {Monomial(MINUS, l, i - 1 - j, 1): c}
            else:
                rows[src] = {}
        else:
            c = binom_mod(i, j, p)
            if c:
                assert j <= i <= k - 1 - j, (k, j, i)
                rows[src] = {Monomial(MINUS, l, i - j, 0): c}
            else:
                rows[src] = {}
    for src, expr in rows.items():
        for tgt in expr:
            assert tgt.weight == src.weight, (src, tgt)
    return MorphismTable(k, l, j, rows)


def kernel_basis(k: int, j: int, p: int) -> list[Monomial]:
    """Closed-form kernel of the (k, j) morphism: monomials in the outer index
    ranges, plus inner ones whose table coefficient vanishes mod p."""
    if not is_admissible_psi(k, j, p):
        raise ValueError(f"(k={k}, j={j}) is not admissible at p={p}")
    out = []
    for i in range(k + 1):
        if i <= j or i >= k - j or i * binom_mod(i - 1, j, p) % p == 0:
            out.append(Monomial(PLUS, k, i, 0))
    for i in range(k):
        if i <= j - 1 or i >= k - j or binom_mod(i, j, p) == 0:
            out.append(Monomial(PLUS, k, i, 1))
    return out


def _branch(m: int, p: int, want: str, drop_negative: bool = True) -> list[int]:
    """Weights of the non-head surviving words of the given kind for weight m."""
    out = []
    for pw in pruned_words(m, p, drop_negative):
        if pw.ell == m:
            continue
        kd = kind(pw.word, pw.gen)
        assert kd in (FIRST, SECOND), pw
        if kd == want:
            out.append(pw.ell)
    return out


def branch_parts(l: int, p: int, drop_negative: bool = True) -> list[int]:
    """Constituent weights of the induced module of head l >= 1 by the residue
    of l mod p: the head, then first/second-kind word weights at l-1 and l
    (plus l-1 itself in the divisible case)."""
    r = l % p
    parts = [l]
    if r == 0:
        parts.append(l - 1)
        parts += _branch(l - 1, p, FIRST, drop_negative)
        parts += _branch(l, p, SECOND, drop_negative)
    elif r == p - 1:
        parts += _branch(l - 1, p, FIRST, drop_negative)
        parts += _branch(l, p, FIRST, drop_negative)
    else:
        parts += _branch(l - 1, p, FIRST, drop_negative)
        parts += _branch(l, p, SECOND, drop_negative)
    return parts


def comp_factors_h0(l: int, p: int) -> Counter:
    """Composition factor multiset of the minus induced module of head l >= 0;
    always multiplicity-free."""
    if l < 0:
        raise ValueError("comp_factors_h0() needs l >= 0")
    if l == 0:
        return Counter({0: 1})
    out = Counter(branch_parts(l, p))
    assert all(v == 1 for v in out.values()), f"multiplicity > 1 at l={l}: {out}"
    return out


def block_of(l: int, p: int) -> int:
    """Block id in [0, p): the unique a with l congruent to a or to 2p-1-a
    modulo 2p."""
    if l < 0:
        raise ValueError("block_of() needs l >= 0")
    m = l % (2 * p)
    return m if m < p else 2 * p - 1 - m


def _sub_multiset(a: Counter, b: Counter) -> Counter:
    out = Counter(a)
    for key, mult in b.items():
        out[key] -= mult
        if out[key] < 0:
            raise ValueError(f"multiset subtraction went negative at {key}")
        if out[key] == 0:
            del out[key]
    return out


def ker_im_coker_factors(k: int, j: int, p: int) -> tuple[Counter, Counter, Counter]:
    """Composition factors of the kernel, image and cokernel of the (k, j)
    morphism.

    j = 0 (so p | k): all three lists are closed-form word lists.  j > 0:
    the image is the first-kind word list cut to words opening with t
    'greater-or-equal' symbols, t the digit length of j; kernel and cokernel
    follow by multiset subtraction from the ends.
    """
    if not is_admissible_psi(k, j, p):
        raise ValueError(f"(k={k}, j={j}) is not admissible at p={p}")
    if j == 0:
        ker = Counter([k] + _branch(k, p, SECOND))
        im = Counter([k - 1] + _branch(k - 1, p, FIRST))
        coker = Counter(_branch(k - 2, p, FIRST)) if k >= 2 else Counter()
        return ker, im, coker
    t = len(digits(j, p))
    ge_prefix = "≥" * t
    im = Counter(
        pw.ell for pw in pruned_words(k - 1, p) if pw.word[:t] == ge_prefix
    )
    ker = _sub_multiset(comp_factors_h0(k, p), im)
    coker = _sub_multiset(comp_factors_h0(k - 1 - 2 * j, p), im)
    return ker, im, coker
