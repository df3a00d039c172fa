"""Root systems and isotropic flags for the two families of orthosymplectic
shapes, positive systems attached to flags, elementary Borel moves and the
full chain from the standard flag to its negative, rho vectors, the bilinear
form, flag-normalised weights, and product characters.

Weight vectors are tuples of *doubled* integer coordinates in the basis
(delta_1..delta_n, eps_1..eps_m), so half-integers never leave the pairing.
Roots always have even doubled entries; ``natural(v)`` halves them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import PolyN, ch_product_Zr

ODD = "odd"
EVEN = "even"

SP = "s"  # symplectic label kind (delta block)
OR = "o"  # orthogonal label kind (epsilon block)

Label = tuple[str, int]
Vec = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class GroupShape:
    n: int  # symplectic rank
    m: int  # orthogonal rank
    parity_type: str

    def __post_init__(self) -> None:
        if self.n < 0 or self.m < 0 or self.n + self.m == 0:
            raise ValueError("need n, m >= 0 with n + m >= 1")
        if self.parity_type not in (ODD, EVEN):
            raise ValueError(f"parity_type must be {ODD!r} or {EVEN!r}")

    @property
    def rank(self) -> int:
        return self.n + self.m


@dataclass(frozen=True, slots=True)
class Root:
    vec: Vec  # doubled coordinates
    parity: str  # "even" / "odd"
    isotropic: bool | None  # set for odd roots only

    def natural(self) -> tuple[int, ...]:
        assert all(c % 2 == 0 for c in self.vec)
        return tuple(c // 2 for c in self.vec)


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def natural(v: Vec) -> tuple[int, ...]:
    assert all(c % 2 == 0 for c in v), f"{v} is not an integral weight"
    return tuple(c // 2 for c in v)


def doubled(v: tuple[int, ...]) -> Vec:
    return tuple(2 * c for c in v)


def delta(i: int, shape: GroupShape) -> Vec:
    """Doubled delta_i, 1-based."""
    return tuple(2 if t == i - 1 else 0 for t in range(shape.rank))


def eps(j: int, shape: GroupShape) -> Vec:
    """Doubled eps_j, 1-based."""
    return tuple(2 if t == shape.n + j - 1 else 0 for t in range(shape.rank))


def label_vec(label: Label, shape: GroupShape) -> Vec:
    kd, idx = label
    base = delta(abs(idx), shape) if kd == SP else eps(abs(idx), shape)
    return base if idx > 0 else vneg(base)


def label_str(label: Label) -> str:
    kd, idx = label
    return str(idx) if kd == SP else f"{idx}bar"


def parse_label(s: str) -> Label:
    if s.endswith("bar"):
        return (OR, int(s[:-3]))
    return (SP, int(s))


def standard_flag(shape: GroupShape) -> tuple[Label, ...]:
    return tuple([(SP, i) for i in range(1, shape.n + 1)] + [(OR, j) for j in range(1, shape.m + 1)])


def negate_flag(flag: tuple[Label, ...]) -> tuple[Label, ...]:
    return tuple((kd, -idx) for kd, idx in flag)


def check_flag(flag: tuple[Label, ...], shape: GroupShape) -> None:
    sp = sorted(abs(i) for kd, i in flag if kd == SP)
    orth = sorted(abs(i) for kd, i in flag if kd == OR)
    if sp != list(range(1, shape.n + 1)) or orth != list(range(1, shape.m + 1)):
        raise ValueError(f"flag {flag} does not match shape {shape}")


def roots(shape: GroupShape) -> list[Root]:
    """The full root list: even part, then odd part."""
    n, m = shape.n, shape.m
    out: list[Root] = []
    for i in range(1, n + 1):
        for i2 in range(i + 1, n + 1):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    v = vadd(
                        delta(i, shape) if s1 > 0 else vneg(delta(i, shape)),
                        delta(i2, shape) if s2 > 0 else vneg(delta(i2, shape)),
                    )
                    out.append(Root(v, "even", None))
    for i in range(1, n + 1):
        for s in (1, -1):
            out.append(Root(tuple(2 * s * c for c in delta(i, shape)), "even", None))
    for j in range(1, m + 1):
        for j2 in range(j + 1, m + 1):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    v = vadd(
                        eps(j, shape) if s1 > 0 else vneg(eps(j, shape)),
                        eps(j2, shape) if s2 > 0 else vneg(eps(j2, shape)),
                    )
                    out.append(Root(v, "even", None))
    if shape.parity_type == ODD:
        for j in range(1, m + 1):
            for s in (1, -1):
                out.append(Root(eps(j, shape) if s > 0 else vneg(eps(j, shape)), "even", None))
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    v = vadd(
                        delta(i, shape) if s1 > 0 else vneg(delta(i, shape)),
                        eps(j, shape) if s2 > 0 else vneg(eps(j, shape)),
                    )
                    out.append(Root(v, "odd", True))
    if shape.parity_type == ODD:
        for i in range(1, n + 1):
            for s in (1, -1):
                out.append(Root(delta(i, shape) if s > 0 else vneg(delta(i, shape)), "odd", False))
    return out


def phi_plus(flag: tuple[Label, ...], shape: GroupShape) -> set[Root]:
    """Positive system of the Borel attached to a maximal isotropic flag.

    The symplectic subsequence b_1.., the orthogonal subsequence c_1.. (both
    in flag order, signed): sums and ordered differences within each block,
    the doubled symplectic weights, the mixed sums, and the mixed differences
    signed by which label comes first.  The single-label roots exist only in
    the odd parity type.
    """
    check_flag(flag, shape)
    pos = {label: t for t, label in enumerate(flag)}
    bs = [lb for lb in flag if lb[0] == SP]
    cs = [lb for lb in flag if lb[0] == OR]
    out: set[Root] = set()
    for a_i in range(len(bs)):
        for a_j in range(a_i + 1, len(bs)):
            va, vb = label_vec(bs[a_i], shape), label_vec(bs[a_j], shape)
            out.add(Root(vsub(va, vb), "even", None))
            out.add(Root(vadd(va, vb), "even", None))
    for lb in bs:
        v = label_vec(lb, shape)
        out.add(Root(tuple(2 * c for c in v), "even", None))
    for a_i in range(len(cs)):
        for a_j in range(a_i + 1, len(cs)):
            va, vb = label_vec(cs[a_i], shape), label_vec(cs[a_j], shape)
            out.add(Root(vsub(va, vb), "even", None))
            out.add(Root(vadd(va, vb), "even", None))
    if shape.parity_type == ODD:
        for lb in cs:
            out.add(Root(label_vec(lb, shape), "even", None))
        for lb in bs:
            out.add(Root(label_vec(lb, shape), "odd", False))
    for b in bs:
        for c in cs:
            vb, vc = label_vec(b, shape), label_vec(c, shape)
            out.add(Root(vadd(vb, vc), "odd", True))
            diff = vsub(vb, vc) if pos[b] < pos[c] else vsub(vc, vb)
            out.add(Root(diff, "odd", True))
    return out


def phi_plus_vecs(flag: tuple[Label, ...], shape: GroupShape) -> set[Vec]:
    return {r.vec for r in phi_plus(flag, shape)}


@dataclass(frozen=True, slots=True)
class Move:
    kind: str  # transpose / flip_symplectic / flip_orthogonal / relabel_orthogonal
    pos: int | None = None  # left position of a transposition


@dataclass(frozen=True, slots=True)
class MoveResult:
    flag: tuple[Label, ...]
    alpha: Vec | None
    levi: str | None
    removed: frozenset[Vec]
    added: frozenset[Vec]


def apply_move(flag: tuple[Label, ...], move: Move, shape: GroupShape) -> MoveResult:
    """One elementary flag move with its exact positive-system delta.

    Transpositions swap adjacent entries and exchange one difference root;
    a symplectic sign flip on the last entry swaps its single and doubled
    weights in the odd type (only the doubled one in the even type); an
    orthogonal sign flip on the last entry exists only in the odd type --
    in the even type it fixes the Borel and is exposed separately as a
    zero-delta relabel.
    """
    check_flag(flag, shape)
    last = flag[-1]
    if move.kind == "transpose":
        s = move.pos
        if s is None or not 0 <= s < len(flag) - 1:
            raise ValueError(f"bad transposition position {s}")
        a, b = flag[s], flag[s + 1]
        alpha = vsub(label_vec(a, shape), label_vec(b, shape))
        new = list(flag)
        new[s], new[s + 1] = b, a
        levi = "GL2" if a[0] == b[0] else "GL11"
        return MoveResult(tuple(new), alpha, levi, frozenset({alpha}), frozenset({vneg(alpha)}))
    if move.kind == "flip_symplectic":
        if last[0] != SP:
            raise ValueError("flip_symplectic needs a symplectic last entry")
        v = label_vec(last, shape)
        v2 = tuple(2 * c for c in v)
        new = flag[:-1] + ((last[0], -last[1]),)
        if shape.parity_type == ODD:
            return MoveResult(
                new, v, "SPO21", frozenset({v, v2}), frozenset({vneg(v), vneg(v2)})
            )
        return MoveResult(new, v2, "SL2", frozenset({v2}), frozenset({vneg(v2)}))
    if move.kind == "flip_orthogonal":
        if last[0] != OR:
            raise ValueError("flip_orthogonal needs an orthogonal last entry")
        if shape.parity_type != ODD:
            raise ValueError("flip_orthogonal does not move the Borel in the even type")
        v = label_vec(last, shape)
        new = flag[:-1] + ((last[0], -last[1]),)
        return MoveResult(new, v, "SO3", frozenset({v}), frozenset({vneg(v)}))
    if move.kind == "relabel_orthogonal":
        if last[0] != OR or shape.parity_type != EVEN:
            raise ValueError("relabel_orthogonal needs an even-type orthogonal last entry")
        new = flag[:-1] + ((last[0], -last[1]),)
        return MoveResult(new, None, None, frozenset(), frozenset())
    raise ValueError(f"unknown move kind {move.kind!r}")


@dataclass(frozen=True, slots=True)
class ChainStep:
    flag_from: tuple[Label, ...]
    move: Move
    flag_to: tuple[Label, ...]
    alpha: Vec | None
    levi: str | None


def chain_of_borels(shape: GroupShape) -> list[ChainStep]:
    """The explicit walk from the standard flag to its negative.

    Orthogonal labels first migrate to the front (mn transpositions), then
    each symplectic label is sign-flipped at the end and carried to the front
    (n flips, n(m+n-1) transpositions), then each orthogonal label is
    sign-flipped at the end and carried just right of the symplectic block
    (m flips -- zero-delta relabels in the even type -- and m(m-1)
    transpositions).
    """
    flag = standard_flag(shape)
    steps: list[ChainStep] = []

    def do(move: Move) -> None:
        nonlocal flag
        res = apply_move(flag, move, shape)
        steps.append(ChainStep(flag, move, res.flag, res.alpha, res.levi))
        flag = res.flag

    n, m = shape.n, shape.m
    for j in range(1, m + 1):
        for s in range(n + j - 2, j - 2, -1):
            do(Move("transpose", s))
    for _ in range(n):
        assert flag[-1][0] == SP and flag[-1][1] > 0
        do(Move("flip_symplectic"))
        for s in range(n + m - 2, -1, -1):
            do(Move("transpose", s))
    for _ in range(m):
        assert flag[-1][0] == OR and flag[-1][1] > 0
        if shape.parity_type == ODD:
            do(Move("flip_orthogonal"))
        else:
            do(Move("relabel_orthogonal"))
        for s in range(n + m - 2, n - 1, -1):
            do(Move("transpose", s))
    assert flag == negate_flag(standard_flag(shape)), flag
    return steps


def rho_parts(flag: tuple[Label, ...], shape: GroupShape) -> tuple[Vec, Vec, Vec]:
    """Half-sums of the even and odd positive roots, and their difference,
    all in doubled coordinates."""
    rk = shape.rank
    s0 = [0] * rk
    s1 = [0] * rk
    for root in phi_plus(flag, shape):
        tgt = s0 if root.parity == "even" else s1
        for t, c in enumerate(root.vec):
            tgt[t] += c
    rho0 = tuple(c // 2 for c in s0)
    rho1 = tuple(c // 2 for c in s1)
    rho = vsub(rho0, rho1)
    return rho0, rho1, rho


def pairing(x: Vec, y: Vec, shape: GroupShape) -> Fraction:
    """The supersymmetric form in doubled coordinates: +1 on the delta block,
    -1 on the epsilon block, exact half-integer values."""
    n = shape.n
    tot = 0
    for t, (a, b) in enumerate(zip(x, y)):
        tot += a * b if t < n else -a * b
    return Fraction(tot, 4)


def pairing_euclid(x: Vec, y: Vec) -> Fraction:
    """Positive-definite companion form (+1 on every coordinate), used only to
    normalise even coroots."""
    return Fraction(sum(a * b for a, b in zip(x, y)), 4)


def coroot_pairing(x: Vec, alpha: Vec) -> Fraction:
    """<x, alpha^vee> = 2 (x, alpha)_euclid / (alpha, alpha)_euclid."""
    num = sum(a * b for a, b in zip(x, alpha))
    den = sum(a * a for a in alpha)
    return Fraction(2 * num, den)


def lambda_bracket(lam: Vec, flag: tuple[Label, ...], shape: GroupShape, r: int, p: int) -> Vec:
    """Flag-normalised weight lam + (p^r - 1)(rho0(F) - rho0) + (rho1(F) - rho1),
    doubled in and out; the result is always integral (asserted)."""
    rho0f, rho1f, _ = rho_parts(flag, shape)
    rho0s, rho1s, _ = rho_parts(standard_flag(shape), shape)
    q = p**r
    out = tuple(
        lam[t] + (q - 1) * (rho0f[t] - rho0s[t]) + (rho1f[t] - rho1s[t])
        for t in range(shape.rank)
    )
    assert all(c % 2 == 0 for c in out), f"non-integral bracket weight {out}"
    return out


def ch_z_flag(lam: Vec, flag: tuple[Label, ...], shape: GroupShape, r: int, p: int) -> PolyN:
    """Product character of the thickened induced module at the given flag:
    e^lam times the truncated geometric factor per even positive root and
    (1 + e^-alpha) per odd positive root.  Keys are natural coordinates."""
    ev, od = [], []
    for root in phi_plus(flag, shape):
        (ev if root.parity == "even" else od).append(root.natural())
    return ch_product_Zr(natural(lam), sorted(ev), sorted(od), r, p)
