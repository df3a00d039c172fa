"""Oracle-equivalence sweeps: every closed form replayed against an
independent brute-force route, at fixed desk-scale bounds.

Each check returns (ok, detail).  run_all() executes the lot and reports one
line per check; the CLI's verify-all subcommand and the acceptance test module
both drive these functions.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from . import characters, frobenius, linkage, rootdata, sl2, spo21
from .characters import ch_H0_sl2, ch_H0_spo, ch_L_sl2, ch_L_spo, peel
from .padic import defect, digits
from .words import GE, GT, LE, LT, build_words, ell

Check = tuple[bool, str]

# The normative 16-row word table with its symbolic weight offsets: entry
# (i, 0) subtracts 2*a_i*p^i, entry (i, 1) subtracts 2*(a_i+1)*p^i.
WORD_TABLE: list[tuple[str, list[tuple[int, int]]]] = [
    (LT + LE + LE + LE + LE, []),
    (GE + LT + LE + LE + LE, [(0, 0)]),
    (GE + GE + LT + LE + LE, [(0, 0), (1, 0)]),
    (LT + GT + LT + LE + LE, [(1, 1)]),
    (GE + GE + GE + LT + LE, [(0, 0), (1, 0), (2, 0)]),
    (LT + GT + GE + LT + LE, [(1, 1), (2, 0)]),
    (LT + LE + GT + LT + LE, [(2, 1)]),
    (GE + LT + GT + LT + LE, [(0, 0), (2, 1)]),
    (GE + GE + GE + GE + LT, [(0, 0), (1, 0), (2, 0), (3, 0)]),
    (LT + GT + GE + GE + LT, [(1, 1), (2, 0), (3, 0)]),
    (LT + LE + GT + GE + LT, [(2, 1), (3, 0)]),
    (GE + LT + GT + GE + LT, [(0, 0), (2, 1), (3, 0)]),
    (LT + LE + LE + GT + LT, [(3, 1)]),
    (GE + LT + LE + GT + LT, [(0, 0), (3, 1)]),
    (GE + GE + LT + GT + LT, [(0, 0), (1, 0), (3, 1)]),
    (LT + GT + LT + GT + LT, [(1, 1), (3, 1)]),
]


def check_word_table() -> Check:
    """Criterion 1: the length-5 word list and its weight offsets, exactly."""
    entries = build_words(5, 4)
    got = [w for w, _ in entries]
    want = [w for w, _ in WORD_TABLE]
    if got != want:
        return False, f"word list mismatch:\n got {got}\nwant {want}"
    for p, a in ((7, (1, 2, 3, 4, 5)), (11, (3, 1, 4, 1, 5))):
        k = sum(ai * p**i for i, ai in enumerate(a)) - 1
        assert digits(k + 1, p) == list(a)
        for word, offsets in WORD_TABLE:
            expect = k - sum(2 * (a[i] + bump) * p**i for i, bump in offsets)
            if ell(k, word, p) != expect:
                return False, f"offset mismatch at word {word} (p={p})"
    return True, "16 words and all symbolic offsets reproduced"


def check_sl2_oracle(kmax: int = 1500, primes=(3, 5, 7)) -> Check:
    """Criterion 2: closed-form rank-one decompositions equal greedy peels;
    the peel consuming the character exactly is the conservation statement."""
    for p in primes:
        for k in range(kmax + 1):
            got = sl2.decompose_sl2(k, p)
            want = peel(ch_H0_sl2(k), lambda w: ch_L_sl2(w, p))
            if got != want:
                return False, f"mismatch at k={k}, p={p}: {got} != {want}"
    return True, f"all k <= {kmax}, p in {tuple(primes)}"


def check_sl2_linkage(kmax: int = 1500, primes=(3, 5, 7)) -> Check:
    """Criterion 3: every constituent is linked to its head, with equal defect."""
    for p in primes:
        for k in range(kmax + 1):
            for l in sl2.decompose_sl2(k, p):
                if defect(l, p) != defect(k, p) or not sl2.linked_sl2(l, k, p):
                    return False, f"factor {l} of k={k} fails linkage at p={p}"
    return True, f"all k <= {kmax}, p in {tuple(primes)}"


def check_spo_oracle(lmax: int = 1500, primes=(3, 5, 7)) -> Check:
    """Criterion 4: rank-one super decompositions equal greedy peels and are
    multiplicity-free."""
    for p in primes:
        for l in range(lmax + 1):
            got = spo21.comp_factors_h0(l, p)
            want = peel(ch_H0_spo(l), lambda w: ch_L_spo(w, p))
            if got != want:
                return False, f"mismatch at l={l}, p={p}: {got} != {want}"
            if any(v != 1 for v in got.values()):
                return False, f"multiplicity > 1 at l={l}, p={p}"
    return True, f"all l <= {lmax}, p in {tuple(primes)}"


def rad_oracle_quotient(k: int, p: int) -> list[spo21.Monomial]:
    """Plus monomials surviving modulo the span of all lowering images,
    computed from the operator actions themselves (every image is a single
    monomial, so the span is a monomial set)."""
    basis = spo21.basis_h0(k, spo21.PLUS)
    in_rad = set()
    for v in basis:
        img = spo21.act("y", {v: 1}, p)
        assert len(img) <= 1
        in_rad.update(img)
    for mono in basis:
        if mono in in_rad:
            continue
        for t in range(1, mono.i + 1):
            src = spo21.Monomial(spo21.PLUS, k, mono.i - t, mono.eps)
            img = spo21.act("f", {src: 1}, p, t)
            assert len(img) <= 1
            if mono in img:
                in_rad.add(mono)
                break
    return [m for m in basis if m not in in_rad]


def check_hom_oracle(kmax: int = 300, primes=(3, 5, 7)) -> Check:
    """Criterion 5: the closed-form Hom dimensions and parities equal the
    radical-quotient computation, and rad_basis complements the quotient."""
    for p in primes:
        for k in range(kmax + 1):
            quotient = rad_oracle_quotient(k, p)
            by_weight = {}
            for m in quotient:
                if m.weight in by_weight:
                    return False, f"quotient weight clash at k={k}, p={p}"
                by_weight[m.weight] = m
            rad = set(spo21.rad_basis(k, p))
            if rad != set(spo21.basis_h0(k, spo21.PLUS)) - set(quotient):
                return False, f"rad_basis mismatch at k={k}, p={p}"
            if any(w < 0 for w in by_weight):
                return False, f"negative quotient weight at k={k}, p={p}"
            for l in range(k + 3):
                dim, parity = spo21.hom_dim(k, l, p)
                mono = by_weight.get(l)
                want_dim = 0 if mono is None else 1
                want_par = None if mono is None else ("odd" if mono.eps else "even")
                if (dim, parity) != (want_dim, want_par):
                    return False, f"hom mismatch at k={k}, l={l}, p={p}"
    return True, f"all k <= {kmax}, p in {tuple(primes)}"


def _char_of_factors(factors: Counter, p: int) -> dict:
    out: dict[int, int] = {}
    for hw, mult in factors.items():
        for w, c in ch_L_spo(hw, p).items():
            out[w] = out.get(w, 0) + mult * c
    return {w: c for w, c in out.items() if c}


def check_psi_tables(kmax: int = 300, primes=(3, 5, 7)) -> Check:
    """Criterion 6: morphism tables vanish exactly on the closed-form kernel,
    weight spaces satisfy rank-nullity, and the image/kernel/cokernel factor
    multisets agree with independent character peels and subtractions."""
    for p in primes:
        for k in range(1, kmax + 1):
            for j in spo21.admissible_js(k, p):
                tab = spo21.psi_table(k, j, p)
                zero_rows = {s for s, expr in tab.rows.items() if not expr}
                if zero_rows != set(spo21.kernel_basis(k, j, p)):
                    return False, f"kernel mismatch at (k={k}, j={j}, p={p})"
                nz = tab.nonzero_rows()
                if len(nz) + len(zero_rows) != 2 * k + 1:
                    return False, f"rank-nullity broken at (k={k}, j={j}, p={p})"
                im_char = {tgt.weight: 1 for expr in nz.values() for tgt in expr}
                if len(im_char) != len(nz):
                    return False, f"image weights collide at (k={k}, j={j}, p={p})"
                ker, im, coker = spo21.ker_im_coker_factors(k, j, p)
                if peel(im_char, lambda w: ch_L_spo(w, p)) != im:
                    return False, f"image factors mismatch at (k={k}, j={j}, p={p})"
                dom_char = ch_H0_spo(k)
                ker_char = {
                    w: c
                    for w in set(dom_char) | set(im_char)
                    if (c := dom_char.get(w, 0) - im_char.get(w, 0))
                }
                if _char_of_factors(ker, p) != ker_char:
                    return False, f"kernel characters mismatch at (k={k}, j={j}, p={p})"
                cod_char = ch_H0_spo(k - 1 - 2 * j)
                coker_char = {
                    w: c
                    for w in set(cod_char) | set(im_char)
                    if (c := cod_char.get(w, 0) - im_char.get(w, 0))
                }
                if _char_of_factors(coker, p) != coker_char:
                    return False, f"cokernel characters mismatch at (k={k}, j={j}, p={p})"
    return True, f"all admissible (k, j), k <= {kmax}, p in {tuple(primes)}"


def oracle_simple_r(hw: int, r: int, p: int) -> dict:
    """Thickened simple character by the independent route: truncate the full
    simple character of the shifted representative, then shift back."""
    q = p**r
    m = (hw - q) % q + q
    base = characters.ch_truncate(ch_L_spo(m, p), m, r, p, "minus")
    return characters.poly_shift(base, hw - m)


def check_grt(rs=(1, 2), primes=(3, 5)) -> Check:
    """Criterion 7: thickened decompositions equal truncated-character peels,
    dimension 2p^r is conserved, shifts act on factors, and every thickened
    morphism image is the single expected simple."""
    for p in primes:
        for r in rs:
            q = p**r
            for l in range(-2 * q, 4 * q + 1):
                got = frobenius.comp_factors_r(l, r, p)
                want = peel(frobenius.ch_h0_r(l, r, p), lambda w: oracle_simple_r(w, r, p))
                if got != want:
                    return False, f"mismatch at l={l}, r={r}, p={p}: {got} != {want}"
                total = sum(len(frobenius.ch_l_r(hw, r, p)) for hw in got)
                if total != 2 * q:
                    return False, f"dimension leak at l={l}, r={r}, p={p}"
                for t in (-2, 1, 3):
                    shifted = Counter({hw + t * q: m for hw, m in got.items()})
                    if frobenius.comp_factors_r(l + t * q, r, p) != shifted:
                        return False, f"shift equivariance fails at l={l}, t={t}, r={r}, p={p}"
            for k in range(-q, 2 * q + 1):
                tab = frobenius.psi_r_table(k, r, p)
                nz = tab.nonzero_rows()
                im_weights = {tgt.weight for expr in nz.values() for tgt in expr}
                lt = 2 * q - k - 1
                if im_weights != set(frobenius.ch_l_r(lt, r, p)):
                    return False, f"image is not the single simple at k={k}, r={r}, p={p}"
                ker, im, coker = frobenius.psi_r_ker_im_coker(k, r, p)
                if im != Counter({lt: 1}) or ker != coker:
                    return False, f"ker/im/coker inconsistency at k={k}, r={r}, p={p}"
                if len(nz) + len([1 for e in tab.rows.values() if not e]) != 2 * q:
                    return False, f"rank-nullity broken at k={k}, r={r}, p={p}"
    return True, f"r in {tuple(rs)}, p in {tuple(primes)}, two periods of l"


def _partition_by(nodes, key) -> list[list]:
    groups: dict = {}
    for x in nodes:
        groups.setdefault(key(x), []).append(x)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def _graph_components(nodes, edges) -> list[list]:
    parent = {x: x for x in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict = {}
    for x in nodes:
        groups.setdefault(find(x), []).append(x)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def check_blocks(primes=(3, 5, 7)) -> Check:
    """Criterion 8: shared-factor components reproduce the p block classes,
    for the group on [0, 4p^2] and for the thickening on [-2p^2, 2p^2]."""
    for p in primes:
        hi = 4 * p * p
        nodes = range(hi + 1)
        edges = [
            (l, f)
            for l in nodes
            for f in spo21.comp_factors_h0(l, p)
            if 0 <= f <= hi
        ]
        got = _graph_components(nodes, edges)
        want = _partition_by(nodes, lambda l: spo21.block_of(l, p))
        if got != want or len(got) != p:
            return False, f"group block mismatch at p={p}"
        lo, hi = -2 * p * p, 2 * p * p
        nodes = range(lo, hi + 1)
        edges = [
            (l, f)
            for l in nodes
            for f in frobenius.comp_factors_r(l, 1, p)
            if lo <= f <= hi
        ]
        got = _graph_components(nodes, edges)
        want = _partition_by(nodes, lambda l: frobenius.block_of_r(l, p))
        if got != want or len(got) != p:
            return False, f"thickening block mismatch at p={p}"
    return True, f"p block classes on both windows, p in {tuple(primes)}"


def _shapes(rank_max: int = 4):
    for n in range(rank_max + 1):
        for m in range(rank_max + 1 - n):
            if n + m == 0:
                continue
            for t in (rootdata.ODD, rootdata.EVEN):
                yield rootdata.GroupShape(n, m, t)


def check_rootdata(rank_max: int = 4) -> Check:
    """Criterion 9: positive systems halve the root count on every chain flag,
    every move delta matches a recomputation, chain lengths and endpoints are
    right, and the four normative pairing values come out exactly."""
    for shape in _shapes(rank_max):
        all_roots = rootdata.roots(shape)
        if len(set(r.vec for r in all_roots)) != len(all_roots):
            return False, f"duplicate roots for {shape}"
        steps = rootdata.chain_of_borels(shape)
        flags = [rootdata.standard_flag(shape)] + [s.flag_to for s in steps]
        for fl in flags:
            pos = rootdata.phi_plus_vecs(fl, shape)
            if len(pos) != len(all_roots) // 2:
                return False, f"|positive system| wrong for {shape} at {fl}"
            if pos & {rootdata.vneg(v) for v in pos}:
                return False, f"positive system meets its negative for {shape}"
        moves = 0
        for step in steps:
            res = rootdata.apply_move(step.flag_from, step.move, shape)
            if res.flag != step.flag_to:
                return False, f"chain step does not replay for {shape}"
            before = rootdata.phi_plus_vecs(step.flag_from, shape)
            after = rootdata.phi_plus_vecs(step.flag_to, shape)
            if before - after != set(res.removed) or after - before != set(res.added):
                return False, f"declared delta wrong for {shape} step {step.move}"
            if step.move.kind != "relabel_orthogonal":
                moves += 1
            if step.move.kind == "flip_symplectic" and shape.parity_type == rootdata.ODD:
                j = step.flag_from[-1][1]
                alpha = rootdata.delta(j, shape)
                rho0f, rho1f, _ = rootdata.rho_parts(step.flag_from, shape)
                if rootdata.pairing(rho0f, alpha, shape) != 1:
                    return False, f"pre-flip rho0 pairing wrong for {shape}"
                if rootdata.pairing(rho1f, alpha, shape) != Fraction(1, 2):
                    return False, f"pre-flip rho1 pairing wrong for {shape}"
        expected = (shape.n + shape.m) ** 2
        if shape.parity_type == rootdata.ODD:
            if moves != expected or len(steps) != expected:
                return False, f"chain length wrong for {shape}: {moves}"
        else:
            if moves != expected - shape.m:
                return False, f"chain length wrong for {shape}: {moves}"
        if flags[-1] != rootdata.negate_flag(rootdata.standard_flag(shape)):
            return False, f"chain endpoint wrong for {shape}"
        if shape.parity_type == rootdata.ODD:
            rho0, rho1, _ = rootdata.rho_parts(rootdata.standard_flag(shape), shape)
            for j in range(1, shape.n + 1):
                alpha = rootdata.delta(j, shape)
                if rootdata.pairing(rho0, alpha, shape) != shape.n - j + 1:
                    return False, f"standard rho0 pairing wrong for {shape}"
                if rootdata.pairing(rho1, alpha, shape) != Fraction(2 * shape.m + 1, 2):
                    return False, f"standard rho1 pairing wrong for {shape}"
    return True, f"all shapes with rank <= {rank_max}, both types"


def check_flag_independence(p: int = 3, r: int = 1) -> Check:
    """Criterion 10: the flag-normalised product characters agree term by term
    across every chain flag, for both rank-(1,1) shapes and a 3x3 weight grid."""
    for t in (rootdata.ODD, rootdata.EVEN):
        shape = rootdata.GroupShape(1, 1, t)
        steps = rootdata.chain_of_borels(shape)
        flags = [rootdata.standard_flag(shape)] + [s.flag_to for s in steps]
        for a in range(3):
            for b in range(3):
                lam = rootdata.doubled((a, b))
                reference = None
                for fl in flags:
                    ch = rootdata.ch_z_flag(
                        rootdata.lambda_bracket(lam, fl, shape, r, p), fl, shape, r, p
                    )
                    if reference is None:
                        reference = ch
                    elif ch != reference:
                        return False, f"character varies with the flag at {t}, lam=({a},{b})"
    return True, "identical characters across all chain flags, both types"


def check_linkage_rank1(primes=(3, 5, 7)) -> Check:
    """Criterion 11: rank-one linkage graphs reproduce the block partition,
    and the odd non-isotropic targets are exactly the non-head constituents."""
    shape = rootdata.GroupShape(1, 0, rootdata.ODD)
    for p in primes:
        hi = 4 * p * p
        box = [(0, hi)]
        graph = linkage.build_graph(box, shape, {1, 2}, p)
        got = [sorted(w[0] for w in comp) for comp in linkage.components(graph)]
        want = _partition_by(range(hi + 1), lambda l: spo21.block_of(l, p))
        if sorted(got) != sorted(want):
            return False, f"rank-1 components differ from blocks at p={p}"
        for r in (1, 2):
            q = p**r
            for c in range(0, 3 * p * p + 1, 3):
                lam = (c,)
                moves = linkage.moves_noniso_odd(lam, shape, r, p)
                l = c % q
                want_targets = {
                    c - (l - lp)
                    for lp in frobenius.comp_factors_r(l, r, p)
                    if lp != l
                }
                if {mv.target[0] for mv in moves} != want_targets:
                    return False, f"noniso targets wrong at lam={c}, r={r}, p={p}"
    return True, f"block partition and noniso targets, p in {tuple(primes)}"


ALL_CHECKS = [
    ("1 word-table", check_word_table),
    ("2 sl2-oracle", check_sl2_oracle),
    ("3 sl2-linkage", check_sl2_linkage),
    ("4 spo-oracle", check_spo_oracle),
    ("5 hom-oracle", check_hom_oracle),
    ("6 psi-tables", check_psi_tables),
    ("7 thickening", check_grt),
    ("8 blocks", check_blocks),
    ("9 rootdata", check_rootdata),
    ("10 flag-independence", check_flag_independence),
    ("11 linkage-rank1", check_linkage_rank1),
]

QUICK_KWARGS = {
    "2 sl2-oracle": {"kmax": 200},
    "3 sl2-linkage": {"kmax": 200},
    "4 spo-oracle": {"lmax": 200},
    "5 hom-oracle": {"kmax": 60},
    "6 psi-tables": {"kmax": 60},
    "7 thickening": {"rs": (1,)},
    "9 rootdata": {"rank_max": 3},
    "11 linkage-rank1": {"primes": (3,)},
}


def run_all(quick: bool = False, report=print) -> bool:
    ok_all = True
    for name, fn in ALL_CHECKS:
        kwargs = QUICK_KWARGS.get(name, {}) if quick else {}
        ok, detail = fn(**kwargs)
        ok_all &= ok
        report(f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")
    return ok_all
