"""Exact irreducibles for the group layer: Specht modules for S_n, wreath
products G wr S_n with their full irreducible catalog, the eight twisted
C2 wr S_n actions, and Bruhat-length combinatorics."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from math import factorial

from .cyclo import CYC_ONE, CYC_ZERO, CycNum
from .linalg import ExactMatrix, SpanTracker
from . import monoid as mo
from .monoid import FiniteMonoid, SubmonoidRef
from .rep import Representation, RepresentationError, hom_space, one_dim

# -- partitions ---------------------------------------------------------------


def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n in reverse-lexicographic order ((n) first)."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return out


def conjugate_partition(lam) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_length_dim(lam) -> int:
    n = sum(lam)
    conj = conjugate_partition(lam)
    prod_hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod_hooks *= (row - j) + (conj[j] - i) - 1
    return factorial(n) // prod_hooks


def standard_tableaux(lam) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of shape lam, entries 0..n-1, row-reading order."""
    n = sum(lam)
    rows = len(lam)
    out = []
    shape = list(lam)

    def rec(filled, heights, k):
        if k == n:
            out.append(tuple(tuple(r) for r in filled))
            return
        for i in range(rows):
            j = heights[i]
            if j < shape[i] and (i == 0 or heights[i - 1] > j):
                filled[i].append(k)
                heights[i] += 1
                rec(filled, heights, k + 1)
                heights[i] -= 1
                filled[i].pop()

    rec([[] for _ in range(rows)], [0] * rows, 0)
    return out


# -- permutations --------------------------------------------------------------


def perm_compose(p, q):
    """(p q)(i) = p(q(i)): apply q first."""
    return tuple(p[q[i]] for i in range(len(p)))


def perm_inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_sign(p) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def bruhat_length(p) -> int:
    """l(w) = #{i<j : w(i) > w(j)} (inversion count)."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def cycle_to_perm(seq, n):
    p = list(range(n))
    k = len(seq)
    for t in range(k):
        p[seq[t] - 1] = seq[(t + 1) % k] - 1
    return tuple(p)


def w_cycle(n: int):
    """w_[n] = (1 2 ... n)."""
    return cycle_to_perm(list(range(1, n + 1)), n)


def w_half(n: int):
    """The interleaved n-cycle with near-maximal Bruhat length."""
    m = n // 2
    seq = []
    for i in range(1, m + 1):
        seq.extend([i, n - i + 1])
    if n % 2 == 1:
        seq.append(m + 1)
    return cycle_to_perm(seq, n)


def w_longest(n: int):
    """w_0 = the order-reversing permutation, maximal Bruhat length n(n-1)/2."""
    return tuple(range(n - 1, -1, -1))


# -- Specht modules -------------------------------------------------------------


def _tabloids(lam, n):
    """All row-set tuples with row sizes lam (ordered rows)."""
    out = []

    def rec(rows, remaining):
        if len(rows) == len(lam):
            out.append(tuple(rows))
            return
        size = lam[len(rows)]
        from itertools import combinations

        for comb in combinations(sorted(remaining), size):
            rec(rows + [tuple(comb)], remaining - set(comb))

    rec([], set(range(n)))
    out.sort()
    return out


def _tableau_columns(tab):
    cols = []
    width = len(tab[0]) if tab else 0
    for j in range(width):
        cols.append([row[j] for row in tab if len(row) > j])
    return cols


def _column_group(tab):
    """All column permutations of a tableau, as (entry map, sign) pairs."""
    cols = _tableau_columns(tab)
    partials = [list(permutations(c)) for c in cols]
    result = []
    for choice in product(*partials):
        mapping = {}
        sign = 1
        for col, perm in zip(cols, choice):
            idx = {v: i for i, v in enumerate(col)}
            sign *= perm_sign(tuple(idx[x] for x in perm))
            for a, b in zip(col, perm):
                mapping[a] = b
        result.append((mapping, sign))
    return result


def _apply_to_tabloid(mapping, tabloid):
    return tuple(tuple(sorted(mapping[x] for x in row)) for row in tabloid)


def specht(lam, group: FiniteMonoid | None = None) -> Representation:
    """The Specht module [lam] of S_n with exact integer matrices in the
    standard polytabloid basis."""
    n = sum(lam)
    if group is None:
        group = mo.symmetric_group(n)
    tabs = standard_tableaux(lam)
    tabloids = _tabloids(lam, n)
    tab_index = {t: i for i, t in enumerate(tabloids)}
    dim = len(tabs)

    def polytabloid(tab):
        vec = [Fraction(0)] * len(tabloids)
        base = tuple(tuple(sorted(row)) for row in tab)
        for mapping, sign in _column_group(tab):
            key = _apply_to_tabloid(mapping, base)
            vec[tab_index[key]] += sign
        return vec

    basis_vecs = [polytabloid(t) for t in tabs]
    emat = ExactMatrix([[basis_vecs[j][i] for j in range(dim)] for i in range(len(tabloids))])
    # independent rows of the basis matrix, for coordinate extraction
    sel = []
    tr = SpanTracker(dim)
    for i in range(len(tabloids)):
        if tr.add(emat.data[i]):
            sel.append(i)
        if len(sel) == dim:
            break
    esel = ExactMatrix([emat.data[i] for i in sel])
    esel_inv = esel.inverse()

    mats = []
    for x in range(group.size):
        p = mo.symmetric_group_perm(group, x)
        cols = []
        for t, vec in zip(tabs, basis_vecs):
            moved = [Fraction(0)] * len(tabloids)
            for ti, c in enumerate(vec):
                if c:
                    key = tuple(tuple(sorted(p[v] for v in row)) for row in tabloids[ti])
                    moved[tab_index[key]] += c
            coords = esel_inv * ExactMatrix.column([moved[i] for i in sel])
            # consistency of the expansion in the standard basis
            recon = emat * coords
            if any(recon.data[i][0] != moved[i] for i in range(len(tabloids))):
                raise RepresentationError("polytabloid straightening failed")
            cols.append([coords.data[i][0] for i in range(dim)])
        mats.append(ExactMatrix([[cols[j][i] for j in range(dim)] for i in range(dim)]))
    rep = Representation(group, mats, "left", validate=True, name="[%s]" % (lam,))
    if rep.dim != hook_length_dim(lam):
        raise RepresentationError("Specht dimension disagrees with hook count")
    return rep


def symmetric_catalog(n: int, group: FiniteMonoid | None = None) -> list[Representation]:
    """Irr(S_n), one Specht module per partition, in partition order."""
    if group is None:
        group = mo.symmetric_group(n)
    return [specht(lam, group) for lam in partitions(n)]


def sign_representation(group: FiniteMonoid) -> Representation:
    vals = []
    for x in range(group.size):
        p = mo.symmetric_group_perm(group, x)
        vals.append(perm_sign(p))
    return one_dim(group, vals, validate=False, name="sign")


# -- Young pairing ---------------------------------------------------------------


def young_subgroup_members(group: FiniteMonoid, lam) -> list[int]:
    """Indices of S_lam (consecutive blocks) inside symmetric_group(n)."""
    n = sum(lam)
    blocks = []
    start = 0
    for part in lam:
        blocks.append(set(range(start, start + part)))
        start += part

    def block_of(v):
        for bi, b in enumerate(blocks):
            if v in b:
                return bi
        raise ValueError

    out = []
    for x in range(group.size):
        p = mo.symmetric_group_perm(group, x)
        if all(block_of(p[i]) == block_of(i) for i in range(n)):
            out.append(x)
    return out


def young_pairing(lam) -> int:
    """dim Hom_{S_n}(Ind_{S_lam} 1, Ind_{S_lam^} sign), via Mackey's formula:
    one summand per double coset, contributing 1 iff sign is trivial on the
    intersection subgroup."""
    n = sum(lam)
    group = mo.symmetric_group(n)
    a_members = set(young_subgroup_members(group, lam))
    b_members = set(young_subgroup_members(group, conjugate_partition(lam)))
    seen = set()
    total = 0
    for g in range(group.size):
        if g in seen:
            continue
        coset = set()
        frontier = [g]
        while frontier:
            x = frontier.pop()
            if x in coset:
                continue
            coset.add(x)
            for a in a_members:
                for b in b_members:
                    y = group.table[group.table[a][x]][b]
                    if y not in coset:
                        frontier.append(y)
        seen |= coset
        # H = S_lam  intersect  g S_lam^ g^-1
        pg = mo.symmetric_group_perm(group, g)
        pginv = perm_inverse(pg)
        good = True
        for a in a_members:
            pa = mo.symmetric_group_perm(group, a)
            conj = perm_compose(pginv, perm_compose(pa, pg))
            if all(_perm_in_young(conj, conjugate_partition(lam))):
                if perm_sign(pa) != 1:
                    good = False
                    break
        total += 1 if good else 0
    return total


def _perm_in_young(p, lam):
    start = 0
    checks = []
    for part in lam:
        block = set(range(start, start + part))
        checks.append(all(p[i] in block for i in block))
        start += part
    return checks


# -- wreath products ---------------------------------------------------------------


class WreathGroup:
    """G wr S_n with element list [(f, p)] and a FiniteMonoid table."""

    def __init__(self, g: FiniteMonoid, n: int, action=None):
        if not g.is_group():
            raise mo.MonoidError("wreath base must be a group")
        self.base = g
        self.n = n
        if action is None:
            # regular permutation action of G on itself
            action = [tuple(g.table[x][y] for y in range(g.size)) for x in range(g.size)]
        self.action = action
        self.points = len(action[0])
        perms = list(permutations(range(n)))
        elems = [(f, p) for f in product(range(g.size), repeat=n) for p in perms]
        self.elements = elems
        self.index = {e: i for i, e in enumerate(elems)}
        table = []
        for f1, p1 in elems:
            row = []
            p1inv = perm_inverse(p1)
            for f2, p2 in elems:
                f = tuple(g.table[f1[j]][f2[p1inv[j]]] for j in range(n))
                row.append(self.index[(f, perm_compose(p1, p2))])
            table.append(row)
        ident = self.index[(tuple([g.identity] * n), tuple(range(n)))]
        labels = [
            "(%s;%s)" % (",".join(g.label(x) for x in f), "".join(str(i + 1) for i in p))
            for f, p in elems
        ]
        self.monoid = FiniteMonoid(table, ident, labels, validate=False)

    def embedding(self):
        """The faithful permutation representation on points x blocks."""
        m = self.points
        out = {}
        for idx, (f, p) in enumerate(self.elements):
            big = [0] * (m * self.n)
            for j in range(self.n):
                for i in range(m):
                    big[j * m + i] = p[j] * m + self.action[f[p[j]]][i]
            out[idx] = tuple(big)
        return out


def wreath_group(g: FiniteMonoid, n: int, action=None) -> WreathGroup:
    return WreathGroup(g, n, action)


def wreath_product_rep(w: WreathGroup, pi: Representation, sigma: Representation) -> Representation:
    """The wreath product pi wr sigma on V^(x)n (x) W: slot k of the image
    holds pi(f(k)) applied to the p^-1(k)-th input factor, tensored sigma(p)."""
    n = w.n
    dv = pi.dim
    size = dv ** n
    tuples = list(product(range(dv), repeat=n))
    out = []
    for f, p in w.elements:
        pinv = perm_inverse(p)
        a = ExactMatrix.zeros(size, size)
        factors = [pi.mats[f[k]] for k in range(n)]
        for col, src in enumerate(tuples):
            for row, dst in enumerate(tuples):
                val = CYC_ONE
                for k in range(n):
                    val = val * factors[k].data[dst[k]][src[pinv[k]]]
                    if not val:
                        break
                if val:
                    a.data[row][col] = val
        sx = _find_perm_index(sigma.monoid, p)
        out.append(a.kron(sigma.mats[sx]))
    return Representation(w.monoid, out, "left", validate=True,
                          name="%s wr %s" % (pi.name or "pi", sigma.name or "sigma"))


def _find_perm_index(sym_group: FiniteMonoid, p) -> int:
    label = "".join(str(i + 1) for i in p)
    return sym_group.labels.index(label)


def group_induce(m: FiniteMonoid, h_members, sigma_mats: dict, dim: int) -> Representation:
    """Induced representation for a subgroup H of a group M; sigma_mats maps
    H-member indices to matrices."""
    hset = set(h_members)
    # minimal left-coset representatives
    reps = []
    seen = set()
    for x in range(m.size):
        if x in seen:
            continue
        reps.append(x)
        for h in h_members:
            seen.add(m.table[x][h])
    inv = {x: y for x in range(m.size) for y in [_group_inverse(m, x)]}
    k = len(reps)
    mats = []
    for g in range(m.size):
        big = ExactMatrix.zeros(k * dim, k * dim)
        for j, tj in enumerate(reps):
            target = m.table[g][tj]
            for i, ti in enumerate(reps):
                hh = m.table[inv[ti]][target]
                if hh in hset:
                    block = sigma_mats[hh]
                    for a in range(dim):
                        for b in range(dim):
                            if block.data[a][b]:
                                big.data[i * dim + a][j * dim + b] = block.data[a][b]
                    break
        mats.append(big)
    return Representation(m, mats, "left", validate=True)


def _group_inverse(m: FiniteMonoid, x: int) -> int:
    for y in range(m.size):
        if m.table[x][y] == m.identity and m.table[y][x] == m.identity:
            return y
    raise mo.MonoidError("element %d is not invertible" % x)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def irr_wreath_all(w: WreathGroup, catalog: list[Representation]) -> list[Representation]:
    """The full catalog Irr(G wr S_n) from Irr(G), by types and induction."""
    g = w.base
    n = w.n
    if sum(rep.dim * rep.dim for rep in catalog) != g.size:
        raise RepresentationError("base catalog fails sum(dim^2) = |G|")
    out = []
    sym_cache: dict[int, tuple[FiniteMonoid, list[Representation]]] = {}

    def sym_irr(k):
        if k not in sym_cache:
            grp = mo.symmetric_group(k)
            sym_cache[k] = (grp, [specht(lam, grp) for lam in partitions(k)])
        return sym_cache[k]

    for typ in _compositions(n, len(catalog)):
        # blocks of slots per catalog entry
        blocks = []
        start = 0
        for k in typ:
            blocks.append(list(range(start, start + k)))
            start += k
        block_of = {}
        for bi, b in enumerate(blocks):
            for slot in b:
                block_of[slot] = bi
        h_members = [
            w.index[(f, p)]
            for (f, p) in w.elements
            if all(block_of[p[i]] == block_of[i] for i in range(n))
        ]
        deltas = [catalog[bi] for bi in range(len(catalog))]
        # sigma choices: one Specht per nonzero block
        sigma_lists = []
        for bi, k in enumerate(typ):
            if k == 0:
                sigma_lists.append([None])
            else:
                grp_k, irrs = sym_irr(k)
                sigma_lists.append(irrs)
        for sigma_choice in product(*sigma_lists):
            mats = {}
            dim = None
            for hx in h_members:
                f, p = w.elements[hx]
                mat = _type_block_matrix(w, deltas, typ, blocks, f, p, sigma_choice)
                mats[hx] = mat
                dim = mat.rows
            indrep = group_induce(w.monoid, h_members, mats, dim)
            indrep.name = "wr-type%s" % (typ,)
            out.append(indrep)
    total = sum(v.dim * v.dim for v in out)
    if total != w.monoid.size:
        raise RepresentationError(
            "wreath catalog incomplete: sum dim^2 = %d != %d" % (total, w.monoid.size)
        )
    out.sort(key=lambda v: (v.dim, _character_fingerprint(v)))
    return out


def _type_block_matrix(w, deltas, typ, blocks, f, p, sigma_choice) -> ExactMatrix:
    """pi~_Omega (x) sigma~ at (f,p) for a block-preserving p."""
    n = w.n
    pinv = perm_inverse(p)
    dims = []
    for slot in range(n):
        dims.append(deltas[_block_index(blocks, slot)].dim)
    tuples = list(product(*[range(d) for d in dims]))
    tpos = {t: i for i, t in enumerate(tuples)}
    size = len(tuples)
    a = ExactMatrix.zeros(size, size)
    for col, src in enumerate(tuples):
        for row, dst in enumerate(tuples):
            val = CYC_ONE
            ok = True
            for k in range(n):
                delta = deltas[_block_index(blocks, k)]
                val = val * delta.mats[f[k]].data[dst[k]][src[pinv[k]]]
                if not val:
                    ok = False
                    break
            if ok and val:
                a.data[row][col] = a.data[row][col] + val
    # sigma~ factor: product over blocks of sigma_k(p restricted to the block)
    sfactor = None
    for bi, block in enumerate(blocks):
        if not block:
            continue
        sigma = sigma_choice[bi]
        rel = {slot: i for i, slot in enumerate(block)}
        perm_block = tuple(rel[p[slot]] for slot in block)
        sx = _find_perm_index(sigma.monoid, perm_block)
        mat = sigma.mats[sx]
        sfactor = mat if sfactor is None else sfactor.kron(mat)
    if sfactor is None:
        sfactor = ExactMatrix.identity(1)
    return a.kron(sfactor)


def _block_index(blocks, slot):
    for bi, b in enumerate(blocks):
        if slot in b:
            return bi
    raise ValueError


def _character_fingerprint(v: Representation):
    return tuple(repr(v.mats[x].trace().reduced()) for x in range(v.monoid.size))


# -- the eight twisted C2 wr S_n actions ---------------------------------------------


def twisted_action(w: WreathGroup, variant: int) -> Representation:
    """The eight n-dimensional actions of C2 wr S_n (variants 1..8)."""
    if w.base.size != 2:
        raise RepresentationError("twisted actions are defined for C2 wr S_n")
    if not 1 <= variant <= 8:
        raise ValueError("variant out of range 1..8")
    n = w.n
    mats = []
    for f, p in w.elements:
        a_total = sum(f)
        m = ExactMatrix.zeros(n, n)
        sgn_p = perm_sign(p)
        for i in range(n):
            s_i = f[p[i]]
            if variant == 1:
                eps = 1
            elif variant == 2:
                eps = (-1) ** a_total
            elif variant == 3:
                eps = sgn_p
            elif variant == 4:
                eps = (-1) ** a_total * sgn_p
            elif variant == 5:
                eps = (-1) ** s_i
            elif variant == 6:
                eps = (-1) ** s_i * sgn_p
            elif variant == 7:
                eps = (-1) ** (a_total - s_i)
            else:
                eps = (-1) ** (a_total - s_i) * sgn_p
            m.data[p[i]][i] = CycNum.from_rational(eps)
        mats.append(m)
    return Representation(w.monoid, mats, "left", validate=True,
                          name="twisted-%d" % variant)
