"""Automatic Irr catalogs for the structured groups that occur as local groups
in this codebase: abelian groups (direct character enumeration), symmetric and
dihedral groups, Q8, A4, small wreath products, and direct products of these
with abelian factors.  Anything else raises MissingProviderError; general
character-table algorithms are deliberately out of scope."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .cyclo import CycNum
from .linalg import ExactMatrix
from . import monoid as mo
from .monoid import FiniteMonoid
from . import symrep
from .rep import (
    MissingProviderError,
    Representation,
    is_irreducible,
    one_dim,
)


def is_abelian(g: FiniteMonoid) -> bool:
    t = g.table
    return all(t[a][b] == t[b][a] for a in range(g.size) for b in range(a))


def abelian_catalog(g: FiniteMonoid) -> list[Representation]:
    """All |G| characters of an abelian group, by extending values on a
    greedy generating set over each consistent choice of root of unity."""
    gens = g.generators()
    if not gens:
        return [one_dim(g, [1], validate=False, name="triv")]
    orders = [g.element_order(x) for x in gens]
    chars = []
    for choice in product(*[range(o) for o in orders]):
        values: dict[int, CycNum] = {g.identity: CycNum.from_rational(1)}
        ok = True
        frontier = [g.identity]
        while frontier and ok:
            new = []
            for x in frontier:
                for gi, k, o in zip(gens, choice, orders):
                    y = g.table[x][gi]
                    val = values[x] * CycNum.root_of_unity(o, k)
                    if y in values:
                        if values[y] != val:
                            ok = False
                            break
                    else:
                        values[y] = val
                        new.append(y)
                if not ok:
                    break
            frontier = new
        if ok and len(values) == g.size:
            chars.append(tuple(values[x] for x in range(g.size)))
    chars = sorted(set(chars), key=lambda c: tuple(repr(v.reduced()) for v in c))
    if len(chars) != g.size:
        raise MissingProviderError(
            "abelian character enumeration found %d of %d" % (len(chars), g.size)
        )
    return [
        one_dim(g, list(c), validate=False, name="chi%d" % i) for i, c in enumerate(chars)
    ]


# -- model groups with known catalogs -------------------------------------------


def dihedral_group(n: int) -> FiniteMonoid:
    """D_n of order 2n: pairs (i, eps) with (i,0)=r^i, (i,1)=r^i s."""
    size = 2 * n
    elems = [(i, e) for e in (0, 1) for i in range(n)]
    index = {x: k for k, x in enumerate(elems)}

    def mul(a, b):
        i, e = a
        j, f = b
        # s r^j = r^-j s
        if e == 0:
            return ((i + j) % n, f)
        return ((i - j) % n, 1 - f)

    table = [[index[mul(a, b)] for b in elems] for a in elems]
    labels = ["r%d" % i if e == 0 else "r%ds" % i for i, e in elems]
    return FiniteMonoid(table, index[(0, 0)], labels, validate=False)


def dihedral_catalog(g: FiniteMonoid, n: int) -> list[Representation]:
    elems = [(i, e) for e in (0, 1) for i in range(n)]
    out = []
    lin_choices = [(1, 1), (1, -1)]
    if n % 2 == 0:
        lin_choices += [(-1, 1), (-1, -1)]
    for rv, sv in lin_choices:
        vals = [(rv ** i) * (sv ** e) for i, e in elems]
        out.append(one_dim(g, vals, validate=True, name="lin(%d,%d)" % (rv, sv)))
    top = (n - 1) // 2 if n % 2 else n // 2 - 1
    for j in range(1, top + 1):
        z = CycNum.root_of_unity(n, j)
        zi = CycNum.root_of_unity(n, n - j)
        mats = []
        for i, e in elems:
            r = ExactMatrix([[z ** i, 0], [0, zi ** i]])
            if e:
                r = r * ExactMatrix([[0, 1], [1, 0]])
            mats.append(r)
        out.append(Representation(g, mats, "left", validate=True, name="rho%d" % j))
    return out


def quaternion_group() -> FiniteMonoid:
    """Q8 as {1,-1,i,-i,j,-j,k,-k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # quaternion multiplication on the names
    base = {
        ("1", x): x for x in names
    }

    def qmul(a, b):
        def split(x):
            return (-1 if x.startswith("-") else 1, x.lstrip("-"))

        sa, ua = split(a)
        sb, ub = split(b)
        tab = {
            ("1", "1"): (1, "1"),
            ("1", "i"): (1, "i"),
            ("1", "j"): (1, "j"),
            ("1", "k"): (1, "k"),
            ("i", "1"): (1, "i"),
            ("j", "1"): (1, "j"),
            ("k", "1"): (1, "k"),
            ("i", "i"): (-1, "1"),
            ("j", "j"): (-1, "1"),
            ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"),
            ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"),
            ("k", "j"): (-1, "i"),
            ("k", "i"): (1, "j"),
            ("i", "k"): (-1, "j"),
        }
        s, u = tab[(ua, ub)]
        s *= sa * sb
        return u if s == 1 else "-" + u

    index = {x: i for i, x in enumerate(names)}
    table = [[index[qmul(a, b)] for b in names] for a in names]
    return FiniteMonoid(table, 0, names, validate=False)


def quaternion_catalog(g: FiniteMonoid) -> list[Representation]:
    names = g.labels
    lin = []
    for si, sj in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
        vals = []
        for x in names:
            s = -1 if x.startswith("-") else 1
            u = x.lstrip("-")
            v = {"1": 1, "i": si, "j": sj, "k": si * sj}[u]
            vals.append(v)
        lin.append(one_dim(g, vals, validate=True, name="lin"))
    ii = CycNum.root_of_unity(4)
    two = {
        "1": ExactMatrix.identity(2),
        "i": ExactMatrix([[ii, 0], [0, -ii]]),
        "j": ExactMatrix([[0, -1], [1, 0]]),
        "k": ExactMatrix([[0, -ii], [-ii, 0]]),
    }
    mats = []
    for x in names:
        s = -1 if x.startswith("-") else 1
        m = two[x.lstrip("-")]
        mats.append(m.scale(s))
    lin.append(Representation(g, mats, "left", validate=True, name="2dim"))
    return lin


def alternating4_group() -> FiniteMonoid:
    perms = [p for p in permutations(range(4)) if symrep.perm_sign(p) == 1]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[symrep.perm_compose(a, b)] for b in perms] for a in perms]
    labels = ["".join(str(i + 1) for i in p) for p in perms]
    return FiniteMonoid(table, index[tuple(range(4))], labels, validate=False)


def alternating4_catalog(g: FiniteMonoid) -> list[Representation]:
    perms = [tuple(int(ch) - 1 for ch in lab) for lab in g.labels]
    # three characters through A4/V4 = C3, one 3-dim from the S4 Specht (3,1)
    v4 = {
        (0, 1, 2, 3),
        (1, 0, 3, 2),
        (2, 3, 0, 1),
        (3, 2, 1, 0),
    }
    # coset character: pick the 3-cycle (0 1 2) as the C3 generator image
    three = (1, 2, 0, 3)
    cosets = {}
    for k in range(3):
        rep_perm = three
        cur = tuple(range(4))
        for _ in range(k):
            cur = symrep.perm_compose(three, cur)
        for v in v4:
            cosets[symrep.perm_compose(cur, v)] = k
    out = []
    for j in range(3):
        vals = [CycNum.root_of_unity(3, (j * cosets[p]) % 3) for p in perms]
        out.append(one_dim(g, vals, validate=True, name="chi%d" % j))
    s4 = mo.symmetric_group(4)
    std = symrep.specht((3, 1), s4)
    lab_to_idx = {lab: i for i, lab in enumerate(s4.labels)}
    mats = [std.mats[lab_to_idx[lab]] for lab in g.labels]
    out.append(Representation(g, mats, "left", validate=True, name="3dim"))
    return out


@lru_cache(maxsize=None)
def _abelian_groups_of_order(n: int) -> tuple:
    """All abelian groups of order n as tuples of cyclic factors."""
    def prime_power_splits(p, e):
        return [tuple(p ** part for part in lam) for lam in symrep.partitions(e)]

    factors = []
    nn = n
    p = 2
    fac = {}
    while p * p <= nn:
        while nn % p == 0:
            fac[p] = fac.get(p, 0) + 1
            nn //= p
        p += 1
    if nn > 1:
        fac[nn] = fac.get(nn, 0) + 1
    per_prime = [prime_power_splits(p, e) for p, e in sorted(fac.items())]
    out = []
    for combo in product(*per_prime):
        flat = tuple(x for part in combo for x in part)
        out.append(flat)
    return tuple(out) if n > 1 else ((),)


def direct_product_group(gs: list[FiniteMonoid]) -> FiniteMonoid:
    cur = gs[0]
    for nxt in gs[1:]:
        cur = mo.product_table(cur, nxt)
    return cur


def _product_catalog(parts, group: FiniteMonoid, catalogs) -> list[Representation]:
    """External-tensor catalog for a direct product built by product_table."""
    out = []
    for combo in product(*catalogs):
        mats = []
        for x in range(group.size):
            idxs = []
            rem = x
            for g in reversed(parts[1:]):
                idxs.append(rem % g.size)
                rem //= g.size
            idxs.append(rem)
            idxs.reverse()
            m = combo[0].mats[idxs[0]]
            for rep_k, ik in zip(combo[1:], idxs[1:]):
                m = m.kron(rep_k.mats[ik])
            mats.append(m)
        out.append(
            Representation(group, mats, "left", validate=False,
                           name="x".join(r.name or "?" for r in combo))
        )
    return out


# -- isomorphism search -----------------------------------------------------------


def _order_histogram(g: FiniteMonoid):
    hist: dict[int, int] = {}
    for x in range(g.size):
        o = g.element_order(x)
        hist[o] = hist.get(o, 0) + 1
    return tuple(sorted(hist.items()))


def find_isomorphism(model: FiniteMonoid, target: FiniteMonoid):
    """A group isomorphism model -> target as an index map, or None."""
    if model.size != target.size:
        return None
    if _order_histogram(model) != _order_histogram(target):
        return None
    gens = model.generators()
    orders = [model.element_order(x) for x in gens]
    cands = [
        [y for y in range(target.size) if target.element_order(y) == o] for o in orders
    ]

    def extend(mapping_gens):
        # build the full map by words; fail on any inconsistency
        full = {model.identity: target.identity}
        frontier = [model.identity]
        while frontier:
            new = []
            for x in frontier:
                for gi, img in zip(gens, mapping_gens):
                    y = model.table[x][gi]
                    ty = target.table[full[x]][img]
                    if y in full:
                        if full[y] != ty:
                            return None
                    else:
                        full[y] = ty
                        new.append(y)
            frontier = new
        if len(full) != model.size or len(set(full.values())) != model.size:
            return None
        return [full[x] for x in range(model.size)]

    def backtrack(i, chosen):
        if i == len(gens):
            return extend(chosen)
        for c in cands[i]:
            res = backtrack(i + 1, chosen + [c])
            if res is not None:
                return res
        return None

    return backtrack(0, [])


def transport_catalog(catalog, iso, target: FiniteMonoid) -> list[Representation]:
    inv = [0] * len(iso)
    for i, v in enumerate(iso):
        inv[v] = i
    out = []
    for v in catalog:
        mats = [v.mats[inv[x]] for x in range(target.size)]
        out.append(Representation(target, mats, "left", validate=False, name=v.name))
    return out


def _nonabelian_models(order: int):
    """Candidate nonabelian models of a given order, with catalog builders."""
    models = []
    if order == 6:
        models.append(("S3", lambda: mo.symmetric_group(3),
                       lambda g: symrep.symmetric_catalog(3, g)))
    if order == 24:
        models.append(("S4", lambda: mo.symmetric_group(4),
                       lambda g: symrep.symmetric_catalog(4, g)))
    if order == 120:
        models.append(("S5", lambda: mo.symmetric_group(5),
                       lambda g: symrep.symmetric_catalog(5, g)))
    if order % 2 == 0 and order >= 6:
        k = order // 2
        if k >= 3:
            models.append(
                ("D%d" % k, lambda k=k: dihedral_group(k),
                 lambda g, k=k: dihedral_catalog(g, k))
            )
    if order == 8:
        models.append(("Q8", quaternion_group, quaternion_catalog))
    if order == 12:
        models.append(("A4", alternating4_group, alternating4_catalog))
    if order == 48:
        models.append(("C2wrS3", lambda: symrep.wreath_group(mo.cyclic_group(2), 3).monoid,
                       _wreath_catalog_builder(mo.cyclic_group(2), 3)))
    if order == 18:
        models.append(("C3wrS2", lambda: symrep.wreath_group(mo.cyclic_group(3), 2).monoid,
                       _wreath_catalog_builder(mo.cyclic_group(3), 2)))
    if order == 72:
        models.append(("S3wrS2", lambda: symrep.wreath_group(mo.symmetric_group(3), 2).monoid,
                       _wreath_catalog_builder(mo.symmetric_group(3), 2)))
    return models


def _wreath_catalog_builder(base: FiniteMonoid, n: int, base_catalog=None):
    def build(g: FiniteMonoid):
        w = symrep.wreath_group(base, n)
        cat = base_catalog or catalog_for_group(base)
        irr = symrep.irr_wreath_all(w, cat)
        # g is the very monoid w.monoid (builder is called on the model itself)
        return [Representation(g, v.mats, "left", validate=False, name=v.name) for v in irr]

    return build


def catalog_for_group(g: FiniteMonoid) -> list[Representation]:
    """Irr(G) for a recognized group; raises MissingProviderError otherwise."""
    if not g.is_group():
        raise MissingProviderError("local structure is not a group")
    if g.size == 1:
        return [one_dim(g, [1], validate=False, name="triv")]
    if is_abelian(g):
        return abelian_catalog(g)
    order = g.size
    # plain nonabelian models
    for name, make, catbuild in _nonabelian_models(order):
        model = make()
        iso = find_isomorphism(model, g)
        if iso is not None:
            return transport_catalog(catbuild(model), iso, g)
    # nonabelian model x abelian cofactor
    for d in range(2, order):
        if order % d or order // d < 2:
            continue
        for name, make, catbuild in _nonabelian_models(d):
            for ab in _abelian_groups_of_order(order // d):
                model_parts = [make()] + [mo.cyclic_group(k) for k in ab]
                model = direct_product_group(model_parts)
                iso = find_isomorphism(model, g)
                if iso is not None:
                    catalogs = [catbuild(model_parts[0])] + [
                        abelian_catalog(p) for p in model_parts[1:]
                    ]
                    cat = _product_catalog(model_parts, model, catalogs)
                    return transport_catalog(cat, iso, g)
    raise MissingProviderError(
        "no recognized model for a nonabelian group of order %d" % order
    )


def auto_provider(grp: FiniteMonoid, e: int) -> list[Representation]:
    """Provider callable for cmp_irreducibles."""
    return catalog_for_group(grp)
