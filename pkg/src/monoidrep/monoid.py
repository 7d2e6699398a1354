"""Finite monoids as multiplication tables, with absolute and relative Green
structure, localization, Mackey decompositions, sandwich matrices, inverse
monoid involutions and centric quotients.

Elements are dense indices 0..size-1; the identity index is stored explicitly
(quotients and extensions permute indices).  Representatives and transversals
always pick the minimal element index, so derived data is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations, product


class MonoidError(ValueError):
    pass


class FiniteMonoid:
    __slots__ = ("table", "identity", "labels", "_gens", "_ideal_cache")

    def __init__(self, table, identity: int, labels=None, validate: bool = True):
        self.table = tuple(tuple(row) for row in table)
        self.identity = identity
        self.labels = list(labels) if labels is not None else None
        self._gens = None
        self._ideal_cache = {}
        n = len(self.table)
        if any(len(row) != n for row in self.table):
            raise MonoidError("table is not square")
        if not (0 <= identity < n):
            raise MonoidError("identity index out of range")
        if any(not (0 <= x < n) for row in self.table for x in row):
            raise MonoidError("table entry out of range")
        for x in range(n):
            if self.table[self.identity][x] != x or self.table[x][self.identity] != x:
                raise MonoidError("identity law fails at element %d" % x)
        if validate:
            t = self.table
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    tab = t[ta[b]]
                    tb = t[b]
                    for c in range(n):
                        if tab[c] != ta[tb[c]]:
                            raise MonoidError(
                                "non-associative at (%d,%d,%d)" % (a, b, c)
                            )

    # -- basics -----------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def elements(self):
        return range(self.size)

    def idempotents(self) -> list[int]:
        return [e for e in range(self.size) if self.table[e][e] == e]

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by element index."""
        if self._gens is None:
            gens: list[int] = []
            closed = {self.identity}
            for m in range(self.size):
                if m not in closed:
                    gens.append(m)
                    closed = self.closure([self.identity] + gens)
            self._gens = gens
        return list(self._gens)

    def closure(self, seed) -> set[int]:
        out = set(seed) | {self.identity}
        frontier = list(out)
        while frontier:
            new = []
            for x in frontier:
                for g in out.copy():
                    for p in (self.table[x][g], self.table[g][x]):
                        if p not in out:
                            out.add(p)
                            new.append(p)
            frontier = new
        return out

    def is_group(self) -> bool:
        return len(self.units()) == self.size

    def units(self) -> list[int]:
        """The group of units."""
        out = []
        for x in range(self.size):
            for y in range(self.size):
                if (
                    self.table[x][y] == self.identity
                    and self.table[y][x] == self.identity
                ):
                    out.append(x)
                    break
        return out

    def element_order(self, x: int) -> int:
        """For a unit: the group-theoretic order.  In general the number of
        distinct powers x, x^2, ... before the first repetition."""
        seen = set()
        cur = x
        while cur not in seen:
            seen.add(cur)
            cur = self.table[cur][x]
        return len(seen)

    def power(self, x: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = self.table[out][x]
        return out

    def opposite(self) -> "FiniteMonoid":
        n = self.size
        return FiniteMonoid(
            [[self.table[b][a] for b in range(n)] for a in range(n)],
            self.identity,
            self.labels,
            validate=False,
        )

    # -- ideals and absolute Green relations -------------------------------

    def left_ideal(self, m: int) -> frozenset:
        return frozenset(self.table[x][m] for x in range(self.size))

    def right_ideal(self, m: int) -> frozenset:
        return frozenset(self.table[m][x] for x in range(self.size))

    def two_sided_ideal(self, m: int) -> frozenset:
        key = ("J", m)
        if key not in self._ideal_cache:
            t = self.table
            self._ideal_cache[key] = frozenset(
                t[t[x][m]][y] for x in range(self.size) for y in range(self.size)
            )
        return self._ideal_cache[key]

    def __repr__(self):
        return "FiniteMonoid(size=%d)" % self.size

    def __eq__(self, other):
        return (
            isinstance(other, FiniteMonoid)
            and self.table == other.table
            and self.identity == other.identity
        )

    def __hash__(self):
        return hash((self.table, self.identity))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        out = {"table": [list(r) for r in self.table], "identity": self.identity}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @staticmethod
    def from_json(obj: dict) -> "FiniteMonoid":
        if "table" in obj:
            known = {"table", "identity", "labels"}
            extra = set(obj) - known
            if extra:
                raise MonoidError("unknown fields in monoid file: %s" % sorted(extra))
            return FiniteMonoid(obj["table"], obj["identity"], obj.get("labels"))
        if "points" in obj:
            known = {"points", "generators", "kind"}
            extra = set(obj) - known
            if extra:
                raise MonoidError("unknown fields in monoid file: %s" % sorted(extra))
            kind = obj.get("kind", "partial")
            gens = []
            for g in obj["generators"]:
                img = g["map"]
                gens.append(tuple(None if v is None else int(v) for v in img))
            if kind == "total":
                if any(v is None for g in gens for v in g):
                    raise MonoidError("total map contains null image")
                return monoid_from_total_transformations(obj["points"], gens)
            return monoid_from_partial_transformations(obj["points"], gens)
        raise MonoidError("monoid file needs either 'table' or 'points'")


def monoid_from_table(table, identity: int, labels=None, validate: bool = True) -> FiniteMonoid:
    return FiniteMonoid(table, identity, labels, validate=validate)


# -- partial transformation monoids ---------------------------------------


def compose_partial(f, g):
    """(f o g)(x) = f(g(x)); None marks undefined points."""
    return tuple(None if g[x] is None else f[g[x]] for x in range(len(g)))


def partial_map_label(f) -> str:
    return "[" + ",".join("-" if v is None else str(v + 1) for v in f) + "]"


def _closure_of_maps(k: int, gens, compose):
    ident = tuple(range(k))
    elems = [ident]
    index = {ident: 0}
    for g in gens:
        g = tuple(g)
        if g not in index:
            index[g] = len(elems)
            elems.append(g)
    # breadth-first closure: products x*g and g*x in discovery order
    i = 0
    gen_list = [tuple(g) for g in gens]
    while i < len(elems):
        x = elems[i]
        for g in gen_list:
            p = compose(x, g)
            if p not in index:
                index[p] = len(elems)
                elems.append(p)
            q = compose(g, x)
            if q not in index:
                index[q] = len(elems)
                elems.append(q)
        i += 1
    table = [[index[compose(a, b)] for b in elems] for a in elems]
    return elems, table


def monoid_from_partial_transformations(k: int, gens) -> FiniteMonoid:
    """Closure of partial maps on {1..k} under composition, plus the identity."""
    for g in gens:
        if len(g) != k:
            raise MonoidError("generator arity mismatch")
        vals = [v for v in g if v is not None]
        if any(not (0 <= v < k) for v in vals):
            raise MonoidError("generator image out of range")
    elems, table = _closure_of_maps(k, gens, compose_partial)
    labels = [partial_map_label(f) for f in elems]
    return FiniteMonoid(table, 0, labels, validate=False)


def monoid_from_total_transformations(k: int, gens) -> FiniteMonoid:
    def comp(f, g):
        return tuple(f[g[x]] for x in range(len(g)))

    elems, table = _closure_of_maps(k, gens, comp)
    labels = ["[" + ",".join(str(v + 1) for v in f) + "]" for f in elems]
    return FiniteMonoid(table, 0, labels, validate=False)


# -- named monoids ----------------------------------------------------------


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid([[0]], 0, ["1"], validate=False)


def cyclic_group(n: int) -> FiniteMonoid:
    return FiniteMonoid(
        [[(i + j) % n for j in range(n)] for i in range(n)],
        0,
        ["g^%d" % i for i in range(n)],
        validate=False,
    )


def symmetric_group(n: int) -> FiniteMonoid:
    """S_n on all permutation tuples, identity first (lexicographic order)."""
    perms = list(permutations(range(n))) if n > 0 else [()]
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms
    ]
    labels = ["".join(str(i + 1) for i in p) for p in perms]
    return FiniteMonoid(table, 0, labels, validate=False)


def symmetric_group_perm(m: FiniteMonoid, x: int) -> tuple:
    """Recover the permutation tuple of an element of symmetric_group(n)."""
    n = len(m.labels[x])
    return tuple(int(ch) - 1 for ch in m.labels[x])


def symmetric_inverse_monoid(k: int) -> FiniteMonoid:
    """IS_k: all partial injections on {1..k} (the rook monoid)."""
    maps = []
    points = range(k)
    for dom_mask in range(1 << k):
        dom = [i for i in points if dom_mask >> i & 1]
        for img in permutations(points, len(dom)):
            f = [None] * k
            for d, v in zip(dom, img):
                f[d] = v
            maps.append(tuple(f))
    maps.sort(key=lambda f: tuple(-2 if v is None else v for v in f))
    ident = tuple(range(k))
    maps.remove(ident)
    maps.insert(0, ident)
    index = {f: i for i, f in enumerate(maps)}
    table = [[index[compose_partial(a, b)] for b in maps] for a in maps]
    return FiniteMonoid(table, 0, [partial_map_label(f) for f in maps], validate=False)


def full_transformation_monoid(k: int) -> FiniteMonoid:
    maps = sorted(product(range(k), repeat=k))
    ident = tuple(range(k))
    maps.remove(ident)
    maps.insert(0, ident)
    index = {f: i for i, f in enumerate(maps)}
    table = [
        [index[tuple(a[b[x]] for x in range(k))] for b in maps] for a in maps
    ]
    labels = ["[" + ",".join(str(v + 1) for v in f) + "]" for f in maps]
    return FiniteMonoid(table, 0, labels, validate=False)


def null_monoid() -> FiniteMonoid:
    """{1, a, 0} with a^2 = 0: the standard non-semisimple example."""
    table = [[0, 1, 2], [1, 2, 2], [2, 2, 2]]
    return FiniteMonoid(table, 0, ["1", "a", "0"], validate=False)


# -- submonoids -------------------------------------------------------------


@dataclass(frozen=True)
class SubmonoidRef:
    parent: FiniteMonoid
    members: tuple

    def __post_init__(self):
        mem = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", mem)
        if self.parent.identity not in self.members:
            raise MonoidError("submonoid must contain the identity")
        ms = set(self.members)
        for a in self.members:
            for b in self.members:
                if self.parent.table[a][b] not in ms:
                    raise MonoidError("subset is not closed under multiplication")

    @property
    def size(self) -> int:
        return len(self.members)

    def as_monoid(self) -> tuple[FiniteMonoid, list[int]]:
        """The abstract monoid on the members plus the member list."""
        index = {m: i for i, m in enumerate(self.members)}
        t = self.parent.table
        table = [[index[t[a][b]] for b in self.members] for a in self.members]
        labels = [self.parent.label(m) for m in self.members]
        sub = FiniteMonoid(table, index[self.parent.identity], labels, validate=False)
        return sub, list(self.members)


def submonoid(parent: FiniteMonoid, members) -> SubmonoidRef:
    return SubmonoidRef(parent, tuple(members))


def submonoid_closure(parent: FiniteMonoid, seed) -> SubmonoidRef:
    return SubmonoidRef(parent, tuple(parent.closure(seed)))


def trivial_submonoid(parent: FiniteMonoid) -> SubmonoidRef:
    return SubmonoidRef(parent, (parent.identity,))


def full_submonoid(parent: FiniteMonoid) -> SubmonoidRef:
    return SubmonoidRef(parent, tuple(range(parent.size)))


def units_submonoid(parent: FiniteMonoid) -> SubmonoidRef:
    return SubmonoidRef(parent, tuple(parent.units()))


# -- relative Green structure -----------------------------------------------


@dataclass
class ClassRecord:
    rep: int
    members: list[int]
    h_members: list[int]
    x_transversal: list[int]
    y_transversal: list[int]


@dataclass
class GreenData:
    kind: str
    monoid: FiniteMonoid
    n_members: tuple
    k_members: tuple
    classes: list[ClassRecord] = field(default_factory=list)

    def class_of(self, m: int) -> ClassRecord:
        for rec in self.classes:
            if m in rec.members:
                return rec
        raise KeyError(m)


def _set_products(m: FiniteMonoid, left, x: int, right):
    t = m.table
    return frozenset(t[t[a][x]][b] for a in left for b in right)


def left_set(m: FiniteMonoid, n_members, x: int) -> frozenset:
    t = m.table
    return frozenset(t[a][x] for a in n_members)


def right_set(m: FiniteMonoid, x: int, k_members) -> frozenset:
    t = m.table
    return frozenset(t[x][b] for b in k_members)


def green_relative(m: FiniteMonoid, n: SubmonoidRef, k: SubmonoidRef) -> GreenData:
    """The relative J^(N,K) partition with H-monoids and transversals."""
    if n.parent is not m or k.parent is not m:
        raise MonoidError("submonoids must live in the given monoid")
    nm, km = n.members, k.members
    jsets = {x: _set_products(m, nm, x, km) for x in range(m.size)}
    lsets = {x: left_set(m, nm, x) for x in range(m.size)}
    rsets = {x: right_set(m, x, km) for x in range(m.size)}
    by_j: dict[frozenset, list[int]] = {}
    for x in range(m.size):
        by_j.setdefault(jsets[x], []).append(x)
    data = GreenData("J_(N,K)", m, nm, km)
    for jset in sorted(by_j, key=lambda s: min(by_j[s])):
        members = sorted(by_j[jset])
        rep = members[0]
        h = sorted(
            x for x in members if lsets[x] == lsets[rep] and rsets[x] == rsets[rep]
        )
        lclass = sorted(x for x in members if lsets[x] == lsets[rep])
        rclass = sorted(x for x in members if rsets[x] == rsets[rep])
        # x-transversal: orbits of L_m^N under right o_m-multiplication by H
        hr = [b for b in km if m.table[rep][b] in h]
        x_tr = _orbit_transversal(lclass, lambda x: [m.table[x][b] for b in hr])
        hl = [a for a in nm if m.table[a][rep] in h]
        y_tr = _orbit_transversal(rclass, lambda y: [m.table[a][y] for a in hl])
        data.classes.append(ClassRecord(rep, members, h, x_tr, y_tr))
    return data


def _orbit_transversal(members, step) -> list[int]:
    remaining = set(members)
    out = []
    while remaining:
        x = min(remaining)
        out.append(x)
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for z in step(y):
                if z in remaining and z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        remaining -= orbit
    return out


def green_absolute(m: FiniteMonoid) -> GreenData:
    full = full_submonoid(m)
    data = green_relative(m, full, full)
    data.kind = "J"
    return data


def local_monoid(m: FiniteMonoid, n: SubmonoidRef, elem: int):
    """(N_elem, o_elem) as a FiniteMonoid together with its member list and
    the member list of the unit group G_elem^N."""
    nm = n.members
    t = m.table
    left = {t[a][elem]: a for a in nm}          # value -> one witness a with a*elem = value
    right = {t[elem][b]: b for b in nm}
    members = sorted(set(left) & set(right))
    index = {x: i for i, x in enumerate(members)}
    table = []
    for x in members:
        xl = left[x]
        row = []
        for y in members:
            yr = right[y]
            prod = t[t[xl][elem]][yr]
            if prod not in index:
                raise MonoidError("localization product left N_m; table bug")
            row.append(index[prod])
        table.append(row)
    # well-definedness across decompositions, guaranteed by the theory
    for x in members:
        for a in nm:
            if t[a][elem] == x:
                for y in members:
                    yr = right[y]
                    if t[t[a][elem]][yr] != members[table[index[x]][index[y]]]:
                        raise MonoidError("o_m product is not well defined")
                break
    loc = FiniteMonoid(table, index[elem], [m.label(x) for x in members])
    lset = left_set(m, nm, elem)
    rset = right_set(m, elem, nm)
    g = sorted(
        x
        for x in members
        if left_set(m, nm, x) == lset and right_set(m, x, nm) == rset
    )
    unit_idx = sorted(members[u] for u in loc.units())
    if unit_idx != g:
        raise MonoidError("unit group of (N_m, o_m) differs from L^N_m - R^N_m")
    return loc, members, g


def mackey_decompose(m: FiniteMonoid, n: SubmonoidRef, k: SubmonoidRef):
    """Cells x_i o H o y_j per J^(N,K)-class; checks the disjoint cover."""
    data = green_relative(m, n, k)
    t = m.table
    cells = []
    covered: set[int] = set()
    for rec in data.classes:
        nm = n.members
        km = k.members
        left_wit = {}
        for x in rec.x_transversal:
            left_wit[x] = next(a for a in nm if t[a][rec.rep] == x)
        right_wit = {}
        for y in rec.y_transversal:
            right_wit[y] = next(b for b in km if t[rec.rep][b] == y)
        seen_here = set()
        for x in rec.x_transversal:
            a = left_wit[x]
            for g in rec.h_members:
                for y in rec.y_transversal:
                    b = right_wit[y]
                    seen_here.add(t[t[a][g]][b])
        if sorted(seen_here) != rec.members:
            raise MonoidError("Mackey cell product does not enumerate the class")
        if len(rec.x_transversal) * len(rec.y_transversal) * len(rec.h_members) != len(
            rec.members
        ):
            raise MonoidError("|J| != alpha*beta*|H| in class of %d" % rec.rep)
        if covered & seen_here:
            raise MonoidError("Mackey cells overlap")
        covered |= seen_here
        cells.append(rec)
    if len(covered) != m.size:
        raise MonoidError("Mackey cells do not cover the monoid")
    return cells


@dataclass
class SandwichMatrix:
    elem: int
    group: list[int]        # members of G_m in the ambient monoid
    x_transversal: list[int]
    y_transversal: list[int]
    grid: list[list[int | None]]  # grid[j][i] = y_j*x_i in G_m, else None


def sandwich_matrix(m: FiniteMonoid, elem: int) -> SandwichMatrix:
    full = full_submonoid(m)
    data = green_relative(m, full, full)
    rec = data.class_of(elem)
    lset = left_set(m, full.members, elem)
    rset = right_set(m, elem, full.members)
    lclass = sorted(x for x in rec.members if left_set(m, full.members, x) == lset)
    rclass = sorted(x for x in rec.members if right_set(m, x, full.members) == rset)
    g = sorted(set(lclass) & set(rclass))
    gs = set(g)
    hr = [b for b in range(m.size) if m.table[elem][b] in gs]
    x_tr = _orbit_transversal(lclass, lambda x: [m.table[x][b] for b in hr])
    hl = [a for a in range(m.size) if m.table[a][elem] in gs]
    y_tr = _orbit_transversal(rclass, lambda y: [m.table[a][y] for a in hl])
    grid = [
        [(m.table[y][x] if m.table[y][x] in gs else None) for x in x_tr] for y in y_tr
    ]
    return SandwichMatrix(elem, g, x_tr, y_tr, grid)


def involution(m: FiniteMonoid):
    """The inverse map m -> m* when the monoid is inverse, else None."""
    t = m.table
    inv = []
    for x in range(m.size):
        cands = [
            y
            for y in range(m.size)
            if t[t[x][y]][x] == x and t[t[y][x]][y] == y
        ]
        if len(cands) != 1:
            return None
        inv.append(cands[0])
    return inv


def is_centric(m: FiniteMonoid, n: SubmonoidRef) -> bool:
    nm = n.members
    t = m.table
    for x in range(m.size):
        if frozenset(t[x][a] for a in nm) != frozenset(t[a][x] for a in nm):
            return False
    return True


def quotient_centric(m: FiniteMonoid, n: SubmonoidRef):
    """The quotient monoid M/N for centric N, with the projection map."""
    if not is_centric(m, n):
        raise MonoidError("submonoid is not centric")
    nm = n.members
    lclasses: dict[frozenset, int] = {}
    proj = []
    reps = []
    for x in range(m.size):
        s = left_set(m, nm, x)
        if s not in lclasses:
            lclasses[s] = len(reps)
            reps.append(x)
        proj.append(lclasses[s])
    size = len(reps)
    table = [[0] * size for _ in range(size)]
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            table[i][j] = proj[m.table[x][y]]
    labels = ["[%s]" % m.label(x) for x in reps]
    q = FiniteMonoid(table, proj[m.identity], labels)
    for x in range(m.size):
        for y in range(m.size):
            if proj[m.table[x][y]] != q.table[proj[x]][proj[y]]:
                raise MonoidError("projection is not multiplicative")
    return q, proj


def principal_series(m: FiniteMonoid, n: SubmonoidRef, k: SubmonoidRef):
    """Ascending chain of (N,K)-bi-ideals adding one J-class per step."""
    data = green_relative(m, n, k)
    recs = list(data.classes)
    ideal_of = {
        rec.rep: _set_products(m, n.members, rec.rep, k.members) for rec in recs
    }
    removal: list[ClassRecord] = []
    remaining = list(recs)
    while remaining:
        maximal = [
            rec
            for rec in remaining
            if not any(
                other is not rec and rec.rep in ideal_of[other.rep]
                for other in remaining
            )
        ]
        pick = min(maximal, key=lambda rec: rec.rep)
        removal.append(pick)
        remaining.remove(pick)
    chain = []
    acc: set[int] = set()
    for rec in reversed(removal):
        acc |= set(rec.members)
        chain.append(sorted(acc))
    t = m.table
    for ideal in chain:
        ids = set(ideal)
        for x in ideal:
            for a in n.members:
                if t[a][x] not in ids:
                    raise MonoidError("chain member is not left N-stable")
            for b in k.members:
                if t[x][b] not in ids:
                    raise MonoidError("chain member is not right K-stable")
    return chain


def product_table(m1: FiniteMonoid, m2: FiniteMonoid) -> FiniteMonoid:
    """M1 x M2 with pair index (a,b) -> a*|M2|+b."""
    n2 = m2.size
    size = m1.size * n2

    def idx(a, b):
        return a * n2 + b

    table = [[0] * size for _ in range(size)]
    for a1 in range(m1.size):
        for b1 in range(n2):
            for a2 in range(m1.size):
                for b2 in range(n2):
                    table[idx(a1, b1)][idx(a2, b2)] = idx(
                        m1.table[a1][a2], m2.table[b1][b2]
                    )
    labels = [
        "(%s,%s)" % (m1.label(a), m2.label(b))
        for a in range(m1.size)
        for b in range(n2)
    ]
    return FiniteMonoid(table, idx(m1.identity, m2.identity), labels, validate=False)


def load_monoid_file(path: str) -> FiniteMonoid:
    with open(path) as fh:
        return FiniteMonoid.from_json(json.load(fh))
