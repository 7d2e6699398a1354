"""Representations of finite monoids over cyclotomic fields.

Covers Hom spaces, the Burnside irreducibility test, Schutzenberger
representations, local induction/coinduction, the Clifford-Munn-Ponizovskii
construction of Irr(M), sandwich-matrix semisimplicity certificates, duality
and contragredients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclo import CYC_ONE, CYC_ZERO, CycNum, cyc
from .linalg import ExactMatrix, SpanTracker
from . import monoid as mo
from .monoid import FiniteMonoid, MonoidError, SubmonoidRef


class RepresentationError(ValueError):
    pass


class Representation:
    """A monoid with one exact matrix per element.

    Left representations satisfy rho(ab) = rho(a)rho(b); right representations
    store rho(ab) = rho(b)rho(a) and act on column vectors as v.m = rho(m)v.
    """

    __slots__ = ("monoid", "dim", "mats", "side", "apex", "name")

    def __init__(self, monoid: FiniteMonoid, mats, side: str = "left",
                 validate: bool = True, apex=None, name: str = ""):
        self.monoid = monoid
        self.mats = list(mats)
        self.side = side
        self.apex = apex
        self.name = name
        if len(self.mats) != monoid.size:
            raise RepresentationError("need one matrix per element")
        self.dim = self.mats[0].rows if self.mats else 0
        for m in self.mats:
            if m.rows != self.dim or m.cols != self.dim:
                raise RepresentationError("matrices must be square of equal size")
        if validate:
            if self.dim and self.mats[monoid.identity] != ExactMatrix.identity(self.dim):
                raise RepresentationError("identity does not act as the identity matrix")
            t = monoid.table
            for g in monoid.generators():
                for x in range(monoid.size):
                    if side == "left":
                        lhs = self.mats[g] * self.mats[x]
                        target = self.mats[t[g][x]]
                    else:
                        lhs = self.mats[x] * self.mats[g]
                        target = self.mats[t[g][x]]
                    if lhs != target:
                        raise RepresentationError(
                            "not multiplicative at (%d,%d)" % (g, x)
                        )

    def mat(self, x: int) -> ExactMatrix:
        return self.mats[x]

    def __repr__(self):
        return "Representation(dim=%d, side=%s%s)" % (
            self.dim,
            self.side,
            ", name=%s" % self.name if self.name else "",
        )

    def restrict(self, sub: SubmonoidRef) -> "Representation":
        subm, members = sub.as_monoid()
        return Representation(
            subm, [self.mats[x] for x in members], self.side, validate=False,
            name=self.name + "|N" if self.name else "",
        )

    def direct_sum(self, other: "Representation") -> "Representation":
        assert self.monoid is other.monoid and self.side == other.side
        mats = []
        for a, b in zip(self.mats, other.mats):
            m = ExactMatrix.zeros(self.dim + other.dim, self.dim + other.dim)
            for i in range(a.rows):
                for j in range(a.cols):
                    m.data[i][j] = a.data[i][j]
            for i in range(b.rows):
                for j in range(b.cols):
                    m.data[self.dim + i][self.dim + j] = b.data[i][j]
            mats.append(m)
        return Representation(self.monoid, mats, self.side, validate=False)

    def tensor(self, other: "Representation") -> "Representation":
        assert self.monoid is other.monoid and self.side == other.side
        return Representation(
            self.monoid,
            [a.kron(b) for a, b in zip(self.mats, other.mats)],
            self.side,
            validate=False,
        )

    def conjugate_by(self, t: ExactMatrix) -> "Representation":
        tinv = t.inverse()
        return Representation(
            self.monoid, [tinv * m * t for m in self.mats], self.side, validate=False
        )


def one_dim(monoid: FiniteMonoid, values, side: str = "left", validate: bool = True,
            apex=None, name: str = "") -> Representation:
    return Representation(
        monoid, [ExactMatrix([[cyc(v)]]) for v in values], side, validate,
        apex=apex, name=name,
    )


def trivial_representation(monoid: FiniteMonoid) -> Representation:
    return one_dim(monoid, [1] * monoid.size, validate=False, name="triv")


def left_regular(monoid: FiniteMonoid) -> Representation:
    n = monoid.size
    mats = []
    for m in range(n):
        mat = ExactMatrix.zeros(n, n)
        for x in range(n):
            mat.data[monoid.table[m][x]][x] = CYC_ONE
        mats.append(mat)
    return Representation(monoid, mats, "left", validate=False, name="regular")


def right_regular(monoid: FiniteMonoid) -> Representation:
    n = monoid.size
    mats = []
    for m in range(n):
        mat = ExactMatrix.zeros(n, n)
        for x in range(n):
            mat.data[monoid.table[x][m]][x] = CYC_ONE
        mats.append(mat)
    return Representation(monoid, mats, "right", validate=False, name="regular-r")


# -- Hom spaces and irreducibility -------------------------------------------


def hom_space(v: Representation, w: Representation) -> list[ExactMatrix]:
    """Basis of {T : W <- V intertwiners}, i.e. T rho_v(m) = rho_w(m) T."""
    if v.monoid is not w.monoid and v.monoid != w.monoid:
        raise RepresentationError("representations live over different monoids")
    if v.side != w.side:
        raise RepresentationError("mixed-side Hom is not defined")
    gens = v.monoid.generators()
    rows = []
    dv, dw = v.dim, w.dim
    for g in gens:
        a = v.mats[g]
        b = w.mats[g]
        # equation b*T - T*a = 0, unknown T is dw x dv, row-major flattening
        for i in range(dw):
            for j in range(dv):
                row = [CYC_ZERO] * (dw * dv)
                for k in range(dw):
                    if b.data[i][k]:
                        row[k * dv + j] = row[k * dv + j] + b.data[i][k]
                for k in range(dv):
                    if a.data[k][j]:
                        row[i * dv + k] = row[i * dv + k] - a.data[k][j]
                rows.append(row)
    if not rows:
        rows = [[CYC_ZERO] * (dw * dv)]
    basis = ExactMatrix(rows).nullspace()
    out = []
    for vec in basis:
        flat = vec.vec()
        out.append(ExactMatrix([[flat[i * dv + j] for j in range(dv)] for i in range(dw)]))
    return out


def multiplicity(v: Representation, w: Representation) -> int:
    """dim Hom(v, w); for irreducible w over a semisimple algebra this is the
    multiplicity of w in v."""
    return len(hom_space(v, w))


def burnside_image_dim(v: Representation) -> int:
    tracker = SpanTracker(v.dim * v.dim)
    for m in v.mats:
        tracker.add(m.vec())
    return tracker.dim


def is_irreducible(v: Representation) -> bool:
    """Complete exact test: the image of C[M] spans End(V) iff V is irreducible."""
    return v.dim > 0 and burnside_image_dim(v) == v.dim * v.dim


def are_isomorphic_irreducibles(v: Representation, w: Representation) -> bool:
    return v.dim == w.dim and len(hom_space(v, w)) > 0


def multiplicity_vector(v: Representation, catalog) -> list[int]:
    return [multiplicity(v, w) for w in catalog]


# -- subspaces, quotients, isotypic pieces ------------------------------------


def _complete_basis(columns: list[ExactMatrix], dim: int):
    """Extend independent columns to a basis using unit vectors; returns the
    change-of-basis matrix [S | complement units] and the split point."""
    tracker = SpanTracker(dim)
    cols = []
    for c in columns:
        if tracker.add(c.vec()):
            cols.append(c.vec())
    k = len(cols)
    for i in range(dim):
        unit = [CYC_ZERO] * dim
        unit[i] = CYC_ONE
        if tracker.add(unit):
            cols.append(unit)
    assert len(cols) == dim
    basis = ExactMatrix([[cols[j][i] for j in range(dim)] for i in range(dim)])
    return basis, k


def invariant_subspace_rep(v: Representation, columns: list[ExactMatrix]):
    """(sub, quotient) representations for an invariant column span."""
    basis, k = _complete_basis(columns, v.dim)
    binv = basis.inverse()
    subs = []
    quots = []
    for m in v.mats:
        t = binv * m * basis
        sub = ExactMatrix([[t.data[i][j] for j in range(k)] for i in range(k)])
        quot = ExactMatrix(
            [[t.data[i][j] for j in range(k, v.dim)] for i in range(k, v.dim)]
        )
        for i in range(k, v.dim):
            for j in range(k):
                if t.data[i][j]:
                    raise RepresentationError("subspace is not invariant")
        subs.append(sub)
        quots.append(quot)
    subrep = Representation(v.monoid, subs, v.side, validate=False) if k else None
    quotrep = (
        Representation(v.monoid, quots, v.side, validate=False) if k < v.dim else None
    )
    return subrep, quotrep


def isotypic_quotient(v: Representation, w: Representation):
    """The greatest w-isotypic quotient V_{pi'}: returns (kernel_columns,
    quotient representation or None, multiplicity n)."""
    homs = hom_space(v, w)
    n = len(homs)
    if n == 0:
        return [ExactMatrix.identity(v.dim).submatrix_columns([j]) for j in range(v.dim)], None, 0
    stacked = homs[0]
    for t in homs[1:]:
        stacked = stacked.vstack(t)
    kernel = stacked.nullspace()
    sub, quot = invariant_subspace_rep(v, kernel)
    return kernel, quot, n


def isotypic_component(v: Representation, w: Representation) -> list[ExactMatrix]:
    """Column basis of the w-isotypic subspace of v (sum of images of homs w->v)."""
    homs = hom_space(w, v)
    tracker = SpanTracker(v.dim)
    cols = []
    for t in homs:
        for j in range(t.cols):
            col = [t.data[i][j] for i in range(t.rows)]
            if tracker.add(col):
                cols.append(ExactMatrix.column(col))
    return cols


# -- local structure: Schutzenberger, induction, sandwich ---------------------


def local_group(m: FiniteMonoid, n: SubmonoidRef, elem: int):
    """The unit group G_elem^N as (abstract group monoid, ambient member list)."""
    loc, members, g_ambient = mo.local_monoid(m, n, elem)
    idx = {x: i for i, x in enumerate(members)}
    gidx = [idx[x] for x in g_ambient]
    pos = {x: i for i, x in enumerate(gidx)}
    table = [[pos[loc.table[a][b]] for b in gidx] for a in gidx]
    grp = FiniteMonoid(table, pos[idx[elem]], [m.label(x) for x in g_ambient])
    return grp, g_ambient


@dataclass
class SchutzData:
    """Transversals and the symbolic block grids at one element."""

    elem: int
    group: FiniteMonoid             # abstract local group
    group_members: list[int]        # ambient indices, aligned with group
    x_transversal: list[int]
    y_transversal: list[int]
    lclass: list[int]
    rclass: list[int]
    left_grid: dict                 # n -> {(i, j): g_abstract}
    right_grid: dict                # n -> {(i, j): g_abstract}


def schutz_data(m: FiniteMonoid, n: SubmonoidRef, elem: int) -> SchutzData:
    grp, g_members = local_group(m, n, elem)
    gpos = {x: i for i, x in enumerate(g_members)}
    t = m.table
    nm = n.members
    lset = mo.left_set(m, nm, elem)
    rset = mo.right_set(m, elem, nm)
    lclass = sorted(x for x in lset if mo.left_set(m, nm, x) == lset)
    rclass = sorted(x for x in rset if mo.right_set(m, x, nm) == rset)
    # right witnesses for G: g = elem*g_r
    g_right_wit = {}
    g_left_wit = {}
    for g in g_members:
        g_right_wit[g] = next(b for b in nm if t[elem][b] == g)
        g_left_wit[g] = next(a for a in nm if t[a][elem] == g)
    # x o g enumeration: free action, so the map (x_i, g) -> value is injective
    value_to_xg = {}
    x_tr = []
    seen = set()
    for x in lclass:
        if x in seen:
            continue
        x_tr.append(x)
        for g in g_members:
            val = t[x][g_right_wit[g]]
            value_to_xg[val] = (len(x_tr) - 1, gpos[g])
            seen.add(val)
    value_to_gy = {}
    y_tr = []
    seen = set()
    for y in rclass:
        if y in seen:
            continue
        y_tr.append(y)
        for g in g_members:
            val = t[g_left_wit[g]][y]
            value_to_gy[val] = (gpos[g], len(y_tr) - 1)
            seen.add(val)
    left_grid = {}
    right_grid = {}
    lclass_set = set(lclass)
    rclass_set = set(rclass)
    for x in nm:
        entries = {}
        for j, xj in enumerate(x_tr):
            val = t[x][xj]
            if val in lclass_set:
                i, g = value_to_xg[val]
                entries[(i, j)] = g
        left_grid[x] = entries
        rentries = {}
        for i, yi in enumerate(y_tr):
            val = t[yi][x]
            if val in rclass_set:
                g, j = value_to_gy[val]
                rentries[(i, j)] = g
        right_grid[x] = rentries
    return SchutzData(
        elem, grp, g_members, x_tr, y_tr, lclass, rclass, left_grid, right_grid
    )


def schutzenberger(m: FiniteMonoid, n: SubmonoidRef, elem: int, side: str = "left"):
    """Block-monomial Schutzenberger representation over C[G_elem^N], realized
    as honest permutation-block matrices of size s*|G| (left) or t*|G| (right).
    Returns (matrices dict n->ExactMatrix, SchutzData)."""
    data = schutz_data(m, n, elem)
    grp = data.group
    gsize = grp.size
    reg = left_regular(grp)
    mats = {}
    if side == "left":
        s = len(data.x_transversal)
        for x in n.members:
            big = ExactMatrix.zeros(s * gsize, s * gsize)
            for (i, j), g in data.left_grid[x].items():
                block = reg.mats[g]
                for a in range(gsize):
                    for b in range(gsize):
                        if block.data[a][b]:
                            big.data[i * gsize + a][j * gsize + b] = block.data[a][b]
            mats[x] = big
    else:
        tt = len(data.y_transversal)
        for x in n.members:
            big = ExactMatrix.zeros(tt * gsize, tt * gsize)
            for (i, j), g in data.right_grid[x].items():
                block = reg.mats[g]
                for a in range(gsize):
                    for b in range(gsize):
                        if block.data[a][b]:
                            big.data[i * gsize + a][j * gsize + b] = block.data[a][b]
            mats[x] = big
    return mats, data


def induce_local(m: FiniteMonoid, n: SubmonoidRef, elem: int, sigma: Representation,
                 data: SchutzData | None = None) -> Representation:
    """Ind_{G^N_elem}(sigma) = C[L^N_elem] (x)_{C[G]} W, by substituting sigma
    into the left Schutzenberger blocks.  A representation of N (of M when N=M)."""
    if data is None:
        data = schutz_data(m, n, elem)
    if sigma.monoid != data.group:
        raise RepresentationError("sigma must be a representation of the local group")
    s = len(data.x_transversal)
    l = sigma.dim
    mats = []
    submonoid_elems = list(n.members)
    for x in submonoid_elems:
        big = ExactMatrix.zeros(s * l, s * l)
        for (i, j), g in data.left_grid[x].items():
            block = sigma.mats[g]
            for a in range(l):
                for b in range(l):
                    if block.data[a][b]:
                        big.data[i * l + a][j * l + b] = block.data[a][b]
        mats.append(big)
    if len(submonoid_elems) == m.size:
        return Representation(m, mats, "left", validate=True)
    sub, _ = SubmonoidRef(m, tuple(submonoid_elems)).as_monoid()
    return Representation(sub, mats, "left", validate=True)


def coinduce_local(m: FiniteMonoid, n: SubmonoidRef, elem: int, sigma: Representation,
                   data: SchutzData | None = None) -> Representation:
    """Coind via the right Schutzenberger blocks; a left representation."""
    if data is None:
        data = schutz_data(m, n, elem)
    t = len(data.y_transversal)
    l = sigma.dim
    mats = []
    submonoid_elems = list(n.members)
    for x in submonoid_elems:
        big = ExactMatrix.zeros(t * l, t * l)
        for (i, j), g in data.right_grid[x].items():
            block = sigma.mats[g]
            for a in range(l):
                for b in range(l):
                    if block.data[a][b]:
                        big.data[i * l + a][j * l + b] = block.data[a][b]
        mats.append(big)
    if len(submonoid_elems) == m.size:
        return Representation(m, mats, "left", validate=True)
    sub, _ = SubmonoidRef(m, tuple(submonoid_elems)).as_monoid()
    return Representation(sub, mats, "left", validate=True)


def radical_subspace(v: Representation, e: int) -> list[ExactMatrix]:
    """N_e(V) = {x : e M x = 0} for v induced from the idempotent e."""
    m = v.monoid
    stacked = None
    seen = set()
    for x in range(m.size):
        u = m.table[e][x]
        if u in seen:
            continue
        seen.add(u)
        mat = v.mats[u]
        stacked = mat if stacked is None else stacked.vstack(mat)
    return stacked.nullspace()


def phi_map(m: FiniteMonoid, elem: int, sigma: Representation,
            data: SchutzData | None = None) -> ExactMatrix:
    """The canonical intertwiner Ind -> Coind; blockwise sigma(P(m))."""
    if data is None:
        data = schutz_data(m, mo.full_submonoid(m), elem)
    gset = set(data.group_members)
    gpos = {x: i for i, x in enumerate(data.group_members)}
    t = len(data.y_transversal)
    s = len(data.x_transversal)
    l = sigma.dim
    out = ExactMatrix.zeros(t * l, s * l)
    for j, y in enumerate(data.y_transversal):
        for i, x in enumerate(data.x_transversal):
            prod = m.table[y][x]
            if prod in gset:
                block = sigma.mats[gpos[prod]]
                for a in range(l):
                    for b in range(l):
                        out.data[j * l + a][i * l + b] = block.data[a][b]
    return out


# -- semisimplicity ------------------------------------------------------------


@dataclass
class ClassCertificate:
    rep: int
    regular: bool
    square: bool
    nonsingular: bool


@dataclass
class SemisimplicityCertificate:
    ok: bool
    classes: list[ClassCertificate] = field(default_factory=list)


def is_semisimple(m: FiniteMonoid) -> SemisimplicityCertificate:
    """C[M] is semisimple iff every principal factor is non-null and every
    regular class has a nonsingular sandwich matrix over C[G_e] (checked via
    the regular representation of G_e)."""
    green = mo.green_absolute(m)
    idem = set(m.idempotents())
    cert = SemisimplicityCertificate(True)
    for rec in green.classes:
        e_candidates = sorted(set(rec.members) & idem)
        if not e_candidates:
            cert.classes.append(ClassCertificate(rec.rep, False, False, False))
            cert.ok = False
            continue
        e = e_candidates[0]
        sw = mo.sandwich_matrix(m, e)
        grp, members = local_group(m, mo.full_submonoid(m), e)
        gpos = {x: i for i, x in enumerate(members)}
        reg = left_regular(grp)
        gsize = grp.size
        t, s = len(sw.y_transversal), len(sw.x_transversal)
        square = t == s
        big = ExactMatrix.zeros(t * gsize, s * gsize)
        for j in range(t):
            for i in range(s):
                entry = sw.grid[j][i]
                if entry is not None:
                    block = reg.mats[gpos[entry]]
                    for a in range(gsize):
                        for b in range(gsize):
                            big.data[j * gsize + a][i * gsize + b] = block.data[a][b]
        nonsingular = square and big.rank() == s * gsize
        cert.classes.append(ClassCertificate(rec.rep, True, square, nonsingular))
        if not nonsingular:
            cert.ok = False
    return cert


# -- CMP irreducibles -----------------------------------------------------------


class MissingProviderError(RepresentationError):
    pass


@dataclass
class ApexInfo:
    idempotent: int
    class_members: list[int]
    annihilator: list[int]


def regular_class_idempotents(m: FiniteMonoid) -> list[int]:
    """One minimal idempotent per regular J-class, ordered by class rep."""
    green = mo.green_absolute(m)
    idem = set(m.idempotents())
    out = []
    for rec in green.classes:
        cands = sorted(set(rec.members) & idem)
        if cands:
            out.append(cands[0])
    return out


def cmp_irreducible(m: FiniteMonoid, e: int, sigma: Representation,
                    data: SchutzData | None = None) -> Representation:
    """The irreducible with apex J_e attached to sigma in Irr(G_e)."""
    if data is None:
        data = schutz_data(m, mo.full_submonoid(m), e)
    ind = induce_local(m, mo.full_submonoid(m), e, sigma, data)
    rad = radical_subspace(ind, e)
    if rad:
        _, quot = invariant_subspace_rep(ind, rad)
        v = quot
    else:
        v = ind
    if v is None or not is_irreducible(v):
        raise RepresentationError("CMP quotient failed the Burnside test")
    green = mo.green_absolute(m)
    rec = green.class_of(e)
    ann = [x for x in range(m.size) if v.mats[x].is_zero()]
    v.apex = ApexInfo(e, rec.members, ann)
    v.name = "CMP(e=%d,%s)" % (e, sigma.name or "sigma")
    return v


def cmp_irreducibles(m: FiniteMonoid, providers) -> list[Representation]:
    """The complete list Irr(M), one entry per (regular class, Irr(G_e)) pair.

    `providers` maps each chosen class idempotent to the catalog of its local
    group: either a dict {e: list[Representation-of-local-group]} or a callable
    (local_group_monoid, e) -> list[Representation].
    """
    out = []
    for e in regular_class_idempotents(m):
        data = schutz_data(m, mo.full_submonoid(m), e)
        grp = data.group
        if callable(providers):
            catalog = providers(grp, e)
        else:
            if e not in providers:
                raise MissingProviderError("no provider for class idempotent %d" % e)
            catalog = providers[e]
        if catalog is None:
            raise MissingProviderError("no catalog for local group at %d" % e)
        total = sum(s.dim * s.dim for s in catalog)
        if total != grp.size:
            raise MissingProviderError(
                "provider catalog at e=%d fails sum(dim^2)=|G| (%d != %d)"
                % (e, total, grp.size)
            )
        for sigma in catalog:
            out.append(cmp_irreducible(m, e, sigma, data))
    for i, v in enumerate(out):
        for w in out[:i]:
            if v.dim == w.dim and hom_space(v, w):
                raise RepresentationError("CMP produced isomorphic irreducibles")
    return out


def e_restriction(v: Representation, e: int, n: SubmonoidRef | None = None):
    """eV as a representation of the local group at e (None if eV = 0)."""
    m = v.monoid
    if n is None:
        n = mo.full_submonoid(m)
    grp, members = local_group(m, n, e)
    img = v.mats[e]
    cols = [img.submatrix_columns([j]) for j in range(img.cols)]
    tracker = SpanTracker(v.dim)
    basis_cols = []
    for c in cols:
        if tracker.add(c.vec()):
            basis_cols.append(c)
    if not basis_cols:
        return None
    basis, k = _complete_basis(basis_cols, v.dim)
    binv = basis.inverse()
    mats = []
    for g in members:
        t = binv * v.mats[g] * basis
        for i in range(k, v.dim):
            for j in range(k):
                if t.data[i][j]:
                    raise RepresentationError("eV is not G_e-invariant; bug")
        mats.append(ExactMatrix([[t.data[i][j] for j in range(k)] for i in range(k)]))
    return Representation(grp, mats, "left", validate=True)


# -- duality ---------------------------------------------------------------------


def dual(v: Representation) -> Representation:
    """D(V) = Hom(V, C) with the opposite side."""
    side = "right" if v.side == "left" else "left"
    return Representation(
        v.monoid, [m.transpose() for m in v.mats], side, validate=False,
        name="D(%s)" % v.name if v.name else "",
    )


def contragredient_inverse(v: Representation, inv_map) -> Representation:
    """D(V) composed with the involution; a left representation again."""
    if inv_map is None:
        raise RepresentationError("contragredient needs an inverse monoid")
    return Representation(
        v.monoid,
        [v.mats[inv_map[x]].transpose() for x in range(v.monoid.size)],
        v.side,
        validate=True,
        name="contragredient(%s)" % v.name if v.name else "",
    )


# -- central idempotents over semisimple monoid algebras --------------------------


def central_idempotent(m: FiniteMonoid, catalog: list[Representation], which: int):
    """Coefficients of the central primitive idempotent e_W in C[M] acting as
    the identity on catalog[which] and as 0 on the other irreducibles."""
    rows = []
    rhs = []
    for idx, v in enumerate(catalog):
        for i in range(v.dim):
            for j in range(v.dim):
                rows.append([v.mats[x].data[i][j] for x in range(m.size)])
                want = CYC_ONE if (idx == which and i == j) else CYC_ZERO
                rhs.append([want])
    sol = ExactMatrix(rows).solve(ExactMatrix(rhs))
    if sol is None:
        raise RepresentationError(
            "no central idempotent: monoid algebra is not semisimple or catalog incomplete"
        )
    return [sol.data[x][0] for x in range(m.size)]


def algebra_element_matrix(v: Representation, coeffs) -> ExactMatrix:
    """The image of sum_x coeffs[x]*x under the representation."""
    out = ExactMatrix.zeros(v.dim, v.dim)
    for x, c in enumerate(coeffs):
        c = cyc(c)
        if c:
            out = out + v.mats[x].scale(c)
    return out


# -- serialization ----------------------------------------------------------------


def cycnum_to_json(value: CycNum):
    """Rationals serialize as [num, den]; general values as
    [conductor, [num, den], ...] over the power basis."""
    value = value.reduced()
    if value.is_rational():
        q = value.rational_value()
        return [q.numerator, q.denominator]
    return [value.n] + [[c.numerator, c.denominator] for c in value.c]


def cycnum_from_json(obj) -> CycNum:
    from fractions import Fraction

    if len(obj) == 2 and not isinstance(obj[0], list) and not isinstance(obj[1], list):
        return CycNum.from_rational(Fraction(obj[0], obj[1]))
    n = obj[0]
    coeffs = [Fraction(a, b) for a, b in obj[1:]]
    return CycNum(n, coeffs)


def rep_to_json(v: Representation) -> dict:
    return {
        "monoid": v.monoid.to_json(),
        "dim": v.dim,
        "side": v.side,
        "matrices": [
            [[cycnum_to_json(x) for x in row] for row in m.data] for m in v.mats
        ],
    }


def rep_from_json(obj: dict, monoid: FiniteMonoid | None = None) -> Representation:
    if monoid is None:
        monoid = FiniteMonoid.from_json(obj["monoid"])
    mats = [
        ExactMatrix([[cycnum_from_json(x) for x in row] for row in m])
        for m in obj["matrices"]
    ]
    return Representation(monoid, mats, obj.get("side", "left"), validate=True)
