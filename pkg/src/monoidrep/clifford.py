"""Centric-submonoid machinery: multipliers and monoid extensions M^alpha,
global induction functors, stability submonoids I^lr/J^0/J^1/I^0/I^1/I_M/J_M,
intertwiner systems with cocycle extraction, the projective factorization
rho1 (x) rho2, and Rieffel's normal-subring test."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cyclo import CYC_ONE, CYC_ZERO, CycNum, cyc, lcm
from .linalg import ExactMatrix, SpanTracker
from . import monoid as mo
from .monoid import FiniteMonoid, MonoidError, SubmonoidRef
from . import rep as rp
from .rep import Representation, RepresentationError, hom_space
from . import groupzoo


class CocycleError(ValueError):
    pass


class NormalizationError(RuntimeError):
    pass


# -- multipliers and monoid extensions -------------------------------------------


@dataclass
class Multiplier:
    """A normalized 2-cocycle M x M -> F^x (or F = F^x u {0}).

    Values are exponents of zeta_kappa; None encodes the zero of F."""

    monoid: FiniteMonoid
    kappa: int
    values: dict
    target: str = "Fx"  # "Fx" (no zero) or "F"

    def value(self, a: int, b: int) -> CycNum:
        v = self.values[(a, b)]
        if v is None:
            return CYC_ZERO
        return CycNum.root_of_unity(self.kappa, v)

    def validate(self):
        m = self.monoid
        one = m.identity
        for x in range(m.size):
            if self.values[(x, one)] != 0 or self.values[(one, x)] != 0:
                raise CocycleError("multiplier is not normalized at %d" % x)
        if self.target == "Fx" and any(v is None for v in self.values.values()):
            raise CocycleError("zero value in an F^x-valued multiplier")
        t = m.table
        for a in range(m.size):
            for b in range(m.size):
                for c in range(m.size):
                    lhs = self.value(a, b) * self.value(t[a][b], c)
                    rhs = self.value(b, c) * self.value(a, t[b][c])
                    if lhs != rhs:
                        raise CocycleError(
                            "cocycle identity fails at (%d,%d,%d)" % (a, b, c)
                        )
        return True


def validate_multiplier(alpha: Multiplier) -> bool:
    alpha.validate()
    return True


def coboundary_multiplier(m: FiniteMonoid, kappa: int, f: list[int]) -> Multiplier:
    """alpha(a,b) = f(a)+f(b)-f(ab) (exponents mod kappa); f[identity] must be 0."""
    if f[m.identity] % kappa != 0:
        raise CocycleError("f(1) must be 1")
    vals = {}
    for a in range(m.size):
        for b in range(m.size):
            vals[(a, b)] = (f[a] + f[b] - f[m.table[a][b]]) % kappa
    return Multiplier(m, kappa, vals)


def cyclic_extension_multiplier(n: int, kappa: int) -> Multiplier:
    """On C_n: alpha(g^i, g^j) = zeta_kappa^[i+j>=n], the standard extension
    cocycle (kappa = 2, n = 2 yields C4)."""
    m = mo.cyclic_group(n)
    vals = {}
    for i in range(n):
        for j in range(n):
            vals[(i, j)] = 1 % kappa if i + j >= n else 0
    return Multiplier(m, kappa, vals)


def multiply_multipliers(a: Multiplier, b: Multiplier) -> Multiplier:
    assert a.monoid is b.monoid
    kappa = lcm(a.kappa, b.kappa)
    vals = {}
    for key in a.values:
        va, vb = a.values[key], b.values[key]
        if va is None or vb is None:
            vals[key] = None
        else:
            vals[key] = (va * kappa // a.kappa + vb * kappa // b.kappa) % kappa
    return Multiplier(a.monoid, kappa, vals, "F" if "F" in (a.target, b.target) and (a.target == "F" or b.target == "F") else "Fx")


@dataclass
class Extension:
    monoid: FiniteMonoid        # M^alpha
    projection: list[int]       # element -> base element
    scalar_members: list[int]   # iota(F) or iota(F^x) inside M^alpha
    pairs: list                 # element -> (base, exponent-or-None)


def monoid_extension(m: FiniteMonoid, alpha: Multiplier) -> Extension:
    """M^alpha on pairs (m, t) with [m1,t1][m2,t2] = [m1m2, t1 t2 a(m1,m2)]."""
    alpha.validate()
    kappa = alpha.kappa
    ts: list = list(range(kappa))
    if alpha.target == "F":
        ts = ts + [None]
    pairs = [(x, t) for x in range(m.size) for t in ts]
    index = {p: i for i, p in enumerate(pairs)}
    table = []
    for x1, t1 in pairs:
        row = []
        for x2, t2 in pairs:
            a = alpha.values[(x1, x2)]
            if t1 is None or t2 is None or a is None:
                tt = None
            else:
                tt = (t1 + t2 + a) % kappa
            row.append(index[(m.table[x1][x2], tt)])
        table.append(row)
    ident = index[(m.identity, 0)]
    labels = [
        "(%s,%s)" % (m.label(x), "0" if t is None else "z^%d" % t) for x, t in pairs
    ]
    ext = FiniteMonoid(table, ident, labels, validate=ext_size_small(len(pairs)))
    scalars = [index[(m.identity, t)] for t in ts]
    proj = [x for x, _ in pairs]
    return Extension(ext, proj, scalars, pairs)


def ext_size_small(n: int) -> bool:
    return n <= 120


def extension_checks(m: FiniteMonoid, alpha: Multiplier, ext: Extension) -> dict:
    """Centricity of iota(F) and the quotient isomorphisms of Lemma FICE."""
    out = {}
    fx_members = [
        i for i in ext.scalar_members if ext.pairs[i][1] is not None
    ]
    nref = SubmonoidRef(ext.monoid, tuple(fx_members))
    out["centric_Fx"] = mo.is_centric(ext.monoid, nref)
    q, proj = mo.quotient_centric(ext.monoid, nref)
    # expected: class of (x, t != 0) -> x; the quotient must be isomorphic to M
    # by the map induced from the projection
    clazz = {}
    ok = q.size == m.size or (alpha.target == "F" and q.size == 2 * m.size)
    # identify the class of (x, 0-exponent) with x and check multiplicativity
    mapping = {}
    for i, (x, t) in enumerate(ext.pairs):
        if t == 0:
            mapping[x] = proj[i]
    iso_ok = len(set(mapping.values())) == len(mapping)
    if iso_ok:
        for a in range(m.size):
            for b in range(m.size):
                if q.table[mapping[a]][mapping[b]] != mapping[m.table[a][b]]:
                    iso_ok = False
                    break
            if not iso_ok:
                break
    out["quotient_by_Fx_iso_M"] = iso_ok and (
        q.size == m.size if alpha.target == "Fx" else True
    )
    if alpha.target == "F":
        nref_f = SubmonoidRef(ext.monoid, tuple(ext.scalar_members))
        out["centric_F"] = mo.is_centric(ext.monoid, nref_f)
        qf, _ = mo.quotient_centric(ext.monoid, nref_f)
        nonvanishing = all(v is not None for v in alpha.values.values())
        if nonvanishing:
            # M x {1,0} multiplicative monoid
            z2 = FiniteMonoid([[0, 1], [1, 1]], 0, ["1", "0"], validate=False)
            model = mo.product_table(m, z2)
            out["quotient_by_F_iso_MxZ2"] = (
                groupzoo.find_isomorphism(model, qf) is not None
                if model.size == qf.size
                else False
            )
    return out


def similar_extension_iso(m: FiniteMonoid, alpha: Multiplier, f: list[int]):
    """The isomorphism M^alpha -> M^alpha' for alpha' = alpha twisted by the
    coboundary of f, commuting with p and iota."""
    twist = coboundary_multiplier(m, alpha.kappa, f)
    alpha2 = multiply_multipliers(alpha, twist)
    ext1 = monoid_extension(m, alpha)
    ext2 = monoid_extension(m, alpha2)
    iso = []
    idx2 = {p: i for i, p in enumerate(ext2.pairs)}
    for x, t in ext1.pairs:
        tt = None if t is None else (t + f[x]) % alpha.kappa
        iso.append(idx2[(x, tt)])
    # verify multiplicativity
    for i in range(ext1.monoid.size):
        for j in range(ext1.monoid.size):
            if iso[ext1.monoid.table[i][j]] != ext2.monoid.table[iso[i]][iso[j]]:
                raise CocycleError("similarity isomorphism failed")
    return alpha2, ext1, ext2, iso


# -- Theorem: semisimplicity through centric quotients -----------------------------


@dataclass
class Theta4Record:
    ss_m: bool
    ss_n: bool
    ss_q: bool

    @property
    def verdict(self) -> bool:
        return self.ss_m == (self.ss_n and self.ss_q)


def theorem_theta4_check(m: FiniteMonoid, n: SubmonoidRef) -> Theta4Record:
    if not mo.is_centric(m, n):
        raise MonoidError("submonoid is not centric")
    nsub, _ = n.as_monoid()
    q, _ = mo.quotient_centric(m, n)
    rec = Theta4Record(
        rp.is_semisimple(m).ok, rp.is_semisimple(nsub).ok, rp.is_semisimple(q).ok
    )
    if not rec.verdict:
        raise RepresentationError(
            "semisimplicity biconditional failed: %s" % (rec,)
        )
    return rec


# -- global induced functors --------------------------------------------------------


def _sub_generators_ambient(n: SubmonoidRef) -> list[int]:
    nsub, mem = n.as_monoid()
    return [mem[g] for g in nsub.generators()]


def ind_tensor(m: FiniteMonoid, n: SubmonoidRef, sigma: Representation,
               members=None):
    """ind_N^M W = C[M] (x)_{C[N]} W as an explicit quotient representation.

    Returns a Representation of M carrying an `embed` attribute is not used;
    use ind_tensor_full for the coordinate data."""
    rep, _embed = ind_tensor_full(m, n, sigma)
    return rep


def ind_tensor_full(m: FiniteMonoid, n: SubmonoidRef, sigma: Representation):
    nsub, mem = n.as_monoid()
    if sigma.monoid != nsub:
        raise RepresentationError("sigma must be a representation of N")
    d = sigma.dim
    size = m.size * d
    amb_gens = [mem[g] for g in nsub.generators()]
    abs_of = {x: i for i, x in enumerate(mem)}
    rows = []
    for x in range(m.size):
        for ga in amb_gens:
            smat = sigma.mats[abs_of[ga]]
            xa = m.table[x][ga]
            for w in range(d):
                row = [CYC_ZERO] * size
                row[xa * d + w] = row[xa * d + w] + CYC_ONE
                for w2 in range(d):
                    if smat.data[w2][w]:
                        row[x * d + w2] = row[x * d + w2] - smat.data[w2][w]
                rows.append(row)
    rel = ExactMatrix(rows) if rows else ExactMatrix.zeros(1, size)
    red, pivots = rel.rref()
    free = [c for c in range(size) if c not in pivots]
    k = len(free)

    def embed(x: int, w: int) -> list:
        full = [CYC_ZERO] * size
        full[x * d + w] = CYC_ONE
        return _reduce_coords(red, pivots, free, full)

    mats = []
    for y in range(m.size):
        cols = []
        for c in free:
            x, w = divmod(c, d)
            cols.append(embed(m.table[y][x], w))
        mats.append(ExactMatrix([[cols[j][i] for j in range(k)] for i in range(k)]))
    rep = Representation(m, mats, "left", validate=True, name="ind(%s)" % (sigma.name or "sigma"))
    return rep, embed


def _reduce_coords(red, pivots, free, vec):
    v = list(vec)
    for r, c in enumerate(pivots):
        if v[c]:
            f = v[c]
            row = red.data[r]
            v = [a - f * b for a, b in zip(v, row)]
    return [v[c] for c in free]


def ind_function(m: FiniteMonoid, n: SubmonoidRef, sigma: Representation) -> Representation:
    """Ind_N^M W = {f: M -> W | f(nm) = sigma(n) f(m)}, action (y f)(x) = f(xy)."""
    nsub, mem = n.as_monoid()
    d = sigma.dim
    size = m.size * d
    abs_of = {x: i for i, x in enumerate(mem)}
    amb_gens = [mem[g] for g in nsub.generators()]
    rows = []
    for ga in amb_gens:
        smat = sigma.mats[abs_of[ga]]
        for x in range(m.size):
            nx = m.table[ga][x]
            for w in range(d):
                row = [CYC_ZERO] * size
                row[nx * d + w] = row[nx * d + w] + CYC_ONE
                for w2 in range(d):
                    if smat.data[w][w2]:
                        row[x * d + w2] = row[x * d + w2] - smat.data[w][w2]
                rows.append(row)
    basis = ExactMatrix(rows).nullspace() if rows else [
        ExactMatrix.column([CYC_ONE if i == j else CYC_ZERO for i in range(size)])
        for j in range(size)
    ]
    k = len(basis)
    bmat = ExactMatrix([[basis[j].vec()[i] for j in range(k)] for i in range(size)])
    mats = []
    for y in range(m.size):
        # (y f)(x)_w = f(x y)_w
        img_cols = []
        for j in range(k):
            f = basis[j].vec()
            g = [CYC_ZERO] * size
            for x in range(m.size):
                xy = m.table[x][y]
                for w in range(d):
                    g[x * d + w] = f[xy * d + w]
            img_cols.append(g)
        img = ExactMatrix([[img_cols[j][i] for j in range(k)] for i in range(size)])
        coords = bmat.solve(img)
        if coords is None:
            raise RepresentationError("function-space induction is not stable")
        mats.append(coords)
    return Representation(m, mats, "left", validate=True, name="Ind(%s)" % (sigma.name or "sigma"))


@dataclass
class InducedFunctorReport:
    dim_ind: int
    dim_Ind: int
    isomorphic: bool
    frobenius_ind: bool
    frobenius_Ind: bool


def induced_functor_check(m: FiniteMonoid, n: SubmonoidRef, sigma: Representation,
                          cat_m: list[Representation] | None = None) -> InducedFunctorReport:
    if cat_m is None:
        cat_m = rp.cmp_irreducibles(m, groupzoo.auto_provider)
    ind = ind_tensor(m, n, sigma)
    IND = ind_function(m, n, sigma)
    iso = ind.dim == IND.dim and rp.multiplicity_vector(ind, cat_m) == rp.multiplicity_vector(IND, cat_m)
    frob_ind = True
    frob_Ind = True
    for v in cat_m:
        res = v.restrict(n)
        lhs = len(hom_space(ind, v))
        rhs = len(hom_space(sigma, res))
        if lhs != rhs:
            frob_ind = False
        lhs2 = len(hom_space(v, IND))
        rhs2 = len(hom_space(res, sigma))
        if lhs2 != rhs2:
            frob_Ind = False
    return InducedFunctorReport(ind.dim, IND.dim, iso, frob_ind, frob_Ind)


# -- stability submonoids -------------------------------------------------------------


@dataclass
class StabilityMonoids:
    monoid: FiniteMonoid
    n: SubmonoidRef
    sigma_index: int
    cat_n: list[Representation]
    e: int                       # ambient apex idempotent of sigma
    e_w: list                    # central idempotent coefficients over N members
    i_l: list[int]
    i_r: list[int]
    i_lr: list[int]
    j0: list[int]
    j1: list[int]
    i0: list[int]
    i1: list[int]
    i_m: list[int]
    j_m: list[int]


def _convolve(m: FiniteMonoid, a: dict, b: dict) -> dict:
    out: dict[int, CycNum] = {}
    t = m.table
    for x, cx in a.items():
        for y, cy in b.items():
            z = t[x][y]
            out[z] = out.get(z, CYC_ZERO) + cx * cy
    return {k: v for k, v in out.items() if v}


def _green_class_centric(m: FiniteMonoid, n: SubmonoidRef, x: int) -> frozenset:
    """G^N_x for centric N: the generators of Nx."""
    nm = n.members
    lset = mo.left_set(m, nm, x)
    return frozenset(y for y in lset if mo.left_set(m, nm, y) == lset)


def stability_submonoids(m: FiniteMonoid, n: SubmonoidRef, sigma_index: int,
                         cat_n: list[Representation] | None = None) -> StabilityMonoids:
    if not mo.is_centric(m, n):
        raise MonoidError("Axiom III fails: N is not centric")
    if not rp.is_semisimple(m).ok:
        raise RepresentationError("Axiom IV fails: M is not semisimple")
    nsub, mem = n.as_monoid()
    if not rp.is_semisimple(nsub).ok:
        raise RepresentationError("C[N] is not semisimple")
    if cat_n is None:
        cat_n = rp.cmp_irreducibles(nsub, groupzoo.auto_provider)
    sigma = cat_n[sigma_index]
    e_abs = sigma.apex.idempotent if sigma.apex else nsub.identity
    e = mem[e_abs]
    ew_abs = rp.central_idempotent(nsub, cat_n, sigma_index)
    ew = {mem[i]: c for i, c in enumerate(ew_abs) if c}

    # sigma-isotypic component of the left regular representation: e^W * C[M]
    t = m.table
    tracker_l = SpanTracker(m.size)
    for x in range(m.size):
        col = [CYC_ZERO] * m.size
        for y, c in ew.items():
            col[t[y][x]] = col[t[y][x]] + c
        tracker_l.add(col)
    basis_l = [list(row) for row in tracker_l.rows.values()]
    tracker_r = SpanTracker(m.size)
    for x in range(m.size):
        col = [CYC_ZERO] * m.size
        for y, c in ew.items():
            col[t[x][y]] = col[t[x][y]] + c
        tracker_r.add(col)

    def stable_left(x: int) -> bool:
        for row in list(tracker_l.rows.values()):
            img = [CYC_ZERO] * m.size
            for y, c in enumerate(row):
                if c:
                    img[t[x][y]] = img[t[x][y]] + c
            if not tracker_l.contains(img):
                return False
        return True

    def stable_right(x: int) -> bool:
        for row in list(tracker_r.rows.values()):
            img = [CYC_ZERO] * m.size
            for y, c in enumerate(row):
                if c:
                    img[t[y][x]] = img[t[y][x]] + c
            if not tracker_r.contains(img):
                return False
        return True

    i_l = [x for x in range(m.size) if stable_left(x)]
    i_r = [x for x in range(m.size) if stable_right(x)]
    i_lr = sorted(set(i_l) & set(i_r))
    ilr_set = set(i_lr)

    for eidm in m.idempotents():
        if eidm not in ilr_set:
            raise RepresentationError("E(M) is not inside I^lr; bug")

    # J^0 / J^1 classification inside I^lr via C[G_m^N] (x)_N W
    d = sigma.dim
    abs_of = {x: i for i, x in enumerate(mem)}
    j1, j0 = [], []
    class_cache: dict[frozenset, bool] = {}
    for x in i_lr:
        cls = _green_class_centric(m, n, x)
        if cls in class_cache:
            in_j1 = class_cache[cls]
        else:
            in_j1 = _tensor_nonzero(m, n, nsub, mem, abs_of, sigma, sorted(cls))
            class_cache[cls] = in_j1
        (j1 if in_j1 else j0).append(x)

    # I^1 via p1(m) = e^W m e^W != 0, cross-checked with the product definition
    i1, i0 = [], []
    for x in i_lr:
        p1 = _convolve(m, _convolve(m, ew, {x: CYC_ONE}), ew)
        (i1 if p1 else i0).append(x)
    j1_set = set(j1)
    for x in i_lr:
        exists = any(t[x][mi] in j1_set for mi in j1)
        if exists != (x in set(i1)):
            raise RepresentationError(
                "I^1 definitions disagree at %d (p1 vs J^1 products)" % x
            )
    j0_set = set(j0)
    for x in i0:
        for mi in j1:
            if t[x][mi] not in j0_set:
                raise RepresentationError("I^0 * J^1 left J^0")

    # identity and monoid structure of J^1
    for x in j1:
        if t[e][x] != x or t[x][e] != x:
            raise RepresentationError("e is not an identity of J^1")
        for y in j1:
            if t[x][y] not in j1_set:
                raise RepresentationError("J^1 is not closed")
    i1_set = set(i1)
    for x in i1:
        for y in i1:
            if t[x][y] not in i1_set:
                raise RepresentationError("I^1 is not a monoid")

    i_m = sorted({t[x][a] for x in i1 for a in n.members})
    i_m_left = sorted({t[a][x] for x in i1 for a in n.members})
    if i_m != i_m_left:
        raise RepresentationError("I^1 N != N I^1")
    j_m = sorted({t[x][a] for x in j1 for a in n.members})
    if not set(j_m) <= set(i_m) <= ilr_set:
        raise RepresentationError("containments I^lr >= I_M >= J_M fail")

    return StabilityMonoids(
        m, n, sigma_index, cat_n, e, ew_abs, i_l, i_r, i_lr,
        j0, j1, i0, i1, i_m, j_m,
    )


def _tensor_nonzero(m, n, nsub, mem, abs_of, sigma, cls) -> bool:
    """dim(C[G^N_x] (x)_N W) > 0, via the relation-rank computation."""
    d = sigma.dim
    k = len(cls)
    pos = {x: i for i, x in enumerate(cls)}
    size = k * d
    rows = []
    cls_set = set(cls)
    amb_gens = [mem[g] for g in nsub.generators()]
    t = m.table
    for y in cls:
        for ga in amb_gens:
            target = t[y][ga]
            smat = sigma.mats[abs_of[ga]]
            for w in range(d):
                row = [CYC_ZERO] * size
                if target in cls_set:
                    row[pos[target] * d + w] = row[pos[target] * d + w] + CYC_ONE
                for w2 in range(d):
                    if smat.data[w2][w]:
                        row[pos[y] * d + w2] = row[pos[y] * d + w2] - smat.data[w2][w]
                rows.append(row)
    rank = ExactMatrix(rows).rank() if rows else 0
    return size - rank > 0


# -- intertwiner systems and the cocycle --------------------------------------------


@dataclass
class IntertwinerSystem:
    stab: StabilityMonoids
    reps: list[int]              # I^1/N class representatives (J^1 part first)
    alpha_count: int             # number of J^1/N classes
    kappa0: int
    kappa1: int
    e_maps: dict                 # rep -> ExactMatrix (normalized little e on W)
    big_maps: dict               # rep -> ExactMatrix on ind_N^{I_M} W
    cocycle: Multiplier          # on the abstract I_M monoid
    pi_rep: Representation       # ind_N^{I_M(sigma)} sigma over the abstract I_M
    imono: FiniteMonoid
    imem: list[int]
    s_maps: dict = field(default_factory=dict)   # m_i e -> W-subspace embedding
    s_e: ExactMatrix | None = None
    rho1: list[ExactMatrix] = field(default_factory=list)
    rho2: list[ExactMatrix] = field(default_factory=list)


def count_automorphisms(g: FiniteMonoid) -> int:
    gens = g.generators()
    if not gens:
        return 1
    orders = [g.element_order(x) for x in gens]
    cands = [[y for y in range(g.size) if g.element_order(y) == o] for o in orders]
    count = 0

    def extend(images):
        full = {g.identity: g.identity}
        frontier = [g.identity]
        while frontier:
            new = []
            for x in frontier:
                for gi, img in zip(gens, images):
                    y = g.table[x][gi]
                    ty = g.table[full[x]][img]
                    if y in full:
                        if full[y] != ty:
                            return False
                    else:
                        full[y] = ty
                        new.append(y)
            frontier = new
        return len(full) == g.size and len(set(full.values())) == g.size

    from itertools import product as iproduct

    for images in iproduct(*cands):
        if extend(list(images)):
            count += 1
    return count


def _scalar_of(matrix: ExactMatrix) -> CycNum:
    d = matrix.rows
    c = matrix.data[0][0]
    for i in range(d):
        for j in range(d):
            want = c if i == j else CYC_ZERO
            if matrix.data[i][j] != want:
                raise NormalizationError("matrix power is not scalar")
    return c


def _int_nth_root(x: int, k: int):
    if x < 0:
        return None
    r = round(x ** (1.0 / k)) if x else 0
    for c in range(max(0, r - 2), r + 3):
        if c ** k == x:
            return c
    return None


def _exact_kappa_root(c: CycNum, k: int) -> CycNum:
    """lambda with lambda^k = c^(-1), found exactly inside a cyclotomic field
    when c is a root of unity or (+-) an exact rational k-th power."""
    if c == CYC_ONE:
        return CYC_ONE
    order = c.multiplicative_order(bound=1000)
    if order is not None:
        for s in range(order):
            if CycNum.root_of_unity(order, s) == c:
                big = order * k
                return CycNum.root_of_unity(big, (-s) % big)
        raise NormalizationError("root-of-unity exponent not found")
    if c.is_rational():
        q = c.rational_value()
        num, den = abs(q).numerator, abs(q).denominator
        dn = _int_nth_root(num, k)
        dd = _int_nth_root(den, k)
        if dn and dd:
            base = CycNum.from_rational(Fraction(dd, dn))
            if q > 0:
                return base
            # zeta_{2k} is a k-th root of -1
            return base * CycNum.root_of_unity(2 * k, 1)
        raise NormalizationError("rational scalar has no exact k-th root")
    raise NormalizationError(
        "cannot normalize: scalar is neither a root of unity nor a rational power"
    )


def intertwiner_cocycle(stab: StabilityMonoids, sigma: Representation | None = None) -> IntertwinerSystem:
    m = stab.monoid
    n = stab.n
    nsub, mem = n.as_monoid()
    if sigma is None:
        sigma = stab.cat_n[stab.sigma_index]
    d = sigma.dim
    t = m.table
    e = stab.e

    # I^1/N classes: J^1 classes first (e's class leading), then the rest
    def class_of(x):
        return _green_class_centric(m, n, x)

    j1_classes = []
    seen = set()
    e_cls = class_of(e)
    j1_classes.append((e, e_cls))
    seen.add(e_cls)
    for x in stab.j1:
        cls = class_of(x)
        if cls not in seen:
            seen.add(cls)
            j1_classes.append((min(cls), cls))
    extra_classes = []
    for x in stab.i1:
        cls = class_of(x)
        if cls not in seen:
            seen.add(cls)
            extra_classes.append((min(cls & set(stab.i1)), cls))
    reps = [r for r, _ in j1_classes] + [r for r, _ in extra_classes]
    alpha_count = len(j1_classes)

    # the induced module over the abstract I_M monoid
    imem = stab.i_m
    iref = SubmonoidRef(m, tuple(imem))
    imono, imem_sorted = iref.as_monoid()
    ipos = {x: i for i, x in enumerate(imem_sorted)}
    n_positions = tuple(ipos[x] for x in n.members)
    nref_in_i = SubmonoidRef(imono, n_positions)
    nsub_in_i, nmem_in_i = nref_in_i.as_monoid()
    # transport sigma: members of N inside I_M keep the ambient sorted order
    sigma_i = Representation(nsub_in_i, sigma.mats, "left", validate=False,
                             name=sigma.name)
    pi_rep, embed = ind_tensor_full(imono, nref_in_i, sigma_i)
    kdim = pi_rep.dim

    def block_vec(x_amb: int, w: int):
        return embed(ipos[x_amb], w)

    # the J^1-block basis
    cols = []
    for r in reps[:alpha_count]:
        for w in range(d):
            cols.append(block_vec(r, w))
    if len(cols) != kdim:
        raise RepresentationError("ind dimension != alpha * dim W")
    bmat = ExactMatrix([[cols[j][i] for j in range(kdim)] for i in range(kdim)])
    if bmat.rank() != kdim:
        raise RepresentationError("J^1 block vectors are not a basis")

    def subspace_map(x_amb: int) -> ExactMatrix:
        """W -> P, w |-> embed(x_amb (x) w)."""
        cs = [block_vec(x_amb, w) for w in range(d)]
        return ExactMatrix([[cs[j][i] for j in range(d)] for i in range(kdim)])

    s_e = subspace_map(e)
    n_gens_abs = nsub_in_i.generators()

    def n_action_through(smap: ExactMatrix) -> dict:
        """n -> matrix on W pulled back through the subspace map."""
        out = {}
        for g in n_gens_abs:
            gm = pi_rep.mats[nmem_in_i[g]]
            sol = smap.solve(gm * smap)
            if sol is None:
                raise RepresentationError("subspace is not N-stable")
            out[g] = sol
        return out

    act_e = n_action_through(s_e)
    kappa0 = d
    kappa1 = 1
    e_maps = {}
    for r in reps:
        r_e = t[r][e]
        grp_r, _ = rp.local_group(m, n, r_e)
        kappa1 = lcm(kappa1, count_automorphisms(grp_r))
    for r in reps:
        r_e = t[r][e]
        s_i = subspace_map(r_e)
        if ExactMatrix([[*row] for row in s_i.data]).rank() != d:
            raise RepresentationError("m_i e (x) W is not d-dimensional")
        act_i = n_action_through(s_i)
        # solve for little-e: act_i[g] * e = e * act_e[g]
        rows = []
        for g in n_gens_abs:
            a, b = act_e[g], act_i[g]
            for i in range(d):
                for j in range(d):
                    row = [CYC_ZERO] * (d * d)
                    for kk in range(d):
                        row[kk * d + j] = row[kk * d + j] + b.data[i][kk]
                    for kk in range(d):
                        row[i * d + kk] = row[i * d + kk] - a.data[kk][j]
                    rows.append(row)
        basis = ExactMatrix(rows).nullspace()
        if len(basis) != 1:
            raise RepresentationError(
                "intertwiner space between e(x)W and m_ie(x)W is %d-dimensional"
                % len(basis)
            )
        flat = basis[0].vec()
        little = ExactMatrix([[flat[i * d + j] for j in range(d)] for i in range(d)])
        if d == 1:
            little = ExactMatrix.identity(1)
        else:
            power = ExactMatrix.identity(d)
            for _ in range(kappa1):
                power = power * little
            c = _scalar_of(power)
            lam = _exact_kappa_root(c, kappa1)
            little = little.scale(lam)
            power = ExactMatrix.identity(d)
            for _ in range(kappa1):
                power = power * little
            if _scalar_of(power) != CYC_ONE:
                raise NormalizationError("normalization of little-e failed")
        e_maps[r] = little

    # big intertwiners on P, as matrices in the P-quotient coordinates
    bmat_inv = bmat.inverse()
    big_maps = {}
    for r in reps:
        r_e = t[r][e]
        s_i = subspace_map(r_e)
        cols = []
        for q in reps[:alpha_count]:
            pi_q = pi_rep.mats[ipos[q]]
            for w in range(d):
                target = pi_q * s_i * ExactMatrix.column(
                    [e_maps[r].data[i][w] for i in range(d)]
                )
                cols.append([target.data[i][0] for i in range(kdim)])
        big_on_basis = ExactMatrix(
            [[cols[j][i] for j in range(kdim)] for i in range(kdim)]
        )
        big_maps[r] = big_on_basis * bmat_inv

    kappa = kappa0 * kappa1
    rep_of_class = {}
    for r in reps:
        rep_of_class[class_of(r)] = r

    def class_rep(x):
        return rep_of_class[class_of(x)]

    # extract alpha on representative pairs and lift to I_M
    i1_set = set(stab.i1)
    values = {}
    imono_size = imono.size
    pair_alpha = {}
    for ri in reps:
        for rj in reps:
            prod = t[ri][rj]
            rt = class_rep(prod)
            lhs = big_maps[ri] * big_maps[rj]
            rhs = big_maps[rt]
            scalar = _proportionality(lhs, rhs)
            exp = _root_exponent(scalar, kappa)
            pair_alpha[(ri, rj)] = exp
    for i_abs in range(imono_size):
        x = imem_sorted[i_abs]
        for j_abs in range(imono_size):
            y = imem_sorted[j_abs]
            if x == m.identity or y == m.identity:
                values[(i_abs, j_abs)] = 0
            elif x in i1_set and y in i1_set:
                values[(i_abs, j_abs)] = pair_alpha[(class_rep(x), class_rep(y))]
            else:
                values[(i_abs, j_abs)] = None
    cocycle = Multiplier(imono, kappa, values, "F")
    cocycle.validate()

    system = IntertwinerSystem(
        stab, reps, alpha_count, kappa0, kappa1, e_maps, big_maps, cocycle,
        pi_rep, imono, imem_sorted,
        s_maps={r: subspace_map(t[r][e]) for r in reps}, s_e=s_e,
    )
    _build_factor_reps(system, sigma)
    return system


def _proportionality(lhs: ExactMatrix, rhs: ExactMatrix) -> CycNum:
    scalar = None
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            a, b = lhs.data[i][j], rhs.data[i][j]
            if not a and not b:
                continue
            if not b:
                raise RepresentationError("intertwiner products are not proportional")
            s = a / b
            if scalar is None:
                scalar = s
            elif scalar != s:
                raise RepresentationError("intertwiner products are not proportional")
    if scalar is None:
        raise RepresentationError("zero intertwiner product")
    return scalar


def _root_exponent(scalar: CycNum, kappa: int) -> int:
    for s in range(kappa):
        if CycNum.root_of_unity(kappa, s) == scalar:
            return s
    raise RepresentationError("cocycle value is not a kappa-th root of unity")


def _build_factor_reps(system: IntertwinerSystem, sigma: Representation):
    """rho1 on W (multiplier alpha^-1) and rho2 on End_{I_M}(P) (multiplier
    alpha), with pi_[sigma] linearly isomorphic to rho1 (x) rho2."""
    m = system.stab.monoid
    t = m.table
    imem = system.imem
    ipos = {x: i for i, x in enumerate(imem)}
    pi = system.pi_rep
    d = sigma.dim
    i1_set = set(system.stab.i1)
    s_e = system.s_e

    def class_rep(x):
        cls = _green_class_centric(m, system.stab.n, x)
        for r in system.reps:
            if r in cls:
                return r
        return None

    rho1 = []
    rho2 = []
    homs = hom_space(pi, pi)
    k = len(homs)
    flat = ExactMatrix([[homs[j].vec()[i] for j in range(k)] for i in range(len(homs[0].vec()))])
    for x in imem:
        if x not in i1_set:
            rho1.append(ExactMatrix.zeros(d, d))
            rho2.append(ExactMatrix.zeros(k, k))
            continue
        r = class_rep(x)
        big = system.big_maps[r]
        # rho1(x) = little-e_r^{-1} o (the map W -> W through pi(x): e(x)W -> m_r e(x)W)
        s_i = system.s_maps[r]
        img = pi.mats[ipos[x]] * s_e
        coords = s_i.solve(img)
        if coords is None:
            raise RepresentationError("pi(x) e(x)W is not inside m_i e(x)W")
        rho1.append(system.e_maps[r].inverse() * coords)
        # rho2(x): phi -> E_r o phi on End_{I_M}(P)
        cols = []
        for h in homs:
            target = (big * h).vec()
            c = flat.solve(ExactMatrix.column(target))
            if c is None:
                raise RepresentationError("rho2 left the commutant")
            cols.append([c.data[i][0] for i in range(k)])
        rho2.append(ExactMatrix([[cols[j][i] for j in range(k)] for i in range(k)]))
    system.rho1 = rho1
    system.rho2 = rho2


def verify_factorization(system: IntertwinerSystem, rng=None) -> bool:
    """pi_[sigma] is linearly isomorphic to rho1 (x) rho2: checked by finding
    an invertible intertwiner for the honest representation rho1 (x) rho2."""
    pi = system.pi_rep
    kdim = pi.dim
    tensor_mats = [a.kron(b) for a, b in zip(system.rho1, system.rho2)]
    if tensor_mats[0].rows != kdim:
        return False
    tensor_rep = Representation(system.imono, tensor_mats, "left", validate=True)
    homs = hom_space(tensor_rep, pi)
    if not homs:
        return False
    import random

    rand = rng or random.Random(7)
    for _ in range(64):
        coeffs = [rand.randint(-3, 3) for _ in homs]
        cand = ExactMatrix.zeros(kdim, kdim)
        for c, h in zip(coeffs, homs):
            if c:
                cand = cand + h.scale(c)
        try:
            cand.inverse()
            return True
        except ZeroDivisionError:
            continue
    return False


def rho1_restricts_to_sigma(system: IntertwinerSystem, sigma: Representation) -> bool:
    """rho1|_N is isomorphic to sigma (it is an honest N-representation)."""
    nref = system.stab.n
    nsub, mem = nref.as_monoid()
    mats = [system.rho1[system.imem.index(x)] for x in mem]
    try:
        res = Representation(nsub, mats, "left", validate=True)
    except RepresentationError:
        return False
    homs = hom_space(res, sigma)
    if len(homs) != 1:
        return False
    try:
        homs[0].inverse()
        return True
    except ZeroDivisionError:
        return False


# -- normal subring test ---------------------------------------------------------------


@dataclass
class NormalSubringReport:
    ok: bool
    restriction_supports: list[frozenset]
    partition: list[list[int]]


def normal_subring_check(m: FiniteMonoid, n: SubmonoidRef,
                         cat_m=None, cat_n=None) -> NormalSubringReport:
    """Rieffel's criterion: restriction constituent sets of M-irreducibles
    either coincide or are disjoint."""
    nsub, mem = n.as_monoid()
    if cat_m is None:
        cat_m = rp.cmp_irreducibles(m, groupzoo.auto_provider)
    if cat_n is None:
        cat_n = rp.cmp_irreducibles(nsub, groupzoo.auto_provider)
    supports = []
    for v in cat_m:
        res = v.restrict(n)
        vec = rp.multiplicity_vector(res, cat_n)
        supports.append(frozenset(i for i, x in enumerate(vec) if x))
    ok = True
    for i in range(len(supports)):
        for j in range(i + 1, len(supports)):
            inter = supports[i] & supports[j]
            if inter and supports[i] != supports[j]:
                ok = False
    partition: dict[frozenset, list[int]] = {}
    for i, s in enumerate(supports):
        partition.setdefault(s, []).append(i)
    return NormalSubringReport(ok, supports, list(partition.values()))


# -- stability of a single irreducible V -------------------------------------------------


@dataclass
class StabilityOfV:
    members: list[int]
    w_tilde_dim: int
    w_tilde_irreducible: bool
    induction_isomorphic: bool


def stability_of_v(v: Representation, n: SubmonoidRef, sigma: Representation) -> StabilityOfV:
    """I^V_M(sigma) and the sigma-isotypic component W~^V of V|_N."""
    m = v.monoid
    res = v.restrict(n)
    comp = rp.isotypic_component(res, sigma)
    kdim = len(comp)
    if kdim == 0:
        raise RepresentationError("sigma does not occur in V|_N")
    tracker = SpanTracker(v.dim)
    for c in comp:
        tracker.add(c.vec())
    members = []
    for x in range(m.size):
        ok = True
        for c in comp:
            img = v.mats[x] * c
            if not tracker.contains(img.vec()):
                ok = False
                break
        if ok:
            members.append(x)
    mset = set(members)
    for eidm in m.idempotents():
        if eidm not in mset:
            raise RepresentationError("E(M) not inside I^V_M(sigma)")
    iref = SubmonoidRef(m, tuple(members))
    isub, imem = iref.as_monoid()
    # W~ as a representation of I^V
    basis, k = rp._complete_basis(comp, v.dim)
    binv = basis.inverse()
    mats = []
    for x in imem:
        tmat = binv * v.mats[x] * basis
        for i in range(k, v.dim):
            for j in range(k):
                if tmat.data[i][j]:
                    raise RepresentationError("W~ is not I^V-invariant")
        mats.append(ExactMatrix([[tmat.data[i][j] for j in range(k)] for i in range(k)]))
    wrep = Representation(isub, mats, "left", validate=True)
    irr = rp.is_irreducible(wrep)
    ind = ind_tensor(m, iref, wrep)
    iso = ind.dim == v.dim and len(hom_space(ind, v)) == 1 and rp.is_irreducible(ind)
    return StabilityOfV(members, k, irr, iso)
