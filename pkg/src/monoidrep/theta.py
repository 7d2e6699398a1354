"""Bimodules over products of finite monoids: Waldspurger isotypic analysis,
theta verdicts with Howe correspondence tables, the six-way equivalence
battery, and the Gamma-graph transfer between centric quotients."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclo import CYC_ONE, CYC_ZERO
from .linalg import ExactMatrix, SpanTracker
from . import monoid as mo
from .monoid import FiniteMonoid, MonoidError, SubmonoidRef
from . import rep as rp
from .rep import Representation, RepresentationError, hom_space
from . import groupzoo


def product_monoid(m1: FiniteMonoid, m2: FiniteMonoid) -> FiniteMonoid:
    return mo.product_table(m1, m2)


def external_tensor(product: FiniteMonoid, m1: FiniteMonoid, m2: FiniteMonoid,
                    v1: Representation, v2: Representation) -> Representation:
    """v1 (x) v2 as a representation of m1 x m2 (pair index a*|M2|+b)."""
    mats = []
    for a in range(m1.size):
        for b in range(m2.size):
            mats.append(v1.mats[a].kron(v2.mats[b]))
    return Representation(product, mats, "left", validate=False,
                          name="%s(x)%s" % (v1.name or "?", v2.name or "?"))


@dataclass
class BimoduleRep:
    m1: FiniteMonoid
    m2: FiniteMonoid
    product: FiniteMonoid
    rep: Representation
    cat1: list[Representation] = field(default_factory=list)
    cat2: list[Representation] = field(default_factory=list)

    @staticmethod
    def build(m1: FiniteMonoid, m2: FiniteMonoid, rep_builder,
              cat1=None, cat2=None) -> "BimoduleRep":
        prod = product_monoid(m1, m2)
        rep = rep_builder(prod)
        if cat1 is None:
            cat1 = rp.cmp_irreducibles(m1, groupzoo.auto_provider)
        if cat2 is None:
            cat2 = rp.cmp_irreducibles(m2, groupzoo.auto_provider)
        return BimoduleRep(m1, m2, prod, rep, cat1, cat2)

    def factor_mat(self, which: int, x: int) -> ExactMatrix:
        """The action of (x,1) or (1,x)."""
        if which == 1:
            return self.rep.mats[x * self.m2.size + self.m2.identity]
        return self.rep.mats[self.m1.identity * self.m2.size + x]

    def factor_rep(self, which: int) -> Representation:
        m = self.m1 if which == 1 else self.m2
        return Representation(
            m, [self.factor_mat(which, x) for x in range(m.size)], "left",
            validate=False,
        )


def multiplicity_matrix(bi: BimoduleRep) -> list[list[int]]:
    """n[i][j] = m(Pi, pi1_i (x) pi2_j)."""
    out = []
    for v1 in bi.cat1:
        row = []
        for v2 in bi.cat2:
            ext = external_tensor(bi.product, bi.m1, bi.m2, v1, v2)
            row.append(len(hom_space(bi.rep, ext)))
        out.append(row)
    return out


def big_theta(bi: BimoduleRep, which: int, idx: int):
    """Theta_{pi_i}: (multiplicity vector over Irr(M_j), Theta as an explicit
    representation of M_j on Hom_{M_i}(pi_i, Pi))."""
    pi = bi.cat1[idx] if which == 1 else bi.cat2[idx]
    other = bi.m2 if which == 1 else bi.m1
    # intertwiners pi -> Pi over the M_i-action inside the product
    factor = bi.factor_rep(which)
    homs = hom_space(pi, factor)
    k = len(homs)
    if k == 0:
        return [], None
    # Waldspurger dimension identity on the greatest isotypic quotient
    _, quot, n = rp.isotypic_quotient(factor, pi)
    qdim = quot.dim if quot is not None else 0
    if qdim != pi.dim * len(hom_space(factor, pi)):
        raise RepresentationError("dim V_pi != dim pi * multiplicity")
    # residual action of M_j on the Hom space: T -> Pi(1, m_j) T
    mats = []
    flat = [h.vec() for h in homs]
    tracker = ExactMatrix([[flat[t][i] for t in range(k)] for i in range(len(flat[0]))])
    for x in range(other.size):
        act = bi.factor_mat(2 if which == 1 else 1, x)
        cols = []
        for h in homs:
            img = (act * h).vec()
            coord = tracker.solve(ExactMatrix.column(img))
            if coord is None:
                raise RepresentationError("Hom space is not M_j-stable; bug")
            cols.append([coord.data[t][0] for t in range(k)])
        mats.append(ExactMatrix([[cols[j][i] for j in range(k)] for i in range(k)]))
    theta = Representation(other, mats, "left", validate=True)
    cat = bi.cat2 if which == 1 else bi.cat1
    vec = [len(hom_space(theta, w)) for w in cat]
    return vec, theta


def _restrict_to_factor(bi: BimoduleRep, which: int) -> Representation:
    return bi.factor_rep(which)


@dataclass
class ThetaReport:
    verdict: bool | None
    multiplicities: list[list[int]]
    pairs: list[tuple[int, int]]
    thetas_left: dict
    thetas_right: dict
    undecided_reason: str = ""

    def to_json(self) -> dict:
        mult = [
            {"left": i, "right": j, "m": v}
            for i, row in enumerate(self.multiplicities)
            for j, v in enumerate(row)
            if v
        ]
        return {
            "verdict": self.verdict,
            "pairs": [{"left": i, "right": j} for i, j in self.pairs],
            "multiplicities": mult,
            "undecided_reason": self.undecided_reason,
        }


def is_theta(bi: BimoduleRep, require_semisimple: bool = True) -> ThetaReport:
    """The theta verdict for the bimodule.

    In the semisimple setting "unique irreducible quotient" is equivalent to
    "Theta irreducible", so the verdict is: the multiplicity matrix is a
    partial permutation matrix.  For non-semisimple ambient monoids the
    verdict is undecided (None).
    """
    if require_semisimple:
        if not rp.is_semisimple(bi.m1).ok or not rp.is_semisimple(bi.m2).ok:
            return ThetaReport(None, [], [], {}, {},
                               "ambient monoid algebra is not semisimple")
    mult = multiplicity_matrix(bi)
    ok = True
    pairs = []
    for i, row in enumerate(mult):
        nz = [j for j, v in enumerate(row) if v]
        if any(v > 1 for v in row) or len(nz) > 1:
            ok = False
        if len(nz) == 1 and row[nz[0]] == 1:
            pairs.append((i, nz[0]))
    for j in range(len(bi.cat2)):
        col = [mult[i][j] for i in range(len(bi.cat1))]
        if sum(1 for v in col if v) > 1:
            ok = False
    if not ok:
        pairs = []
    thetas_left = {}
    thetas_right = {}
    for i in range(len(bi.cat1)):
        vec, _ = big_theta(bi, 1, i)
        if vec:
            thetas_left[i] = vec
    for j in range(len(bi.cat2)):
        vec, _ = big_theta(bi, 2, j)
        if vec:
            thetas_right[j] = vec
    # cross-check: theta vectors must match the multiplicity matrix
    for i, vec in thetas_left.items():
        if vec != mult[i]:
            raise RepresentationError("Waldspurger vector mismatch on the left")
    for j, vec in thetas_right.items():
        if vec != [mult[i][j] for i in range(len(bi.cat1))]:
            raise RepresentationError("Waldspurger vector mismatch on the right")
    report = ThetaReport(ok, mult, pairs, thetas_left, thetas_right)
    if ok:
        lefts = [i for i, _ in pairs]
        rights = [j for _, j in pairs]
        support_l = set(thetas_left)
        support_r = set(thetas_right)
        if set(lefts) != support_l or set(rights) != support_r:
            raise RepresentationError("Howe pairing is not a bijection on supports")
    return report


# -- the six-way battery -------------------------------------------------------


@dataclass
class BatteryRecord:
    theta_verdict: bool
    b_equals_zac: bool
    a_equals_zbc: bool
    bimodule_shape: bool
    multiplicity_free: bool
    contraction_bound: bool

    def unanimous(self) -> bool:
        vals = [
            self.theta_verdict,
            self.b_equals_zac,
            self.a_equals_zbc,
            self.bimodule_shape,
            self.multiplicity_free,
            self.contraction_bound,
        ]
        return all(vals) or not any(vals)


def _algebra_span(mats) -> SpanTracker:
    tracker = SpanTracker(mats[0].rows * mats[0].cols)
    for m in mats:
        tracker.add(m.vec())
    return tracker


def _commutant_dim(mats, dim) -> int:
    rows = []
    for g in mats:
        for i in range(dim):
            for j in range(dim):
                row = [CYC_ZERO] * (dim * dim)
                for k in range(dim):
                    row[k * dim + j] = row[k * dim + j] + g.data[i][k]
                for k in range(dim):
                    row[i * dim + k] = row[i * dim + k] - g.data[k][j]
                rows.append(row)
    return len(ExactMatrix(rows).nullspace())


def _commutant_basis(mats, dim) -> list[ExactMatrix]:
    rows = []
    for g in mats:
        for i in range(dim):
            for j in range(dim):
                row = [CYC_ZERO] * (dim * dim)
                for k in range(dim):
                    row[k * dim + j] = row[k * dim + j] + g.data[i][k]
                for k in range(dim):
                    row[i * dim + k] = row[i * dim + k] - g.data[k][j]
                rows.append(row)
    out = []
    for v in ExactMatrix(rows).nullspace():
        flat = v.vec()
        out.append(ExactMatrix([[flat[i * dim + j] for j in range(dim)] for i in range(dim)]))
    return out


def proposition_theta_battery(bi: BimoduleRep) -> BatteryRecord:
    """Evaluates the equivalent conditions (1),(2),(3),(4-shape),(5),(6) and
    returns the record; they must be unanimous for semisimple monoids."""
    report = is_theta(bi)
    if report.verdict is None:
        raise RepresentationError("battery needs semisimple ambient monoids")
    dim = bi.rep.dim
    a_mats = [bi.factor_mat(1, x) for x in range(bi.m1.size)]
    b_mats = [bi.factor_mat(2, x) for x in range(bi.m2.size)]
    a_span = _algebra_span(a_mats)
    b_span = _algebra_span(b_mats)
    # (2) B = Z_A(C) and (3) A = Z_B(C): containment is automatic, compare dims
    b_eq = _commutant_dim(a_mats, dim) == b_span.dim
    a_eq = _commutant_dim(b_mats, dim) == a_span.dim
    # (5): End_{M_alpha}(rho) multiplicity-free as an M_beta-bimodule,
    # tested via commutativity of its endomorphism algebra; (4) is the same
    # statement phrased through constituent shapes, evaluated jointly.
    mult_free = True
    shape_ok = True
    for alpha in (1, 2):
        other = 2 if alpha == 1 else 1
        e_basis = _commutant_basis(
            a_mats if alpha == 1 else b_mats, dim
        )
        k = len(e_basis)
        if k == 0:
            continue
        flat = ExactMatrix(
            [[e_basis[t].vec()[i] for t in range(k)] for i in range(dim * dim)]
        )
        m_other = bi.m1 if other == 1 else bi.m2
        gens = m_other.generators()
        action_mats = []
        for g in gens + [m_other.identity]:
            gm = bi.factor_mat(other, g)
            left = _action_on_basis(e_basis, flat, lambda t, gm=gm: gm * t)
            right = _action_on_basis(e_basis, flat, lambda t, gm=gm: t * gm)
            action_mats.append(left)
            action_mats.append(right)
        comm = _commutant_basis(action_mats, k)
        for x in comm:
            for y in comm:
                if (x * y) != (y * x):
                    mult_free = False
        # constituent shape: dim of the commutant equals the number of
        # distinct constituents iff multiplicity-free with matching pairs
        if mult_free and report.verdict:
            if len(comm) != len(report.pairs):
                shape_ok = False
    # (6) contraction bounds
    contraction_ok = _contraction_bound(bi, 1) and _contraction_bound(bi, 2)
    rec = BatteryRecord(report.verdict, b_eq, a_eq,
                        shape_ok if report.verdict else report.verdict,
                        mult_free, contraction_ok)
    return rec


def _action_on_basis(basis, flat, fn) -> ExactMatrix:
    k = len(basis)
    cols = []
    for t in basis:
        img = fn(t).vec()
        coord = flat.solve(ExactMatrix.column(img))
        if coord is None:
            raise RepresentationError("bimodule action left the commutant")
        cols.append([coord.data[i][0] for i in range(k)])
    return ExactMatrix([[cols[j][i] for j in range(k)] for i in range(k)])


def _contraction_bound(bi: BimoduleRep, side: int) -> bool:
    """m(rho (x)_{M_beta} D(rho), sigma (x) D(sigma)) <= 1 for every sigma.

    The contracted tensor is built honestly as W (x) W* modulo the relations
    (b.w)(x)phi = w(x)(phi o b); the multiplicity of sigma (x) D(sigma) is the
    rank of the joint (left, right) central-idempotent projector for sigma on
    the quotient, divided by (dim sigma)^2."""
    w = bi.rep.dim
    beta = 2 if side == 1 else 1
    alpha = 1 if side == 1 else 2
    m_beta = bi.m2 if side == 1 else bi.m1
    m_alpha = bi.m1 if side == 1 else bi.m2
    cat_alpha = bi.cat1 if side == 1 else bi.cat2
    relations = []
    gens = m_beta.generators()
    dim2 = w * w
    for g in gens:
        gm = bi.factor_mat(beta, g)
        for i in range(w):
            for j in range(w):
                row = [CYC_ZERO] * dim2
                # (gm e_i) (x) e_j*  -  e_i (x) (e_j* o gm)
                for k in range(w):
                    if gm.data[k][i]:
                        row[k * w + j] = row[k * w + j] + gm.data[k][i]
                for k in range(w):
                    if gm.data[j][k]:
                        row[i * w + k] = row[i * w + k] - gm.data[j][k]
                relations.append(row)
    rel = ExactMatrix(relations) if relations else ExactMatrix.zeros(1, dim2)
    red, pivots = rel.rref()
    free = [c for c in range(dim2) if c not in pivots]
    k = len(free)
    if k == 0:
        return True
    for which, sigma in enumerate(cat_alpha):
        z = rp.central_idempotent(m_alpha, cat_alpha, which)
        left = _sum_quotient_action(bi, alpha, z, w, red, pivots, free, left_side=True)
        right = _sum_quotient_action(bi, alpha, z, w, red, pivots, free, left_side=False)
        proj = left * right
        r = proj.rank()
        d2 = sigma.dim * sigma.dim
        if r % d2 != 0:
            raise RepresentationError("isotypic projector rank is not divisible")
        if r // d2 > 1:
            return False
    return True


def _quotient_coords(red, pivots, free, vec):
    v = list(vec)
    for r, c in enumerate(pivots):
        if v[c]:
            f = v[c]
            row = red.data[r]
            v = [a - f * b for a, b in zip(v, row)]
    return [v[c] for c in free]


def _sum_quotient_action(bi, alpha, coeffs, w, red, pivots, free, left_side):
    """Quotient matrix of sum_x coeffs[x] * (x acting on the chosen factor)."""
    m_alpha = bi.m1 if alpha == 1 else bi.m2
    gm = ExactMatrix.zeros(w, w)
    for x, c in enumerate(coeffs):
        if c:
            gm = gm + bi.factor_mat(alpha, x).scale(c)
    kdim = len(free)
    cols = []
    for c in free:
        i, j = divmod(c, w)
        full = [CYC_ZERO] * (w * w)
        if left_side:
            for a in range(w):
                if gm.data[a][i]:
                    full[a * w + j] = gm.data[a][i]
        else:
            for b in range(w):
                if gm.data[j][b]:
                    full[i * w + b] = gm.data[j][b]
        cols.append(_quotient_coords(red, pivots, free, full))
    return ExactMatrix([[cols[j][i] for j in range(kdim)] for i in range(kdim)])


# -- Gamma transfer (centric quotient graphs) ------------------------------------


@dataclass
class GammaReport:
    res_report: ThetaReport
    ind_report: ThetaReport
    apex_filter: list[int]
    verdict_match: bool


def gamma_transfer(m1: FiniteMonoid, n1, m2: FiniteMonoid, n2, iota,
                   rho_builder) -> GammaReport:
    """Verify: Res_{N1 x N2} rho is theta iff Ind_Gamma^{M1 x M2} rho is theta
    w.r.t. the apex-diagonal irreducibles Irr^E."""
    from . import clifford as cl

    if not mo.is_centric(m1, n1) or not mo.is_centric(m2, n2):
        raise MonoidError("N_i must be centric")
    if not rp.is_semisimple(m1).ok or not rp.is_semisimple(m2).ok:
        raise MonoidError("M_i must be semisimple")
    sub1, mem1 = n1.as_monoid()
    sub2, mem2 = n2.as_monoid()
    if not sub1.is_group() or not sub2.is_group():
        raise MonoidError("N_i must be subgroups")
    q1, p1 = mo.quotient_centric(m1, n1)
    q2, p2 = mo.quotient_centric(m2, n2)
    # iota: list mapping q1-element -> q2-element, an isomorphism
    for x in range(q1.size):
        for y in range(q1.size):
            if iota[q1.table[x][y]] != q2.table[iota[x]][iota[y]]:
                raise MonoidError("iota is not an isomorphism")
    prod = product_monoid(m1, m2)
    gamma_members = tuple(
        a * m2.size + b
        for a in range(m1.size)
        for b in range(m2.size)
        if iota[p1[a]] == p2[b]
    )
    gamma_ref = SubmonoidRef(prod, gamma_members)
    gamma, gmem = gamma_ref.as_monoid()
    rho = rho_builder(gamma, gmem)

    # left side: restriction to N1 x N2
    res_bi = _restriction_bimodule(sub1, sub2, m1, m2, mem1, mem2, rho, gmem)
    res_report = is_theta(res_bi)

    # right side: induction to M1 x M2, filtered to diagonal apexes
    ind = cl.ind_tensor(prod, SubmonoidRef(prod, gamma_members), rho, gmem)
    cat1 = rp.cmp_irreducibles(m1, groupzoo.auto_provider)
    cat2 = rp.cmp_irreducibles(m2, groupzoo.auto_provider)
    bi = BimoduleRep(m1, m2, prod, ind, cat1, cat2)
    mult = multiplicity_matrix(bi)
    idem1 = rp.regular_class_idempotents(m1)
    idem2 = rp.regular_class_idempotents(m2)
    # apex-diagonal filter: pairs (pi1, pi2) whose apex classes correspond
    # under iota
    diag_pairs = []
    for i, v1 in enumerate(cat1):
        for j, v2 in enumerate(cat2):
            e1 = v1.apex.idempotent
            e2 = v2.apex.idempotent
            if iota[p1[e1]] == p2[e2]:
                diag_pairs.append((i, j))
    filtered = [[mult[i][j] if (i, j) in diag_pairs else 0 for j in range(len(cat2))]
                for i in range(len(cat1))]
    ok = True
    for row in filtered:
        if any(v > 1 for v in row) or sum(1 for v in row if v) > 1:
            ok = False
    for j in range(len(cat2)):
        if sum(1 for i in range(len(cat1)) if filtered[i][j]) > 1:
            ok = False
    pairs = [
        (i, j)
        for i, row in enumerate(filtered)
        for j, v in enumerate(row)
        if v == 1 and ok
    ]
    ind_report = ThetaReport(ok, filtered, pairs, {}, {})
    return GammaReport(res_report, ind_report, [0], res_report.verdict == ind_report.verdict)


def _restriction_bimodule(sub1, sub2, m1, m2, mem1, mem2, rho, gmem) -> BimoduleRep:
    nprod = product_monoid(sub1, sub2)
    pos = {x: i for i, x in enumerate(gmem)}
    mats = []
    for a in mem1:
        for b in mem2:
            mats.append(rho.mats[pos[a * m2.size + b]])
    rep = Representation(nprod, mats, "left", validate=False)
    cat1 = rp.cmp_irreducibles(sub1, groupzoo.auto_provider)
    cat2 = rp.cmp_irreducibles(sub2, groupzoo.auto_provider)
    return BimoduleRep(sub1, sub2, nprod, rep, cat1, cat2)
