"""Named monoids for the CLI and seeded random generators for the
verification batteries (random submonoid pairs, random semisimple monoids,
random bimodules)."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

from .cyclo import CycNum
from .linalg import ExactMatrix
from . import monoid as mo
from .monoid import FiniteMonoid, SubmonoidRef
from . import rep as rp
from .rep import Representation
from . import symrep
from . import groupzoo
from . import theta as th


def named_monoid(name: str) -> FiniteMonoid:
    name = name.lower()
    if name in ("1", "trivial"):
        return mo.trivial_monoid()
    if name.startswith("c") and name[1:].isdigit():
        return mo.cyclic_group(int(name[1:]))
    if name.startswith("s") and name[1:].isdigit():
        return mo.symmetric_group(int(name[1:]))
    if name.startswith("is") and name[2:].isdigit():
        return mo.symmetric_inverse_monoid(int(name[2:]))
    if name.startswith("t") and name[1:].isdigit():
        return mo.full_transformation_monoid(int(name[1:]))
    if name.startswith("d") and name[1:].isdigit():
        return groupzoo.dihedral_group(int(name[1:]))
    if name == "null":
        return mo.null_monoid()
    if name == "q8":
        return groupzoo.quaternion_group()
    if name == "a4":
        return groupzoo.alternating4_group()
    raise KeyError("unknown named monoid %r" % name)


def named_group_rep(group: FiniteMonoid, name: str) -> Representation:
    """trivial | sign | standard | irr<k> over a named group."""
    name = name.lower()
    if name == "trivial":
        return rp.trivial_representation(group)
    cat = rp.cmp_irreducibles(group, groupzoo.auto_provider)
    if name.startswith("irr") and name[3:].isdigit():
        return cat[int(name[3:])]
    if name == "sign":
        for v in cat:
            if v.dim == 1 and any(
                v.mats[x].data[0][0] == CycNum.from_rational(-1)
                for x in range(group.size)
            ) and all(
                v.mats[x].data[0][0].is_rational() for x in range(group.size)
            ):
                return v
        raise KeyError("no sign character")
    if name == "standard":
        cands = [v for v in cat if v.dim == group_standard_dim(group)]
        if cands:
            return cands[0]
        raise KeyError("no standard representation")
    raise KeyError("unknown representation %r" % name)


def group_standard_dim(group: FiniteMonoid) -> int:
    return max(v.dim for v in rp.cmp_irreducibles(group, groupzoo.auto_provider))


def random_submonoid(m: FiniteMonoid, rng: random.Random) -> SubmonoidRef:
    seeds = rng.sample(range(m.size), k=min(m.size, rng.randint(1, 3)))
    return mo.submonoid_closure(m, seeds)


def random_semisimple_monoid(rng: random.Random, max_size: int = 10) -> FiniteMonoid:
    """Rejection-sample small semisimple monoids from mixed families."""
    for _ in range(400):
        kind = rng.randrange(4)
        if kind == 0:
            m = mo.cyclic_group(rng.randint(1, max_size))
        elif kind == 1:
            # random subgroup of S_4
            s4 = mo.symmetric_group(4)
            gens = rng.sample(range(s4.size), k=rng.randint(1, 2))
            members = tuple(s4.closure(gens))
            if len(members) > max_size:
                continue
            m = SubmonoidRef(s4, members).as_monoid()[0]
        elif kind == 2:
            # random inverse submonoid of IS_2 or IS_3
            amb = mo.symmetric_inverse_monoid(rng.choice([2, 3]))
            inv = mo.involution(amb)
            gens = rng.sample(range(amb.size), k=rng.randint(1, 2))
            gens = gens + [inv[g] for g in gens]
            members = tuple(amb.closure(gens))
            if len(members) > max_size:
                continue
            m = SubmonoidRef(amb, members).as_monoid()[0]
        else:
            # commutative band (semilattice) from a random chain/antichain mix
            k = rng.randint(2, 4)
            m = _random_semilattice(rng, k)
        if m.size <= max_size and rp.is_semisimple(m).ok:
            try:
                rp.cmp_irreducibles(m, groupzoo.auto_provider)
            except rp.MissingProviderError:
                continue
            return m
    raise RuntimeError("could not sample a semisimple monoid")


def _random_semilattice(rng: random.Random, k: int) -> FiniteMonoid:
    """Meet-semilattice of subsets of a small set, closed under intersection."""
    universe = frozenset(range(3))
    subsets = {universe}
    while len(subsets) < k:
        s = frozenset(i for i in universe if rng.random() < 0.6)
        subsets.add(s)
    closed = set(subsets)
    changed = True
    while changed:
        changed = False
        for a in list(closed):
            for b in list(closed):
                if a & b not in closed:
                    closed.add(a & b)
                    changed = True
    elems = sorted(closed, key=lambda s: (len(s), sorted(s)), reverse=True)
    index = {s: i for i, s in enumerate(elems)}
    table = [[index[a & b] for b in elems] for a in elems]
    return FiniteMonoid(table, 0, validate=False)


def random_invertible(rng: random.Random, n: int) -> ExactMatrix:
    while True:
        m = ExactMatrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        try:
            m.inverse()
            return m
        except ZeroDivisionError:
            continue


def random_bimodule(rng: random.Random, max_size: int = 10, max_dim: int = 8) -> th.BimoduleRep:
    """A random representation of M1 x M2 over random semisimple monoids,
    built from a hidden multiplicity pattern and a random basis change."""
    while True:
        m1 = random_semisimple_monoid(rng, max_size)
        m2 = random_semisimple_monoid(rng, max_size)
        cat1 = rp.cmp_irreducibles(m1, groupzoo.auto_provider)
        cat2 = rp.cmp_irreducibles(m2, groupzoo.auto_provider)
        prod = th.product_monoid(m1, m2)
        pieces = []
        total = 0
        tries = rng.randint(1, 3)
        for _ in range(tries):
            i = rng.randrange(len(cat1))
            j = rng.randrange(len(cat2))
            mult = rng.randint(1, 2)
            d = cat1[i].dim * cat2[j].dim
            if total + mult * d > max_dim:
                continue
            total += mult * d
            for _ in range(mult):
                pieces.append((i, j))
        if not pieces:
            continue
        rep = None
        for i, j in pieces:
            ext = th.external_tensor(prod, m1, m2, cat1[i], cat2[j])
            rep = ext if rep is None else rep.direct_sum(ext)
        basis = random_invertible(rng, rep.dim)
        rep = rep.conjugate_by(basis)
        return th.BimoduleRep(m1, m2, prod, rep, cat1, cat2)
