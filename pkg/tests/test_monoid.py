import json
import random
from itertools import permutations, product
from math import comb, factorial

import pytest

from monoidrep import monoid as mo
from monoidrep.monoid import FiniteMonoid, MonoidError, SubmonoidRef


def brute_is2_order():
    # all partial injections on 2 points
    return sum(comb(2, k) ** 2 * factorial(k) for k in range(3))


def test_monoid_from_table_trivial():
    m = mo.monoid_from_table([[0]], 0)
    assert m.size == 1


def test_monoid_from_table_c2():
    m = mo.monoid_from_table([[0, 1], [1, 0]], 0)
    assert m.is_group()


def test_monoid_from_table_bad_identity():
    with pytest.raises(MonoidError):
        mo.monoid_from_table([[0, 0], [0, 0]], 1)


def test_monoid_from_table_nonassociative():
    # a "subtraction-like" table fails associativity
    with pytest.raises(MonoidError):
        mo.monoid_from_table([[0, 1, 2], [1, 0, 1], [2, 2, 0]], 0)


def test_partial_transformations_t2():
    gens = [(0, 0), (1, 1), (0, 1), (1, 0)]
    m = mo.monoid_from_total_transformations(2, gens)
    assert m.size == 4


def test_partial_transformations_is2():
    gens = [(1, 0), (0, None)]  # (12) and the partial identity on {1}
    m = mo.monoid_from_partial_transformations(2, gens)
    assert m.size == brute_is2_order() == 7


def test_partial_transformations_empty():
    m = mo.monoid_from_partial_transformations(3, [])
    assert m.size == 1


def test_idempotents():
    assert mo.cyclic_group(5).idempotents() == [0]
    assert len(mo.symmetric_inverse_monoid(2).idempotents()) == 4
    assert len(mo.full_transformation_monoid(2).idempotents()) == 3


def test_green_relative_group_single_class():
    g = mo.symmetric_group(3)
    full = mo.full_submonoid(g)
    data = mo.green_relative(g, full, full)
    assert len(data.classes) == 1
    rec = data.classes[0]
    assert len(rec.h_members) == 6
    assert len(rec.x_transversal) == len(rec.y_transversal) == 1


def test_green_relative_trivial_singletons():
    m = mo.symmetric_inverse_monoid(2)
    triv = mo.trivial_submonoid(m)
    data = mo.green_relative(m, triv, triv)
    assert all(len(rec.members) == 1 for rec in data.classes)
    assert all(rec.h_members == [rec.rep] for rec in data.classes)


def _brute_force_nmk_orbits(m, nm, km):
    keys = {}
    for x in range(m.size):
        s = frozenset(m.table[m.table[a][x]][b] for a in nm for b in km)
        keys.setdefault(s, []).append(x)
    return sorted(sorted(v) for v in keys.values())


def test_green_relative_random_vs_bruteforce():
    rng = random.Random(11)
    m = mo.symmetric_inverse_monoid(2)  # 7 elements
    for _ in range(6):
        n = mo.submonoid_closure(m, rng.sample(range(m.size), 2))
        k = mo.submonoid_closure(m, rng.sample(range(m.size), 2))
        data = mo.green_relative(m, n, k)
        got = sorted(sorted(rec.members) for rec in data.classes)
        assert got == _brute_force_nmk_orbits(m, n.members, k.members)
        for rec in data.classes:
            assert len(rec.members) == len(rec.x_transversal) * len(
                rec.y_transversal
            ) * len(rec.h_members)


def test_local_monoid_identity_is_whole():
    m = mo.symmetric_inverse_monoid(2)
    loc, members, g = mo.local_monoid(m, mo.full_submonoid(m), m.identity)
    assert loc.size == m.size
    assert sorted(members) == list(range(m.size))


def _brute_units_of_eme(m, e):
    eme = sorted({m.table[m.table[e][x]][e] for x in range(m.size)})
    idx = {x: i for i, x in enumerate(eme)}
    units = []
    for x in eme:
        for y in eme:
            if m.table[x][y] == e and m.table[y][x] == e:
                units.append(x)
                break
    return sorted(units)


def test_local_monoid_maximal_subgroup():
    m = mo.symmetric_inverse_monoid(3)
    for e in m.idempotents():
        loc, members, g = mo.local_monoid(m, mo.full_submonoid(m), e)
        assert g == _brute_units_of_eme(m, e)


def test_local_monoid_rank1_trivial_group():
    m = mo.symmetric_inverse_monoid(2)
    e = next(
        x for x in m.idempotents() if m.labels[x] == "[1,-]"
    )
    loc, members, g = mo.local_monoid(m, mo.full_submonoid(m), e)
    assert g == [e]


def test_mackey_group_single_cell():
    g = mo.symmetric_group(3)
    cells = mo.mackey_decompose(g, mo.full_submonoid(g), mo.full_submonoid(g))
    assert len(cells) == 1


def test_mackey_trivial_singletons():
    m = mo.full_transformation_monoid(2)
    cells = mo.mackey_decompose(m, mo.trivial_submonoid(m), mo.trivial_submonoid(m))
    assert len(cells) == m.size


def test_mackey_t2_units_vs_double_cosets():
    m = mo.full_transformation_monoid(2)
    units = mo.units_submonoid(m)
    cells = mo.mackey_decompose(m, units, units)
    # direct double-coset enumeration NmK
    seen = {}
    for x in range(m.size):
        s = frozenset(
            m.table[m.table[a][x]][b] for a in units.members for b in units.members
        )
        seen.setdefault(s, set()).add(x)
    assert len(cells) == len(seen)


def test_sandwich_group_case():
    g = mo.cyclic_group(3)
    sw = mo.sandwich_matrix(g, 1)
    assert len(sw.grid) == 1 and len(sw.grid[0]) == 1
    assert sw.grid[0][0] in sw.group


def test_sandwich_inverse_diagonal():
    m = mo.symmetric_inverse_monoid(2)
    inv = mo.involution(m)
    for e in m.idempotents():
        sw = mo.sandwich_matrix(m, e)
        # choose y_i = x_i*: the sandwich becomes diag(e,...,e)
        for i, x in enumerate(sw.x_transversal):
            star = inv[x]
            prod = m.table[star][x]
            assert prod == e or mo.left_set(m, tuple(range(m.size)), prod) != None
            assert m.table[star][x] == e


def test_sandwich_null_factor_zero():
    m = mo.null_monoid()
    sw = mo.sandwich_matrix(m, 1)  # the element a with a^2 = 0
    assert all(entry is None for row in sw.grid for entry in row)


def test_involution_group_inverse():
    g = mo.cyclic_group(4)
    inv = mo.involution(g)
    assert inv == [0, 3, 2, 1]


def test_involution_is2_and_t2():
    m = mo.symmetric_inverse_monoid(2)
    inv = mo.involution(m)
    assert inv is not None
    for x in range(m.size):
        assert m.table[m.table[x][inv[x]]][x] == x
        assert inv[inv[x]] == x
    assert mo.involution(mo.full_transformation_monoid(2)) is None


def test_involution_antiautomorphism_and_relative_groups():
    m = mo.symmetric_inverse_monoid(2)
    inv = mo.involution(m)
    for a in range(m.size):
        for b in range(m.size):
            assert inv[m.table[a][b]] == m.table[inv[b]][inv[a]]
    # (G_m^N)* = G_{m*}^N over a random submonoid closed under *
    rng = random.Random(3)
    seeds = rng.sample(range(m.size), 2)
    n = mo.submonoid_closure(m, seeds + [inv[s] for s in seeds])
    for x in range(m.size):
        lset = mo.left_set(m, n.members, x)
        rset = mo.right_set(m, x, n.members)
        g = {
            y
            for y in range(m.size)
            if mo.left_set(m, n.members, y) == lset
            and mo.right_set(m, y, n.members) == rset
        }
        xs = inv[x]
        lset2 = mo.left_set(m, n.members, xs)
        rset2 = mo.right_set(m, xs, n.members)
        g2 = {
            y
            for y in range(m.size)
            if mo.left_set(m, n.members, y) == lset2
            and mo.right_set(m, y, n.members) == rset2
        }
        assert {inv[y] for y in g} == g2


def test_lemma_lm_exhaustive():
    for m in (mo.symmetric_inverse_monoid(2), mo.full_transformation_monoid(2),
              mo.null_monoid()):
        full = tuple(range(m.size))
        for n_elem in full:
            for x in full:
                lhs = mo._set_products(m, full, m.table[n_elem][x], full) == mo._set_products(m, full, x, full)
                rhs = mo.left_set(m, full, x) == mo.left_set(m, full, m.table[n_elem][x])
                assert lhs == rhs


def test_bsteinberg_counts_absolute():
    for m in (mo.symmetric_inverse_monoid(2), mo.symmetric_inverse_monoid(3),
              mo.full_transformation_monoid(2)):
        data = mo.green_absolute(m)
        for rec in data.classes:
            assert len(rec.members) == len(rec.x_transversal) * len(
                rec.y_transversal
            ) * len(rec.h_members)


def test_tworegular_regular_pairs():
    m = mo.symmetric_inverse_monoid(2)
    n = mo.full_submonoid(m)
    # all elements of an inverse monoid are regular; relative = absolute here
    for a in range(m.size):
        for b in range(m.size):
            rel = mo.left_set(m, n.members, a) == mo.left_set(m, n.members, b)
            absolute = m.left_ideal(a) == m.left_ideal(b)
            assert rel == absolute


def test_centric_and_quotient_trivial():
    m = mo.symmetric_inverse_monoid(2)
    triv = mo.trivial_submonoid(m)
    assert mo.is_centric(m, triv)
    q, proj = mo.quotient_centric(m, triv)
    assert q.size == m.size


def test_quotient_group_by_itself():
    g = mo.symmetric_group(3)
    q, proj = mo.quotient_centric(g, mo.full_submonoid(g))
    assert q.size == 1


def test_quotient_nn_idempotent():
    # M/N / (N/N) = M/N
    m = mo.symmetric_inverse_monoid(2)
    idems = tuple(m.idempotents())
    n = mo.submonoid_closure(m, idems)
    assert mo.is_centric(m, n)
    q, proj = mo.quotient_centric(m, n)
    nn = mo.submonoid_closure(q, (q.identity,))
    q2, _ = mo.quotient_centric(q, nn)
    assert q2.size == q.size


def test_idempotent_surjection_bijective_for_inverse():
    m = mo.symmetric_inverse_monoid(2)
    idems = tuple(m.idempotents())
    n = mo.submonoid_closure(m, idems)
    q, proj = mo.quotient_centric(m, n)
    em = m.idempotents()
    eq = set(q.idempotents())
    assert {proj[e] for e in em} <= eq
    images = [proj[e] for e in em]
    assert len(set(images)) == len(images)  # bijective for inverse monoids
    assert set(images) == eq


def test_principal_series():
    g = mo.cyclic_group(4)
    full = mo.full_submonoid(g)
    assert len(mo.principal_series(g, full, full)) == 1
    m = mo.symmetric_inverse_monoid(2)
    fm = mo.full_submonoid(m)
    chain = mo.principal_series(m, fm, fm)
    assert len(chain) == 3  # ranks 0, 1, 2
    t2 = mo.full_transformation_monoid(2)
    ft = mo.full_submonoid(t2)
    assert len(mo.principal_series(t2, ft, ft)) == 2


def test_json_roundtrip_table():
    m = mo.symmetric_inverse_monoid(2)
    blob = json.dumps(m.to_json())
    m2 = FiniteMonoid.from_json(json.loads(blob))
    assert m2 == m and m2.labels == m.labels


def test_json_generators_form():
    obj = {"points": 2, "generators": [{"map": [1, 0]}, {"map": [0, None]}],
           "kind": "partial"}
    m = FiniteMonoid.from_json(obj)
    assert m.size == 7


def test_json_unknown_field_rejected():
    with pytest.raises(MonoidError):
        FiniteMonoid.from_json({"table": [[0]], "identity": 0, "bogus": 1})
