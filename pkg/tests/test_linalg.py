import random
from fractions import Fraction

from monoidrep.cyclo import CycNum
from monoidrep.linalg import ExactMatrix, SpanTracker


def test_nullspace_identity_empty():
    assert ExactMatrix.identity(2).nullspace() == []


def test_nullspace_zero_full():
    assert len(ExactMatrix.zeros(2, 2).nullspace()) == 2


def test_nullspace_rank_one():
    basis = ExactMatrix([[1, 1], [1, 1]]).nullspace()
    assert len(basis) == 1
    v = basis[0].vec()
    assert v[0] == Fraction(-1) and v[1] == Fraction(1)


def test_solve_examples():
    ident = ExactMatrix.identity(3)
    rhs = ExactMatrix.column([1, 2, 3])
    assert ident.solve(rhs) == rhs
    assert ExactMatrix.zeros(2, 2).solve(ExactMatrix.column([1, 0])) is None
    assert ExactMatrix([[2]]).solve(ExactMatrix([[6]])) == ExactMatrix([[3]])


def test_rank_nullity_random():
    rng = random.Random(99)
    for _ in range(40):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = ExactMatrix([[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)])
        assert m.rank() + len(m.nullspace()) == c


def test_nullspace_is_kernel_and_deterministic():
    rng = random.Random(5)
    m = ExactMatrix([[rng.randint(-3, 3) for _ in range(4)] for _ in range(3)])
    basis1 = m.nullspace()
    basis2 = m.nullspace()
    assert [b.vec() for b in basis1] == [b.vec() for b in basis2]
    for v in basis1:
        assert (m * v).is_zero()


def test_cyclotomic_elimination():
    z = CycNum.root_of_unity(3)
    m = ExactMatrix([[z, 1], [1, z * z]])
    # rows are proportional by zeta^2: rank 1
    assert m.rank() == 1
    inv = ExactMatrix([[z, 1], [0, 1]]).inverse()
    assert ExactMatrix([[z, 1], [0, 1]]) * inv == ExactMatrix.identity(2)


def test_span_tracker():
    tr = SpanTracker(3)
    assert tr.add([1, 0, 0])
    assert tr.add([1, 1, 0])
    assert not tr.add([2, 1, 0])
    assert tr.dim == 2
    assert tr.contains([5, -7, 0])
    assert not tr.contains([0, 0, 1])


def test_kron_shapes():
    a = ExactMatrix([[1, 2], [3, 4]])
    b = ExactMatrix([[0, 1], [1, 0]])
    k = a.kron(b)
    assert (k.rows, k.cols) == (4, 4)
    assert k.data[0][1] == Fraction(1)
    assert k.data[2][3] == Fraction(4)
    assert k.data[3][0] == Fraction(3)
