"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored on the power basis 1, z, ..., z^(phi(N)-1) with Fraction
coefficients, reduced modulo the N-th cyclotomic polynomial, so equality and
hashing are structural once conductors agree.  Conductor-1 values are plain
rationals and take a fast path everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

ZERO = Fraction(0)
ONE = Fraction(1)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    """Euclidean division of polynomials with Fraction coefficients.

    Coefficient lists are little-endian (index = degree).
    """
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    if dd < 0 or lead == 0:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [ZERO] * max(0, len(num) - dd)
    for i in range(len(num) - dd - 1, -1, -1):
        c = num[i + dd] / lead
        if c != 0:
            quot[i] = c
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_n, little-endian, monic, integral."""
    if n < 1:
        raise ValueError("conductor must be positive")
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n
    poly = [-ONE] + [ZERO] * (n - 1) + [ONE]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not r, "cyclotomic division must be exact"
            poly = q
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """zeta_n^k on the power basis, for 0 <= k < 2*phi(n) (covers products)."""
    d = euler_phi(n)
    phi = cyclotomic_polynomial(n)
    rows: list[tuple[Fraction, ...]] = []
    cur = [ONE] + [ZERO] * (d - 1)
    for _ in range(2 * d):
        rows.append(tuple(cur))
        # multiply by zeta and reduce by the monic Phi_n
        cur = [ZERO] + cur
        if len(cur) > d:
            top = cur.pop()
            if top != 0:
                for j in range(d):
                    cur[j] -= top * phi[j]
        rows[-1] = rows[-1]
    return tuple(rows)


@lru_cache(maxsize=None)
def _rebase_row(small: int, big: int, k: int) -> tuple[Fraction, ...]:
    """zeta_small^k written on the power basis of Q(zeta_big)."""
    assert big % small == 0
    step = big // small
    e = (k * step) % big
    d = euler_phi(big)
    # expand zeta_big^e on the basis by repeated table lookups
    table = _power_table(big)
    if e < len(table):
        return table[e]
    # e < big always, but table only covers 2*phi; reduce by squaring chain
    out = [ZERO] * d
    out[0] = ONE
    cur = e
    acc = _CYC_ONE_COEFFS(d)
    acc = list(acc)
    base = table[1]
    while cur:
        if cur & 1:
            acc = _mul_coeffs(acc, list(base), big)
        base = _mul_coeffs(list(base), list(base), big)
        cur >>= 1
    return tuple(acc)


def _CYC_ONE_COEFFS(d: int) -> tuple[Fraction, ...]:
    return (ONE,) + (ZERO,) * (d - 1)


def _mul_coeffs(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    d = euler_phi(n)
    prod = [ZERO] * (2 * d - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj != 0:
                prod[i + j] += ai * bj
    table = _power_table(n)
    out = [ZERO] * d
    for k, ck in enumerate(prod):
        if ck != 0:
            row = table[k]
            for j in range(d):
                if row[j] != 0:
                    out[j] += ck * row[j]
    return out


class CycNum:
    """An element of Q(zeta_n) in canonical power-basis form."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coeffs):
        self.n = n
        c = tuple(coeffs)
        assert len(c) == euler_phi(n)
        self.c = c
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(q) -> "CycNum":
        return CycNum(1, (Fraction(q),))

    @staticmethod
    def root_of_unity(n: int, k: int = 1) -> "CycNum":
        """zeta_n^k."""
        if n == 1:
            return CycNum(1, (ONE,))
        k %= n
        table = _power_table(n)
        return CycNum(n, table[k]) if k < len(table) else CycNum(n, _rebase_row(n, n, k))

    # -- conversions ---------------------------------------------------

    def promote(self, n: int) -> "CycNum":
        """Rewrite self in Q(zeta_n); n must be a multiple of self.n."""
        if n == self.n:
            return self
        assert n % self.n == 0
        d = euler_phi(n)
        out = [ZERO] * d
        for k, ck in enumerate(self.c):
            if ck != 0:
                row = _rebase_row(self.n, n, k)
                for j in range(d):
                    if row[j] != 0:
                        out[j] += ck * row[j]
        return CycNum(n, out)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number: %r" % (self,))
        return self.c[0]

    def reduced(self) -> "CycNum":
        """Canonical form with the smallest conductor dividing self.n."""
        cur = self
        if cur.is_rational():
            return cur if cur.n == 1 else CycNum(1, (cur.c[0],))
        changed = True
        while changed:
            changed = False
            n = cur.n
            for p in _prime_factors(n):
                m = n // p
                smaller = cur._try_conductor(m)
                if smaller is not None:
                    cur = smaller
                    changed = True
                    break
        return cur

    def _try_conductor(self, m: int) -> "CycNum | None":
        """Express self in Q(zeta_m) if possible (m | n)."""
        dm = euler_phi(m)
        rows = [_rebase_row(m, self.n, k) for k in range(dm)]
        # solve sum_k x_k * rows[k] = self.c  exactly
        dn = euler_phi(self.n)
        aug = [[rows[k][j] for k in range(dm)] + [self.c[j]] for j in range(dn)]
        sol = _solve_dense(aug, dm)
        if sol is None:
            return None
        return CycNum(m, sol)

    # -- arithmetic ----------------------------------------------------

    def _pair(self, other):
        if not isinstance(other, CycNum):
            other = CycNum.from_rational(other)
        if self.n == other.n:
            return self, other
        n = lcm(self.n, other.n)
        return self.promote(n), other.promote(n)

    def __add__(self, other):
        a, b = self._pair(other)
        return CycNum(a.n, tuple(x + y for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.n, tuple(-x for x in self.c))

    def __sub__(self, other):
        a, b = self._pair(other)
        return CycNum(a.n, tuple(x - y for x, y in zip(a.c, b.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a.n == 1:
            return CycNum(1, (a.c[0] * b.c[0],))
        return CycNum(a.n, _mul_coeffs(list(a.c), list(b.c), a.n))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta)")
        if self.n == 1:
            return CycNum(1, (1 / self.c[0],))
        # extended Euclid: u*self + v*Phi_n = 1 in Q[x]
        phi = list(cyclotomic_polynomial(self.n))
        a = list(self.c)
        while a and a[-1] == 0:
            a.pop()
        u0, u1 = [ONE], []
        r0, r1 = a, phi
        while r1:
            q, r = _poly_divmod(r0, r1)
            u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
            r0, r1 = r1, r
        assert len(r0) == 1 and r0[0] != 0, "Phi_n has no common factor with a unit"
        inv_lead = 1 / r0[0]
        d = euler_phi(self.n)
        coeffs = [x * inv_lead for x in u0] + [ZERO] * d
        # u0 may exceed the basis length; reduce via the power table
        table = _power_table(self.n)
        out = [ZERO] * d
        for k, ck in enumerate(coeffs[: 2 * d]):
            if ck != 0:
                row = table[k]
                for j in range(d):
                    out[j] += ck * row[j]
        return CycNum(self.n, out)

    def __truediv__(self, other):
        if not isinstance(other, CycNum):
            other = CycNum.from_rational(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycNum.from_rational(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.from_rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "CycNum":
        """Complex conjugation, zeta -> zeta^(-1)."""
        return self.galois(-1)

    def galois(self, j: int) -> "CycNum":
        """The automorphism zeta -> zeta^j (j coprime to the conductor)."""
        n = self.n
        if n == 1:
            return self
        j %= n
        assert gcd(j, n) == 1
        d = euler_phi(n)
        out = [ZERO] * d
        for k, ck in enumerate(self.c):
            if ck != 0:
                row = _rebase_row(n, n, (k * j) % n)
                for t in range(d):
                    if row[t] != 0:
                        out[t] += ck * row[t]
        return CycNum(n, out)

    def multiplicative_order(self, bound: int = 10_000) -> int | None:
        """Order of self as a root of unity, or None if not one of order <= bound."""
        if self.is_zero():
            return None
        one = CycNum.from_rational(1)
        x = self
        for t in range(1, bound + 1):
            if x == one:
                return t
            x = x * self
        return None

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.c[0] == other
        if not isinstance(other, CycNum):
            return NotImplemented
        if self.n == other.n:
            return self.c == other.c
        a, b = self._pair(other)
        return a.c == b.c

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        if self._hash is None:
            r = self.reduced()
            self._hash = hash((r.n, r.c))
        return self._hash

    def __repr__(self):
        if self.is_rational():
            return str(self.c[0])
        terms = []
        for k, ck in enumerate(self.c):
            if ck == 0:
                continue
            if k == 0:
                terms.append(str(ck))
            else:
                terms.append("%s*z%d^%d" % (ck, self.n, k))
        return "(" + " + ".join(terms) + ")"


def _poly_mul(a, b):
    out = [ZERO] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x != 0:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    out = list(a) + [ZERO] * max(0, len(b) - len(a))
    for j, y in enumerate(b):
        out[j] -= y
    while out and out[-1] == 0:
        out.pop()
    return out


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _solve_dense(aug: list[list[Fraction]], ncols: int):
    """Solve the augmented Fraction system exactly; None if inconsistent."""
    rows = [row[:] for row in aug]
    piv_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                rows[r], rows[i] = rows[i], rows[r]
                break
        else:
            continue
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_of_col[c] = r
        r += 1
    sol = [ZERO] * ncols
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            return None
    for c, i in piv_of_col.items():
        sol[c] = rows[i][ncols]
    return sol


CYC_ZERO = CycNum.from_rational(0)
CYC_ONE = CycNum.from_rational(1)


def cyc(x) -> CycNum:
    """Coerce int/Fraction/CycNum to CycNum."""
    return x if isinstance(x, CycNum) else CycNum.from_rational(x)


def cyc_arith(a: CycNum, b: CycNum, op: str) -> CycNum:
    """Field arithmetic dispatch; conductors are unified to the lcm."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown op %r" % op)
