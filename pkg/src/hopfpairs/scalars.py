"""Exact scalars.

Two layers live here.  ``CycloElem`` is an element of the cyclotomic field
Q(zeta_N), stored as an integer coefficient vector of length phi(N) over a
positive common denominator, reduced modulo the N-th cyclotomic polynomial.
``Scalar`` is a rational function in one indeterminate ``q`` with
``CycloElem`` coefficients, kept in lowest terms with a monic denominator.

Constants (no ``q``) take a fast path, since the structure tensors of the
finite-dimensional examples never involve ``q``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


# --------------------------------------------------------------------------
# integer polynomial helpers

def _int_poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        coef = num[k + len(den) - 1]
        if coef % lead:
            raise ArithmeticError("inexact integer polynomial division")
        coef //= lead
        out[k] = coef
        if coef:
            for t, dt in enumerate(den):
                num[k + t] -= coef * dt
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact integer polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _int_poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # row k holds x^k mod Phi_n, for 0 <= k <= 2*phi - 2
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(max(2 * deg - 1, 1)):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for t in range(deg):
                cur[t] -= top * phi[t]
    return tuple(rows)


def unity_order(conductor: int) -> int:
    """Number of roots of unity in Q(zeta_N), namely lcm(2, N)."""
    return lcm(2, conductor)


# --------------------------------------------------------------------------
# the cyclotomic field

class CycloElem:
    """An element of Q(zeta_N) in canonical form."""

    __slots__ = ("n", "c", "d", "_h")

    def __init__(self, n: int, coeffs):
        """Element sum_i coeffs[i] * zeta_n**i; any length is reduced."""
        deg = euler_phi(n)
        fracs = [Fraction(x) for x in coeffs]
        common = lcm(1, *(f.denominator for f in fracs))
        ints = [int(f * common) for f in fracs]
        vec = _reduce_long(n, ints) if len(ints) > deg else ints + [0] * (deg - len(ints))
        if not any(vec):
            self.n, self.c, self.d, self._h = n, (0,) * deg, 1, None
        else:
            CycloElem._fill(self, n, vec, common)

    @staticmethod
    def _fill(obj, n, nums, d):
        if d < 0:
            nums = [-x for x in nums]
            d = -d
        g = gcd(*nums, d)
        if g != 1:
            nums = [x // g for x in nums]
            d //= g
        obj.n = n
        obj.c = tuple(nums)
        obj.d = d
        obj._h = None

    @classmethod
    def _make(cls, n: int, nums, d: int) -> "CycloElem":
        obj = cls.__new__(cls)
        g = gcd(*nums, d)
        if g == d:
            # covers zero (gcd == d only if every numerator is a multiple of d)
            obj.n, obj.c, obj.d, obj._h = n, tuple(x // d for x in nums), 1, None
            return obj
        if g != 1:
            nums = [x // g for x in nums]
            d //= g
        obj.n, obj.c, obj.d, obj._h = n, tuple(nums), d, None
        return obj

    @classmethod
    def from_int(cls, n: int, value) -> "CycloElem":
        f = Fraction(value)
        deg = euler_phi(n)
        return cls._make(n, [f.numerator] + [0] * (deg - 1), f.denominator)

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> "CycloElem":
        """The power ``zeta_N ** power``."""
        power %= n
        rows = _reduction_rows(n)
        deg = euler_phi(n)
        if power < len(rows):
            vec = list(rows[power])
        else:
            vec = _reduce_long(n, [0] * power + [1])
        return cls._make(n, vec[:deg], 1)

    # ---- predicates
    def is_zero(self) -> bool:
        return not any(self.c)

    def is_one(self) -> bool:
        return self.d == 1 and self.c[0] == 1 and not any(self.c[1:])

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def coefficients(self) -> list[Fraction]:
        return [Fraction(x, self.d) for x in self.c]

    # ---- arithmetic
    def _check(self, other: "CycloElem") -> None:
        if other.n != self.n:
            raise ValueError(f"conductor mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "CycloElem") -> "CycloElem":
        if other.n != self.n:
            self._check(other)
        if self.d == other.d:
            return CycloElem._make(self.n, [a + b for a, b in zip(self.c, other.c)], self.d)
        d1, d2 = self.d, other.d
        return CycloElem._make(self.n, [a * d2 + b * d1 for a, b in zip(self.c, other.c)], d1 * d2)

    def __sub__(self, other: "CycloElem") -> "CycloElem":
        if other.n != self.n:
            self._check(other)
        if self.d == other.d:
            return CycloElem._make(self.n, [a - b for a, b in zip(self.c, other.c)], self.d)
        d1, d2 = self.d, other.d
        return CycloElem._make(self.n, [a * d2 - b * d1 for a, b in zip(self.c, other.c)], d1 * d2)

    def __neg__(self) -> "CycloElem":
        obj = CycloElem.__new__(CycloElem)
        obj.n, obj.c, obj.d, obj._h = self.n, tuple(-a for a in self.c), self.d, None
        return obj

    def __mul__(self, other: "CycloElem") -> "CycloElem":
        n = self.n
        if other.n != n:
            self._check(other)
        mul = _MULTIPLIERS.get(n) or _multiplier(n)
        return CycloElem._make(n, mul(self.c, other.c), self.d * other.d)

    def inverse(self) -> "CycloElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        n, deg = self.n, len(self.c)
        if deg == 1:
            c0 = self.c[0]
            return CycloElem._make(n, [self.d if c0 > 0 else -self.d], abs(c0))
        # solve (multiplication-by-self matrix) * x = e_0 over Q
        cols = []
        basis = CycloElem._make(n, [1] + [0] * (deg - 1), 1)
        xgen = CycloElem.zeta(n, 1)
        cur = basis
        for _ in range(deg):
            prod = self * cur
            cols.append([Fraction(v, prod.d) for v in prod.c])
            cur = cur * xgen
        mat = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        sol = _solve_fraction_system(mat, deg)
        big = lcm(*(s.denominator for s in sol))
        return CycloElem._make(n, [int(s * big) for s in sol], big)

    def __truediv__(self, other: "CycloElem") -> "CycloElem":
        return self * other.inverse()

    def __pow__(self, e: int) -> "CycloElem":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloElem.from_int(self.n, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate_power(self, k: int) -> "CycloElem":
        """Galois image under zeta -> zeta**k (k coprime to N)."""
        total = CycloElem.from_int(self.n, 0)
        for i, ci in enumerate(self.c):
            if ci:
                total = total + CycloElem.zeta(self.n, i * k) * CycloElem.from_int(self.n, Fraction(ci, self.d))
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.n == other.n and self.d == other.d and self.c == other.c

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash((self.n, self.c, self.d))
        return self._h

    def key(self) -> tuple:
        return (self.d, self.c)

    def __repr__(self) -> str:
        return f"CycloElem({self.n}, {self!s})"

    def __str__(self) -> str:
        terms = []
        for i, ci in enumerate(self.c):
            if not ci:
                continue
            f = Fraction(ci, self.d)
            if i == 0:
                terms.append(str(f))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                if f == 1:
                    terms.append(mono)
                elif f == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{f}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


_MULTIPLIERS: dict = {}


def _multiplier(n: int):
    """Return a function multiplying two coefficient tuples modulo Phi_n."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    if deg == 1:
        def mul(a, b):
            return [a[0] * b[0]]
    elif deg == 2:
        p0, p1 = phi[0], phi[1]

        def mul(a, b):
            a0, a1 = a
            b0, b1 = b
            t = a1 * b1
            return [a0 * b0 - p0 * t, a0 * b1 + a1 * b0 - p1 * t]
    else:
        rows = _reduction_rows(n)

        def mul(a, b):
            prod = [0] * (2 * deg - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        if bj:
                            prod[i + j] += ai * bj
            out = prod[:deg]
            for k in range(deg, 2 * deg - 1):
                pk = prod[k]
                if pk:
                    row = rows[k]
                    for t in range(deg):
                        out[t] += pk * row[t]
            return out
    _MULTIPLIERS[n] = mul
    return mul


def _reduce_long(n: int, vec: list[int]) -> list[int]:
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    vec = list(vec)
    for k in range(len(vec) - 1, deg - 1, -1):
        top = vec[k]
        if top:
            vec[k] = 0
            for t in range(deg):
                vec[k - deg + t] -= top * phi[t]
    return (vec + [0] * deg)[:deg]


def _solve_fraction_system(aug: list[list[Fraction]], nvars: int) -> list[Fraction]:
    rows = len(aug)
    r = 0
    piv = []
    for col in range(nvars):
        p = next((i for i in range(r, rows) if aug[i][col] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv.append(col)
        r += 1
    sol = [Fraction(0)] * nvars
    for i, col in enumerate(piv):
        sol[col] = aug[i][nvars]
    return sol


# --------------------------------------------------------------------------
# polynomials in q over the cyclotomic field; tuples of CycloElem, ascending

def _ptrim(p):
    k = len(p)
    while k and p[k - 1].is_zero():
        k -= 1
    return tuple(p[:k])


def _padd(p, r):
    if len(p) < len(r):
        p, r = r, p
    out = list(p)
    for i, c in enumerate(r):
        out[i] = out[i] + c
    return _ptrim(out)


def _pneg(p):
    return tuple(-c for c in p)


def _pmul(p, r):
    if not p or not r:
        return ()
    out = [None] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(r):
            t = a * b
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    zero = CycloElem.from_int(p[0].n, 0)
    return _ptrim([zero if c is None else c for c in out])


def _pscale(p, c):
    return _ptrim([a * c for a in p])


def _pdivmod(p, r):
    if not r:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    n = p[0].n if p else r[0].n
    inv_lead = r[-1].inverse()
    quot = [CycloElem.from_int(n, 0)] * max(len(p) - len(r) + 1, 0)
    for k in range(len(p) - len(r), -1, -1):
        coef = p[k + len(r) - 1] * inv_lead
        quot[k] = coef
        if not coef.is_zero():
            for t, rt in enumerate(r):
                p[k + t] = p[k + t] - coef * rt
    return _ptrim(quot), _ptrim(p[: len(r) - 1])


def _pmonic(p):
    if not p:
        return p
    return _pscale(p, p[-1].inverse())


def poly_gcd(p, r):
    """Monic gcd of two polynomials given as sequences of CycloElem."""
    p, r = _ptrim(p), _ptrim(r)
    while r:
        p, r = r, _pdivmod(p, r)[1]
    return _pmonic(p)


# --------------------------------------------------------------------------
# rational functions

_CONST_CACHE: dict[int, tuple] = {}


def _unit_poly(n: int):
    got = _CONST_CACHE.get(n)
    if got is None:
        got = (CycloElem.from_int(n, 1),)
        _CONST_CACHE[n] = got
    return got


class Scalar:
    """An element of Q(zeta_N)(q) in lowest terms with monic denominator.

    Two scalars are equal exactly when their normalized numerator and
    denominator coincide.  Python ints and Fractions coerce into the
    conductor of the other operand; mixing conductors raises ValueError.
    """

    __slots__ = ("N", "num", "den", "_c")

    def __init__(self, N: int, num=(), den=None):
        num = tuple(_as_cyclo(N, c) for c in num)
        den = _unit_poly(N) if den is None else tuple(_as_cyclo(N, c) for c in den)
        s = _normalize(N, _ptrim(num), _ptrim(den))
        self.N, self.num, self.den, self._c = s.N, s.num, s.den, s._c

    @classmethod
    def _raw(cls, N, num, den, c):
        obj = cls.__new__(cls)
        obj.N, obj.num, obj.den, obj._c = N, num, den, c
        return obj

    @classmethod
    def const(cls, value: CycloElem) -> "Scalar":
        N = value.n
        if value.is_zero():
            return cls._raw(N, (), _unit_poly(N), value)
        return cls._raw(N, (value,), _unit_poly(N), value)

    @classmethod
    def from_int(cls, value, N: int) -> "Scalar":
        return cls.const(CycloElem.from_int(N, value))

    @classmethod
    def q(cls, N: int) -> "Scalar":
        zero = CycloElem.from_int(N, 0)
        one = CycloElem.from_int(N, 1)
        return cls._raw(N, (zero, one), _unit_poly(N), None)

    # ---- predicates and views
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self._c is not None and self._c.is_one()

    def is_constant(self) -> bool:
        return self._c is not None

    def constant(self) -> CycloElem:
        if self._c is None:
            raise ValueError("scalar depends on q")
        return self._c

    def is_root_of_unity(self) -> bool:
        if not self.num:
            raise ValueError("zero is not a unit")
        if self._c is None:
            return False
        return (self._c ** unity_order(self.N)).is_one()

    def monomial(self):
        """Return (c, k) when self == c * q**k, else None."""
        if not self.num:
            return None
        nz = [i for i, c in enumerate(self.num) if not c.is_zero()]
        dz = [i for i, c in enumerate(self.den) if not c.is_zero()]
        if len(nz) != 1 or len(dz) != 1:
            return None
        return self.num[nz[0]] / self.den[dz[0]], nz[0] - dz[0]

    def degree(self) -> int:
        return len(self.num) - len(self.den)

    def valuation(self) -> int:
        def low(p):
            return next(i for i, c in enumerate(p) if not c.is_zero())
        return low(self.num) - low(self.den)

    # ---- coercion
    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.N != self.N:
                raise ValueError(f"conductor mismatch: {self.N} vs {other.N}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.from_int(other, self.N)
        if isinstance(other, CycloElem):
            return Scalar.const(other)
        raise TypeError(f"cannot combine Scalar with {type(other).__name__}")

    # ---- arithmetic
    def __add__(self, other) -> "Scalar":
        if type(other) is not Scalar or other.N != self.N:
            other = self._coerce(other)
        a, b = self._c, other._c
        if a is not None and b is not None:
            return Scalar.const(a + b)
        if self.den == other.den:
            return _normalize(self.N, _padd(self.num, other.num), self.den)
        return _normalize(self.N, _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
                          _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        c = self._c
        return Scalar._raw(self.N, _pneg(self.num), self.den, None if c is None else -c)

    def __sub__(self, other) -> "Scalar":
        if type(other) is not Scalar or other.N != self.N:
            other = self._coerce(other)
        a, b = self._c, other._c
        if a is not None and b is not None:
            return Scalar.const(a - b)
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Scalar":
        if type(other) is not Scalar or other.N != self.N:
            other = self._coerce(other)
        a, b = self._c, other._c
        if a is not None and b is not None:
            return Scalar.const(a * b)
        if not self.num or not other.num:
            return Scalar.from_int(0, self.N)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = _pdivmod(self.num, g1)[0], _pdivmod(other.den, g1)[0]
        n2, d1 = _pdivmod(other.num, g2)[0], _pdivmod(self.den, g2)[0]
        return _finish(self.N, _pmul(n1, n2), _pmul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero scalar")
        if self._c is not None:
            return Scalar.const(self._c.inverse())
        return _finish(self.N, self.den, self.num)

    def __truediv__(self, other) -> "Scalar":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "Scalar":
        if e < 0:
            return self.inverse() ** (-e)
        if self._c is not None:
            return Scalar.const(self._c ** e)
        result = Scalar.from_int(1, self.N)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction, CycloElem)):
                other = self._coerce(other)
            else:
                return NotImplemented
        return self.N == other.N and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.N, self.num, self.den))

    def key(self) -> tuple:
        return (len(self.den), len(self.num), tuple(c.key() for c in self.den),
                tuple(c.key() for c in self.num))

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if self._c is not None:
            return str(self._c)
        ns = _pstr(self.num)
        if len(self.den) == 1:
            return ns
        return f"({ns})/({_pstr(self.den)})"

    # ---- serialization
    def to_json(self) -> dict:
        return {
            "conductor": self.N,
            "num": [[_rat(x, c.d) for x in c.c] for c in self.num],
            "den": [[_rat(x, c.d) for x in c.c] for c in self.den],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Scalar":
        N = int(obj["conductor"])
        num = [CycloElem(N, [Fraction(s) for s in row]) for row in obj["num"]]
        den = [CycloElem(N, [Fraction(s) for s in row]) for row in obj["den"]]
        if not den:
            raise ValueError("zero denominator")
        return normalize(num, den, N)


def _rat(x: int, d: int) -> str:
    f = Fraction(x, d)
    return f"{f.numerator}/{f.denominator}"


def _pstr(p) -> str:
    terms = []
    for i, c in enumerate(p):
        if c.is_zero():
            continue
        cs = str(c)
        if i == 0:
            terms.append(cs)
            continue
        mono = "q" if i == 1 else f"q^{i}"
        if c.is_one():
            terms.append(mono)
        elif " " in cs:
            terms.append(f"({cs})*{mono}")
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms) if terms else "0"


def _as_cyclo(N: int, c) -> CycloElem:
    if isinstance(c, CycloElem):
        if c.n != N:
            raise ValueError(f"conductor mismatch: {c.n} vs {N}")
        return c
    if isinstance(c, Scalar):
        return c.constant()
    return CycloElem.from_int(N, c)


def _finish(N, num, den) -> Scalar:
    # num/den already coprime; make den monic
    if not num:
        return Scalar.from_int(0, N)
    lead = den[-1]
    if not lead.is_one():
        inv = lead.inverse()
        num = _pscale(num, inv)
        den = _pscale(den, inv)
    if len(den) == 1 and len(num) == 1:
        return Scalar._raw(N, num, den, num[0])
    return Scalar._raw(N, num, den, None)


def _normalize(N, num, den) -> Scalar:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return Scalar.from_int(0, N)
    if len(den) > 1:
        g = poly_gcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
    return _finish(N, num, den)


def normalize(num, den, N: int | None = None) -> Scalar:
    """Build num/den in lowest terms; num and den are coefficient lists in q."""
    if N is None:
        N = next((c.n for c in list(num) + list(den) if isinstance(c, CycloElem)), None)
        if N is None:
            raise ValueError("conductor cannot be inferred")
    num = _ptrim([_as_cyclo(N, c) for c in num])
    den = _ptrim([_as_cyclo(N, c) for c in den])
    return _normalize(N, num, den)


# --------------------------------------------------------------------------
# a session field

class Field:
    """Convenience factory for scalars of one conductor."""

    def __init__(self, conductor: int, transcendental: bool = True):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        self.conductor = conductor
        self.transcendental = transcendental
        self.zero = Scalar.from_int(0, conductor)
        self.one = Scalar.from_int(1, conductor)
        self.zeta = Scalar.const(CycloElem.zeta(conductor, 1))

    @property
    def q(self) -> Scalar:
        if not self.transcendental:
            raise ValueError("field has no indeterminate q")
        return Scalar.q(self.conductor)

    @property
    def unity_order(self) -> int:
        return unity_order(self.conductor)

    def __call__(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.N != self.conductor:
                raise ValueError("conductor mismatch")
            return value
        if isinstance(value, CycloElem):
            return Scalar.const(value)
        return Scalar.from_int(value, self.conductor)

    def generator_of_unity(self) -> Scalar:
        """A generator of the cyclic group of roots of unity in the field."""
        N = self.conductor
        z = Scalar.const(CycloElem.zeta(N, 1))
        return z if N % 2 == 0 else -z

    def root_of_unity(self, order: int, power: int = 1) -> Scalar:
        """``w ** power`` with w a fixed primitive ``order``-th root of unity."""
        L = self.unity_order
        if order < 1 or L % order:
            raise ValueError(f"conductor {self.conductor} has no primitive {order}-th root of unity")
        return self.generator_of_unity() ** ((L // order) * (power % order))

    def roots_of_unity(self, order: int | None = None) -> list[Scalar]:
        order = self.unity_order if order is None else order
        return [self.root_of_unity(order, k) for k in range(order)]

    def unity_exponent(self, x: Scalar) -> int:
        """The exponent t with x == w**t for the field's unity generator w."""
        w = self.generator_of_unity()
        cur = self.one
        for t in range(self.unity_order):
            if cur == x:
                return t
            cur = cur * w
        raise ValueError(f"{x} is not a root of unity in Q(zeta_{self.conductor})")


def multiplicative_order(x: Scalar) -> int:
    """Order of a root of unity; ValueError otherwise."""
    if x.is_zero() or not x.is_root_of_unity():
        raise ValueError(f"{x} is not a root of unity in the field")
    cur = x
    k = 1
    while not cur.is_one():
        cur = cur * x
        k += 1
    return k


def pow_int(x: Scalar, e: int) -> Scalar:
    """x**e; a zero base with a negative exponent raises ZeroDivisionError."""
    return x ** e


def is_root_of_unity(x: Scalar) -> bool:
    """True iff x is a constant with x**lcm(2, N) == 1; zero raises ValueError."""
    return x.is_root_of_unity()
