"""
Exact scalar arithmetic.

Two kinds of scalars are used throughout the library:

* ``LaurentPoly`` -- integer Laurent polynomials in one variable ``v``.
  The Hecke-algebra parameters are hard-wired to the one-variable
  specialization ``q = v**2`` and ``Q = v``; the blob algebra uses a second
  instance of the same ring in the variable ``q`` (unit exponent 1).
* ``CycloNumber`` -- elements of the cyclotomic field Q(zeta_N), represented
  as rational polynomials modulo the N-th cyclotomic polynomial, so that
  equality with zero is exactly decidable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = [
    "LaurentPoly", "CycloNumber",
    "gauss", "quantum_integer", "quantum_factorial",
    "specialize", "cyclotomic_root",
    "NegativeN", "InexactDivision", "ConductorOverflow",
]


class NegativeN(ValueError):
    """Raised when a Gaussian integer [n] is requested for n < 0."""


class InexactDivision(ArithmeticError):
    """Raised when an exact Laurent-polynomial division leaves a remainder."""


class ConductorOverflow(ValueError):
    """Raised when a cyclotomic conductor exceeds the configured bound."""


MAX_CONDUCTOR = 120


class LaurentPoly:
    """
    An integer Laurent polynomial, stored as a sparse map exponent -> coeff.

    Instances are immutable and hashable; all arithmetic is exact.

    >>> v = LaurentPoly.monomial(1)
    >>> print(v + v**-1)
    v + v^-1
    >>> (v * v**-1).is_one()
    True
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: dict[int, int] | None = None):
        c = {e: int(x) for e, x in (coeffs or {}).items() if x != 0}
        self._c = c
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def monomial(exponent: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exponent: coeff})

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly({0: c})

    # -- queries -----------------------------------------------------------

    def items(self):
        return self._c.items()

    def coeff(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: 1}

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, x in other._c.items():
            y = c.get(e, 0) + x
            if y:
                c[e] = y
            elif e in c:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -x for e, x in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {e: x * other for e, x in self._c.items()}
            out._hash = None
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        c: dict[int, int] = {}
        for e1, x1 in a.items():
            for e2, x2 in b.items():
                e = e1 + e2
                y = c.get(e, 0) + x1 * x2
                if y:
                    c[e] = y
                elif e in c:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if len(self._c) == 1:
            ((e, x),) = self._c.items()
            if x == 1:
                return LaurentPoly.monomial(e * k)
            if k < 0:
                raise InexactDivision("negative power of a non-unit")
            return LaurentPoly.monomial(e * k, x**k)
        if k < 0:
            raise InexactDivision("negative power of a non-monomial")
        out = _ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return self/other, raising InexactDivision if not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return _ZERO
        # Shift both to ordinary polynomials and long-divide.
        sa, sb = self.min_exp(), other.min_exp()
        da, db = self.max_exp() - sa, other.max_exp() - sb
        if da < db:
            raise InexactDivision("degree too small")
        a = [self.coeff(sa + i) for i in range(da + 1)]
        b = [other.coeff(sb + i) for i in range(db + 1)]
        lead = b[-1]
        qc: dict[int, int] = {}
        for i in range(da - db, -1, -1):
            top = a[i + db]
            if top == 0:
                continue
            if top % lead:
                raise InexactDivision("leading coefficient does not divide")
            f = top // lead
            qc[i] = f
            for j, bj in enumerate(b):
                a[i + j] -= f * bj
        if any(a):
            raise InexactDivision("nonzero remainder")
        return LaurentPoly({(sa - sb) + e: x for e, x in qc.items()})

    # -- structure maps ----------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """The bar involution v -> v^-1 (exponent negation)."""
        return LaurentPoly({-e: x for e, x in self._c.items()})

    def positive_part(self) -> "LaurentPoly":
        """Sum of terms with exponent > 0."""
        return LaurentPoly({e: x for e, x in self._c.items() if e > 0})

    def negative_part(self) -> "LaurentPoly":
        """Sum of terms with exponent < 0."""
        return LaurentPoly({e: x for e, x in self._c.items() if e < 0})

    def nonpositive_part(self) -> "LaurentPoly":
        """Sum of terms with exponent <= 0."""
        return LaurentPoly({e: x for e, x in self._c.items() if e <= 0})

    def constant_term(self) -> int:
        return self._c.get(0, 0)

    def is_bar_symmetric(self) -> bool:
        return all(self._c.get(-e, 0) == x for e, x in self._c.items())

    def bar_symmetrize_nonpositive(self) -> "LaurentPoly":
        """
        The unique bar-symmetric polynomial congruent to this one modulo
        terms with strictly positive exponents: keep exponents <= 0 and
        mirror the strictly negative ones.
        """
        low = self.nonpositive_part()
        return low + self.negative_part().bar()

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Substitute v -> v^k."""
        return LaurentPoly({e * k: x for e, x in self._c.items()})

    def evaluate(self, value):
        """Evaluate at an invertible scalar (Fraction or CycloNumber)."""
        if self.is_zero():
            return value - value if not isinstance(value, Fraction) else Fraction(0)
        acc = None
        for e, x in sorted(self._c.items()):
            term = (value**e) * x
            acc = term if acc is None else acc + term
        return acc

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def __str__(self) -> str:
        return self.pretty("v")

    def pretty(self, var: str = "v") -> str:
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c, reverse=True):
            x = self._c[e]
            if e == 0:
                mon = str(abs(x))
            else:
                pw = var if e == 1 else f"{var}^{e}"
                mon = pw if abs(x) == 1 else f"{abs(x)}*{pw}"
            if not out:
                out.append(mon if x > 0 else f"-{mon}")
            else:
                out.append(f"+ {mon}" if x > 0 else f"- {mon}")
        return " ".join(out)

    def to_json(self) -> dict[str, int]:
        return {str(e): x for e, x in sorted(self._c.items())}

    @staticmethod
    def from_json(d: dict[str, int]) -> "LaurentPoly":
        return LaurentPoly({int(e): x for e, x in d.items()})


_ZERO = LaurentPoly({})
_ONE = LaurentPoly({0: 1})


def gauss(n: int, x: LaurentPoly) -> LaurentPoly:
    """
    The balanced Gaussian integer [n]_x = x^(n-1) + x^(n-3) + ... + x^(1-n)
    for a monomial x with coefficient 1.

    >>> print(gauss(2, LaurentPoly.monomial(-1)))
    v + v^-1
    """
    if n < 0:
        raise NegativeN(f"gauss requires n >= 0, got {n}")
    if len(x._c) != 1 or next(iter(x._c.values())) != 1:
        raise ValueError("gauss base must be a coefficient-1 monomial")
    k = x.min_exp()
    return LaurentPoly({k * e: 1 for e in range(n - 1, -n, -2)}) if n else _ZERO


def quantum_integer(n: int, x: LaurentPoly | None = None) -> LaurentPoly:
    """[n]_x for any integer n, with [-n] = -[n]; default x = v."""
    if x is None:
        x = LaurentPoly.monomial(1)
    if n >= 0:
        return gauss(n, x)
    return -gauss(-n, x)


@lru_cache(maxsize=None)
def quantum_factorial(a: int) -> LaurentPoly:
    """
    The quantum factorial [a]! = [1][2]...[a] in the variable v,
    used for divided powers.

    >>> print(quantum_factorial(2))
    v + v^-1
    """
    if a < 0:
        raise NegativeN(f"quantum_factorial requires a >= 0, got {a}")
    if a == 0:
        return _ONE
    return quantum_factorial(a - 1) * gauss(a, LaurentPoly.monomial(1))


# ---------------------------------------------------------------------------
# Cyclotomic numbers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of the n-th cyclotomic polynomial."""
    from sympy import Poly, Symbol, cyclotomic_poly

    x = Symbol("x")
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(n, x), x).all_coeffs()))


def _poly_mod(a: list[Fraction], mod: tuple[int, ...]) -> list[Fraction]:
    """Reduce the rational polynomial a modulo the monic polynomial mod."""
    deg = len(mod) - 1
    a = list(a)
    for i in range(len(a) - 1, deg - 1, -1):
        c = a[i]
        if c:
            for j in range(deg + 1):
                a[i - deg + j] -= c * mod[j]
    del a[deg:]
    while len(a) < deg:
        a.append(Fraction(0))
    return a


class CycloNumber:
    """
    An element of the cyclotomic field Q(zeta_N), stored as a rational
    polynomial in zeta of degree < phi(N).

    >>> z = cyclotomic_root(4)   # zeta_4 = i
    >>> (z * z).is_minus_one()
    True
    """

    __slots__ = ("n", "_c")

    def __init__(self, n: int, coeffs):
        if n > MAX_CONDUCTOR:
            raise ConductorOverflow(f"conductor {n} exceeds bound {MAX_CONDUCTOR}")
        self.n = n
        mod = _cyclotomic_coeffs(n)
        c = [Fraction(x) for x in coeffs]
        self._c = tuple(_poly_mod(c, mod))

    @staticmethod
    def const(n: int, value) -> "CycloNumber":
        return CycloNumber(n, [Fraction(value)])

    def _check(self, other: "CycloNumber"):
        if self.n != other.n:
            raise ValueError(f"conductor mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.const(self.n, other)
        self._check(other)
        return CycloNumber(self.n, [a + b for a, b in zip(self._c, other._c)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.n, [-a for a in self._c])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.const(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNumber(self.n, [a * other for a in self._c])
        self._check(other)
        deg = len(self._c)
        prod = [Fraction(0)] * (2 * deg)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    if b:
                        prod[i + j] += a * b
        return CycloNumber(self.n, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloNumber.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "CycloNumber":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        mod = [Fraction(x) for x in _cyclotomic_coeffs(self.n)]

        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        def divmod_poly(a, b):
            a = list(a)
            q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
            while len(a) >= len(b) and trim(a):
                f = a[-1] / b[-1]
                q[len(a) - len(b)] = f
                for j in range(len(b)):
                    a[len(a) - len(b) + j] -= f * b[j]
                trim(a)
            return trim(q), a

        r0, r1 = mod, trim(list(self._c))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while trim(list(r1)):
            q, r = divmod_poly(r0, r1)
            # s = s0 - q*s1
            s = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        if i + j >= len(s):
                            s.append(Fraction(0))
                        s[i + j] -= qi * sj
            r0, r1, s0, s1 = r1, r, s1, trim(s)
            if len(r1) == 1 or not r1:
                break
        if not r1:
            raise ZeroDivisionError("element is a zero divisor (should not happen)")
        c = r1[0]
        inv = [x / c for x in s1]
        return CycloNumber(self.n, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNumber(self.n, [a / other for a in self._c])
        self._check(other)
        return self * other.inverse()

    def is_zero(self) -> bool:
        return all(a == 0 for a in self._c)

    def is_one(self) -> bool:
        return self._c[0] == 1 and all(a == 0 for a in self._c[1:])

    def is_minus_one(self) -> bool:
        return (-self).is_one()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.const(self.n, other)
        return isinstance(other, CycloNumber) and self.n == other.n and self._c == other._c

    def __hash__(self):
        return hash((self.n, self._c))

    def __repr__(self):
        terms = [f"{a}*z^{i}" for i, a in enumerate(self._c) if a]
        return f"CycloNumber({self.n}; {' + '.join(terms) or '0'})"


def cyclotomic_root(n: int, power: int = 1) -> CycloNumber:
    """The root of unity zeta_n**power in Q(zeta_n)."""
    z = CycloNumber(n, [0, 1])
    return z ** (power % n)


def specialize(p: LaurentPoly, zeta: CycloNumber) -> CycloNumber:
    """Evaluate a Laurent polynomial at v = zeta (a unit), exactly."""
    acc = CycloNumber.const(zeta.n, 0)
    inv = zeta.inverse()
    for e, x in p.items():
        acc = acc + (zeta**e if e >= 0 else inv ** (-e)) * x
    return acc
