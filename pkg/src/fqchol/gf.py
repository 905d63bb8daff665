"""Arithmetic in F_q, q = p^k.

Elements are handled as canonical integer codes: the element
c_0 + c_1 x + ... + c_{k-1} x^{k-1} has code sum(c_i * p**i). The ``GF``
object owns all arithmetic and works on these codes directly; ``Elem`` is a
thin value wrapper with operator overloads for interactive use.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .errors import (
    DegreeUnsupported,
    DivisionByZero,
    FieldMismatch,
    InvalidModulus,
    NonDefiniteField,
    NotASquare,
    NotPrime,
)

K_MAX = 4
# log/antilog tables are built for fields up to this order
LOG_TABLE_LIMIT = 1 << 16
ADD_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _trim(poly):
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m over F_p (low degree first)."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim(a[:dm])


def is_irreducible(poly, p) -> bool:
    """Exhaustive factor test: no monic factor of degree 1..deg//2 divides poly."""
    poly = _trim(c % p for c in poly)
    d = len(poly) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    for e in range(1, d // 2 + 1):
        for low in product(range(p), repeat=e):
            if not poly_mod(poly, list(low) + [1], p):
                return False
    return True


def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k, scanning lower coefficients as a base-p integer."""
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise InvalidModulus(f"no irreducible polynomial of degree {k} over F_{p}")


class FieldClass(enum.Enum):
    EVEN_CHAR = "EvenChar"
    DEFINITE = "Definite"
    NON_DEFINITE = "NonDefinite"


@dataclass(frozen=True)
class GF:
    """The finite field F_{p^k} with a fixed modulus polynomial.

    All arithmetic methods take and return canonical integer codes in
    ``range(q)``.
    """

    p: int
    k: int = 1
    modulus: tuple[int, ...] = None
    q: int = field(default=0, init=False, repr=False, compare=False)
    _exp: list = field(default=None, init=False, repr=False, compare=False)
    _log: list = field(default=None, init=False, repr=False, compare=False)
    _add: list = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if not 1 <= self.k <= K_MAX:
            raise DegreeUnsupported(f"degree {self.k} outside 1..{K_MAX}")
        object.__setattr__(self, "q", self.p**self.k)
        if self.modulus is None:
            object.__setattr__(self, "modulus", first_irreducible(self.p, self.k))
        else:
            mod = tuple(int(c) % self.p for c in self.modulus)
            if len(mod) != self.k + 1 or mod[-1] != 1:
                raise InvalidModulus(f"modulus must be monic of degree {self.k}")
            if self.k > 1 and not is_irreducible(mod, self.p):
                raise InvalidModulus(f"modulus {mod} is reducible over F_{self.p}")
            object.__setattr__(self, "modulus", mod)
        if self.q <= LOG_TABLE_LIMIT:
            self._build_log_tables()
        if self.k > 1 and self.q <= ADD_TABLE_LIMIT:
            object.__setattr__(
                self, "_add", [[self._add_direct(a, b) for b in range(self.q)] for a in range(self.q)]
            )

    # -- representation ---------------------------------------------------

    def __str__(self):
        return f"{self.p}^{self.k} modulus {' '.join(map(str, self.modulus))}"

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**i) % self.p for i in range(self.k))

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if self.k > 1 and len(coeffs) > self.k:
            coeffs = poly_mod(coeffs, self.modulus, self.p)
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def elem(self, a) -> Elem:
        return Elem(self, self.check(a))

    def check(self, a) -> int:
        if isinstance(a, Elem):
            if a.field != self:
                raise FieldMismatch("element belongs to another field")
            return a.code
        a = int(a)
        if self.k == 1:
            return a % self.p
        if not 0 <= a < self.q:
            raise ValueError(f"code {a} outside range({self.q})")
        return a

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return self._add_direct(a, b)

    def _add_direct(self, a: int, b: int) -> int:
        p, out, scale = self.p, 0, 1
        for _ in range(self.k):
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        p, out, scale = self.p, 0, 1
        for _ in range(self.k):
            out += (-(a % p) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_direct(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.from_coeffs(poly_mod(prod, self.modulus, self.p))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_direct(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._log is not None:
            return self._exp[-self._log[a] % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def _build_log_tables(self):
        q = self.q
        if q == 2:
            object.__setattr__(self, "_exp", [1])
            object.__setattr__(self, "_log", [None, 0])
            return
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._mul_direct(x, g)
            if len(exp) == q - 1:
                break
        log = [None] * q
        for i, x in enumerate(exp):
            log[x] = i
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    # -- squares and automorphisms -------------------------------------------

    def chi(self, a: int) -> int:
        """Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise."""
        if a == 0:
            return 0
        if self.p == 2:
            return 1
        return 1 if self.pow(a, (self.q - 1) // 2) == 1 else -1

    def classify(self) -> FieldClass:
        if self.p == 2:
            return FieldClass.EVEN_CHAR
        return FieldClass.DEFINITE if self.q % 4 == 3 else FieldClass.NON_DEFINITE

    @property
    def has_unique_sqrt(self) -> bool:
        return self.classify() is not FieldClass.NON_DEFINITE

    def frobenius(self, a: int, ell: int = 1) -> int:
        """a -> a^(p^ell)."""
        return self.pow(a, self.p ** (ell % self.k))

    def positive_sqrt(self, a: int) -> int:
        """The unique b with b*b == a and chi(b) == +1 (any root in char 2)."""
        cls = self.classify()
        if cls is FieldClass.NON_DEFINITE:
            raise NonDefiniteField(f"positive square root is ambiguous over F_{self.q}")
        if a == 0:
            return 0
        if cls is FieldClass.EVEN_CHAR:
            return self.pow(a, self.q // 2)
        if self.chi(a) != 1:
            raise NotASquare(f"{a} is not a square in F_{self.q}")
        r = self.pow(a, (self.q + 1) // 4)
        return r if self.chi(r) == 1 else self.neg(r)

    def squares(self) -> list[int]:
        return [a for a in self.nonzero() if self.chi(a) == 1]

    def first_nonsquare(self) -> int | None:
        for a in self.nonzero():
            if self.chi(a) == -1:
                return a
        return None


@lru_cache(maxsize=None)
def field_new(p: int, k: int = 1) -> GF:
    return GF(p, k)


@dataclass(frozen=True)
class Elem:
    """A field element bound to its field."""

    field: GF
    code: int

    @property
    def coeffs(self):
        return self.field.coeffs(self.code)

    def _other(self, other):
        if isinstance(other, Elem):
            if other.field != self.field:
                raise FieldMismatch("elements from different fields")
            return other.code
        return self.field.check(other)

    def __add__(self, other):
        return Elem(self.field, self.field.add(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Elem(self.field, self.field.sub(self.code, self._other(other)))

    def __rsub__(self, other):
        return Elem(self.field, self.field.sub(self._other(other), self.code))

    def __mul__(self, other):
        return Elem(self.field, self.field.mul(self.code, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Elem(self.field, self.field.div(self.code, self._other(other)))

    def __neg__(self):
        return Elem(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return Elem(self.field, self.field.pow(self.code, e))

    def inv(self):
        return Elem(self.field, self.field.inv(self.code))

    def chi(self) -> int:
        return self.field.chi(self.code)

    def frobenius(self, ell: int = 1):
        return Elem(self.field, self.field.frobenius(self.code, ell))

    def sqrt(self):
        return Elem(self.field, self.field.positive_sqrt(self.code))

    def __int__(self):
        return self.code

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return str(self.code)
