"""A closed tower of concrete commutative rings with exact arithmetic.

Descriptors are frozen dataclasses; elements are plain canonical Python
values so that structural equality is semantic equality:

    Integers                 int
    IntegersMod(n)           int in [0, n)
    GaloisField4             int in {0, 1, 2, 3} standing for 0, 1, a, b
    DualExtension(B)         (s1, s2)            s1 + s2*z, z^2 = 0
    TruncatedPowerSeries(B)  (c0, ..., c_{N-1})  B[[x]] mod x^N
    QuotientXPow(B, m)       (c0, ..., c_{m-1})  B[x]/(x^m)
    GroupRingC2(B)           (a, b)              a + b*g, g^2 = 1

Ring methods operate on these raw values.  `RingElement` wraps a value with
its ring for operator-style use and descriptor checking.
"""

from __future__ import annotations

import itertools
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Iterator, NamedTuple

from .errors import GuardError, InfiniteRingError, RingMismatchError, SchemaError

MAX_DEPTH = 4


class LocalData(NamedTuple):
    """Residue field of a local ring with the canonical surjection and a section."""

    residue: Ring
    reduce: Callable[[Any], Any]
    lift: Callable[[Any], Any]


class NilReduction(NamedTuple):
    """A surjection onto a smaller ring whose kernel is a nil ideal."""

    base: Ring
    reduce: Callable[[Any], Any]
    section: Callable[[Any], Any]


class Ring(ABC):
    """Common interface for every descriptor in the tower."""

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def add(self, x, y): ...

    @abstractmethod
    def neg(self, x): ...

    @abstractmethod
    def mul(self, x, y): ...

    @abstractmethod
    def inv(self, x):
        """Return the inverse of `x`, or None when `x` is not a unit."""

    @abstractmethod
    def from_int(self, k: int): ...

    @abstractmethod
    def contains(self, x) -> bool:
        """True if `x` is a canonical value of this ring."""

    @property
    @abstractmethod
    def cardinality(self) -> int | None:
        """Number of elements, None for infinite rings."""

    @property
    @abstractmethod
    def characteristic(self) -> int: ...

    @abstractmethod
    def elements(self) -> Iterator:
        """Every element once, in a fixed order.  Raises for infinite rings."""

    @abstractmethod
    def sort_key(self, x):
        """Key consistent with the order of `elements` (sign-magnitude over Z)."""

    @abstractmethod
    def format(self, x) -> str: ...

    @abstractmethod
    def local_data(self) -> LocalData | None: ...

    def nil_reduction(self) -> NilReduction | None:
        return None

    @property
    def depth(self) -> int:
        return 0

    # derived operations

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def is_zero(self, x) -> bool:
        return x == self.zero

    def is_unit(self, x) -> bool:
        return self.inv(x) is not None

    def pow(self, x, e: int):
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def sum(self, xs):
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    @property
    def is_finite(self) -> bool:
        return self.cardinality is not None

    def check(self, x):
        if not self.contains(x):
            raise SchemaError(f"{x!r} is not a canonical element of {self}")
        return x

    def elem(self, x) -> RingElement:
        return RingElement(self, self.check(x))


@dataclass(frozen=True)
class RingElement:
    """A ring value tagged with its descriptor."""

    ring: Ring
    value: Any

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return RingElement(self.ring, self.ring.add(self.value, y))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return RingElement(self.ring, self.ring.sub(self.value, y))

    def __rsub__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return RingElement(self.ring, self.ring.sub(y, self.value))

    def __mul__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return y
        return RingElement(self.ring, self.ring.mul(self.value, y))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def __pow__(self, e: int):
        return RingElement(self.ring, self.ring.pow(self.value, e))

    def inverse(self) -> RingElement | None:
        y = self.ring.inv(self.value)
        return None if y is None else RingElement(self.ring, y)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def __str__(self):
        return self.ring.format(self.value)


def arith(op: str, x: RingElement, y: RingElement) -> RingElement:
    """Apply one of add, sub, mul, neg (y ignored for neg)."""
    if op == "neg":
        return -x
    if not isinstance(y, RingElement) or y.ring != x.ring:
        raise RingMismatchError(f"{x.ring} vs {getattr(y, 'ring', type(y))}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def try_invert(x: RingElement) -> RingElement | None:
    return x.inverse()


def enumerate_elements(ring: Ring) -> Iterator:
    return ring.elements()


def local_data(ring: Ring) -> LocalData | None:
    return ring.local_data()


def _identity(x):
    return x


def _prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p**k, or None."""
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
        p += 1
    return (n, 1) if n > 1 else None


def _paren(s: str) -> str:
    return f"({s})" if any(c in s[1:] for c in "+-") else s


def _format_terms(ring: Ring, coeffs, monomials) -> str:
    parts = []
    for c, mono in zip(coeffs, monomials):
        if ring.is_zero(c):
            continue
        if not mono:
            parts.append(ring.format(c))
        elif c == ring.one:
            parts.append(mono)
        elif ring.characteristic == 0 and c == ring.neg(ring.one):
            parts.append("-" + mono)
        else:
            parts.append(_paren(ring.format(c)) + mono)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


# --- base rings ---------------------------------------------------------


@dataclass(frozen=True)
class Integers(Ring):
    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        return x if x in (1, -1) else None

    def from_int(self, k):
        return k

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool)

    @property
    def cardinality(self):
        return None

    @property
    def characteristic(self):
        return 0

    def elements(self):
        raise InfiniteRingError("Z is infinite")

    def sort_key(self, x):
        return (abs(x), x < 0)

    def format(self, x):
        return str(x)

    def local_data(self):
        return None

    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class IntegersMod(Ring):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise SchemaError(f"modulus must be an integer >= 2, got {self.n!r}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, x, y):
        return (x + y) % self.n

    def sub(self, x, y):
        return (x - y) % self.n

    def neg(self, x):
        return -x % self.n

    def mul(self, x, y):
        return x * y % self.n

    def inv(self, x):
        if math.gcd(x, self.n) != 1:
            return None
        return pow(x, -1, self.n)

    def from_int(self, k):
        return k % self.n

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.n

    @property
    def cardinality(self):
        return self.n

    @property
    def characteristic(self):
        return self.n

    def elements(self):
        return iter(range(self.n))

    def sort_key(self, x):
        return x

    def format(self, x):
        return str(x)

    @property
    def prime_power(self) -> tuple[int, int] | None:
        return _prime_power(self.n)

    def local_data(self):
        pk = self.prime_power
        if pk is None:
            return None
        p, k = pk
        if k == 1:
            return LocalData(self, _identity, _identity)
        return LocalData(IntegersMod(p), lambda x: x % p, _identity)

    def nil_reduction(self):
        pk = self.prime_power
        if pk is None or pk[1] == 1:
            return None
        p = pk[0]
        return NilReduction(IntegersMod(p), lambda x: x % p, _identity)

    def __str__(self):
        return f"Z/{self.n}"


GF4_NAMES = ("0", "1", "a", "b")

# Operation tables for the four-element field {0, 1, a, b}, rows and
# columns in the order 0, 1, a, b.
GF4_ADD = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)
GF4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
GF4_INV = (None, 1, 3, 2)


@dataclass(frozen=True)
class GaloisField4(Ring):
    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, x, y):
        return GF4_ADD[x][y]

    sub = add

    def neg(self, x):
        return x

    def mul(self, x, y):
        return GF4_MUL[x][y]

    def inv(self, x):
        return GF4_INV[x]

    def from_int(self, k):
        return k & 1

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < 4

    @property
    def cardinality(self):
        return 4

    @property
    def characteristic(self):
        return 2

    def elements(self):
        return iter(range(4))

    def sort_key(self, x):
        return x

    def format(self, x):
        return GF4_NAMES[x]

    def local_data(self):
        return LocalData(self, _identity, _identity)

    def __str__(self):
        return "GF4"


# --- extensions ---------------------------------------------------------


class _Extension(Ring):
    """Shared plumbing for rings built over a base ring."""

    base: Ring

    def _check_depth(self):
        if not isinstance(self.base, Ring):
            raise SchemaError(f"base must be a ring descriptor, got {self.base!r}")
        if self.depth > MAX_DEPTH:
            raise GuardError(f"descriptor nesting depth {self.depth} exceeds {MAX_DEPTH}")

    @property
    def depth(self):
        return self.base.depth + 1

    @property
    def characteristic(self):
        return self.base.characteristic

    def sort_key(self, x):
        return tuple(self.base.sort_key(c) for c in x)


@dataclass(frozen=True)
class DualExtension(_Extension):
    """base[z]/(z^2)."""

    base: Ring

    def __post_init__(self):
        self._check_depth()

    @property
    def zero(self):
        return (self.base.zero, self.base.zero)

    @property
    def one(self):
        return (self.base.one, self.base.zero)

    def add(self, x, y):
        B = self.base
        return (B.add(x[0], y[0]), B.add(x[1], y[1]))

    def neg(self, x):
        return (self.base.neg(x[0]), self.base.neg(x[1]))

    def mul(self, x, y):
        B = self.base
        return (B.mul(x[0], y[0]), B.add(B.mul(x[0], y[1]), B.mul(x[1], y[0])))

    def inv(self, x):
        B = self.base
        s = B.inv(x[0])
        if s is None:
            return None
        return (s, B.neg(B.mul(B.mul(s, s), x[1])))

    def from_int(self, k):
        return (self.base.from_int(k), self.base.zero)

    def contains(self, x):
        return isinstance(x, tuple) and len(x) == 2 and all(self.base.contains(c) for c in x)

    @property
    def cardinality(self):
        c = self.base.cardinality
        return None if c is None else c * c

    def elements(self):
        return itertools.product(list(self.base.elements()), repeat=2)

    def format(self, x):
        return _format_terms(self.base, x, ("", "z"))

    def local_data(self):
        ld = self.base.local_data()
        if ld is None:
            return None
        zero = self.base.zero
        return LocalData(ld.residue, lambda x: ld.reduce(x[0]), lambda r: (ld.lift(r), zero))

    def nil_reduction(self):
        zero = self.base.zero
        return NilReduction(self.base, lambda x: x[0], lambda s: (s, zero))

    def __str__(self):
        return f"{self.base}[z]/(z^2)"


class _Truncated(_Extension):
    """base[x]/(x^N); shared by the power-series and quotient descriptors."""

    @property
    def length(self) -> int:
        raise NotImplementedError

    @property
    def zero(self):
        return (self.base.zero,) * self.length

    @property
    def one(self):
        return (self.base.one,) + (self.base.zero,) * (self.length - 1)

    def add(self, x, y):
        B = self.base
        return tuple(B.add(a, b) for a, b in zip(x, y))

    def neg(self, x):
        return tuple(self.base.neg(a) for a in x)

    def mul(self, x, y):
        B = self.base
        N = self.length
        out = [B.zero] * N
        for i, a in enumerate(x):
            if B.is_zero(a):
                continue
            for j in range(N - i):
                out[i + j] = B.add(out[i + j], B.mul(a, y[j]))
        return tuple(out)

    def inv(self, x):
        B = self.base
        c0 = B.inv(x[0])
        if c0 is None:
            return None
        y = [c0]
        for k in range(1, self.length):
            acc = B.sum(B.mul(x[i], y[k - i]) for i in range(1, k + 1))
            y.append(B.neg(B.mul(c0, acc)))
        return tuple(y)

    def from_int(self, k):
        return (self.base.from_int(k),) + (self.base.zero,) * (self.length - 1)

    def contains(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == self.length
            and all(self.base.contains(c) for c in x)
        )

    @property
    def cardinality(self):
        c = self.base.cardinality
        return None if c is None else c ** self.length

    def elements(self):
        if self.base.cardinality is None:
            raise InfiniteRingError(f"{self} is infinite")
        return itertools.product(list(self.base.elements()), repeat=self.length)

    def format(self, x):
        monos = [""] + ["x" if i == 1 else f"x^{i}" for i in range(1, self.length)]
        return _format_terms(self.base, x, monos)

    def constant(self, x):
        return x[0]

    def embed(self, s):
        return (s,) + (self.base.zero,) * (self.length - 1)

    def local_data(self):
        ld = self.base.local_data()
        if ld is None:
            return None
        return LocalData(ld.residue, lambda x: ld.reduce(x[0]), lambda r: self.embed(ld.lift(r)))

    def nil_reduction(self):
        if self.length == 1:
            return None
        return NilReduction(self.base, self.constant, self.embed)


@dataclass(frozen=True)
class TruncatedPowerSeries(_Truncated):
    """base[[x]] represented modulo x^order."""

    base: Ring
    order: int = 8

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise SchemaError(f"order must be a positive integer, got {self.order!r}")
        self._check_depth()

    @property
    def length(self):
        return self.order

    def __str__(self):
        return f"{self.base}[[x]]/(x^{self.order})"


@dataclass(frozen=True)
class QuotientXPow(_Truncated):
    """base[x]/(x^m)."""

    base: Ring
    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise SchemaError(f"m must be a positive integer, got {self.m!r}")
        self._check_depth()

    @property
    def length(self):
        return self.m

    def __str__(self):
        return f"{self.base}[x]/(x^{self.m})"


@dataclass(frozen=True)
class GroupRingC2(_Extension):
    """base[G] for G = {1, g}, g^2 = 1."""

    base: Ring

    def __post_init__(self):
        self._check_depth()

    @property
    def zero(self):
        return (self.base.zero, self.base.zero)

    @property
    def one(self):
        return (self.base.one, self.base.zero)

    def add(self, x, y):
        B = self.base
        return (B.add(x[0], y[0]), B.add(x[1], y[1]))

    def neg(self, x):
        return (self.base.neg(x[0]), self.base.neg(x[1]))

    def mul(self, x, y):
        B = self.base
        a, b = x
        c, d = y
        return (B.add(B.mul(a, c), B.mul(b, d)), B.add(B.mul(a, d), B.mul(b, c)))

    def inv(self, x):
        # multiplication by a+bg has matrix [[a, b], [b, a]]
        B = self.base
        a, b = x
        d = B.inv(B.sub(B.mul(a, a), B.mul(b, b)))
        if d is None:
            return None
        return (B.mul(a, d), B.neg(B.mul(b, d)))

    def augment(self, x):
        """The ring map a + bg -> a + b (evaluation at g = 1)."""
        return self.base.add(x[0], x[1])

    def embed(self, s):
        return (s, self.base.zero)

    def from_int(self, k):
        return (self.base.from_int(k), self.base.zero)

    def contains(self, x):
        return isinstance(x, tuple) and len(x) == 2 and all(self.base.contains(c) for c in x)

    @property
    def cardinality(self):
        c = self.base.cardinality
        return None if c is None else c * c

    def elements(self):
        return itertools.product(list(self.base.elements()), repeat=2)

    def format(self, x):
        return _format_terms(self.base, x, ("", "g"))

    def local_data(self):
        ld = self.base.local_data()
        if ld is None or ld.residue.characteristic != 2:
            return None
        return LocalData(ld.residue, lambda x: ld.reduce(self.augment(x)), lambda r: self.embed(ld.lift(r)))

    def nil_reduction(self):
        # the augmentation ideal squares to zero only in characteristic 2
        if self.base.characteristic != 2:
            return None
        return NilReduction(self.base, self.augment, self.embed)

    def __str__(self):
        return f"{self.base}[C2]"
