"""Exact arithmetic in GF(p^s) with its subfield tower.

Elements live in a single ambient field GF(p^s); subfields GF(p^e) for e | s
are modelled as the fixed sets of the p^e-power map.  The polynomial-basis
coefficient vector is the source of truth; discrete-log tables are a cache
built (and checked) at construction time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Optional, Sequence

MAX_FIELD_ORDER = 2**20


class FieldError(ValueError):
    """Invalid field construction or operand."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_mul_mod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int, s: int) -> tuple:
    """Multiply two coefficient vectors mod (modulus, p).

    ``modulus`` holds the s low-order coefficients of a monic degree-s polynomial.
    """
    res = [0] * (2 * s)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(2 * s - 1, s - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(s):
                if modulus[j]:
                    res[i - s + j] = (res[i - s + j] - c * modulus[j]) % p
    return tuple(res[:s])


def _mul_by_x(cur: Sequence[int], modulus: Sequence[int], p: int, s: int) -> tuple:
    top = cur[s - 1]
    shifted = [0] + list(cur[: s - 1])
    if top:
        for j in range(s):
            if modulus[j]:
                shifted[j] = (shifted[j] - top * modulus[j]) % p
    return tuple(shifted)


def _root_power_table(modulus: Sequence[int], p: int, s: int) -> Optional[list]:
    """Successive powers of the residue x mod (modulus, p), or None.

    Returns [x^0, x^1, ..., x^(p^s-2)] as coefficient tuples when x has
    multiplicative order exactly p^s - 1 (which certifies the polynomial is
    both irreducible and primitive); otherwise None.
    """
    q = p**s
    one = (1,) + (0,) * (s - 1)
    zero = (0,) * s
    if s == 1:
        root = (-modulus[0]) % p
        if root == 0:
            return None
        cur = 1
        table = []
        for _ in range(q - 1):
            table.append((cur,))
            cur = cur * root % p
        if cur != 1 or len(set(table)) != q - 1:
            return None
        return table
    cur = one
    table = []
    for _ in range(q - 1):
        table.append(cur)
        cur = _mul_by_x(cur, modulus, p, s)
        if cur == zero:
            return None
    if cur != one or len(set(table)) != q - 1:
        return None
    return table


def _prime_factors(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_pow(base: Sequence[int], exponent: int, modulus: Sequence[int], p: int, s: int) -> tuple:
    result = (1,) + (0,) * (s - 1)
    b = tuple(base)
    while exponent:
        if exponent & 1:
            result = _poly_mul_mod(result, b, modulus, p, s)
        b = _poly_mul_mod(b, b, modulus, p, s)
        exponent >>= 1
    return result


def _poly_gcd_is_one(a: list, b: list, p: int) -> bool:
    """gcd over GF(p)[x] of two coefficient lists (low degree first)."""

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            coef = a[-1] * inv % p
            off = len(a) - len(b)
            for i, bi in enumerate(b):
                a[off + i] = (a[off + i] - coef * bi) % p
            trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) == 1


def _is_primitive_poly(low: Sequence[int], p: int, s: int) -> bool:
    """Fast screen: irreducibility by distinct-degree gcds, then root order.

    The winning candidate is still verified exhaustively when the discrete-log
    table is built.
    """
    if s == 1:
        root = (-low[0]) % p
        if root == 0:
            return False
        order_target = p - 1
        return all(pow(root, order_target // r, p) != 1 for r in _prime_factors(order_target)) \
            if order_target > 1 else True
    if low[0] == 0:
        return False  # divisible by x
    x = (0, 1) + (0,) * (s - 2)
    one = (1,) + (0,) * (s - 1)
    # irreducible iff x^(p^s) = x mod f and gcd(x^(p^(s/r)) - x, f) = 1 for prime r | s
    if _poly_pow(x, p**s, low, p, s) != x:
        return False
    full = list(low) + [1]
    for r in _prime_factors(s):
        xp = _poly_pow(x, p ** (s // r), low, p, s)
        diff = [(a - b) % p for a, b in zip(xp, x)]
        if not _poly_gcd_is_one(diff, full, p):
            return False
    # primitive iff the root's order is exactly p^s - 1
    order_target = p**s - 1
    for r in _prime_factors(order_target):
        if _poly_pow(x, order_target // r, low, p, s) == one:
            return False
    return True


def _canonical_modulus(p: int, s: int, skip: int = 0) -> tuple:
    """Lexicographically smallest monic primitive polynomial of degree s.

    Coefficients are compared low-degree first.  ``skip`` selects later
    polynomials in the same order (used for representation-independence checks).
    """
    count = 0
    for coeffs in itertools.product(range(p), repeat=s):
        if _is_primitive_poly(coeffs, p, s):
            if count == skip:
                return tuple(coeffs)
            count += 1
    raise FieldError(f"no primitive polynomial of degree {s} over GF({p})")


class FieldElement:
    """Element of GF(p^s), identified by its index in the ambient field."""

    __slots__ = ("field", "idx")

    def __init__(self, field: "Field", idx: int):
        self.field = field
        self.idx = idx

    @property
    def coeffs(self) -> tuple:
        """Polynomial-basis coefficient vector, low degree first."""
        return self.field._vec[self.idx]

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field is not self.field:
            raise FieldError("operands belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        f = self.field
        a, b = f._vec[self.idx], f._vec[other.idx]
        return FieldElement(f, f._idx[tuple((x + y) % f.p for x, y in zip(a, b))])

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        f = self.field
        a, b = f._vec[self.idx], f._vec[other.idx]
        return FieldElement(f, f._idx[tuple((x - y) % f.p for x, y in zip(a, b))])

    def __neg__(self) -> "FieldElement":
        f = self.field
        return FieldElement(f, f._idx[tuple((-x) % f.p for x in f._vec[self.idx])])

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        f = self.field
        if self.idx == 0 or other.idx == 0:
            return f.zero
        d = (f.log[self.idx] + f.log[other.idx]) % (f.q - 1)
        return FieldElement(f, f.exp[d])

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self * other.inverse()

    def inverse(self) -> "FieldElement":
        f = self.field
        if self.idx == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return FieldElement(f, f.exp[(-f.log[self.idx]) % (f.q - 1)])

    def __pow__(self, n: int) -> "FieldElement":
        f = self.field
        if self.idx == 0:
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return f.one if n == 0 else f.zero
        return FieldElement(f, f.exp[(f.log[self.idx] * n) % (f.q - 1)])

    def dlog(self) -> int:
        """Discrete log with respect to the field generator."""
        f = self.field
        if self.idx == 0:
            raise ZeroDivisionError("discrete log of zero")
        return f.log[self.idx]

    def is_zero(self) -> bool:
        return self.idx == 0

    def in_subfield(self, e: int) -> bool:
        """True when the element lies in GF(p^e) (fixed by the p^e-power map)."""
        return (self ** (self.field.p**e)) == self

    def as_prime(self) -> int:
        """The residue for elements of the prime subfield GF(p)."""
        c = self.coeffs
        if any(c[1:]):
            raise FieldError("element is not in the prime subfield")
        return c[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.field is self.field
            and other.idx == self.idx
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.idx))

    def __repr__(self) -> str:
        return f"FieldElement{self.coeffs}"


@dataclass(frozen=True)
class Field:
    """GF(p^s) with a fixed primitive modulus and discrete-log tables."""

    p: int
    s: int
    modulus: tuple  # s+1 coefficients, low degree first, monic
    exp: list = dc_field(repr=False, default=None)  # dlog -> element index
    log: list = dc_field(repr=False, default=None)  # element index -> dlog (-1 for 0)
    _vec: list = dc_field(repr=False, default=None)  # element index -> coeff tuple
    _idx: dict = dc_field(repr=False, default=None)  # coeff tuple -> element index

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self._idx[(1,) + (0,) * (self.s - 1)])

    @property
    def generator(self) -> FieldElement:
        return FieldElement(self, self.exp[1 % (self.q - 1)] if self.q > 2 else self.exp[0])

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) != self.s:
            raise FieldError(f"expected {self.s} coefficients, got {len(coeffs)}")
        return FieldElement(self, self._idx[tuple(c % self.p for c in coeffs)])

    def from_index(self, idx: int) -> FieldElement:
        if not 0 <= idx < self.q:
            raise FieldError("element index out of range")
        return FieldElement(self, idx)

    def from_dlog(self, d: int) -> FieldElement:
        return FieldElement(self, self.exp[d % (self.q - 1)])

    def from_prime(self, r: int) -> FieldElement:
        return FieldElement(self, self._idx[(r % self.p,) + (0,) * (self.s - 1)])

    def elements(self) -> Iterator[FieldElement]:
        for i in range(self.q):
            yield FieldElement(self, i)

    def nonzero_elements(self) -> Iterator[FieldElement]:
        """Nonzero elements in increasing discrete-log order."""
        for d in range(self.q - 1):
            yield FieldElement(self, self.exp[d])

    def subfield_elements(self, e: int) -> list:
        """All elements of the subfield GF(p^e), zero first then dlog order."""
        if self.s % e:
            raise FieldError(f"{e} does not divide {self.s}")
        if e == self.s:
            return [self.zero] + list(self.nonzero_elements())
        step = (self.q - 1) // (self.p**e - 1)
        out = [self.zero]
        for d in range(0, self.q - 1, step):
            out.append(FieldElement(self, self.exp[d]))
        return out

    def to_json_dict(self) -> dict:
        return {"p": self.p, "s": self.s, "modulus": list(self.modulus)}

    def __repr__(self) -> str:
        return f"Field(p={self.p}, s={self.s}, modulus={list(self.modulus)})"


def make_field(p: int, s: int, modulus: Optional[Sequence[int]] = None) -> Field:
    """Construct GF(p^s).

    Without ``modulus`` the lexicographically smallest monic primitive
    polynomial is chosen deterministically.  A supplied modulus is accepted
    only if primitive (root of multiplicative order p^s - 1, checked by
    exhaustive powering, which also certifies irreducibility).
    """
    if not _is_prime(p):
        raise FieldError(f"{p} is not prime")
    if s < 1:
        raise FieldError("extension degree must be positive")
    q = p**s
    if q > MAX_FIELD_ORDER:
        raise FieldError(f"field order {q} exceeds cap {MAX_FIELD_ORDER}")

    if modulus is None:
        low = _canonical_modulus(p, s)
    else:
        coeffs = [c % p for c in modulus]
        if len(coeffs) == s + 1:
            if coeffs[-1] != 1:
                raise FieldError("modulus must be monic")
            coeffs = coeffs[:-1]
        if len(coeffs) != s:
            raise FieldError(f"modulus must have degree {s}")
        low = tuple(coeffs)

    table = _root_power_table(low, p, s)
    if table is None:
        raise FieldError("modulus is not primitive over GF(p)")

    vec = [None] * q
    idx_of = {}

    def encode(t: tuple) -> int:
        n = 0
        for c in reversed(t):
            n = n * p + c
        return n

    for i in range(q):
        t = []
        n = i
        for _ in range(s):
            t.append(n % p)
            n //= p
        vec[i] = tuple(t)
        idx_of[vec[i]] = i

    exp = [encode(t) for t in table]
    log = [-1] * q
    for d, i in enumerate(exp):
        log[i] = d

    return Field(p=p, s=s, modulus=low + (1,), exp=exp, log=log, _vec=vec, _idx=idx_of)


def second_modulus(p: int, s: int) -> tuple:
    """The next primitive polynomial after the canonical one, in the same order."""
    return _canonical_modulus(p, s, skip=1) + (1,)


def field_arithmetic(a: FieldElement, b: Optional[FieldElement], op: str):
    """Dispatch table over the element operators (artifact surface)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a**b if isinstance(b, int) else NotImplemented
    raise FieldError(f"unknown operation {op!r}")


def relative_trace(x: FieldElement, e: int, top: Optional[int] = None) -> FieldElement:
    """Trace from GF(p^top) onto GF(p^e): sum of x^(p^(e*i)) for i < top/e.

    ``top`` defaults to the ambient degree s; when smaller, x must already lie
    in GF(p^top).
    """
    f = x.field
    if top is None:
        top = f.s
    if f.s % top:
        raise FieldError(f"{top} does not divide ambient degree {f.s}")
    if top % e:
        raise FieldError(f"{e} does not divide {top}")
    if top != f.s and not x.in_subfield(top):
        raise FieldError(f"element is not in GF({f.p}^{top})")
    acc = f.zero
    for i in range(top // e):
        acc = acc + x ** (f.p ** (e * i))
    return acc


def norm_to_half(x: FieldElement) -> FieldElement:
    """x^(p^m + 1) from GF(p^2m) into GF(p^m); (p^m+1)-to-1 on nonzero inputs."""
    f = x.field
    if f.s % 2:
        raise FieldError("ambient field degree must be even")
    m = f.s // 2
    return x ** (f.p**m + 1)
