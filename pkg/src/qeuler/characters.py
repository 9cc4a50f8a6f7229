"""Dirichlet characters of odd modulus with exact cyclotomic values.

The unit group mod d (d odd) is the direct product of the cyclic unit groups
of the odd prime powers dividing d, each generated by its smallest primitive
root.  A character is an exponent tuple against those generators; values live
in Q(zeta_m) where m is the character's order, so equality and linear algebra
over characters are exact.
"""
from __future__ import annotations

import threading
from itertools import product
from math import gcd, lcm

from .cyclotomic import CycElem
from .errors import EvenModulus
from .numtheory import crt_pair, divisors, factorize, phi, primitive_root


class UnitGroupStructure:
    """Cyclic decomposition of (Z/d)^* for odd d, with a full discrete-log table."""

    __slots__ = ("modulus", "generators", "orders", "dlog")

    def __init__(self, modulus: int, generators: tuple[int, ...], orders: tuple[int, ...],
                 dlog: dict[int, tuple[int, ...]]):
        self.modulus = modulus
        self.generators = generators
        self.orders = orders
        self.dlog = dlog


_unit_group_cache: dict[int, UnitGroupStructure] = {}
_cache_lock = threading.Lock()


def unit_group(d: int) -> UnitGroupStructure:
    """Unit group structure mod odd d >= 1 (memoized, write-once)."""
    if d < 1:
        raise ValueError("modulus must be >= 1")
    if d % 2 == 0:
        raise EvenModulus(f"modulus {d} is even")
    cached = _unit_group_cache.get(d)
    if cached is not None:
        return cached

    factors = sorted(factorize(d).items())
    generators: list[int] = []
    orders: list[int] = []
    for p, e in factors:
        pk = p**e
        g = primitive_root(pk)
        # lift to a generator of the p^e component: g mod p^e, 1 mod the rest
        rest = d // pk
        lifted = g if rest == 1 else crt_pair(g, pk, 1, rest)
        generators.append(lifted)
        orders.append(phi(pk))

    dlog: dict[int, tuple[int, ...]] = {}
    for exps in product(*(range(o) for o in orders)):
        u = 1
        for g, a in zip(generators, exps):
            u = u * pow(g, a, d) % d
        dlog[u % d] = exps
    if d == 1:
        dlog[0] = ()

    structure = UnitGroupStructure(d, tuple(generators), tuple(orders), dlog)
    with _cache_lock:
        return _unit_group_cache.setdefault(d, structure)


class DirichletCharacter:
    """Character mod odd d, identified by its exponent tuple.

    Values are CycElem of order ``value_order`` (the multiplicative order of
    the character, which is the least m with all values in Q(zeta_m)).
    The modulus-1 character is identically 1, including at 0, so the d = 1
    degenerate cases of the attached polynomial identities reduce to the
    classical generating function.
    """

    __slots__ = ("modulus", "exponents", "order", "value_order", "_values")

    def __init__(self, modulus: int, exponents: tuple[int, ...]):
        group = unit_group(modulus)
        exps = tuple(int(e) for e in exponents)
        if len(exps) != len(group.orders):
            raise ValueError("exponent tuple length does not match the unit group")
        if any(not 0 <= e < o for e, o in zip(exps, group.orders)):
            raise ValueError("exponents out of range")
        self.modulus = modulus
        self.exponents = exps
        self.order = lcm(1, *(o // gcd(o, e) for e, o in zip(exps, group.orders)))
        self.value_order = self.order
        self._values: tuple[CycElem, ...] | None = None

    @property
    def group(self) -> UnitGroupStructure:
        return unit_group(self.modulus)

    @property
    def index(self) -> int:
        """Position in the lexicographic enumeration of characters mod d."""
        rank = 0
        for e, o in zip(self.exponents, self.group.orders):
            rank = rank * o + e
        return rank

    @property
    def label(self) -> str:
        return f"{self.modulus}.{self.index}"

    @property
    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    def values(self) -> tuple[CycElem, ...]:
        if self._values is None:
            d, m = self.modulus, self.value_order
            group = self.group
            table = []
            for a in range(max(d, 1)):
                exps = group.dlog.get(a % d if d > 1 else 0)
                if d > 1 and (exps is None):
                    table.append(CycElem.zero(m))
                    continue
                if d == 1:
                    exps = ()
                k = 0
                for e, aa, o in zip(self.exponents, exps, group.orders):
                    k += aa * (e * m // o)  # integral: o divides e*m by choice of m
                table.append(CycElem.zeta(m) ** (k % m) if k % m else CycElem.one(m))
            self._values = tuple(table)
        return self._values

    def __call__(self, a: int) -> CycElem:
        d = self.modulus
        if d == 1:
            return CycElem.one(1)
        return self.values()[a % d]

    def conductor(self) -> int:
        """Smallest f | d such that the character factors through the units mod f."""
        d = self.modulus
        for f in divisors(d):
            if all(self(a) == 1 for a in range(1, d + 1) if gcd(a, d) == 1 and a % f == 1 % f):
                return f
        return d

    def conjugate(self) -> DirichletCharacter:
        orders = self.group.orders
        return DirichletCharacter(self.modulus, tuple((-e) % o for e, o in zip(self.exponents, orders)))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DirichletCharacter):
            return (self.modulus, self.exponents) == (other.modulus, other.exponents)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.modulus, self.exponents))

    def __repr__(self) -> str:
        return f"DirichletCharacter(modulus={self.modulus}, exponents={self.exponents})"


def char_eval(chi: DirichletCharacter, a: int) -> CycElem:
    """Exact value chi(a) as a cyclotomic element."""
    return chi(a)


def enumerate_characters(d: int) -> list[DirichletCharacter]:
    """All phi(d) characters mod odd d, lexicographic by exponent tuple.

    Index 0 is the principal character.
    """
    group = unit_group(d)
    return [DirichletCharacter(d, exps) for exps in product(*(range(o) for o in group.orders))]


def character_by_index(d: int, index: int) -> DirichletCharacter:
    group = unit_group(d)
    total = phi(d)
    if not 0 <= index < total:
        raise ValueError(f"character index {index} out of range for modulus {d}")
    exps = []
    for o in reversed(group.orders):
        exps.append(index % o)
        index //= o
    return DirichletCharacter(d, tuple(reversed(exps)))


def principal_character(d: int) -> DirichletCharacter:
    return DirichletCharacter(d, tuple(0 for _ in unit_group(d).orders))


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor()
