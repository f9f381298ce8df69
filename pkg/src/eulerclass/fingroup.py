"""Finite subgroups of GL_n(Z): closure, element orders, p-parts, subgroups."""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import DimensionMismatchError, IntMatrix, mul

DEFAULT_CAP = 20000


class NotFiniteError(RuntimeError):
    """Raised when a closure or power chain exceeds its cap."""


class NotUnimodularError(ValueError):
    pass


@dataclass(frozen=True)
class PointGroup:
    """A finite multiplicative group of unimodular integer matrices.

    `elements` is sorted by entry tuples so equal groups compare equal;
    `generators` are indices into `elements`.
    """

    n: int
    elements: tuple[IntMatrix, ...]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> IntMatrix:
        return IntMatrix.identity(self.n)

    def __contains__(self, m: IntMatrix) -> bool:
        return m in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def element_set(self) -> frozenset[IntMatrix]:
        return frozenset(self.elements)


def _check_generators(generators: list[IntMatrix]) -> int:
    if not generators:
        return 0
    n = generators[0].n
    for g in generators:
        if g.n != n:
            raise DimensionMismatchError("generators have mixed dimensions")
        if not g.is_unimodular():
            raise NotUnimodularError(f"generator has |det| != 1: {g.entries}")
    return n


def _close(seed: list[IntMatrix], gens: list[IntMatrix], cap: int) -> set[IntMatrix]:
    elems = set(seed)
    frontier = list(seed)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mul(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
                    if len(elems) > cap:
                        raise NotFiniteError(
                            f"closure exceeded cap {cap}; generators do not "
                            "generate a finite group (or raise the cap)"
                        )
        frontier = nxt
    return elems


def closure(generators: list[IntMatrix], cap: int = DEFAULT_CAP, n: int | None = None) -> PointGroup:
    """Breadth-first closure of unimodular generators into a PointGroup.

    For an empty generator list, `n` gives the ambient dimension (default 1).
    A finite set closed under multiplication and containing the identity is
    automatically closed under inverse.
    """
    dim = _check_generators(generators) or n or 1
    ident = IntMatrix.identity(dim)
    elems = _close([ident], generators, cap)
    ordered = tuple(sorted(elems, key=lambda m: m.entries))
    index = {m: i for i, m in enumerate(ordered)}
    return PointGroup(dim, ordered, tuple(index[g] for g in generators))


def element_order(g: IntMatrix, cap: int = DEFAULT_CAP) -> int:
    if not g.is_unimodular():
        raise NotUnimodularError(f"element has |det| != 1: {g.entries}")
    ident = IntMatrix.identity(g.n)
    acc = g
    for m in range(1, cap + 1):
        if acc == ident:
            return m
        acc = mul(acc, g)
    raise NotFiniteError(f"no order found up to cap {cap}")


def power(g: IntMatrix, e: int) -> IntMatrix:
    acc = IntMatrix.identity(g.n)
    base = g
    while e > 0:
        if e & 1:
            acc = mul(acc, base)
        base = mul(base, base)
        e >>= 1
    return acc


@dataclass(frozen=True)
class PDecomposition:
    """g = g_p * g_p' with commuting factors of p-power and p'-order."""

    g_p: IntMatrix
    g_p_prime: IntMatrix


def p_decompose(g: IntMatrix, p: int) -> PDecomposition:
    """Split a finite-order g into its p-part and p'-part.

    Both factors are powers of g, hence commute; exponents come from the
    CRT decomposition of Z/order(g).
    """
    e = element_order(g)
    a = 0
    m = e
    while m % p == 0:
        m //= p
        a += 1
    pa = p**a
    ident = IntMatrix.identity(g.n)
    if a == 0:
        return PDecomposition(ident, g)
    if m == 1:
        return PDecomposition(g, ident)
    g_p = power(g, m * pow(m, -1, pa))
    g_pp = power(g, pa * pow(pa, -1, m))
    return PDecomposition(g_p, g_pp)


def p_regular_elements(group: PointGroup, p: int) -> list[IntMatrix]:
    """Elements of order coprime to p; for p = 0, every element (all are torsion)."""
    if p == 0:
        return list(group.elements)
    return [g for g in group.elements if element_order(g) % p != 0]


def all_subgroups(group: PointGroup) -> list[PointGroup]:
    """All subgroups, by repeatedly extending known subgroups by one element.

    Complete: any subgroup arises along a chain of one-generator extensions
    starting from the trivial group. Deduplicated by element set.
    """
    trivial = closure([], n=group.n)
    seen: dict[frozenset[IntMatrix], PointGroup] = {trivial.element_set(): trivial}
    worklist = [trivial]
    cap = group.order
    while worklist:
        h = worklist.pop()
        hset = h.element_set()
        for g in group.elements:
            if g in hset:
                continue
            kset = frozenset(_close([group.identity], list(hset) + [g], cap))
            if kset not in seen:
                ordered = tuple(sorted(kset, key=lambda m: m.entries))
                k = PointGroup(group.n, ordered, ())
                seen[kset] = k
                worklist.append(k)
    subs = sorted(seen.values(), key=lambda s: (s.order, [m.entries for m in s.elements]))
    return subs


def _is_prime_power(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def p_subgroups(group: PointGroup, p: int) -> list[PointGroup]:
    """Subgroups of p-power order (the trivial group counts, order p^0)."""
    return [h for h in all_subgroups(group) if _is_prime_power(h.order, p)]
