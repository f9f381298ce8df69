"""Order of the Euler class of a split crystallographic group.

The finiteness criterion: the class has finite order iff det(1 - x) = 0 for
every p-regular point-group element x. On top of that sit a lower bound from
fixed-point-free p-subgroups, an upper bound on the p-part from Sylow orders,
and a decision tree that returns the exact order in every classified case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .crystal import CrystGroup, fixed_sublattice
from .fingroup import (
    PointGroup,
    all_subgroups,
    element_order,
    p_regular_elements,
    p_subgroups,
)
from .intmat import IntMatrix, det, det_one_minus, det_one_minus_via_traces


class InvalidCharacteristicError(ValueError):
    pass


class PreconditionError(ValueError):
    """A diagnostic was called outside its stated hypotheses."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Characteristic:
    """A field characteristic: 0 or a prime."""

    p: int

    def __post_init__(self) -> None:
        if self.p != 0 and not is_prime(self.p):
            raise InvalidCharacteristicError(f"characteristic must be 0 or prime, got {self.p}")

    @property
    def positive(self) -> bool:
        return self.p > 0


def _char(char: "Characteristic | int") -> Characteristic:
    return char if isinstance(char, Characteristic) else Characteristic(char)


@dataclass(frozen=True)
class OrderResult:
    """Verdict on the order of the Euler class, with the rules that decided it.

    kind is one of "trivial", "known", "infinite", "bounded". For "known",
    `order` holds the exact order (> 1; order 1 is reported as trivial).
    For "bounded", `lower` divides the true order and `upper_p_part` bounds
    its p-part only.
    """

    kind: str
    order: int | None = None
    lower: int | None = None
    upper_p_part: int | None = None
    provenance: tuple[str, ...] = ()

    @staticmethod
    def trivial(provenance: tuple[str, ...]) -> "OrderResult":
        return OrderResult("trivial", provenance=provenance)

    @staticmethod
    def known(m: int, provenance: tuple[str, ...]) -> "OrderResult":
        if m == 1:
            return OrderResult.trivial(provenance)
        return OrderResult("known", order=m, provenance=provenance)

    @staticmethod
    def infinite(provenance: tuple[str, ...]) -> "OrderResult":
        return OrderResult("infinite", provenance=provenance)

    @staticmethod
    def bounded(lower: int, upper_p_part: int, provenance: tuple[str, ...]) -> "OrderResult":
        return OrderResult("bounded", lower=lower, upper_p_part=upper_p_part, provenance=provenance)

    def same_verdict(self, other: "OrderResult") -> bool:
        return (self.kind, self.order, self.lower, self.upper_p_part) == (
            other.kind,
            other.order,
            other.lower,
            other.upper_p_part,
        )

    def describe(self) -> str:
        if self.kind == "trivial":
            return "Trivial"
        if self.kind == "known":
            return f"Known({self.order})"
        if self.kind == "infinite":
            return "Infinite"
        return f"Bounded({self.lower}, {self.upper_p_part})"


@dataclass(frozen=True)
class EulerCharacter:
    """The character x -> det(1 - x) on the point group."""

    values: dict[IntMatrix, int] = field(hash=False)

    def __getitem__(self, g: IntMatrix) -> int:
        return self.values[g]


def euler_character(cryst: CrystGroup) -> EulerCharacter:
    return EulerCharacter({g: det_one_minus(g) for g in cryst.point_group})


def has_finite_order(cryst: CrystGroup, char: Characteristic | int) -> bool:
    """Finiteness of the Euler class: det(1 - x) = 0 on all p-regular x."""
    p = _char(char).p
    return all(det_one_minus(x) == 0 for x in p_regular_elements(cryst.point_group, p))


def has_finite_order_via_traces(cryst: CrystGroup, char: Characteristic | int) -> bool:
    """Same test through the alternating exterior-trace character; independent
    code path used as an oracle for has_finite_order."""
    p = _char(char).p
    return all(
        det_one_minus_via_traces(x) == 0
        for x in p_regular_elements(cryst.point_group, p)
    )


def _acts_fixed_point_freely(elements) -> bool:
    return all(g.is_identity() or det_one_minus(g) != 0 for g in elements)


def lower_bound(cryst: CrystGroup, p: int) -> int:
    """Largest order of a p-subgroup acting fixed-point-freely; divides the
    order of the Euler class whenever that order is finite."""
    if not is_prime(p):
        raise InvalidCharacteristicError(f"lower_bound needs a prime, got {p}")
    best = 1
    for h in p_subgroups(cryst.point_group, p):
        if _acts_fixed_point_freely(h.elements):
            best = max(best, h.order)
    return best


def upper_bound_p_part(cryst: CrystGroup, p: int) -> int:
    """Largest p-subgroup order (the p-part of |G|); bounds the p-part of the
    order of the Euler class. Says nothing about other primes."""
    if not is_prime(p):
        raise InvalidCharacteristicError(f"upper_bound_p_part needs a prime, got {p}")
    return max(h.order for h in p_subgroups(cryst.point_group, p))


def order_divisor(delta: int, dim: int) -> int:
    """delta / gcd(delta, dim): the guaranteed divisor of the order of a
    dim-dimensional class when projectives have dimension-gcd delta."""
    return delta // gcd(delta, dim)


def _is_p_group(group: PointGroup, p: int) -> bool:
    m = group.order
    while m % p == 0:
        m //= p
    return m == 1


def _sl_part(group: PointGroup) -> list[IntMatrix]:
    return [g for g in group.elements if det(g) == 1]


def _order_det_multiset(group: PointGroup) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((element_order(g), det(g)) for g in group.elements))


_P4M_FINGERPRINT = tuple(sorted([(1, 1), (2, 1), (4, 1), (4, 1)] + [(2, -1)] * 4))


def exact_order(cryst: CrystGroup, char: Characteristic | int) -> OrderResult:
    """Decision tree for the order of the Euler class.

    Every return carries provenance: the ordered list of rule tags that fired.
    Rules cover finiteness, the transfer triviality rule, fixed-point-free
    p-groups, prime-order point groups, and the complete rank-2 catalog; the
    fallback reports divisor / p-part bounds only.
    """
    p = _char(char).p
    g = cryst.point_group
    prov: list[str] = []

    if not has_finite_order(cryst, p):
        prov.append("thm-a")
        return OrderResult.infinite(tuple(prov))

    if not fixed_sublattice(cryst).is_trivial():
        prov.append("sec-5.1")
        return OrderResult.trivial(tuple(prov))

    if g.is_trivial():
        prov.append("sec-5.1")
        return OrderResult.trivial(tuple(prov))

    if p > 0 and _is_p_group(g, p) and _acts_fixed_point_freely(g.elements):
        prov.append("sec-5.3.1")
        return OrderResult.known(g.order, tuple(prov))

    if is_prime(g.order) and p == g.order:
        # fixed-point-free (triviality was ruled out above), |G| = p
        prov.append("sec-5.3.2")
        return OrderResult.known(g.order, tuple(prov))

    if cryst.rank == 2:
        sl = _sl_part(g)
        if len(sl) == 1:
            prov.append("sec-5.3.3-trivial")
            return OrderResult.trivial(tuple(prov))
        if p > 0 and len(sl) == g.order and _is_p_group(g, p):
            prov.append("sec-5.3.3-sl-pgroup")
            return OrderResult.known(g.order, tuple(prov))
        minus_id = IntMatrix.identity(2).neg()
        if (
            p == 2
            and g.order == 4
            and minus_id in g
            and all(element_order(x) <= 2 for x in g.elements)
            and any(det(x) == -1 and element_order(x) == 2 for x in g.elements)
        ):
            prov.append("sec-5.3.3-klein")
            return OrderResult.known(2, tuple(prov))
        if p == 2 and g.order == 8 and len(sl) == 4 and _order_det_multiset(g) == _P4M_FINGERPRINT:
            prov.append("sec-5.3.3-p4m")
            return OrderResult.known(4, tuple(prov))
        if (
            p == 3
            and g.order == 6
            and len(sl) == 3
            and sum(1 for x in g.elements if det(x) == -1 and element_order(x) == 2) == 3
        ):
            prov.append("sec-5.3.3-p3m")
            return OrderResult.known(3, tuple(prov))

    if p > 0:
        prov.extend(["bounds-only", "p-part bound only"])
        return OrderResult.bounded(lower_bound(cryst, p), upper_bound_p_part(cryst, p), tuple(prov))
    prov.extend(["bounds-only", "order finite, exact value outside the classification"])
    return OrderResult.bounded(1, 1, tuple(prov))


def fpf_group_shape_check(group: PointGroup, p: int) -> bool:
    """Sanity diagnostic: a p-group acting fixed-point-freely must be cyclic
    or a generalized quaternion 2-group. Raises PreconditionError when the
    input is not a fixed-point-free p-group."""
    if not is_prime(p):
        raise InvalidCharacteristicError(f"fpf_group_shape_check needs a prime, got {p}")
    if not _is_p_group(group, p):
        raise PreconditionError(f"group of order {group.order} is not a {p}-group")
    if not _acts_fixed_point_freely(group.elements):
        raise PreconditionError("group does not act fixed-point-freely")
    if any(element_order(x) == group.order for x in group.elements):
        return True  # cyclic
    if p != 2 or group.order < 8:
        return False
    involutions = [x for x in group.elements if element_order(x) == 2]
    has_cyclic_half = any(
        h.order == group.order // 2 and any(element_order(x) == h.order for x in h.elements)
        for h in all_subgroups(group)
    )
    return len(involutions) == 1 and has_cyclic_half
