import pytest

from eulerclass.catalog import entries
from eulerclass.crystal import make_cryst, maps_onto_Z
from eulerclass.euler import (
    Characteristic,
    InvalidCharacteristicError,
    OrderResult,
    PreconditionError,
    euler_character,
    exact_order,
    fpf_group_shape_check,
    has_finite_order,
    has_finite_order_via_traces,
    lower_bound,
    order_divisor,
    upper_bound_p_part,
)
from eulerclass.fingroup import closure
from eulerclass.intmat import IntMatrix, det_one_minus, mul

R90 = IntMatrix.from_rows([[0, -1], [1, 0]])
R120 = IntMatrix.from_rows([[0, -1], [1, -1]])
M1 = IntMatrix.from_rows([[1, 0], [0, -1]])
M2 = IntMatrix.from_rows([[0, 1], [1, 0]])
I2 = IntMatrix.identity(2)

# companion matrix of 1 + X + X^2 + X^3 + X^4; generates C5 acting freely on Z^4
C5_COMPANION = IntMatrix.from_rows(
    [[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]
)

P4M = make_cryst(2, [R90, M2])


class TestCharacteristic:
    def test_zero_ok(self):
        assert Characteristic(0).p == 0

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_primes_ok(self, p):
        assert Characteristic(p).p == p

    @pytest.mark.parametrize("p", [1, 4, 6, 9, -2])
    def test_rejects_composites(self, p):
        with pytest.raises(InvalidCharacteristicError):
            Characteristic(p)


class TestEulerCharacter:
    def test_trivial_group(self):
        ch = euler_character(make_cryst(2, []))
        assert ch[I2] == 0

    def test_plus_minus_identity(self):
        ch = euler_character(make_cryst(2, [I2.neg()]))
        assert ch[I2] == 0
        assert ch[I2.neg()] == 4

    def test_c3(self):
        c = make_cryst(2, [R120])
        ch = euler_character(c)
        assert ch[R120] == 3
        assert ch[mul(R120, R120)] == 3

    def test_constant_on_conjugacy_classes(self):
        for a in P4M.point_group:
            ainv = next(b for b in P4M.point_group if mul(a, b) == I2)
            for g in P4M.point_group:
                conj = mul(mul(a, g), ainv)
                assert det_one_minus(conj) == det_one_minus(g)


class TestHasFiniteOrder:
    def test_p4m_at_two(self):
        assert has_finite_order(P4M, 2)

    def test_p4m_at_three(self):
        assert not has_finite_order(P4M, 3)

    def test_free_abelian_everywhere(self):
        c = make_cryst(2, [])
        for p in (0, 2, 3, 5):
            assert has_finite_order(c, p)

    def test_two_implementations_agree(self):
        for e in entries():
            c = make_cryst(e.rank, list(e.generators))
            for p in (0, 2, 3, 5):
                assert has_finite_order(c, p) == has_finite_order_via_traces(c, p)


class TestBounds:
    def test_p4m_lower_at_two(self):
        assert lower_bound(P4M, 2) == 4

    def test_p3_lower_at_three(self):
        assert lower_bound(make_cryst(2, [R120]), 3) == 3

    def test_reflection_only_trivial(self):
        assert lower_bound(make_cryst(2, [M1]), 2) == 1

    def test_p4m_upper_at_two(self):
        assert upper_bound_p_part(P4M, 2) == 8

    def test_p4m_upper_at_three(self):
        assert upper_bound_p_part(P4M, 3) == 1

    def test_d3_upper_at_three(self):
        assert upper_bound_p_part(make_cryst(2, [R120, M2]), 3) == 3

    def test_lower_divides_upper_when_finite(self):
        for e in entries():
            c = make_cryst(e.rank, list(e.generators))
            for p in (2, 3, 5):
                if has_finite_order(c, p):
                    assert upper_bound_p_part(c, p) % lower_bound(c, p) == 0


class TestExactOrder:
    def test_p4m_at_two(self):
        r = exact_order(P4M, 2)
        assert r.describe() == "Known(4)"
        assert r.provenance[-1] == "sec-5.3.3-p4m"

    def test_p3m1_at_three(self):
        r = exact_order(make_cryst(2, [R120, IntMatrix.from_rows([[0, -1], [-1, 0]])]), 3)
        assert r.describe() == "Known(3)"
        assert r.provenance[-1] == "sec-5.3.3-p3m"

    def test_pmm_at_two(self):
        r = exact_order(make_cryst(2, [M1, I2.neg()]), 2)
        assert r.describe() == "Known(2)"
        assert r.provenance[-1] == "sec-5.3.3-klein"

    def test_p4_at_two(self):
        r = exact_order(make_cryst(2, [R90]), 2)
        assert r.describe() == "Known(4)"

    def test_pm_everywhere(self):
        c = make_cryst(2, [M1])
        for p in (0, 2, 3, 5):
            assert exact_order(c, p).kind == "trivial"

    def test_p6m_infinite(self):
        c = make_cryst(2, [IntMatrix.from_rows([[1, -1], [1, 0]]), M2])
        for p in (0, 2, 3, 5):
            r = exact_order(c, p)
            assert r.kind == "infinite"
            assert r.provenance == ("thm-a",)

    def test_rank4_c5_at_five(self):
        c = make_cryst(4, [C5_COMPANION])
        assert det_one_minus(C5_COMPANION) == 5  # value of the 5th cyclotomic at 1
        r = exact_order(c, 5)
        assert r.describe() == "Known(5)"
        assert r.provenance[-1] == "sec-5.3.1"

    def test_rank4_c5_elsewhere(self):
        c = make_cryst(4, [C5_COMPANION])
        for p in (0, 2, 3):
            assert exact_order(c, p).kind == "infinite"

    def test_trivial_never_contradicts_transfer_rule(self):
        for e in entries():
            c = make_cryst(e.rank, list(e.generators))
            if maps_onto_Z(c):
                for p in (0, 2, 3, 5):
                    assert exact_order(c, p).kind == "trivial"

    def test_known_orders_sit_between_bounds(self):
        for e in entries():
            c = make_cryst(e.rank, list(e.generators))
            for p in (2, 3, 5):
                r = exact_order(c, p)
                if r.kind == "known":
                    lo = lower_bound(c, p)
                    assert r.order % lo == 0
                    assert r.order <= c.point_group.order

    def test_known_one_collapses_to_trivial(self):
        assert OrderResult.known(1, ("x",)).kind == "trivial"

    # Klein four in rank 3: every nontrivial element fixes a coordinate axis,
    # but no vector is fixed by all three, so no classification rule applies.
    _A3 = IntMatrix.from_rows([[-1, 0, 0], [0, -1, 0], [0, 0, 1]])
    _B3 = IntMatrix.from_rows([[1, 0, 0], [0, -1, 0], [0, 0, -1]])

    def test_bounded_fallback_at_p2_rank3(self):
        c = make_cryst(3, [self._A3, self._B3])
        r = exact_order(c, 2)
        assert r.kind == "bounded"
        assert (r.lower, r.upper_p_part) == (1, 4)
        assert "bounds-only" in r.provenance
        assert "p-part bound only" in r.provenance

    def test_bounded_fallback_at_p0_rank3(self):
        c = make_cryst(3, [self._A3, self._B3])
        r = exact_order(c, 0)
        assert r.kind == "bounded"
        assert (r.lower, r.upper_p_part) == (1, 1)


class TestFpfShapeCheck:
    def test_c4_is_cyclic(self):
        assert fpf_group_shape_check(closure([R90]), 2)

    def test_c3_is_cyclic(self):
        assert fpf_group_shape_check(closure([R120]), 3)

    def test_d4_violates_precondition(self):
        with pytest.raises(PreconditionError):
            fpf_group_shape_check(P4M.point_group, 2)

    def test_wrong_prime_violates_precondition(self):
        with pytest.raises(PreconditionError):
            fpf_group_shape_check(closure([R120]), 2)


class TestOrderDivisor:
    @pytest.mark.parametrize(
        "delta,dim,expected",
        [(8, 1, 8), (8, 2, 4), (8, 3, 8), (9, 3, 3), (6, 4, 3)],
    )
    def test_values(self, delta, dim, expected):
        assert order_divisor(delta, dim) == expected

    def test_matches_lower_bound_on_fpf_cases(self):
        for gens, p in (([I2.neg()], 2), ([R90], 2), ([R120], 3)):
            c = make_cryst(2, gens)
            assert order_divisor(c.point_group.order, 1) == lower_bound(c, p)
