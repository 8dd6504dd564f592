from fractions import Fraction
from itertools import product

import pytest

from oracles import sixj_one_zero, sixj_via_threej
from spinnet.errors import InvalidTriads
from spinnet.exactnum import Spin, SqrtRational
from spinnet.wigner import (
    SixJ,
    TRIAD_SLOTS,
    Triad,
    sixj_admissible_x,
    sixj_dimension_weight,
    sixj_or_zero,
    sixj_value,
    sixj_value_twice,
    triad_valid,
    triad_valid_twice,
)


def iter_valid_sixj(max_twice):
    for t in product(range(max_twice + 1), repeat=6):
        if all(triad_valid_twice(t[i], t[j], t[k])
               for i, j, k in TRIAD_SLOTS):
            yield t


class TestTriads:
    @pytest.mark.parametrize("triple,ok", [
        ((0, 0, 0), True),
        ((1, 1, 2), True),     # (1/2, 1/2, 1)
        ((1, 1, 1), False),    # half-integer perimeter
        ((2, 2, 6), False),    # triangle violated
        ((3, 2, 1), True),
    ])
    def test_examples(self, triple, ok):
        assert triad_valid_twice(*triple) is ok
        assert triad_valid(*(Spin(t) for t in triple)) is ok

    def test_triad_type_unordered(self):
        t1 = Triad(Spin(1), Spin(2), Spin(3))
        t2 = Triad(Spin(3), Spin(1), Spin(2))
        assert t1 == t2 and hash(t1) == hash(t2)

    def test_triad_type_rejects(self):
        with pytest.raises(InvalidTriads):
            Triad(Spin(1), Spin(1), Spin(1))


class TestAdmissibleX:
    def test_equal_integers(self):
        xs = sixj_admissible_x(Spin(2), Spin(2), Spin(2), Spin(2))
        assert [x.twice for x in xs] == [0, 2, 4]

    def test_equal_halves(self):
        xs = sixj_admissible_x(Spin(1), Spin(1), Spin(1), Spin(1))
        assert [x.twice for x in xs] == [0, 2]

    def test_mixed(self):
        # brute-force oracle over the triangle rule
        a, b, c, d = Spin(4), Spin(2), Spin(3), Spin(1)
        brute = [t for t in range(0, 9)
                 if triad_valid_twice(4, 2, t) and triad_valid_twice(3, 1, t)]
        assert [x.twice for x in sixj_admissible_x(a, b, c, d)] == brute == [2, 4]

    def test_parity_mismatch_empty(self):
        assert sixj_admissible_x(Spin(1), Spin(0), Spin(0), Spin(0)) == []


def _sq(t):
    return SixJ.from_twice(t)


class TestSixJValue:
    def test_all_zero(self):
        assert sixj_value(_sq((0,) * 6)) == SqrtRational(1)

    def test_regular_unit(self):
        # independently pinned by the 3j-contraction oracle
        v = sixj_value(_sq((2,) * 6))
        assert v == SqrtRational(Fraction(1, 6))
        assert v == sixj_via_threej((2,) * 6)

    def test_one_zero_entry_closed_form(self):
        # {a b c; 0 c b} for (a, b, c) = (1, 1, 1)
        v = sixj_value(_sq((2, 2, 2, 0, 2, 2)))
        assert v == SqrtRational(Fraction(-1, 3))
        assert v == sixj_one_zero(2, 2, 2)

    def test_irrational_value(self):
        assert sixj_value(_sq((4, 4, 4, 2, 2, 2))) == \
            SqrtRational(Fraction(1, 30), 21)

    def test_invalid_triads_raise_not_zero(self):
        with pytest.raises(InvalidTriads):
            SixJ.from_twice((1, 1, 1, 1, 1, 1))
        with pytest.raises(InvalidTriads):
            sixj_value_twice((2, 0, 0, 0, 0, 0))

    def test_or_zero_wrapper(self):
        assert sixj_or_zero(*(Spin(v) for v in (2, 0, 0, 0, 0, 0))) \
            == SqrtRational(0)
        assert sixj_or_zero(*(Spin(v) for v in (2,) * 6)) \
            == SqrtRational(Fraction(1, 6))

    def test_classical_symmetries_exhaustive_twice_5(self):
        from spinnet.symmetry import classical_group
        group = classical_group()
        for t in iter_valid_sixj(5):
            base = sixj_value_twice(t)
            for el in group:
                assert sixj_value_twice(el.apply_twice(t)) == base

    def test_radicand_is_triangle_square_free_part(self):
        from oracles import _triangle_sq
        for t in iter_valid_sixj(4):
            v = sixj_value_twice(t)
            if v.is_zero():
                continue
            ta, tb, tx, tc, td, ty = t
            prod = (_triangle_sq(ta, tb, tx) * _triangle_sq(ta, td, ty)
                    * _triangle_sq(tc, tb, ty) * _triangle_sq(tc, td, tx))
            assert v.radicand == SqrtRational.sqrt(prod).radicand


class TestDimensionWeight:
    @pytest.mark.parametrize("twice,weight", [(0, 1), (1, 2), (6, 7)])
    def test_values(self, twice, weight):
        w = sixj_dimension_weight(Spin(twice))
        assert w == Fraction(weight)
        assert isinstance(w, Fraction)


class TestKernelParity:
    def test_backends_agree(self):
        from spinnet import _racah_py
        try:
            from spinnet import _racah_c
        except ImportError:
            pytest.skip("compiled kernel not built")
        for t in iter_valid_sixj(5):
            assert _racah_py.sixj_raw(*t) == _racah_c.sixj_raw(*t)
