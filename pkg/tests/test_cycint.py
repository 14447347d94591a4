import cmath

import pytest
from hypothesis import given
from hypothesis import strategies as st

from denniston.cycint import CycInt


def to_complex(z):
    xi = cmath.exp(2j * cmath.pi / z.p)
    return sum(c * xi**j for j, c in enumerate(z.coeffs))


def test_canonical_form():
    z = CycInt(3, [5, 2, 2])
    assert z.coeffs == (3, 0, 0)
    assert z.is_rational() and z.to_int() == 3
    assert CycInt(2, [1, 4]) == -3


def test_non_rational():
    z = CycInt(5, [0, 1, 0, 0, 1])
    assert not z.is_rational()
    with pytest.raises(ValueError):
        z.to_int()
    assert z.key() == "[-1,0,-1,-1,0]"


def test_golden_ratio_relation():
    # xi + xi^4 = (sqrt(5) - 1)/2 satisfies z^2 + z - 1 = 0
    z = CycInt(5, [0, 1, 0, 0, 1])
    assert z * z + z - CycInt.from_int(5, 1) == 0


coeffs = st.lists(st.integers(-20, 20), min_size=5, max_size=5)


@given(coeffs, coeffs)
def test_ring_ops_match_complex(a, b):
    x, y = CycInt(5, a), CycInt(5, b)
    assert abs(to_complex(x * y) - to_complex(x) * to_complex(y)) < 1e-6
    assert abs(to_complex(x + y) - (to_complex(x) + to_complex(y))) < 1e-9
    assert abs(to_complex(x.norm2()) - abs(to_complex(x)) ** 2) < 1e-6


@given(coeffs)
def test_equality_respects_relation(a):
    shifted = [c + 7 for c in a]
    assert CycInt(5, a) == CycInt(5, shifted)
    assert hash(CycInt(5, a)) == hash(CycInt(5, shifted))


def test_from_exponents():
    assert CycInt.from_exponents(3, [0, 1, 2]) == 0
    assert CycInt.from_exponents(2, [0, 0, 1]) == 1


def test_mixed_p_rejected():
    with pytest.raises(ValueError):
        CycInt(3, [1, 0, 0]) + CycInt(5, [1, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        CycInt(3, [1, 0])
