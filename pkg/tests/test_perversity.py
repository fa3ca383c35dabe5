import pytest

from config import STANDARD_PERVERSITIES
from errors import GrowthConditionError, PerversityDimensionError, UnknownPerversityError
from perversity import complementary, make_perversity, parse_perversity, standard


def test_standard_values_in_dimension_six():
    assert standard("zero", 6).values == (0, 0, 0, 0, 0)
    assert standard("top", 6).values == (0, 1, 2, 3, 4)
    assert standard("lower-middle", 6).values == (0, 0, 1, 1, 2)
    assert standard("upper-middle", 6).values == (0, 1, 1, 2, 2)


def test_low_dimensions_have_no_values():
    assert standard("top", 0).values == ()
    assert standard("top", 1).values == ()
    assert standard("top", 2).values == (0,)


def test_jump_by_two_names_the_index():
    with pytest.raises(GrowthConditionError) as info:
        make_perversity((0, 2), 3)
    assert info.value.index == 3


def test_p2_must_vanish():
    with pytest.raises(GrowthConditionError) as info:
        make_perversity((1,), 2)
    assert info.value.index == 2


def test_wrong_length_is_rejected():
    with pytest.raises(PerversityDimensionError):
        make_perversity((0, 0), 2)


@pytest.mark.parametrize("n", range(2, 8))
def test_complementary_swaps_the_middles_and_is_an_involution(n):
    assert complementary(standard("lower-middle", n)) == standard("upper-middle", n)
    assert complementary(standard("zero", n)) == standard("top", n)
    for name in STANDARD_PERVERSITIES:
        p = standard(name, n)
        assert complementary(complementary(p)) == p


def test_evaluation_outside_the_range():
    p = standard("top", 4)
    assert p(0) == 0 and p(1) == 0
    assert p(4) == 2
    with pytest.raises(PerversityDimensionError):
        p(5)


def test_parse_spellings():
    assert parse_perversity("upper-middle", 4) == standard("upper-middle", 4)
    custom = parse_perversity("custom:0,1", 3)
    assert custom.values == (0, 1)
    assert custom.spelling == "custom:0,1"
    with pytest.raises(UnknownPerversityError):
        parse_perversity("middle", 4)
    with pytest.raises(UnknownPerversityError):
        parse_perversity("custom:0,x", 3)


def test_restrict_and_extend_keep_standard_names():
    p = standard("lower-middle", 4)
    assert p.restrict(3) == standard("lower-middle", 3)
    assert p.extend(6) == standard("lower-middle", 6)
    custom = make_perversity((0, 1), 3)
    assert custom.extend(5).values == (0, 1, 1, 1)
