import pytest

from config import GALLERY_EXPECTED, STANDARD_PERVERSITIES
from errors import ZeroDataError
from gallery import gallery
from hopf import ZeroDatum, multiplicity, nonsingular_radial_exists, singular_index, verify_poincare_hopf
from perversity import standard

HYBRID_ZEROS = [
    ZeroDatum(2, 0, 1, "north pole"),
    ZeroDatum(2, 1, 1, "south pole"),
    ZeroDatum(1, 0, -1, "first arc"),
    ZeroDatum(1, 1, -1, "second arc"),
]


@pytest.mark.parametrize("name", ["pinched_torus", "susp_torus2", "torus3_2p", "susp_torus3_2p"])
def test_multiplicities_match_the_cards(name, perversity_name):
    S = gallery(name)
    p = standard(perversity_name, S.n)
    for key, values in GALLERY_EXPECTED[name]["multiplicities"].items():
        stratum, component = (int(part) for part in key.split(":"))
        assert multiplicity(S, p, stratum, component) == values[perversity_name]


def test_regular_multiplicity_is_a_sign(susp_torus2, pinched_torus):
    assert multiplicity(susp_torus2, standard("zero", 3), 0) == -1
    assert multiplicity(pinched_torus, standard("zero", 2), 0) == 1


def test_complementary_multiplicities_at_the_poles(susp_torus2):
    for component in (0, 1):
        low = multiplicity(susp_torus2, standard("zero", 3), 1, component)
        high = multiplicity(susp_torus2, standard("top", 3), 1, component)
        assert low == -high


def test_singular_index_examples():
    assert singular_index(2, 1) == 2
    assert singular_index(2, -1) == -2
    assert singular_index(1, 5) == 5


def test_pinched_torus_with_one_zero(pinched_torus):
    report = verify_poincare_hopf(pinched_torus, standard("zero", 2), [ZeroDatum(1, 0, 1, "pinch")])
    assert report.ichi == 2
    assert report.total == 2
    assert report.verdict == "equal"
    assert report.rows[0].multiplicity == 2


@pytest.mark.parametrize("name", STANDARD_PERVERSITIES)
def test_hybrid_space_balances_for_every_perversity(susp_torus3_2p, name):
    report = verify_poincare_hopf(susp_torus3_2p, standard(name, 4), HYBRID_ZEROS)
    assert report.ichi == 0
    assert report.total == 0
    assert report.equal


@pytest.mark.parametrize("name", ["zero", "top"])
def test_suspended_torus_with_two_pole_zeros(susp_torus2, name):
    p = standard(name, 3)
    report = verify_poincare_hopf(susp_torus2, p, [ZeroDatum(1, 0, 1), ZeroDatum(1, 1, 1)])
    assert report.equal
    assert report.ichi == GALLERY_EXPECTED["susp_torus2"]["ichi"][name]


def test_classical_sphere(sphere2):
    report = verify_poincare_hopf(sphere2, standard("zero", 2), [ZeroDatum(0, 0, 2, "source")])
    assert report.rows[0].multiplicity == 1
    assert report.total == 2
    assert report.equal


def test_mismatch_is_reported_not_raised(sphere2):
    report = verify_poincare_hopf(sphere2, standard("zero", 2), [ZeroDatum(0, 0, 1)])
    assert report.verdict == "mismatch"
    assert report.difference == 1


def test_unknown_component_is_rejected(pinched_torus):
    with pytest.raises(ZeroDataError):
        verify_poincare_hopf(pinched_torus, standard("zero", 2), [ZeroDatum(1, 3, 1)])
    with pytest.raises(ZeroDataError):
        verify_poincare_hopf(pinched_torus, standard("zero", 2), [ZeroDatum(5, 0, 1)])


def test_point_strata_need_index_one(pinched_torus):
    with pytest.raises(ZeroDataError):
        verify_poincare_hopf(pinched_torus, standard("zero", 2), [ZeroDatum(1, 0, 2)])


def test_permuting_and_splitting_zeros_keeps_the_verdict(susp_torus3_2p):
    p = standard("top", 4)
    base = verify_poincare_hopf(susp_torus3_2p, p, HYBRID_ZEROS)
    permuted = verify_poincare_hopf(susp_torus3_2p, p, list(reversed(HYBRID_ZEROS)))
    split = HYBRID_ZEROS[:2] + [ZeroDatum(1, 0, -3), ZeroDatum(1, 0, 2), HYBRID_ZEROS[3]]
    resplit = verify_poincare_hopf(susp_torus3_2p, p, split)
    assert base.total == permuted.total == resplit.total
    assert base.verdict == permuted.verdict == resplit.verdict == "equal"


@pytest.mark.parametrize("name", ["point", "circle", "sphere2", "torus2", "pinched_torus", "susp_torus2",
                                  "torus3_2p", "susp_torus3_2p"])
def test_converse_matches_the_cards(name):
    decision = nonsingular_radial_exists(gallery(name))
    assert decision.exists == GALLERY_EXPECTED[name]["converse"]
    assert decision.exists == (not decision.witnesses)


def test_sphere_has_no_nonsingular_field(sphere2):
    decision = nonsingular_radial_exists(sphere2)
    assert [(w.key, w.chi_c) for w in decision.witnesses] == [("0:0", 2)]


@pytest.mark.slow
def test_product_obstruction(product_space):
    decision = nonsingular_radial_exists(product_space)
    assert not decision.exists
    expected = GALLERY_EXPECTED["susp_torus3_2p_x_sphere2"]["converse_witness_chi_c"]
    poles = [w for w in decision.witnesses if w.dim == 2]
    assert len(poles) == 2
    assert all(w.chi_c == expected for w in poles)
