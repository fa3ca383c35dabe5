import pytest

from config import GALLERY_EXPECTED, GALLERY_ORDER
from errors import UnknownGalleryError
from gallery import gallery, list_gallery
from simplicial import homology_dims
from stratified import validate_pseudomanifold


def test_list_is_stable_and_complete():
    entries = list_gallery()
    assert [e.name for e in entries] == list(GALLERY_ORDER)
    assert len(entries) >= 9
    cards = {e.name: e.expected for e in entries}
    assert cards["pinched_torus"]["ichi"]["zero"] == 2
    assert set(cards["susp_torus3_2p"]["ichi"].values()) == {0}


def test_unknown_name():
    with pytest.raises(UnknownGalleryError):
        gallery("nope")


@pytest.mark.parametrize("name", [n for n in GALLERY_ORDER if "homology" in GALLERY_EXPECTED[n]])
def test_homology_and_dimension(name):
    S = gallery(name)
    assert S.n == GALLERY_EXPECTED[name]["dimension"]
    assert homology_dims(S.complex) == GALLERY_EXPECTED[name]["homology"]


@pytest.mark.parametrize("name", [n for n in GALLERY_ORDER if n != "susp_torus3_2p_x_sphere2"])
def test_gallery_spaces_are_pseudomanifolds(name):
    assert validate_pseudomanifold(gallery(name)).passed


def test_gallery_is_cached():
    assert gallery("torus3_2p") is gallery("torus3_2p")


def test_hybrid_space_strata(susp_torus3_2p):
    assert [(s.id, s.dim, s.name) for s in susp_torus3_2p.strata] == [
        (0, 4, "regular"), (1, 1, "arcs"), (2, 0, "poles")]
    singular = sum(part.chi_c for part in susp_torus3_2p.all_components() if part.stratum.dim < 4)
    regular = sum(part.chi_c for part in susp_torus3_2p.components(0))
    assert regular == susp_torus3_2p.complex.euler_characteristic - singular


def test_torus_triangulation_is_minimal():
    assert gallery("torus2").complex.f_vector == (9, 27, 18)


@pytest.mark.slow
def test_product_is_a_pseudomanifold(product_space):
    report = validate_pseudomanifold(product_space)
    assert report.passed
    assert product_space.n == GALLERY_EXPECTED["susp_torus3_2p_x_sphere2"]["dimension"]
