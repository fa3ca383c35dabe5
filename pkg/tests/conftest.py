import pytest

from config import STANDARD_PERVERSITIES
from gallery import gallery
from simplicial import build_complex
from stratified import single_stratum


@pytest.fixture(scope="session")
def pinched_torus():
    return gallery("pinched_torus")


@pytest.fixture(scope="session")
def susp_torus2():
    return gallery("susp_torus2")


@pytest.fixture(scope="session")
def torus3_2p():
    return gallery("torus3_2p")


@pytest.fixture(scope="session")
def susp_torus3_2p():
    return gallery("susp_torus3_2p")


@pytest.fixture(scope="session")
def sphere2():
    return gallery("sphere2")


@pytest.fixture(scope="session")
def product_space():
    return gallery("susp_torus3_2p_x_sphere2")


@pytest.fixture
def disk():
    return single_stratum(build_complex([(0, 1, 2)]), name="disk")


@pytest.fixture(params=STANDARD_PERVERSITIES)
def perversity_name(request):
    return request.param
