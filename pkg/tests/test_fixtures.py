import pytest

from skewcat.modules.fixtures import FIXTURES, get_fixture, right_projection_moncat, validate_fixture
from skewcat.modules.skewstruct import check_skew_moncat, is_right_normal
from skewcat.utils.errors import FormatError


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_passes_its_validator(name):
    assert validate_fixture(name).ok


def test_unknown_fixture():
    with pytest.raises(FormatError) as info:
        get_fixture("ch9")
    assert info.value.location == "fixture:ch9"


@pytest.mark.parametrize("n", [1, 2, 4])
def test_right_projection_family(n):
    c = right_projection_moncat(n)
    assert check_skew_moncat(c).ok
    assert is_right_normal(c) == (n == 1)
