import mpmath
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def mp_precision():
    # mpmath is the independent numeric oracle; its precision is global state
    with mpmath.workprec(400):
        yield
