import pytest

from pcqm.operators import get_word_length_cap, set_word_length_cap
from pcqm.scalars import get_degree_window, set_degree_window


@pytest.fixture(autouse=True)
def _restore_global_config():
    window = get_degree_window()
    cap = get_word_length_cap()
    yield
    set_degree_window(*window)
    set_word_length_cap(cap)
