import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from semistrong import Hypergraph  # noqa: E402


@st.composite
def hypergraphs(draw, max_n=7, max_m=6, min_m=0):
    n = draw(st.integers(1, max_n))
    edges = draw(
        st.lists(
            st.sets(st.integers(1, n), min_size=1, max_size=n),
            min_size=min_m,
            max_size=max_m,
        )
    )
    return Hypergraph(n, [sorted(e) for e in edges])


@pytest.fixture
def tri():
    from semistrong import triangle

    return triangle()
