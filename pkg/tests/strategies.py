"""Shared hypothesis strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from schubert_lines.tableau import EMPTY, enumerate_standard, partitions_of


@st.composite
def tableaux(draw, max_degree: int = 6, max_rows: int | None = None):
    d = draw(st.integers(0, max_degree))
    if d == 0:
        return EMPTY
    shape = draw(st.sampled_from(partitions_of(d, max_rows)))
    return draw(st.sampled_from(enumerate_standard(shape)))


def two_row_tableaux(max_degree: int = 6):
    return tableaux(max_degree, max_rows=2)


@st.composite
def tableau_sets(draw, max_degree: int = 6):
    """A nonempty set of two-row tableaux sharing one degree."""
    d = draw(st.integers(0, max_degree))
    pool = [t for lam in partitions_of(d, 2) for t in enumerate_standard(lam)] if d else [EMPTY]
    chosen = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=5, unique=True))
    return chosen
