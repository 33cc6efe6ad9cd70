from fractions import Fraction

from hypothesis import strategies as st

from semitensor import RATIONAL, from_rows

small_fractions = st.builds(
    Fraction, st.integers(min_value=-4, max_value=4), st.integers(min_value=1, max_value=4)
)


@st.composite
def matrices(draw, max_rows=3, max_cols=3, rows=None, cols=None):
    m = rows if rows is not None else draw(st.integers(1, max_rows))
    n = cols if cols is not None else draw(st.integers(1, max_cols))
    data = draw(
        st.lists(st.lists(small_fractions, min_size=n, max_size=n), min_size=m, max_size=m)
    )
    return from_rows(data, RATIONAL)


@st.composite
def matrix_pairs_same_ratio(draw, max_scale=3):
    """Two matrices sharing one row/column ratio, different lift levels."""
    p = draw(st.integers(1, 2))
    q = draw(st.integers(1, 3))
    s = draw(st.integers(1, max_scale))
    t = draw(st.integers(1, max_scale))
    a = draw(matrices(rows=s * p, cols=s * q))
    b = draw(matrices(rows=t * p, cols=t * q))
    return a, b
