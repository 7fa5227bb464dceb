from fractions import Fraction

from hypothesis import given, strategies as st

from asreg.linalg import Echelon, kernel_dim, rank


def dense_rank(rows, ncols):
    """Plain Fraction Gaussian elimination."""
    m = [[Fraction(r.get(j, 0)) for j in range(ncols)] for r in rows]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def test_small_cases():
    assert rank([]) == 0
    assert rank([{0: 1}, {0: 2}]) == 1
    assert rank([{0: 1, 1: 1}, {0: 1, 1: -1}]) == 2
    assert kernel_dim([{0: 1, 1: 1}], 3) == 2


def test_echelon_combination():
    e = Echelon()
    assert e.add({0: 1, 1: 1}, "a")
    assert e.add({1: 1}, "b")
    assert not e.add({0: 2, 1: 5}, "c")
    rem, combo = e.reduce({0: 3, 1: 1})
    assert not rem and combo == {"a": 3, "b": -2}
    assert e.in_span({0: 1})


rows = st.lists(st.dictionaries(st.integers(0, 5), st.integers(-4, 4).filter(bool), max_size=4),
                max_size=7)


@given(rows)
def test_rank_matches_dense(rs):
    assert rank(rs) == dense_rank(rs, 6)


@given(rows, st.fractions(-3, 3, max_denominator=4))
def test_rational_entries(rs, c):
    scaled = [{k: v * c for k, v in r.items()} for r in rs]
    assert rank(scaled) == (dense_rank(rs, 6) if c else 0)
