import numpy as np
import pytest
from hypothesis import settings, strategies as st

from t2interval import Type2Interval

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

EX31 = (Type2Interval(-5, -2, -1, 3), Type2Interval(-3, 1, 3, 6))
EX32 = (Type2Interval(-4, -1, 2, 5), Type2Interval(-6, -3, -1, 3))
EX33 = (Type2Interval(-2, -1, 1, 3), Type2Interval(1, 2, 3, 4))

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
# dyadic grid: sums and differences stay exact
dyadic = st.integers(-4096, 4096).map(lambda k: k / 1024)


def quads(elements=finite):
    return st.lists(elements, min_size=4, max_size=4).map(lambda v: Type2Interval(*sorted(v)))


def nonzero_quads(elements=finite):
    def shift(q):
        v = sorted(abs(t) + 0.5 for t in q.quad)
        return v

    return st.tuples(quads(elements), st.booleans()).map(
        lambda p: Type2Interval(*shift(p[0])) if p[1] else Type2Interval(*[-t for t in reversed(shift(p[0]))])
    )


def random_quads(rng, n, lo=-10.0, hi=10.0):
    return np.sort(rng.uniform(lo, hi, (n, 4)), axis=1)


@pytest.fixture
def rng():
    return np.random.default_rng(20240901)
