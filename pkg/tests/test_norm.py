import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treespace import sampling
from treespace.errors import DepthExceededError, TooLargeError
from treespace.oracle import norm_oracle, norm_oracle_squared
from treespace.tree import EXTENDED, Segment, all_nodes, build_strongly_incomparable, check_admissible
from treespace.vectors import TreeVector, norm, segment_sum

SQRT2 = math.sqrt(2)


def vec(depth=4, **kw):
    return TreeVector(depth, kw)


def test_vector_canonical_form():
    x = TreeVector(3, {"0": 1, "1": 0})
    assert x.entries == {"0": 1}
    with pytest.raises(DepthExceededError):
        TreeVector(2, {"01": 1})
    assert (x + x)["0"] == 2 and not (x - x)


@pytest.mark.parametrize(
    "entries, seg, want",
    [({"": 1}, ("", "0"), 1), ({"": 1, "0": 1}, ("", "0"), 2), ({"1": 1}, ("", "0"), 0)],
)
def test_segment_sum(entries, seg, want):
    assert segment_sum(TreeVector(3, entries), Segment(*seg)) == want


def test_segment_sum_depth():
    with pytest.raises(DepthExceededError):
        segment_sum(TreeVector(2, {"": 1}), Segment("", "01"))


@pytest.mark.parametrize("s", list(all_nodes(4)))
def test_unit_vectors(s):
    x = TreeVector.unit(4, s)
    assert norm(x).squared == 1 == norm_oracle_squared(x)


# expected values below come from the brute-force oracle (asserted alongside)
@pytest.mark.parametrize(
    "entries, want_sq",
    [
        ({}, 0),
        ({"1": 1, "01": 1}, 2),
        ({"": 1, "0": 1}, 4),
        ({"1": 1, "01": 1, "001": 1}, 2),
        ({"": 1, "0": -1, "1": -1}, 2),
    ],
)
def test_norm_examples(entries, want_sq):
    x = TreeVector(4, entries)
    assert norm_oracle_squared(x) == want_sq
    nb = norm(x)
    assert nb.squared == want_sq
    assert nb.value == pytest.approx(math.sqrt(want_sq), abs=1e-12)


def test_zero_vector_has_no_witness():
    nb = norm(TreeVector.zero(3))
    assert nb.value == 0 and nb.witness_family is None and nb.witness_level is None


def test_witness_tie_break():
    # level 0 and level 1 both give 2; the lower level wins
    nb = norm(TreeVector(3, {"": 1, "0": 1, "1": SQRT2 - SQRT2}))
    assert nb.witness_level == 0
    nb = norm(vec(**{"0": 1, "1": 1, "": -1}))
    assert nb.witness_level == 1
    assert [str(s) for s in nb.witness_family] == ["0>0", "1>1"]


def test_strict_mode_can_be_smaller():
    # a lone root segment is admissible only in extended mode
    x = TreeVector(3, {"": 2, "0": -1, "1": -1})
    assert norm_oracle_squared(x, EXTENDED) == 4 == norm(x).squared
    assert norm_oracle_squared(x, "strict") == 2


def test_oracle_cap():
    x = TreeVector(6, {s: 1 for s in all_nodes(6)})
    with pytest.raises(TooLargeError):
        norm_oracle(x)


def test_dp_matches_oracle_exhaustive_small():
    # every vector on the depth-2 tree with entries in {-2..2}
    nodes = list(all_nodes(2))
    for vals in np.ndindex(*(5,) * len(nodes)):
        x = TreeVector(2, {s: v - 2 for s, v in zip(nodes, vals)})
        assert norm(x).squared == norm_oracle_squared(x)


def test_dp_matches_oracle_exact_fractions(rng):
    for _ in range(300):
        x = sampling.tree_vector(rng, 4, max_support=7, integer=True)
        x = TreeVector(4, {s: Fraction(int(v), int(rng.integers(1, 4))) for s, v in x.entries.items()})
        assert norm(x).squared == norm_oracle_squared(x)


def test_dp_matches_oracle_dense_depth4(rng):
    for _ in range(20):
        x = sampling.tree_vector(rng, 4, max_support=15)
        assert norm(x).value == pytest.approx(norm_oracle(x), abs=1e-12)


def test_witness_validity(rng):
    for _ in range(500):
        x = sampling.tree_vector(rng, 6, max_support=12)
        nb = norm(x)
        fam = check_admissible(nb.witness_family.segments, EXTENDED)
        assert fam.eta1 == nb.witness_level
        sq = sum(segment_sum(x, seg) ** 2 for seg in fam)
        assert sq == pytest.approx(nb.squared, abs=1e-12)


def test_segment_domination(rng):
    for _ in range(300):
        x = sampling.tree_vector(rng, 5, max_support=10)
        v = norm(x).value
        for s in x.support:
            for b in all_nodes(5):
                if b.startswith(s):
                    assert abs(segment_sum(x, Segment(s, b))) <= v + 1e-12


vectors = st.builds(
    lambda entries: TreeVector(6, entries),
    st.dictionaries(
        st.text(alphabet="01", max_size=5),
        # squares of tiny entries underflow; keep magnitudes in a sane range
        st.one_of(st.just(0.0), st.floats(min_value=1e-6, max_value=100), st.floats(min_value=-100, max_value=-1e-6)),
        max_size=12,
    ),
)


@settings(max_examples=300, deadline=None)
@given(vectors, st.floats(min_value=-50, max_value=50, allow_nan=False))
def test_homogeneity(x, c):
    assert norm(x * c).value == pytest.approx(abs(c) * norm(x).value, rel=1e-12, abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(vectors, vectors)
def test_triangle_inequality(x, y):
    assert norm(x + y).value <= norm(x).value + norm(y).value + 1e-12 * (1 + norm(x).value + norm(y).value)


@settings(max_examples=200, deadline=None)
@given(vectors)
def test_definiteness(x):
    assert (norm(x).value == 0) == (not x)


def test_prop21_bounds(rng):
    for _ in range(500):
        depth = int(rng.integers(2, 9))
        ts = build_strongly_incomparable(sampling.chain(rng, depth), depth)
        a = rng.normal(size=len(ts)) * rng.uniform(0.1, 10)
        m = np.max(np.abs(a))
        v = norm(TreeVector(depth, dict(zip(ts, a.tolist())))).value
        assert m - 1e-9 <= v <= SQRT2 * m + 1e-9


@pytest.mark.parametrize("size", [2, 3, 4, 5, 6])
def test_prop21_constant_attained(size):
    ts = build_strongly_incomparable(["0" * k for k in range(size)], size + 1)
    x = TreeVector(size + 1, {t: Fraction(3, 2) for t in ts})
    assert norm_oracle_squared(x) == 2 * Fraction(3, 2) ** 2 == norm(x).squared
