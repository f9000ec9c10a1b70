import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SEC5_JSON, sec5_system
from structswitch import DimensionError, ParseError, Pattern, SwitchedSystem, concat, parse_system, serialize_system, union


def test_pattern_rejects_out_of_range_and_duplicates():
    with pytest.raises(DimensionError):
        Pattern(2, 2, ((3, 1),))
    with pytest.raises(DimensionError):
        Pattern(2, 2, ((1, 0),))
    with pytest.raises(ValueError):
        Pattern(2, 2, ((1, 1), (1, 1)))


def test_nonzeros_are_canonically_sorted():
    p = Pattern(3, 3, ((3, 1), (1, 2), (1, 1)))
    assert p.nonzeros == ((1, 1), (1, 2), (3, 1))


def test_union_of_illustrative_modes():
    a1, a2, a3 = sec5_system().a_modes
    assert union([a1, a2, a3]).nonzeros == ((1, 2), (3, 2), (4, 4))


def test_union_single_and_idempotent():
    p = Pattern(3, 3, ((1, 2), (2, 3)))
    assert union([p]) == p
    assert union([p, p]) == p


def test_union_errors():
    with pytest.raises(DimensionError):
        union([Pattern.zeros(2), Pattern.zeros(3)])
    with pytest.raises(ValueError):
        union([])


def _all_2x2():
    cells = [(1, 1), (1, 2), (2, 1), (2, 2)]
    for k in range(5):
        for combo in itertools.combinations(cells, k):
            yield Pattern(2, 2, combo)


def test_union_algebra_exhaustive_2x2():
    pats = list(_all_2x2())
    assert len(pats) == 16
    for p, q in itertools.product(pats, repeat=2):
        assert union([p, q]) == union([q, p])
        assert union([p, p]) == p
        for r in pats:
            assert union([union([p, q]), r]) == union([p, union([q, r])])


def test_concat_illustrative_modes():
    out = concat(sec5_system().a_modes)
    assert out.shape == (4, 12)
    assert out.nonzeros == ((1, 2), (3, 6), (4, 12))


def test_concat_trivial_cases():
    p = Pattern(2, 3, ((2, 3),))
    assert concat([p]) == p
    assert concat([Pattern.zeros(2), Pattern.zeros(2)]) == Pattern(2, 4)


def test_concat_row_mismatch():
    with pytest.raises(DimensionError):
        concat([Pattern.zeros(2), Pattern.zeros(3)])


@given(st.lists(st.integers(0, 2**9 - 1), min_size=1, max_size=4))
def test_concat_preserves_count(masks):
    pats = [
        Pattern(3, 3, tuple((i // 3 + 1, i % 3 + 1) for i in range(9) if mask >> i & 1))
        for mask in masks
    ]
    assert concat(pats).nnz == sum(p.nnz for p in pats)


def test_parse_illustrative_system():
    assert parse_system(SEC5_JSON) == sec5_system()


def test_parse_zero_system():
    s = parse_system('{"n":1,"modes":[{"A":[]}]}')
    assert s.n == 1 and s.m == 1 and s.a_modes[0].nnz == 0 and s.b_modes is None


@pytest.mark.parametrize(
    "doc, field, fragment",
    [
        ('{"n":2,"modes":[{"A":[[0,1]]}]}', "modes[0].A[0]", "row index 0 out of range"),
        ('{"n":2,"modes":[{"A":[[1,3]]}]}', "modes[0].A[0]", "column index 3"),
        ('{"n":2,"modes":[{"A":[[1,1],[1,1]]}]}', "modes[0].A[1]", "duplicate"),
        ('{"n":2,"modes":[{"A":[], "B":[[3,1]]}]}', "modes[0].B[0]", "row index 3"),
        ('{"n":0,"modes":[{"A":[]}]}', "n", "positive"),
        ('{"n":2,"modes":[]}', "modes", "non-empty"),
        ('{"n":2,"modes":[{"B":[]}]}', "modes[0].A", "missing"),
        ('{"n":2,"modes":[{"A":[[1,"x"]]}]}', "modes[0].A[0]", "integer"),
    ],
)
def test_parse_errors_name_the_field(doc, field, fragment):
    with pytest.raises(ParseError) as exc:
        parse_system(doc)
    assert exc.value.field == field
    assert fragment in str(exc.value)


def test_parse_malformed_json():
    with pytest.raises(ParseError, match="malformed JSON"):
        parse_system('{"n": 2,')


def test_missing_b_defaults_to_square_zero():
    s = parse_system('{"n":3,"modes":[{"A":[], "B":[[1,1]]},{"A":[]}]}')
    assert s.b_modes[1] == Pattern.zeros(3)
    assert s.b_modes[0].shape == (3, 3)


def test_serializer_sorts_entries():
    s = parse_system('{"n":3,"modes":[{"A":[[3,1],[1,2]], "B":[[2,1],[1,1]]}]}')
    doc = json.loads(serialize_system(s))
    assert doc["modes"][0]["A"] == [[1, 2], [3, 1]]
    assert doc["modes"][0]["B"] == [[1, 1], [2, 1]]


@st.composite
def systems(draw):
    n = draw(st.integers(1, 5))
    m = draw(st.integers(1, 3))
    cells = st.sets(st.tuples(st.integers(1, n), st.integers(1, n)))
    a = tuple(Pattern(n, n, tuple(draw(cells))) for _ in range(m))
    if draw(st.booleans()):
        return SwitchedSystem(n, a)
    b = []
    for _ in range(m):
        p = draw(st.integers(0, n))
        entries = draw(st.sets(st.tuples(st.integers(1, n), st.integers(1, max(p, 1))))) if p else set()
        b.append(Pattern(n, p, tuple(entries)))
    return SwitchedSystem(n, a, tuple(b))


@settings(max_examples=200)
@given(systems())
def test_parse_serialize_round_trip(system):
    assert parse_system(serialize_system(system)) == system
