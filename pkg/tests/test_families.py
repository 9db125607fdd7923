import pytest

from _kets import ket, kets, pm
from loccw.errors import CompletionFailure, UnsupportedDimensions
from loccw.families import (
    build_general,
    build_odd_square,
    complete_to_basis,
    expected_count,
    is_supported,
    resolves_identity,
)
from loccw.oracle import brute_force_orthogonality
from loccw.states import GREY, SINGLE, StateSet, TileDiagram, validate_orthogonality

# The d = 7 set, written out by hand.
D7_STATES = (
    pm("|1>", "(|1>{}|2>)") + pm("|2>", "(|2>{}|3>)") + pm("|3>", "(|3>{}|4>)")
    + pm("|5>", "(|4>{}|5>)") + pm("|6>", "(|5>{}|6>)") + pm("|7>", "(|6>{}|7>)")
    + pm("(|6>{}|7>)", "|1>") + pm("(|5>{}|6>)", "|2>") + pm("(|4>{}|5>)", "|3>")
    + pm("(|3>{}|4>)", "|5>") + pm("(|2>{}|3>)", "|6>") + pm("(|1>{}|2>)", "|7>")
    + ["|1>(|3>+|4>)", "|2>(|4>+|5>)", "|6>(|3>+|4>)", "|7>(|4>+|5>)"]
    + ["(|4>+|5>)|1>", "(|3>+|4>)|2>", "(|4>+|5>)|6>", "(|3>+|4>)|7>"]
    + ["|4>|4>"]
)


def _h(row, col):
    return pm(f"|{row}>", f"(|{col}>{{}}|{col + 1}>)")


def _v(row, col):
    return pm(f"(|{row}>{{}}|{row + 1}>)", f"|{col}>")


def listed_states(m: int, n: int) -> StateSet:
    """The three parity-case state lists, written out independently of the tile generator."""
    if m % 2 and n % 2 == 0:
        return listed_states(n, m).swapped()
    out: list[str] = []
    if m % 2 and n % 2:
        k, l = (m - 1) // 2, (n - 1) // 2
        for i in range(1, 2 * l, 2):
            out += _h(1, i)
        for i in range(2, 2 * l + 1, 2):
            out += _h(m, i)
        for j in range(1, 2 * k, 2):
            out += _v(j, n)
        for j in range(2, 2 * k + 1, 2):
            out += _v(j, 1)
        singles = {(k + 1, i) for i in range(2, 2 * l + 1)} | {(j, l + 1) for j in range(2, 2 * k + 1)}
    elif n % 2:
        k, l = m // 2, (n - 1) // 2
        for i in range(1, 2 * l, 2):
            out += _h(1, i)
        for i in range(2, 2 * l + 1, 2):
            out += _h(2 * k, i)
        for j in range(1, 2 * k - 2, 2):
            out += _v(j, n)
        for j in range(2, 2 * k - 3, 2):
            out += _v(j, 1)
        out += _v(2 * k - 2, 2) + _v(2 * k - 1, 1)
        singles = {(i, 3) for i in range(2, 2 * k)} | {(2, j) for j in range(2, 2 * l + 1) if j != 3}
    else:
        k, l = m // 2, n // 2
        for i in range(1, 2 * l - 2, 2):
            out += _h(1, i)
        for i in range(2, 2 * l - 3, 2):
            out += _h(2 * k, i)
        out += _h(2 * k - 1, 2 * l - 2) + _h(2 * k, 2 * l - 1)
        for j in range(1, 2 * k - 2, 2):
            out += _v(j, n)
        for j in range(2, 2 * k - 3, 2):
            out += _v(j, 1)
        out += _v(2 * k - 2, 2) + _v(2 * k - 1, 1)
        singles = {(j, 3) for j in range(3, 2 * k)} | {(2, i) for i in range(2, 2 * l)}
    out += [f"|{r}>|{c}>" for r, c in sorted(singles)]
    return kets(out, m, n)


SUPPORTED = [(m, n) for m in range(3, 13) for n in range(3, 13) if is_supported(m, n)]


def test_d7_matches_generator():
    _, s = build_odd_square(7)
    assert s.vector_set() == kets(D7_STATES, 7, 7).vector_set()


@pytest.mark.parametrize("d, count", [(5, 21), (7, 33), (13, 69)])
def test_odd_square_counts(d, count):
    assert len(build_odd_square(d)[1]) == count == 6 * d - 9


def test_odd_square_example_states_present():
    _, s = build_odd_square(7)
    wanted = ["|1>(|3>+|4>)", "|2>(|4>+|5>)", "|4>|4>", "|6>(|3>+|4>)", "|7>(|4>+|5>)",
              "(|1>+|2>)|7>", "(|1>-|2>)|7>", "(|6>+|7>)|1>", "(|6>-|7>)|1>"]
    assert kets(wanted, 7, 7).vector_set() <= s.vector_set()


@pytest.mark.parametrize("d", [3, 4, 6, 1])
def test_odd_square_rejects(d):
    with pytest.raises(UnsupportedDimensions):
        build_odd_square(d)


@pytest.mark.parametrize("m, n", SUPPORTED)
def test_general_matches_listed_states(m, n):
    _, s = build_general(m, n)
    assert len(s) == expected_count(m, n)
    assert s.vector_set() == listed_states(m, n).vector_set()


@pytest.mark.parametrize(
    "m, n, black, singles",
    [(5, 5, 8, 5), (6, 5, 9, 6), (6, 6, 10, 7), (3, 3, 4, 1)],
)
def test_censuses(m, n, black, singles):
    d, s = build_general(m, n)
    assert d.census() == {"black": black, "grey-double": 0, "single": singles}
    assert len(s) == 3 * (m + n) - 9


def test_6x5_orientation():
    d, _ = build_general(6, 5)
    kinds = [t.kind for t in d.tiles if t.kind != SINGLE]
    assert kinds.count("vertical-double") == 5
    assert kinds.count("horizontal-double") == 4


def test_nine_state_3x3():
    _, s = build_general(3, 3)
    nine = ["|1>(|1>+|2>)", "|1>(|1>-|2>)", "|3>(|2>+|3>)", "|3>(|2>-|3>)",
               "(|1>+|2>)|3>", "(|1>-|2>)|3>", "(|2>+|3>)|1>", "(|2>-|3>)|1>", "|2>|2>"]
    assert s.vector_set() == kets(nine, 3, 3).vector_set()


@pytest.mark.parametrize("m, n", [(4, 5), (5, 4), (4, 4), (4, 6), (6, 4), (2, 3), (3, 4), (3, 6), (6, 3)])
def test_unsupported_dimensions(m, n):
    with pytest.raises(UnsupportedDimensions):
        build_general(m, n)


def test_small_even_collision_is_real():
    # the even x odd list at m = 4 puts (|2>+-|3>)|2> next to the single |2>|2>
    s = StateSet(4, 5, (ket("(|2>+|3>)|2>", 4, 5), ket("|2>|2>", 4, 5)))
    assert not validate_orthogonality(s).ok


@pytest.mark.parametrize("m, n", SUPPORTED + [(d, d) for d in (5, 7, 9, 11, 13, 15)])
def test_generated_sets_orthogonal_and_integral(m, n):
    if m == n and m % 2 and m >= 5:
        _, s = build_odd_square(m)
    else:
        _, s = build_general(m, n)
    assert validate_orthogonality(s).ok
    for st in s:
        assert all(x in (0, 1, -1) for x in st.a + st.b)


@pytest.mark.parametrize("d", [5, 7, 9, 11, 13, 15])
def test_middle_band(d):
    n = (d - 1) // 2
    _, s = build_odd_square(d)
    for row in range(1, d + 1):
        found = False
        for st in s:
            if [i + 1 for i, x in enumerate(st.a) if x] != [row]:
                continue
            support = {j + 1 for j, y in enumerate(st.b) if y}
            if support <= {n, n + 1, n + 2} and n + 1 in support:
                found = True
        assert found, row


@pytest.mark.parametrize("d", [5, 7, 9, 11, 13, 15])
def test_chain_property(d):
    diagram, _ = build_odd_square(d)
    black = [t for t in diagram.tiles if t.color != GREY]
    rows = sorted(t.row for t in black if t.kind == "vertical-double")
    cols = sorted(t.col for t in black if t.kind == "horizontal-double")
    assert rows == list(range(1, d))
    assert cols == list(range(1, d))


def test_completion_d7():
    d, s = build_odd_square(7)
    full = complete_to_basis(d)
    assert len(full) == 49
    added = full.states[len(s):]
    assert full.states[:33] == s.states
    assert sum(x.label.startswith("W") for x in added) == 8
    assert sum(x.label.endswith("-") for x in added) == 8
    assert brute_force_orthogonality(full)
    assert resolves_identity(full)


def test_completion_6x6():
    d, s = build_general(6, 6)
    full = complete_to_basis(d)
    assert len(full) == 36
    assert all(x.label.startswith("W") for x in full.states[27:])
    assert brute_force_orthogonality(full) and resolves_identity(full)


def test_completion_rejects_mismatched_states():
    d, _ = build_general(5, 5)
    _, other = build_general(6, 5)
    with pytest.raises(CompletionFailure):
        complete_to_basis(d, other)
    # states that do not belong to the diagram break orthogonality with the fill
    wrong = kets(["|1>|1>"], 5, 5)
    with pytest.raises(CompletionFailure):
        complete_to_basis(TileDiagram(5, 5, d.tiles[:1]), wrong)


def test_resolves_identity_detects_gap():
    assert not resolves_identity(kets(["|1>|1>", "|1>|2>", "|2>|1>"], 2, 2))
    assert resolves_identity(kets(["|1>|1>", "|1>|2>", "|2>(|1>+|2>)", "|2>(|1>-|2>)"], 2, 2))
