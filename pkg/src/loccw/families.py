"""Tile layouts of the locally indistinguishable product-state families.

``build_odd_square(d)`` gives 6d-9 states in d x d (d odd, d >= 5);
``build_general(m, n)`` gives 3(m+n)-9 states in m x n. Both return the
diagram and the state set it encodes. ``complete_to_basis`` fills a
diagram up to a full orthogonal product basis.
"""
from __future__ import annotations

from .algebra import G0
from .errors import CompletionFailure, UnsupportedDimensions
from .states import (
    BLACK,
    GREY,
    HORIZONTAL,
    SINGLE,
    VERTICAL,
    ProductState,
    StateSet,
    Tile,
    TileDiagram,
    basis_vector,
    states_from_tiles,
    tile_state,
    validate_orthogonality,
)


def _h(row, col, color=BLACK):
    return Tile(HORIZONTAL, row, col, color)


def _v(row, col, color=BLACK):
    return Tile(VERTICAL, row, col, color)


def _s(row, col):
    return Tile(SINGLE, row, col, GREY)


def odd_square_diagram(d: int) -> TileDiagram:
    if d % 2 == 0 or d < 5:
        raise UnsupportedDimensions(f"odd-square family needs odd d >= 5, got d={d} (use the general family for d=3)")
    n = (d - 1) // 2
    tiles = []
    # black chains: horizontal ones force column equalities, vertical ones row equalities
    for i in range(1, n + 1):
        tiles.append(_h(i, i))
    for i in range(n + 2, d + 1):
        tiles.append(_h(i, i - 1))
    for j in range(1, n + 1):
        tiles.append(_v(d - j, j))
    for j in range(n + 2, d + 1):
        tiles.append(_v(d + 1 - j, j))
    # grey tiles fill the middle band so that every row (column) meets column (row) n+1
    for i in range(1, n):
        tiles.append(_h(i, n + 1 if i == n - 1 else n, GREY))
    for i in range(n + 3, d + 1):
        tiles.append(_h(i, n if i == n + 3 else n + 1, GREY))
    for j in range(1, n):
        tiles.append(_v(n if j == n - 1 else n + 1, j, GREY))
    for j in range(n + 3, d + 1):
        tiles.append(_v(n + 1 if j == n + 3 else n, j, GREY))
    tiles.append(_s(n + 1, n + 1))
    return TileDiagram(d, d, tuple(tiles))


def build_odd_square(d: int) -> tuple[TileDiagram, StateSet]:
    diagram = odd_square_diagram(d)
    return diagram, states_from_tiles(diagram)


def _odd_odd(m: int, n: int) -> TileDiagram:
    k, l = (m - 1) // 2, (n - 1) // 2
    tiles = [_h(1, i) for i in range(1, 2 * l, 2)]
    tiles += [_h(m, i) for i in range(2, 2 * l + 1, 2)]
    tiles += [_v(j, n) for j in range(1, 2 * k, 2)]
    tiles += [_v(j, 1) for j in range(2, 2 * k + 1, 2)]
    tiles += [_s(k + 1, i) for i in range(2, 2 * l + 1)]
    tiles += [_s(j, l + 1) for j in range(2, 2 * k + 1) if j != k + 1]
    return TileDiagram(m, n, tuple(tiles))


def _even_odd(m: int, n: int) -> TileDiagram:
    k, l = m // 2, (n - 1) // 2
    tiles = [_h(1, i) for i in range(1, 2 * l, 2)]
    tiles += [_h(m, i) for i in range(2, 2 * l + 1, 2)]
    tiles += [_v(j, n) for j in range(1, 2 * k - 2, 2)]
    tiles += [_v(j, 1) for j in range(2, 2 * k - 3, 2)]
    tiles += [_v(2 * k - 2, 2), _v(2 * k - 1, 1)]
    tiles += [_s(i, 3) for i in range(2, 2 * k)]
    tiles += [_s(2, j) for j in range(2, 2 * l + 1) if j != 3]
    return TileDiagram(m, n, tuple(tiles))


def _even_even(m: int, n: int) -> TileDiagram:
    k, l = m // 2, n // 2
    tiles = [_h(1, i) for i in range(1, 2 * l - 2, 2)]
    tiles += [_h(m, i) for i in range(2, 2 * l - 3, 2)]
    tiles += [_s(j, 3) for j in range(3, 2 * k)]
    tiles += [_h(2 * k - 1, 2 * l - 2), _h(2 * k, 2 * l - 1)]
    tiles += [_s(2, i) for i in range(2, 2 * l)]
    tiles += [_v(j, n) for j in range(1, 2 * k - 2, 2)]
    tiles += [_v(j, 1) for j in range(2, 2 * k - 3, 2)]
    tiles += [_v(2 * k - 2, 2), _v(2 * k - 1, 1)]
    return TileDiagram(m, n, tuple(tiles))


def is_supported(m: int, n: int) -> bool:
    if m % 2 and n % 2:
        return m >= 3 and n >= 3
    if m % 2 == 0 and n % 2:
        return m >= 6 and n >= 5
    if m % 2 and n % 2 == 0:
        return m >= 5 and n >= 6
    return m >= 6 and n >= 6


def general_diagram(m: int, n: int) -> TileDiagram:
    if not is_supported(m, n):
        raise UnsupportedDimensions(
            f"no verified construction for {m}x{n}; supported: odd x odd (>=3), "
            "even >= 6 with odd >= 5 (either order), even x even (>=6)"
        )
    if m % 2 and n % 2:
        return _odd_odd(m, n)
    if m % 2 == 0 and n % 2:
        return _even_odd(m, n)
    if m % 2 and n % 2 == 0:
        return _even_odd(n, m).transposed()
    return _even_even(m, n)


def build_general(m: int, n: int) -> tuple[TileDiagram, StateSet]:
    diagram = general_diagram(m, n)
    return diagram, states_from_tiles(diagram)


def expected_count(m: int, n: int) -> int:
    return 3 * (m + n) - 9


def resolves_identity(basis: StateSet) -> bool:
    """Exact check of ``sum |psi><psi| / <psi|psi> == I``, using sparse joint vectors."""
    n = basis.n
    acc: dict[tuple[int, int], object] = {}
    for s in basis:
        w = 1 / s.norm2()
        joint = {}
        for i, x in enumerate(s.a):
            if x:
                for j, y in enumerate(s.b):
                    if y:
                        joint[i * n + j] = x * y
        for r, x in joint.items():
            xc = x.conj() * w
            for c, y in joint.items():
                acc[(r, c)] = acc.get((r, c), G0) + y * xc
    dim = basis.m * basis.n
    for (r, c), v in acc.items():
        if v != (1 if r == c else 0):
            return False
    return all((r, r) in acc for r in range(dim))


def complete_to_basis(diagram: TileDiagram, states: StateSet | None = None) -> StateSet:
    """Add a basis state per uncovered square and the minus partner of each grey double."""
    base = states if states is not None else states_from_tiles(diagram)
    m, n = diagram.m, diagram.n
    if (base.m, base.n) != (m, n):
        raise CompletionFailure(f"state set is {base.m}x{base.n} but diagram is {m}x{n}")
    extra = [
        ProductState(f"W({r},{c})", basis_vector(m, r), basis_vector(n, c))
        for r, c in diagram.uncovered()
    ]
    extra += [
        tile_state(t, -1, m, n) for t in diagram.tiles if t.kind != SINGLE and t.color == GREY
    ]
    try:
        full = base.extended(extra)
    except ValueError as exc:
        raise CompletionFailure(str(exc)) from exc
    if len(full) != m * n:
        raise CompletionFailure(f"completion has {len(full)} states, expected {m * n}")
    report = validate_orthogonality(full)
    if not report.ok:
        a, b, v = report.offending[0]
        raise CompletionFailure(f"completed set not orthogonal: <{a}|{b}> = {v}")
    if not resolves_identity(full):
        raise CompletionFailure("completed set does not resolve the identity")
    return full


__all__ = [
    "build_odd_square",
    "build_general",
    "complete_to_basis",
    "expected_count",
    "general_diagram",
    "is_supported",
    "odd_square_diagram",
    "resolves_identity",
]
