"""Bipartite product states, state sets, and the tile-diagram encoding."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .algebra import G0, G1, GaussianRational, basis_vector, gvec, norm2, vdot
from .errors import DimensionMismatch, MalformedDiagram

HORIZONTAL = "horizontal-double"
VERTICAL = "vertical-double"
SINGLE = "single"
KINDS = (HORIZONTAL, VERTICAL, SINGLE)
BLACK = "black"
GREY = "grey"
COLORS = (BLACK, GREY)


@dataclass(frozen=True)
class ProductState:
    """``|a> (x) |b>``, unnormalised."""

    label: str
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", gvec(self.a))
        object.__setattr__(self, "b", gvec(self.b))
        if not any(self.a) or not any(self.b):
            raise ValueError(f"state {self.label!r} has a zero local vector")

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.a), len(self.b)

    def norm2(self):
        return norm2(self.a) * norm2(self.b)

    def swapped(self) -> "ProductState":
        return ProductState(self.label, self.b, self.a)

    def joint(self) -> tuple:
        """Full ``m*n`` amplitude vector, row-major in (A index, B index)."""
        return tuple(x * y for x in self.a for y in self.b)


@dataclass(frozen=True)
class StateSet:
    m: int
    n: int
    states: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        seen = set()
        for s in self.states:
            if s.dims != (self.m, self.n):
                raise DimensionMismatch(
                    f"state {s.label!r} has dims {s.dims}, set is {self.m}x{self.n}"
                )
            if s.label in seen:
                raise ValueError(f"duplicate label {s.label!r}")
            seen.add(s.label)

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[ProductState]:
        return iter(self.states)

    def __getitem__(self, i):
        return self.states[i]

    def labels(self) -> list[str]:
        return [s.label for s in self.states]

    def by_label(self, label: str) -> ProductState:
        for s in self.states:
            if s.label == label:
                return s
        raise KeyError(label)

    def swapped(self) -> "StateSet":
        """Exchange the roles of the two parties."""
        return StateSet(self.n, self.m, tuple(s.swapped() for s in self.states))

    def prefix(self, k: int) -> "StateSet":
        return StateSet(self.m, self.n, self.states[:k])

    def extended(self, more: Sequence[ProductState]) -> "StateSet":
        return StateSet(self.m, self.n, self.states + tuple(more))

    def vector_set(self) -> frozenset:
        """Label-free identity of the set, for comparing constructions."""
        return frozenset((s.a, s.b) for s in self.states)


def product_state(label: str, m: int, n: int, a: dict[int, int], b: dict[int, int]) -> ProductState:
    """Build a state from sparse 1-based coefficient maps, e.g. ``{1: 1, 2: -1}``."""
    av = [G0] * m
    bv = [G0] * n
    for i, x in a.items():
        av[i - 1] = GaussianRational(x)
    for j, y in b.items():
        bv[j - 1] = GaussianRational(y)
    return ProductState(label, tuple(av), tuple(bv))


def tensor_inner(s: ProductState, t: ProductState) -> GaussianRational:
    """``<s|t> = <a_s|a_t> <b_s|b_t>``."""
    if s.dims != t.dims:
        raise DimensionMismatch(f"states {s.label!r} {s.dims} and {t.label!r} {t.dims} differ in dims")
    fa = vdot(s.a, t.a)
    if not fa:
        return G0
    return fa * vdot(s.b, t.b)


@dataclass(frozen=True)
class OrthogonalityReport:
    ok: bool
    offending: tuple = ()  # (label_s, label_t, value)


def validate_orthogonality(states: StateSet) -> OrthogonalityReport:
    bad = []
    for s, t in combinations(states.states, 2):
        v = tensor_inner(s, t)
        if v:
            bad.append((s.label, t.label, v))
    return OrthogonalityReport(not bad, tuple(bad))


@dataclass(frozen=True)
class Tile:
    kind: str
    row: int
    col: int
    color: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise MalformedDiagram(f"unknown tile kind {self.kind!r}")
        if self.color not in COLORS:
            raise MalformedDiagram(f"unknown tile color {self.color!r}")
        if self.kind == SINGLE and self.color != GREY:
            raise MalformedDiagram(f"single tile at ({self.row},{self.col}) must be grey")

    def squares(self) -> tuple[tuple[int, int], ...]:
        r, c = self.row, self.col
        if self.kind == HORIZONTAL:
            return ((r, c), (r, c + 1))
        if self.kind == VERTICAL:
            return ((r, c), (r + 1, c))
        return ((r, c),)

    def transposed(self) -> "Tile":
        kind = {HORIZONTAL: VERTICAL, VERTICAL: HORIZONTAL, SINGLE: SINGLE}[self.kind]
        return Tile(kind, self.col, self.row, self.color)

    @property
    def tag(self) -> str:
        return {HORIZONTAL: "H", VERTICAL: "V", SINGLE: "S"}[self.kind] + f"({self.row},{self.col})"


@dataclass(frozen=True)
class TileDiagram:
    """Rows index party A, columns party B, both 1-based."""

    m: int
    n: int
    tiles: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(self.tiles))
        if self.m < 1 or self.n < 1:
            raise MalformedDiagram(f"grid must be at least 1x1, got {self.m}x{self.n}")
        owner: dict[tuple[int, int], Tile] = {}
        for t in self.tiles:
            for r, c in t.squares():
                if not (1 <= r <= self.m and 1 <= c <= self.n):
                    raise MalformedDiagram(f"tile {t.tag} leaves the {self.m}x{self.n} grid")
                if (r, c) in owner:
                    raise MalformedDiagram(f"tiles {owner[(r, c)].tag} and {t.tag} overlap at ({r},{c})")
                owner[(r, c)] = t

    def covered(self) -> dict[tuple[int, int], Tile]:
        return {sq: t for t in self.tiles for sq in t.squares()}

    def uncovered(self) -> list[tuple[int, int]]:
        cov = self.covered()
        return [(r, c) for r in range(1, self.m + 1) for c in range(1, self.n + 1) if (r, c) not in cov]

    def transposed(self) -> "TileDiagram":
        return TileDiagram(self.n, self.m, tuple(t.transposed() for t in self.tiles))

    def census(self) -> dict[str, int]:
        out = {"black": 0, "grey-double": 0, "single": 0}
        for t in self.tiles:
            if t.kind == SINGLE:
                out["single"] += 1
            elif t.color == BLACK:
                out["black"] += 1
            else:
                out["grey-double"] += 1
        return out


def tile_state(tile: Tile, sign: int, m: int, n: int) -> ProductState:
    """The state a tile encodes; ``sign`` is +1 or -1 (ignored for singles)."""
    r, c = tile.row, tile.col
    if tile.kind == SINGLE:
        return ProductState(tile.tag, basis_vector(m, r), basis_vector(n, c))
    mark = "+" if sign > 0 else "-"
    if tile.kind == HORIZONTAL:
        b = [G0] * n
        b[c - 1] = G1
        b[c] = GaussianRational(sign)
        return ProductState(tile.tag + mark, basis_vector(m, r), tuple(b))
    a = [G0] * m
    a[r - 1] = G1
    a[r] = GaussianRational(sign)
    return ProductState(tile.tag + mark, tuple(a), basis_vector(n, c))


def states_from_tiles(d: TileDiagram) -> StateSet:
    """Black doubles give both sign states, grey doubles the plus state, singles ``|i>|j>``."""
    out = []
    for tile in d.tiles:
        if tile.kind == SINGLE:
            out.append(tile_state(tile, 1, d.m, d.n))
        else:
            out.append(tile_state(tile, 1, d.m, d.n))
            if tile.color == BLACK:
                out.append(tile_state(tile, -1, d.m, d.n))
    return StateSet(d.m, d.n, tuple(out))
