"""Orthogonality-preserving local measurements as a linear-algebra problem.

For party A, an effect ``E = M^dagger M`` preserves orthogonality of the set
iff ``<a_s|E|a_t> <b_s|b_t> = 0`` for every pair. Writing E in real
Hermitian coordinates turns these into a homogeneous rational system whose
nullspace is the space of admissible effects. The identity always lies in
it; when it is the whole space, every orthogonality-preserving first
measurement by that party is trivial.

Coordinate order for a p x p Hermitian matrix: the p diagonal entries,
then for each pair i < j (lexicographic) the real and imaginary parts of
entry (i, j).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra import (
    G0,
    GaussianRational,
    RationalMatrix,
    identity,
    is_scalar_multiple_of_identity,
    mat_add,
    mat_scale,
    nullspace_sparse,
    trace,
    vdot,
)
from .errors import NonOrthogonalInput, TrivialSpace
from .states import StateSet, validate_orthogonality

PARTIES = ("A", "B")
CERTIFIED = "certified-indistinguishable"
INCONCLUSIVE = "inconclusive-nontrivial-exists"


def n_params(p: int) -> int:
    return p * p


def offdiag_index(p: int) -> dict[tuple[int, int], int]:
    """Column of the real part of entry (i, j), i < j; the imaginary part follows it."""
    out = {}
    col = p
    for i in range(p):
        for j in range(i + 1, p):
            out[(i, j)] = col
            col += 2
    return out


def params_to_matrix(coords, p: int) -> tuple:
    """Inverse of :func:`matrix_to_params`."""
    if len(coords) != p * p:
        raise ValueError(f"expected {p * p} coordinates, got {len(coords)}")
    h = [[G0] * p for _ in range(p)]
    for i in range(p):
        h[i][i] = GaussianRational(coords[i])
    for (i, j), c in offdiag_index(p).items():
        x, y = coords[c], coords[c + 1]
        h[i][j] = GaussianRational(x, y)
        h[j][i] = GaussianRational(x, -y)
    return tuple(tuple(r) for r in h)


def matrix_to_params(h) -> tuple:
    p = len(h)
    coords = [Fraction(0)] * (p * p)
    for i in range(p):
        coords[i] = h[i][i].re
    for (i, j), c in offdiag_index(p).items():
        coords[c] = h[i][j].re
        coords[c + 1] = h[i][j].im
    return tuple(coords)


def form_coefficients(u, v, index=None) -> dict[int, GaussianRational]:
    """Coefficients of ``<u|H|v>`` as a linear form in the Hermitian coordinates."""
    p = len(u)
    index = index or offdiag_index(p)
    coef: dict[int, GaussianRational] = {}
    for k in range(p):
        if u[k] and v[k]:
            coef[k] = u[k].conj() * v[k]
    for (k, l), c in index.items():
        ukvl = u[k].conj() * v[l] if (u[k] and v[l]) else G0
        ulvk = u[l].conj() * v[k] if (u[l] and v[k]) else G0
        if not (ukvl or ulvk):
            continue
        x = ukvl + ulvk
        # entry (k,l) = x + iy, entry (l,k) = x - iy
        d = ukvl - ulvk
        y = GaussianRational(-d.im, d.re)
        if x:
            coef[c] = x
        if y:
            coef[c + 1] = y
    return coef


def _local_parts(states: StateSet, party: str):
    party = party.upper()
    if party not in PARTIES:
        raise ValueError(f"party must be A or B, got {party!r}")
    if party == "A":
        return states.m, [(s.a, s.b) for s in states]
    return states.n, [(s.b, s.a) for s in states]


def constraint_rows(states: StateSet, party: str) -> tuple[int, list[dict[int, Fraction]]]:
    """Sparse real rows of the preservation system for one party (no orthogonality check)."""
    p, parts = _local_parts(states, party)
    index = offdiag_index(p)
    rows = []
    cache: dict[tuple, tuple] = {}
    for (i, (u, x)), (j, (v, y)) in combinations(enumerate(parts), 2):
        if not vdot(x, y):
            continue
        key = (u, v)
        if key not in cache:
            coef = form_coefficients(u, v, index)
            re = {c: z.re for c, z in coef.items() if z.re}
            im = {c: z.im for c, z in coef.items() if z.im}
            cache[key] = (re, im)
        re, im = cache[key]
        if re:
            rows.append(dict(re))
        if im:
            rows.append(dict(im))
    return p, rows


def _require_orthogonal(states: StateSet) -> None:
    report = validate_orthogonality(states)
    if not report.ok:
        a, b, v = report.offending[0]
        raise NonOrthogonalInput(
            f"input set is not orthogonal ({len(report.offending)} bad pairs, e.g. <{a}|{b}> = {v})"
        )


def assemble_constraints(states: StateSet, party: str) -> RationalMatrix:
    """Real and imaginary rows of ``<a_s|H|a_t> = 0`` for every pair whose other-party factor is nonzero."""
    _require_orthogonal(states)
    p, rows = constraint_rows(states, party)
    return RationalMatrix.from_sparse_rows(rows, n_params(p))


@dataclass(frozen=True)
class SolutionSpace:
    party: str
    p: int
    basis: tuple  # Hermitian matrices
    constraint_count: int = 0

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _identity_satisfies(rows, p: int) -> bool:
    return all(sum((x for c, x in r.items() if c < p), Fraction(0)) == 0 for r in rows)


def solution_space(states: StateSet, party: str) -> SolutionSpace:
    """Exact space of Hermitian effects preserving orthogonality for ``party``."""
    _require_orthogonal(states)
    p, rows = constraint_rows(states, party)
    if not _identity_satisfies(rows, p):
        # unreachable for an orthogonal set; kept as a guard on the assembly
        raise NonOrthogonalInput("identity violates the assembled constraints")
    vecs = nullspace_sparse(rows, n_params(p))
    basis = tuple(params_to_matrix(v, p) for v in vecs)
    return SolutionSpace(party.upper(), p, basis, len(rows))


@dataclass(frozen=True)
class Witness:
    """Two-outcome local measurement, given by its effects ``M_k^dagger M_k``."""

    party: str
    epsilon: Fraction
    direction: tuple  # traceless K
    effects: tuple  # (E_plus, E_minus)


def gershgorin_bound(k) -> Fraction:
    """``max_i sum_j |K_ij|`` with ``|re| + |im|`` standing in for the modulus."""
    return max(sum((z.abs_bound() for z in row), Fraction(0)) for row in k)


def nontrivial_witness(space: SolutionSpace) -> Witness:
    """Build ``E_pm = (I +- eps K)/2`` from a non-identity direction K of the space.

    K is projected onto its traceless part (I is in the space, so this stays
    inside it) and ``eps = 1/(2 g)`` with g a Gershgorin bound, hence the
    spectrum of ``eps K`` lies in [-1/2, 1/2] and both effects are PSD.
    """
    p = space.p
    k = next((b for b in space.basis if not is_scalar_multiple_of_identity(b)), None)
    if space.dimension < 2 or k is None:
        raise TrivialSpace(f"party {space.party}: only trivial measurements preserve orthogonality")
    shift = trace(k) / p
    k0 = mat_add(k, mat_scale(identity(p), -shift))
    eps = 1 / (2 * gershgorin_bound(k0))
    half = Fraction(1, 2)
    i_half = mat_scale(identity(p), half)
    e_plus = mat_add(i_half, mat_scale(k0, eps * half))
    e_minus = mat_add(i_half, mat_scale(k0, -eps * half))
    return Witness(space.party, eps, k0, (e_plus, e_minus))


@dataclass(frozen=True)
class Verdict:
    m: int
    n: int
    state_count: int
    dim_a: int | None
    dim_b: int | None
    status: str
    witness: Witness | None = None


def verdict(states: StateSet, parties: str = "both") -> Verdict:
    """Certify indistinguishability iff every examined party's solution space is span{I}.

    Both parties are computed independently by default; no symmetry of the
    set is assumed.
    """
    which = {"both": ("A", "B"), "a": ("A",), "b": ("B",)}[parties.lower()]
    spaces = {party: solution_space(states, party) for party in which}
    dims = {party: sp.dimension for party, sp in spaces.items()}
    if all(d == 1 for d in dims.values()):
        status, wit = CERTIFIED, None
    else:
        status = INCONCLUSIVE
        party = next(party for party in which if dims[party] >= 2)
        wit = nontrivial_witness(spaces[party])
    return Verdict(states.m, states.n, len(states), dims.get("A"), dims.get("B"), status, wit)


def preserves_orthogonality(states: StateSet, party: str, effect) -> bool:
    """Direct check that ``(E (x) I)`` keeps every pair orthogonal (party A; mirrored for B)."""
    from .algebra import hermitian_inner_form

    _, parts = _local_parts(states, party)
    for (u, x), (v, y) in combinations(parts, 2):
        f = vdot(x, y)
        if f and hermitian_inner_form(u, effect, v):
            return False
    return True
