"""Separable projective measurement built from an orthogonal product basis."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import vdot
from .errors import DimensionMismatch, NotABasis
from .families import resolves_identity
from .states import ProductState, StateSet, validate_orthogonality


@dataclass(frozen=True)
class ProductProjector:
    """``|a><a|/<a|a> (x) |b><b|/<b|b>``, kept in factored form."""

    label: str
    a: tuple
    b: tuple
    weight: Fraction  # 1 / (<a|a><b|b>)

    def expand(self) -> dict[tuple[int, int], object]:
        """Nonzero entries of the joint ``mn x mn`` operator."""
        n = len(self.b)
        joint = {
            i * n + j: x * y for i, x in enumerate(self.a) if x for j, y in enumerate(self.b) if y
        }
        return {(r, c): x * y.conj() * self.weight for r, x in joint.items() for c, y in joint.items()}


@dataclass(frozen=True)
class Measurement:
    m: int
    n: int
    operators: tuple  # ProductProjector

    @property
    def labels(self) -> list[str]:
        return [op.label for op in self.operators]

    def is_complete(self) -> bool:
        basis = StateSet(self.m, self.n, tuple(ProductState(op.label, op.a, op.b) for op in self.operators))
        return resolves_identity(basis)


def projective_measurement(basis: StateSet) -> Measurement:
    if len(basis) != basis.m * basis.n:
        raise NotABasis(f"{len(basis)} states cannot span a {basis.m}x{basis.n} system ({basis.m * basis.n} needed)")
    report = validate_orthogonality(basis)
    if not report.ok:
        a, b, v = report.offending[0]
        raise NotABasis(f"states are not orthogonal: <{a}|{b}> = {v}")
    ops = tuple(ProductProjector(s.label, s.a, s.b, 1 / s.norm2()) for s in basis)
    meas = Measurement(basis.m, basis.n, ops)
    if not meas.is_complete():
        raise NotABasis("projectors do not sum to the identity")
    return meas


@dataclass(frozen=True)
class Distribution:
    labels: tuple
    probabilities: tuple  # Fraction per outcome

    @property
    def argmax(self) -> int:
        """0-based index of the most likely outcome (first one on ties)."""
        best = max(self.probabilities)
        return self.probabilities.index(best)


def distinguish(meas: Measurement, probe: ProductState) -> Distribution:
    """Outcome probabilities ``|<psi_i|probe>|^2 / (<psi_i|psi_i><probe|probe>)``, exact."""
    if probe.dims != (meas.m, meas.n):
        raise DimensionMismatch(f"probe is {probe.dims[0]}x{probe.dims[1]}, measurement is {meas.m}x{meas.n}")
    pn = 1 / probe.norm2()
    probs = []
    for op in meas.operators:
        fa = vdot(op.a, probe.a)
        if not fa:
            probs.append(Fraction(0))
            continue
        fb = vdot(op.b, probe.b)
        probs.append(fa.abs2() * fb.abs2() * op.weight * pn)
    return Distribution(tuple(op.label for op in meas.operators), tuple(probs))
