"""Multiplicities, singular indices and the Poincaré–Hopf check for stratified vector fields.

Vector fields are symbolic: a zero is a stratum component together with the
classical index of the field restricted to that stratum. Radiality of the
field is taken on trust from the caller.
"""

import logging
from dataclasses import dataclass

from errors import StratificationError, ZeroDataError
from euler import ichi_c_direct
from intersection import link_ih

logger = logging.getLogger('hopf')


@dataclass(frozen=True)
class ZeroDatum:
    stratum: int
    component: int
    index: int
    label: str = ""

    @property
    def key(self):
        return f"{self.stratum}:{self.component}"


@dataclass(frozen=True)
class PHRow:
    stratum: int
    component: int
    label: str
    chi_c: int
    multiplicity: int
    index: int
    singular_index: int


@dataclass(frozen=True)
class PHReport:
    space: str
    perversity: object
    ichi: int
    rows: tuple
    total: int

    @property
    def equal(self):
        return self.ichi == self.total

    @property
    def difference(self):
        return self.ichi - self.total

    @property
    def verdict(self):
        return "equal" if self.equal else "mismatch"


def multiplicity(S, p, stratum_id, component=0):
    """Multiplicity of S at a point of the given stratum component"""
    part = S.component(stratum_id, component)
    n, k = S.n, part.stratum.dim
    if k == n:
        return (-1) ** n
    link = link_ih(S, stratum_id, component, p)
    value = sum((-1) ** i * link[i - k - 1] for i in range(n - p(n - k), n + 1))
    logger.debug(f"m^{p.spelling} at {part.key} of {S.name or 'space'}: {value} (link IH {list(link.dims)})")
    return value


def singular_index(m, ind):
    return m * ind


def verify_poincare_hopf(S, p, zeros):
    """Compare Iχ with the sum of the singular indices of the declared zeros"""
    multiplicities = {}
    rows = []
    for zero in zeros:
        try:
            part = S.component(zero.stratum, zero.component)
        except StratificationError as e:
            raise ZeroDataError(f"zero {zero.label or zero.key}: {e}")
        if part.is_point and zero.index != 1:
            raise ZeroDataError(
                f"zero {zero.label or zero.key} sits on a point stratum and must have index 1, got {zero.index}")
        if zero.key not in multiplicities:
            multiplicities[zero.key] = multiplicity(S, p, zero.stratum, zero.component)
        m = multiplicities[zero.key]
        rows.append(PHRow(zero.stratum, zero.component, zero.label, part.chi_c,
                          m, zero.index, singular_index(m, zero.index)))

    ichi = ichi_c_direct(S, p)
    total = sum(row.singular_index for row in rows)
    report = PHReport(S.name, p, ichi, tuple(rows), total)
    if report.equal:
        logger.info(f"Poincaré–Hopf holds on {S.name or 'space'} for {p.spelling}: {ichi} = {total}")
    else:
        logger.warning(f"Poincaré–Hopf mismatch on {S.name or 'space'} for {p.spelling}: "
                       f"Iχ = {ichi}, Σ indices = {total}")
    return report


def ichi_by_multiplicities(S, p):
    """Σ over stratum components of χ^c times the multiplicity"""
    total = sum(part.chi_c * multiplicity(S, p, part.stratum.id, part.index)
                for part in S.all_components())
    logger.info(f"Iχ^{p.spelling}({S.name or 'space'}) = {total} (multiplicities)")
    return total


@dataclass(frozen=True)
class ConverseWitness:
    stratum: int
    component: int
    name: str
    dim: int
    chi_c: int

    @property
    def key(self):
        return f"{self.stratum}:{self.component}"


@dataclass(frozen=True)
class ConverseDecision:
    space: str
    exists: bool
    witnesses: tuple


def nonsingular_radial_exists(S):
    """A totally radial field without zeros exists iff every stratum component has χ^c = 0"""
    witnesses = tuple(
        ConverseWitness(part.stratum.id, part.index, part.stratum.name, part.stratum.dim, part.chi_c)
        for part in S.all_components() if part.chi_c != 0
    )
    decision = ConverseDecision(S.name, not witnesses, witnesses)
    logger.info(f"nonsingular radial field on {S.name or 'space'}: {decision.exists} "
                f"({len(witnesses)} obstructing components)")
    return decision
