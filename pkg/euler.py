"""Euler calculus on stratified spaces.

Iχ is computed three ways: from the chain-level IH ranks, stratum by stratum
from the IH of normal links, and as the compactly supported Euler
characteristic of the IC stalk data. All three must agree.
"""

import logging
from dataclasses import dataclass

from errors import InapplicableError
from intersection import ih_dims, link_ih, stalk_cohomology
from perversity import standard

logger = logging.getLogger('euler')


@dataclass(frozen=True)
class ConstructibleEntry:
    stratum: int
    component: int
    chi_c: int
    stalk_euler: int


@dataclass(frozen=True)
class ConstructibleData:
    """One (χ^c, stalk Euler characteristic) entry per stratum component"""
    entries: tuple = ()


def chi_c_constructible(data):
    """Σ χ^c(X_i)·χ(stalk_i)"""
    entries = data.entries if isinstance(data, ConstructibleData) else data
    total = 0
    for entry in entries:
        if isinstance(entry, ConstructibleEntry):
            total += entry.chi_c * entry.stalk_euler
        else:
            chi_c, stalk = entry
            total += chi_c * stalk
    return total


def ichi_c_direct(S, p, subdivisions=0, prime=None, force=False):
    """Alternating sum of the IH ranks"""
    value = ih_dims(S, p, subdivisions=subdivisions, prime=prime, force=force).euler_characteristic
    logger.info(f"Iχ^{p.spelling}({S.name or 'space'}) = {value} (chains)")
    return value


@dataclass(frozen=True)
class StratumTerm:
    """Contribution of one stratum component to the stratumwise Iχ"""
    stratum: int
    component: int
    dim: int
    chi_c: int
    link_ih: tuple
    inner: int
    contribution: int

    @property
    def key(self):
        return f"{self.stratum}:{self.component}"


@dataclass(frozen=True)
class StratumwiseResult:
    space: str
    perversity: object
    total: int
    terms: tuple


def _inner_sum(link, n, k, p):
    """Σ_{j=0}^{p_{n-k}} (-1)^j rk IH_{n-j-k-1}(L); 1 for top components"""
    if k == n:
        return 1
    return sum((-1) ** j * link[n - j - k - 1] for j in range(p(n - k) + 1))


def ichi_c_stratumwise(S, p):
    """Iχ as a sum over stratum components of χ^c times a link term"""
    n = S.n
    terms = []
    for component in S.all_components():
        k = component.stratum.dim
        link = () if k == n else tuple(link_ih(S, component.stratum.id, component.index, p).dims)
        inner = _inner_sum(link, n, k, p)
        chi_c = component.chi_c
        terms.append(StratumTerm(component.stratum.id, component.index, k, chi_c, link,
                                 inner, (-1) ** n * chi_c * inner))
    total = sum(term.contribution for term in terms)
    logger.info(f"Iχ^{p.spelling}({S.name or 'space'}) = {total} (stratumwise, {len(terms)} components)")
    return StratumwiseResult(S.name, p, total, tuple(terms))


def constructible_data(S, p):
    """IC stalk data per component, from the stalk formula on the link IH"""
    n = S.n
    entries = []
    for component in S.all_components():
        k = component.stratum.dim
        link = None if k == n else link_ih(S, component.stratum.id, component.index, p)
        stalk = stalk_cohomology(link, n, k, p)
        entries.append(ConstructibleEntry(
            component.stratum.id, component.index, component.chi_c,
            sum((-1) ** i * rank for i, rank in enumerate(stalk))))
    return ConstructibleData(tuple(entries))


def ichi_c_sheaf(S, p):
    """(-1)^n χ^c(S; IC_p) evaluated on the stalk data"""
    value = (-1) ** S.n * chi_c_constructible(constructible_data(S, p))
    logger.info(f"Iχ^{p.spelling}({S.name or 'space'}) = {value} (stalks)")
    return value


def ichi_middle_even(S):
    """Lower-middle Iχ of an even-dimensional space whose strata are all even-dimensional"""
    if S.n % 2:
        raise InapplicableError(f"{S.name or 'space'} has odd dimension {S.n}")
    odd = [s.id for s in S.strata if s.dim % 2]
    if odd:
        raise InapplicableError(f"{S.name or 'space'} has odd-dimensional strata {odd}")
    half = S.n // 2
    p = standard("lower-middle", S.n)
    total = 0
    for component in S.all_components():
        i = component.stratum.dim // 2
        if i == half:
            total += component.chi_c
            continue
        link = link_ih(S, component.stratum.id, component.index, p)
        total += component.chi_c * sum(
            (-1) ** j * link[S.n - j - 2 * i - 1] for j in range(half - i))
    logger.info(f"Iχ^m({S.name or 'space'}) = {total} (even strata)")
    return total
