"""Intersection homology of stratified spaces from allowable simplicial chains.

An i-simplex is p-allowable when, for every k >= 2, its largest face inside
the closed skeleton of codimension k has dimension at most i - k + p_k.
IC_i is the set of allowable i-chains whose boundary is allowable. The
closed-form oracles below (stalks, cones, suspensions, products with a
manifold) are used to cross-check the chain-level numbers.
"""

import logging
from dataclasses import dataclass

import numpy as np

from config import CHAIN_LEVEL_SIMPLEX_LIMIT
from errors import ChainSizeError, InconsistentDimensionsError, PerversityDimensionError
from linalg import SparseMatrix
from simplicial import ChainComplexQ, chain_complex, facets
from stratified import normal_link, subdivide

logger = logging.getLogger('intersection')

NEG_INF = float("-inf")


@dataclass(frozen=True)
class AllowabilityTable:
    """Allowable simplices per degree for one perversity"""
    space: str
    perversity: object
    allowable: tuple

    def is_allowable(self, simplex):
        d = len(simplex) - 1
        return d < len(self.allowable) and simplex in self.allowable[d]

    def count(self, d):
        return len(self.allowable[d]) if 0 <= d < len(self.allowable) else 0

    def counts(self):
        return tuple(len(level) for level in self.allowable)

    def is_subset_of(self, other):
        return all(level <= other.allowable[d] for d, level in enumerate(self.allowable))


@dataclass(frozen=True)
class IHDims:
    """Ranks of IH_0..IH_n"""
    dims: tuple
    perversity: object = None
    space: str = ""
    method: str = "ranks"
    exact: bool = True

    def __getitem__(self, i):
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    @property
    def n(self):
        return len(self.dims) - 1

    @property
    def euler_characteristic(self):
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    def to_dict(self):
        return {
            "space": self.space,
            "perversity": self.perversity.spelling if self.perversity is not None else None,
            "dims": list(self.dims),
            "method": self.method,
            "exact": self.exact,
        }


def _as_dims(values):
    return tuple(int(v) for v in (values.dims if isinstance(values, IHDims) else values))


def _check_perversity(S, p):
    if p.n != S.n:
        raise PerversityDimensionError(
            f"perversity is for dimension {p.n} but {S.name or 'the space'} has dimension {S.n}")


def _face_profiles(S):
    """profile[s][c]: largest dimension of a face of s whose stratum has codimension c"""
    n = S.n
    profiles = {}
    for level in S.complex.simplices:
        for simplex in level:
            profile = [NEG_INF] * (n + 1)
            if len(simplex) > 1:
                for face in facets(simplex):
                    for c, value in enumerate(profiles[face]):
                        if value > profile[c]:
                            profile[c] = value
            codim = n - S.stratum(S.labels[simplex]).dim
            profile[codim] = max(profile[codim], len(simplex) - 1)
            profiles[simplex] = profile
    return profiles


def allowability_table(S, p):
    """Flag every simplex of S as p-allowable or not"""
    _check_perversity(S, p)
    n = S.n
    allowable = []
    profiles = _face_profiles(S)
    for i, level in enumerate(S.complex.simplices):
        keep = set()
        for simplex in level:
            profile = profiles[simplex]
            deepest = NEG_INF
            ok = True
            # walk codimensions from n down so `deepest` is the max over codim >= k
            for k in range(n, 1, -1):
                deepest = max(deepest, profile[k])
                if deepest > i - k + p(k):
                    ok = False
                    break
            if ok:
                keep.add(simplex)
        allowable.append(frozenset(keep))
    table = AllowabilityTable(S.name, p, tuple(allowable))
    logger.debug(f"allowable simplices of {S.name or 'space'} for {p.spelling}: {table.counts()}")
    return table


def _gate(S, force):
    size = S.complex.n_simplices
    if size > CHAIN_LEVEL_SIMPLEX_LIMIT and not force:
        raise ChainSizeError(
            f"{S.name or 'space'} has {size} simplices, above the chain-level limit of "
            f"{CHAIN_LEVEL_SIMPLEX_LIMIT}; pass --force-chains to compute anyway")
    if size > CHAIN_LEVEL_SIMPLEX_LIMIT:
        logger.warning(f"chain-level computation on {size} simplices")


def _split(S, table):
    """Per degree: positions of allowable and of non-allowable simplices"""
    allowed, blocked = [], []
    for d, level in enumerate(S.complex.simplices):
        inside = table.allowable[d]
        allowed.append([k for k, s in enumerate(level) if s in inside])
        blocked.append([k for k, s in enumerate(level) if s not in inside])
    return allowed, blocked


def intersection_chain_complex(S, p, force=False):
    """Explicit IC complex: integer chain bases and boundaries in ambient coordinates"""
    _gate(S, force)
    table = allowability_table(S, p)
    full = chain_complex(S.complex)
    allowed, blocked = _split(S, table)
    K = S.complex

    bases, boundaries, row_labels = [], [], []
    for d in range(K.dim + 1):
        columns = allowed[d]
        if d == 0:
            kernel = [{j: 1} for j in range(len(columns))]
        else:
            kernel = full.boundaries[d].restrict(rows=blocked[d - 1], cols=columns).kernel_basis()
        chains = tuple(
            tuple((K.simplices[d][columns[j]], value) for j, value in sorted(vector.items()))
            for vector in kernel
        )
        bases.append(chains)
        if d == 0:
            boundaries.append(SparseMatrix.zero(0, len(chains)))
            row_labels.append(())
            continue
        rows = K.index(d - 1)
        image = []
        for chain in chains:
            out = {}
            for simplex, coefficient in chain:
                for i, face in enumerate(facets(simplex)):
                    r = rows[face]
                    value = out.get(r, 0) + (-1) ** i * coefficient
                    if value:
                        out[r] = value
                    else:
                        out.pop(r)
            image.append(out)
        boundaries.append(SparseMatrix(len(rows), tuple(image)))
        row_labels.append(K.simplices[d - 1])
    logger.debug(f"IC ranks for {p.spelling}: {[len(b) for b in bases]}")
    return ChainComplexQ(tuple(bases), tuple(boundaries), tuple(row_labels))


def _dims_by_ranks(S, p, prime):
    table = allowability_table(S, p)
    full = chain_complex(S.complex)
    allowed, blocked = _split(S, table)
    top = S.complex.dim
    r = [0] * (top + 2)
    s = [0] * (top + 2)
    for d in range(1, top + 1):
        boundary = full.boundaries[d]
        r[d] = boundary.restrict(cols=allowed[d]).rank(prime)
        s[d] = boundary.restrict(rows=blocked[d - 1], cols=allowed[d]).rank(prime)
        logger.debug(f"degree {d}: a={len(allowed[d])} rank={r[d]} blocked rank={s[d]}")
    return [len(allowed[i]) - r[i] - r[i + 1] + s[i + 1] for i in range(top + 1)]


def ih_dims(S, p, subdivisions=0, method="ranks", prime=None, force=False):
    """Ranks of IH_i(S) for the perversity p, i = 0..n.

    ``method="ranks"`` uses dim IH_i = a_i - rk ∂_i|A - rk ∂_{i+1}|A + rk N_{i+1},
    ``method="basis"`` takes homology of the explicit IC complex. A prime
    switches ranks to GF(prime) and marks the result inexact.
    """
    _check_perversity(S, p)
    if subdivisions:
        S = subdivide(S, subdivisions)
    _gate(S, force)
    if method == "basis":
        dims = intersection_chain_complex(S, p, force=True).homology_dims(prime)
    elif method == "ranks":
        dims = _dims_by_ranks(S, p, prime)
    else:
        raise ValueError(f"unknown IH method {method!r}")
    if prime:
        logger.warning(f"IH of {S.name or 'space'} computed mod {prime}; result is not certified exact")
    dims = tuple(dims) + (0,) * (S.n + 1 - len(dims))
    result = IHDims(dims[:S.n + 1], p, S.name, method, exact=not prime)
    logger.info(f"IH^{p.spelling} of {S.name or 'space'} (sd^{subdivisions}): {list(result.dims)}")
    return result


def stalk_cohomology(link_ih, n, k, p):
    """Stalk cohomology of the IC sheaf at a point of a k-dimensional stratum, H^0..H^n"""
    if k < 0 or k > n:
        raise InconsistentDimensionsError(f"stratum dimension {k} is outside 0..{n}")
    out = [0] * (n + 1)
    if k == n:
        out[0] = 1
        return out
    link = _as_dims(link_ih)
    if len(link) != n - k:
        raise InconsistentDimensionsError(
            f"link of a {k}-stratum in dimension {n} has dimension {n - k - 1}, got {len(link)} ranks")
    for i in range(0, p(n - k) + 1):
        out[i] = link[n - i - k - 1]
    return out


def suspension_ih_oracle(base_ih, p, space=""):
    """IH of the suspension of an m-dimensional space with isolated suspension points"""
    base = _as_dims(base_ih)
    m = len(base) - 1
    if p.n != m + 1:
        raise InconsistentDimensionsError(f"suspension of a {m}-space needs a perversity for {m + 1}")
    cut = m - p(m + 1)
    dims = [base[i] if i < cut else 0 if i == cut else base[i - 1] for i in range(m + 2)]
    return IHDims(tuple(dims), p, space, "suspension-oracle")


def cone_ih_oracle(base_ih, p, space=""):
    """IH of the closed cone: the base below the cut, nothing from the cut on"""
    base = _as_dims(base_ih)
    m = len(base) - 1
    if p.n != m + 1:
        raise InconsistentDimensionsError(f"cone on a {m}-space needs a perversity for {m + 1}")
    cut = m - p(m + 1)
    dims = [base[i] if i < cut and i <= m else 0 for i in range(m + 2)]
    return IHDims(tuple(dims), p, space, "cone-oracle")


def kunneth_manifold_oracle(x_ih, m_betti, space=""):
    """IH(X x M) for a closed manifold M: convolution of IH(X) with the Betti numbers of M"""
    x = np.array(_as_dims(x_ih), dtype=np.int64)
    m = np.array([int(b) for b in m_betti], dtype=np.int64)
    dims = tuple(int(v) for v in np.convolve(x, m))
    perversity = x_ih.perversity if isinstance(x_ih, IHDims) else None
    if perversity is not None:
        perversity = perversity.extend(len(dims) - 1)
    return IHDims(dims, perversity, space, "kunneth-oracle")


def link_ih(S, stratum_id, component, p):
    """IH of the normal link of one stratum component, for p restricted to the link's dimension"""
    link = normal_link(S, stratum_id, component=component)
    return ih_dims(link, p.restrict(link.n))
