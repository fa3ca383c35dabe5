"""Stratified pseudomanifolds: simplicial complexes whose simplices carry stratum labels.

Every simplex is labelled with the stratum containing its open interior. A
stratum of dimension k is a union of open simplices of dimension at most k
whose closure is a union of strata. The skeleta X_j (union of the strata of
dimension <= j) are subcomplexes.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from errors import (FrontierError, MalformedStratumError, StratumDimensionError,
                    UnknownStratumError, UnlabeledSimplexError)
from simplicial import (SimplicialComplex, barycentric_subdivision_with_carriers, facets,
                        from_simplices, product, product_base, split_product_vertex, suspension)

logger = logging.getLogger('stratified')


def _simplex_order(simplex):
    return (len(simplex), simplex)


@dataclass(frozen=True)
class Stratum:
    id: int
    dim: int
    name: str = ""


@dataclass(frozen=True)
class StratumComponent:
    """One connected component of a stratum"""
    stratum: Stratum
    index: int
    simplices: tuple

    @property
    def key(self):
        return f"{self.stratum.id}:{self.index}"

    @property
    def chi_c(self):
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    @property
    def is_point(self):
        return self.stratum.dim == 0 and len(self.simplices) == 1

    @property
    def top_simplices(self):
        return tuple(s for s in self.simplices if len(s) - 1 == self.stratum.dim)


@dataclass(frozen=True, eq=False)
class StratifiedSpace:
    """Labelled complex of formal dimension n.

    ``labels`` maps every simplex to a stratum id and is treated as read-only.
    """
    complex: SimplicialComplex
    n: int
    strata: tuple
    labels: dict = field(repr=False)
    name: str = ""

    @cached_property
    def _by_id(self):
        return {s.id: s for s in self.strata}

    def stratum(self, stratum_id):
        try:
            return self._by_id[stratum_id]
        except KeyError:
            raise UnknownStratumError(f"{self.name or 'space'} has no stratum {stratum_id!r}")

    @cached_property
    def _members(self):
        members = {s.id: [] for s in self.strata}
        for simplex in self.complex.all_simplices():
            members[self.labels[simplex]].append(simplex)
        return {k: tuple(v) for k, v in members.items()}

    def simplices_of(self, stratum_id):
        self.stratum(stratum_id)
        return self._members[stratum_id]

    @property
    def top_strata(self):
        return tuple(s for s in self.strata if s.dim == self.n)

    @property
    def singular_strata(self):
        return tuple(s for s in self.strata if s.dim < self.n)

    @cached_property
    def _components(self):
        result = {}
        for stratum in self.strata:
            members = self._members[stratum.id]
            graph = nx.Graph()
            graph.add_nodes_from(members)
            for simplex in members:
                for face in (facets(simplex) if len(simplex) > 1 else ()):
                    if self.labels[face] == stratum.id:
                        graph.add_edge(simplex, face)
            parts = [tuple(sorted(part, key=_simplex_order)) for part in nx.connected_components(graph)]
            parts.sort(key=lambda part: _simplex_order(part[0]))
            result[stratum.id] = tuple(
                StratumComponent(stratum, index, part) for index, part in enumerate(parts))
        return result

    def components(self, stratum_id):
        """Components of a stratum, ordered by their least simplex"""
        self.stratum(stratum_id)
        return self._components[stratum_id]

    def component(self, stratum_id, index):
        parts = self.components(stratum_id)
        if not 0 <= index < len(parts):
            raise UnknownStratumError(
                f"stratum {stratum_id} of {self.name or 'space'} has {len(parts)} components, no component {index}")
        return parts[index]

    def all_components(self):
        return tuple(c for s in self.strata for c in self._components[s.id])


def stratify(K, labeling, n, strata, name=""):
    """Check a labelling and wrap it as a StratifiedSpace"""
    declared = {}
    for raw in strata:
        stratum = raw if isinstance(raw, Stratum) else Stratum(int(raw["id"]), int(raw["dim"]), raw.get("name", ""))
        if stratum.id in declared:
            raise MalformedStratumError(f"stratum id {stratum.id} is declared twice")
        if stratum.dim < 0 or stratum.dim > n:
            raise StratumDimensionError(f"stratum {stratum.id} has dimension {stratum.dim}, outside 0..{n}")
        declared[stratum.id] = stratum

    labels = {}
    for simplex, stratum_id in labeling.items():
        key = tuple(sorted(simplex))
        if key not in K:
            raise MalformedStratumError(f"labelled simplex {key} is not in the complex")
        if stratum_id not in declared:
            raise UnknownStratumError(f"simplex {key} is labelled with undeclared stratum {stratum_id!r}")
        labels[key] = stratum_id
    for simplex in K.all_simplices():
        if simplex not in labels:
            raise UnlabeledSimplexError(f"simplex {simplex} has no stratum label")

    top_dim = {stratum_id: -1 for stratum_id in declared}
    for simplex, stratum_id in labels.items():
        top_dim[stratum_id] = max(top_dim[stratum_id], len(simplex) - 1)
    for stratum_id, stratum in declared.items():
        if top_dim[stratum_id] != stratum.dim:
            raise StratumDimensionError(
                f"stratum {stratum_id} is declared of dimension {stratum.dim} "
                f"but its largest simplex has dimension {top_dim[stratum_id]}")

    _check_frontier(K, labels, declared)
    _check_skeleta(K, labels, declared)

    ordered = tuple(sorted(declared.values(), key=lambda s: s.id))
    space = StratifiedSpace(K, n, ordered, labels, name)
    logger.debug(f"stratified {name or 'space'}: n={n}, strata {[(s.id, s.dim) for s in ordered]}")
    return space


def _check_frontier(K, labels, declared):
    # in_closure[t]: strata whose closure contains simplex t
    in_closure = {}
    for level in reversed(K.simplices):
        for simplex in level:
            own = in_closure.setdefault(simplex, set())
            own.add(labels[simplex])
            if len(simplex) > 1:
                for face in facets(simplex):
                    in_closure.setdefault(face, set()).update(own)
    meets = {stratum_id: set() for stratum_id in declared}
    covers = {}
    for simplex, stratum_id in labels.items():
        containing = in_closure[simplex]
        meets[stratum_id].update(containing)
        covers[stratum_id] = set(containing) if stratum_id not in covers else covers[stratum_id] & containing
    for stratum_id, closures in meets.items():
        for other in closures:
            if declared[stratum_id].dim > declared[other].dim:
                raise FrontierError(other, stratum_id,
                                    f"closure of stratum {other} meets stratum {stratum_id} of higher dimension")
            if other not in covers.get(stratum_id, set()):
                raise FrontierError(other, stratum_id,
                                    f"closure of stratum {other} meets stratum {stratum_id} without containing it")


def _check_skeleta(K, labels, declared):
    for j in sorted({s.dim for s in declared.values()}):
        for simplex in K.all_simplices():
            if declared[labels[simplex]].dim > j:
                continue
            for face in facets(simplex) if len(simplex) > 1 else ():
                if declared[labels[face]].dim > j:
                    raise FrontierError(labels[simplex], labels[face],
                                        f"skeleton X_{j} is not a subcomplex: {simplex} has face {face} outside it")


@dataclass(frozen=True)
class StratumSummary:
    id: int
    name: str
    dim: int
    simplex_counts: tuple
    chi_c: int
    n_components: int


@dataclass(frozen=True)
class StratumReport:
    """Outcome of the pseudomanifold checks on a stratified space"""
    space: str
    n: int
    strata: tuple
    pure: bool
    pseudomanifold: bool
    codimension_ok: bool
    frontier_ok: bool
    impure_simplices: tuple = ()
    bad_ridges: tuple = ()
    offending_strata: tuple = ()

    @property
    def passed(self):
        return self.pure and self.pseudomanifold and self.codimension_ok and self.frontier_ok


def validate_pseudomanifold(S):
    """Purity, the two-cofaces condition on (n-1)-simplices, and the codimension-one gap"""
    K, n = S.complex, S.n
    impure = tuple(s for s in K.maximal_simplices if len(s) - 1 != n)

    bad_ridges = []
    if n >= 1 and K.dim >= n:
        counts = {ridge: 0 for ridge in K.simplices[n - 1]}
        for simplex in K.simplices[n]:
            for ridge in facets(simplex):
                counts[ridge] += 1
        bad_ridges = [(ridge, count) for ridge, count in counts.items() if count != 2]

    offending = tuple(s.id for s in S.strata if n - 2 < s.dim < n)

    summaries = []
    for stratum in S.strata:
        counts = [0] * (K.dim + 1)
        for simplex in S.simplices_of(stratum.id):
            counts[len(simplex) - 1] += 1
        summaries.append(StratumSummary(
            stratum.id, stratum.name, stratum.dim, tuple(counts),
            chi_c_stratum(S, stratum.id), len(S.components(stratum.id))))

    report = StratumReport(
        space=S.name, n=n, strata=tuple(summaries),
        pure=not impure and K.dim == n,
        pseudomanifold=not bad_ridges,
        codimension_ok=not offending,
        # stratify() refuses labellings that break the frontier condition
        frontier_ok=True,
        impure_simplices=impure,
        bad_ridges=tuple(bad_ridges),
        offending_strata=offending,
    )
    if not report.passed:
        logger.warning(f"{S.name or 'space'} fails pseudomanifold checks: pure={report.pure} "
                       f"ridges={len(bad_ridges)} offending strata={offending}")
    return report


def chi_c_stratum(S, stratum_id):
    """Compactly supported Euler characteristic of an open stratum"""
    return sum((-1) ** (len(s) - 1) for s in S.simplices_of(stratum_id))


def normal_link(S, stratum_id, component=None, simplex=None):
    """Link of a simplex of the stratum, stratified by the labels of the carrying simplices.

    By default the link is taken at the least top simplex of the stratum (or
    of the given component). At a d-simplex the link has formal dimension
    n - d - 1, and a stratum Y meeting the star contributes a link stratum of
    dimension dim Y - d - 1. Passing a lower-dimensional simplex of the
    stratum gives the link of a point of the stratum times a disk.
    """
    stratum = S.stratum(stratum_id)
    members = S.simplices_of(stratum_id) if component is None else S.component(stratum_id, component).simplices
    if simplex is not None:
        sigma = tuple(sorted(simplex))
        if sigma not in members:
            raise MalformedStratumError(f"{sigma} is not a simplex of stratum {stratum_id}")
    else:
        candidates = [s for s in members if len(s) - 1 == stratum.dim]
        if not candidates:
            raise MalformedStratumError(f"stratum {stratum_id} has no simplex of dimension {stratum.dim}")
        sigma = min(candidates)
    d = len(sigma) - 1

    base = set(sigma)
    link_labels = {}
    for rho in S.complex.all_simplices():
        if len(rho) <= len(sigma) or not base.issubset(rho):
            continue
        tau = tuple(v for v in rho if v not in base)
        link_labels[tau] = S.labels[rho]

    used = sorted(set(link_labels.values()))
    link_strata = [Stratum(y, S.stratum(y).dim - d - 1, S.stratum(y).name) for y in used]
    link = from_simplices(set(link_labels))
    logger.debug(f"normal link of stratum {stratum_id} at {sigma}: f-vector {link.f_vector}")
    return stratify(link, link_labels, S.n - d - 1, link_strata,
                    name=f"link of {sigma} in {S.name or 'space'}")


def single_stratum(K, n=None, name="", stratum_name="regular"):
    """K with every simplex in one stratum (a manifold or a link with no singularities)"""
    n = K.dim if n is None else n
    if K.is_empty:
        return stratify(K, {}, n, (), name)
    labels = {s: 0 for s in K.all_simplices()}
    return stratify(K, labels, n, (Stratum(0, K.dim, stratum_name),), name)


def suspend_stratified(S, pole_name="poles", renames=None, name=None):
    """Suspension: old strata gain a dimension, the two cone points form a new 0-stratum"""
    renames = renames or {}
    K = S.complex
    north = max(K.vertices) + 1
    pole_id = max(s.id for s in S.strata) + 1
    labels = {}
    for simplex in K.all_simplices():
        label = S.labels[simplex]
        labels[simplex] = label
        labels[simplex + (north,)] = label
        labels[simplex + (north + 1,)] = label
    labels[(north,)] = pole_id
    labels[(north + 1,)] = pole_id
    strata = [Stratum(s.id, s.dim + 1, renames.get(s.id, s.name)) for s in S.strata]
    strata.append(Stratum(pole_id, 0, pole_name))
    return stratify(suspension(K), labels, S.n + 1, strata,
                    name=name if name is not None else f"susp({S.name})")


def product_stratified(X, M, name=None):
    """Product with strata the products of strata, numbered in the order of the pairs"""
    P = product(X.complex, M.complex)
    base = product_base(M.complex)
    pair_labels = {}
    for simplex in P.all_simplices():
        first, second = set(), set()
        for v in simplex:
            a, b = split_product_vertex(v, base)
            first.add(a)
            second.add(b)
        pair_labels[simplex] = (X.labels[tuple(sorted(first))], M.labels[tuple(sorted(second))])
    pairs = sorted(set(pair_labels.values()))
    ids = {pair: k for k, pair in enumerate(pairs)}
    strata = [
        Stratum(ids[(x, m)], X.stratum(x).dim + M.stratum(m).dim,
                f"{X.stratum(x).name} x {M.stratum(m).name}")
        for x, m in pairs
    ]
    labels = {simplex: ids[pair] for simplex, pair in pair_labels.items()}
    return stratify(P, labels, X.n + M.n, strata,
                    name=name if name is not None else f"{X.name} x {M.name}")


def subdivide(S, times=1):
    """Barycentric subdivision; each new simplex inherits the label of its carrier"""
    for _ in range(times):
        K, carriers = barycentric_subdivision_with_carriers(S.complex)
        labels = {simplex: S.labels[carriers[max(simplex)]] for simplex in K.all_simplices()}
        S = stratify(K, labels, S.n, S.strata, name=S.name)
    return S
