"""Finite abstract simplicial complexes and their rational chain complexes.

A simplex is a strictly increasing tuple of nonnegative integer vertex ids.
Complexes store their simplices per dimension in lexicographic order, which
fixes the row and column order of every boundary matrix.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property

from errors import ComplexError, EmptyComplexError, MalformedSimplexError, QuotientNotSimplicialError
from linalg import SparseMatrix

logger = logging.getLogger('simplicial')


@dataclass(frozen=True)
class SimplicialComplex:
    """Face-closed set of simplices; ``simplices[d]`` lists the d-simplices"""
    simplices: tuple

    @cached_property
    def dim(self):
        return len(self.simplices) - 1

    @property
    def is_empty(self):
        return not self.simplices

    @cached_property
    def vertices(self):
        return tuple(s[0] for s in self.simplices[0]) if self.simplices else ()

    @cached_property
    def f_vector(self):
        return tuple(len(level) for level in self.simplices)

    @cached_property
    def euler_characteristic(self):
        return sum((-1) ** d * count for d, count in enumerate(self.f_vector))

    @property
    def n_simplices(self):
        return sum(self.f_vector)

    @cached_property
    def _positions(self):
        return tuple({s: k for k, s in enumerate(level)} for level in self.simplices)

    def index(self, d):
        """Map from d-simplex to its position in the lexicographic order"""
        if d < 0 or d > self.dim:
            return {}
        return self._positions[d]

    def __contains__(self, simplex):
        d = len(simplex) - 1
        return 0 <= d <= self.dim and simplex in self._positions[d]

    def all_simplices(self):
        """All simplices, by dimension then lexicographically"""
        for level in self.simplices:
            yield from level

    @cached_property
    def maximal_simplices(self):
        covered = set()
        for level in self.simplices[1:]:
            for s in level:
                covered.update(facets(s))
        return tuple(s for s in self.all_simplices() if s not in covered)


@dataclass(frozen=True)
class ChainComplexQ:
    """Chain complex with exact rational boundary matrices.

    ``bases[d]`` holds the basis of degree d: simplices for the simplicial
    complex, integer chains ``((simplex, coefficient), ...)`` for subcomplexes.
    ``boundaries[d]`` has one column per basis element and one row per
    (d-1)-simplex listed in ``row_labels[d]``.
    """
    bases: tuple
    boundaries: tuple
    row_labels: tuple

    @property
    def dim(self):
        return len(self.bases) - 1

    def rank(self, d, prime=None):
        if d < 1 or d > self.dim:
            return 0
        return self.boundaries[d].rank(prime)

    def homology_dims(self, prime=None):
        ranks = [self.rank(d, prime) for d in range(self.dim + 2)]
        return [len(self.bases[d]) - ranks[d] - ranks[d + 1] for d in range(self.dim + 1)]

    def boundary_squared_is_zero(self):
        """Check ∂∂ = 0 exactly on every column of every boundary matrix"""
        for d in range(2, self.dim + 1):
            labels = self.row_labels[d]
            for column in self.boundaries[d].columns:
                chain = {labels[i]: value for i, value in column.items()}
                if boundary_chain(chain):
                    return False
        return True


def facets(simplex):
    """Codimension-one faces, in the order of the removed vertex"""
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))]


def faces(simplex):
    """All nonempty faces of a simplex, the simplex included"""
    for size in range(1, len(simplex) + 1):
        yield from itertools.combinations(simplex, size)


def boundary_chain(chain):
    """Simplicial boundary of a chain given as {simplex: coefficient}"""
    out = {}
    for simplex, coefficient in chain.items():
        if len(simplex) < 2:
            continue
        for i, face in enumerate(facets(simplex)):
            value = out.get(face, 0) + (-1) ** i * coefficient
            if value:
                out[face] = value
            else:
                out.pop(face, None)
    return out


def from_simplices(simplex_set):
    """Complex from a face-closed set of sorted tuples"""
    if not simplex_set:
        return SimplicialComplex(())
    top = max(len(s) for s in simplex_set)
    levels = [[] for _ in range(top)]
    for s in simplex_set:
        levels[len(s) - 1].append(s)
    return SimplicialComplex(tuple(tuple(sorted(level)) for level in levels))


def _close(maximal):
    closure = set()
    for simplex in maximal:
        if simplex in closure:
            continue
        closure.update(faces(simplex))
    return from_simplices(closure)


def _check_simplex(raw):
    try:
        vertices = tuple(raw)
    except TypeError:
        raise MalformedSimplexError(f"simplex {raw!r} is not a sequence of vertex ids")
    if not vertices:
        raise MalformedSimplexError("empty simplex")
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise MalformedSimplexError(f"vertex id {v!r} in {vertices} is not a nonnegative integer")
    if len(set(vertices)) != len(vertices):
        raise MalformedSimplexError(f"simplex {vertices} repeats a vertex")
    return tuple(sorted(vertices))


def build_complex(maximal_simplices):
    """Face closure of the given simplices"""
    complex_ = _close(_check_simplex(raw) for raw in maximal_simplices)
    logger.debug(f"built complex with f-vector {complex_.f_vector}")
    return complex_


def _require_nonempty(K, operation):
    if K.is_empty:
        raise EmptyComplexError(f"{operation} needs a nonempty complex")


def chain_complex(K):
    """Simplicial chain complex with alternating-sign boundaries"""
    _require_nonempty(K, "chain_complex")
    boundaries = [SparseMatrix.zero(0, K.f_vector[0])]
    row_labels = [()]
    for d in range(1, K.dim + 1):
        rows = K.index(d - 1)
        columns = tuple(
            {rows[face]: (-1) ** i for i, face in enumerate(facets(s))}
            for s in K.simplices[d]
        )
        boundaries.append(SparseMatrix(len(rows), columns))
        row_labels.append(K.simplices[d - 1])
    return ChainComplexQ(K.simplices, tuple(boundaries), tuple(row_labels))


def homology_dims(K, prime=None):
    """Rational Betti numbers, index 0..dim"""
    dims = chain_complex(K).homology_dims(prime)
    logger.debug(f"homology dims {dims} for f-vector {K.f_vector}")
    return dims


def cone(K):
    _require_nonempty(K, "cone")
    apex = max(K.vertices) + 1
    simplices = set(K.all_simplices())
    simplices.update(s + (apex,) for s in K.all_simplices())
    simplices.add((apex,))
    return from_simplices(simplices)


def suspension(K):
    """Two cones over K glued along K"""
    _require_nonempty(K, "suspension")
    north = max(K.vertices) + 1
    south = north + 1
    simplices = set(K.all_simplices())
    for apex in (north, south):
        simplices.update(s + (apex,) for s in K.all_simplices())
        simplices.add((apex,))
    return from_simplices(simplices)


def product_base(L):
    """Multiplier S of the vertex pairing (a, b) -> a*S + b for products with L"""
    return max(L.vertices) + 1


def split_product_vertex(vertex, base):
    return divmod(vertex, base)


def product(K, L):
    """Staircase triangulation of |K| x |L|"""
    _require_nonempty(K, "product")
    _require_nonempty(L, "product")
    base = product_base(L)
    maximal = []
    for sigma in K.maximal_simplices:
        for tau in L.maximal_simplices:
            p, q = len(sigma) - 1, len(tau) - 1
            for steps in itertools.combinations(range(p + q), p):
                i = j = 0
                path = [sigma[0] * base + tau[0]]
                for t in range(p + q):
                    if i < p and t in steps:
                        i += 1
                    else:
                        j += 1
                    path.append(sigma[i] * base + tau[j])
                maximal.append(tuple(path))
    result = _close(maximal)
    logger.debug(f"product complex has f-vector {result.f_vector}")
    return result


def quotient_vertices(K, identify):
    """Identify the vertices in each block of a partition.

    Each block collapses onto its smallest id. Refuses quotients that would
    create a degenerate simplex or merge two simplices.
    """
    representative = {}
    known = set(K.vertices)
    for block in identify:
        block = tuple(block)
        if not block:
            continue
        target = min(block)
        for v in block:
            if v not in known:
                raise ComplexError(f"vertex {v} of the partition is not in the complex")
            if v in representative:
                raise ComplexError(f"vertex {v} appears in two blocks of the partition")
            representative[v] = target

    images = {}
    for simplex in K.all_simplices():
        image = tuple(sorted({representative.get(v, v) for v in simplex}))
        if len(image) < len(simplex):
            raise QuotientNotSimplicialError(
                f"simplex {simplex} degenerates to {image}; subdivide first")
        if len(simplex) > 1 and image in images:
            raise QuotientNotSimplicialError(
                f"simplices {images[image]} and {simplex} both map to {image}; subdivide first")
        images[image] = simplex
    return from_simplices(set(images))


def disjoint_union(K, L):
    """K together with a copy of L whose ids are shifted past those of K"""
    if L.is_empty:
        return K
    shift = max(K.vertices) + 1 if not K.is_empty else 0
    simplices = set(K.all_simplices())
    simplices.update(tuple(v + shift for v in s) for s in L.all_simplices())
    return from_simplices(simplices)


def barycentric_subdivision_with_carriers(K):
    """Barycentric subdivision and, per new vertex id, the simplex it is the barycenter of.

    New vertex ids follow the (dimension, lexicographic) order of K's
    simplices, so the largest id of a new simplex is its carrier.
    """
    _require_nonempty(K, "barycentric_subdivision")
    carriers = tuple(K.all_simplices())
    ids = {s: k for k, s in enumerate(carriers)}
    maximal = set()
    for simplex in K.maximal_simplices:
        for order in itertools.permutations(simplex):
            maximal.add(tuple(ids[tuple(sorted(order[:k + 1]))] for k in range(len(order))))
    return _close(maximal), carriers


def barycentric_subdivision(K):
    return barycentric_subdivision_with_carriers(K)[0]
