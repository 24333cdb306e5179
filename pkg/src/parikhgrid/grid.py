"""The grid of fixed-order Parikh vectors.

Undirected view: vertices are all order-k vectors over sigma letters, edges
join neighbors (vectors one window shift apart).  Directed view: two
anti-parallel labeled arcs per neighbor pair, plus one labeled self-loop
("bow") per non-zero coordinate of each vertex, modeling window shifts that
do not change the vector.

Adjacency is computed arithmetically from the vector, so grids stay cheap
even when the vertex count is large; explicit edge lists are only produced
by the export iterators.
"""

import math
from dataclasses import dataclass

from . import vectors as V
from .errors import CapacityExceeded, InvalidInput, LayoutUnsupported

# Kinds returned by classify_clique.
COMMON_CHILD = "common_child"
COMMON_PARENT = "common_parent"
BOTH = "both"
NOT_A_CLIQUE = "not_a_clique"
SINGLETON = "singleton"

# Vertex enumeration is materialized by exports and by several operations,
# so grids are capped well below the 64-bit vector-count bound.
MAX_GRID_VERTICES = 5_000_000


@dataclass(frozen=True)
class EdgeLabel:
    """Letters exchanged by a window shift: ``out_letter`` leaves the
    window, ``in_letter`` enters.  Bows carry (x, x)."""

    out_letter: str
    in_letter: str


@dataclass(frozen=True)
class CliqueClassification:
    kind: str
    common_child: tuple = None
    common_parent: tuple = None


class PdbGrid:
    """Grid of all order-k Parikh vectors over a sigma-letter alphabet."""

    def __init__(self, k, sigma):
        if k < 1 or sigma < 1:
            raise InvalidInput("grid needs k >= 1 and sigma >= 1, got k=%r "
                               "sigma=%r" % (k, sigma))
        count = V.ensure_capacity(k, sigma)
        if count > MAX_GRID_VERTICES:
            raise CapacityExceeded(
                "grid would have %d vertices, above the %d-vertex bound"
                % (count, MAX_GRID_VERTICES))
        self.k = k
        self.sigma = sigma
        self.alphabet = V.Alphabet(sigma)
        self.vertex_count = count

    def __repr__(self):
        return "PdbGrid(k=%d, sigma=%d)" % (self.k, self.sigma)

    # -- vertex addressing ------------------------------------------------

    def vertices(self):
        """All vertices in rank order (the canonical colex enumeration)."""
        return V.enumerate_pv(self.k, self.sigma)

    def rank(self, p):
        self._check_vertex(p)
        return V.pv_rank(p)

    def unrank(self, i):
        return V.pv_unrank(i, self.k, self.sigma)

    def contains(self, p):
        return (len(p) == self.sigma and min(p, default=0) >= 0
                and sum(p) == self.k)

    def _check_vertex(self, p):
        if not self.contains(p):
            raise InvalidInput("%r is not an order-%d vector over %d letters"
                               % (p, self.k, self.sigma))

    # -- adjacency ---------------------------------------------------------

    def neighbors(self, p):
        self._check_vertex(p)
        return V.neighbors(p)

    def degree(self, p):
        """gamma(p) * (sigma - 1)."""
        self._check_vertex(p)
        return V.support_size(p) * (self.sigma - 1)

    def bows(self, p):
        """One self-loop label per non-zero coordinate of p."""
        self._check_vertex(p)
        return [EdgeLabel(self.alphabet.letter(i), self.alphabet.letter(i))
                for i, c in enumerate(p) if c]

    def edge_label(self, p, q):
        """Label of the directed edge p -> q (q a neighbor of p)."""
        self._check_vertex(p)
        self._check_vertex(q)
        if not V.is_neighbor(p, q):
            raise InvalidInput("%r and %r are not neighbors" % (p, q))
        out_i = next(i for i in range(self.sigma) if q[i] < p[i])
        in_i = next(i for i in range(self.sigma) if q[i] > p[i])
        return EdgeLabel(self.alphabet.letter(out_i), self.alphabet.letter(in_i))

    # -- aggregate structure (materialized on demand) ----------------------

    def undirected_edges(self):
        """Each neighbor pair once, as (p, q) with rank(p) < rank(q)."""
        for p in self.vertices():
            rp = V.pv_rank(p)
            for q in V.neighbors(p):
                if V.pv_rank(q) > rp:
                    yield p, q

    def directed_edges(self):
        """All labeled arcs, bows included, as (p, q, label)."""
        for p in self.vertices():
            for label in self.bows(p):
                yield p, p, label
            for q in V.neighbors(p):
                yield p, q, self.edge_label(p, q)

    def undirected_edge_count(self):
        return sum(V.support_size(p) for p in self.vertices()) * (self.sigma - 1) // 2

    def bow_count(self):
        return sum(V.support_size(p) for p in self.vertices())

    # -- order-(k +/- 1) simplices -----------------------------------------

    def simplex_of_parent(self, r):
        """Children of an order-(k+1) vector; always a clique in the grid."""
        if len(r) != self.sigma or sum(r) != self.k + 1:
            raise InvalidInput("expected an order-%d vector over %d letters, "
                               "got %r" % (self.k + 1, self.sigma, r))
        return V.children(r)

    def simplex_of_child(self, q):
        """Parents of an order-(k-1) vector; always a clique in the grid."""
        if len(q) != self.sigma or sum(q) != self.k - 1:
            raise InvalidInput("expected an order-%d vector over %d letters, "
                               "got %r" % (self.k - 1, self.sigma, q))
        return V.parents(q)


def build_grid(k, sigma):
    return PdbGrid(k, sigma)


def classify_clique(vs):
    """Classify a set of equal-order vectors by shared child/parent.

    Pairwise neighbors always share at most one child (their meet) and at
    most one parent (their join).  Cliques of size >= 3 have exactly one of
    the two; pairs have both; a singleton is reported as its own kind.
    """
    vs = list(set(vs))
    if not vs:
        raise InvalidInput("cannot classify an empty vertex set")
    k = sum(vs[0])
    if any(len(p) != len(vs[0]) or sum(p) != k for p in vs):
        raise InvalidInput("clique classification needs vectors of one order "
                           "over one alphabet")
    if len(vs) == 1:
        return CliqueClassification(kind=SINGLETON)
    for i, p in enumerate(vs):
        for q in vs[i + 1:]:
            if not V.is_neighbor(p, q):
                return CliqueClassification(kind=NOT_A_CLIQUE)
    low = V.meet(vs)
    high = V.join(vs)
    child = low if sum(low) == k - 1 else None
    parent = high if sum(high) == k + 1 else None
    if child is not None and parent is not None:
        kind = BOTH
    elif child is not None:
        kind = COMMON_CHILD
    elif parent is not None:
        kind = COMMON_PARENT
    else:
        # Cannot occur for pairwise neighbors; guard against misuse.
        return CliqueClassification(kind=NOT_A_CLIQUE)
    return CliqueClassification(kind=kind, common_child=child,
                                common_parent=parent)


_SQRT3_2 = math.sqrt(3.0) / 2.0


def layout_2d(grid):
    """Triangular drawing coordinates for sigma = 3.

    Maps (p1, p2, p3) to (p2 + p3/2, sqrt(3)/2 * p3); neighbor pairs land at
    Euclidean distance exactly 1.
    """
    if grid.sigma != 3:
        raise LayoutUnsupported("2D layout is defined for sigma=3 only, "
                                "got sigma=%d" % grid.sigma)
    return {p: (p[1] + p[2] / 2.0, _SQRT3_2 * p[2]) for p in grid.vertices()}
