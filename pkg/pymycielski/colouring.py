"""Exact colouring solvers.

The extremal search works on partitions of the vertex set into ``k`` non-empty
independent sets. For a fixed partition the minimum colouring sum assigns index 1 to
the largest class, index 2 to the next one and so on; the maximum sum uses the
opposite order, and ``omega_max = (k + 1) * n - omega_min``. Both modes therefore
optimize over the same partitions and differ only in how ties are broken.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import networkx as nx

from pymycielski import consts
from pymycielski.graph import Graph, is_independent_set
from pymycielski.types import ClassSizeVector, Sense
from pymycielski.utils import (
    InfeasibleError,
    InvalidArgumentError,
    InvalidColouringError,
    OracleLimitError,
    SolverLimitError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Colouring:
    """Assignment of colour indices ``1..k`` to the vertices ``1..n``.

    ``colours[v - 1]`` is the colour of vertex ``v``.
    """

    k: int
    colours: tuple[int, ...]

    @classmethod
    def from_mapping(cls, assignment: Mapping[int, int], k: int | None = None):
        n = len(assignment)
        if set(assignment) != set(range(1, n + 1)):
            raise InvalidColouringError("colouring must cover exactly vertices 1..n")
        colours = tuple(assignment[v] for v in range(1, n + 1))
        return cls(max(colours, default=0) if k is None else k, colours)

    @property
    def n(self) -> int:
        return len(self.colours)

    def colour(self, v: int) -> int:
        return self.colours[v - 1]

    def classes(self) -> tuple[frozenset[int], ...]:
        members: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.colours, start=1):
            members[c - 1].add(v)
        return tuple(frozenset(s) for s in members)

    @property
    def size_vector(self) -> ClassSizeVector:
        return tuple(len(s) for s in self.classes())

    @property
    def omega(self) -> int:
        return sum(self.colours)

    def validate(self, g: Graph) -> None:
        """Check that the colouring is proper and surjective on ``g``.

        Raises:
            InvalidColouringError: Describing the first violation found.
        """
        if self.n != g.n:
            raise InvalidColouringError(
                f"colouring covers {self.n} vertices, graph has {g.n}"
            )
        for v, c in enumerate(self.colours, start=1):
            if not 1 <= c <= self.k:
                raise InvalidColouringError(
                    f"vertex {v} has colour {c} outside 1..{self.k}"
                )
        for u, v in g.sorted_edges():
            if self.colour(u) == self.colour(v):
                raise InvalidColouringError(
                    f"adjacent vertices {u} and {v} share colour {self.colour(u)}"
                )
        unused = sorted(set(range(1, self.k + 1)) - set(self.colours))
        if unused:
            raise InvalidColouringError(f"colours {unused} are not used")

    def is_proper(self, g: Graph) -> bool:
        return all(is_independent_set(g, cls) for cls in self.classes())


@dataclass(frozen=True)
class ExtremalResult:
    """Outcome of a minimum- or maximum-sum search with a fixed palette.

    ``multiplicity`` and ``optimal_size_vectors`` are only filled in by the oracle.
    When a node budget stopped the search early, ``proven`` is false and ``bound``
    holds a bound on the optimal colouring sum (a lower bound for ``min``, an upper
    bound for ``max``).
    """

    sense: Sense
    k: int
    omega: int
    witness: Colouring
    size_vector: ClassSizeVector
    multiplicity: int | None = None
    optimal_size_vectors: tuple[ClassSizeVector, ...] | None = None
    proven: bool = True
    bound: int | None = None
    nodes: int = 0


def canonical_size_vector(sizes: Iterable[int], sense: Sense) -> ClassSizeVector:
    return tuple(sorted(sizes, reverse=sense is Sense.MIN))


def canonical_sum(sizes: Iterable[int], sense: Sense) -> int:
    """Extremal colouring sum reachable by permuting colour indices of a fixed
    partition with the given class sizes."""
    ordered = canonical_size_vector(sizes, sense)
    return sum(i * t for i, t in enumerate(ordered, start=1))


def _moments(descending: ClassSizeVector) -> tuple[int, int]:
    omega = s2 = 0
    for i, t in enumerate(descending, start=1):
        omega += i * t
        s2 += i * i * t
    return omega, s2


def _partition_key(descending: ClassSizeVector, sense: Sense) -> tuple:
    """Ranking of a partition (given by its non-increasing class sizes); smaller is
    better. The colouring sum decides first, then the second moment of the
    assigned colouring (smallest for ``min``, largest for ``max``), then the size
    vector itself."""
    omega, s2 = _moments(descending)
    if sense is Sense.MIN:
        return (omega, s2, tuple(-t for t in descending))
    # the ascending assignment has second moment (k+1)^2 n - 2(k+1) omega + s2
    return (omega, -s2, tuple(reversed(descending)))


def _sense_omega(descending: ClassSizeVector, sense: Sense) -> int:
    omega, _ = _moments(descending)
    if sense is Sense.MIN:
        return omega
    return (len(descending) + 1) * sum(descending) - omega


def _witness(
    n: int, k: int, class_of: list[int], sizes: list[int], sense: Sense
) -> Colouring:
    """Number the classes of a partition by size (creation order breaks ties)."""
    if sense is Sense.MIN:
        order = sorted(range(k), key=lambda c: (-sizes[c], c))
    else:
        order = sorted(range(k), key=lambda c: (sizes[c], c))
    index = {c: i + 1 for i, c in enumerate(order)}
    return Colouring(k, tuple(index[class_of[v]] for v in range(n)))


def greedy_colouring(g: Graph) -> Colouring:
    """DSATUR greedy colouring (networkx ``saturation_largest_first``)."""
    if g.n < 1:
        raise InvalidArgumentError("graph must have at least one vertex")
    raw = nx.greedy_color(g.to_networkx(), strategy="saturation_largest_first")
    colouring = Colouring.from_mapping({v: c + 1 for v, c in raw.items()})
    logger.debug(f"DSATUR used {colouring.k} colours on {g.n} vertices")
    return colouring


def greedy_upper_bound(g: Graph) -> int:
    return greedy_colouring(g).k


def clique_lower_bound(g: Graph) -> int:
    if g.n < 1:
        raise InvalidArgumentError("graph must have at least one vertex")
    return max(len(c) for c in nx.find_cliques(g.to_networkx()))


def find_colouring(g: Graph, k: int) -> Colouring | None:
    """Exact search for a proper colouring with at most ``k`` colours.

    DSATUR backtracking: the next vertex is the one with the most distinct colours
    among its neighbours (ties by degree, then label), and a new colour is only
    tried once all used ones fail.

    Args:
        g (Graph): Graph to colour.
        k (int): Palette size.

    Returns:
        Colouring | None: A colouring using exactly the colours it reports, or None
            when ``g`` is not ``k``-colourable.
    """
    if k < 1:
        return None if g.n else Colouring(0, ())
    adjacency = g.adjacency
    colour: dict[int, int] = {}

    def pick() -> int:
        best, best_key = 0, (-1, -1, 0)
        for v in g.vertices:
            if v in colour:
                continue
            sat = len({colour[w] for w in adjacency[v] if w in colour})
            key = (sat, len(adjacency[v]), -v)
            if key > best_key:
                best, best_key = v, key
        return best

    def extend(used: int) -> bool:
        if len(colour) == g.n:
            return True
        v = pick()
        forbidden = {colour[w] for w in adjacency[v] if w in colour}
        for c in range(1, min(used + 1, k) + 1):
            if c in forbidden:
                continue
            colour[v] = c
            if extend(max(used, c)):
                return True
            del colour[v]
        return False

    if not extend(0):
        return None
    return Colouring.from_mapping(colour)


def chromatic_number(g: Graph) -> int:
    if g.n < 1:
        raise InvalidArgumentError("graph must have at least one vertex")
    lower, upper = clique_lower_bound(g), greedy_upper_bound(g)
    logger.debug(f"Chromatic number bounds: {lower} <= chi <= {upper}")
    for k in range(lower, upper):
        if find_colouring(g, k) is not None:
            return k
    return upper


class _PartitionSearch:
    """Branch and bound over partitions into ``k`` independent sets.

    Vertices are placed in a fixed order (degree descending, then label); a vertex
    either joins an existing class or opens the next one, so every partition is
    generated once. The bound completes the current class sizes optimistically:
    each missing class gets one vertex and every other remaining vertex joins the
    largest class. That completion majorizes every real one, so it bounds both
    the colouring sum and the second moment from below.
    """

    def __init__(self, g: Graph, k: int, sense: Sense, node_limit: int | None):
        self.g = g
        self.k = k
        self.sense = sense
        self.node_limit = node_limit
        self.order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
        position = {v: i for i, v in enumerate(self.order)}
        self.adj_mask = [
            sum(1 << position[w] for w in g.adjacency[v]) for v in self.order
        ]
        self.class_masks: list[int] = []
        self.sizes: list[int] = []
        self.class_of = [0] * g.n
        self.nodes = 0
        self.aborted = False
        self.abort_bound: int | None = None
        self.best_key: tuple | None = None
        self.best_moments: tuple[int, int] | None = None
        self.best_assignment: list[int] | None = None
        self.best_sizes: list[int] | None = None

    def _lower_bound(self, remaining: int) -> tuple[int, int]:
        missing = self.k - len(self.sizes)
        completion = sorted(self.sizes + [1] * missing, reverse=True)
        completion[0] += remaining - missing
        return _moments(tuple(completion))

    def _pruned(self, bound: tuple[int, int]) -> bool:
        if self.best_moments is None:
            return False
        omega, s2 = bound
        best_omega, best_s2 = self.best_moments
        if omega != best_omega:
            return omega > best_omega
        return self.sense is Sense.MIN and s2 > best_s2

    def run(self) -> None:
        if self.g.n == 0:
            return
        self._descend(0)

    def _descend(self, depth: int) -> None:
        n, k = self.g.n, self.k
        remaining = n - depth
        if depth == n:
            if len(self.sizes) == k:
                self._record_leaf()
            return
        if k - len(self.sizes) > remaining:
            return
        bound = self._lower_bound(remaining)
        if self._pruned(bound):
            return
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            self._abort(bound[0])
            return

        must_open = k - len(self.sizes) == remaining
        bit = 1 << depth
        mask = self.adj_mask[depth]
        if not must_open:
            for c in sorted(range(len(self.sizes)), key=lambda c: (-self.sizes[c], c)):
                if self.class_masks[c] & mask:
                    continue
                self.class_masks[c] |= bit
                self.sizes[c] += 1
                self.class_of[depth] = c
                self._descend(depth + 1)
                self.class_masks[c] &= ~bit
                self.sizes[c] -= 1
                if self.aborted:
                    self._abort(bound[0])
                    return
        if len(self.sizes) < k:
            self.class_masks.append(bit)
            self.sizes.append(1)
            self.class_of[depth] = len(self.sizes) - 1
            self._descend(depth + 1)
            self.class_masks.pop()
            self.sizes.pop()
            if self.aborted:
                self._abort(bound[0])

    def _abort(self, lower: int) -> None:
        self.aborted = True
        if self.abort_bound is None or lower < self.abort_bound:
            self.abort_bound = lower

    def _record_leaf(self) -> None:
        descending = tuple(sorted(self.sizes, reverse=True))
        key = _partition_key(descending, self.sense)
        if self.best_key is None or key < self.best_key:
            self.best_key = key
            self.best_moments = _moments(descending)
            self.best_assignment = list(self.class_of)
            self.best_sizes = list(self.sizes)
            logger.debug(
                f"New incumbent {descending} (omega_min={self.best_moments[0]}) "
                f"after {self.nodes} nodes"
            )

    def result(self) -> ExtremalResult:
        if self.best_assignment is None or self.best_sizes is None:
            if self.aborted:
                raise SolverLimitError(
                    f"node budget {self.node_limit} exhausted before any "
                    f"{self.k}-colouring was found"
                )
            raise InfeasibleError(f"graph is not {self.k}-colourable")
        n, k = self.g.n, self.k
        by_position = _witness(n, k, self.best_assignment, self.best_sizes, self.sense)
        colours = [0] * n
        for i, v in enumerate(self.order):
            colours[v - 1] = by_position.colours[i]
        witness = Colouring(k, tuple(colours))
        size_vector = canonical_size_vector(self.best_sizes, self.sense)
        bound = None
        if self.aborted and self.abort_bound is not None:
            bound = self.abort_bound
            if self.sense is Sense.MAX:
                bound = (k + 1) * n - bound
        return ExtremalResult(
            sense=self.sense,
            k=k,
            omega=witness.omega,
            witness=witness,
            size_vector=size_vector,
            proven=not self.aborted,
            bound=bound,
            nodes=self.nodes,
        )


def _check_palette(g: Graph, k: int) -> None:
    if g.n < 1:
        raise InvalidArgumentError("graph must have at least one vertex")
    if k < 1:
        raise InvalidArgumentError(f"palette size must be >= 1, got {k}")
    if k > g.n:
        raise InfeasibleError(
            f"palette size {k} exceeds {g.n} vertices; surjectivity impossible"
        )


def extremal_colouring(
    g: Graph, k: int, sense: Sense, node_limit: int | None = None
) -> ExtremalResult:
    """Minimum- or maximum-sum proper colouring using exactly ``k`` colours.

    Among colourings with the optimal colouring sum the one with the smallest
    (``min``) or largest (``max``) second moment is returned.

    Args:
        g (Graph): Graph to colour.
        k (int): Palette size, at least the chromatic number.
        sense (Sense): ``Sense.MIN`` or ``Sense.MAX``.
        node_limit (int | None, optional): Branch-and-bound node budget. When it
            runs out the best colouring found so far is returned with
            ``proven=False``. Defaults to None (exact).

    Raises:
        InfeasibleError: If ``k`` is below the chromatic number or above ``n``.
        SolverLimitError: If the budget ran out before any colouring was found.

    Returns:
        ExtremalResult: Optimal colouring and its class size vector.
    """
    _check_palette(g, k)
    if g.n > consts.SOLVER_VERTEX_SOFT_LIMIT:
        logger.warning(
            f"Extremal search on {g.n} vertices exceeds the soft limit of "
            f"{consts.SOLVER_VERTEX_SOFT_LIMIT}; it may not finish"
        )
    search = _PartitionSearch(g, k, sense, node_limit)
    search.run()
    if search.aborted:
        logger.warning(f"Node budget of {node_limit} exhausted; result not proven")
    result = search.result()
    logger.debug(
        f"{sense.value}-sum search with k={k}: omega={result.omega}, "
        f"sizes={result.size_vector}, nodes={result.nodes}"
    )
    return result


def _independent_partitions(g: Graph, k: int) -> Iterator[list[int]]:
    """Yield every partition of ``1..n`` into exactly ``k`` independent sets as a
    class index per vertex (classes numbered by first appearance)."""
    n = g.n
    adj_mask = [sum(1 << (w - 1) for w in g.adjacency[v]) for v in g.vertices]
    masks: list[int] = []
    class_of = [0] * n

    def place(i: int) -> Iterator[list[int]]:
        if i == n:
            if len(masks) == k:
                yield class_of
            return
        if k - len(masks) > n - i:
            return
        bit = 1 << i
        for c in range(len(masks)):
            if masks[c] & adj_mask[i]:
                continue
            masks[c] |= bit
            class_of[i] = c
            yield from place(i + 1)
            masks[c] &= ~bit
        if len(masks) < k:
            masks.append(bit)
            class_of[i] = len(masks) - 1
            yield from place(i + 1)
            masks.pop()

    yield from place(0)


@lru_cache(maxsize=32)
def _partition_table(g: Graph, k: int) -> dict[ClassSizeVector, tuple[int, ...]]:
    """Every non-increasing class size vector realized by some partition, mapped to
    the first partition (in enumeration order) realizing it."""
    table: dict[ClassSizeVector, tuple[int, ...]] = {}
    count = 0
    for class_of in _independent_partitions(g, k):
        count += 1
        sizes = [0] * k
        for c in class_of:
            sizes[c] += 1
        descending = tuple(sorted(sizes, reverse=True))
        if descending not in table:
            table[descending] = tuple(class_of)
    logger.debug(
        f"Oracle enumerated {count} partitions into {k} independent sets, "
        f"{len(table)} distinct size vectors"
    )
    return table


def realizable_size_vectors(
    g: Graph, k: int, vertex_limit: int = consts.ORACLE_VERTEX_LIMIT
) -> frozenset[ClassSizeVector]:
    """Non-increasing class size vectors of all partitions into ``k`` independent
    sets."""
    if g.n > vertex_limit:
        raise OracleLimitError(vertex_limit, g.n)
    _check_palette(g, k)
    return frozenset(_partition_table(g, k))


def oracle_extremal(
    g: Graph,
    k: int,
    sense: Sense,
    vertex_limit: int = consts.ORACLE_VERTEX_LIMIT,
) -> ExtremalResult:
    """Brute-force counterpart of :func:`extremal_colouring`.

    Enumerates all partitions into ``k`` independent sets. Besides the tie-broken
    optimum it reports every distinct optimal size vector (optimal meaning the
    colouring sum, before tie-breaking).

    Raises:
        OracleLimitError: If ``g`` has more than ``vertex_limit`` vertices.
    """
    if g.n > vertex_limit:
        raise OracleLimitError(vertex_limit, g.n)
    _check_palette(g, k)
    table = _partition_table(g, k)
    if not table:
        raise InfeasibleError(f"graph is not {k}-colourable")

    best = min(table, key=lambda d: _partition_key(d, sense))
    best_omega = _sense_omega(best, sense)
    optimal = sorted(
        canonical_size_vector(d, sense)
        for d in table
        if _sense_omega(d, sense) == best_omega
    )
    class_of = list(table[best])
    sizes = [class_of.count(c) for c in range(k)]
    witness = _witness(g.n, k, class_of, sizes, sense)
    return ExtremalResult(
        sense=sense,
        k=k,
        omega=witness.omega,
        witness=witness,
        size_vector=canonical_size_vector(best, sense),
        multiplicity=len(optimal),
        optimal_size_vectors=tuple(optimal),
    )
