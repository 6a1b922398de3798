from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable

import networkx as nx

from pymycielski.types import Edge, Family
from pymycielski.utils import (
    EdgeListParseError,
    GraphNotConnectedError,
    InvalidArgumentError,
    InvalidInstanceError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on the vertices ``1..n``.

    Edges are stored as pairs ``(u, v)`` with ``u < v``. Instances are immutable and
    can be shared freely; use :meth:`from_edges` to build one from arbitrary pairs.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidArgumentError(f"vertex count must be >= 0, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            if not (1 <= u < v <= self.n):
                raise InvalidArgumentError(
                    f"edge ({u}, {v}) must satisfy 1 <= u < v <= {self.n}"
                )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        normalized: set[Edge] = set()
        for u, v in edges:
            edge = (min(u, v), max(u, v))
            if edge in normalized:
                raise InvalidArgumentError(f"duplicate edge {edge}")
            normalized.add(edge)
        return cls(n, frozenset(normalized))

    @classmethod
    def from_networkx(cls, g: nx.Graph, order: list[Any] | None = None) -> Graph:
        """Relabel a networkx graph onto ``1..n``.

        Args:
            g (nx.Graph): Source graph.
            order (list | None, optional): Node order defining the labels; node
                ``order[i]`` becomes vertex ``i + 1``. Defaults to ``g``'s node order.
        """
        nodes = list(g.nodes) if order is None else order
        label = {node: i + 1 for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((label[u], label[v]) for u, v in g.edges))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.sorted_edges())
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ws) for v, ws in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def has_triangle(self) -> bool:
        return any(nx.triangles(self.to_networkx()).values())

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


_MIN_SIZE = {
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.COMPLETE: 1,
    Family.WHEEL: 3,
    Family.FAN: 1,
}


@dataclass(frozen=True)
class FamilyInstance:
    """A member of one of the standard graph families, optionally Mycielskian.

    For ``complete_bipartite`` the part sizes are normalized so that ``a >= b`` and
    ``n`` is ``a + b``.
    """

    family: Family
    n: int
    a: int | None = None
    b: int | None = None
    mycielskian: bool = False

    def __post_init__(self) -> None:
        if self.family is Family.COMPLETE_BIPARTITE:
            if self.a is None or self.b is None:
                raise InvalidInstanceError("complete_bipartite requires a and b")
            a, b = max(self.a, self.b), min(self.a, self.b)
            if b < 1:
                raise InvalidInstanceError(
                    f"complete_bipartite requires a >= b >= 1, got a={a}, b={b}"
                )
            if self.n != a + b:
                raise InvalidInstanceError(
                    f"complete_bipartite requires n = a + b, got n={self.n}, "
                    f"a={a}, b={b}"
                )
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
            object.__setattr__(self, "n", a + b)
            return
        if self.a is not None or self.b is not None:
            raise InvalidInstanceError(
                f"part sizes a, b only apply to complete_bipartite, not "
                f"{self.family.value}"
            )
        minimum = _MIN_SIZE[self.family]
        if self.n < minimum:
            raise InvalidInstanceError(
                f"{self.family.value} requires n >= {minimum}, got {self.n}"
            )

    @classmethod
    def complete_bipartite(
        cls, a: int, b: int, mycielskian: bool = False
    ) -> FamilyInstance:
        return cls(Family.COMPLETE_BIPARTITE, a + b, a, b, mycielskian)

    def with_mycielskian(self, flag: bool = True) -> FamilyInstance:
        return replace(self, mycielskian=flag)

    @property
    def label(self) -> str:
        """Short human-readable name, e.g. ``mu(P_3)`` or ``K_{2,1}``."""
        match self.family:
            case Family.PATH:
                base = f"P_{self.n}"
            case Family.CYCLE:
                base = f"C_{self.n}"
            case Family.COMPLETE:
                base = f"K_{self.n}"
            case Family.COMPLETE_BIPARTITE:
                base = f"K_{{{self.a},{self.b}}}"
            case Family.WHEEL:
                base = f"W_{self.n + 1}"
            case Family.FAN:
                base = f"F_{self.n + 1}"
            case _:
                base = self.family.value
        return f"mu({base})" if self.mycielskian else base

    @property
    def base_order(self) -> int:
        """Vertex count of the base graph; wheels and fans add a hub to ``n``."""
        if self.family in (Family.WHEEL, Family.FAN):
            return self.n + 1
        return self.n

    @property
    def order(self) -> int:
        return 2 * self.base_order + 1 if self.mycielskian else self.base_order

    @property
    def sort_key(self) -> tuple[str, int, int, int]:
        return (self.family.value, self.n, self.a or 0, self.b or 0)

    def parameters(self) -> dict[str, int | None]:
        return {"n": self.n, "a": self.a, "b": self.b}


def make_family(instance: FamilyInstance) -> Graph:
    """Build the graph described by a family instance.

    Wheels and fans put the hub on the last vertex ``n + 1`` so that the rim (path)
    keeps the labels of the plain cycle (path) generator.

    Args:
        instance (FamilyInstance): Family, size parameters and Mycielskian flag.

    Returns:
        Graph: The family graph, or its Mycielskian when the flag is set.
    """
    n = instance.n
    match instance.family:
        case Family.PATH:
            base = Graph.from_networkx(nx.path_graph(n), order=list(range(n)))
        case Family.CYCLE:
            base = Graph.from_networkx(nx.cycle_graph(n), order=list(range(n)))
        case Family.COMPLETE:
            base = Graph.from_networkx(nx.complete_graph(n), order=list(range(n)))
        case Family.COMPLETE_BIPARTITE:
            base = Graph.from_networkx(
                nx.complete_bipartite_graph(instance.a, instance.b),
                order=list(range(n)),
            )
        case Family.WHEEL:
            # networkx puts the hub on node 0
            base = Graph.from_networkx(
                nx.wheel_graph(n + 1), order=[*range(1, n + 1), 0]
            )
        case Family.FAN:
            g = nx.path_graph(n)
            g.add_edges_from((n, v) for v in range(n))
            base = Graph.from_networkx(g, order=list(range(n + 1)))
        case _:
            raise InvalidInstanceError(f"unknown family {instance.family!r}")
    logger.debug(f"Built {instance.family.value} base graph with {base.n} vertices")
    return mycielskian(base) if instance.mycielskian else base


def mycielskian(g: Graph) -> Graph:
    """Mycielskian of ``g`` with the fixed layout ``v_i = i``, ``u_i = n + i`` and
    apex ``2n + 1``.

    Args:
        g (Graph): Graph with at least one vertex.

    Returns:
        Graph: Graph on ``2n + 1`` vertices with ``3m + n`` edges.
    """
    if g.n < 1:
        raise InvalidArgumentError("mycielskian requires at least one vertex")
    # networkx numbers shadows n..2n-1 and the apex 2n when nodes are 0..n-1
    m = nx.mycielskian(nx.convert_node_labels_to_integers(g.to_networkx()))
    return Graph.from_networkx(m, order=list(range(2 * g.n + 1)))


def graph_power(g: Graph, r: int) -> Graph:
    """``r``-th power of ``g``: vertices at distance ``1..r`` become adjacent."""
    if r < 1:
        raise InvalidArgumentError(f"power must be >= 1, got {r}")
    powered = nx.power(g.to_networkx(), r)
    return Graph.from_edges(g.n, powered.edges)


def diameter(g: Graph) -> int:
    if not g.is_connected():
        raise GraphNotConnectedError()
    return nx.diameter(g.to_networkx())


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    vertices = set(s)
    for v in vertices:
        if not 1 <= v <= g.n:
            raise InvalidArgumentError(f"vertex {v} outside 1..{g.n}")
    return not any(g.has_edge(u, v) for u, v in combinations(sorted(vertices), 2))


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise EdgeListParseError(lineno, f"expected an integer, got {token!r}")


def parse_edgelist(text: str) -> Graph:
    """Parse the ``p <n> <m>`` edge list format.

    Lines starting with ``#`` and blank lines are ignored. Edges may be given in
    either orientation.

    Args:
        text (str): Document text.

    Raises:
        EdgeListParseError: With the offending line number.

    Returns:
        Graph: Parsed graph.
    """
    n: int | None = None
    declared = 0
    last_line = 0
    edges: set[Edge] = set()
    for lineno, tokens in _content_lines(text):
        last_line = lineno
        if n is None:
            if len(tokens) != 3 or tokens[0] != "p":
                raise EdgeListParseError(lineno, "expected header 'p <n> <m>'")
            n, declared = _parse_int(tokens[1], lineno), _parse_int(tokens[2], lineno)
            if n < 0 or declared < 0:
                raise EdgeListParseError(lineno, "n and m must be non-negative")
            continue
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, "expected '<u> <v>'")
        u, v = _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop at vertex {u}")
        for w in (u, v):
            if not 1 <= w <= n:
                raise EdgeListParseError(lineno, f"vertex {w} outside 1..{n}")
        edge = (min(u, v), max(u, v))
        if edge in edges:
            raise EdgeListParseError(lineno, f"duplicate edge {edge[0]} {edge[1]}")
        edges.add(edge)
    if n is None:
        raise EdgeListParseError(max(last_line, 1), "missing header 'p <n> <m>'")
    if len(edges) != declared:
        raise EdgeListParseError(
            last_line, f"header declares {declared} edges, found {len(edges)}"
        )
    return Graph(n, frozenset(edges))


def write_edgelist(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "m": g.m, "edges": [[u, v] for u, v in g.sorted_edges()]}


def write_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), indent=2) + "\n"
