"""Colored directed graphs of lowering operators, with builders and I/O.

A :class:`CrystalGraph` stores vertices keyed by canonical payload text plus
edges ``(src, color, dst)`` meaning the color's lowering operator maps ``src``
to ``dst``.  Raising moves are the reversed edges.  Integer colors ``1, 2, …``
are the even operators, color ``0`` the queer operator, and strings like
``"1p"`` label derived odd operators.

Construction closes a seed set under operator application with a frontier
BFS; vertex identity is the serialized payload, so results are independent of
seed order and worker schedule.
"""

from __future__ import annotations

import json
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .config import Config, DEFAULT_CONFIG, resolve_threads
from .errors import (
    ClosureBudgetExceeded,
    CycleDetected,
    DimensionMismatch,
    MultipleSources,
    ParseError,
)
from .poly import SparsePolynomial

Color = int | str
Edge = tuple[str, Color, str]
Weight = tuple[int, ...]


def color_key(color: Color) -> tuple[int, int, str]:
    """Total order on colors: integers first, then odd labels."""
    if isinstance(color, int):
        return (0, color, "")
    return (1, 0, color)


def color_to_str(color: Color) -> str:
    return str(color)


def color_from_str(text: str) -> Color:
    if re.fullmatch(r"\d+", text):
        return int(text)
    return text


@dataclass(frozen=True, slots=True)
class Vertex:
    """Graph vertex: canonical id, display payload, and weight vector."""

    id: str
    payload: str
    weight: Weight


class CrystalGraph:
    """Immutable colored digraph with at most one edge per (vertex, color).

    The one-edge rule is a property of crystals, not a construction
    invariant: hand-built graphs may break it, and the axiom checkers report
    that as an A2/B2 violation.  Accessors therefore expose both the full
    target lists and the first-target convenience forms.
    """

    __slots__ = ("n", "vertices", "edges", "_out", "_in")

    def __init__(self, n: int, vertices: Iterable[Vertex], edges: Iterable[Edge]) -> None:
        if n < 0:
            raise DimensionMismatch(f"weight length must be non-negative, got {n}")
        self.n = n
        ordered = sorted(vertices, key=lambda v: v.id)
        self.vertices: dict[str, Vertex] = {}
        for vertex in ordered:
            if vertex.id in self.vertices:
                raise ParseError(f"duplicate vertex id {vertex.id!r}")
            if len(vertex.weight) != n:
                raise DimensionMismatch(
                    f"vertex {vertex.id!r} has weight of length "
                    f"{len(vertex.weight)}, expected {n}"
                )
            self.vertices[vertex.id] = vertex
        unique = sorted(set(edges), key=lambda e: (e[0], color_key(e[1]), e[2]))
        for src, color, dst in unique:
            if src not in self.vertices:
                raise ParseError(f"edge source {src!r} is not a vertex")
            if dst not in self.vertices:
                raise ParseError(f"edge target {dst!r} is not a vertex")
        self.edges: tuple[Edge, ...] = tuple(unique)
        out: dict[str, dict[Color, list[str]]] = {v: {} for v in self.vertices}
        inc: dict[str, dict[Color, list[str]]] = {v: {} for v in self.vertices}
        for src, color, dst in self.edges:
            out[src].setdefault(color, []).append(dst)
            inc[dst].setdefault(color, []).append(src)
        self._out = {
            v: {c: tuple(ts) for c, ts in bycolor.items()} for v, bycolor in out.items()
        }
        self._in = {
            v: {c: tuple(ts) for c, ts in bycolor.items()} for v, bycolor in inc.items()
        }

    # -- accessors ---------------------------------------------------------

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(self.vertices)

    @property
    def colors(self) -> tuple[Color, ...]:
        return tuple(sorted({e[1] for e in self.edges}, key=color_key))

    @property
    def int_colors(self) -> tuple[int, ...]:
        return tuple(c for c in self.colors if isinstance(c, int) and c >= 1)

    def weight_of(self, vid: str) -> Weight:
        return self.vertices[vid].weight

    def payload_of(self, vid: str) -> str:
        return self.vertices[vid].payload

    def out_all(self, vid: str, color: Color) -> tuple[str, ...]:
        return self._out[vid].get(color, ())

    def in_all(self, vid: str, color: Color) -> tuple[str, ...]:
        return self._in[vid].get(color, ())

    def out_edge(self, vid: str, color: Color) -> str | None:
        targets = self._out[vid].get(color)
        return targets[0] if targets else None

    def in_edge(self, vid: str, color: Color) -> str | None:
        sources = self._in[vid].get(color)
        return sources[0] if sources else None

    def out_colors(self, vid: str) -> tuple[Color, ...]:
        return tuple(sorted(self._out[vid], key=color_key))

    def in_colors(self, vid: str) -> tuple[Color, ...]:
        return tuple(sorted(self._in[vid], key=color_key))

    def edge_counts(self) -> dict[Color, int]:
        counts: dict[Color, int] = {}
        for _, color, _ in self.edges:
            counts[color] = counts.get(color, 0) + 1
        return {c: counts[c] for c in sorted(counts, key=color_key)}

    def subgraph(self, colors: Iterable[Color]) -> "CrystalGraph":
        """Same vertices, edges restricted to the given colors."""
        keep = set(colors)
        return CrystalGraph(
            self.n,
            self.vertices.values(),
            [e for e in self.edges if e[1] in keep],
        )

    def restrict(self, vertex_ids: Iterable[str]) -> "CrystalGraph":
        """Induced subgraph on the given vertices."""
        keep = set(vertex_ids)
        return CrystalGraph(
            self.n,
            [self.vertices[v] for v in keep],
            [e for e in self.edges if e[0] in keep and e[2] in keep],
        )

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CrystalGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"CrystalGraph(n={self.n}, vertices={len(self.vertices)}, "
            f"edges={len(self.edges)})"
        )


# -- construction ------------------------------------------------------------

Lowering = Callable[[object], object | None]
Raising = Callable[[object], object | None]
OperatorPair = tuple[Lowering | None, Raising | None]


def build_graph(
    seeds: Iterable[object],
    operators: Mapping[Color, OperatorPair],
    n: int,
    *,
    serialize: Callable[[object], str],
    weight_of: Callable[[object], Sequence[int]],
    config: Config | None = None,
) -> CrystalGraph:
    """Close ``seeds`` under the given operators and return the edge graph.

    Args:
        seeds: Initial payload objects (tableaux, tensor words, ...).
        operators: color -> (lowering, raising); either member may be ``None``.
        n: Weight vector length.
        serialize: Canonical text form; doubles as the vertex id.
        weight_of: Weight vector of a payload.
        config: Limits; ``config.max_vertices`` caps the closure.

    Raises:
        ClosureBudgetExceeded: The closure grew past ``config.max_vertices``.
    """
    config = config or DEFAULT_CONFIG
    color_order = sorted(operators, key=color_key)
    payloads: dict[str, object] = {}
    edges: set[Edge] = set()
    frontier: list[str] = []
    for seed in seeds:
        sid = serialize(seed)
        if sid not in payloads:
            payloads[sid] = seed
            frontier.append(sid)
            if len(payloads) > config.max_vertices:
                raise ClosureBudgetExceeded(
                    f"closure exceeded {config.max_vertices} vertices"
                )

    def expand(pid: str) -> list[tuple[Color, str, object]]:
        # Returns (color, direction, neighbor) facts; "f" means pid -> nbr.
        payload = payloads[pid]
        facts: list[tuple[Color, str, object]] = []
        for color in color_order:
            lowering, raising = operators[color]
            if lowering is not None:
                down = lowering(payload)
                if down is not None:
                    facts.append((color, "f", down))
            if raising is not None:
                up = raising(payload)
                if up is not None:
                    facts.append((color, "e", up))
        return facts

    threads = resolve_threads(config)
    while frontier:
        frontier.sort()
        if threads > 1 and len(frontier) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                batches = list(pool.map(expand, frontier))
        else:
            batches = [expand(pid) for pid in frontier]
        next_frontier: list[str] = []
        for pid, facts in zip(frontier, batches):
            for color, direction, neighbor in facts:
                nid = serialize(neighbor)
                if nid not in payloads:
                    payloads[nid] = neighbor
                    next_frontier.append(nid)
                    if len(payloads) > config.max_vertices:
                        raise ClosureBudgetExceeded(
                            f"closure exceeded {config.max_vertices} vertices"
                        )
                edges.add((pid, color, nid) if direction == "f" else (nid, color, pid))
        frontier = next_frontier

    vertices = [
        Vertex(pid, pid, tuple(weight_of(payload)))
        for pid, payload in payloads.items()
    ]
    return CrystalGraph(n, vertices, edges)


# -- string walks ------------------------------------------------------------

def string_lengths_graph(graph: CrystalGraph, vid: str, color: Color) -> tuple[int, int]:
    """Forward and backward path lengths ``(phi, eps)`` along one color.

    Raises:
        CycleDetected: The walk revisits a vertex.
    """
    phi = 0
    seen = {vid}
    cur = vid
    while (nxt := graph.out_edge(cur, color)) is not None:
        if nxt in seen:
            raise CycleDetected(f"color {color} walk from {vid!r} revisits {nxt!r}")
        seen.add(nxt)
        cur = nxt
        phi += 1
    eps = 0
    seen = {vid}
    cur = vid
    while (prev := graph.in_edge(cur, color)) is not None:
        if prev in seen:
            raise CycleDetected(f"color {color} walk from {vid!r} revisits {prev!r}")
        seen.add(prev)
        cur = prev
        eps += 1
    return phi, eps


def string_length_maps(
    graph: CrystalGraph, color: Color
) -> tuple[dict[str, int], dict[str, int]]:
    """``(phi, eps)`` for every vertex at once, by path decomposition.

    Raises:
        CycleDetected: Some monochromatic walk closes a cycle.
    """
    phi: dict[str, int] = {}
    eps: dict[str, int] = {}
    for vid in graph.vertex_ids:
        if graph.in_edge(vid, color) is not None:
            continue
        chain = [vid]
        seen = {vid}
        cur = vid
        while (nxt := graph.out_edge(cur, color)) is not None:
            if nxt in seen:
                raise CycleDetected(
                    f"color {color} walk from {vid!r} revisits {nxt!r}"
                )
            seen.add(nxt)
            chain.append(nxt)
            cur = nxt
        last = len(chain) - 1
        for k, node in enumerate(chain):
            eps[node] = k
            phi[node] = last - k
    for vid in graph.vertex_ids:
        if vid not in phi:
            # Only vertices inside head-free cycles stay unassigned.
            raise CycleDetected(f"color {color} cycle through {vid!r}")
    return phi, eps


# -- whole-graph queries ------------------------------------------------------

def components(graph: CrystalGraph) -> list[CrystalGraph]:
    """Weakly connected components, ordered by smallest vertex id."""
    neighbors: dict[str, set[str]] = {v: set() for v in graph.vertex_ids}
    for src, _, dst in graph.edges:
        neighbors[src].add(dst)
        neighbors[dst].add(src)
    seen: set[str] = set()
    parts: list[CrystalGraph] = []
    for vid in graph.vertex_ids:
        if vid in seen:
            continue
        group = {vid}
        stack = [vid]
        while stack:
            for other in neighbors[stack.pop()]:
                if other not in group:
                    group.add(other)
                    stack.append(other)
        seen |= group
        parts.append(graph.restrict(group))
    return parts


def highest_weights(
    graph: CrystalGraph, colors: Iterable[Color] | None = None
) -> list[str]:
    """Vertices with no incoming edge of any listed color.

    ``colors=None`` uses every integer color >= 1 present in the graph.
    """
    palette = tuple(colors) if colors is not None else graph.int_colors
    return [
        vid
        for vid in graph.vertex_ids
        if all(not graph.in_all(vid, c) for c in palette)
    ]


def character(graph: CrystalGraph) -> SparsePolynomial:
    """Monomial sum of all vertex weights."""
    return SparsePolynomial.from_weights(
        graph.n, (v.weight for v in graph.vertices.values())
    )


def _unique_source(graph: CrystalGraph) -> str:
    sources = [vid for vid in graph.vertex_ids if not graph._in[vid]]
    if len(sources) != 1:
        raise MultipleSources(
            f"expected exactly one source vertex, found {len(sources)}"
        )
    return sources[0]


def isomorphic(g1: CrystalGraph, g2: CrystalGraph) -> bool:
    """Colored-digraph isomorphism for rooted deterministic graphs.

    Synchronized BFS from the unique source of each graph, matching edges
    color by color and comparing vertex weights (payload text is ignored).
    Sound and complete when every vertex has at most one outgoing edge per
    color and all vertices are reachable from the source.

    Raises:
        MultipleSources: Either graph lacks a unique source vertex.
    """
    root1 = _unique_source(g1)
    root2 = _unique_source(g2)
    if g1.n != g2.n or len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return False
    if g1.weight_of(root1) != g2.weight_of(root2):
        return False
    mapping = {root1: root2}
    reverse = {root2: root1}
    queue = [root1]
    while queue:
        u1 = queue.pop()
        u2 = mapping[u1]
        if g1.out_colors(u1) != g2.out_colors(u2):
            return False
        for color in g1.out_colors(u1):
            t1s = g1.out_all(u1, color)
            t2s = g2.out_all(u2, color)
            if len(t1s) != 1 or len(t2s) != 1:
                return False
            t1, t2 = t1s[0], t2s[0]
            if mapping.get(t1, t2) != t2 or reverse.get(t2, t1) != t1:
                return False
            if t1 not in mapping:
                if g1.weight_of(t1) != g2.weight_of(t2):
                    return False
                mapping[t1] = t2
                reverse[t2] = t1
                queue.append(t1)
    if len(mapping) != len(g1) or len(reverse) != len(g2):
        return False
    relabeled = {(mapping[s], c, mapping[d]) for s, c, d in g1.edges}
    return relabeled == set(g2.edges)


# -- tensor product -----------------------------------------------------------

def _wrap_factor(payload: str) -> str:
    return f"({payload})" if "⊗" in payload else payload


def tensor_graphs(
    g1: CrystalGraph, g2: CrystalGraph, queer: bool = False
) -> CrystalGraph:
    """Tensor product graph on the full cartesian product of vertices.

    For an even color the move acts on the left factor when the right
    factor's raising string for that color is shorter than the left factor's
    lowering string, otherwise on the right factor.  With ``queer=True`` the
    0-move acts on the left factor exactly when the right factor's weight
    vanishes in coordinates 1 and 2, otherwise on the right factor.

    Raises:
        DimensionMismatch: The two graphs have different weight lengths.
        CycleDetected: A factor has a malformed monochromatic cycle.
    """
    if g1.n != g2.n:
        raise DimensionMismatch(
            f"cannot tensor graphs with weight lengths {g1.n} and {g2.n}"
        )
    n = g1.n
    even_colors = sorted(
        {c for c in (*g1.colors, *g2.colors) if isinstance(c, int) and c >= 1}
    )
    phi_left = {c: string_length_maps(g1, c)[0] for c in even_colors}
    eps_right = {c: string_length_maps(g2, c)[1] for c in even_colors}

    pair_id: dict[tuple[str, str], str] = {}
    vertices: list[Vertex] = []
    for id1, v1 in g1.vertices.items():
        for id2, v2 in g2.vertices.items():
            payload = f"{_wrap_factor(v1.payload)}⊗{_wrap_factor(v2.payload)}"
            pair_id[(id1, id2)] = payload
            weight = tuple(a + b for a, b in zip(v1.weight, v2.weight))
            vertices.append(Vertex(payload, payload, weight))

    edges: list[Edge] = []
    for id1, id2 in pair_id:
        src = pair_id[(id1, id2)]
        for color in even_colors:
            if eps_right[color][id2] < phi_left[color][id1]:
                target = g1.out_edge(id1, color)
                if target is not None:
                    edges.append((src, color, pair_id[(target, id2)]))
            else:
                target = g2.out_edge(id2, color)
                if target is not None:
                    edges.append((src, color, pair_id[(id1, target)]))
        if queer:
            w2 = g2.weight_of(id2)
            first = w2[0] if n >= 1 else 0
            second = w2[1] if n >= 2 else 0
            if first == 0 and second == 0:
                target = g1.out_edge(id1, 0)
                if target is not None:
                    edges.append((src, 0, pair_id[(target, id2)]))
            else:
                target = g2.out_edge(id2, 0)
                if target is not None:
                    edges.append((src, 0, pair_id[(id1, target)]))
    return CrystalGraph(n, vertices, edges)


# -- serialization ------------------------------------------------------------

def export_json(graph: CrystalGraph) -> str:
    """Canonical JSON text (sorted vertices and edges, trailing newline)."""
    data = {
        "n": graph.n,
        "vertices": [
            {"id": v.id, "payload": v.payload, "weight": list(v.weight)}
            for v in graph.vertices.values()
        ],
        "edges": [
            {"src": src, "color": color_to_str(color), "dst": dst}
            for src, color, dst in graph.edges
        ],
    }
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParseError(message)


def import_json(text: str) -> CrystalGraph:
    """Parse graph JSON produced by :func:`export_json`.

    Raises:
        ParseError: Malformed JSON or schema; carries the failure position
            when the JSON itself does not parse.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    _require(isinstance(data, dict), "top level must be an object")
    for key in ("n", "vertices", "edges"):
        _require(key in data, f"missing key {key!r}")
    _require(isinstance(data["n"], int) and data["n"] >= 0, "'n' must be a non-negative integer")
    _require(isinstance(data["vertices"], list), "'vertices' must be a list")
    _require(isinstance(data["edges"], list), "'edges' must be a list")
    vertices = []
    for item in data["vertices"]:
        _require(isinstance(item, dict), "vertex entries must be objects")
        for key in ("id", "payload", "weight"):
            _require(key in item, f"vertex missing key {key!r}")
        _require(isinstance(item["id"], str), "vertex id must be a string")
        _require(isinstance(item["payload"], str), "vertex payload must be a string")
        _require(
            isinstance(item["weight"], list)
            and all(isinstance(w, int) for w in item["weight"]),
            f"vertex {item.get('id')!r} weight must be a list of integers",
        )
        vertices.append(Vertex(item["id"], item["payload"], tuple(item["weight"])))
    edges = []
    for item in data["edges"]:
        _require(isinstance(item, dict), "edge entries must be objects")
        for key in ("src", "color", "dst"):
            _require(key in item, f"edge missing key {key!r}")
        _require(isinstance(item["src"], str), "edge src must be a string")
        _require(isinstance(item["dst"], str), "edge dst must be a string")
        _require(isinstance(item["color"], str), "edge color must be a string")
        edges.append((item["src"], color_from_str(item["color"]), item["dst"]))
    return CrystalGraph(data["n"], vertices, edges)


_INT_PALETTE = {0: "green", 1: "red", 2: "blue", 3: "purple"}
_INT_CYCLE = ("orange", "brown", "teal")
_ODD_PALETTE = {"1p": "magenta", "2p": "cyan"}
_ODD_CYCLE = ("magenta", "cyan", "gold", "gray")


def dot_color(color: Color) -> str:
    if isinstance(color, int):
        if color in _INT_PALETTE:
            return _INT_PALETTE[color]
        return _INT_CYCLE[(color - 4) % len(_INT_CYCLE)]
    if color in _ODD_PALETTE:
        return _ODD_PALETTE[color]
    digits = re.match(r"\d+", color)
    index = int(digits.group()) - 1 if digits else 0
    return _ODD_CYCLE[index % len(_ODD_CYCLE)]


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(graph: CrystalGraph) -> str:
    """Graphviz text with the fixed edge palette and payload labels."""
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for vertex in graph.vertices.values():
        lines.append(f'  "{_dot_escape(vertex.id)}" [label="{_dot_escape(vertex.payload)}"];')
    for src, color, dst in graph.edges:
        lines.append(
            f'  "{_dot_escape(src)}" -> "{_dot_escape(dst)}" '
            f'[color={dot_color(color)}, label="{color_to_str(color)}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
