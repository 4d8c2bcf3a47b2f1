"""Finite simple graphs: parsing, induced subgraphs, multipartite structure.

The grammar is line oriented:

    vertices: a b c d
    edges:
    a b
    c d
"""

from dataclasses import dataclass
from itertools import combinations


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple
    edges: frozenset  # of frozensets {u, v}

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise GraphError("duplicate vertices")
        for e in self.edges:
            if len(e) != 2:
                raise GraphError("loops and malformed edges are not allowed")
            if not e <= vs:
                raise GraphError("edge %s has an unknown endpoint" % sorted(e))

    @classmethod
    def from_pairs(cls, vertices, pairs):
        return cls(tuple(vertices), frozenset(frozenset(p) for p in pairs))

    def sorted_edges(self):
        order = {v: i for i, v in enumerate(self.vertices)}
        pairs = [tuple(sorted(e, key=order.get)) for e in self.edges]
        return sorted(pairs, key=lambda p: (order[p[0]], order[p[1]]))

    def adjacent(self, u, v):
        return frozenset((u, v)) in self.edges

    def complement(self):
        comp = [
            (u, v)
            for u, v in combinations(self.vertices, 2)
            if not self.adjacent(u, v)
        ]
        return SimpleGraph.from_pairs(self.vertices, comp)

    def induced(self, subset):
        sub = [v for v in self.vertices if v in set(subset)]
        keep = set(sub)
        return SimpleGraph.from_pairs(sub, [e for e in self.sorted_edges() if set(e) <= keep])

    def connected_components(self):
        seen = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = []
            stack = [v]
            seen.add(v)
            while stack:
                w = stack.pop()
                comp.append(w)
                for x in self.vertices:
                    if x not in seen and self.adjacent(w, x):
                        seen.add(x)
                        stack.append(x)
            comps.append(sorted(comp, key=self.vertices.index))
        return comps

    def is_connected(self):
        return len(self.connected_components()) <= 1


def parse_graph(text):
    """Parse the graph grammar; '#' starts a comment."""
    lines = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        lines.append((ln, line))
    body = [(ln, l) for ln, l in lines if l]
    if not body:
        raise GraphError("empty graph file")
    ln, first = body[0]
    if not first.startswith("vertices:"):
        raise GraphError("line %d: expected 'vertices:'" % ln)
    vertices = first[len("vertices:"):].split()
    if not vertices:
        raise GraphError("line %d: empty vertex list" % ln)
    if len(body) < 2 or body[1][1] != "edges:":
        ln2 = body[1][0] if len(body) > 1 else ln
        raise GraphError("line %d: expected 'edges:'" % ln2)
    pairs = []
    vs = set(vertices)
    for ln2, line in body[2:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError("line %d: an edge is two vertex names" % ln2)
        u, v = parts
        if u not in vs or v not in vs:
            raise GraphError("line %d: unknown vertex in edge %s %s" % (ln2, u, v))
        if u == v:
            raise GraphError("line %d: loops are not allowed" % ln2)
        pairs.append((u, v))
    return SimpleGraph.from_pairs(vertices, pairs)


def complete_multipartite_decomposition(graph):
    """Multipartition of a complete multipartite graph, else a witness.

    Returns (parts, None) when non-adjacency is transitive (the complement is
    a disjoint union of cliques); parts are the complement components.
    Otherwise returns (None, (u, v, w)) where u-v-w is an induced path in the
    complement: u,v and v,w non-adjacent but u,w adjacent.
    """
    comp = graph.complement()
    parts = comp.connected_components()
    for part in parts:
        for u, v in combinations(part, 2):
            if not comp.adjacent(u, v):
                # u, v in one complement component but not directly joined:
                # walk a shortest complement path and take its first bend
                witness = _induced_complement_path(comp, part)
                return None, witness
    return parts, None


def _induced_complement_path(comp, part):
    for u, v, w in combinations(part, 3):
        for a, b, c in ((u, v, w), (v, u, w), (u, w, v)):
            if comp.adjacent(a, b) and comp.adjacent(b, c) and not comp.adjacent(a, c):
                return (a, b, c)
    raise GraphError("internal: no witness path found")  # pragma: no cover
