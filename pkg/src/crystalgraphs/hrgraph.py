"""Higher-rank graphs built from right ends of crystal elements.

Vertices are tuples of right ends of B(rho_C); a path of degree lam is a pair
(vertex, element of B(lam)) subject to the per-colour Cartan-component
condition.  The graph is an infinite category; slices are materialized on
demand by degree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Iterable, NamedTuple

from .braiding import right_end_map, right_ends
from .crystal import cartan_project, highest_weight_crystal, tensor_of
from .report import VerificationReport
from .rootdata import (
    Coords,
    RootDatum,
    add_weights,
    rational_rank,
    weyl_group,
)

Vertex = tuple[int, ...]
Degree = tuple[int, ...]

_DOT_PALETTE = (
    "red",
    "blue",
    "forestgreen",
    "darkorange",
    "purple",
    "saddlebrown",
    "deeppink",
    "teal",
)


@dataclass(frozen=True)
class ColourSet:
    """An ordered tuple of linearly independent dominant weights."""

    datum: RootDatum
    colours: tuple[Coords, ...]

    @property
    def n(self) -> int:
        return len(self.colours)

    @property
    def rho(self) -> Coords:
        total = self.datum.zero
        for c in self.colours:
            total = add_weights(total, c)
        return total

    def weight_of(self, degree: Degree) -> Coords:
        if len(degree) != self.n or any(x < 0 for x in degree):
            raise ValueError(f"degree {degree} is outside the colour monoid")
        total = self.datum.zero
        for k, c in zip(degree, self.colours):
            total = add_weights(total, tuple(k * x for x in c))
        return total


def colour_set(datum: RootDatum, colours: Iterable[Coords]) -> ColourSet:
    colours = tuple(tuple(c) for c in colours)
    if not colours:
        raise ValueError("at least one colour is required")
    for c in colours:
        if len(c) != datum.rank or not datum.is_dominant(c) or not any(c):
            raise ValueError(f"colour {c} is not a nonzero dominant weight")
    rows = [tuple(Fraction(x) for x in c) for c in colours]
    if rational_rank(rows) != len(colours):
        raise ValueError("colours are not linearly independent")
    return ColourSet(datum, colours)


class GraphPath(NamedTuple):
    source: Vertex
    element: int
    degree: Degree


class HigherRankGraph:
    """The rank-N graph attached to a root datum and a colour set."""

    def __init__(self, colours: ColourSet):
        self.colours = colours
        self.datum = colours.datum
        self.factor_crystals = tuple(
            highest_weight_crystal(self.datum, c) for c in colours.colours
        )
        rho_crystal = highest_weight_crystal(self.datum, colours.rho)
        verts = {
            right_ends(rho_crystal, b, colours.colours)
            for b in rho_crystal.elements()
        }
        self.vertices: tuple[Vertex, ...] = tuple(sorted(verts))
        self.vertex_ids = {v: k for k, v in enumerate(self.vertices)}
        self._paths: dict[Degree, tuple[GraphPath, ...]] = {}
        self._ranges: dict[GraphPath, Vertex] = {}
        self._descendants: list[dict[int, frozenset[int]] | None] = [None] * colours.n

    @property
    def zero_degree(self) -> Degree:
        return (0,) * self.colours.n

    def degree_weight(self, degree: Degree) -> Coords:
        return self.colours.weight_of(degree)

    def paths(self, degree: Degree) -> tuple[GraphPath, ...]:
        """All paths of the given degree, ordered by (source vertex, element)."""
        degree = tuple(degree)
        cached = self._paths.get(degree)
        if cached is not None:
            return cached
        lam = self.degree_weight(degree)
        crystal = highest_weight_crystal(self.datum, lam)
        allowed: list[dict[int, set[int]]] = []
        for theta, factor in zip(self.colours.colours, self.factor_crystals):
            pair = tensor_of(self.datum, (theta, lam))
            dec = pair.decomposition()
            table: dict[int, set[int]] = {b: set() for b in crystal.elements()}
            for c in factor.elements():
                for b in crystal.elements():
                    if dec.ids[(c, b)] == dec.cartan:
                        table[b].add(c)
            allowed.append(table)
        out = [
            GraphPath(v, b, degree)
            for v in self.vertices
            for b in crystal.elements()
            if all(v[i] in allowed[i][b] for i in range(self.colours.n))
        ]
        result = tuple(out)
        self._paths[degree] = result
        return result

    def source(self, e: GraphPath) -> Vertex:
        return e.source

    def range(self, e: GraphPath) -> Vertex:
        cached = self._ranges.get(e)
        if cached is not None:
            return cached
        lam = self.degree_weight(e.degree)
        if not any(lam):
            self._ranges[e] = e.source
            return e.source
        ends = []
        for i, theta in enumerate(self.colours.colours):
            pair = tensor_of(self.datum, (theta, lam))
            eta, image = cartan_project(pair, (e.source[i], e.element))
            assert eta, "path violates the Cartan-component condition"
            ends.append(
                right_end_map(self.datum, add_weights(theta, lam), theta)[image]
            )
        vertex = tuple(ends)
        self._ranges[e] = vertex
        return vertex

    def compose(self, eprime: GraphPath, e: GraphPath) -> GraphPath:
        """The composite eprime . e (e traversed first); degrees add."""
        if self.range(e) != eprime.source:
            raise ValueError("paths are not composable: range/source mismatch")
        lam = self.degree_weight(e.degree)
        lamp = self.degree_weight(eprime.degree)
        if not any(lam):
            return eprime
        if not any(lamp):
            return e
        pair = tensor_of(self.datum, (lam, lamp))
        eta, image = cartan_project(pair, (e.element, eprime.element))
        if not eta:
            raise RuntimeError("composition left the Cartan component")
        return GraphPath(
            e.source, image, tuple(a + b for a, b in zip(e.degree, eprime.degree))
        )

    def identity_path(self, v: Vertex) -> GraphPath:
        return GraphPath(v, 1, self.zero_degree)

    def check_factorization(self, m: Degree, n: Degree) -> VerificationReport:
        """Existence and uniqueness of degree-(m, n) factorizations."""
        m, n = tuple(m), tuple(n)
        total = tuple(a + b for a, b in zip(m, n))
        counts = {e: 0 for e in self.paths(total)}
        by_source: dict[Vertex, list[GraphPath]] = {}
        for e1 in self.paths(m):
            by_source.setdefault(e1.source, []).append(e1)
        for e2 in self.paths(n):
            for e1 in by_source.get(self.range(e2), ()):
                counts[self.compose(e1, e2)] += 1
        bad = [e for e, c in counts.items() if c != 1]
        report = VerificationReport()
        report.add(
            f"factorization {m}+{n}",
            not bad,
            cases=len(counts),
            detail=f"path {bad[0]} has {counts[bad[0]]} factorizations" if bad else "",
        )
        return report

    def degree_counts_and_sources(self, bound: Degree) -> VerificationReport:
        """Row-finiteness and absence of sources/sinks up to a degree bound."""
        report = VerificationReport()
        for degree in iter_product(*(range(b + 1) for b in bound)):
            paths = self.paths(degree)
            with_range = {self.range(e) for e in paths}
            with_source = {e.source for e in paths}
            missing = [
                v
                for v in self.vertices
                if v not in with_range or v not in with_source
            ]
            report.add(
                f"no sources/sinks at degree {degree}",
                not missing,
                cases=len(paths),
                detail=f"vertex {missing[0]} has no path" if missing else "",
            )
        return report

    def _descendant_table(self, i: int) -> dict[int, frozenset[int]]:
        if self._descendants[i] is None:
            factor = self.factor_crystals[i]
            table = {}
            for b in factor.elements():
                seen = {b}
                queue = [b]
                while queue:
                    x = queue.pop()
                    for col in self.datum.colours:
                        y = factor.f(col, x)
                        if y is not None and y not in seen:
                            seen.add(y)
                            queue.append(y)
                table[b] = frozenset(seen)
            self._descendants[i] = table
        return self._descendants[i]

    def vertex_leq(self, v: Vertex, w: Vertex) -> bool:
        """Componentwise lowering-reachability order: v <= w iff each v_i is
        reachable from w_i by lowering operators."""
        return all(
            v[i] in self._descendant_table(i)[w[i]] for i in range(self.colours.n)
        )

    @property
    def vertex_max(self) -> Vertex:
        return (1,) * self.colours.n

    @property
    def vertex_min(self) -> Vertex:
        return tuple(c.lowest for c in self.factor_crystals)

    def _nonzero_degrees(self, bound: Degree) -> list[Degree]:
        out = [
            deg
            for deg in iter_product(*(range(b + 1) for b in bound))
            if any(deg)
        ]
        return sorted(out)

    def export_json(self, bound: Degree) -> str:
        data = {
            "type": self.datum.label,
            "colours": [list(c) for c in self.colours.colours],
            "vertices": [
                {"id": k, "tuple": list(v)} for k, v in enumerate(self.vertices)
            ],
            "paths": [
                {
                    "source": self.vertex_ids[e.source],
                    "degree": list(e.degree),
                    "element": e.element,
                    "range": self.vertex_ids[self.range(e)],
                }
                for degree in self._nonzero_degrees(bound)
                for e in self.paths(degree)
            ],
        }
        return json.dumps(data)

    def export_dot(self, bound: Degree) -> str:
        lines = ["digraph hrgraph {"]
        for k in range(len(self.vertices)):
            lines.append(f'  v{k} [label="v{k}"];')
        for i in range(self.colours.n):
            if bound[i] < 1:
                continue
            delta = tuple(int(j == i) for j in range(self.colours.n))
            colour = _DOT_PALETTE[i % len(_DOT_PALETTE)]
            for e in self.paths(delta):
                s = self.vertex_ids[e.source]
                r = self.vertex_ids[self.range(e)]
                lines.append(f'  v{s} -> v{r} [color="{colour}", label="{i + 1}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(datum: RootDatum, colours: Iterable[Coords]) -> HigherRankGraph:
    return HigherRankGraph(colour_set(datum, colours))


def weyl_vertex_map(
    graph: HigherRankGraph, cap: int | None = None
) -> dict[int, Vertex]:
    """Map each Weyl group element w to the right-end tuple of the extremal
    element of weight w(rho_C); injective on cosets of the stabilizer."""
    datum = graph.datum
    group = weyl_group(datum) if cap is None else weyl_group(datum, cap)
    rho = graph.colours.rho
    crystal = highest_weight_crystal(datum, rho)
    out: dict[int, Vertex] = {}
    for k, element in enumerate(group.elements):
        b = crystal.highest
        for i in reversed(element.word):
            for _ in range(crystal.phi(i, b)):
                b = crystal.f(i, b)
        out[k] = right_ends(crystal, b, graph.colours.colours)
    cosets = group.order // group.stabilizer_order(rho)
    if len(set(out.values())) != cosets:
        raise RuntimeError("Weyl vertex map is not injective on cosets")
    return out


def graph_tables_from_json(text: str):
    """Reconstruct (vertices, paths) tables from an export for round-tripping."""
    data = json.loads(text)
    vertices = tuple(tuple(entry["tuple"]) for entry in data["vertices"])
    paths = tuple(
        (entry["source"], tuple(entry["degree"]), entry["element"], entry["range"])
        for entry in data["paths"]
    )
    return vertices, paths
