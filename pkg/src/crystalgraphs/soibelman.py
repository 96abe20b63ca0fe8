"""Shift-operator model of the crystal-limit generators, the vertex and path
projections of the graph algebra, and the machine verification suites.

Each generator is assembled from rank-one string data: the module restricted
to the SU(2) of one simple root splits into strings, and along a fixed reduced
word for the longest Weyl element the matrix-coefficient chains contribute one
tensor slot per letter, with the torus slot pinning the final index.
"""

from __future__ import annotations

from itertools import product as iter_product
from typing import Sequence

from .braiding import pair_braiding
from .crystal import (
    Crystal,
    cartan_project,
    highest_weight_crystal,
    tensor_of,
)
from .hrgraph import ColourSet, GraphPath, HigherRankGraph, Vertex
from .report import VerificationReport
from .rootdata import Coords, RootDatum, add_weights, neg_weights, weyl_group
from .toeplitz import OperatorElement, sl2_limit


def strings(crystal: Crystal, i: int) -> list[list[int]]:
    """The i-strings of a crystal, each listed from its top element down."""
    cached = crystal._strings.get(i)
    if cached is not None:
        return cached
    out: list[list[int]] = []
    for b in crystal.elements():
        if crystal.eps(i, b) == 0:
            string = [b]
            cur = b
            while (cur := crystal.f(i, cur)) is not None:
                string.append(cur)
            out.append(string)
    crystal._strings[i] = out
    return out


def string_data(crystal: Crystal, i: int) -> dict[int, tuple[int, int, int]]:
    """Per element: (string id, position from the top, string length)."""
    return {
        b: (sid, pos, len(string) - 1)
        for sid, string in enumerate(strings(crystal, i))
        for pos, b in enumerate(string)
    }


def restriction_limit(crystal: Crystal, i: int, a: int, b: int) -> OperatorElement:
    """Limit of the (a, b) matrix coefficient restricted to the SU(2) of
    colour i: zero across different i-strings, a string coefficient within."""
    data = string_data(crystal, i)
    sid_a, pos_a, length = data[a]
    sid_b, pos_b, _ = data[b]
    rank = crystal.datum.rank
    if sid_a != sid_b:
        return OperatorElement.zero(1, rank)
    return sl2_limit(length, pos_a, pos_b, rank)


class SoibelmanModel:
    """The q=0 representation of the generator matrix coefficients, as exact
    shift-operator elements over a fixed reduced word for the longest Weyl
    element."""

    def __init__(self, datum: RootDatum, word: Sequence[int] | None = None):
        self.datum = datum
        group = weyl_group(datum)
        if word is None:
            word = group.longest_word
        else:
            word = tuple(word)
            if not group.is_reduced_word_for_longest(word):
                raise ValueError(
                    f"{word} is not a reduced word for the longest element of W({datum.label})"
                )
        self.word = tuple(word)
        self.length = len(self.word)
        self.rank = datum.rank
        self._generators: dict[tuple[Coords, int, str], OperatorElement] = {}
        self._projections: dict[tuple[tuple[Coords, ...], Vertex], OperatorElement] = {}
        self._path_ops: dict[tuple[tuple[Coords, ...], GraphPath], OperatorElement] = {}

    @property
    def one(self) -> OperatorElement:
        return OperatorElement.unit(self.length, self.rank)

    @property
    def zero(self) -> OperatorElement:
        return OperatorElement.zero(self.length, self.rank)

    def pi0_generator(self, lam: Coords, a: int, kind: str) -> OperatorElement:
        """Image of the a-th generator of weight lam, kind 'f' or 'v'."""
        lam = tuple(lam)
        if kind not in ("f", "v"):
            raise ValueError(f"kind must be 'f' or 'v', got {kind!r}")
        key = (lam, a, kind)
        cached = self._generators.get(key)
        if cached is not None:
            return cached
        if kind == "v":
            value = self.pi0_generator(lam, a, "f").adjoint()
        else:
            crystal = highest_weight_crystal(self.datum, lam)
            scalar = OperatorElement.unit(0, self.rank)
            frontier: dict[int, OperatorElement] = {a: scalar}
            for i in self.word:
                data = string_data(crystal, i)
                lines = strings(crystal, i)
                fresh: dict[int, OperatorElement] = {}
                for k, acc in frontier.items():
                    sid, pos, length = data[k]
                    for new_pos in range(pos + 1):
                        target = lines[sid][new_pos]
                        term = acc.tensor(sl2_limit(length, pos, new_pos, self.rank))
                        if target in fresh:
                            fresh[target] = fresh[target] + term
                        else:
                            fresh[target] = term
                frontier = fresh
            value = frontier.get(crystal.highest)
            if value is None:
                value = self.zero
            else:
                character = OperatorElement.monomial(((0, 0),) * self.length, lam)
                value = value * character
        self._generators[key] = value
        return value

    def projection(self, colours: ColourSet, v: Vertex) -> OperatorElement:
        """P_v: the product over colours of v-generator times f-generator."""
        key = (colours.colours, tuple(v))
        cached = self._projections.get(key)
        if cached is not None:
            return cached
        out = self.one
        for theta, b in zip(colours.colours, v):
            out = out * self.pi0_generator(theta, b, "v")
            out = out * self.pi0_generator(theta, b, "f")
        self._projections[key] = out
        return out

    def path_operator(self, colours: ColourSet, e: GraphPath) -> OperatorElement:
        """S_e = v-generator of the path element times P_{s(e)}."""
        key = (colours.colours, e)
        cached = self._path_ops.get(key)
        if cached is not None:
            return cached
        lam = colours.weight_of(e.degree)
        out = self.pi0_generator(lam, e.element, "v") * self.projection(
            colours, e.source
        )
        self._path_ops[key] = out
        return out

    # verification -------------------------------------------------------

    def _default_lambdas(self, colours: ColourSet) -> list[Coords]:
        out = [self.datum.zero]
        for theta in colours.colours:
            if theta not in out:
                out.append(theta)
        if colours.rho not in out:
            out.append(colours.rho)
        return out

    def verify_relations(
        self, colours: ColourSet, lambdas: Sequence[Coords] | None = None
    ) -> VerificationReport:
        """Exact checks of the generator relations (R1)-(R4)."""
        report = VerificationReport()
        lams = [tuple(l) for l in (lambdas or self._default_lambdas(colours))]
        gen = self.pi0_generator

        cases = 0
        bad = ""
        for lam, lamp in iter_product(lams, lams):
            pair = tensor_of(self.datum, (lam, lamp))
            total = add_weights(lam, lamp)
            for i, j in pair.elements():
                eta, m = cartan_project(pair, (i, j))
                expected_f = gen(total, m, "f") if eta else self.zero
                expected_v = gen(total, m, "v") if eta else self.zero
                cases += 2
                if gen(lam, i, "f") * gen(lamp, j, "f") != expected_f:
                    bad = bad or f"f-product at {lam},{lamp},({i},{j})"
                if gen(lamp, j, "v") * gen(lam, i, "v") != expected_v:
                    bad = bad or f"v-product at {lam},{lamp},({i},{j})"
        report.add("R1 products collapse through the Cartan component", not bad, cases, bad)

        cases = 0
        bad = ""
        for lam, lamp in iter_product(lams, lams):
            table = pair_braiding(self.datum, lam, lamp)
            groups: dict[tuple[int, int], list[tuple[int, int]]] = {}
            for (l, j), image in table.items():
                if image is not None:
                    k, i = image
                    groups.setdefault((i, j), []).append((k, l))
            size = highest_weight_crystal(self.datum, lam).size
            sizep = highest_weight_crystal(self.datum, lamp).size
            for i in range(1, size + 1):
                for j in range(1, sizep + 1):
                    lhs = gen(lam, i, "f") * gen(lamp, j, "v")
                    rhs = self.zero
                    for k, l in groups.get((i, j), ()):
                        rhs = rhs + gen(lamp, k, "v") * gen(lam, l, "f")
                    cases += 1
                    if lhs != rhs:
                        bad = bad or f"cross relation at {lam},{lamp},({i},{j})"
        report.add("R2 cross relations through the braiding", not bad, cases, bad)

        cases = 0
        bad = ""
        for lam in lams:
            size = highest_weight_crystal(self.datum, lam).size
            total = self.zero
            for i in range(1, size + 1):
                total = total + gen(lam, i, "v") * gen(lam, i, "f")
            cases += 1
            if total != self.one:
                bad = bad or f"sum over B({lam})"
        report.add("R3 unitality", not bad, cases, bad)

        cases = 0
        bad = ""
        for lam in lams:
            size = highest_weight_crystal(self.datum, lam).size
            for i in range(1, size + 1):
                cases += 1
                if gen(lam, i, "f").adjoint() != gen(lam, i, "v"):
                    bad = bad or f"adjoint pairing at {lam}, {i}"
        report.add("R4 adjoint pairing", not bad, cases, bad)
        return report

    def verify_graph_algebra(
        self, graph: HigherRankGraph, bound: Sequence[int]
    ) -> VerificationReport:
        """Exact checks of the graph-algebra relations KP1-KP4 and the grading."""
        report = VerificationReport()
        colours = graph.colours
        bound = tuple(bound)
        P = {v: self.projection(colours, v) for v in graph.vertices}

        bad = ""
        cases = 0
        for v in graph.vertices:
            cases += 2
            if P[v].adjoint() != P[v] or P[v] * P[v] != P[v]:
                bad = bad or f"P_{v} is not a self-adjoint idempotent"
        for v, w in iter_product(graph.vertices, graph.vertices):
            if v != w:
                cases += 1
                if P[v] * P[w] != self.zero:
                    bad = bad or f"P_{v} P_{w} != 0"
        total = self.zero
        for v in graph.vertices:
            total = total + P[v]
        cases += 1
        if total != self.one:
            bad = bad or "sum of vertex projections is not 1"
        report.add("KP1 vertex projections", not bad, cases, bad)

        degrees = graph._nonzero_degrees(bound)
        S = {
            e: self.path_operator(colours, e)
            for degree in degrees
            for e in graph.paths(degree)
        }

        bad = ""
        cases = 0
        for e, s_e in S.items():
            cases += 2
            if P[graph.range(e)] * s_e != s_e or s_e * P[e.source] != s_e:
                bad = bad or f"vertex-path relation fails at {e}"
        for e1, e2 in iter_product(S, S):
            degree = tuple(a + b for a, b in zip(e1.degree, e2.degree))
            if any(a > b for a, b in zip(degree, bound)):
                continue
            if e1.source != graph.range(e2):
                continue
            cases += 1
            if S[e1] * S[e2] != self.path_operator(colours, graph.compose(e1, e2)):
                bad = bad or f"composition relation fails at {e1}, {e2}"
        report.add("KP2 path composition", not bad, cases, bad)

        bad = ""
        cases = 0
        for degree in degrees:
            paths = graph.paths(degree)
            for e1 in paths:
                adj = S[e1].adjoint()
                for e2 in paths:
                    expected = P[e1.source] if e1 == e2 else self.zero
                    cases += 1
                    if adj * S[e2] != expected:
                        bad = bad or f"isometry relation fails at {e1}, {e2}"
        report.add("KP3 orthogonal isometries", not bad, cases, bad)

        bad = ""
        cases = 0
        for degree in degrees:
            by_range: dict[Vertex, list[GraphPath]] = {v: [] for v in graph.vertices}
            for e in graph.paths(degree):
                by_range[graph.range(e)].append(e)
            for v in graph.vertices:
                total = self.zero
                for e in by_range[v]:
                    total = total + S[e] * S[e].adjoint()
                cases += 1
                if total != P[v]:
                    bad = bad or f"range decomposition fails at {v}, degree {degree}"
        report.add("KP4 range decomposition", not bad, cases, bad)

        bad = ""
        cases = 0
        for v in graph.vertices:
            cases += 1
            if P[v].degrees() not in (set(), {(0,) * self.rank}):
                bad = bad or f"P_{v} is not gauge-invariant"
        for e, s_e in S.items():
            cases += 1
            lam = colours.weight_of(e.degree)
            if s_e.degrees() not in (set(), {neg_weights(lam)}):
                bad = bad or f"S_{e} is not homogeneous of degree {neg_weights(lam)}"
        report.add("grading: P_v invariant, S_e of degree -d(e)", not bad, cases, bad)
        return report

    def verify_suite(
        self,
        colours: ColourSet,
        bound: Sequence[int],
        lambdas: Sequence[Coords] | None = None,
    ) -> VerificationReport:
        """Relation checks (R1)-(R4) plus KP1-KP4 and the grading."""
        report = self.verify_relations(colours, lambdas)
        graph = HigherRankGraph(colours)
        report.extend(self.verify_graph_algebra(graph, bound))
        return report
