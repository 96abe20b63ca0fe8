"""Command-line front end: crystal graphs, braiding tables, higher-rank
graphs, and the verification suites.

Output is deterministic for fixed flags.  Exit codes: 0 success, 1 a
verification suite failed, 2 usage errors.
"""

from __future__ import annotations

import argparse
import sys
from itertools import product as iter_product

from .braiding import longest_permutation_word, pair_braiding, sigma_word
from .crystal import highest_weight_crystal, tensor_of
from .hrgraph import HigherRankGraph, build_graph, colour_set
from .report import VerificationReport
from .rootdata import (
    CartanTypeError,
    WeylSizeError,
    build_root_datum,
    weyl_dim,
    weyl_group,
)
from .soibelman import SoibelmanModel

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


def _parse_weight(text: str, rank: int) -> tuple[int, ...]:
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}") from None
    if len(coords) != rank:
        raise argparse.ArgumentTypeError(
            f"weight {text!r} has {len(coords)} coordinates, expected {rank}"
        )
    return coords


def _parse_weights(text: str, rank: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_parse_weight(part, rank) for part in text.split(";"))


def _parse_bound(text: str, n: int) -> tuple[int, ...]:
    bound = tuple(int(x) for x in text.split(","))
    if len(bound) != n or any(x < 0 for x in bound):
        raise argparse.ArgumentTypeError(
            f"bound {text!r} needs {n} nonnegative entries"
        )
    return bound


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _crystal_dot(crystal_like, name: str) -> str:
    lines = [f"digraph {name} {{"]
    elements = list(crystal_like.elements())
    labels = {b: str(k) for k, b in enumerate(elements, start=1)}
    for b in elements:
        weight = ",".join(str(x) for x in crystal_like.weight(b))
        lines.append(f'  n{labels[b]} [label="{labels[b]}: ({weight})"];')
    for i in crystal_like.datum.colours:
        colour = _DOT_PALETTE[(i - 1) % len(_DOT_PALETTE)]
        for b in elements:
            image = crystal_like.f(i, b)
            if image is not None:
                lines.append(
                    f'  n{labels[b]} -> n{labels[image]} [color="{colour}", label="{i}"];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _crystal_text(crystal_like) -> str:
    lines = []
    for k, b in enumerate(crystal_like.elements(), start=1):
        weight = ",".join(str(x) for x in crystal_like.weight(b))
        edges = []
        for i in crystal_like.datum.colours:
            image = crystal_like.f(i, b)
            if image is not None:
                edges.append(f"-{i}-> {image}")
        lines.append(f"{k} ({weight}) " + " ".join(edges))
    return "\n".join(lines) + "\n"


def _braiding_table(datum, lam, lamp) -> str:
    table = pair_braiding(datum, lam, lamp)
    crystal = highest_weight_crystal(datum, lam)
    other = highest_weight_crystal(datum, lamp)
    lines = []
    for i in crystal.elements():
        for j in other.elements():
            image = table[(i, j)]
            if image is None:
                lines.append(f"s(a{i} (x) b{j}) = 0")
            else:
                k, l = image
                lines.append(f"s(a{i} (x) b{j}) = b{k} (x) a{l}")
    return "\n".join(lines) + "\n"


def _run_verify(args, datum, colours) -> tuple[VerificationReport, str]:
    cs = colour_set(datum, colours)
    bound = args.bound or (1,) * cs.n
    report = VerificationReport()
    if args.suite in ("crystal", "all"):
        report.extend(_crystal_suite(datum, cs))
    if args.suite in ("braiding", "all"):
        report.extend(_braiding_suite(datum, cs))
    graph = HigherRankGraph(cs) if args.suite in ("graph", "kp", "all") else None
    if args.suite in ("graph", "all"):
        for m, n in _degree_splits(bound):
            report.extend(graph.check_factorization(m, n))
        report.extend(graph.degree_counts_and_sources(bound))
    if args.suite in ("kp", "all"):
        model = SoibelmanModel(datum, args.word)
        report.extend(model.verify_relations(cs))
        report.extend(model.verify_graph_algebra(graph, bound))
    if args.emit == "json":
        return report, report.to_json() + "\n"
    return report, str(report) + "\n"


def _degree_splits(bound):
    out = []
    for total in iter_product(*(range(b + 1) for b in bound)):
        if not any(total):
            continue
        for m in iter_product(*(range(t + 1) for t in total)):
            n = tuple(t - a for t, a in zip(total, m))
            out.append((m, n))
    return out


def _crystal_suite(datum, cs) -> VerificationReport:
    report = VerificationReport()
    weights = list(cs.colours) + [cs.rho]
    bad = ""
    cases = 0
    for lam in weights:
        crystal = highest_weight_crystal(datum, lam)
        cases += 1
        if crystal.size != weyl_dim(datum, lam):
            bad = bad or f"size of B({lam})"
        for b in crystal.elements():
            for i in datum.colours:
                cases += 1
                image = crystal.f(i, b)
                if image is not None and crystal.e(i, image) != b:
                    bad = bad or f"crystal axiom at {lam}, {b}, colour {i}"
                if crystal.phi(i, b) - crystal.eps(i, b) != datum.pairing(
                    crystal.weight(b), i
                ):
                    bad = bad or f"phi-eps mismatch at {lam}, {b}, colour {i}"
    report.add("crystal: sizes and axioms", not bad, cases, bad)
    return report


def _braiding_suite(datum, cs) -> VerificationReport:
    report = VerificationReport()
    bad = ""
    cases = 0
    for lam, lamp in iter_product(cs.colours, cs.colours):
        source = tensor_of(datum, (lam, lamp))
        target = tensor_of(datum, (lamp, lam))
        table = pair_braiding(datum, lam, lamp)
        for t in source.elements():
            for i in datum.colours:
                lhs = table[t]
                lhs = None if lhs is None else target.f(i, lhs)
                moved = source.f(i, t)
                rhs = None if moved is None else table[moved]
                cases += 1
                if lhs != rhs:
                    bad = bad or f"morphism property at {lam},{lamp},{t},{i}"
    triples = list(iter_product(cs.colours, repeat=3))
    for weights in triples:
        tc = tensor_of(datum, weights)
        word_a = longest_permutation_word(3)
        for t in tc.elements():
            cases += 1
            lhs = sigma_word(tc, word_a, t)
            rhs = sigma_word(tc, (2, 1, 2), t)
            if lhs != rhs:
                bad = bad or f"braid relation at {weights}, {t}"
            eta = tc.eta(t)
            cases += 1
            if (lhs is not None) != bool(eta):
                bad = bad or f"longest-word criterion at {weights}, {t}"
    report.add("braiding: morphism, braid, longest-word", not bad, cases, bad)
    return report


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="crystalgraphs",
        description="crystal combinatorics, braiding tables, higher-rank graphs, verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", required=True, help="Cartan type label, e.g. A2")
        p.add_argument("--out", help="write output to a file instead of stdout")

    p_crystal = sub.add_parser("crystal", help="emit a crystal graph")
    common(p_crystal)
    p_crystal.add_argument("--colours", help="weights like '1,0;0,1' (default: rho)")
    p_crystal.add_argument("--emit", choices=("dot", "text"), default="dot")

    p_braiding = sub.add_parser("braiding", help="print a braiding table")
    common(p_braiding)
    p_braiding.add_argument("--pair", required=True, help="two weights like '1,0;0,1'")

    p_graph = sub.add_parser("graph", help="emit the higher-rank graph")
    common(p_graph)
    p_graph.add_argument("--colours", help="colour weights (default: fundamentals)")
    p_graph.add_argument("--bound", help="degree bound like '1,1' (default: 2,...,2)")
    p_graph.add_argument("--emit", choices=("dot", "json"), default="dot")

    p_verify = sub.add_parser("verify", help="run verification suites")
    common(p_verify)
    p_verify.add_argument("--colours", help="colour weights (default: fundamentals)")
    p_verify.add_argument("--bound", help="degree bound (default: 1,...,1)")
    p_verify.add_argument(
        "--suite", choices=("crystal", "braiding", "graph", "kp", "all"), default="all"
    )
    p_verify.add_argument("--word", help="reduced-word override like '1,2,1'")
    p_verify.add_argument("--emit", choices=("text", "json"), default="text")

    p_info = sub.add_parser("info", help="print Weyl and graph summary data")
    common(p_info)
    p_info.add_argument("--colours", help="colour weights (default: fundamentals)")

    args = parser.parse_args(argv)
    try:
        datum = build_root_datum(args.type)
        rank = datum.rank
        if getattr(args, "colours", None):
            colours = _parse_weights(args.colours, rank)
        else:
            colours = datum.fundamental_weights
        if getattr(args, "bound", None):
            args.bound = _parse_bound(args.bound, len(colours))
        if getattr(args, "word", None):
            args.word = tuple(int(x) for x in args.word.split(","))

        if args.command == "crystal":
            if args.colours:
                weights = colours
            else:
                weights = (datum.rho,)
            if len(weights) == 1:
                obj = highest_weight_crystal(datum, weights[0])
            else:
                obj = tensor_of(datum, weights)
            text = _crystal_dot(obj, "crystal") if args.emit == "dot" else _crystal_text(obj)
            _emit(text, args.out)
            return 0

        if args.command == "braiding":
            lam, lamp = _parse_weights(args.pair, rank)
            _emit(_braiding_table(datum, lam, lamp), args.out)
            return 0

        if args.command == "graph":
            graph = build_graph(datum, colours)
            bound = args.bound or (2,) * len(colours)
            text = (
                graph.export_json(bound) + "\n"
                if args.emit == "json"
                else graph.export_dot(bound)
            )
            _emit(text, args.out)
            return 0

        if args.command == "verify":
            report, text = _run_verify(args, datum, colours)
            _emit(text, args.out)
            return 0 if report.passed else 1

        if args.command == "info":
            group = weyl_group(datum)
            graph = build_graph(datum, colours)
            w0 = ",".join(str(i) for i in group.longest_word)
            lines = [
                f"type {datum.label}",
                f"|W| = {group.order}",
                f"longest word length = {len(group.longest_word)}",
                f"w0 = {w0}",
                f"colours = {';'.join(','.join(str(x) for x in c) for c in colours)}",
                f"vertices = {len(graph.vertices)}",
            ]
            _emit("\n".join(lines) + "\n", args.out)
            return 0
    except (CartanTypeError, WeylSizeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except argparse.ArgumentTypeError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
