"""Command-line front end.

Builds or ingests a graph, counts or classifies its switching classes,
verifies known classification results, and exports reports as text, JSON
or DOT.  All output is deterministic: the same invocation produces the
same bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import Graph6ParseError, GuardExceeded
from .classify import (
    OrbitReport,
    burnside_count,
    gp_edge_layers,
    orbits,
    signed_automorphism_group,
    verify_lower_bound,
)
from .gf2 import BitVector
from .graphs import (
    Graph,
    complete_graph,
    connected_components,
    generalized_petersen,
    parse_graph6,
)
from .signing import (
    SignedGraph,
    class_of,
    count_classes,
    switch,
    switching_equivalent,
)
from .symmetry import (
    PermutationGroup,
    brute_automorphisms,
    closure,
    complete_graph_generators,
    gp_automorphism_group,
    gp_generators,
)

# seeds for the randomized verification checks; fixed so output is byte-stable
_ORACLE_SEED = 271828
_DICHOTOMY_SEED = 314159

_FORMATS_BY_COMMAND = {
    "count": ("text",),
    "classify": ("text", "json"),
    "verify": ("text",),
    "export": ("dot", "json"),
}


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation: a graph source, a command, and output options."""

    command: str
    graph_source: str | None
    fmt: str = "text"
    out: str | None = None


def build_graph(source: str) -> Graph:
    """Resolve a graph source: ``k:N``, ``gp:N:K``, or a graph6 file path."""
    if source.startswith("k:"):
        return complete_graph(_parse_int(source[2:], "complete-graph order"))
    if source.startswith("gp:"):
        parts = source[3:].split(":")
        if len(parts) != 2:
            raise ValueError(f"expected gp:N:K, got {source!r}")
        n = _parse_int(parts[0], "GP parameter n")
        k = _parse_int(parts[1], "GP parameter k")
        return generalized_petersen(n, k)
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ValueError(f"cannot read graph6 file {source!r}: {exc}") from exc
    for line in text.splitlines():
        if line.strip():
            return parse_graph6(line)
    raise Graph6ParseError(f"no graph6 data in {source!r}")


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"invalid {what}: {text!r}") from None


def automorphism_group_for(source: str, g: Graph) -> PermutationGroup:
    """The automorphism group matching a graph source: generator closure
    for the named families, brute search for ingested graphs."""
    if source.startswith("k:"):
        return closure(complete_graph_generators(g.n))
    if source.startswith("gp:"):
        parts = source[3:].split(":")
        return gp_automorphism_group(int(parts[0]), int(parts[1]))
    return brute_automorphisms(g)


def _emit(config: RunConfig, text: str) -> None:
    if config.out is None:
        sys.stdout.write(text)
    else:
        Path(config.out).write_text(text)


# ---------------------------------------------------------------------------
# count


def cmd_count(config: RunConfig) -> int:
    g = build_graph(config.graph_source)
    c, _ = connected_components(g)
    lines = [
        f"graph: {config.graph_source}",
        f"n: {g.n}",
        f"m: {g.m}",
        f"components: {c}",
        f"signings: {2 ** g.m}",
        f"switching classes: {count_classes(g)}",
    ]
    _emit(config, "\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# classify / export


def _classification(config: RunConfig) -> tuple[Graph, list[OrbitReport], int, int]:
    g = build_graph(config.graph_source)
    grp = automorphism_group_for(config.graph_source, g)
    reports = orbits(g, grp)
    check = burnside_count(g, grp)
    if check != len(reports):
        raise RuntimeError(
            f"Burnside count {check} disagrees with {len(reports)} orbits"
        )
    return g, reports, count_classes(g), check


def _negative_pairs(report: OrbitReport) -> list[list[int]]:
    return [[u, v] for u, v in report.witness.negative_edges()]


def _render_table(
    source: str, g: Graph, reports: list[OrbitReport], classes: int, check: int
) -> str:
    c, _ = connected_components(g)
    lines = [
        f"graph: {source}  n={g.n} m={g.m} components={c}",
        f"switching classes: {classes}",
        f"orbits: {len(reports)}",
        f"burnside cross-check: {check}",
        "",
        f"{'id':>4}  {'size':>6}  {'mu':>4}  {'aut':>6}  negative edges",
    ]
    for i, report in enumerate(reports, start=1):
        if report.witness.signs.bits:
            edges = " ".join(f"({u},{v})" for u, v in report.witness.negative_edges())
        else:
            edges = "-"
        lines.append(
            f"{i:>4}  {report.size:>6}  {report.mu:>4}  "
            f"{report.signed_aut_order:>6}  {edges}"
        )
    return "\n".join(lines) + "\n"


def _render_json(
    source: str, g: Graph, reports: list[OrbitReport], classes: int
) -> str:
    payload = {
        "graph": {"n": g.n, "m": g.m, "family": source},
        "classes": classes,
        "orbits": [
            {
                "id": i,
                "size": report.size,
                "mu": report.mu,
                "signed_aut_order": report.signed_aut_order,
                "negative_edges": _negative_pairs(report),
            }
            for i, report in enumerate(reports, start=1)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _render_dot(g: Graph, reports: list[OrbitReport]) -> str:
    blocks = []
    for i, report in enumerate(reports, start=1):
        negative = report.witness.signs.bits
        lines = [
            f"graph orbit_{i} {{",
            f'  label="orbit {i}: size {report.size}, mu {report.mu}";',
        ]
        for v in range(g.n):
            lines.append(f"  v{v};")
        for e, (u, v) in enumerate(g.edges):
            color = "red" if (negative >> e) & 1 else "blue"
            lines.append(f"  v{u} -- v{v} [color={color}];")
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + "\n"


def cmd_classify(config: RunConfig) -> int:
    g, reports, classes, check = _classification(config)
    if config.fmt == "json":
        text = _render_json(config.graph_source, g, reports, classes)
    else:
        text = _render_table(config.graph_source, g, reports, classes, check)
    _emit(config, text)
    return 0


def cmd_export(config: RunConfig) -> int:
    g, reports, classes, _ = _classification(config)
    if config.fmt == "json":
        text = _render_json(config.graph_source, g, reports, classes)
    else:
        text = _render_dot(g, reports)
    _emit(config, text)
    return 0


# ---------------------------------------------------------------------------
# verify

Check = tuple[str, bool, str]


def _random_signing(g: Graph, rng: random.Random) -> SignedGraph:
    return SignedGraph(g, BitVector(g.m, rng.getrandbits(g.m) if g.m else 0))


def _brute_equivalent(a: SignedGraph, b: SignedGraph) -> bool:
    n = a.graph.n
    for mask in range(1 << n):
        flipped = [v for v in range(n) if (mask >> v) & 1]
        if switch(a, flipped).signs == b.signs:
            return True
    return False


def _partitioned_class_count(g: Graph) -> int:
    representatives: list[SignedGraph] = []
    for bits in range(1 << g.m):
        s = SignedGraph(g, BitVector(g.m, bits))
        if not any(switching_equivalent(s, rep) for rep in representatives):
            representatives.append(s)
    return len(representatives)


def _check_class_counts() -> list[Check]:
    cases = [
        ("K4", complete_graph(4)),
        ("C6", Graph(6, [(i, (i + 1) % 6) for i in range(6)])),
        ("K3,3", Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])),
        ("GP(4,1)", generalized_petersen(4, 1)),
        ("two triangles", Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])),
    ]
    checks = []
    for name, g in cases:
        expected = count_classes(g)
        actual = _partitioned_class_count(g)
        checks.append(
            (
                f"class count {name}",
                actual == expected,
                f"{actual} classes by exhaustive partition (formula {expected})",
            )
        )
    return checks


def _check_cut_criterion_oracle(pairs_per_graph: int) -> list[Check]:
    rng = random.Random(_ORACLE_SEED)
    cases = [
        ("K4", complete_graph(4)),
        ("K5", complete_graph(5)),
        ("K6", complete_graph(6)),
        ("GP(3,1)", generalized_petersen(3, 1)),
    ]
    checks = []
    for name, g in cases:
        disagreements = 0
        for trial in range(pairs_per_graph):
            a = _random_signing(g, rng)
            if trial % 2:
                flipped = [v for v in range(g.n) if rng.random() < 0.5]
                b = switch(a, flipped)
            else:
                b = _random_signing(g, rng)
            if switching_equivalent(a, b) != _brute_equivalent(a, b):
                disagreements += 1
        checks.append(
            (
                f"cut criterion vs brute force {name}",
                disagreements == 0,
                f"{pairs_per_graph} pairs, {disagreements} disagreements",
            )
        )
    return checks


def _size_summary(reports: list[OrbitReport]) -> str:
    by_size: dict[int, int] = {}
    for report in reports:
        by_size[report.size] = by_size.get(report.size, 0) + 1
    return ", ".join(f"{count}x{size}" for size, count in sorted(by_size.items()))


def _check_k5() -> list[Check]:
    g = complete_graph(5)
    grp = closure(complete_graph_generators(5))
    reports = orbits(g, grp)
    check = burnside_count(g, grp)
    sizes = sorted(r.size for r in reports)
    mus = sorted(r.mu for r in reports)
    return [
        ("K5 orbits", len(reports) == 7, f"{len(reports)} (expected 7)"),
        (
            "K5 orbit sizes",
            sizes == [1, 1, 10, 10, 12, 15, 15],
            f"{_size_summary(reports)} (expected 2x1, 2x10, 1x12, 2x15)",
        ),
        ("K5 mu values", mus == [0, 1, 2, 2, 3, 3, 4], f"{mus} (expected [0, 1, 2, 2, 3, 3, 4])"),
        ("K5 burnside", check == len(reports), f"{check} (= orbit count)"),
        ("K5 group order", grp.order == 120, f"{grp.order} (expected 120)"),
    ]


def _check_gp72() -> list[Check]:
    g = generalized_petersen(7, 2)
    grp = closure(gp_generators(7, 2))
    reports = orbits(g, grp)
    check = burnside_count(g, grp)
    sizes = sorted(r.size for r in reports)
    return [
        ("GP(7,2) orbits", len(reports) == 36, f"{len(reports)} (expected 36)"),
        (
            "GP(7,2) orbit sizes",
            sizes == [1] * 4 + [7] * 28 + [14] * 4,
            f"{_size_summary(reports)} (expected 4x1, 28x7, 4x14)",
        ),
        (
            "GP(7,2) classes covered",
            sum(r.size for r in reports) == 256,
            f"{sum(r.size for r in reports)} (expected 256)",
        ),
        ("GP(7,2) burnside", check == len(reports), f"{check} (= orbit count)"),
        ("GP(7,2) group order", grp.order == 14, f"{grp.order} (expected 14)"),
    ]


def _check_petersen() -> list[Check]:
    g = generalized_petersen(5, 2)
    grp = brute_automorphisms(g)
    reports = orbits(g, grp)
    check = burnside_count(g, grp)
    return [
        ("Petersen group order", grp.order == 120, f"{grp.order} (expected 120)"),
        ("Petersen orbits", len(reports) == 6, f"{len(reports)} (expected 6)"),
        (
            "Petersen classes covered",
            sum(r.size for r in reports) == 64,
            f"{sum(r.size for r in reports)} (expected 64)",
        ),
        ("Petersen burnside", check == len(reports), f"{check} (= orbit count)"),
    ]


def _check_lower_bound() -> list[Check]:
    checks = []
    for n in range(4, 9):
        bound, verified = verify_lower_bound(n)
        expected = 5 if n == 8 else 1
        checks.append(
            (
                f"lower bound n={n}",
                verified and bound == expected,
                f"psi({n},{n // 4 - 1})={bound}, pairwise non-isomorphic: "
                f"{'yes' if verified else 'NO'}",
            )
        )
    return checks


def _check_signed_aut_dichotomy(samples: int) -> list[Check]:
    g = generalized_petersen(7, 2)
    grp = closure(gp_generators(7, 2))
    layers = gp_edge_layers(g, 7, 2)
    masks = [
        sum(1 << e for e in layer) for layer in (layers.outer, layers.inner, layers.spokes)
    ]
    mono_ok = True
    for pattern in range(8):
        bits = 0
        for i in range(3):
            if (pattern >> i) & 1:
                bits |= masks[i]
        order = signed_automorphism_group(SignedGraph(g, BitVector(g.m, bits)), grp).order
        if order != 14:
            mono_ok = False
    rng = random.Random(_DICHOTOMY_SEED)
    mixed_ok = True
    count = 0
    while count < samples:
        bits = rng.getrandbits(g.m)
        if all((bits & mask) in (0, mask) for mask in masks):
            continue  # every layer monochromatic; not in this branch
        count += 1
        order = signed_automorphism_group(SignedGraph(g, BitVector(g.m, bits)), grp).order
        if order > 2:
            mixed_ok = False
    return [
        (
            "GP(7,2) monochromatic layers",
            mono_ok,
            "all 8 layer-monochromatic signings have signed aut order 14",
        ),
        (
            "GP(7,2) mixed layers",
            mixed_ok,
            f"{samples} random signings with a mixed layer all have order <= 2",
        ),
    ]


def _default_suite() -> list[Check]:
    checks: list[Check] = []
    checks += _check_class_counts()
    checks += _check_cut_criterion_oracle(pairs_per_graph=500)
    checks += _check_k5()
    checks += _check_gp72()
    checks += _check_petersen()
    checks += _check_lower_bound()
    checks += _check_signed_aut_dichotomy(samples=1000)
    return checks


_EXPECTED_INSTANCES = {
    "k:5": (7, [1, 1, 10, 10, 12, 15, 15]),
    "gp:7:2": (36, [1] * 4 + [7] * 28 + [14] * 4),
    "gp:5:2": (6, None),
}


def _instance_suite(source: str) -> list[Check]:
    g = build_graph(source)
    grp = automorphism_group_for(source, g)
    reports = orbits(g, grp)
    check = burnside_count(g, grp)
    classes = count_classes(g)
    covered = sum(r.size for r in reports)
    checks: list[Check] = [
        (
            f"{source} burnside",
            check == len(reports),
            f"{check} (orbit count {len(reports)})",
        ),
        (
            f"{source} classes covered",
            covered == classes,
            f"orbit sizes sum to {covered} (classes {classes})",
        ),
        (
            f"{source} orbit sizes divide group order",
            all(grp.order % r.size == 0 for r in reports),
            f"group order {grp.order}",
        ),
    ]
    expected = _EXPECTED_INSTANCES.get(source)
    if expected is not None:
        n_orbits, sizes = expected
        checks.append(
            (
                f"{source} orbits",
                len(reports) == n_orbits,
                f"{len(reports)} (expected {n_orbits})",
            )
        )
        if sizes is not None:
            checks.append(
                (
                    f"{source} orbit sizes",
                    sorted(r.size for r in reports) == sizes,
                    f"{_size_summary(reports)}",
                )
            )
    if g.n <= 6:
        checks += _check_instance_oracle(source, g)
    if g.m <= 12:
        actual = _partitioned_class_count(g)
        checks.append(
            (
                f"{source} class count",
                actual == classes,
                f"{actual} classes by exhaustive partition (formula {classes})",
            )
        )
    return checks


def _check_instance_oracle(source: str, g: Graph) -> list[Check]:
    rng = random.Random(_ORACLE_SEED)
    disagreements = 0
    trials = 200
    for trial in range(trials):
        a = _random_signing(g, rng)
        if trial % 2:
            b = switch(a, [v for v in range(g.n) if rng.random() < 0.5])
        else:
            b = _random_signing(g, rng)
        if switching_equivalent(a, b) != _brute_equivalent(a, b):
            disagreements += 1
    return [
        (
            f"{source} cut criterion vs brute force",
            disagreements == 0,
            f"{trials} pairs, {disagreements} disagreements",
        )
    ]


def cmd_verify(config: RunConfig) -> int:
    if config.graph_source is None:
        checks = _default_suite()
    else:
        checks = _instance_suite(config.graph_source)
    lines = []
    failures = 0
    for name, ok, detail in checks:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        if not ok:
            failures += 1
    lines.append(
        f"summary: {len(checks)} checks, {len(checks) - failures} passed, "
        f"{failures} failed"
    )
    _emit(config, "\n".join(lines) + "\n")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# entry point

_COMMANDS = {
    "count": cmd_count,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "export": cmd_export,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="switchiso",
        description="Classify signed graphs up to switching isomorphism.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "count": "print the number of signings and switching classes",
        "classify": "list the orbits of switching classes under the graph's symmetries",
        "verify": "run verification checks (the full suite without --graph)",
        "export": "emit the classification as DOT or JSON",
    }
    for name, help_text in specs.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--graph",
            required=(name != "verify"),
            default=None,
            metavar="SPEC",
            help="graph source: k:N, gp:N:K, or a graph6 file path",
        )
        p.add_argument(
            "--format",
            dest="fmt",
            choices=("text", "json", "dot"),
            default=None,
            help="output format (command-dependent)",
        )
        p.add_argument("--out", default=None, metavar="PATH", help="write output to PATH")
    return parser


def _resolve_format(command: str, fmt: str | None) -> str:
    allowed = _FORMATS_BY_COMMAND[command]
    if fmt is None:
        return allowed[0]
    if fmt not in allowed:
        raise ValueError(
            f"format {fmt!r} is not valid for {command!r} (choose from {', '.join(allowed)})"
        )
    return fmt


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            command=args.command,
            graph_source=args.graph,
            fmt=_resolve_format(args.command, args.fmt),
            out=args.out,
        )
        return _COMMANDS[config.command](config)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
