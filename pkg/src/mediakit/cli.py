"""Command-line surface.

Exit codes: 0 = holds / Medium / true, 1 = fails / NotMedium / false,
2 = input error.  Machine-readable JSON goes to stdout, a one-line human
summary to stderr.
"""

from __future__ import annotations

import dataclasses
import json
import sys
from pathlib import Path

import click

from . import axioms, core, fileio, generators, morphisms, pcube, structure, wgfamily
from .errors import EmptyReductionError, InputError


def _fail_input(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _fail_input(str(exc))


def _emit(report: dict, summary: str, code: int) -> None:
    click.echo(json.dumps(report, sort_keys=True))
    click.echo(summary, err=True)
    sys.exit(code)


def _jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        payload = {"kind": type(obj).__name__}
        payload.update(
            {k: _jsonable(v) for k, v in dataclasses.asdict(obj).items()}
        )
        return payload
    if isinstance(obj, (frozenset, set)):
        return sorted(_jsonable(x) for x in obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return obj


@click.group()
def main() -> None:
    """Media, well-graded families, and partial cubes."""


@main.group()
def medium() -> None:
    """Operations on token-system files."""


def _load_system(path: str):
    try:
        return fileio.parse_token_system(_read(path))
    except InputError as exc:
        _fail_input(str(exc))


def _load_family(path: str):
    try:
        return fileio.parse_family(_read(path))
    except InputError as exc:
        _fail_input(str(exc))


def _load_graph(path: str):
    try:
        return fileio.parse_graph(_read(path))
    except InputError as exc:
        _fail_input(str(exc))


def _verify(path: str) -> axioms.MediumVerdict:
    return axioms.is_medium(_load_system(path))


@medium.command("verify")
@click.argument("file", type=click.Path())
@click.option("--oracle", is_flag=True, help="Also run the brute-force axiom oracles.")
@click.option("--maxlen", type=int, default=None, help="Bound for the closed-message oracle.")
def medium_verify(file: str, oracle: bool, maxlen: int | None) -> None:
    """Decide whether FILE is a medium."""
    system = _load_system(file)
    verdict = axioms.is_medium(system)
    report: dict = {
        "states": len(system.states),
        "tokens": len(system.tokens),
        "verdict": "medium" if verdict.accepted else "not_medium",
        "witness": _jsonable(verdict.witness),
    }
    if verdict.accepted:
        report["theta_classes"] = verdict.medium.embedding.dimension
    if oracle:
        # Best-effort pairing: tokens without a reverse are simply unpaired.
        pairing = {}
        for tau in system.tokens:
            rev = core.reverse_of(system, tau)
            if rev is not None:
                pairing[tau] = rev
        bound = maxlen if maxlen is not None else 2 * len(system.states)
        m1_ok, m1_witness = axioms.oracle_m1(system, pairing)
        m2_hit = axioms.oracle_m2(system, pairing, bound)
        report["oracle_m1"] = {"holds": m1_ok, "witness": _jsonable(m1_witness)}
        report["oracle_m2"] = {
            "maxlen": bound,
            "violation": _jsonable(m2_hit),
        }
    _emit(report, report["verdict"], 0 if verdict.accepted else 1)


@medium.command("graph")
@click.argument("file", type=click.Path())
@click.option("--dot", "dot_out", type=click.Path(), required=True)
def medium_graph(file: str, dot_out: str) -> None:
    """Write the labeled state graph of FILE as DOT."""
    system = _load_system(file)
    pairing = axioms.find_reverse_pairing(system)
    if not isinstance(pairing, dict):
        _emit({"witness": _jsonable(pairing)}, "no reverse pairing", 1)
    graph = axioms.build_graph(system, pairing)
    if not isinstance(graph, pcube.LabeledGraph):
        _emit({"witness": _jsonable(graph)}, "duplicate arc token", 1)
    Path(dot_out).write_text(fileio.export_dot(graph), encoding="utf-8")
    report = {"vertices": len(graph.vertices), "edges": len(graph.edges), "dot": dot_out}
    _emit(report, f"wrote {dot_out}", 0)


@medium.command("embed")
@click.argument("file", type=click.Path())
def medium_embed(file: str) -> None:
    """Print the hypercube embedding of a medium."""
    verdict = _verify(file)
    if not verdict.accepted:
        _emit({"witness": _jsonable(verdict.witness)}, "not a medium", 1)
    emb = verdict.medium.embedding
    report = {
        "base": emb.base,
        "dimension": emb.dimension,
        "sets": {state: sorted(emb.sets[state]) for state in verdict.medium.states},
    }
    _emit(report, f"embedded into a {emb.dimension}-cube", 0)


@medium.command("content")
@click.argument("file", type=click.Path())
@click.option("--state", required=True)
def medium_content(file: str, state: str) -> None:
    """Print the content of STATE in a medium."""
    verdict = _verify(file)
    if not verdict.accepted:
        _emit({"witness": _jsonable(verdict.witness)}, "not a medium", 1)
    try:
        tokens = structure.content_of(verdict.medium, state)
    except InputError as exc:
        _fail_input(str(exc))
    _emit({"state": state, "content": sorted(tokens)}, f"|content| = {len(tokens)}", 0)


@main.group()
def family() -> None:
    """Operations on set-family files."""


@family.command("check")
@click.argument("file", type=click.Path())
def family_check(file: str) -> None:
    """Report connectivity and well-gradedness of FILE."""
    fam = _load_family(file)
    connected = wgfamily.is_connected_family(fam)
    graded, witness = wgfamily.is_well_graded(fam)
    report = {
        "connected": connected,
        "well_graded": graded,
        "witness": None
        if witness is None
        else [sorted(witness[0]), sorted(witness[1])],
    }
    _emit(report, "well-graded" if graded else "not well-graded", 0 if graded else 1)


@family.command("medium")
@click.argument("file", type=click.Path())
@click.option("-o", "out", type=click.Path(), required=True)
def family_medium(file: str, out: str) -> None:
    """Write the representing token system of FILE."""
    fam = _load_family(file)
    try:
        system = wgfamily.representing_token_system(fam)
    except InputError as exc:
        _fail_input(str(exc))
    Path(out).write_text(fileio.serialize_token_system(system), encoding="utf-8")
    report = {"states": len(system.states), "tokens": len(system.tokens), "out": out}
    _emit(report, f"wrote {out}", 0)


@main.group()
def graphx() -> None:
    """Operations on plain edge-list graphs."""


@graphx.command("pcube")
@click.argument("file", type=click.Path())
def graphx_pcube(file: str) -> None:
    """Decide whether FILE is a partial cube."""
    graph = _load_graph(file)
    result = pcube.is_partial_cube(graph)
    report = {
        "partial_cube": result.holds,
        "witness": _jsonable(result.witness),
        "theta_classes": None if result.theta_partition is None else len(result.theta_partition),
    }
    _emit(report, "partial cube" if result.holds else "not a partial cube", 0 if result.holds else 1)


@graphx.command("mediatic")
@click.argument("file", type=click.Path())
def graphx_mediatic(file: str) -> None:
    """Decide whether FILE is mediatic."""
    graph = _load_graph(file)
    holds, witness = pcube.is_mediatic(graph)
    report = {"mediatic": holds, "witness": _jsonable(witness)}
    _emit(report, "mediatic" if holds else "not mediatic", 0 if holds else 1)


def _split_states(raw: str) -> set[str]:
    """Split a comma-separated state list, ignoring commas inside braces."""
    out: set[str] = set()
    depth = 0
    current: list[str] = []
    for ch in raw:
        if ch == "," and depth == 0:
            if current:
                out.add("".join(current))
            current = []
            continue
        depth += (ch == "{") - (ch == "}")
        current.append(ch)
    if current:
        out.add("".join(current))
    return out


@main.command("reduce")
@click.argument("file", type=click.Path())
@click.option("--states", required=True, help="Comma-separated state labels.")
@click.option("-o", "out", type=click.Path(), required=True)
def reduce_cmd(file: str, states: str, out: str) -> None:
    """Write the reduction of FILE to the given states."""
    system = _load_system(file)
    subset = _split_states(states)
    try:
        reduced = morphisms.reduction(system, subset)
    except EmptyReductionError as exc:
        _emit({"error": str(exc)}, "empty token set", 1)
    except InputError as exc:
        _fail_input(str(exc))
    Path(out).write_text(fileio.serialize_token_system(reduced), encoding="utf-8")
    report = {"states": len(reduced.states), "tokens": len(reduced.tokens), "out": out}
    _emit(report, f"wrote {out}", 0)


@main.command("iso")
@click.argument("file1", type=click.Path())
@click.argument("file2", type=click.Path())
def iso_cmd(file1: str, file2: str) -> None:
    """Decide whether two media are isomorphic."""
    verdicts = [_verify(file1), _verify(file2)]
    for path, verdict in zip((file1, file2), verdicts):
        if not verdict.accepted:
            _fail_input(f"{path} is not a medium: {verdict.witness}")
    holds, witness = morphisms.is_isomorphic(verdicts[0].medium, verdicts[1].medium)
    report = {
        "isomorphic": holds,
        "state_map": None if witness is None else dict(witness.states),
        "token_map": None if witness is None else dict(witness.tokens),
    }
    _emit(report, "isomorphic" if holds else "not isomorphic", 0 if holds else 1)


@main.group()
def gen() -> None:
    """Seeded, deterministic family generators."""


def _emit_family(fam: wgfamily.SetFamily, out: str | None) -> None:
    text = fileio.serialize_family(fam)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        _emit({"members": len(fam.members), "out": out}, f"wrote {out}", 0)
    click.echo(text, nl=False)
    click.echo(f"{len(fam.members)} members", err=True)
    sys.exit(0)


@gen.command("hypercube")
@click.argument("n", type=int)
@click.option("-o", "out", type=click.Path(), default=None)
def gen_hypercube(n: int, out: str | None) -> None:
    try:
        _emit_family(generators.hypercube_family(n), out)
    except InputError as exc:
        _fail_input(str(exc))


@gen.command("cycle")
@click.argument("length", type=int)
@click.option("-o", "out", type=click.Path(), default=None)
def gen_cycle(length: int, out: str | None) -> None:
    try:
        _emit_family(generators.cycle_family(length), out)
    except InputError as exc:
        _fail_input(str(exc))


@gen.command("path")
@click.argument("n", type=int)
@click.option("-o", "out", type=click.Path(), default=None)
def gen_path(n: int, out: str | None) -> None:
    try:
        _emit_family(generators.path_family(n), out)
    except InputError as exc:
        _fail_input(str(exc))


@gen.command("random-wg")
@click.option("--ground", type=int, required=True)
@click.option("--size", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("-o", "out", type=click.Path(), default=None)
def gen_random_wg(ground: int, size: int, seed: int, out: str | None) -> None:
    try:
        _emit_family(generators.random_wg(ground, size, seed), out)
    except InputError as exc:
        _fail_input(str(exc))


if __name__ == "__main__":
    main()
