"""Parsing and serialization: token systems, set families, edge lists, DOT.

All serializers are deterministic; parse(serialize(x)) == x.
"""

from __future__ import annotations

import json

from .core import TokenSystem
from .errors import InputError
from .pcube import LabeledGraph
from .wgfamily import SetFamily


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("top-level JSON value must be an object")
    return data


def parse_token_system(text: str) -> TokenSystem:
    """Token system JSON: {"states": [...], "tokens": {name: {src: dst}}}."""
    data = _load_json(text)
    states = data.get("states")
    tokens = data.get("tokens")
    if not isinstance(states, list) or not all(isinstance(s, str) for s in states):
        raise InputError('"states" must be a list of strings')
    if not isinstance(tokens, dict):
        raise InputError('"tokens" must be an object')
    actions: dict[str, dict[str, str]] = {}
    for name, sparse in tokens.items():
        if not isinstance(sparse, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in sparse.items()
        ):
            raise InputError(f"token {name!r} must map states to states")
        actions[name] = dict(sparse)
    return TokenSystem(tuple(states), actions)


def serialize_token_system(system: TokenSystem) -> str:
    payload = {
        "states": list(system.states),
        "tokens": {tau: dict(system.actions[tau]) for tau in system.tokens},
    }
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def parse_family(text: str) -> SetFamily:
    """Family JSON: {"ground": [...], "sets": [[...], ...]}."""
    data = _load_json(text)
    ground = data.get("ground")
    sets = data.get("sets")
    if not isinstance(ground, list) or not all(isinstance(x, str) for x in ground):
        raise InputError('"ground" must be a list of strings')
    if not isinstance(sets, list) or not all(
        isinstance(member, list) and all(isinstance(x, str) for x in member)
        for member in sets
    ):
        raise InputError('"sets" must be a list of lists of ground elements')
    return SetFamily(tuple(ground), tuple(frozenset(member) for member in sets))


def serialize_family(family: SetFamily) -> str:
    payload = {
        "ground": list(family.ground),
        "sets": [sorted(member) for member in family.members],
    }
    return json.dumps(payload, indent=2) + "\n"


def parse_graph(text: str) -> LabeledGraph:
    """Edge-list text, one "U V" pair per line; '#' starts a comment."""
    edges: list[tuple[str, str]] = []
    vertices: list[str] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two vertex labels, got {line!r}")
        u, v = parts
        for w in (u, v):
            if w not in seen:
                seen.add(w)
                vertices.append(w)
        edges.append((u, v))
    if not vertices:
        raise InputError("empty graph file")
    return LabeledGraph(vertices, edges)


def serialize_graph(graph: LabeledGraph) -> str:
    lines = [f"{u} {v}" for u, v in sorted(graph.edges)]
    return "\n".join(lines) + "\n"


def export_dot(graph: LabeledGraph) -> str:
    """GraphViz DOT text; byte-identical across runs for equal inputs."""
    lines = ["graph {"]
    for v in sorted(graph.vertices):
        lines.append(f'  "{v}";')
    for u, v in sorted(graph.edges):
        pair = graph.labels.get((u, v))
        if pair:
            label = "/".join(sorted(pair))
            lines.append(f'  "{u}" -- "{v}" [label="{label}"];')
        else:
            lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
