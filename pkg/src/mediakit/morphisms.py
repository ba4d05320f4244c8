"""Embeddings, reductions, canonical forms, and isomorphism of media.

Isomorphism uses invariant pruning plus label-aware backtracking; any
witness found is re-verified as an embedding in both directions, so search
bugs cannot yield false positives.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass

from . import axioms, core, pcube, wgfamily
from .axioms import Medium
from .core import TokenSystem
from .errors import EmptyReductionError, InputError


@dataclass(frozen=True)
class SystemMap:
    """A pair of injective maps: states to states, tokens to tokens."""

    states: Mapping[str, str]
    tokens: Mapping[str, str]


def check_embedding(
    source: TokenSystem, target: TokenSystem, system_map: SystemMap
) -> tuple[bool, tuple | None]:
    """Verify S.tau = T iff alpha(S).beta(tau) = alpha(T) over all pairs.

    With injective maps the biconditional reduces to commutation of alpha
    with every token action.  When both systems carry reverse pairings the
    token map must also commute with taking reverses.
    """
    alpha = dict(system_map.states)
    beta = dict(system_map.tokens)
    if set(alpha) != set(source.states) or set(beta) != set(source.tokens):
        raise InputError("maps must be total on the source system")
    if len(set(alpha.values())) != len(alpha) or len(set(beta.values())) != len(beta):
        raise InputError("maps must be injective")
    for s in source.states:
        if alpha[s] not in target.states:
            raise InputError(f"state image {alpha[s]!r} is not in the target")
    for tau in source.tokens:
        if beta[tau] not in target.tokens:
            raise InputError(f"token image {beta[tau]!r} is not in the target")
    for tau in source.tokens:
        for s in source.states:
            if alpha[source.act(s, tau)] != target.act(alpha[s], beta[tau]):
                return False, (s, tau)
    for tau in source.tokens:
        rev = core.reverse_of(source, tau)
        if rev is None:
            continue
        if core.reverse_of(target, beta[tau]) != beta[rev]:
            return False, ("reverse", tau)
    return True, None


def reduction(system: TokenSystem, states: set[str] | frozenset[str]) -> TokenSystem:
    """Restrict token actions to a state subset.

    A reduced step is kept only when it lands inside the subset; tokens
    whose reductions coincide are merged (the first name wins) and identity
    reductions are dropped.  Raises EmptyReductionError if nothing remains.
    """
    subset = set(states)
    stray = subset - set(system.states)
    if stray:
        raise InputError(f"unknown states in reduction: {sorted(stray)}")
    if len(subset) < 2:
        raise InputError("a reduction needs at least two states")
    kept = tuple(s for s in system.states if s in subset)
    actions: dict[str, dict[str, str]] = {}
    signatures: set[frozenset[tuple[str, str]]] = set()
    for tau in system.tokens:
        moves = {
            s: v for s, v in ((s, system.act(s, tau)) for s in kept) if v != s and v in subset
        }
        if not moves:
            continue
        signature = frozenset(moves.items())
        if signature in signatures:
            continue
        signatures.add(signature)
        actions[tau] = moves
    if not actions:
        raise EmptyReductionError(
            "every token reduces to the identity on the given states"
        )
    return TokenSystem(kept, actions)


def is_submedium(medium: Medium, states: set[str] | frozenset[str]) -> bool:
    """True iff the reduction to ``states`` exists and is itself a medium."""
    try:
        reduced = reduction(medium.system, states)
    except EmptyReductionError:
        return False
    return axioms.is_medium(reduced).accepted


@dataclass(frozen=True)
class CanonicalForm:
    """A deterministic representing wg-family for a medium.

    Ground elements are the Theta-class indices (as strings); states map to
    the member labels of their embedding sets.
    """

    family: wgfamily.SetFamily
    representing: TokenSystem
    state_map: Mapping[str, str]


def canonical_form(medium: Medium) -> CanonicalForm:
    emb = medium.embedding
    ground = tuple(str(i) for i in range(emb.dimension))
    members = {state: frozenset(str(i) for i in emb.sets[state]) for state in medium.states}
    ordered = sorted(medium.states, key=lambda s: sorted(members[s]))
    family = wgfamily.SetFamily(ground, tuple(members[s] for s in ordered))
    representing = wgfamily.representing_token_system(family)
    state_map = {s: family.member_label(members[s]) for s in medium.states}
    return CanonicalForm(family, representing, state_map)


def is_isomorphic(m1: Medium, m2: Medium) -> tuple[bool, SystemMap | None]:
    """Search for an isomorphism between two verified media.

    Quick invariant rejections first, then backtracking over a BFS vertex
    order; the derived token map must be consistent across arcs and the
    result is verified as an embedding in both directions.
    """
    g1, g2 = m1.graph, m2.graph
    if len(g1.vertices) != len(g2.vertices) or len(m1.tokens) != len(m2.tokens):
        return False, None
    if sorted(len(g1.neighbors(v)) for v in g1.vertices) != sorted(
        len(g2.neighbors(v)) for v in g2.vertices
    ):
        return False, None
    if _class_size_multiset(m1) != _class_size_multiset(m2):
        return False, None
    alpha = _graph_isomorphism(g1, g2)
    if alpha is None:
        return False, None
    system_map = _derive_token_map(m1, m2, alpha)
    if system_map is None:
        return False, None
    ok, _ = check_embedding(m1.system, m2.system, system_map)
    inverse = SystemMap(
        {v: k for k, v in system_map.states.items()},
        {v: k for k, v in system_map.tokens.items()},
    )
    ok_back, _ = check_embedding(m2.system, m1.system, inverse)
    if not (ok and ok_back):
        raise RuntimeError("isomorphism search produced an invalid witness")
    return True, system_map


def _class_size_multiset(medium: Medium) -> list[int]:
    counts: dict[int, int] = {}
    for edge in medium.graph.edges:
        index = medium.token_classes[min(medium.graph.labels[edge])]
        counts[index] = counts.get(index, 0) + 1
    return sorted(counts.values())


def _bfs_order(graph: pcube.LabeledGraph) -> list[str]:
    order = []
    seen = set()
    start = min(graph.vertices)
    queue = deque([start])
    seen.add(start)
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in graph.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return order


def _graph_isomorphism(g1: pcube.LabeledGraph, g2: pcube.LabeledGraph) -> dict[str, str] | None:
    order = _bfs_order(g1)
    n2 = {v: set(g2.neighbors(v)) for v in g2.vertices}
    n1 = {v: set(g1.neighbors(v)) for v in g1.vertices}
    assignment: dict[str, str] = {}
    used: set[str] = set()

    def extend(index: int) -> bool:
        if index == len(order):
            return True
        u = order[index]
        mapped_neighbors = [w for w in n1[u] if w in assignment]
        if mapped_neighbors:
            candidates = set.intersection(*(n2[assignment[w]] for w in mapped_neighbors))
        else:
            candidates = set(g2.vertices)
        for cand in sorted(candidates):
            if cand in used or len(n2[cand]) != len(n1[u]):
                continue
            # Non-neighbors among mapped vertices must stay non-adjacent.
            if any(
                (w in n1[u]) != (assignment[w] in n2[cand]) for w in assignment
            ):
                continue
            assignment[u] = cand
            used.add(cand)
            if extend(index + 1):
                return True
            del assignment[u]
            used.remove(cand)
        return False

    return dict(assignment) if extend(0) else None


def _derive_token_map(m1: Medium, m2: Medium, alpha: dict[str, str]) -> SystemMap | None:
    from .structure import token_for_arc

    beta: dict[str, str] = {}
    for tau in m1.tokens:
        images = {
            token_for_arc(m2, alpha[s], alpha[v]) for s, v in m1.system.arcs(tau)
        }
        if len(images) != 1:
            return None
        beta[tau] = images.pop()
    if len(set(beta.values())) != len(beta):
        return None
    return SystemMap(alpha, beta)
