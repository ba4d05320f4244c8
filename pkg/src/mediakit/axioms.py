"""Deciding whether a token system is a medium.

The decision procedure is graph-based: find a total fixed-point-free
reverse pairing, build the labeled state graph, require it connected and a
partial cube, then check that token pairs and Theta classes correspond
bijectively with consistent arc orientation.  Brute-force oracles for the
two axioms are provided for desk-scale cross-validation; the closed-message
oracle is refutation-only.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Union

from . import core, pcube
from .core import Message, TokenSystem
from .errors import InputError


@dataclass(frozen=True)
class MissingReverse:
    token: str


@dataclass(frozen=True)
class SelfReverse:
    token: str


@dataclass(frozen=True)
class DuplicateArcToken:
    source: str
    target: str
    token: str
    other: str


@dataclass(frozen=True)
class Disconnected:
    state: str
    other: str


@dataclass(frozen=True)
class NotPartialCube:
    detail: object


@dataclass(frozen=True)
class Misaligned:
    token: str
    reason: str


Witness = Union[
    MissingReverse, SelfReverse, DuplicateArcToken, Disconnected, NotPartialCube, Misaligned
]


@dataclass(frozen=True)
class Medium:
    """A verified medium with its certificate.

    ``token_classes`` maps each token to the Theta-class index of its pair;
    ``embedding`` is the isometric hypercube embedding of the state graph.
    """

    system: TokenSystem
    pairing: Mapping[str, str]
    graph: pcube.LabeledGraph
    embedding: pcube.HypercubeEmbedding
    token_classes: Mapping[str, int]

    @property
    def states(self) -> tuple[str, ...]:
        return self.system.states

    @property
    def tokens(self) -> tuple[str, ...]:
        return self.system.tokens

    def reverse(self, token: str) -> str:
        try:
            return self.pairing[token]
        except KeyError:
            raise InputError(f"unknown token {token!r}") from None

    def delta(self, s: str, v: str) -> int:
        if s not in self.system.states or v not in self.system.states:
            raise InputError("unknown state")
        return self.graph.distance(s, v)

    def effective_domain(self, token: str) -> frozenset[str]:
        """States the token moves (the set U_tau)."""
        return frozenset(s for s, _ in self.system.arcs(token))


@dataclass(frozen=True)
class MediumVerdict:
    medium: Medium | None = None
    witness: Witness | None = None

    @property
    def accepted(self) -> bool:
        return self.medium is not None


def find_reverse_pairing(
    system: TokenSystem,
) -> dict[str, str] | MissingReverse | SelfReverse:
    """Total reverse pairing, or the first token violating existence."""
    pairing: dict[str, str] = {}
    for tau in system.tokens:
        rev = core.reverse_of(system, tau)
        if rev is None:
            return MissingReverse(tau)
        if rev == tau:
            return SelfReverse(tau)
        pairing[tau] = rev
    return pairing


def build_graph(
    system: TokenSystem, pairing: Mapping[str, str]
) -> pcube.LabeledGraph | DuplicateArcToken:
    """State graph with each edge labeled by its reverse-token pair."""
    arc_owner: dict[tuple[str, str], str] = {}
    for tau in system.tokens:
        for s, v in system.arcs(tau):
            owner = arc_owner.get((s, v))
            if owner is not None and owner != tau:
                return DuplicateArcToken(s, v, owner, tau)
            arc_owner[(s, v)] = tau
    labels: dict[tuple[str, str], frozenset[str]] = {}
    for (s, v), tau in arc_owner.items():
        key = pcube.edge_key(s, v)
        pair = frozenset((tau, pairing[tau]))
        if key in labels and labels[key] != pair:
            # A genuine reverse pairing makes opposite arcs carry one pair.
            return DuplicateArcToken(s, v, min(labels[key]), tau)
        labels[key] = pair
    return pcube.LabeledGraph(system.states, tuple(labels), labels)


def is_medium(system: TokenSystem) -> MediumVerdict:
    """Full decision procedure; rejections report the first failure in a
    fixed order: reverses, arcs, connectivity, partial cube, alignment."""
    pairing = find_reverse_pairing(system)
    if not isinstance(pairing, dict):
        return MediumVerdict(witness=pairing)
    graph = build_graph(system, pairing)
    if not isinstance(graph, pcube.LabeledGraph):
        return MediumVerdict(witness=graph)
    disconnected = graph.connected_witness()
    if disconnected is not None:
        return MediumVerdict(witness=Disconnected(*disconnected))
    result = pcube.is_partial_cube(graph)
    if not result.holds:
        return MediumVerdict(witness=NotPartialCube(result.witness))
    partition = result.theta_partition
    class_of = partition.class_of

    # Token pairs and Theta classes must correspond bijectively.
    pair_classes: dict[frozenset[str], set[int]] = {}
    for edge in graph.edges:
        pair_classes.setdefault(graph.labels[edge], set()).add(class_of[edge])
    for pair, indices in sorted(pair_classes.items(), key=lambda kv: sorted(kv[0])):
        if len(indices) > 1:
            return MediumVerdict(
                witness=Misaligned(min(pair), "token pair spans several Theta classes")
            )
    class_pairs: dict[int, set[frozenset[str]]] = {}
    for edge in graph.edges:
        class_pairs.setdefault(class_of[edge], set()).add(graph.labels[edge])
    for index in sorted(class_pairs):
        if len(class_pairs[index]) > 1:
            pair = min(class_pairs[index], key=sorted)
            return MediumVerdict(
                witness=Misaligned(min(pair), "Theta class carries several token pairs")
            )
    n_pairs = len({frozenset((t, pairing[t])) for t in system.tokens})
    if len(partition) != n_pairs:
        return MediumVerdict(
            witness=Misaligned(system.tokens[0], "token pairs and Theta classes differ in number")
        )

    # Every arc of a token must cross its class in one direction.
    dist = graph.distances()
    token_classes: dict[str, int] = {}
    for tau in system.tokens:
        arcs = system.arcs(tau)
        s0, v0 = arcs[0]
        token_classes[tau] = class_of[pcube.edge_key(s0, v0)]
        for s, v in arcs:
            if not (dist[v][v0] < dist[v][s0] and dist[s][s0] < dist[s][v0]):
                return MediumVerdict(
                    witness=Misaligned(tau, f"arc {s!r}->{v!r} crosses against its class orientation")
                )
    embedding = pcube.embed_hypercube(graph, partition)
    medium = Medium(system, pairing, graph, embedding, token_classes)
    return MediumVerdict(medium=medium)


def oracle_m1(
    system: TokenSystem, pairing: Mapping[str, str]
) -> tuple[bool, tuple[str, str] | None]:
    """Exhaustive concise-reachability check for the first axiom.

    Complete: concise messages use each token at most once, so the search
    over distinct-token, consistent, stepwise-effective sequences is finite.
    Returns the lexicographically smallest unreachable ordered pair.
    """
    for s in sorted(system.states):
        reached = _concise_reachable(system, pairing, s)
        for v in sorted(system.states):
            if v != s and v not in reached:
                return False, (s, v)
    return True, None


def _concise_reachable(
    system: TokenSystem, pairing: Mapping[str, str], start: str
) -> set[str]:
    reached = {start}
    stack: list[tuple[str, frozenset[str]]] = [(start, frozenset())]
    visited = {(start, frozenset())}
    while stack:
        state, used = stack.pop()
        for tau in system.tokens:
            if tau in used:
                continue
            rev = pairing.get(tau)
            if rev is not None and (rev == tau or rev in used):
                continue
            nxt = system.act(state, tau)
            if nxt == state:
                continue
            reached.add(nxt)
            key = (nxt, used | {tau})
            if key not in visited:
                visited.add(key)
                stack.append(key)
    return reached


def oracle_m2(
    system: TokenSystem, pairing: Mapping[str, str], maxlen: int
) -> tuple[Message, str] | None:
    """Bounded refutation oracle for the second axiom.

    Searches stepwise-effective closed messages up to ``maxlen`` for a
    non-vacuous one and returns a shortest violation with its start state,
    or None if no violation exists up to the bound (which certifies nothing
    beyond it).  Vacuousness depends only on per-pair occurrence imbalances,
    so the walk space is searched as a BFS over (state, imbalance) classes.
    """
    if maxlen < 2:
        raise InputError("maxlen must be at least 2")
    best: tuple[int, str, Message] | None = None
    for start in sorted(system.states):
        hit = _shortest_violation_from(system, pairing, start, maxlen)
        if hit is not None and (best is None or len(hit) < best[0]):
            best = (len(hit), start, hit)
    if best is None:
        return None
    return best[2], best[1]


def _shortest_violation_from(
    system: TokenSystem, pairing: Mapping[str, str], start: str, maxlen: int
) -> Message | None:
    # Effect of one token occurrence on the vacuousness bookkeeping:
    # mutual-reverse pairs track a signed imbalance, self-reverse tokens a
    # parity bit, tokens without a reverse poison the message outright.
    pair_index: dict[str, tuple[int, int]] = {}
    poison: set[str] = set()
    slots = 0
    for tau in system.tokens:
        if tau in pair_index:
            continue
        rev = pairing.get(tau)
        if rev is None:
            poison.add(tau)
        elif rev == tau:
            pair_index[tau] = (slots, 1)  # parity slot
            slots += 1
        else:
            pair_index[tau] = (slots, 1)
            pair_index[rev] = (slots, -1)
            slots += 1
    zero = (0,) * slots
    initial = (start, zero, False)
    parents: dict[tuple, tuple[tuple, str] | None] = {initial: None}
    frontier = [initial]
    depth = 0
    while frontier and depth < maxlen:
        depth += 1
        nxt_frontier = []
        for key in frontier:
            state, balance, poisoned = key
            for tau in system.tokens:
                target = system.act(state, tau)
                if target == state:
                    continue
                if tau in poison:
                    new_balance = balance
                    new_poisoned = True
                else:
                    slot, step = pair_index[tau]
                    rev = pairing[tau]
                    entry = balance[slot] + step if rev != tau else (balance[slot] + 1) % 2
                    new_balance = balance[:slot] + (entry,) + balance[slot + 1 :]
                    new_poisoned = poisoned
                new_key = (target, new_balance, new_poisoned)
                if new_key in parents:
                    continue
                parents[new_key] = (key, tau)
                if target == start and (new_poisoned or any(new_balance)):
                    return _reconstruct(parents, new_key)
                nxt_frontier.append(new_key)
        frontier = nxt_frontier
    return None


def _reconstruct(parents: dict, key: tuple) -> Message:
    tokens: list[str] = []
    while parents[key] is not None:
        key, tau = parents[key]
        tokens.append(tau)
    return tuple(reversed(tokens))
