"""Set families over a finite ground set.

Connectivity and well-gradedness under the symmetric-difference metric,
plus the canonical token system on a family: for each element x that is
neither in every member nor in none, one token adds x (when the result is
a member) and its companion removes x.
"""

from __future__ import annotations

import random
import string
import warnings
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .core import TokenSystem
from .errors import InputError


@dataclass(frozen=True)
class SetFamily:
    """A family of at least two distinct subsets of a finite ground set."""

    ground: tuple[str, ...]
    members: tuple[frozenset[str], ...]

    def __post_init__(self) -> None:
        ground = tuple(self.ground)
        if len(set(ground)) != len(ground):
            raise InputError("duplicate ground elements")
        members = tuple(frozenset(m) for m in self.members)
        if len(members) < 2:
            raise InputError("a set family needs at least two members")
        if len(set(members)) != len(members):
            raise InputError("duplicate member sets")
        known = set(ground)
        for m in members:
            stray = m - known
            if stray:
                raise InputError(f"member uses elements outside the ground set: {sorted(stray)}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "members", members)

    def member_label(self, member: frozenset[str]) -> str:
        return "{" + ",".join(sorted(member)) + "}"


def _adjacency(family: SetFamily) -> dict[frozenset[str], list[frozenset[str]]]:
    adj: dict[frozenset[str], list[frozenset[str]]] = {m: [] for m in family.members}
    for a, b in combinations(family.members, 2):
        if len(a ^ b) == 1:
            adj[a].append(b)
            adj[b].append(a)
    return adj


def _graph_distances(
    family: SetFamily, source: frozenset[str]
) -> dict[frozenset[str], int]:
    adj = _adjacency(family)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected_family(family: SetFamily) -> bool:
    """True iff the Hamming-1 graph on the members is connected."""
    return len(_graph_distances(family, family.members[0])) == len(family.members)


def is_well_graded(
    family: SetFamily,
) -> tuple[bool, tuple[frozenset[str], frozenset[str]] | None]:
    """Isometry criterion: member-graph distance equals |S delta T| everywhere.

    The witness is the lexicographically first violating pair.
    """
    order = sorted(family.members, key=family.member_label)
    for s in order:
        dist = _graph_distances(family, s)
        for t in order:
            if t is s:
                continue
            if dist.get(t) != len(s ^ t):
                return False, (s, t)
    return True, None


def wg_chain(
    family: SetFamily, start: frozenset[str], end: frozenset[str]
) -> list[frozenset[str]]:
    """A tight single-element chain between two members of a wg-family."""
    if start not in family.members or end not in family.members:
        raise InputError("chain endpoints must be members")
    adj = _adjacency(family)
    dist_to_end = _graph_distances(family, end)
    if dist_to_end.get(start) != len(start ^ end):
        raise InputError("no tight chain exists between the given members")
    chain = [start]
    current = start
    while current != end:
        current = min(
            (w for w in adj[current] if dist_to_end.get(w) == dist_to_end[current] - 1),
            key=family.member_label,
        )
        chain.append(current)
    return chain


def representing_token_system(family: SetFamily) -> TokenSystem:
    """The canonical token system on a family: add/remove tokens per element.

    Tokens are named ``+x`` (add x) and ``-x`` (remove x).  States carry the
    member labels.  An element whose add or remove map degenerates to the
    identity (possible only for non-connected families) is rejected.
    """
    if not is_connected_family(family):
        warnings.warn("family is not connected; the result may not be a token system")
    union: set[str] = set()
    inter = set(family.ground)
    for m in family.members:
        union |= m
        inter &= m
    toggled = sorted(union - inter)
    if not toggled:
        raise InputError("no toggled elements: every member is identical")
    states = tuple(family.member_label(m) for m in family.members)
    member_set = set(family.members)
    actions: dict[str, dict[str, str]] = {}
    for x in toggled:
        add: dict[str, str] = {}
        remove: dict[str, str] = {}
        for m in family.members:
            if x not in m and (m | {x}) in member_set:
                add[family.member_label(m)] = family.member_label(m | {x})
            if x in m and (m - {x}) in member_set:
                remove[family.member_label(m)] = family.member_label(m - {x})
        if not add:
            raise InputError(f"token +{x} degenerates to the identity")
        if not remove:
            raise InputError(f"token -{x} degenerates to the identity")
        actions[f"+{x}"] = add
        actions[f"-{x}"] = remove
    return TokenSystem(states, actions)


def is_complete_medium(medium) -> bool:
    """True iff for every state and token pair, one side of the pair moves."""
    system = medium.system
    seen: set[frozenset[str]] = set()
    for tau, rev in medium.pairing.items():
        pair = frozenset((tau, rev))
        if pair in seen:
            continue
        seen.add(pair)
        for state in system.states:
            if system.act(state, tau) == state and system.act(state, rev) == state:
                return False
    return True


def random_family(
    rng: random.Random, ground_size: int, size: int, p: float = 0.7
) -> SetFamily:
    """Seeded family generator producing both wg and non-wg samples.

    Grows from a random member; with probability ``p`` adds a Hamming-1
    neighbor of a random member, otherwise a uniformly random subset.
    """
    if ground_size < 1 or size < 2 or size > 2**ground_size:
        raise InputError("infeasible family dimensions")
    ground = tuple(string.ascii_lowercase[:ground_size])
    members: list[frozenset[str]] = [
        frozenset(x for x in ground if rng.random() < 0.5)
    ]
    present = set(members)
    while len(members) < size:
        if rng.random() < p:
            base = rng.choice(members)
            candidate = base ^ {rng.choice(ground)}
        else:
            candidate = frozenset(x for x in ground if rng.random() < 0.5)
        if candidate not in present:
            present.add(candidate)
            members.append(candidate)
    return SetFamily(ground, tuple(members))


def random_wg_family(
    rng: random.Random, ground_size: int, size: int, max_attempts: int = 10_000
) -> SetFamily:
    """Seeded rejection sampler for well-graded families."""
    for _ in range(max_attempts):
        family = random_family(rng, ground_size, size)
        ok, _witness = is_well_graded(family)
        if ok:
            return family
    raise RuntimeError("failed to sample a well-graded family")
