"""Token systems and the message algebra.

A token is a non-identity transformation of a finite state set; messages
are finite token strings acting by left-to-right composition.  This module
provides the basic predicates on messages: consistency, vacuousness,
stepwise effectiveness, and conciseness.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from .errors import InputError

# A message is a finite sequence of token labels.
Message = tuple[str, ...]

# Partial involution token -> reverse token.
ReversePairing = Mapping[str, str]


@dataclass(frozen=True)
class TokenSystem:
    """A finite set of states together with non-identity transformations.

    Token actions are stored sparsely: states absent from a token's map are
    fixed points.  Entries mapping a state to itself are dropped during
    normalization so that equal systems compare equal.  Tokens that act as
    the identity everywhere are rejected at construction.
    """

    states: tuple[str, ...]
    actions: Mapping[str, Mapping[str, str]] = field(compare=True)

    def __post_init__(self) -> None:
        states = tuple(self.states)
        if len(states) < 2:
            raise InputError("a token system needs at least two states")
        if len(set(states)) != len(states):
            raise InputError("duplicate state labels")
        known = set(states)
        actions: dict[str, dict[str, str]] = {}
        for token, sparse in dict(self.actions).items():
            moves: dict[str, str] = {}
            for src, dst in sparse.items():
                if src not in known:
                    raise InputError(f"token {token!r} acts on unknown state {src!r}")
                if dst not in known:
                    raise InputError(f"token {token!r} maps to unknown state {dst!r}")
                if src != dst:
                    moves[src] = dst
            if not moves:
                raise InputError(f"token {token!r} acts as the identity")
            actions[token] = moves
        if not actions:
            raise InputError("a token system needs at least one token")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "actions", actions)

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(self.actions)

    def act(self, state: str, token: str) -> str:
        if state not in self.states:
            raise InputError(f"unknown state {state!r}")
        try:
            moves = self.actions[token]
        except KeyError:
            raise InputError(f"unknown token {token!r}") from None
        return moves.get(state, state)

    def arcs(self, token: str) -> list[tuple[str, str]]:
        """Ordered pairs (S, V) with V = S.token and V != S, in state order."""
        if token not in self.actions:
            raise InputError(f"unknown token {token!r}")
        moves = self.actions[token]
        return [(s, moves[s]) for s in self.states if s in moves]


def apply(system: TokenSystem, state: str, message: Sequence[str]) -> tuple[str, Message]:
    """Apply a message to a state; returns the final state and the trajectory.

    The trajectory starts at ``state`` and has one entry per token applied,
    so the empty message yields ``(state, (state,))``.
    """
    if state not in system.states:
        raise InputError(f"unknown state {state!r}")
    current = state
    trajectory = [current]
    for token in message:
        current = system.act(current, token)
        trajectory.append(current)
    return current, tuple(trajectory)


def _is_reverse_pair(system: TokenSystem, tau: str, mu: str) -> bool:
    # S.tau = V  <=>  V.mu = S, over all distinct state pairs.
    for s in system.states:
        for v in system.states:
            if s == v:
                continue
            if (system.act(s, tau) == v) != (system.act(v, mu) == s):
                return False
    return True


def reverse_of(system: TokenSystem, token: str) -> str | None:
    """The unique reverse of ``token`` if one exists in the system."""
    if token not in system.actions:
        raise InputError(f"unknown token {token!r}")
    for candidate in system.tokens:
        if _is_reverse_pair(system, token, candidate):
            return candidate
    return None


def content(message: Sequence[str]) -> frozenset[str]:
    """The set of distinct tokens occurring in a message."""
    return frozenset(message)


def is_consistent(message: Sequence[str], pairing: ReversePairing) -> bool:
    """True unless the message contains a token together with its reverse.

    A self-reverse token makes any message containing it inconsistent.
    """
    present = set(message)
    for token in present:
        rev = pairing.get(token)
        if rev is not None and (rev == token or rev in present):
            return False
    return True


def is_vacuous(message: Sequence[str], pairing: ReversePairing) -> bool:
    """True iff the occurrences partition into mutual-reverse pairs."""
    counts = Counter(message)
    for token, n in counts.items():
        rev = pairing.get(token)
        if rev is None:
            return False
        if rev == token:
            if n % 2:
                return False
        elif counts.get(rev, 0) != n:
            return False
    return True


def is_stepwise_effective(system: TokenSystem, state: str, message: Sequence[str]) -> bool:
    """True iff every step of the trajectory changes the state."""
    _, trajectory = apply(system, state, message)
    return all(a != b for a, b in zip(trajectory, trajectory[1:]))


def is_concise(
    system: TokenSystem, state: str, message: Sequence[str], pairing: ReversePairing
) -> bool:
    """Stepwise effective, consistent, and no token occurs twice."""
    return (
        len(set(message)) == len(message)
        and is_consistent(message, pairing)
        and is_stepwise_effective(system, state, message)
    )


def is_closed(system: TokenSystem, state: str, message: Sequence[str]) -> bool:
    """Stepwise effective for ``state`` and returning to ``state``."""
    final, _ = apply(system, state, message)
    return final == state and is_stepwise_effective(system, state, message)


def reverse_message(message: Sequence[str], pairing: ReversePairing) -> Message | None:
    """The reversed message of reverses, or None if some reverse is missing."""
    out = []
    for token in reversed(message):
        rev = pairing.get(token)
        if rev is None:
            return None
        out.append(rev)
    return tuple(out)
