"""Deterministic family generators for the CLI and the test suites."""

from __future__ import annotations

import random
import string
from itertools import combinations

from .errors import InputError
from .wgfamily import SetFamily, random_wg_family


def _ground(n: int) -> tuple[str, ...]:
    if n > len(string.ascii_lowercase):
        raise InputError("ground sets larger than 26 are not supported")
    return tuple(string.ascii_lowercase[:n])


def hypercube_family(n: int) -> SetFamily:
    """The power set of an n-element ground set (the full cube Q_n)."""
    if n < 1:
        raise InputError("hypercube dimension must be at least 1")
    ground = _ground(n)
    members = [frozenset()]
    for k in range(1, n + 1):
        members.extend(frozenset(c) for c in combinations(ground, k))
    return SetFamily(ground, tuple(members))


def cycle_family(length: int) -> SetFamily:
    """An even cycle C_length as a wg-family of prefixes and suffixes."""
    if length < 4 or length % 2:
        raise InputError("cycle length must be an even number >= 4")
    k = length // 2
    ground = _ground(k)
    members = [frozenset(ground[:i]) for i in range(k + 1)]
    members.extend(frozenset(ground[i:]) for i in range(1, k))
    return SetFamily(ground, tuple(members))


def path_family(n: int) -> SetFamily:
    """A path P_n as the chain of prefixes of an (n-1)-element ground set."""
    if n < 2:
        raise InputError("paths need at least two states")
    ground = _ground(n - 1)
    return SetFamily(ground, tuple(frozenset(ground[:i]) for i in range(n)))


def random_wg(ground_size: int, size: int, seed: int) -> SetFamily:
    """Seeded well-graded family."""
    return random_wg_family(random.Random(seed), ground_size, size)
