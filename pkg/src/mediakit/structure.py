"""Contents, semicubes, the state metric, and closed-message structure.

Contents are computed through the metric characterization of semicubes
(polynomial) rather than by enumerating concise messages; the enumeration
is kept as an exponential oracle for tests and for message-level facts.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import pcube
from .axioms import Medium
from .core import Message, is_consistent, is_stepwise_effective
from .errors import EnumerationLimitError, InputError


def token_for_arc(medium: Medium, source: str, target: str) -> str:
    """The unique token moving ``source`` to the adjacent ``target``."""
    key = pcube.edge_key(source, target)
    pair = medium.graph.labels.get(key)
    if pair is None:
        raise InputError(f"states {source!r} and {target!r} are not adjacent")
    for tau in pair:
        if medium.system.act(source, tau) == target:
            return tau
    raise RuntimeError(f"no labeled token realizes {source!r}->{target!r}")


def token_semicube(medium: Medium, token: str) -> frozenset[str]:
    """States strictly closer to the token's image side, for any arc."""
    arcs = medium.system.arcs(token)
    s0, v0 = arcs[0]
    dist = medium.graph.distances()
    return frozenset(v for v in medium.states if dist[v][v0] < dist[v][s0])


def content_of(medium: Medium, state: str) -> frozenset[str]:
    """Tokens occurring in some concise message producing ``state``."""
    if state not in medium.states:
        raise InputError(f"unknown state {state!r}")
    return frozenset(
        tau for tau in medium.tokens if state in token_semicube(medium, tau)
    )


def delta(medium: Medium, s: str, v: str) -> int:
    """Length of any concise message from ``s`` to ``v``."""
    return medium.delta(s, v)


def enumerate_concise(
    medium: Medium, s: str, v: str, cap: int = 1_000_000
) -> list[Message]:
    """All concise messages from ``s`` to ``v``, in lexicographic vertex order.

    Materializes every geodesic of the state graph; aborts with
    EnumerationLimitError beyond ``cap`` messages.
    """
    if s not in medium.states or v not in medium.states:
        raise InputError("unknown state")
    if s == v:
        raise InputError("the two states must be distinct")
    dist = medium.graph.distances()
    out: list[Message] = []
    prefix: list[str] = []

    def walk(u: str) -> None:
        if u == v:
            if len(out) >= cap:
                raise EnumerationLimitError(f"more than {cap} concise messages")
            out.append(tuple(prefix))
            return
        for w in medium.graph.neighbors(u):
            if dist[w][v] == dist[u][v] - 1:
                prefix.append(token_for_arc(medium, u, w))
                walk(w)
                prefix.pop()

    walk(s)
    return out


def count_concise(medium: Medium, s: str, v: str) -> int:
    """Number of concise messages from ``s`` to ``v`` without materializing."""
    if s == v:
        raise InputError("the two states must be distinct")
    dist = medium.graph.distances()
    memo: dict[str, int] = {v: 1}

    def count(u: str) -> int:
        if u not in memo:
            memo[u] = sum(
                count(w) for w in medium.graph.neighbors(u) if dist[w][v] == dist[u][v] - 1
            )
        return memo[u]

    return count(s)


@dataclass(frozen=True)
class CircuitReport:
    is_two_gon: bool
    is_regular: bool
    opposite_reversed: bool


def regular_circuit_check(medium: Medium, state: str, message: Message) -> CircuitReport:
    """Classify an even closed stepwise-effective message.

    ``is_two_gon``: the two halves are concise; ``is_regular``: every
    half-length window is concise for the state it starts at;
    ``opposite_reversed``: tokens half a period apart are mutual reverses.
    For 2-gons the three equivalent conditions are self-checked.
    """
    if len(message) % 2:
        raise InputError("closed-circuit checks need an even-length message")
    final, trajectory = _closed_trajectory(medium, state, message)
    n = len(message) // 2
    system, pairing = medium.system, medium.pairing

    def window_concise(i: int) -> bool:
        # Half-length window starting at position i (cyclic).
        window = tuple(message[(i + k) % (2 * n)] for k in range(n))
        return is_consistent(window, pairing) and len(set(window)) == len(window)

    # Windows are stepwise effective by construction (the walk is).
    two_gon = window_concise(0) and window_concise(n)
    regular = all(window_concise(i) for i in range(n))
    rotations_two_gons = all(
        window_concise(i) and window_concise(i + n) for i in range(2 * n)
    )
    opposite = all(pairing[message[i]] == message[i + n] for i in range(n))
    if two_gon and len({regular, rotations_two_gons, opposite}) != 1:
        raise RuntimeError("equivalent circuit conditions disagree on a 2-gon")
    return CircuitReport(two_gon, regular, opposite)


def _closed_trajectory(medium: Medium, state: str, message: Message):
    from .core import apply

    final, trajectory = apply(medium.system, state, message)
    if any(a == b for a, b in zip(trajectory, trajectory[1:])):
        raise InputError("message is not stepwise effective for the state")
    if final != state:
        raise InputError("message is not closed for the state")
    return final, trajectory


@dataclass(frozen=True)
class QuadrilateralReport:
    """Metric case of two token arcs plus the verified message-level facts."""

    case: int
    tau: str
    mu: str
    m: Message  # T -> Q
    m_prime: Message  # S -> Q
    n: Message  # S -> P
    n_prime: Message  # T -> P


def classify_quadrilateral(
    medium: Medium, s: str, t: str, p: str, q: str
) -> QuadrilateralReport:
    """Case of the arcs (s, t) and (p, q) with message-level verification.

    The endpoints must be four distinct states with s->t and p->q single
    token steps.  The message facts mandated by the detected case are
    re-checked and any mismatch raises (it would be an implementation bug).
    """
    if len({s, t, p, q}) != 4:
        raise InputError("the four states must be distinct")
    tau = token_for_arc(medium, s, t)
    mu = token_for_arc(medium, p, q)
    case = pcube.classify_edge_pair(medium.graph, (s, t), (p, q))
    m = enumerate_concise(medium, t, q)[0]
    m_prime = enumerate_concise(medium, s, q)[0]
    n = enumerate_concise(medium, s, p)[0]
    n_prime = enumerate_concise(medium, t, p)[0]
    lm, ln = len(m), len(n)
    lmp, lnp = len(m_prime), len(n_prime)
    rev_mu = medium.reverse(mu)
    if case in (1, 2, 3, 4):
        ok = tau != mu and tau != rev_mu and set(m) != set(n) and lm + ln == lmp + lnp
    elif case == 5:
        ok = tau == rev_mu and set(m) != set(n) and lm + ln == lmp + lnp + 2
    else:
        ok = tau == mu and set(m) == set(n) and lm + ln + 2 == lmp + lnp
    if not ok:
        raise RuntimeError(f"case {case} facts failed for ({s!r},{t!r},{p!r},{q!r})")
    return QuadrilateralReport(case, tau, mu, m, m_prime, n, n_prime)
