"""
The bipartite graph of a MAC frame and its iterative interference
cancellation.
"""
import logging

import numpy as np

from .exceptions import SimulationError, PlacementError
from .. import settings


class FrameGraph(object):
    """The bursts of a MAC frame and the slots their segments occupy.

    Burst b transmits with the code ``codes[b]``, and its coded segment j
    occupies the slot ``slots[b][j]``.

    Parameters
    ----------
    N : int
        The number of slots.
    k : int
        The dimension of the codes.
    codes : Sequence[:obj:`LinearCode <codedaloha.codes.LinearCode>`]
        The code of each burst.
    slots : Sequence[Sequence[int]]
        The distinct slots of each burst's coded segments.
    types : Optional[Sequence[int]]
        The candidate index each burst picked in its ensemble.

    Raises
    ------
    SimulationError
        Raised if the slot lists don't match the codes.

    Examples
    --------
    >>> from codedaloha.codes import repetition_code
    >>> rep = repetition_code(2)
    >>> graph = FrameGraph(3, 1, [rep, rep], [(0, 1), (1, 2)])
    >>> graph.M, graph.edge_count, graph.slot_members[1]
    (2, 4, ((0, 1), (1, 0)))
    """

    def __init__(self, N, k, codes, slots, types=None):
        self.N = N
        self.k = k
        self.codes = tuple(codes)
        self.slots = tuple(tuple(int(s) for s in burst) for burst in slots)
        self.types = tuple(types) if types is not None else None

        if len(self.codes) != len(self.slots):
            raise SimulationError("the frame lists {} codes for {} bursts"
                                  .format(len(self.codes), len(self.slots)))

        members = [[] for _ in range(N)]
        for b, (code, burst) in enumerate(zip(self.codes, self.slots)):
            if len(burst) != code.n or len(set(burst)) != code.n:
                msg = "burst {} doesn't occupy {} distinct slots"
                raise SimulationError(msg.format(b, code.n))
            for j, s in enumerate(burst):
                if not 0 <= s < N:
                    msg = "burst {} uses the slot {} outside the frame"
                    raise SimulationError(msg.format(b, s))
                members[s].append((b, j))
        self.slot_members = tuple(tuple(m) for m in members)

    def __repr__(self):
        return "<FrameGraph M={} N={}>".format(self.M, self.N)

    @property
    def M(self):
        """The number of bursts."""
        return len(self.codes)

    @property
    def edge_count(self):
        return sum(code.n for code in self.codes)

    @property
    def slot_degrees(self):
        """The number of segments in each slot."""
        return np.array([len(m) for m in self.slot_members], dtype=int)


def build_frame(M, N, ensemble, rng_seed=None):
    """Place the bursts of M users in a frame of N slots.

    Each user picks a candidate of the ensemble with its p.m.f., obtains the
    candidate's code (a random generator matrix for random-code ensembles
    without a fixed matrix), and places its n coded segments in n distinct
    slots drawn uniformly.

    Parameters
    ----------
    M : int
        The number of users.
    N : int
        The number of slots, a multiple of the dimension k.
    ensemble : :obj:`Ensemble <codedaloha.ensembles.Ensemble>`
        The code ensemble.
    rng_seed : Optional[Union[int, Sequence[int], Generator]]
        The seed of the random number generator, or a generator.

    Returns
    -------
    graph : :obj:`FrameGraph`
        The frame.

    Raises
    ------
    SimulationError
        Raised if N isn't a positive multiple of k or M is negative.
    PlacementError
        Raised if a code is longer than the frame.

    Examples
    --------
    >>> from codedaloha.ensembles import RandomEnsemble
    >>> graph = build_frame(1, 1000, RandomEnsemble(2, [4], [1.]), 7)
    >>> len(graph.slots[0]), len(set(graph.slots[0]))
    (4, 4)
    """
    k = ensemble.k
    if N < 1 or N % k != 0:
        msg = "the number of slots {} is not a positive multiple of k={}"
        raise SimulationError(msg.format(N, k))
    if M < 0:
        raise SimulationError("the number of users {} is negative".format(M))

    longest = max(ensemble.lengths)
    if longest > N:
        msg = "a code of length {} can't be placed in a frame of {} slots"
        raise PlacementError(msg.format(longest, N))

    rng = np.random.default_rng(rng_seed)
    types = ensemble.draw_types(rng, M) if M > 0 else []
    codes, slots = [], []
    for h in types:
        code = ensemble.code_for(int(h), rng)
        codes.append(code)
        slots.append(rng.choice(N, size=code.n, replace=False))
    return FrameGraph(N, k, codes, slots, types=[int(h) for h in types])


def _resolve(graph, segments, known, pending):
    """Mark segments known, decode their bursts and cancel every newly known
    segment from its slot. Returns True if any segment became known."""
    revealed = dict()
    for b, j in segments:
        revealed[b] = revealed.get(b, 0) | (1 << j)

    progress = False
    for b, mask in revealed.items():
        mask |= known[b]
        mask |= graph.codes[b].recoverable_mask(mask)
        new = mask & ~known[b]
        if not new:
            continue
        progress = True
        known[b] = mask
        for j, s in enumerate(graph.slots[b]):
            if (new >> j) & 1:
                pending[s].discard((b, j))
    return progress


def peel(graph, max_iters=settings.max_peel_iters, rng=None):
    """Iterative interference cancellation of a frame.

    In each round, every slot left with a single unresolved segment reveals
    it. Each burst then recovers the segments in the span of its known
    generator columns, and the recovered segments are cancelled from their
    slots. Rounds repeat until no segment is revealed.

    Parameters
    ----------
    graph : :obj:`FrameGraph`
        The frame.
    max_iters : Optional[int]
        The largest number of rounds.
    rng : Optional[:obj:`numpy.random.Generator`]
        If given, slots are visited one at a time in a random order within a
        round, with cancellations applied immediately. The decoded set
        doesn't depend on the schedule.

    Returns
    -------
    decoded : FrozenSet[int]
        The indices of the decoded bursts.
    iterations : int
        The number of rounds that revealed segments.

    Examples
    --------
    >>> from codedaloha.codes import repetition_code
    >>> rep = repetition_code(2)
    >>> peel(FrameGraph(3, 1, [rep, rep], [(0, 1), (1, 2)]))
    (frozenset({0, 1}), 1)
    >>> peel(FrameGraph(2, 1, [rep, rep], [(0, 1), (0, 1)]))
    (frozenset(), 0)
    """
    known = [0] * graph.M
    pending = [set(members) for members in graph.slot_members]

    iterations = 0
    while iterations < max_iters:
        if rng is None:
            clean = [next(iter(p)) for p in pending if len(p) == 1]
            progress = _resolve(graph, clean, known, pending)
        else:
            progress = False
            for s in rng.permutation(graph.N):
                if len(pending[s]) == 1:
                    segments = list(pending[s])
                    progress = _resolve(graph, segments, known,
                                        pending) or progress
        if not progress:
            break
        iterations += 1
    else:
        logging.warning("Peeling stopped after {} rounds".format(max_iters))

    decoded = frozenset(b for b, code in enumerate(graph.codes)
                        if known[b] == (1 << code.n) - 1)
    return decoded, iterations
