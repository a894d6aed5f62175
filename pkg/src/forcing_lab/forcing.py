"""Forcing (zero forcing) and power-domination dynamics, and the set
predicates built on them.

Each predicate has a public form taking any iterable of vertex ids and a
mask form (``*_mask``) used by the solvers' inner loops.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, bits


@dataclass(frozen=True)
class ForceEvent:
    forcer: int
    forced: int
    step: int


@dataclass(frozen=True)
class ForcingTrace:
    initial: frozenset[int]
    events: tuple[ForceEvent, ...]
    closure: frozenset[int]

    def to_text(self) -> str:
        """One ``step forcer->forced`` line per event."""
        return "".join(f"{e.step} {e.forcer}->{e.forced}\n" for e in self.events)

    def to_dict(self) -> dict:
        return {
            "process": "forcing",
            "initial": sorted(self.initial),
            "events": [[e.step, e.forcer, e.forced] for e in self.events],
            "closure": sorted(self.closure),
        }


@dataclass(frozen=True)
class PowerDominationTrace:
    seed: frozenset[int]
    levels: tuple[frozenset[int], ...]
    fixpoint_index: int

    @property
    def monitored(self) -> frozenset[int]:
        return self.levels[-1]

    def to_text(self) -> str:
        return "".join(
            f"{i} {','.join(map(str, sorted(lvl)))}\n" for i, lvl in enumerate(self.levels)
        )

    def to_dict(self) -> dict:
        return {
            "process": "power",
            "seed": sorted(self.seed),
            "levels": [sorted(lvl) for lvl in self.levels],
            "fixpoint_index": self.fixpoint_index,
        }


# --- mask kernels -----------------------------------------------------------------


def closure_mask(masks: tuple[int, ...], colored: int) -> int:
    """Forcing closure of ``colored``; any schedule reaches this same fixpoint."""
    c = colored
    pending = c
    while pending:
        newly = 0
        for v in bits(pending):
            u = masks[v] & ~c
            if u and not u & (u - 1):
                c |= u
                newly |= u
        if not newly:
            break
        # only vertices near a change can have become forcers
        touched = newly
        for w in bits(newly):
            touched |= masks[w]
        pending = touched & c
    return c


def power_levels_mask(g: Graph, seed: int) -> list[int]:
    """Monitored sets level by level, stopping at the first repeat."""
    masks = g.masks
    level = g.closed_neighborhood_mask(seed)
    levels = [level]
    while True:
        nxt = 0
        for v in bits(level):
            cn = masks[v] | 1 << v
            out = cn & ~level
            if not out & (out - 1):
                nxt |= cn
        if nxt == level:
            return levels
        levels.append(nxt)
        level = nxt


def is_forcing_mask(g: Graph, s: int) -> bool:
    return closure_mask(g.masks, s) == g.full_mask


def is_connected_forcing_mask(g: Graph, s: int) -> bool:
    return g.is_connected_mask(s) and closure_mask(g.masks, s) == g.full_mask


def is_dominating_mask(g: Graph, s: int, require_connected: bool = False) -> bool:
    if g.closed_neighborhood_mask(s) != g.full_mask:
        return False
    return not require_connected or g.is_connected_mask(s)


def is_power_dominating_mask(g: Graph, s: int) -> bool:
    if not s:
        raise GraphError("power domination needs a nonempty seed")
    return power_levels_mask(g, s)[-1] == g.full_mask


# --- public API -------------------------------------------------------------------


def forcing_closure(
    g: Graph, s: Iterable[int], rng: random.Random | None = None
) -> ForcingTrace:
    """Run the forcing process from ``s`` and record every force.

    Without ``rng`` the schedule is deterministic and proceeds in rounds: the
    vertices able to force at the start of a round act in increasing id order,
    and ``step`` is the round number. With ``rng``, one uniformly random
    eligible forcer acts at a time and ``step`` counts single forces. The final
    closure does not depend on the schedule.
    """
    masks = g.masks
    start = g.vertex_mask(s)
    c = start
    events: list[ForceEvent] = []
    step = 0
    while True:
        eligible = []
        for v in bits(c):
            u = masks[v] & ~c
            if u and not u & (u - 1):
                eligible.append(v)
        if not eligible:
            break
        step += 1
        if rng is not None:
            v = rng.choice(eligible)
            u = masks[v] & ~c
            c |= u
            events.append(ForceEvent(v, u.bit_length() - 1, step))
            continue
        for v in eligible:
            u = masks[v] & ~c
            # an earlier force this round may already have coloured the target
            if u and not u & (u - 1):
                c |= u
                events.append(ForceEvent(v, u.bit_length() - 1, step))
    return ForcingTrace(frozenset(bits(start)), tuple(events), frozenset(bits(c)))


def is_forcing_set(g: Graph, s: Iterable[int]) -> bool:
    return is_forcing_mask(g, g.vertex_mask(s))


def is_connected_forcing_set(g: Graph, s: Iterable[int]) -> bool:
    return is_connected_forcing_mask(g, g.vertex_mask(s))


def power_domination_closure(g: Graph, s: Iterable[int]) -> PowerDominationTrace:
    seed = g.vertex_mask(s)
    if not seed:
        raise GraphError("power domination needs a nonempty seed")
    levels = power_levels_mask(g, seed)
    return PowerDominationTrace(
        seed=frozenset(bits(seed)),
        levels=tuple(frozenset(bits(m)) for m in levels),
        fixpoint_index=len(levels) - 1,
    )


def is_power_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    return is_power_dominating_mask(g, g.vertex_mask(s))


def is_dominating_set(g: Graph, s: Iterable[int], require_connected: bool = False) -> bool:
    return is_dominating_mask(g, g.vertex_mask(s), require_connected)


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    return frozenset(bits(g.closed_neighborhood_mask(g.vertex_mask(s))))
