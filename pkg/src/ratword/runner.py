"""Synchronized run of two word automata.

The product run reads one letter at a time while both components agree.  Its
trace is the repetition-free list of state pairs in first-visit order; when a
pair repeats, the loop just closed is resolved component-wise through limit
transitions.  Each trace entry also records the ordinal position at which the
pair was first reached."""

from __future__ import annotations

from dataclasses import dataclass

from .ordinal import Ordinal, sub_left, OMEGA, ONE, ZERO


class TraceError(RuntimeError):
    pass


@dataclass(frozen=True)
class TraceEntry:
    pair: tuple[int, int]
    position: Ordinal
    # component states collapsed by limit transitions on the way to this pair;
    # they recur in any later loop whose window contains this entry
    carried: tuple[frozenset[int], frozenset[int]] = (frozenset(), frozenset())


class Trace:
    def __init__(self, first: tuple[int, int], position: Ordinal = ZERO):
        self.entries: list[TraceEntry] = []
        self._index: dict[tuple[int, int], int] = {}
        self.append(first, position)

    def __contains__(self, pair) -> bool:
        return pair in self._index

    def __len__(self) -> int:
        return len(self.entries)

    def index(self, pair) -> int:
        return self._index[pair]

    def append(self, pair, position: Ordinal,
               carried=(frozenset(), frozenset())) -> None:
        if pair in self._index:
            raise TraceError(f"pair {pair} repeated in trace")
        self._index[pair] = len(self.entries)
        self.entries.append(TraceEntry(pair, position, carried))

    @property
    def last(self) -> TraceEntry:
        return self.entries[-1]

    def pairs(self) -> list[tuple[int, int]]:
        return [t.pair for t in self.entries]

    def lefts_from(self, idx: int) -> set[int]:
        out = {self.entries[idx].pair[0]}
        for t in self.entries[idx + 1:]:
            out.add(t.pair[0])
            out |= t.carried[0]
        return out

    def rights_from(self, idx: int) -> set[int]:
        out = {self.entries[idx].pair[1]}
        for t in self.entries[idx + 1:]:
            out.add(t.pair[1])
            out |= t.carried[1]
        return out


@dataclass(frozen=True)
class Advanced:
    pair: tuple[int, int]


@dataclass(frozen=True)
class LoopClosed:
    pair: tuple[int, int]
    entry: tuple[int, int]
    lefts: frozenset[int]
    rights: frozenset[int]


@dataclass(frozen=True)
class Diverged:
    left_letter: str
    right_letter: str


@dataclass(frozen=True)
class LeftEnded:
    right_letter: str


@dataclass(frozen=True)
class RightEnded:
    left_letter: str


@dataclass(frozen=True)
class BothEnded:
    pass


def sync_step(left, right, trace: Trace):
    """Advance the product run by one letter (or one limit resolution)."""
    k, k2 = trace.last.pair
    step_l = left.leaving(k)
    step_r = right.leaving(k2)
    if step_l is None and step_r is None:
        return BothEnded()
    if step_l is None:
        return LeftEnded(step_r[0])
    if step_r is None:
        return RightEnded(step_l[0])
    (a, target_l), (b, target_r) = step_l, step_r
    if a != b:
        return Diverged(a, b)
    pair = (target_l, target_r)
    pos = trace.last.position + ONE
    if pair not in trace:
        trace.append(pair, pos)
        return Advanced(pair)
    # a repeated pair closes a loop; nested loops may cascade when the run
    # entered an outer loop mid-cycle
    first_entry = pair
    carry_l: set[int] = set()
    carry_r: set[int] = set()
    while pair in trace:
        idx = trace.index(pair)
        entry = trace.entries[idx]
        lefts = trace.lefts_from(idx) | carry_l
        rights = trace.rights_from(idx) | carry_r
        loop_len = sub_left(entry.position, pos)
        pos = entry.position + loop_len * OMEGA
        pair = (left.limit_target(lefts), right.limit_target(rights))
        carry_l |= lefts
        carry_r |= rights
    trace.append(pair, pos, (frozenset(carry_l), frozenset(carry_r)))
    return LoopClosed(pair, first_entry, frozenset(lefts), frozenset(rights))


def run_to_divergence(left, right):
    """Run the product from the two initial states until the components read
    different letters or at least one ends.  Returns (trace, outcome)."""
    trace = Trace((left.initial, right.initial))
    budget = (left.n + 1) * (right.n + 1) + 1
    while True:
        if budget < 0:
            raise TraceError("product run exceeded its step budget")
        budget -= 1
        outcome = sync_step(left, right, trace)
        if isinstance(outcome, (Advanced, LoopClosed)):
            continue
        return trace, outcome
