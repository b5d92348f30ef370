"""Prime factorization of rational words by marking automaton states.

The driver runs the duplicated expression's automaton against the sharp
closure of one of its own factors, Duval-style.  Each step compares the
letter leaving the main state k with the letter leaving the candidate state
k' and either extends the history of pairs (equal letters), restarts with a
longer candidate prefix (k reads the larger letter), or closes a block of
prime copies (k reads the smaller letter, or the word ends).  Main cuts end
up in q_main, boundaries between copies of one prime in q_secondary."""

from __future__ import annotations

from dataclasses import dataclass, field

from .automaton import (SharpAutomaton, SingleWordAutomaton, compile_expr,
                        expr_of_range, first_visit_prefix, _walk_tokens)
from .duplication import tau
from .expr import (Alphabet, DEFAULT_ALPHABET, Letter, RatExpr, concat,
                   expr_length, format_expr, power)
from .ordinal import Ordinal, div_left, format_ordinal, sub_left
from .runner import Advanced, Diverged, LeftEnded, LoopClosed, RightEnded, Trace, sync_step


class FactorizeError(RuntimeError):
    pass


@dataclass
class StepRecord:
    case: str                       # 1a, 1b, 1c, 2a, 2b, 3
    history: tuple[tuple[int, int], ...]


@dataclass
class FactorizerState:
    automaton: SingleWordAutomaton
    q_main: set[int]
    q_secondary: set[int]
    steps: int
    log: list[StepRecord] = field(default_factory=list)


@dataclass(frozen=True)
class Factorization:
    """Prime powers in strictly decreasing prime order; the product of the
    blocks denotes the factorized word."""

    blocks: tuple[tuple[RatExpr, Ordinal], ...]

    def reconstruct(self) -> RatExpr:
        return concat([power(p, a) for p, a in self.blocks])

    def __str__(self) -> str:
        out = []
        for prime, alpha in self.blocks:
            text = format_expr(prime)
            if not isinstance(prime, Letter):
                text = f"({text})"
            out.append(f"{text}^[{format_ordinal(alpha)}]")
        return " * ".join(out)


def factorize_states(auto: SingleWordAutomaton, alphabet: Alphabet = DEFAULT_ALPHABET,
                     keep_log: bool = False) -> FactorizerState:
    """Run the marking algorithm on a compiled (already duplicated) word
    automaton and return the marked state sets."""
    n = auto.n
    q_main = {0}
    q_secondary: set[int] = set()
    log: list[StepRecord] = []
    steps = 0
    budget = n * n * n

    i = 0
    _, start = auto.succ[0]
    j = start
    history = Trace((start, 0))
    sharp = SharpAutomaton(auto, 0, start)
    seen_left = {0, start}  # states visited by the main run since i
    if keep_log:
        log.append(StepRecord("init", tuple(history.pairs())))

    while True:
        steps += 1
        if steps > budget:
            raise FactorizeError(f"exceeded step budget n^3 = {budget}")
        outcome = sync_step(auto, sharp, history)
        if isinstance(outcome, Advanced):
            case = "1a"
            seen_left.add(outcome.pair[0])
        elif isinstance(outcome, LoopClosed):
            case = "1c" if j in outcome.rights else "1b"
            seen_left.add(outcome.pair[0])
        elif isinstance(outcome, RightEnded):
            raise FactorizeError("sharp automaton has no final state; cannot end")
        else:
            k = history.last.pair[0]
            if isinstance(outcome, Diverged) and \
                    alphabet.rank(outcome.left_letter) > alphabet.rank(outcome.right_letter):
                # the suffix at j is larger: extend the candidate prefix past k.
                # The check is against the whole main run since i: a revisited
                # target means the main run is inside a loop, and the cut moves
                # beyond the loop's largest state via its limit transition.
                _, target = auto.succ[k]
                if target not in seen_left:
                    case = "2a"
                    j = target
                else:
                    case = "2b"
                    j = max(seen_left) + 1
                seen_left.add(j)
                history = Trace((j, i))
                sharp = SharpAutomaton(auto, i, j)
            else:
                # smaller letter (or end of word): close the block of copies of
                # the prime cut at j
                case = "3"
                added = {j} | {q for q, r in history.pairs() if r == j}
                top = max(added)
                q_secondary |= added - {top}
                q_main.add(top)
                i = top
                if keep_log:
                    log.append(StepRecord(case, tuple(history.pairs())))
                if i == n:
                    break
                _, target = auto.succ[i]
                j = target
                seen_left = {i, j}
                history = Trace((j, i))
                sharp = SharpAutomaton(auto, i, j)
                if keep_log:
                    log.append(StepRecord("init", tuple(history.pairs())))
                continue
        if keep_log:
            log.append(StepRecord(case, tuple(history.pairs())))

    return FactorizerState(auto, q_main, q_secondary, steps, log)


def extract_factorization(auto: SingleWordAutomaton, q_main: set[int],
                          q_secondary: set[int]) -> Factorization:
    """Turn marked states into prime powers.  Each block runs between
    consecutive main cuts; its prime is the prefix up to the block's first
    secondary cut, and the exponent divides the block length exactly."""
    mains = sorted(q_main)
    if mains[0] != 0 or mains[-1] != auto.n:
        raise FactorizeError(f"main cuts {mains} do not span the word")
    blocks: list[tuple[RatExpr, Ordinal]] = []
    for lo, hi in zip(mains, mains[1:]):
        inner = sorted(s for s in q_secondary if lo < s < hi)
        if not inner:
            blocks.append((expr_of_range(auto, lo, hi), Ordinal.from_int(1)))
            continue
        prime = expr_of_range(auto, lo, inner[0])
        block_len = expr_length(expr_of_range(auto, lo, hi))
        alpha, rest = div_left(block_len, expr_length(prime))
        if not rest.is_zero:
            raise FactorizeError(
                f"block [{lo},{hi}] length {block_len} not a multiple of its prime")
        blocks.append((prime, alpha))
    return Factorization(tuple(blocks))


def factorize(e: RatExpr, alphabet: Alphabet = DEFAULT_ALPHABET,
              keep_log: bool = False) -> tuple[Factorization, FactorizerState, RatExpr]:
    """Full pipeline: duplicate, compile, mark, extract.  Returns the
    factorization together with the marked state sets and the duplicated
    expression the automaton was built from."""
    dup = tau(e)
    auto = compile_expr(dup)
    state = factorize_states(auto, alphabet, keep_log=keep_log)
    return extract_factorization(auto, state.q_main, state.q_secondary), state, dup


def marked_expression(dup: RatExpr, q_main: set[int], q_secondary: set[int],
                      main: str = "||", secondary: str = "|") -> str:
    """Duplicated expression with cut markers inserted before each marked
    token (and at the end for the final state)."""
    auto = compile_expr(dup)
    out: list[str] = []

    def mark(s: int) -> None:
        if s in q_main:
            out.append(main)
        elif s in q_secondary:
            out.append(secondary)

    def letter(s: int, a: str) -> None:
        mark(s)
        out.append(a)

    def omega(node, grouped, counter, go) -> None:
        if grouped:
            out.append("(")
            go(node.body)
            out.append(")")
        else:
            go(node.body)
        mark(counter[0])
        out.append("^w")
        counter[0] += 1

    _walk_tokens(dup, letter, omega)
    mark(auto.n)
    return "".join(out)
