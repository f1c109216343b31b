"""Online learners for a hidden strict total order over integer rule ids.

A counting oracle answers "does rule a apply before rule b?" against a
hidden permutation of ranks, charging one query per answer.  Two insertion
strategies rebuild the full order one rule at a time:

- ``block``: scan the known sequence from the front and stop at the first
  rule the newcomer precedes (transitivity makes further queries redundant).
- ``binary``: binary-search the insertion point among the known rules.

Both strategies always recover the hidden order; they differ only in how
many queries they spend.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

# A rule is identified by an integer index in [0, n).
RuleId = int

STRATEGY_BLOCK = "block"
STRATEGY_BINARY = "binary"
STRATEGIES = (STRATEGY_BLOCK, STRATEGY_BINARY)


class OrderingError(Exception):
    """Base class for contract violations raised by this package."""


class InvalidQueryError(OrderingError):
    """Reflexive or out-of-universe precedence query."""


class DuplicateRuleError(OrderingError):
    """A rule was inserted (or presented) more than once."""


class EmptyUniverseError(OrderingError):
    """Asked to learn an order over no rules at all."""


class InvalidPermutationError(OrderingError):
    """A rank or presentation sequence is not a permutation of [0, n)."""


class SizeLimitError(OrderingError):
    """An exhaustive search was requested above its factorial-cost cap."""


class CostModel(enum.Enum):
    """How a finished run is priced.

    ``COMPARISONS_ONLY`` counts oracle queries alone.
    ``COMPARISONS_PLUS_PLACEMENT`` additionally charges one placement step
    per inserted rule after the first, i.e. n - 1 extra steps for a full run.
    """

    COMPARISONS_ONLY = "comparisons"
    COMPARISONS_PLUS_PLACEMENT = "comparisons-plus-placement"

    @classmethod
    def parse(cls, text: str) -> "CostModel":
        for model in cls:
            if model.value == text:
                return model
        choices = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown cost model {text!r} (choose from: {choices})")

    def steps(self, queries: int, n: int) -> int:
        """Step count for a full run of ``n`` rules that spent ``queries``."""
        if self is CostModel.COMPARISONS_PLUS_PLACEMENT:
            return queries + max(n - 1, 0)
        return queries


@dataclass(frozen=True)
class GroundTruthOrder:
    """The hidden strict total order: ``ranks[rule]`` is the rule's rank.

    ``ranks`` must be a permutation of [0, n); lower rank applies earlier.
    """

    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.ranks)
        if sorted(self.ranks) != list(range(n)):
            raise InvalidPermutationError(
                f"ranks must be a permutation of 0..{n - 1}: {self.ranks!r}"
            )

    @classmethod
    def identity(cls, n: int) -> "GroundTruthOrder":
        return cls(tuple(range(n)))

    @classmethod
    def reversed_identity(cls, n: int) -> "GroundTruthOrder":
        return cls(tuple(range(n - 1, -1, -1)))

    @classmethod
    def shuffled(cls, n: int, rng) -> "GroundTruthOrder":
        """Uniformly random order drawn from ``rng`` (a ``random.Random``)."""
        ranks = list(range(n))
        rng.shuffle(ranks)
        return cls(tuple(ranks))

    @property
    def n(self) -> int:
        return len(self.ranks)

    def rank_of(self, rule: RuleId) -> int:
        return self.ranks[rule]

    def true_sequence(self) -> list[RuleId]:
        """All rules sorted by rank: the sequence a correct learner ends with."""
        return sorted(range(self.n), key=self.ranks.__getitem__)


@dataclass
class CountingOracle:
    """Answers precedence queries against a hidden order and counts them.

    With ``record=True`` every query is appended to ``transcript`` as
    ``(a, b, answer)``; recording is off by default to keep long runs lean.
    """

    order: GroundTruthOrder
    record: bool = False
    query_count: int = 0
    transcript: list[tuple[RuleId, RuleId, bool]] = field(default_factory=list)

    def precedes(self, a: RuleId, b: RuleId) -> bool:
        """True iff rule ``a`` applies before rule ``b``. Costs one query."""
        n = self.order.n
        if a == b:
            raise InvalidQueryError(f"reflexive query for rule {a}")
        if not 0 <= a < n or not 0 <= b < n:
            raise InvalidQueryError(f"query ({a}, {b}) outside universe of {n} rules")
        self.query_count += 1
        answer = self.order.ranks[a] < self.order.ranks[b]
        if self.record:
            self.transcript.append((a, b, answer))
        return answer

    def reset(self) -> None:
        self.query_count = 0
        self.transcript.clear()


def _block_position(seq: list[RuleId], x: RuleId, oracle: CountingOracle) -> int:
    """First position whose rule the newcomer precedes; end if none."""
    for j, y in enumerate(seq):
        if oracle.precedes(x, y):
            return j
    return len(seq)


def _binary_position(seq: list[RuleId], x: RuleId, oracle: CountingOracle) -> int:
    """Insertion point by halving the candidate window [lo, hi)."""
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if oracle.precedes(x, seq[mid]):
            hi = mid
        else:
            lo = mid + 1
    return lo


_POSITION_FINDERS: dict[str, Callable[[list[RuleId], RuleId, CountingOracle], int]] = {
    STRATEGY_BLOCK: _block_position,
    STRATEGY_BINARY: _binary_position,
}


def _position_finder(strategy: str):
    try:
        return _POSITION_FINDERS[strategy]
    except KeyError:
        raise ValueError(
            f"unknown strategy {strategy!r} (choose from: {', '.join(STRATEGIES)})"
        ) from None


def _is_sorted_by_rank(seq: Sequence[RuleId], order: GroundTruthOrder) -> bool:
    ranks = order.ranks
    return all(ranks[seq[i]] < ranks[seq[i + 1]] for i in range(len(seq) - 1))


def _checked_insert(seq, x, oracle, finder):
    if not 0 <= x < oracle.order.n:
        raise InvalidQueryError(f"rule {x} outside universe of {oracle.order.n} rules")
    if x in seq:
        raise DuplicateRuleError(f"rule {x} already placed")
    assert _is_sorted_by_rank(seq, oracle.order), "input sequence not sorted by rank"
    out = list(seq)
    out.insert(finder(out, x, oracle), x)
    return out


def block_insert(
    seq: Sequence[RuleId], x: RuleId, oracle: CountingOracle
) -> list[RuleId]:
    """Insert ``x`` into a rank-sorted sequence by linear scan from the front.

    Queries the oracle once per scanned position and stops at the first
    accepting one, so inserting into i rules costs between 1 and i queries
    (0 for an empty sequence).  Returns a new list; ``seq`` is unchanged.
    """
    return _checked_insert(seq, x, oracle, _block_position)


def binary_insert(
    seq: Sequence[RuleId], x: RuleId, oracle: CountingOracle
) -> list[RuleId]:
    """Insert ``x`` into a rank-sorted sequence by binary search.

    Inserting into m rules costs at most ceil(log2(m + 1)) queries and,
    for m >= 1, at least floor(log2(m + 1)).  Returns a new list.
    """
    return _checked_insert(seq, x, oracle, _binary_position)


def learn_order(
    universe: Iterable[RuleId],
    oracle: CountingOracle,
    strategy: str,
    model: CostModel = CostModel.COMPARISONS_ONLY,
) -> tuple[list[RuleId], int]:
    """Learn the hidden order of ``universe`` by inserting rules one at a time.

    Rules are inserted in the order given (the presentation order).  Returns
    the learned sequence, sorted by hidden rank, and the run's step count
    under ``model``.
    """
    finder = _position_finder(strategy)
    rules = list(universe)
    if not rules:
        raise EmptyUniverseError("cannot learn an order over zero rules")
    if len(set(rules)) != len(rules):
        raise DuplicateRuleError(f"universe contains duplicate rules: {rules!r}")
    n_domain = oracle.order.n
    for x in rules:
        if not 0 <= x < n_domain:
            raise InvalidQueryError(f"rule {x} outside universe of {n_domain} rules")

    before = oracle.query_count
    seq: list[RuleId] = []
    for x in rules:
        seq.insert(finder(seq, x, oracle), x)
    queries = oracle.query_count - before
    return seq, model.steps(queries, len(rules))
