"""Graded-dimension bookkeeping: the v_m(N) counting sequence and the
case-specific combinatorial models certifying the claimed generator degrees.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence


@lru_cache(maxsize=None)
def _v(degrees: tuple[int, ...], N: int) -> int:
    if N == 0:
        return 1
    if not degrees:
        return 0
    head, tail = degrees[0], degrees[1:]
    return sum(_v(tail, N - head * a) for a in range(N // head + 1))


def v_sequence(degrees: Sequence[int], N: int) -> int:
    """#{a in N^k : sum a_i m_i = N}, by dynamic programming."""
    if N < 0:
        raise ValueError("N must be >= 0")
    if any(d <= 0 for d in degrees):
        raise ValueError("degrees must be positive")
    return _v(tuple(degrees), N)


def v_sequence_naive(degrees: Sequence[int], N: int) -> int:
    """Exhaustive-enumeration oracle for v_sequence (small inputs only)."""
    degrees = tuple(degrees)
    count = 0
    for combo in itertools.product(*(range(N // d + 1) for d in degrees)):
        if sum(a * d for a, d in zip(combo, degrees)) == N:
            count += 1
    return count


def _interlaced_iv_dim(n: int, N: int) -> int:
    """dim S^N for case (iv): a trace line plus interlaced pairs.

    Counts (c, a_1, b_1, ..., a_n, b_n) with c in N, a_1 >= b_1 >= a_2 >= ...
    >= b_n >= 0 and c + 2*sum(a) - sum(b) = N, by direct recursion over the
    chain (independent of the v_sequence dynamic programming).  Each pair
    contributes 2a - b in [a, 2a], so a <= remaining target prunes exactly.
    """

    @lru_cache(maxsize=None)
    def tail(pairs_left: int, upper: int, target: int) -> int:
        if target < 0:
            return 0
        if pairs_left == 0:
            return 1 if target == 0 else 0
        total = 0
        for a in range(0, min(upper, target) + 1):
            for b in range(0, a + 1):
                total += tail(pairs_left - 1, b, target - (2 * a - b))
        return total

    return sum(tail(n, N, N - c) for c in range(N + 1))


def graded_invariant_dim(record, N: int) -> int:
    """dim S^N(g_C/h_C)^H from the case's stored combinatorial model."""
    if N < 0:
        raise ValueError("N must be >= 0")
    model = record.hilbert_model
    if model is None:
        raise ValueError(
            "case %s has no stored combinatorial model (external tables)" % record.id
        )
    if model["kind"] == "weighted":
        weights = tuple(model["weights"])
        # deliberate brute force, independent of the v_sequence DP
        count = 0
        for combo in itertools.product(*(range(N // d + 1) for d in weights)):
            if sum(a * d for a, d in zip(combo, weights)) == N:
                count += 1
        return count
    if model["kind"] == "interlaced_iv":
        return _interlaced_iv_dim(model["n"], N)
    raise ValueError("unknown model %r" % (model,))


def claimed_degrees(record) -> tuple[int, ...]:
    return tuple(sorted(record.degrees_p + record.degrees_q))


def check_generator_degrees(record, Nmax: int) -> bool:
    """v_sequence of the claimed degree multiset matches the model up to Nmax."""
    degrees = claimed_degrees(record)
    if Nmax < max(degrees, default=0):
        raise ValueError("Nmax must cover the largest claimed degree")
    return all(
        v_sequence(degrees, N) == graded_invariant_dim(record, N) for N in range(Nmax + 1)
    )


def distinguishing_multisets(
    degrees: Sequence[int], Nmax: int, max_part: int, max_parts: int
) -> list[tuple[int, ...]]:
    """All other degree multisets (parts <= max_part, <= max_parts parts) whose
    v-sequence agrees with ``degrees`` up to Nmax.  Empty list certifies that
    the sequence pins the multiset down within that search space."""
    degrees = tuple(sorted(degrees))
    target = [v_sequence(degrees, N) for N in range(Nmax + 1)]
    clashes = []
    for k in range(1, max_parts + 1):
        for combo in itertools.combinations_with_replacement(range(1, max_part + 1), k):
            if tuple(sorted(combo)) == degrees:
                continue
            if all(v_sequence(combo, N) == target[N] for N in range(Nmax + 1)):
                clashes.append(combo)
    return clashes
