"""Cyclic and open chain sums of Littlewood-Richardson coefficients.

Three multiplicities are computed here, all as sums over chains of
partitions alpha with every factor a single LR coefficient:

* ``f_sun``   sum of c^{l(1)}_{a(1),a(2)} c^{l(2)}_{a(2),a(3)} ... c^{l(m)}_{a(m),a(1)}
              over all partition chains, for an even number m >= 4 of
              weakly decreasing sequences.  This is the branching
              multiplicity for the diagonal embedding when m = 6.
* ``f1``      sum of c^{a(1)}_{l(1),l(2)} c^{l(3)}_{a(1),a(2)} ...
              c^{a(m-3)}_{l(m-1),l(m)} for m >= 4.
* ``f2``      sum of c^{l(2)}_{l(1),a(1)} c^{l(3)}_{a(1),a(2)} ...
              c^{l(m-1)}_{a(m-3),l(m)} for m >= 3; the m = 3 case is the
              plain LR coefficient c^{l(2)}_{l(1),l(3)}.

Chains are enumerated with containment pruning (a factor c^nu_{., .} dies
unless both lower arguments fit inside nu componentwise) and exact size
bookkeeping, organized as a sparse transfer-matrix product so shared
prefixes are not re-walked.  ``cyclic_chain_sum`` is parameterized by the
factor function so the hive-counting module can run the same decomposition
with an independent per-factor engine.

Stretched evaluation recomputes each N from scratch; polynomiality in N is
a property we test, never an assumption we exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import BudgetExceededError, InvalidInputError, UnsupportedShapeError
from .lr import lr_coefficient
from .partitions import (
    IntSeq,
    canonical,
    check_sequence,
    is_partition,
    minimum,
    partitions_in_box,
    partitions_of_size_in_box,
    size,
    stretch,
)

KINDS = ("f_sun", "f1", "f2")


@dataclass(frozen=True)
class ChainProblem:
    """One chain-sum evaluation request."""

    kind: str
    n: int
    lambdas: tuple[IntSeq, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInputError(f"unknown kind {self.kind!r}, expected one of {KINDS}")
        if self.n < 1:
            raise InvalidInputError(f"rank n must be >= 1, got {self.n}")
        m = len(self.lambdas)
        if self.kind == "f_sun" and (m < 4 or m % 2):
            raise UnsupportedShapeError(f"f_sun needs an even number m >= 4 of sequences, got m={m}")
        if self.kind == "f1" and m < 4:
            raise UnsupportedShapeError(f"f1 needs m >= 4 sequences, got m={m}")
        if self.kind == "f2" and m < 3:
            raise UnsupportedShapeError(f"f2 needs m >= 3 sequences, got m={m}")
        for idx, lam in enumerate(self.lambdas, start=1):
            parts = check_sequence(lam, f"lambda({idx})")
            if len(parts) > self.n:
                raise InvalidInputError(
                    f"lambda({idx}) = {list(lam)} has more than n={self.n} parts"
                )

    @property
    def m(self) -> int:
        return len(self.lambdas)


def _validated(lambdas, n, kind):
    return ChainProblem(kind, n, tuple(canonical(l) for l in lambdas))


def _group_by_size(cands):
    by = {}
    for p in cands:
        by.setdefault(size(p), []).append(p)
    return by


def cyclic_chain_sum(lams, factor, budget=None) -> int:
    """Sum over cyclic chains of products factor(a_i, a_{i+1}, lams[i]).

    ``lams`` must be canonical partitions.  Slot i of the chain is bounded
    componentwise by min(lams[i-1], lams[i]) and slot sizes are forced by
    |a_{i+1}| = |lams[i]| - |a_i|.
    """
    m = len(lams)
    odd_total = sum(size(lams[i]) for i in range(0, m, 2))
    even_total = sum(size(lams[i]) for i in range(1, m, 2))
    if odd_total != even_total:
        return 0
    bounds = [minimum(lams[(i - 1) % m], lams[i]) for i in range(m)]
    cands = [partitions_in_box(b) for b in bounds]
    if budget is not None and max(len(c) for c in cands) > budget:
        raise BudgetExceededError(
            f"chain enumeration needs {max(len(c) for c in cands)} states, budget is {budget}"
        )
    by_size = [_group_by_size(c) for c in cands]
    sizes = [size(l) for l in lams]

    # U[a0][ai] = sum of partial products over chains a0 -> ... -> ai
    U = {a: {a: 1} for a in cands[0]}
    for i in range(m - 1):
        nxt = {}
        for a0, row in U.items():
            acc = {}
            for b, wt in row.items():
                need = sizes[i] - size(b)
                for c in by_size[i + 1].get(need, ()):
                    val = factor(b, c, lams[i])
                    if val:
                        acc[c] = acc.get(c, 0) + wt * val
            if acc:
                nxt[a0] = acc
        U = nxt
        if not U:
            return 0
    total = 0
    for a0, row in U.items():
        for b, wt in row.items():
            if size(b) + size(a0) != sizes[m - 1]:
                continue
            val = factor(b, a0, lams[m - 1])
            if val:
                total += wt * val
    return total


def _lr_factor(a, b, nu):
    rank = max(1, len(nu))
    return lr_coefficient(a, b, nu, rank)


_F_SUN_MEMO: dict[tuple, int] = {}


def f_sun(lambdas, n: int, budget=None) -> int:
    """The cyclic multiplicity for m even; 0 on non-partition input."""
    p = _validated(lambdas, n, "f_sun")
    if not all(is_partition(l) for l in p.lambdas):
        return 0
    key = p.lambdas
    hit = _F_SUN_MEMO.get(key)
    if hit is not None:
        return hit
    val = cyclic_chain_sum(p.lambdas, _lr_factor, budget=budget)
    _F_SUN_MEMO[key] = val
    return val


def f1(lambdas, n: int, budget=None) -> int:
    """Open chain with merged ends: branching for the direct sum embedding."""
    p = _validated(lambdas, n, "f1")
    if not all(is_partition(l) for l in p.lambdas):
        return 0
    lams = p.lambdas
    m = p.m
    s_first = size(lams[0]) + size(lams[1])
    s_last = size(lams[m - 2]) + size(lams[m - 1])
    rank = max(2 * n, 1)

    width = lams[0][0] + lams[1][0] if (lams[0] and lams[1]) else max(
        lams[0][0] if lams[0] else 0, lams[1][0] if lams[1] else 0
    )
    length = len(lams[0]) + len(lams[1])
    box = (width,) * length
    if m > 4:
        box = minimum(box, lams[2])
    first = {}
    for a in partitions_of_size_in_box(s_first, box):
        v = lr_coefficient(lams[0], lams[1], a, rank)
        if v:
            first[a] = v
    if budget is not None and len(first) > budget:
        raise BudgetExceededError(f"f1 enumeration exceeds budget {budget}")

    # middle factors c^{lams[i]}_{a_{k-1}, a_k} for math index i = 3..m-2
    cur = first
    for i in range(2, m - 2):  # python index of the middle lambda
        nxt = {}
        target = lams[i]
        bound = minimum(target, lams[i + 1]) if i + 1 < m - 2 else target
        by_size = _group_by_size(partitions_in_box(bound))
        for a, wt in cur.items():
            need = size(target) - size(a)
            for b in by_size.get(need, ()):
                v = lr_coefficient(a, b, target, max(1, len(target)))
                if v:
                    nxt[b] = nxt.get(b, 0) + wt * v
        cur = nxt
        if not cur:
            return 0
    total = 0
    for a, wt in cur.items():
        if size(a) != s_last:
            continue
        v = lr_coefficient(lams[m - 2], lams[m - 1], a, rank)
        if v:
            total += wt * v
    return total


def f2(lambdas, n: int, budget=None) -> int:
    """Open chain pinned at both ends; tensor multiplicity for extremal weight crystals."""
    p = _validated(lambdas, n, "f2")
    if not all(is_partition(l) for l in p.lambdas):
        return 0
    lams = p.lambdas
    m = p.m
    if m == 3:
        return lr_coefficient(lams[0], lams[2], lams[1], n)

    s1 = size(lams[1]) - size(lams[0])
    bound = minimum(lams[1], lams[2])
    cur = {}
    for a in partitions_of_size_in_box(s1, bound):
        v = lr_coefficient(lams[0], a, lams[1], n)
        if v:
            cur[a] = v
    if budget is not None and len(cur) > budget:
        raise BudgetExceededError(f"f2 enumeration exceeds budget {budget}")
    for i in range(2, m - 2):  # middle lambdas, python index
        nxt = {}
        target = lams[i]
        bound = minimum(target, lams[i + 1])
        by_size = _group_by_size(partitions_in_box(bound))
        for a, wt in cur.items():
            need = size(target) - size(a)
            for b in by_size.get(need, ()):
                v = lr_coefficient(a, b, target, max(1, len(target)))
                if v:
                    nxt[b] = nxt.get(b, 0) + wt * v
        cur = nxt
        if not cur:
            return 0
    total = 0
    for a, wt in cur.items():
        v = lr_coefficient(a, lams[m - 1], lams[m - 2], n)
        if v:
            total += wt * v
    return total


@dataclass(frozen=True)
class LevelOneSpec:
    """Jump positions of a weight with at most one nonzero entry per flag.

    jumps[i] = 0 means the weight vanishes on flag i+1.  J is recomputed on
    access, never stored.
    """

    jumps: tuple[int, ...]

    def __post_init__(self):
        if any(j < 0 for j in self.jumps):
            raise InvalidInputError(f"jump numbers must be nonnegative, got {list(self.jumps)}")

    @property
    def J(self) -> tuple[int, ...]:
        j = self.jumps
        m = len(j)
        return tuple(j[i] - j[(i + 1) % m] + j[(i + 2) % m] for i in range(m))


def level1_f(spec: LevelOneSpec, N: int, n=None) -> int:
    """Closed form for the stretched chain sum on column partitions (N^{j_i}).

    Equals C(N+s, N) with s = min over all jumps and cyclic combinations
    J_i = j_i - j_{i+1} + j_{i+2} when the odd and even jump totals agree
    and every J_i >= 0; equals 0 otherwise.
    """
    j = spec.jumps
    m = len(j)
    if m < 4 or m % 2:
        raise UnsupportedShapeError(f"level-1 closed form needs even m >= 4, got m={m}")
    if n is not None and any(x > n for x in j):
        raise InvalidInputError(f"jump numbers {list(j)} exceed flag length n={n}")
    if N < 1:
        raise InvalidInputError(f"stretch factor N must be >= 1, got {N}")
    odd = sum(j[i] for i in range(0, m, 2))
    even = sum(j[i] for i in range(1, m, 2))
    if odd != even:
        return 0
    J = spec.J
    if any(x < 0 for x in J):
        return 0
    s = min(min(j), min(J))
    return comb(N + s, N)


def level1_lambdas(spec: LevelOneSpec, N: int) -> tuple[IntSeq, ...]:
    """The partition tuple (N^{j_1}), ..., (N^{j_m}) realizing a stretched level-1 weight."""
    return tuple((N,) * j for j in spec.jumps)


def evaluate(problem: ChainProblem, budget=None) -> int:
    if problem.kind == "f_sun":
        return f_sun(problem.lambdas, problem.n, budget=budget)
    if problem.kind == "f1":
        return f1(problem.lambdas, problem.n, budget=budget)
    return f2(problem.lambdas, problem.n, budget=budget)


def stretched_table(problem: ChainProblem, N_max: int, budget=None) -> list[int]:
    """[f(N * lambdas)] for N = 1..N_max, each N evaluated independently."""
    if N_max < 1:
        raise InvalidInputError(f"N_max must be >= 1, got {N_max}")
    out = []
    for N in range(1, N_max + 1):
        scaled = ChainProblem(
            problem.kind, problem.n, tuple(stretch(l, N) for l in problem.lambdas)
        )
        out.append(evaluate(scaled, budget=budget))
    return out
