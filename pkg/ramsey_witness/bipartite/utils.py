import os
from math import comb
from itertools import combinations

from ramsey_witness.exceptions import (
    ParameterError,
    ValidationError,
    BudgetExceededError)
from ramsey_witness.constants import (BUDGET_ENV, DEFAULT_BUDGET)


def resolve_budget(budget=None):
    """An explicit budget wins, then RW_BUDGET, then the default cap."""
    if budget is None:
        budget = os.environ.get(BUDGET_ENV) or DEFAULT_BUDGET
    try:
        budget = int(budget)
    except (TypeError, ValueError):
        raise ValidationError('budget must be an integer: {!r}'.format(budget))
    if budget < 1:
        raise ValidationError('budget must be positive: {}'.format(budget))
    return budget


class Budget(object):

    def __init__(self, limit=None, what='search'):
        self._limit = resolve_budget(limit)
        self._spent = 0
        self._what = what

    @property
    def limit(self):
        return self._limit

    @property
    def spent(self):
        return self._spent

    @property
    def remaining(self):
        return self._limit - self._spent

    def spend(self, amount=1):
        self._spent += amount
        if self._spent > self._limit:
            raise BudgetExceededError(
                self._limit, spent=self._spent, what=self._what)

    def refuse_above(self, estimate):
        if estimate > self.remaining:
            raise BudgetExceededError(
                self._limit, estimate=estimate, what=self._what)


def as_subset(values):
    """Sorted tuple of distinct positive integers."""
    try:
        subset = tuple(sorted(int(v) for v in values))
    except (TypeError, ValueError):
        raise ValidationError('not a set of integers: {!r}'.format(values))
    if len(set(subset)) != len(subset):
        raise ValidationError('repeated element in {!r}'.format(values))
    if subset and subset[0] < 1:
        raise ValidationError('elements must be positive: {!r}'.format(values))
    return subset


def k_subsets(n, k):
    """All k-subsets of [n] as sorted tuples, in lexicographic order."""
    return combinations(range(1, n + 1), k)


def rank_subset(subset, n):
    """1-based lexicographic rank of a sorted k-subset of [n]."""
    k = len(subset)
    rank = 1
    prev = 0
    for j, x in enumerate(subset, start=1):
        if not prev < x <= n:
            raise ValidationError(
                '{!r} is not a sorted subset of [{}]'.format(subset, n))
        for v in range(prev + 1, x):
            rank += comb(n - v, k - j)
        prev = x
    return rank


def unrank_subset(rank, n, k):
    """Sorted k-subset of [n] with the given 1-based lexicographic rank."""
    total = comb(n, k)
    if not 1 <= rank <= total:
        raise ParameterError(
            'rank {} outside 1..{} for {}-subsets of [{}]'.format(
                rank, total, k, n))
    r = rank - 1
    subset = []
    x = 1
    for j in range(k, 0, -1):
        while True:
            block = comb(n - x, j - 1)
            if r < block:
                break
            r -= block
            x += 1
        subset.append(x)
        x += 1
    return tuple(subset)


def check_positive(**values):
    for name, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ParameterError(
                '{} must be a positive integer, got {!r}'.format(name, value))
