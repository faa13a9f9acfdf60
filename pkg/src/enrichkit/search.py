"""Constraint-pruned backtracking used by the exhaustive enumerations.

A search problem is a list of slots in a fixed order, a finite candidate
list per slot, and constraints that fire as soon as their last slot is
assigned.  Complete assignments come out in lexicographic order of the
candidate indices, which is what makes every enumeration canonical.
"""

from .errors import SizeBound


def search_space(slots, cands):
    total = 1
    for s in slots:
        total *= len(cands[s])
        if total == 0:
            return 0
    return total


def backtrack(slots, cands, constraints):
    """Yield all complete assignments satisfying every constraint.

    constraints: iterable of (needed_slots, predicate); the predicate gets
    the partial assignment dict and is evaluated once all needed slots are
    assigned.
    """
    order = {s: i for i, s in enumerate(slots)}
    triggers = [[] for _ in slots]
    immediate = []
    for needed, pred in constraints:
        idxs = [order[s] for s in needed]
        if idxs:
            triggers[max(idxs)].append(pred)
        else:
            immediate.append(pred)
    if not all(pred({}) for pred in immediate):
        return

    assignment = {}

    def rec(i):
        if i == len(slots):
            yield dict(assignment)
            return
        s = slots[i]
        for c in cands[s]:
            assignment[s] = c
            if all(pred(assignment) for pred in triggers[i]):
                yield from rec(i + 1)
        assignment.pop(s, None)

    yield from rec(0)


def guard_space(total, caps, what):
    if total > caps.max_search:
        raise SizeBound(f"{what} search space {total} exceeds cap {caps.max_search}")
