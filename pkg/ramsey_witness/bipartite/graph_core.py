from itertools import combinations, permutations

from ramsey_witness.logger import logger
from ramsey_witness.exceptions import ValidationError
from ramsey_witness.bipartite.utils import Budget
from ramsey_witness.bipartite.models import (
    Color,
    BipartiteGraph,
    InducedCopyWitness,
    format_label,
    normalize_label,
    same_graph)

SEARCH_COLORS = (Color.RED, Color.BLUE)


def check_references(host, witness):
    for x in witness.host_left:
        if not host.has_left(x):
            raise ValidationError(
                'witness references unknown host left vertex {!r}'.format(x))
    for r in witness.host_right:
        if not host.has_right(r):
            raise ValidationError(
                'witness references unknown host right vertex {}'.format(
                    format_label(r)))


def verify_witness(host, coloring, witness, induced=True):
    """Check a copy of witness.pattern inside host.

    With induced=True adjacency between mapped vertices must match the
    pattern exactly; with induced=False pattern edges only need to be
    present in the host. When the witness claims a color and a coloring
    is supplied, every host edge the check covers must carry it.

    Malformed witnesses raise ValidationError instead of returning False.
    """
    check_references(host, witness)
    if coloring is not None and not same_graph(coloring.graph, host):
        raise ValidationError('coloring does not belong to the host graph')

    pattern = witness.pattern
    claimed = witness.claimed_color
    for x, r, hx, hr in witness.pairs():
        in_pattern = pattern.has_edge(x, r)
        in_host = host.has_edge(hx, hr)
        if in_pattern and not in_host:
            logger.debug(
                'pattern edge ({}, {}) maps to host non-edge ({}, {})'.format(
                    x, format_label(r), hx, format_label(hr)))
            return False
        if induced and in_host and not in_pattern:
            logger.debug(
                'host edge ({}, {}) has no pattern counterpart'.format(
                    hx, format_label(hr)))
            return False
        if in_pattern and claimed is not None and coloring is not None:
            if coloring.color_of(hx, hr) is not claimed:
                logger.debug(
                    'host edge ({}, {}) is not {}'.format(
                        hx, format_label(hr), claimed.name))
                return False
    return True


def induced_subgraph(host, lefts, rights):
    """The graph on the chosen vertices with exactly the host edges
    between them. Both vertex classes keep their host labels and host
    order."""
    rights = {normalize_label(r) for r in rights}
    for x in lefts:
        host.left_index(x)
    for r in rights:
        host.right_index(r)
    lefts = sorted(set(lefts), key=host.left_index)
    rights = sorted(rights, key=host.right_index)
    edges = [(x, r) for x in lefts for r in rights if host.has_edge(x, r)]
    return BipartiteGraph(len(lefts), rights, edges, left_labels=lefts)


def _pattern_rows(pattern):
    """For every pattern right, the positions of its left neighbours."""
    return [
        frozenset(i for i, x in enumerate(pattern.left_labels)
                  if pattern.has_edge(x, r))
        for r in pattern.right_labels]


def _fits(host, coloring, assignment, row, r, color, induced, budget):
    for i, hx in enumerate(assignment):
        budget.spend()
        wanted = i in row
        present = host.has_edge(hx, r)
        if wanted and not present:
            return False
        if induced and present and not wanted:
            return False
        if wanted and coloring.color_of(hx, r) is not color:
            return False
    return True


def _assign_rights(candidates, used=(), depth=0):
    """First injective choice of one candidate per pattern right, in
    host right order."""
    if depth == len(candidates):
        return list(used)
    for r in candidates[depth]:
        if r in used:
            continue
        found = _assign_rights(candidates, used + (r,), depth + 1)
        if found is not None:
            return found
    return None


def find_monochromatic_copy(host, coloring, pattern, induced=True,
                            budget=None):
    """Brute-force search for a monochromatic (induced) copy of pattern.

    Left assignments run over left combinations in lexicographic order
    and, within one combination, over its orderings; rights are then
    matched in host order, RED tried before BLUE. Returns None when no
    copy exists.
    """
    if not isinstance(budget, Budget):
        budget = Budget(budget, what='induced copy search')
    if not same_graph(coloring.graph, host):
        raise ValidationError('coloring does not belong to the host graph')
    if pattern.left_count > host.left_count or \
            pattern.right_count > host.right_count:
        logger.debug('pattern {!r} does not fit into host {!r}'.format(
            pattern, host))
        return None

    rows = _pattern_rows(pattern)
    host_rights = list(host.iter_right_labels())
    for combo in combinations(host.left_labels, pattern.left_count):
        for assignment in permutations(combo):
            budget.spend()
            for color in SEARCH_COLORS:
                candidates = []
                for row in rows:
                    fitting = [
                        r for r in host_rights
                        if _fits(host, coloring, assignment, row, r,
                                 color, induced, budget)]
                    if not fitting:
                        break
                    candidates.append(fitting)
                else:
                    chosen = _assign_rights(candidates)
                    if chosen is not None:
                        witness = InducedCopyWitness(
                            pattern, assignment, chosen, color)
                        logger.debug('found {!r} after {} checks'.format(
                            witness, budget.spent))
                        return witness
    logger.debug('no copy of {!r} after {} checks'.format(
        pattern, budget.spent))
    return None


def find_induced_monochromatic(host, coloring, pattern, budget=None):
    return find_monochromatic_copy(
        host, coloring, pattern, induced=True, budget=budget)
