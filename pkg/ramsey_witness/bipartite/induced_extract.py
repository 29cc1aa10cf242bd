from itertools import combinations

from ramsey_witness.logger import logger
from ramsey_witness.exceptions import (
    ParameterError,
    PreconditionError,
    ValidationError)
from ramsey_witness.bipartite.utils import (as_subset, check_positive)
from ramsey_witness.bipartite.graph_core import verify_witness
from ramsey_witness.bipartite.constructions import set_bipartite
from ramsey_witness.bipartite.models import (
    InducedCopyWitness,
    same_graph)
from ramsey_witness.bipartite.hyper_ramsey import (
    DerivedColor,
    check_set_host,
    derived_color_of)


class ExtractionPlan(object):
    """Which ranks of a homogeneous set become the lefts of B_{a,b}.

    s = ab + b - 1 ranks are needed; ranks b, 2b, ..., ab are the lefts,
    every other rank is free to serve as a filler.
    """

    def __init__(self, a, b, positions, color):
        check_positive(a=a, b=b)
        self._a = a
        self._b = b
        self._derived = DerivedColor(color, positions)
        if self._derived.b != b:
            raise ParameterError(
                'positions {} do not form a {}-subset of [{}]'.format(
                    list(positions), b, 2 * b - 1))

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def s(self):
        return self._a * self._b + self._b - 1

    @property
    def chosen_ranks(self):
        return tuple(t * self._b for t in range(1, self._a + 1))

    @property
    def positions(self):
        return self._derived.positions

    @property
    def color(self):
        return self._derived.color

    @property
    def derived(self):
        return self._derived

    def right_vertex(self, pattern_right):
        """Ranks forming the host right vertex for a b-subset of [a]."""
        return build_right_vertex(
            [t * self._b for t in pattern_right],
            self.positions, self._a, self._b)

    def __repr__(self):
        return 'ExtractionPlan(a={}, b={}, s={}, {!r})'.format(
            self._a, self._b, self.s, self._derived)


def plan_extraction(a, b, derived):
    return ExtractionPlan(a, b, derived.positions, derived.color)


def build_right_vertex(chosen, positions, a, b):
    """Place the chosen ranks at the given sorted positions of a
    (2b-1)-set and fill the gaps with ranks that are not multiples of b.

    The gap before the first chosen rank is filled downwards from
    s_1 - 1, every other gap upwards from the rank preceding it.
    """
    check_positive(a=a, b=b)
    chosen = as_subset(chosen)
    positions = as_subset(positions)
    k = 2 * b - 1
    s = a * b + b - 1
    if len(chosen) != b or any(x % b or not b <= x <= a * b for x in chosen):
        raise ValidationError(
            '{} is not a {}-subset of the ranks {}'.format(
                list(chosen), b, list(range(b, a * b + 1, b))))
    if len(positions) != b or positions[-1] > k:
        raise ValidationError(
            '{} is not a {}-subset of [{}]'.format(list(positions), b, k))

    result = []
    before = positions[0] - 1
    assert before <= b - 1 and chosen[0] - before >= 1
    result.extend(range(chosen[0] - before, chosen[0]))
    for j, x in enumerate(chosen):
        result.append(x)
        following = positions[j + 1] if j + 1 < b else k + 1
        gap = following - positions[j] - 1
        assert gap <= b - 1
        if j + 1 < b:
            assert x + gap < chosen[j + 1]
        else:
            assert x + gap <= s
        result.extend(range(x + 1, x + gap + 1))

    assert len(result) == k
    assert all(result[p - 1] == x for p, x in zip(positions, chosen))
    assert {x for x in result if x % b == 0} == set(chosen)
    return tuple(result)


def check_homogeneous_prefix(coloring, vertices, derived):
    """Every (2b-1)-subset of vertices must carry the derived value."""
    b = derived.b
    for subset in combinations(vertices, 2 * b - 1):
        found = derived_color_of(coloring, subset, b)
        if found != derived:
            raise PreconditionError(
                'set is not homogeneous: {} has {!r}, expected {!r}'.format(
                    set(subset), found, derived))


def extract_induced(homogeneous, derived, a, b, host, coloring):
    """Induced monochromatic B_{a,b} inside B_{n,2b-1}.

    Rank r of the sorted homogeneous set is H[r]. Pattern left t maps to
    H[t*b]; pattern right T maps to the H-image of build_right_vertex for
    the ranks {t*b : t in T}.
    """
    plan = ExtractionPlan(a, b, derived.positions, derived.color)
    check_set_host(host, 2 * b - 1)
    if not same_graph(coloring.graph, host):
        raise ValidationError('coloring does not belong to the host graph')
    vertices = as_subset(homogeneous)
    if len(vertices) < plan.s:
        raise PreconditionError(
            'homogeneous set of size {} is smaller than s = ab + b - 1 = '
            '{}'.format(len(vertices), plan.s))
    for x in vertices:
        host.left_index(x)
    vertices = vertices[:plan.s]
    check_homogeneous_prefix(coloring, vertices, plan.derived)

    pattern = set_bipartite(a, b)
    lefts = [vertices[rank - 1] for rank in plan.chosen_ranks]
    rights = [
        tuple(vertices[rank - 1] for rank in plan.right_vertex(label))
        for label in pattern.right_labels]
    witness = InducedCopyWitness(pattern, lefts, rights, plan.color)
    assert verify_witness(host, coloring, witness), \
        'extracted copy for {!r} failed verification'.format(plan)
    logger.debug('extracted induced B_{{{},{}}}: {!r}'.format(a, b, witness))
    return witness
