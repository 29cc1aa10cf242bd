from math import comb

import pydot
import networkx as nx

from ramsey_witness.logger import logger
from ramsey_witness.exceptions import ValidationError
from ramsey_witness.bipartite.utils import Budget
from ramsey_witness.bipartite.graph_core import (
    check_references,
    verify_witness)
from ramsey_witness.bipartite.constructions import embed_into_set_bipartite
from ramsey_witness.bipartite.induced_extract import extract_induced
from ramsey_witness.bipartite.hyper_ramsey import (
    DerivedColor,
    check_set_host,
    derive_coloring,
    find_homogeneous_set)
from ramsey_witness.bipartite.models import same_graph

DEFAULT_DOT_ATTRIBUTES = {'rankdir': 'LR'}


class ParameterReport(object):
    """Constants of the route pattern -> B_{a,b} -> B_{n,k}. The host
    size n is a hypergraph Ramsey number and stays symbolic."""

    def __init__(self, c, d):
        if c < 1 or d < 1:
            raise ValidationError(
                'pattern needs at least one vertex on each side, got '
                'c={}, d={}'.format(c, d))
        self.c = c
        self.d = d
        self.a = 2 * c + d
        self.b = c + 1
        self.k = 2 * self.b - 1
        self.s = self.a * self.b + self.b - 1
        self.palette = 2 * comb(self.k, self.b)
        self.n_formula = 'R_{{{}, {}}}({})'.format(
            self.k, self.palette, self.s)
        self.n_value = None

    def as_dict(self):
        return {
            'c': self.c,
            'd': self.d,
            'a': self.a,
            'b': self.b,
            'k': self.k,
            's': self.s,
            'palette': self.palette,
            'n_formula': self.n_formula,
            'n_value': self.n_value,
        }

    def __repr__(self):
        return 'ParameterReport({})'.format(self.as_dict())


def required_parameters(pattern):
    return ParameterReport(pattern.left_count, pattern.right_count)


class PipelineResult(object):

    def __init__(self, report, embedding, homogeneous=None, extraction=None,
                 witness=None):
        self.report = report
        self.embedding = embedding
        self.homogeneous = homogeneous
        self.extraction = extraction
        self.witness = witness

    @property
    def found(self):
        return self.witness is not None


def run_pipeline(pattern, coloring, budget=None):
    """Embed, derive, search, extract and compose. The result's witness
    is None when [n] holds no homogeneous s-set."""
    if not isinstance(budget, Budget):
        budget = Budget(budget, what='pattern pipeline')
    embedding = embed_into_set_bipartite(pattern)
    report = required_parameters(pattern)
    host = coloring.graph
    n = check_set_host(host, report.k)
    result = PipelineResult(report, embedding)
    if n < report.s:
        logger.info('host has {} left vertices, fewer than s = {}'.format(
            n, report.s))
        return result

    derived = derive_coloring(coloring, report.b, lazy=True)
    homogeneous = find_homogeneous_set(derived, report.s, budget=budget)
    if homogeneous is None:
        logger.info('no homogeneous set of size {} in [{}]'.format(
            report.s, n))
        return result
    result.homogeneous = homogeneous
    logger.debug('homogeneous set {!r}'.format(homogeneous))

    value = homogeneous.value
    if not isinstance(value, DerivedColor):
        raise ValidationError('unexpected derived value {!r}'.format(value))
    extraction = extract_induced(
        homogeneous.vertices, value, report.a, report.b, host, coloring)
    result.extraction = extraction

    # every edge of the extracted B_{a,b} has one color, so the copy of
    # the pattern inside it inherits that color
    witness = embedding.witness.through(extraction)
    assert verify_witness(host, coloring, witness), \
        'composed witness for {!r} failed verification'.format(pattern)
    result.witness = witness
    return result


def find_induced_mono_pattern(pattern, coloring, budget=None):
    return run_pipeline(pattern, coloring, budget=budget).witness


def _node_name(node):
    side, label = node
    if isinstance(label, tuple):
        return 'rs' + '_'.join(str(x) for x in label)
    return '{}{}'.format(side.lower(), label)


def export_dot(graph, coloring=None, witness=None, attributes=None):
    """DOT text with lefts and rights in two ranks. Colored edges are
    drawn red or blue, uncolored ones black; witness vertices and edges
    are drawn bold."""
    if witness is not None:
        check_references(graph, witness)
    if coloring is not None and not same_graph(coloring.graph, graph):
        raise ValidationError('coloring does not belong to the graph')

    bold = set()
    if witness is not None:
        bold.update(('L', x) for x in witness.host_left)
        bold.update(('R', r) for r in witness.host_right)

    drawing = graph.to_networkx()
    for node, attrs in drawing.nodes(data=True):
        attrs['shape'] = 'circle' if attrs.pop('bipartite') == 0 \
            else 'ellipse'
        if node in bold:
            attrs['penwidth'] = 3
    for u, v, attrs in drawing.edges(data=True):
        (_, x), (_, r) = (u, v) if u[0] == 'L' else (v, u)
        attrs['color'] = 'black'
        if coloring is not None:
            attrs['color'] = coloring.color_of(x, r).dot
        if u in bold and v in bold:
            attrs['penwidth'] = 3
        elif witness is not None:
            attrs['style'] = 'dotted'
    drawing = nx.relabel_nodes(
        drawing, {node: _node_name(node) for node in drawing})

    dot = nx.nx_pydot.to_pydot(drawing)
    dot.set_name('bipartite')
    for key, value in dict(attributes or DEFAULT_DOT_ATTRIBUTES).items():
        dot.set(key, str(value))
    for side, labels in (('L', graph.left_labels),
                         ('R', list(graph.iter_right_labels()))):
        if not labels:
            continue
        rank = pydot.Subgraph('{}_rank'.format(side.lower()), rank='same')
        for label in labels:
            rank.add_node(pydot.Node(_node_name((side, label))))
        dot.add_subgraph(rank)
    return dot.to_string()
