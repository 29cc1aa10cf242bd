from ramsey_witness import cli
from ramsey_witness.logger import logger
from ramsey_witness.commands import (
    emit,
    outcome,
    load_document)
from ramsey_witness.bipartite.models import (
    EdgeColoring,
    BipartiteGraph,
    SetBipartiteGraph)
from ramsey_witness.bipartite.formats import (
    dump_graph,
    dump_coloring)
from ramsey_witness.bipartite.constructions import (
    complete_bipartite,
    set_bipartite)
from ramsey_witness.bipartite.workflow import (
    export_dot,
    required_parameters)


def graph_record(graph):
    return {
        'left': graph.left_count,
        'right': graph.right_count,
        'edges': graph.edge_count,
    }


@cli.group('build')
def build():
    """Write the graph document of K_{n,k} or B_{n,k}."""


@build.command('complete')
@cli.options.n
@cli.options.k
@outcome
def build_complete(settings, n, k):
    graph = complete_bipartite(n, k)
    emit(settings, dump_graph(graph), graph_record(graph))


@build.command('setgraph')
@cli.options.n
@cli.options.k
@cli.options.explicit
@outcome
def build_setgraph(settings, n, k, explicit=False):
    graph = set_bipartite(n, k)
    if explicit:
        graph = BipartiteGraph(
            n, list(graph.iter_right_labels()), graph.iter_edges())
    emit(settings, dump_graph(graph), dict(graph_record(graph), k=k))


def _constant_lines(graph, color):
    return dump_graph(graph) + ['cdefault {}'.format(color.code)]


@cli.group('color')
def color():
    """Color every edge of a graph document."""


@color.command('constant')
@cli.options.graph_path
@cli.options.color
@outcome
def color_constant(settings, graph_path, color=None):
    graph = load_document(graph_path).graph
    emit(settings, _constant_lines(graph, color),
         dict(graph_record(graph), color=color.code))


@color.command('random')
@cli.options.graph_path
@cli.options.seed
@outcome
def color_random(settings, graph_path, seed=None):
    graph = load_document(graph_path).graph
    if isinstance(graph, SetBipartiteGraph):
        logger.info('Coloring all {} edges of {!r}'.format(
            graph.edge_count, graph))
    coloring = EdgeColoring.random(graph, seed=seed)
    emit(settings, dump_coloring(coloring),
         dict(graph_record(graph), seed=seed))


@cli.command('params')
@cli.options.pattern_path
@outcome
def params(settings, pattern_path):
    """Report the constants the pipeline needs for a pattern."""
    report = required_parameters(load_document(pattern_path).graph)
    record = report.as_dict()
    emit(settings,
         ['{}: {}'.format(key, record[key]) for key in
          ('c', 'd', 'a', 'b', 'k', 's', 'palette', 'n_formula')],
         record)


@cli.command('dot')
@cli.options.graph_path
@cli.options.witness
@outcome
def dot(settings, graph_path, witness=None):
    """Render a graph or coloring document, optionally highlighting a
    witness."""
    document = load_document(graph_path)
    found = None
    if witness:
        found = load_document(witness).witness(document.graph)
    text = export_dot(document.graph, document.coloring, found,
                      attributes=settings.config.dot)
    emit(settings, text.splitlines(), {'dot': text})
