"""Line-oriented text formats.

Graph:            bipartite <L> <R> | setgraph <n> <k>
                  llabel <index> <int>
                  rlabel <index> <comma-separated ints>
                  rid <index> <int>
                  e <left index> <right index>
Coloring:         c <left index> <right index> <R|B>
                  cdefault <R|B>
Witness:          witness [R|B]
                  wleft <pattern left> <host left>
                  wright <pattern right> <comma-separated host subset>
Subset coloring:  subsetcoloring <n> <arity> <palette>
                  sc <comma-separated subset> <value>

Blank lines and everything after '#' are ignored.
"""

import io
from collections import Counter

from ramsey_witness.exceptions import (FormatError, ValidationError)
from ramsey_witness.bipartite.hyper_ramsey import (
    DerivedColor,
    SubsetColoring)
from ramsey_witness.bipartite.models import (
    Color,
    EdgeColoring,
    BipartiteGraph,
    SetBipartiteGraph,
    InducedCopyWitness,
    format_label)


def _ints(token, line_no):
    try:
        return tuple(int(x) for x in token.split(',') if x != '')
    except ValueError:
        raise FormatError('expected integers, got {!r}'.format(token), line_no)


def _int(token, line_no):
    values = _ints(token, line_no)
    if len(values) != 1:
        raise FormatError('expected one integer, got {!r}'.format(token),
                          line_no)
    return values[0]


def _arity(fields, count, line_no):
    if len(fields) - 1 not in (count if isinstance(count, tuple) else
                               (count,)):
        raise FormatError(
            '{!r} takes {} argument(s), got {}'.format(
                fields[0], count, len(fields) - 1), line_no)


class Document(object):
    """Everything found in one text document."""

    def __init__(self):
        self.graph = None
        self.coloring = None
        self.subset_coloring = None
        self.claimed_color = None
        self.has_witness = False
        self._witness_left = {}
        self._witness_right = {}

    def witness(self, host=None):
        """The witness section against its pattern (this document's
        graph). Single-element host rights resolve to opaque labels
        unless host has them as 1-subsets."""
        if not self.has_witness:
            raise ValidationError('document has no witness section')
        pattern = self.graph
        lefts = []
        for i in range(1, pattern.left_count + 1):
            if i not in self._witness_left:
                raise ValidationError(
                    'witness does not map pattern left {}'.format(i))
            lefts.append(self._witness_left[i])
        rights = []
        for j in range(1, pattern.right_count + 1):
            if j not in self._witness_right:
                raise ValidationError(
                    'witness does not map pattern right {}'.format(j))
            rights.append(self._resolve(self._witness_right[j], host))
        return InducedCopyWitness(pattern, lefts, rights, self.claimed_color)

    @staticmethod
    def _resolve(values, host):
        if len(values) != 1:
            return values
        if host is not None and host.has_right(values):
            return values
        return values[0]


def _check_index(pending, side, index, line_no):
    if side == 'right' and pending['set'] is not None:
        count = pending['set'].right_count
    else:
        count = pending['{}_count'.format(side)]
    if not 1 <= index <= count:
        raise FormatError(
            '{} index {} out of range'.format(side, index), line_no)
    return index


def _left_label(pending, index):
    return pending['left_labels'].get(index, index)


def _right_label(pending, index):
    if pending['set'] is not None:
        return pending['set'].right_label(index)
    return pending['right_labels'].get(index, index)


def _labelled(pending, pair):
    return _left_label(pending, pair[0]), _right_label(pending, pair[1])


def _index_pair(pending, fields, line_no):
    return (
        _check_index(pending, 'left', _int(fields[1], line_no), line_no),
        _check_index(pending, 'right', _int(fields[2], line_no), line_no))


def _new_pending_graph(left_count, right_count, set_graph=None):
    return {
        'left_count': left_count,
        'right_count': right_count,
        'set': set_graph,
        'left_labels': {},
        'right_labels': {},
        'edges': [],
        'colors': {},
        'default': None,
    }


def _build_graph(pending):
    """Edges and colors are kept by index until every label line has
    been read."""
    if pending['set'] is not None:
        return pending['set']
    pairs = dict.fromkeys(pending['edges'] + list(pending['colors']))
    left_labels = [_left_label(pending, i)
                   for i in range(1, pending['left_count'] + 1)]
    right_labels = [_right_label(pending, j)
                    for j in range(1, pending['right_count'] + 1)]
    return BipartiteGraph(
        pending['left_count'], right_labels,
        [_labelled(pending, pair) for pair in pairs],
        left_labels=left_labels)


def _build_coloring(pending, graph):
    colors = {_labelled(pending, pair): color
              for pair, color in pending['colors'].items()}
    default = pending['default']
    if not colors and default is None:
        return None
    if default is None:
        return EdgeColoring(graph, colors=colors)
    if isinstance(graph, SetBipartiteGraph):
        return EdgeColoring.from_rule(
            graph, lambda x, r: colors.get((x, r), default))
    filled = dict(colors)
    for edge in graph.iter_edges():
        filled.setdefault(edge, default)
    return EdgeColoring(graph, colors=filled)


def parse_document(text):
    document = Document()
    pending = None
    subset_header = None
    subset_values = {}

    for line_no, raw in enumerate(io.StringIO(text), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword = fields[0]
        try:
            if keyword in ('bipartite', 'setgraph'):
                _arity(fields, 2, line_no)
                if pending is not None:
                    raise FormatError('only one graph per document', line_no)
                first, second = _int(fields[1], line_no), \
                    _int(fields[2], line_no)
                if keyword == 'setgraph':
                    pending = _new_pending_graph(
                        first, None, SetBipartiteGraph(first, second))
                else:
                    if first < 0 or second < 0:
                        raise FormatError('negative vertex count', line_no)
                    pending = _new_pending_graph(first, second)
            elif keyword == 'subsetcoloring':
                _arity(fields, 3, line_no)
                if subset_header is not None:
                    raise FormatError(
                        'only one subset coloring per document', line_no)
                subset_header = tuple(_int(f, line_no) for f in fields[1:])
            elif keyword == 'sc':
                _arity(fields, 2, line_no)
                if subset_header is None:
                    raise FormatError('sc before subsetcoloring', line_no)
                subset = _ints(fields[1], line_no)
                if subset in subset_values:
                    raise FormatError('subset listed twice', line_no)
                if ':' in fields[2]:
                    value = DerivedColor.parse(fields[2])
                else:
                    value = _int(fields[2], line_no)
                subset_values[subset] = value
            elif pending is None:
                raise FormatError(
                    '{!r} before a graph header'.format(keyword), line_no)
            elif keyword in ('llabel', 'rlabel', 'rid', 'e') and \
                    pending['set'] is not None:
                raise FormatError(
                    '{!r} is not allowed for setgraph'.format(keyword),
                    line_no)
            elif keyword == 'llabel':
                _arity(fields, 2, line_no)
                index = _check_index(
                    pending, 'left', _int(fields[1], line_no), line_no)
                pending['left_labels'][index] = _int(fields[2], line_no)
            elif keyword in ('rlabel', 'rid'):
                _arity(fields, 2, line_no)
                index = _check_index(
                    pending, 'right', _int(fields[1], line_no), line_no)
                if keyword == 'rid':
                    pending['right_labels'][index] = _int(fields[2], line_no)
                else:
                    pending['right_labels'][index] = _ints(fields[2], line_no)
            elif keyword == 'e':
                _arity(fields, 2, line_no)
                pending['edges'].append(_index_pair(pending, fields, line_no))
            elif keyword == 'c':
                _arity(fields, 3, line_no)
                pair = _index_pair(pending, fields, line_no)
                if pair in pending['colors']:
                    raise FormatError('edge colored twice', line_no)
                if pending['set'] is not None:
                    x, r = _labelled(pending, pair)
                    if not pending['set'].has_edge(x, r):
                        raise FormatError(
                            '({}, {}) is not an edge of {!r}'.format(
                                x, format_label(r), pending['set']),
                            line_no)
                pending['colors'][pair] = Color.from_code(fields[3])
            elif keyword == 'cdefault':
                _arity(fields, 1, line_no)
                pending['default'] = Color.from_code(fields[1])
            elif keyword == 'witness':
                _arity(fields, (0, 1), line_no)
                document.has_witness = True
                if len(fields) == 2:
                    document.claimed_color = Color.from_code(fields[1])
            elif keyword in ('wleft', 'wright'):
                _arity(fields, 2, line_no)
                if not document.has_witness:
                    raise FormatError(
                        '{!r} outside a witness section'.format(keyword),
                        line_no)
                index = _int(fields[1], line_no)
                if keyword == 'wleft':
                    document._witness_left[index] = _int(fields[2], line_no)
                else:
                    document._witness_right[index] = _ints(fields[2], line_no)
            else:
                raise FormatError('unknown keyword {!r}'.format(keyword),
                                  line_no)
        except FormatError:
            raise
        except ValidationError as e:
            raise FormatError(str(e), line_no)

    if pending is not None:
        document.graph = _build_graph(pending)
        document.coloring = _build_coloring(pending, document.graph)
    if subset_header is not None:
        n, arity, palette = subset_header
        document.subset_coloring = SubsetColoring(
            n, arity, palette, values=subset_values)
    return document


def read_document(path):
    with io.open(path, 'r', encoding='utf-8') as f:
        return parse_document(f.read())


def _label_tokens(label):
    if isinstance(label, tuple):
        return ','.join(str(x) for x in label)
    return str(label)


def dump_graph(graph, with_edges=True):
    if isinstance(graph, SetBipartiteGraph):
        return ['setgraph {} {}'.format(graph.n, graph.k)]
    lines = ['bipartite {} {}'.format(graph.left_count, graph.right_count)]
    for i, x in enumerate(graph.left_labels, 1):
        if x != i:
            lines.append('llabel {} {}'.format(i, x))
    for j, r in enumerate(graph.right_labels, 1):
        if isinstance(r, tuple):
            lines.append('rlabel {} {}'.format(j, _label_tokens(r)))
        elif r != j:
            lines.append('rid {} {}'.format(j, r))
    if with_edges:
        for x, r in graph.iter_edges():
            lines.append('e {} {}'.format(
                graph.left_index(x), graph.right_index(r)))
    return lines


def dump_coloring(coloring):
    graph = coloring.graph
    colored = list(coloring.items())
    counts = Counter(color for _, color in colored)
    lines = dump_graph(graph)
    if not counts:
        return lines
    default = min(counts, key=lambda c: (-counts[c], c))
    lines.append('cdefault {}'.format(default.code))
    for (x, r), color in colored:
        if color is not default:
            lines.append('c {} {} {}'.format(
                graph.left_index(x), graph.right_index(r), color.code))
    return lines


def dump_witness(witness):
    pattern = witness.pattern
    lines = dump_graph(pattern)
    if witness.claimed_color is None:
        lines.append('witness')
    else:
        lines.append('witness {}'.format(witness.claimed_color.code))
    for i, x in enumerate(witness.host_left, 1):
        lines.append('wleft {} {}'.format(i, x))
    for j, r in enumerate(witness.host_right, 1):
        lines.append('wright {} {}'.format(j, _label_tokens(r)))
    return lines


def _value_token(value):
    if isinstance(value, DerivedColor):
        return value.code
    return str(value)


def dump_subset_coloring(coloring):
    lines = ['subsetcoloring {} {} {}'.format(
        coloring.n, coloring.arity, coloring.palette_size)]
    for subset, value in coloring.items():
        lines.append('sc {} {}'.format(
            _label_tokens(subset), _value_token(value)))
    return lines


def to_text(lines):
    return '\n'.join(lines) + '\n'


def parse_vertex_set(text):
    """Integers separated by commas and/or whitespace; '#' starts a
    comment."""
    tokens = []
    for line in io.StringIO(text):
        tokens.extend(line.split('#', 1)[0].replace(',', ' ').split())
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise FormatError('vertex sets hold integers only: {!r}'.format(text))
