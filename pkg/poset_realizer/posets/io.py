"""JSON and DOT representations of posets and graphs."""
import json

from .graph import graph_edges, make_graph
from .poset import Poset, format_label, poset_from_covers


def poset_to_dict(poset):
    """Poset JSON object ``{"points": [label, ...], "covers": [[i, j], ...]}`` with ``i`` covered by ``j``."""
    return dict(points=[_label_to_json(p) for p in poset.points], covers=[list(pair) for pair in poset.cover_pairs()])


def poset_from_dict(data):
    """Poset from the Poset JSON object. Declared covers may be redundant, see ``poset_from_covers``."""
    if not isinstance(data, dict) or 'points' not in data:
        raise ValueError('A poset object needs a "points" entry.')
    return poset_from_covers(data['points'], data.get('covers', []), by_index=True)


def _label_to_json(label):
    if isinstance(label, tuple):
        return [_label_to_json(part) for part in label]
    if hasattr(label, 'item'):
        return label.item()
    return label


def graph_to_dict(graph):
    """Graph JSON object ``{"n": int, "edges": [[u, v], ...]}``."""
    return dict(n=graph.number_of_nodes(), edges=[list(edge) for edge in graph_edges(graph)])


def graph_from_dict(data):
    """Graph from the Graph JSON object."""
    if not isinstance(data, dict) or 'n' not in data:
        raise ValueError('A graph object needs an "n" entry.')
    return make_graph(int(data['n']), data.get('edges', []))


def read_json(path):
    with open(path, 'r') as f:
        return json.load(f)


def write_json(data, path):
    with open(path, 'w') as f:
        json.dump(data, f, indent=1)
        f.write('\n')


def load_poset(path):
    return poset_from_dict(read_json(path))


def _dot_string(text):
    return '"' + str(text).replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(poset, name='poset'):
    """
    Graphviz DOT source of the Hasse diagram.

    The diagram is drawn bottom-up, every height is a separate rank, and the nodes show the point labels.

    Args:
        poset(Poset): The poset.
        name(str): Name of the DOT graph.

    Returns:
        str: The DOT source.
    """
    assert isinstance(poset, Poset)
    lines = [f'digraph {_dot_string(name)} {{', '  rankdir=BT;', '  node [shape=box, fontsize=10];']
    for x, label in enumerate(poset.points):
        lines.append(f'  p{x} [label={_dot_string(format_label(label))}];')
    levels = {}
    for x, h in enumerate(poset.heights.tolist()):
        levels.setdefault(h, []).append(x)
    for h in sorted(levels):
        members = ' '.join(f'p{x};' for x in levels[h])
        lines.append(f'  {{ rank=same; {members} }}')
    for x, y in poset.cover_pairs():
        lines.append(f'  p{x} -> p{y};')
    lines.append('}')
    return '\n'.join(lines) + '\n'
