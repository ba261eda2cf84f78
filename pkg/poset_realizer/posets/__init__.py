from .poset import Poset, poset_from_covers, transitive_closure, transitive_reduction, format_label
from .poset import chain, antichain, height, down_set, up_set, adjacent, ordinal_sum, bounded
from .poset import is_lattice, minimal_points_determined, is_antichain, twin_pairs
from .graph import make_graph, graph_edges, face_poset
from .io import poset_to_dict, poset_from_dict, graph_to_dict, graph_from_dict, load_poset, to_dot
from .io import read_json, write_json
from .random_posets import RandomPosetGenerator, RandomGraphGenerator
