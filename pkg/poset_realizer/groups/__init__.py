from .finite_group import FiniteGroup, GeneratingSequence
from .finite_group import generated_subgroup, generates, is_irredundant, irredundant_reduce, element_order
from .finite_group import generating_set
from .families import cyclic, dihedral, symmetric, quaternion, direct_product, permutation_group, cycle_notation
from .group_spec import group_from_spec, group_from_dict, load_cayley_table
