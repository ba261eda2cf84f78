from .refinement import Clock, initial_colors, refine, individualize, find_isomorphism, are_isomorphic
from .perm_group import PermGroup, orbit_partition, group_order, enumerate_elements, is_cyclic_of_order
from .perm_group import is_orbit_discrete, permutation_order, compose, inverse
from .automorphism_group import automorphism_group
from .canonical import CanonicalLabeling, canonical_labeling, canonical_form
from .certificate import RealizationCertificate, verify_realization, recheck_certificate
from .brute_force import brute_force_automorphisms, brute_force_automorphism_count
