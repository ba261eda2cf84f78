from .enumeration import EnumeratedPoset, EnumerationReport, enumerate_posets, enumerate_classes, count_posets
from .enumeration import order_ideals, ideal_orbit_representatives
from .search import realizes, beta, BetaResult, orbit_size_audit, OrbitAudit, swap_witness, is_isomorphic_to
from .search import is_cyclic_group, prime_power
from .known_bounds import KnownBounds, cyclic_prime_power_bounds, KNOWN_BOUNDS_FILE
