from .core import PosetRealizerError, GroupSpecError, CayleyTableError, GeneratingSequenceError, CycleError
from .core import UnknownPointError, CapExceededError, SearchTimeout, ConstructionError, VerificationError
from .core import ConfigurationError, Construction
from .random_component import RandomComponent
from .settings import get_settings
from .utils import make_module, instantiate, register_superclass, registered_keys

# Add all superclasses of the modules to the registry.
register_superclass(Construction)

from .groups import FiniteGroup, GeneratingSequence, group_from_spec, irredundant_reduce, cyclic, dihedral
from .groups import symmetric, quaternion, direct_product
from .posets import Poset, poset_from_covers, face_poset, poset_to_dict, poset_from_dict
from .posets import RandomPosetGenerator, RandomGraphGenerator
from .automorphisms import automorphism_group, are_isomorphic, canonical_form, PermGroup
from .automorphisms import RealizationCertificate, verify_realization, recheck_certificate
from .constructions import ConstructedRealization, MainTheoremConstruction, CrownConstruction
from .constructions import SubdividedCrownConstruction, CyclicPrimePowerConstruction, AbelianJoinConstruction
from .constructions import GraphLatticeConstruction
from .beta_search import enumerate_posets, count_posets, beta, realizes, KnownBounds
