from .realization import ConstructedRealization, realization_from_covers
from .main_theorem import MainTheoremConstruction, main_theorem_poset, adjacency_audit
from .crowns import CrownConstruction, SubdividedCrownConstruction, CyclicPrimePowerConstruction, \
    AbelianJoinConstruction
from .crowns import crown, subdivided_crown, cyclic_prime_power_poset, abelian_join_poset, is_prime
from .graph_lattice import GraphLatticeConstruction, graph_realizer_lattice, graph_automorphisms

from ..utils import register_class
from ..core import Construction

register_class(MainTheoremConstruction, Construction, 'main')
register_class(CrownConstruction, Construction, 'crown')
register_class(SubdividedCrownConstruction, Construction, 'subdivided-crown')
register_class(CyclicPrimePowerConstruction, Construction, 'cyclic-pk')
register_class(AbelianJoinConstruction, Construction, 'abelian-join')
register_class(GraphLatticeConstruction, Construction, 'graph-lattice')
