"""Default parameters of poset-realizer and their environment overrides."""
import os

from .utils import update_parameter_dict

#: Name of the environment variable that overrides the point cap of the automorphism engine.
CAP_ENVIRONMENT_VARIABLE = 'POSET_REALIZER_CAP'

_default_settings = dict(
    # Maximal number of poset points accepted by the automorphism engine.
    point_cap=4096,
    # Seconds until a search raises a SearchTimeout. None disables the timeout.
    timeout=None,
    # Number of worker processes for the automorphism search and the enumeration.
    workers=1,
    # Largest group order that is materialized as a Cayley table.
    max_group_order=5040,
    # Largest poset size of the exhaustive enumeration.
    enumeration_cap=9,
    # Largest non-cyclic target group for the brute force isomorphism in realizes().
    realizes_group_cap=24,
    # Largest permutation group whose elements are enumerated.
    enumeration_element_cap=10 ** 4,
    # Largest automorphism group order whose Schreier-Sims order is cross-checked by closure enumeration.
    closure_crosscheck_cap=1000,
    # Default seed for all random corpora.
    seed=0,
)


def get_settings(**overrides):
    """Returns the settings dictionary.

    The defaults are updated by the ``POSET_REALIZER_CAP`` environment variable first and by the passed overrides
    afterwards. Overrides that are None are ignored.

    Args:
        overrides: Settings to update. Every key has to be a known setting.

    Returns:
        dict: The merged settings.

    Exceptions:
        KeyError: An override key is unknown.
        ValueError: The environment variable is not a positive integer.
    """
    settings = dict(_default_settings)
    env_cap = os.environ.get(CAP_ENVIRONMENT_VARIABLE)
    if env_cap:
        try:
            settings['point_cap'] = int(env_cap)
        except ValueError:
            raise ValueError(f'{CAP_ENVIRONMENT_VARIABLE} has to be an integer, got "{env_cap}".')
        if settings['point_cap'] < 1:
            raise ValueError(f'{CAP_ENVIRONMENT_VARIABLE} has to be positive, got {env_cap}.')
    return update_parameter_dict(settings, {k: v for k, v in overrides.items() if v is not None})
