"""Registry of the construction classes and small helpers for parameter dictionaries and flag values."""

# superclass -> {method tag: class}
_registry = {}


def register_superclass(superclass):
    """Opens a registry section for a base class. The Construction base class is registered on package import."""
    _registry[superclass] = {}


def register_class(subclass, superclass, keystring):
    """Registers ``subclass`` under the tag ``keystring`` in the section of ``superclass``."""
    _registry[superclass][keystring] = subclass


def registered_keys(superclass):
    """Sorted tags of the classes registered for the superclass."""
    return sorted(_registry[superclass])


def make_module(superclass, keystring, **kwargs):
    """
    Looks up the class registered under ``keystring`` and instantiates it.

    Args:
        superclass(class): Section of the registry, e.g. Construction.
        keystring(str): Tag of the class, e.g. ``'crown'``.
        kwargs: Constructor arguments.

    Returns:
        The new object.

    Exceptions:
        KeyError: The section or the tag is not registered.
    """
    section = _registry.get(superclass)
    if section is None or keystring not in section:
        raise KeyError(f'No class with the tag "{keystring}" is registered for {superclass.__name__}.')
    return section[keystring](**kwargs)


def instantiate(superclass, instance, **kwargs):
    """
    Turns a tag, a class or an object into an object of the superclass.

    Objects are returned unchanged, classes are instantiated with ``kwargs`` and tags are resolved by
    ``make_module``.

    Exceptions:
        TypeError: The instance is neither a tag nor a subclass nor an object of the superclass.
    """
    if isinstance(instance, superclass):
        return instance
    if isinstance(instance, type) and issubclass(instance, superclass):
        return instance(**kwargs)
    if isinstance(instance, str):
        return make_module(superclass, instance, **kwargs)
    raise TypeError(f'{instance!r} cannot be instantiated as {superclass.__name__}.')


def update_parameter_dict(source_dict, update_dict, copy=True):
    """
    ``dict.update`` that only accepts keys that are already present in the source.

    Args:
        source_dict(dict): The defaults.
        update_dict(dict): The new values.
        copy(bool): Update a copy instead of the source itself.

    Returns:
        dict: The updated dictionary.

    Exceptions:
        KeyError: The update contains an unknown key.
    """
    unknown = [key for key in update_dict if key not in source_dict]
    if unknown:
        raise KeyError(f'Unknown parameters {unknown}. Known are {sorted(source_dict)}.')
    updated = dict(source_dict) if copy else source_dict
    updated.update(update_dict)
    return updated


def split_top_level(text, separator=','):
    """Splits a string at separators that are not enclosed in parentheses.

    Element names like ``(12)`` or ``(1,0)`` contain commas and brackets themselves, so a plain ``str.split`` cannot
    be used for comma separated generator lists.

    Args:
        text(str): The string to split.
        separator(str): Single character separator.

    Returns:
        list(str): The stripped, non-empty parts.
    """
    parts, depth, current = [], 0, []
    for char in text:
        if char in '([':
            depth += 1
        elif char in ')]':
            depth -= 1
        if char == separator and depth == 0:
            parts.append(''.join(current))
            current = []
        else:
            current.append(char)
    parts.append(''.join(current))
    return [part.strip() for part in parts if part.strip()]

