"""Resource caps for the exhaustive searches.

Everything downstream of the validators is exhaustive, so every operation
that enumerates takes a ``Caps`` and raises ``SizeBound`` / ``Overflow``
instead of running away.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    max_objects: int = 64
    max_morphisms: int = 4096
    max_search: int = 10_000_000
    max_card: int = 1_000_000


DEFAULT_CAPS = Caps()


def scaled(caps: Caps, max_size: int | None) -> Caps:
    """Override the search cap from a CLI --max-size value."""
    if max_size is None:
        return caps
    return replace(caps, max_search=max_size)
