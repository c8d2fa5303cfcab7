from chibound.ext.patterns import UnknownPattern, get_pattern
from chibound.ext.patterns.catalog import CATALOG_NAMES
from chibound.lib.graph import Graph

__all__ = (
    "VARIANT_SUFFIX",
    "named",
)


VARIANT_SUFFIX = "+edge"


def named(name: str) -> Graph:
    """
    The graph of a catalog pattern. Family patterns come with their optional
    edges absent; `name+edge` gives the member with all of them present.
    """
    base = name.strip().lower()
    variant = base.endswith(VARIANT_SUFFIX)
    if variant:
        base = base.removesuffix(VARIANT_SUFFIX)
    if base not in CATALOG_NAMES:
        raise UnknownPattern(name, CATALOG_NAMES)
    p = get_pattern(base)
    if not variant:
        return p.graph
    if not p.optional_edges:
        raise UnknownPattern(name, CATALOG_NAMES)
    return p.with_optional_edges()
