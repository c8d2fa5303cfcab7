from functools import cache
from typing import Iterable, Sequence

from chibound.ext.patterns.pattern import Pattern
from chibound.ext.patterns.patterns_exceptions import UnknownPattern
from chibound.lib.graph import Graph

__all__ = (
    "CATALOG_NAMES",
    "AUXILIARY_NAMES",
    "HOLE_LABELS",
    "catalog",
    "get_pattern",
)


# Role labels for the patterns built on the 6-hole u1-v1-v2-v3-u3-u2.
HOLE_LABELS: tuple[str, ...] = ("v1", "v2", "v3", "u1", "u2", "u3")

HOLE_EDGES: tuple[tuple[str, str], ...] = (
    ("u1", "v1"),
    ("v1", "v2"),
    ("v2", "v3"),
    ("v3", "u3"),
    ("u3", "u2"),
    ("u2", "u1"),
)

CODOMINO_CHORDS: tuple[tuple[str, str], ...] = (("v1", "v3"), ("u1", "u3"))


def _labeled(
    name: str,
    labels: Sequence[str],
    edges: Iterable[tuple[str, str]],
    optional: Iterable[tuple[str, str]] = (),
) -> Pattern:
    index = {label: i for i, label in enumerate(labels)}

    def pair(a: str, b: str) -> tuple[int, int]:
        i, j = index[a], index[b]
        return (i, j) if i < j else (j, i)

    graph = Graph.from_edges(len(labels), (pair(a, b) for a, b in edges))
    return Pattern(
        name=name,
        graph=graph,
        labels=tuple(labels),
        optional_edges=frozenset(pair(a, b) for a, b in optional),
    )


def _numbered(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def _path(name: str, n: int) -> Pattern:
    labels = _numbered("v", n)
    return _labeled(name, labels, zip(labels, labels[1:]))


def _cycle(name: str, n: int) -> Pattern:
    labels = _numbered("v", n)
    return _labeled(name, labels, zip(labels, labels[1:] + labels[:1]))


def _complete(name: str, n: int) -> Pattern:
    labels = _numbered("v", n)
    return _labeled(
        name, labels, ((a, b) for i, a in enumerate(labels) for b in labels[i + 1 :])
    )


def _hole(
    name: str,
    chords: Iterable[tuple[str, str]],
    extra_labels: Sequence[str] = (),
    optional: Iterable[tuple[str, str]] = (),
) -> Pattern:
    return _labeled(
        name,
        HOLE_LABELS + tuple(extra_labels),
        HOLE_EDGES + tuple(chords),
        optional,
    )


def _co_p3_up2() -> Pattern:
    p3up2 = _labeled(
        "cop3up2",
        ("a1", "a2", "a3", "b1", "b2"),
        (("a1", "a2"), ("a2", "a3"), ("b1", "b2")),
    )
    return Pattern("cop3up2", p3up2.graph.complement(), p3up2.labels)


def _build_catalog() -> tuple[Pattern, ...]:
    return (
        _path("p2", 2),
        _path("p3", 3),
        _path("p4", 4),
        _path("p5", 5),
        _cycle("c4", 4),
        _cycle("c5", 5),
        _cycle("c6", 6),
        _complete("k3", 3),
        _complete("k4", 4),
        _labeled("2k2", ("a1", "a2", "b1", "b2"), (("a1", "a2"), ("b1", "b2"))),
        _labeled("4k1", _numbered("v", 4), ()),
        _labeled(
            "p3up2",
            ("a1", "a2", "a3", "b1", "b2"),
            (("a1", "a2"), ("a2", "a3"), ("b1", "b2")),
        ),
        _labeled(
            "k3up2",
            ("a1", "a2", "a3", "b1", "b2"),
            (("a1", "a2"), ("a2", "a3"), ("a1", "a3"), ("b1", "b2")),
        ),
        # K4 minus the pair v1v4.
        _labeled(
            "diamond",
            _numbered("v", 4),
            (("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v2", "v4"), ("v3", "v4")),
        ),
        _hole("codomino", CODOMINO_CHORDS),
        _hole(
            "codomino1",
            CODOMINO_CHORDS
            + (
                ("u", "u1"),
                ("u", "u2"),
                ("u", "v1"),
                ("u", "v2"),
                ("x", "v2"),
                ("x", "u2"),
            ),
            extra_labels=("u", "x"),
            optional=(("x", "u"),),
        ),
        _hole(
            "codomino2",
            CODOMINO_CHORDS
            + (
                ("u", "u1"),
                ("u", "u2"),
                ("u", "v1"),
                ("u", "v3"),
                ("x", "v2"),
                ("x", "u2"),
                ("x", "u"),
            ),
            extra_labels=("u", "x"),
        ),
        _hole(
            "codomino3",
            CODOMINO_CHORDS
            + (
                ("u", "u1"),
                ("u", "u2"),
                ("u", "v1"),
                ("u", "v3"),
                ("x", "v2"),
                ("x", "u2"),
            ),
            extra_labels=("u", "x"),
        ),
        _hole("coa", CODOMINO_CHORDS + (("u1", "v3"),)),
        _hole("x1", (("v1", "v3"), ("u", "v1"), ("u", "u2")), extra_labels=("u",)),
        _hole(
            "x2",
            (("v1", "v3"), ("v3", "u1"), ("u1", "u3"), ("v2", "u"), ("u", "u2")),
            extra_labels=("u",),
        ),
        _labeled(
            "cotwinc5",
            _numbered("v", 6),
            (
                ("v1", "v2"),
                ("v2", "v3"),
                ("v3", "v4"),
                ("v4", "v5"),
                ("v5", "v1"),
                ("v6", "v3"),
                ("v6", "v4"),
                ("v6", "v5"),
            ),
        ),
        _hole(
            "yfam",
            (("u", "v1"), ("u", "v2"), ("u", "u2")),
            extra_labels=("u",),
            optional=(("u", "u1"),),
        ),
        _hole("chi37", (("v1", "v3"),)),
        _co_p3_up2(),
    )


def _build_auxiliary() -> tuple[Pattern, ...]:
    return (_labeled("p2up1", ("a1", "a2", "b1"), (("a1", "a2"),)),)


@cache
def catalog() -> tuple[Pattern, ...]:
    """Every named pattern, each exactly once, in a fixed order."""
    return _build_catalog()


@cache
def _by_name() -> dict[str, Pattern]:
    return {p.name: p for p in catalog() + _build_auxiliary()}


CATALOG_NAMES: tuple[str, ...] = tuple(p.name for p in catalog())
AUXILIARY_NAMES: tuple[str, ...] = tuple(p.name for p in _build_auxiliary())


def get_pattern(name: str) -> Pattern:
    """Look up a catalog pattern, or an auxiliary one such as `p2up1`, by name."""
    try:
        return _by_name()[name.strip().lower()]
    except KeyError:
        raise UnknownPattern(name, CATALOG_NAMES) from None
