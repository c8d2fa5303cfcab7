from dataclasses import dataclass

from chibound.ext.bounds.clique_cover import require_bounds_member
from chibound.ext.generators import GenConfig, random_class_member
from chibound.ext.oracle import clique_number, exact_chromatic
from chibound.ext.patterns import is_bounds_class_member, is_class_member
from chibound.lib.constants import CHI_BOUND_FACTOR, ORDER_BOUND_FACTOR
from chibound.lib.graph import Graph
from chibound.lib.json_serializable import JsonSerializable

__all__ = (
    "CHECK_ORDER",
    "CHECK_CHI",
    "BoundReport",
    "verify_order_bound",
    "verify_chi_bound",
    "complement_bridge_holds",
    "random_bounds_member",
)


CHECK_ORDER = "order"
CHECK_CHI = "chi"


@dataclass(frozen=True)
class BoundReport(JsonSerializable):
    """`value ≤ factor · ω` for one graph, with the slack left over."""

    check: str
    graph6: str
    omega: int
    value: int
    factor: int

    @property
    def limit(self) -> int:
        return self.factor * self.omega

    @property
    def margin(self) -> int:
        return self.limit - self.value

    @property
    def passed(self) -> bool:
        return self.margin >= 0

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {
            "check": self.check,
            "graph6": self.graph6,
            "omega": self.omega,
            "value": self.value,
            "limit": self.limit,
            "margin": self.margin,
            "passed": self.passed,
        }


def verify_order_bound(g: Graph) -> BoundReport:
    require_bounds_member(g)
    omega = clique_number(g).value
    return BoundReport(CHECK_ORDER, g.to_graph6(), omega, g.n, ORDER_BOUND_FACTOR)


def verify_chi_bound(g: Graph) -> BoundReport:
    """χ is taken from exact search."""
    require_bounds_member(g)
    omega = clique_number(g).value
    chi = exact_chromatic(g).value
    return BoundReport(CHECK_CHI, g.to_graph6(), omega, chi, CHI_BOUND_FACTOR)


def complement_bridge_holds(g: Graph) -> bool:
    """`g` is (4K1, co-(P3∪P2))-free exactly when its complement is (K4, P3∪P2)-free."""
    return bool(is_bounds_class_member(g)) == bool(is_class_member(g.complement()))


def random_bounds_member(cfg: GenConfig) -> Graph:
    """The complement of a random (P3∪P2, K4)-free graph."""
    return random_class_member(cfg).complement()
