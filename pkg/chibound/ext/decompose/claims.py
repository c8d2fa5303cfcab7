from dataclasses import dataclass, field
from typing import Callable, Iterator

from chibound.ext.decompose.partition import d1d2
from chibound.ext.decompose.triangle import around_triangle, triangles, verify_bi_p3_free
from chibound.ext.oracle import clique_number
from chibound.ext.patterns import contains_induced, get_pattern, is_class_member
from chibound.lib.graph import Graph, VertexSet, Witness, WitnessKind
from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.types import Vertex

__all__ = (
    "CLAIM_D1_NONADJACENT",
    "CLAIM_ONE_SIDE",
    "CLAIM_D1_COMPLEMENT",
    "CLAIM_TRIANGLE",
    "CLAIM_BI_OMEGA",
    "ClaimFailure",
    "ClaimReport",
    "ClaimCheck",
    "CLAIM_CHECKS",
    "check_d1_nonadjacent",
    "check_one_side_edge_free",
    "check_d1_complement_observation",
    "check_triangle_claims",
    "check_bi_omega",
)


CLAIM_D1_NONADJACENT = "d1-nonadjacent"
CLAIM_ONE_SIDE = "one-side-edge-free"
CLAIM_D1_COMPLEMENT = "d1-complement-p3-free"
CLAIM_TRIANGLE = "triangle-structure"
CLAIM_BI_OMEGA = "bi-omega-at-most-2"


@dataclass(frozen=True)
class ClaimFailure(JsonSerializable):
    graph6: str
    witness: Witness

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {"graph6": self.graph6, "witness": self.witness.to_json()}


@dataclass
class ClaimReport(JsonSerializable):
    """
    Tally of one claim over a corpus: how many graphs were looked at, how many
    times the claim's hypotheses were actually met, and every failure found.
    """

    claim_id: str
    graphs: int = 0
    hypothesis_hits: int = 0
    violations: list[ClaimFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "ClaimReport") -> "ClaimReport":
        if other.claim_id != self.claim_id:
            raise ValueError(f"cannot merge {other.claim_id} into {self.claim_id}")
        return ClaimReport(
            claim_id=self.claim_id,
            graphs=self.graphs + other.graphs,
            hypothesis_hits=self.hypothesis_hits + other.hypothesis_hits,
            violations=self.violations + other.violations,
        )

    def hit(self, count: int = 1):
        self.hypothesis_hits += count

    def fail(self, g: Graph, witness: Witness):
        self.violations.append(ClaimFailure(g.to_graph6(), witness))

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {
            "claim": self.claim_id,
            "graphs": self.graphs,
            "hypothesis_hits": self.hypothesis_hits,
            "violations": [v.to_json() for v in self.violations],
        }


ClaimCheck = Callable[[Graph], ClaimReport]


def _nonadjacent_pairs(g: Graph, s: VertexSet) -> Iterator[tuple[Vertex, Vertex]]:
    for a in s:
        for b in s - g.neighbors(a):
            if a < b:
                yield a, b


def check_d1_nonadjacent(g: Graph) -> ClaimReport:
    """
    For nonadjacent `y1, y2` in `D1`, both `N(y1) - N(y2)` and `N(y2) - N(y1)`
    are edge-free. Hypothesis: `g` is (P3∪P2, K4)-free.
    """
    report = ClaimReport(CLAIM_D1_NONADJACENT, graphs=1)
    if not is_class_member(g):
        return report
    d1 = d1d2(g).d1
    for y1, y2 in _nonadjacent_pairs(g, d1):
        report.hit()
        for a, b in ((y1, y2), (y2, y1)):
            side = g.neighbors(a) - g.neighbors(b)
            if edge := g.first_edge_within(side):
                report.fail(g, Witness.of(WitnessKind.EDGE_COUNT, edge, bound=0))
    return report


def _one_side_hypotheses(g: Graph, d1: VertexSet) -> bool:
    if not is_class_member(g):
        return False
    for name in ("k3up2", "codomino", "coa"):
        if contains_induced(g, get_pattern(name)) is not None:
            return False
    return contains_induced(g, get_pattern("p2up1"), within=d1) is None


def check_one_side_edge_free(g: Graph) -> ClaimReport:
    """
    In a (K3∪P2, co-domino, co-A)-free member whose `G[D1]` is (P2∪P1)-free, any
    nonadjacent `v1, v2` in `D1` leave one of `N(v1) - N(v2)`, `N(v2) - N(v1)`
    edge-free.
    """
    report = ClaimReport(CLAIM_ONE_SIDE, graphs=1)
    d1 = d1d2(g).d1
    if not _one_side_hypotheses(g, d1):
        return report
    for v1, v2 in _nonadjacent_pairs(g, d1):
        report.hit()
        e1 = g.first_edge_within(g.neighbors(v1) - g.neighbors(v2))
        e2 = g.first_edge_within(g.neighbors(v2) - g.neighbors(v1))
        if e1 and e2:
            report.fail(g, Witness.of(WitnessKind.EDGE_COUNT, e1 + e2, bound=1))
    return report


def check_d1_complement_observation(g: Graph) -> ClaimReport:
    """If `G[D1]` is (P2∪P1)-free then the complement of `G[D1]` is P3-free."""
    report = ClaimReport(CLAIM_D1_COMPLEMENT, graphs=1)
    if not is_class_member(g):
        return report
    d1 = d1d2(g).d1
    if contains_induced(g, get_pattern("p2up1"), within=d1) is not None:
        return report
    report.hit()
    order = d1.to_list()
    if emb := contains_induced(g.induced(d1).complement(), get_pattern("p3")):
        # The ends of a co-P3 are the P2, the middle is the P1.
        a, mid, b = (order[i] for i in emb.images)
        report.fail(g, Witness.of(WitnessKind.EMBEDDING, (a, b, mid), pattern="p2up1"))
    return report


def check_triangle_claims(g: Graph) -> ClaimReport:
    """
    Around every triangle of a member: each `G[B_i]` is P3-free and each
    `a2Split_i ∪ {v_{i+1}}` is stable.
    """
    report = ClaimReport(CLAIM_TRIANGLE, graphs=1)
    if not is_class_member(g):
        return report
    for t in triangles(g):
        report.hit()
        d = around_triangle(g, t)
        if not (check := verify_bi_p3_free(g, d)):
            report.fail(
                g,
                Witness.of(WitnessKind.INDUCED_PATH, check.witness.images, pattern="p3"),
            )
        for group in d.split_groups():
            if edge := g.first_edge_within(group):
                report.fail(g, Witness.of(WitnessKind.ADJACENT_PAIR, edge))
    return report


def check_bi_omega(g: Graph) -> ClaimReport:
    """In a (K3∪P2)-free member, `ω(G[B_i]) ≤ 2` around every triangle."""
    report = ClaimReport(CLAIM_BI_OMEGA, graphs=1)
    if not is_class_member(g) or contains_induced(g, get_pattern("k3up2")) is not None:
        return report
    for t in triangles(g):
        report.hit()
        d = around_triangle(g, t)
        for i in (1, 2, 3):
            omega = clique_number(g, within=d.b(i))
            if omega.value > 2:
                triangle = list(omega.certificate)[:3]
                report.fail(g, Witness.of(WitnessKind.TRIANGLE, triangle))
    return report


CLAIM_CHECKS: dict[str, ClaimCheck] = {
    CLAIM_D1_NONADJACENT: check_d1_nonadjacent,
    CLAIM_ONE_SIDE: check_one_side_edge_free,
    CLAIM_D1_COMPLEMENT: check_d1_complement_observation,
    CLAIM_TRIANGLE: check_triangle_claims,
    CLAIM_BI_OMEGA: check_bi_omega,
}
