"""Polynomial-time verifiers for k-domination and coalition partitions.

Everything here is a checker, not a search: given a graph, a vertex set or
a partition, and an order k, these functions decide membership in the
defining predicates and, for partitions, produce a certificate recording
per-block evidence.  The certificate is self-verifying: re-running the
checks it names must succeed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .graph import Graph

Mode = Literal["plain", "total"]

SELF_DOMINATING = "self_dominating"
PARTNER = "partner"


class PartitionError(ValueError):
    """The block list is not a partition of the vertex set."""


class EvidenceError(ValueError):
    """Some block is neither self-dominating nor part of any coalition."""

    def __init__(self, block_index: int, message: str):
        super().__init__(message)
        self.block_index = block_index


class TotalInfeasibleError(ValueError):
    """The graph has no total k-dominating set at all (min degree < k)."""


def _check_mode(mode: str) -> None:
    if mode not in ("plain", "total"):
        raise ValueError(f"mode must be 'plain' or 'total', got {mode!r}")


def is_k_dominating(g: Graph, s: Iterable[int], k: int) -> bool:
    """Every vertex outside s has at least k neighbors in s.

    Vacuously true when s covers all vertices.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    sset = frozenset(s)
    return all(
        len(g.neighbor_set(v) & sset) >= k for v in range(g.n) if v not in sset
    )


def is_total_k_dominating(g: Graph, s: Iterable[int], k: int) -> bool:
    """Every vertex of the graph, members of s included, has >= k neighbors in s."""
    if k < 1:
        raise ValueError("k must be >= 1")
    sset = frozenset(s)
    return all(len(g.neighbor_set(v) & sset) >= k for v in range(g.n))


def _dominates(g: Graph, s: frozenset[int], k: int, mode: Mode) -> bool:
    if mode == "total":
        return is_total_k_dominating(g, s, k)
    return is_k_dominating(g, s, k)


def forms_k_coalition(
    g: Graph, a: Iterable[int], b: Iterable[int], k: int, mode: Mode = "plain"
) -> bool:
    """Neither set dominates on its own but their union does."""
    _check_mode(mode)
    aset, bset = frozenset(a), frozenset(b)
    if not aset or not bset:
        raise ValueError("coalition sets must be nonempty")
    if aset & bset:
        raise ValueError("coalition sets must be disjoint")
    if _dominates(g, aset, k, mode) or _dominates(g, bset, k, mode):
        return False
    return _dominates(g, aset | bset, k, mode)


@dataclass(frozen=True)
class VertexPartition:
    """Ordered list of disjoint nonempty blocks covering the vertex set."""

    blocks: tuple[frozenset[int], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "VertexPartition":
        return cls(tuple(frozenset(b) for b in blocks))

    def check(self, n: int) -> None:
        seen: set[int] = set()
        for i, block in enumerate(self.blocks):
            if not block:
                raise PartitionError(f"block {i} is empty")
            if block & seen:
                raise PartitionError(f"block {i} overlaps an earlier block")
            if any(v < 0 or v >= n for v in block):
                raise PartitionError(f"block {i} has a vertex outside 0..{n - 1}")
            seen |= block
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise PartitionError(f"vertices {missing} are in no block")

    def __len__(self) -> int:
        return len(self.blocks)

    def to_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]


@dataclass(frozen=True)
class BlockEvidence:
    kind: str  # SELF_DOMINATING or PARTNER
    partner: int | None = None

    def to_json_dict(self) -> dict:
        if self.kind == SELF_DOMINATING:
            return {"type": SELF_DOMINATING}
        return {"type": PARTNER, "partner": self.partner}


@dataclass(frozen=True)
class CoalitionCertificate:
    """A validated coalition partition plus per-block evidence."""

    partition: VertexPartition
    k: int
    mode: Mode
    evidence: tuple[BlockEvidence, ...]

    @property
    def cardinality(self) -> int:
        return len(self.partition)

    def verify(self, g: Graph) -> bool:
        """Re-run every evidence check from scratch."""
        try:
            self.partition.check(g.n)
        except PartitionError:
            return False
        if len(self.evidence) != len(self.partition):
            return False
        blocks = self.partition.blocks
        for i, ev in enumerate(self.evidence):
            if ev.kind == SELF_DOMINATING:
                if self.mode == "total":
                    return False
                if len(blocks[i]) != self.k or not is_k_dominating(g, blocks[i], self.k):
                    return False
            elif ev.kind == PARTNER:
                j = ev.partner
                if j is None or j == i or not 0 <= j < len(blocks):
                    return False
                if not forms_k_coalition(g, blocks[i], blocks[j], self.k, self.mode):
                    return False
            else:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "mode": self.mode,
            "blocks": self.partition.to_lists(),
            "evidence": [ev.to_json_dict() for ev in self.evidence],
        }


def validate_partition(
    g: Graph,
    partition: VertexPartition | Sequence[Iterable[int]],
    k: int,
    mode: Mode = "plain",
) -> CoalitionCertificate:
    """Assign evidence to every block or fail on the first block without any.

    Partner search is exhaustive over the other blocks and picks the least
    eligible index, so certificates are reproducible.
    """
    _check_mode(mode)
    if k < 1:
        raise ValueError("k must be >= 1")
    if not isinstance(partition, VertexPartition):
        partition = VertexPartition.from_blocks(partition)
    partition.check(g.n)
    if mode == "total" and not is_total_k_dominating(g, range(g.n), k):
        raise TotalInfeasibleError(
            f"no total {k}-dominating set exists (min degree {g.min_degree()} < {k})"
        )
    blocks = partition.blocks
    dominating = [_dominates(g, b, k, mode) for b in blocks]
    evidence: list[BlockEvidence] = []
    for i, block in enumerate(blocks):
        if dominating[i]:
            if mode == "plain" and len(block) == k:
                evidence.append(BlockEvidence(SELF_DOMINATING))
                continue
            kind = "total k-dominating" if mode == "total" else "k-dominating"
            raise EvidenceError(
                i,
                f"block {i} is {kind} so it cannot form a coalition"
                + ("" if mode == "total" else f" and has cardinality != {k}"),
            )
        partner = None
        for j in range(len(blocks)):
            if j != i and not dominating[j] and _dominates(g, blocks[i] | blocks[j], k, mode):
                partner = j
                break
        if partner is None:
            raise EvidenceError(i, f"block {i} has no evidence: no coalition partner")
        evidence.append(BlockEvidence(PARTNER, partner))
    return CoalitionCertificate(partition, k, mode, tuple(evidence))


def coalition_graph(
    g: Graph,
    partition: VertexPartition | Sequence[Iterable[int]],
    k: int,
    mode: Mode = "plain",
) -> Graph:
    """One vertex per block, edges exactly between coalition-forming pairs."""
    _check_mode(mode)
    if not isinstance(partition, VertexPartition):
        partition = VertexPartition.from_blocks(partition)
    partition.check(g.n)
    blocks = partition.blocks
    dominating = [_dominates(g, b, k, mode) for b in blocks]
    edges = []
    for i in range(len(blocks)):
        if dominating[i]:
            continue
        for j in range(i + 1, len(blocks)):
            if dominating[j]:
                continue
            if _dominates(g, blocks[i] | blocks[j], k, mode):
                edges.append((i, j))
    return Graph(len(blocks), edges)
