"""Pure-Python twin of the compiled search kernel.

Maximizes the block count over all set partitions of the vertex set,
walking restricted growth strings in lexicographic order and pruning any
prefix that cannot strictly beat the incumbent.  The compiled kernel in
``_kernel.pyx`` implements exactly the same algorithm; the two must agree
bit for bit on (value, rgs, explored).
"""

from __future__ import annotations

MAXN = 16


def solve(adj: list[int], k: int, total: bool) -> tuple[int, list[int] | None, int]:
    """Search all partitions of 0..n-1 for a maximum coalition partition.

    ``adj`` holds neighborhood bitmasks.  Returns the best block count, the
    restricted growth string of the first maximum found in lexicographic
    order (None when no partition is valid), and the number of complete
    partitions that were tested.
    """
    n = len(adj)
    if n == 0:
        return 0, None, 0
    if n > MAXN:
        raise ValueError(f"kernel supports at most {MAXN} vertices, got {n}")

    best_value = 0
    best_rgs: list[int] | None = None
    explored = 0
    cur = [0] * n
    blocks = [0] * n

    def dominates(s: int) -> bool:
        for v in range(n):
            if (total or not (s >> v) & 1) and (adj[v] & s).bit_count() < k:
                return False
        return True

    def valid(b: int) -> bool:
        dom = [dominates(blocks[i]) for i in range(b)]
        for i in range(b):
            if dom[i] and (total or blocks[i].bit_count() != k):
                return False
        for i in range(b):
            if dom[i]:
                continue
            for j in range(b):
                if j != i and not dom[j] and dominates(blocks[i] | blocks[j]):
                    break
            else:
                return False
        return True

    def search(pos: int, b: int) -> None:
        nonlocal best_value, best_rgs, explored
        if b + (n - pos) <= best_value:
            return
        if pos == n:
            explored += 1
            if valid(b):
                best_value = b
                best_rgs = cur[:]
            return
        bit = 1 << pos
        for t in range(b + 1):
            cur[pos] = t
            if t == b:
                blocks[b] = bit
                search(pos + 1, b + 1)
            else:
                blocks[t] |= bit
                search(pos + 1, b)
                blocks[t] &= ~bit

    search(0, 0)
    return best_value, best_rgs, explored
