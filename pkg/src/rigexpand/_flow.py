"""Integer max-flow via Dinic's algorithm.

Deterministic for a fixed node numbering and edge insertion order, which the
callers rely on to make orientations reproducible.
"""

from collections import deque


class FlowNetwork:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        """Add u->v with the given capacity; returns the edge id."""
        eid = len(self.to)
        self.head[u].append(eid)
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(eid + 1)
        self.to.append(u)
        self.cap.append(0)
        return eid

    def flow_on(self, eid: int) -> int:
        """Flow pushed through the edge added as `eid` (its reverse residual)."""
        return self.cap[eid ^ 1]

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._bfs_levels(s, t)
            if level[t] < 0:
                return total
            it = [0] * self.n
            while True:
                pushed = self._dfs(s, t, None, level, it)
                if pushed == 0:
                    break
                total += pushed

    def _bfs_levels(self, s: int, t: int) -> list[int]:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _dfs(self, u: int, t: int, limit, level, it) -> int:
        if u == t:
            return limit if limit is not None else 0
        while it[u] < len(self.head[u]):
            eid = self.head[u][it[u]]
            v = self.to[eid]
            if self.cap[eid] > 0 and level[v] == level[u] + 1:
                cap_here = self.cap[eid] if limit is None else min(limit, self.cap[eid])
                pushed = cap_here if v == t else self._dfs(v, t, cap_here, level, it)
                if pushed > 0:
                    self.cap[eid] -= pushed
                    self.cap[eid ^ 1] += pushed
                    return pushed
            it[u] += 1
        level[u] = -1
        return 0
