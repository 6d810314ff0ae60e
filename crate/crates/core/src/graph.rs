//! Compact undirected graphs and the small set of algorithms the rest of the
//! crate is built on.
//!
//! Vertices are `0..n`. Adjacency lists are kept sorted, so neighbor scans are
//! deterministic and `has_edge` is a binary search. Graphs are immutable once
//! constructed; the construction pipeline builds edge lists and goes through
//! [`Graph::from_edges`].

use thiserror::Error;

/// Distance value for vertices a BFS never reached.
pub const UNREACHABLE: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.m())
    }
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Rejects loops,
    /// duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Canonical edge list: pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let d = self.bfs_distances(0);
        d.iter().all(|&x| x != UNREACHABLE)
    }

    /// BFS distances from `src`; `UNREACHABLE` marks other components.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// BFS distances restricted to the induced subgraph on `allowed` vertices.
    /// Returns all-`UNREACHABLE` (including `src`) when `src` is not allowed.
    pub fn bfs_distances_within(&self, src: usize, allowed: &[bool]) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        if !allowed[src] {
            return dist;
        }
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if allowed[v] && dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Sorted list of vertices at distance at most `r` from `v`.
    pub fn closed_ball(&self, v: usize, r: usize) -> Vec<usize> {
        let dist = self.bfs_distances(v);
        (0..self.n()).filter(|&u| dist[u] <= r).collect()
    }

    /// Shortest path from `u` to `v` avoiding `forbidden` vertices, as a
    /// vertex sequence including both endpoints. `None` when no such path
    /// exists or an endpoint is forbidden. Ties break toward lower-numbered
    /// parents, so the result is deterministic.
    pub fn shortest_path_avoiding(
        &self,
        u: usize,
        v: usize,
        forbidden: &[usize],
    ) -> Option<Vec<usize>> {
        let mut allowed = vec![true; self.n()];
        for &f in forbidden {
            allowed[f] = false;
        }
        if !allowed[u] || !allowed[v] {
            return None;
        }
        if u == v {
            return Some(vec![u]);
        }
        let mut parent = vec![usize::MAX; self.n()];
        let mut seen = vec![false; self.n()];
        let mut queue = std::collections::VecDeque::new();
        seen[u] = true;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if allowed[y] && !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    if y == v {
                        let mut path = vec![v];
                        let mut cur = v;
                        while cur != u {
                            cur = parent[cur];
                            path.push(cur);
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Chordality test via maximum cardinality search. On success the second
    /// component is a perfect elimination order (each vertex forms a clique
    /// with its neighbors appearing later in the order).
    pub fn is_chordal(&self) -> (bool, Option<EliminationOrder>) {
        let n = self.n();
        if n == 0 {
            return (true, Some(EliminationOrder { order: Vec::new() }));
        }
        // Maximum cardinality search, producing vertices in reverse
        // elimination order.
        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut mcs_order = Vec::with_capacity(n);
        for _ in 0..n {
            let u = (0..n)
                .filter(|&x| !visited[x])
                .max_by_key(|&x| (weight[x], std::cmp::Reverse(x)))
                .unwrap();
            visited[u] = true;
            mcs_order.push(u);
            for &w in &self.adj[u] {
                if !visited[w] {
                    weight[w] += 1;
                }
            }
        }
        // mcs_order holds vertices last-eliminated-first; elimination order is
        // the reverse.
        let mut position = vec![0usize; n];
        for (i, &v) in mcs_order.iter().enumerate() {
            position[v] = i;
        }
        // Standard verification: for each vertex, its already-visited neighbor
        // set minus the latest such neighbor must be adjacent to that neighbor.
        for (i, &v) in mcs_order.iter().enumerate() {
            let earlier: Vec<usize> = self.adj[v]
                .iter()
                .copied()
                .filter(|&w| position[w] < i)
                .collect();
            if let Some(&pivot) = earlier.iter().max_by_key(|&&w| position[w]) {
                for &w in &earlier {
                    if w != pivot && !self.has_edge(w, pivot) {
                        return (false, None);
                    }
                }
            }
        }
        let mut order = mcs_order;
        order.reverse();
        (true, Some(EliminationOrder { order }))
    }

    /// Greedy dismantling: repeatedly delete a vertex whose closed neighborhood
    /// is contained in another vertex's closed neighborhood (within the graph
    /// that remains). Returns the removal order when the graph dismantles to a
    /// single vertex, `None` otherwise. Dismantlability is independent of
    /// removal choices, so the greedy lowest-id rule is safe and deterministic.
    pub fn dismantling_order(&self) -> Option<DismantlingOrder> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let mut alive = vec![true; n];
        let mut remaining = n;
        let mut order = Vec::new();
        let mut witness = Vec::new();
        while remaining > 1 {
            let mut removed_this_pass = false;
            'outer: for u in 0..n {
                if !alive[u] {
                    continue;
                }
                // Closed neighborhood of u in the remaining graph.
                let nu: Vec<usize> = std::iter::once(u)
                    .chain(self.adj[u].iter().copied())
                    .filter(|&x| alive[x])
                    .collect();
                for v in 0..n {
                    if v == u || !alive[v] {
                        continue;
                    }
                    let dominated = nu.iter().all(|&x| x == v || self.has_edge(v, x));
                    if dominated {
                        alive[u] = false;
                        remaining -= 1;
                        order.push(u);
                        witness.push(v);
                        removed_this_pass = true;
                        continue 'outer;
                    }
                }
            }
            if !removed_this_pass {
                return None;
            }
        }
        let last = (0..n).find(|&v| alive[v]).unwrap();
        Some(DismantlingOrder {
            order,
            witness,
            retained: last,
        })
    }

    /// True when the graph is connected and stays connected after deleting any
    /// set of fewer than `c` vertices. Brute force over small cut candidates;
    /// intended for `c <= 3`.
    pub fn connectivity_at_least(&self, c: usize) -> bool {
        let n = self.n();
        if c == 0 {
            return true;
        }
        if !self.is_connected() || n < c + 1 {
            return false;
        }
        if c == 1 {
            return true;
        }
        let mut removed = vec![false; n];
        self.cut_search(c - 1, 0, &mut removed, n)
    }

    fn cut_search(&self, left: usize, start: usize, removed: &mut [bool], remaining: usize) -> bool {
        if left == 0 {
            return self.connected_avoiding(removed, remaining);
        }
        for v in start..self.n() {
            removed[v] = true;
            if !self.cut_search(left - 1, v + 1, removed, remaining - 1) {
                removed[v] = false;
                return false;
            }
            removed[v] = false;
        }
        true
    }

    fn connected_avoiding(&self, removed: &[bool], remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let start = match (0..self.n()).find(|&v| !removed[v]) {
            Some(v) => v,
            None => return true,
        };
        let mut seen = vec![false; self.n()];
        let mut queue = std::collections::VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !removed[v] && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == remaining
    }
}

/// Order in which a dismantlable graph can be stripped down to one vertex.
/// `witness[i]` is a vertex whose closed neighborhood covered `order[i]`'s at
/// the moment of removal; `retained` is the final surviving vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DismantlingOrder {
    pub order: Vec<usize>,
    pub witness: Vec<usize>,
    pub retained: usize,
}

/// Perfect elimination order certifying chordality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
}

impl EliminationOrder {
    /// Independent check that this is a perfect elimination order for `g`:
    /// when a vertex is eliminated, its not-yet-eliminated neighbors form a
    /// clique.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.order.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        for (i, &v) in self.order.iter().enumerate() {
            let later: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > i)
                .collect();
            for (a, &x) in later.iter().enumerate() {
                for &y in &later[a + 1..] {
                    if !g.has_edge(x, y) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl DismantlingOrder {
    /// Replays the removal sequence and checks every domination step.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.order.len() + 1 != n || self.witness.len() != self.order.len() {
            return false;
        }
        let mut alive = vec![true; n];
        for (i, &u) in self.order.iter().enumerate() {
            let v = self.witness[i];
            if u >= n || v >= n || u == v || !alive[u] || !alive[v] {
                return false;
            }
            let covered = std::iter::once(u)
                .chain(g.neighbors(u).iter().copied())
                .filter(|&x| alive[x])
                .all(|x| x == v || g.has_edge(v, x));
            if !covered {
                return false;
            }
            alive[u] = false;
        }
        alive[self.retained]
    }
}
