//! Convex-position drawings: all vertices on a circle in id order, so two
//! edges cross exactly when their endpoints interleave around the circle.
//! Houses the crossing-count validation, chordless-cycle search, the two
//! structural facts about cycles in outer 1-planar drawings, the one-cop
//! evasion policy built on them, and a seeded corpus generator.

use crate::graph::Graph;
use crate::strategy::{PolicyError, RobberPolicy, Transcript};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OuterError {
    #[error("edge {0}-{1} is crossed {2} times, exceeding the budget k={3}")]
    BudgetExceeded(usize, usize, usize, usize),
    #[error("vertex sequence does not induce a chordless cycle: {0}")]
    NotInducedCycle(String),
    #[error("cycle witness needs at least 4 vertices, got {0}")]
    WitnessTooSmall(usize),
    #[error("vertices {0} and {1} are not an arc pair: another cycle vertex lies strictly between them")]
    NotAnArcPair(usize, usize),
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("policy expects exactly one cop, got {0}")]
    WrongCopCount(usize),
}

/// A graph drawn with vertex `i` at position `i` around a circle; `k` is
/// the declared bound on crossings per edge, verified at construction.
#[derive(Debug, Clone)]
pub struct OuterDrawing {
    pub graph: Graph,
    pub k: usize,
}

/// Whether edges `(a, b)` and `(c, d)` cross in convex position: all four
/// endpoints distinct and exactly one of `c`, `d` strictly inside the arc
/// `(min(a,b), max(a,b))`.
pub fn edges_interleave(e: (usize, usize), f: (usize, usize)) -> bool {
    let (a, b) = (e.0.min(e.1), e.0.max(e.1));
    let (c, d) = f;
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |x: usize| a < x && x < b;
    inside(c) != inside(d)
}

impl OuterDrawing {
    /// Validates the declared crossing budget and wraps the graph.
    pub fn new(graph: Graph, k: usize) -> Result<OuterDrawing, OuterError> {
        let d = OuterDrawing { graph, k };
        if let Some(((u, v), c)) = d
            .per_edge_crossings()
            .into_iter()
            .find(|&(_, c)| c > k)
        {
            return Err(OuterError::BudgetExceeded(u, v, c, k));
        }
        Ok(d)
    }

    /// All interleaving edge pairs, each listed once with the
    /// lexicographically smaller edge first.
    pub fn crossing_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        let edges = self.graph.edges();
        let mut out = Vec::new();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if edges_interleave(e, f) {
                    out.push((e, f));
                }
            }
        }
        out
    }

    /// Crossing count per edge, in canonical edge order.
    pub fn per_edge_crossings(&self) -> Vec<((usize, usize), usize)> {
        let edges = self.graph.edges();
        let mut counts: HashMap<(usize, usize), usize> =
            edges.iter().map(|&e| (e, 0)).collect();
        for (e, f) in self.crossing_pairs() {
            *counts.get_mut(&e).unwrap() += 1;
            *counts.get_mut(&f).unwrap() += 1;
        }
        edges.into_iter().map(|e| (e, counts[&e])).collect()
    }

    /// True when every edge is crossed at most `k` times.
    pub fn is_valid_at(&self, k: usize) -> bool {
        self.per_edge_crossings().iter().all(|&(_, c)| c <= k)
    }
}

/// A chordless cycle of length at least four, in cycle order.
#[derive(Debug, Clone)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
}

impl CycleWitness {
    /// Checks that the sequence really induces a chordless cycle in `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), OuterError> {
        let s = self.vertices.len();
        if s < 4 {
            return Err(OuterError::WitnessTooSmall(s));
        }
        for i in 0..s {
            for j in i + 1..s {
                let (u, v) = (self.vertices[i], self.vertices[j]);
                let consecutive = j == i + 1 || (i == 0 && j == s - 1);
                if consecutive != g.has_edge(u, v) {
                    return Err(OuterError::NotInducedCycle(format!(
                        "vertices {u} and {v}: consecutive={consecutive}, edge={}",
                        g.has_edge(u, v)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Finds a chordless cycle of length >= 4, present exactly when the graph
/// is not chordal. For every vertex `v` and non-adjacent pair of its
/// neighbours, a shortest path between the pair avoiding the rest of
/// `N[v]` closes into a chordless cycle through `v`.
pub fn find_chordless_cycle(g: &Graph) -> Option<CycleWitness> {
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let mut forbidden: Vec<usize> = vec![v];
                forbidden.extend(nbrs.iter().filter(|&&x| x != u && x != w));
                if let Some(path) = g.shortest_path_avoiding(u, w, &forbidden) {
                    // Shortest in the induced subgraph, hence an induced
                    // path; only u and w touch N[v], so v closes it into
                    // a chordless cycle.
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    let witness = CycleWitness { vertices: cycle };
                    debug_assert!(witness.validate(g).is_ok());
                    return Some(witness);
                }
            }
        }
    }
    None
}

/// Report from the two structural checks on one arc pair of a drawn
/// cycle.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub u: usize,
    pub w: usize,
    /// Whether `u` and `w` are adjacent in the graph.
    pub adjacent: bool,
    /// A pair of cycle edges incident to `u` and `w` that cross, if any.
    pub crossing_pair: Option<((usize, usize), (usize, usize))>,
    /// Vertices outside the open arc from `u` to `w` adjacent to at least
    /// one vertex inside it.
    pub attachment_vertices: Vec<usize>,
}

impl StructureReport {
    /// First structural fact: non-adjacent arc endpoints force a crossing
    /// between cycle edges at `u` and at `w`.
    pub fn crossing_fact_holds(&self) -> bool {
        self.adjacent || self.crossing_pair.is_some()
    }

    /// Second structural fact: at most three outside vertices attach into
    /// the open arc.
    pub fn attachment_fact_holds(&self) -> bool {
        self.attachment_vertices.len() <= 3
    }
}

/// Vertices strictly inside the arc from `u` forward (in cyclic id order)
/// to `w`.
pub fn open_arc(n: usize, u: usize, w: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut x = (u + 1) % n;
    while x != w {
        out.push(x);
        x = (x + 1) % n;
    }
    out
}

/// Runs both structural checks for the ordered arc pair `(u, w)` of the
/// drawn cycle `U`: the open arc from `u` to `w` must contain no cycle
/// vertex. Checks that (a) `u`, `w` are adjacent or two cycle edges at
/// `u` and `w` cross, and (b) at most three vertices outside the open
/// arc have neighbours inside it.
pub fn check_structure(
    d: &OuterDrawing,
    witness: &CycleWitness,
    u: usize,
    w: usize,
) -> Result<StructureReport, OuterError> {
    let g = &d.graph;
    let n = g.n();
    let s = witness.vertices.len();
    let pos = |x: usize| witness.vertices.iter().position(|&y| y == x);
    let (ui, wi) = match (pos(u), pos(w)) {
        (Some(a), Some(b)) => (a, b),
        (None, _) => return Err(OuterError::NotOnCycle(u)),
        (_, None) => return Err(OuterError::NotOnCycle(w)),
    };
    let arc = open_arc(n, u, w);
    if arc.iter().any(|x| witness.vertices.contains(x)) {
        return Err(OuterError::NotAnArcPair(u, w));
    }
    let cycle_edges_at = |i: usize| -> [(usize, usize); 2] {
        let prev = witness.vertices[(i + s - 1) % s];
        let next = witness.vertices[(i + 1) % s];
        let v = witness.vertices[i];
        [(v, prev), (v, next)]
    };
    let mut crossing_pair = None;
    'outer: for eu in cycle_edges_at(ui) {
        for ew in cycle_edges_at(wi) {
            if edges_interleave(eu, ew) {
                crossing_pair = Some((eu, ew));
                break 'outer;
            }
        }
    }
    let inside: Vec<bool> = {
        let mut m = vec![false; n];
        for &x in &arc {
            m[x] = true;
        }
        m
    };
    let attachment_vertices: Vec<usize> = (0..n)
        .filter(|&v| !inside[v] && g.neighbors(v).iter().any(|&x| inside[x]))
        .collect();
    Ok(StructureReport {
        u,
        w,
        adjacent: g.has_edge(u, w),
        crossing_pair,
        attachment_vertices,
    })
}

/// All ordered arc pairs of the witness: cycle vertices that are
/// consecutive in the circular layout order.
pub fn arc_pairs(witness: &CycleWitness) -> Vec<(usize, usize)> {
    let mut sorted = witness.vertices.clone();
    sorted.sort_unstable();
    let s = sorted.len();
    (0..s).map(|i| (sorted[i], sorted[(i + 1) % s])).collect()
}

/// One-cop evasion on a drawn chordless cycle. The robber stays on the
/// cycle and maintains two invariants at the end of each of its turns,
/// moving only when one is violated:
///
/// 1. cop on a cycle vertex `u` — robber on a cycle vertex outside
///    `N[u]`;
/// 2. cop strictly inside the arc between two layout-consecutive cycle
///    vertices — robber on a cycle vertex with no neighbour inside that
///    arc.
///
/// Every cop position is on the cycle or in exactly one arc, and either
/// invariant implies the cop is not adjacent, so the robber is never
/// caught; the attachment bound (at most three outside vertices per arc)
/// guarantees a restoring move always exists. A missing restoring move is
/// reported as a claim violation with the position as evidence.
pub struct OuterRobberPolicy {
    on_cycle: Vec<bool>,
    /// The two cycle neighbours of each cycle vertex.
    cycle_neighbors: HashMap<usize, [usize; 2]>,
    /// Cycle vertices in circular layout order.
    sorted_cycle: Vec<usize>,
}

/// Builds the evasion policy after validating the witness.
pub fn robber_policy_outer(
    d: &OuterDrawing,
    witness: &CycleWitness,
) -> Result<OuterRobberPolicy, OuterError> {
    witness.validate(&d.graph)?;
    let n = d.graph.n();
    let s = witness.vertices.len();
    let mut on_cycle = vec![false; n];
    let mut cycle_neighbors = HashMap::new();
    for (i, &v) in witness.vertices.iter().enumerate() {
        on_cycle[v] = true;
        let prev = witness.vertices[(i + s - 1) % s];
        let next = witness.vertices[(i + 1) % s];
        cycle_neighbors.insert(v, [prev.min(next), prev.max(next)]);
    }
    let mut sorted_cycle = witness.vertices.clone();
    sorted_cycle.sort_unstable();
    Ok(OuterRobberPolicy {
        on_cycle,
        cycle_neighbors,
        sorted_cycle,
    })
}

impl OuterRobberPolicy {
    /// The arc containing an off-cycle cop: the layout-consecutive cycle
    /// pair whose open arc holds it.
    fn arc_of(&self, n: usize, cop: usize) -> Option<(usize, usize)> {
        if self.on_cycle[cop] {
            return None;
        }
        let s = self.sorted_cycle.len();
        (0..s)
            .map(|i| (self.sorted_cycle[i], self.sorted_cycle[(i + 1) % s]))
            .find(|&(u, w)| open_arc(n, u, w).contains(&cop))
    }

    /// Whether both invariants hold for this cop/robber pair.
    fn safe(&self, g: &Graph, cop: usize, robber: usize) -> bool {
        if !self.on_cycle[robber] {
            return false;
        }
        if self.on_cycle[cop] {
            return robber != cop && !g.has_edge(cop, robber);
        }
        let (u, w) = self
            .arc_of(g.n(), cop)
            .expect("an off-cycle cop lies in exactly one arc");
        open_arc(g.n(), u, w)
            .iter()
            .all(|&x| x != robber && !g.has_edge(robber, x))
    }

    fn single_cop(cops: &[usize]) -> Result<usize, PolicyError> {
        match cops {
            [c] => Ok(*c),
            _ => Err(PolicyError::Internal(
                OuterError::WrongCopCount(cops.len()).to_string(),
            )),
        }
    }
}

impl RobberPolicy for OuterRobberPolicy {
    fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<usize, PolicyError> {
        let cop = Self::single_cop(cops)?;
        self.sorted_cycle
            .iter()
            .copied()
            .find(|&r| self.safe(g, cop, r))
            .ok_or_else(|| {
                PolicyError::ClaimViolation(format!(
                    "no safe starting cycle vertex against a cop at {cop}"
                ))
            })
    }

    fn step(
        &mut self,
        g: &Graph,
        cops: &[usize],
        robber: usize,
        _history: &Transcript,
    ) -> Result<usize, PolicyError> {
        let cop = Self::single_cop(cops)?;
        if self.safe(g, cop, robber) {
            return Ok(robber);
        }
        let neighbors = self.cycle_neighbors.get(&robber).ok_or_else(|| {
            PolicyError::Internal(format!("robber at {robber} is off the cycle"))
        })?;
        neighbors
            .iter()
            .copied()
            .find(|&r| self.safe(g, cop, r))
            .ok_or_else(|| {
                PolicyError::ClaimViolation(format!(
                    "no invariant-restoring move from {robber} against a cop at {cop}"
                ))
            })
    }
}

/// Seeded generator for connected drawings valid at one crossing per
/// edge. Half the seeds plant a chordless polygon over a random vertex
/// subset first (its edges never cross each other); random extra edges
/// are then inserted whenever they keep every crossing count at most
/// one, and consecutive-id edges (which never cross anything) stitch the
/// graph connected at the end.
pub fn random_outer_one_planar(n: usize, seed: u64) -> OuterDrawing {
    assert!(n >= 3, "drawings need at least 3 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
    let try_add = |edges: &mut Vec<(usize, usize)>,
                       counts: &mut HashMap<(usize, usize), usize>,
                       u: usize,
                       v: usize|
     -> bool {
        if u == v {
            return false;
        }
        let e = (u.min(v), u.max(v));
        if counts.contains_key(&e) {
            return false;
        }
        let crossed: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&f| edges_interleave(e, f))
            .collect();
        if crossed.len() > 1 || crossed.iter().any(|f| counts[f] > 0) {
            return false;
        }
        for f in &crossed {
            *counts.get_mut(f).unwrap() += 1;
        }
        counts.insert(e, crossed.len());
        edges.push(e);
        true
    };
    if n >= 4 && rng.gen_bool(0.5) {
        let len = rng.gen_range(4..=n.min(8));
        let mut subset: Vec<usize> = (0..n).collect();
        subset.shuffle(&mut rng);
        subset.truncate(len);
        subset.sort_unstable();
        for i in 0..len {
            let (u, v) = (subset[i], subset[(i + 1) % len]);
            try_add(&mut edges, &mut counts, u, v);
        }
    }
    let extra = rng.gen_range(n..3 * n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        try_add(&mut edges, &mut counts, u, v);
    }
    // Stitch components with consecutive-id edges, which cross nothing.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for &(u, v) in &edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        parent[ru] = rv;
    }
    for i in 0..n - 1 {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, i + 1));
        if ri != rj {
            try_add(&mut edges, &mut counts, i, i + 1);
            parent[ri] = rj;
        }
    }
    let graph = Graph::from_edges(n, &edges).expect("generator emits simple edges");
    OuterDrawing::new(graph, 1).expect("generator respects the crossing budget")
}
