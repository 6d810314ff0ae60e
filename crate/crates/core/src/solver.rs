//! Exact retrograde solver for the k-cop pursuit game.
//!
//! Rules: k cops pick a placement (sharing a vertex is allowed), the robber
//! picks a vertex, then the sides alternate half-moves with the cops first.
//! In a cop half-move every cop simultaneously stays put or crosses one edge;
//! the robber does the same alone. The cops win when a cop stands on the
//! robber's vertex.
//!
//! The solver labels the full state space (cop multiset, robber vertex, side
//! to move) backwards from the capture states. Cop-to-move states become
//! cop-wins as soon as one successor is a cop-win; robber-to-move states
//! become cop-wins once *all* successors are, tracked with a per-state
//! countdown. Processing the labels in breadth-first layers makes the layer
//! index the optimal capture time in half-moves: cops minimize it, the robber
//! maximizes it. Everything never labelled is a robber win.
//!
//! States are dense indices: cop multisets are ranked combinatorially
//! (combinations with repetition), and the robber vertex is the major axis so
//! the hot inner loop probes a contiguous per-robber window.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Turn {
    Cops,
    Robber,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    CopWin,
    RobberWin,
}

/// Resource limits checked before allocation.
#[derive(Debug, Clone)]
pub struct SolveBudget {
    pub max_states: u64,
    pub max_bytes: u64,
}

impl Default for SolveBudget {
    /// 5e8 states / 8 GiB, unless the `PURSUIT_BUDGET_STATES` environment
    /// variable overrides the state cap.
    fn default() -> Self {
        let max_states = std::env::var("PURSUIT_BUDGET_STATES")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(500_000_000);
        SolveBudget {
            max_states,
            max_bytes: 8 << 30,
        }
    }
}

impl SolveBudget {
    pub fn with_max_states(max_states: u64) -> Self {
        SolveBudget {
            max_states,
            ..Default::default()
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("pursuit on a disconnected graph is trivial; solve components separately")]
    Disconnected,
    #[error("at least one cop is required")]
    ZeroCops,
    #[error("state space has {states} states, over the budget of {max_states}")]
    BudgetExceeded { states: u128, max_states: u64 },
    #[error("solver tables need about {bytes} bytes, over the budget of {max_bytes}")]
    MemoryExceeded { bytes: u128, max_bytes: u64 },
    #[error("graph has {n} vertices, too many for the state encoding")]
    TooManyVertices { n: usize },
    #[error("vertex of degree {deg} exceeds the solver's successor counters")]
    DegreeTooLarge { deg: usize },
    #[error("optimal capture times exceed the encoding range")]
    TimeOverflow,
}

/// Ranks sorted k-tuples over `0..n` (multisets) into `0..C(n+k-1, k)`.
///
/// The rank of an ascending tuple `c` is the sum of `C(c[i] + i, i + 1)`,
/// which walks the tuples in colexicographic order.
struct MultisetCodec {
    k: usize,
    /// `tables[i][x] = C(x + i, i + 1)`, so `tables[0]` is the identity.
    tables: Vec<Vec<u32>>,
    /// All tuples in rank order, flattened `k` per entry.
    configs: Vec<u16>,
}

impl MultisetCodec {
    fn new(n: usize, k: usize) -> Self {
        // Pascal recurrence: with T_i[x] = C(x + i, i + 1),
        // T_i[x] = T_i[x - 1] + T_{i-1}[x] and T_0[x] = x.
        let mut tables: Vec<Vec<u32>> = Vec::with_capacity(k);
        for i in 0..k {
            let mut t = vec![0u32; n];
            for x in 0..n {
                t[x] = if i == 0 {
                    x as u32
                } else if x == 0 {
                    0
                } else {
                    t[x - 1] + tables[i - 1][x]
                };
            }
            tables.push(t);
        }
        let count = count_multisets(n, k);
        let mut configs = vec![0u16; count * k];
        let mut tuple = vec![0u16; k];
        for _ in 0..count {
            // The formula ranks tuples in colex order, so place each tuple at
            // its computed rank rather than enumeration order.
            let rank: u32 = tuple
                .iter()
                .enumerate()
                .map(|(i, &c)| tables[i][c as usize])
                .sum();
            let rank = rank as usize;
            configs[rank * k..rank * k + k].copy_from_slice(&tuple);
            // Advance to the next nondecreasing tuple.
            let mut i = k;
            while i > 0 {
                i -= 1;
                if (tuple[i] as usize) < n - 1 {
                    let v = tuple[i] + 1;
                    for slot in tuple.iter_mut().skip(i) {
                        *slot = v;
                    }
                    break;
                }
            }
        }
        let codec = MultisetCodec {
            k,
            tables,
            configs,
        };
        debug_assert!((0..count.min(1000)).all(|r| codec.rank(codec.config(r)) == r));
        codec
    }

    #[inline]
    fn rank(&self, cfg: &[u16]) -> usize {
        let mut r = 0u32;
        for (i, &c) in cfg.iter().enumerate() {
            r += self.tables[i][c as usize];
        }
        r as usize
    }

    #[inline]
    fn config(&self, rank: usize) -> &[u16] {
        &self.configs[rank * self.k..rank * self.k + self.k]
    }
}

fn count_multisets(n: usize, k: usize) -> usize {
    // C(n + k - 1, k) in u128 to survive intermediate products.
    let mut num: u128 = 1;
    for i in 0..k {
        num = num * (n + i) as u128 / (i + 1) as u128;
    }
    num as usize
}

fn count_multisets_u128(n: usize, k: usize) -> u128 {
    let mut num: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul((n + i) as u128) / (i + 1) as u128;
    }
    num
}

/// Fully solved pursuit game on a graph.
pub struct GameTable {
    graph: Graph,
    k: usize,
    nc: usize,
    codec: MultisetCodec,
    labels_c: Vec<u8>,
    labels_r: Vec<u8>,
    times_c: Vec<u16>,
    times_r: Vec<u16>,
    max_time: u16,
}

/// Solves the k-cop game on `g` exactly.
pub fn solve(g: &Graph, k: usize, budget: &SolveBudget) -> Result<GameTable, SolveError> {
    let n = g.n();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if k == 0 {
        return Err(SolveError::ZeroCops);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if n > u16::MAX as usize {
        return Err(SolveError::TooManyVertices { n });
    }
    if let Some(deg) = (0..n).map(|v| g.degree(v)).max() {
        if deg + 1 > u8::MAX as usize {
            return Err(SolveError::DegreeTooLarge { deg });
        }
    }
    let nc_big = count_multisets_u128(n, k);
    let states = nc_big * n as u128 * 2;
    if states > budget.max_states as u128 {
        return Err(SolveError::BudgetExceeded {
            states,
            max_states: budget.max_states,
        });
    }
    let nc = nc_big as usize;
    let ns = nc * n;
    // labels (2 bytes/state-pair) + times (4) + counters (1) + frontier slack
    // (4) + the unranking table.
    let bytes = ns as u128 * 11 + nc_big * k as u128 * 2;
    if bytes > budget.max_bytes as u128 {
        return Err(SolveError::MemoryExceeded {
            bytes,
            max_bytes: budget.max_bytes,
        });
    }

    let codec = MultisetCodec::new(n, k);
    let moves: Vec<Vec<u16>> = (0..n)
        .map(|v| {
            let mut m: Vec<u16> = g.neighbors(v).iter().map(|&x| x as u16).collect();
            m.push(v as u16);
            m.sort_unstable();
            m
        })
        .collect();

    let mut labels_c = vec![0u8; ns];
    let mut labels_r = vec![0u8; ns];
    let mut times_c = vec![u16::MAX; ns];
    let mut times_r = vec![u16::MAX; ns];
    let mut counters = vec![0u8; ns];
    for r in 0..n {
        counters[r * nc..(r + 1) * nc].fill(moves[r].len() as u8);
    }

    let mut frontier: Vec<u32> = Vec::new();
    let mut next: Vec<u32> = Vec::new();
    // Capture states: a cop shares the robber's vertex, either side to move.
    for rank in 0..nc {
        let cfg = codec.config(rank);
        let mut prev = u16::MAX;
        for &c in cfg {
            if c == prev {
                continue;
            }
            prev = c;
            let base = c as usize * nc + rank;
            labels_c[base] = 1;
            labels_r[base] = 1;
            times_c[base] = 0;
            times_r[base] = 0;
            frontier.push((base as u32) << 1);
            frontier.push(((base as u32) << 1) | 1);
        }
    }

    let t2 = codec.tables.get(1).map(|t| t.as_slice()).unwrap_or(&[]);
    let t3 = codec.tables.get(2).map(|t| t.as_slice()).unwrap_or(&[]);
    let mut t: u16 = 0;
    let mut scratch = vec![0u16; k];
    while !frontier.is_empty() {
        if t >= u16::MAX - 1 {
            return Err(SolveError::TimeOverflow);
        }
        let tnext = t + 1;
        for &id in &frontier {
            let base = (id >> 1) as usize;
            let rank = base % nc;
            let r = base / nc;
            if id & 1 == 1 {
                // Robber-to-move state is decided: every joint cop move that
                // reaches this cop multiset makes the matching cop-to-move
                // state a win. Move relations are symmetric, so predecessors
                // are enumerated as the product of per-cop move lists.
                let cfg = codec.config(rank);
                let rbase = r * nc;
                match k {
                    1 => {
                        for &m0 in &moves[cfg[0] as usize] {
                            let p = rbase + m0 as usize;
                            if labels_c[p] == 0 {
                                labels_c[p] = 1;
                                times_c[p] = tnext;
                                next.push((p as u32) << 1);
                            }
                        }
                    }
                    2 => {
                        let l0 = &moves[cfg[0] as usize];
                        let l1 = &moves[cfg[1] as usize];
                        for &m0 in l0 {
                            for &m1 in l1 {
                                let (x, y) = if m0 <= m1 { (m0, m1) } else { (m1, m0) };
                                let p = rbase + x as usize + t2[y as usize] as usize;
                                if labels_c[p] == 0 {
                                    labels_c[p] = 1;
                                    times_c[p] = tnext;
                                    next.push((p as u32) << 1);
                                }
                            }
                        }
                    }
                    3 => {
                        let l0 = &moves[cfg[0] as usize];
                        let l1 = &moves[cfg[1] as usize];
                        let l2 = &moves[cfg[2] as usize];
                        for &m0 in l0 {
                            for &m1 in l1 {
                                let (x, y) = if m0 <= m1 { (m0, m1) } else { (m1, m0) };
                                let xu = x as u32;
                                let t2x = t2[x as usize];
                                let t2y = t2[y as usize];
                                let t3y = t3[y as usize];
                                let pxy = xu + t2y;
                                for &m2 in l2 {
                                    let m2u = m2 as usize;
                                    let rk = if m2 >= y {
                                        pxy + t3[m2u]
                                    } else if m2 >= x {
                                        xu + t2[m2u] + t3y
                                    } else {
                                        m2 as u32 + t2x + t3y
                                    };
                                    let p = rbase + rk as usize;
                                    if labels_c[p] == 0 {
                                        labels_c[p] = 1;
                                        times_c[p] = tnext;
                                        next.push((p as u32) << 1);
                                    }
                                }
                            }
                        }
                    }
                    _ => {
                        // Generic odometer over the k move lists.
                        let mut idx = vec![0usize; k];
                        loop {
                            for (i, slot) in scratch.iter_mut().enumerate() {
                                *slot = moves[cfg[i] as usize][idx[i]];
                            }
                            scratch.sort_unstable();
                            let p = rbase + codec.rank(&scratch);
                            if labels_c[p] == 0 {
                                labels_c[p] = 1;
                                times_c[p] = tnext;
                                next.push((p as u32) << 1);
                            }
                            let mut i = k;
                            let mut done = true;
                            while i > 0 {
                                i -= 1;
                                idx[i] += 1;
                                if idx[i] < moves[cfg[i] as usize].len() {
                                    done = false;
                                    break;
                                }
                                idx[i] = 0;
                            }
                            if done {
                                break;
                            }
                        }
                    }
                }
            } else {
                // Cop-to-move state is decided: robber predecessors with this
                // cop multiset lose one escape option each.
                for &rp in &moves[r] {
                    let p = rp as usize * nc + rank;
                    if labels_r[p] == 0 {
                        let c = &mut counters[p];
                        *c -= 1;
                        if *c == 0 {
                            labels_r[p] = 1;
                            times_r[p] = tnext;
                            next.push(((p as u32) << 1) | 1);
                        }
                    }
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
        t = tnext;
    }

    Ok(GameTable {
        graph: g.clone(),
        k,
        nc,
        codec,
        labels_c,
        labels_r,
        times_c,
        times_r,
        max_time: t.saturating_sub(1),
    })
}

impl GameTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn state_count(&self) -> u64 {
        self.nc as u64 * self.n() as u64 * 2
    }

    /// Longest optimal capture time over all cop-win states, in half-moves.
    pub fn max_capture_time(&self) -> u32 {
        self.max_time as u32
    }

    fn base_of(&self, cops: &[usize], robber: usize) -> usize {
        assert_eq!(cops.len(), self.k, "expected {} cop positions", self.k);
        let mut sorted: Vec<u16> = cops.iter().map(|&c| c as u16).collect();
        sorted.sort_unstable();
        robber * self.nc + self.codec.rank(&sorted)
    }

    /// Game value of a state; cop order in the query is irrelevant.
    pub fn label(&self, cops: &[usize], robber: usize, turn: Turn) -> Label {
        let base = self.base_of(cops, robber);
        let raw = match turn {
            Turn::Cops => self.labels_c[base],
            Turn::Robber => self.labels_r[base],
        };
        if raw == 1 {
            Label::CopWin
        } else {
            Label::RobberWin
        }
    }

    /// Optimal number of half-moves to capture, `None` for robber-win states.
    pub fn capture_time(&self, cops: &[usize], robber: usize, turn: Turn) -> Option<u32> {
        let base = self.base_of(cops, robber);
        let raw = match turn {
            Turn::Cops => self.times_c[base],
            Turn::Robber => self.times_r[base],
        };
        if raw == u16::MAX {
            None
        } else {
            Some(raw as u32)
        }
    }

    /// Lexicographically least cop placement that wins against every robber
    /// reply, or `None` when the robber can always win the placement round.
    pub fn cop_win_placement(&self) -> Option<Vec<usize>> {
        let nc = self.nc;
        let mut all = vec![true; nc];
        for r in 0..self.n() {
            let row = &self.labels_c[r * nc..(r + 1) * nc];
            for (rank, &l) in row.iter().enumerate() {
                if l == 0 {
                    all[rank] = false;
                }
            }
        }
        // Rank order is colex; scan every winning rank to report the
        // lexicographically least tuple.
        let mut best: Option<Vec<usize>> = None;
        for (rank, &ok) in all.iter().enumerate() {
            if !ok {
                continue;
            }
            let cfg: Vec<usize> = self.codec.config(rank).iter().map(|&x| x as usize).collect();
            if best.as_ref().is_none_or(|b| cfg < *b) {
                best = Some(cfg);
            }
        }
        best
    }

    pub fn is_cop_win(&self) -> bool {
        self.cop_win_placement().is_some()
    }

    /// Least robber reply that wins against the given placement, or `None`
    /// when the placement beats every reply.
    pub fn robber_safe_reply(&self, cops: &[usize]) -> Option<usize> {
        (0..self.n()).find(|&r| self.label(cops, r, Turn::Cops) == Label::RobberWin)
    }

    /// All cop configurations reachable in one joint move, deduplicated and
    /// sorted.
    fn joint_moves(&self, cops: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut idx = vec![0usize; self.k];
        loop {
            let mut cfg: Vec<usize> = cops
                .iter()
                .zip(&idx)
                .map(|(&c, &i)| {
                    if i == 0 {
                        c
                    } else {
                        self.graph.neighbors(c)[i - 1]
                    }
                })
                .collect();
            cfg.sort_unstable();
            out.push(cfg);
            let mut i = self.k;
            let mut done = true;
            while i > 0 {
                i -= 1;
                idx[i] += 1;
                if idx[i] <= self.graph.degree(cops[i]) {
                    done = false;
                    break;
                }
                idx[i] = 0;
            }
            if done {
                break;
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Optimal joint cop move from a cop-to-move state: minimizes the
    /// successor capture time (robber-win counts as infinite), breaking ties
    /// toward the lexicographically least configuration.
    pub fn optimal_cop_move(&self, cops: &[usize], robber: usize) -> Vec<usize> {
        let mut best: Option<(u32, Vec<usize>)> = None;
        for cfg in self.joint_moves(cops) {
            let time = self
                .capture_time(&cfg, robber, Turn::Robber)
                .unwrap_or(u32::MAX);
            let better = match &best {
                None => true,
                Some((bt, bc)) => time < *bt || (time == *bt && cfg < *bc),
            };
            if better {
                best = Some((time, cfg));
            }
        }
        best.expect("at least the stay-put move exists").1
    }

    /// Optimal robber move from a robber-to-move state: a robber-win successor
    /// if one exists, otherwise a capture-time maximizer; least vertex id
    /// among the best.
    pub fn optimal_robber_move(&self, cops: &[usize], robber: usize) -> usize {
        let mut options: Vec<usize> = self.graph.neighbors(robber).to_vec();
        options.push(robber);
        options.sort_unstable();
        let mut best: Option<(u64, usize)> = None;
        for &r in &options {
            let score = match self.capture_time(cops, r, Turn::Cops) {
                None => u64::MAX,
                Some(t) => t as u64,
            };
            if best.as_ref().is_none_or(|&(bs, _)| score > bs) {
                best = Some((score, r));
            }
        }
        best.unwrap().1
    }

    /// Robber placement after seeing the cop placement: prefers a robber-win
    /// start, otherwise maximizes the optimal capture time; least id wins
    /// ties.
    pub fn optimal_robber_placement(&self, cops: &[usize]) -> usize {
        let mut best: Option<(u64, usize)> = None;
        for r in 0..self.n() {
            let score = match self.capture_time(cops, r, Turn::Cops) {
                None => u64::MAX,
                Some(t) => t as u64,
            };
            if best.as_ref().is_none_or(|&(bs, _)| score > bs) {
                best = Some((score, r));
            }
        }
        best.unwrap().1
    }

    /// Cop placement optimizing the worst case: a winning placement with the
    /// least worst-case capture time if one exists, otherwise a placement
    /// maximizing the number of losing robber replies. Lexicographic
    /// tie-breaks keep it deterministic.
    pub fn optimal_cop_placement(&self) -> Vec<usize> {
        let nc = self.nc;
        let n = self.n();
        // Per rank: worst time over robber replies (u32::MAX when some reply
        // is robber-win), and the number of cop-win replies.
        let mut worst = vec![0u32; nc];
        let mut wins = vec![0u32; nc];
        for r in 0..n {
            let row = &self.times_c[r * nc..(r + 1) * nc];
            for (rank, &tm) in row.iter().enumerate() {
                if tm == u16::MAX {
                    worst[rank] = u32::MAX;
                } else {
                    wins[rank] += 1;
                    if worst[rank] != u32::MAX {
                        worst[rank] = worst[rank].max(tm as u32);
                    }
                }
            }
        }
        let mut best: Option<(u32, i64, Vec<usize>)> = None;
        for rank in 0..nc {
            let key = (worst[rank], -(wins[rank] as i64));
            let cfg = || {
                self.codec
                    .config(rank)
                    .iter()
                    .map(|&x| x as usize)
                    .collect::<Vec<usize>>()
            };
            let better = match &best {
                None => true,
                Some((bw, bwin, bc)) => {
                    key < (*bw, *bwin) || (key == (*bw, *bwin) && cfg() < *bc)
                }
            };
            if better {
                best = Some((key.0, key.1, cfg()));
            }
        }
        best.unwrap().2
    }
}

/// Smallest number of cops that win on `g`, searched from 1 to `k_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopNumber {
    Exact(usize),
    /// Robber wins even with `k_max` cops.
    ExceedsMax(usize),
}

pub fn cop_number(g: &Graph, k_max: usize, budget: &SolveBudget) -> Result<CopNumber, SolveError> {
    for k in 1..=k_max {
        let table = solve(g, k, budget)?;
        if table.is_cop_win() {
            return Ok(CopNumber::Exact(k));
        }
    }
    Ok(CopNumber::ExceedsMax(k_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn solve1(g: &Graph, k: usize) -> GameTable {
        solve(g, k, &SolveBudget::default()).unwrap()
    }

    #[test]
    fn single_edge_is_one_cop_win() {
        let g = path(2);
        let t = solve1(&g, 1);
        assert!(t.is_cop_win());
        assert_eq!(t.label(&[0], 1, Turn::Cops), Label::CopWin);
        assert_eq!(t.capture_time(&[0], 1, Turn::Cops), Some(1));
        assert_eq!(t.capture_time(&[0], 0, Turn::Cops), Some(0));
        assert_eq!(t.cop_win_placement(), Some(vec![0]));
    }

    #[test]
    fn paths_and_trees_are_one_cop_win() {
        for n in 2..8 {
            assert!(solve1(&path(n), 1).is_cop_win(), "path {n}");
        }
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let t = solve1(&star, 1);
        assert!(t.is_cop_win());
        // From the hub every robber position falls in two half-moves.
        assert!((1..6).all(|r| t.capture_time(&[0], r, Turn::Cops) == Some(1)));
    }

    #[test]
    fn cycles_need_two_cops() {
        for n in 4..=9 {
            let g = cycle(n);
            assert!(!solve1(&g, 1).is_cop_win(), "one cop on C{n}");
            assert!(solve1(&g, 2).is_cop_win(), "two cops on C{n}");
            assert_eq!(
                cop_number(&g, 3, &SolveBudget::default()).unwrap(),
                CopNumber::Exact(2)
            );
        }
        assert_eq!(
            cop_number(&cycle(3), 3, &SolveBudget::default()).unwrap(),
            CopNumber::Exact(1)
        );
    }

    #[test]
    fn petersen_needs_three_cops() {
        let g = crate::construct::petersen();
        assert!(!solve1(&g, 1).is_cop_win());
        assert!(!solve1(&g, 2).is_cop_win());
        assert!(solve1(&g, 3).is_cop_win());
    }

    #[test]
    fn one_cop_win_iff_dismantlable_small() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 300 {
            let n = rng.gen_range(1..=7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            checked += 1;
            let copwin = solve1(&g, 1).is_cop_win();
            let dismantlable = g.dismantling_order().is_some();
            assert_eq!(copwin, dismantlable, "n={n} edges={edges:?}");
        }
    }

    #[test]
    fn cop_order_in_queries_is_irrelevant() {
        let g = cycle(6);
        let t = solve1(&g, 2);
        for r in 0..6 {
            for a in 0..6 {
                for b in 0..6 {
                    assert_eq!(
                        t.label(&[a, b], r, Turn::Cops),
                        t.label(&[b, a], r, Turn::Cops)
                    );
                    assert_eq!(
                        t.capture_time(&[a, b], r, Turn::Robber),
                        t.capture_time(&[b, a], r, Turn::Robber)
                    );
                }
            }
        }
    }

    #[test]
    fn sharing_a_vertex_is_legal() {
        let g = cycle(4);
        let t = solve1(&g, 2);
        // Both cops on vertex 0 is a valid placement; the robber still wins
        // the 4-cycle against a doubled-up pair only if the pair never splits,
        // so this placement must be losing for the robber somewhere else.
        let _ = t.label(&[0, 0], 2, Turn::Cops);
        assert_eq!(t.capture_time(&[0, 0], 0, Turn::Cops), Some(0));
    }

    #[test]
    fn optimal_play_matches_table_times() {
        // Play optimal against optimal and check the move-by-move countdown.
        let g = cycle(7);
        let t = solve1(&g, 2);
        let cops0 = t.optimal_cop_placement();
        let r0 = t.optimal_robber_placement(&cops0);
        let mut cops = cops0;
        let mut robber = r0;
        let mut expect = t.capture_time(&cops, robber, Turn::Cops);
        let mut steps = 0u32;
        assert!(expect.is_some(), "two cops win C7");
        while expect != Some(0) {
            cops = t.optimal_cop_move(&cops, robber);
            if cops.contains(&robber) {
                break;
            }
            let after_cops = t.capture_time(&cops, robber, Turn::Robber).unwrap();
            assert_eq!(after_cops, expect.unwrap() - 1);
            robber = t.optimal_robber_move(&cops, robber);
            let after_robber = t.capture_time(&cops, robber, Turn::Cops).unwrap();
            assert_eq!(after_robber, after_cops - 1);
            expect = Some(after_robber);
            steps += 1;
            assert!(steps < 100, "optimal play must terminate");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = cycle(12);
        let budget = SolveBudget {
            max_states: 10,
            max_bytes: 8 << 30,
        };
        assert!(matches!(
            solve(&g, 2, &budget),
            Err(SolveError::BudgetExceeded { .. })
        ));
        let budget = SolveBudget {
            max_states: 1 << 40,
            max_bytes: 16,
        };
        assert!(matches!(
            solve(&g, 2, &budget),
            Err(SolveError::MemoryExceeded { .. })
        ));
    }

    #[test]
    fn rejects_degenerate_inputs() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            solve(&g, 1, &SolveBudget::default()),
            Err(SolveError::Disconnected)
        ));
        let g = path(3);
        assert!(matches!(
            solve(&g, 0, &SolveBudget::default()),
            Err(SolveError::ZeroCops)
        ));
    }

    #[test]
    fn codec_round_trips() {
        for (n, k) in [(5, 1), (5, 2), (6, 3), (4, 4), (9, 3)] {
            let codec = MultisetCodec::new(n, k);
            let count = count_multisets(n, k);
            assert_eq!(codec.configs.len(), count * k);
            for rank in 0..count {
                let cfg = codec.config(rank).to_vec();
                assert!(cfg.windows(2).all(|w| w[0] <= w[1]));
                assert_eq!(codec.rank(&cfg), rank, "n={n} k={k} cfg={cfg:?}");
            }
        }
    }

    #[test]
    fn four_cops_use_generic_path() {
        let g = cycle(5);
        let t = solve1(&g, 4);
        assert!(t.is_cop_win());
        assert_eq!(t.label(&[0, 1, 2, 3], 4, Turn::Cops), Label::CopWin);
    }
}
