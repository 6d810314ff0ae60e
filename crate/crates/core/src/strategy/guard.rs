//! Path guarding: one cop patrols a shortest path so that the robber can
//! never step onto it (or across one of its crossed edges) without being
//! caught.
//!
//! The invariant maintained after a finite stabilization phase: for every
//! path vertex `v_j`, the cop's distance along the path to `v_j` is at most
//! the robber's graph distance to `v_j`. Writing `g_j` for the robber's
//! distance, the cop's index must lie in the window
//! `[max_j (j - g_j), min_j (j + g_j)]`, which is nonempty exactly because
//! the path is isometric in the robber's playing field. Once inside the
//! window the cop shadows the robber; a robber arriving next to the path —
//! including via an edge that crosses a path edge, since the two endpoints
//! of such an edge are adjacent to both ends of the crossed path edge —
//! finds the cop adjacent and is taken on the following cop half-move.

use crate::embed::{edge_key, KiteMap};
use crate::graph::{Graph, UNREACHABLE};
use crate::strategy::{distances_with_blocked_edges, CopPolicy, PolicyError, Transcript};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("path is empty")]
    EmptyPath,
    #[error("path repeats vertex {0}")]
    RepeatedVertex(usize),
    #[error("path uses missing edge {0}-{1}")]
    MissingEdge(usize, usize),
    #[error("path vertex {0} lies outside the allowed field")]
    OutsideField(usize),
    #[error("path is not isometric in its field: endpoints {u} and {v} are {actual} apart, path length is {expected}")]
    NotIsometric {
        u: usize,
        v: usize,
        actual: usize,
        expected: usize,
    },
    #[error("path edges {0}-{1} and {2}-{3} cross each other")]
    SelfCrossing(usize, usize, usize, usize),
    #[error("paths share interior vertex {0}")]
    SharedInterior(usize),
    #[error("an edge of one path crosses an edge of the other ({0}-{1} x {2}-{3})")]
    MutualCrossing(usize, usize, usize, usize),
    #[error("graph/field size mismatch")]
    FieldSize,
    #[error("no vertices carry the original-vertex tag")]
    NoOriginalVertices,
    #[error("robber stands on the splitting cycle")]
    RobberOnCycle,
    #[error("territory is nonempty but no splitting path through it exists: {0}")]
    NoSplittingPath(String),
}

/// One cop bound to one path. The guard walks to the path, converges into
/// the distance window, then mirrors the robber; it always grabs an
/// adjacent robber.
#[derive(Debug, Clone)]
pub struct PathGuard {
    path: Vec<usize>,
    index_of: Vec<Option<usize>>,
    /// Vertices the robber (and the window BFS) may use.
    field: Vec<bool>,
    /// Edges struck from the window BFS because another guarded path
    /// crosses them.
    blocked: HashSet<(usize, usize)>,
    /// Vertices the window BFS may reach but not travel through: spots on
    /// other guarded walls. Only this path's endpoints may be opaque.
    opaque: Vec<bool>,
}

impl PathGuard {
    /// Validates the path and builds a guard. `field` marks the robber's
    /// playing field (must contain the path); `blocked` lists edges the
    /// robber cannot profitably use (crossings of other guarded paths);
    /// `opaque` marks vertices of other walls, which count as reachable
    /// destinations but never as through-stations. The path must be
    /// isometric within that field and must not cross itself: both are
    /// construction-time errors.
    pub fn new(
        g: &Graph,
        kites: &KiteMap,
        path: &[usize],
        field: Vec<bool>,
        blocked: HashSet<(usize, usize)>,
        opaque: Vec<bool>,
    ) -> Result<PathGuard, StrategyError> {
        if path.is_empty() {
            return Err(StrategyError::EmptyPath);
        }
        if field.len() != g.n() || opaque.len() != g.n() {
            return Err(StrategyError::FieldSize);
        }
        for &v in &path[1..path.len().saturating_sub(1)] {
            if opaque[v] {
                return Err(StrategyError::OutsideField(v));
            }
        }
        let mut index_of = vec![None; g.n()];
        for (i, &v) in path.iter().enumerate() {
            if v >= g.n() || !field[v] {
                return Err(StrategyError::OutsideField(v));
            }
            if index_of[v].is_some() {
                return Err(StrategyError::RepeatedVertex(v));
            }
            index_of[v] = Some(i);
        }
        for w in path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(StrategyError::MissingEdge(w[0], w[1]));
            }
        }
        for (i, a) in path.windows(2).enumerate() {
            if let Some((p, q)) = kites.crossing_partner(a[0], a[1]) {
                if let (Some(_), Some(_)) = (index_of[p], index_of[q]) {
                    // The partner edge's endpoints both lie on this path;
                    // if they are consecutive the path crosses itself.
                    let pi = index_of[p].unwrap();
                    let qi = index_of[q].unwrap();
                    if pi.abs_diff(qi) == 1 && (pi.min(qi)) != i {
                        return Err(StrategyError::SelfCrossing(a[0], a[1], p, q));
                    }
                }
            }
        }
        // Full pairwise isometry: every (i, j) pair must be exactly |i - j|
        // apart in the field. Together with the triangle inequality this
        // keeps the guarding window nonempty for every robber position.
        for (i, &u) in path.iter().enumerate() {
            let dist = distances_with_blocked_edges(g, u, &field, &blocked, &opaque);
            for (j, &v) in path.iter().enumerate().skip(i + 1) {
                if dist[v] != j - i {
                    return Err(StrategyError::NotIsometric {
                        u,
                        v,
                        actual: dist[v],
                        expected: j - i,
                    });
                }
            }
        }
        Ok(PathGuard {
            path: path.to_vec(),
            index_of,
            field,
            blocked,
            opaque,
        })
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    /// Robber distances to each path vertex within the field.
    fn robber_gaps(&self, g: &Graph, robber: usize) -> Vec<usize> {
        let dist =
            distances_with_blocked_edges(g, robber, &self.field, &self.blocked, &self.opaque);
        self.path.iter().map(|&v| dist[v]).collect()
    }

    /// The admissible index window `[lo, hi]` for the given robber vertex.
    /// When the robber is unreachable in the field the whole path is
    /// admissible.
    pub fn window(&self, g: &Graph, robber: usize) -> (usize, usize) {
        let gaps = self.robber_gaps(g, robber);
        let mut lo = 0usize;
        let mut hi = self.path.len() - 1;
        for (j, &gj) in gaps.iter().enumerate() {
            if gj == UNREACHABLE {
                continue;
            }
            lo = lo.max(j.saturating_sub(gj));
            hi = hi.min(j + gj);
        }
        (lo, hi.min(self.path.len() - 1))
    }

    /// Whether the guard has stabilized: it stands on the path inside the
    /// current window, so every approach to the path is covered.
    pub fn guards(&self, g: &Graph, cop: usize, robber: usize) -> bool {
        match self.position_index(cop) {
            Some(i) => {
                let (lo, hi) = self.window(g, robber);
                lo <= i && i <= hi
            }
            None => false,
        }
    }

    fn position_index(&self, cop: usize) -> Option<usize> {
        self.index_of[cop]
    }

    /// Next vertex for the guarding cop. Capture beats everything; before
    /// boarding the guard walks to its nearest path vertex; on the path it
    /// converges into the window and then shadows the robber, drifting
    /// toward the most threatened vertex without leaving the window.
    pub fn step(&mut self, g: &Graph, cop: usize, robber: usize) -> usize {
        if cop == robber {
            return cop;
        }
        if g.has_edge(cop, robber) {
            return robber;
        }
        match self.position_index(cop) {
            None => self.walk_to_path(g, cop),
            Some(i) => {
                let (lo, hi) = self.window(g, robber);
                let next = if i < lo {
                    i + 1
                } else if i > hi {
                    i - 1
                } else {
                    // Drift toward the path vertex the robber presses
                    // hardest (smallest gap minus cop offset), staying
                    // inside the window.
                    let gaps = self.robber_gaps(g, robber);
                    let mut target = i;
                    let mut best = isize::MAX;
                    for (j, &gj) in gaps.iter().enumerate() {
                        if gj == UNREACHABLE {
                            continue;
                        }
                        let score = gj as isize - (j as isize - i as isize).abs();
                        if score < best {
                            best = score;
                            target = j;
                        }
                    }
                    if target > i && i < hi {
                        i + 1
                    } else if target < i && i > lo {
                        i - 1
                    } else {
                        i
                    }
                };
                self.path[next]
            }
        }
    }

    fn walk_to_path(&self, g: &Graph, cop: usize) -> usize {
        // Whole-graph walk: the cop may travel anywhere to reach its post.
        let mut best_target = self.path[0];
        let mut best = (UNREACHABLE, usize::MAX);
        for (j, &v) in self.path.iter().enumerate() {
            let d = g.bfs_distances(v);
            if (d[cop], j) < best {
                best = (d[cop], j);
                best_target = v;
            }
        }
        let d = g.bfs_distances(best_target);
        let mut next = cop;
        for &nb in g.neighbors(cop) {
            if d[nb] != UNREACHABLE && d[nb] + 1 == d[cop] && (next == cop || nb < next) {
                next = nb;
            }
        }
        next
    }
}

/// Single-cop policy wrapping a [`PathGuard`] whose field is the whole
/// graph. Construction fails unless the path is isometric in `g`.
#[derive(Debug)]
pub struct GuardPolicy {
    guard: PathGuard,
}

impl GuardPolicy {
    pub fn new(g: &Graph, kites: &KiteMap, path: &[usize]) -> Result<GuardPolicy, StrategyError> {
        let field = vec![true; g.n()];
        let guard = PathGuard::new(g, kites, path, field, HashSet::new(), vec![false; g.n()])?;
        Ok(GuardPolicy { guard })
    }

    pub fn guard(&self) -> &PathGuard {
        &self.guard
    }
}

impl CopPolicy for GuardPolicy {
    fn cop_count(&self) -> usize {
        1
    }

    fn place(&mut self, _g: &Graph) -> Result<Vec<usize>, PolicyError> {
        Ok(vec![self.guard.path[0]])
    }

    fn step(
        &mut self,
        g: &Graph,
        cops: &[usize],
        robber: usize,
        _history: &Transcript,
    ) -> Result<Vec<usize>, PolicyError> {
        Ok(vec![self.guard.step(g, cops[0], robber)])
    }
}

/// Two cops guarding two paths that together pen the robber in. The second
/// path must be isometric once the first path's interior is removed, and no
/// edge of one path may cross an edge of the other.
#[derive(Debug)]
pub struct TwoPathGuard {
    first: PathGuard,
    second: PathGuard,
}

impl TwoPathGuard {
    pub fn new(
        g: &Graph,
        kites: &KiteMap,
        p1: &[usize],
        p2: &[usize],
    ) -> Result<TwoPathGuard, StrategyError> {
        for (a, b) in path_edge_pairs(p1, p2) {
            if let Some((x, y)) = kites.crossing_partner(a.0, a.1) {
                if edge_key(x, y) == edge_key(b.0, b.1) {
                    return Err(StrategyError::MutualCrossing(a.0, a.1, b.0, b.1));
                }
            }
        }
        if p1.len() > 2 && p2.len() > 2 {
            for &v in &p2[1..p2.len() - 1] {
                if p1[1..p1.len() - 1].contains(&v) {
                    return Err(StrategyError::SharedInterior(v));
                }
            }
        }
        let full = vec![true; g.n()];
        let none = vec![false; g.n()];
        let first = PathGuard::new(g, kites, p1, full, HashSet::new(), none.clone())?;
        let mut field2 = vec![true; g.n()];
        if p1.len() > 2 {
            for &v in &p1[1..p1.len() - 1] {
                field2[v] = false;
            }
        }
        let mut blocked2 = HashSet::new();
        for w in p1.windows(2) {
            if let Some((x, y)) = kites.crossing_partner(w[0], w[1]) {
                blocked2.insert(edge_key(x, y));
            }
        }
        let second = PathGuard::new(g, kites, p2, field2, blocked2, none)?;
        Ok(TwoPathGuard { first, second })
    }

    pub fn guards(&self) -> (&PathGuard, &PathGuard) {
        (&self.first, &self.second)
    }
}

fn path_edge_pairs<'a>(
    p1: &'a [usize],
    p2: &'a [usize],
) -> impl Iterator<Item = ((usize, usize), (usize, usize))> + 'a {
    p1.windows(2).flat_map(move |a| {
        p2.windows(2)
            .map(move |b| ((a[0], a[1]), (b[0], b[1])))
    })
}

impl CopPolicy for TwoPathGuard {
    fn cop_count(&self) -> usize {
        2
    }

    fn place(&mut self, _g: &Graph) -> Result<Vec<usize>, PolicyError> {
        Ok(vec![self.first.path[0], self.second.path[0]])
    }

    fn step(
        &mut self,
        g: &Graph,
        cops: &[usize],
        robber: usize,
        _history: &Transcript,
    ) -> Result<Vec<usize>, PolicyError> {
        Ok(vec![
            self.first.step(g, cops[0], robber),
            self.second.step(g, cops[1], robber),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::{simulate, Outcome, RobberPolicy};

    /// Robber that replays a scripted sequence of placements and moves.
    struct Scripted {
        moves: Vec<usize>,
        next: usize,
    }

    impl Scripted {
        fn new(moves: Vec<usize>) -> Self {
            Scripted { moves, next: 0 }
        }
    }

    impl RobberPolicy for Scripted {
        fn place(&mut self, _g: &Graph, _cops: &[usize]) -> Result<usize, PolicyError> {
            self.next = 1;
            Ok(self.moves[0])
        }
        fn step(
            &mut self,
            _g: &Graph,
            _cops: &[usize],
            robber: usize,
            _h: &Transcript,
        ) -> Result<usize, PolicyError> {
            let v = if self.next < self.moves.len() {
                self.moves[self.next]
            } else {
                robber
            };
            self.next += 1;
            Ok(v)
        }
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rejects_non_isometric_path() {
        // In C6 the walk 0-1-2-3-4 has endpoints at distance 2.
        let g = cycle(6);
        let err = GuardPolicy::new(&g, &KiteMap::new(), &[0, 1, 2, 3, 4]).unwrap_err();
        assert!(matches!(err, StrategyError::NotIsometric { .. }));
    }

    #[test]
    fn rejects_broken_and_repeated_paths() {
        let g = cycle(6);
        assert!(matches!(
            GuardPolicy::new(&g, &KiteMap::new(), &[0, 2]).unwrap_err(),
            StrategyError::MissingEdge(0, 2)
        ));
        assert!(matches!(
            GuardPolicy::new(&g, &KiteMap::new(), &[0, 1, 0]).unwrap_err(),
            StrategyError::RepeatedVertex(0)
        ));
        assert!(matches!(
            GuardPolicy::new(&g, &KiteMap::new(), &[]).unwrap_err(),
            StrategyError::EmptyPath
        ));
    }

    #[test]
    fn diameter_path_confines_robber_to_one_side_of_a_cycle() {
        // Guarding the path 0-1-2-3 of C6 keeps a robber that starts at 4
        // or 5 on that side forever; the window stays between the robber's
        // two approach vertices.
        let g = cycle(6);
        let path = [0usize, 1, 2, 3];
        let mut guard = GuardPolicy::new(&g, &KiteMap::new(), &path).unwrap();
        // Robber paces back and forth between 4 and 5.
        let script: Vec<usize> = std::iter::once(4)
            .chain([5, 4, 5, 4, 5, 4, 5, 4, 5, 4])
            .collect();
        let mut robber = Scripted::new(script);
        let t = simulate(&g, &mut guard, &mut robber, 10).unwrap();
        // Guard never captures a robber that stays off the path, and the
        // robber never reaches the path.
        assert!(matches!(t.outcome, Outcome::Survived { rounds: 10 }));
        for p in &t.positions {
            assert!(path.contains(&p.cops[0]) || p.cops[0] == 0);
            assert!(!path.contains(&p.robber));
        }
    }

    #[test]
    fn robber_stepping_onto_guarded_path_is_captured() {
        // Path graph 0-1-2-3-4, the whole graph guarded: the robber must
        // stand on the path, so it is caught at once after stabilization.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let mut guard = GuardPolicy::new(&g, &KiteMap::new(), &[0, 1, 2, 3, 4]).unwrap();
        let mut robber = Scripted::new(vec![4, 4, 4, 4, 4, 4]);
        let t = simulate(&g, &mut guard, &mut robber, 20).unwrap();
        assert!(matches!(t.outcome, Outcome::Captured { .. }));
    }

    #[test]
    fn window_tracks_robber_on_cycle() {
        let g = cycle(6);
        let guard = GuardPolicy::new(&g, &KiteMap::new(), &[0, 1, 2, 3]).unwrap();
        // Robber at 5: gaps to (0,1,2,3) are (1,2,3,2); index 0 is excluded
        // because the robber threatens vertex 3 within 2 while the cop
        // would need 3 steps, so the window pins the cop to index 1.
        assert_eq!(guard.guard().window(&g, 5), (1, 1));
        // Robber at 4 mirrors this: window pinned to index 2.
        assert_eq!(guard.guard().window(&g, 4), (2, 2));
    }

    #[test]
    fn two_paths_capture_on_a_square() {
        // C4: paths 0-1 and 2-3 cover all four vertices, so the robber has
        // nowhere safe and the pair of guards captures quickly.
        let g = cycle(4);
        let mut pair = TwoPathGuard::new(&g, &KiteMap::new(), &[0, 1], &[2, 3]).unwrap();
        let mut robber = Scripted::new(vec![3, 2, 3, 2, 3, 2, 3]);
        let t = simulate(&g, &mut pair, &mut robber, 20).unwrap();
        assert!(matches!(t.outcome, Outcome::Captured { .. }));
    }

    #[test]
    fn two_path_guard_rejects_crossing_pairs() {
        // Square with both diagonals drawn as a kite: 0-2 crosses 1-3, so
        // guarding those two paths together is rejected.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let mut kites = KiteMap::new();
        kites.insert((0, 2), (1, 3), [0, 1, 2, 3]);
        let err = TwoPathGuard::new(&g, &kites, &[0, 2], &[1, 3]).unwrap_err();
        assert!(matches!(err, StrategyError::MutualCrossing(..)));
    }

    #[test]
    fn robber_approaching_kite_crossing_is_captured() {
        // A kite: guarding diagonal 0-2 of the square 0-1-2-3 with the
        // other diagonal 1-3 crossing it. Both endpoints of the crossing
        // edge are adjacent to both guarded vertices, so a robber heading
        // for the crossing is adjacent to the stabilized guard one move
        // before it can traverse, and is captured. Vertices 4,5 give the
        // robber somewhere to start away from the action.
        let g = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 2),
                (1, 3),
                (1, 4),
                (4, 5),
            ],
        )
        .unwrap();
        let mut kites = KiteMap::new();
        kites.insert((0, 2), (1, 3), [0, 1, 2, 3]);
        let mut guard = GuardPolicy::new(&g, &kites, &[0, 2]).unwrap();
        // Robber walks 5 -> 4 -> 1 -> 3 (the crossing edge).
        let mut robber = Scripted::new(vec![5, 4, 1, 3, 3, 3]);
        let t = simulate(&g, &mut guard, &mut robber, 20).unwrap();
        assert!(matches!(t.outcome, Outcome::Captured { .. }));
        // The capture happens within one round of the robber reaching the
        // far side of the crossing.
        assert!(t.rounds_played() <= 5);
    }

    #[test]
    fn stabilization_is_detectable_and_reached() {
        let g = cycle(8);
        let path = [0usize, 1, 2, 3, 4];
        let mut guard = GuardPolicy::new(&g, &KiteMap::new(), &path).unwrap();
        let mut robber = Scripted::new(vec![6, 6, 6, 6, 6, 6, 6, 6]);
        let t = simulate(&g, &mut guard, &mut robber, 8).unwrap();
        let last = t.final_position();
        assert!(guard.guard().guards(&g, last.cops[0], last.robber));
    }
}
