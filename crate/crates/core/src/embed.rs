//! Graphs carrying drawing data: combinatorial faces, vertex role tags, kite
//! structure for optimal 1-planar graphs, and general crossing lists.

use crate::graph::Graph;
use std::collections::HashMap;
use thiserror::Error;

/// Role a vertex plays in the construction pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexTag {
    /// Vertex of the original polyhedral seed graph.
    DVertex,
    /// Apex added when triangulating a face.
    TApex,
    /// Midpoint vertex subdividing an edge during quadrangulation.
    EdgeMid,
    /// Hub vertex placed inside a face during quadrangulation.
    FaceVertex,
}

impl VertexTag {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexTag::DVertex => "D_VERTEX",
            VertexTag::TApex => "T_APEX",
            VertexTag::EdgeMid => "EDGE_MID",
            VertexTag::FaceVertex => "FACE_VERTEX",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "D_VERTEX" => Some(VertexTag::DVertex),
            "T_APEX" => Some(VertexTag::TApex),
            "EDGE_MID" => Some(VertexTag::EdgeMid),
            "FACE_VERTEX" => Some(VertexTag::FaceVertex),
            _ => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("face {face} lists vertex {v}, which is out of range")]
    FaceVertexOutOfRange { face: usize, v: usize },
    #[error("face {face} is too short ({len} vertices)")]
    FaceTooShort { face: usize, len: usize },
    #[error("face {face} walks ({u}, {v}), which is not an edge")]
    FaceEdgeMissing { face: usize, u: usize, v: usize },
    #[error("edge ({u}, {v}) appears on {count} face sides, expected 2")]
    EdgeFaceCountWrong { u: usize, v: usize, count: usize },
    #[error("tag list has {got} entries for {n} vertices")]
    TagCountWrong { got: usize, n: usize },
    #[error("outer face index {0} out of range")]
    OuterFaceOutOfRange(usize),
    #[error("crossing lists are not symmetric: ({a}, {b}) vs ({c}, {d})")]
    CrossingAsymmetric { a: usize, b: usize, c: usize, d: usize },
    #[error("edge ({u}, {v}) in crossing data is not in the graph")]
    CrossingEdgeMissing { u: usize, v: usize },
    #[error("edges ({a}, {b}) and ({c}, {d}) share an endpoint and cannot cross")]
    CrossingSharesEndpoint { a: usize, b: usize, c: usize, d: usize },
}

/// Canonical form of an undirected edge: endpoints ascending.
pub fn edge_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// A graph together with a rotation-free combinatorial embedding: the list of
/// face boundary cycles of a sphere drawing. Every edge must lie on exactly
/// two face sides. `outer_face`, when set, marks which face plays the role of
/// the unbounded region in a plane drawing; operations that treat inner faces
/// specially (kite insertion) skip it.
#[derive(Debug, Clone)]
pub struct EmbeddedGraph {
    pub graph: Graph,
    pub faces: Vec<Vec<usize>>,
    pub tags: Vec<VertexTag>,
    pub outer_face: Option<usize>,
}

impl EmbeddedGraph {
    /// Checks face/edge consistency: faces are closed walks of real edges,
    /// each edge is covered exactly twice, tags match the vertex count, and
    /// (for connected graphs) the Euler relation n - m + f = 2 holds.
    pub fn validate(&self) -> Result<(), EmbedError> {
        let n = self.graph.n();
        if self.tags.len() != n {
            return Err(EmbedError::TagCountWrong {
                got: self.tags.len(),
                n,
            });
        }
        if let Some(f) = self.outer_face {
            if f >= self.faces.len() {
                return Err(EmbedError::OuterFaceOutOfRange(f));
            }
        }
        let mut cover: HashMap<(usize, usize), usize> = HashMap::new();
        for (fi, face) in self.faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(EmbedError::FaceTooShort {
                    face: fi,
                    len: face.len(),
                });
            }
            for i in 0..face.len() {
                let u = face[i];
                let v = face[(i + 1) % face.len()];
                if u >= n {
                    return Err(EmbedError::FaceVertexOutOfRange { face: fi, v: u });
                }
                if v >= n {
                    return Err(EmbedError::FaceVertexOutOfRange { face: fi, v });
                }
                if !self.graph.has_edge(u, v) {
                    return Err(EmbedError::FaceEdgeMissing { face: fi, u, v });
                }
                *cover.entry(edge_key(u, v)).or_insert(0) += 1;
            }
        }
        for (u, v) in self.graph.edges() {
            let count = cover.get(&(u, v)).copied().unwrap_or(0);
            if count != 2 {
                return Err(EmbedError::EdgeFaceCountWrong { u, v, count });
            }
        }
        debug_assert!(
            !self.graph.is_connected()
                || self.graph.n() + self.faces.len() == self.graph.m() + 2,
            "Euler relation violated"
        );
        Ok(())
    }

    pub fn tag_of(&self, v: usize) -> VertexTag {
        self.tags[v]
    }

    /// Vertices carrying a given tag, ascending.
    pub fn vertices_tagged(&self, tag: VertexTag) -> Vec<usize> {
        (0..self.graph.n())
            .filter(|&v| self.tags[v] == tag)
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }
}

/// Crossing structure of an optimal 1-planar drawing built from a
/// quadrangulation: each pair of crossing diagonals together with the
/// quadrangle (kite) that encloses it.
#[derive(Debug, Clone)]
pub struct KiteMap {
    /// For each diagonal edge, the diagonal it crosses.
    partner: HashMap<(usize, usize), (usize, usize)>,
    /// Kite cycle `[a, c, b, d]` for each canonical crossing pair, keyed by
    /// the lexicographically smaller diagonal. Diagonals are (a, b) and
    /// (c, d).
    kites: HashMap<(usize, usize), [usize; 4]>,
}

impl KiteMap {
    pub fn new() -> Self {
        KiteMap {
            partner: HashMap::new(),
            kites: HashMap::new(),
        }
    }

    /// Registers a crossing pair of diagonals with its enclosing quadrangle
    /// cycle `[a, c, b, d]`, where the diagonals are (a, b) and (c, d).
    pub fn insert(&mut self, diag1: (usize, usize), diag2: (usize, usize), kite: [usize; 4]) {
        let d1 = edge_key(diag1.0, diag1.1);
        let d2 = edge_key(diag2.0, diag2.1);
        self.partner.insert(d1, d2);
        self.partner.insert(d2, d1);
        let key = d1.min(d2);
        self.kites.insert(key, kite);
    }

    /// The diagonal crossed by `e`, if `e` is a crossing edge.
    pub fn crossing_partner(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        self.partner.get(&edge_key(u, v)).copied()
    }

    pub fn is_crossing_edge(&self, u: usize, v: usize) -> bool {
        self.partner.contains_key(&edge_key(u, v))
    }

    /// Kite cycle `[a, c, b, d]` around the crossing pair containing edge
    /// (u, v).
    pub fn kite_of(&self, u: usize, v: usize) -> Option<[usize; 4]> {
        let e = edge_key(u, v);
        let p = *self.partner.get(&e)?;
        Some(self.kites[&e.min(p)])
    }

    /// All crossing pairs, canonically ordered.
    pub fn pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out: Vec<_> = self
            .kites
            .keys()
            .map(|&d1| (d1, self.partner[&d1]))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn len(&self) -> usize {
        self.kites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kites.is_empty()
    }

    /// Consistency check against a host graph: partners are mutual, diagonals
    /// and kite sides are real edges, kite sides are crossing-free, and the
    /// kite cycle matches its diagonals.
    pub fn validate(&self, g: &Graph) -> Result<(), EmbedError> {
        for (&e, &p) in &self.partner {
            if self.partner.get(&p) != Some(&e) {
                return Err(EmbedError::CrossingAsymmetric {
                    a: e.0,
                    b: e.1,
                    c: p.0,
                    d: p.1,
                });
            }
            if !g.has_edge(e.0, e.1) {
                return Err(EmbedError::CrossingEdgeMissing { u: e.0, v: e.1 });
            }
            if e.0 == p.0 || e.0 == p.1 || e.1 == p.0 || e.1 == p.1 {
                return Err(EmbedError::CrossingSharesEndpoint {
                    a: e.0,
                    b: e.1,
                    c: p.0,
                    d: p.1,
                });
            }
        }
        for (&d1, &kite) in &self.kites {
            let d2 = self.partner[&d1];
            let [a, c, b, d] = kite;
            if edge_key(a, b) != d1 && edge_key(a, b) != d2 {
                return Err(EmbedError::CrossingEdgeMissing { u: a, v: b });
            }
            if edge_key(c, d) != d1 && edge_key(c, d) != d2 {
                return Err(EmbedError::CrossingEdgeMissing { u: c, v: d });
            }
            for (x, y) in [(a, c), (c, b), (b, d), (d, a)] {
                if !g.has_edge(x, y) {
                    return Err(EmbedError::CrossingEdgeMissing { u: x, v: y });
                }
                if self.is_crossing_edge(x, y) {
                    return Err(EmbedError::CrossingSharesEndpoint {
                        a: x,
                        b: y,
                        c: x,
                        d: y,
                    });
                }
            }
        }
        Ok(())
    }
}

impl Default for KiteMap {
    fn default() -> Self {
        Self::new()
    }
}

/// One edge paired with the edges that cross it, in traversal order.
pub type EdgeCrossings = ((usize, usize), Vec<(usize, usize)>);

/// A graph drawing given by per-edge crossing lists, in order along each
/// edge. Input format for the 1-planarization step.
#[derive(Debug, Clone)]
pub struct CrossingDrawing {
    pub graph: Graph,
    /// `crossings[&e]` lists the edges crossing `e`, in the order the
    /// crossings occur while traversing `e` from its smaller endpoint.
    pub crossings: HashMap<(usize, usize), Vec<(usize, usize)>>,
}

impl CrossingDrawing {
    pub fn new(graph: Graph, lists: Vec<EdgeCrossings>) -> Self {
        let mut crossings = HashMap::new();
        for (e, xs) in lists {
            let e = edge_key(e.0, e.1);
            let xs: Vec<_> = xs.into_iter().map(|(u, v)| edge_key(u, v)).collect();
            crossings.insert(e, xs);
        }
        CrossingDrawing { graph, crossings }
    }

    pub fn crossings_of(&self, u: usize, v: usize) -> &[(usize, usize)] {
        self.crossings
            .get(&edge_key(u, v))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Largest number of crossings on any single edge.
    pub fn max_crossings_per_edge(&self) -> usize {
        self.crossings.values().map(Vec::len).max().unwrap_or(0)
    }

    /// Checks that every listed edge exists, no edge crosses itself or a
    /// neighbor-sharing edge, and crossing lists are mutual (each pair appears
    /// in both lists exactly once).
    pub fn validate(&self) -> Result<(), EmbedError> {
        for (&e, list) in &self.crossings {
            if !self.graph.has_edge(e.0, e.1) {
                return Err(EmbedError::CrossingEdgeMissing { u: e.0, v: e.1 });
            }
            for &f in list {
                if !self.graph.has_edge(f.0, f.1) {
                    return Err(EmbedError::CrossingEdgeMissing { u: f.0, v: f.1 });
                }
                if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                    return Err(EmbedError::CrossingSharesEndpoint {
                        a: e.0,
                        b: e.1,
                        c: f.0,
                        d: f.1,
                    });
                }
                let back = self
                    .crossings
                    .get(&f)
                    .map(|l| l.iter().filter(|&&x| x == e).count())
                    .unwrap_or(0);
                let fwd = list.iter().filter(|&&x| x == f).count();
                if back != fwd {
                    return Err(EmbedError::CrossingAsymmetric {
                        a: e.0,
                        b: e.1,
                        c: f.0,
                        d: f.1,
                    });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tag_round_trip() {
        for tag in [
            VertexTag::DVertex,
            VertexTag::TApex,
            VertexTag::EdgeMid,
            VertexTag::FaceVertex,
        ] {
            assert_eq!(VertexTag::parse(tag.as_str()), Some(tag));
        }
        assert_eq!(VertexTag::parse("BOGUS"), None);
    }

    #[test]
    fn tetrahedron_embedding_validates() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let emb = EmbeddedGraph {
            graph: g,
            faces: vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
            tags: vec![VertexTag::DVertex; 4],
            outer_face: None,
        };
        emb.validate().unwrap();
        assert_eq!(emb.vertices_tagged(VertexTag::DVertex).len(), 4);
    }

    #[test]
    fn validation_catches_missing_coverage() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let emb = EmbeddedGraph {
            graph: g,
            faces: vec![vec![0, 1, 2]],
            tags: vec![VertexTag::DVertex; 3],
            outer_face: None,
        };
        assert!(matches!(
            emb.validate(),
            Err(EmbedError::EdgeFaceCountWrong { .. })
        ));
    }

    #[test]
    fn kite_map_partner_lookup() {
        // K4 drawn as a square with crossing diagonals.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let mut km = KiteMap::new();
        km.insert((0, 2), (1, 3), [0, 1, 2, 3]);
        assert_eq!(km.crossing_partner(2, 0), Some((1, 3)));
        assert_eq!(km.crossing_partner(3, 1), Some((0, 2)));
        assert_eq!(km.crossing_partner(0, 1), None);
        assert!(km.is_crossing_edge(0, 2));
        assert!(!km.is_crossing_edge(1, 2));
        assert_eq!(km.kite_of(0, 2), Some([0, 1, 2, 3]));
        assert_eq!(km.pairs(), vec![((0, 2), (1, 3))]);
        km.validate(&g).unwrap();
    }

    #[test]
    fn kite_validation_rejects_crossing_sides() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let mut km = KiteMap::new();
        km.insert((0, 2), (1, 3), [0, 1, 2, 3]);
        // Claiming a side edge also crosses something must fail validation.
        km.insert((0, 1), (2, 3), [0, 2, 1, 3]);
        assert!(km.validate(&g).is_err());
    }

    #[test]
    fn crossing_drawing_symmetry() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let d = CrossingDrawing::new(
            g.clone(),
            vec![((0, 2), vec![(1, 3)]), ((1, 3), vec![(0, 2)])],
        );
        d.validate().unwrap();
        assert_eq!(d.max_crossings_per_edge(), 1);
        assert_eq!(d.crossings_of(2, 0), &[(1, 3)]);
        assert_eq!(d.crossings_of(0, 1), &[]);

        let bad = CrossingDrawing::new(g, vec![((0, 2), vec![(1, 3)])]);
        assert!(bad.validate().is_err());
    }
}
