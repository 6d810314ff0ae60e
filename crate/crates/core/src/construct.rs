//! The construction pipeline.
//!
//! Starting from a polyhedral seed (face lists of a sphere drawing) the
//! pipeline produces, in order: a triangulation (apex in every face), a
//! quadrangulation (edge midpoints plus a hub per triangle), and an optimal
//! 1-planar graph (both diagonals added inside every quadrangular face, each
//! pair crossing inside its "kite"). Uniform edge subdivisions and the
//! 1-planarization of arbitrary drawings with bounded crossings live here as
//! well.
//!
//! Vertex ids are deterministic: a derived graph keeps the input's vertices
//! `0..n` unchanged and appends new vertices in canonical order (edges sorted
//! ascending, then faces by index).

use crate::embed::{edge_key, CrossingDrawing, EmbedError, EmbeddedGraph, KiteMap, VertexTag};
use crate::graph::{Graph, GraphError};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("face {face} has {len} sides, expected a pentagon")]
    NonPentagonalFace { face: usize, len: usize },
    #[error("face {face} has {len} sides, expected a triangle")]
    NonTriangularFace { face: usize, len: usize },
    #[error("face {face} has {len} sides, expected a quadrangle")]
    NonQuadrangularFace { face: usize, len: usize },
    #[error("face {face} repeats a vertex")]
    FaceRepeatsVertex { face: usize },
    #[error("diagonal ({0}, {1}) already present")]
    DiagonalExists(usize, usize),
    #[error("edge ({u}, {v}) carries {count} crossings but only {capacity} sub-edges")]
    SubEdgeOverflow {
        u: usize,
        v: usize,
        count: usize,
        capacity: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// Builds an embedded graph from face boundary walks alone; the edge set is
/// the union of consecutive face-boundary pairs. All vertices are tagged as
/// original seed vertices.
pub fn embedded_from_faces(
    n: usize,
    faces: Vec<Vec<usize>>,
) -> Result<EmbeddedGraph, ConstructError> {
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (fi, face) in faces.iter().enumerate() {
        let mut sorted = face.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(ConstructError::FaceRepeatsVertex { face: fi });
        }
        for i in 0..face.len() {
            let e = edge_key(face[i], face[(i + 1) % face.len()]);
            if seen.insert(e) {
                edges.push(e);
            }
        }
    }
    edges.sort_unstable();
    let emb = EmbeddedGraph {
        graph: Graph::from_edges(n, &edges)?,
        faces,
        tags: vec![VertexTag::DVertex; n],
        outer_face: None,
    };
    emb.validate()?;
    Ok(emb)
}

/// The regular dodecahedron: 20 vertices, 30 edges, 12 pentagonal faces.
///
/// Layout: top pentagon `0..5`, upper ring `5..10` (vertex `5+i` below `i`),
/// lower ring `10..15`, bottom pentagon `15..20`.
pub fn dodecahedron() -> EmbeddedGraph {
    let t = |i: usize| i % 5;
    let u = |i: usize| 5 + i % 5;
    let w = |i: usize| 10 + i % 5;
    let b = |i: usize| 15 + i % 5;
    let mut faces = vec![(0..5).collect::<Vec<_>>()];
    for i in 0..5 {
        faces.push(vec![t(i), t(i + 1), u(i + 1), w(i), u(i)]);
    }
    for i in 0..5 {
        faces.push(vec![w(i), b(i), b(i + 1), w(i + 1), u(i + 1)]);
    }
    faces.push((15..20).collect());
    embedded_from_faces(20, faces).expect("dodecahedron data is fixed")
}

pub fn tetrahedron() -> EmbeddedGraph {
    embedded_from_faces(
        4,
        vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![2, 3, 0]],
    )
    .expect("tetrahedron data is fixed")
}

pub fn cube() -> EmbeddedGraph {
    embedded_from_faces(
        8,
        vec![
            vec![0, 1, 2, 3],
            vec![4, 7, 6, 5],
            vec![0, 4, 5, 1],
            vec![1, 5, 6, 2],
            vec![2, 6, 7, 3],
            vec![3, 7, 4, 0],
        ],
    )
    .expect("cube data is fixed")
}

pub fn octahedron() -> EmbeddedGraph {
    bipyramid(4)
}

/// Two apexes over a k-cycle. `bipyramid(3)` is the triangular bipyramid,
/// `bipyramid(4)` the octahedron. Apexes are `k` and `k + 1`.
pub fn bipyramid(k: usize) -> EmbeddedGraph {
    assert!(k >= 3);
    let mut faces = Vec::new();
    for i in 0..k {
        faces.push(vec![i, (i + 1) % k, k]);
        faces.push(vec![(i + 1) % k, i, k + 1]);
    }
    embedded_from_faces(k + 2, faces).expect("bipyramid data is fixed")
}

/// Apex over a k-cycle (wheel as a polyhedron). The apex is vertex `k`.
pub fn pyramid(k: usize) -> EmbeddedGraph {
    assert!(k >= 3);
    let mut faces = vec![(0..k).rev().collect::<Vec<_>>()];
    for i in 0..k {
        faces.push(vec![i, (i + 1) % k, k]);
    }
    embedded_from_faces(k + 1, faces).expect("pyramid data is fixed")
}

/// Two k-cycles joined by vertical edges; `prism(4)` is the cube.
pub fn prism(k: usize) -> EmbeddedGraph {
    assert!(k >= 3);
    let mut faces = vec![
        (0..k).collect::<Vec<_>>(),
        (k..2 * k).rev().collect::<Vec<_>>(),
    ];
    for i in 0..k {
        let j = (i + 1) % k;
        faces.push(vec![i, i + k, j + k, j]);
    }
    embedded_from_faces(2 * k, faces).expect("prism data is fixed")
}

pub fn icosahedron() -> EmbeddedGraph {
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![0, u(i), u(i + 1)]);
        faces.push(vec![u(i), u(i + 1), l(i)]);
        faces.push(vec![l(i), l(i + 1), u(i + 1)]);
        faces.push(vec![11, l(i + 1), l(i)]);
    }
    embedded_from_faces(12, faces).expect("icosahedron data is fixed")
}

/// Places an apex inside every face and cones it to the face boundary. Apexes
/// get ids `n .. n + f` in face order and the `T_APEX` tag.
pub fn apex_triangulate(emb: &EmbeddedGraph) -> Result<EmbeddedGraph, ConstructError> {
    let n = emb.graph.n();
    let mut edges = emb.graph.edges();
    let mut faces = Vec::new();
    for (fi, face) in emb.faces.iter().enumerate() {
        let mut sorted = face.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(ConstructError::FaceRepeatsVertex { face: fi });
        }
        let apex = n + fi;
        for i in 0..face.len() {
            edges.push((face[i], apex));
            faces.push(vec![face[i], face[(i + 1) % face.len()], apex]);
        }
    }
    let mut tags = emb.tags.clone();
    tags.extend(std::iter::repeat_n(VertexTag::TApex, emb.faces.len()));
    let out = EmbeddedGraph {
        graph: Graph::from_edges(n + emb.faces.len(), &edges)?,
        faces,
        tags,
        outer_face: None,
    };
    out.validate()?;
    Ok(out)
}

/// Wheel-triangulates a pentagonal-faced sphere drawing (checks every face is
/// a pentagon first). For the dodecahedron this yields 32 vertices, 90 edges
/// and 60 triangles.
pub fn triangulate_pentagons(emb: &EmbeddedGraph) -> Result<EmbeddedGraph, ConstructError> {
    for (fi, face) in emb.faces.iter().enumerate() {
        if face.len() != 5 {
            return Err(ConstructError::NonPentagonalFace {
                face: fi,
                len: face.len(),
            });
        }
    }
    apex_triangulate(emb)
}

/// Quadrangulates a triangulated sphere drawing: every edge gains a midpoint
/// vertex, every triangle a hub joined to its three side midpoints. Original
/// edges disappear; each triangle becomes three quadrangles. Midpoints get
/// ids `n .. n + m` in canonical edge order (tag `EDGE_MID`), hubs
/// `n + m .. n + m + f` in face order (tag `FACE_VERTEX`).
pub fn quadrangulate(emb: &EmbeddedGraph) -> Result<EmbeddedGraph, ConstructError> {
    for (fi, face) in emb.faces.iter().enumerate() {
        if face.len() != 3 {
            return Err(ConstructError::NonTriangularFace {
                face: fi,
                len: face.len(),
            });
        }
    }
    let n = emb.graph.n();
    let old_edges = emb.graph.edges();
    let mid: HashMap<(usize, usize), usize> = old_edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, n + i))
        .collect();
    let hub_base = n + old_edges.len();
    let mut edges = Vec::new();
    for (&(u, v), &m) in &mid {
        edges.push((u, m));
        edges.push((m, v));
    }
    let mut faces = Vec::new();
    for (fi, face) in emb.faces.iter().enumerate() {
        let hub = hub_base + fi;
        let (a, b, c) = (face[0], face[1], face[2]);
        let mab = mid[&edge_key(a, b)];
        let mbc = mid[&edge_key(b, c)];
        let mca = mid[&edge_key(c, a)];
        edges.push((hub, mab));
        edges.push((hub, mbc));
        edges.push((hub, mca));
        faces.push(vec![a, mab, hub, mca]);
        faces.push(vec![b, mbc, hub, mab]);
        faces.push(vec![c, mca, hub, mbc]);
    }
    edges.sort_unstable_by_key(|&(u, v)| (u.min(v), u.max(v)));
    let mut tags = emb.tags.clone();
    tags.extend(std::iter::repeat_n(VertexTag::EdgeMid, old_edges.len()));
    tags.extend(std::iter::repeat_n(VertexTag::FaceVertex, emb.faces.len()));
    let out = EmbeddedGraph {
        graph: Graph::from_edges(n + old_edges.len() + emb.faces.len(), &edges)?,
        faces,
        tags,
        outer_face: None,
    };
    out.validate()?;
    Ok(out)
}

/// Adds both diagonals inside every quadrangular face (skipping the marked
/// outer face, if any), yielding an optimal 1-planar graph when the input is
/// a 3-connected simple quadrangulation of the sphere. Returns the enlarged
/// graph and the kite structure mapping each diagonal to its crossing partner
/// and enclosing quadrangle.
pub fn add_kite_diagonals(emb: &EmbeddedGraph) -> Result<(Graph, KiteMap), ConstructError> {
    let mut edges = emb.graph.edges();
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let mut kites = KiteMap::new();
    for (fi, face) in emb.faces.iter().enumerate() {
        if Some(fi) == emb.outer_face {
            continue;
        }
        if face.len() != 4 {
            return Err(ConstructError::NonQuadrangularFace {
                face: fi,
                len: face.len(),
            });
        }
        let (a, b, c, d) = (face[0], face[1], face[2], face[3]);
        for (x, y) in [(a, c), (b, d)] {
            let e = edge_key(x, y);
            if !present.insert(e) {
                return Err(ConstructError::DiagonalExists(e.0, e.1));
            }
            edges.push(e);
        }
        kites.insert((a, c), (b, d), [a, b, c, d]);
    }
    edges.sort_unstable();
    let g = Graph::from_edges(emb.graph.n(), &edges)?;
    kites.validate(&g)?;
    Ok((g, kites))
}

/// Replaces every edge by a path with `s` internal vertices. Original vertex
/// ids are preserved; subdivision vertices are appended in canonical edge
/// order, `s` at a time, ordered from the smaller endpoint.
pub fn subdivide_uniform(g: &Graph, s: usize) -> Graph {
    if s == 0 {
        return g.clone();
    }
    let n = g.n();
    let old = g.edges();
    let mut edges = Vec::with_capacity(old.len() * (s + 1));
    for (i, &(u, v)) in old.iter().enumerate() {
        let base = n + i * s;
        edges.push((u, base));
        for j in 0..s - 1 {
            edges.push((base + j, base + j + 1));
        }
        edges.push((base + s - 1, v));
    }
    Graph::from_edges(n + old.len() * s, &edges).expect("subdivision preserves simplicity")
}

/// Result of 1-planarizing a drawing: the subdivided graph plus a certificate
/// listing which sub-edges cross which.
#[derive(Debug, Clone)]
pub struct OnePlanarization {
    pub graph: Graph,
    /// Number of subdivision vertices inserted into every original edge.
    pub subdivisions_per_edge: usize,
    /// Vertices of the input drawing keep ids `0..original_n`.
    pub original_n: usize,
    /// Crossing pairs of sub-edges, canonically ordered.
    pub crossings: Vec<((usize, usize), (usize, usize))>,
}

impl OnePlanarization {
    /// Crossing count per sub-edge, for every sub-edge involved in a crossing.
    pub fn per_sub_edge_counts(&self) -> HashMap<(usize, usize), usize> {
        let mut counts = HashMap::new();
        for &(e, f) in &self.crossings {
            *counts.entry(e).or_insert(0) += 1;
            *counts.entry(f).or_insert(0) += 1;
        }
        counts
    }

    pub fn max_crossings_per_sub_edge(&self) -> usize {
        self.per_sub_edge_counts().values().copied().max().unwrap_or(0)
    }

    /// The drawing is 1-plane when no sub-edge carries two crossings.
    pub fn is_one_plane(&self) -> bool {
        self.max_crossings_per_sub_edge() <= 1
    }
}

/// Subdivides every edge of a drawing uniformly so that each resulting
/// sub-edge carries at most one crossing. With `k` the maximum number of
/// crossings on a single edge, `k - 1` subdivision points are used when `k`
/// is odd and `k` when `k` is even; crossing `i` along an edge lands on
/// sub-edge `i`, which always fits.
pub fn one_planarize(drawing: &CrossingDrawing) -> Result<OnePlanarization, ConstructError> {
    drawing.validate()?;
    let k = drawing.max_crossings_per_edge();
    let s = if k % 2 == 1 { k - 1 } else { k };
    let n = drawing.graph.n();
    let old = drawing.graph.edges();
    let edge_index: HashMap<(usize, usize), usize> =
        old.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    // Sub-edge j of edge i, as a concrete vertex pair in the subdivided graph.
    let sub_edge = |i: usize, j: usize| -> (usize, usize) {
        let (u, v) = old[i];
        let base = n + i * s;
        let a = if j == 0 { u } else { base + j - 1 };
        let b = if j == s { v } else { base + j };
        edge_key(a, b)
    };
    for (&e, list) in &drawing.crossings {
        if list.len() > s + 1 {
            return Err(ConstructError::SubEdgeOverflow {
                u: e.0,
                v: e.1,
                count: list.len(),
                capacity: s + 1,
            });
        }
    }
    let graph = subdivide_uniform(&drawing.graph, s);
    // Pair up crossing events: the j-th occurrence of f in e's list matches
    // the j-th occurrence of e in f's list. Each side contributes its own
    // position, which becomes the sub-edge index.
    let mut crossings = Vec::new();
    let mut ordered: Vec<_> = drawing.crossings.iter().collect();
    ordered.sort_unstable_by_key(|(e, _)| **e);
    for (&e, list) in ordered {
        let ei = edge_index[&e];
        let mut occurrence: HashMap<(usize, usize), usize> = HashMap::new();
        for (pos, &f) in list.iter().enumerate() {
            if f < e {
                continue; // counted from the other side
            }
            let occ = occurrence.entry(f).or_insert(0);
            let fi = edge_index[&f];
            let flist = &drawing.crossings[&f];
            let fpos = flist
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == e)
                .map(|(p, _)| p)
                .nth(*occ)
                .expect("validated drawings have mutual crossing lists");
            *occ += 1;
            let a = sub_edge(ei, pos);
            let b = sub_edge(fi, fpos);
            crossings.push((a.min(b), a.max(b)));
        }
    }
    crossings.sort_unstable();
    Ok(OnePlanarization {
        graph,
        subdivisions_per_edge: s,
        original_n: n,
        crossings,
    })
}

/// The Petersen graph: outer 5-cycle `0..5`, inner vertices `5..10`, spokes
/// `i -- 5+i`, inner edges `5+i -- 5+((i+2) mod 5)`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, 5 + i));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("petersen data is fixed")
}

/// The standard drawing of the Petersen graph with the pentagram drawn inside
/// the outer pentagon: only the five chords cross, two crossings each.
pub fn petersen_two_planar_drawing() -> CrossingDrawing {
    let chord = |i: usize| edge_key(5 + i % 5, 5 + (i + 2) % 5);
    let lists = (0..5)
        .map(|i| {
            // Traversing chord i from inner vertex i, the crossings are with
            // chord i+4 then chord i+1. The canonical traversal starts at the
            // smaller vertex id, which for i >= 3 is the far endpoint.
            let from_i = vec![chord(i + 4), chord(i + 1)];
            let order = if 5 + i <= 5 + (i + 2) % 5 {
                from_i
            } else {
                from_i.into_iter().rev().collect()
            };
            (chord(i), order)
        })
        .collect();
    CrossingDrawing::new(petersen(), lists)
}

/// A named optimal 1-planar instance produced by the pipeline.
pub struct KiteInstance {
    pub name: String,
    pub quadrangulation: EmbeddedGraph,
    pub graph: Graph,
    pub kites: KiteMap,
}

/// Runs seed -> (optional apex triangulation) -> quadrangulation -> kite
/// diagonals.
pub fn kite_instance(name: &str, seed: &EmbeddedGraph) -> Result<KiteInstance, ConstructError> {
    let all_triangles = seed.faces.iter().all(|f| f.len() == 3);
    let tri = if all_triangles {
        seed.clone()
    } else {
        apex_triangulate(seed)?
    };
    let quadrangulation = quadrangulate(&tri)?;
    let (graph, kites) = add_kite_diagonals(&quadrangulation)?;
    Ok(KiteInstance {
        name: name.to_string(),
        quadrangulation,
        graph,
        kites,
    })
}

/// Twenty optimal 1-planar graphs smaller than the dodecahedral pipeline
/// output, for exercising the three-cop strategy end to end.
pub fn kite_corpus() -> Vec<KiteInstance> {
    let mut out = Vec::new();
    let mut push = |name: &str, seed: EmbeddedGraph| {
        out.push(kite_instance(name, &seed).expect("corpus seeds are fixed"));
    };
    push("tetrahedron", tetrahedron());
    for k in [3, 5, 6, 7, 8, 9, 10, 11, 12, 13] {
        push(&format!("bipyramid-{k}"), bipyramid(k));
    }
    push("octahedron", octahedron());
    push("icosahedron", icosahedron());
    push("tetrahedron-retriangulated", apex_triangulate(&tetrahedron()).unwrap());
    push("pyramid-4", pyramid(4));
    push("pyramid-5", pyramid(5));
    push("pyramid-6", pyramid(6));
    push("prism-3", prism(3));
    push("prism-5", prism(5));
    push("cube", cube());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_bipartite(g: &Graph) -> bool {
        let n = g.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in g.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn girth_at_least_5(g: &Graph) -> bool {
        // No triangles: adjacent vertices share no neighbor. No 4-cycles: two
        // vertices share at most one neighbor.
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let common = g
                    .neighbors(u)
                    .iter()
                    .filter(|w| g.neighbors(v).contains(w))
                    .count();
                if g.has_edge(u, v) && common > 0 {
                    return false;
                }
                if common > 1 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn dodecahedron_shape() {
        let d = dodecahedron();
        d.validate().unwrap();
        assert_eq!(d.graph.n(), 20);
        assert_eq!(d.graph.m(), 30);
        assert_eq!(d.faces.len(), 12);
        assert!(d.faces.iter().all(|f| f.len() == 5));
        assert!((0..20).all(|v| d.graph.degree(v) == 3));
        assert!(girth_at_least_5(&d.graph));
        assert!(d.graph.connectivity_at_least(3));
        let ecc: Vec<usize> = (0..20)
            .map(|v| *d.graph.bfs_distances(v).iter().max().unwrap())
            .collect();
        assert!(ecc.iter().all(|&e| e == 5), "dodecahedron has diameter 5");
    }

    #[test]
    fn other_seeds_validate() {
        for (emb, n, m, f) in [
            (tetrahedron(), 4, 6, 4),
            (cube(), 8, 12, 6),
            (octahedron(), 6, 12, 8),
            (icosahedron(), 12, 30, 20),
            (prism(3), 6, 9, 5),
            (prism(5), 10, 15, 7),
            (pyramid(4), 5, 8, 5),
            (bipyramid(3), 5, 9, 6),
            (bipyramid(7), 9, 21, 14),
        ] {
            emb.validate().unwrap();
            assert_eq!((emb.graph.n(), emb.graph.m(), emb.faces.len()), (n, m, f));
        }
    }

    #[test]
    fn pentagon_triangulation_counts() {
        let t = triangulate_pentagons(&dodecahedron()).unwrap();
        t.validate().unwrap();
        assert_eq!(t.graph.n(), 32);
        assert_eq!(t.graph.m(), 90);
        assert_eq!(t.faces.len(), 60);
        assert!(t.faces.iter().all(|f| f.len() == 3));
        assert_eq!(t.vertices_tagged(VertexTag::DVertex).len(), 20);
        assert_eq!(t.vertices_tagged(VertexTag::TApex).len(), 12);
        // Apexes have degree 5, original vertices now 3 + 3 faces = 6.
        assert!((20..32).all(|v| t.graph.degree(v) == 5));
        assert!((0..20).all(|v| t.graph.degree(v) == 6));
    }

    #[test]
    fn triangulate_pentagons_rejects_triangles() {
        assert!(matches!(
            triangulate_pentagons(&tetrahedron()),
            Err(ConstructError::NonPentagonalFace { .. })
        ));
    }

    #[test]
    fn quadrangulation_counts_and_structure() {
        let t = triangulate_pentagons(&dodecahedron()).unwrap();
        let q = quadrangulate(&t).unwrap();
        q.validate().unwrap();
        assert_eq!(q.graph.n(), 182);
        assert_eq!(q.graph.m(), 360);
        assert_eq!(q.faces.len(), 180);
        assert!(q.faces.iter().all(|f| f.len() == 4));
        assert!(is_bipartite(&q.graph));
        assert!(q.graph.is_connected());
        assert_eq!(q.vertices_tagged(VertexTag::DVertex).len(), 20);
        assert_eq!(q.vertices_tagged(VertexTag::TApex).len(), 12);
        assert_eq!(q.vertices_tagged(VertexTag::EdgeMid).len(), 90);
        assert_eq!(q.vertices_tagged(VertexTag::FaceVertex).len(), 60);
        // Midpoints have degree 2 + 2 hubs = 4, hubs degree 3, originals keep
        // their triangulation degree.
        for v in q.vertices_tagged(VertexTag::EdgeMid) {
            assert_eq!(q.graph.degree(v), 4);
        }
        for v in q.vertices_tagged(VertexTag::FaceVertex) {
            assert_eq!(q.graph.degree(v), 3);
        }
        assert!(q.graph.connectivity_at_least(3));
    }

    #[test]
    fn quadrangulate_requires_triangles() {
        assert!(matches!(
            quadrangulate(&cube()),
            Err(ConstructError::NonTriangularFace { .. })
        ));
    }

    #[test]
    fn kite_diagonals_reach_optimal_density() {
        let q = quadrangulate(&triangulate_pentagons(&dodecahedron()).unwrap()).unwrap();
        let (qp, kites) = add_kite_diagonals(&q).unwrap();
        assert_eq!(qp.n(), 182);
        assert_eq!(qp.m(), 720);
        assert_eq!(qp.m(), 4 * qp.n() - 8);
        assert_eq!(kites.len(), 180);
        kites.validate(&qp).unwrap();
        // Every face of the quadrangulation is now a kite whose diagonals
        // cross; sides stay crossing-free.
        for face in &q.faces {
            let (a, b, c, d) = (face[0], face[1], face[2], face[3]);
            assert_eq!(kites.crossing_partner(a, c), Some(edge_key(b, d)));
            assert!(!kites.is_crossing_edge(a, b));
        }
    }

    #[test]
    fn outer_face_is_skipped() {
        // A square drawn in the plane: inner face gets its kite, the outer
        // face is left alone, and the result is K4 with one crossing pair.
        let square = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let emb = EmbeddedGraph {
            graph: square,
            faces: vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]],
            tags: vec![VertexTag::DVertex; 4],
            outer_face: Some(1),
        };
        emb.validate().unwrap();
        let (k4, kites) = add_kite_diagonals(&emb).unwrap();
        assert_eq!(k4.m(), 6);
        assert_eq!(kites.len(), 1);
        assert_eq!(kites.crossing_partner(0, 2), Some((1, 3)));

        // Without the marker both copies of the face would collide.
        let emb2 = EmbeddedGraph {
            outer_face: None,
            ..emb
        };
        assert!(matches!(
            add_kite_diagonals(&emb2),
            Err(ConstructError::DiagonalExists(..))
        ));
    }

    #[test]
    fn uniform_subdivision_shapes() {
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let c9 = subdivide_uniform(&c3, 2);
        assert_eq!(c9.n(), 9);
        assert_eq!(c9.m(), 9);
        assert!((0..9).all(|v| c9.degree(v) == 2));
        assert!(c9.is_connected());

        let same = subdivide_uniform(&c3, 0);
        assert_eq!(same.edges(), c3.edges());

        let p2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p5 = subdivide_uniform(&p2, 3);
        assert_eq!(p5.bfs_distances(0)[1], 4);
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.m(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert!(girth_at_least_5(&p));
    }

    #[test]
    fn petersen_drawing_is_two_planar() {
        let d = petersen_two_planar_drawing();
        d.validate().unwrap();
        assert_eq!(d.max_crossings_per_edge(), 2);
        // Exactly the five pentagram chords carry crossings.
        let loaded: Vec<_> = d
            .crossings
            .iter()
            .filter(|(_, l)| !l.is_empty())
            .collect();
        assert_eq!(loaded.len(), 5);
        assert!(loaded.iter().all(|(e, _)| e.0 >= 5 && e.1 >= 5));
    }

    #[test]
    fn one_planarization_of_petersen() {
        let p = one_planarize(&petersen_two_planar_drawing()).unwrap();
        assert_eq!(p.subdivisions_per_edge, 2);
        assert_eq!(p.graph.n(), 40);
        assert_eq!(p.graph.m(), 45);
        assert_eq!(p.original_n, 10);
        assert_eq!(p.crossings.len(), 5);
        assert!(p.is_one_plane());
        // Original vertices keep their degree.
        assert!((0..10).all(|v| p.graph.degree(v) == 3));
        // Crossing pairs are real sub-edges with four distinct endpoints.
        for &((a, b), (c, d)) in &p.crossings {
            assert!(p.graph.has_edge(a, b));
            assert!(p.graph.has_edge(c, d));
            let mut vs = [a, b, c, d];
            vs.sort_unstable();
            assert!(vs.windows(2).all(|w| w[0] != w[1]));
        }
    }

    #[test]
    fn one_planarization_of_crossing_free_drawing_is_identity() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = CrossingDrawing::new(g.clone(), vec![]);
        let p = one_planarize(&d).unwrap();
        assert_eq!(p.subdivisions_per_edge, 0);
        assert_eq!(p.graph.edges(), g.edges());
        assert!(p.crossings.is_empty());
    }

    #[test]
    fn kite_corpus_is_twenty_valid_instances() {
        let corpus = kite_corpus();
        assert_eq!(corpus.len(), 20);
        let mut names = std::collections::HashSet::new();
        for inst in &corpus {
            assert!(names.insert(inst.name.clone()), "duplicate name {}", inst.name);
            assert_eq!(inst.graph.m(), 4 * inst.graph.n() - 8, "{}", inst.name);
            inst.kites.validate(&inst.graph).unwrap();
            assert!(inst.graph.n() < 182, "{} should be smaller than the main instance", inst.name);
            assert!(inst.graph.is_connected());
            assert_eq!(inst.kites.len(), inst.quadrangulation.faces.len());
        }
    }

    #[test]
    fn tetrahedron_pipeline_counts() {
        let inst = kite_instance("t", &tetrahedron()).unwrap();
        assert_eq!(inst.quadrangulation.graph.n(), 14);
        assert_eq!(inst.quadrangulation.graph.m(), 24);
        assert_eq!(inst.graph.m(), 48);
    }
}
