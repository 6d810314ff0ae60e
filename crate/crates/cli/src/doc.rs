//! JSON interchange format for graphs, drawings, and tagged embeddings.
//!
//! A `GraphDocument` is the single on-disk shape every subcommand reads and
//! writes: a vertex count, a canonical edge list, and optional layers —
//! face cycles, vertex role tags, crossing records, and an outer-layout
//! marker. Serialization is round-trip stable: parsing a canonical document
//! and re-serializing it reproduces the bytes.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use pursuit_core::construct::KiteInstance;
use pursuit_core::embed::{edge_key, CrossingDrawing, EmbeddedGraph, KiteMap, VertexTag};
use pursuit_core::graph::Graph;

/// One crossing between two edges. `steps[i]` is the zero-based position of
/// this crossing along `pair[i]`, counted while traversing the edge from its
/// smaller endpoint; with at most one crossing per edge every step is 0.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct CrossingRecord {
    pub pair: [(usize, usize); 2],
    pub steps: [usize; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tags: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossings: Option<Vec<CrossingRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outer: Option<bool>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> GraphDocument {
        GraphDocument {
            n: g.n(),
            edges: g.edges(),
            ..Default::default()
        }
    }

    pub fn from_embedded(e: &EmbeddedGraph) -> GraphDocument {
        GraphDocument {
            faces: Some(e.faces.clone()),
            tags: Some(e.tags.iter().map(|t| t.as_str().to_string()).collect()),
            ..GraphDocument::from_graph(&e.graph)
        }
    }

    /// Document for a kite-augmented quadrangulation: the augmented edge set
    /// plus the quadrangulation's faces and tags, with one crossing record
    /// per kite.
    pub fn from_kite_instance(inst: &KiteInstance) -> GraphDocument {
        let mut crossings: Vec<CrossingRecord> = inst
            .kites
            .pairs()
            .into_iter()
            .map(|(a, b)| CrossingRecord {
                pair: [a, b],
                steps: [0, 0],
            })
            .collect();
        crossings.sort();
        GraphDocument {
            crossings: Some(crossings),
            faces: Some(inst.quadrangulation.faces.clone()),
            tags: Some(
                inst.quadrangulation
                    .tags
                    .iter()
                    .map(|t| t.as_str().to_string())
                    .collect(),
            ),
            ..GraphDocument::from_graph(&inst.graph)
        }
    }

    /// Document for a drawing with explicit crossing orders.
    pub fn from_crossing_drawing(d: &CrossingDrawing) -> GraphDocument {
        let mut records = Vec::new();
        for (&e, list) in &d.crossings {
            for (pos, &f) in list.iter().enumerate() {
                if f < e {
                    continue; // the (f, e) side emits this record
                }
                // This is occurrence #k of f in e's list; pair it with
                // occurrence #k of e in f's list.
                let occ = list[..pos].iter().filter(|&&x| x == f).count();
                let fpos = d.crossings[&f]
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x == e)
                    .map(|(p, _)| p)
                    .nth(occ)
                    .expect("validated drawings have symmetric crossing lists");
                records.push(CrossingRecord {
                    pair: [e, f],
                    steps: [pos, fpos],
                });
            }
        }
        records.sort();
        GraphDocument {
            crossings: Some(records),
            ..GraphDocument::from_graph(&d.graph)
        }
    }

    pub fn to_graph(&self) -> Result<Graph, String> {
        Graph::from_edges(self.n, &self.edges).map_err(|e| e.to_string())
    }

    pub fn parsed_tags(&self) -> Result<Option<Vec<VertexTag>>, String> {
        let Some(tags) = &self.tags else {
            return Ok(None);
        };
        if tags.len() != self.n {
            return Err(format!("{} tags for {} vertices", tags.len(), self.n));
        }
        tags.iter()
            .map(|s| VertexTag::parse(s).ok_or_else(|| format!("unknown vertex tag {s:?}")))
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }

    /// The embedded view used by the escape policy: the document's edges
    /// *minus* any crossing edges (recovering the plane quadrangulation),
    /// plus tags and faces.
    pub fn to_quad_embedding(&self) -> Result<EmbeddedGraph, String> {
        let tags = self
            .parsed_tags()?
            .ok_or_else(|| "document has no vertex tags".to_string())?;
        let crossing_edges: std::collections::HashSet<(usize, usize)> = self
            .crossings
            .iter()
            .flatten()
            .flat_map(|r| r.pair.iter().map(|&(u, v)| edge_key(u, v)))
            .collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| !crossing_edges.contains(&edge_key(u, v)))
            .collect();
        Ok(EmbeddedGraph {
            graph: Graph::from_edges(self.n, &edges).map_err(|e| e.to_string())?,
            faces: self.faces.clone().unwrap_or_default(),
            tags,
            outer_face: None,
        })
    }

    /// Rebuilds the kite map from crossing records: each record's diagonals
    /// span a quadrangle whose cycle alternates their endpoints.
    pub fn to_kite_map(&self, g: &Graph) -> Result<KiteMap, String> {
        let records = self
            .crossings
            .as_ref()
            .ok_or_else(|| "document has no crossing records".to_string())?;
        let mut kites = KiteMap::new();
        for r in records {
            let (a, c) = r.pair[0];
            let (b, d) = r.pair[1];
            kites.insert((a, c), (b, d), [a, b, c, d]);
        }
        kites.validate(g).map_err(|e| e.to_string())?;
        Ok(kites)
    }

    /// Rebuilds a crossing drawing with per-edge orders from the records'
    /// step positions.
    pub fn to_crossing_drawing(&self) -> Result<CrossingDrawing, String> {
        let graph = self.to_graph()?;
        let mut lists: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        if let Some(records) = &self.crossings {
            // Per edge: (step along the edge, partner edge crossing there).
            type StepSlots = Vec<(usize, (usize, usize))>;
            let mut slots: HashMap<(usize, usize), StepSlots> = HashMap::new();
            for r in records {
                let e = edge_key(r.pair[0].0, r.pair[0].1);
                let f = edge_key(r.pair[1].0, r.pair[1].1);
                slots.entry(e).or_default().push((r.steps[0], f));
                slots.entry(f).or_default().push((r.steps[1], e));
            }
            for (e, mut entries) in slots {
                entries.sort_unstable();
                for w in entries.windows(2) {
                    if w[0].0 == w[1].0 {
                        return Err(format!(
                            "edge ({}, {}) lists two crossings at step {}",
                            e.0, e.1, w[0].0
                        ));
                    }
                }
                lists.insert(e, entries.into_iter().map(|(_, f)| f).collect());
            }
        }
        Ok(CrossingDrawing {
            graph,
            crossings: lists,
        })
    }

    /// Sorts edges, faces, and crossing records into canonical order so that
    /// serialization is stable.
    pub fn canonicalize(&mut self) {
        self.edges = self
            .edges
            .iter()
            .map(|&(u, v)| edge_key(u, v))
            .collect();
        self.edges.sort_unstable();
        self.edges.dedup();
        if let Some(crossings) = &mut self.crossings {
            for r in crossings.iter_mut() {
                for side in 0..2 {
                    r.pair[side] = edge_key(r.pair[side].0, r.pair[side].1);
                }
                if r.pair[1] < r.pair[0] {
                    r.pair.swap(0, 1);
                    r.steps.swap(0, 1);
                }
            }
            crossings.sort();
        }
    }

    pub fn to_json(&self) -> String {
        let mut doc = self.clone();
        doc.canonicalize();
        serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<GraphDocument, String> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| format!("invalid graph document: {e}"))?;
        for &(u, v) in &doc.edges {
            if u >= doc.n || v >= doc.n {
                return Err(format!("edge ({u}, {v}) out of range for n={}", doc.n));
            }
        }
        Ok(doc)
    }
}
