//! Hypergraphs and their reduction to rank-2 incidence geometries.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::IncidenceGeometry;
use crate::params::SparsityParams;

/// A hypergraph with ordered vertices and an ordered hyperedge list.
/// Mixed edge sizes are allowed; uniformity is only required where a
/// parameter derivation depends on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<String>,
    /// Vertex index subsets, one per hyperedge, input order preserved.
    edges: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphDoc {
    vertices: Vec<String>,
    edges: Vec<Vec<String>>,
}

impl Hypergraph {
    pub fn from_names(vertices: Vec<String>, edges: &[Vec<String>]) -> Result<Self> {
        let mut index = std::collections::HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::Parse("empty vertex name".into()));
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate vertex name {v:?}")));
            }
        }
        let mut out = Vec::with_capacity(edges.len());
        for edge in edges {
            if edge.is_empty() {
                return Err(Error::Parse("empty hyperedge".into()));
            }
            let mut idx = Vec::with_capacity(edge.len());
            for v in edge {
                let i = *index
                    .get(v)
                    .ok_or_else(|| Error::DanglingReference(v.clone()))?;
                if idx.contains(&i) {
                    return Err(Error::Parse(format!(
                        "vertex {v:?} repeated within a hyperedge"
                    )));
                }
                idx.push(i);
            }
            out.push(idx);
        }
        Ok(Hypergraph {
            vertices,
            edges: out,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: HypergraphDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_names(doc.vertices, &doc.edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    /// The common edge size, or an error for mixed sizes or no edges.
    pub fn uniform_rank(&self) -> Result<usize> {
        let mut sizes = self.edges.iter().map(|e| e.len());
        let first = sizes
            .next()
            .ok_or_else(|| Error::Parse("cannot infer rank of an edgeless hypergraph".into()))?;
        for s in sizes {
            if s != first {
                return Err(Error::MixedEdgeSizes(first, s));
            }
        }
        Ok(first)
    }
}

/// Reduce a hypergraph to its incidence geometry: points are vertices,
/// lines are hyperedges, incidences are memberships.
pub fn hypergraph_to_geometry(h: &Hypergraph) -> IncidenceGeometry {
    // line names must not clash with vertex names
    let prefix = ["e", "edge", "hyperedge"]
        .into_iter()
        .find(|pre| {
            (1..=h.edges.len()).all(|i| !h.vertices.contains(&format!("{pre}{i}")))
        })
        .expect("some prefix is collision-free");
    let lines: Vec<String> = (1..=h.edges.len()).map(|i| format!("{prefix}{i}")).collect();
    let mut incidences = Vec::new();
    for (i, edge) in h.edges.iter().enumerate() {
        for &v in edge {
            incidences.push((h.vertices[v].clone(), lines[i].clone()));
        }
    }
    IncidenceGeometry::from_names(h.vertices.clone(), lines, &incidences)
        .expect("membership incidences are valid")
}

/// Parameters under which geometry sparsity matches (k, l)-sparsity of an
/// r-uniform hypergraph: `(lambda, k, lambda*r - 1, l)`. When `lambda` is
/// omitted, the smallest feasible value is chosen.
pub fn derive_params(k: u32, l: u32, r: usize, lambda: Option<u32>) -> Result<SparsityParams> {
    if r < 1 || k < 1 {
        return Err(Error::Parse(format!("need r >= 1 and k >= 1, got r={r}, k={k}")));
    }
    let feasible = |lam: u32| {
        // k + (lam*r - 1) - lam >= l
        k as i64 + lam as i64 * r as i64 - 1 - lam as i64 >= l as i64
    };
    let lam = match lambda {
        Some(lam) => {
            if lam < 1 {
                return Err(Error::NonPositiveLambda);
            }
            if !feasible(lam) {
                return Err(Error::NoFeasibleLambda { r, k, l });
            }
            lam
        }
        None => {
            if r == 1 {
                // condition reduces to k - 1 >= l, independent of lambda
                if !feasible(1) {
                    return Err(Error::NoFeasibleLambda { r, k, l });
                }
                1
            } else {
                (1..).find(|&lam| feasible(lam)).expect("grows with lambda")
            }
        }
    };
    SparsityParams::new(lam, k, lam * r as u32 - 1, l)
}

/// Direct (k, l)-sparsity check of a hypergraph: every vertex subset
/// spanning at least one edge spans at most `k|V'| - l` of them.
/// Exhaustive; test-scale only.
pub fn hypergraph_is_sparse(h: &Hypergraph, k: u32, l: u32) -> bool {
    let n = h.n_vertices();
    assert!(n <= 20, "exhaustive check is test-scale only");
    for mask in 0u64..(1 << n) {
        let spanned = h
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| mask >> v & 1 == 1))
            .count();
        if spanned == 0 {
            continue;
        }
        let size = mask.count_ones() as i64;
        if spanned as i64 > k as i64 * size - l as i64 {
            return false;
        }
    }
    true
}

/// Direct tightness: sparse with `|E| = k|V| - l`.
pub fn hypergraph_is_tight(h: &Hypergraph, k: u32, l: u32) -> bool {
    hypergraph_is_sparse(h, k, l)
        && h.edges.len() as i64 == k as i64 * h.n_vertices() as i64 - l as i64
}
