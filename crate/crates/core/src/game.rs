//! The mutable pebble-game state: accepted-edge digraph, pebble counts,
//! the two moves, reachability, and the invariant checker.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::IncidenceGeometry;
use crate::multigraph::PebbleMultigraph;
use crate::params::SparsityParams;

/// Game state over a fixed multigraph.
///
/// `orientation[e]` is the source vertex of edge `e` if it has been
/// accepted. `out_edges[v]` keeps accepted out-edges in insertion order,
/// which fixes the DFS exploration order.
pub struct GameState<'a> {
    mg: &'a PebbleMultigraph,
    params: SparsityParams,
    pebbles: Vec<u32>,
    orientation: Vec<Option<usize>>,
    out_edges: Vec<Vec<usize>>,
    processed: Vec<bool>,
}

/// Pebble, span and out counts of a support, per the game's bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportStats {
    pub peb_sum: u64,
    pub span_count: u64,
    pub out_count: u64,
}

/// A certified violating support: recomputable from the geometry alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationWitness {
    pub points: BTreeSet<usize>,
    pub lines: BTreeSet<usize>,
    /// `lambda*|I n (A x B)| - (k1|A| + k2|B| - l)`, always >= 1.
    pub deficit: u64,
}

/// First invariant violation found by [`GameState::check_invariants`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantViolation {
    /// Which lemma invariant failed, 1 through 4.
    pub invariant: u8,
    pub detail: String,
}

impl<'a> GameState<'a> {
    /// Initial state: no accepted edges, `k1` pebbles per point, `k2` per line.
    pub fn init(mg: &'a PebbleMultigraph, params: SparsityParams) -> Self {
        let n = mg.n_vertices();
        let pebbles = (0..n).map(|v| params.capacity(mg.is_point(v))).collect();
        GameState {
            mg,
            params,
            pebbles,
            orientation: vec![None; mg.edges().len()],
            out_edges: vec![Vec::new(); n],
            processed: vec![false; mg.edges().len()],
        }
    }

    pub fn multigraph(&self) -> &PebbleMultigraph {
        self.mg
    }

    pub fn params(&self) -> &SparsityParams {
        &self.params
    }

    pub fn peb(&self, v: usize) -> u32 {
        self.pebbles[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_edges[v].len()
    }

    pub fn total_pebbles(&self) -> u64 {
        self.pebbles.iter().map(|&p| p as u64).sum()
    }

    pub fn is_accepted(&self, e: usize) -> bool {
        self.orientation[e].is_some()
    }

    pub fn is_processed(&self, e: usize) -> bool {
        self.processed[e]
    }

    pub fn mark_processed(&mut self, e: usize) {
        self.processed[e] = true;
    }

    fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let (p, l) = self.mg.endpoints(e);
        if v == p {
            l
        } else {
            p
        }
    }

    /// Target vertex of an accepted edge.
    fn target(&self, e: usize) -> usize {
        self.other_endpoint(e, self.orientation[e].expect("accepted edge"))
    }

    /// Accept edge `e`, removing a pebble from `source` and orienting the
    /// edge away from it. Requires `peb(v) + peb(w) > l` on the endpoints.
    pub fn accept_edge(&mut self, e: usize, source: usize) -> Result<()> {
        if self.orientation[e].is_some() {
            return Err(Error::AlreadyAccepted);
        }
        let (p, l) = self.mg.endpoints(e);
        if self.pebbles[p] as u64 + self.pebbles[l] as u64 <= self.params.l() as u64 {
            return Err(Error::InsufficientPebbles);
        }
        if source != p && source != l {
            return Err(Error::PathNotInD);
        }
        if self.pebbles[source] == 0 {
            return Err(Error::SourceHasNoPebble);
        }
        self.pebbles[source] -= 1;
        self.orientation[e] = Some(source);
        self.out_edges[source].push(e);
        self.processed[e] = true;
        Ok(())
    }

    /// Depth-first search for an oriented path from `from` to some vertex
    /// `u` with a pebble and `u` not among `excluded`. Out-edges are
    /// explored in insertion order; each vertex is visited at most once.
    /// The path is returned as a list of edge ids; it is empty when `from`
    /// itself qualifies.
    pub fn find_pebble_path(&self, from: usize, excluded: (usize, usize)) -> Option<Vec<usize>> {
        let qualifies =
            |u: usize| self.pebbles[u] > 0 && u != excluded.0 && u != excluded.1;
        if qualifies(from) {
            return Some(Vec::new());
        }
        let n = self.mg.n_vertices();
        let mut visited = vec![false; n];
        let mut parent_edge = vec![usize::MAX; n];
        visited[from] = true;
        // (vertex, next out-edge position) frames
        let mut stack = vec![(from, 0usize)];
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i >= self.out_edges[v].len() {
                stack.pop();
                continue;
            }
            let e = self.out_edges[v][*i];
            *i += 1;
            let u = self.target(e);
            if visited[u] {
                continue;
            }
            visited[u] = true;
            parent_edge[u] = e;
            if qualifies(u) {
                let mut path = Vec::new();
                let mut cur = u;
                while cur != from {
                    let pe = parent_edge[cur];
                    path.push(pe);
                    cur = self.orientation[pe].expect("accepted edge");
                }
                path.reverse();
                return Some(path);
            }
            stack.push((u, 0));
        }
        None
    }

    /// Move a pebble along an oriented path `v -> ... -> w`: the pebble
    /// travels from `w` to `v` and every edge on the path is reversed.
    /// The empty path is a no-op.
    pub fn move_pebble(&mut self, path: &[usize]) -> Result<()> {
        if path.is_empty() {
            return Ok(());
        }
        // validate the path before mutating anything
        let mut prev_target = None;
        for &e in path {
            let src = self.orientation[e].ok_or(Error::PathNotInD)?;
            if let Some(t) = prev_target {
                if src != t {
                    return Err(Error::PathNotInD);
                }
            }
            prev_target = Some(self.other_endpoint(e, src));
        }
        let start = self.orientation[path[0]].expect("validated");
        let end = prev_target.expect("nonempty path");
        if self.pebbles[end] == 0 {
            return Err(Error::EmptyTargetPebbles);
        }
        for &e in path {
            let src = self.orientation[e].expect("validated");
            let tgt = self.other_endpoint(e, src);
            let pos = self.out_edges[src]
                .iter()
                .position(|&x| x == e)
                .expect("edge in out list");
            self.out_edges[src].remove(pos);
            self.orientation[e] = Some(tgt);
            self.out_edges[tgt].push(e);
        }
        self.pebbles[start] += 1;
        self.pebbles[end] -= 1;
        Ok(())
    }

    /// Vertices reachable from any seed by oriented paths, seeds included.
    pub fn reach(&self, seeds: &[usize]) -> BTreeSet<usize> {
        let mut seen: BTreeSet<usize> = seeds.iter().copied().collect();
        let mut stack: Vec<usize> = seeds.to_vec();
        while let Some(v) = stack.pop() {
            for &e in &self.out_edges[v] {
                let u = self.target(e);
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen
    }

    /// Pebble/span/out statistics of the support `A u B`, where `points`
    /// holds point indices and `lines` line indices of the geometry.
    pub fn support_stats(
        &self,
        points: &BTreeSet<usize>,
        lines: &BTreeSet<usize>,
    ) -> SupportStats {
        let np = self.mg.n_points();
        let in_support = |v: usize| {
            if v < np {
                points.contains(&v)
            } else {
                lines.contains(&(v - np))
            }
        };
        let mut peb_sum = 0u64;
        let mut span = 0u64;
        let mut out = 0u64;
        for v in 0..self.mg.n_vertices() {
            if !in_support(v) {
                continue;
            }
            peb_sum += self.pebbles[v] as u64;
            for &e in &self.out_edges[v] {
                if in_support(self.target(e)) {
                    span += 1;
                } else {
                    out += 1;
                }
            }
        }
        SupportStats {
            peb_sum,
            span_count: span,
            out_count: out,
        }
    }

    /// Certify a violating support after a failed acceptance of an edge of
    /// the incidence (point `u`, line vertex `v`). The support is the union
    /// of the two reach sets; its deficit is recomputed from the geometry.
    pub fn extract_violation_witness(
        &self,
        g: &IncidenceGeometry,
        u: usize,
        v: usize,
    ) -> Result<ViolationWitness> {
        let reach = self.reach(&[u, v]);
        let peb_total: u64 = reach.iter().map(|&x| self.pebbles[x] as u64).sum();
        if peb_total > self.params.l() as u64 {
            return Err(Error::NotAFailureState);
        }
        let np = self.mg.n_points();
        let points: BTreeSet<usize> = reach.iter().copied().filter(|&x| x < np).collect();
        let lines: BTreeSet<usize> = reach
            .iter()
            .copied()
            .filter(|&x| x >= np)
            .map(|x| x - np)
            .collect();
        let support = g.support(&points, &lines);
        let slack = support.count_inequality(&self.params);
        debug_assert!(slack <= -1, "witness support must violate the count");
        Ok(ViolationWitness {
            points,
            lines,
            deficit: (-slack) as u64,
        })
    }

    /// Check the four lemma invariants: (1) per vertex on the whole state,
    /// (2)-(4) on each sampled support. Returns the first violation found.
    pub fn check_invariants(
        &self,
        sampled_supports: &[(BTreeSet<usize>, BTreeSet<usize>)],
    ) -> std::result::Result<(), InvariantViolation> {
        for v in 0..self.mg.n_vertices() {
            let cap = self.params.capacity(self.mg.is_point(v)) as u64;
            let got = self.pebbles[v] as u64 + self.out_degree(v) as u64;
            if got != cap {
                return Err(InvariantViolation {
                    invariant: 1,
                    detail: format!("vertex {v}: peb + out = {got}, expected {cap}"),
                });
            }
        }
        let (k1, k2, l) = (
            self.params.k1() as u64,
            self.params.k2() as u64,
            self.params.l() as u64,
        );
        for (points, lines) in sampled_supports {
            let stats = self.support_stats(points, lines);
            let budget = k1 * points.len() as u64 + k2 * lines.len() as u64;
            let total = stats.peb_sum + stats.span_count + stats.out_count;
            if total != budget {
                return Err(InvariantViolation {
                    invariant: 2,
                    detail: format!(
                        "support ({points:?},{lines:?}): peb+span+out = {total}, expected {budget}"
                    ),
                });
            }
            if !points.is_empty() && !lines.is_empty() {
                if stats.peb_sum + stats.out_count < l {
                    return Err(InvariantViolation {
                        invariant: 3,
                        detail: format!(
                            "support ({points:?},{lines:?}): peb+out = {} < l = {l}",
                            stats.peb_sum + stats.out_count
                        ),
                    });
                }
                if stats.span_count + l > budget {
                    return Err(InvariantViolation {
                        invariant: 4,
                        detail: format!(
                            "support ({points:?},{lines:?}): span = {} > {budget} - {l}",
                            stats.span_count
                        ),
                    });
                }
            }
        }
        Ok(())
    }
}
