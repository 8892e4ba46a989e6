//! The lambda-fold incidence multigraph the pebble game is played on.

use crate::geometry::IncidenceGeometry;
use crate::params::SparsityParams;

/// Vertex kind tag: points get `k1` pebbles, lines `k2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Point,
    Line,
}

/// One parallel copy of an incidence edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiEdge {
    /// Vertex id of the point endpoint (equals its point index).
    pub point: usize,
    /// Vertex id of the line endpoint (`n_points + line index`).
    pub line: usize,
    /// Copy index in `1..=lambda`.
    pub copy: u32,
    /// Index of the originating incidence in the geometry.
    pub incidence: usize,
}

/// The incidence graph with every edge duplicated `lambda` times.
///
/// Vertices are indexed `0..n_points` for points and
/// `n_points..n_points+n_lines` for lines. Edges are listed in incidence
/// order, copies innermost, which fixes the processing order of the game.
#[derive(Debug, Clone)]
pub struct PebbleMultigraph {
    n_points: usize,
    n_lines: usize,
    edges: Vec<MultiEdge>,
}

impl PebbleMultigraph {
    pub fn build(g: &IncidenceGeometry, p: &SparsityParams) -> Self {
        let n_points = g.n_points();
        let mut edges = Vec::with_capacity(g.n_incidences() * p.lambda() as usize);
        for (idx, &(pt, ln)) in g.incidences().iter().enumerate() {
            for copy in 1..=p.lambda() {
                edges.push(MultiEdge {
                    point: pt,
                    line: n_points + ln,
                    copy,
                    incidence: idx,
                });
            }
        }
        PebbleMultigraph {
            n_points,
            n_lines: g.n_lines(),
            edges,
        }
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn n_lines(&self) -> usize {
        self.n_lines
    }

    pub fn n_vertices(&self) -> usize {
        self.n_points + self.n_lines
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        if v < self.n_points {
            VertexKind::Point
        } else {
            VertexKind::Line
        }
    }

    pub fn is_point(&self, v: usize) -> bool {
        v < self.n_points
    }

    /// Endpoints of an edge as (point vertex, line vertex).
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.edges[e].point, self.edges[e].line)
    }
}
