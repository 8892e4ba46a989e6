//! Small named instances used throughout the test suites.

use crate::geometry::IncidenceGeometry;

/// Two points, two lines, incidences (p1,l1), (p1,l2), (p2,l1).
pub fn example1() -> IncidenceGeometry {
    IncidenceGeometry::from_indices(2, 2, vec![(0, 0), (0, 1), (1, 0)]).unwrap()
}

/// A graph on `n` vertices with the given edges, viewed as an incidence
/// geometry: one point per vertex, one line per edge, two incidences per
/// edge. Lines are named after their endpoints so that different graphs
/// over the same vertex set share a ground set.
pub fn graph_geometry(n: usize, edges: &[(usize, usize)]) -> IncidenceGeometry {
    let points: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    let lines: Vec<String> = edges
        .iter()
        .map(|&(u, v)| format!("e{}-{}", u + 1, v + 1))
        .collect();
    let mut incidences = Vec::with_capacity(2 * edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        incidences.push((points[u].clone(), lines[i].clone()));
        incidences.push((points[v].clone(), lines[i].clone()));
    }
    IncidenceGeometry::from_names(points, lines, &incidences).unwrap()
}

/// K4 as a geometry: 4 points, 6 lines, 12 incidences.
pub fn k4_geometry() -> IncidenceGeometry {
    graph_geometry(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// The 4-cycle 1-2-3-4 plus the diagonal {1,3}: 4 points, 5 lines.
pub fn fig3_left() -> IncidenceGeometry {
    graph_geometry(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
}

/// The 4-cycle 1-2-3-4 plus the diagonal {2,4}: 4 points, 5 lines.
pub fn fig3_right() -> IncidenceGeometry {
    graph_geometry(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)])
}

/// The triangle graph as a geometry: 3 points, 3 lines, 6 incidences.
pub fn triangle_geometry() -> IncidenceGeometry {
    graph_geometry(3, &[(0, 1), (1, 2), (0, 2)])
}
