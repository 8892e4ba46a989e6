//! Rank-2 incidence geometries: points, lines, and incidences between them.
//!
//! Identifier order is the file order and drives every deterministic
//! iteration downstream. Points and lines are referred to by index; names
//! are kept only for input and reporting.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::SparsityParams;

/// An immutable rank-2 incidence geometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceGeometry {
    points: Vec<String>,
    lines: Vec<String>,
    /// (point index, line index) pairs in input order, duplicate-free.
    incidences: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GeometryDoc {
    points: Vec<String>,
    lines: Vec<String>,
    incidences: Vec<(String, String)>,
}

impl IncidenceGeometry {
    /// Builds a geometry from named parts, validating all invariants.
    pub fn from_names(
        points: Vec<String>,
        lines: Vec<String>,
        incidences: &[(String, String)],
    ) -> Result<Self> {
        let mut point_idx = HashMap::new();
        for (i, name) in points.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Parse("empty point name".into()));
            }
            if point_idx.insert(name.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate point name {name:?}")));
            }
        }
        let mut line_idx = HashMap::new();
        for (i, name) in lines.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Parse("empty line name".into()));
            }
            if point_idx.contains_key(name) {
                return Err(Error::Parse(format!(
                    "name {name:?} appears as both a point and a line"
                )));
            }
            if line_idx.insert(name.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate line name {name:?}")));
            }
        }
        let mut pairs = Vec::with_capacity(incidences.len());
        let mut seen = HashSet::new();
        for (p, l) in incidences {
            let pi = *point_idx
                .get(p)
                .ok_or_else(|| Error::DanglingReference(p.clone()))?;
            let li = *line_idx
                .get(l)
                .ok_or_else(|| Error::DanglingReference(l.clone()))?;
            if !seen.insert((pi, li)) {
                return Err(Error::DuplicateIncidence(p.clone(), l.clone()));
            }
            pairs.push((pi, li));
        }
        Ok(IncidenceGeometry {
            points,
            lines,
            incidences: pairs,
        })
    }

    /// Builds a geometry from index pairs with synthetic names `p1..`, `l1..`.
    pub fn from_indices(
        n_points: usize,
        n_lines: usize,
        incidences: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let points = (1..=n_points).map(|i| format!("p{i}")).collect();
        let lines = (1..=n_lines).map(|i| format!("l{i}")).collect();
        let mut seen = HashSet::new();
        for &(p, l) in &incidences {
            if p >= n_points || l >= n_lines {
                return Err(Error::DanglingReference(format!("({p},{l})")));
            }
            if !seen.insert((p, l)) {
                return Err(Error::DuplicateIncidence(format!("p{}", p + 1), format!("l{}", l + 1)));
            }
        }
        Ok(IncidenceGeometry {
            points,
            lines,
            incidences,
        })
    }

    /// Parses the geometry JSON document format.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GeometryDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_names(doc.points, doc.lines, &doc.incidences)
    }

    pub fn to_json(&self) -> String {
        let doc = GeometryDoc {
            points: self.points.clone(),
            lines: self.lines.clone(),
            incidences: self
                .incidences
                .iter()
                .map(|&(p, l)| (self.points[p].clone(), self.lines[l].clone()))
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("geometry serialization")
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn n_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn n_incidences(&self) -> usize {
        self.incidences.len()
    }

    pub fn point_name(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn line_name(&self, i: usize) -> &str {
        &self.lines[i]
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    pub fn line_index(&self, name: &str) -> Option<usize> {
        self.lines.iter().position(|l| l == name)
    }

    /// Incidences as (point index, line index) pairs in input order.
    pub fn incidences(&self) -> &[(usize, usize)] {
        &self.incidences
    }

    /// The sub-geometry keeping only the given incidence indices.
    pub fn restrict_incidences(&self, keep: &[usize]) -> IncidenceGeometry {
        IncidenceGeometry {
            points: self.points.clone(),
            lines: self.lines.clone(),
            incidences: keep.iter().map(|&i| self.incidences[i]).collect(),
        }
    }

    /// The support induced by the given point and line subsets.
    pub fn support(&self, points: &BTreeSet<usize>, lines: &BTreeSet<usize>) -> Support {
        let induced = self
            .incidences
            .iter()
            .enumerate()
            .filter(|&(_, &(p, l))| points.contains(&p) && lines.contains(&l))
            .map(|(i, _)| i)
            .collect();
        Support {
            points: points.clone(),
            lines: lines.clone(),
            induced,
        }
    }
}

/// A support: a pair of point/line subsets together with the incidences of
/// the geometry restricted to their product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    pub points: BTreeSet<usize>,
    pub lines: BTreeSet<usize>,
    /// Indices into the parent geometry's incidence list.
    pub induced: Vec<usize>,
}

impl Support {
    /// Slack of the sparsity count on this support:
    /// `k1*|A| + k2*|B| - l - lambda*|I'|`. Nonnegative iff the count holds.
    pub fn count_inequality(&self, p: &SparsityParams) -> i64 {
        p.k1() as i64 * self.points.len() as i64 + p.k2() as i64 * self.lines.len() as i64
            - p.l() as i64
            - p.lambda() as i64 * self.induced.len() as i64
    }
}
