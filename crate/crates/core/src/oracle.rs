//! Exponential-time reference implementations used to certify the engine.
//!
//! Everything here enumerates subsets outright. Bounds are explicit inputs;
//! exceeding one is an error, never a silent truncation.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::ViolationWitness;
use crate::geometry::{IncidenceGeometry, Support};
use crate::engine::{Status, Verdict};
use crate::params::SparsityParams;

/// Size limits for the exhaustive procedures.
#[derive(Debug, Clone, Copy)]
pub struct OracleBounds {
    /// `|P| + |L|` limit for support enumeration.
    pub max_vertices: usize,
    /// `|I|` limit for maximum-subset search.
    pub max_incidences: usize,
    /// `|P| * |L|` limit for full matroid basis enumeration.
    pub max_ground: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_vertices: 16,
            max_incidences: 20,
            max_ground: 12,
        }
    }
}

impl OracleBounds {
    pub fn with_limit(n: usize) -> Self {
        OracleBounds {
            max_vertices: n,
            max_incidences: n,
            max_ground: n,
        }
    }
}

/// Support pairs (A, B), both nonempty, ordered by total size, then |A|,
/// then lexicographically. The first violator under this order is the
/// deterministic witness.
fn support_order(np: usize, nl: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    (2..=np + nl).flat_map(move |s| {
        (1..s)
            .filter(move |&sa| sa <= np && s - sa <= nl)
            .flat_map(move |sa| {
                (0..np).combinations(sa).flat_map(move |a| {
                    (0..nl)
                        .combinations(s - sa)
                        .map(move |b| (a.clone(), b))
                })
            })
    })
}

fn induced_count(g: &IncidenceGeometry, a: &[usize], b: &[usize]) -> usize {
    g.incidences()
        .iter()
        .filter(|&&(p, l)| a.contains(&p) && b.contains(&l))
        .count()
}

/// Slack of the count on the support (a, b): nonnegative iff it holds.
fn slack(p: &SparsityParams, a_len: usize, b_len: usize, induced: usize) -> i64 {
    p.k1() as i64 * a_len as i64 + p.k2() as i64 * b_len as i64
        - p.l() as i64
        - p.lambda() as i64 * induced as i64
}

/// Decide sparsity/tightness by checking every induced support.
pub fn brute_force_verdict(
    g: &IncidenceGeometry,
    p: &SparsityParams,
    bounds: &OracleBounds,
) -> Result<Verdict> {
    let size = g.n_points() + g.n_lines();
    if size > bounds.max_vertices {
        return Err(Error::InstanceTooLarge {
            size,
            bound: bounds.max_vertices,
        });
    }
    for (a, b) in support_order(g.n_points(), g.n_lines()) {
        let induced = induced_count(g, &a, &b);
        let sl = slack(p, a.len(), b.len(), induced);
        if sl < 0 {
            return Ok(Verdict {
                status: Status::NotSparse,
                remaining_pebbles: 0,
                witness: Some(ViolationWitness {
                    points: a.into_iter().collect(),
                    lines: b.into_iter().collect(),
                    deficit: (-sl) as u64,
                }),
                accepted: None,
            });
        }
    }
    let budget = p.k1() as i64 * g.n_points() as i64 + p.k2() as i64 * g.n_lines() as i64;
    let remaining = budget - p.lambda() as i64 * g.n_incidences() as i64;
    let status = if remaining == p.l() as i64 {
        Status::Tight
    } else {
        Status::SparseNotTight
    };
    Ok(Verdict {
        status,
        remaining_pebbles: remaining.max(0) as u64,
        witness: None,
        accepted: None,
    })
}

/// Check sparsity of an incidence subset (given as indices into `g`).
pub fn is_sparse_subset(g: &IncidenceGeometry, p: &SparsityParams, subset: &[usize]) -> bool {
    let pts: BTreeSet<usize> = subset.iter().map(|&i| g.incidences()[i].0).collect();
    let lns: BTreeSet<usize> = subset.iter().map(|&i| g.incidences()[i].1).collect();
    let pts: Vec<usize> = pts.into_iter().collect();
    let lns: Vec<usize> = lns.into_iter().collect();
    for sa in 1..=pts.len() {
        for a in pts.iter().copied().combinations(sa) {
            for sb in 1..=lns.len() {
                for b in lns.iter().copied().combinations(sb) {
                    let induced = subset
                        .iter()
                        .filter(|&&i| {
                            let (pp, ll) = g.incidences()[i];
                            a.contains(&pp) && b.contains(&ll)
                        })
                        .count();
                    if slack(p, a.len(), b.len(), induced) < 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A sparse incidence subset tight on its own support.
pub fn is_tight_on_support(g: &IncidenceGeometry, p: &SparsityParams, subset: &[usize]) -> bool {
    if subset.is_empty() {
        return false;
    }
    if !is_sparse_subset(g, p, subset) {
        return false;
    }
    let pts: BTreeSet<usize> = subset.iter().map(|&i| g.incidences()[i].0).collect();
    let lns: BTreeSet<usize> = subset.iter().map(|&i| g.incidences()[i].1).collect();
    slack(p, pts.len(), lns.len(), subset.len()) == 0
}

/// Exhaustive maximum-cardinality sparse subset, searched by descending
/// size and lexicographic order within a size.
pub fn max_sparse_subset(
    g: &IncidenceGeometry,
    p: &SparsityParams,
    bounds: &OracleBounds,
) -> Result<Vec<usize>> {
    let n = g.n_incidences();
    if n > bounds.max_incidences {
        return Err(Error::InstanceTooLarge {
            size: n,
            bound: bounds.max_incidences,
        });
    }
    for size in (1..=n).rev() {
        for subset in (0..n).combinations(size) {
            if is_sparse_subset(g, p, &subset) {
                return Ok(subset);
            }
        }
    }
    Ok(Vec::new())
}

/// All supports meeting the count with equality, in enumeration order.
pub fn enumerate_blocks(
    g: &IncidenceGeometry,
    p: &SparsityParams,
    bounds: &OracleBounds,
) -> Result<Vec<Support>> {
    let verdict = brute_force_verdict(g, p, bounds)?;
    if verdict.status == Status::NotSparse {
        return Err(Error::NotSparseInput);
    }
    let mut blocks = Vec::new();
    for (a, b) in support_order(g.n_points(), g.n_lines()) {
        let induced = induced_count(g, &a, &b);
        if slack(p, a.len(), b.len(), induced) == 0 {
            let pa: BTreeSet<usize> = a.into_iter().collect();
            let pb: BTreeSet<usize> = b.into_iter().collect();
            blocks.push(g.support(&pa, &pb));
        }
    }
    Ok(blocks)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlockClosureReport {
    pub blocks_count: usize,
    /// Pairs whose union or intersection support failed the equality check.
    pub counterexamples: Vec<String>,
}

/// For every pair of blocks with intersecting point sets and intersecting
/// line sets, verify their union and intersection supports are blocks.
pub fn verify_block_closure(
    g: &IncidenceGeometry,
    p: &SparsityParams,
    bounds: &OracleBounds,
) -> Result<BlockClosureReport> {
    let blocks = enumerate_blocks(g, p, bounds)?;
    let mut counterexamples = Vec::new();
    for (i, b1) in blocks.iter().enumerate() {
        for b2 in blocks.iter().skip(i + 1) {
            let pi: BTreeSet<usize> = b1.points.intersection(&b2.points).copied().collect();
            let li: BTreeSet<usize> = b1.lines.intersection(&b2.lines).copied().collect();
            if pi.is_empty() || li.is_empty() {
                continue;
            }
            let pu: BTreeSet<usize> = b1.points.union(&b2.points).copied().collect();
            let lu: BTreeSet<usize> = b1.lines.union(&b2.lines).copied().collect();
            for (tag, pts, lns) in [("union", &pu, &lu), ("intersection", &pi, &li)] {
                let s = g.support(pts, lns);
                if s.count_inequality(p) != 0 {
                    counterexamples.push(format!(
                        "{tag} of ({:?},{:?}) and ({:?},{:?}) is not a block",
                        b1.points, b1.lines, b2.points, b2.lines
                    ));
                }
            }
        }
    }
    Ok(BlockClosureReport {
        blocks_count: blocks.len(),
        counterexamples,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatroidReport {
    pub bases_count: usize,
    /// One entry per element `b` of some `B2 \ B1` admitting no valid
    /// single-element exchange into `B1`.
    pub exchange_violations: Vec<ExchangeViolation>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExchangeViolation {
    pub base_from: Vec<(String, String)>,
    pub base_to: Vec<(String, String)>,
    pub element: (String, String),
}

fn named_incidences(g: &IncidenceGeometry, subset: &[usize]) -> Vec<(String, String)> {
    subset
        .iter()
        .map(|&i| {
            let (p, l) = g.incidences()[i];
            (g.point_name(p).to_owned(), g.line_name(l).to_owned())
        })
        .collect()
}

/// Enumerate all tight subsets of the full grid `P x L` and check the basis
/// exchange axiom over every ordered pair.
pub fn verify_matroid_exchange(
    n_points: usize,
    n_lines: usize,
    p: &SparsityParams,
    bounds: &OracleBounds,
) -> Result<MatroidReport> {
    let ground = n_points * n_lines;
    if ground > bounds.max_ground {
        return Err(Error::InstanceTooLarge {
            size: ground,
            bound: bounds.max_ground,
        });
    }
    let mut pairs = Vec::with_capacity(ground);
    for pt in 0..n_points {
        for ln in 0..n_lines {
            pairs.push((pt, ln));
        }
    }
    let g = IncidenceGeometry::from_indices(n_points, n_lines, pairs)?;
    // bases: sparse subsets meeting the full-ground-set count with equality
    let target = p.k1() as i64 * n_points as i64 + p.k2() as i64 * n_lines as i64 - p.l() as i64;
    let mut bases: Vec<Vec<usize>> = Vec::new();
    for mask in 0u64..(1 << ground) {
        let subset: Vec<usize> = (0..ground).filter(|i| mask >> i & 1 == 1).collect();
        if p.lambda() as i64 * subset.len() as i64 == target && is_sparse_subset(&g, p, &subset) {
            bases.push(subset);
        }
    }
    let base_set: HashSet<Vec<usize>> = bases.iter().cloned().collect();
    let mut violations = Vec::new();
    for b1 in &bases {
        let b1set: HashSet<usize> = b1.iter().copied().collect();
        for b2 in &bases {
            if b1 == b2 {
                continue;
            }
            for &b in b2.iter().filter(|x| !b1set.contains(x)) {
                let ok = b1.iter().filter(|c| !b2.contains(c)).any(|&c| {
                    let mut cand: Vec<usize> =
                        b1.iter().copied().filter(|&x| x != c).chain([b]).collect();
                    cand.sort_unstable();
                    base_set.contains(&cand)
                });
                if !ok {
                    violations.push(ExchangeViolation {
                        base_from: named_incidences(&g, b1),
                        base_to: named_incidences(&g, b2),
                        element: {
                            let (pt, ln) = g.incidences()[b];
                            (g.point_name(pt).to_owned(), g.line_name(ln).to_owned())
                        },
                    });
                }
            }
        }
    }
    Ok(MatroidReport {
        bases_count: bases.len(),
        exchange_violations: violations,
    })
}

/// Pairwise exchange check for two supplied tight incidence sets over the
/// union of their supports. A candidate exchange is valid when the swapped
/// set is again tight on its own support.
pub fn verify_matroid_pairwise(
    g1: &IncidenceGeometry,
    g2: &IncidenceGeometry,
    p: &SparsityParams,
) -> Result<MatroidReport> {
    // combined universe, first-geometry order first
    let mut points: Vec<String> = Vec::new();
    let mut lines: Vec<String> = Vec::new();
    let push_unique = |v: &mut Vec<String>, s: String| {
        if !v.contains(&s) {
            v.push(s);
        }
    };
    for g in [g1, g2] {
        for i in 0..g.n_points() {
            push_unique(&mut points, g.point_name(i).to_owned());
        }
        for i in 0..g.n_lines() {
            push_unique(&mut lines, g.line_name(i).to_owned());
        }
    }
    let named: Vec<(String, String)> = {
        let mut all = Vec::new();
        for g in [g1, g2] {
            for &(pt, ln) in g.incidences() {
                let pair = (g.point_name(pt).to_owned(), g.line_name(ln).to_owned());
                if !all.contains(&pair) {
                    all.push(pair);
                }
            }
        }
        all
    };
    let universe = IncidenceGeometry::from_names(points, lines, &named)?;
    let find = |g: &IncidenceGeometry| -> Vec<usize> {
        g.incidences()
            .iter()
            .map(|&(pt, ln)| {
                let pair = (g.point_name(pt).to_owned(), g.line_name(ln).to_owned());
                named.iter().position(|x| *x == pair).expect("in universe")
            })
            .collect()
    };
    let b1 = find(g1);
    let b2 = find(g2);
    for (tag, b) in [("first", &b1), ("second", &b2)] {
        if !is_tight_on_support(&universe, p, b) {
            return Err(Error::NotTightInput(format!("{tag} input set")));
        }
    }
    let mut violations = Vec::new();
    for &b in b2.iter().filter(|x| !b1.contains(x)) {
        let ok = b1.iter().filter(|c| !b2.contains(c)).any(|&c| {
            let cand: Vec<usize> = b1.iter().copied().filter(|&x| x != c).chain([b]).collect();
            is_tight_on_support(&universe, p, &cand)
        });
        if !ok {
            violations.push(ExchangeViolation {
                base_from: named_incidences(&universe, &b1),
                base_to: named_incidences(&universe, &b2),
                element: named[b].clone(),
            });
        }
    }
    Ok(MatroidReport {
        bases_count: 2,
        exchange_violations: violations,
    })
}
