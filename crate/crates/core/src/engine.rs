//! Recognition and extraction drivers on top of the game state, plus the
//! verdict report format.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{GameState, ViolationWitness};
use crate::geometry::IncidenceGeometry;
use crate::multigraph::PebbleMultigraph;
use crate::params::SparsityParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Tight,
    #[serde(rename = "sparse")]
    SparseNotTight,
    NotSparse,
}

/// Outcome of a recognition or extraction run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub remaining_pebbles: u64,
    pub witness: Option<ViolationWitness>,
    /// Accepted incidence indices, in acceptance order (extraction runs only).
    pub accepted: Option<Vec<usize>>,
}

/// JSON form of a verdict, with identifiers resolved to names.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerdictReport {
    pub status: Status,
    pub remaining_pebbles: u64,
    pub witness: Option<WitnessReport>,
    pub accepted: Option<Vec<(String, String)>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessReport {
    pub points: Vec<String>,
    pub lines: Vec<String>,
    pub deficit: u64,
}

impl Verdict {
    pub fn to_report(&self, g: &IncidenceGeometry) -> VerdictReport {
        VerdictReport {
            status: self.status,
            remaining_pebbles: self.remaining_pebbles,
            witness: self.witness.as_ref().map(|w| WitnessReport {
                points: w.points.iter().map(|&i| g.point_name(i).to_owned()).collect(),
                lines: w.lines.iter().map(|&i| g.line_name(i).to_owned()).collect(),
                deficit: w.deficit,
            }),
            accepted: self.accepted.as_ref().map(|ids| {
                ids.iter()
                    .map(|&i| {
                        let (p, l) = g.incidences()[i];
                        (g.point_name(p).to_owned(), g.line_name(l).to_owned())
                    })
                    .collect()
            }),
        }
    }
}

/// Engine knobs; defaults run without per-move invariant checking.
#[derive(Debug, Clone)]
pub struct EngineOptions {
    /// Assert the lemma invariants after every move.
    pub debug_invariants: bool,
    /// Seed for support sampling when exhaustive enumeration is too large.
    pub seed: u64,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            debug_invariants: false,
            seed: 0,
        }
    }
}

enum Mode {
    /// Algorithm 1: a rejected incidence aborts with a witness.
    Recognition,
    /// Algorithm 2 (lambda = 1): a rejected incidence is skipped.
    Extraction,
}

/// Supports checked after every move in debug mode: exhaustive for small
/// vertex sets, a fixed seeded sample otherwise.
fn invariant_supports(
    g: &IncidenceGeometry,
    seed: u64,
) -> Vec<(BTreeSet<usize>, BTreeSet<usize>)> {
    let (np, nl) = (g.n_points(), g.n_lines());
    let mut supports = Vec::new();
    if np + nl <= 6 {
        for pm in 0u32..(1 << np) {
            for lm in 0u32..(1 << nl) {
                let points = (0..np).filter(|i| pm >> i & 1 == 1).collect();
                let lines = (0..nl).filter(|i| lm >> i & 1 == 1).collect();
                supports.push((points, lines));
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..32 {
            let points = (0..np).filter(|_| rng.gen_bool(0.5)).collect();
            let lines = (0..nl).filter(|_| rng.gen_bool(0.5)).collect();
            supports.push((points, lines));
        }
        // always include the full support
        supports.push(((0..np).collect(), (0..nl).collect()));
    }
    supports
}

fn play(
    g: &IncidenceGeometry,
    p: SparsityParams,
    mode: Mode,
    opts: &EngineOptions,
) -> Result<Verdict> {
    let mg = PebbleMultigraph::build(g, &p);
    let mut st = GameState::init(&mg, p);
    let supports = if opts.debug_invariants {
        invariant_supports(g, opts.seed)
    } else {
        Vec::new()
    };
    let check = |st: &GameState| -> Result<()> {
        if opts.debug_invariants {
            st.check_invariants(&supports)
                .map_err(|v| Error::InvariantViolation(format!("({}) {}", v.invariant, v.detail)))?;
        }
        Ok(())
    };
    let l = p.l() as u64;
    let mut accepted_incidences = Vec::new();
    for eid in 0..mg.edges().len() {
        let (v, w) = mg.endpoints(eid);
        loop {
            if st.peb(v) as u64 + st.peb(w) as u64 > l {
                // pebble-source tie-break: point endpoint first
                let source = if st.peb(v) > 0 { v } else { w };
                st.accept_edge(eid, source)?;
                if mg.edges()[eid].copy == 1 {
                    accepted_incidences.push(mg.edges()[eid].incidence);
                }
                check(&st)?;
                break;
            }
            // gather a pebble: search from the point endpoint, then the line
            let path = st
                .find_pebble_path(v, (v, w))
                .or_else(|| st.find_pebble_path(w, (v, w)));
            match path {
                Some(path) => {
                    st.move_pebble(&path)?;
                    check(&st)?;
                }
                None => match mode {
                    Mode::Recognition => {
                        let witness = st.extract_violation_witness(g, v, w)?;
                        return Ok(Verdict {
                            status: Status::NotSparse,
                            remaining_pebbles: st.total_pebbles(),
                            witness: Some(witness),
                            accepted: None,
                        });
                    }
                    Mode::Extraction => {
                        st.mark_processed(eid);
                        break;
                    }
                },
            }
        }
    }
    let remaining = st.total_pebbles();
    let status = if remaining == l {
        Status::Tight
    } else {
        Status::SparseNotTight
    };
    Ok(Verdict {
        status,
        remaining_pebbles: remaining,
        witness: None,
        accepted: matches!(mode, Mode::Extraction).then_some(accepted_incidences),
    })
}

/// Algorithm 1: decide sparsity/tightness of a geometry.
pub fn run_recognition(g: &IncidenceGeometry, p: SparsityParams) -> Result<Verdict> {
    run_recognition_with(g, p, &EngineOptions::default())
}

pub fn run_recognition_with(
    g: &IncidenceGeometry,
    p: SparsityParams,
    opts: &EngineOptions,
) -> Result<Verdict> {
    play(g, p, Mode::Recognition, opts)
}

/// Algorithm 2: greedily extract a maximum sparse subgeometry (lambda = 1).
pub fn run_extraction(g: &IncidenceGeometry, p: SparsityParams) -> Result<Verdict> {
    run_extraction_with(g, p, &EngineOptions::default())
}

pub fn run_extraction_with(
    g: &IncidenceGeometry,
    p: SparsityParams,
    opts: &EngineOptions,
) -> Result<Verdict> {
    if p.lambda() != 1 {
        return Err(Error::LambdaNotOne(p.lambda()));
    }
    play(g, p, Mode::Extraction, opts)
}
