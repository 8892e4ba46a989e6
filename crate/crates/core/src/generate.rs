//! Constructors for tight and random incidence geometries.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::engine::{run_recognition, Status};
use crate::error::{Error, Result};
use crate::geometry::IncidenceGeometry;
use crate::params::SparsityParams;

/// `f(a, b) = a*b - k1*a - k2*b + l`: the surplus of possible incidences
/// over the tight target on an a x b grid.
fn surplus(p: &SparsityParams, a: i64, b: i64) -> i64 {
    a * b - p.k1() as i64 * a - p.k2() as i64 * b + p.l() as i64
}

/// Build a (1, k1, k2, l)-tight geometry with exactly `n` points and `m`
/// lines.
///
/// A minimal grid (a0, b0) with nonnegative surplus and no smaller
/// feasible grid is located first; the complete bipartite incidences on it
/// minus the lexicographically last `f(a0, b0)` pairs form a tight seed,
/// which is then augmented point by point (each new point incident to the
/// first k1 lines) and line by line (each new line incident to the first
/// k2 points). The result is re-verified tight before returning.
pub fn construct_tight_geometry(
    p: &SparsityParams,
    n: usize,
    m: usize,
) -> Result<IncidenceGeometry> {
    if p.lambda() != 1 {
        return Err(Error::LambdaNotOne(p.lambda()));
    }
    let (k1, k2, l) = (p.k1() as i64, p.k2() as i64, p.l() as i64);
    if l > k1 + k2 - 1 {
        return Err(Error::InfeasibleSize(format!(
            "l = {l} exceeds k1 + k2 - 1 = {}",
            k1 + k2 - 1
        )));
    }
    let (n_i, m_i) = (n as i64, m as i64);
    if n_i < k2 || m_i < k1 || n_i * m_i < k1 * n_i + k2 * m_i - l {
        return Err(Error::InfeasibleSize(format!(
            "need n >= {k2}, m >= {k1} and n*m >= k1*n + k2*m - l, got n = {n}, m = {m}"
        )));
    }
    // degenerate capacities: with k1 = 0 a single line carries at most
    // k2 - l incidences, so tightness forces l*(m - 1) <= 0; dually for
    // k2 = 0 and points
    if (k1 == 0 && l > 0 && m_i > 1) || (k2 == 0 && l > 0 && n_i > 1) {
        return Err(Error::InfeasibleSize(format!(
            "no tight geometry with k1 = {k1}, k2 = {k2}, l = {l} at size {n} x {m}"
        )));
    }
    let a_min = k2.max(1);
    let b_min = k1.max(1);
    // smallest qualifying grid: surplus >= 0 here, <= 0 on every strictly
    // smaller feasible grid; scan by increasing a+b, then increasing a.
    // Should a qualifying grid ever fail the tightness post-check, the scan
    // simply moves on to the next one.
    let mut found_candidate = false;
    for total in (a_min + b_min)..=(n_i + m_i) {
        for a in a_min..=n_i.min(total - b_min) {
            let b = total - a;
            if b < b_min || b > m_i || surplus(p, a, b) < 0 {
                continue;
            }
            // minimal among feasible grids only: x >= k2, y >= k1
            let minimal = (a_min..=a).all(|x| {
                (b_min..=b)
                    .filter(|y| x + y < a + b)
                    .all(|y| surplus(p, x, y) <= 0)
            });
            if !minimal {
                continue;
            }
            found_candidate = true;
            let (a0, b0) = (a as usize, b as usize);
            let remove = surplus(p, a, b) as usize;
            let mut incidences: Vec<(usize, usize)> = Vec::new();
            for pt in 0..a0 {
                for ln in 0..b0 {
                    incidences.push((pt, ln));
                }
            }
            incidences.truncate(incidences.len() - remove);
            // augment to the requested size: points first, then lines
            for pt in a0..n {
                for ln in 0..p.k1() as usize {
                    incidences.push((pt, ln));
                }
            }
            for ln in b0..m {
                for pt in 0..p.k2() as usize {
                    incidences.push((pt, ln));
                }
            }
            let g = IncidenceGeometry::from_indices(n, m, incidences)?;
            if run_recognition(&g, *p)?.status == Status::Tight {
                return Ok(g);
            }
        }
    }
    if found_candidate {
        Err(Error::PostCheckFailed)
    } else {
        Err(Error::InfeasibleSize(format!(
            "no qualifying seed grid within {n} x {m}"
        )))
    }
}

/// Seeded Bernoulli sampling of incidences on an `n x m` grid.
pub fn random_geometry(n: usize, m: usize, density: f64, seed: u64) -> IncidenceGeometry {
    assert!((0.0..=1.0).contains(&density), "density must be in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut incidences = Vec::new();
    for pt in 0..n {
        for ln in 0..m {
            if rng.gen_bool(density) {
                incidences.push((pt, ln));
            }
        }
    }
    IncidenceGeometry::from_indices(n, m, incidences).expect("grid pairs are valid")
}
