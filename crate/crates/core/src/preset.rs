//! Named parameter presets for the counts that come up in practice.

use crate::error::{Error, Result};
use crate::hypergraph::derive_params;
use crate::params::SparsityParams;

/// Resolve a preset name:
/// - `rods` -> (2,2,3,3), minimally rigid rod configurations in the plane;
/// - `kplane:<k>` -> (1,1,k,k);
/// - `dual-kplane:<k>` -> (1,k,1,k);
/// - `graph:<k>,<l>` -> graph (k,l)-sparsity via the 2-uniform reduction.
pub fn resolve(name: &str) -> Result<SparsityParams> {
    if name == "rods" {
        return SparsityParams::new(2, 2, 3, 3);
    }
    if let Some(k) = name.strip_prefix("kplane:") {
        let k: u32 = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad kplane preset {name:?}")))?;
        return SparsityParams::new(1, 1, k, k);
    }
    if let Some(k) = name.strip_prefix("dual-kplane:") {
        let k: u32 = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad dual-kplane preset {name:?}")))?;
        return SparsityParams::new(1, k, 1, k);
    }
    if let Some(kl) = name.strip_prefix("graph:") {
        let (k, l) = kl
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad graph preset {name:?}")))?;
        let k: u32 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad graph preset {name:?}")))?;
        let l: u32 = l
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad graph preset {name:?}")))?;
        return derive_params(k, l, 2, None);
    }
    Err(Error::Parse(format!("unknown preset {name:?}")))
}
