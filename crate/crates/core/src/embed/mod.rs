//! Constructive solvers and their certificates.
//!
//! Every solver returns a [`Certificate`]: either an explicit red embedding
//! of the target graph or an explicit list of vertex-disjoint blue fans.
//! [`verify_certificate`] checks a certificate against the coloring without
//! sharing any code with the searches that produced it.

use crate::coloring::TwoColoring;
use crate::graph::{Graph, VertexId};
use serde::Serialize;
use thiserror::Error;

mod lemmas;
mod solvers;

pub use lemmas::{
    extend_path, find_blue_fan_at, find_red_star, hall_dichotomy, max_blue_matching_in,
    red_graph_or_blue_matching, Fragment, HallOutcome, PathExtensionOutcome,
};
pub use solvers::{partition_state, solve_fan, solve_star_vs_tfan, solve_tfan, solve_weak, PartitionState};

/// One blue fan: `k` disjoint pairs, each pair blue inside and blue-adjacent
/// to the center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fan {
    pub center: VertexId,
    pub pairs: Vec<(VertexId, VertexId)>,
}

impl Fan {
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        std::iter::once(self.center).chain(self.pairs.iter().flat_map(|&(a, b)| [a, b]))
    }
}

/// The universal solver output: a red copy of the target graph or `t`
/// disjoint blue fans.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// `map[v]` is the host vertex carrying vertex `v` of the target graph.
    RedEmbedding(Vec<VertexId>),
    BlueFans(Vec<Fan>),
}

/// How solvers treat their theorem hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    /// Refuse instances outside the guaranteed range.
    Strict,
    /// Run anyway; a failed search is reported as `Exhausted`, not a defect.
    Opportunistic,
}

#[derive(Debug, Error)]
pub enum SolveError {
    /// The instance violates the hypotheses under which success is promised.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
    /// A step the theorems guarantee cannot fail did fail: always a bug.
    #[error("engine defect: {0}")]
    Defect(String),
    /// Opportunistic run outside the guaranteed range found nothing.
    #[error("search exhausted: {0}")]
    Exhausted(String),
}

impl SolveError {
    /// Exit-code class used by the harness: defects are always fatal.
    pub fn is_defect(&self) -> bool {
        matches!(self, SolveError::Defect(_))
    }
}

/// Checks a certificate for the instance `(g, k, t)` against `c` exactly.
/// Returns the first violated constraint.
pub fn verify_certificate(
    c: &TwoColoring,
    g: &Graph,
    k: usize,
    t: usize,
    cert: &Certificate,
) -> Result<(), String> {
    let n_host = c.order();
    match cert {
        Certificate::RedEmbedding(map) => {
            if map.len() != g.order() {
                return Err(format!(
                    "embedding covers {} vertices, target has {}",
                    map.len(),
                    g.order()
                ));
            }
            let mut seen = std::collections::HashSet::new();
            for &x in map {
                if x >= n_host {
                    return Err(format!("host vertex {x} out of range"));
                }
                if !seen.insert(x) {
                    return Err(format!("host vertex {x} used twice"));
                }
            }
            for (u, v) in g.edges() {
                if !c.is_red(map[u], map[v]) {
                    return Err(format!(
                        "edge {u}-{v} maps to blue pair {}-{}",
                        map[u], map[v]
                    ));
                }
            }
            Ok(())
        }
        Certificate::BlueFans(fans) => {
            if fans.len() != t {
                return Err(format!("{} fans given, {t} required", fans.len()));
            }
            let mut seen = std::collections::HashSet::new();
            for (i, fan) in fans.iter().enumerate() {
                if fan.pairs.len() != k {
                    return Err(format!("fan {i} has {} pairs, {k} required", fan.pairs.len()));
                }
                for x in fan.vertices() {
                    if x >= n_host {
                        return Err(format!("fan {i}: vertex {x} out of range"));
                    }
                    if !seen.insert(x) {
                        return Err(format!("fan {i}: vertex {x} overlaps another fan vertex"));
                    }
                }
                for &(a, b) in &fan.pairs {
                    if !c.is_blue(a, b) {
                        return Err(format!("fan {i}: pair {a}-{b} is red"));
                    }
                    if !c.is_blue(fan.center, a) || !c.is_blue(fan.center, b) {
                        return Err(format!("fan {i}: pair {a}-{b} not blue-adjacent to center"));
                    }
                }
            }
            Ok(())
        }
    }
}
