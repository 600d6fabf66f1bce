//! Graph classes controlling FS(Star_n, Y) and FS(+Star_n, Y) connectivity.
//!
//! A graph is *Wilsonian* when FS(Star_n, ·) is connected over it, which
//! holds exactly when it is biconnected, not bipartite, not a cycle, and not
//! θ₀. *Almost-Wilsonian* drops the bipartiteness requirement and only
//! excludes cycles on four or more vertices; it characterizes connectivity
//! of FS(+Star_n, ·) for n ≥ 3 (the star plus one extra edge restores the
//! parity lost to bipartite targets). The half-degree test δ > n/2 is a
//! simple sufficient condition for the Wilsonian class.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A condition some graph failed, named by what went wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    NotBiconnected,
    Bipartite,
    CycleGraph,
    CycleOnAtLeastFourVertices,
    ThetaZero,
}

/// Everything the two classification theorems look at, in one report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub biconnected: bool,
    pub bipartite: bool,
    pub is_cycle: bool,
    pub is_theta0: bool,
    pub wilsonian: bool,
    pub almost_wilsonian: bool,
    /// Every violated condition, in a fixed order.
    pub reasons: Vec<Obstruction>,
}

/// Evaluates all class-defining conditions for `g`.
pub fn classify(g: &Graph) -> ClassificationReport {
    let biconnected = g.is_biconnected();
    let bipartite = g.is_bipartite();
    let is_cycle = g.is_cycle_graph();
    let is_theta0 = g.is_theta_zero();
    let cycle_on_ge4 = is_cycle && g.n() >= 4;

    let wilsonian = biconnected && !bipartite && !is_cycle && !is_theta0;
    let almost_wilsonian = biconnected && !cycle_on_ge4 && !is_theta0;

    let mut reasons = Vec::new();
    if !biconnected {
        reasons.push(Obstruction::NotBiconnected);
    }
    if bipartite {
        reasons.push(Obstruction::Bipartite);
    }
    if is_cycle {
        reasons.push(Obstruction::CycleGraph);
    }
    if cycle_on_ge4 {
        reasons.push(Obstruction::CycleOnAtLeastFourVertices);
    }
    if is_theta0 {
        reasons.push(Obstruction::ThetaZero);
    }

    // Wilsonian rules out every cycle, hence every cycle on ≥ 4 vertices.
    debug_assert!(!wilsonian || almost_wilsonian);

    ClassificationReport {
        biconnected,
        bipartite,
        is_cycle,
        is_theta0,
        wilsonian,
        almost_wilsonian,
        reasons,
    }
}

/// The half-degree sufficient condition: δ(g) > n/2. Evaluated exactly as
/// 2·δ(g) > n to avoid rational arithmetic.
pub fn check_half_degree_wilsonian(g: &Graph) -> bool {
    2 * g.min_degree() > g.n()
}

/// A vertex adjacent to every other vertex, smallest index first.
pub fn spanning_star_center(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.degree(v) == g.n() - 1)
}

/// A spanning-star center together with the lexicographically smallest edge
/// between two non-center vertices. When several centers exist the smallest
/// works: any extra edge seen from another center avoids it or can be
/// replaced by one that does.
pub fn spanning_star_plus(g: &Graph) -> Option<(usize, (usize, usize))> {
    let center = spanning_star_center(g)?;
    let extra = g
        .edges()
        .into_iter()
        .find(|&(u, v)| u != center && v != center)?;
    Some((center, extra))
}
