//! The union-of-shortest-paths approximation for the superset variants.

use crate::error::Result;
use crate::model::{ArcSet, ColoredNetwork, SolutionReport, Variant};
use crate::paths::{shortest_st_in_color, ArcCosts};

/// Union of one shortest s-t path per color class (plus every negative arc,
/// priced at 0 while paths are chosen). Each path costs at most the optimum,
/// so the union costs at most `k` times the optimum.
pub fn k_union_approx(net: &ColoredNetwork) -> Result<SolutionReport> {
    let mut costs = ArcCosts::new();
    let mut arcs = ArcSet::new();
    for a in net.arcs().iter().filter(|a| a.cost < 0) {
        costs.set_free(a.id);
        arcs.insert(a.id);
    }
    for color in net.colors() {
        match shortest_st_in_color(net, color, &costs)? {
            Some(path) => arcs.extend(path.arcs),
            None => return Ok(SolutionReport::infeasible("approx")),
        }
    }
    Ok(SolutionReport::from_arcs(
        net,
        Variant::Superset,
        arcs,
        "approx",
    ))
}
