use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::network::{ArcId, ArcSet, Color, ColoredNetwork};

/// Which of the two problem families is being solved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `A' ∩ A_i` must be an s-t path for every color.
    Exact,
    /// `A' ∩ A_i` must contain an s-t path for every color.
    Superset,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Exact => f.write_str("exact"),
            Variant::Superset => f.write_str("superset"),
        }
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Variant::Exact),
            "superset" => Ok(Variant::Superset),
            other => Err(format!(
                "unknown variant {other:?} (expected exact|superset)"
            )),
        }
    }
}

/// Per-color witness: the ordered arcs of an s-t path inside the solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub color: Color,
    pub path: Vec<ArcId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub feasible: bool,
    pub cost: Option<i64>,
    pub arcs: ArcSet,
    pub certificates: Vec<Certificate>,
    pub solver: String,
}

impl SolutionReport {
    pub fn infeasible(solver: impl Into<String>) -> Self {
        SolutionReport {
            feasible: false,
            cost: None,
            arcs: ArcSet::new(),
            certificates: Vec::new(),
            solver: solver.into(),
        }
    }

    /// Builds the report for a candidate arc set by running the feasibility
    /// check for `variant`.
    pub fn from_arcs(
        net: &ColoredNetwork,
        variant: Variant,
        arcs: ArcSet,
        solver: impl Into<String>,
    ) -> Self {
        let mut report = super::validate_solution(net, variant, &arcs);
        report.solver = solver.into();
        report
    }

    /// Equality of everything except the solver name.
    pub fn same_outcome(&self, other: &SolutionReport) -> bool {
        self.feasible == other.feasible
            && self.cost == other.cost
            && self.arcs == other.arcs
            && self.certificates == other.certificates
    }
}

/// Total order used to pick one optimum among equal-cost alternatives:
/// cost first, then fewer arcs, then the lexicographically smallest sorted
/// id sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SolutionKey {
    pub cost: i64,
    pub size: usize,
    pub arcs: ArcSet,
}

impl SolutionKey {
    pub fn of(net: &ColoredNetwork, arcs: ArcSet) -> Self {
        SolutionKey {
            cost: super::solution_cost(net, &arcs),
            size: arcs.len(),
            arcs,
        }
    }
}
