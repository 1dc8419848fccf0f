//! Exhaustive ground truth: subset enumeration for the path problems and
//! miniature solvers for the source problems of the reductions.

mod cnf;
mod cover;

use rayon::prelude::*;

pub use cnf::CnfFormula;
pub use cover::CoverSystem;

use crate::error::{Error, Result};
use crate::model::{
    contains_st_path, is_exact_path_set, ArcSet, ColoredNetwork, SolutionKey, SolutionReport,
    Variant,
};

pub const DEFAULT_MAX_ORACLE_ARCS: usize = 24;
pub const MAX_ASSIGNMENT_VARS: usize = 20;
pub const MAX_COVER_SETS: usize = 20;

/// Minimum-cost solution by enumerating all `2^|A|` arc subsets. Ties are
/// broken by [`SolutionKey`], so the result is the canonical optimum.
pub fn brute_force_solve(
    net: &ColoredNetwork,
    variant: Variant,
    max_arcs: usize,
) -> Result<SolutionReport> {
    let m = net.num_arcs();
    if m > max_arcs || m >= 63 {
        return Err(Error::OracleCapExceeded {
            arcs: m,
            cap: max_arcs,
        });
    }
    let classes: Vec<u64> = net
        .colors()
        .map(|c| net.class(c).iter().fold(0u64, |acc, a| acc | 1 << a))
        .collect();
    let to_set = |mask: u64| -> ArcSet { (0..m).filter(|&a| mask >> a & 1 == 1).collect() };
    let feasible = |mask: u64| {
        classes.iter().all(|&class| {
            let part = to_set(mask & class);
            match variant {
                Variant::Exact => is_exact_path_set(net, &part).is_some(),
                Variant::Superset => contains_st_path(net, &part),
            }
        })
    };
    let best = (0..1u64 << m)
        .into_par_iter()
        .filter(|&mask| feasible(mask))
        .map(|mask| SolutionKey::of(net, to_set(mask)))
        .min();
    Ok(match best {
        Some(key) => SolutionReport::from_arcs(net, variant, key.arcs, "oracle"),
        None => SolutionReport::infeasible("oracle"),
    })
}

/// Outcome of trying every truth assignment of a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssignmentSummary {
    /// Largest number of clauses satisfied simultaneously.
    pub max_satisfied: usize,
    /// Whether some assignment makes exactly one literal true in every clause.
    pub exactly_one: bool,
}

pub fn enumerate_assignments(formula: &CnfFormula) -> Result<AssignmentSummary> {
    let n = formula.num_vars;
    if n > MAX_ASSIGNMENT_VARS {
        return Err(Error::VariableCapExceeded {
            vars: n,
            cap: MAX_ASSIGNMENT_VARS,
        });
    }
    let mut summary = AssignmentSummary {
        max_satisfied: 0,
        exactly_one: false,
    };
    let mut assignment = vec![false; n];
    for bits in 0u32..1 << n {
        for (i, x) in assignment.iter_mut().enumerate() {
            *x = bits >> i & 1 == 1;
        }
        let counts = formula.true_literals(&assignment);
        let satisfied = counts.iter().filter(|&&c| c > 0).count();
        summary.max_satisfied = summary.max_satisfied.max(satisfied);
        summary.exactly_one |= counts.iter().all(|&c| c == 1);
    }
    Ok(summary)
}

/// Size of a smallest subfamily covering the universe.
pub fn min_set_cover_bruteforce(system: &CoverSystem) -> Result<usize> {
    system.validate()?;
    if system.universe.len() > 128 {
        return Err(Error::InvalidCoverSystem(
            "universe larger than 128 elements".into(),
        ));
    }
    let masks = system.masks();
    let full: u128 = if system.universe.len() == 128 {
        u128::MAX
    } else {
        (1u128 << system.universe.len()) - 1
    };
    let reach = masks.iter().fold(0u128, |a, &m| a | m);
    if reach != full {
        let missing = (0..system.universe.len())
            .find(|&i| reach >> i & 1 == 0)
            .unwrap();
        return Err(Error::Uncoverable(system.universe[missing].clone()));
    }
    if masks.len() > MAX_COVER_SETS {
        return Err(Error::FamilyCapExceeded {
            sets: masks.len(),
            cap: MAX_COVER_SETS,
        });
    }
    let best = (0u32..1 << masks.len())
        .filter(|&pick| {
            let covered = (0..masks.len())
                .filter(|&i| pick >> i & 1 == 1)
                .fold(0u128, |a, i| a | masks[i]);
            covered == full
        })
        .map(|pick| pick.count_ones() as usize)
        .min();
    Ok(best.expect("full family covers"))
}
