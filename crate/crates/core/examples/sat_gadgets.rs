//! The two SAT constructions on a formula read from DIMACS text: the
//! superset gadget, whose optimum counts unsatisfied clauses, and the exact
//! DAG gadget, which is feasible iff some assignment makes exactly one
//! literal true per clause.
//!
//! ```text
//! cargo run --example sat_gadgets -- formula.cnf
//! ```

use simpath::dagdp::{solve_exact_dag, DagDpConfig};
use simpath::fpt::{solve_superset_fpt, FptConfig};
use simpath::oracle::{enumerate_assignments, CnfFormula};
use simpath::reductions::{extract_assignment, gen_cnf_exact_dag, gen_cnf_superset};

const DEFAULT: &str = "p cnf 3 3\n1 2 0\n-1 3 0\n-2 -3 0\n";

fn main() -> simpath::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let formula = CnfFormula::parse_dimacs(&text)?;
    let (n, m) = (formula.num_vars as i64, formula.num_clauses() as i64);
    let summary = enumerate_assignments(&formula)?;

    if formula.check_generator_shape(2).is_ok() {
        let g = gen_cnf_superset(&formula)?;
        let report = solve_superset_fpt(&g.network, &FptConfig::default())?;
        let cost = report.cost.unwrap_or_default();
        println!(
            "superset gadget: {} vertices, {} arcs, optimum {cost} = (5n+2m+4) + {}",
            g.network.num_vertices(),
            g.network.num_arcs(),
            cost - (5 * n + 2 * m + 4)
        );
        println!(
            "  m - m_s* = {}, assignment {:?}",
            m - summary.max_satisfied as i64,
            extract_assignment(&g.network, &g.metadata, &report.arcs)?
        );
    }

    if formula.check_generator_shape(3).is_ok() {
        let g = gen_cnf_exact_dag(&formula)?;
        let report = solve_exact_dag(&g.network, &DagDpConfig::default())?;
        println!(
            "exact gadget: k = {}, feasible {} (exactly-one assignment: {})",
            g.network.k(),
            report.feasible,
            summary.exactly_one
        );
        if report.feasible {
            println!(
                "  assignment {:?}",
                extract_assignment(&g.network, &g.metadata, &report.arcs)?
            );
        }
    }
    Ok(())
}
