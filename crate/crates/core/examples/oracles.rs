//! The exhaustive oracles. Each one enumerates its whole search space, so
//! they only serve as ground truth on small inputs.

use simpath::model::{ColoredNetwork, Variant};
use simpath::oracle::{
    brute_force_solve, enumerate_assignments, min_set_cover_bruteforce, CnfFormula, CoverSystem,
    DEFAULT_MAX_ORACLE_ARCS,
};

fn main() -> simpath::Result<()> {
    let mut net = ColoredNetwork::new(false, 3, 0, 2, 2)?;
    net.add_arc(0, 1, 1, [1, 2])?;
    net.add_arc(1, 2, 1, [1])?;
    net.add_arc(1, 2, 2, [2])?;
    net.add_arc(0, 2, 2, [1, 2])?;
    for variant in [Variant::Exact, Variant::Superset] {
        let r = brute_force_solve(&net, variant, DEFAULT_MAX_ORACLE_ARCS)?;
        println!("{variant}: cost {:?}, arcs {:?}", r.cost, r.arcs.to_vec());
    }

    let formula = CnfFormula::running_example();
    print!("{}", formula.to_dimacs());
    let summary = enumerate_assignments(&formula)?;
    println!(
        "max satisfied {} of {}, exactly-one assignment: {}",
        summary.max_satisfied,
        formula.num_clauses(),
        summary.exactly_one
    );

    let system = CoverSystem::running_example();
    println!(
        "minimum cover of {:?}: {}",
        system.sets,
        min_set_cover_bruteforce(&system)?
    );
    Ok(())
}
