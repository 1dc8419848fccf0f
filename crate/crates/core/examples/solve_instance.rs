//! Builds a small two-color network and prints the solution document for
//! each variant.
//!
//! ```text
//! cargo run --example solve_instance
//! ```

use simpath::dagdp::{solve_dag, DagDpConfig};
use simpath::model::{serialize_instance, serialize_solution, ColoredNetwork, Variant};

fn main() -> simpath::Result<()> {
    // s = 0, t = 3; the first arc is shared by both colors
    let mut net = ColoredNetwork::new(true, 4, 0, 3, 2)?;
    net.add_arc(0, 1, 1, [1, 2])?;
    net.add_arc(1, 3, 1, [1])?;
    net.add_arc(1, 2, 1, [2])?;
    net.add_arc(2, 3, 1, [2])?;
    net.add_arc(0, 3, 5, [1, 2])?;

    println!("instance:\n{}", serialize_instance(&net));
    for variant in [Variant::Exact, Variant::Superset] {
        let report = solve_dag(&net, variant, &DagDpConfig::default())?;
        println!("{variant}:\n{}", serialize_solution(&report));
    }
    Ok(())
}
