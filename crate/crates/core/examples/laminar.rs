//! Laminar color families: the chain decomposition and the solutions read
//! off it.

use simpath::laminar::{analyze_color_family, solve_laminar};
use simpath::model::{ColoredNetwork, Variant};

fn main() -> simpath::Result<()> {
    // class 2 is inside class 1; class 3 is disjoint from both
    let mut net = ColoredNetwork::new(true, 4, 0, 3, 3)?;
    net.add_arc(0, 1, 1, [1, 2])?;
    net.add_arc(1, 3, 2, [1, 2])?;
    net.add_arc(0, 2, 1, [1])?;
    net.add_arc(2, 3, 1, [1])?;
    net.add_arc(0, 3, 4, [3])?;

    let analysis = analyze_color_family(&net);
    println!("laminar: {}", analysis.laminar);
    println!("chains: {:?}", analysis.chains);
    println!("minimal members: {:?}", analysis.minimal_members);
    for variant in [Variant::Exact, Variant::Superset] {
        let report = solve_laminar(&net, variant)?;
        println!(
            "{variant}: cost {:?}, arcs {:?}",
            report.cost,
            report.arcs.to_vec()
        );
    }
    Ok(())
}
