//! Prints the product path dag-dp walks for each variant: one line per
//! move, with the cursors before and after.

use simpath::dagdp::{trace_dag, DagDpConfig};
use simpath::model::{ColoredNetwork, Variant};

fn main() -> simpath::Result<()> {
    // two colors that can share the middle arc 1 -> 2
    let mut net = ColoredNetwork::new(true, 4, 0, 3, 2)?;
    net.add_arc(0, 1, 2, [1])?;
    net.add_arc(0, 1, 2, [2])?;
    net.add_arc(1, 2, 1, [1, 2])?;
    net.add_arc(2, 3, 3, [1, 2])?;
    net.add_arc(0, 3, 4, [2])?;

    for variant in [Variant::Exact, Variant::Superset] {
        let trace = trace_dag(&net, variant, &DagDpConfig::default())?;
        println!(
            "{variant}: cost {:?}, arcs {:?}, {} states",
            trace.report.cost,
            trace.report.arcs.to_vec(),
            trace.states
        );
        for mv in &trace.moves {
            println!(
                "  arc {} colors {:?}: {:?} -> {:?}",
                mv.arc, mv.colors, mv.from.0, mv.to.0
            );
        }
    }
    Ok(())
}
