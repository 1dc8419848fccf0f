//! Per-color terminal pairs reduced to a single s-t instance.

use simpath::model::{multi_terminal_reduce, ColoredGraph, TerminalPairList, Variant};
use simpath::oracle::brute_force_solve;

fn main() -> simpath::Result<()> {
    let mut graph = ColoredGraph::new(true, 5, 2)?;
    graph.add_arc(0, 2, 1, [1])?;
    graph.add_arc(1, 2, 1, [2])?;
    graph.add_arc(2, 3, 2, [1, 2])?;
    graph.add_arc(3, 4, 1, [1])?;
    graph.add_arc(2, 4, 4, [1])?;
    let pairs = TerminalPairList::new(vec![(0, 4), (1, 3)])?;

    let net = multi_terminal_reduce(&graph, &pairs)?;
    println!(
        "reduced: {} vertices, s = {}, t = {}, {} arcs",
        net.num_vertices(),
        net.s(),
        net.t(),
        net.num_arcs()
    );
    for variant in [Variant::Exact, Variant::Superset] {
        let r = brute_force_solve(&net, variant, 16)?;
        let original: Vec<_> = r.arcs.iter().filter(|&a| a < graph.arcs().len()).collect();
        println!("{variant}: cost {:?}, original arcs {original:?}", r.cost);
    }
    Ok(())
}
