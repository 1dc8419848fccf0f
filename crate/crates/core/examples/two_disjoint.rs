//! Two vertex-disjoint dipaths as an exact two-color instance, and the
//! gadget that makes the exact variant hard to approximate.

use simpath::model::Variant;
use simpath::oracle::brute_force_solve;
use simpath::reductions::{gen_inapprox_gadget, gen_two_disjoint, Digraph};

fn main() -> simpath::Result<()> {
    let digraphs = [
        // 0 -> 1 and 2 -> 3 side by side
        Digraph {
            num_vertices: 5,
            arcs: vec![(0, 4), (4, 1), (2, 3)],
        },
        // both connections need vertex 4
        Digraph {
            num_vertices: 5,
            arcs: vec![(0, 4), (4, 1), (2, 4), (4, 3)],
        },
    ];
    for d in &digraphs {
        let g = gen_two_disjoint(d, 0, 1, 2, 3)?;
        let exact = brute_force_solve(&g.network, Variant::Exact, 20)?;
        let gadget = gen_inapprox_gadget(&g.network)?;
        let opt = brute_force_solve(&gadget, Variant::Exact, 20)?;
        println!(
            "{:?}: exact feasible {}, gadget optimum {:?}",
            d.arcs, exact.feasible, opt.cost
        );
    }
    Ok(())
}
