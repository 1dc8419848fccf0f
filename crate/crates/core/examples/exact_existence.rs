//! Deciding whether an exact solution exists on an undirected network, and
//! the vertex-disjoint paths search it is built on.

use simpath::fpt::{
    solve_exact_existence_fpt, vertex_disjoint_paths, DisjointPathsQuery, ExistenceConfig,
    DEFAULT_MAX_SEARCH_NODES,
};
use simpath::model::ColoredNetwork;

fn main() -> simpath::Result<()> {
    // a 2x3 grid, s = 0 (top left), t = 5 (bottom right)
    //   0 - 1 - 2
    //   |   |   |
    //   3 - 4 - 5
    let mut net = ColoredNetwork::new(false, 6, 0, 5, 2)?;
    net.add_arc(0, 1, 1, [1, 2])?;
    net.add_arc(1, 2, 1, [1])?;
    net.add_arc(2, 5, 1, [1])?;
    net.add_arc(0, 3, 1, [2])?;
    net.add_arc(1, 4, 1, [2])?;
    net.add_arc(3, 4, 1, [1])?;
    net.add_arc(4, 5, 1, [2])?;

    let verdict = solve_exact_existence_fpt(&net, &ExistenceConfig::default())?;
    println!(
        "exact solution exists: {} ({} disjoint-paths queries)",
        verdict.feasible, verdict.queries
    );
    if let Some(w) = &verdict.witness {
        println!("witness: {:?}", w.to_vec());
    }

    // two disjoint connections 0 -> 2 and 3 -> 5 over every edge
    let query = DisjointPathsQuery::new(net.all_arcs(), vec![(0, 2), (3, 5)], Default::default())?;
    let paths = vertex_disjoint_paths(&net, &query, DEFAULT_MAX_SEARCH_NODES)?;
    println!("disjoint paths: {paths:?}");
    Ok(())
}
