//! Seeded random instances: the same seed always yields the same corpus.
//! Prints how often each solver applies on a small mixed corpus.

use simpath::laminar::analyze_color_family;
use simpath::model::multi_colored_arcs;
use simpath::paths::topological_order;
use simpath::reductions::random::{random_network, seeded, NetworkKind, NetworkShape};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let mut rng = seeded(seed);
    for kind in [
        NetworkKind::Dag,
        NetworkKind::Digraph,
        NetworkKind::Undirected,
    ] {
        let shape = NetworkShape {
            kind,
            max_vertices: 8,
            max_arcs: 14,
            max_k: 3,
            negative: kind != NetworkKind::Undirected,
        };
        let (mut acyclic, mut laminar, mut ell) = (0, 0, 0);
        for _ in 0..100 {
            let net = random_network(&mut rng, &shape);
            acyclic +=
                (net.directed() && topological_order(&net, &net.all_arcs()).is_some()) as u32;
            laminar += analyze_color_family(&net).laminar as u32;
            ell += multi_colored_arcs(&net).len();
        }
        println!(
            "{kind:?}: {acyclic} acyclic, {laminar} laminar, mean ell {:.2}",
            ell as f64 / 100.0
        );
    }
}
