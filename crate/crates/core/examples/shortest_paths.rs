//! The path engines: label-correcting with negative arcs, label-setting
//! otherwise, and the per-class shortest path with free arcs.

use simpath::model::ColoredNetwork;
use simpath::paths::{conservative_shortest, shortest_st_in_color, topological_order, ArcCosts};

fn main() -> simpath::Result<()> {
    let mut net = ColoredNetwork::new(true, 4, 0, 3, 2)?;
    net.add_arc(0, 1, 4, [1, 2])?;
    net.add_arc(0, 2, 1, [1])?;
    net.add_arc(2, 1, -2, [1])?;
    net.add_arc(1, 3, 1, [1, 2])?;
    net.add_arc(2, 3, 5, [2])?;

    let all = net.all_arcs();
    println!("topological order: {:?}", topological_order(&net, &all));
    let table = conservative_shortest(&net, &all, net.s(), &ArcCosts::new())?;
    for v in 0..net.num_vertices() {
        println!(
            "dist({v}) = {:?}, path {:?}",
            table.dist(v),
            table.path_to(&net, v)
        );
    }

    // arc 0 already bought: it costs nothing and does not count
    let mut free = ArcCosts::new();
    free.set_free(0);
    for color in net.colors() {
        let plain = shortest_st_in_color(&net, color, &ArcCosts::new())?;
        let cheap = shortest_st_in_color(&net, color, &free)?;
        println!("color {color}: {plain:?}; with arc 0 free: {cheap:?}");
    }
    Ok(())
}
