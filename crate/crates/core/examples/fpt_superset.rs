//! Superset optimum on a network with cycles and a negative arc, where the
//! product-state solver does not apply. The subset enumeration runs on a
//! fixed number of threads.

use simpath::fpt::{solve_superset_fpt, FptConfig};
use simpath::model::{multi_colored_arcs, ColoredNetwork};

fn main() -> simpath::Result<()> {
    let mut net = ColoredNetwork::new(true, 5, 0, 4, 3)?;
    net.add_arc(0, 1, 2, [1, 2, 3])?;
    net.add_arc(1, 2, -1, [1])?;
    net.add_arc(2, 1, 3, [1, 2])?;
    net.add_arc(2, 4, 1, [1, 3])?;
    net.add_arc(1, 3, 1, [2])?;
    net.add_arc(3, 4, 1, [2, 3])?;
    net.add_arc(0, 4, 6, [3])?;

    println!(
        "{} multi-colored arcs, {} subsets",
        multi_colored_arcs(&net).len(),
        1 << multi_colored_arcs(&net).len()
    );
    let report = solve_superset_fpt(
        &net,
        &FptConfig {
            threads: Some(2),
            ..FptConfig::default()
        },
    )?;
    println!("cost {:?}, arcs {:?}", report.cost, report.arcs.to_vec());
    for cert in &report.certificates {
        println!("  color {}: {:?}", cert.color, cert.path);
    }
    Ok(())
}
