//! Set cover as a superset instance: one parallel arc per set, one color
//! per element.

use simpath::fpt::{solve_superset_fpt, FptConfig};
use simpath::oracle::{min_set_cover_bruteforce, CoverSystem};
use simpath::reductions::gen_setcover_dag;

fn main() -> simpath::Result<()> {
    let system = CoverSystem::parse(
        r#"{"universe": ["a", "b", "c", "d", "e"],
            "sets": [["a", "b"], ["b", "c", "d"], ["d", "e"], ["a", "e"], ["c"]]}"#,
    )?;
    let net = gen_setcover_dag(&system)?.network;
    let report = solve_superset_fpt(&net, &FptConfig::default())?;
    let chosen: Vec<_> = report.arcs.iter().map(|a| &system.sets[a]).collect();
    println!("cover of size {:?}: {chosen:?}", report.cost);
    println!("brute force: {}", min_set_cover_bruteforce(&system)?);
    Ok(())
}
