//! The union-of-shortest-paths approximation against the optimum on the
//! tight family, where it is off by exactly a factor k.

use simpath::approx::k_union_approx;
use simpath::model::Variant;
use simpath::oracle::{brute_force_solve, DEFAULT_MAX_ORACLE_ARCS};
use simpath::reductions::gen_tight_approx;

fn main() -> simpath::Result<()> {
    println!("{:>2} {:>4} {:>7}", "k", "opt", "approx");
    for k in 1..=6 {
        let net = gen_tight_approx(k)?.network;
        let opt = brute_force_solve(&net, Variant::Superset, DEFAULT_MAX_ORACLE_ARCS)?;
        let approx = k_union_approx(&net)?;
        println!(
            "{k:>2} {:>4} {:>7}",
            opt.cost.unwrap_or_default(),
            approx.cost.unwrap_or_default()
        );
    }
    Ok(())
}
