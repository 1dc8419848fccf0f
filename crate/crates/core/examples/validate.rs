//! Loads an instance and a solution from disk and reports what the checker
//! thinks of the solution under both variants.
//!
//! ```text
//! cargo run --example validate -- instance.json solution.json
//! ```

use simpath::model::{
    parse_arc_list, parse_instance, validate_instance, validate_solution, Variant,
};

fn main() -> simpath::Result<()> {
    let mut args = std::env::args().skip(1);
    let (Some(instance), Some(solution)) = (args.next(), args.next()) else {
        eprintln!("usage: validate <instance.json> <solution.json>");
        std::process::exit(2);
    };
    let net = parse_instance(&std::fs::read_to_string(instance)?)?;
    validate_instance(&net)?;
    let arcs = parse_arc_list(&std::fs::read_to_string(solution)?)?;
    net.check_arc_set(&arcs)?;
    for variant in [Variant::Exact, Variant::Superset] {
        let report = validate_solution(&net, variant, &arcs);
        println!(
            "{variant}: feasible {}, cost {:?}",
            report.feasible, report.cost
        );
    }
    Ok(())
}
