//! Minimum-cost simultaneous s-t paths over colored arc classes.
//!
//! Given a (di)graph whose arcs carry one or more colors, find a cheapest arc
//! set whose restriction to every color class *is* an s-t path (the exact
//! variant) or *contains* one (the superset variant). The crate provides:
//!
//! * [`model`]: networks, their JSON documents and the feasibility checks;
//! * [`paths`]: shortest-path engines with a uniform tie-break;
//! * [`dagdp`]: product-state dynamic programs for acyclic digraphs;
//! * [`fpt`]: enumeration over multi-colored arcs, plus a backtracking
//!   vertex-disjoint paths search;
//! * [`laminar`]: the polynomial case of laminar color families;
//! * [`approx`]: the union-of-shortest-paths k-approximation;
//! * [`oracle`]: exhaustive ground truth for networks, formulas and covers;
//! * [`reductions`]: instance generators built from hardness gadgets;
//! * [`cli`]: the `simpath` command-line front end.
//!
//! ```text
//! simpath generate --reduction tight-approx --k 3 --output tight.json
//! simpath solve --variant superset --input tight.json
//! simpath solve --variant superset --algorithm approx --input tight.json
//! ```
//!
//! The `examples/` directory has one runnable program per solver and
//! construction.

pub mod approx;
pub mod cli;
pub mod dagdp;
pub mod error;
pub mod fpt;
pub mod laminar;
pub mod model;
pub mod oracle;
pub mod paths;
pub mod reductions;

pub use error::{Error, Result};
pub use model::{ArcId, ArcSet, Color, ColoredNetwork, SolutionReport, Variant, Vertex};
