//! Instance model: colored networks, arc sets, feasibility predicates and
//! the JSON documents they travel in.

mod feasibility;
mod io;
mod network;
mod report;

pub use feasibility::{
    contains_st_path, is_exact_path_set, multi_colored_arcs, multi_terminal_reduce, solution_cost,
    validate_instance, validate_solution, TerminalPairList,
};
pub(crate) use feasibility::{find_path_within, negative_cycle};
pub use io::{
    parse_arc_list, parse_instance, parse_solution, serialize_instance, serialize_solution,
};
pub(crate) use network::Incidence;
pub use network::{
    ArcId, ArcRecord, ArcSet, Color, ColorSet, ColoredGraph, ColoredNetwork, Vertex,
};
pub use report::{Certificate, SolutionKey, SolutionReport, Variant};

#[cfg(test)]
pub(crate) use network::fixtures;
