//! Instance generators for the hardness constructions, plus seeded random
//! generators for test corpora.
//!
//! Every generator returns the network together with a name for each
//! vertex that plays a role in its gadget (`"s"`, `"w3"`, `"v2_1"`, `"c4"`,
//! `"s_2"`, ...), so tests and [`extract_assignment`] can address gadget
//! parts without re-deriving the layout.

pub mod random;
mod sat;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use sat::{extract_assignment, gen_cnf_exact_dag, gen_cnf_superset};

use crate::error::{Error, Result};
use crate::model::{ColoredGraph, ColoredNetwork, Vertex};
use crate::oracle::CoverSystem;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub vertex_names: BTreeMap<Vertex, String>,
}

impl Metadata {
    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.vertex_names
            .iter()
            .find(|(_, n)| *n == name)
            .map(|(&v, _)| v)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("metadata serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// A generated instance with its vertex-name map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub network: ColoredNetwork,
    pub metadata: Metadata,
}

/// A plain digraph, the input of the two-disjoint-paths construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    pub num_vertices: usize,
    pub arcs: Vec<(Vertex, Vertex)>,
}

/// Incremental builder that names vertices as it creates them.
pub(crate) struct Builder {
    pub graph: ColoredGraph,
    pub names: BTreeMap<Vertex, String>,
}

impl Builder {
    pub fn new(directed: bool, k: u32) -> Result<Self> {
        Ok(Builder {
            graph: ColoredGraph::new(directed, 0, k)?,
            names: BTreeMap::new(),
        })
    }

    pub fn vertex(&mut self, name: impl Into<String>) -> Vertex {
        let v = self.graph.add_vertex();
        self.names.insert(v, name.into());
        v
    }

    pub fn finish(self, s: Vertex, t: Vertex) -> Result<Generated> {
        Ok(Generated {
            network: ColoredNetwork::from_graph(self.graph, s, t)?,
            metadata: Metadata {
                vertex_names: self.names,
            },
        })
    }
}

/// Two colors over `digraph`: class 1 is every arc of the digraph plus
/// `t1 s2`, class 2 is the path `s1 t1 s2 t2`, with `s = s1` and `t = t2`.
/// An exact solution exists iff the digraph has vertex-disjoint `s1`-`t1`
/// and `s2`-`t2` dipaths. The arcs `s1 t1` and `s2 t2` of class 2 are always
/// new arcs; `t1 s2` reuses the first such arc of the digraph if there is
/// one. All costs are 0.
pub fn gen_two_disjoint(
    digraph: &Digraph,
    s1: Vertex,
    t1: Vertex,
    s2: Vertex,
    t2: Vertex,
) -> Result<Generated> {
    let terminals = [s1, t1, s2, t2];
    if (0..4).any(|i| (i + 1..4).any(|j| terminals[i] == terminals[j])) {
        return Err(Error::InvalidGeneratorInput(format!(
            "terminals {terminals:?} must be four distinct vertices"
        )));
    }
    let mut graph = ColoredGraph::new(true, digraph.num_vertices, 2)?;
    let bridge = digraph.arcs.iter().position(|&a| a == (t1, s2));
    for (i, &(a, b)) in digraph.arcs.iter().enumerate() {
        if Some(i) == bridge {
            graph.add_arc(a, b, 0, [1, 2])?;
        } else {
            graph.add_arc(a, b, 0, [1])?;
        }
    }
    if bridge.is_none() {
        graph.add_arc(t1, s2, 0, [1, 2])?;
    }
    graph.add_arc(s1, t1, 0, [2])?;
    graph.add_arc(s2, t2, 0, [2])?;
    let names = ["s1", "t1", "s2", "t2"]
        .iter()
        .zip(terminals)
        .map(|(n, v)| (v, n.to_string()))
        .collect();
    Ok(Generated {
        network: ColoredNetwork::from_graph(graph, s1, t2)?,
        metadata: Metadata {
            vertex_names: names,
        },
    })
}

/// Adds two parallel `s`-`t` arcs of cost 1, one per color, to a
/// two-color instance. The result always has an exact solution, and its
/// optimum is 0 iff the input had one.
pub fn gen_inapprox_gadget(net: &ColoredNetwork) -> Result<ColoredNetwork> {
    if net.k() != 2 || !net.directed() {
        return Err(Error::InvalidGeneratorInput(
            "expected a directed two-color instance".into(),
        ));
    }
    let mut out = net.clone();
    out.add_arc(net.s(), net.t(), 1, [1])?;
    out.add_arc(net.s(), net.t(), 1, [2])?;
    Ok(out)
}

/// One parallel `s`-`t` arc of cost 1 per set; class `i` holds the arcs of
/// the sets containing the `i`-th universe element. Superset solutions are
/// exactly the set covers.
pub fn gen_setcover_dag(system: &CoverSystem) -> Result<Generated> {
    system.validate()?;
    if system.universe.is_empty() || system.sets.is_empty() {
        return Err(Error::InvalidGeneratorInput(
            "universe and family must be nonempty".into(),
        ));
    }
    let mut b = Builder::new(true, system.universe.len() as u32)?;
    let s = b.vertex("s");
    let t = b.vertex("t");
    for (i, set) in system.sets.iter().enumerate() {
        if set.is_empty() {
            return Err(Error::InvalidGeneratorInput(format!(
                "set {i} is empty and would yield an arc without colors"
            )));
        }
        let mut colors: Vec<u32> = set
            .iter()
            .filter_map(|x| system.element(x))
            .map(|e| e as u32 + 1)
            .collect();
        colors.sort_unstable();
        colors.dedup();
        b.graph.add_arc(s, t, 1, colors)?;
    }
    b.finish(s, t)
}

/// Two vertices and `k + 1` parallel unit arcs; class `i` is `{a_i, a_{k+1}}`.
/// The optimum is 1, while the union of per-color shortest paths with
/// lowest-id tie-breaking costs `k`.
pub fn gen_tight_approx(k: u32) -> Result<Generated> {
    if k == 0 {
        return Err(Error::InvalidGeneratorInput("k must be positive".into()));
    }
    let mut b = Builder::new(true, k)?;
    let s = b.vertex("s");
    let t = b.vertex("t");
    for i in 1..=k {
        b.graph.add_arc(s, t, 1, [i])?;
    }
    b.graph.add_arc(s, t, 1, 1..=k)?;
    b.finish(s, t)
}

/// The same network with every arc read as an undirected edge.
pub fn forget_orientation(net: &ColoredNetwork) -> Result<ColoredNetwork> {
    if let Some(a) = net.arcs().iter().find(|a| a.cost < 0) {
        return Err(Error::NegativeUndirectedCost {
            arc: a.id,
            cost: a.cost,
        });
    }
    Ok(net.with_directed(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{multi_colored_arcs, validate_instance, ArcSet};

    #[test]
    fn two_disjoint_shape() {
        let d = Digraph {
            num_vertices: 4,
            arcs: vec![(0, 1), (2, 3)],
        };
        let g = gen_two_disjoint(&d, 0, 1, 2, 3).unwrap();
        let net = &g.network;
        assert_eq!((net.s(), net.t(), net.k()), (0, 3, 2));
        assert_eq!(multi_colored_arcs(net), ArcSet::from([2]));
        assert_eq!(net.class(2).len(), 3);
        assert_eq!(g.metadata.vertex("t1"), Some(1));
        assert!(gen_two_disjoint(&d, 0, 1, 1, 3).is_err());
    }

    #[test]
    fn two_disjoint_reuses_bridge() {
        let d = Digraph {
            num_vertices: 4,
            arcs: vec![(1, 2), (0, 1)],
        };
        let net = gen_two_disjoint(&d, 0, 1, 2, 3).unwrap().network;
        assert_eq!(net.num_arcs(), 4);
        assert_eq!(multi_colored_arcs(&net), ArcSet::from([0]));
    }

    #[test]
    fn inapprox_adds_two_arcs() {
        let d = Digraph {
            num_vertices: 4,
            arcs: vec![],
        };
        let net = gen_two_disjoint(&d, 0, 1, 2, 3).unwrap().network;
        let gadget = gen_inapprox_gadget(&net).unwrap();
        assert_eq!(gadget.num_arcs(), net.num_arcs() + 2);
        let last = gadget.arc(gadget.num_arcs() - 1);
        assert_eq!((last.tail, last.head, last.cost), (0, 3, 1));
    }

    #[test]
    fn setcover_shape() {
        let g = gen_setcover_dag(&CoverSystem::running_example()).unwrap();
        let net = &g.network;
        assert_eq!((net.num_vertices(), net.num_arcs(), net.k()), (2, 3, 4));
        assert_eq!(net.class(3), ArcSet::from([1, 2]));
        let empty = CoverSystem::new(vec!["a".into()], vec![vec![]]).unwrap();
        assert!(gen_setcover_dag(&empty).is_err());
    }

    #[test]
    fn tight_shape() {
        let net = gen_tight_approx(3).unwrap().network;
        assert_eq!(net.num_arcs(), 4);
        assert_eq!(net.class(2), ArcSet::from([1, 3]));
        assert!(gen_tight_approx(0).is_err());
    }

    #[test]
    fn orientation() {
        let net = crate::model::fixtures::t1();
        let und = forget_orientation(&net).unwrap();
        assert!(!und.directed());
        assert_eq!(und.arcs(), net.arcs());
        validate_instance(&und).unwrap();
        let neg = net.map_costs(|a| if a.id == 0 { -1 } else { a.cost });
        assert_eq!(
            forget_orientation(&neg),
            Err(Error::NegativeUndirectedCost { arc: 0, cost: -1 })
        );
    }
}
