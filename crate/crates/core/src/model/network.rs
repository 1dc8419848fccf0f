use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type ArcId = usize;
/// Color classes are numbered `1..=k`.
pub type Color = u32;

/// The set of color classes an arc belongs to.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorSet(BTreeSet<Color>);

impl ColorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, color: Color) -> bool {
        self.0.contains(&color)
    }

    pub fn insert(&mut self, color: Color) -> bool {
        self.0.insert(color)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter().copied()
    }

    /// Bitmask with bit `c - 1` set for every color `c`.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &c| m | 1u64 << (c - 1))
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        ColorSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Color; N]> for ColorSet {
    fn from(colors: [Color; N]) -> Self {
        colors.into_iter().collect()
    }
}

/// A set of arc ids. Ordered, so the derived `Ord` compares sorted id
/// sequences lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcSet(BTreeSet<ArcId>);

impl ArcSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, id: ArcId) -> bool {
        self.0.contains(&id)
    }

    pub fn insert(&mut self, id: ArcId) -> bool {
        self.0.insert(id)
    }

    pub fn remove(&mut self, id: ArcId) -> bool {
        self.0.remove(&id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = ArcId> + '_ {
        self.0.iter().copied()
    }

    pub fn extend_from(&mut self, other: &ArcSet) {
        self.0.extend(other.iter());
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ArcSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn intersection(&self, other: &ArcSet) -> ArcSet {
        self.0.intersection(&other.0).copied().collect()
    }

    pub fn to_vec(&self) -> Vec<ArcId> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<ArcId> for ArcSet {
    fn from_iter<I: IntoIterator<Item = ArcId>>(iter: I) -> Self {
        ArcSet(iter.into_iter().collect())
    }
}

impl Extend<ArcId> for ArcSet {
    fn extend<I: IntoIterator<Item = ArcId>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a ArcSet {
    type Item = &'a ArcId;
    type IntoIter = std::collections::btree_set::Iter<'a, ArcId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<const N: usize> From<[ArcId; N]> for ArcSet {
    fn from(ids: [ArcId; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "a{a}")?;
        }
        write!(f, "}}")
    }
}

/// An arc (or undirected edge, when the host network is undirected).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcRecord {
    pub id: ArcId,
    pub tail: Vertex,
    pub head: Vertex,
    pub cost: i64,
    pub colors: ColorSet,
}

impl ArcRecord {
    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other_end(&self, v: Vertex) -> Option<Vertex> {
        if self.tail == v {
            Some(self.head)
        } else if self.head == v {
            Some(self.tail)
        } else {
            None
        }
    }

    pub fn has_color(&self, color: Color) -> bool {
        self.colors.contains(color)
    }
}

/// A colored (di)graph without terminals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    directed: bool,
    num_vertices: usize,
    k: u32,
    arcs: Vec<ArcRecord>,
}

impl ColoredGraph {
    pub fn new(directed: bool, num_vertices: usize, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::NoColors);
        }
        if k > 64 {
            return Err(Error::Malformed(format!(
                "k = {k} exceeds the supported maximum of 64"
            )));
        }
        Ok(ColoredGraph {
            directed,
            num_vertices,
            k,
            arcs: Vec::new(),
        })
    }

    /// Appends an arc and returns its id.
    pub fn add_arc(
        &mut self,
        tail: Vertex,
        head: Vertex,
        cost: i64,
        colors: impl IntoIterator<Item = Color>,
    ) -> Result<ArcId> {
        let id = self.arcs.len();
        for v in [tail, head] {
            if v >= self.num_vertices {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    num_vertices: self.num_vertices,
                });
            }
        }
        if tail == head {
            return Err(Error::SelfLoop {
                arc: id,
                vertex: tail,
            });
        }
        let mut set = ColorSet::new();
        for c in colors {
            if c == 0 || c > self.k {
                return Err(Error::ColorOutOfRange {
                    arc: id,
                    color: c,
                    k: self.k,
                });
            }
            if !set.insert(c) {
                return Err(Error::DuplicateColor { arc: id, color: c });
            }
        }
        if set.is_empty() {
            return Err(Error::EmptyColorSet { arc: id });
        }
        self.arcs.push(ArcRecord {
            id,
            tail,
            head,
            cost,
            colors: set,
        });
        Ok(id)
    }

    /// Adds a fresh vertex and returns its index.
    pub fn add_vertex(&mut self) -> Vertex {
        self.num_vertices += 1;
        self.num_vertices - 1
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn arcs(&self) -> &[ArcRecord] {
        &self.arcs
    }
}

/// An instance of one of the four simultaneous-path problems: a colored
/// (di)graph plus the terminals `s` and `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredNetwork {
    graph: ColoredGraph,
    s: Vertex,
    t: Vertex,
}

impl ColoredNetwork {
    pub fn new(directed: bool, num_vertices: usize, s: Vertex, t: Vertex, k: u32) -> Result<Self> {
        Self::from_graph(ColoredGraph::new(directed, num_vertices, k)?, s, t)
    }

    pub fn from_graph(graph: ColoredGraph, s: Vertex, t: Vertex) -> Result<Self> {
        for v in [s, t] {
            if v >= graph.num_vertices {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    num_vertices: graph.num_vertices,
                });
            }
        }
        if s == t {
            return Err(Error::EqualTerminals(s));
        }
        Ok(ColoredNetwork { graph, s, t })
    }

    pub fn add_arc(
        &mut self,
        tail: Vertex,
        head: Vertex,
        cost: i64,
        colors: impl IntoIterator<Item = Color>,
    ) -> Result<ArcId> {
        self.graph.add_arc(tail, head, cost, colors)
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.graph.add_vertex()
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn directed(&self) -> bool {
        self.graph.directed
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices
    }

    pub fn s(&self) -> Vertex {
        self.s
    }

    pub fn t(&self) -> Vertex {
        self.t
    }

    pub fn k(&self) -> u32 {
        self.graph.k
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        1..=self.graph.k
    }

    pub fn arcs(&self) -> &[ArcRecord] {
        &self.graph.arcs
    }

    pub fn arc(&self, id: ArcId) -> &ArcRecord {
        &self.graph.arcs[id]
    }

    pub fn num_arcs(&self) -> usize {
        self.graph.arcs.len()
    }

    /// All arc ids.
    pub fn all_arcs(&self) -> ArcSet {
        (0..self.num_arcs()).collect()
    }

    /// The color class `A_i` as an arc set.
    pub fn class(&self, color: Color) -> ArcSet {
        self.arcs()
            .iter()
            .filter(|a| a.has_color(color))
            .map(|a| a.id)
            .collect()
    }

    /// Fails with [`Error::UnknownArc`] if some id is not an arc of this network.
    pub fn check_arc_set(&self, arcs: &ArcSet) -> Result<()> {
        match arcs.iter().find(|&a| a >= self.num_arcs()) {
            Some(a) => Err(Error::UnknownArc(a)),
            None => Ok(()),
        }
    }

    /// Same network with a different arc order: `order[new_id] = old_id`.
    pub fn permute_arcs(&self, order: &[ArcId]) -> Result<ColoredNetwork> {
        assert_eq!(
            order.len(),
            self.num_arcs(),
            "order must be a permutation of the arc ids"
        );
        let mut out = ColoredNetwork::new(
            self.directed(),
            self.num_vertices(),
            self.s,
            self.t,
            self.k(),
        )?;
        for &old in order {
            let a = self.arc(old);
            out.add_arc(a.tail, a.head, a.cost, a.colors.iter())?;
        }
        Ok(out)
    }

    /// Copy with every arc cost replaced by `f(arc)`.
    pub fn map_costs(&self, f: impl Fn(&ArcRecord) -> i64) -> ColoredNetwork {
        let mut out = self.clone();
        for a in &mut out.graph.arcs {
            a.cost = f(a);
        }
        out
    }

    /// Copy with the orientation flag replaced; arcs are kept as-is.
    pub(crate) fn with_directed(&self, directed: bool) -> ColoredNetwork {
        let mut out = self.clone();
        out.graph.directed = directed;
        out
    }
}

/// Per-vertex incidence lists, in arc-id order. Undirected edges appear in
/// the lists of both endpoints.
pub(crate) struct Incidence {
    pub out: Vec<Vec<(ArcId, Vertex)>>,
}

impl Incidence {
    pub fn build(net: &ColoredNetwork, keep: impl Fn(ArcId) -> bool) -> Self {
        let mut out = vec![Vec::new(); net.num_vertices()];
        for a in net.arcs() {
            if !keep(a.id) {
                continue;
            }
            out[a.tail].push((a.id, a.head));
            if !net.directed() {
                out[a.head].push((a.id, a.tail));
            }
        }
        Incidence { out }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// T1: directed DAG on 4 vertices, s = 0, t = 3.
    pub fn t1() -> ColoredNetwork {
        let mut net = ColoredNetwork::new(true, 4, 0, 3, 2).unwrap();
        net.add_arc(0, 1, 1, [1, 2]).unwrap();
        net.add_arc(1, 3, 1, [1]).unwrap();
        net.add_arc(1, 2, 1, [2]).unwrap();
        net.add_arc(2, 3, 1, [2]).unwrap();
        net.add_arc(0, 3, 5, [1]).unwrap();
        net
    }

    /// Tight approximation example for k = 2: three parallel unit arcs 0 -> 1.
    pub fn tight2() -> ColoredNetwork {
        let mut net = ColoredNetwork::new(true, 2, 0, 1, 2).unwrap();
        net.add_arc(0, 1, 1, [1]).unwrap();
        net.add_arc(0, 1, 1, [2]).unwrap();
        net.add_arc(0, 1, 1, [1, 2]).unwrap();
        net
    }
}
