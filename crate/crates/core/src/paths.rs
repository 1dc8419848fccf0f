//! Shortest-path engines shared by the solvers.
//!
//! Every engine minimizes the same lexicographic label: effective cost, then
//! number of counted arcs, then the sorted sequence of counted arc ids. The
//! label order is compatible with appending an arc, so label-setting and
//! label-correcting searches stay exact, and ties are broken the same way by
//! every solver.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::model::{negative_cycle, ArcId, ArcSet, Color, ColoredNetwork, Incidence, Vertex};

/// Effective arc costs: the network's costs with per-arc overrides.
///
/// A *free* arc costs 0 and is ignored by the tie-break; solvers mark arcs
/// free when they are already part of the solution being assembled.
#[derive(Clone, Debug, Default)]
pub struct ArcCosts {
    overrides: HashMap<ArcId, i64>,
    free: HashSet<ArcId>,
}

impl ArcCosts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_override(mut self, arc: ArcId, cost: i64) -> Self {
        self.overrides.insert(arc, cost);
        self
    }

    pub fn set_override(&mut self, arc: ArcId, cost: i64) {
        self.overrides.insert(arc, cost);
    }

    pub fn set_free(&mut self, arc: ArcId) {
        self.free.insert(arc);
    }

    pub fn is_free(&self, arc: ArcId) -> bool {
        self.free.contains(&arc)
    }

    pub fn cost(&self, net: &ColoredNetwork, arc: ArcId) -> i64 {
        if self.free.contains(&arc) {
            0
        } else {
            self.overrides
                .get(&arc)
                .copied()
                .unwrap_or(net.arc(arc).cost)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Label {
    pub cost: i64,
    pub len: usize,
    /// Sorted multiset of counted arc ids.
    pub ids: Vec<ArcId>,
}

impl Label {
    pub fn zero() -> Self {
        Label {
            cost: 0,
            len: 0,
            ids: Vec::new(),
        }
    }

    pub fn extend(&self, arc: ArcId, cost: i64, counted: bool) -> Label {
        let mut next = self.clone();
        next.cost += cost;
        if counted {
            next.len += 1;
            let pos = next.ids.partition_point(|&x| x <= arc);
            next.ids.insert(pos, arc);
        }
        next
    }
}

/// Single-source shortest-path tree.
#[derive(Clone, Debug)]
pub struct DistanceTable {
    source: Vertex,
    dist: Vec<Option<i64>>,
    parent: Vec<Option<ArcId>>,
    labels: Vec<Option<Label>>,
}

impl DistanceTable {
    fn new(n: usize, source: Vertex) -> Self {
        let mut labels = vec![None; n];
        labels[source] = Some(Label::zero());
        DistanceTable {
            source,
            dist: Vec::new(),
            parent: vec![None; n],
            labels,
        }
    }

    fn finish(mut self) -> Self {
        self.dist = self
            .labels
            .iter()
            .map(|l| l.as_ref().map(|l| l.cost))
            .collect();
        self
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    /// Distance to `v`, or `None` if unreachable.
    pub fn dist(&self, v: Vertex) -> Option<i64> {
        self.dist[v]
    }

    pub fn parent(&self, v: Vertex) -> Option<ArcId> {
        self.parent[v]
    }

    pub fn reachable(&self, v: Vertex) -> bool {
        self.dist[v].is_some()
    }

    /// Arcs of the tree path from the source to `v`, in order.
    pub fn path_to(&self, net: &ColoredNetwork, v: Vertex) -> Option<Vec<ArcId>> {
        self.dist[v]?;
        let mut walk = Vec::new();
        let mut cur = v;
        while cur != self.source {
            if walk.len() > net.num_vertices() {
                return None;
            }
            let arc = self.parent[cur]?;
            walk.push(arc);
            cur = net.arc(arc).other_end(cur)?;
        }
        walk.reverse();
        Some(erase_cycles(net, self.source, &walk))
    }

    pub(crate) fn label(&self, v: Vertex) -> Option<&Label> {
        self.labels[v].as_ref()
    }
}

/// Removes closed sub-walks so that no vertex repeats.
pub fn erase_cycles(net: &ColoredNetwork, start: Vertex, walk: &[ArcId]) -> Vec<ArcId> {
    let mut out: Vec<ArcId> = Vec::with_capacity(walk.len());
    // vertex -> number of arcs in `out` when it was reached
    let mut at: HashMap<Vertex, usize> = HashMap::from([(start, 0)]);
    let mut cur = start;
    for &arc in walk {
        cur = net.arc(arc).other_end(cur).expect("walk is connected");
        out.push(arc);
        if let Some(&len) = at.get(&cur) {
            // drop the loop back to the first visit of `cur`
            let mut v = start;
            at.clear();
            at.insert(start, 0);
            out.truncate(len);
            for (i, &a) in out.iter().enumerate() {
                v = net.arc(a).other_end(v).expect("walk is connected");
                at.insert(v, i + 1);
            }
        } else {
            at.insert(cur, out.len());
        }
    }
    out
}

fn relax_targets(net: &ColoredNetwork, arc: ArcId, from: Vertex) -> Option<Vertex> {
    let a = net.arc(arc);
    if a.tail == from {
        Some(a.head)
    } else if !net.directed() && a.head == from {
        Some(a.tail)
    } else {
        None
    }
}

/// Label-correcting (Bellman-Ford) shortest paths; accepts negative costs as
/// long as the filtered subgraph has no negative cycle.
pub fn conservative_shortest(
    net: &ColoredNetwork,
    filter: &ArcSet,
    source: Vertex,
    costs: &ArcCosts,
) -> Result<DistanceTable> {
    conservative_with(net, &|a| filter.contains(a), source, costs)
}

pub(crate) fn conservative_with(
    net: &ColoredNetwork,
    keep: &dyn Fn(ArcId) -> bool,
    source: Vertex,
    costs: &ArcCosts,
) -> Result<DistanceTable> {
    let n = net.num_vertices();
    let mut table = DistanceTable::new(n, source);
    let kept: Vec<ArcId> = (0..net.num_arcs()).filter(|&a| keep(a)).collect();
    for _round in 0..n {
        let mut changed = false;
        for &arc in &kept {
            let a = net.arc(arc);
            let ends: &[(Vertex, Vertex)] = if net.directed() {
                &[(a.tail, a.head)]
            } else {
                &[(a.tail, a.head), (a.head, a.tail)]
            };
            for &(u, v) in ends {
                let Some(lu) = &table.labels[u] else { continue };
                let cand = lu.extend(arc, costs.cost(net, arc), !costs.is_free(arc));
                if table.labels[v].as_ref().is_none_or(|lv| cand < *lv) && v != source {
                    table.labels[v] = Some(cand);
                    table.parent[v] = Some(arc);
                    changed = true;
                }
            }
        }
        if !changed {
            // the source label is pinned at zero, so a negative cycle through
            // it shows up as a negative-cost way back into the source
            let back_into_source = kept.iter().any(|&arc| {
                let a = net.arc(arc);
                let ends: &[(Vertex, Vertex)] = if net.directed() {
                    &[(a.tail, a.head)]
                } else {
                    &[(a.tail, a.head), (a.head, a.tail)]
                };
                ends.iter().any(|&(u, v)| {
                    v == source
                        && table.labels[u]
                            .as_ref()
                            .is_some_and(|l| l.cost + costs.cost(net, arc) < 0)
                })
            });
            if !back_into_source {
                return Ok(table.finish());
            }
            break;
        }
    }
    let cycle = negative_cycle(net, keep, |a| costs.cost(net, a)).unwrap_or_default();
    Err(Error::NegativeCycle { cycle })
}

/// Label-setting (Dijkstra) shortest paths; every filtered arc must have a
/// nonnegative effective cost. Undirected edges are traversable both ways.
pub fn nonneg_shortest(
    net: &ColoredNetwork,
    filter: &ArcSet,
    source: Vertex,
    costs: &ArcCosts,
) -> Result<DistanceTable> {
    nonneg_with(net, &|a| filter.contains(a), source, costs)
}

pub(crate) fn nonneg_with(
    net: &ColoredNetwork,
    keep: &dyn Fn(ArcId) -> bool,
    source: Vertex,
    costs: &ArcCosts,
) -> Result<DistanceTable> {
    let inc = Incidence::build(net, keep);
    for a in (0..net.num_arcs()).filter(|&a| keep(a)) {
        let c = costs.cost(net, a);
        if c < 0 {
            return Err(Error::NegativeEffectiveCost { arc: a, cost: c });
        }
    }
    let mut table = DistanceTable::new(net.num_vertices(), source);
    let mut done = vec![false; net.num_vertices()];
    let mut heap = BinaryHeap::from([Reverse((Label::zero(), source))]);
    while let Some(Reverse((label, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &(arc, _) in &inc.out[u] {
            let Some(v) = relax_targets(net, arc, u) else {
                continue;
            };
            if done[v] {
                continue;
            }
            let cand = label.extend(arc, costs.cost(net, arc), !costs.is_free(arc));
            if table.labels[v].as_ref().is_none_or(|lv| cand < *lv) {
                table.labels[v] = Some(cand.clone());
                table.parent[v] = Some(arc);
                heap.push(Reverse((cand, v)));
            }
        }
    }
    Ok(table.finish())
}

/// Topological order of the vertices w.r.t. the filtered arcs (taken as
/// tail -> head), smallest index first among ties; `None` if there is a
/// directed cycle.
pub fn topological_order(net: &ColoredNetwork, filter: &ArcSet) -> Option<Vec<Vertex>> {
    topological_order_with(net, |a| filter.contains(a))
}

pub(crate) fn topological_order_with(
    net: &ColoredNetwork,
    keep: impl Fn(ArcId) -> bool,
) -> Option<Vec<Vertex>> {
    let n = net.num_vertices();
    let mut indeg = vec![0usize; n];
    let mut succ: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for a in net.arcs().iter().filter(|a| keep(a.id)) {
        indeg[a.head] += 1;
        succ[a.tail].push(a.head);
    }
    let mut ready: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(Reverse(w));
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// A path together with its effective cost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostedPath {
    pub arcs: Vec<ArcId>,
    pub cost: i64,
}

/// Best `from`-`to` path over the kept arcs under `costs`, picking the engine
/// by the sign of the effective costs.
pub(crate) fn best_path(
    net: &ColoredNetwork,
    keep: &dyn Fn(ArcId) -> bool,
    from: Vertex,
    to: Vertex,
    costs: &ArcCosts,
) -> Result<Option<CostedPath>> {
    let negative = (0..net.num_arcs()).any(|a| keep(a) && costs.cost(net, a) < 0);
    let table = if negative {
        conservative_with(net, keep, from, costs)?
    } else {
        nonneg_with(net, keep, from, costs)?
    };
    Ok(table.path_to(net, to).map(|arcs| CostedPath {
        cost: table.label(to).map(|l| l.cost).unwrap_or_default(),
        arcs,
    }))
}

/// Minimum-cost simple s-t path inside color class `color`, or `None` if the
/// class does not connect s to t.
pub fn shortest_st_in_color(
    net: &ColoredNetwork,
    color: Color,
    costs: &ArcCosts,
) -> Result<Option<CostedPath>> {
    best_path(
        net,
        &|a| net.arc(a).has_color(color),
        net.s(),
        net.t(),
        costs,
    )
}
