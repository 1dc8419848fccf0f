//! Strategies and brute-force helpers shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;

use simpath::model::{ArcId, ArcSet, Color, ColoredNetwork, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Dag,
    Digraph,
    Undirected,
}

/// Small instances of one kind. Directed instances may get negative costs
/// through a vertex potential, which keeps every cycle nonnegative.
pub fn network(kind: Kind, max_arcs: usize) -> impl Strategy<Value = ColoredNetwork> {
    (2usize..=6, 1u32..=3, any::<bool>())
        .prop_flat_map(move |(n, k, negative)| {
            let arc = (0..n, 1..n, 0i64..=4, 1u64..(1u64 << k));
            (
                Just((n, k)),
                prop::collection::vec(arc, 1..=max_arcs),
                prop::collection::vec(0i64..=3, n),
                Just(negative && kind != Kind::Undirected),
                0..n,
                1..n,
            )
        })
        .prop_map(move |((n, k), arcs, potential, negative, s0, dt)| {
            let (s, t) = match kind {
                Kind::Dag => (0, n - 1),
                _ => (s0, (s0 + dt) % n),
            };
            let mut net = ColoredNetwork::new(kind != Kind::Undirected, n, s, t, k).unwrap();
            for (a, d, cost, mask) in arcs {
                let b = (a + d) % n;
                let (tail, head) = match kind {
                    Kind::Dag => (a.min(b), a.max(b)),
                    _ => (a, b),
                };
                let shift = if negative {
                    potential[tail] - potential[head]
                } else {
                    0
                };
                let colors: Vec<Color> = (1..=k).filter(|c| mask >> (c - 1) & 1 == 1).collect();
                net.add_arc(tail, head, cost + shift, colors).unwrap();
            }
            net
        })
}

pub fn any_network(max_arcs: usize) -> impl Strategy<Value = ColoredNetwork> {
    prop_oneof![
        network(Kind::Dag, max_arcs),
        network(Kind::Digraph, max_arcs),
        network(Kind::Undirected, max_arcs),
    ]
}

/// Instances whose color family is laminar: colors are split into chains
/// and every arc carries a prefix of one chain, so each chain's classes are
/// nested and classes of different chains are disjoint.
pub fn laminar_network(max_arcs: usize) -> impl Strategy<Value = ColoredNetwork> {
    (any_network(max_arcs), 1u32..=3, any::<u64>()).prop_map(|(net, k, split)| {
        let colors: Vec<Color> = (1..=k).collect();
        let cut = (split % k as u64) as usize + 1;
        let chains = [colors[..cut].to_vec(), colors[cut..].to_vec()];
        let mut out =
            ColoredNetwork::new(net.directed(), net.num_vertices(), net.s(), net.t(), k).unwrap();
        for (i, a) in net.arcs().iter().enumerate() {
            let salt = split.rotate_left(i as u32 * 7);
            let chain = chains
                .iter()
                .filter(|c| !c.is_empty())
                .nth((salt % 2) as usize)
                .unwrap_or(&chains[0]);
            let depth = (salt >> 8) as usize % chain.len() + 1;
            out.add_arc(a.tail, a.head, a.cost, chain[..depth].iter().copied())
                .unwrap();
        }
        out
    })
}

/// Every simple path from `from` to `to` using only `arcs`.
pub fn simple_paths(
    net: &ColoredNetwork,
    arcs: &ArcSet,
    from: Vertex,
    to: Vertex,
) -> Vec<Vec<ArcId>> {
    fn walk(
        net: &ColoredNetwork,
        arcs: &ArcSet,
        at: Vertex,
        to: Vertex,
        seen: &mut BTreeSet<Vertex>,
        path: &mut Vec<ArcId>,
        out: &mut Vec<Vec<ArcId>>,
    ) {
        if at == to {
            out.push(path.clone());
            return;
        }
        for a in arcs.iter() {
            let arc = net.arc(a);
            let next = if arc.tail == at {
                arc.head
            } else if !net.directed() && arc.head == at {
                arc.tail
            } else {
                continue;
            };
            if seen.insert(next) {
                path.push(a);
                walk(net, arcs, next, to, seen, path, out);
                path.pop();
                seen.remove(&next);
            }
        }
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::from([from]);
    walk(net, arcs, from, to, &mut seen, &mut Vec::new(), &mut out);
    out
}

pub fn path_cost(net: &ColoredNetwork, path: &[ArcId]) -> i64 {
    path.iter().map(|&a| net.arc(a).cost).sum()
}

/// All subsets of the arc set of a network with few arcs.
pub fn all_subsets(net: &ColoredNetwork) -> impl Iterator<Item = ArcSet> + '_ {
    let m = net.num_arcs();
    (0u64..1 << m).map(move |mask| (0..m).filter(|&a| mask >> a & 1 == 1).collect())
}

pub fn subset_of(net: &ColoredNetwork, mask: u64) -> ArcSet {
    (0..net.num_arcs())
        .filter(|&a| mask >> a & 1 == 1)
        .collect()
}
