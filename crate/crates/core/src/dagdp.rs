//! Product-state dynamic programs for acyclic digraphs with a constant
//! number of colors.
//!
//! A state is a k-tuple of vertices, one cursor per color, starting at
//! `(s, ..., s)` and ending at `(t, ..., t)`. A move along arc `xy` advances
//! cursors sitting at `x` to `y`: in the exact variant all cursors of the
//! arc's colors must move together, in the superset variant any nonempty
//! subset of them may. States are generated on demand; only reachable ones
//! are ever stored.
//!
//! Moves are only generated from the occupied vertex of lowest topological
//! rank. Any solution can be replayed under that schedule: when the lowest
//! cursor at `x` is due to take arc `xy`, every other color whose path uses
//! `xy` must already sit at `x`, since a position earlier on its path would
//! have a lower rank.
//!
//! Every move strictly increases the sum of the cursors' topological ranks,
//! so processing states in order of that sum finalizes each state before it
//! is expanded, negative costs included.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::model::{ArcId, ArcSet, Color, ColoredNetwork, SolutionReport, Variant, Vertex};
use crate::paths::{topological_order_with, ArcCosts, Label};

pub const DEFAULT_MAX_STATES: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DagDpConfig {
    /// Upper bound on the number of discovered product states.
    pub max_states: usize,
}

impl Default for DagDpConfig {
    fn default() -> Self {
        DagDpConfig {
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

/// A k-tuple of cursor positions; entry `i` belongs to color `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductState(pub Vec<Vertex>);

/// One step of a product path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductMove {
    pub arc: ArcId,
    /// Colors whose cursors moved, ascending.
    pub colors: Vec<Color>,
    pub from: ProductState,
    pub to: ProductState,
}

/// A solution together with the product path it was read off.
#[derive(Clone, Debug)]
pub struct DagTrace {
    pub report: SolutionReport,
    pub moves: Vec<ProductMove>,
    /// Cost of the product path under the costs the search used (negative
    /// arcs count 0 in the superset variant; they are added separately).
    pub product_cost: i64,
    /// Number of distinct states discovered.
    pub states: usize,
}

pub fn solve_exact_dag(net: &ColoredNetwork, config: &DagDpConfig) -> Result<SolutionReport> {
    Ok(trace_dag(net, Variant::Exact, config)?.report)
}

pub fn solve_superset_dag(net: &ColoredNetwork, config: &DagDpConfig) -> Result<SolutionReport> {
    Ok(trace_dag(net, Variant::Superset, config)?.report)
}

pub fn solve_dag(
    net: &ColoredNetwork,
    variant: Variant,
    config: &DagDpConfig,
) -> Result<SolutionReport> {
    Ok(trace_dag(net, variant, config)?.report)
}

const SOLVER: &str = "dag-dp";

/// The network with pendant terminals attached where needed so that `s` is
/// a source and `t` a sink. Pendant arcs carry every color and cost 0.
struct Normalized {
    net: ColoredNetwork,
    /// Ids at or above this are pendant arcs.
    first_pendant: ArcId,
}

fn normalize_terminals(net: &ColoredNetwork) -> Result<Normalized> {
    let has_in_s = net.arcs().iter().any(|a| a.head == net.s());
    let has_out_t = net.arcs().iter().any(|a| a.tail == net.t());
    if !has_in_s && !has_out_t {
        return Ok(Normalized {
            net: net.clone(),
            first_pendant: net.num_arcs(),
        });
    }
    let mut g = net.graph().clone();
    let all: Vec<Color> = net.colors().collect();
    let mut s = net.s();
    let mut t = net.t();
    if has_in_s {
        s = g.add_vertex();
        g.add_arc(s, net.s(), 0, all.iter().copied())?;
    }
    if has_out_t {
        t = g.add_vertex();
        g.add_arc(net.t(), t, 0, all.iter().copied())?;
    }
    Ok(Normalized {
        net: ColoredNetwork::from_graph(g, s, t)?,
        first_pendant: net.num_arcs(),
    })
}

struct Node {
    state: Vec<Vertex>,
    label: Label,
    parent: Option<(usize, ArcId, u64)>,
    done: bool,
}

/// Runs the product search and returns the solution with its product path.
pub fn trace_dag(net: &ColoredNetwork, variant: Variant, config: &DagDpConfig) -> Result<DagTrace> {
    if !net.directed() {
        return Err(Error::NotDirected);
    }
    let norm = normalize_terminals(net)?;
    let work = &norm.net;
    let order = topological_order_with(work, |_| true).ok_or(Error::NotDag)?;
    let mut rank = vec![0u64; work.num_vertices()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i as u64;
    }

    // superset: negative arcs belong to every optimum, so they are taken up
    // front and cost nothing inside the search
    let forced: ArcSet = match variant {
        Variant::Superset => net
            .arcs()
            .iter()
            .filter(|a| a.cost < 0)
            .map(|a| a.id)
            .collect(),
        Variant::Exact => ArcSet::new(),
    };
    let mut costs = ArcCosts::new();
    for a in forced.iter().chain(norm.first_pendant..work.num_arcs()) {
        costs.set_free(a);
    }

    let k = work.k() as usize;
    let mut out: Vec<Vec<ArcId>> = vec![Vec::new(); work.num_vertices()];
    for a in work.arcs() {
        out[a.tail].push(a.id);
    }
    let masks: Vec<u64> = work.arcs().iter().map(|a| a.colors.mask()).collect();

    let start = vec![work.s(); k];
    let goal = vec![work.t(); k];
    let mut nodes = vec![Node {
        state: start.clone(),
        label: Label::zero(),
        parent: None,
        done: false,
    }];
    let mut index: HashMap<Vec<Vertex>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut heap = BinaryHeap::from([Reverse((rank[work.s()] * k as u64, 0usize))]);
    let mut found = None;

    while let Some(Reverse((_, idx))) = heap.pop() {
        if nodes[idx].done {
            continue;
        }
        nodes[idx].done = true;
        if nodes[idx].state == goal {
            found = Some(idx);
            break;
        }
        let state = nodes[idx].state.clone();
        let label = nodes[idx].label.clone();
        // only cursors on the lowest-ranked occupied vertex move; see the
        // module docs for why no solution is lost
        let lowest = state.iter().copied().min_by_key(|&v| rank[v]);
        if let Some(x) = lowest {
            let at_x = state
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v == x)
                .fold(0u64, |m, (i, _)| m | 1 << i);
            for &arc in &out[x] {
                let colors = masks[arc];
                let movable = match variant {
                    Variant::Exact if colors & !at_x != 0 => continue,
                    Variant::Exact => colors,
                    Variant::Superset => colors & at_x,
                };
                if movable == 0 {
                    continue;
                }
                let head = work.arc(arc).head;
                let step = label.extend(arc, costs.cost(work, arc), !costs.is_free(arc));
                let mut subset = movable;
                loop {
                    let mut next = state.clone();
                    for (i, slot) in next.iter_mut().enumerate() {
                        if subset >> i & 1 == 1 {
                            *slot = head;
                        }
                    }
                    let key = next.iter().map(|&v| rank[v]).sum::<u64>();
                    match index.get(&next) {
                        Some(&j) => {
                            if !nodes[j].done && step < nodes[j].label {
                                nodes[j].label = step.clone();
                                nodes[j].parent = Some((idx, arc, subset));
                            }
                        }
                        None => {
                            if nodes.len() >= config.max_states {
                                return Err(Error::StateBudgetExceeded {
                                    limit: config.max_states,
                                });
                            }
                            index.insert(next.clone(), nodes.len());
                            heap.push(Reverse((key, nodes.len())));
                            nodes.push(Node {
                                state: next,
                                label: step.clone(),
                                parent: Some((idx, arc, subset)),
                                done: false,
                            });
                        }
                    }
                    if variant == Variant::Exact {
                        break;
                    }
                    // next nonempty submask of `movable`
                    subset = (subset - 1) & movable;
                    if subset == 0 {
                        break;
                    }
                }
            }
        }
    }

    let states = nodes.len();
    let Some(goal_idx) = found else {
        return Ok(DagTrace {
            report: SolutionReport::infeasible(SOLVER),
            moves: Vec::new(),
            product_cost: 0,
            states,
        });
    };

    let restore = |v: Vertex| -> Vertex {
        if v == work.s() {
            net.s()
        } else if v == work.t() {
            net.t()
        } else {
            v
        }
    };
    let mut moves = Vec::new();
    let mut arcs = forced.clone();
    let mut cur = goal_idx;
    while let Some((prev, arc, subset)) = nodes[cur].parent {
        if arc < norm.first_pendant {
            arcs.insert(arc);
            moves.push(ProductMove {
                arc,
                colors: (0..k)
                    .filter(|i| subset >> i & 1 == 1)
                    .map(|i| i as Color + 1)
                    .collect(),
                from: ProductState(nodes[prev].state.iter().map(|&v| restore(v)).collect()),
                to: ProductState(nodes[cur].state.iter().map(|&v| restore(v)).collect()),
            });
        }
        cur = prev;
    }
    moves.reverse();
    Ok(DagTrace {
        report: SolutionReport::from_arcs(net, variant, arcs, SOLVER),
        moves,
        product_cost: nodes[goal_idx].label.cost,
        states,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fixtures::{t1, tight2};
    use crate::model::solution_cost;

    #[test]
    fn exact_t1() {
        let net = t1();
        let trace = trace_dag(&net, Variant::Exact, &DagDpConfig::default()).unwrap();
        assert!(trace.report.feasible);
        assert_eq!(trace.report.cost, Some(4));
        assert_eq!(trace.report.arcs, ArcSet::from([0, 1, 2, 3]));
        assert_eq!(trace.product_cost, solution_cost(&net, &trace.report.arcs));
        assert_eq!(trace.moves.first().unwrap().from, ProductState(vec![0, 0]));
        assert_eq!(trace.moves.last().unwrap().to, ProductState(vec![3, 3]));
        // the shared arc moves both cursors at once
        assert_eq!(trace.moves[0].colors, vec![1, 2]);
    }

    #[test]
    fn superset_t1_and_tight() {
        let r = solve_superset_dag(&t1(), &DagDpConfig::default()).unwrap();
        assert_eq!(r.cost, Some(4));
        let r = solve_superset_dag(&tight2(), &DagDpConfig::default()).unwrap();
        assert_eq!(r.cost, Some(1));
        assert_eq!(r.arcs, ArcSet::from([2]));
        assert_eq!(r.solver, "dag-dp");
    }

    #[test]
    fn exact_tight_shared_arc() {
        // the shared arc alone is a path in both classes
        let r = solve_exact_dag(&tight2(), &DagDpConfig::default()).unwrap();
        assert_eq!(r.arcs, ArcSet::from([2]));
        assert_eq!(r.cost, Some(1));
    }

    #[test]
    fn rejects_cycles_and_undirected() {
        let mut cyc = ColoredNetwork::new(true, 3, 0, 2, 1).unwrap();
        cyc.add_arc(0, 1, 1, [1]).unwrap();
        cyc.add_arc(1, 0, 1, [1]).unwrap();
        cyc.add_arc(1, 2, 1, [1]).unwrap();
        assert_eq!(
            solve_exact_dag(&cyc, &DagDpConfig::default()),
            Err(Error::NotDag)
        );
        let und = ColoredNetwork::new(false, 2, 0, 1, 1).unwrap();
        assert_eq!(
            solve_exact_dag(&und, &DagDpConfig::default()),
            Err(Error::NotDirected)
        );
    }

    #[test]
    fn state_budget() {
        let cfg = DagDpConfig { max_states: 2 };
        assert_eq!(
            solve_exact_dag(&t1(), &cfg),
            Err(Error::StateBudgetExceeded { limit: 2 })
        );
    }

    #[test]
    fn pendant_terminals_are_stripped() {
        // s has an incoming arc and t an outgoing one
        let mut net = ColoredNetwork::new(true, 4, 1, 2, 1).unwrap();
        net.add_arc(0, 1, 1, [1]).unwrap();
        net.add_arc(1, 2, 3, [1]).unwrap();
        net.add_arc(2, 3, 1, [1]).unwrap();
        let trace = trace_dag(&net, Variant::Exact, &DagDpConfig::default()).unwrap();
        assert_eq!(trace.report.arcs, ArcSet::from([1]));
        assert_eq!(trace.report.cost, Some(3));
        assert_eq!(trace.moves.len(), 1);
        assert_eq!(trace.moves[0].from, ProductState(vec![1]));
    }

    #[test]
    fn superset_forces_negative_arcs() {
        let mut net = ColoredNetwork::new(true, 4, 0, 1, 1).unwrap();
        net.add_arc(0, 1, 2, [1]).unwrap();
        net.add_arc(2, 3, -4, [1]).unwrap();
        let r = solve_superset_dag(&net, &DagDpConfig::default()).unwrap();
        assert_eq!(r.arcs, ArcSet::from([0, 1]));
        assert_eq!(r.cost, Some(-2));
    }

    #[test]
    fn infeasible_exact() {
        // color 2 would need the shared arc 0 -> 1, which drags color 1 along
        // into a dead end
        let mut net = ColoredNetwork::new(true, 3, 0, 2, 2).unwrap();
        net.add_arc(0, 1, 1, [1, 2]).unwrap();
        net.add_arc(1, 2, 1, [2]).unwrap();
        net.add_arc(0, 2, 1, [1]).unwrap();
        let r = solve_exact_dag(&net, &DagDpConfig::default()).unwrap();
        assert!(!r.feasible);
        assert_eq!(r, SolutionReport::infeasible("dag-dp"));
    }
}
