use std::collections::{HashMap, HashSet, VecDeque};

use super::network::{ArcId, ArcSet, Color, ColoredGraph, ColoredNetwork, Incidence, Vertex};
use super::report::{Certificate, SolutionReport, Variant};
use crate::error::{Error, Result};

/// Checks the invariants that parsing does not: a conservative cost function
/// for digraphs, nonnegative costs for undirected graphs.
pub fn validate_instance(net: &ColoredNetwork) -> Result<()> {
    if !net.directed() {
        if let Some(a) = net.arcs().iter().find(|a| a.cost < 0) {
            return Err(Error::NegativeUndirectedCost {
                arc: a.id,
                cost: a.cost,
            });
        }
        return Ok(());
    }
    match negative_cycle(net, |_| true, |a| net.arc(a).cost) {
        Some(cycle) => Err(Error::NegativeCycle { cycle }),
        None => Ok(()),
    }
}

/// Bellman-Ford from a virtual source joined to every vertex by a zero-cost
/// arc. Returns the arcs of some negative cycle among the kept arcs, in
/// traversal order.
pub(crate) fn negative_cycle(
    net: &ColoredNetwork,
    keep: impl Fn(ArcId) -> bool,
    cost: impl Fn(ArcId) -> i64,
) -> Option<Vec<ArcId>> {
    let n = net.num_vertices();
    let mut dist = vec![0i64; n];
    let mut parent: Vec<Option<ArcId>> = vec![None; n];
    let mut last_updated = None;
    for _round in 0..=n {
        last_updated = None;
        for a in net.arcs() {
            if !keep(a.id) {
                continue;
            }
            let c = cost(a.id);
            let mut relax = |from: Vertex, to: Vertex| {
                if dist[from] + c < dist[to] {
                    dist[to] = dist[from] + c;
                    parent[to] = Some(a.id);
                    last_updated = Some(to);
                }
            };
            relax(a.tail, a.head);
            if !net.directed() {
                relax(a.head, a.tail);
            }
        }
        last_updated?;
    }
    // Still relaxing after n rounds: walk back n steps to land on the cycle.
    let mut v = last_updated?;
    let tail_of = |arc: ArcId, head: Vertex| {
        net.arc(arc)
            .other_end(head)
            .expect("parent arc touches vertex")
    };
    for _ in 0..n {
        v = tail_of(parent[v]?, v);
    }
    let start = v;
    let mut cycle = Vec::new();
    loop {
        let arc = parent[v]?;
        cycle.push(arc);
        v = tail_of(arc, v);
        if v == start {
            break;
        }
    }
    cycle.reverse();
    Some(cycle)
}

/// If `arcs` is exactly a simple s-t path, returns it in traversal order.
pub fn is_exact_path_set(net: &ColoredNetwork, arcs: &ArcSet) -> Option<Vec<ArcId>> {
    trace_simple_path(net, arcs, net.s(), net.t())
}

/// If `arcs` is exactly a simple `from`-`to` path (`from != to`), returns it
/// in traversal order.
pub(crate) fn trace_simple_path(
    net: &ColoredNetwork,
    arcs: &ArcSet,
    from: Vertex,
    to: Vertex,
) -> Option<Vec<ArcId>> {
    if arcs.is_empty() || from == to {
        return None;
    }
    let mut out_deg: HashMap<Vertex, usize> = HashMap::new();
    let mut in_deg: HashMap<Vertex, usize> = HashMap::new();
    let mut incident: HashMap<Vertex, Vec<ArcId>> = HashMap::new();
    for a in arcs.iter() {
        let r = net.arc(a);
        *out_deg.entry(r.tail).or_default() += 1;
        *in_deg.entry(r.head).or_default() += 1;
        incident.entry(r.tail).or_default().push(a);
        if !net.directed() {
            incident.entry(r.head).or_default().push(a);
        }
    }
    let touched: HashSet<Vertex> = out_deg.keys().chain(in_deg.keys()).copied().collect();
    for &v in &touched {
        let (i, o) = (
            in_deg.get(&v).copied().unwrap_or(0),
            out_deg.get(&v).copied().unwrap_or(0),
        );
        let ok = if net.directed() {
            match v {
                _ if v == from => o == 1 && i == 0,
                _ if v == to => i == 1 && o == 0,
                _ => i == 1 && o == 1,
            }
        } else {
            let d = i + o;
            if v == from || v == to {
                d == 1
            } else {
                d == 2
            }
        };
        if !ok {
            return None;
        }
    }
    if !touched.contains(&from) || !touched.contains(&to) {
        return None;
    }
    // Walk from `from`; degree bounds make each step forced.
    let mut path = Vec::with_capacity(arcs.len());
    let mut used: HashSet<ArcId> = HashSet::new();
    let mut visited: HashSet<Vertex> = HashSet::from([from]);
    let mut cur = from;
    while cur != to {
        let next = incident
            .get(&cur)?
            .iter()
            .copied()
            .find(|a| !used.contains(a) && (!net.directed() || net.arc(*a).tail == cur))?;
        used.insert(next);
        path.push(next);
        cur = net.arc(next).other_end(cur)?;
        if !visited.insert(cur) {
            return None;
        }
    }
    (path.len() == arcs.len()).then_some(path)
}

/// Whether `t` is reachable from `s` using only `arcs`.
pub fn contains_st_path(net: &ColoredNetwork, arcs: &ArcSet) -> bool {
    find_path_within(net, arcs, net.s(), net.t()).is_some()
}

/// Fewest-arc `from`-`to` path inside `arcs` (breadth-first, arc ids in
/// increasing order), or `None`.
pub(crate) fn find_path_within(
    net: &ColoredNetwork,
    arcs: &ArcSet,
    from: Vertex,
    to: Vertex,
) -> Option<Vec<ArcId>> {
    let inc = Incidence::build(net, |a| arcs.contains(a));
    let mut parent: Vec<Option<ArcId>> = vec![None; net.num_vertices()];
    let mut seen = vec![false; net.num_vertices()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = Vec::new();
            let mut cur = to;
            while cur != from {
                let a = parent[cur].expect("reached vertex has a parent");
                path.push(a);
                cur = net
                    .arc(a)
                    .other_end(cur)
                    .expect("parent arc touches vertex");
            }
            path.reverse();
            return Some(path);
        }
        for &(a, w) in &inc.out[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(a);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Sum of arc costs, each arc counted once.
pub fn solution_cost(net: &ColoredNetwork, arcs: &ArcSet) -> i64 {
    arcs.iter().map(|a| net.arc(a).cost).sum()
}

/// Evaluates `arcs` against every color class. Certificates are filled for
/// the colors whose restriction passes, even when the whole set fails.
pub fn validate_solution(net: &ColoredNetwork, variant: Variant, arcs: &ArcSet) -> SolutionReport {
    let mut feasible = true;
    let mut certificates = Vec::new();
    for color in net.colors() {
        let restricted: ArcSet = arcs
            .iter()
            .filter(|&a| net.arc(a).has_color(color))
            .collect();
        let path = match variant {
            Variant::Exact => is_exact_path_set(net, &restricted),
            Variant::Superset => find_path_within(net, &restricted, net.s(), net.t()),
        };
        match path {
            Some(path) => certificates.push(Certificate { color, path }),
            None => feasible = false,
        }
    }
    SolutionReport {
        feasible,
        cost: feasible.then(|| solution_cost(net, arcs)),
        arcs: arcs.clone(),
        certificates,
        solver: "check".into(),
    }
}

/// Arcs that belong to at least two color classes.
pub fn multi_colored_arcs(net: &ColoredNetwork) -> ArcSet {
    net.arcs()
        .iter()
        .filter(|a| a.colors.len() >= 2)
        .map(|a| a.id)
        .collect()
}

/// One `(s_i, t_i)` terminal pair per color, in color order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalPairList(Vec<(Vertex, Vertex)>);

impl TerminalPairList {
    pub fn new(pairs: Vec<(Vertex, Vertex)>) -> Result<Self> {
        if let Some(&(s, _)) = pairs.iter().find(|(s, t)| s == t) {
            return Err(Error::EqualTerminals(s));
        }
        Ok(TerminalPairList(pairs))
    }

    pub fn pair(&self, color: Color) -> (Vertex, Vertex) {
        self.0[color as usize - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Reduces the per-color terminal version to a single `s`, `t` pair: two
/// fresh vertices, plus zero-cost arcs `s -> s_i` and `t_i -> t` of color `i`.
/// Original arcs keep their ids.
pub fn multi_terminal_reduce(
    graph: &ColoredGraph,
    pairs: &TerminalPairList,
) -> Result<ColoredNetwork> {
    if pairs.len() != graph.k() as usize {
        return Err(Error::Malformed(format!(
            "expected {} terminal pairs, got {}",
            graph.k(),
            pairs.len()
        )));
    }
    for &(a, b) in &pairs.0 {
        for v in [a, b] {
            if v >= graph.num_vertices() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    num_vertices: graph.num_vertices(),
                });
            }
        }
    }
    let mut g = graph.clone();
    let s = g.add_vertex();
    let t = g.add_vertex();
    for color in 1..=graph.k() {
        let (si, ti) = pairs.pair(color);
        g.add_arc(s, si, 0, [color])?;
        g.add_arc(ti, t, 0, [color])?;
    }
    ColoredNetwork::from_graph(g, s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fixtures::{t1, tight2};

    #[test]
    fn exact_path_predicate() {
        let net = t1();
        assert_eq!(
            is_exact_path_set(&net, &ArcSet::from([0, 1])),
            Some(vec![0, 1])
        );
        assert_eq!(is_exact_path_set(&net, &ArcSet::from([0, 1, 4])), None);
        assert_eq!(is_exact_path_set(&net, &ArcSet::new()), None);
        assert_eq!(
            is_exact_path_set(&net, &ArcSet::from([3, 2, 0])),
            Some(vec![0, 2, 3])
        );
        // a path plus a disjoint arc
        assert_eq!(is_exact_path_set(&net, &ArcSet::from([4, 2])), None);
    }

    #[test]
    fn exact_path_undirected() {
        let mut net = ColoredNetwork::new(false, 4, 0, 3, 1).unwrap();
        net.add_arc(1, 0, 1, [1]).unwrap();
        net.add_arc(2, 1, 1, [1]).unwrap();
        net.add_arc(3, 2, 1, [1]).unwrap();
        net.add_arc(0, 1, 1, [1]).unwrap();
        assert_eq!(
            is_exact_path_set(&net, &ArcSet::from([0, 1, 2])),
            Some(vec![0, 1, 2])
        );
        // parallel edges form a cycle at s
        assert_eq!(is_exact_path_set(&net, &ArcSet::from([0, 1, 2, 3])), None);
    }

    #[test]
    fn reachability_predicate() {
        let net = t1();
        assert!(contains_st_path(&net, &net.all_arcs()));
        assert!(!contains_st_path(&net, &ArcSet::from([2, 3])));

        let mut tri = ColoredNetwork::new(false, 3, 0, 2, 1).unwrap();
        tri.add_arc(0, 1, 1, [1]).unwrap();
        tri.add_arc(2, 1, 1, [1]).unwrap();
        tri.add_arc(0, 2, 1, [1]).unwrap();
        assert!(contains_st_path(&tri, &ArcSet::from([0, 1])));
    }

    #[test]
    fn costs() {
        let net = t1();
        assert_eq!(solution_cost(&net, &ArcSet::from([0, 1, 2, 3])), 4);
        assert_eq!(solution_cost(&net, &ArcSet::new()), 0);
        assert_eq!(solution_cost(&net, &ArcSet::from([4])), 5);
    }

    #[test]
    fn validates_solutions() {
        let net = t1();
        let r = validate_solution(&net, Variant::Exact, &ArcSet::from([0, 1, 2, 3]));
        assert!(r.feasible);
        assert_eq!(r.cost, Some(4));
        assert_eq!(
            r.certificates,
            vec![
                Certificate {
                    color: 1,
                    path: vec![0, 1]
                },
                Certificate {
                    color: 2,
                    path: vec![0, 2, 3]
                }
            ]
        );

        let r = validate_solution(&net, Variant::Exact, &ArcSet::from([4, 0, 2, 3]));
        assert!(!r.feasible);
        assert_eq!(r.cost, None);
        assert_eq!(
            r.certificates,
            vec![Certificate {
                color: 2,
                path: vec![0, 2, 3]
            }]
        );

        let r = validate_solution(&net, Variant::Superset, &net.all_arcs());
        assert!(r.feasible);
        assert_eq!(r.cost, Some(9));
    }

    #[test]
    fn instance_validation() {
        assert_eq!(validate_instance(&t1()), Ok(()));

        let mut cyc = ColoredNetwork::new(true, 3, 0, 2, 1).unwrap();
        cyc.add_arc(0, 1, -1, [1]).unwrap();
        cyc.add_arc(1, 0, 0, [1]).unwrap();
        cyc.add_arc(1, 2, 0, [1]).unwrap();
        match validate_instance(&cyc) {
            Err(Error::NegativeCycle { cycle }) => {
                let mut sorted = cycle.clone();
                sorted.sort();
                assert_eq!(sorted, vec![0, 1]);
                let cost: i64 = cycle.iter().map(|&a| cyc.arc(a).cost).sum();
                assert_eq!(cost, -1);
            }
            other => panic!("expected negative cycle, got {other:?}"),
        }

        let mut und = ColoredNetwork::new(false, 2, 0, 1, 1).unwrap();
        und.add_arc(0, 1, -3, [1]).unwrap();
        assert_eq!(
            validate_instance(&und),
            Err(Error::NegativeUndirectedCost { arc: 0, cost: -3 })
        );

        // negative arc without a cycle is fine
        let mut dag = ColoredNetwork::new(true, 2, 0, 1, 1).unwrap();
        dag.add_arc(0, 1, -2, [1]).unwrap();
        assert_eq!(validate_instance(&dag), Ok(()));
    }

    #[test]
    fn multi_colored() {
        assert_eq!(multi_colored_arcs(&t1()), ArcSet::from([0]));
        assert_eq!(multi_colored_arcs(&tight2()), ArcSet::from([2]));
        let mut single = ColoredNetwork::new(true, 2, 0, 1, 2).unwrap();
        single.add_arc(0, 1, 1, [1]).unwrap();
        single.add_arc(0, 1, 1, [2]).unwrap();
        assert!(multi_colored_arcs(&single).is_empty());
    }

    #[test]
    fn reduce_multi_terminal() {
        let mut g = ColoredGraph::new(true, 3, 1).unwrap();
        g.add_arc(0, 1, 2, [1]).unwrap();
        let pairs = TerminalPairList::new(vec![(0, 1)]).unwrap();
        let net = multi_terminal_reduce(&g, &pairs).unwrap();
        assert_eq!(net.num_arcs(), 3);
        assert_eq!((net.s(), net.t()), (3, 4));
        assert_eq!((net.arc(1).tail, net.arc(1).head), (3, 0));
        assert_eq!((net.arc(2).tail, net.arc(2).head), (1, 4));
        assert_eq!(net.arc(0), g.arcs().first().unwrap());

        let mut g2 = ColoredGraph::new(true, 3, 2).unwrap();
        g2.add_arc(0, 1, 1, [1, 2]).unwrap();
        let pairs = TerminalPairList::new(vec![(0, 1), (0, 1)]).unwrap();
        let net = multi_terminal_reduce(&g2, &pairs).unwrap();
        assert_eq!(net.num_arcs(), 5);
        assert_eq!(net.class(1).len(), 3);
        assert_eq!(net.class(2).len(), 3);
        assert!(net.arcs()[1..]
            .iter()
            .all(|a| a.cost == 0 && a.colors.len() == 1));

        assert!(TerminalPairList::new(vec![(2, 2)]).is_err());
    }
}
