//! Solvers that enumerate subsets of the multi-colored arcs.
//!
//! With `F` the set of arcs carrying two or more colors and `ℓ = |F|`, the
//! superset solver runs `k` shortest-path computations for each of the `2^ℓ`
//! subsets of `F`, and the exact existence solver turns each admissible
//! subset into disjoint-paths queries over the single-colored arcs.

mod disjoint;

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use rayon::prelude::*;

pub use disjoint::{vertex_disjoint_paths, DisjointPathsQuery, DEFAULT_MAX_SEARCH_NODES};

use crate::error::{Error, Result};
use crate::model::{
    contains_st_path, multi_colored_arcs, validate_solution, ArcId, ArcSet, ColoredNetwork,
    Incidence, SolutionKey, SolutionReport, Variant, Vertex,
};
use crate::paths::Label;

pub const DEFAULT_MAX_ELL: usize = 20;
pub const DEFAULT_MAX_EXISTENCE_ELL: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FptConfig {
    pub max_ell: usize,
    /// Worker threads for the subset enumeration; `None` uses rayon's
    /// global pool.
    pub threads: Option<usize>,
}

impl Default for FptConfig {
    fn default() -> Self {
        FptConfig {
            max_ell: DEFAULT_MAX_ELL,
            threads: None,
        }
    }
}

/// Minimum-cost superset solution, exact for any number of colors.
///
/// Negative arcs are part of every optimum; they are taken up front and
/// priced at 0 while paths are chosen. For each subset `F'` of the remaining
/// multi-colored arcs, the arcs of `F'` are made free, one best path per
/// color is computed, and the union is priced at true cost. Members of `F'`
/// that no path uses are simply absent from the union.
pub fn solve_superset_fpt(net: &ColoredNetwork, config: &FptConfig) -> Result<SolutionReport> {
    const SOLVER: &str = "fpt";
    let multi = multi_colored_arcs(net);
    if multi.len() > config.max_ell {
        return Err(Error::EllBudgetExceeded {
            ell: multi.len(),
            cap: config.max_ell,
        });
    }
    if !net.colors().all(|c| contains_st_path(net, &net.class(c))) {
        return Ok(SolutionReport::infeasible(SOLVER));
    }
    let negative: ArcSet = net
        .arcs()
        .iter()
        .filter(|a| a.cost < 0)
        .map(|a| a.id)
        .collect();
    let pool: Vec<ArcId> = multi.iter().filter(|&a| !negative.contains(a)).collect();

    let adjacency: Vec<Vec<Vec<(ArcId, Vertex)>>> = net
        .colors()
        .map(|c| Incidence::build(net, |a| net.arc(a).has_color(c)).out)
        .collect();
    let mut base_free = vec![false; net.num_arcs()];
    for a in negative.iter() {
        base_free[a] = true;
    }

    let candidate = |mask: u64| -> Result<SolutionKey> {
        let mut free = base_free.clone();
        for (i, &a) in pool.iter().enumerate() {
            if mask >> i & 1 == 1 {
                free[a] = true;
            }
        }
        let mut arcs = negative.clone();
        for adj in &adjacency {
            let path = class_path(net, adj, &free).expect("class connects s to t");
            arcs.extend(path);
        }
        Ok(SolutionKey::of(net, arcs))
    };
    let search = || {
        (0..1u64 << pool.len())
            .into_par_iter()
            .map(candidate)
            .try_reduce_with(|a, b| Ok(a.min(b)))
            .expect("at least the empty subset")
    };
    let best = match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(search)?,
        None => search()?,
    };
    Ok(SolutionReport::from_arcs(
        net,
        Variant::Superset,
        best.arcs,
        SOLVER,
    ))
}

/// Best s-t path over one class's adjacency lists, free arcs priced at 0.
/// Every effective cost is nonnegative here (negative arcs are always
/// free), so a label-setting search is exact. Arcs are scanned in the same
/// order as [`crate::paths::nonneg_shortest`], so ties break the same way.
fn class_path(
    net: &ColoredNetwork,
    adj: &[Vec<(ArcId, Vertex)>],
    free: &[bool],
) -> Option<Vec<ArcId>> {
    let n = net.num_vertices();
    let mut labels: Vec<Option<Label>> = vec![None; n];
    let mut parent: Vec<Option<ArcId>> = vec![None; n];
    let mut done = vec![false; n];
    labels[net.s()] = Some(Label::zero());
    let mut heap = BinaryHeap::from([Reverse((Label::zero(), net.s()))]);
    while let Some(Reverse((label, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        if u == net.t() {
            break;
        }
        for &(arc, v) in &adj[u] {
            if done[v] {
                continue;
            }
            let cost = if free[arc] { 0 } else { net.arc(arc).cost };
            let cand = label.extend(arc, cost, !free[arc]);
            if labels[v].as_ref().is_none_or(|lv| cand < *lv) {
                labels[v] = Some(cand.clone());
                parent[v] = Some(arc);
                heap.push(Reverse((cand, v)));
            }
        }
    }
    labels[net.t()].as_ref()?;
    let mut path = Vec::new();
    let mut cur = net.t();
    while cur != net.s() {
        let arc = parent[cur]?;
        path.push(arc);
        cur = net.arc(arc).other_end(cur)?;
    }
    path.reverse();
    Some(path)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExistenceConfig {
    pub max_ell: usize,
    /// Budget per disjoint-paths query.
    pub max_search_nodes: u64,
}

impl Default for ExistenceConfig {
    fn default() -> Self {
        ExistenceConfig {
            max_ell: DEFAULT_MAX_EXISTENCE_ELL,
            max_search_nodes: DEFAULT_MAX_SEARCH_NODES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceVerdict {
    pub feasible: bool,
    /// An exact solution, present iff `feasible`.
    pub witness: Option<ArcSet>,
    /// Number of disjoint-paths queries issued.
    pub queries: u64,
}

impl ExistenceVerdict {
    pub fn to_report(&self, net: &ColoredNetwork) -> SolutionReport {
        match &self.witness {
            Some(w) => SolutionReport::from_arcs(net, Variant::Exact, w.clone(), "existence-fpt"),
            None => SolutionReport::infeasible("existence-fpt"),
        }
    }
}

/// A maximal run of consecutive arcs of `F' ∩ A_i`.
#[derive(Clone, Debug)]
struct Segment {
    start: Vertex,
    end: Vertex,
    arcs: Vec<ArcId>,
    inner: Vec<Vertex>,
}

/// Decides whether an exact solution exists.
///
/// An exact solution meets each class `A_i` in a path, so `F' = A' ∩ F`
/// meets `A_i` in vertex-disjoint subpaths of it. For every admissible `F'`
/// and every color, the subpaths are tried in every order (and, undirected,
/// in both orientations) and the gaps between them are filled with
/// vertex-disjoint paths over the single-colored arcs of the class. The
/// inner vertices of the subpaths are off limits for the gap paths, so the
/// assembled class is a simple path.
pub fn solve_exact_existence_fpt(
    net: &ColoredNetwork,
    config: &ExistenceConfig,
) -> Result<ExistenceVerdict> {
    let multi = multi_colored_arcs(net);
    if multi.len() > config.max_ell {
        return Err(Error::EllBudgetExceeded {
            ell: multi.len(),
            cap: config.max_ell,
        });
    }
    let multi: Vec<ArcId> = multi.to_vec();
    let mut queries = 0u64;
    'subsets: for mask in 0u64..1 << multi.len() {
        let chosen: ArcSet = (0..multi.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| multi[i])
            .collect();
        let mut witness = chosen.clone();
        for color in net.colors() {
            let part: Vec<ArcId> = chosen
                .iter()
                .filter(|&a| net.arc(a).has_color(color))
                .collect();
            let Some(segments) = split_into_segments(net, &part) else {
                continue 'subsets;
            };
            let single: ArcSet = net
                .class(color)
                .iter()
                .filter(|&a| net.arc(a).colors.len() == 1)
                .collect();
            match link_segments(net, &single, &segments, config, &mut queries)? {
                Some(connectors) => witness.extend_from(&connectors),
                None => continue 'subsets,
            }
        }
        if validate_solution(net, Variant::Exact, &witness).feasible {
            return Ok(ExistenceVerdict {
                feasible: true,
                witness: Some(witness),
                queries,
            });
        }
    }
    Ok(ExistenceVerdict {
        feasible: false,
        witness: None,
        queries,
    })
}

/// Splits a set of arcs into vertex-disjoint paths, or `None` if it is not
/// a disjoint union of (directed, when the network is) paths.
fn split_into_segments(net: &ColoredNetwork, arcs: &[ArcId]) -> Option<Vec<Segment>> {
    let mut incident: std::collections::BTreeMap<Vertex, Vec<ArcId>> = Default::default();
    let mut indeg: std::collections::BTreeMap<Vertex, usize> = Default::default();
    for &a in arcs {
        let r = net.arc(a);
        incident.entry(r.tail).or_default().push(a);
        incident.entry(r.head).or_default().push(a);
        *indeg.entry(r.head).or_default() += 1;
    }
    if incident.values().any(|v| v.len() > 2) {
        return None;
    }
    let is_start = |v: Vertex| {
        if net.directed() {
            indeg.get(&v).copied().unwrap_or(0) == 0
        } else {
            incident[&v].len() == 1
        }
    };
    if net.directed()
        && incident
            .keys()
            .any(|&v| indeg.get(&v).copied().unwrap_or(0) > 1)
    {
        return None;
    }
    let mut used = BTreeSet::new();
    let mut segments = Vec::new();
    for &v in incident.keys() {
        if !is_start(v) || incident[&v].iter().all(|a| used.contains(a)) {
            continue;
        }
        let mut seg = Segment {
            start: v,
            end: v,
            arcs: Vec::new(),
            inner: Vec::new(),
        };
        let mut at = v;
        loop {
            let next = incident[&at]
                .iter()
                .copied()
                .find(|&a| !used.contains(&a) && (!net.directed() || net.arc(a).tail == at));
            let Some(a) = next else { break };
            used.insert(a);
            seg.arcs.push(a);
            if at != v {
                seg.inner.push(at);
            }
            at = net.arc(a).other_end(at).expect("incident arc");
        }
        seg.end = at;
        segments.push(seg);
    }
    // anything left over lies on a cycle
    (used.len() == arcs.len()).then_some(segments)
}

/// Finds connector paths in `single` joining `s`, the segments in some order
/// and orientation, and `t`. Returns the connector arcs.
fn link_segments(
    net: &ColoredNetwork,
    single: &ArcSet,
    segments: &[Segment],
    config: &ExistenceConfig,
    queries: &mut u64,
) -> Result<Option<ArcSet>> {
    let inner: BTreeSet<Vertex> = segments
        .iter()
        .flat_map(|s| s.inner.iter().copied())
        .collect();
    if inner.contains(&net.s()) || inner.contains(&net.t()) {
        return Ok(None);
    }
    let l = segments.len();
    let flips: u64 = if net.directed() { 1 } else { 1 << l };
    let mut order: Vec<usize> = (0..l).collect();
    loop {
        for flip in 0..flips {
            let mut pairs = Vec::with_capacity(l + 1);
            let mut from = net.s();
            for (pos, &i) in order.iter().enumerate() {
                let seg = &segments[i];
                let (a, b) = if flip >> pos & 1 == 1 {
                    (seg.end, seg.start)
                } else {
                    (seg.start, seg.end)
                };
                pairs.push((from, a));
                from = b;
            }
            pairs.push((from, net.t()));
            let mut forbidden = inner.clone();
            pairs.retain(|&(a, b)| {
                if a == b {
                    forbidden.insert(a);
                }
                a != b
            });
            if pairs
                .iter()
                .any(|&(a, b)| forbidden.contains(&a) || forbidden.contains(&b))
            {
                continue;
            }
            let query = DisjointPathsQuery::new(single.clone(), pairs, forbidden)?;
            *queries += 1;
            if let Some(paths) = vertex_disjoint_paths(net, &query, config.max_search_nodes)? {
                return Ok(Some(paths.into_iter().flatten().collect()));
            }
        }
        if !next_permutation(&mut order) {
            return Ok(None);
        }
    }
}

/// Advances `v` to the next permutation in lexicographic order.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
