use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{ArcId, ArcSet, ColoredNetwork, Incidence, Vertex};

pub const DEFAULT_MAX_SEARCH_NODES: u64 = 10_000_000;

/// Terminal pairs to be linked by pairwise vertex-disjoint paths inside the
/// arcs of `filter`, avoiding `forbidden`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPathsQuery {
    pub filter: ArcSet,
    pub pairs: Vec<(Vertex, Vertex)>,
    pub forbidden: BTreeSet<Vertex>,
}

impl DisjointPathsQuery {
    pub fn new(
        filter: ArcSet,
        pairs: Vec<(Vertex, Vertex)>,
        forbidden: BTreeSet<Vertex>,
    ) -> Result<Self> {
        for &(a, b) in &pairs {
            if a == b {
                return Err(Error::InvalidGeneratorInput(format!(
                    "terminal pair ({a}, {b}) has equal endpoints"
                )));
            }
            if forbidden.contains(&a) || forbidden.contains(&b) {
                return Err(Error::InvalidGeneratorInput(format!(
                    "terminal pair ({a}, {b}) touches a forbidden vertex"
                )));
            }
        }
        Ok(DisjointPathsQuery {
            filter,
            pairs,
            forbidden,
        })
    }
}

/// Exhaustive backtracking search for one path per pair, the paths sharing
/// no vertex (endpoints included). Returns `Ok(None)` only when no such
/// family exists; running out of `max_nodes` search steps is an error.
pub fn vertex_disjoint_paths(
    net: &ColoredNetwork,
    query: &DisjointPathsQuery,
    max_nodes: u64,
) -> Result<Option<Vec<Vec<ArcId>>>> {
    let mut endpoints: Vec<Vertex> = query.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    endpoints.sort_unstable();
    if endpoints.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    let mut search = Search {
        inc: Incidence::build(net, |a| query.filter.contains(a)),
        pairs: &query.pairs,
        blocked: vec![false; net.num_vertices()],
        paths: Vec::new(),
        nodes: 0,
        max_nodes,
    };
    for &v in query.forbidden.iter().chain(&endpoints) {
        search.blocked[v] = true;
    }
    Ok(search.route(0)?.then_some(search.paths))
}

struct Search<'a> {
    inc: Incidence,
    pairs: &'a [(Vertex, Vertex)],
    /// Vertices no further path may enter: forbidden ones, every terminal,
    /// and the vertices of paths routed so far.
    blocked: Vec<bool>,
    paths: Vec<Vec<ArcId>>,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    fn route(&mut self, pair: usize) -> Result<bool> {
        let Some(&(from, _)) = self.pairs.get(pair) else {
            return Ok(true);
        };
        let mut walk = Vec::new();
        self.extend(pair, from, &mut walk)
    }

    fn extend(&mut self, pair: usize, at: Vertex, walk: &mut Vec<ArcId>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::SearchBudgetExceeded {
                limit: self.max_nodes,
            });
        }
        let target = self.pairs[pair].1;
        for i in 0..self.inc.out[at].len() {
            let (arc, next) = self.inc.out[at][i];
            if next == target {
                walk.push(arc);
                self.paths.push(walk.clone());
                if self.route(pair + 1)? {
                    return Ok(true);
                }
                self.paths.pop();
                walk.pop();
                continue;
            }
            if self.blocked[next] {
                continue;
            }
            self.blocked[next] = true;
            walk.push(arc);
            let done = self.extend(pair, next, walk)?;
            walk.pop();
            self.blocked[next] = false;
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn undirected(n: usize, edges: &[(Vertex, Vertex)]) -> ColoredNetwork {
        let mut net = ColoredNetwork::new(false, n, 0, n - 1, 1).unwrap();
        for &(a, b) in edges {
            net.add_arc(a, b, 1, [1]).unwrap();
        }
        net
    }

    #[test]
    fn single_pair() {
        let net = undirected(3, &[(0, 1), (1, 2)]);
        let q = DisjointPathsQuery::new(net.all_arcs(), vec![(0, 2)], BTreeSet::new()).unwrap();
        assert_eq!(
            vertex_disjoint_paths(&net, &q, 1000).unwrap(),
            Some(vec![vec![0, 1]])
        );
    }

    #[test]
    fn cut_vertex_blocks_two_pairs() {
        // 0 and 1 hang off 2 on the left, 3 and 4 on the right
        let net = undirected(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]);
        let q =
            DisjointPathsQuery::new(net.all_arcs(), vec![(0, 3), (1, 4)], BTreeSet::new()).unwrap();
        assert_eq!(vertex_disjoint_paths(&net, &q, 1000).unwrap(), None);
    }

    #[test]
    fn adjacent_terminals_and_forbidden() {
        let net = undirected(3, &[(0, 1), (0, 2), (2, 1)]);
        let q = DisjointPathsQuery::new(net.all_arcs(), vec![(0, 1)], BTreeSet::new()).unwrap();
        assert_eq!(
            vertex_disjoint_paths(&net, &q, 1000).unwrap(),
            Some(vec![vec![0]])
        );
        let mut without_direct = net.all_arcs();
        without_direct.remove(0);
        let q = DisjointPathsQuery::new(without_direct, vec![(0, 1)], BTreeSet::from([2])).unwrap();
        assert_eq!(vertex_disjoint_paths(&net, &q, 1000).unwrap(), None);
        assert!(DisjointPathsQuery::new(ArcSet::new(), vec![(0, 0)], BTreeSet::new()).is_err());
    }

    #[test]
    fn respects_direction_and_budget() {
        let mut net = ColoredNetwork::new(true, 3, 0, 2, 1).unwrap();
        net.add_arc(1, 0, 1, [1]).unwrap();
        net.add_arc(1, 2, 1, [1]).unwrap();
        let q = DisjointPathsQuery::new(net.all_arcs(), vec![(0, 2)], BTreeSet::new()).unwrap();
        assert_eq!(vertex_disjoint_paths(&net, &q, 1000).unwrap(), None);
        let q = DisjointPathsQuery::new(net.all_arcs(), vec![(1, 2)], BTreeSet::new()).unwrap();
        assert!(matches!(
            vertex_disjoint_paths(&net, &q, 0),
            Err(Error::SearchBudgetExceeded { limit: 0 })
        ));
    }
}
