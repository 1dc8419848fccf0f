//! Seeded random instances. Every generator takes the RNG explicitly, so a
//! fixed seed reproduces the corpus.

use rand::seq::SliceRandom;
use rand::Rng;

use super::Digraph;
use crate::model::{Color, ColoredGraph, ColoredNetwork, TerminalPairList, Vertex};
use crate::oracle::{CnfFormula, CoverSystem};

pub use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A formula in which every variable occurs two or three times with both
/// signs. Clauses hold at most `max_clause` literals over distinct
/// variables.
fn random_sat3(rng: &mut impl Rng, num_vars: usize, max_clause: usize) -> CnfFormula {
    let mut lits = Vec::new();
    for v in 1..=num_vars as i32 {
        lits.push(v);
        lits.push(-v);
        if rng.gen_bool(0.5) {
            lits.push(if rng.gen_bool(0.5) { v } else { -v });
        }
    }
    lits.shuffle(rng);
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut target = rng.gen_range(1..=max_clause);
    for lit in lits {
        let fits = clauses
            .last()
            .is_some_and(|c: &Vec<i32>| c.len() < target && c.iter().all(|l| l.abs() != lit.abs()));
        if fits {
            clauses.last_mut().unwrap().push(lit);
        } else {
            clauses.push(vec![lit]);
            target = rng.gen_range(1..=max_clause);
        }
    }
    CnfFormula::new(num_vars, clauses).expect("literals in range")
}

/// Random MAX-2SAT3-shaped formula over `num_vars` variables.
pub fn random_2sat3(rng: &mut impl Rng, num_vars: usize) -> CnfFormula {
    random_sat3(rng, num_vars, 2)
}

/// Random 3SAT3-shaped formula over `num_vars` variables.
pub fn random_3sat3(rng: &mut impl Rng, num_vars: usize) -> CnfFormula {
    random_sat3(rng, num_vars, 3)
}

/// Loop-free digraph with `num_arcs` arcs drawn uniformly (parallel arcs
/// allowed).
pub fn random_digraph(rng: &mut impl Rng, num_vertices: usize, num_arcs: usize) -> Digraph {
    assert!(num_vertices >= 2);
    let arcs = (0..num_arcs)
        .map(|_| loop {
            let a = rng.gen_range(0..num_vertices);
            let b = rng.gen_range(0..num_vertices);
            if a != b {
                break (a, b);
            }
        })
        .collect();
    Digraph { num_vertices, arcs }
}

/// Universe `e1..eN` and `num_sets` nonempty random subsets.
pub fn random_cover_system(rng: &mut impl Rng, universe: usize, num_sets: usize) -> CoverSystem {
    let names: Vec<String> = (1..=universe).map(|i| format!("e{i}")).collect();
    let sets = (0..num_sets)
        .map(|_| {
            let mut set: Vec<String> = names
                .iter()
                .filter(|_| rng.gen_bool(0.4))
                .cloned()
                .collect();
            if set.is_empty() {
                set.push(names.choose(rng).unwrap().clone());
            }
            set
        })
        .collect();
    CoverSystem::new(names, sets).expect("subsets of the universe")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NetworkKind {
    /// Arcs go from lower to higher vertex index.
    Dag,
    /// Arbitrary directions, cycles allowed.
    Digraph,
    Undirected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NetworkShape {
    pub kind: NetworkKind,
    pub max_vertices: usize,
    pub max_arcs: usize,
    pub max_k: u32,
    /// Directed kinds only: allow negative costs (kept conservative).
    pub negative: bool,
}

/// Random instance of the given shape. Arcs get costs `0..=4`; with
/// `negative`, costs are shifted by a vertex potential, which leaves every
/// cycle's cost unchanged and therefore nonnegative. Colors are mostly
/// single so the multi-colored arc count stays small.
pub fn random_network(rng: &mut impl Rng, shape: &NetworkShape) -> ColoredNetwork {
    let n = rng.gen_range(2..=shape.max_vertices.max(2));
    let m = rng.gen_range(1..=shape.max_arcs.max(1));
    let k = rng.gen_range(1..=shape.max_k.max(1));
    let directed = shape.kind != NetworkKind::Undirected;
    let (s, t) = match shape.kind {
        NetworkKind::Dag => (0, n - 1),
        _ => {
            let s = rng.gen_range(0..n);
            let t = (s + rng.gen_range(1..n)) % n;
            (s, t)
        }
    };
    let potential: Vec<i64> = (0..n)
        .map(|_| {
            if shape.negative && directed {
                rng.gen_range(0..=3)
            } else {
                0
            }
        })
        .collect();
    let mut net = ColoredNetwork::new(directed, n, s, t, k).expect("valid shape");
    for _ in 0..m {
        let (a, b) = loop {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a == b {
                continue;
            }
            break match shape.kind {
                NetworkKind::Dag => (a.min(b), a.max(b)),
                _ => (a, b),
            };
        };
        let cost = rng.gen_range(0..=4) + potential[a] - potential[b];
        net.add_arc(a, b, cost, random_colors(rng, k))
            .expect("valid arc");
    }
    net
}

fn random_colors(rng: &mut impl Rng, k: Color) -> Vec<Color> {
    let mut colors: Vec<Color> = (1..=k).collect();
    colors.shuffle(rng);
    let take = if k > 1 && rng.gen_bool(0.25) {
        rng.gen_range(2..=k)
    } else {
        1
    };
    colors.truncate(take as usize);
    colors
}

/// A directed colored graph without terminals and one random pair per
/// color.
pub fn random_multi_pair(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_arcs: usize,
    max_k: u32,
) -> (ColoredGraph, TerminalPairList) {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let m = rng.gen_range(1..=max_arcs.max(1));
    let k = rng.gen_range(1..=max_k.max(1));
    let mut graph = ColoredGraph::new(true, n, k).expect("valid shape");
    for _ in 0..m {
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..n)) % n;
        graph
            .add_arc(a, b, rng.gen_range(0..=3), random_colors(rng, k))
            .expect("valid arc");
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..k)
        .map(|_| {
            let a = rng.gen_range(0..n);
            (a, (a + rng.gen_range(1..n)) % n)
        })
        .collect();
    (
        graph,
        TerminalPairList::new(pairs).expect("distinct endpoints"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::validate_instance;

    #[test]
    fn formulas_have_generator_shape() {
        let mut rng = seeded(1);
        for n in 1..=5 {
            random_2sat3(&mut rng, n).check_generator_shape(2).unwrap();
            random_3sat3(&mut rng, n).check_generator_shape(3).unwrap();
        }
    }

    #[test]
    fn networks_are_valid_and_reproducible() {
        for kind in [
            NetworkKind::Dag,
            NetworkKind::Digraph,
            NetworkKind::Undirected,
        ] {
            let shape = NetworkShape {
                kind,
                max_vertices: 7,
                max_arcs: 12,
                max_k: 3,
                negative: true,
            };
            let mut rng = seeded(9);
            for _ in 0..50 {
                validate_instance(&random_network(&mut rng, &shape)).unwrap();
            }
            assert_eq!(
                random_network(&mut seeded(3), &shape),
                random_network(&mut seeded(3), &shape)
            );
        }
    }

    #[test]
    fn covers_and_pairs() {
        let mut rng = seeded(5);
        let sys = random_cover_system(&mut rng, 4, 5);
        assert!(sys.sets.iter().all(|s| !s.is_empty()));
        let (g, pairs) = random_multi_pair(&mut rng, 5, 10, 3);
        assert_eq!(pairs.len(), g.k() as usize);
        let d = random_digraph(&mut rng, 4, 6);
        assert!(d.arcs.iter().all(|&(a, b)| a != b));
    }
}
