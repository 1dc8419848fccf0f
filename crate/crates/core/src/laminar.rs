//! Laminar color families.
//!
//! When any two intersecting classes are nested, an exact solution can only
//! exist if the family splits into chains, and then it is one shortest path
//! per chain inside the chain's smallest class. A superset solution needs one
//! path per inclusion-minimal class and nothing else besides the negative
//! arcs.

use crate::error::{Error, Result};
use crate::model::{ArcSet, Color, ColoredNetwork, SolutionReport, Variant};
use crate::paths::{best_path, ArcCosts};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaminarAnalysis {
    pub laminar: bool,
    /// Colors grouped into inclusion chains, each listed from the smallest
    /// class up. Present iff the family is a disjoint union of chains.
    pub chains: Option<Vec<Vec<Color>>>,
    /// One color per inclusion-minimal class, lowest index among equal
    /// classes. For a union of chains this is the head of each chain; empty
    /// for a family that is not laminar.
    pub minimal_members: Vec<Color>,
}

pub fn analyze_color_family(net: &ColoredNetwork) -> LaminarAnalysis {
    let colors: Vec<Color> = net.colors().collect();
    let classes: Vec<ArcSet> = colors.iter().map(|&c| net.class(c)).collect();
    let k = colors.len();
    let nested =
        |i: usize, j: usize| classes[i].is_subset(&classes[j]) || classes[j].is_subset(&classes[i]);
    let laminar =
        (0..k).all(|i| (i + 1..k).all(|j| classes[i].is_disjoint(&classes[j]) || nested(i, j)));
    if !laminar {
        return LaminarAnalysis {
            laminar,
            chains: None,
            minimal_members: Vec::new(),
        };
    }

    let mut minimal_members = Vec::new();
    for i in 0..k {
        let strictly_above = (0..k)
            .any(|j| classes[j].len() < classes[i].len() && classes[j].is_subset(&classes[i]));
        let duplicate = (0..i).any(|j| classes[j] == classes[i]);
        if !strictly_above && !duplicate {
            minimal_members.push(colors[i]);
        }
    }

    // group by the "intersects" relation; an empty class is a group of its own
    let mut group: Vec<usize> = (0..k).collect();
    fn find(group: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while group[r] != r {
            r = group[r];
        }
        group[x] = r;
        r
    }
    for i in 0..k {
        for j in i + 1..k {
            if !classes[i].is_disjoint(&classes[j]) {
                let (a, b) = (find(&mut group, i), find(&mut group, j));
                group[a.max(b)] = a.min(b);
            }
        }
    }
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for i in 0..k {
        let root = find(&mut group, i);
        match chains.iter_mut().find(|c| find(&mut group, c[0]) == root) {
            Some(chain) => chain.push(i),
            None => chains.push(vec![i]),
        }
    }
    let is_chain = |chain: &Vec<usize>| chain.iter().all(|&i| chain.iter().all(|&j| nested(i, j)));
    let chains = chains.iter().all(is_chain).then(|| {
        chains
            .into_iter()
            .map(|mut chain| {
                chain.sort_by_key(|&i| (classes[i].len(), i));
                chain.into_iter().map(|i| colors[i]).collect()
            })
            .collect()
    });
    LaminarAnalysis {
        laminar,
        chains,
        minimal_members,
    }
}

pub fn solve_laminar(net: &ColoredNetwork, variant: Variant) -> Result<SolutionReport> {
    const SOLVER: &str = "laminar";
    let analysis = analyze_color_family(net);
    if !analysis.laminar {
        return Err(Error::NotLaminar);
    }
    let mut costs = ArcCosts::new();
    let mut arcs = ArcSet::new();
    let members: Vec<Color> = match variant {
        Variant::Exact => match &analysis.chains {
            Some(chains) => chains.iter().map(|c| c[0]).collect(),
            None => return Ok(SolutionReport::infeasible(SOLVER)),
        },
        Variant::Superset => {
            for a in net.arcs().iter().filter(|a| a.cost < 0) {
                costs.set_free(a.id);
                arcs.insert(a.id);
            }
            analysis.minimal_members.clone()
        }
    };
    for color in members {
        match best_path(
            net,
            &|a| net.arc(a).has_color(color),
            net.s(),
            net.t(),
            &costs,
        )? {
            Some(path) => arcs.extend(path.arcs),
            None => return Ok(SolutionReport::infeasible(SOLVER)),
        }
    }
    Ok(SolutionReport::from_arcs(net, variant, arcs, SOLVER))
}
