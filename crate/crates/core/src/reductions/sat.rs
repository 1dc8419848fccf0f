//! The two SAT gadgets. Both string one variable gadget per variable along
//! a chain `w_1, ..., w_{n+1}`: `x_i` owns the dipaths
//! `P_i^+ = w_i v_i1 v_i2 v_i3 v_i4 w_{i+1}` and
//! `P_i^- = w_i u_i1 u_i2 u_i3 u_i4 w_{i+1}`, and each occurrence of a literal
//! in a clause is wired to one of the middle arcs `*_1 *_2` or `*_3 *_4` of
//! the matching dipath.

use super::{Builder, Generated, Metadata};
use crate::error::{Error, Result};
use crate::model::{find_path_within, ArcSet, Color, ColoredNetwork, Vertex};
use crate::oracle::CnfFormula;

struct Chain {
    w: Vec<Vertex>,
    v: Vec<[Vertex; 4]>,
    u: Vec<[Vertex; 4]>,
}

impl Chain {
    fn build(b: &mut Builder, n: usize) -> Chain {
        let w = (1..=n + 1).map(|i| b.vertex(format!("w{i}"))).collect();
        let mut v = Vec::new();
        let mut u = Vec::new();
        for i in 1..=n {
            v.push([1, 2, 3, 4].map(|r| b.vertex(format!("v{i}_{r}"))));
            u.push([1, 2, 3, 4].map(|r| b.vertex(format!("u{i}_{r}"))));
        }
        Chain { w, v, u }
    }

    /// Vertices of `P_i^+` (or `P_i^-`), `i` counted from 0.
    fn dipath(&self, i: usize, positive: bool) -> [Vertex; 6] {
        let mid = if positive { self.v[i] } else { self.u[i] };
        [self.w[i], mid[0], mid[1], mid[2], mid[3], self.w[i + 1]]
    }
}

/// Where an occurrence of a variable is wired in.
struct Occurrence {
    /// 0-based variable and clause.
    var: usize,
    clause: usize,
    positive: bool,
    /// 0 for the `*_1 *_2` arc, 2 for the `*_3 *_4` arc.
    slot: usize,
}

impl Occurrence {
    fn ends(&self, chain: &Chain) -> (Vertex, Vertex) {
        let mid = if self.positive {
            chain.v[self.var]
        } else {
            chain.u[self.var]
        };
        (mid[self.slot], mid[self.slot + 1])
    }
}

/// The first positive and first negative occurrence of each variable use
/// the `*_1 *_2` arcs; a third occurrence uses `*_3 *_4` on its side.
fn occurrences(formula: &CnfFormula) -> Vec<Occurrence> {
    let mut out = Vec::new();
    for var in 0..formula.num_vars {
        let lit = var as i32 + 1;
        let find = |l: i32| formula.clauses.iter().position(|c| c.contains(&l));
        let j1 = find(lit).expect("shape checked");
        let j2 = find(-lit).expect("shape checked");
        out.push(Occurrence {
            var,
            clause: j1,
            positive: true,
            slot: 0,
        });
        out.push(Occurrence {
            var,
            clause: j2,
            positive: false,
            slot: 0,
        });
        for (j, clause) in formula.clauses.iter().enumerate() {
            if j == j1 || j == j2 {
                continue;
            }
            if let Some(&l) = clause.iter().find(|l| l.abs() == lit) {
                out.push(Occurrence {
                    var,
                    clause: j,
                    positive: l > 0,
                    slot: 2,
                });
            }
        }
    }
    out
}

/// Unit-cost two-color digraph whose superset optimum is
/// `5n + 2m + 4 + (m - m_s)`, where `m_s` is the largest number of clauses
/// an assignment can satisfy.
///
/// Class 1 is `s w_1`, `w_{n+1} t` and all variable dipaths. Class 2 is the
/// clause chain `s c_1`, the occurrence arcs `c_j *`, `* c_{j+1}`,
/// `c_{m+1} t`, and the four middle arcs of every variable gadget.
pub fn gen_cnf_superset(formula: &CnfFormula) -> Result<Generated> {
    formula.check_generator_shape(2)?;
    let n = formula.num_vars;
    let m = formula.num_clauses();
    let mut b = Builder::new(true, 2)?;
    let s = b.vertex("s");
    let t = b.vertex("t");
    let chain = Chain::build(&mut b, n);
    let c: Vec<Vertex> = (1..=m + 1).map(|j| b.vertex(format!("c{j}"))).collect();

    b.graph.add_arc(s, chain.w[0], 1, [1])?;
    for i in 0..n {
        for positive in [true, false] {
            let p = chain.dipath(i, positive);
            for (r, pair) in p.windows(2).enumerate() {
                let colors: &[Color] = if r == 1 || r == 3 { &[1, 2] } else { &[1] };
                b.graph
                    .add_arc(pair[0], pair[1], 1, colors.iter().copied())?;
            }
        }
    }
    b.graph.add_arc(chain.w[n], t, 1, [1])?;
    b.graph.add_arc(s, c[0], 1, [2])?;
    for occ in occurrences(formula) {
        let (a, z) = occ.ends(&chain);
        b.graph.add_arc(c[occ.clause], a, 1, [2])?;
        b.graph.add_arc(z, c[occ.clause + 1], 1, [2])?;
    }
    b.graph.add_arc(c[m], t, 1, [2])?;
    b.finish(s, t)
}

/// Zero-cost DAG with `k = m + 1` colors whose exact instance is feasible
/// iff some assignment makes exactly one literal true in every clause.
///
/// Clause `j` gets terminals `s_j`, `t_j`; class `j` is `s s_j`, `t_j t` and
/// the three-arc dipaths `s_j * * t_j` through the middle arcs of its
/// literals. Class `m + 1` is `s w_1`, `w_{n+1} t` and all variable dipaths.
pub fn gen_cnf_exact_dag(formula: &CnfFormula) -> Result<Generated> {
    formula.check_generator_shape(3)?;
    let n = formula.num_vars;
    let m = formula.num_clauses();
    if m + 1 > 64 {
        return Err(Error::InvalidGeneratorInput(format!(
            "{m} clauses exceed the 63 supported"
        )));
    }
    let chain_color = m as Color + 1;
    let mut b = Builder::new(true, chain_color)?;
    let s = b.vertex("s");
    let t = b.vertex("t");
    let chain = Chain::build(&mut b, n);
    let mut terminals = Vec::new();
    for j in 1..=m {
        terminals.push((b.vertex(format!("s_{j}")), b.vertex(format!("t_{j}"))));
    }
    let occs = occurrences(formula);

    b.graph.add_arc(s, chain.w[0], 0, [chain_color])?;
    for i in 0..n {
        for positive in [true, false] {
            let p = chain.dipath(i, positive);
            for (r, pair) in p.windows(2).enumerate() {
                let mut colors = vec![chain_color];
                if r == 1 || r == 3 {
                    let slot = r - 1;
                    colors.extend(
                        occs.iter()
                            .filter(|o| o.var == i && o.positive == positive && o.slot == slot)
                            .map(|o| o.clause as Color + 1),
                    );
                }
                b.graph.add_arc(pair[0], pair[1], 0, colors)?;
            }
        }
    }
    b.graph.add_arc(chain.w[n], t, 0, [chain_color])?;
    for (j, &(sj, tj)) in terminals.iter().enumerate() {
        let color = j as Color + 1;
        b.graph.add_arc(s, sj, 0, [color])?;
        for occ in occs.iter().filter(|o| o.clause == j) {
            let (a, z) = occ.ends(&chain);
            b.graph.add_arc(sj, a, 0, [color])?;
            b.graph.add_arc(z, tj, 0, [color])?;
        }
        b.graph.add_arc(tj, t, 0, [color])?;
    }
    b.finish(s, t)
}

/// Reads a truth assignment off a solution of either SAT gadget: `x_i` is
/// true iff the solution's `s`-`t` path in the variable-chain class runs
/// through `P_i^+`.
pub fn extract_assignment(
    net: &ColoredNetwork,
    metadata: &Metadata,
    solution: &ArcSet,
) -> Result<Vec<bool>> {
    net.check_arc_set(solution)?;
    let named = |name: &str| {
        metadata
            .vertex(name)
            .ok_or_else(|| Error::Extraction(format!("metadata has no vertex {name:?}")))
    };
    let s = named("s")?;
    let w1 = named("w1")?;
    let chain_color = net
        .arcs()
        .iter()
        .find(|a| a.tail == s && a.head == w1)
        .and_then(|a| a.colors.iter().next())
        .ok_or_else(|| Error::Extraction("no arc from s to w1".into()))?;
    let part = solution.intersection(&net.class(chain_color));
    let path = find_path_within(net, &part, net.s(), net.t()).ok_or_else(|| {
        Error::Extraction("solution has no s-t path in the variable chain".into())
    })?;
    let visited: Vec<Vertex> = path.iter().map(|&a| net.arc(a).head).collect();
    let n = metadata
        .vertex_names
        .values()
        .filter(|name| name.starts_with('w'))
        .count()
        .saturating_sub(1);
    (1..=n)
        .map(|i| {
            let v = named(&format!("v{i}_1"))?;
            let u = named(&format!("u{i}_1"))?;
            if visited.contains(&v) {
                Ok(true)
            } else if visited.contains(&u) {
                Ok(false)
            } else {
                Err(Error::Extraction(format!(
                    "path avoids both dipaths of x{i}"
                )))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{multi_colored_arcs, validate_instance};
    use crate::paths::topological_order_with;

    #[test]
    fn superset_gadget_shape() {
        let f = CnfFormula::running_example();
        let g = gen_cnf_superset(&f).unwrap();
        let net = &g.network;
        validate_instance(net).unwrap();
        assert_eq!(net.num_vertices(), 9 * 3 + 3 + 4);
        // 10 per variable, 2 per occurrence, 4 at the terminals
        assert_eq!(net.num_arcs(), 30 + 12 + 4);
        assert_eq!(multi_colored_arcs(net).len(), 4 * 3);
        assert!(net.arcs().iter().all(|a| a.cost == 1));
        assert_eq!(
            g.metadata.vertex_names[&g.metadata.vertex("v2_1").unwrap()],
            "v2_1"
        );
        assert!(g.metadata.vertex("c4").is_some());
    }

    #[test]
    fn superset_gadget_has_a_cycle() {
        // c2 -> u1_1 -> u1_2 -> u1_3 -> u1_4 -> w2 -> v2_1 -> v2_2 -> c2
        let g = gen_cnf_superset(&CnfFormula::running_example()).unwrap();
        assert!(topological_order_with(&g.network, |_| true).is_none());
    }

    #[test]
    fn exact_gadget_shape() {
        let f = CnfFormula::running_example();
        let g = gen_cnf_exact_dag(&f).unwrap();
        let net = &g.network;
        validate_instance(net).unwrap();
        assert_eq!(net.k(), 4);
        assert!(topological_order_with(net, |_| true).is_some());
        assert!(net.arcs().iter().all(|a| a.cost == 0));
        // clause 1 = (x1 or x2): s s_1, t_1 t and two three-arc dipaths
        assert_eq!(net.class(1).len(), 2 + 2 * 3);
        assert!(g.metadata.vertex("s_2").is_some() && g.metadata.vertex("t_2").is_some());
    }

    #[test]
    fn rejects_bad_shapes() {
        let one_sided = CnfFormula::new(1, vec![vec![1]]).unwrap();
        assert!(gen_cnf_superset(&one_sided).is_err());
        let wide = CnfFormula::new(3, vec![vec![1, 2, 3], vec![-1, -2, -3]]).unwrap();
        assert!(gen_cnf_superset(&wide).is_err());
        assert!(gen_cnf_exact_dag(&wide).is_ok());
    }

    #[test]
    fn extraction() {
        let f = CnfFormula::running_example();
        let g = gen_cnf_superset(&f).unwrap();
        let net = &g.network;
        let md = &g.metadata;
        // route the chain through P_1^+, P_2^-, P_3^+
        let mut sol = ArcSet::new();
        let mut at = md.vertex("s").unwrap();
        let route = [
            "w1", "v1_1", "v1_2", "v1_3", "v1_4", "w2", "u2_1", "u2_2", "u2_3", "u2_4", "w3",
            "v3_1", "v3_2", "v3_3", "v3_4", "w4", "t",
        ];
        for name in route {
            let next = md.vertex(name).unwrap();
            let arc = net
                .arcs()
                .iter()
                .find(|a| a.tail == at && a.head == next)
                .unwrap();
            sol.insert(arc.id);
            at = next;
        }
        assert_eq!(
            extract_assignment(net, md, &sol).unwrap(),
            vec![true, false, true]
        );
        assert!(extract_assignment(net, md, &ArcSet::new()).is_err());
    }
}
