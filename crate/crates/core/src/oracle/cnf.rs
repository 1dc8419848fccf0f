use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A CNF formula over variables `1..=num_vars`; literal `-v` is the negation
/// of `x_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for clause in &clauses {
            for &lit in clause {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > num_vars {
                    return Err(Error::InvalidFormula(format!(
                        "literal {lit} outside 1..={num_vars}"
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// `(x1 ∨ x2) ∧ (¬x1 ∨ x3) ∧ (¬x2 ∨ ¬x3)`, the running example of the
    /// SAT reductions.
    pub fn running_example() -> Self {
        CnfFormula {
            num_vars: 3,
            clauses: vec![vec![1, 2], vec![-1, 3], vec![-2, -3]],
        }
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Parses DIMACS `cnf`. Clauses may span lines and are terminated by 0.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                match fields.as_slice() {
                    ["cnf", n, m] => {
                        let n = n.parse().map_err(|_| bad_header(line))?;
                        let m = m.parse().map_err(|_| bad_header(line))?;
                        header = Some((n, m));
                    }
                    _ => return Err(bad_header(line)),
                }
                continue;
            }
            if header.is_none() {
                return Err(Error::InvalidFormula("clause before `p cnf` header".into()));
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| Error::InvalidFormula(format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(lit);
                }
            }
        }
        let (n, m) =
            header.ok_or_else(|| Error::InvalidFormula("missing `p cnf` header".into()))?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != m {
            return Err(Error::InvalidFormula(format!(
                "header announces {m} clauses, found {}",
                clauses.len()
            )));
        }
        CnfFormula::new(n, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                write!(out, "{lit} ").unwrap();
            }
            out.push_str("0\n");
        }
        out
    }

    /// Checks the occurrence pattern the SAT gadgets rely on. Clauses are
    /// nonempty, hold at most `max_clause` literals and never repeat a
    /// variable. Every variable occurs at most three times, with both signs.
    pub fn check_generator_shape(&self, max_clause: usize) -> Result<()> {
        let mut pos = vec![0usize; self.num_vars + 1];
        let mut neg = vec![0usize; self.num_vars + 1];
        for (j, clause) in self.clauses.iter().enumerate() {
            if clause.is_empty() || clause.len() > max_clause {
                return Err(Error::InvalidFormula(format!(
                    "clause {} has {} literals (allowed 1..={max_clause})",
                    j + 1,
                    clause.len()
                )));
            }
            let mut seen: Vec<usize> = clause.iter().map(|l| l.unsigned_abs() as usize).collect();
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidFormula(format!(
                    "clause {} mentions a variable twice",
                    j + 1
                )));
            }
            for &lit in clause {
                let v = lit.unsigned_abs() as usize;
                if lit > 0 {
                    pos[v] += 1;
                } else {
                    neg[v] += 1;
                }
            }
        }
        for v in 1..=self.num_vars {
            if pos[v] == 0 || neg[v] == 0 {
                return Err(Error::InvalidFormula(format!(
                    "x{v} must occur both negated and non-negated"
                )));
            }
            if pos[v] + neg[v] > 3 {
                return Err(Error::InvalidFormula(format!(
                    "x{v} occurs more than 3 times"
                )));
            }
        }
        Ok(())
    }

    /// Number of literals made true by `assignment` (index `v - 1` holds `x_v`)
    /// in each clause.
    pub fn true_literals(&self, assignment: &[bool]) -> Vec<usize> {
        self.clauses
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|&&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
                    .count()
            })
            .collect()
    }
}

fn bad_header(line: &str) -> Error {
    Error::InvalidFormula(format!("bad header {line:?}"))
}
