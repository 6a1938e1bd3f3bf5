//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Problems here have a handful of variables and constraints, so a dense
//! tableau is adequate. Bland's rule guarantees termination.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub relation: Relation,
    pub rhs: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { point: Vec<Q>, value: Q },
    Infeasible,
    Unbounded,
}

/// maximize `objective · x` subject to linear constraints. Variables are
/// nonnegative unless marked free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    free: Vec<bool>,
    objective: Vec<Q>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            free: vec![false; num_vars],
            objective: vec![Q::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn set_free(&mut self, var: usize) {
        self.free[var] = true;
    }

    pub fn maximize(&mut self, objective: Vec<Q>) {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
    }

    pub fn constrain(&mut self, coeffs: Vec<Q>, relation: Relation, rhs: Q) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn solve(&self) -> LpOutcome {
        // column layout: structural columns (free vars split in two), slacks, artificials
        let mut col_of = Vec::with_capacity(self.num_vars);
        let mut ncols = 0;
        for &free in &self.free {
            col_of.push(ncols);
            ncols += if free { 2 } else { 1 };
        }
        let structural = ncols;
        let slack_count = self
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let m = self.constraints.len();
        let art_start = structural + slack_count;
        let width = art_start + m;

        let mut rows: Vec<Vec<Q>> = Vec::with_capacity(m);
        let mut slack = structural;
        for (i, c) in self.constraints.iter().enumerate() {
            let mut row = vec![Q::zero(); width + 1];
            for (j, a) in c.coeffs.iter().enumerate() {
                row[col_of[j]] = a.clone();
                if self.free[j] {
                    row[col_of[j] + 1] = -a.clone();
                }
            }
            match c.relation {
                Relation::Le => {
                    row[slack] = Q::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Q::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            row[width] = c.rhs.clone();
            if row[width].is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
            }
            row[art_start + i] = Q::one();
            rows.push(row);
        }

        let mut t = Tableau {
            rows,
            basis: (art_start..art_start + m).collect(),
            width,
            blocked: vec![false; width],
        };

        // phase 1: maximize -(sum of artificials)
        let mut phase1 = vec![Q::zero(); width];
        for c in phase1.iter_mut().skip(art_start) {
            *c = -Q::one();
        }
        if t.optimize(&phase1).is_none() {
            unreachable!("phase 1 is bounded");
        }
        if t.objective_value(&phase1).is_negative() {
            return LpOutcome::Infeasible;
        }
        t.evict_artificials(art_start);
        for b in t.blocked.iter_mut().skip(art_start) {
            *b = true;
        }

        let mut cost = vec![Q::zero(); width];
        for (j, c) in self.objective.iter().enumerate() {
            cost[col_of[j]] = c.clone();
            if self.free[j] {
                cost[col_of[j] + 1] = -c.clone();
            }
        }
        if t.optimize(&cost).is_none() {
            return LpOutcome::Unbounded;
        }
        let values = t.column_values();
        let point: Vec<Q> = (0..self.num_vars)
            .map(|j| {
                let v = values[col_of[j]].clone();
                if self.free[j] {
                    v - values[col_of[j] + 1].clone()
                } else {
                    v
                }
            })
            .collect();
        let value = point
            .iter()
            .zip(&self.objective)
            .fold(Q::zero(), |acc, (x, c)| acc + x * c);
        LpOutcome::Optimal { point, value }
    }
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    width: usize,
    blocked: Vec<bool>,
}

impl Tableau {
    fn reduced_cost(&self, cost: &[Q], j: usize) -> Q {
        let mut z = Q::zero();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if !cost[b].is_zero() && !row[j].is_zero() {
                z += &cost[b] * &row[j];
            }
        }
        z - &cost[j]
    }

    fn objective_value(&self, cost: &[Q]) -> Q {
        self.rows
            .iter()
            .zip(&self.basis)
            .fold(Q::zero(), |acc, (row, &b)| acc + &cost[b] * &row[self.width])
    }

    /// Runs primal simplex to optimality; `None` when unbounded.
    fn optimize(&mut self, cost: &[Q]) -> Option<()> {
        loop {
            let entering = (0..self.width).find(|&j| {
                !self.blocked[j] && !self.basis.contains(&j) && self.reduced_cost(cost, j).is_negative()
            });
            let Some(j) = entering else {
                return Some(());
            };
            let mut leave: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let (i, _) = leave?;
            self.pivot(i, j);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// After a feasible phase 1, pivots basic artificials out or drops
    /// their (redundant) rows.
    fn evict_artificials(&mut self, art_start: usize) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= art_start {
                match (0..art_start).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => {
                        self.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }

    fn column_values(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.width];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            v[b] = row[self.width].clone();
        }
        v
    }
}
