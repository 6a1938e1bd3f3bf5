//! The convex-combination system behind max-plus dominance:
//!
//! ```text
//! λ_j ≥ 0,  Σ λ_j = 1,  Σ λ_j b_j = a,  Σ λ_j d_j ≥ c
//! ```
//!
//! It is feasible exactly when the affine function `c + a·x` never exceeds
//! `max_j (d_j + b_j·x)`. When it is infeasible, a point `x` with
//! `c + a·x > d_j + b_j·x` for every `j` is produced instead.

use num_traits::{One, Signed, Zero};

use super::lp::{LinearProgram, LpOutcome, Relation, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub exponents: Vec<Q>,
    pub level: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilitySystem {
    target: Vec<Q>,
    level: Q,
    generators: Vec<Generator>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The weights λ of a feasible solution.
    Weights(Vec<Q>),
    /// A point where the target strictly exceeds every generator, by `margin`.
    Separator { point: Vec<Q>, margin: Q },
}

impl FeasibilitySystem {
    pub fn new(target: Vec<Q>, level: Q, generators: Vec<Generator>) -> Result<Self> {
        let dim = target.len();
        if let Some(g) = generators.iter().find(|g| g.exponents.len() != dim) {
            return Err(Error::ShapeMismatch(format!(
                "generator of dimension {} in a system of dimension {dim}",
                g.exponents.len()
            )));
        }
        Ok(FeasibilitySystem {
            target,
            level,
            generators,
        })
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    pub fn target(&self) -> &[Q] {
        &self.target
    }

    pub fn level(&self) -> &Q {
        &self.level
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Checks a certificate against the system directly.
    pub fn verify(&self, cert: &Certificate) -> bool {
        match cert {
            Certificate::Weights(l) => {
                if l.len() != self.generators.len() || l.iter().any(|x| x.is_negative()) {
                    return false;
                }
                let total: Q = l.iter().sum();
                let coords_ok = (0..self.dim()).all(|i| {
                    let s: Q = l
                        .iter()
                        .zip(&self.generators)
                        .map(|(w, g)| w * &g.exponents[i])
                        .sum();
                    s == self.target[i]
                });
                let lev: Q = l.iter().zip(&self.generators).map(|(w, g)| w * &g.level).sum();
                total.is_one() && coords_ok && lev >= self.level
            }
            Certificate::Separator { point, margin } => {
                if point.len() != self.dim() || !margin.is_positive() {
                    return false;
                }
                let lhs = &self.level + dot(&self.target, point);
                self.generators
                    .iter()
                    .all(|g| &lhs - (&g.level + dot(&g.exponents, point)) >= *margin)
            }
        }
    }
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact feasibility verdict with a certificate either way.
pub fn feasible(sys: &FeasibilitySystem) -> (bool, Certificate) {
    let r = sys.generators.len();
    if r > 0 {
        let mut lp = LinearProgram::new(r);
        lp.constrain(vec![Q::one(); r], Relation::Eq, Q::one());
        for i in 0..sys.dim() {
            let row = sys.generators.iter().map(|g| g.exponents[i].clone()).collect();
            lp.constrain(row, Relation::Eq, sys.target[i].clone());
        }
        let levels = sys.generators.iter().map(|g| g.level.clone()).collect();
        lp.constrain(levels, Relation::Ge, sys.level.clone());
        if let LpOutcome::Optimal { point, .. } = lp.solve() {
            return (true, Certificate::Weights(point));
        }
    }
    (false, separator(sys))
}

/// maximize t subject to (a - b_j)·x + (c - d_j) ≥ t for all j, t ≤ 1.
fn separator(sys: &FeasibilitySystem) -> Certificate {
    let m = sys.dim();
    let mut lp = LinearProgram::new(m + 1);
    for j in 0..=m {
        lp.set_free(j);
    }
    let mut obj = vec![Q::zero(); m + 1];
    obj[m] = Q::one();
    lp.maximize(obj);
    for g in &sys.generators {
        let mut row: Vec<Q> = sys
            .target
            .iter()
            .zip(&g.exponents)
            .map(|(a, b)| a - b)
            .collect();
        row.push(-Q::one());
        lp.constrain(row, Relation::Ge, &g.level - &sys.level);
    }
    let mut cap = vec![Q::zero(); m + 1];
    cap[m] = Q::one();
    lp.constrain(cap, Relation::Le, Q::one());
    match lp.solve() {
        LpOutcome::Optimal { mut point, value } => {
            assert!(
                value.is_positive(),
                "an infeasible dominance system must have a separating point"
            );
            point.truncate(m);
            Certificate::Separator {
                point,
                margin: value,
            }
        }
        other => unreachable!("separator LP is feasible and bounded, got {other:?}"),
    }
}
