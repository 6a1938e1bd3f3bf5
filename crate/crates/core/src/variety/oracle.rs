//! Falsification by matrix substitution, independent of the polynomial
//! machinery: exhaustive over finite semirings, seeded sampling otherwise.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ut_eval, Identity, Method, UTMatrix, Verdict};
use crate::error::{Error, Result};
use crate::semiring::{Elem, Semiring};
use crate::word::Letter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Random substitutions tried over infinite semirings.
    pub samples: u64,
    pub seed: u64,
    /// Largest exhaustive search attempted over finite semirings.
    pub exhaustive: u128,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            samples: 2000,
            seed: 0,
            exhaustive: 10_000_000,
        }
    }
}

/// Evaluates both sides of `id` under matrix substitutions. Over a finite
/// semiring every substitution is tried and the verdict is exact; a search
/// larger than the budget is an error. Over an infinite semiring a holding
/// verdict only records that none of the seeded samples separated the sides.
pub fn oracle_check(id: &Identity, n: u32, s: &Semiring, budget: &OracleBudget) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::ShapeMismatch("n must be at least 1".into()));
    }
    let sigma = id.alphabet();
    let n = n as usize;
    let base = Verdict {
        identity: id.clone(),
        n: n as u32,
        semiring: s.clone(),
        holds: true,
        method: Method::Random,
        witness_path: None,
        witness_assignment: None,
        seed: None,
        substitutions: None,
    };
    let separates = |a: &BTreeMap<Letter, UTMatrix>| -> Result<bool> {
        Ok(ut_eval(&id.lhs, a, s, n)? != ut_eval(&id.rhs, a, s, n)?)
    };
    match s.elements() {
        Some(elems) => {
            let cells = n * (n + 1) / 2 * sigma.len();
            let total = (elems.len() as u128)
                .checked_pow(cells as u32)
                .filter(|t| *t <= budget.exhaustive)
                .ok_or(Error::BudgetExceeded {
                    needed: (elems.len() as u128).saturating_pow(cells as u32),
                    budget: budget.exhaustive,
                })?;
            let found = (0..total as usize)
                .into_par_iter()
                .map(|idx| {
                    let a = decode(idx, &elems, &sigma, s, n);
                    Ok(separates(&a)?.then_some(a))
                })
                .find_first(|r: &Result<Option<_>>| !matches!(r, Ok(None)));
            let witness = found.transpose()?.flatten();
            Ok(Verdict {
                holds: witness.is_none(),
                method: Method::Exhaustive,
                witness_assignment: witness,
                substitutions: Some(total as u64),
                ..base
            })
        }
        None => {
            // every sample is drawn up front so the verdict does not depend
            // on scheduling
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
            let samples: Vec<BTreeMap<Letter, UTMatrix>> = (0..budget.samples)
                .map(|_| {
                    sigma
                        .iter()
                        .map(|&l| {
                            let upper: Vec<Elem> =
                                (0..n * (n + 1) / 2).map(|_| s.sample(&mut rng)).collect();
                            (l, UTMatrix::from_upper(s, n, &upper))
                        })
                        .collect()
                })
                .collect();
            let found = samples
                .into_par_iter()
                .map(|a| Ok(separates(&a)?.then_some(a)))
                .find_first(|r: &Result<Option<_>>| !matches!(r, Ok(None)));
            let witness = found.transpose()?.flatten();
            Ok(Verdict {
                holds: witness.is_none(),
                witness_assignment: witness,
                seed: Some(budget.seed),
                substitutions: Some(budget.samples),
                ..base
            })
        }
    }
}

/// Substitution number `idx` in mixed radix, first letter and first upper
/// entry most significant.
fn decode(
    mut idx: usize,
    elems: &[Elem],
    sigma: &[Letter],
    s: &Semiring,
    n: usize,
) -> BTreeMap<Letter, UTMatrix> {
    let q = elems.len();
    let per = n * (n + 1) / 2;
    let mut digits = vec![0usize; per * sigma.len()];
    for d in digits.iter_mut().rev() {
        *d = idx % q;
        idx /= q;
    }
    sigma
        .iter()
        .zip(digits.chunks(per.max(1)))
        .map(|(&l, ds)| {
            let upper: Vec<Elem> = ds.iter().map(|&d| elems[d].clone()).collect();
            (l, UTMatrix::from_upper(s, n, &upper))
        })
        .collect()
}
