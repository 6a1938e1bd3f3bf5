//! Finite semirings: evaluate at every point of `S^X`.

use std::sync::Arc;

use super::{Canonical, CanonicalKey, EXHAUSTIVE_CAP};
use crate::error::{Error, Result};
use crate::poly::{FormalPoly, Monomial, Point, Var};
use crate::semiring::{Elem, FiniteTable, Semiring};

/// A polynomial compiled to table indices for fast repeated evaluation.
struct Compiled {
    table: Arc<FiniteTable>,
    // (coefficient, [(variable position, exponent)])
    terms: Vec<(usize, Vec<(usize, u32)>)>,
}

impl Compiled {
    fn new(f: &FormalPoly, vars: &[Var]) -> Self {
        let table = table_of(f.semiring());
        let terms = f
            .terms()
            .map(|(m, c)| {
                let Elem::Table(ci) = c else { unreachable!() };
                let factors = m
                    .iter()
                    .map(|(v, &e)| (vars.binary_search(v).expect("variable listed"), e))
                    .collect();
                (*ci, factors)
            })
            .collect();
        Compiled { table, terms }
    }

    fn eval(&self, x: &[usize]) -> usize {
        let t = &self.table;
        self.terms.iter().fold(t.zero(), |acc, (c, factors)| {
            let term = factors
                .iter()
                .fold(*c, |p, &(i, e)| t.mul(p, t.pow(x[i], e as u64)));
            t.add(acc, term)
        })
    }
}

fn table_of(s: &Semiring) -> Arc<FiniteTable> {
    match s {
        Semiring::Finite(t) => t.clone(),
        _ => unreachable!("exhaustive strategy on an infinite semiring"),
    }
}

fn point_count(size: usize, vars: usize) -> Result<u128> {
    let points = (size as u128).checked_pow(vars as u32).unwrap_or(u128::MAX);
    if points > EXHAUSTIVE_CAP {
        return Err(Error::ExhaustiveCap {
            points,
            cap: EXHAUSTIVE_CAP,
        });
    }
    Ok(points)
}

/// Decodes `idx` in mixed radix, first variable most significant.
fn decode(mut idx: usize, size: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % size;
        idx /= size;
    }
}

fn to_point(vars: &[Var], x: &[usize]) -> Point {
    vars.iter().zip(x).map(|(&v, &i)| (v, Elem::Table(i))).collect()
}

pub(super) fn separate(f: &FormalPoly, g: &FormalPoly) -> Result<Option<Point>> {
    let vars = super::union_vars(f, g);
    let size = table_of(f.semiring()).size();
    let points = point_count(size, vars.len())?;
    let (cf, cg) = (Compiled::new(f, &vars), Compiled::new(g, &vars));
    let mut x = vec![0; vars.len()];
    for idx in 0..points as usize {
        decode(idx, size, &mut x);
        if cf.eval(&x) != cg.eval(&x) {
            return Ok(Some(to_point(&vars, &x)));
        }
    }
    Ok(None)
}

/// Value table over the essential variables, and a representative with
/// inessential variables set to one and exponents reduced by the torsion of
/// the table.
pub(super) fn canonical(f: &FormalPoly) -> Result<Canonical> {
    let table = table_of(f.semiring());
    let size = table.size();
    let vars: Vec<Var> = f.variables().into_iter().collect();
    let points = point_count(size, vars.len())? as usize;
    let cf = Compiled::new(f, &vars);
    let mut x = vec![0; vars.len()];
    let values: Vec<usize> = (0..points)
        .map(|idx| {
            decode(idx, size, &mut x);
            cf.eval(&x)
        })
        .collect();

    let m = vars.len();
    let essential: Vec<bool> = (0..m)
        .map(|k| {
            // stride of variable k in the mixed-radix layout
            let stride = size.pow((m - 1 - k) as u32);
            (0..points).any(|idx| {
                let digit = idx / stride % size;
                digit > 0 && values[idx] != values[idx - digit * stride]
            })
        })
        .collect();

    let kept: Vec<Var> = vars
        .iter()
        .zip(&essential)
        .filter(|(_, &e)| e)
        .map(|(v, _)| *v)
        .collect();
    let mut projected = Vec::with_capacity(size.pow(kept.len() as u32));
    for (idx, &value) in values.iter().enumerate() {
        decode(idx, size, &mut x);
        if x.iter().zip(&essential).all(|(&d, &e)| e || d == 0) {
            projected.push(value);
        }
    }

    let (ti, tj) = table.torsion();
    let reduce = |e: u32| {
        if e < tj {
            e
        } else {
            let period = tj - ti;
            ti + (e - ti) % period
        }
    };
    let rep = f.map_monomials(|mono| {
        Monomial::from_exponents(
            mono.iter()
                .filter(|(v, _)| kept.binary_search(v).is_ok())
                .map(|(v, &e)| (*v, reduce(e))),
        )
    });
    Ok(Canonical {
        rep,
        key: CanonicalKey::Table {
            vars: kept,
            values: projected,
        },
    })
}
