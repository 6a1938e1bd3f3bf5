//! Semirings where distinct formal polynomials are distinct functions.
//! Separating points are built by Kronecker-style substitution.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{FormalPoly, Point, Var};
use crate::semiring::{Elem, IdptPoly, Semiring};

const GRID_CAP: u128 = 100_000;

pub(super) fn separate(f: &FormalPoly, g: &FormalPoly) -> Result<Option<Point>> {
    if f == g {
        return Ok(None);
    }
    let vars = super::union_vars(f, g);
    let point = match f.semiring() {
        Semiring::Nat => nat_point(f, g, &vars)?,
        Semiring::FreeIdempotent { generators } => idpt_point(f, g, &vars, *generators),
        other => {
            return Err(Error::Unsupported {
                semiring: other.name(),
                what: "formal separation".into(),
            })
        }
    };
    debug_assert!(f.evaluate(&point)? != g.evaluate(&point)?);
    Ok(Some(point))
}

fn max_exponent(f: &FormalPoly, g: &FormalPoly) -> u32 {
    f.terms()
        .chain(g.terms())
        .flat_map(|(m, _)| m.iter().map(|(_, &e)| e))
        .max()
        .unwrap_or(0)
}

/// A nonzero integer polynomial with degree ≤ d in each variable does not
/// vanish on all of {0..d}^m, so a small grid search succeeds when it is
/// affordable. Otherwise substitute x_i = t^((d+1)^i) with t above every
/// coefficient: the value read in base t spells out the coefficients.
fn nat_point(f: &FormalPoly, g: &FormalPoly, vars: &[Var]) -> Result<Point> {
    let d = max_exponent(f, g) as u128;
    let grid = (d + 1).checked_pow(vars.len() as u32).unwrap_or(u128::MAX);
    if grid <= GRID_CAP {
        let base = d as usize + 1;
        for idx in 0..grid as usize {
            let mut rem = idx;
            let point: Point = vars
                .iter()
                .map(|&v| {
                    let x = rem % base;
                    rem /= base;
                    (v, Elem::nat(x as u64))
                })
                .collect();
            if f.evaluate(&point)? != g.evaluate(&point)? {
                return Ok(point);
            }
        }
        unreachable!("distinct nat polynomials must differ on the grid");
    }
    let max_coeff = f
        .terms()
        .chain(g.terms())
        .filter_map(|(_, c)| match c {
            Elem::Nat(n) => Some(n.clone()),
            _ => None,
        })
        .max()
        .unwrap_or_else(BigUint::zero);
    let t = max_coeff + BigUint::one() + BigUint::one();
    let stride = d as u64 + 1;
    let mut exp = 1u64;
    let mut point = Point::new();
    for &v in vars {
        point.insert(v, Elem::Nat(t.pow(exp.to_u32().expect("substitution exponent too large"))));
        exp *= stride;
    }
    Ok(point)
}

/// Over B[x1..xk], substitute v_l = x1^(E·D^l) where E exceeds the
/// x1-degree of every coefficient and D exceeds every exponent. Each term
/// (monomial, coefficient monomial) lands on a distinct monomial of B[X].
fn idpt_point(f: &FormalPoly, g: &FormalPoly, vars: &[Var], k: usize) -> Point {
    let e = 1 + f
        .terms()
        .chain(g.terms())
        .filter_map(|(_, c)| match c {
            Elem::FreeIdpt(p) => p.monomials().map(|m| m[0]).max(),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    let d = max_exponent(f, g) as u64 + 1;
    let mut scale = e;
    let mut point = Point::new();
    for &v in vars {
        point.insert(v, Elem::FreeIdpt(IdptPoly::generator_power(k, 0, scale)));
        scale = scale.checked_mul(d).expect("substitution exponent overflow");
    }
    point
}
