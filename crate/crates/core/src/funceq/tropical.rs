//! Max-plus dominance, over the tropical semiring and the truncated unit
//! interval.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::feasibility::{feasible, Certificate, FeasibilitySystem, Generator};
use super::lp::{LinearProgram, LpOutcome, Relation, Q};
use crate::error::{Error, Result};
use crate::poly::{FormalPoly, Monomial, Point, Var};
use crate::semiring::{Elem, Ext};

/// Faces of the interval box are enumerated, so the variable count is capped.
pub const INTERVAL_VAR_CAP: usize = 20;

struct Affine {
    exps: Vec<Q>,
    level: Q,
}

fn affine(m: &Monomial, c: &Elem, vars: &[Var]) -> Affine {
    let level = c
        .rational()
        .cloned()
        .expect("stored coefficients are never -inf");
    Affine {
        exps: vars.iter().map(|v| Q::from_integer(m.exponent(v).into())).collect(),
        level,
    }
}

fn affines(f: &FormalPoly, vars: &[Var]) -> Vec<Affine> {
    f.terms().map(|(m, c)| affine(m, c, vars)).collect()
}

fn generators(g: &[Affine]) -> Vec<Generator> {
    g.iter()
        .map(|a| Generator {
            exponents: a.exps.clone(),
            level: a.level.clone(),
        })
        .collect()
}

fn dominated_by(t: &Affine, g: &[Affine]) -> (bool, Certificate) {
    let sys = FeasibilitySystem::new(t.exps.clone(), t.level.clone(), generators(g))
        .expect("dimensions agree");
    feasible(&sys)
}

fn trop_point(vars: &[Var], xs: &[Q]) -> Point {
    vars.iter()
        .zip(xs)
        .map(|(&v, x)| (v, Elem::Tropical(Ext::Finite(x.clone()))))
        .collect()
}

/// Whether `c·m ≤ g` pointwise over the tropical semiring, i.e. whether
/// `c + a·x ≤ max_j (d_j + b_j·x)` for every real `x`.
pub fn tropical_dominated(m: &Monomial, c: &Elem, g: &FormalPoly) -> bool {
    if c.rational().is_none() {
        return true;
    }
    let mut vars: BTreeSet<Var> = g.variables();
    vars.extend(m.vars().copied());
    let vars: Vec<Var> = vars.into_iter().collect();
    dominated_by(&affine(m, c, &vars), &affines(g, &vars)).0
}

/// A point where `f > g`, if any.
///
/// Finite points suffice: sending a variable to `-inf` is a limit along
/// which both sides eventually agree with their restrictions.
fn exceeds(f: &FormalPoly, g: &FormalPoly) -> Option<Point> {
    let vars = super::union_vars(f, g);
    let gs = affines(g, &vars);
    affines(f, &vars).iter().find_map(|t| match dominated_by(t, &gs) {
        (false, Certificate::Separator { point, .. }) => Some(trop_point(&vars, &point)),
        _ => None,
    })
}

pub(super) fn separate(f: &FormalPoly, g: &FormalPoly) -> Option<Point> {
    exceeds(f, g).or_else(|| exceeds(g, f))
}

/// Drops terms dominated by the remaining ones until none is. What is left
/// are the vertices of the upper hull, which the function determines.
pub(super) fn canonical(f: &FormalPoly) -> Result<FormalPoly> {
    let vars: Vec<Var> = f.variables().into_iter().collect();
    let mut kept: Vec<(Monomial, Elem)> =
        f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let mut i = 0;
    while i < kept.len() {
        let t = affine(&kept[i].0, &kept[i].1, &vars);
        let rest: Vec<Affine> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, (m, c))| affine(m, c, &vars))
            .collect();
        if dominated_by(&t, &rest).0 {
            kept.remove(i);
            i = 0;
        } else {
            i += 1;
        }
    }
    FormalPoly::from_terms(f.semiring(), kept)
}

/// Over the interval semiring a term evaluates to `min(1, c + a·x)` with
/// `x ∈ [0,1]`, or `-inf` once one of its variables is `-inf`. Every face of
/// the box (a choice of `-inf` variables) is checked separately.
pub(super) fn interval_separate(f: &FormalPoly, g: &FormalPoly) -> Result<Option<Point>> {
    let vars = super::union_vars(f, g);
    if vars.len() > INTERVAL_VAR_CAP {
        return Err(Error::ExhaustiveCap {
            points: 1u128 << vars.len(),
            cap: 1u128 << INTERVAL_VAR_CAP,
        });
    }
    let fm: Vec<(&Monomial, &Elem)> = f.terms().collect();
    let gm: Vec<(&Monomial, &Elem)> = g.terms().collect();
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1u32 << vars.len()) {
        let dead: BTreeSet<Var> = vars
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| *v)
            .collect();
        let alive = |m: &Monomial| m.vars().all(|v| !dead.contains(v));
        let fa: Vec<usize> = (0..fm.len()).filter(|&i| alive(fm[i].0)).collect();
        let ga: Vec<usize> = (0..gm.len()).filter(|&i| alive(gm[i].0)).collect();
        if !seen.insert((fa.clone(), ga.clone())) {
            continue;
        }
        let live: Vec<Var> = vars.iter().copied().filter(|v| !dead.contains(v)).collect();
        let fs: Vec<Affine> = fa.iter().map(|&i| affine(fm[i].0, fm[i].1, &live)).collect();
        let gs: Vec<Affine> = ga.iter().map(|&i| affine(gm[i].0, gm[i].1, &live)).collect();
        let hit = fs
            .iter()
            .find_map(|t| interval_violation(t, &gs))
            .or_else(|| gs.iter().find_map(|t| interval_violation(t, &fs)));
        if let Some(xs) = hit {
            let mut point: Point = dead.iter().map(|&v| (v, Elem::Interval(Ext::NegInf))).collect();
            for (v, x) in live.iter().zip(xs) {
                point.insert(*v, Elem::Interval(Ext::Finite(x)));
            }
            return Ok(Some(point));
        }
    }
    Ok(None)
}

/// A point of `[0,1]^n` where `min(1, t) > min(1, max g)`, if any.
///
/// maximize s subject to `d_j + b_j·x + s ≤ 1`, `(a - b_j)·x - s ≥ d_j - c`,
/// `0 ≤ x ≤ 1`, `s ≤ 1`. A violation exists exactly when the optimum is
/// positive.
fn interval_violation(t: &Affine, g: &[Affine]) -> Option<Vec<Q>> {
    let n = t.exps.len();
    let mut lp = LinearProgram::new(n + 1);
    lp.set_free(n);
    let mut obj = vec![Q::zero(); n + 1];
    obj[n] = Q::one();
    lp.maximize(obj.clone());
    lp.constrain(obj, Relation::Le, Q::one());
    for i in 0..n {
        let mut row = vec![Q::zero(); n + 1];
        row[i] = Q::one();
        lp.constrain(row, Relation::Le, Q::one());
    }
    for b in g {
        let mut row = b.exps.clone();
        row.push(Q::one());
        lp.constrain(row, Relation::Le, Q::one() - &b.level);
        let mut row: Vec<Q> = t.exps.iter().zip(&b.exps).map(|(a, b)| a - b).collect();
        row.push(-Q::one());
        lp.constrain(row, Relation::Ge, &b.level - &t.level);
    }
    match lp.solve() {
        LpOutcome::Optimal { mut point, value } if value.is_positive() => {
            point.truncate(n);
            Some(point)
        }
        LpOutcome::Optimal { .. } => None,
        other => unreachable!("interval LP is feasible and bounded, got {other:?}"),
    }
}
