use std::collections::BTreeSet;

use crate::poly::{FormalPoly, Monomial, Point, Var};
use crate::semiring::Elem;

fn supports(f: &FormalPoly) -> BTreeSet<BTreeSet<Var>> {
    f.terms().map(|(m, _)| m.vars().copied().collect()).collect()
}

/// Supports not strictly containing another support.
fn minimal(sets: BTreeSet<BTreeSet<Var>>) -> BTreeSet<BTreeSet<Var>> {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| t != *s && t.is_subset(s)))
        .cloned()
        .collect()
}

pub(super) fn canonical(f: &FormalPoly) -> FormalPoly {
    let s = f.semiring();
    FormalPoly::from_terms_unchecked(
        s,
        minimal(supports(f))
            .into_iter()
            .map(|set| (Monomial::from_exponents(set.into_iter().map(|v| (v, 1))), s.one())),
    )
}

/// A monotone Boolean function is determined by its minimal supports. A
/// smallest support in the symmetric difference, set to 1 with everything
/// else 0, separates the two functions.
pub(super) fn separate(f: &FormalPoly, g: &FormalPoly) -> Option<Point> {
    let mf = minimal(supports(f));
    let mg = minimal(supports(g));
    let witness = mf.symmetric_difference(&mg).min_by_key(|s| s.len())?;
    let vars = super::union_vars(f, g);
    Some(
        vars.into_iter()
            .map(|v| (v, Elem::Bool(witness.contains(&v))))
            .collect(),
    )
}
