//! Equality of polynomial functions, canonical forms, and separating points.
//!
//! Two formal polynomials are equal as functions when they agree at every
//! point of `S^X`. Each semiring carries an [`EqStrategy`] that decides this
//! exactly; no strategy samples.

mod boolean;
mod exhaustive;
mod feasibility;
mod formal;
pub mod lp;
mod tropical;

use std::collections::BTreeSet;

pub use feasibility::{feasible, Certificate, FeasibilitySystem, Generator};
pub use tropical::tropical_dominated;

use crate::error::{Error, Result};
use crate::poly::{FormalPoly, Point, Var};
use crate::semiring::EqStrategy;

/// Upper bound on the number of points the exhaustive strategy evaluates.
pub const EXHAUSTIVE_CAP: u128 = 10_000_000;

/// A point separating two polynomial functions, or `None` when they agree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EqWitness {
    pub point: Option<Point>,
}

impl EqWitness {
    pub fn none() -> Self {
        EqWitness { point: None }
    }

    pub fn at(point: Point) -> Self {
        EqWitness { point: Some(point) }
    }

    /// Re-evaluates both polynomials at the witness point.
    pub fn separates(&self, f: &FormalPoly, g: &FormalPoly) -> Result<bool> {
        match &self.point {
            Some(p) => Ok(f.evaluate(p)? != g.evaluate(p)?),
            None => Ok(false),
        }
    }
}

/// A formal polynomial viewed as the function it induces.
#[derive(Clone, Debug)]
pub struct PolyFunction {
    rep: FormalPoly,
}

impl PolyFunction {
    pub fn new(rep: FormalPoly) -> Self {
        PolyFunction { rep }
    }

    pub fn rep(&self) -> &FormalPoly {
        &self.rep
    }

    pub fn strategy(&self) -> EqStrategy {
        self.rep.semiring().eq_strategy()
    }

    pub fn equals(&self, other: &PolyFunction) -> Result<bool> {
        Ok(func_equal(&self.rep, &other.rep)?.0)
    }
}

/// The canonical form of a polynomial function.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CanonicalKey {
    /// A canonical formal representative.
    Poly(FormalPoly),
    /// The value table over the variables the function depends on, in
    /// mixed radix with the first variable most significant.
    Table { vars: Vec<Var>, values: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct Canonical {
    /// A small representative, function-equal to the input.
    pub rep: FormalPoly,
    pub key: CanonicalKey,
}

pub(crate) fn union_vars(f: &FormalPoly, g: &FormalPoly) -> Vec<Var> {
    let mut v: BTreeSet<Var> = f.variables();
    v.extend(g.variables());
    v.into_iter().collect()
}

/// Decides whether `f` and `g` induce the same function. On inequality the
/// witness holds a point where they differ.
pub fn func_equal(f: &FormalPoly, g: &FormalPoly) -> Result<(bool, EqWitness)> {
    if f.semiring() != g.semiring() {
        return Err(Error::SemiringMismatch {
            left: f.semiring().name(),
            right: g.semiring().name(),
        });
    }
    if f == g {
        return Ok((true, EqWitness::none()));
    }
    let out = match f.semiring().eq_strategy() {
        EqStrategy::Formal => formal::separate(f, g)?,
        EqStrategy::Exhaustive => exhaustive::separate(f, g)?,
        EqStrategy::BooleanSupport => boolean::separate(f, g),
        EqStrategy::TropicalDominance => tropical::separate(f, g),
        EqStrategy::IntervalDominance => tropical::interval_separate(f, g)?,
    };
    Ok(match out {
        None => (true, EqWitness::none()),
        Some(p) => (false, EqWitness::at(p)),
    })
}

/// A canonical form: two polynomials are function-equal exactly when their
/// keys are equal.
pub fn canonicalize(f: &FormalPoly) -> Result<Canonical> {
    let poly = |rep: FormalPoly| Canonical {
        key: CanonicalKey::Poly(rep.clone()),
        rep,
    };
    match f.semiring().eq_strategy() {
        EqStrategy::Formal => Ok(poly(f.clone())),
        EqStrategy::BooleanSupport => Ok(poly(boolean::canonical(f))),
        EqStrategy::TropicalDominance => Ok(poly(tropical::canonical(f)?)),
        EqStrategy::Exhaustive => exhaustive::canonical(f),
        EqStrategy::IntervalDominance => Err(Error::Unsupported {
            semiring: f.semiring().name(),
            what: "canonical forms".into(),
        }),
    }
}

pub fn supports_canonical(strategy: EqStrategy) -> bool {
    strategy != EqStrategy::IntervalDominance
}
