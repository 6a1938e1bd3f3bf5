//! Elements of the free object of rank |Σ| in the variety of UT_n(S),
//! stored as ρ(w) with every coefficient replaced by its canonical form.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::funceq::{canonicalize, supports_canonical, CanonicalKey};
use crate::poly::FormalPoly;
use crate::quiver::{Path, QAElem};
use crate::semiring::Semiring;
use crate::word::{Letter, Word};

#[derive(Clone, Debug)]
pub struct FreeElem {
    qa: QAElem,
    /// Canonical keys of the nonzero coefficients; absent for semirings
    /// without canonical forms.
    keys: Option<BTreeMap<Path, CanonicalKey>>,
}

impl FreeElem {
    /// Canonicalises every coefficient of `qa`.
    pub fn from_qa(qa: QAElem) -> Result<FreeElem> {
        let s = qa.semiring().clone();
        if !supports_canonical(s.eq_strategy()) {
            return Ok(FreeElem { qa, keys: None });
        }
        let zero = canonicalize(&FormalPoly::zero(&s))?.key;
        let mut terms = Vec::new();
        let mut keys = BTreeMap::new();
        for (p, f) in qa.terms() {
            let c = canonicalize(f)?;
            if c.key != zero {
                terms.push((p.clone(), c.rep));
                keys.insert(p.clone(), c.key);
            }
        }
        let qa = QAElem::from_terms(qa.n(), qa.sigma(), &s, terms)?;
        Ok(FreeElem {
            qa,
            keys: Some(keys),
        })
    }

    /// The underlying quiver algebra element.
    pub fn qa(&self) -> &QAElem {
        &self.qa
    }

    /// A hashable key, equal for two elements exactly when they are equal.
    pub fn key(&self) -> Option<&BTreeMap<Path, CanonicalKey>> {
        self.keys.as_ref()
    }

    pub fn semiring(&self) -> &Semiring {
        self.qa.semiring()
    }
}

impl fmt::Display for FreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.qa)
    }
}

/// The image of `w` in the free object over the alphabet `sigma`.
pub fn free_elem(w: &Word, n: u32, sigma: &[Letter], s: &Semiring) -> Result<FreeElem> {
    FreeElem::from_qa(QAElem::rho(w, n, sigma, s)?)
}

/// The identity of the free monoid object: ρ of the empty word.
pub fn free_identity(n: u32, sigma: &[Letter], s: &Semiring) -> Result<FreeElem> {
    FreeElem::from_qa(QAElem::identity(n, sigma, s))
}

pub fn free_mul(x: &FreeElem, y: &FreeElem) -> Result<FreeElem> {
    FreeElem::from_qa(x.qa.mul(&y.qa)?)
}

/// Equality in the free object: by canonical keys when available, else
/// coefficient-wise function equality.
pub fn free_eq(x: &FreeElem, y: &FreeElem) -> Result<bool> {
    match (&x.keys, &y.keys) {
        (Some(a), Some(b)) if x.qa.n() == y.qa.n() && x.qa.sigma() == y.qa.sigma() => Ok(a == b),
        _ => x.qa.func_eq(&y.qa),
    }
}
