use std::collections::BTreeMap;
use std::fmt;

use super::{FormalPoly, Monomial};
use crate::semiring::Semiring;

/// A polynomial with positive natural-number coefficients: the multiset of
/// amble monomials behind some `f_π^w`, before it is mapped into a semiring.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountPoly(BTreeMap<Monomial, u128>);

impl CountPoly {
    pub fn zero() -> Self {
        CountPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        CountPoly::monomial(Monomial::one(), 1)
    }

    pub fn monomial(m: Monomial, count: u128) -> Self {
        let mut p = CountPoly::zero();
        p.add_term(m, count);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &u128)> {
        self.0.iter()
    }

    pub fn count(&self, m: &Monomial) -> u128 {
        self.0.get(m).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u128 {
        self.0.values().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, count: u128) {
        if count == 0 {
            return;
        }
        let slot = self.0.entry(m).or_insert(0);
        *slot = slot.checked_add(count).expect("amble count overflow");
    }

    pub fn add(&self, other: &CountPoly) -> CountPoly {
        let mut out = self.clone();
        for (m, &c) in &other.0 {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &CountPoly) -> CountPoly {
        let mut out = CountPoly::zero();
        for (a, &ca) in &self.0 {
            for (b, &cb) in &other.0 {
                out.add_term(a.mul(b), ca.checked_mul(cb).expect("amble count overflow"));
            }
        }
        out
    }

    /// Multiplies every term by a monomial.
    pub fn scale(&self, m: &Monomial) -> CountPoly {
        CountPoly(self.0.iter().map(|(a, &c)| (a.mul(m), c)).collect())
    }

    /// Maps counts into `s` through k ↦ 1 + ... + 1.
    pub fn to_formal(&self, s: &Semiring) -> FormalPoly {
        FormalPoly::from_terms_unchecked(s, self.0.iter().map(|(m, &c)| (m.clone(), s.nat(c))))
    }
}

impl fmt::Display for CountPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(m, &c)| match (c, m.is_one()) {
                (1, _) => m.to_string(),
                (_, true) => c.to_string(),
                _ => format!("{c}*{m}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
