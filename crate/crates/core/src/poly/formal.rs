use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use super::{Monomial, Var};
use crate::error::{Error, Result};
use crate::semiring::{Elem, Semiring};

/// An assignment of semiring values to variables.
pub type Point = BTreeMap<Var, Elem>;

/// A formal polynomial over a semiring. Zero coefficients are never stored,
/// so the zero polynomial has no terms.
#[derive(Clone, Debug)]
pub struct FormalPoly {
    semiring: Semiring,
    terms: BTreeMap<Monomial, Elem>,
}

impl PartialEq for FormalPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.semiring == other.semiring
    }
}

impl Eq for FormalPoly {}

impl Hash for FormalPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl PartialOrd for FormalPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FormalPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl FormalPoly {
    pub fn zero(s: &Semiring) -> Self {
        FormalPoly {
            semiring: s.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(s: &Semiring) -> Self {
        FormalPoly::from_terms_unchecked(s, [(Monomial::one(), s.one())])
    }

    pub fn var(s: &Semiring, v: Var) -> Self {
        FormalPoly::from_terms_unchecked(s, [(Monomial::var(v), s.one())])
    }

    pub fn monomial(s: &Semiring, m: Monomial, coeff: Elem) -> Result<Self> {
        FormalPoly::from_terms(s, [(m, coeff)])
    }

    pub fn constant(s: &Semiring, c: Elem) -> Result<Self> {
        FormalPoly::monomial(s, Monomial::one(), c)
    }

    /// Builds a polynomial, merging repeated monomials with the semiring sum.
    pub fn from_terms(
        s: &Semiring,
        terms: impl IntoIterator<Item = (Monomial, Elem)>,
    ) -> Result<Self> {
        let terms: Vec<_> = terms.into_iter().collect();
        for (_, c) in &terms {
            s.check(c)?;
        }
        Ok(FormalPoly::from_terms_unchecked(s, terms))
    }

    pub(crate) fn from_terms_unchecked(
        s: &Semiring,
        terms: impl IntoIterator<Item = (Monomial, Elem)>,
    ) -> Self {
        let mut p = FormalPoly::zero(s);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Elem) {
        let s = &self.semiring;
        let merged = match self.terms.remove(&m) {
            Some(old) => s.add_unchecked(&old, &c),
            None => c,
        };
        if !s.is_zero(&merged) {
            self.terms.insert(m, merged);
        }
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Elem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Elem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.semiring.zero())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial()
            .is_some_and(|(m, c)| m.is_one() && self.semiring.is_one(c))
    }

    /// The single term, when the polynomial is a formal monomial.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Elem)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars().copied()).collect()
    }

    fn same_semiring(&self, other: &FormalPoly) -> Result<()> {
        if self.semiring == other.semiring {
            Ok(())
        } else {
            Err(Error::SemiringMismatch {
                left: self.semiring.name(),
                right: other.semiring.name(),
            })
        }
    }

    pub fn add(&self, other: &FormalPoly) -> Result<FormalPoly> {
        self.same_semiring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn mul(&self, other: &FormalPoly) -> Result<FormalPoly> {
        self.same_semiring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &FormalPoly) -> FormalPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub(crate) fn mul_unchecked(&self, other: &FormalPoly) -> FormalPoly {
        let s = &self.semiring;
        let mut out = FormalPoly::zero(s);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), s.mul_unchecked(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> FormalPoly {
        (0..e).fold(FormalPoly::one(&self.semiring), |acc, _| acc.mul_unchecked(self))
    }

    /// Value of the induced function at `point`.
    pub fn evaluate(&self, point: &Point) -> Result<Elem> {
        let s = &self.semiring;
        let mut acc = s.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.iter() {
                let x = point.get(v).ok_or(Error::MissingAssignment(*v))?;
                s.check(x)?;
                t = s.mul_unchecked(&t, &s.pow_unchecked(x, e as u64));
            }
            acc = s.add_unchecked(&acc, &t);
        }
        Ok(acc)
    }

    /// Partial evaluation setting every variable at `vertex` to 1.
    pub fn delta(&self, vertex: u32) -> FormalPoly {
        FormalPoly::from_terms_unchecked(
            &self.semiring,
            self.terms
                .iter()
                .map(|(m, c)| (m.without_vertex(vertex), c.clone())),
        )
    }

    /// Applies a variable substitution to every monomial, merging like terms.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> FormalPoly {
        FormalPoly::from_terms_unchecked(
            &self.semiring,
            self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())),
        )
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> FormalPoly {
        FormalPoly::from_terms_unchecked(
            &self.semiring,
            self.terms.iter().map(|(m, c)| (f(m), c.clone())),
        )
    }

    /// Multiplies every monomial by `m`.
    pub fn scale(&self, m: &Monomial) -> FormalPoly {
        self.map_monomials(|a| a.mul(m))
    }

    pub(crate) fn fmt_coeff(&self, c: &Elem) -> String {
        let text = self.semiring.fmt_elem(c);
        if self.semiring.rational_valued() {
            format!("({text})")
        } else {
            text
        }
    }

    /// Renders the terms in a caller-supplied order, with a monomial printer.
    pub(crate) fn render_with(
        &self,
        order: impl FnOnce(&mut Vec<(&Monomial, &Elem)>),
        mono: impl Fn(&Monomial) -> String,
        sep: &str,
    ) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        order(&mut terms);
        let s = &self.semiring;
        let parts: Vec<String> = terms
            .into_iter()
            .map(|(m, c)| match (m.is_one(), s.is_one(c)) {
                (true, true) => "1".to_string(),
                (true, false) => self.fmt_coeff(c),
                (false, true) => mono(m),
                (false, false) => format!("{}*{}", self.fmt_coeff(c), mono(m)),
            })
            .collect();
        parts.join(sep)
    }
}

/// Splits `text` on `sep` outside any (), {} or <...> nesting.
pub(crate) fn split_top(text: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut prev = ' ';
    for (i, c) in text.char_indices() {
        let arrow = prev == '-';
        prev = c;
        match c {
            '(' | '{' | '<' => depth += 1,
            ')' | '}' => depth -= 1,
            // the `>` of an arrow `-a->` closes nothing
            '>' if !arrow => depth -= 1,
            _ if c == sep && depth == 0 => {
                out.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

impl FormalPoly {
    /// Parses the [`Display`](fmt::Display) form, e.g. `2*a_1^2*b_2 + 1`.
    /// Coefficients may be parenthesised.
    pub fn parse(s: &Semiring, text: &str) -> Result<FormalPoly> {
        let text = text.trim();
        if text == "0" {
            return Ok(FormalPoly::zero(s));
        }
        let mut terms = Vec::new();
        for term in split_top(text, '+') {
            let mut coeff = s.one();
            let mut mono = Monomial::one();
            for factor in split_top(term.trim(), '*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{text}`")));
                }
                if let Some((b, e)) = factor.rsplit_once('^') {
                    if let (Ok(v), Ok(e)) = (b.trim().parse::<Var>(), e.trim().parse::<u32>()) {
                        mono.mul_var(v, e);
                        continue;
                    }
                }
                if let Ok(v) = factor.parse::<Var>() {
                    mono.mul_var(v, 1);
                    continue;
                }
                let inner = factor
                    .strip_prefix('(')
                    .and_then(|b| b.strip_suffix(')'))
                    .unwrap_or(factor);
                let c = match inner {
                    "1" => s.one(),
                    "0" => s.zero(),
                    _ => s.parse_elem(inner)?,
                };
                coeff = s.mul_unchecked(&coeff, &c);
            }
            terms.push((mono, coeff));
        }
        Ok(FormalPoly::from_terms_unchecked(s, terms))
    }
}

impl fmt::Display for FormalPoly {
    /// Terms joined by ` + `; `1` and `0` denote the semiring identities.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|_| {}, |m| m.to_string(), " + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::Ext;

    fn v(l: char, i: u32) -> Var {
        Var::new(l, i)
    }

    fn x(s: &Semiring, l: char, i: u32) -> FormalPoly {
        FormalPoly::var(s, v(l, i))
    }

    #[test]
    fn distributes() {
        let t = Semiring::Tropical;
        let lhs = x(&t, 'a', 1).add(&x(&t, 'a', 2)).unwrap().mul(&x(&t, 'b', 1)).unwrap();
        assert_eq!(lhs.to_string(), "a_1*b_1 + b_1*a_2");
        let b = Semiring::Boolean;
        assert_eq!(x(&b, 'x', 1).add(&x(&b, 'x', 1)).unwrap(), x(&b, 'x', 1));
        let n = Semiring::Nat;
        assert_eq!(x(&n, 'x', 1).add(&x(&n, 'x', 1)).unwrap().to_string(), "2*x_1");
        assert_eq!(x(&t, 'a', 1).mul(&x(&t, 'a', 1)).unwrap().to_string(), "a_1^2");
    }

    #[test]
    fn evaluate_examples() {
        let t = Semiring::Tropical;
        let p = x(&t, 'a', 1).add(&x(&t, 'b', 1)).unwrap();
        let pt = Point::from([(v('a', 1), Elem::trop(2)), (v('b', 1), Elem::trop(3))]);
        assert_eq!(p.evaluate(&pt).unwrap(), Elem::trop(3));

        let b = Semiring::Boolean;
        let p = x(&b, 'x', 1).mul(&x(&b, 'y', 1)).unwrap();
        let pt = Point::from([(v('x', 1), Elem::Bool(true)), (v('y', 1), Elem::Bool(false))]);
        assert_eq!(p.evaluate(&pt).unwrap(), Elem::Bool(false));

        let n = Semiring::Nat;
        let p = x(&n, 'x', 1).pow(2).add(&FormalPoly::one(&n)).unwrap();
        let pt = Point::from([(v('x', 1), Elem::nat(2))]);
        assert_eq!(p.evaluate(&pt).unwrap(), Elem::nat(5));
        assert!(matches!(
            p.evaluate(&Point::new()),
            Err(Error::MissingAssignment(_))
        ));
    }

    #[test]
    fn delta_examples() {
        let t = Semiring::Tropical;
        let ab3 = x(&t, 'a', 3).mul(&x(&t, 'b', 3)).unwrap();
        assert!(ab3.delta(3).is_one());
        let ab1 = x(&t, 'a', 1).mul(&x(&t, 'b', 1)).unwrap();
        assert_eq!(ab1.delta(3), ab1);
        let p = x(&t, 'a', 3).add(&x(&t, 'a', 2)).unwrap().delta(3);
        assert_eq!(p.to_string(), "1 + a_2");
    }

    #[test]
    fn parse_round_trips() {
        for (sel, text) in [
            ("nat", "2*a_1^2*b_2 + 1"),
            ("tropical", "(3/2)*a_1 + (-1)"),
            ("boolean", "x_1 + x_1*y_1"),
            ("freeidpt:2", "{x1, x2^2}*a_1 + 1"),
            ("zmod:3", "2*a_1"),
        ] {
            let s = Semiring::parse(sel).unwrap();
            let p = FormalPoly::parse(&s, text).unwrap();
            assert_eq!(FormalPoly::parse(&s, &p.to_string()).unwrap(), p, "{sel}");
        }
        let n = Semiring::Nat;
        assert_eq!(FormalPoly::parse(&n, "a_1 + a_1").unwrap().to_string(), "2*a_1");
        assert!(FormalPoly::parse(&n, "q").is_err());
        assert!(FormalPoly::parse(&n, "a_1 + ").is_err());
    }

    #[test]
    fn mismatch_and_zero() {
        let p = FormalPoly::one(&Semiring::Nat);
        assert!(p.add(&FormalPoly::one(&Semiring::Boolean)).is_err());
        let z2 = Semiring::zmod(2).unwrap();
        let one = FormalPoly::one(&z2);
        assert!(one.add(&one).unwrap().is_zero());
        assert_eq!(FormalPoly::zero(&z2).to_string(), "0");
        let c = FormalPoly::constant(&Semiring::Tropical, Elem::Tropical(Ext::ratio(3, 2))).unwrap();
        assert_eq!(c.to_string(), "(3/2)");
        assert!(FormalPoly::constant(&Semiring::Tropical, Elem::Bool(true)).is_err());
    }
}
