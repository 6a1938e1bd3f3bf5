use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{enum_paths, f_pi_w, Path, Quiver};
use crate::error::{Error, Result};
use crate::funceq::func_equal;
use crate::poly::{FormalPoly, Var};
use crate::semiring::Semiring;
use crate::word::{Letter, Word};

/// A finitely supported combination of loop-free paths of Γ_{n,Σ} with
/// polynomial coefficients. Zero coefficients are never stored.
///
/// Equality is formal, coefficient by coefficient; [`QAElem::func_eq`]
/// compares coefficients as functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QAElem {
    n: u32,
    sigma: Vec<Letter>,
    semiring: Semiring,
    terms: BTreeMap<Path, FormalPoly>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    path: Path,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonElem {
    n: u32,
    alphabet: Vec<Letter>,
    semiring: String,
    terms: Vec<JsonTerm>,
}

fn normalize_sigma(sigma: &[Letter]) -> Vec<Letter> {
    let mut s = sigma.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

impl QAElem {
    pub fn zero(n: u32, sigma: &[Letter], s: &Semiring) -> Self {
        QAElem {
            n,
            sigma: normalize_sigma(sigma),
            semiring: s.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The sum of the empty paths.
    pub fn identity(n: u32, sigma: &[Letter], s: &Semiring) -> Self {
        let mut e = QAElem::zero(n, sigma, s);
        for v in 1..=n {
            e.add_term(Path::empty(v), FormalPoly::one(s));
        }
        e
    }

    /// Builds an element from `(path, coefficient)` pairs, merging repeats.
    pub fn from_terms(
        n: u32,
        sigma: &[Letter],
        s: &Semiring,
        terms: impl IntoIterator<Item = (Path, FormalPoly)>,
    ) -> Result<Self> {
        let mut e = QAElem::zero(n, sigma, s);
        let quiver = Quiver::new(n, e.sigma.clone(), false)?;
        for (p, c) in terms {
            if !quiver.contains(&p) {
                return Err(Error::ShapeMismatch(format!("{p} is not a path of the quiver")));
            }
            if c.semiring() != s {
                return Err(Error::SemiringMismatch {
                    left: s.name(),
                    right: c.semiring().name(),
                });
            }
            e.add_term(p, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, p: Path, c: FormalPoly) {
        let merged = match self.terms.remove(&p) {
            Some(old) => old.add_unchecked(&c),
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(p, merged);
        }
    }

    /// ρ(w): the coefficient of each loop-free path π is `f_π^w`, with
    /// counts read in `s`.
    pub fn rho(w: &Word, n: u32, sigma: &[Letter], s: &Semiring) -> Result<Self> {
        let sigma = normalize_sigma(sigma);
        if let Some(c) = w.letters().iter().find(|c| !sigma.contains(c)) {
            return Err(Error::Parse(format!("letter `{c}` of {w} is not in the alphabet")));
        }
        if n == 0 {
            return Err(Error::ShapeMismatch("n must be at least 1".into()));
        }
        let mut e = QAElem::zero(n, &sigma, s);
        for pi in enum_paths(n, &sigma, w.len()) {
            let f = f_pi_w(&pi, w);
            if !f.is_zero() {
                e.add_term(pi, f.to_formal(s));
            }
        }
        Ok(e)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn sigma(&self) -> &[Letter] {
        &self.sigma
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &FormalPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Path> {
        self.terms.keys()
    }

    pub fn coefficient(&self, p: &Path) -> FormalPoly {
        self.terms
            .get(p)
            .cloned()
            .unwrap_or_else(|| FormalPoly::zero(&self.semiring))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, other: &QAElem) -> Result<()> {
        if self.semiring != other.semiring {
            return Err(Error::SemiringMismatch {
                left: self.semiring.name(),
                right: other.semiring.name(),
            });
        }
        if self.n != other.n || self.sigma != other.sigma {
            return Err(Error::ShapeMismatch(format!(
                "quiver algebras differ: n={} over {:?} vs n={} over {:?}",
                self.n, self.sigma, other.n, other.sigma
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &QAElem) -> Result<QAElem> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    /// Convolution: `(pq)(π) = Σ_{π = αβ} p(α) q(β)`.
    pub fn mul(&self, other: &QAElem) -> Result<QAElem> {
        self.check_compatible(other)?;
        let mut out = QAElem::zero(self.n, &self.sigma, &self.semiring);
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                if let Some(ab) = a.concat(b) {
                    out.add_term(ab, f.mul_unchecked(g));
                }
            }
        }
        Ok(out)
    }

    /// λ: sets every variable at vertex n to one, coefficient-wise.
    pub fn lambda_reduce(&self) -> Result<QAElem> {
        if self.n < 2 {
            return Err(Error::ShapeMismatch("λ needs n ≥ 2".into()));
        }
        let mut out = QAElem::zero(self.n, &self.sigma, &self.semiring);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.delta(self.n));
        }
        Ok(out)
    }

    /// Inverts λ on the image of ρ. The coefficient of ⟨1⟩ is the
    /// abelianisation of `w` and fixes how often each letter occurs; every
    /// term of `f_π^w` then has a known σ-degree, and the missing degree is
    /// restored as a power of σ_n.
    pub fn lambda_reconstruct(&self) -> Result<QAElem> {
        let n = self.n;
        if n < 2 {
            return Err(Error::ShapeMismatch("λ needs n ≥ 2".into()));
        }
        let not_in_image = |why: String| Error::NotInImage(why);
        let head = self.coefficient(&Path::empty(1));
        let (content, c) = head
            .as_monomial()
            .ok_or_else(|| not_in_image(format!("the coefficient of <1> is {head}, not a monomial")))?;
        if !self.semiring.is_one(c) || content.vars().any(|v| v.vertex != 1) {
            return Err(not_in_image(format!(
                "the coefficient of <1> is {head}, not an abelianised word at vertex 1"
            )));
        }
        let mut out = QAElem::zero(n, &self.sigma, &self.semiring);
        for (p, f) in &self.terms {
            let mut terms = Vec::new();
            for (m, coeff) in f.terms() {
                if m.vars().any(|v| v.vertex >= n) {
                    return Err(not_in_image(format!("{m} mentions vertex {n}")));
                }
                let mut lifted = m.clone();
                for &sigma in &self.sigma {
                    let target = content.letter_degree(sigma) as i64
                        - p.labels().iter().filter(|&&l| l == sigma).count() as i64;
                    let missing = target - m.letter_degree(sigma) as i64;
                    if missing < 0 {
                        return Err(not_in_image(format!(
                            "{m} at {p} has too many {sigma} variables"
                        )));
                    }
                    lifted.mul_var(Var::new(sigma, n), missing as u32);
                }
                terms.push((lifted, coeff.clone()));
            }
            out.add_term(
                p.clone(),
                FormalPoly::from_terms(&self.semiring, terms).expect("coefficients come from the same semiring"),
            );
        }
        Ok(out)
    }

    /// Equality with coefficients compared as polynomial functions.
    pub fn func_eq(&self, other: &QAElem) -> Result<bool> {
        self.check_compatible(other)?;
        let mut paths: Vec<&Path> = self.terms.keys().chain(other.terms.keys()).collect();
        paths.sort();
        paths.dedup();
        for p in paths {
            if !func_equal(&self.coefficient(p), &other.coefficient(p))?.0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Parses the printed form, e.g. `a_1 <1> + (a_1 + a_2) <1 -a-> 2>`.
    pub fn parse(text: &str, n: u32, sigma: &[Letter], s: &Semiring) -> Result<QAElem> {
        let text = text.trim();
        if text == "0" {
            return Ok(QAElem::zero(n, sigma, s));
        }
        let mut terms = Vec::new();
        for term in crate::poly::split_top(text, '+') {
            let term = term.trim();
            let at = term
                .rfind('<')
                .ok_or_else(|| Error::Parse(format!("term `{term}` has no path")))?;
            let path: Path = term[at..].parse()?;
            let coeff = term[..at].trim();
            let coeff = if coeff.is_empty() {
                FormalPoly::one(s)
            } else {
                let inner = match coeff.strip_prefix('(').and_then(|c| c.strip_suffix(')')) {
                    Some(inner) if crate::poly::split_top(coeff, '+').len() == 1 => inner,
                    _ => coeff,
                };
                FormalPoly::parse(s, inner)?
            };
            terms.push((path, coeff));
        }
        QAElem::from_terms(n, sigma, s, terms)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let e = JsonElem {
            n: self.n,
            alphabet: self.sigma.clone(),
            semiring: self.semiring.name(),
            terms: self
                .terms
                .iter()
                .map(|(p, c)| JsonTerm {
                    path: p.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(e).expect("plain data serialises")
    }

    /// Reads [`QAElem::to_json`] output; the semiring is supplied because
    /// table semirings are not recoverable from their name.
    pub fn from_json(value: &serde_json::Value, s: &Semiring) -> Result<QAElem> {
        let e: JsonElem =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if e.semiring != s.name() {
            return Err(Error::SemiringMismatch {
                left: s.name(),
                right: e.semiring,
            });
        }
        let terms = e
            .terms
            .into_iter()
            .map(|t| Ok((t.path, FormalPoly::parse(s, &t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        QAElem::from_terms(e.n, &e.alphabet, s, terms)
    }
}

/// Prints a coefficient in front of a path: bare path for one, parentheses
/// around sums.
pub(crate) fn fmt_coeff_path(c: &FormalPoly, p: &impl fmt::Display) -> String {
    if c.is_one() {
        format!("{p}")
    } else if c.len() > 1 {
        format!("({c}) {p}")
    } else {
        format!("{c} {p}")
    }
}

impl fmt::Display for QAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| fmt_coeff_path(c, p)).collect();
        f.write_str(&parts.join(" + "))
    }
}
