//! Identities of UT_n(S): the exact checker, the matrix-substitution
//! oracle, and elements of the free objects.

mod free;
mod matrix;
mod oracle;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

pub use free::{free_elem, free_eq, free_identity, free_mul, FreeElem};
pub use matrix::{ut_eval, ut_mul, UTMatrix};
pub use oracle::{oracle_check, OracleBudget};

use crate::error::{Error, Result};
use crate::funceq::func_equal;
use crate::poly::{Point, Var};
use crate::quiver::{enum_paths, f_pi_w, Path};
use crate::semiring::Semiring;
use crate::word::{Letter, Word};

/// Adjan's identity for the bicyclic monoid: xy²x·xy·xy²x = xy²x·yx·xy²x.
pub const ADJAN: &str = "xyyxxyxyyx = xyyxyxxyyx";

/// An identity `u = v`. It is a semigroup identity when both sides are
/// nonempty and a monoid identity otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Identity {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    Semigroup,
    Monoid,
}

impl Identity {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Identity { lhs, rhs }
    }

    pub fn kind(&self) -> IdentityKind {
        if self.lhs.is_empty() || self.rhs.is_empty() {
            IdentityKind::Monoid
        } else {
            IdentityKind::Semigroup
        }
    }

    /// Sorted letters occurring on either side.
    pub fn alphabet(&self) -> Vec<Letter> {
        self.lhs.concat(&self.rhs).alphabet()
    }

    /// The identity with each letter replaced by a word.
    pub fn substitute(&self, map: &BTreeMap<Letter, Word>) -> Identity {
        let sub = |w: &Word| {
            Word::new(
                w.letters()
                    .iter()
                    .flat_map(|c| map.get(c).map_or_else(|| vec![*c], |r| r.letters().to_vec()))
                    .collect(),
            )
        };
        Identity::new(sub(&self.lhs), sub(&self.rhs))
    }
}

impl FromStr for Identity {
    type Err = Error;

    /// `u = v`, whitespace optional; `1` or nothing denotes the empty word.
    fn from_str(s: &str) -> Result<Identity> {
        let (l, r) = s
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("`{s}` is not an identity `u = v`")))?;
        if r.contains('=') {
            return Err(Error::Parse(format!("`{s}` has more than one `=`")));
        }
        Ok(Identity::new(l.parse()?, r.parse()?))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Function equality of f_π^u and f_π^v on every path.
    Checker,
    /// Every substitution of matrices over a finite semiring.
    Exhaustive,
    /// Seeded random substitutions; `holds` only means none failed.
    Random,
}

/// The outcome of checking an identity in UT_n(S), with evidence that can
/// be re-verified independently.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub identity: Identity,
    pub n: u32,
    pub semiring: Semiring,
    pub holds: bool,
    pub method: Method,
    pub witness_path: Option<Path>,
    pub witness_assignment: Option<BTreeMap<Letter, UTMatrix>>,
    pub seed: Option<u64>,
    pub substitutions: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct VerdictJson {
    identity: String,
    n: u32,
    semiring: String,
    holds: bool,
    method: Method,
    witness_path: Option<String>,
    witness_assignment: Option<BTreeMap<Letter, Vec<Vec<String>>>>,
    seed: Option<u64>,
    substitutions: Option<u64>,
}

impl Verdict {
    fn holding(id: &Identity, n: u32, s: &Semiring, method: Method) -> Self {
        Verdict {
            identity: id.clone(),
            n,
            semiring: s.clone(),
            holds: true,
            method,
            witness_path: None,
            witness_assignment: None,
            seed: None,
            substitutions: None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let v = VerdictJson {
            identity: self.identity.to_string(),
            n: self.n,
            semiring: self.semiring.name(),
            holds: self.holds,
            method: self.method,
            witness_path: self.witness_path.as_ref().map(|p| p.to_string()),
            witness_assignment: self
                .witness_assignment
                .as_ref()
                .map(|a| a.iter().map(|(l, m)| (*l, m.to_strings())).collect()),
            seed: self.seed,
            substitutions: self.substitutions,
        };
        serde_json::to_value(v).expect("plain data serialises")
    }

    /// Reads [`Verdict::to_json`] output over the semiring `s`.
    pub fn from_json(value: &serde_json::Value, s: &Semiring) -> Result<Verdict> {
        let v: VerdictJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if v.semiring != s.name() {
            return Err(Error::SemiringMismatch {
                left: s.name(),
                right: v.semiring,
            });
        }
        let witness_assignment = match v.witness_assignment {
            Some(a) => Some(
                a.into_iter()
                    .map(|(l, rows)| Ok((l, UTMatrix::from_strings(s, &rows)?)))
                    .collect::<Result<BTreeMap<_, _>>>()?,
            ),
            None => None,
        };
        Ok(Verdict {
            identity: v.identity.parse()?,
            n: v.n,
            semiring: s.clone(),
            holds: v.holds,
            method: v.method,
            witness_path: v.witness_path.map(|p| p.parse()).transpose()?,
            witness_assignment,
            seed: v.seed,
            substitutions: v.substitutions,
        })
    }

    /// Re-verifies the evidence: a failing verdict's path must separate the
    /// two sides as functions and its assignment must separate them as
    /// matrices; a holding verdict is recomputed by the same method.
    pub fn recheck(&self) -> Result<bool> {
        let s = &self.semiring;
        let (u, v) = (&self.identity.lhs, &self.identity.rhs);
        if self.holds {
            let again = match self.method {
                Method::Checker => check_identity(&self.identity, self.n, s)?,
                Method::Exhaustive | Method::Random => oracle_check(
                    &self.identity,
                    self.n,
                    s,
                    &OracleBudget {
                        samples: self.substitutions.unwrap_or(0),
                        seed: self.seed.unwrap_or(0),
                        ..OracleBudget::default()
                    },
                )?,
            };
            return Ok(again.holds);
        }
        if self.witness_path.is_none() && self.witness_assignment.is_none() {
            return Ok(false);
        }
        if let Some(pi) = &self.witness_path {
            let f = f_pi_w(pi, u).to_formal(s);
            let g = f_pi_w(pi, v).to_formal(s);
            if func_equal(&f, &g)?.0 {
                return Ok(false);
            }
        }
        if let Some(a) = &self.witness_assignment {
            let n = self.n as usize;
            if ut_eval(u, a, s, n)? == ut_eval(v, a, s, n)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn summary(&self) -> String {
        let verb = if self.holds { "holds" } else { "fails" };
        let mut out = format!(
            "{} {verb} in UT_{}({})",
            self.identity,
            self.n,
            self.semiring.name()
        );
        if let Some(p) = &self.witness_path {
            out.push_str(&format!("\nwitness path: {p}"));
        }
        if let Some(a) = &self.witness_assignment {
            for (l, m) in a {
                out.push_str(&format!("\n{l} = {m}"));
            }
        }
        if self.method == Method::Random {
            out.push_str(&format!(
                "\nrandom search: {} substitutions, seed {}",
                self.substitutions.unwrap_or(0),
                self.seed.unwrap_or(0)
            ));
        }
        out
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

/// Turns a point separating `f_π^u` and `f_π^v` into matrices: σ's matrix
/// carries `σ_v` on the diagonal at v (one when unassigned), one on each
/// edge of π labelled σ, and zero elsewhere. Walks through these matrices
/// from the start to the end of π are exactly the π-ambles, so entry
/// (start, end) of the product for w is `f_π^w` at the point.
pub fn lift_witness(
    pi: &Path,
    point: &Point,
    sigma: &[Letter],
    s: &Semiring,
    n: u32,
) -> BTreeMap<Letter, UTMatrix> {
    let n = n as usize;
    sigma
        .iter()
        .map(|&l| {
            let mut m = UTMatrix::zero(s, n);
            for v in 1..=n {
                let e = point
                    .get(&Var::new(l, v as u32))
                    .cloned()
                    .unwrap_or_else(|| s.one());
                m.set(v - 1, v - 1, e);
            }
            for (i, label, j) in pi.edges() {
                if label == l {
                    m.set(i as usize - 1, j as usize - 1, s.one());
                }
            }
            (l, m)
        })
        .collect()
}

/// Decides whether `id` holds in UT_n(S) by comparing `f_π^u` and `f_π^v`
/// as functions on every loop-free path π of Γ_n over the letters of `id`.
/// The first failing path in path order is reported, with a separating
/// substitution when function equality produced a point.
pub fn check_identity(id: &Identity, n: u32, s: &Semiring) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::ShapeMismatch("n must be at least 1".into()));
    }
    let sigma = id.alphabet();
    let paths = enum_paths(n, &sigma, n as usize);
    let results: Vec<Result<Option<Point>>> = paths
        .par_iter()
        .map(|pi| {
            let f = f_pi_w(pi, &id.lhs).to_formal(s);
            let g = f_pi_w(pi, &id.rhs).to_formal(s);
            let (eq, w) = func_equal(&f, &g)?;
            Ok(if eq { None } else { Some(w.point.unwrap_or_default()) })
        })
        .collect();
    for (pi, r) in paths.iter().zip(results) {
        if let Some(point) = r? {
            let assignment = lift_witness(pi, &point, &sigma, s, n);
            let k = n as usize;
            let separates =
                ut_eval(&id.lhs, &assignment, s, k)? != ut_eval(&id.rhs, &assignment, s, k)?;
            return Ok(Verdict {
                holds: false,
                witness_path: Some(pi.clone()),
                witness_assignment: separates.then_some(assignment),
                ..Verdict::holding(id, n, s, Method::Checker)
            });
        }
    }
    Ok(Verdict::holding(id, n, s, Method::Checker))
}

/// A JSON report of several verdicts keyed by identity text.
pub fn verdicts_json(verdicts: &[Verdict]) -> serde_json::Value {
    json!(verdicts.iter().map(Verdict::to_json).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests;
