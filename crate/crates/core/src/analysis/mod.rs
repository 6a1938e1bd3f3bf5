//! Local finiteness of the varieties generated by UT_n(S), free-object
//! enumeration, and the bicyclic monoid inside UT_2 of the tropical semiring.

mod bicyclic;
mod enumerate;

use serde::Serialize;
use serde_json::json;

pub use bicyclic::{
    bicyclic_embed, bicyclic_mul, bicyclic_satisfies, h_mul, prefix_abelianization_embed,
    verify_bicyclic_embedding, BicyclicElem, Content, HElem,
};
pub use enumerate::{enumerate_free, semigroup_closure, CayleyTable, FreeMode};

use crate::error::{Error, Result};
use crate::funceq::func_equal;
use crate::poly::{FormalPoly, Var};
use crate::semiring::{Elem, Semiring};
use crate::variety::{free_elem, free_eq, FreeElem, Identity};
use crate::word::Word;

pub const DEFAULT_TORSION_BOUND: u32 = 12;

/// How far the rank-1 free object is probed when torsion is absent.
pub const RANK_ONE_PROBE: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsionStatus {
    /// `A^i = A^j` holds for every A.
    Found { i: u32, j: u32 },
    /// No pair with `j ≤ bound` works; each pair comes with an element
    /// where `A^i ≠ A^j`.
    NoneUpTo {
        bound: u32,
        falsifiers: Vec<(u32, u32, Elem)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionWitness {
    pub semiring: Semiring,
    pub status: TorsionStatus,
}

impl TorsionWitness {
    pub fn pair(&self) -> Option<(u32, u32)> {
        match self.status {
            TorsionStatus::Found { i, j } => Some((i, j)),
            TorsionStatus::NoneUpTo { .. } => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let s = &self.semiring;
        match &self.status {
            TorsionStatus::Found { i, j } => json!({"found": true, "i": i, "j": j}),
            TorsionStatus::NoneUpTo { bound, falsifiers } => json!({
                "found": false,
                "bound": bound,
                "falsifiers": falsifiers
                    .iter()
                    .map(|(i, j, a)| json!({"i": i, "j": j, "element": s.fmt_elem(a)}))
                    .collect::<Vec<_>>(),
            }),
        }
    }
}

fn power(s: &Semiring, e: u32) -> FormalPoly {
    FormalPoly::var(s, Var::new('x', 1)).pow(e)
}

/// Searches pairs `1 ≤ i < j ≤ bound` in lexicographic order for the first
/// with `x^i = x^j` as functions.
pub fn torsion_search(s: &Semiring, bound: u32) -> Result<TorsionWitness> {
    let x = Var::new('x', 1);
    let mut falsifiers = Vec::new();
    for i in 1..bound {
        for j in i + 1..=bound {
            let (eq, w) = func_equal(&power(s, i), &power(s, j))?;
            if eq {
                return Ok(TorsionWitness {
                    semiring: s.clone(),
                    status: TorsionStatus::Found { i, j },
                });
            }
            let known = s
                .torsion_falsifier(i, j)
                .filter(|a| s.pow_unchecked(a, i as u64) != s.pow_unchecked(a, j as u64));
            let a = known
                .or_else(|| w.point.and_then(|p| p.get(&x).cloned()))
                .ok_or_else(|| Error::Unsupported {
                    semiring: s.name(),
                    what: "a falsifying element for a torsion pair".into(),
                })?;
            falsifiers.push((i, j, a));
        }
    }
    Ok(TorsionWitness {
        semiring: s.clone(),
        status: TorsionStatus::NoneUpTo { bound, falsifiers },
    })
}

/// The torsion pair obtained from a multiplicative identity whose sides
/// have different content: a letter whose counts differ becomes `A` and
/// every other letter becomes `1`. `None` when the identity follows from
/// commutativity.
pub fn torsion_from_identity(id: &Identity) -> Option<(u32, u32)> {
    let d = id
        .alphabet()
        .into_iter()
        .find(|&c| id.lhs.count(c) != id.rhs.count(c))?;
    let (a, b) = (id.lhs.count(d) as u32, id.rhs.count(d) as u32);
    let (i, j) = (a.min(b), a.max(b));
    // 1 = A^j also gives A^j = A^2j
    Some(if i == 0 { (j, 2 * j) } else { (i, j) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Finiteness {
    LocallyFinite,
    NotLocallyFinite,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct FinitenessReport {
    pub semiring: Semiring,
    pub n: u32,
    pub verdict: Finiteness,
    /// Which of the equivalent conditions was established, and how.
    pub certified: String,
    pub torsion: TorsionWitness,
    /// Size of the free monoid of rank 1 when the variety is locally finite.
    pub rank_one_size: Option<usize>,
    /// Pairwise distinct elements among ρ(a^0), ..., ρ(a^RANK_ONE_PROBE)
    /// when it is not.
    pub rank_one_distinct: Option<usize>,
}

impl FinitenessReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "semiring": self.semiring.name(),
            "n": self.n,
            "verdict": self.verdict,
            "certified": self.certified,
            "torsion": self.torsion.to_json(),
            "rank_one_size": self.rank_one_size,
            "rank_one_distinct": self.rank_one_distinct,
        })
    }
}

/// Number of pairwise distinct elements among `elems`.
pub fn count_distinct(elems: &[FreeElem]) -> Result<usize> {
    let mut reps: Vec<&FreeElem> = Vec::new();
    for e in elems {
        let mut seen = false;
        for r in &reps {
            if free_eq(e, r)? {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push(e);
        }
    }
    Ok(reps.len())
}

/// Decides whether UT_n(S) generates a locally finite variety through the
/// torsion condition. A torsion pair settles it positively. Without one,
/// the answer is negative only when the semiring has a falsifying element
/// for every pair, not just those searched; otherwise it is unknown.
pub fn local_finiteness_report(s: &Semiring, n: u32, bound: u32) -> Result<FinitenessReport> {
    let torsion = torsion_search(s, bound)?;
    let mut report = FinitenessReport {
        semiring: s.clone(),
        n,
        verdict: Finiteness::Unknown,
        certified: String::new(),
        torsion,
        rank_one_size: None,
        rank_one_distinct: None,
    };
    if let Some((i, j)) = report.torsion.pair() {
        report.verdict = Finiteness::LocallyFinite;
        report.certified = format!("(iii): A^{i} = A^{j} holds in {}", s.name());
        report.rank_one_size = match enumerate_free(n, s, 1, FreeMode::Monoid, 100_000) {
            Ok(t) => Some(t.size()),
            Err(Error::LimitExceeded(_)) | Err(Error::Unsupported { .. }) => None,
            Err(e) => return Err(e),
        };
        return Ok(report);
    }
    if let Semiring::Finite(t) = s {
        // finite semirings always have a torsion pair, possibly past the bound
        let (i, j) = t.torsion();
        report.verdict = Finiteness::LocallyFinite;
        report.certified = format!("(iii): A^{i} = A^{j} holds in the finite semiring {}", s.name());
        return Ok(report);
    }
    let alphabet = ['a'];
    let powers = (0..=RANK_ONE_PROBE)
        .map(|m| free_elem(&Word::from("a").pow(m as usize), n, &alphabet, s))
        .collect::<Result<Vec<_>>>()?;
    report.rank_one_distinct = Some(count_distinct(&powers)?);
    if s.torsion_falsifier(1, 2).is_some() {
        report.verdict = Finiteness::NotLocallyFinite;
        report.certified =
            "not (iii): every pair i < j has an element with A^i != A^j, so (i) fails".into();
    } else {
        report.certified = format!("no torsion pair with j <= {bound}; the search is inconclusive");
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
