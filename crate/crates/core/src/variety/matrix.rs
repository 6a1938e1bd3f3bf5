use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{Elem, Semiring};
use crate::word::{Letter, Word};

/// An upper triangular n×n matrix over a semiring. Entries below the
/// diagonal are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UTMatrix {
    semiring: Semiring,
    n: usize,
    // row-major, full square for simple indexing
    entries: Vec<Elem>,
}

impl UTMatrix {
    pub fn zero(s: &Semiring, n: usize) -> Self {
        UTMatrix {
            semiring: s.clone(),
            n,
            entries: vec![s.zero(); n * n],
        }
    }

    pub fn identity(s: &Semiring, n: usize) -> Self {
        let mut m = UTMatrix::zero(s, n);
        for i in 0..n {
            m.entries[i * n + i] = s.one();
        }
        m
    }

    /// From rows; rejects nonzero entries below the diagonal.
    pub fn from_rows(s: &Semiring, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            for (j, e) in row.into_iter().enumerate() {
                s.check(&e)?;
                if j < i && !s.is_zero(&e) {
                    return Err(Error::ShapeMismatch(format!(
                        "entry ({}, {}) is below the diagonal but nonzero",
                        i + 1,
                        j + 1
                    )));
                }
                entries.push(e);
            }
        }
        Ok(UTMatrix {
            semiring: s.clone(),
            n,
            entries,
        })
    }

    /// The upper triangle in row order: (1,1), (1,2), ..., (n,n).
    pub fn from_upper(s: &Semiring, n: usize, upper: &[Elem]) -> Self {
        let mut m = UTMatrix::zero(s, n);
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                m.entries[i * n + j] = upper[k].clone();
                k += 1;
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    /// Zero-based entry (i, j).
    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.entries[i * self.n + j]
    }

    /// Sets a zero-based upper entry.
    pub fn set(&mut self, i: usize, j: usize, e: Elem) {
        assert!(i <= j, "entries below the diagonal stay zero");
        self.entries[i * self.n + j] = e;
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows()
            .into_iter()
            .map(|r| r.iter().map(|e| self.semiring.fmt_elem(e)).collect())
            .collect()
    }

    pub fn from_strings(s: &Semiring, rows: &[Vec<String>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|t| s.parse_elem(t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        UTMatrix::from_rows(s, rows)
    }
}

impl fmt::Display for UTMatrix {
    /// `[[0, 1], [-inf, 2]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_strings()
            .into_iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// The semiring matrix product, summing only over `i ≤ k ≤ j`.
pub fn ut_mul(x: &UTMatrix, y: &UTMatrix) -> Result<UTMatrix> {
    if x.semiring != y.semiring {
        return Err(Error::SemiringMismatch {
            left: x.semiring.name(),
            right: y.semiring.name(),
        });
    }
    if x.n != y.n {
        return Err(Error::ShapeMismatch(format!("{}×{} times {}×{}", x.n, x.n, y.n, y.n)));
    }
    let s = &x.semiring;
    let n = x.n;
    let mut out = UTMatrix::zero(s, n);
    for i in 0..n {
        for j in i..n {
            let mut acc = s.zero();
            for k in i..=j {
                let t = s.mul_unchecked(x.get(i, k), y.get(k, j));
                acc = s.add_unchecked(&acc, &t);
            }
            out.entries[i * n + j] = acc;
        }
    }
    Ok(out)
}

/// The product of the matrices assigned to the letters of `w`; the
/// identity matrix for the empty word.
pub fn ut_eval(w: &Word, assign: &BTreeMap<Letter, UTMatrix>, s: &Semiring, n: usize) -> Result<UTMatrix> {
    let mut acc = UTMatrix::identity(s, n);
    for c in w.letters() {
        let m = assign
            .get(c)
            .ok_or_else(|| Error::Parse(format!("no matrix assigned to letter `{c}`")))?;
        acc = ut_mul(&acc, m)?;
    }
    Ok(acc)
}
