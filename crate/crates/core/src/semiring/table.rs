//! Finite commutative semirings given by explicit operation tables.

use std::collections::HashMap;
use std::path::Path;

use num_integer::Integer;
use serde::Deserialize;

use crate::error::{Error, Result};

/// A finite semiring with elements `0..size`, stored as dense tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTable {
    name: String,
    elements: Vec<String>,
    zero: usize,
    one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    // multiples[k] = k-fold sum of one, up to where the sequence starts to cycle
    multiples: Vec<usize>,
    mult_tail: usize,
    mult_period: usize,
    torsion: (u32, u32),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Cell {
    Index(usize),
    Name(String),
}

#[derive(Deserialize)]
struct TableFile {
    elements: Vec<String>,
    zero: String,
    one: String,
    add: Vec<Vec<Cell>>,
    mul: Vec<Vec<Cell>>,
}

impl FiniteTable {
    /// Builds and validates a table. All semiring laws are checked exhaustively.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        zero: usize,
        one: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let size = elements.len();
        let bad = |m: String| Error::BadTable(m);
        if size < 2 {
            return Err(bad("a semiring needs at least two elements".into()));
        }
        let mut seen = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if seen.insert(e.as_str(), i).is_some() {
                return Err(bad(format!("duplicate element name `{e}`")));
            }
        }
        if zero >= size || one >= size {
            return Err(bad("zero/one out of range".into()));
        }
        if zero == one {
            return Err(bad("zero and one must differ".into()));
        }
        let flatten = |t: Vec<Vec<usize>>, what: &str| -> Result<Vec<usize>> {
            if t.len() != size || t.iter().any(|r| r.len() != size) {
                return Err(bad(format!("{what} table must be {size}x{size}")));
            }
            let flat: Vec<usize> = t.into_iter().flatten().collect();
            if flat.iter().any(|&v| v >= size) {
                return Err(bad(format!("{what} table has an out-of-range entry")));
            }
            Ok(flat)
        };
        let add = flatten(add, "add")?;
        let mul = flatten(mul, "mul")?;
        let mut t = FiniteTable {
            name: name.into(),
            elements,
            zero,
            one,
            add,
            mul,
            multiples: Vec::new(),
            mult_tail: 0,
            mult_period: 1,
            torsion: (1, 2),
        };
        t.check_laws()?;
        t.compute_multiples();
        t.torsion = t.compute_torsion();
        Ok(t)
    }

    /// The ring Z/pZ as a semiring table (p >= 2).
    pub fn zmod(p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::BadSelector(format!("zmod:{p}")));
        }
        let elements = (0..p).map(|i| i.to_string()).collect();
        let add = (0..p).map(|a| (0..p).map(|b| (a + b) % p).collect()).collect();
        let mul = (0..p).map(|a| (0..p).map(|b| (a * b) % p).collect()).collect();
        FiniteTable::new(format!("zmod:{p}"), elements, 0, 1, add, mul)
    }

    pub fn from_json(name: impl Into<String>, text: &str) -> Result<Self> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| Error::BadTable(e.to_string()))?;
        let index: HashMap<&str, usize> = file
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.as_str(), i))
            .collect();
        let resolve = |c: &Cell| -> Result<usize> {
            match c {
                Cell::Index(i) => Ok(*i),
                Cell::Name(n) => index
                    .get(n.as_str())
                    .copied()
                    .ok_or_else(|| Error::BadTable(format!("unknown element `{n}`"))),
            }
        };
        let zero = resolve(&Cell::Name(file.zero.clone()))?;
        let one = resolve(&Cell::Name(file.one.clone()))?;
        let conv = |t: &[Vec<Cell>]| -> Result<Vec<Vec<usize>>> {
            t.iter()
                .map(|r| r.iter().map(resolve).collect::<Result<Vec<_>>>())
                .collect()
        };
        let add = conv(&file.add)?;
        let mul = conv(&file.mul)?;
        FiniteTable::new(name, file.elements.clone(), zero, one, add, mul)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        FiniteTable::from_json(format!("table:{}", path.display()), &text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size() + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// k-fold sum of one.
    pub fn nat(&self, k: u128) -> usize {
        let tail = self.mult_tail as u128;
        let idx = if k < tail {
            k
        } else {
            tail + (k - tail) % self.mult_period as u128
        };
        self.multiples[idx as usize]
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.size()).all(|a| self.add(a, a) == a)
    }

    /// The least (i, j), i < j, with a^i = a^j for every element a.
    pub fn torsion(&self) -> (u32, u32) {
        self.torsion
    }

    fn check_laws(&self) -> Result<()> {
        let n = self.size();
        let fail = |law: &str, a: usize, b: usize, c: usize| {
            Err(Error::BadTable(format!(
                "{law} fails at ({}, {}, {})",
                self.elements[a], self.elements[b], self.elements[c]
            )))
        };
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("additive identity", a, self.zero, a);
            }
            if self.mul(a, self.one) != a {
                return fail("multiplicative identity", a, self.one, a);
            }
            if self.mul(a, self.zero) != self.zero {
                return fail("zero annihilates", a, self.zero, a);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", a, b, b);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", a, b, b);
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", a, b, c);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", a, b, c);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity", a, b, c);
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_multiples(&mut self) {
        let mut seq = vec![self.zero];
        let mut first_seen = HashMap::from([(self.zero, 0usize)]);
        loop {
            let next = self.add(*seq.last().unwrap(), self.one);
            if let Some(&start) = first_seen.get(&next) {
                self.mult_tail = start;
                self.mult_period = seq.len() - start;
                break;
            }
            first_seen.insert(next, seq.len());
            seq.push(next);
        }
        self.multiples = seq;
    }

    fn compute_torsion(&self) -> (u32, u32) {
        // per element: index at which powers a^1, a^2, ... enter their cycle, and the cycle length
        let mut max_index = 1u64;
        let mut period = 1u64;
        for a in 0..self.size() {
            let mut seen = HashMap::new();
            let mut cur = a;
            let mut e = 1u64;
            loop {
                if let Some(&first) = seen.get(&cur) {
                    max_index = max_index.max(first);
                    period = period.lcm(&(e - first));
                    break;
                }
                seen.insert(cur, e);
                cur = self.mul(cur, a);
                e += 1;
            }
        }
        (max_index as u32, (max_index + period) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_nat_wraps() {
        let z2 = FiniteTable::zmod(2).unwrap();
        assert_eq!(z2.nat(2), 0);
        assert_eq!(z2.nat(3), 1);
        let z5 = FiniteTable::zmod(5).unwrap();
        assert_eq!(z5.nat(12), 2);
        assert_eq!(z5.torsion(), (1, 5));
    }

    #[test]
    fn zmod4_torsion() {
        // 2^2 = 0 = 2^3 forces i = 2; units have period 2
        assert_eq!(FiniteTable::zmod(4).unwrap().torsion(), (2, 4));
    }

    #[test]
    fn json_by_name_and_index() {
        let text = r#"{"elements":["f","t"],"zero":"f","one":"t",
            "add":[["f","t"],["t","t"]],"mul":[[0,0],[0,1]]}"#;
        let t = FiniteTable::from_json("bool", text).unwrap();
        assert!(t.is_idempotent());
        assert_eq!(t.nat(7), 1);
        assert_eq!(t.torsion(), (1, 2));
    }

    #[test]
    fn rejects_broken_laws() {
        // a "max" addition with a non-distributive multiplication
        let text = r#"{"elements":["0","1","2"],"zero":"0","one":"1",
            "add":[[0,1,2],[1,1,2],[2,2,2]],"mul":[[0,0,0],[0,1,2],[0,2,1]]}"#;
        let err = FiniteTable::from_json("bad", text).unwrap_err();
        assert!(matches!(err, Error::BadTable(_)));
        let text = r#"{"elements":["0","1"],"zero":"0","one":"0",
            "add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]}"#;
        assert!(FiniteTable::from_json("bad", text).is_err());
    }
}
