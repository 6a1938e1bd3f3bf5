use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::semiring::{Elem, Ext, Semiring};
use crate::variety::{ut_mul, Identity, UTMatrix};
use crate::word::{Letter, Word};

/// `q^i p^j` in the bicyclic monoid ⟨p, q | pq = 1⟩.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicyclicElem {
    pub i: u64,
    pub j: u64,
}

impl BicyclicElem {
    pub const IDENTITY: BicyclicElem = BicyclicElem { i: 0, j: 0 };

    pub fn new(i: u64, j: u64) -> Self {
        BicyclicElem { i, j }
    }

    /// The value of a word over `p` and `q`.
    pub fn from_word(w: &Word) -> Result<Self> {
        w.letters().iter().try_fold(Self::IDENTITY, |acc, &c| {
            let g = match c {
                'p' => BicyclicElem::new(0, 1),
                'q' => BicyclicElem::new(1, 0),
                _ => return Err(Error::Parse(format!("`{c}` is not p or q"))),
            };
            Ok(bicyclic_mul(acc, g))
        })
    }

    /// The normal-form word `q^i p^j`.
    pub fn to_word(self) -> Word {
        Word::from("q").pow(self.i as usize).concat(&Word::from("p").pow(self.j as usize))
    }
}

impl fmt::Display for BicyclicElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl FromStr for BicyclicElem {
    type Err = Error;

    /// `(i,j)` or a word over p and q.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("`{s}` is not a pair (i,j)")))?;
            let num = |x: &str| {
                x.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("`{x}` is not a nonnegative integer")))
            };
            return Ok(BicyclicElem::new(num(a)?, num(b)?));
        }
        BicyclicElem::from_word(&t.parse()?)
    }
}

/// `(i,j)(k,l) = (i + t - j, l + t - k)` with `t = max(j, k)`.
pub fn bicyclic_mul(x: BicyclicElem, y: BicyclicElem) -> BicyclicElem {
    let t = x.j.max(y.i);
    BicyclicElem::new(x.i + t - x.j, y.j + t - y.i)
}

/// `(i,j) ↦ [[i-j, i+j], [-inf, j-i]]` in UT_2 of the tropical semiring.
pub fn bicyclic_embed(x: BicyclicElem) -> UTMatrix {
    let (i, j) = (x.i as i128, x.j as i128);
    let t = |v: i128| Elem::Tropical(Ext::Finite(BigRational::from_integer(BigInt::from(v))));
    UTMatrix::from_upper(&Semiring::Tropical, 2, &[t(i - j), t(i + j), t(j - i)])
}

/// Checks that the embedding is multiplicative on all pairs and injective
/// on all elements with coordinates up to `bound`. Returns the number of
/// products compared.
pub fn verify_bicyclic_embedding(bound: u64) -> std::result::Result<u64, String> {
    let elems: Vec<BicyclicElem> = (0..=bound)
        .flat_map(|i| (0..=bound).map(move |j| BicyclicElem::new(i, j)))
        .collect();
    let images: Vec<UTMatrix> = elems.iter().map(|&x| bicyclic_embed(x)).collect();
    let mut checked = 0;
    for (x, fx) in elems.iter().zip(&images) {
        for (y, fy) in elems.iter().zip(&images) {
            let lhs = ut_mul(fx, fy).map_err(|e| e.to_string())?;
            if lhs != bicyclic_embed(bicyclic_mul(*x, *y)) {
                return Err(format!("φ({x})φ({y}) != φ({x}{y})"));
            }
            checked += 1;
        }
    }
    let distinct: BTreeSet<String> = images.iter().map(|m| m.to_string()).collect();
    if distinct.len() != elems.len() {
        return Err("two elements share an image".into());
    }
    Ok(checked)
}

/// Random substitutions of bicyclic elements with coordinates up to `max`;
/// returns a substitution separating the two sides if one is found.
pub fn bicyclic_satisfies(
    id: &Identity,
    samples: u64,
    seed: u64,
    max: u64,
) -> Option<BTreeMap<Letter, BicyclicElem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let eval = |w: &Word, a: &BTreeMap<Letter, BicyclicElem>| {
        w.letters()
            .iter()
            .fold(BicyclicElem::IDENTITY, |acc, c| bicyclic_mul(acc, a[c]))
    };
    for _ in 0..samples {
        let a: BTreeMap<Letter, BicyclicElem> = id
            .alphabet()
            .into_iter()
            .map(|c| (c, BicyclicElem::new(rng.random_range(0..=max), rng.random_range(0..=max))))
            .collect();
        if eval(&id.lhs, &a) != eval(&id.rhs, &a) {
            return Some(a);
        }
    }
    None
}

/// An element of the free commutative monoid: letter multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content(BTreeMap<Letter, u32>);

impl Content {
    pub fn of(w: &Word) -> Self {
        let mut m = BTreeMap::new();
        for &c in w.letters() {
            *m.entry(c).or_insert(0) += 1;
        }
        Content(m)
    }

    pub fn mul(&self, other: &Content) -> Content {
        let mut m = self.0.clone();
        for (&c, &e) in &other.0 {
            *m.entry(c).or_insert(0) += e;
        }
        Content(m)
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (&c, &e) in &self.0 {
            for _ in 0..e {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

/// An element of the semidirect product of finite sets of contents (under
/// union) by contents, acting by translation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HElem {
    pub prefixes: BTreeSet<Content>,
    pub content: Content,
}

impl fmt::Display for HElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.prefixes.iter().map(|c| c.to_string()).collect();
        write!(f, "({{{}}}, {})", p.join(", "), self.content)
    }
}

/// `(A, m)(B, n) = (A ∪ mB, mn)`.
pub fn h_mul(x: &HElem, y: &HElem) -> HElem {
    let mut prefixes = x.prefixes.clone();
    prefixes.extend(y.prefixes.iter().map(|b| x.content.mul(b)));
    HElem {
        prefixes,
        content: x.content.mul(&y.content),
    }
}

/// The contents of the nonempty prefixes of `w`, paired with the content of
/// `w`.
pub fn prefix_abelianization_embed(w: &Word) -> Result<HElem> {
    if w.is_empty() {
        return Err(Error::Parse("the empty word has no image".into()));
    }
    let letters = w.letters();
    let prefixes = (1..=letters.len())
        .map(|k| Content::of(&Word::new(letters[..k].to_vec())))
        .collect();
    Ok(HElem {
        prefixes,
        content: Content::of(w),
    })
}
