//! Commutative semirings with zero and one, selected at runtime.
//!
//! A [`Semiring`] is a cheap-to-clone handle; values are [`Elem`]s. Every
//! operation is pure. The public `add`/`mul` check that both operands belong
//! to the carrier; crate-internal code that has already validated its inputs
//! uses the unchecked variants.

mod ext;
mod idpt;
mod table;

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub use ext::Ext;
pub use idpt::IdptPoly;
pub use table::FiniteTable;

use crate::error::{Error, Result};

/// How equality of polynomial functions is decided for a semiring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EqStrategy {
    /// Distinct formal polynomials are distinct functions.
    Formal,
    /// Evaluate at every point of the (finite) carrier.
    Exhaustive,
    /// Max-plus: term-by-term dominance via exact linear feasibility.
    TropicalDominance,
    /// Monotone Boolean functions compared by minimal supports.
    BooleanSupport,
    /// Capped max-plus on {-inf} ∪ [0,1]: dominance per -inf face.
    IntervalDominance,
}

#[derive(Clone, Debug)]
pub enum Semiring {
    /// (Q ∪ {-inf}, max, +)
    Tropical,
    /// ({0,1}, or, and)
    Boolean,
    /// (N, +, ·)
    Nat,
    /// ({-inf} ∪ [0,1] ∩ Q, max, min(x+y, 1))
    Interval,
    /// Free commutative idempotent semiring on `generators` symbols.
    FreeIdempotent { generators: usize },
    Finite(Arc<FiniteTable>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Tropical(Ext),
    Bool(bool),
    Nat(BigUint),
    Table(usize),
    Interval(Ext),
    FreeIdpt(IdptPoly),
}

impl PartialEq for Semiring {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Semiring::Tropical, Semiring::Tropical)
            | (Semiring::Boolean, Semiring::Boolean)
            | (Semiring::Nat, Semiring::Nat)
            | (Semiring::Interval, Semiring::Interval) => true,
            (
                Semiring::FreeIdempotent { generators: a },
                Semiring::FreeIdempotent { generators: b },
            ) => a == b,
            (Semiring::Finite(a), Semiring::Finite(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for Semiring {}

impl std::str::FromStr for Semiring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Semiring::parse(s)
    }
}

impl std::hash::Hash for Semiring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name().hash(state);
    }
}

impl Semiring {
    pub fn zmod(p: usize) -> Result<Self> {
        Ok(Semiring::Finite(Arc::new(FiniteTable::zmod(p)?)))
    }

    pub fn table(t: FiniteTable) -> Self {
        Semiring::Finite(Arc::new(t))
    }

    /// Parses a selector: `tropical`, `boolean`, `nat`, `interval`,
    /// `zmod:<p>`, `freeidpt:<k>` or `table:<path>`.
    pub fn parse(selector: &str) -> Result<Self> {
        let s = selector.trim();
        let bad = || Error::BadSelector(s.to_string());
        match s {
            "tropical" => return Ok(Semiring::Tropical),
            "boolean" => return Ok(Semiring::Boolean),
            "nat" => return Ok(Semiring::Nat),
            "interval" => return Ok(Semiring::Interval),
            _ => {}
        }
        match s.split_once(':') {
            Some(("zmod", p)) => Semiring::zmod(p.parse().map_err(|_| bad())?),
            Some(("freeidpt", k)) => {
                let k: usize = k.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                Ok(Semiring::FreeIdempotent { generators: k })
            }
            Some(("table", path)) => Ok(Semiring::table(FiniteTable::load(Path::new(path))?)),
            _ => Err(bad()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Semiring::Tropical => "tropical".into(),
            Semiring::Boolean => "boolean".into(),
            Semiring::Nat => "nat".into(),
            Semiring::Interval => "interval".into(),
            Semiring::FreeIdempotent { generators } => format!("freeidpt:{generators}"),
            Semiring::Finite(t) => t.name().to_string(),
        }
    }

    pub fn eq_strategy(&self) -> EqStrategy {
        match self {
            Semiring::Tropical => EqStrategy::TropicalDominance,
            Semiring::Boolean => EqStrategy::BooleanSupport,
            Semiring::Nat | Semiring::FreeIdempotent { .. } => EqStrategy::Formal,
            Semiring::Interval => EqStrategy::IntervalDominance,
            Semiring::Finite(_) => EqStrategy::Exhaustive,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            Semiring::Nat => false,
            Semiring::Finite(t) => t.is_idempotent(),
            _ => true,
        }
    }

    /// All carrier elements, for finite semirings.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        match self {
            Semiring::Boolean => Some(vec![Elem::Bool(false), Elem::Bool(true)]),
            Semiring::Finite(t) => Some((0..t.size()).map(Elem::Table).collect()),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Semiring::Boolean | Semiring::Finite(_))
    }

    pub fn zero(&self) -> Elem {
        match self {
            Semiring::Tropical => Elem::Tropical(Ext::NegInf),
            Semiring::Boolean => Elem::Bool(false),
            Semiring::Nat => Elem::Nat(BigUint::zero()),
            Semiring::Interval => Elem::Interval(Ext::NegInf),
            Semiring::FreeIdempotent { .. } => Elem::FreeIdpt(IdptPoly::zero()),
            Semiring::Finite(t) => Elem::Table(t.zero()),
        }
    }

    pub fn one(&self) -> Elem {
        match self {
            Semiring::Tropical => Elem::Tropical(Ext::zero_value()),
            Semiring::Boolean => Elem::Bool(true),
            Semiring::Nat => Elem::Nat(BigUint::one()),
            Semiring::Interval => Elem::Interval(Ext::zero_value()),
            Semiring::FreeIdempotent { generators } => Elem::FreeIdpt(IdptPoly::one(*generators)),
            Semiring::Finite(t) => Elem::Table(t.one()),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn contains(&self, a: &Elem) -> bool {
        match (self, a) {
            (Semiring::Tropical, Elem::Tropical(_))
            | (Semiring::Boolean, Elem::Bool(_))
            | (Semiring::Nat, Elem::Nat(_)) => true,
            (Semiring::Interval, Elem::Interval(e)) => ext::in_unit_interval(e),
            (Semiring::FreeIdempotent { generators }, Elem::FreeIdpt(p)) => p.arity_ok(*generators),
            (Semiring::Finite(t), Elem::Table(i)) => *i < t.size(),
            _ => false,
        }
    }

    pub fn check(&self, a: &Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                semiring: self.name(),
                elem: format!("{a:?}"),
            })
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn add_unchecked(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Semiring::Tropical, Elem::Tropical(x), Elem::Tropical(y)) => Elem::Tropical(x.max(y)),
            (Semiring::Boolean, Elem::Bool(x), Elem::Bool(y)) => Elem::Bool(*x || *y),
            (Semiring::Nat, Elem::Nat(x), Elem::Nat(y)) => Elem::Nat(x + y),
            (Semiring::Interval, Elem::Interval(x), Elem::Interval(y)) => Elem::Interval(x.max(y)),
            (Semiring::FreeIdempotent { .. }, Elem::FreeIdpt(x), Elem::FreeIdpt(y)) => {
                Elem::FreeIdpt(x.union(y))
            }
            (Semiring::Finite(t), Elem::Table(x), Elem::Table(y)) => Elem::Table(t.add(*x, *y)),
            _ => panic!("carrier mismatch in {}: {a:?} + {b:?}", self.name()),
        }
    }

    pub(crate) fn mul_unchecked(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Semiring::Tropical, Elem::Tropical(x), Elem::Tropical(y)) => Elem::Tropical(x.plus(y)),
            (Semiring::Boolean, Elem::Bool(x), Elem::Bool(y)) => Elem::Bool(*x && *y),
            (Semiring::Nat, Elem::Nat(x), Elem::Nat(y)) => Elem::Nat(x * y),
            (Semiring::Interval, Elem::Interval(x), Elem::Interval(y)) => {
                Elem::Interval(interval_mul(x, y))
            }
            (Semiring::FreeIdempotent { .. }, Elem::FreeIdpt(x), Elem::FreeIdpt(y)) => {
                Elem::FreeIdpt(x.product(y))
            }
            (Semiring::Finite(t), Elem::Table(x), Elem::Table(y)) => Elem::Table(t.mul(*x, *y)),
            _ => panic!("carrier mismatch in {}: {a:?} * {b:?}", self.name()),
        }
    }

    pub(crate) fn pow_unchecked(&self, a: &Elem, e: u64) -> Elem {
        match (self, a) {
            (Semiring::Tropical, Elem::Tropical(x)) => Elem::Tropical(x.times_nat(e)),
            (Semiring::Finite(t), Elem::Table(x)) => Elem::Table(t.pow(*x, e)),
            (Semiring::Nat, Elem::Nat(x)) => Elem::Nat(x.pow(e as u32)),
            (Semiring::Interval, Elem::Interval(x)) => {
                if e == 0 {
                    return self.one();
                }
                let capped = match x.times_nat(e) {
                    Ext::Finite(q) if q > BigRational::one() => Ext::int(1),
                    other => other,
                };
                Elem::Interval(capped)
            }
            _ => {
                let mut base = a.clone();
                let mut acc = self.one();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul_unchecked(&acc, &base);
                    }
                    e >>= 1;
                    if e > 0 {
                        base = self.mul_unchecked(&base, &base);
                    }
                }
                acc
            }
        }
    }

    pub fn pow(&self, a: &Elem, e: u64) -> Result<Elem> {
        self.check(a)?;
        Ok(self.pow_unchecked(a, e))
    }

    /// The k-fold sum 1 + 1 + ... + 1 (zero for k = 0).
    pub fn nat(&self, k: u128) -> Elem {
        if k == 0 {
            return self.zero();
        }
        match self {
            Semiring::Nat => Elem::Nat(BigUint::from(k)),
            Semiring::Finite(t) => Elem::Table(t.nat(k)),
            _ => self.one(),
        }
    }

    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        let t = text.trim();
        let bad = || Error::BadElement {
            semiring: self.name(),
            text: t.to_string(),
        };
        let e = match self {
            Semiring::Tropical => Elem::Tropical(Ext::parse(t).map_err(|_| bad())?),
            Semiring::Interval => Elem::Interval(Ext::parse(t).map_err(|_| bad())?),
            Semiring::Boolean => match t {
                "0" | "false" => Elem::Bool(false),
                "1" | "true" => Elem::Bool(true),
                _ => return Err(bad()),
            },
            Semiring::Nat => Elem::Nat(t.parse().map_err(|_| bad())?),
            Semiring::FreeIdempotent { generators } => {
                Elem::FreeIdpt(IdptPoly::parse(t, *generators).map_err(|_| bad())?)
            }
            Semiring::Finite(table) => Elem::Table(table.index_of(t).ok_or_else(bad)?),
        };
        self.check(&e).map_err(|_| bad())?;
        Ok(e)
    }

    /// Renders an element; the inverse of [`Semiring::parse_elem`].
    pub fn fmt_elem(&self, a: &Elem) -> String {
        match (self, a) {
            (Semiring::Finite(t), Elem::Table(i)) if *i < t.size() => t.element_name(*i).to_string(),
            _ => a.to_string(),
        }
    }

    /// A random carrier element biased towards zero, one and small values.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        let special = rng.random_range(0..8u32);
        if special == 0 {
            return self.zero();
        }
        if special == 1 {
            return self.one();
        }
        match self {
            Semiring::Tropical => {
                let num = rng.random_range(-6i64..=6);
                let den = rng.random_range(1i64..=3);
                Elem::Tropical(Ext::ratio(num, den))
            }
            Semiring::Boolean => Elem::Bool(rng.random()),
            Semiring::Nat => Elem::Nat(BigUint::from(rng.random_range(0u32..=5))),
            Semiring::Interval => {
                let num = rng.random_range(0i64..=6);
                Elem::Interval(Ext::ratio(num, 6))
            }
            Semiring::FreeIdempotent { generators } => {
                let k = *generators;
                let count = rng.random_range(1..=2);
                let monos = (0..count)
                    .map(|_| (0..k).map(|_| rng.random_range(0u64..=2)).collect::<Vec<_>>());
                Elem::FreeIdpt(IdptPoly::from_monomials(monos))
            }
            Semiring::Finite(t) => Elem::Table(rng.random_range(0..t.size())),
        }
    }

    /// Coefficients of rational-valued semirings are parenthesised when printed
    /// next to a monomial.
    pub(crate) fn rational_valued(&self) -> bool {
        matches!(self, Semiring::Tropical | Semiring::Interval)
    }

    /// An element falsifying `A^i = A^j` for the given pair, for semirings
    /// where such a family is known to exist for every pair `i < j`.
    pub fn torsion_falsifier(&self, _i: u32, j: u32) -> Option<Elem> {
        match self {
            // A^i = i·1 differs from j·1
            Semiring::Tropical => Some(Elem::Tropical(Ext::int(1))),
            // 2^i < 2^j
            Semiring::Nat => Some(Elem::Nat(BigUint::from(2u32))),
            // min(i/j, 1) = i/j < 1 = min(j/j, 1)
            Semiring::Interval => Some(Elem::Interval(Ext::ratio(1, j as i64))),
            // x1^i and x1^j are different monomials
            Semiring::FreeIdempotent { generators } => {
                Some(Elem::FreeIdpt(IdptPoly::generator_power(*generators, 0, 1)))
            }
            Semiring::Boolean | Semiring::Finite(_) => None,
        }
    }
}

fn interval_mul(x: &Ext, y: &Ext) -> Ext {
    match x.plus(y) {
        Ext::Finite(q) if q > BigRational::one() => Ext::Finite(BigRational::one()),
        other => other,
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Tropical(e) | Elem::Interval(e) => write!(f, "{e}"),
            Elem::Bool(b) => f.write_str(if *b { "1" } else { "0" }),
            Elem::Nat(n) => write!(f, "{n}"),
            Elem::Table(i) => write!(f, "#{i}"),
            Elem::FreeIdpt(p) => write!(f, "{p}"),
        }
    }
}

impl Elem {
    pub fn trop(v: i64) -> Elem {
        Elem::Tropical(Ext::int(v))
    }

    pub fn trop_ratio(num: i64, den: i64) -> Elem {
        Elem::Tropical(Ext::ratio(num, den))
    }

    pub fn neg_inf() -> Elem {
        Elem::Tropical(Ext::NegInf)
    }

    pub fn nat(v: u64) -> Elem {
        Elem::Nat(BigUint::from(v))
    }

    pub fn interval(num: i64, den: i64) -> Elem {
        Elem::Interval(Ext::ratio(num, den))
    }

    /// The finite rational carried by tropical/interval values.
    pub fn rational(&self) -> Option<&BigRational> {
        match self {
            Elem::Tropical(e) | Elem::Interval(e) => e.finite(),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn all_semirings() -> Vec<Semiring> {
        vec![
            Semiring::Tropical,
            Semiring::Boolean,
            Semiring::Nat,
            Semiring::Interval,
            Semiring::parse("freeidpt:2").unwrap(),
            Semiring::zmod(2).unwrap(),
            Semiring::zmod(6).unwrap(),
        ]
    }

    #[test]
    fn scalar_examples() {
        let t = Semiring::Tropical;
        assert_eq!(t.add(&Elem::trop(2), &Elem::trop(3)).unwrap(), Elem::trop(3));
        assert_eq!(t.add(&Elem::neg_inf(), &Elem::trop(5)).unwrap(), Elem::trop(5));
        assert_eq!(t.mul(&Elem::trop(2), &Elem::trop(3)).unwrap(), Elem::trop(5));
        let i = Semiring::Interval;
        assert_eq!(
            i.add(&Elem::interval(1, 2), &Elem::interval(1, 3)).unwrap(),
            Elem::interval(1, 2)
        );
        assert_eq!(
            i.mul(&Elem::interval(7, 10), &Elem::interval(6, 10)).unwrap(),
            Elem::interval(1, 1)
        );
        let b = Semiring::Boolean;
        assert_eq!(b.mul(&Elem::Bool(true), &Elem::Bool(false)).unwrap(), Elem::Bool(false));
    }

    #[test]
    fn nat_examples() {
        assert_eq!(Semiring::Tropical.nat(3), Elem::trop(0));
        assert_eq!(Semiring::Boolean.nat(2), Elem::Bool(true));
        let z2 = Semiring::zmod(2).unwrap();
        assert_eq!(z2.nat(2), z2.zero());
        assert_eq!(Semiring::Nat.nat(0), Semiring::Nat.zero());
    }

    #[test]
    fn carrier_mismatch_is_an_error() {
        let t = Semiring::Tropical;
        assert!(matches!(
            t.add(&Elem::Bool(true), &Elem::trop(1)),
            Err(Error::CarrierMismatch { .. })
        ));
        assert!(Semiring::Interval.check(&Elem::interval(3, 2)).is_err());
        assert!(Semiring::zmod(3).unwrap().check(&Elem::Table(3)).is_err());
    }

    #[test]
    fn selectors() {
        for s in ["tropical", "boolean", "nat", "interval", "zmod:3", "freeidpt:2"] {
            assert_eq!(Semiring::parse(s).unwrap().name(), s);
        }
        for s in ["zmod:1", "freeidpt:0", "reals", "zmod:x"] {
            assert!(Semiring::parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn parse_and_print_elements() {
        for s in all_semirings() {
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for _ in 0..50 {
                let a = s.sample(&mut rng);
                assert!(s.contains(&a));
                assert_eq!(s.parse_elem(&s.fmt_elem(&a)).unwrap(), a);
            }
        }
    }

    #[test]
    fn semiring_laws_sampled() {
        for s in all_semirings() {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            let samples = if s.is_finite() { 200 } else { 10_000 };
            for _ in 0..samples {
                let (a, b, c) = (s.sample(&mut rng), s.sample(&mut rng), s.sample(&mut rng));
                let add = |x: &Elem, y: &Elem| s.add(x, y).unwrap();
                let mul = |x: &Elem, y: &Elem| s.mul(x, y).unwrap();
                assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)), "{s}");
                assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)), "{s}");
                assert_eq!(add(&a, &b), add(&b, &a), "{s}");
                assert_eq!(mul(&a, &b), mul(&b, &a), "{s}");
                assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)), "{s}");
                assert_eq!(mul(&a, &s.zero()), s.zero(), "{s}");
                assert_eq!(mul(&a, &s.one()), a, "{s}");
                assert_eq!(add(&a, &s.zero()), a, "{s}");
                if s.is_idempotent() {
                    assert_eq!(add(&a, &a), a, "{s}");
                }
                let e = rng.random_range(0..6u64);
                let naive = (0..e).fold(s.one(), |acc, _| mul(&acc, &a));
                assert_eq!(s.pow(&a, e).unwrap(), naive, "{s}");
            }
            assert_ne!(s.zero(), s.one());
        }
    }

    #[test]
    fn finite_laws_exhaustive() {
        for s in [Semiring::Boolean, Semiring::zmod(2).unwrap(), Semiring::zmod(4).unwrap()] {
            let els = s.elements().unwrap();
            for a in &els {
                for b in &els {
                    for c in &els {
                        let l = s.mul(a, &s.add(b, c).unwrap()).unwrap();
                        let r = s.add(&s.mul(a, b).unwrap(), &s.mul(a, c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn nat_is_additive_morphism() {
        for s in all_semirings() {
            for i in 0..12u128 {
                for j in 0..12u128 {
                    assert_eq!(s.nat(i + j), s.add(&s.nat(i), &s.nat(j)).unwrap(), "{s}");
                }
            }
        }
    }
}
