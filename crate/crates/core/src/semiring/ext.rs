use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A rational number or `-inf`. `NegInf` sorts below every finite value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    NegInf,
    Finite(BigRational),
}

impl Ext {
    pub fn int(v: i64) -> Self {
        Ext::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Ext::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero_value() -> Self {
        Ext::Finite(BigRational::zero())
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Ext::NegInf => None,
            Ext::Finite(q) => Some(q),
        }
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, Ext::NegInf)
    }

    pub fn max(&self, other: &Ext) -> Ext {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Classical addition with `-inf` absorbing.
    pub fn plus(&self, other: &Ext) -> Ext {
        match (self, other) {
            (Ext::Finite(a), Ext::Finite(b)) => Ext::Finite(a + b),
            _ => Ext::NegInf,
        }
    }

    pub fn times_nat(&self, k: u64) -> Ext {
        if k == 0 {
            return Ext::zero_value();
        }
        match self {
            Ext::NegInf => Ext::NegInf,
            Ext::Finite(q) => Ext::Finite(q * BigRational::from_integer(BigInt::from(k))),
        }
    }

    pub fn parse(text: &str) -> Result<Ext> {
        let t = text.trim();
        if t == "-inf" || t == "-∞" {
            return Ok(Ext::NegInf);
        }
        parse_rational(t).map(Ext::Finite)
    }
}

pub(crate) fn parse_rational(t: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("`{t}` is not a rational number"));
    let t = t.trim().trim_start_matches('(').trim_end_matches(')');
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => f.write_str("-inf"),
            Ext::Finite(q) => f.write_str(&fmt_rational(q)),
        }
    }
}

pub(crate) fn in_unit_interval(e: &Ext) -> bool {
    match e {
        Ext::NegInf => true,
        Ext::Finite(q) => !q.is_negative() && q <= &BigRational::one(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_parse() {
        assert!(Ext::NegInf < Ext::int(-1000));
        assert_eq!(Ext::parse("3/6").unwrap(), Ext::ratio(1, 2));
        assert_eq!(Ext::parse("-inf").unwrap(), Ext::NegInf);
        assert!(Ext::parse("1/0").is_err());
        assert_eq!(Ext::ratio(-4, 2).to_string(), "-2");
    }
}
