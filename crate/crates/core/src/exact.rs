//! Exact scalars: big rationals and quadratic surds `a + b*sqrt(c)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serializer;

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite double.
pub fn from_f64(x: f64) -> Option<Q> {
    Q::from_float(x)
}

/// `"n/d"`, or `"n"` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn ser_q<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(x))
}

/// Parses `"p/q"` or `"p"`. Decimal and exponent forms are refused so that
/// threshold comparisons never see a rounded value.
pub fn parse_q(text: &str) -> Result<Q> {
    let t = text.trim();
    if t.contains(['.', 'e', 'E']) {
        return Err(Error::InvalidInput(format!(
            "`{t}` looks like a float; give an exact fraction such as 3/10"
        )));
    }
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(n)
        .map_err(|_| Error::InvalidInput(format!("cannot parse rational `{t}`")))?;
    let den = BigInt::from_str(d)
        .map_err(|_| Error::InvalidInput(format!("cannot parse rational `{t}`")))?;
    if den.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in `{t}`")));
    }
    Ok(Q::new(num, den))
}

/// Exact square root when `x` is the square of a rational.
pub fn sqrt_exact(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

/// `rat + coeff * sqrt(radicand)` with `radicand >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    pub rat: Q,
    pub coeff: Q,
    pub radicand: Q,
}

impl Surd {
    pub fn rational(v: Q) -> Self {
        Surd { rat: v, coeff: Q::zero(), radicand: Q::zero() }
    }

    pub fn new(rat: Q, coeff: Q, radicand: Q) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::Domain("negative radicand".into()));
        }
        Ok(Surd { rat, coeff, radicand }.normalized())
    }

    fn normalized(self) -> Self {
        if self.coeff.is_zero() || self.radicand.is_zero() {
            return Surd::rational(self.rat);
        }
        match sqrt_exact(&self.radicand) {
            Some(r) => Surd::rational(self.rat + self.coeff * r),
            None => self,
        }
    }

    pub fn as_rational(&self) -> Option<&Q> {
        if self.coeff.is_zero() {
            Some(&self.rat)
        } else {
            None
        }
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let zero = Q::zero();
        let sa = self.rat.cmp(&zero);
        let sb = self.coeff.cmp(&zero);
        if self.radicand.is_zero() || sb == Ordering::Equal {
            return sa;
        }
        if sa == sb || sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: compare a^2 with b^2 c
        let a2 = &self.rat * &self.rat;
        let b2c = &self.coeff * &self.coeff * &self.radicand;
        match a2.cmp(&b2c) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == Ordering::Equal
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.rat) + to_f64(&self.coeff) * to_f64(&self.radicand).sqrt()
    }

    pub fn add_rational(&self, v: &Q) -> Self {
        Surd { rat: &self.rat + v, ..self.clone() }
    }
}

impl From<Q> for Surd {
    fn from(v: Q) -> Self {
        Surd::rational(v)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "{}", fmt_q(&self.rat));
        }
        let mag = self.coeff.abs();
        let root = if mag.is_one() {
            format!("sqrt({})", fmt_q(&self.radicand))
        } else {
            format!("{}*sqrt({})", fmt_q(&mag), fmt_q(&self.radicand))
        };
        if self.rat.is_zero() {
            if self.coeff.is_negative() {
                write!(f, "-{root}")
            } else {
                write!(f, "{root}")
            }
        } else {
            let op = if self.coeff.is_negative() { '-' } else { '+' };
            write!(f, "{} {op} {root}", fmt_q(&self.rat))
        }
    }
}

pub fn ser_surd<S: Serializer>(x: &Surd, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Binomial coefficient, zero when `k > n` or `n < 0`.
pub fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
