//! Runtime coefficient rings: the integers, the rationals and prime fields.
//!
//! Every scalar is stored as a [`BigRational`]. Over ℤ and 𝔽_p the value is
//! always an integer; over 𝔽_p it is kept reduced into `0..p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::Error;

pub type Scalar = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl From<Ring> for String {
    fn from(r: Ring) -> String {
        r.to_string()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "z"),
            Ring::Rationals => write!(f, "q"),
            Ring::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "z" | "zz" | "int" => Ok(Ring::Integers),
            "q" | "qq" | "rat" => Ok(Ring::Rationals),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .or_else(|| other.strip_prefix("f"))
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Ring(format!("unknown ring `{s}`")))?;
                if !is_prime(p) {
                    return Err(Error::Ring(format!("{p} is not prime")));
                }
                Ok(Ring::PrimeField(p))
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn int(i: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(i))
}

impl Ring {
    pub fn is_field(&self) -> bool {
        !matches!(self, Ring::Integers)
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_int(&self, i: i64) -> Scalar {
        self.reduce(&int(i))
    }

    /// Canonical representative. Panics on a non-integer over ℤ, or a
    /// denominator divisible by p over 𝔽_p: both are programming errors.
    pub fn reduce(&self, x: &Scalar) -> Scalar {
        match self {
            Ring::Rationals => x.clone(),
            Ring::Integers => {
                assert!(x.is_integer(), "non-integer {x} over the integers");
                x.clone()
            }
            Ring::PrimeField(p) => {
                let p = BigInt::from(*p);
                let num = x.numer().mod_floor(&p);
                let den = x.denom().mod_floor(&p);
                assert!(!den.is_zero(), "denominator {} vanishes mod {p}", x.denom());
                let inv = mod_inverse(&den, &p);
                BigRational::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(&(a + b))
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(&(a - b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(&(a * b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(&(-a))
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        match self {
            Ring::Integers => a.abs().is_one(),
            _ => !self.reduce(a).is_zero(),
        }
    }

    pub fn inverse(&self, a: &Scalar) -> Option<Scalar> {
        if !self.is_unit(a) {
            return None;
        }
        match self {
            Ring::Integers => Some(a.clone()),
            Ring::Rationals => Some(a.recip()),
            Ring::PrimeField(p) => {
                let p = BigInt::from(*p);
                let v = self.reduce(a).to_integer();
                Some(BigRational::from_integer(mod_inverse(&v, &p)))
            }
        }
    }

    /// Euclidean division `a = q b + r` with `r` smaller than `b`.
    pub fn div_rem(&self, a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        assert!(!b.is_zero(), "division by zero");
        match self {
            Ring::Integers => {
                let (q, r) = a.to_integer().div_mod_floor(&b.to_integer());
                (BigRational::from_integer(q), BigRational::from_integer(r))
            }
            _ => {
                let inv = self.inverse(b).expect("nonzero field element");
                (self.mul(a, &inv), Scalar::zero())
            }
        }
    }

    /// Euclidean size used to pick pivots.
    pub fn size(&self, a: &Scalar) -> BigInt {
        match self {
            Ring::Integers => a.to_integer().abs(),
            _ => {
                if a.is_zero() {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
        }
    }

    pub fn divides(&self, a: &Scalar, b: &Scalar) -> bool {
        if a.is_zero() {
            return b.is_zero();
        }
        self.div_rem(b, a).1.is_zero()
    }

    /// The unit `u` with `u·a` the preferred associate (positive over ℤ, one over fields).
    pub fn normalizing_unit(&self, a: &Scalar) -> Scalar {
        match self {
            Ring::Integers => {
                if a.is_negative() {
                    -Scalar::one()
                } else {
                    Scalar::one()
                }
            }
            _ => {
                if a.is_zero() {
                    Scalar::one()
                } else {
                    self.inverse(a).expect("nonzero field element")
                }
            }
        }
    }

    /// Representative of `a` modulo the ideal `(d)`.
    pub fn rem(&self, a: &Scalar, d: &Scalar) -> Scalar {
        if d.is_zero() {
            return a.clone();
        }
        self.div_rem(a, d).1
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let g = a.extended_gcd(p);
    assert!(g.gcd.is_one(), "{a} not invertible mod {p}");
    g.x.mod_floor(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rings() {
        assert_eq!("z".parse::<Ring>().unwrap(), Ring::Integers);
        assert_eq!("q".parse::<Ring>().unwrap(), Ring::Rationals);
        assert_eq!("fp:7".parse::<Ring>().unwrap(), Ring::PrimeField(7));
        assert!("fp:6".parse::<Ring>().is_err());
        assert!("w".parse::<Ring>().is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Ring::PrimeField(5);
        assert_eq!(f.from_int(-1), int(4));
        assert_eq!(f.mul(&int(3), &int(4)), int(2));
        assert_eq!(f.inverse(&int(2)).unwrap(), int(3));
        assert_eq!(f.reduce(&BigRational::new(1.into(), 2.into())), int(3));
    }

    #[test]
    fn integer_division_and_units() {
        let z = Ring::Integers;
        assert_eq!(z.div_rem(&int(7), &int(3)), (int(2), int(1)));
        assert_eq!(z.div_rem(&int(-7), &int(3)), (int(-3), int(2)));
        assert!(z.is_unit(&int(-1)));
        assert!(!z.is_unit(&int(2)));
        assert_eq!(z.normalizing_unit(&int(-4)), int(-1));
    }
}
