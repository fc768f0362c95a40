//! Ground rings: the integers and the prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The coefficient ring of a complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    Mod(u64),
}

impl Ring {
    pub fn modulus(&self) -> Option<u64> {
        match self {
            Ring::Integers => None,
            Ring::Mod(p) => Some(*p),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Ring::Mod(_))
    }

    /// Reduces an integer to its canonical representative.
    pub fn normalize(&self, x: BigInt) -> BigInt {
        match self {
            Ring::Integers => x,
            Ring::Mod(p) => x.mod_floor(&BigInt::from(*p)),
        }
    }

    pub fn from_i64(&self, x: i64) -> BigInt {
        self.normalize(BigInt::from(x))
    }

    pub fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.normalize(a + b)
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.normalize(a * b)
    }

    pub fn neg(&self, a: &BigInt) -> BigInt {
        self.normalize(-a)
    }

    /// Size used to choose pivots: absolute value over the integers, 1 for any nonzero unit mod p.
    pub fn pivot_size(&self, a: &BigInt) -> BigInt {
        match self {
            Ring::Integers => a.abs(),
            Ring::Mod(_) => BigInt::one(),
        }
    }

    /// Euclidean division `a = q*b + r` with `r` smaller than `b` (zero in a field).
    pub fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        match self {
            Ring::Integers => {
                let (q, r) = a.div_mod_floor(b);
                // Prefer the remainder of least absolute value so pivots shrink quickly.
                let r2 = &r - b;
                if r2.abs() < r.abs() {
                    (q + 1, r2)
                } else {
                    (q, r)
                }
            }
            Ring::Mod(_) => (self.mul(a, &self.inverse(b)), BigInt::zero()),
        }
    }

    /// Multiplicative inverse of a unit.
    pub fn inverse(&self, a: &BigInt) -> BigInt {
        match self {
            Ring::Integers => {
                assert!(a.abs().is_one(), "{a} is not a unit in Z");
                a.clone()
            }
            Ring::Mod(p) => {
                let p = BigInt::from(*p);
                let e = a.extended_gcd(&p);
                assert!(e.gcd.is_one(), "{a} is not invertible mod {p}");
                e.x.mod_floor(&p)
            }
        }
    }

    /// Unit that makes `a` canonical: sign for integers, inverse mod p.
    pub fn canonical_unit(&self, a: &BigInt) -> BigInt {
        match self {
            Ring::Integers => {
                if a.is_negative() {
                    BigInt::from(-1)
                } else {
                    BigInt::one()
                }
            }
            Ring::Mod(_) => self.inverse(a),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Mod(p) => write!(f, "Z/{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "Z" {
            return Ok(Ring::Integers);
        }
        if let Some(p) = s.strip_prefix("Z/") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus in ring {s:?}")))?;
            if !is_prime(p) {
                return Err(Error::Parse(format!("modulus {p} is not prime")));
            }
            return Ok(Ring::Mod(p));
        }
        Err(Error::Parse(format!("unknown ring {s:?}, expected Z or Z/p")))
    }
}

/// A ring element tagged with its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficient {
    pub ring: Ring,
    pub value: BigInt,
}

impl Coefficient {
    pub fn new(ring: Ring, value: BigInt) -> Self {
        Coefficient {
            ring,
            value: ring.normalize(value),
        }
    }
}

/// `(-1)^e` as a machine sign.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rings() {
        assert_eq!("Z".parse::<Ring>().unwrap(), Ring::Integers);
        assert_eq!("Z/7".parse::<Ring>().unwrap(), Ring::Mod(7));
        assert!("Z/6".parse::<Ring>().is_err());
        assert!("Q".parse::<Ring>().is_err());
    }

    #[test]
    fn modular_inverse() {
        let r = Ring::Mod(7);
        for a in 1..7 {
            let a = BigInt::from(a);
            assert_eq!(r.mul(&a, &r.inverse(&a)), BigInt::one());
        }
        assert_eq!(r.from_i64(-1), BigInt::from(6));
    }
}
