//! Exact coefficient rings: Z (arbitrary precision) and Z/m.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Ring elements are canonical `BigInt` representatives: any integer over
/// Z, a residue in `0..m` over Z/m.
pub type RingElem = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    IntegersMod(u64),
}

impl Ring {
    pub fn modulo(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidRing(format!("modulus must be at least 2, got {m}")));
        }
        Ok(Ring::IntegersMod(m))
    }

    pub fn reduce(&self, x: BigInt) -> RingElem {
        match self {
            Ring::Integers => x,
            Ring::IntegersMod(m) => x.mod_floor(&BigInt::from(*m)),
        }
    }

    pub fn zero(&self) -> RingElem {
        BigInt::zero()
    }

    pub fn one(&self) -> RingElem {
        BigInt::one()
    }

    pub fn from_i64(&self, x: i64) -> RingElem {
        self.reduce(BigInt::from(x))
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.reduce(a + b)
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        self.reduce(-a)
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.reduce(a * b)
    }

    pub fn pow(&self, a: &RingElem, k: u32) -> RingElem {
        match self {
            Ring::Integers => num_traits::pow(a.clone(), k as usize),
            Ring::IntegersMod(m) => a.modpow(&BigInt::from(k), &BigInt::from(*m)),
        }
    }

    pub fn is_zero(&self, a: &RingElem) -> bool {
        self.reduce(a.clone()).is_zero()
    }

    /// A sample element: uniform on {−5..5} over Z, uniform residue over Z/m.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> RingElem {
        match self {
            Ring::Integers => BigInt::from(rng.gen_range(-5i64..=5)),
            Ring::IntegersMod(m) => BigInt::from(rng.gen_range(0..*m)),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::IntegersMod(m) => write!(f, "Z/{m}"),
        }
    }
}

/// Accepts `int` or `zmod:<m>`.
impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "int" | "Z" => Ok(Ring::Integers),
            _ => {
                let m = s
                    .strip_prefix("zmod:")
                    .ok_or_else(|| Error::InvalidRing(format!("expected `int` or `zmod:<m>`, got {s:?}")))?;
                let m: u64 = m.parse().map_err(|_| Error::InvalidRing(format!("bad modulus {m:?}")))?;
                Ring::modulo(m)
            }
        }
    }
}
