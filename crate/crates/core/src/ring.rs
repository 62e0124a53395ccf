//! Exact coefficient rings: the rationals, the integers and prime fields.
//!
//! A [`Scalar`] always knows which ring it lives in. Mixing rings inside one
//! arithmetic expression is a programming error and panics; every public entry
//! point that accepts user data checks rings first and returns
//! [`Error::RingMismatch`] instead.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The three families of coefficient rings supported by the toolkit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKind {
    Rationals,
    Integers,
    PrimeField,
}

/// Descriptor of the coefficient ring `R`.
///
/// `GF(p)` descriptors can only be built through [`ScalarRing::prime_field`],
/// which checks primality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarRing(Repr);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Q,
    Z,
    Fp(u64),
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

impl ScalarRing {
    pub const RATIONALS: ScalarRing = ScalarRing(Repr::Q);
    pub const INTEGERS: ScalarRing = ScalarRing(Repr::Z);

    /// `GF(p)`; `p` must be a prime below `2^32` so that residue products fit a word.
    pub fn prime_field(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(ScalarRing(Repr::Fp(p)))
    }

    pub fn kind(&self) -> RingKind {
        match self.0 {
            Repr::Q => RingKind::Rationals,
            Repr::Z => RingKind::Integers,
            Repr::Fp(_) => RingKind::PrimeField,
        }
    }

    /// The prime `p` for `GF(p)`, `None` otherwise.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Repr::Fp(p) => Some(p),
            _ => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn is_field(&self) -> bool {
        !matches!(self.0, Repr::Z)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(&self, v: BigInt) -> Scalar {
        Scalar(match self.0 {
            Repr::Q => Value::Rat(BigRational::from_integer(v)),
            Repr::Z => Value::Int(v),
            Repr::Fp(p) => Value::Mod(reduce_bigint(&v, p), p),
        })
    }

    /// `num / den` in this ring; `None` when `den` is not invertible.
    pub fn fraction(&self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den).inv()?;
        Some(&self.from_i64(num) * &d)
    }

    /// Parses the exact decimal form used in files: `a` or `a/b` over Q,
    /// `a` over Z, `a` over GF(p) (any integer, reduced modulo p).
    pub fn parse_scalar(&self, literal: &str) -> Result<Scalar> {
        let bad = || Error::ParseScalar {
            ring: *self,
            literal: literal.to_string(),
        };
        let text = literal.trim();
        match self.0 {
            Repr::Q => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num = BigInt::from_str(num).map_err(|_| bad())?;
                let den = BigInt::from_str(den).map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar(Value::Rat(BigRational::new(num, den))))
            }
            Repr::Z | Repr::Fp(_) => {
                let v = BigInt::from_str(text).map_err(|_| bad())?;
                Ok(self.from_bigint(v))
            }
        }
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::Q => f.write_str("Q"),
            Repr::Z => f.write_str("Z"),
            Repr::Fp(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for ScalarRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "Q" | "QQ" | "rationals" => return Ok(ScalarRing::RATIONALS),
            "Z" | "ZZ" | "integers" => return Ok(ScalarRing::INTEGERS),
            _ => {}
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::ParseRing(t.to_string()))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::ParseRing(t.to_string()))?;
        ScalarRing::prime_field(p)
    }
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// An exact element of one of the supported rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Value);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64, u64),
}

impl Scalar {
    pub fn ring(&self) -> ScalarRing {
        match &self.0 {
            Value::Int(_) => ScalarRing::INTEGERS,
            Value::Rat(_) => ScalarRing::RATIONALS,
            Value::Mod(_, p) => ScalarRing(Repr::Fp(*p)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Value::Int(v) => v.is_zero(),
            Value::Rat(v) => v.is_zero(),
            Value::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Value::Int(v) => v.is_one(),
            Value::Rat(v) => v.is_one(),
            Value::Mod(v, _) => *v == 1,
        }
    }

    /// Multiplicative inverse; over Z only the units `±1` invert.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match &self.0 {
            Value::Int(v) => (v.abs().is_one()).then(|| self.clone()),
            Value::Rat(v) => Some(Scalar(Value::Rat(v.recip()))),
            Value::Mod(v, p) => Some(Scalar(Value::Mod(pow_mod(*v, p - 2, *p), *p))),
        }
    }

    /// The integer value for Z-scalars.
    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.0 {
            Value::Int(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Value::Rat(v) => Some(v),
            _ => None,
        }
    }

    /// The residue in `[0, p)` for GF(p)-scalars.
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Value::Mod(v, _) => Some(*v),
            _ => None,
        }
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut acc = self.ring().one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rat(v) => write!(f, "{v}"),
            Value::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

impl From<&Scalar> for String {
    fn from(s: &Scalar) -> String {
        s.to_string()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $int:expr, $rat:expr, $modop:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;

            #[allow(clippy::suspicious_arithmetic_impl)]
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar(match (&self.0, &rhs.0) {
                    (Value::Int(a), Value::Int(b)) => Value::Int($int(a, b)),
                    (Value::Rat(a), Value::Rat(b)) => Value::Rat($rat(a, b)),
                    (Value::Mod(a, p), Value::Mod(b, q)) if p == q => {
                        Value::Mod($modop(*a, *b, *p), *p)
                    }
                    _ => panic!("scalar ring mismatch: {} vs {}", self.ring(), rhs.ring()),
                })
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigInt, b: &BigInt| a + b,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, p: u64| (a + b) % p
);
binop!(
    Sub,
    sub,
    |a: &BigInt, b: &BigInt| a - b,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, p: u64| (a + p - b) % p
);
binop!(
    Mul,
    mul,
    |a: &BigInt, b: &BigInt| a * b,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, p: u64| a * b % p
);

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar(match &self.0 {
            Value::Int(a) => Value::Int(-a),
            Value::Rat(a) => Value::Rat(-a),
            Value::Mod(a, p) => Value::Mod((p - a) % p, *p),
        })
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}
