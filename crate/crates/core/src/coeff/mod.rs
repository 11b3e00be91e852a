//! Exact coefficients over ℤ, ℚ and 𝔽p, and the dense linear algebra built on them.

mod matrix;

pub use matrix::{
    column_echelon, kernel_basis, membership, rank, row_canonical, smith_form, ColumnEchelon, Matrix, Smith,
};

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// The coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    Integers,
    Rationals,
    /// 𝔽p; the modulus is checked to be prime by [`RingSpec::prime_field`].
    PrimeField(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl RingSpec {
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(RingSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, RingSpec::Integers)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            RingSpec::PrimeField(p) => p,
            _ => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        Scalar(match self {
            RingSpec::Integers => Repr::Int(v.clone()),
            RingSpec::Rationals => Repr::Rat(BigRational::from_integer(v.clone())),
            RingSpec::PrimeField(p) => Repr::Mod { v: reduce_mod(v, p), p },
        })
    }

    /// `num / den` in this ring, or `None` if it is not an element (non-integral over ℤ,
    /// zero denominator).
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        if den.is_zero() {
            return None;
        }
        match self {
            RingSpec::Integers => {
                let (q, r) = num.div_rem(den);
                r.is_zero().then_some(Scalar(Repr::Int(q)))
            }
            RingSpec::Rationals => Some(Scalar(Repr::Rat(BigRational::new(num.clone(), den.clone())))),
            RingSpec::PrimeField(_) => {
                let d = self.from_bigint(den);
                self.from_bigint(num).checked_div(&d)
            }
        }
    }

    /// Parses a scalar literal: an optionally signed integer, or `a/b`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let bad = || Error::MalformedScalar { text: text.to_string(), pos: 0 };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        self.from_ratio(&num, &den).ok_or_else(bad)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => f.write_str("z"),
            RingSpec::Rationals => f.write_str("q"),
            RingSpec::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "z" | "zz" | "int" | "integers" => Ok(RingSpec::Integers),
            "q" | "qq" | "rat" | "rationals" => Ok(RingSpec::Rationals),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .or_else(|| other.strip_prefix("f"))
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::UnknownRing(s.to_string()))?;
                RingSpec::prime_field(p)
            }
        }
    }
}

fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Int(BigInt),
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

/// An exact element of ℤ, ℚ or 𝔽p.
///
/// Rationals are kept in lowest terms with positive denominator, residues in `0..p`.
/// Arithmetic between scalars of different rings is a programming error and panics;
/// the public entry points of the crate check ring compatibility up front.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn ring(&self) -> RingSpec {
        match &self.0 {
            Repr::Int(_) => RingSpec::Integers,
            Repr::Rat(_) => RingSpec::Rationals,
            Repr::Mod { p, .. } => RingSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Int(v) => v.is_zero(),
            Repr::Rat(v) => v.is_zero(),
            Repr::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Int(v) => v.is_one(),
            Repr::Rat(v) => v.is_one(),
            Repr::Mod { v, .. } => *v == 1,
        }
    }

    /// The integer value, for scalars of ℤ.
    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.0 {
            Repr::Int(v) => Some(v),
            _ => None,
        }
    }

    /// The value as a rational number (residues are lifted to `0..p`).
    pub fn to_rational(&self) -> BigRational {
        match &self.0 {
            Repr::Int(v) => BigRational::from_integer(v.clone()),
            Repr::Rat(v) => v.clone(),
            Repr::Mod { v, .. } => BigRational::from_integer(BigInt::from(*v)),
        }
    }

    /// Multiplicative inverse, if it exists in the ring.
    pub fn inv(&self) -> Option<Scalar> {
        match &self.0 {
            Repr::Int(v) => (v.abs().is_one()).then(|| self.clone()),
            Repr::Rat(v) => (!v.is_zero()).then(|| Scalar(Repr::Rat(v.recip()))),
            Repr::Mod { v, p } => (*v != 0).then(|| Scalar(Repr::Mod { v: pow_mod(*v, p - 2, *p), p: *p })),
        }
    }

    /// `self / other` when the quotient exists in the ring (exact division over ℤ).
    pub fn checked_div(&self, other: &Scalar) -> Option<Scalar> {
        match (&self.0, &other.0) {
            (Repr::Int(a), Repr::Int(b)) => {
                if b.is_zero() {
                    return None;
                }
                let (q, r) = a.div_rem(b);
                r.is_zero().then_some(Scalar(Repr::Int(q)))
            }
            _ => other.inv().map(|i| self * &i),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.ring().one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Sign of an integer or rational scalar; residues report 0 or 1.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Int(v) => v.signum().to_i32().unwrap_or(0),
            Repr::Rat(v) => {
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Repr::Mod { v, .. } => (*v != 0) as i32,
        }
    }

    fn mismatch(&self, other: &Scalar) -> ! {
        panic!("arithmetic between scalars of {} and {}", self.ring(), other.ring())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Int(v) => write!(f, "{v}"),
            Repr::Rat(v) => {
                if v.denom().is_one() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Repr::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Scalar {
    /// Decimal string form used by the JSON interfaces.
    pub fn to_decimal_string(&self) -> String {
        format!("{self}")
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar(match (&self.0, &rhs.0) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a + b),
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod { v: a, p }, Repr::Mod { v: b, p: q }) if p == q => {
                let s = a + b;
                Repr::Mod { v: if s >= *p { s - p } else { s }, p: *p }
            }
            _ => self.mismatch(rhs),
        })
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar(match (&self.0, &rhs.0) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a - b),
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a - b),
            (Repr::Mod { v: a, p }, Repr::Mod { v: b, p: q }) if p == q => {
                Repr::Mod { v: if a >= b { a - b } else { a + p - b }, p: *p }
            }
            _ => self.mismatch(rhs),
        })
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        Scalar(match (&self.0, &rhs.0) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a * b),
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod { v: a, p }, Repr::Mod { v: b, p: q }) if p == q => Repr::Mod { v: mul_mod(*a, *b, *p), p: *p },
            _ => self.mismatch(rhs),
        })
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar(match &self.0 {
            Repr::Int(a) => Repr::Int(-a),
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Mod { v, p } => Repr::Mod { v: if *v == 0 { 0 } else { p - v }, p: *p },
        })
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident $atr:ident $am:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $atr<&'a Scalar> for Scalar {
            fn $am(&mut self, rhs: &'a Scalar) { *self = (&*self).$m(rhs); }
        }
        impl $atr<Scalar> for Scalar {
            fn $am(&mut self, rhs: Scalar) { *self = (&*self).$m(&rhs); }
        }
    )*};
}

owned_ops!(Add add AddAssign add_assign, Sub sub SubAssign sub_assign, Mul mul MulAssign mul_assign);

/// Binomial coefficient `C(n, k)` as an integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
