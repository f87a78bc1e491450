//! Exact scalars over the rationals and prime fields.
//!
//! A [`FieldElement`] always carries its [`FieldSpec`], so mixing elements of
//! different fields is detected rather than silently reduced. Rationals are
//! kept as reduced fractions with a positive denominator, residues as values
//! in `[0, p)`, which makes structural equality coincide with field equality.
//!
//! The text encoding is `num/den` (or `num` when the denominator is 1) for
//! rationals and the decimal residue for prime fields.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest supported prime modulus (exclusive). Keeps primality testing by
/// trial division instant and products inside `u128` headroom.
pub const MAX_PRIME: u64 = 1 << 32;

/// The ground field: the rationals or `GF(p)` for a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
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

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    /// `GF(p)`; fails unless `p` is a prime below [`MAX_PRIME`].
    pub fn prime(p: u64) -> Result<Self> {
        if p < MAX_PRIME && is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        let repr = match self {
            FieldSpec::Rational => Repr::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Repr::Residue(n.rem_euclid(*p as i64) as u64),
        };
        FieldElement { spec: *self, repr }
    }

    /// The image of `num/den` in this field.
    pub fn fraction(&self, num: i64, den: i64) -> Result<FieldElement> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    fn from_bigint(&self, n: &BigInt) -> FieldElement {
        let repr = match self {
            FieldSpec::Rational => Repr::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Repr::Residue(r.try_into().expect("residue fits in u64"))
            }
        };
        FieldElement { spec: *self, repr }
    }

    /// Parses the field-text encoding. Prime fields also accept negative
    /// integers and fractions, reduced modulo `p`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        let err = || Error::Parse(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let value = self.from_bigint(&num);
        match den {
            None => Ok(value),
            Some(d) => {
                let den: BigInt = d.parse().map_err(|_| err())?;
                value.checked_div(&self.from_bigint(&den))
            }
        }
    }

    /// All elements of a prime field, in residue order.
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElement>> {
        let spec = *self;
        match spec {
            FieldSpec::Rational => Err(Error::InfiniteField),
            FieldSpec::Prime(p) => Ok((0..p).map(move |r| FieldElement {
                spec,
                repr: Repr::Residue(r),
            })),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q` and `gf:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        let p = s
            .strip_prefix("gf:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue(u64),
}

/// An exact scalar in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    repr: Repr,
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_zero(),
            Repr::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_one(),
            Repr::Residue(r) => *r == 1,
        }
    }

    /// Sign of a rational (`-1`, `0`, `1`); `None` for residues.
    pub fn signum(&self) -> Option<i8> {
        match &self.repr {
            Repr::Rational(r) if r.is_zero() => Some(0),
            Repr::Rational(r) if r.is_positive() => Some(1),
            Repr::Rational(_) => Some(-1),
            Repr::Residue(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            Repr::Residue(_) => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Residue(r) => Some(*r),
            Repr::Rational(_) => None,
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.spec.to_string(),
                other.spec.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Residue(a), Repr::Residue(b)) => {
                let p = self.spec.characteristic();
                Repr::Residue(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            _ => unreachable!("repr always matches spec"),
        };
        Ok(FieldElement { spec: self.spec, repr })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Residue(a), Repr::Residue(b)) => {
                let p = self.spec.characteristic();
                Repr::Residue(((*a as u128 * *b as u128) % p as u128) as u64)
            }
            _ => unreachable!("repr always matches spec"),
        };
        Ok(FieldElement { spec: self.spec, repr })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rational(r) => Repr::Rational(r.recip()),
            Repr::Residue(a) => Repr::Residue(mod_inverse(*a, self.spec.characteristic())),
        };
        Ok(FieldElement { spec: self.spec, repr })
    }

    fn neg_ref(&self) -> Self {
        let repr = match &self.repr {
            Repr::Rational(r) => Repr::Rational(-r),
            Repr::Residue(0) => Repr::Residue(0),
            Repr::Residue(a) => Repr::Residue(self.spec.characteristic() - a),
        };
        FieldElement { spec: self.spec, repr }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Some `r` with `r^2 = self`, if one exists in the field. Rationals need
    /// a square numerator and denominator; residues use Tonelli-Shanks.
    pub fn sqrt(&self) -> Option<Self> {
        let repr = match &self.repr {
            Repr::Rational(r) => {
                if r.is_negative() {
                    return None;
                }
                let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
                if &(&n * &n) != r.numer() || &(&d * &d) != r.denom() {
                    return None;
                }
                Repr::Rational(BigRational::new(n, d))
            }
            Repr::Residue(a) => Repr::Residue(sqrt_mod(*a, self.spec.characteristic())?),
        };
        Some(FieldElement { spec: self.spec, repr })
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    if a == 0 || p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul(t2, t2);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Some(r)
}

/// Inverse of a nonzero residue by the extended Euclidean algorithm.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i128) as u64
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Residue(a) => write!(f, "{a}"),
        }
    }
}

// Operator impls panic on mixed fields; the checked_* methods report it.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect(concat!("FieldElement::", stringify!($method)))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldSpec::Rational.fraction(n, d).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!((q(1, 2) + q(1, 3)).to_string(), "5/6");
    }

    #[test]
    fn prime_products_and_inverses() {
        let gf5 = FieldSpec::prime(5).unwrap();
        assert_eq!(gf5.from_i64(3) * gf5.from_i64(4), gf5.from_i64(2));
        let gf7 = FieldSpec::prime(7).unwrap();
        assert_eq!(gf7.from_i64(3).inv().unwrap(), gf7.from_i64(5));
    }

    #[test]
    fn characteristic_values() {
        assert_eq!(FieldSpec::Rational.characteristic(), 0);
        assert_eq!(FieldSpec::prime(2).unwrap().characteristic(), 2);
        assert_eq!(FieldSpec::prime(3).unwrap().characteristic(), 3);
    }

    #[test]
    fn enumeration() {
        for p in [2u64, 3, 5] {
            let spec = FieldSpec::prime(p).unwrap();
            let all: Vec<_> = spec.elements().unwrap().collect();
            assert_eq!(all.len() as u64, p);
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
        let residues: Vec<u64> = FieldSpec::prime(3)
            .unwrap()
            .elements()
            .unwrap()
            .map(|e| e.residue().unwrap())
            .collect();
        assert_eq!(residues, vec![0, 1, 2]);
        assert!(matches!(FieldSpec::Rational.elements(), Err(Error::InfiniteField)));
    }

    #[test]
    fn errors() {
        assert_eq!(q(1, 1).checked_div(&q(0, 1)), Err(Error::DivisionByZero));
        assert_eq!(FieldSpec::Rational.fraction(1, 0), Err(Error::DivisionByZero));
        let gf5 = FieldSpec::prime(5).unwrap();
        assert!(matches!(
            q(1, 1).checked_add(&gf5.one()),
            Err(Error::FieldMismatch(..))
        ));
        assert_eq!(gf5.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(FieldSpec::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn square_roots() {
        let q = FieldSpec::Rational;
        assert_eq!(q.fraction(9, 4).unwrap().sqrt().map(|r| r.square()), Some(q.fraction(9, 4).unwrap()));
        assert_eq!(q.from_i64(2).sqrt(), None);
        assert_eq!(q.from_i64(-4).sqrt(), None);
        for p in [2u64, 3, 5, 7, 13, 17, 97, 65537] {
            let f = FieldSpec::prime(p).unwrap();
            let squares: std::collections::HashSet<u64> = (0..p.min(200)).map(|x| x * x % p).collect();
            for a in 0..p.min(200) {
                let e = f.from_i64(a as i64);
                match e.sqrt() {
                    Some(r) => assert_eq!(r.square(), e),
                    None => assert!(p > 200 || !squares.contains(&a)),
                }
            }
        }
    }

    #[test]
    fn text_encoding() {
        assert_eq!(q(-4, 6).to_string(), "-2/3");
        assert_eq!(q(4, 2).to_string(), "2");
        let gf5: FieldSpec = "gf:5".parse().unwrap();
        assert_eq!(gf5.parse_element("-1").unwrap().to_string(), "4");
        assert_eq!(gf5.parse_element("1/2").unwrap().to_string(), "3");
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert!("gf:6".parse::<FieldSpec>().is_err());
        assert!("z".parse::<FieldSpec>().is_err());
        assert!(FieldSpec::Rational.parse_element("1/x").is_err());
    }

    #[test]
    fn characteristic_two_negation() {
        let gf2 = FieldSpec::prime(2).unwrap();
        assert_eq!(-gf2.one(), gf2.one());
        assert_eq!(gf2.from_i64(2), gf2.zero());
    }
}
