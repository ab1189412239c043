//! Exact scalar arithmetic over the rationals and over prime fields.
//!
//! A [`FieldSpec`] names the ground field and acts as the arithmetic context
//! for [`Scalar`] values. Rationals are arbitrary-precision and always kept in
//! lowest terms; prime-field elements are residues in `[0, p)`.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The ground field: the rationals, or `F_p` for a prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

/// A scalar belonging to some [`FieldSpec`].
///
/// The element does not remember which prime field it lives in; all
/// arithmetic goes through the owning [`FieldSpec`], which panics when fed a
/// scalar of the wrong kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Prime(u64),
}

/// Errors raised when constructing field data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    DivisionByZero,
    BadScalarLiteral(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not a prime"),
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::BadScalarLiteral(s) => write!(f, "cannot parse scalar literal {s:?}"),
        }
    }
}

impl core::error::Error for FieldError {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
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

impl FieldSpec {
    /// The field of rational numbers.
    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    /// The prime field `F_p`. Fails when `p` is not prime.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Prime(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(_) => Scalar::Prime(1 % self.char_p()),
        }
    }

    /// The image of the integer `n` in the field.
    pub fn integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let p = *p as i128;
                Scalar::Prime(((n as i128 % p + p) % p) as u64)
            }
        }
    }

    /// The image of the fraction `num/den`. Fails when `den` maps to zero.
    pub fn fraction(&self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            FieldSpec::Rational => Ok(Scalar::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::Prime(_) => {
                let d = self.integer(den);
                if d.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(self.mul(&self.integer(num), &self.inv(&d)))
            }
        }
    }

    fn char_p(&self) -> u64 {
        match self {
            FieldSpec::Rational => panic!("rational field has no characteristic prime"),
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rational, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x + y)
            }
            (FieldSpec::Prime(p), Scalar::Prime(x), Scalar::Prime(y)) => {
                Scalar::Prime(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rational, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldSpec::Prime(p), Scalar::Prime(x)) => Scalar::Prime(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rational, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x * y)
            }
            (FieldSpec::Prime(p), Scalar::Prime(x), Scalar::Prime(y)) => {
                Scalar::Prime(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rational, Scalar::Rational(x)) => {
                assert!(!x.is_zero(), "cannot invert zero");
                Scalar::Rational(x.recip())
            }
            (FieldSpec::Prime(p), Scalar::Prime(x)) => {
                assert!(*x % p != 0, "cannot invert zero");
                Scalar::Prime(mod_pow(*x, p - 2, *p))
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime(p) => write!(f, "prime{p}"),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Prime(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Prime(x) => *x == 1,
        }
    }
}

impl fmt::Display for Scalar {
    /// Renders as a decimal integer or a `num/den` string in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else if x.numer().is_negative() {
                    write!(f, "-{}/{}", x.numer().magnitude(), x.denom())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Prime(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(3).is_ok());
        assert!(FieldSpec::prime(97).is_ok());
        assert_eq!(FieldSpec::prime(1), Err(FieldError::NotPrime(1)));
        assert_eq!(FieldSpec::prime(4), Err(FieldError::NotPrime(4)));
        assert_eq!(FieldSpec::prime(91), Err(FieldError::NotPrime(91)));
    }

    #[test]
    fn rational_arithmetic_stays_reduced() {
        let q = FieldSpec::rational();
        let half = q.fraction(1, 2).unwrap();
        let third = q.fraction(2, 6).unwrap();
        let sum = q.add(&half, &third);
        assert_eq!(sum, q.fraction(5, 6).unwrap());
        assert_eq!(q.mul(&half, &q.integer(2)), q.one());
        assert_eq!(alloc::format!("{}", q.fraction(-3, 6).unwrap()), "-1/2");
        assert_eq!(alloc::format!("{}", q.integer(7)), "7");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.integer(-1), Scalar::Prime(4));
        assert_eq!(f5.add(&f5.integer(3), &f5.integer(4)), Scalar::Prime(2));
        assert_eq!(f5.inv(&f5.integer(2)), Scalar::Prime(3));
        assert_eq!(f5.fraction(1, 2).unwrap(), Scalar::Prime(3));
        assert!(f5.fraction(1, 5).is_err());
        // every nonzero element times its inverse is one
        for x in 1..5 {
            let s = f5.integer(x);
            assert!(f5.mul(&s, &f5.inv(&s)).is_one());
        }
    }
}
