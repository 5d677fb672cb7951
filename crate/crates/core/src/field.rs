//! Scalars: exact rationals and residues modulo a small prime.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// Largest modulus accepted for prime fields. Residue products then fit in a
/// `u32` without widening.
pub const MAX_PRIME: u32 = 1 << 16;

/// Descriptor of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    /// The rationals, with arbitrary-precision numerators and denominators.
    #[serde(rename = "Q")]
    Rational,
    /// The prime field GF(p), `p < 2^16`.
    #[serde(rename = "GF")]
    Prime(u32),
}

impl Field {
    /// GF(p). Fails unless `p` is a prime below [`MAX_PRIME`].
    pub fn prime(p: u32) -> Result<Field, ParseError> {
        if !(2..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(ParseError::new(format!("GF(p) needs a prime p < {MAX_PRIME}, got {p}")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> FieldElem {
        match self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldElem::Modular(Residue::new(v.rem_euclid(p as i64) as u32, p)),
        }
    }

    /// All elements of a finite field in increasing residue order; `None` for ℚ.
    pub fn elements(self) -> Option<Vec<FieldElem>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(|v| FieldElem::Modular(Residue::new(v, p))).collect()),
        }
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p as u64),
        }
    }

    /// Parses a coefficient: `"p/q"` or `"p"` over ℚ, a decimal residue (any
    /// integer, reduced) over GF(p).
    pub fn parse_elem(self, text: &str) -> Result<FieldElem, ParseError> {
        let text = text.trim();
        match self {
            Field::Rational => {
                let value = if let Some((num, den)) = text.split_once('/') {
                    let num = BigInt::from_str(num.trim())
                        .map_err(|_| ParseError::new(format!("bad numerator in {text:?}")))?;
                    let den = BigInt::from_str(den.trim())
                        .map_err(|_| ParseError::new(format!("bad denominator in {text:?}")))?;
                    if den.is_zero() {
                        return Err(ParseError::new(format!("zero denominator in {text:?}")));
                    }
                    BigRational::new(num, den)
                } else {
                    let num = BigInt::from_str(text).map_err(|_| ParseError::new(format!("bad rational {text:?}")))?;
                    BigRational::from_integer(num)
                };
                Ok(FieldElem::Rational(value))
            }
            Field::Prime(p) => {
                let v = BigInt::from_str(text).map_err(|_| ParseError::new(format!("bad residue {text:?}")))?;
                let r = v.mod_floor(&BigInt::from(p));
                let r: u32 = r.try_into().expect("residue below modulus");
                Ok(FieldElem::Modular(Residue::new(r, p)))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue in `[0, modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u32,
    modulus: u32,
}

impl Residue {
    fn new(value: u32, modulus: u32) -> Self {
        debug_assert!(value < modulus);
        Residue { value, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    fn inverse(self) -> Option<Residue> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Some(Residue::new(acc as u32, self.modulus))
    }
}

/// A field scalar. Rationals are kept in lowest terms with a positive
/// denominator (guaranteed by `BigRational`); residues lie in `[0, p)`.
///
/// Arithmetic between elements of different fields is a programming error and
/// panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElem {
    Rational(BigRational),
    Modular(Residue),
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rational,
            FieldElem::Modular(r) => Field::Prime(r.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Modular(r) => r.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_one(),
            FieldElem::Modular(r) => r.value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<FieldElem> {
        match self {
            FieldElem::Rational(q) if q.is_zero() => None,
            FieldElem::Rational(q) => Some(FieldElem::Rational(q.recip())),
            FieldElem::Modular(r) => r.inverse().map(FieldElem::Modular),
        }
    }

    pub fn zero_like(&self) -> FieldElem {
        self.field().zero()
    }

    pub fn one_like(&self) -> FieldElem {
        self.field().one()
    }
}

fn mixed(a: &FieldElem, b: &FieldElem) -> ! {
    panic!("arithmetic between {} and {}", a.field(), b.field())
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (FieldElem::Modular(a), FieldElem::Modular(b)) if a.modulus == b.modulus => {
                FieldElem::Modular(Residue::new((a.value + b.value) % a.modulus, a.modulus))
            }
            _ => mixed(self, rhs),
        }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a - b),
            (FieldElem::Modular(a), FieldElem::Modular(b)) if a.modulus == b.modulus => {
                FieldElem::Modular(Residue::new((a.value + a.modulus - b.value) % a.modulus, a.modulus))
            }
            _ => mixed(self, rhs),
        }
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (FieldElem::Modular(a), FieldElem::Modular(b)) if a.modulus == b.modulus => {
                FieldElem::Modular(Residue::new((a.value * b.value) % a.modulus, a.modulus))
            }
            _ => mixed(self, rhs),
        }
    }
}

impl Div for &FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &FieldElem) -> FieldElem {
        let inv = rhs.inverse().expect("division by zero field element");
        self * &inv
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Modular(a) => FieldElem::Modular(Residue::new((a.modulus - a.value) % a.modulus, a.modulus)),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            FieldElem::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            FieldElem::Modular(r) => write!(f, "{}", r.value),
        }
    }
}

impl FieldElem {
    /// True when the printed form starts with a minus sign.
    pub(crate) fn is_negative_rational(&self) -> bool {
        matches!(self, FieldElem::Rational(q) if q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_wrap() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(&a + &b, f.from_i64(2));
        assert_eq!(&a - &b, f.from_i64(4));
        assert_eq!(&a * &b, f.from_i64(2));
        assert_eq!(&a / &b, f.from_i64(2));
        assert_eq!(-&a, f.from_i64(2));
        assert_eq!(f.from_i64(-1), f.from_i64(4));
    }

    #[test]
    fn every_nonzero_residue_inverts() {
        let f = Field::prime(7).unwrap();
        for e in f.elements().unwrap().into_iter().skip(1) {
            assert!((&e * &e.inverse().unwrap()).is_one());
        }
        assert!(f.zero().inverse().is_none());
    }

    #[test]
    fn rejects_composite_and_large_moduli() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(65537).is_err());
        assert!(Field::prime(65521).is_ok());
    }

    #[test]
    fn rational_text() {
        let q = Field::Rational;
        assert_eq!(q.parse_elem("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse_elem("-2/-4").unwrap().to_string(), "1/2");
        assert_eq!(q.parse_elem(" 7 ").unwrap().to_string(), "7");
        assert!(q.parse_elem("1/0").is_err());
        assert!(q.parse_elem("x").is_err());
        let f = Field::prime(3).unwrap();
        assert_eq!(f.parse_elem("-1").unwrap().to_string(), "2");
    }

    #[test]
    #[should_panic(expected = "arithmetic between")]
    fn mixing_fields_panics() {
        let _ = &Field::Rational.one() + &Field::Prime(2).one();
    }
}
