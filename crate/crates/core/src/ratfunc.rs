//! Reduced rational functions in `s`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::ArithError;
use crate::field::Field;
use crate::poly::{poly_gcd, Poly};

/// `num / den` in lowest terms with a monic denominator. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduces `num / den`. Fails on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, ArithError> {
        let field = den.field().ok_or(ArithError::ZeroDenominator)?;
        if num.is_zero() {
            return Ok(RatFunc::zero(field));
        }
        let g = poly_gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.leading().expect("nonzero denominator").clone();
        let inv = lc.inverse().expect("nonzero leading coefficient");
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn zero(field: Field) -> RatFunc {
        RatFunc { num: Poly::zero(), den: Poly::one(field) }
    }

    pub fn one(field: Field) -> RatFunc {
        RatFunc::from_poly(Poly::one(field), field)
    }

    /// A polynomial viewed as `p / 1`. The field is needed for zero.
    pub fn from_poly(p: Poly, field: Field) -> RatFunc {
        RatFunc { num: p, den: Poly::one(field) }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> Field {
        self.den.field().expect("denominator is nonzero")
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Result<RatFunc, ArithError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// `deg num - deg den`; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.num.deg() - self.den.deg())
    }

    /// Order of the zero at `s = 0` (negative for a pole); `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        let vn = self.num.valuation()? as i64;
        let vd = self.den.valuation().expect("nonzero denominator") as i64;
        Some(vn - vd)
    }

    /// `f(1/s)`, reduced.
    pub fn substitute_inverse(&self) -> RatFunc {
        if self.is_zero() {
            return self.clone();
        }
        let a = self.num.deg() as usize;
        let b = self.den.deg() as usize;
        // num(1/s) / den(1/s) = rev_a(num) s^b / (rev_b(den) s^a)
        let top = self.num.reverse(a).shift(b);
        let bottom = self.den.reverse(b).shift(a);
        RatFunc::new(top, bottom).expect("reversed denominator is nonzero")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("product of denominators is nonzero")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("product of denominators is nonzero")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Poly {
        Poly::from_i64s(Field::Rational, c)
    }

    #[test]
    fn reduction_examples() {
        let r = RatFunc::new(q(&[0, 0, 2]), q(&[0, 2])).unwrap();
        assert_eq!((r.num(), r.den()), (&q(&[0, 1]), &q(&[1])));
        let z = RatFunc::new(Poly::zero(), q(&[0, 0, 0, 1])).unwrap();
        assert_eq!(z, RatFunc::zero(Field::Rational));
        let one = RatFunc::new(q(&[1, 1]), q(&[1, 1])).unwrap();
        assert_eq!(one, RatFunc::one(Field::Rational));
        assert_eq!(RatFunc::new(q(&[1]), Poly::zero()), Err(ArithError::ZeroDenominator));
    }

    #[test]
    fn denominator_is_monic() {
        let r = RatFunc::new(q(&[1]), q(&[0, 3])).unwrap();
        assert!(r.den().is_monic());
        assert_eq!(r.num(), &Poly::constant(Field::Rational.parse_elem("1/3").unwrap()));
    }

    #[test]
    fn inverse_substitution() {
        let s = RatFunc::from_poly(q(&[0, 1]), Field::Rational);
        assert_eq!(s.substitute_inverse(), RatFunc::new(q(&[1]), q(&[0, 1])).unwrap());
        let r = RatFunc::new(q(&[1]), q(&[1, 1])).unwrap();
        assert_eq!(r.substitute_inverse(), RatFunc::new(q(&[0, 1]), q(&[1, 1])).unwrap());
        assert_eq!(r.substitute_inverse().substitute_inverse(), r);
    }

    #[test]
    fn valuation_and_degree() {
        let r = RatFunc::new(q(&[0, 0, 1]), q(&[0, 1, 1])).unwrap();
        assert_eq!(r.valuation(), Some(1));
        assert_eq!(r.degree(), Some(0));
    }
}
