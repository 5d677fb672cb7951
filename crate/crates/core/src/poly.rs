//! Univariate polynomials in `s` over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{ArithError, ParseError};
use crate::field::{Field, FieldElem};

/// Degree of a polynomial. The zero polynomial has degree `MinusInfinity`,
/// which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial with coefficients stored low degree first. Trailing zeros are
/// never stored, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: FieldElem) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate `s`.
    pub fn s(field: Field) -> Poly {
        Poly::monomial(field.one(), 1)
    }

    /// `c * s^k`.
    pub fn monomial(c: FieldElem, k: usize) -> Poly {
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        Poly::from_coeffs(coeffs)
    }

    /// Builds from low-degree-first coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        if let Some(first) = coeffs.first() {
            let field = first.field();
            assert!(coeffs.iter().all(|c| c.field() == field), "coefficients from different fields");
        }
        Poly { coeffs }
    }

    /// Convenience constructor from small integers, low degree first.
    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// `(s - root)^k`-free helper: the product of `s - a` over the given roots.
    pub fn from_roots(field: Field, roots: &[i64]) -> Poly {
        roots.iter().fold(Poly::one(field), |acc, &a| &acc * &Poly::from_coeffs(vec![field.from_i64(-a), field.one()]))
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of `s^k` (zero beyond the degree). `None` only for the
    /// zero polynomial, which carries no field.
    pub fn coeff(&self, k: usize) -> Option<FieldElem> {
        let first = self.coeffs.first()?;
        Some(self.coeffs.get(k).cloned().unwrap_or_else(|| first.zero_like()))
    }

    /// The field of the coefficients; `None` for the zero polynomial.
    pub fn field(&self) -> Option<Field> {
        self.coeffs.first().map(FieldElem::field)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as a signed integer. Panics on the zero polynomial; callers use
    /// it only where the polynomial is known to be nonzero.
    pub fn deg(&self) -> i64 {
        self.degree().finite().expect("degree of the zero polynomial is not an integer") as i64
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(FieldElem::is_one)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![self.coeffs[0].zero_like(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `s^grade * p(1/s)`; requires `grade >= deg`.
    pub fn reverse(&self, grade: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        assert!(grade + 1 >= self.coeffs.len(), "reversal grade below degree");
        let zero = self.coeffs[0].zero_like();
        let coeffs = (0..=grade).map(|k| self.coeffs.get(grade - k).cloned().unwrap_or_else(|| zero.clone())).collect();
        Poly::from_coeffs(coeffs)
    }

    /// Multiplicity of `s` as a factor; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &FieldElem) -> FieldElem {
        let mut acc = at.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), ArithError> {
        let lead = divisor.leading().ok_or(ArithError::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let inv = lead.inverse().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let zero = lead.zero_like();
        let mut quot = vec![zero; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let factor = top * &inv;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&factor * dc);
            }
            quot[k] = factor;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// `Some(self / divisor)` when the division is exact.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Whether `self` divides `other`. Every polynomial divides zero; zero
    /// divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.divrem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    pub fn pow(&self, k: usize) -> Poly {
        let field = self.field();
        let mut acc = match field {
            Some(f) => Poly::one(f),
            None => return if k == 0 { panic!("0^0 has no field") } else { Poly::zero() },
        };
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Parses text such as `"s^2 - 1"`, `"3/2*s + 1"`, `"2s"` or `"0"`.
    pub fn parse(field: Field, text: &str) -> Result<Poly, ParseError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseError::new("empty polynomial"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && current.is_empty() {
                if ch == '-' {
                    negative = !negative;
                }
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(ParseError::new(format!("dangling sign in {text:?}")));
        }
        terms.push((negative, current));

        let mut acc = Poly::zero();
        for (negative, term) in terms {
            let (coef_text, power) = match term.find('s') {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let exponent = &term[pos + 1..];
                    let power = if exponent.is_empty() {
                        1
                    } else {
                        exponent
                            .strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| ParseError::new(format!("bad exponent in {term:?}")))?
                    };
                    let coef = term[..pos].trim_end_matches('*');
                    (coef, power)
                }
            };
            let coef = if coef_text.is_empty() { field.one() } else { field.parse_elem(coef_text)? };
            let coef = if negative { -&coef } else { coef };
            acc = &acc + &Poly::monomial(coef, power);
        }
        Ok(acc)
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.divrem(&y).expect("nonzero divisor");
        x = y;
        y = r;
    }
    x.monic()
}

/// Monic least common multiple; zero if either argument is zero.
pub fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = poly_gcd(a, b);
    let q = a.exact_div(&g).expect("gcd divides");
    (&q * b).monic()
}

/// Euclidean division as a free function.
pub fn poly_divrem(a: &Poly, b: &Poly) -> Result<(Poly, Poly), ArithError> {
    a.divrem(b)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = &*c + s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative_rational();
            let magnitude = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = magnitude.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (_, true) => {}
                (_, false) => write!(f, "{magnitude}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "s")?,
                _ => write!(f, "s^{k}")?,
            }
        }
        Ok(())
    }
}

/// Orders nonzero polynomials by degree, the zero polynomial first.
pub fn cmp_degree(a: &Poly, b: &Poly) -> Ordering {
    a.degree().cmp(&b.degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Poly {
        Poly::from_i64s(Field::Rational, c)
    }

    #[test]
    fn gcd_examples() {
        // (s^2 - 1, s^2 - 2s + 1) -> s - 1
        assert_eq!(poly_gcd(&q(&[-1, 0, 1]), &q(&[1, -2, 1])), q(&[-1, 1]));
        assert_eq!(poly_gcd(&Poly::zero(), &q(&[0, 0, 0, 1])), q(&[0, 0, 0, 1]));
        assert_eq!(poly_gcd(&q(&[0, 1]), &q(&[1, 1])), q(&[1]));
        assert!(poly_gcd(&Poly::zero(), &Poly::zero()).is_zero());
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(poly_lcm(&q(&[0, 1]), &q(&[1, 1])), q(&[0, 1, 1]));
        assert_eq!(poly_lcm(&q(&[0, 0, 1]), &q(&[0, 1])), q(&[0, 0, 1]));
        assert_eq!(poly_lcm(&q(&[0, 2]), &q(&[0, 3])), q(&[0, 1]));
        assert!(poly_lcm(&Poly::zero(), &q(&[1, 1])).is_zero());
    }

    #[test]
    fn divrem_examples() {
        assert_eq!(q(&[1, 0, 1]).divrem(&q(&[0, 1])).unwrap(), (q(&[0, 1]), q(&[1])));
        assert_eq!(q(&[0, 1]).divrem(&q(&[0, 0, 1])).unwrap(), (Poly::zero(), q(&[0, 1])));
        assert_eq!(q(&[-1, 0, 1]).divrem(&q(&[-1, 1])).unwrap(), (q(&[1, 1]), Poly::zero()));
        assert_eq!(q(&[1]).divrem(&Poly::zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn zero_degree_is_a_marker() {
        assert_eq!(Poly::zero().degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        assert_eq!(q(&[3]).degree(), Degree::Finite(0));
    }

    #[test]
    fn reversal_and_valuation() {
        assert_eq!(q(&[1, 0, 1]).reverse(2), q(&[1, 0, 1]));
        assert_eq!(q(&[0, 1]).reverse(1), q(&[1]));
        assert_eq!(q(&[0, 1]).reverse(3), q(&[0, 0, 1]));
        assert_eq!(q(&[0, 0, 5, 1]).valuation(), Some(2));
        assert_eq!(Poly::zero().valuation(), None);
    }

    #[test]
    fn display_and_parse() {
        let p = q(&[-1, 0, 1]);
        assert_eq!(p.to_string(), "s^2 - 1");
        assert_eq!(Poly::parse(Field::Rational, "s^2 - 1").unwrap(), p);
        assert_eq!(q(&[1, -2]).to_string(), "-2*s + 1");
        assert_eq!(Poly::parse(Field::Rational, "-2s+1").unwrap(), q(&[1, -2]));
        assert_eq!(Poly::parse(Field::Rational, "3/2*s").unwrap().to_string(), "3/2*s");
        assert_eq!(Poly::parse(Field::Rational, "-s").unwrap(), q(&[0, -1]));
        assert_eq!(Poly::parse(Field::Rational, "0").unwrap(), Poly::zero());
        assert!(Poly::parse(Field::Rational, "s^").is_err());
        assert!(Poly::parse(Field::Rational, "s+").is_err());
        let f = Field::prime(2).unwrap();
        assert_eq!(Poly::parse(f, "s + 1").unwrap(), Poly::from_i64s(f, &[1, 1]));
        assert_eq!(Poly::parse(f, "s - 1").unwrap(), Poly::from_i64s(f, &[1, 1]));
    }

    #[test]
    fn divides_conventions() {
        assert!(q(&[0, 1]).divides(&Poly::zero()));
        assert!(!Poly::zero().divides(&q(&[1])));
        assert!(Poly::zero().divides(&Poly::zero()));
        assert!(q(&[0, 1]).divides(&q(&[0, 0, 3])));
    }
}
