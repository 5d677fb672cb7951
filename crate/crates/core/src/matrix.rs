//! Dense polynomial and rational matrices.

use std::fmt;

use crate::error::MatrixError;
use crate::field::{Field, FieldElem};
use crate::poly::{poly_lcm, Degree, Poly};
use crate::ratfunc::RatFunc;

/// Dense `rows x cols` matrix over `F[s]`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

fn check_fields<'a>(field: Field, mut fields: impl Iterator<Item = Option<Field>> + 'a) -> Result<(), MatrixError> {
    match fields.find(|f| f.is_some_and(|f| f != field)) {
        Some(Some(other)) => {
            Err(MatrixError::DimensionMismatch(format!("entry over {other} in a matrix over {field}")))
        }
        _ => Ok(()),
    }
}

impl PolyMatrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        check_fields(field, entries.iter().map(Poly::field))?;
        Ok(PolyMatrix { field, rows, cols, entries })
    }

    /// Builds from nested rows. An empty list of rows gives a `0 x 0` matrix.
    pub fn from_rows(field: Field, rows: Vec<Vec<Poly>>) -> Result<Self, MatrixError> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::Shape("rows of different lengths".into()));
        }
        PolyMatrix::new(field, m, n, rows.into_iter().flatten().collect())
    }

    /// Rows of small integer coefficient lists, low degree first.
    pub fn from_i64s(field: Field, rows: &[&[&[i64]]]) -> Result<Self, MatrixError> {
        let rows = rows.iter().map(|r| r.iter().map(|c| Poly::from_i64s(field, c)).collect()).collect();
        PolyMatrix::from_rows(field, rows)
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        PolyMatrix { field, rows, cols, entries: vec![Poly::zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(field));
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        assert!(p.field().is_none_or(|f| f == self.field), "entry from another field");
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Largest entry degree; `MinusInfinity` for the zero matrix.
    pub fn degree(&self) -> Degree {
        self.entries.iter().map(Poly::degree).max().unwrap_or(Degree::MinusInfinity)
    }

    /// Constant matrix of the coefficients of `s^k`.
    pub fn coefficient(&self, k: usize) -> Vec<Vec<FieldElem>> {
        let zero = self.field.zero();
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.coeffs().get(k).cloned().unwrap_or_else(|| zero.clone())).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = PolyMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// `[self; below]`.
    pub fn vstack(&self, below: &PolyMatrix) -> Result<Self, MatrixError> {
        if below.cols != self.cols || below.field != self.field {
            return Err(MatrixError::DimensionMismatch(format!(
                "cannot stack {}x{} over {} below {}x{} over {}",
                below.rows, below.cols, below.field, self.rows, self.cols, self.field
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Ok(PolyMatrix { field: self.field, rows: self.rows + below.rows, cols: self.cols, entries })
    }

    /// Rank over `F(s)` by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Poly>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        bareiss(&mut a)
    }

    /// Rank of `P(at)` over `F`.
    pub fn rank_at(&self, at: &FieldElem) -> usize {
        let mut a: Vec<Vec<FieldElem>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|p| p.eval(at)).collect()).collect();
        constant_rank(&mut a)
    }

    /// Largest evaluated rank over the given points. A lower bound for the
    /// rank over `F(s)`, equal to it unless every point is a root of the
    /// relevant minors.
    pub fn rank_by_evaluation<'a>(&self, points: impl IntoIterator<Item = &'a FieldElem>) -> usize {
        points.into_iter().map(|x| self.rank_at(x)).max().unwrap_or(0)
    }

    /// `t^grade P(1/t)`.
    pub fn reversal(&self, grade: usize) -> Result<Self, MatrixError> {
        if let Degree::Finite(d) = self.degree() {
            if d > grade {
                return Err(MatrixError::GradeBelowDegree { grade: grade as i64, degree: d as i64 });
            }
        }
        let entries = self.entries.iter().map(|p| p.reverse(grade)).collect();
        Ok(PolyMatrix { field: self.field, rows: self.rows, cols: self.cols, entries })
    }

    pub fn to_rat(&self) -> RatMatrix {
        let entries = self.entries.iter().map(|p| RatFunc::from_poly(p.clone(), self.field)).collect();
        RatMatrix { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    /// First Frobenius companion form with respect to `grade`.
    pub fn companion_form(&self, grade: i64) -> Result<Pencil, MatrixError> {
        if grade < 1 {
            return Err(MatrixError::GradeTooSmall(grade));
        }
        if let Degree::Finite(d) = self.degree() {
            if d as i64 > grade {
                return Err(MatrixError::GradeBelowDegree { grade, degree: d as i64 });
            }
        }
        let g = grade as usize;
        let (m, n, f) = (self.rows, self.cols, self.field);
        let mut c = PolyMatrix::zeros(f, m + (g - 1) * n, g * n);
        let s = Poly::s(f);
        // First block row: s P_g + P_{g-1}, P_{g-2}, ..., P_0.
        for i in 0..m {
            for j in 0..n {
                let p = self.get(i, j);
                let lead = Poly::constant(p.coeff(g).unwrap_or_else(|| f.zero()));
                let next = Poly::constant(p.coeff(g - 1).unwrap_or_else(|| f.zero()));
                c.set(i, j, &(&s * &lead) + &next);
                for k in 1..g {
                    let ck = p.coeff(g - 1 - k).unwrap_or_else(|| f.zero());
                    c.set(i, k * n + j, Poly::constant(ck));
                }
            }
        }
        // Block row b: -I at block column b-1, s I at block column b.
        let minus_one = Poly::constant(f.from_i64(-1));
        for b in 1..g {
            for j in 0..n {
                let r = m + (b - 1) * n + j;
                c.set(r, (b - 1) * n + j, minus_one.clone());
                c.set(r, b * n + j, s.clone());
            }
        }
        Ok(Pencil(c))
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, p) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
        }
        write!(f, "]")
    }
}

/// A polynomial matrix whose entries all have degree at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil(PolyMatrix);

impl Pencil {
    pub fn new(m: PolyMatrix) -> Result<Self, MatrixError> {
        if m.degree() > Degree::Finite(1) {
            return Err(MatrixError::Shape("pencil entries must have degree at most 1".into()));
        }
        Ok(Pencil(m))
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> PolyMatrix {
        self.0
    }
}

/// Dense `rows x cols` matrix over `F(s)`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl RatMatrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<RatFunc>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        check_fields(field, entries.iter().map(|e| Some(e.field())))?;
        Ok(RatMatrix { field, rows, cols, entries })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<RatFunc>>) -> Result<Self, MatrixError> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::Shape("rows of different lengths".into()));
        }
        RatMatrix::new(field, m, n, rows.into_iter().flatten().collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn is_polynomial(&self) -> bool {
        self.entries.iter().all(RatFunc::is_polynomial)
    }

    /// The polynomial matrix, if every entry is a polynomial.
    pub fn to_poly(&self) -> Result<PolyMatrix, MatrixError> {
        if !self.is_polynomial() {
            return Err(MatrixError::NotPolynomial);
        }
        let entries = self.entries.iter().map(|e| e.num().clone()).collect();
        PolyMatrix::new(self.field, self.rows, self.cols, entries)
    }

    /// Monic least common denominator of the entries (1 for an empty matrix).
    pub fn lcd(&self) -> Poly {
        self.entries.iter().fold(Poly::one(self.field), |acc, e| poly_lcm(&acc, e.den()))
    }

    /// `psi * R`, where `psi` must be a monic multiple of the lcd.
    pub fn scale_to_polynomial(&self, psi: &Poly) -> Result<PolyMatrix, MatrixError> {
        if !psi.is_monic() {
            return Err(MatrixError::NotMonic);
        }
        let lcd = self.lcd();
        if !lcd.divides(psi) {
            return Err(MatrixError::NotMultipleOfDenominator { lcd: lcd.to_string() });
        }
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let cofactor = psi.exact_div(e.den()).expect("entry denominator divides psi");
                &cofactor * e.num()
            })
            .collect();
        PolyMatrix::new(self.field, self.rows, self.cols, entries)
    }

    /// `R(1/s)`.
    pub fn substitute_inverse(&self) -> Self {
        RatMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(RatFunc::substitute_inverse).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        RatMatrix { field: self.field, rows: self.cols, cols: self.rows, entries }
    }

    pub fn vstack(&self, below: &RatMatrix) -> Result<Self, MatrixError> {
        if below.cols != self.cols || below.field != self.field {
            return Err(MatrixError::DimensionMismatch(format!(
                "cannot stack {}x{} below {}x{}",
                below.rows, below.cols, self.rows, self.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Ok(RatMatrix { field: self.field, rows: self.rows + below.rows, cols: self.cols, entries })
    }

    /// Rank over `F(s)`.
    pub fn rank(&self) -> usize {
        self.scale_to_polynomial(&self.lcd()).expect("lcd clears denominators").rank()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Fraction-free elimination in place; returns the rank.
fn bareiss(a: &mut [Vec<Poly>]) -> usize {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev: Option<Poly> = None;
    let mut rank = 0;
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..m {
            for j in col + 1..n {
                let v = &(&a[rank][col] * &a[i][j]) - &(&a[i][col] * &a[rank][j]);
                a[i][j] = match &prev {
                    Some(d) => v.exact_div(d).expect("Bareiss division is exact"),
                    None => v,
                };
            }
            a[i][col] = Poly::zero();
        }
        prev = Some(a[rank][col].clone());
        rank += 1;
    }
    rank
}

/// Determinant of a square polynomial matrix by fraction-free elimination.
pub fn determinant(rows: &[Vec<Poly>], field: Field) -> Poly {
    let n = rows.len();
    if n == 0 {
        return Poly::one(field);
    }
    let mut a = rows.to_vec();
    let mut prev = Poly::one(field);
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Poly::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    if negate {
        -&prev
    } else {
        prev
    }
}

/// Rank of a constant matrix over `F`, by Gaussian elimination in place.
pub fn constant_rank(a: &mut [Vec<FieldElem>]) -> usize {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].inverse().expect("nonzero pivot");
        for i in rank + 1..m {
            if a[i][col].is_zero() {
                continue;
            }
            let factor = &a[i][col] * &inv;
            for j in col..n {
                let v = &a[i][j] - &(&factor * &a[rank][j]);
                a[i][j] = v;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn pm(rows: &[&[&[i64]]]) -> PolyMatrix {
        PolyMatrix::from_i64s(Q, rows).unwrap()
    }

    fn q(c: &[i64]) -> Poly {
        Poly::from_i64s(Q, c)
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(q(num), q(den)).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(PolyMatrix::identity(Q, 3).rank(), 3);
        assert_eq!(pm(&[&[&[0, 1], &[]]]).rank(), 1);
        assert_eq!(pm(&[&[&[0, 1], &[0, 0, 1]], &[&[1], &[0, 1]]]).rank(), 1);
        assert_eq!(PolyMatrix::zeros(Q, 2, 3).rank(), 0);
    }

    #[test]
    fn determinant_examples() {
        let m = pm(&[&[&[0, 1], &[1]], &[&[1], &[0, 1]]]);
        let rows: Vec<Vec<Poly>> = (0..2).map(|i| m.row(i).to_vec()).collect();
        assert_eq!(determinant(&rows, Q), q(&[-1, 0, 1]));
    }

    #[test]
    fn scaling_examples() {
        let r = RatMatrix::from_rows(Q, vec![vec![rf(&[1], &[0, 1]), rf(&[1], &[1])]]).unwrap();
        assert_eq!(r.scale_to_polynomial(&q(&[0, 1])).unwrap(), pm(&[&[&[1], &[0, 1]]]));
        assert_eq!(r.scale_to_polynomial(&q(&[1])), Err(MatrixError::NotMultipleOfDenominator { lcd: "s".into() }));
        assert_eq!(r.scale_to_polynomial(&q(&[0, 2])), Err(MatrixError::NotMonic));
        let d = RatMatrix::from_rows(
            Q,
            vec![vec![rf(&[0, 1], &[1]), rf(&[], &[1])], vec![rf(&[], &[1]), rf(&[1], &[0, 1])]],
        )
        .unwrap();
        assert_eq!(d.scale_to_polynomial(&q(&[0, 1])).unwrap(), pm(&[&[&[0, 0, 1], &[]], &[&[], &[1]]]));
        let p = pm(&[&[&[1, 1], &[2]]]);
        assert_eq!(p.to_rat().scale_to_polynomial(&q(&[1])).unwrap(), p);
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(pm(&[&[&[0, 1], &[]]]).reversal(1).unwrap(), pm(&[&[&[1], &[]]]));
        assert_eq!(pm(&[&[&[1, 0, 1]]]).reversal(2).unwrap(), pm(&[&[&[1, 0, 1]]]));
        let c = pm(&[&[&[3], &[4]]]);
        assert_eq!(c.reversal(0).unwrap(), c);
        assert!(matches!(pm(&[&[&[0, 0, 1]]]).reversal(1), Err(MatrixError::GradeBelowDegree { .. })));
    }

    #[test]
    fn inverse_substitution_examples() {
        let r = RatMatrix::from_rows(Q, vec![vec![rf(&[0, 1], &[1]), rf(&[1], &[1, 1]), rf(&[5], &[1])]]).unwrap();
        let expected =
            RatMatrix::from_rows(Q, vec![vec![rf(&[1], &[0, 1]), rf(&[0, 1], &[1, 1]), rf(&[5], &[1])]]).unwrap();
        assert_eq!(r.substitute_inverse(), expected);
    }

    #[test]
    fn companion_shapes() {
        let p = pm(&[&[&[0, 1], &[]]]);
        assert_eq!(p.companion_form(1).unwrap().matrix(), &p);
        let c = p.companion_form(2).unwrap();
        assert_eq!((c.matrix().rows(), c.matrix().cols()), (3, 4));
        // [s, 0] at grade 2: P_2 = 0, P_1 = [1, 0], P_0 = 0.
        let expected = pm(&[&[&[1], &[], &[], &[]], &[&[-1], &[], &[0, 1], &[]], &[&[], &[-1], &[], &[0, 1]]]);
        assert_eq!(c.matrix(), &expected);
        assert_eq!(p.companion_form(0), Err(MatrixError::GradeTooSmall(0)));
        assert!(pm(&[&[&[0, 0, 1]]]).companion_form(1).is_err());
    }

    #[test]
    fn transpose_round_trip() {
        let p = pm(&[&[&[0, 1], &[]]]);
        assert_eq!(p.transpose(), pm(&[&[&[0, 1]], &[&[]]]));
        assert_eq!(p.transpose().transpose(), p);
    }
}
