//! Complete structural data of polynomial and rational matrices.
//!
//! The four families are the invariant rational functions `eta_i / phi_i`,
//! the invariant orders at infinity, and the column and row minimal indices.

mod minimal;
mod smith;

use std::fmt;

pub use minimal::{minimal_indices, minimal_indices_rat, Side};
pub use smith::{
    combinations, determinantal_divisors, orders_at_infinity, smith_form, smith_form_by_divisors, smith_mcmillan,
};

use crate::error::{MatrixError, StructureError};
use crate::field::Field;
use crate::majorization::{ExtInt, IntSeq};
use crate::matrix::{PolyMatrix, RatMatrix};
use crate::poly::{poly_gcd, poly_lcm, Degree, Poly};
use crate::ratfunc::RatFunc;

/// `alpha_i` of a numerator chain: 1 below the chain, 0 above it.
pub fn num_at(chain: &[Poly], i: i64, field: Field) -> Poly {
    if i < 1 {
        Poly::one(field)
    } else {
        chain.get(i as usize - 1).cloned().unwrap_or_else(Poly::zero)
    }
}

/// `phi_i` of a denominator chain: 0 below the chain, 1 above it.
pub fn den_at(chain: &[Poly], i: i64, field: Field) -> Poly {
    if i < 1 {
        Poly::zero()
    } else {
        chain.get(i as usize - 1).cloned().unwrap_or_else(|| Poly::one(field))
    }
}

/// `p_i` of a non-decreasing order sequence: `-inf` below, `+inf` above.
pub fn order_at(orders: &[i64], i: i64) -> ExtInt {
    if i < 1 {
        ExtInt::NegInf
    } else {
        orders.get(i as usize - 1).map_or(ExtInt::PosInf, |&v| ExtInt::Finite(v))
    }
}

/// Checks that `chain` is a chain of monic polynomials, each dividing the
/// next (`increasing`) or the previous one.
pub(crate) fn check_chain(chain: &[Poly], increasing: bool, what: &str) -> Result<(), String> {
    if let Some(p) = chain.iter().find(|p| !p.is_monic()) {
        return Err(format!("{what} entry {p} is not monic"));
    }
    for w in chain.windows(2) {
        let ok = if increasing { w[0].divides(&w[1]) } else { w[1].divides(&w[0]) };
        if !ok {
            return Err(format!("{what} chain breaks between {} and {}", w[0], w[1]));
        }
    }
    Ok(())
}

/// The complete structural data of an `rows x cols` matrix of rank `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructuralData {
    field: Field,
    rows: usize,
    cols: usize,
    eta: Vec<Poly>,
    phi: Vec<Poly>,
    orders: Vec<i64>,
    col_indices: IntSeq,
    row_indices: IntSeq,
}

impl StructuralData {
    /// Validates shapes, chains and orderings. The sum identity is not
    /// required here, so that prescribed targets can be represented too.
    pub fn new(
        field: Field,
        (rows, cols): (usize, usize),
        eta: Vec<Poly>,
        phi: Vec<Poly>,
        orders: Vec<i64>,
        col_indices: Vec<i64>,
        row_indices: Vec<i64>,
    ) -> Result<Self, StructureError> {
        let bad = |msg: String| StructureError::Malformed(msg);
        let r = eta.len();
        if phi.len() != r || orders.len() != r {
            return Err(bad(format!("{r} numerators, {} denominators and {} orders", phi.len(), orders.len())));
        }
        if r > rows.min(cols) {
            return Err(bad(format!("rank {r} exceeds the size {rows}x{cols}")));
        }
        if col_indices.len() != cols - r || row_indices.len() != rows - r {
            return Err(bad(format!(
                "rank {r} of a {rows}x{cols} matrix needs {} column and {} row indices, got {} and {}",
                cols - r,
                rows - r,
                col_indices.len(),
                row_indices.len()
            )));
        }
        if eta.iter().chain(&phi).any(|p| p.field().is_some_and(|f| f != field)) {
            return Err(bad(format!("chain entries must lie over {field}")));
        }
        check_chain(&eta, true, "numerator").map_err(bad)?;
        check_chain(&phi, false, "denominator").map_err(bad)?;
        if let Some((a, b)) = eta.iter().zip(&phi).find(|(a, b)| !poly_gcd(a, b).is_one()) {
            return Err(bad(format!("{a}/{b} is not reduced")));
        }
        if orders.windows(2).any(|w| w[0] > w[1]) {
            return Err(bad(format!("orders {orders:?} are not non-decreasing")));
        }
        if col_indices.iter().chain(&row_indices).any(|&v| v < 0) {
            return Err(bad("minimal indices must be non-negative".into()));
        }
        let col_indices = IntSeq::new(col_indices).map_err(|e| bad(e.to_string()))?;
        let row_indices = IntSeq::new(row_indices).map_err(|e| bad(e.to_string()))?;
        Ok(StructuralData { field, rows, cols, eta, phi, orders, col_indices, row_indices })
    }

    /// Data of a polynomial matrix: every denominator is 1.
    pub fn polynomial(
        field: Field,
        dims: (usize, usize),
        alpha: Vec<Poly>,
        orders: Vec<i64>,
        col_indices: Vec<i64>,
        row_indices: Vec<i64>,
    ) -> Result<Self, StructureError> {
        let phi = vec![Poly::one(field); alpha.len()];
        StructuralData::new(field, dims, alpha, phi, orders, col_indices, row_indices)
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

    pub fn rank(&self) -> usize {
        self.eta.len()
    }

    pub fn eta(&self) -> &[Poly] {
        &self.eta
    }

    pub fn phi(&self) -> &[Poly] {
        &self.phi
    }

    pub fn orders(&self) -> &[i64] {
        &self.orders
    }

    pub fn col_indices(&self) -> &IntSeq {
        &self.col_indices
    }

    pub fn row_indices(&self) -> &IntSeq {
        &self.row_indices
    }

    /// `eta_i` with the numerator boundary conventions.
    pub fn num(&self, i: i64) -> Poly {
        num_at(&self.eta, i, self.field)
    }

    /// `phi_i` with the denominator boundary conventions.
    pub fn den(&self, i: i64) -> Poly {
        den_at(&self.phi, i, self.field)
    }

    pub fn order(&self, i: i64) -> ExtInt {
        order_at(&self.orders, i)
    }

    /// The invariant rational functions `eta_i / phi_i`.
    pub fn factors(&self) -> Vec<RatFunc> {
        self.eta
            .iter()
            .zip(&self.phi)
            .map(|(a, b)| RatFunc::new(a.clone(), b.clone()).expect("denominators are nonzero"))
            .collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.phi.iter().all(Poly::is_one)
    }

    /// `-p_1`, the degree of a polynomial matrix with these data.
    pub fn degree(&self) -> Option<i64> {
        self.orders.first().map(|p| -p)
    }

    /// `sum c + sum u + sum p + sum deg eta - sum deg phi`, which vanishes
    /// for the data of every matrix.
    pub fn sum_identity(&self) -> i64 {
        self.col_indices.sum()
            + self.row_indices.sum()
            + self.orders.iter().sum::<i64>()
            + self.eta.iter().map(Poly::deg).sum::<i64>()
            - self.phi.iter().map(Poly::deg).sum::<i64>()
    }

    /// Data of the transposed matrix.
    pub fn transpose(&self) -> Self {
        StructuralData {
            rows: self.cols,
            cols: self.rows,
            col_indices: self.row_indices.clone(),
            row_indices: self.col_indices.clone(),
            ..self.clone()
        }
    }
}

impl fmt::Display for StructuralData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Poly]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "{}x{} rank {}: eta ({}), phi ({}), orders {:?}, cols {:?}, rows {:?}",
            self.rows,
            self.cols,
            self.rank(),
            join(&self.eta),
            join(&self.phi),
            self.orders,
            self.col_indices.as_slice(),
            self.row_indices.as_slice()
        )
    }
}

/// Extracts all four families of a rational matrix and checks the result.
pub fn complete_structural_data(r: &RatMatrix) -> Result<StructuralData, StructureError> {
    let factors = smith_mcmillan(r);
    let orders = orders_at_infinity(r);
    if orders.len() != factors.len() {
        return Err(StructureError::Inconsistent(format!(
            "{} invariant rational functions but {} orders at infinity",
            factors.len(),
            orders.len()
        )));
    }
    let (eta, phi) = factors.into_iter().map(|f| (f.num().clone(), f.den().clone())).unzip();
    let data = StructuralData::new(
        r.field(),
        (r.rows(), r.cols()),
        eta,
        phi,
        orders,
        minimal_indices_rat(r, Side::Right),
        minimal_indices_rat(r, Side::Left),
    )
    .map_err(|e| StructureError::Inconsistent(e.to_string()))?;
    let sum = data.sum_identity();
    if sum != 0 {
        return Err(StructureError::Inconsistent(format!("structural sum is {sum}, not 0, for {data}")));
    }
    Ok(data)
}

/// [`complete_structural_data`] of a polynomial matrix.
pub fn polynomial_structural_data(p: &PolyMatrix) -> Result<StructuralData, StructureError> {
    let data = complete_structural_data(&p.to_rat())?;
    if let (Some(d), Degree::Finite(deg)) = (data.degree(), p.degree()) {
        if d != deg as i64 {
            return Err(StructureError::Inconsistent(format!("first order {} but degree {deg}", -d)));
        }
    }
    Ok(data)
}

/// Partial multiplicities at infinity of a polynomial matrix of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityView {
    pub degree: i64,
    /// `e_1 <= ... <= e_r`, the multiplicities of `t = 0` in `rev P`.
    pub multiplicities: Vec<i64>,
}

impl InfinityView {
    /// `e_i = p_i + d`.
    pub fn from_orders(orders: &[i64], degree: i64) -> Self {
        InfinityView { degree, multiplicities: orders.iter().map(|p| p + degree).collect() }
    }

    /// The orders `p_i = e_i - d`.
    pub fn orders(&self) -> Vec<i64> {
        self.multiplicities.iter().map(|e| e - self.degree).collect()
    }
}

/// Multiplicities of `t = 0` in the Smith form of `t^d P(1/t)`.
pub fn partial_multiplicities_at_infinity(p: &PolyMatrix) -> Result<InfinityView, MatrixError> {
    let Degree::Finite(d) = p.degree() else {
        return Err(MatrixError::ZeroMatrix);
    };
    let rev = p.reversal(d)?;
    let mut multiplicities: Vec<i64> =
        smith_form(&rev).iter().map(|a| a.valuation().expect("invariant factors are nonzero") as i64).collect();
    multiplicities.sort_unstable();
    Ok(InfinityView { degree: d as i64, multiplicities })
}

/// A homogeneous invariant factor `t^e * t^(deg a) a(s/t)`, kept as the pair
/// `(a, e)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomogeneousFactor {
    pub finite: Poly,
    pub infinity: i64,
}

impl HomogeneousFactor {
    pub fn new(finite: Poly, infinity: i64) -> Self {
        HomogeneousFactor { finite, infinity }
    }

    /// The constant factor `(1, 0)`.
    pub fn one(field: Field) -> Self {
        HomogeneousFactor { finite: Poly::one(field), infinity: 0 }
    }

    pub fn divides(&self, other: &HomogeneousFactor) -> bool {
        self.finite.divides(&other.finite) && self.infinity <= other.infinity
    }

    pub fn lcm(&self, other: &HomogeneousFactor) -> HomogeneousFactor {
        HomogeneousFactor { finite: poly_lcm(&self.finite, &other.finite), infinity: self.infinity.max(other.infinity) }
    }

    /// Total degree of the bivariate form.
    pub fn degree(&self) -> i64 {
        self.finite.deg() + self.infinity
    }
}

/// Pairs `(alpha_i, e_i)` of a nonzero polynomial matrix.
pub fn homogeneous_invariant_factors(p: &PolyMatrix) -> Result<Vec<HomogeneousFactor>, MatrixError> {
    let view = partial_multiplicities_at_infinity(p)?;
    Ok(smith_form(p).into_iter().zip(view.multiplicities).map(|(a, e)| HomogeneousFactor::new(a, e)).collect())
}

/// Homogeneous factors from polynomial data with a chosen grade:
/// `(alpha_i, p_i + grade)`.
pub fn homogeneous_from_data(data: &StructuralData, grade: i64) -> Vec<HomogeneousFactor> {
    data.eta().iter().zip(data.orders()).map(|(a, p)| HomogeneousFactor::new(a.clone(), p + grade)).collect()
}

/// Data of `psi * R` from the data of `R`: factors `psi eta_i / phi_i`,
/// orders shifted by `-deg psi`, minimal indices unchanged.
pub fn scale_data(data: &StructuralData, psi: &Poly) -> Result<StructuralData, StructureError> {
    if !psi.is_monic() {
        return Err(MatrixError::NotMonic.into());
    }
    let phi1 = data.phi().first().cloned().unwrap_or_else(|| Poly::one(data.field()));
    if !phi1.divides(psi) {
        return Err(MatrixError::NotMultipleOfDenominator { lcd: phi1.to_string() }.into());
    }
    let (eta, phi): (Vec<Poly>, Vec<Poly>) = data
        .factors()
        .iter()
        .map(|f| {
            let g = &RatFunc::from_poly(psi.clone(), data.field()) * f;
            (g.num().clone(), g.den().clone())
        })
        .unzip();
    let shift = psi.deg();
    StructuralData::new(
        data.field(),
        (data.rows(), data.cols()),
        eta,
        phi,
        data.orders().iter().map(|p| p - shift).collect(),
        data.col_indices().as_slice().to_vec(),
        data.row_indices().as_slice().to_vec(),
    )
}

/// Data of the companion form `C_{g,P}` from the data of `P`.
pub fn companion_data_map(data: &StructuralData, grade: i64) -> Result<StructuralData, StructureError> {
    if !data.is_polynomial() {
        return Err(MatrixError::NotPolynomial.into());
    }
    if grade < 1 {
        return Err(MatrixError::GradeTooSmall(grade).into());
    }
    if let Some(d) = data.degree() {
        if d > grade {
            return Err(MatrixError::GradeBelowDegree { grade, degree: d }.into());
        }
    }
    let (m, n, f) = (data.rows(), data.cols(), data.field());
    let extra = (grade as usize - 1) * n;
    let alpha = smith::ones(f, extra).into_iter().chain(data.eta().iter().cloned()).collect();
    let orders = std::iter::repeat_n(-1, extra).chain(data.orders().iter().map(|p| grade - 1 + p)).collect();
    let cols = data.col_indices().as_slice().iter().map(|c| c + grade - 1).collect();
    StructuralData::polynomial(
        f,
        (m + extra, grade as usize * n),
        alpha,
        orders,
        cols,
        data.row_indices().as_slice().to_vec(),
    )
}
