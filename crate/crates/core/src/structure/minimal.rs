//! Minimal indices by degree-by-degree kernel search.

use crate::field::FieldElem;
use crate::matrix::{constant_rank, PolyMatrix, RatMatrix};
use crate::poly::Degree;

/// Which null space to measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Column minimal indices: `M v = 0`.
    Right,
    /// Row minimal indices: `w^T M = 0`.
    Left,
}

/// Minimal indices of a polynomial matrix, in non-increasing order.
///
/// For `k = 0, 1, ...` the polynomial vectors of degree at most `k` in the
/// right null space form the kernel of a block Toeplitz matrix `T_k`. Its
/// dimension grows by the number of minimal indices not exceeding `k`, so
/// second differences count the indices equal to `k`.
pub fn minimal_indices(p: &PolyMatrix, side: Side) -> Vec<i64> {
    let p = match side {
        Side::Right => p.clone(),
        Side::Left => p.transpose(),
    };
    let n = p.cols();
    let wanted = n - p.rank();
    let Degree::Finite(d) = p.degree() else {
        return vec![0; n];
    };
    let coeffs: Vec<Vec<Vec<FieldElem>>> = (0..=d).map(|k| p.coefficient(k)).collect();
    let mut indices = Vec::with_capacity(wanted);
    let mut prev_dim = 0usize;
    let mut prev_count = 0usize;
    let mut k = 0usize;
    while indices.len() < wanted {
        let dim = kernel_dimension(&p, &coeffs, d, k);
        let count = dim - prev_dim;
        indices.extend(std::iter::repeat_n(k as i64, count - prev_count));
        prev_dim = dim;
        prev_count = count;
        k += 1;
    }
    indices.reverse();
    indices
}

/// Minimal indices of a rational matrix: those of `lcd * R`.
pub fn minimal_indices_rat(r: &RatMatrix, side: Side) -> Vec<i64> {
    let p = r.scale_to_polynomial(&r.lcd()).expect("the lcd clears every denominator");
    minimal_indices(&p, side)
}

/// `dim ker T_k` where `T_k` maps `(v_0, ..., v_k)` to the coefficients of
/// `P(s) (v_0 + v_1 s + ... + v_k s^k)`.
fn kernel_dimension(p: &PolyMatrix, coeffs: &[Vec<Vec<FieldElem>>], d: usize, k: usize) -> usize {
    let (m, n) = (p.rows(), p.cols());
    let zero = p.field().zero();
    let mut t = vec![vec![zero; n * (k + 1)]; m * (k + d + 1)];
    for j in 0..=k {
        for (l, c) in coeffs.iter().enumerate() {
            for (r, row) in c.iter().enumerate() {
                for (col, v) in row.iter().enumerate() {
                    t[(l + j) * m + r][j * n + col] = v.clone();
                }
            }
        }
    }
    n * (k + 1) - constant_rank(&mut t)
}
