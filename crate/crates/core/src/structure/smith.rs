//! Smith and Smith–McMillan forms, and orders at infinity.

use crate::field::Field;
use crate::matrix::{determinant, PolyMatrix, RatMatrix};
use crate::poly::{poly_gcd, Poly};
use crate::ratfunc::RatFunc;

/// Invariant factors `a_1 | ... | a_r` by unimodular row and column
/// operations, pivoting on an entry of least degree.
pub fn smith_form(p: &PolyMatrix) -> Vec<Poly> {
    let (m, n) = (p.rows(), p.cols());
    let mut a: Vec<Vec<Poly>> = (0..m).map(|i| p.row(i).to_vec()).collect();
    let mut factors = Vec::new();
    for t in 0..m.min(n) {
        let Some((i, j)) = least_degree(&a, (t..m).flat_map(|i| (t..n).map(move |j| (i, j)))) else {
            break;
        };
        move_to_pivot(&mut a, t, i, j);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].divrem(&a[t][t]).expect("pivot is nonzero");
                for j in t..n {
                    let v = &a[i][j] - &(&q * &a[t][j]);
                    a[i][j] = v;
                }
                dirty |= !r.is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].divrem(&a[t][t]).expect("pivot is nonzero");
                for row in a.iter_mut().skip(t) {
                    let v = &row[j] - &(&q * &row[t]);
                    row[j] = v;
                }
                dirty |= !r.is_zero();
            }
            if dirty {
                let cells = (t..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                let (i, j) = least_degree(&a, cells).expect("the pivot row or column is nonzero");
                move_to_pivot(&mut a, t, i, j);
                continue;
            }
            // Row and column are clear; the pivot must divide the rest.
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[t][t].divides(&a[i][j])));
            match offender {
                Some(i) => {
                    for j in t..n {
                        let v = &a[t][j] + &a[i][j];
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].monic());
    }
    factors
}

fn least_degree(a: &[Vec<Poly>], cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    cells.filter(|&(i, j)| !a[i][j].is_zero()).min_by_key(|&(i, j)| a[i][j].degree())
}

fn move_to_pivot(a: &mut [Vec<Poly>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    for row in a.iter_mut() {
        row.swap(t, j);
    }
}

/// Determinantal divisors `D_1, ..., D_r`: the monic gcd of all `k x k`
/// minors, stopping at the first zero one.
pub fn determinantal_divisors(p: &PolyMatrix) -> Vec<Poly> {
    let (m, n) = (p.rows(), p.cols());
    let mut out = Vec::new();
    for k in 1..=m.min(n) {
        let mut g = Poly::zero();
        for rows in combinations(m, k) {
            for cols in combinations(n, k) {
                let minor: Vec<Vec<Poly>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| p.get(i, j).clone()).collect()).collect();
                g = poly_gcd(&g, &determinant(&minor, p.field()));
                if g.is_one() {
                    break;
                }
            }
            if g.is_one() {
                break;
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(g);
    }
    out
}

/// Invariant factors as successive quotients of determinantal divisors.
pub fn smith_form_by_divisors(p: &PolyMatrix) -> Vec<Poly> {
    let divisors = determinantal_divisors(p);
    let mut prev = Poly::one(p.field());
    divisors
        .into_iter()
        .map(|d| {
            let q = d.exact_div(&prev).expect("D_(k-1) divides D_k");
            prev = d;
            q
        })
        .collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// Invariant rational functions `eta_i / phi_i`, computed from the Smith
/// form of `lcd * R`.
pub fn smith_mcmillan(r: &RatMatrix) -> Vec<RatFunc> {
    let lcd = r.lcd();
    let p = r.scale_to_polynomial(&lcd).expect("the lcd clears every denominator");
    smith_form(&p).into_iter().map(|a| RatFunc::new(a, lcd.clone()).expect("lcd is nonzero")).collect()
}

/// Invariant orders at infinity: the `s`-adic valuations of the invariant
/// rational functions of `R(1/s)`.
pub fn orders_at_infinity(r: &RatMatrix) -> Vec<i64> {
    let mut orders: Vec<i64> = smith_mcmillan(&r.substitute_inverse())
        .iter()
        .map(|f| f.valuation().expect("invariant rational functions are nonzero"))
        .collect();
    orders.sort_unstable();
    orders
}

/// Field-agnostic helper for chains of ones.
pub(crate) fn ones(field: Field, k: usize) -> Vec<Poly> {
    vec![Poly::one(field); k]
}
