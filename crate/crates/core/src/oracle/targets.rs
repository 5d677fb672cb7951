//! Target generation: perturbations of achievable data and bounded
//! enumerations of the families a partial prescription leaves free.

use std::collections::BTreeSet;

use crate::completion::FiniteChains;
use crate::field::Field;
use crate::poly::{poly_gcd, Poly};
use crate::structure::StructuralData;

#[derive(Clone)]
struct Raw {
    eta: Vec<Poly>,
    phi: Vec<Poly>,
    orders: Vec<i64>,
    cols: Vec<i64>,
    rows: Vec<i64>,
}

impl Raw {
    fn of(d: &StructuralData) -> Self {
        Raw {
            eta: d.eta().to_vec(),
            phi: d.phi().to_vec(),
            orders: d.orders().to_vec(),
            cols: d.col_indices().as_slice().to_vec(),
            rows: d.row_indices().as_slice().to_vec(),
        }
    }

    fn build(mut self, like: &StructuralData) -> Option<StructuralData> {
        self.orders.sort_unstable();
        self.cols.sort_unstable_by(|a, b| b.cmp(a));
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        StructuralData::new(
            like.field(),
            (like.rows(), like.cols()),
            self.eta,
            self.phi,
            self.orders,
            self.cols,
            self.rows,
        )
        .ok()
    }

    /// Single-family perturbations, each with its change of the sum
    /// `sum c + sum u + sum orders + sum deg eta`.
    fn moves(&self, field: Field) -> Vec<(Raw, i64)> {
        let mut out = Vec::new();
        for i in 0..self.orders.len() {
            for delta in [-1, 1] {
                let mut r = self.clone();
                r.orders[i] += delta;
                out.push((r, delta));
            }
        }
        for k in 0..self.cols.len() {
            for delta in [-1, 1] {
                let mut r = self.clone();
                r.cols[k] += delta;
                out.push((r, delta));
            }
        }
        for k in 0..self.rows.len() {
            for delta in [-1, 1] {
                let mut r = self.clone();
                r.rows[k] += delta;
                out.push((r, delta));
            }
        }
        let s = Poly::s(field);
        let s1 = Poly::from_coeffs(vec![field.one(), field.one()]);
        for h in [s, s1] {
            let len = self.eta.len();
            for i in 0..len {
                let mut one = self.clone();
                one.eta[i] = &one.eta[i] * &h;
                out.push((one, 1));
                if i + 1 < len {
                    let mut tail = self.clone();
                    for e in &mut tail.eta[i..] {
                        *e = &*e * &h;
                    }
                    out.push((tail, (len - i) as i64));
                }
                if let Some(q) = self.eta[i].exact_div(&h) {
                    let mut r = self.clone();
                    r.eta[i] = q;
                    out.push((r, -1));
                }
                if i > 0 && self.eta[..=i].iter().all(|e| h.divides(e)) {
                    let mut head = self.clone();
                    for e in &mut head.eta[..=i] {
                        *e = e.exact_div(&h).expect("checked");
                    }
                    out.push((head, -(i as i64 + 1)));
                }
            }
        }
        out
    }
}

/// Targets near `target`: every single-family move, and every pair of
/// moves whose effects on the sum identity cancel. Invalid data are
/// dropped; `target` itself is not included.
pub fn near_misses(target: &StructuralData) -> Vec<StructuralData> {
    let field = target.field();
    let mut out = BTreeSet::new();
    for (first, d1) in Raw::of(target).moves(field) {
        if let Some(t) = first.clone().build(target) {
            out.insert(t);
        }
        for (second, d2) in first.moves(field) {
            if d1 + d2 == 0 {
                if let Some(t) = second.build(target) {
                    out.insert(t);
                }
            }
        }
    }
    out.remove(target);
    out.into_iter().collect()
}

/// Non-increasing sequences of `len` non-negative integers summing to `total`.
pub fn partitions(len: usize, total: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, total: i64, cap: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if len == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let lo = (total + len as i64 - 1) / len as i64;
        for v in (lo..=cap.min(total)).rev() {
            prefix.push(v);
            go(len - 1, total - v, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if total >= 0 {
        go(len, total, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Pairs of partitions of lengths `len_a` and `len_b` with total sum `total`.
pub fn split_partitions(len_a: usize, len_b: usize, total: i64) -> Vec<(Vec<i64>, Vec<i64>)> {
    (0..=total.max(-1))
        .flat_map(|sa| {
            let bs = partitions(len_b, total - sa);
            partitions(len_a, sa).into_iter().flat_map(move |a| bs.clone().into_iter().map(move |b| (a.clone(), b)))
        })
        .collect()
}

/// Non-decreasing sequences of length `len` with sum at most `max_sum`,
/// whose first entry is `first` when given and otherwise at least `lowest`.
pub fn order_sequences(len: usize, lowest: i64, first: Option<i64>, max_sum: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, min: i64, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if len == 0 {
            out.push(prefix.clone());
            return;
        }
        // Every remaining entry is at least v, so v * len <= budget.
        let hi = budget.div_euclid(len as i64);
        for v in min..=hi {
            prefix.push(v);
            go(len - 1, v, budget - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if max_sum >= 0 {
            out.push(Vec::new());
        }
        return out;
    }
    match first {
        Some(q1) => {
            if q1 * len as i64 <= max_sum {
                go(len - 1, q1, max_sum - q1, &mut vec![q1], &mut out);
            }
        }
        None => go(len, lowest, max_sum, &mut Vec::new(), &mut out),
    }
    out
}

/// Monic polynomials of exactly degree `deg` over a finite field.
pub fn monic_polys(field: Field, deg: usize) -> Vec<Poly> {
    let elems = field.elements().expect("finite field");
    let p = elems.len();
    let count = p.pow(deg as u32);
    (0..count)
        .map(|mut idx| {
            let mut coeffs: Vec<_> = (0..deg)
                .map(|_| {
                    let c = elems[idx % p].clone();
                    idx /= p;
                    c
                })
                .collect();
            coeffs.push(field.one());
            Poly::from_coeffs(coeffs)
        })
        .collect()
}

/// Chains `b_1 | b_2 | ... | b_len` of monic polynomials with total degree
/// at most `max_total`.
pub fn divisor_chains(field: Field, len: usize, max_total: i64) -> Vec<Vec<Poly>> {
    fn go(field: Field, len: usize, budget: i64, prefix: &mut Vec<Poly>, out: &mut Vec<Vec<Poly>>) {
        if len == 0 {
            out.push(prefix.clone());
            return;
        }
        let base = prefix.last().cloned().unwrap_or_else(|| Poly::one(field));
        let base_deg = base.deg();
        // Each of the remaining `len` entries has degree at least that of the next one.
        for extra in 0.. {
            let deg = base_deg + extra;
            if deg * len as i64 > budget {
                break;
            }
            for h in monic_polys(field, extra as usize) {
                prefix.push(&base * &h);
                go(field, len - 1, budget - deg, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if max_total >= 0 {
        go(field, len, max_total, &mut Vec::new(), &mut out);
    }
    out
}

/// Numerator chains with total degree at most `max_num` paired with
/// denominator chains (dividing backwards) of total degree at most
/// `max_den`, entrywise coprime.
pub fn rational_chains(field: Field, len: usize, max_num: i64, max_den: i64) -> Vec<FiniteChains> {
    let nums = divisor_chains(field, len, max_num);
    let dens: Vec<Vec<Poly>> = divisor_chains(field, len, max_den)
        .into_iter()
        .map(|mut c| {
            c.reverse();
            c
        })
        .collect();
    let mut out = Vec::new();
    for eps in &nums {
        for psi in &dens {
            if eps.iter().zip(psi).all(|(e, p)| poly_gcd(e, p).is_one()) {
                out.push(FiniteChains { eps: eps.clone(), psi: psi.clone() });
            }
        }
    }
    out
}
