//! Feasibility of row completion with prescribed structural data.
//!
//! Given the data of `R (m x n)` and a prescription for `[R; W]` with `z`
//! added rows and rank increment `x`, each predicate decides whether some
//! `W` realizes the prescription, and records every condition it checked.

mod complete;
mod partial;
mod pencil;
mod sequences;
#[cfg(test)]
mod tests;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use complete::{
    complete_polynomial, complete_rational, complete_rational_direct, degree_fixed_conditions, scale_problem,
};
pub use partial::{
    fin_first_order_completion, fin_inf_col_completion, fin_inf_completion, fin_inf_row_completion,
    fin_only_completion, inf_only_completion,
};
pub use pencil::{pencil_row_completion, pencil_via_companion, PencilData};
pub use sequences::{build_sequences, SeqBuilderOutput, Variant};

use crate::error::CompletionError;
use crate::field::Field;
use crate::majorization::IntSeq;
use crate::poly::{poly_gcd, poly_lcm, Poly};
use crate::ratfunc::RatFunc;
use crate::structure::{check_chain, StructuralData};

/// Whether the completion may be rational or must be polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    #[serde(rename = "poly")]
    Polynomial,
    Rational,
}

/// Which families a prescription fixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "complete")]
    Complete,
    #[serde(rename = "fin-inf-col")]
    FinInfCol,
    #[serde(rename = "fin-inf-row")]
    FinInfRow,
    #[serde(rename = "fin-inf")]
    FinInf,
    #[serde(rename = "inf")]
    InfOnly,
    #[serde(rename = "fin")]
    FinOnly,
    #[serde(rename = "fin-first-order")]
    FinFirstOrder,
}

impl Mode {
    pub const ALL: [Mode; 7] = [
        Mode::Complete,
        Mode::FinInfCol,
        Mode::FinInfRow,
        Mode::FinInf,
        Mode::InfOnly,
        Mode::FinOnly,
        Mode::FinFirstOrder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Complete => "complete",
            Mode::FinInfCol => "fin-inf-col",
            Mode::FinInfRow => "fin-inf-row",
            Mode::FinInf => "fin-inf",
            Mode::InfOnly => "inf",
            Mode::FinOnly => "fin",
            Mode::FinFirstOrder => "fin-first-order",
        }
    }

    pub fn has_finite(self) -> bool {
        !matches!(self, Mode::InfOnly)
    }

    pub fn has_orders(self) -> bool {
        matches!(self, Mode::Complete | Mode::FinInfCol | Mode::FinInfRow | Mode::FinInf | Mode::InfOnly)
    }

    pub fn has_first_order(self) -> bool {
        self == Mode::FinFirstOrder
    }

    pub fn has_cols(self) -> bool {
        matches!(self, Mode::Complete | Mode::FinInfCol)
    }

    pub fn has_rows(self) -> bool {
        matches!(self, Mode::Complete | Mode::FinInfRow)
    }

    /// The mode of the same problem for the transposed matrix.
    pub fn transposed(self) -> Mode {
        match self {
            Mode::FinInfCol => Mode::FinInfRow,
            Mode::FinInfRow => Mode::FinInfCol,
            other => other,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mode::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| format!("unknown mode {s:?}"))
    }
}

/// Target invariant rational functions `eps_i / psi_i`, `i = 1..=r+x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteChains {
    pub eps: Vec<Poly>,
    pub psi: Vec<Poly>,
}

impl FiniteChains {
    /// Polynomial chains: every denominator is 1.
    pub fn polynomial(field: Field, beta: Vec<Poly>) -> Self {
        let psi = vec![Poly::one(field); beta.len()];
        FiniteChains { eps: beta, psi }
    }

    pub fn len(&self) -> usize {
        self.eps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eps.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.psi.iter().all(Poly::is_one)
    }
}

/// A prescription for the completed `(m+z) x n` matrix. Families the mode
/// leaves free are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrescribedData {
    pub mode: Mode,
    pub z: usize,
    pub x: usize,
    pub finite: Option<FiniteChains>,
    pub orders: Option<Vec<i64>>,
    pub first_order: Option<i64>,
    pub col_indices: Option<Vec<i64>>,
    pub row_indices: Option<Vec<i64>>,
}

impl PrescribedData {
    /// Restricts the full data of a completed matrix to the families of
    /// `mode`. `x` is read off as the rank increment over `source_rank`.
    pub fn from_data(target: &StructuralData, source_rank: usize, z: usize, mode: Mode) -> Self {
        let x = target.rank().saturating_sub(source_rank);
        PrescribedData {
            mode,
            z,
            x,
            finite: mode.has_finite().then(|| FiniteChains { eps: target.eta().to_vec(), psi: target.phi().to_vec() }),
            orders: mode.has_orders().then(|| target.orders().to_vec()),
            first_order: if mode.has_first_order() { target.orders().first().copied() } else { None },
            col_indices: mode.has_cols().then(|| target.col_indices().as_slice().to_vec()),
            row_indices: mode.has_rows().then(|| target.row_indices().as_slice().to_vec()),
        }
    }

    /// Restricts a prescription to a smaller mode. Fails if `mode` needs a
    /// family this prescription lacks.
    pub fn project(&self, mode: Mode) -> Result<Self, CompletionError> {
        let need = |present: bool, what: &str| {
            if present {
                Ok(())
            } else {
                Err(CompletionError::Malformed(format!("cannot project to {mode}: {what} missing")))
            }
        };
        if mode.has_finite() {
            need(self.finite.is_some(), "finite structure")?;
        }
        if mode.has_orders() {
            need(self.orders.is_some(), "orders")?;
        }
        if mode.has_first_order() {
            need(self.first_order.is_some() || self.orders.is_some(), "first order")?;
        }
        if mode.has_cols() {
            need(self.col_indices.is_some(), "column indices")?;
        }
        if mode.has_rows() {
            need(self.row_indices.is_some(), "row indices")?;
        }
        Ok(PrescribedData {
            mode,
            z: self.z,
            x: self.x,
            finite: if mode.has_finite() { self.finite.clone() } else { None },
            orders: if mode.has_orders() { self.orders.clone() } else { None },
            first_order: if mode.has_first_order() {
                self.first_order.or_else(|| self.orders.as_ref().and_then(|o| o.first().copied()))
            } else {
                None
            },
            col_indices: if mode.has_cols() { self.col_indices.clone() } else { None },
            row_indices: if mode.has_rows() { self.row_indices.clone() } else { None },
        })
    }

    /// The prescription for the transposed (column completion) problem.
    pub fn transposed(&self) -> Self {
        PrescribedData {
            mode: self.mode.transposed(),
            col_indices: self.row_indices.clone(),
            row_indices: self.col_indices.clone(),
            ..self.clone()
        }
    }

    /// The first order, whether prescribed alone or as part of the orders.
    pub fn first_order_value(&self) -> Option<i64> {
        self.first_order.or_else(|| self.orders.as_ref().and_then(|o| o.first().copied()))
    }
}

/// Outcome of a predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Feasible,
    Infeasible,
    /// The prescription lies outside the range where the characterization
    /// applies, e.g. `x > min(z, n - r)`.
    HypothesisViolated,
}

/// One checked condition, with the two sides it compared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub id: String,
    pub description: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Condition {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        holds: bool,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> Self {
        Condition { id: id.into(), description: description.into(), holds, lhs: lhs.to_string(), rhs: rhs.to_string() }
    }

    /// `lhs <= rhs`, or `lhs == rhs` when `equality` is set.
    pub fn inequality(
        id: impl Into<String>,
        description: impl Into<String>,
        lhs: i64,
        rhs: i64,
        equality: bool,
    ) -> Self {
        let holds = if equality { lhs == rhs } else { lhs <= rhs };
        Condition::new(id, description, holds, lhs, rhs)
    }
}

/// The verdict of a predicate: status, the full condition trace and the
/// auxiliary `a`/`b` sequences the predicate built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub conditions: Vec<Condition>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl Verdict {
    pub fn from_conditions(conditions: Vec<Condition>) -> Self {
        let status = if conditions.iter().all(|c| c.holds) { Status::Feasible } else { Status::Infeasible };
        Verdict { status, conditions, a: Vec::new(), b: Vec::new() }
    }

    pub fn with_sequences(mut self, a: Vec<i64>, b: Vec<i64>) -> Self {
        self.a = a;
        self.b = b;
        self
    }

    pub fn hypothesis_violated(condition: Condition) -> Self {
        Verdict { status: Status::HypothesisViolated, conditions: vec![condition], a: Vec::new(), b: Vec::new() }
    }

    pub fn feasible(&self) -> bool {
        self.status == Status::Feasible
    }

    pub fn failing(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.holds)
    }
}

/// The `Δ` notation: with `g`, `deg lcm(eta, eps) - deg gcd(phi, psi)`;
/// without, `deg eta - deg phi`; plus the largest of the orders supplied.
pub fn delta(f: &RatFunc, g: Option<&RatFunc>, p: Option<i64>, q: Option<i64>) -> i64 {
    let base = match g {
        Some(g) => poly_lcm(f.num(), g.num()).deg() - poly_gcd(f.den(), g.den()).deg(),
        None => f.num().deg() - f.den().deg(),
    };
    base + match (p, q) {
        (Some(p), Some(q)) => p.max(q),
        (Some(p), None) | (None, Some(p)) => p,
        (None, None) => 0,
    }
}

/// Checks `lcm((pi/phi) eta, (pi/psi) eps) = (pi / gcd(phi, psi)) lcm(eta, eps)`.
pub fn lcm_scaled_identity_check(
    phi: &Poly,
    eta: &Poly,
    psi: &Poly,
    eps: &Poly,
    pi: &Poly,
) -> Result<bool, CompletionError> {
    let pre = |ok: bool, what: &str| if ok { Ok(()) } else { Err(CompletionError::Malformed(what.to_string())) };
    pre(!phi.is_zero() && phi.divides(pi), "phi must divide pi")?;
    pre(!psi.is_zero() && psi.divides(pi), "psi must divide pi")?;
    pre(poly_gcd(phi, eta).is_one(), "phi and eta must be coprime")?;
    pre(poly_gcd(psi, eps).is_one(), "psi and eps must be coprime")?;
    let left = poly_lcm(&(&pi.exact_div(phi).expect("phi | pi") * eta), &(&pi.exact_div(psi).expect("psi | pi") * eps));
    let right = &pi.exact_div(&poly_gcd(phi, psi)).expect("gcd | pi") * &poly_lcm(eta, eps);
    Ok(left == right.monic())
}

/// Whether some matrix has exactly these data.
pub fn exists_with_data(data: &StructuralData, ring: Ring) -> Result<Verdict, CompletionError> {
    let sum = data.sum_identity();
    let mut conditions = vec![Condition::inequality(
        "sum-identity",
        "sum c + sum u + sum orders + sum deg eta - sum deg phi = 0",
        sum,
        0,
        true,
    )];
    if ring == Ring::Polynomial {
        conditions.push(Condition::new(
            "polynomial",
            "every denominator is 1",
            data.is_polynomial(),
            data.phi().iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
            "1",
        ));
        // Degree form: e_i = p_i + d with d = -p_1 requires e_1 = 0 and
        // sum c + sum u + sum e + sum deg alpha = r d.
        if let Some(d) = data.degree() {
            let e: Vec<i64> = data.orders().iter().map(|p| p + d).collect();
            let lhs = data.col_indices().sum()
                + data.row_indices().sum()
                + e.iter().sum::<i64>()
                + data.eta().iter().map(Poly::deg).sum::<i64>()
                - data.phi().iter().map(Poly::deg).sum::<i64>();
            let rhs = data.rank() as i64 * d;
            let degree_form = e[0] == 0 && d >= 0 && lhs == rhs;
            let orders_form = sum == 0 && d >= 0;
            if degree_form != orders_form {
                return Err(CompletionError::Internal(format!(
                    "degree form ({lhs} vs {rhs}) and orders form ({sum}) disagree on {data}"
                )));
            }
            conditions.push(Condition::inequality("degree", "the degree -p_1 is non-negative", 0, d, false));
        }
    }
    Ok(Verdict::from_conditions(conditions))
}

/// Sá–Thompson (polynomial) or Baragaña (rational) interlacing for bordering
/// by `z` rows and `q` columns.
pub fn interlace_finite(
    source_eta: &[Poly],
    source_phi: &[Poly],
    target: &FiniteChains,
    z: usize,
    q: usize,
    ring: Ring,
) -> Result<Verdict, CompletionError> {
    if source_eta.len() != source_phi.len() || target.eps.len() != target.psi.len() {
        return Err(CompletionError::Malformed("numerator and denominator chains differ in length".into()));
    }
    for (chain, inc, what) in [
        (source_eta, true, "source numerator"),
        (source_phi, false, "source denominator"),
        (&target.eps[..], true, "target numerator"),
        (&target.psi[..], false, "target denominator"),
    ] {
        check_chain(chain, inc, what).map_err(CompletionError::Malformed)?;
    }
    let field = source_eta.first().or(target.eps.first()).and_then(Poly::field).unwrap_or(Field::Rational);
    let shift = z + q;
    let mut conditions = vec![num_interlacing(source_eta, &target.eps, shift, field)];
    if ring == Ring::Rational {
        conditions.push(den_interlacing(source_phi, &target.psi, shift, field));
    }
    Ok(Verdict::from_conditions(conditions))
}

/// `eps_i | eta_i | eps_{i+shift}` for every source index.
pub(crate) fn num_interlacing(eta: &[Poly], eps: &[Poly], shift: usize, field: Field) -> Condition {
    let failure = eta.iter().enumerate().find_map(|(k, e)| {
        let i = k as i64 + 1;
        let below = crate::structure::num_at(eps, i, field);
        let above = crate::structure::num_at(eps, i + shift as i64, field);
        if !below.divides(e) {
            Some(format!("i={i}: {below} does not divide {e}"))
        } else if !e.divides(&above) {
            Some(format!("i={i}: {e} does not divide {above}"))
        } else {
            None
        }
    });
    Condition::new(
        "num-interlacing",
        format!("eps_i | eta_i | eps_(i+{shift})"),
        failure.is_none(),
        failure.unwrap_or_else(|| "all hold".into()),
        "",
    )
}

/// `psi_{i+shift} | phi_i | psi_i` for every source index.
pub(crate) fn den_interlacing(phi: &[Poly], psi: &[Poly], shift: usize, field: Field) -> Condition {
    let failure = phi.iter().enumerate().find_map(|(k, f)| {
        let i = k as i64 + 1;
        let above = crate::structure::den_at(psi, i, field);
        let below = crate::structure::den_at(psi, i + shift as i64, field);
        if !below.divides(f) {
            Some(format!("i={i}: {below} does not divide {f}"))
        } else if !f.divides(&above) {
            Some(format!("i={i}: {f} does not divide {above}"))
        } else {
            None
        }
    });
    Condition::new(
        "den-interlacing",
        format!("psi_(i+{shift}) | phi_i | psi_i"),
        failure.is_none(),
        failure.unwrap_or_else(|| "all hold".into()),
        "",
    )
}

/// `q_i <= p_i <= q_{i+shift}` for every source index.
pub(crate) fn order_interlacing(p: &[i64], q: &[i64], shift: usize) -> Condition {
    use crate::majorization::ExtInt;
    let failure = p.iter().enumerate().find_map(|(k, &pk)| {
        let i = k as i64 + 1;
        let lo = crate::structure::order_at(q, i);
        let hi = crate::structure::order_at(q, i + shift as i64);
        let pk = ExtInt::Finite(pk);
        if lo > pk {
            Some(format!("i={i}: q_i = {lo} > p_i = {pk}"))
        } else if pk > hi {
            Some(format!("i={i}: p_i = {pk} > q_(i+{shift}) = {hi}"))
        } else {
            None
        }
    });
    Condition::new(
        "order-interlacing",
        format!("q_i <= p_i <= q_(i+{shift})"),
        failure.is_none(),
        failure.unwrap_or_else(|| "all hold".into()),
        "",
    )
}

/// A validated source/target pair with convenient 1-based accessors.
pub(crate) struct Problem<'a> {
    pub src: &'a StructuralData,
    pub tgt: &'a PrescribedData,
    pub field: Field,
    pub n: usize,
    pub r: usize,
    pub x: usize,
    pub z: usize,
}

impl<'a> Problem<'a> {
    /// Checks the hypothesis `x <= min(z, n - r)`, then every family the
    /// mode prescribes. `Ok(Err(verdict))` carries a hypothesis violation.
    pub fn new(
        src: &'a StructuralData,
        tgt: &'a PrescribedData,
        ring: Ring,
    ) -> Result<Result<Self, Verdict>, CompletionError> {
        let (m, n, r) = (src.rows(), src.cols(), src.rank());
        let (x, z) = (tgt.x, tgt.z);
        let bound = z.min(n - r);
        if x > bound {
            return Ok(Err(Verdict::hypothesis_violated(Condition::new(
                "hypothesis-x",
                "0 <= x <= min(z, n - r)",
                false,
                x,
                bound,
            ))));
        }
        let bad = |msg: String| Err(CompletionError::Malformed(msg));
        if ring == Ring::Polynomial && !src.is_polynomial() {
            return bad("polynomial completion needs a polynomial source".into());
        }
        let len = r + x;
        let fams = [
            (tgt.mode.has_finite(), tgt.finite.is_some(), "finite structure"),
            (tgt.mode.has_orders(), tgt.orders.is_some(), "orders at infinity"),
            (tgt.mode.has_first_order() && len > 0, tgt.first_order.is_some(), "first order"),
            (tgt.mode.has_cols(), tgt.col_indices.is_some(), "column indices"),
            (tgt.mode.has_rows(), tgt.row_indices.is_some(), "row indices"),
        ];
        for (wanted, present, what) in fams {
            if wanted != present {
                let verb = if wanted { "needs" } else { "does not take" };
                return bad(format!("mode {} {verb} {what}", tgt.mode));
            }
        }
        if let Some(f) = &tgt.finite {
            if f.eps.len() != len || f.psi.len() != len {
                return bad(format!("finite chains need {len} entries, got {} and {}", f.eps.len(), f.psi.len()));
            }
            if f.eps.iter().chain(&f.psi).any(|p| p.field().is_some_and(|g| g != src.field())) {
                return bad(format!("target chains must lie over {}", src.field()));
            }
            check_chain(&f.eps, true, "target numerator").map_err(CompletionError::Malformed)?;
            check_chain(&f.psi, false, "target denominator").map_err(CompletionError::Malformed)?;
            if let Some((e, p)) = f.eps.iter().zip(&f.psi).find(|(e, p)| !poly_gcd(e, p).is_one()) {
                return bad(format!("{e}/{p} is not reduced"));
            }
            if ring == Ring::Polynomial && !f.is_polynomial() {
                return bad("polynomial completion needs target denominators equal to 1".into());
            }
        }
        if let Some(q) = &tgt.orders {
            if q.len() != len {
                return bad(format!("orders need {len} entries, got {}", q.len()));
            }
            if q.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("orders {q:?} are not non-decreasing"));
            }
        }
        let check_part = |v: &Vec<i64>, want: usize, what: &str| -> Result<(), CompletionError> {
            if v.len() != want {
                return Err(CompletionError::Malformed(format!("{what} need {want} entries, got {}", v.len())));
            }
            if v.iter().any(|&e| e < 0) || v.windows(2).any(|w| w[0] < w[1]) {
                return Err(CompletionError::Malformed(format!("{what} {v:?} are not a partition")));
            }
            Ok(())
        };
        if let Some(d) = &tgt.col_indices {
            check_part(d, n - r - x, "column indices")?;
        }
        if let Some(v) = &tgt.row_indices {
            check_part(v, m + z - r - x, "row indices")?;
        }
        Ok(Ok(Problem { src, tgt, field: src.field(), n, r, x, z }))
    }

    pub fn finite(&self) -> &FiniteChains {
        self.tgt.finite.as_ref().expect("validated")
    }

    /// `eta_i / phi_i`, `1 <= i <= r`.
    pub fn f(&self, i: usize) -> RatFunc {
        RatFunc::new(self.src.eta()[i - 1].clone(), self.src.phi()[i - 1].clone()).expect("nonzero denominator")
    }

    /// `eps_i / psi_i`, `1 <= i <= r + x`.
    pub fn g(&self, i: usize) -> RatFunc {
        let f = self.finite();
        RatFunc::new(f.eps[i - 1].clone(), f.psi[i - 1].clone()).expect("nonzero denominator")
    }

    pub fn p(&self, i: usize) -> i64 {
        self.src.orders()[i - 1]
    }

    pub fn q(&self, i: usize) -> i64 {
        self.tgt.orders.as_ref().expect("validated")[i - 1]
    }

    pub fn c(&self) -> &IntSeq {
        self.src.col_indices()
    }

    pub fn u(&self) -> &IntSeq {
        self.src.row_indices()
    }

    pub fn d(&self) -> IntSeq {
        IntSeq::new(self.tgt.col_indices.clone().expect("validated")).expect("validated")
    }

    pub fn v(&self) -> IntSeq {
        IntSeq::new(self.tgt.row_indices.clone().expect("validated")).expect("validated")
    }

    /// Literal comparison of every prescribed family with the source, for
    /// `z = 0`.
    pub fn literal(&self) -> Verdict {
        let mut conditions = Vec::new();
        let show = |v: &[Poly]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        if let Some(f) = &self.tgt.finite {
            let holds = f.eps == self.src.eta() && f.psi == self.src.phi();
            conditions.push(Condition::new(
                "literal-finite",
                "with z = 0 the invariant rational functions are unchanged",
                holds,
                format!("({}) / ({})", show(&f.eps), show(&f.psi)),
                format!("({}) / ({})", show(self.src.eta()), show(self.src.phi())),
            ));
        }
        if let Some(q) = &self.tgt.orders {
            conditions.push(Condition::new(
                "literal-orders",
                "with z = 0 the orders are unchanged",
                q == self.src.orders(),
                format!("{q:?}"),
                format!("{:?}", self.src.orders()),
            ));
        }
        if let Some(q1) = self.tgt.first_order {
            let p1 = self.src.orders().first().copied();
            conditions.push(Condition::new(
                "literal-first-order",
                "with z = 0 the first order is unchanged",
                Some(q1) == p1,
                q1,
                p1.map_or("none".to_string(), |p| p.to_string()),
            ));
        }
        if let Some(d) = &self.tgt.col_indices {
            conditions.push(Condition::new(
                "literal-cols",
                "with z = 0 the column minimal indices are unchanged",
                d == self.c().as_slice(),
                format!("{d:?}"),
                format!("{:?}", self.c().as_slice()),
            ));
        }
        if let Some(v) = &self.tgt.row_indices {
            conditions.push(Condition::new(
                "literal-rows",
                "with z = 0 the row minimal indices are unchanged",
                v == self.u().as_slice(),
                format!("{v:?}"),
                format!("{:?}", self.u().as_slice()),
            ));
        }
        Verdict::from_conditions(conditions)
    }
}

/// Runs the predicate for the prescription's mode.
pub fn check(source: &StructuralData, target: &PrescribedData, ring: Ring) -> Result<Verdict, CompletionError> {
    match target.mode {
        Mode::Complete => match ring {
            Ring::Polynomial => complete_polynomial(source, target),
            Ring::Rational => complete_rational(source, target),
        },
        Mode::FinInfCol => fin_inf_col_completion(source, target, ring),
        Mode::FinInfRow => fin_inf_row_completion(source, target, ring),
        Mode::FinInf => fin_inf_completion(source, target, ring),
        Mode::InfOnly => inf_only_completion(source, target, ring),
        Mode::FinOnly => fin_only_completion(source, target, ring),
        Mode::FinFirstOrder => fin_first_order_completion(source, target, ring),
    }
}

/// Column completion `[R W]`: the row predicate on the transposes.
pub fn column_completion(
    source: &StructuralData,
    target: &PrescribedData,
    ring: Ring,
) -> Result<Verdict, CompletionError> {
    check(&source.transpose(), &target.transposed(), ring)
}
