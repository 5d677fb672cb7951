//! JSON documents read and written by the command-line tool.
//!
//! Coefficients are strings, lowest degree first, so that rationals of any
//! size survive a round trip. Polynomials may also be written as text such
//! as `"s^2 + 1"`.

use serde::{Deserialize, Serialize};

use matcomp::completion::{FiniteChains, Mode, PrescribedData, Ring, Verdict};
use matcomp::field::Field;
use matcomp::matrix::RatMatrix;
use matcomp::oracle::CampaignReport;
use matcomp::poly::Poly;
use matcomp::ratfunc::RatFunc;
use matcomp::structure::StructuralData;

use crate::error::CliError;

pub const VERDICT_SCHEMA: &str = "verdict/1";
pub const STRUCTURE_SCHEMA: &str = "structure/1";
pub const ORACLE_SCHEMA: &str = "oracle/1";

/// `"Q"` or `{"GF": p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDoc {
    Prime {
        #[serde(rename = "GF")]
        gf: u32,
    },
    Named(String),
}

impl FieldDoc {
    pub fn to_field(&self) -> Result<Field, CliError> {
        match self {
            FieldDoc::Prime { gf } => Field::prime(*gf).map_err(|e| CliError::Invalid(e.to_string())),
            FieldDoc::Named(name) if name == "Q" => Ok(Field::Rational),
            FieldDoc::Named(name) => {
                Err(CliError::Invalid(format!("unknown field {name:?}, expected \"Q\" or {{\"GF\": p}}")))
            }
        }
    }
}

impl From<Field> for FieldDoc {
    fn from(f: Field) -> Self {
        match f {
            Field::Rational => FieldDoc::Named("Q".into()),
            Field::Prime(p) => FieldDoc::Prime { gf: p },
        }
    }
}

/// A polynomial as a coefficient list or as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyDoc {
    Coeffs(Vec<String>),
    Text(String),
}

impl PolyDoc {
    pub fn to_poly(&self, field: Field) -> Result<Poly, CliError> {
        match self {
            PolyDoc::Coeffs(cs) => {
                let coeffs = cs
                    .iter()
                    .map(|c| field.parse_elem(c))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| CliError::Parse(e.to_string()))?;
                Ok(Poly::from_coeffs(coeffs))
            }
            PolyDoc::Text(t) => Poly::parse(field, t).map_err(|e| CliError::Parse(e.to_string())),
        }
    }

    pub fn coeffs(p: &Poly) -> Self {
        PolyDoc::Coeffs(p.coeffs().iter().map(ToString::to_string).collect())
    }
}

/// A matrix entry: a polynomial, or a numerator over a denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryDoc {
    Fraction { num: PolyDoc, den: PolyDoc },
    Poly(PolyDoc),
}

impl EntryDoc {
    fn to_ratfunc(&self, field: Field) -> Result<RatFunc, CliError> {
        match self {
            EntryDoc::Poly(p) => Ok(RatFunc::from_poly(p.to_poly(field)?, field)),
            EntryDoc::Fraction { num, den } => {
                RatFunc::new(num.to_poly(field)?, den.to_poly(field)?).map_err(|e| CliError::Invalid(e.to_string()))
            }
        }
    }

    fn of(f: &RatFunc) -> Self {
        if f.is_polynomial() {
            EntryDoc::Poly(PolyDoc::coeffs(f.num()))
        } else {
            EntryDoc::Fraction { num: PolyDoc::coeffs(f.num()), den: PolyDoc::coeffs(f.den()) }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub field: FieldDoc,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<EntryDoc>>,
}

impl MatrixDocument {
    pub fn to_matrix(&self) -> Result<RatMatrix, CliError> {
        let field = self.field.to_field()?;
        if self.entries.len() != self.rows || self.entries.iter().any(|row| row.len() != self.cols) {
            return Err(CliError::Invalid(format!("entries do not form a {}x{} array", self.rows, self.cols)));
        }
        let entries = self.entries.iter().flatten().map(|e| e.to_ratfunc(field)).collect::<Result<Vec<_>, _>>()?;
        RatMatrix::new(field, self.rows, self.cols, entries).map_err(|e| CliError::Invalid(e.to_string()))
    }

    pub fn from_matrix(m: &RatMatrix) -> Self {
        MatrixDocument {
            field: m.field().into(),
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows()).map(|i| (0..m.cols()).map(|j| EntryDoc::of(m.get(i, j))).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteDoc {
    pub eps: Vec<PolyDoc>,
    /// Denominators; all 1 when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<PolyDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetDocument {
    pub mode: Mode,
    pub z: usize,
    pub x: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finite: Option<FiniteDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orders: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_order: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col_indices: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_indices: Option<Vec<i64>>,
}

impl TargetDocument {
    /// The prescription, with every family the mode omits required absent
    /// and every family it fixes required present.
    pub fn to_prescribed(&self, field: Field) -> Result<PrescribedData, CliError> {
        let m = self.mode;
        let family = |name: &str, present: bool, wanted: bool| match (present, wanted) {
            (true, false) => Err(CliError::Invalid(format!("mode {m} does not prescribe {name}"))),
            (false, true) => Err(CliError::Invalid(format!("mode {m} needs {name}"))),
            _ => Ok(()),
        };
        family("finite", self.finite.is_some(), m.has_finite())?;
        family("orders", self.orders.is_some(), m.has_orders())?;
        family("col_indices", self.col_indices.is_some(), m.has_cols())?;
        family("row_indices", self.row_indices.is_some(), m.has_rows())?;
        if self.first_order.is_some() && !m.has_first_order() {
            return Err(CliError::Invalid(format!("mode {m} does not prescribe first_order")));
        }
        let finite = self
            .finite
            .as_ref()
            .map(|f| {
                let eps = f.eps.iter().map(|p| p.to_poly(field)).collect::<Result<Vec<_>, _>>()?;
                let psi = match &f.psi {
                    Some(psi) => psi.iter().map(|p| p.to_poly(field)).collect::<Result<Vec<_>, _>>()?,
                    None => vec![Poly::one(field); eps.len()],
                };
                Ok::<_, CliError>(FiniteChains { eps, psi })
            })
            .transpose()?;
        Ok(PrescribedData {
            mode: m,
            z: self.z,
            x: self.x,
            finite,
            orders: self.orders.clone(),
            first_order: self.first_order,
            col_indices: self.col_indices.clone(),
            row_indices: self.row_indices.clone(),
        })
    }

    pub fn from_prescribed(t: &PrescribedData) -> Self {
        let finite = t.finite.as_ref().map(|f| FiniteDoc {
            eps: f.eps.iter().map(PolyDoc::coeffs).collect(),
            psi: (!f.is_polynomial()).then(|| f.psi.iter().map(PolyDoc::coeffs).collect()),
        });
        TargetDocument {
            mode: t.mode,
            z: t.z,
            x: t.x,
            finite,
            orders: t.orders.clone(),
            first_order: t.first_order,
            col_indices: t.col_indices.clone(),
            row_indices: t.row_indices.clone(),
        }
    }
}

/// Complete structural data. Polynomials are written as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub schema: String,
    pub field: FieldDoc,
    pub shape: (usize, usize),
    pub rank: usize,
    /// `-orders[0]` for a nonzero polynomial matrix.
    pub degree: Option<i64>,
    pub eta: Vec<String>,
    pub phi: Vec<String>,
    pub orders: Vec<i64>,
    pub cols: Vec<i64>,
    pub rows: Vec<i64>,
}

impl StructureDocument {
    pub fn from_data(d: &StructuralData) -> Self {
        let text = |v: &[Poly]| v.iter().map(ToString::to_string).collect();
        StructureDocument {
            schema: STRUCTURE_SCHEMA.into(),
            field: d.field().into(),
            shape: (d.rows(), d.cols()),
            rank: d.rank(),
            degree: d.degree(),
            eta: text(d.eta()),
            phi: text(d.phi()),
            orders: d.orders().to_vec(),
            cols: d.col_indices().as_slice().to_vec(),
            rows: d.row_indices().as_slice().to_vec(),
        }
    }

    pub fn to_data(&self) -> Result<StructuralData, CliError> {
        let field = self.field.to_field()?;
        let parse = |v: &[String]| {
            v.iter()
                .map(|t| Poly::parse(field, t).map_err(|e| CliError::Parse(e.to_string())))
                .collect::<Result<Vec<_>, _>>()
        };
        let data = StructuralData::new(
            field,
            self.shape,
            parse(&self.eta)?,
            parse(&self.phi)?,
            self.orders.clone(),
            self.cols.clone(),
            self.rows.clone(),
        )
        .map_err(|e| CliError::Invalid(e.to_string()))?;
        if data.rank() != self.rank || data.degree() != self.degree {
            return Err(CliError::Invalid("rank or degree does not match the data".into()));
        }
        Ok(data)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub schema: String,
    pub mode: Mode,
    pub ring: Ring,
    /// Column completion `[R W]` rather than row completion.
    pub column: bool,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl VerdictDocument {
    pub fn new(mode: Mode, ring: Ring, column: bool, verdict: Verdict) -> Self {
        VerdictDocument { schema: VERDICT_SCHEMA.into(), mode, ring, column, verdict }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDocument {
    pub schema: String,
    #[serde(flatten)]
    pub report: CampaignReport,
}

impl OracleDocument {
    pub fn new(report: CampaignReport) -> Self {
        OracleDocument { schema: ORACLE_SCHEMA.into(), report }
    }
}
