//! JSON documents: structure tables, representations and verification reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::eval::{parse_scalar, EvalError};
use crate::qlie::{Basis, QLieVector, StructureTable};
use crate::qrep::{MatConjugation, RepError, RepMatrix, Representation};
use crate::scalar::{h_series, ExtScalar, ScalarError};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest representation dimension accepted from a document.
pub const MAX_REP_DIMENSION: usize = 16;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {source}")]
    Scalar { field: String, source: EvalError },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Arith(#[from] ScalarError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMetadata {
    pub tool_version: String,
    /// Casimir polynomial coefficients, constant term first.
    pub twist: Vec<String>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesView {
    pub order: usize,
    /// `entries[i][j][k]` lists the `h`-series coefficients of component `k`.
    pub entries: Vec<Vec<Vec<Vec<String>>>>,
}

/// Structure constants in canonical text: `entries[i][j] = [x+, x-, x0]` of
/// `[basis_i, basis_j]_h` over `(Xp_h, Xm_h, H_h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub metadata: TableMetadata,
    pub basis: Vec<String>,
    pub entries: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesView>,
}

fn scalar_field(text: &str, field: impl FnOnce() -> String) -> Result<ExtScalar, DocError> {
    parse_scalar(text).map_err(|source| DocError::Scalar { field: field(), source })
}

impl TableDocument {
    pub fn new(
        t: &StructureTable,
        twist: &[ExtScalar],
        seed: Option<u64>,
        series_order: Option<usize>,
    ) -> Result<Self, ScalarError> {
        let entries = t
            .entries
            .iter()
            .map(|row| row.iter().map(|v| v.coords.iter().map(|c| c.to_string()).collect()).collect())
            .collect();
        let series = match series_order {
            None => None,
            Some(order) => {
                let mut rows = Vec::new();
                for row in &t.entries {
                    let mut out_row = Vec::new();
                    for v in row {
                        let mut comps = Vec::new();
                        for c in &v.coords {
                            let s = h_series(c, order)?;
                            comps.push(s.coeffs().iter().map(|x| x.to_string()).collect());
                        }
                        out_row.push(comps);
                    }
                    rows.push(out_row);
                }
                Some(SeriesView { order, entries: rows })
            }
        };
        Ok(TableDocument {
            metadata: TableMetadata {
                tool_version: TOOL_VERSION.to_string(),
                twist: twist.iter().map(|c| c.to_string()).collect(),
                seed,
            },
            basis: Basis::ALL.iter().map(|b| b.name().to_string()).collect(),
            entries,
            series,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn table(&self) -> Result<StructureTable, DocError> {
        let names: Vec<_> = Basis::ALL.iter().map(|b| b.name()).collect();
        if self.basis != names {
            return Err(DocError::Shape(format!("basis must be {names:?}")));
        }
        if self.entries.len() != 3 || self.entries.iter().any(|r| r.len() != 3 || r.iter().any(|v| v.len() != 3)) {
            return Err(DocError::Shape("entries must be a 3x3 array of coordinate triples".into()));
        }
        let mut t = StructureTable::default();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let mut coords: [ExtScalar; 3] = Default::default();
                for (k, text) in v.iter().enumerate() {
                    coords[k] = scalar_field(text, || format!("entries[{i}][{j}][{k}]"))?;
                }
                t.entries[i][j] = QLieVector { coords };
            }
        }
        Ok(t)
    }

    pub fn twist(&self) -> Result<Vec<ExtScalar>, DocError> {
        self.metadata
            .twist
            .iter()
            .enumerate()
            .map(|(i, t)| scalar_field(t, || format!("metadata.twist[{i}]")))
            .collect()
    }
}

/// `{ "dimension": n, "pi": {basis -> matrix}, "conj": {"i,j" -> matrix} }`
/// with 1-based matrix-unit indices and scalars in canonical text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDocument {
    pub dimension: usize,
    pub pi: BTreeMap<String, Vec<Vec<String>>>,
    pub conj: BTreeMap<String, Vec<Vec<String>>>,
}

fn matrix_to_strings(m: &RepMatrix) -> Vec<Vec<String>> {
    m.rows().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

fn matrix_from_strings(n: usize, rows: &[Vec<String>], field: &str) -> Result<RepMatrix, DocError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(DocError::Shape(format!("{field}: expected a {n}x{n} matrix")));
    }
    let mut parsed = Vec::with_capacity(n);
    for (i, r) in rows.iter().enumerate() {
        let row = r
            .iter()
            .enumerate()
            .map(|(j, t)| scalar_field(t, || format!("{field}[{i}][{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push(row);
    }
    Ok(RepMatrix::from_rows(parsed).expect("square by construction"))
}

impl RepresentationDocument {
    pub fn from_representation(r: &Representation) -> Self {
        let n = r.dim();
        let pi = Basis::ALL
            .iter()
            .map(|&b| (b.name().to_string(), matrix_to_strings(r.pi_basis(b))))
            .collect();
        let mut conj = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                conj.insert(format!("{},{}", i + 1, j + 1), matrix_to_strings(r.conj().unit_image(i, j)));
            }
        }
        RepresentationDocument { dimension: n, pi, conj }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn representation(&self) -> Result<Representation, DocError> {
        let n = self.dimension;
        if n == 0 || n > MAX_REP_DIMENSION {
            return Err(DocError::Shape(format!("dimension must be in 1..={MAX_REP_DIMENSION}")));
        }
        if let Some(k) = self.pi.keys().find(|k| Basis::from_name(k).is_none()) {
            return Err(DocError::Shape(format!("pi: unknown basis element {k:?}")));
        }
        let mut pi: [RepMatrix; 3] = std::array::from_fn(|_| RepMatrix::zero(n));
        for b in Basis::ALL {
            let rows = self
                .pi
                .get(b.name())
                .ok_or_else(|| DocError::Shape(format!("pi: missing {}", b.name())))?;
            pi[b.index()] = matrix_from_strings(n, rows, &format!("pi.{}", b.name()))?;
        }
        let mut units = vec![None; n * n];
        for (key, rows) in &self.conj {
            let (i, j) = parse_unit_key(key, n)
                .ok_or_else(|| DocError::Shape(format!("conj: bad matrix-unit key {key:?}")))?;
            units[i * n + j] = Some(matrix_from_strings(n, rows, &format!("conj.\"{key}\""))?);
        }
        let images = units
            .into_iter()
            .enumerate()
            .map(|(k, m)| {
                m.ok_or_else(|| DocError::Shape(format!("conj: missing unit \"{},{}\"", k / n + 1, k % n + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Representation::new(pi, MatConjugation::new(n, images)?)?)
    }
}

/// `"i,j"` (1-based) to a 0-based pair.
fn parse_unit_key(key: &str, n: usize) -> Option<(usize, usize)> {
    let (a, b) = key.split_once(',')?;
    let i: usize = a.trim().parse().ok()?;
    let j: usize = b.trim().parse().ok()?;
    ((1..=n).contains(&i) && (1..=n).contains(&j)).then(|| (i - 1, j - 1))
}
