use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::precision::{from_decimal, to_decimal, MPComplex, PrecisionContext};

use super::{AnalysisError, Region};

/// Provenance of a computed spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumMeta {
    pub flow: String,
    pub re: String,
    pub a: String,
    pub method: String,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "P")]
    pub p: u32,
    pub infinite_count: usize,
    pub wall_time_s: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Finite eigenvalues of one solve, sorted by `(re, im)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSet {
    pub meta: SpectrumMeta,
    eigenvalues: Vec<MPComplex>,
}

#[derive(Serialize, Deserialize)]
struct Point {
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct SpectrumFile {
    meta: SpectrumMeta,
    eigenvalues: Vec<Point>,
}

impl SpectrumSet {
    pub fn new(meta: SpectrumMeta, mut eigenvalues: Vec<MPComplex>) -> Self {
        eigenvalues.sort_by(|x, y| x.lex_cmp(y));
        SpectrumSet { meta, eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[MPComplex] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Keeps the eigenvalues inside `q`; metadata is unchanged.
    pub fn filter_region(&self, q: &Region) -> SpectrumSet {
        SpectrumSet {
            meta: self.meta.clone(),
            eigenvalues: super::filter_points(&self.eigenvalues, q),
        }
    }

    /// The eigenvalue with the largest imaginary part, if any.
    pub fn leading(&self) -> Option<&MPComplex> {
        self.eigenvalues.iter().max_by(|x, y| x.im.total_cmp(&y.im))
    }

    pub fn to_json(&self) -> String {
        let file = SpectrumFile {
            meta: self.meta.clone(),
            eigenvalues: self
                .eigenvalues
                .iter()
                .map(|z| {
                    let digits = z.context().roundtrip_digits();
                    Point {
                        re: to_decimal(&z.re, digits),
                        im: to_decimal(&z.im, digits),
                    }
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("spectrum serializes")
    }

    /// Parses a spectrum file; values are read at the precision in `meta.P`.
    pub fn from_json(text: &str) -> Result<Self, AnalysisError> {
        let file: SpectrumFile = serde_json::from_str(text).map_err(|e| AnalysisError::Format(e.to_string()))?;
        let ctx = PrecisionContext::new(file.meta.p).map_err(|e| AnalysisError::Format(e.to_string()))?;
        let parse = |s: &str| from_decimal(s, ctx).map_err(|e| AnalysisError::Format(e.to_string()));
        let eigenvalues = file
            .eigenvalues
            .iter()
            .map(|pt| Ok(MPComplex::new(parse(&pt.re)?, parse(&pt.im)?)))
            .collect::<Result<Vec<_>, AnalysisError>>()?;
        Ok(SpectrumSet::new(file.meta, eigenvalues))
    }

    pub fn save(&self, path: &Path) -> Result<(), AnalysisError> {
        std::fs::write(path, self.to_json()).map_err(|e| AnalysisError::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self, AnalysisError> {
        let text = std::fs::read_to_string(path).map_err(|e| AnalysisError::io(path, e))?;
        Self::from_json(&text)
    }
}
