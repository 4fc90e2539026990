//! Chebyshev tau discretization of the Orr–Sommerfeld eigenproblem.
//!
//! Two formulations are provided: the split second-order system (`D2`,
//! unknowns `φ` and `χ = (D²−a²)φ`, order `2(N+3)`) and the direct
//! fourth-order one (`D4`, order `N+5`). Both produce a pencil `A·x = c·B·x`
//! with purely imaginary `B`.

mod assemble;
mod operators;

use std::fmt;
use std::str::FromStr;

use rug::Rational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::densela::MPMatrix;
use crate::precision::{format_rational_decimal, parse_decimal_rational, PrecisionError};

pub use assemble::{assemble, assemble_d2, assemble_d4};
pub use operators::{
    bc_rows, d2_entry, d2_matrix, d4_entry, d4_matrix, mult_z, mult_z2, mult_z2_entry, mult_z_entry, ExactMatrix,
};

/// Smallest truncation for which the boundary rows fit.
pub const MIN_TRUNCATION: usize = 4;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChebError {
    #[error("truncation N = {0} is below the minimum of 4")]
    TruncationTooSmall(usize),
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: String },
    #[error("unknown {kind} {value:?}")]
    Unknown { kind: &'static str, value: String },
    #[error(transparent)]
    Precision(#[from] PrecisionError),
}

/// Base flow `U(z)` on `z ∈ (−1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlowProfile {
    /// `U = 1 − z²`, `U″ = −2`.
    Poiseuille,
    /// `U = z`, `U″ = 0`.
    Couette,
}

impl FlowProfile {
    pub fn name(self) -> &'static str {
        match self {
            FlowProfile::Poiseuille => "poiseuille",
            FlowProfile::Couette => "couette",
        }
    }
}

impl fmt::Display for FlowProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FlowProfile {
    type Err = ChebError;

    fn from_str(s: &str) -> Result<Self, ChebError> {
        match s.to_ascii_lowercase().as_str() {
            "poiseuille" => Ok(FlowProfile::Poiseuille),
            "couette" => Ok(FlowProfile::Couette),
            _ => Err(ChebError::Unknown {
                kind: "flow",
                value: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    D2,
    D4,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::D2 => "D2",
            Method::D4 => "D4",
        }
    }

    /// Pencil order for truncation `n`.
    pub fn order(self, n: usize) -> usize {
        match self {
            Method::D2 => 2 * (n + 3),
            Method::D4 => n + 5,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = ChebError;

    fn from_str(s: &str) -> Result<Self, ChebError> {
        match s.to_ascii_uppercase().as_str() {
            "D2" => Ok(Method::D2),
            "D4" => Ok(Method::D4),
            _ => Err(ChebError::Unknown {
                kind: "method",
                value: s.to_string(),
            }),
        }
    }
}

/// Reynolds number and wavenumber, held as exact rationals so that matrix
/// entries are rounded only once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OSParams {
    re: Rational,
    a: Rational,
}

impl OSParams {
    pub fn new(re: Rational, a: Rational) -> Result<Self, ChebError> {
        if re <= 0 {
            return Err(ChebError::NonPositive {
                name: "Reynolds number",
                value: re.to_string(),
            });
        }
        if a <= 0 {
            return Err(ChebError::NonPositive {
                name: "wavenumber",
                value: a.to_string(),
            });
        }
        Ok(OSParams { re, a })
    }

    /// Parses decimal literals such as `1e5` and `1.02` exactly.
    pub fn parse(re: &str, a: &str) -> Result<Self, ChebError> {
        Self::new(parse_decimal_rational(re)?, parse_decimal_rational(a)?)
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Decimal text of `Re` (exact when it has a terminating expansion).
    pub fn re_text(&self) -> String {
        rational_text(&self.re)
    }

    pub fn a_text(&self) -> String {
        rational_text(&self.a)
    }
}

fn rational_text(q: &Rational) -> String {
    format_rational_decimal(q).unwrap_or_else(|| q.to_f64().to_string())
}

/// An assembled pencil together with what it discretizes.
#[derive(Debug, Clone)]
pub struct TauSystem {
    pub a: MPMatrix,
    pub b: MPMatrix,
    pub n: usize,
    pub method: Method,
    pub flow: FlowProfile,
    pub params: OSParams,
}

impl TauSystem {
    pub fn order(&self) -> usize {
        self.a.rows()
    }

    /// Writes `A` and `B` as decimal CSV files into `dir`.
    pub fn dump_csv(&self, dir: &std::path::Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        let stem = format!("{}_{}_N{}_P{}", self.flow, self.method, self.n, self.a.context().bits());
        std::fs::write(dir.join(format!("{stem}_A.csv")), self.a.to_csv())?;
        std::fs::write(dir.join(format!("{stem}_B.csv")), self.b.to_csv())
    }
}
