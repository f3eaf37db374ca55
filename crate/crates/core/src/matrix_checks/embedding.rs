use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Classical families realised as matrix algebras inside `sl(n, C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassicalFamily {
    B,
    C,
    D,
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassicalFamily::B => "B",
            ClassicalFamily::C => "C",
            ClassicalFamily::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for ClassicalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "B" => Ok(ClassicalFamily::B),
            "C" => Ok(ClassicalFamily::C),
            "D" => Ok(ClassicalFamily::D),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EmbeddingReport {
    pub family: ClassicalFamily,
    pub l: usize,
    /// `2l` or `2l + 1`.
    pub size: usize,
    /// Diagonal of the Cartan element, which is its spectrum.
    pub eigenvalues: Vec<f64>,
    pub trace: f64,
    pub regular: bool,
}

/// Assembles `diag(L, -L)` (C, D) or `diag(0, L, -L)` (B) with
/// `L = diag(lambdas)` and reports whether its eigenvalues are pairwise
/// distinct, i.e. whether it is a regular real element of `sl(n, C)`.
pub fn embedding_regularity(
    family: ClassicalFamily,
    l: usize,
    lambdas: &[f64],
) -> Result<EmbeddingReport> {
    if l == 0 || lambdas.len() != l {
        return Err(Error::Precondition(format!(
            "expected {l} eigenvalue parameters, got {}",
            lambdas.len()
        )));
    }
    for (a, x) in lambdas.iter().enumerate() {
        if lambdas[a + 1..].contains(x) {
            return Err(Error::Precondition(format!(
                "duplicate entry {x} in lambdas"
            )));
        }
    }

    let mut eigenvalues = Vec::with_capacity(2 * l + 1);
    if family == ClassicalFamily::B {
        eigenvalues.push(0.0);
    }
    eigenvalues.extend_from_slice(lambdas);
    eigenvalues.extend(lambdas.iter().map(|x| -x));

    let regular = eigenvalues
        .iter()
        .enumerate()
        .all(|(a, x)| !eigenvalues[a + 1..].contains(x));
    Ok(EmbeddingReport {
        family,
        l,
        size: eigenvalues.len(),
        trace: eigenvalues.iter().sum(),
        eigenvalues,
        regular,
    })
}
