//! Parameter files and line-oriented vector files.
//!
//! Field elements are coefficient arrays in the power basis, lowest degree
//! first. A vector is written on one line as `[c0,c1,…],[c0,c1,…],…`.

use serde::{Deserialize, Serialize};

use crate::code::{CodeParams, TzCode};
use crate::decoder::DecodeOutcome;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::space::Basis;

/// Identifier of the generator behind seeded runs.
pub const RNG_NAME: &str = "chacha8-seed_from_u64-stream";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsFile {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub modulus: Vec<u32>,
    pub gamma: Vec<u32>,
    pub xi: Vec<u32>,
    pub lambda: Vec<Vec<u32>>,
    pub mu: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rng: Option<String>,
}

impl ParamsFile {
    pub fn from_code(code: &TzCode) -> Self {
        let f = code.field();
        let coeffs = |v: &[Elem]| v.iter().map(|e| e.coeffs().to_vec()).collect();
        Self {
            q: f.q(),
            n: f.n(),
            k: code.k(),
            modulus: f.modulus().to_vec(),
            gamma: code.gamma().coeffs().to_vec(),
            xi: code.xi().coeffs().to_vec(),
            lambda: coeffs(code.lambda().elems()),
            mu: coeffs(code.mu().elems()),
            rng: Some(RNG_NAME.into()),
        }
    }

    /// Rebuilds the code and checks that the stored `μ` is the one implied by
    /// the other parameters.
    pub fn to_code(&self) -> Result<TzCode> {
        let f = Field::with_modulus(self.q, self.n, &self.modulus)?;
        let elems = |v: &[Vec<u32>]| v.iter().map(|c| f.from_coeffs(c)).collect::<Result<Vec<_>>>();
        let params = CodeParams {
            lambda: Some(Basis::new(&f, elems(&self.lambda)?)?),
            gamma: Some(f.from_coeffs(&self.gamma)?),
            xi: Some(f.from_coeffs(&self.xi)?),
        };
        let mu = elems(&self.mu)?;
        let code = TzCode::build(f, self.k, params)?;
        if code.mu().elems() != &mu[..] {
            return Err(Error::InvalidParameter("mu is not the trace almost dual basis of lambda".into()));
        }
        Ok(code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn format_elem(e: &Elem) -> String {
    let parts: Vec<String> = e.coeffs().iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn format_vector(v: &[Elem]) -> String {
    v.iter().map(format_elem).collect::<Vec<_>>().join(",")
}

pub fn parse_vector(field: &Field, line: &str) -> Result<Vec<Elem>> {
    let line = line.trim();
    if line.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = line;
    loop {
        rest = rest.trim_start();
        let body = rest.strip_prefix('[').ok_or_else(|| Error::Parse(format!("expected '[' in {line:?}")))?;
        let close = body.find(']').ok_or_else(|| Error::Parse(format!("unclosed '[' in {line:?}")))?;
        let coeffs = body[..close]
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        out.push(field.from_coeffs(&coeffs)?);
        rest = body[close + 1..].trim_start();
        if rest.is_empty() {
            return Ok(out);
        }
        rest =
            rest.strip_prefix(',').ok_or_else(|| Error::Parse(format!("expected ',' between elements in {line:?}")))?;
    }
}

/// One vector per nonblank line.
pub fn parse_vectors(field: &Field, text: &str) -> Result<Vec<Vec<Elem>>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| parse_vector(field, l)).collect()
}

/// The codeword of a successful decode, or `FAIL <reason>`.
pub fn format_outcome(outcome: &DecodeOutcome) -> String {
    match outcome {
        DecodeOutcome::Success { codeword, .. } => format_vector(codeword),
        DecodeOutcome::Failure(reason) => format!("FAIL {reason}"),
    }
}
