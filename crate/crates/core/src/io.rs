//! Exchange formats. Matrices travel as
//! `{"rows": r, "cols": c, "entries": [[re_num, re_den, im_num, im_den], …]}`
//! row-major with every integer a decimal string; polynomials as
//! `{"coeffs": [[num, den], …]}` ascending. No floats, ever.

use crate::error::{Error, Result};
use crate::family::{PencilPair, Provenance};
use crate::matrix::ExactMatrix;
use crate::poly::RationalPolynomial;
use crate::scalar::{GaussianRational, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    rows: usize,
    cols: usize,
    entries: Vec<[String; 4]>,
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    coeffs: Vec<[String; 2]>,
}

pub fn matrix_to_json(m: &ExactMatrix) -> serde_json::Value {
    let entries = m
        .entries()
        .iter()
        .map(|e| {
            [
                e.re().numer().to_string(),
                e.re().denom().to_string(),
                e.im().numer().to_string(),
                e.im().denom().to_string(),
            ]
        })
        .collect();
    serde_json::to_value(MatrixWire { rows: m.rows(), cols: m.cols(), entries }).expect("matrix wire")
}

pub fn matrix_from_json(v: &serde_json::Value) -> Result<ExactMatrix> {
    let wire: MatrixWire =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("matrix json: {e}")))?;
    if wire.entries.len() != wire.rows * wire.cols {
        return Err(Error::Parse(format!(
            "matrix json claims {}x{} but has {} entries",
            wire.rows,
            wire.cols,
            wire.entries.len()
        )));
    }
    let mut entries = Vec::with_capacity(wire.entries.len());
    for quad in &wire.entries {
        entries.push(GaussianRational::new(
            parse_ratio(&quad[0], &quad[1])?,
            parse_ratio(&quad[2], &quad[3])?,
        ));
    }
    ExactMatrix::new(wire.rows, wire.cols, entries)
}

pub fn poly_to_json(p: &RationalPolynomial) -> serde_json::Value {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| [c.numer().to_string(), c.denom().to_string()])
        .collect();
    serde_json::to_value(PolyWire { coeffs }).expect("poly wire")
}

pub fn poly_from_json(v: &serde_json::Value) -> Result<RationalPolynomial> {
    let wire: PolyWire =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("poly json: {e}")))?;
    let mut coeffs = Vec::with_capacity(wire.coeffs.len());
    for pair in &wire.coeffs {
        coeffs.push(parse_ratio(&pair[0], &pair[1])?);
    }
    Ok(RationalPolynomial::from_coeffs(coeffs))
}

/// A pencil file bundles both matrices plus provenance.
pub fn pencil_to_json(p: &PencilPair) -> serde_json::Value {
    let provenance = match p.provenance() {
        Provenance::Family { n, b, diagnostic } => serde_json::json!({
            "family": {
                "n": n,
                "b": crate::scalar::format_rational(b),
                "diagnostic": diagnostic,
            }
        }),
        Provenance::Laffey => serde_json::json!("laffey"),
        Provenance::Lss { params } => {
            let map: serde_json::Map<String, serde_json::Value> = params
                .iter()
                .map(|(k, v)| (k.clone(), crate::scalar::format_rational(v).into()))
                .collect();
            serde_json::json!({ "lss": map })
        }
    };
    serde_json::json!({
        "h": matrix_to_json(p.h()),
        "k": matrix_to_json(p.k()),
        "provenance": provenance,
    })
}

pub fn pencil_from_json(v: &serde_json::Value) -> Result<PencilPair> {
    let h = matrix_from_json(v.get("h").ok_or_else(|| Error::Parse("pencil json lacks \"h\"".into()))?)?;
    let k = matrix_from_json(v.get("k").ok_or_else(|| Error::Parse("pencil json lacks \"k\"".into()))?)?;
    let provenance = match v.get("provenance") {
        Some(p) if p.as_str() == Some("laffey") => Provenance::Laffey,
        Some(p) => {
            if let Some(fam) = p.get("family") {
                let n = fam
                    .get("n")
                    .and_then(|x| x.as_u64())
                    .ok_or_else(|| Error::Parse("family provenance lacks n".into()))? as usize;
                let b = crate::scalar::parse_rational(
                    fam.get("b")
                        .and_then(|x| x.as_str())
                        .ok_or_else(|| Error::Parse("family provenance lacks b".into()))?,
                )?;
                let diagnostic = fam.get("diagnostic").and_then(|x| x.as_bool()).unwrap_or(b.is_zero());
                Provenance::Family { n, b, diagnostic }
            } else if let Some(lss) = p.get("lss").and_then(|x| x.as_object()) {
                let mut params = Vec::new();
                for (key, val) in lss {
                    let s = val.as_str().ok_or_else(|| Error::Parse("lss provenance values must be strings".into()))?;
                    params.push((key.clone(), crate::scalar::parse_rational(s)?));
                }
                Provenance::Lss { params }
            } else {
                return Err(Error::Parse("unknown provenance".into()));
            }
        }
        None => return Err(Error::Parse("pencil json lacks provenance".into())),
    };
    PencilPair::new(h, k, provenance)
}

fn parse_ratio(num: &str, den: &str) -> Result<Rational> {
    let n = BigInt::from_str(num).map_err(|e| Error::Parse(format!("bad integer {num:?}: {e}")))?;
    let d = BigInt::from_str(den).map_err(|e| Error::Parse(format!("bad integer {den:?}: {e}")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}
