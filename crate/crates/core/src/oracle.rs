//! Floating-point eigenvalue oracle. Cross-check only: the Jacobi
//! eigensolver here validates exact multiplicity tables at a stated
//! tolerance and certifies nothing by itself.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::poly::SquarefreeDecomposition;
use num_traits::ToPrimitive;

/// Relative clustering tolerance used throughout the cross-checks.
pub const ORACLE_REL_TOL: f64 = 1e-8;

/// Eigenvalues of a hermitian matrix in f64, ascending. Real input runs
/// straight through cyclic Jacobi; complex hermitian input is embedded
/// as the real symmetric [[A, −B],[B, A]], whose spectrum is the
/// original with every multiplicity doubled, and de-duplicated.
pub fn hermitian_eigenvalues_f64(m: &ExactMatrix) -> Result<Vec<f64>> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian("float oracle".into()));
    }
    let n = m.rows();
    if m.is_real() {
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = m.at(i, j).re().to_f64().ok_or_else(overflow)?;
            }
        }
        return Ok(jacobi(a, n));
    }
    let d = 2 * n;
    let mut a = vec![0.0; d * d];
    for i in 0..n {
        for j in 0..n {
            let re = m.at(i, j).re().to_f64().ok_or_else(overflow)?;
            let im = m.at(i, j).im().to_f64().ok_or_else(overflow)?;
            a[i * d + j] = re;
            a[(n + i) * d + (n + j)] = re;
            a[i * d + (n + j)] = -im;
            a[(n + i) * d + j] = im;
        }
    }
    let doubled = jacobi(a, d);
    // every eigenvalue appears twice; keep one of each pair
    Ok(doubled.into_iter().step_by(2).collect())
}

fn overflow() -> Error {
    Error::InternalFault("rational entry out of f64 range for the oracle".into())
}

/// Cyclic Jacobi for a dense symmetric matrix, returning ascending
/// eigenvalues.
fn jacobi(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    if n == 0 {
        return Vec::new();
    }
    let idx = |i: usize, j: usize| i * n + j;
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[idx(i, j)] * a[idx(i, j)];
            }
        }
        if off.sqrt() < 1e-14 * (1.0 + frobenius(&a)) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eigs
}

fn frobenius(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Cluster sorted eigenvalues at a relative tolerance and return the
/// cluster sizes, ascending.
pub fn cluster_multiplicities(eigs: &[f64], rel_tol: f64) -> Vec<usize> {
    let scale = eigs.iter().fold(1.0f64, |m, e| m.max(e.abs()));
    let mut sizes = Vec::new();
    let mut i = 0;
    while i < eigs.len() {
        let mut j = i + 1;
        while j < eigs.len() && (eigs[j] - eigs[j - 1]).abs() <= rel_tol * scale {
            j += 1;
        }
        sizes.push(j - i);
        i = j;
    }
    sizes.sort_unstable();
    sizes
}

/// Does the float-clustered multiplicity multiset agree with the exact
/// squarefree table?
pub fn multiplicities_agree(m: &ExactMatrix, decomposition: &SquarefreeDecomposition) -> Result<bool> {
    let eigs = hermitian_eigenvalues_f64(m)?;
    let clustered = cluster_multiplicities(&eigs, ORACLE_REL_TOL);
    Ok(clustered == decomposition.multiplicity_table())
}
