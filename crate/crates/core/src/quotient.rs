//! Rank certification for polynomial matrices at the roots of a modulus.
//!
//! `full_column_rank_at_roots` decides whether a matrix over ℚ[λ] keeps
//! full column rank when λ is specialised to ANY root of a squarefree
//! modulus f — linear algebra over ℚ[λ]/(f) without algebraic numbers.
//! Elimination is fraction-free; a pivot is admissible when it is
//! coprime to the modulus. When every candidate pivot shares a proper
//! factor with f, the modulus splits and both branches are re-examined,
//! so reducible factors are handled by refinement rather than failure.

use crate::error::Result;
use crate::poly::RationalPolynomial;

/// True iff the matrix (rows of equal length, entries in ℚ[λ]) has full
/// column rank at every complex root of the squarefree modulus.
pub fn full_column_rank_at_roots(
    matrix: &[Vec<RationalPolynomial>],
    modulus: &RationalPolynomial,
) -> Result<bool> {
    let ncols = matrix.first().map_or(0, |r| r.len());
    if ncols == 0 {
        return Ok(true);
    }
    if matrix.len() < ncols {
        return Ok(false);
    }
    let mut pending = vec![(matrix.to_vec(), modulus.monic())];
    while let Some((m, f)) = pending.pop() {
        if f.degree() == Some(0) {
            continue; // no roots to certify
        }
        match eliminate(m, &f)? {
            Outcome::FullRank => {}
            Outcome::Deficient => return Ok(false),
            Outcome::Split { matrix, factor } => {
                let cofactor = f.exact_div(&factor)?;
                pending.push((matrix.clone(), factor));
                pending.push((matrix, cofactor));
            }
        }
    }
    Ok(true)
}

enum Outcome {
    FullRank,
    Deficient,
    Split { matrix: Vec<Vec<RationalPolynomial>>, factor: RationalPolynomial },
}

/// One fraction-free elimination pass under modulus f. Entries stay
/// polynomials of bounded degree (minors of the input); only the pivot
/// choice consults f.
fn eliminate(mut m: Vec<Vec<RationalPolynomial>>, f: &RationalPolynomial) -> Result<Outcome> {
    let ncols = m[0].len();
    let nrows = m.len();
    let mut prev = RationalPolynomial::one();
    for col in 0..ncols {
        // prefer a pivot invertible mod f; remember any proper splitter
        let mut pivot_row = None;
        let mut splitter = None;
        for r in col..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            let g = RationalPolynomial::gcd(&m[r][col], f)?;
            match g.degree() {
                Some(0) => {
                    pivot_row = Some(r);
                    break;
                }
                Some(d) if d < f.degree().unwrap_or(0) && splitter.is_none() => {
                    splitter = Some(g);
                }
                _ => {} // entry divisible by f: vanishes at every root
            }
        }
        let Some(r) = pivot_row else {
            if let Some(factor) = splitter {
                return Ok(Outcome::Split { matrix: m, factor });
            }
            // every remaining entry of this column vanishes at all roots
            // of f, so the column is dependent there
            return Ok(Outcome::Deficient);
        };
        m.swap(col, r);
        let pivot = m[col][col].clone();
        for i in 0..nrows {
            if i == col {
                continue;
            }
            // fraction-free update below the elimination front; rows
            // above keep their pivots
            if i > col {
                let factor = m[i][col].clone();
                for j in col..ncols {
                    let t = &(&pivot * &m[i][j]) - &(&factor * &m[col][j]);
                    m[i][j] = t.exact_div(&prev)?;
                }
            }
        }
        prev = pivot;
    }
    Ok(Outcome::FullRank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RationalPolynomial as Poly;

    fn c(v: i64) -> Poly {
        Poly::from_ints(&[v])
    }

    fn lin(c0: i64, c1: i64) -> Poly {
        Poly::from_ints(&[c0, c1])
    }

    #[test]
    fn identity_full_rank_everywhere() {
        let m = vec![
            vec![c(1), c(0)],
            vec![c(0), c(1)],
            vec![c(3), c(4)],
        ];
        let f = Poly::from_ints(&[-2, 0, 1]); // λ²−2, irreducible
        assert!(full_column_rank_at_roots(&m, &f).unwrap());
    }

    #[test]
    fn fewer_rows_than_columns() {
        let m = vec![vec![c(1), c(0)]];
        assert!(!full_column_rank_at_roots(&m, &lin(-1, 1)).unwrap());
    }

    #[test]
    fn rank_drops_at_a_root() {
        // column (λ−1, λ−1) is zero exactly at λ = 1
        let m = vec![vec![lin(-1, 1)], vec![lin(-1, 1)]];
        assert!(!full_column_rank_at_roots(&m, &lin(-1, 1)).unwrap());
        // but not at λ = 2
        assert!(full_column_rank_at_roots(&m, &lin(-2, 1)).unwrap());
    }

    #[test]
    fn reducible_modulus_splits() {
        // diag(λ−1, λ+1) is singular at both roots of λ²−1, full rank at λ = 3
        let m = vec![
            vec![lin(-1, 1), c(0)],
            vec![c(0), lin(1, 1)],
        ];
        let f = Poly::from_ints(&[-1, 0, 1]);
        assert!(!full_column_rank_at_roots(&m, &f).unwrap());
        assert!(full_column_rank_at_roots(&m, &lin(-3, 1)).unwrap());

        // mixed case: one column vanishes at λ = 1 only; modulus λ²−1
        // forces a split and the λ = 1 branch must fail
        let m = vec![
            vec![lin(-1, 1), c(1)],
            vec![lin(-1, 1), c(2)],
            vec![c(0), c(5)],
        ];
        assert!(!full_column_rank_at_roots(&m, &f).unwrap());
        // the λ = −1 branch alone is fine
        assert!(full_column_rank_at_roots(&m, &lin(1, 1)).unwrap());
    }

    #[test]
    fn constant_modulus_is_vacuous() {
        let m = vec![vec![c(0)]];
        assert!(full_column_rank_at_roots(&m, &c(5)).unwrap());
    }
}
