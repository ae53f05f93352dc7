//! Quantised pencils L(X, Y) = X⊗H + Y⊗K and their exact spectral
//! certification: squarefree multiplicity tables, Gershgorin disc
//! separation, elementary-symmetric-polynomial comparison, parameter
//! sweeps, and the random quantisation probe.

use crate::charpoly::char_poly;
use crate::error::{Error, Result};
use crate::family::{build_pencil, FamilyParams, PencilPair};
use crate::matrix::ExactMatrix;
use crate::poly::{RationalPolynomial, SquarefreeDecomposition};
use crate::scalar::{rat, rat_int, GaussianRational, Rational};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// X⊗H + Y⊗K for hermitian X, Y of equal order.
pub fn quantize(x: &ExactMatrix, y: &ExactMatrix, pencil: &PencilPair) -> Result<ExactMatrix> {
    if !x.is_hermitian() || !y.is_hermitian() {
        return Err(Error::NotHermitian("quantisation coefficients X, Y".into()));
    }
    if x.rows() != y.rows() {
        return Err(Error::Dimension(format!(
            "X is {}x{} but Y is {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    Ok(&x.kronecker(pencil.h()) + &y.kronecker(pencil.k()))
}

/// The quantisation pair from the b = 0 analysis:
/// X = [[1,0],[0,0]], Y = [[0,q⁻²],[q⁻²,1]].
pub fn standard_quantisation_pair(q: &Rational) -> (ExactMatrix, ExactMatrix) {
    let x = ExactMatrix::from_int_rows(&[&[1, 0], &[0, 0]]);
    let qis = GaussianRational::from_rational(Rational::one() / (q * q));
    let mut y = ExactMatrix::zero(2, 2);
    y.set(0, 1, qis.clone());
    y.set(1, 0, qis);
    y.set(1, 1, GaussianRational::one());
    (x, y)
}

/// Exact multiplicity structure of a hermitian matrix's spectrum.
#[derive(Clone, Debug)]
pub struct SpectralCertificate {
    pub char_poly: RationalPolynomial,
    pub decomposition: SquarefreeDecomposition,
    /// Degree of the multiplicity-1 factor.
    pub simple_count: usize,
    /// Every eigenvalue has even multiplicity ⟺ poly_sqrt(char) exists.
    pub all_even: bool,
    pub distinct_count: usize,
}

pub fn certify_spectrum(m: &ExactMatrix) -> Result<SpectralCertificate> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian("spectrum certification".into()));
    }
    let cp = char_poly(m)?;
    let decomposition = cp.squarefree_decompose()?;
    Ok(SpectralCertificate {
        simple_count: decomposition.simple_root_count(),
        all_even: decomposition.all_multiplicities_even(),
        distinct_count: decomposition.distinct_root_count(),
        char_poly: cp,
        decomposition,
    })
}

/// deg gcd(char L₁, char L₂) for hermitian blocks with squarefree char
/// polys; blockdiag(L₁, L₂) then has exactly 2·(order − gcd degree)
/// simple eigenvalues.
pub fn shared_eigenvalue_bound(l1: &ExactMatrix, l2: &ExactMatrix) -> Result<usize> {
    if !l1.is_hermitian() || !l2.is_hermitian() {
        return Err(Error::NotHermitian("shared eigenvalue bound".into()));
    }
    if l1.rows() != l2.rows() {
        return Err(Error::Dimension("blocks of unequal order".into()));
    }
    let c1 = char_poly(l1)?;
    let c2 = char_poly(l2)?;
    for (name, c) in [("L1", &c1), ("L2", &c2)] {
        if !c.squarefree_decompose()?.multiplicity_table().iter().all(|&m| m == 1) {
            return Err(Error::InvalidParameter(format!("char poly of {name} is not squarefree")));
        }
    }
    Ok(RationalPolynomial::gcd(&c1, &c2)?.degree().unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GershgorinDisc {
    pub center: Rational,
    pub radius: Rational,
}

#[derive(Clone, Debug)]
pub struct GershgorinReport {
    pub discs: Vec<GershgorinDisc>,
    /// Exact pairwise disjointness of the real intervals.
    pub all_disjoint: bool,
    /// Smallest |cᵢ−cⱼ| − (rᵢ+rⱼ) over pairs; None for fewer than 2 discs.
    pub min_gap: Option<Rational>,
}

/// Gershgorin discs with deleted absolute row sums, all exact. Radii
/// need every off-diagonal modulus to be rational; entries with
/// irrational modulus are refused.
pub fn gershgorin(m: &ExactMatrix) -> Result<GershgorinReport> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian("gershgorin".into()));
    }
    let n = m.rows();
    let mut discs = Vec::with_capacity(n);
    for i in 0..n {
        let center = m.at(i, i).re().clone();
        let mut radius = Rational::zero();
        for j in 0..n {
            if i == j {
                continue;
            }
            let e = m.at(i, j);
            if e.is_zero() {
                continue;
            }
            radius += e.modulus().ok_or(Error::IrrationalModulus { row: i, col: j })?;
        }
        discs.push(GershgorinDisc { center, radius });
    }
    let mut min_gap: Option<Rational> = None;
    for (a, b) in discs.iter().tuple_combinations() {
        let gap = (&a.center - &b.center).abs() - (&a.radius + &b.radius);
        if min_gap.as_ref().map_or(true, |g| gap < *g) {
            min_gap = Some(gap);
        }
    }
    let all_disjoint = min_gap.as_ref().map_or(true, |g| g.is_positive());
    Ok(GershgorinReport { discs, all_disjoint, min_gap })
}

/// One row of the elementary-symmetric-polynomial comparison.
#[derive(Clone, Debug)]
pub struct SymPolyRow {
    pub k: usize,
    pub e_l1: Rational,
    pub e_l2: Rational,
    pub difference: Rational,
}

#[derive(Clone, Debug)]
pub struct SymPolyComparison {
    pub rows: Vec<SymPolyRow>,
}

/// eₖ(L₁) vs eₖ(L₂) for k ≤ kmax, from char-poly coefficients; for
/// k ≤ 4 each value is recomputed as a principal-minor sum and the two
/// paths must agree exactly.
pub fn sym_poly_compare(l1: &ExactMatrix, l2: &ExactMatrix, kmax: usize) -> Result<SymPolyComparison> {
    if l1.rows() != l2.rows() || !l1.is_square() || !l2.is_square() {
        return Err(Error::Dimension("sym poly comparison needs equal square orders".into()));
    }
    let d = l1.rows();
    if kmax > d {
        return Err(Error::InvalidParameter(format!("kmax {kmax} exceeds order {d}")));
    }
    let c1 = char_poly(l1)?;
    let c2 = char_poly(l2)?;
    let mut rows = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        // char(M) = λ^d + c_{d-1}λ^{d-1} + …; e_k = (−1)^k c_{d−k}
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        let e1 = &sign * &c1.coeff(d - k);
        let e2 = &sign * &c2.coeff(d - k);
        if k <= 4 {
            for (m, e) in [(l1, &e1), (l2, &e2)] {
                let via_minors = elementary_symmetric_via_minors(m, k)?;
                if via_minors != *e {
                    return Err(Error::InternalFault(format!(
                        "e_{k} coefficient path {} disagrees with minor-sum path {}",
                        crate::scalar::format_rational(e),
                        crate::scalar::format_rational(&via_minors)
                    )));
                }
            }
        }
        rows.push(SymPolyRow { difference: &e1 - &e2, k, e_l1: e1, e_l2: e2 });
    }
    Ok(SymPolyComparison { rows })
}

/// eₖ as the sum of all principal k×k minors.
pub fn elementary_symmetric_via_minors(m: &ExactMatrix, k: usize) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let mut acc = GaussianRational::zero();
    for anchors in (0..m.rows()).combinations(k) {
        acc += &m.principal_submatrix(&anchors)?.det()?;
    }
    if !acc.is_real() {
        return Err(Error::NonrealCoefficient);
    }
    Ok(acc.re().clone())
}

/// One row of a b sweep; failures are recorded, not propagated.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub b: Rational,
    pub simple_count: Option<usize>,
    pub all_even_unquantized: Option<bool>,
    pub error: Option<String>,
}

/// For each b: certify X⊗H₍b₎ + Y⊗K and record the simple-eigenvalue
/// count, plus the exact even-multiplicity check of the unquantised
/// pencil at a fixed probe point x = 1, y = 2. Rows run in parallel and
/// keep their input order.
pub fn b_sweep(n: usize, bs: &[Rational], x: &ExactMatrix, y: &ExactMatrix) -> Result<Vec<SweepRow>> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("sweep needs n >= 4, got {n}")));
    }
    let rows = bs
        .par_iter()
        .map(|b| {
            let run = || -> Result<(usize, bool)> {
                let params = FamilyParams::new(n, b.clone())?;
                let pencil = build_pencil(&params)?;
                let quantised = quantize(x, y, &pencil)?;
                let cert = certify_spectrum(&quantised)?;
                let probe = pencil.evaluate(&rat_int(1), &rat_int(2));
                let unquantised_even = char_poly(&probe)?.poly_sqrt().is_some();
                Ok((cert.simple_count, unquantised_even))
            };
            match run() {
                Ok((simple, even)) => SweepRow {
                    b: b.clone(),
                    simple_count: Some(simple),
                    all_even_unquantized: Some(even),
                    error: None,
                },
                Err(e) => SweepRow {
                    b: b.clone(),
                    simple_count: None,
                    all_even_unquantized: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    Ok(rows)
}

/// The default sweep sample: 20 rationals of mixed height, including the
/// near-zero pair ±1/1000. Rational sampling is evidence for the
/// almost-all-b statement, not a proof, and is reported as such.
pub fn default_b_samples() -> Vec<Rational> {
    [
        (1, 1),
        (-1, 1),
        (2, 1),
        (-2, 1),
        (3, 1),
        (-3, 1),
        (1, 2),
        (-1, 2),
        (1, 3),
        (-1, 3),
        (7, 5),
        (-7, 5),
        (22, 7),
        (-22, 7),
        (1, 1000),
        (-1, 1000),
        (355, 113),
        (-355, 113),
        (101, 100),
        (-101, 100),
    ]
    .iter()
    .map(|&(n, d)| rat(n, d))
    .collect()
}

#[derive(Clone, Debug)]
pub struct ProbeTrial {
    pub index: usize,
    pub x: ExactMatrix,
    pub y: ExactMatrix,
    pub square: bool,
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub trials: Vec<ProbeTrial>,
    /// Fraction of trials whose quantised char poly is NOT a perfect square.
    pub broken_fraction: Rational,
}

/// Sample random hermitian 2×2 pairs (X, Y) without a common eigenspace
/// (entry numerators and denominators bounded by 10) and report how often
/// the quantised characteristic polynomial stops being a perfect square.
/// Trial t uses an independent stream seeded from (seed, t), so rows are
/// reproducible and order-independent.
pub fn random_quantisation_probe(pencil: &PencilPair, trials: usize, seed: u64) -> Result<ProbeReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("probe needs at least one trial".into()));
    }
    let rows: Result<Vec<ProbeTrial>> = (0..trials)
        .into_par_iter()
        .map(|index| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let (x, y) = sample_hermitian_pair(&mut rng);
            let quantised = quantize(&x, &y, pencil)?;
            let square = char_poly(&quantised)?.poly_sqrt().is_some();
            Ok(ProbeTrial { index, x, y, square })
        })
        .collect();
    let rows = rows?;
    let broken = rows.iter().filter(|t| !t.square).count();
    Ok(ProbeReport {
        trials: rows,
        broken_fraction: Rational::new(broken.into(), trials.into()),
    })
}

fn sample_hermitian_pair(rng: &mut ChaCha8Rng) -> (ExactMatrix, ExactMatrix) {
    loop {
        let x = sample_hermitian_2x2(rng);
        let y = sample_hermitian_2x2(rng);
        // a 2×2 hermitian pair shares an eigenvector iff one is scalar or
        // they commute
        if is_scalar(&x) || is_scalar(&y) {
            continue;
        }
        if ExactMatrix::commutator(&x, &y).is_zero() {
            continue;
        }
        return (x, y);
    }
}

fn sample_hermitian_2x2(rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut small = |allow_imag: bool| -> GaussianRational {
        let num = rng.gen_range(-10i64..=10);
        let den = rng.gen_range(1i64..=10);
        let re = rat(num, den);
        if allow_imag {
            let inum = rng.gen_range(-10i64..=10);
            let iden = rng.gen_range(1i64..=10);
            GaussianRational::new(re, rat(inum, iden))
        } else {
            GaussianRational::from_rational(re)
        }
    };
    let d1 = small(false);
    let d2 = small(false);
    let off = small(true);
    let mut m = ExactMatrix::zero(2, 2);
    m.set(0, 0, d1);
    m.set(1, 1, d2);
    m.set(0, 1, off.clone());
    m.set(1, 0, off.conj());
    m
}

fn is_scalar(m: &ExactMatrix) -> bool {
    let c = m.at(0, 0);
    m.at(1, 1) == c && m.at(0, 1).is_zero() && m.at(1, 0).is_zero()
}
