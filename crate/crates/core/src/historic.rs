//! The two historic counterexamples and their quantisations: Laffey's
//! 8×8 pair with the auxiliary-matrix/Lax-commutator certification, and
//! the Li–Spitkovsky–Shukla 6×6 family with the determinant/discriminant
//! route. Parameters are rational points on the defining circles, so
//! every value here is exact.

use crate::error::{Error, Result};
use crate::family::{PencilPair, Provenance};
use crate::matrix::ExactMatrix;
use crate::poly::RationalPolynomial;
use crate::quantizer::quantize;
use crate::quotient::full_column_rank_at_roots;
use crate::scalar::{rat, GaussianRational, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Laffey's 8×8 counterexample pair.
pub fn build_laffey() -> PencilPair {
    let h = ExactMatrix::from_int_rows(&[
        &[-122, 0, 12, 18, -30, 18, 26, 10],
        &[0, -122, -6, -12, -16, -28, 20, -16],
        &[12, -6, -218, 0, 44, 8, 24, 12],
        &[18, -12, 0, -218, -2, -34, -10, 22],
        &[-30, -16, 44, -2, -216, 0, -12, -8],
        &[18, -28, 8, -34, 0, -216, -8, 36],
        &[26, 20, 24, -10, -12, -8, -120, 0],
        &[10, -16, 12, 22, -8, 36, 0, -120],
    ]);
    let k = ExactMatrix::from_int_rows(&[
        &[-4, 0, 0, 0, 0, 0, 0, 0],
        &[0, -4, 0, 0, 0, 0, 0, 0],
        &[0, 0, 4, 0, 0, 0, 0, 0],
        &[0, 0, 0, 4, 0, 0, 0, 0],
        &[0, 0, 0, 0, -8, 0, 0, 0],
        &[0, 0, 0, 0, 0, -8, 0, 0],
        &[0, 0, 0, 0, 0, 0, 8, 0],
        &[0, 0, 0, 0, 0, 0, 0, 8],
    ]);
    PencilPair::new(h, k, Provenance::Laffey).expect("laffey pair is hermitian")
}

/// Laffey's quantisation X = [[1,0],[0,0]], Y = [[0,1],[1,0]], giving the
/// 16×16 block matrix [[H, K],[K, 0]].
pub fn quantize_laffey() -> ExactMatrix {
    let pencil = build_laffey();
    let x = ExactMatrix::from_int_rows(&[&[1, 0], &[0, 0]]);
    let y = ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
    quantize(&x, &y, &pencil).expect("laffey quantisation")
}

/// The auxiliary matrix P + λ⁻¹Q² attached to [[P, Q],[Q, 0]], kept in
/// the sparse form (P, Q²) so λ stays formal.
#[derive(Clone, Debug)]
pub struct AuxiliaryMatrix {
    base: ExactMatrix,
    correction: ExactMatrix, // Q²
}

impl AuxiliaryMatrix {
    /// Requires Q invertible (the transfer lemma's hypothesis).
    pub fn new(p: &ExactMatrix, q: &ExactMatrix) -> Result<Self> {
        if q.det()?.is_zero() {
            return Err(Error::Singular("auxiliary matrix needs invertible Q".into()));
        }
        if p.rows() != q.rows() || !p.is_square() || !q.is_square() {
            return Err(Error::Dimension("auxiliary matrix blocks must be square of equal order".into()));
        }
        Ok(Self { base: p.clone(), correction: q * q })
    }

    pub fn order(&self) -> usize {
        self.base.rows()
    }

    /// Entry (i, j) as the pair (constant part, coefficient of λ⁻¹).
    pub fn entry(&self, i: usize, j: usize) -> (GaussianRational, GaussianRational) {
        (self.base.at(i, j).clone(), self.correction.at(i, j).clone())
    }

    /// Evaluate at a nonzero rational λ.
    pub fn eval(&self, lambda: &Rational) -> Result<ExactMatrix> {
        if lambda.is_zero() {
            return Err(Error::InvalidParameter("auxiliary matrix undefined at λ = 0".into()));
        }
        let inv = GaussianRational::from_rational(Rational::one() / lambda);
        Ok(&self.base + &self.correction.scale(&inv))
    }

    /// λ·(P + λ⁻¹Q²) = λP + Q² as a matrix of degree ≤ 1 polynomials.
    pub fn times_lambda(&self) -> Vec<Vec<RationalPolynomial>> {
        let d = self.order();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        RationalPolynomial::from_coeffs(vec![
                            self.correction.at(i, j).re().clone(),
                            self.base.at(i, j).re().clone(),
                        ])
                    })
                    .collect()
            })
            .collect()
    }
}

/// The linear system [λ(P + λ⁻¹Q²), S] = 0 in the strictly-upper
/// unknowns of a skew-symmetric S, deduplicated.
#[derive(Clone, Debug)]
pub struct LaxSystem {
    /// 0-based (i, j) with i < j; C(d, 2) unknowns for order d.
    pub unknowns: Vec<(usize, usize)>,
    /// One row per distinct commutator entry, aligned with `unknowns`;
    /// coefficients are degree ≤ 1 in λ.
    pub equations: Vec<Vec<RationalPolynomial>>,
}

/// Build the Lax commutator system for real symmetric H and invertible
/// K: every distinct entry of [λH + K², S] as a linear form in the
/// s_{i,j}, normalized by clearing the common rational factor.
pub fn lax_commutator_system(h: &ExactMatrix, k: &ExactMatrix) -> Result<LaxSystem> {
    if !h.is_hermitian() || !h.is_real() || !k.is_real() {
        return Err(Error::NotHermitian("lax system needs real symmetric H, K".into()));
    }
    let aux = AuxiliaryMatrix::new(h, k)?;
    let c = aux.times_lambda(); // λH + K², symmetric, entries degree ≤ 1
    let d = aux.order();
    let unknowns: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let index_of = |i: usize, j: usize| -> (usize, bool) {
        // s_{ji} = −s_{ij} for i < j
        if i < j {
            (unknowns.iter().position(|&u| u == (i, j)).unwrap(), false)
        } else {
            (unknowns.iter().position(|&u| u == (j, i)).unwrap(), true)
        }
    };

    let mut seen: Vec<Vec<RationalPolynomial>> = Vec::new();
    for p in 0..d {
        for q in 0..d {
            // [C, S]_{pq} = Σ_k C_{pk} S_{kq} − S_{pk} C_{kq}
            let mut form = vec![RationalPolynomial::zero(); unknowns.len()];
            for t in 0..d {
                if t != q {
                    let (idx, flipped) = index_of(t, q);
                    let coeff = if flipped { -&c[p][t] } else { c[p][t].clone() };
                    form[idx] = &form[idx] + &coeff;
                }
                if t != p {
                    let (idx, flipped) = index_of(p, t);
                    let coeff = if flipped { c[t][q].clone() } else { -&c[t][q] };
                    form[idx] = &form[idx] + &coeff;
                }
            }
            if form.iter().all(|f| f.is_zero()) {
                continue;
            }
            normalize_form(&mut form);
            if !seen.contains(&form) {
                seen.push(form);
            }
        }
    }
    Ok(LaxSystem { unknowns, equations: seen })
}

/// Divide a linear form by the content of its rational coefficients and
/// fix the sign of the first nonzero coefficient positive, so duplicate
/// commutator entries compare equal.
fn normalize_form(form: &mut [RationalPolynomial]) {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for p in form.iter() {
        for c in p.coeffs() {
            if c.is_zero() {
                continue;
            }
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    if num_gcd.is_zero() {
        return;
    }
    let mut scale = Rational::new(den_lcm, num_gcd);
    let first = form
        .iter()
        .flat_map(|p| p.coeffs())
        .find(|c| !c.is_zero())
        .expect("nonzero form");
    if (first * &scale).is_negative() {
        scale = -scale;
    }
    for p in form.iter_mut() {
        *p = p.scale(&scale);
    }
}

/// Certify that S = 0 is the only skew-symmetric solution at every
/// eigenvalue: full column rank of the system over ℚ[λ]/(f) for each
/// squarefree factor f of char(L). Reducible factors are refined by
/// splitting inside the rank computation, which keeps the answer exact.
pub fn lax_rank_certify(sys: &LaxSystem, char_of_l: &RationalPolynomial) -> Result<bool> {
    let decomposition = char_of_l.squarefree_decompose()?;
    for (factor, _) in decomposition.parts() {
        if !full_column_rank_at_roots(&sys.equations, factor)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rational parameters of the LSS family: points on the three defining
/// circles with r standing for √(1−c²).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LssParams {
    pub x: Rational,
    pub y: Rational,
    pub xi: Rational,
    pub eta: Rational,
    pub c: Rational,
    pub r: Rational,
}

impl LssParams {
    pub fn new(x: Rational, y: Rational, xi: Rational, eta: Rational, c: Rational, r: Rational) -> Result<Self> {
        let one = Rational::one();
        let checks: [(&str, bool); 5] = [
            ("x² + y² = 1", &x * &x + &y * &y == one),
            ("ξ² + η² = 1", &xi * &xi + &eta * &eta == one),
            ("c² + r² = 1", &c * &c + &r * &r == one),
            ("0 < c < 1/2", c.is_positive() && c < rat(1, 2)),
            (
                "x, y, ξ, η, r > 0",
                x.is_positive() && y.is_positive() && xi.is_positive() && eta.is_positive() && r.is_positive(),
            ),
        ];
        for (identity, ok) in checks {
            if !ok {
                return Err(Error::InvalidParameter(format!("LSS params violate {identity}")));
            }
        }
        Ok(Self { x, y, xi, eta, c, r })
    }

    /// The fixed golden instantiation from Pythagorean triples:
    /// x = 3/5, y = 4/5, ξ = 5/13, η = 12/13, c = 7/25, r = 24/25.
    pub fn standard() -> Self {
        Self::new(rat(3, 5), rat(4, 5), rat(5, 13), rat(12, 13), rat(7, 25), rat(24, 25))
            .expect("standard instantiation satisfies the invariants")
    }

    fn provenance(&self) -> Provenance {
        Provenance::Lss {
            params: vec![
                ("x".into(), self.x.clone()),
                ("y".into(), self.y.clone()),
                ("xi".into(), self.xi.clone()),
                ("eta".into(), self.eta.clone()),
                ("c".into(), self.c.clone()),
                ("r".into(), self.r.clone()),
            ],
        }
    }
}

/// The strictly upper-triangular seed matrix A of the LSS pair.
fn lss_seed(p: &LssParams) -> ExactMatrix {
    let g = |r: Rational| GaussianRational::from_rational(r);
    let mut a = ExactMatrix::zero(6, 6);
    a.set(0, 1, g(p.x.clone()));
    a.set(0, 3, g(&p.c * &p.y));
    a.set(1, 2, g(p.y.clone()));
    a.set(3, 2, g(-(&p.c * &p.x)));
    a.set(3, 4, g(&p.r * &p.xi));
    a.set(4, 5, g(p.eta.clone()));
    a
}

/// H = A + Aᵀ (real symmetric) and K = −i(A − Aᵀ) (purely imaginary
/// hermitian), from 2A = H + iK.
pub fn build_lss(p: &LssParams) -> PencilPair {
    let a = lss_seed(p);
    let at = a.transpose();
    let h = &a + &at;
    let minus_i = -GaussianRational::i();
    let k = (&a - &at).scale(&minus_i);
    PencilPair::new(h, k, p.provenance()).expect("LSS pair is hermitian")
}

/// The 6×6 factor M(s) of the LSS quantisation, for rational s > 1.
/// L(s) = sX⊗H + Y⊗K with X = [[0,1],[1,0]], Y = [[0,i],[−i,0]] comes
/// out as [[0, M(s)],[M(s)ᵀ, 0]]; that identity is re-checked here.
pub fn lss_quantized_m(p: &LssParams, s: &Rational) -> Result<ExactMatrix> {
    if s <= &Rational::one() {
        return Err(Error::InvalidParameter("LSS quantisation needs s > 1".into()));
    }
    let sp = s + Rational::one();
    let sm = s - Rational::one();
    let g = |r: Rational| GaussianRational::from_rational(r);
    let mut m = ExactMatrix::zero(6, 6);
    m.set(0, 1, g(&sp * &p.x));
    m.set(0, 3, g(&p.c * &sp * &p.y));
    m.set(1, 0, g(&sm * &p.x));
    m.set(1, 2, g(&sp * &p.y));
    m.set(2, 1, g(&sm * &p.y));
    m.set(2, 3, g(-(&p.c * &sm * &p.x)));
    m.set(3, 0, g(&p.c * &sm * &p.y));
    m.set(3, 2, g(-(&p.c * &sp * &p.x)));
    m.set(3, 4, g(&p.r * &p.xi * &sp));
    m.set(4, 3, g(&p.r * &p.xi * &sm));
    m.set(4, 5, g(&p.eta * &sp));
    m.set(5, 4, g(&p.eta * &sm));

    // cross-check against the quantisation it came from
    let pair = build_lss(p);
    let x = ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).scale(&g(s.clone()));
    let mut y = ExactMatrix::zero(2, 2);
    y.set(0, 1, GaussianRational::i());
    y.set(1, 0, -GaussianRational::i());
    let l = &x.kronecker(pair.h()) + &y.kronecker(pair.k());
    let expected = ExactMatrix::from_blocks(&[
        vec![ExactMatrix::zero(6, 6), m.clone()],
        vec![m.transpose(), ExactMatrix::zero(6, 6)],
    ])?;
    if l != expected {
        return Err(Error::InternalFault("LSS quantisation does not match the anti-block form".into()));
    }
    Ok(m)
}

/// Closed form −c²η²(s−1)³(s+1)³(x²+y²)² for det M(s).
pub fn lss_det_closed_form(p: &LssParams, s: &Rational) -> Rational {
    let sp = s + Rational::one();
    let sm = s - Rational::one();
    let xy = &p.x * &p.x + &p.y * &p.y;
    -(&p.c * &p.c)
        * (&p.eta * &p.eta)
        * (&sm * &sm * &sm)
        * (&sp * &sp * &sp)
        * (&xy * &xy)
}

#[derive(Clone, Debug)]
pub struct LssScanRow {
    pub s: Rational,
    pub discriminant: Rational,
}

#[derive(Clone, Debug)]
pub struct LssScanReport {
    pub rows: Vec<LssScanRow>,
    pub any_nonzero: bool,
}

/// Discriminant of char(M(s)M(s)ᵀ) for s ∈ {2, 3, 4}. A nonzero
/// discriminant makes every eigenvalue of L(s) simple, because the
/// spectrum of L(s) is ± the singular values of M(s).
pub fn lss_discriminant_scan(p: &LssParams) -> Result<LssScanReport> {
    let mut rows = Vec::new();
    for s in [2i64, 3, 4] {
        let s = Rational::from_integer(s.into());
        let m = lss_quantized_m(p, &s)?;
        let gram = &m * &m.transpose();
        let disc = crate::charpoly::char_poly(&gram)?.discriminant()?;
        rows.push(LssScanRow { s, discriminant: disc });
    }
    let any_nonzero = rows.iter().any(|r| !r.discriminant.is_zero());
    Ok(LssScanReport { rows, any_nonzero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::char_poly;
    use crate::scalar::rat_int;

    #[test]
    fn laffey_displayed_entries() {
        let pencil = build_laffey();
        assert_eq!(pencil.h().at(0, 0), &GaussianRational::from_int(-122));
        assert_eq!(pencil.h().at(2, 4), &GaussianRational::from_int(44));
        assert_eq!(pencil.k().at(4, 4), &GaussianRational::from_int(-8));
        assert!(pencil.h().is_hermitian());
    }

    #[test]
    fn laffey_char_is_square_on_the_line() {
        let pencil = build_laffey();
        let m = pencil.evaluate(&rat_int(1), &rat_int(1));
        assert!(char_poly(&m).unwrap().poly_sqrt().is_some());
    }

    #[test]
    fn laffey_quantisation_block_structure() {
        let l = quantize_laffey();
        assert_eq!(l.rows(), 16);
        let pencil = build_laffey();
        assert_eq!(l.block(0, 0, 8), *pencil.h());
        assert_eq!(l.block(0, 1, 8), *pencil.k());
        assert_eq!(l.block(1, 0, 8), *pencil.k());
        assert!(l.block(1, 1, 8).is_zero());
        // det L = det(−K²) = 2⁴⁰, the product of the squared K diagonal
        let expected: BigInt = [4i64, 4, 4, 4, 8, 8, 8, 8]
            .iter()
            .map(|&v| BigInt::from(v))
            .product::<BigInt>()
            .pow(2);
        assert_eq!(expected, BigInt::from(2u8).pow(40));
        assert_eq!(l.det().unwrap(), GaussianRational::from_rational(Rational::from_integer(expected)));
    }

    #[test]
    fn auxiliary_matrix_entries_and_eval() {
        let pencil = build_laffey();
        let aux = AuxiliaryMatrix::new(pencil.h(), pencil.k()).unwrap();
        // (1,1) entry = −122 + 16/λ
        let (base, corr) = aux.entry(0, 0);
        assert_eq!(base, GaussianRational::from_int(-122));
        assert_eq!(corr, GaussianRational::from_int(16));
        let at_two = aux.eval(&rat_int(2)).unwrap();
        assert_eq!(at_two.at(0, 0), &GaussianRational::from_rational(rat(-114, 1)));
        assert!(aux.eval(&Rational::zero()).is_err());
        // K = 0 refused
        assert!(AuxiliaryMatrix::new(pencil.h(), &ExactMatrix::zero(8, 8)).is_err());
    }

    #[test]
    fn auxiliary_identity_blocks_transfer() {
        // P = 0, Q = I: eigenpairs of [[0,I],[I,0]] satisfy λ = 1/λ
        let aux = AuxiliaryMatrix::new(&ExactMatrix::zero(2, 2), &ExactMatrix::identity(2)).unwrap();
        for lambda in [rat_int(1), rat_int(-1)] {
            let shifted = &aux.eval(&lambda).unwrap()
                - &ExactMatrix::identity(2).scale(&GaussianRational::from_rational(lambda.clone()));
            assert!(shifted.det().unwrap().is_zero());
        }
    }

    #[test]
    fn lax_system_shape_for_laffey() {
        let pencil = build_laffey();
        let sys = lax_commutator_system(pencil.h(), pencil.k()).unwrap();
        assert_eq!(sys.unknowns.len(), 28);
        assert_eq!(sys.equations.len(), 36);
        for eq in &sys.equations {
            assert!(eq.iter().all(|p| p.degree().unwrap_or(0) <= 1));
        }
    }

    #[test]
    fn lax_sample_equation_matches_display() {
        // the (1,1) commutator entry is −4λ(6s₁₃ + 9s₁₄ − 15s₁₅ + 9s₁₆
        // + 13s₁₇ + 5s₁₈); after content normalization the coefficients
        // of (s₁₃, …, s₁₈) become ±(6, 9, −15, 9, 13, 5)·λ
        let pencil = build_laffey();
        let sys = lax_commutator_system(pencil.h(), pencil.k()).unwrap();
        let want: Vec<RationalPolynomial> = {
            let mut v = vec![RationalPolynomial::zero(); 28];
            for (col, coeff) in [(1usize, 6i64), (2, 9), (3, -15), (4, 9), (5, 13), (6, 5)] {
                // unknown order starts (0,1), (0,2), …; s₁ₖ is index k−2
                v[col] = RationalPolynomial::from_coeffs(vec![Rational::zero(), rat_int(coeff)]);
            }
            normalize_form(&mut v);
            v
        };
        assert!(sys.equations.contains(&want), "displayed equation not found");
    }

    #[test]
    fn lax_distinct_diagonal_forces_zero() {
        // H diagonal with distinct entries, K = I: the commutant of a
        // distinct-diagonal matrix is diagonal, so S = 0
        let h = ExactMatrix::diagonal(&[
            GaussianRational::from_int(1),
            GaussianRational::from_int(2),
            GaussianRational::from_int(5),
        ]);
        let sys = lax_commutator_system(&h, &ExactMatrix::identity(3)).unwrap();
        assert_eq!(sys.unknowns.len(), 3);
        assert_eq!(sys.equations.len(), 3);
        // any eigenvalue modulus: the system has full rank
        let f = RationalPolynomial::from_ints(&[-7, 1]);
        assert!(lax_rank_certify(&sys, &f).unwrap());
    }

    #[test]
    fn lax_repeated_eigenvalue_fails() {
        // H with a repeated eigenvalue commutes with a rotation in that
        // eigenplane: certification must refuse
        let h = ExactMatrix::diagonal(&[
            GaussianRational::from_int(1),
            GaussianRational::from_int(1),
            GaussianRational::from_int(5),
        ]);
        let sys = lax_commutator_system(&h, &ExactMatrix::identity(3)).unwrap();
        let l = ExactMatrix::from_blocks(&[
            vec![h.clone(), ExactMatrix::identity(3)],
            vec![ExactMatrix::identity(3), ExactMatrix::zero(3, 3)],
        ])
        .unwrap();
        let char_l = char_poly(&l).unwrap();
        assert!(!lax_rank_certify(&sys, &char_l).unwrap());
    }

    #[test]
    fn lss_standard_params_valid() {
        let p = LssParams::standard();
        assert_eq!(&p.x * &p.x + &p.y * &p.y, Rational::one());
        assert_eq!(&p.xi * &p.xi + &p.eta * &p.eta, Rational::one());
        assert_eq!(&p.c * &p.c + &p.r * &p.r, Rational::one());
        assert!(p.c < rat(1, 2));
    }

    #[test]
    fn lss_rejects_bad_params() {
        // c ≥ 1/2
        let err = LssParams::new(rat(3, 5), rat(4, 5), rat(5, 13), rat(12, 13), rat(3, 5), rat(4, 5));
        assert!(matches!(err, Err(Error::InvalidParameter(m)) if m.contains("c < 1/2")));
        // off the circle
        let err = LssParams::new(rat(1, 2), rat(1, 2), rat(5, 13), rat(12, 13), rat(7, 25), rat(24, 25));
        assert!(matches!(err, Err(Error::InvalidParameter(m)) if m.contains("x² + y²")));
    }

    #[test]
    fn lss_pair_displayed_entries() {
        let p = LssParams::standard();
        let pair = build_lss(&p);
        // H[1][2] = x, K[1][2] = −ix
        assert_eq!(pair.h().at(0, 1), &GaussianRational::from_rational(rat(3, 5)));
        assert_eq!(pair.k().at(0, 1), &GaussianRational::new(Rational::zero(), rat(-3, 5)));
        assert!(pair.h().is_real());
        assert!(pair.k().is_hermitian());
        assert!(pair.k().entries().iter().all(|e| e.re().is_zero()));
    }

    #[test]
    fn lss_m_entries_and_det() {
        let p = LssParams::standard();
        let s = rat_int(2);
        let m = lss_quantized_m(&p, &s).unwrap();
        // entry (1,2) = (s+1)x
        assert_eq!(m.at(0, 1), &GaussianRational::from_rational(rat(9, 5)));
        let det = m.det().unwrap();
        assert!(det.is_real());
        assert_eq!(det.re(), &lss_det_closed_form(&p, &s));
        // the worked value −(49/625)(144/169)·27
        assert_eq!(det.re(), &(-(rat(49, 625) * rat(144, 169) * rat_int(27))));
        assert!(lss_quantized_m(&p, &rat_int(1)).is_err());
    }

    #[test]
    fn lss_scan_standard() {
        let p = LssParams::standard();
        let report = lss_discriminant_scan(&p).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert!(report.any_nonzero);
        // det(M Mᵀ) = det(M)² > 0
        for s in [2i64, 3, 4] {
            let s = rat_int(s);
            let m = lss_quantized_m(&p, &s).unwrap();
            let gram = &m * &m.transpose();
            let dm = m.det().unwrap();
            assert_eq!(gram.det().unwrap(), &dm * &dm);
        }
    }
}
