//! Certification that hermitian generators span the full matrix algebra:
//! direct span closure over vectorized words, and the three-part
//! constructibility criteria on (H, K) pairs with block-diagonal K.
//!
//! The closure runs first over 𝔽_p[i] for a fixed 61-bit prime. Ranks can
//! only drop under reduction mod p, so a modular dimension of (order)²
//! certifies saturation exactly; anything less falls back to the full
//! rational computation. The reported dimension is always exact.

use crate::error::{Error, Result};
use crate::family::PencilPair;
use crate::matrix::ExactMatrix;
use crate::scalar::{GaussianRational, Rational};

/// Outcome of the span closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    /// Linear dimension of the unital algebra generated.
    pub dimension: usize,
    /// dimension = (order)².
    pub saturated: bool,
    /// Breadth-first closure rounds until no new dimension appeared.
    pub generations: usize,
}

/// Dimension of the unital algebra generated by square matrices of equal
/// order: seed with {I} ∪ generators, multiply the frontier by each
/// generator in breadth-first rounds, and row-reduce the vectorizations
/// until a round adds nothing. `cap` must be at least order² and guards
/// against runaway (which the dimension bound makes impossible).
pub fn generated_algebra_dim(generators: &[ExactMatrix], cap: usize) -> Result<AlgebraReport> {
    let Some(first) = generators.first() else {
        return Err(Error::InvalidParameter("no generators".into()));
    };
    let d = first.rows();
    for g in generators {
        if !g.is_square() || g.rows() != d {
            return Err(Error::Dimension("generators must be square of equal order".into()));
        }
    }
    if cap < d * d {
        return Err(Error::InvalidParameter(format!(
            "cap {cap} below the dimension bound {}",
            d * d
        )));
    }

    if let Some(report) = fp2::modular_closure(generators, d) {
        if report.saturated {
            return Ok(report);
        }
    }
    exact_closure(generators, d, cap)
}

fn exact_closure(generators: &[ExactMatrix], d: usize, cap: usize) -> Result<AlgebraReport> {
    let mut basis = VectorBasis::new();
    let mut frontier: Vec<ExactMatrix> = Vec::new();
    for m in std::iter::once(ExactMatrix::identity(d)).chain(generators.iter().cloned()) {
        if basis.insert(m.entries().to_vec()) {
            frontier.push(m);
        }
    }
    let mut generations = 0;
    while !frontier.is_empty() {
        generations += 1;
        let mut next = Vec::new();
        for m in &frontier {
            for g in generators {
                for candidate in [g * m, m * g] {
                    if basis.insert(candidate.entries().to_vec()) {
                        if basis.len() > cap {
                            return Err(Error::CapExceeded { cap, dim: basis.len() });
                        }
                        next.push(candidate);
                    }
                }
            }
        }
        if basis.len() == d * d {
            break;
        }
        frontier = next;
    }
    Ok(AlgebraReport { dimension: basis.len(), saturated: basis.len() == d * d, generations })
}

/// Exact row-reduced basis of vectorized matrices over ℚ(i). Insertion
/// reduces against existing pivots and either absorbs the vector (false)
/// or extends the basis (true).
struct VectorBasis {
    rows: Vec<(usize, Vec<GaussianRational>)>,
}

impl VectorBasis {
    fn new() -> Self {
        Self { rows: Vec::new() }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut v: Vec<GaussianRational>) -> bool {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x -= &(&factor * r);
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Span closure over 𝔽_p[i] with p = 2⁶¹ − 1 (p ≡ 3 mod 4, so i stays a
/// square root of −1 and the arithmetic lives in the field 𝔽_p²).
mod fp2 {
    use super::AlgebraReport;
    use crate::matrix::ExactMatrix;
    use crate::scalar::Rational;
    use num_bigint::BigInt;
    use num_traits::{Signed, ToPrimitive};

    const P: u64 = (1 << 61) - 1;

    #[derive(Copy, Clone, PartialEq, Eq)]
    pub(super) struct Fp2 {
        re: u64,
        im: u64,
    }

    impl Fp2 {
        const ZERO: Fp2 = Fp2 { re: 0, im: 0 };

        fn is_zero(self) -> bool {
            self.re == 0 && self.im == 0
        }

        fn add(self, o: Fp2) -> Fp2 {
            Fp2 { re: addm(self.re, o.re), im: addm(self.im, o.im) }
        }

        fn sub(self, o: Fp2) -> Fp2 {
            Fp2 { re: subm(self.re, o.re), im: subm(self.im, o.im) }
        }

        fn mul(self, o: Fp2) -> Fp2 {
            Fp2 {
                re: subm(mulm(self.re, o.re), mulm(self.im, o.im)),
                im: addm(mulm(self.re, o.im), mulm(self.im, o.re)),
            }
        }

        fn inv(self) -> Fp2 {
            // (a+bi)⁻¹ = (a−bi)/(a²+b²)
            let norm = addm(mulm(self.re, self.re), mulm(self.im, self.im));
            let ninv = powm(norm, P - 2);
            Fp2 { re: mulm(self.re, ninv), im: mulm(subm(0, self.im), ninv) }
        }
    }

    fn addm(a: u64, b: u64) -> u64 {
        let s = a + b; // both < P < 2^61, no overflow
        if s >= P {
            s - P
        } else {
            s
        }
    }

    fn subm(a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + P - b
        }
    }

    fn mulm(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn powm(mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulm(acc, base);
            }
            base = mulm(base, base);
            e >>= 1;
        }
        acc
    }

    fn rational_mod(r: &Rational) -> Option<u64> {
        let den = bigint_mod(r.denom());
        if den == 0 {
            return None; // p divides a denominator: modular image undefined
        }
        let num = bigint_mod(r.numer());
        Some(mulm(num, powm(den, P - 2)))
    }

    fn bigint_mod(x: &BigInt) -> u64 {
        let m = (x.abs() % BigInt::from(P)).to_u64().expect("residue fits u64");
        if x.is_negative() && m != 0 {
            P - m
        } else {
            m
        }
    }

    type ModMatrix = Vec<Fp2>; // row-major d×d

    fn convert(m: &ExactMatrix) -> Option<ModMatrix> {
        m.entries()
            .iter()
            .map(|e| {
                Some(Fp2 { re: rational_mod(e.re())?, im: rational_mod(e.im())? })
            })
            .collect()
    }

    fn mat_mul(a: &ModMatrix, b: &ModMatrix, d: usize) -> ModMatrix {
        let mut out = vec![Fp2::ZERO; d * d];
        for i in 0..d {
            for k in 0..d {
                let aik = a[i * d + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] = out[i * d + j].add(aik.mul(b[k * d + j]));
                }
            }
        }
        out
    }

    struct ModBasis {
        rows: Vec<(usize, Vec<Fp2>)>,
    }

    impl ModBasis {
        fn insert(&mut self, mut v: Vec<Fp2>) -> bool {
            for (pivot, row) in &self.rows {
                let f = v[*pivot];
                if !f.is_zero() {
                    for (x, r) in v.iter_mut().zip(row.iter()) {
                        *x = x.sub(f.mul(*r));
                    }
                }
            }
            let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
                return false;
            };
            let inv = v[pivot].inv();
            for x in v.iter_mut() {
                *x = x.mul(inv);
            }
            self.rows.push((pivot, v));
            true
        }
    }

    /// None when some denominator vanishes mod p; otherwise a report
    /// whose dimension is a lower bound for the exact one (and exact
    /// whenever it saturates).
    pub(super) fn modular_closure(generators: &[ExactMatrix], d: usize) -> Option<AlgebraReport> {
        let gens: Option<Vec<ModMatrix>> = generators.iter().map(convert).collect();
        let gens = gens?;
        let mut identity = vec![Fp2::ZERO; d * d];
        for i in 0..d {
            identity[i * d + i] = Fp2 { re: 1, im: 0 };
        }
        let mut basis = ModBasis { rows: Vec::new() };
        let mut frontier: Vec<ModMatrix> = Vec::new();
        for m in std::iter::once(identity).chain(gens.iter().cloned()) {
            if basis.insert(m.clone()) {
                frontier.push(m);
            }
        }
        let mut generations = 0;
        while !frontier.is_empty() {
            generations += 1;
            let mut next = Vec::new();
            for m in &frontier {
                for g in &gens {
                    for candidate in [mat_mul(g, m, d), mat_mul(m, g, d)] {
                        if basis.insert(candidate.clone()) {
                            next.push(candidate);
                        }
                    }
                }
            }
            if basis.rows.len() == d * d {
                break;
            }
            frontier = next;
        }
        Some(AlgebraReport {
            dimension: basis.rows.len(),
            saturated: basis.rows.len() == d * d,
            generations,
        })
    }
}

/// Result of the three constructibility criteria on a family-basis pencil
/// (K block-diagonal with 2×2 scalar blocks). Block rows/columns are
/// 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriteriaReport {
    /// K's eigenvalue multiplicities are all ≤ 2, equal values adjacent.
    pub cond1_multiplicity_ok: bool,
    /// First block row of H whose 2×2 blocks are all invertible.
    pub cond2_invertible_row: Option<usize>,
    /// First block pair (i, j) in that row with [HᵣᵢHᵣᵢ*, HᵣⱼHᵣⱼ*] ≠ 0.
    pub cond3_noncommuting_pair: Option<(usize, usize)>,
    /// b values at which an exactly singular block was met while scanning.
    pub excluded_b_values: Vec<Rational>,
}

impl CriteriaReport {
    pub fn passes(&self) -> bool {
        self.cond1_multiplicity_ok
            && self.cond2_invertible_row.is_some()
            && self.cond3_noncommuting_pair.is_some()
    }
}

/// Check the three constructibility criteria for a pencil whose K is
/// diagonal in the construction basis. Rows are scanned top-down and the
/// scan stops at the first row with all blocks invertible; singular
/// blocks found on the way record `b` in `excluded_b_values`.
pub fn check_constructibility(pencil: &PencilPair, b: &Rational) -> Result<CriteriaReport> {
    let order = pencil.order();
    let n = order / 2;
    let k = pencil.k();
    let h = pencil.h();

    // condition 1, straight off K's diagonal form
    let mut diag = Vec::with_capacity(order);
    let mut k_is_diagonal = true;
    for i in 0..order {
        for j in 0..order {
            if i != j && !k.at(i, j).is_zero() {
                k_is_diagonal = false;
            }
        }
        diag.push(k.at(i, i).clone());
    }
    let cond1 = k_is_diagonal && multiplicities_at_most_two_consecutive(&diag);

    // condition 2: first block row with every 2×2 block invertible
    let mut excluded = Vec::new();
    let mut qualifying_row = None;
    for r in 0..n {
        let mut all_invertible = true;
        for c in 0..n {
            if h.block(r, c, 2).det()?.is_zero() {
                all_invertible = false;
                if !excluded.contains(b) {
                    excluded.push(b.clone());
                }
            }
        }
        if all_invertible {
            qualifying_row = Some(r);
            break;
        }
    }

    // condition 3: first lexicographic non-commuting pair in that row
    let mut pair = None;
    if let Some(r) = qualifying_row {
        let products: Vec<ExactMatrix> = (0..n)
            .map(|c| {
                let blk = h.block(r, c, 2);
                let adj = blk.conj_transpose();
                &blk * &adj
            })
            .collect();
        'scan: for i in 0..n {
            for j in i + 1..n {
                if !ExactMatrix::commutator(&products[i], &products[j]).is_zero() {
                    pair = Some((i, j));
                    break 'scan;
                }
            }
        }
    }

    Ok(CriteriaReport {
        cond1_multiplicity_ok: cond1,
        cond2_invertible_row: qualifying_row,
        cond3_noncommuting_pair: pair,
        excluded_b_values: excluded,
    })
}

fn multiplicities_at_most_two_consecutive(diag: &[GaussianRational]) -> bool {
    // run-length over adjacent equal entries; any value split across
    // non-adjacent runs violates the "equal entries consecutive" basis
    // requirement, any run longer than 2 violates the multiplicity bound
    let mut seen: Vec<&GaussianRational> = Vec::new();
    let mut idx = 0;
    while idx < diag.len() {
        let mut run = 1;
        while idx + run < diag.len() && diag[idx + run] == diag[idx] {
            run += 1;
        }
        if run > 2 || seen.contains(&&diag[idx]) {
            return false;
        }
        seen.push(&diag[idx]);
        idx += run;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_pencil, FamilyParams};
    use crate::matrix::{alpha, beta};
    use crate::scalar::{rat, rat_int};

    #[test]
    fn scalars_only() {
        let report = generated_algebra_dim(&[ExactMatrix::identity(2)], 4).unwrap();
        assert_eq!(report.dimension, 1);
        assert!(!report.saturated);
    }

    #[test]
    fn alpha_beta_saturate_m2() {
        // oracle: I, α, β, αβ are linearly independent (rank of their
        // vectorizations is 4), so the algebra is all of M₂
        let words = [
            ExactMatrix::identity(2),
            alpha(),
            beta(),
            &alpha() * &beta(),
        ];
        let mut stacked = ExactMatrix::zero(4, 4);
        for (r, w) in words.iter().enumerate() {
            for (c, e) in w.entries().iter().enumerate() {
                stacked.set(r, c, e.clone());
            }
        }
        assert_eq!(stacked.rank(), 4);

        let report = generated_algebra_dim(&[alpha(), beta()], 4).unwrap();
        assert_eq!(report.dimension, 4);
        assert!(report.saturated);
    }

    #[test]
    fn modular_and_exact_paths_agree() {
        // force the exact path and compare against the hybrid result
        let gens = [alpha(), beta()];
        let hybrid = generated_algebra_dim(&gens, 4).unwrap();
        let exact = exact_closure(&gens, 2, 4).unwrap();
        assert_eq!(hybrid.dimension, exact.dimension);
        assert_eq!(hybrid.generations, exact.generations);

        let g1 = ExactMatrix::block_diag(&[&alpha(), &alpha()]);
        let g2 = ExactMatrix::block_diag(&[&beta(), &beta()]);
        let gens = [g1, g2];
        let hybrid = generated_algebra_dim(&gens, 16).unwrap();
        let exact = exact_closure(&gens, 4, 16).unwrap();
        assert_eq!(hybrid.dimension, exact.dimension);
    }

    #[test]
    fn cap_must_cover_dimension_bound() {
        assert!(matches!(
            generated_algebra_dim(&[alpha(), beta()], 3),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn blockdiag_generators_stay_reducible() {
        // two commuting block-diagonal generators: closure strictly below d²
        let g1 = ExactMatrix::block_diag(&[&alpha(), &alpha()]);
        let g2 = ExactMatrix::block_diag(&[&beta(), &beta()]);
        let report = generated_algebra_dim(&[g1, g2], 16).unwrap();
        assert!(report.dimension < 16);
    }

    #[test]
    fn family_generates_full_algebra_n4() {
        let p = FamilyParams::new(4, rat_int(1)).unwrap();
        let pencil = build_pencil(&p).unwrap();
        let report = generated_algebra_dim(&[pencil.h().clone(), pencil.k().clone()], 64).unwrap();
        assert_eq!(report.dimension, 64);
        assert!(report.saturated);
    }

    #[test]
    fn criteria_b1_top_row() {
        let b = rat_int(1);
        let p = FamilyParams::new(4, b.clone()).unwrap();
        let pencil = build_pencil(&p).unwrap();
        let report = check_constructibility(&pencil, &b).unwrap();
        assert!(report.cond1_multiplicity_ok);
        assert_eq!(report.cond2_invertible_row, Some(0));
        assert!(report.cond3_noncommuting_pair.is_some());
        assert!(report.excluded_b_values.is_empty());
        assert!(report.passes());

        // the worked pair: commutator of H₁₃H₁₃ᵀ and H₁₄H₁₄ᵀ is
        // [[0,48b],[−48b,0]], so [[0,48],[−48,0]] at b = 1
        let h13 = pencil.h().block(0, 2, 2);
        let h14 = pencil.h().block(0, 3, 2);
        let c = ExactMatrix::commutator(&(&h13 * &h13.transpose()), &(&h14 * &h14.transpose()));
        assert_eq!(c, ExactMatrix::from_int_rows(&[&[0, 48], &[-48, 0]]));
    }

    #[test]
    fn criteria_b3_falls_through_to_second_row() {
        let b = rat_int(3);
        let p = FamilyParams::new(4, b.clone()).unwrap();
        let pencil = build_pencil(&p).unwrap();
        let report = check_constructibility(&pencil, &b).unwrap();
        assert_eq!(report.cond2_invertible_row, Some(1));
        assert_eq!(report.excluded_b_values, vec![b]);
        assert!(report.passes());

        // second-row worked pair: [[0,−16b],[16b,0]] at b = 3
        let h23 = pencil.h().block(1, 2, 2);
        let h24 = pencil.h().block(1, 3, 2);
        let c = ExactMatrix::commutator(&(&h23 * &h23.transpose()), &(&h24 * &h24.transpose()));
        assert_eq!(c, ExactMatrix::from_int_rows(&[&[0, -48], &[48, 0]]));
    }

    #[test]
    fn criteria_b_half_top_row_still_fine() {
        let b = rat(1, 2);
        let p = FamilyParams::new(4, b.clone()).unwrap();
        let pencil = build_pencil(&p).unwrap();
        let report = check_constructibility(&pencil, &b).unwrap();
        assert_eq!(report.cond2_invertible_row, Some(0));
        assert!(report.excluded_b_values.is_empty());
        assert!(report.passes());

        // the second row is itself disqualified at b = 1/2: its fourth
        // block [[−1,−2b],[−2b,−1]] has det 1 − 4b² = 0
        let h24 = pencil.h().block(1, 3, 2);
        assert!(h24.det().unwrap().is_zero());
    }

    #[test]
    fn multiplicity_rule() {
        let g = |v: i64| GaussianRational::from_int(v);
        assert!(multiplicities_at_most_two_consecutive(&[g(1), g(1), g(2)]));
        assert!(!multiplicities_at_most_two_consecutive(&[g(1), g(1), g(1)]));
        assert!(!multiplicities_at_most_two_consecutive(&[g(1), g(2), g(1)]));
    }
}
