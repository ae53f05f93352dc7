//! The counterexample family: skew generators A and B, the pencil pair
//! (H, K) = (A², AB + BA), and the b = 0 block split.
//!
//! For order parameter n ≥ 4 and rational b, A is 2n×2n skew-symmetric
//! with diagonal blocks qU, (q+1)U, …, (q+n−1)U where q = n²/2 − 1, a top
//! block row of α's, and the two non-commuting injections bα+β and bα in
//! the second block row. K always collapses to −2·diag(q,…,q+n−1) ⊗ I₂.

use crate::error::{Error, Result};
use crate::matrix::{alpha, beta, u_rotation, ExactMatrix};
use crate::scalar::{rat_int, GaussianRational, Rational};
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    n: usize,
    b: Rational,
}

impl FamilyParams {
    /// n ≥ 4 and any rational b. b = 0 is allowed but flags the pencil as
    /// diagnostic: the counterexample property itself needs b ≠ 0.
    pub fn new(n: usize, b: Rational) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidParameter(format!("family needs n >= 4, got {n}")));
        }
        Ok(Self { n, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// q = n²/2 − 1, recomputed on every call (never stored).
    pub fn q(&self) -> Rational {
        Rational::new((self.n * self.n).into(), 2.into()) - Rational::one()
    }

    pub fn is_diagnostic(&self) -> bool {
        self.b.is_zero()
    }
}

/// Where a pencil pair came from; carried through reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Family { n: usize, b: Rational, diagnostic: bool },
    Laffey,
    Lss { params: Vec<(String, Rational)> },
}

/// A hermitian pair (H, K) of equal even order, with provenance.
#[derive(Clone, Debug)]
pub struct PencilPair {
    h: ExactMatrix,
    k: ExactMatrix,
    provenance: Provenance,
}

impl PencilPair {
    pub fn new(h: ExactMatrix, k: ExactMatrix, provenance: Provenance) -> Result<Self> {
        if h.rows() != k.rows() || h.cols() != k.cols() {
            return Err(Error::Dimension(format!(
                "pencil pair with mismatched orders {}x{} vs {}x{}",
                h.rows(),
                h.cols(),
                k.rows(),
                k.cols()
            )));
        }
        if !h.is_hermitian() || !k.is_hermitian() {
            return Err(Error::NotHermitian("pencil pair members must be hermitian".into()));
        }
        if h.rows() % 2 != 0 {
            return Err(Error::InvalidParameter("pencil pair order must be even".into()));
        }
        Ok(Self { h, k, provenance })
    }

    pub fn h(&self) -> &ExactMatrix {
        &self.h
    }

    pub fn k(&self) -> &ExactMatrix {
        &self.k
    }

    pub fn order(&self) -> usize {
        self.h.rows()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// xH + yK.
    pub fn evaluate(&self, x: &Rational, y: &Rational) -> ExactMatrix {
        let xs = GaussianRational::from_rational(x.clone());
        let ys = GaussianRational::from_rational(y.clone());
        &self.h.scale(&xs) + &self.k.scale(&ys)
    }
}

/// The 2n×2n skew-symmetric generator A.
pub fn build_a(params: &FamilyParams) -> ExactMatrix {
    let n = params.n;
    let q = params.q();
    let b = GaussianRational::from_rational(params.b.clone());
    let mut blocks: Vec<Vec<ExactMatrix>> = vec![vec![ExactMatrix::zero(2, 2); n]; n];
    for (t, row) in blocks.iter_mut().enumerate() {
        let coeff = GaussianRational::from_rational(&q + Rational::from_integer(t.into()));
        row[t] = u_rotation().scale(&coeff);
    }
    for j in 1..n {
        blocks[0][j] = alpha();
        blocks[j][0] = -&alpha();
    }
    let injection = &alpha().scale(&b) + &beta(); // bα + β
    blocks[1][2] = injection.clone();
    blocks[2][1] = -&injection;
    blocks[1][3] = alpha().scale(&b);
    blocks[3][1] = -&alpha().scale(&b);
    ExactMatrix::from_blocks(&blocks).expect("uniform 2x2 block grid")
}

/// B = Iₙ ⊗ U; B² = −I exactly.
pub fn build_b(n: usize) -> ExactMatrix {
    ExactMatrix::identity(n).kronecker(&u_rotation())
}

/// H = A², K = AB + BA. Both real symmetric; K is checked against its
/// closed diagonal form −2·diag(q,…,q+n−1) ⊗ I₂ before returning.
pub fn build_pencil(params: &FamilyParams) -> Result<PencilPair> {
    let a = build_a(params);
    let b = build_b(params.n);
    let h = &a * &a;
    let k = &(&a * &b) + &(&b * &a);
    if k != k_closed_form(params.n) {
        return Err(Error::InternalFault("K does not match its closed diagonal form".into()));
    }
    if !h.is_hermitian() || !h.is_real() {
        return Err(Error::InternalFault("H = A² is not real symmetric".into()));
    }
    PencilPair::new(
        h,
        k,
        Provenance::Family { n: params.n, b: params.b.clone(), diagnostic: params.is_diagnostic() },
    )
}

/// −2·diag(q, q+1, …, q+n−1) ⊗ I₂.
pub fn k_closed_form(n: usize) -> ExactMatrix {
    let params = FamilyParams::new(n, Rational::zero()).expect("n checked by caller");
    let q = params.q();
    let diag: Vec<GaussianRational> = (0..n)
        .map(|t| {
            let v = (&q + Rational::from_integer(t.into())) * rat_int(-2);
            GaussianRational::from_rational(v)
        })
        .collect();
    ExactMatrix::diagonal(&diag).kronecker(&ExactMatrix::identity(2))
}

/// The b = 0 block split of the family.
///
/// `permutation` is the composed 0-based symmetric index permutation
/// (interleave the diagonal/off-diagonal 2×2 block elements, then swap
/// indices 0 and n) that turns A₍₀₎ into [[0, A₁],[−A₁ᵀ, 0]]; entry i is
/// the original index now sitting at position i.
#[derive(Clone, Debug)]
pub struct BlockSplit {
    pub h1: ExactMatrix,
    pub h2: ExactMatrix,
    pub k1: ExactMatrix,
    pub l1: ExactMatrix,
    pub l2: ExactMatrix,
    pub permutation: Vec<usize>,
}

/// Split A₍₀₎ by the symmetric permutation into [[0, A₁],[−A₁ᵀ, 0]] and
/// return H₁ = −A₁A₁ᵀ, H₂ = −A₁ᵀA₁, K₁, and the assembled quantised
/// blocks L₁, L₂ built from X = [[1,0],[0,0]], Y = [[0,q⁻²],[q⁻²,1]].
pub fn split_at_b0(n: usize) -> Result<BlockSplit> {
    let params = FamilyParams::new(n, Rational::zero())?;
    let a0 = build_a(&params);
    let perm = split_permutation(n);
    let pa = a0.permute_symmetric(&perm)?;

    // permuted A must be block anti-diagonal
    for i in 0..n {
        for j in 0..n {
            if !pa.at(i, j).is_zero() || !pa.at(n + i, n + j).is_zero() {
                return Err(Error::InternalFault("split permutation left a diagonal block nonzero".into()));
            }
        }
    }
    let a1 = ExactMatrix::from_fn(n, n, |i, j| pa.at(i, n + j).clone());
    let lower = ExactMatrix::from_fn(n, n, |i, j| pa.at(n + i, j).clone());
    if lower != -&a1.transpose() {
        return Err(Error::InternalFault("split permutation lost skew structure".into()));
    }

    let h1 = -&(&a1 * &a1.transpose());
    let h2 = -&(&a1.transpose() * &a1);
    let q = params.q();
    let k1 = ExactMatrix::diagonal(
        &(0..n)
            .map(|t| {
                let v = (&q + Rational::from_integer(t.into())) * rat_int(-2);
                GaussianRational::from_rational(v)
            })
            .collect::<Vec<_>>(),
    );
    let q_inv_sq = GaussianRational::from_rational(Rational::one() / (&q * &q));
    let coupled = k1.scale(&q_inv_sq);
    let l1 = ExactMatrix::from_blocks(&[
        vec![h1.clone(), coupled.clone()],
        vec![coupled.clone(), k1.clone()],
    ])?;
    let l2 = ExactMatrix::from_blocks(&[
        vec![h2.clone(), coupled.clone()],
        vec![coupled, k1.clone()],
    ])?;
    Ok(BlockSplit { h1, h2, k1, l1, l2, permutation: perm })
}

/// Interleave (0,2,4,…,1,3,5,…) then swap positions 0 and n.
fn split_permutation(n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..2 * n).step_by(2).chain((1..2 * n).step_by(2)).collect();
    perm.swap(0, n);
    perm
}
