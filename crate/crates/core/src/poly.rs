//! Dense univariate polynomials over the rationals.
//!
//! `RationalPolynomial` stores coefficients in ascending degree order.
//! Invariant: the vector is empty for the zero polynomial, and the last
//! element is nonzero otherwise. Eigenvalue multiplicity questions are
//! settled here exactly, through gcd, squarefree decomposition, square
//! roots, and resultant-based discriminants — never through floats.

use crate::error::{Error, Result};
use crate::scalar::{rational_sqrt, GaussianRational, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    /// Build from ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| crate::scalar::rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { coeffs: vec![c] }
        }
    }

    /// The monomial c·λᵈ.
    pub fn monomial(c: Rational, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self { coeffs }
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of λᵏ (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(k.into()))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Leading coefficient forced to 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => Self::zero(),
            Some(lc) => {
                let inv = Rational::one() / lc;
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: self = q·d + r with deg r < deg d.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let dlc = d.leading_coefficient().unwrap().clone();
        let mut r = self.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let factor = r.leading_coefficient().unwrap() / &dlc;
            let shift = rd - dd;
            q[shift] = factor.clone();
            for (k, c) in d.coeffs.iter().enumerate() {
                r.coeffs[shift + k] -= &factor * c;
            }
            r.normalize();
        }
        Ok((Self::from_coeffs(q), r))
    }

    /// Quotient of an exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::InternalFault("exact_div with nonzero remainder".into()));
        }
        Ok(q)
    }

    /// Monic gcd over ℚ. Errors only when both inputs are zero.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut f = a.monic();
        let mut g = b.monic();
        while !g.is_zero() {
            let (_, r) = f.divrem(&g)?;
            f = g;
            g = r.monic();
        }
        Ok(f.monic())
    }

    /// Yun's squarefree decomposition of a nonzero polynomial.
    pub fn squarefree_decompose(&self) -> Result<SquarefreeDecomposition> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.monic();
        if p.degree() == Some(0) {
            return Ok(SquarefreeDecomposition { parts: Vec::new() });
        }
        let dp = p.derivative();
        let mut parts = Vec::new();
        let a0 = Self::gcd(&p, &dp)?;
        let mut b = p.exact_div(&a0)?;
        let mut c = dp.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut mult = 1usize;
        while b.degree().map_or(false, |deg| deg > 0) {
            let a = Self::gcd(&b, &d)?;
            if a.degree().map_or(false, |deg| deg > 0) {
                parts.push((a.clone(), mult));
            }
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            mult += 1;
        }
        Ok(SquarefreeDecomposition { parts })
    }

    /// Exact polynomial square root: g with g² = self, or None.
    ///
    /// Exists iff every squarefree multiplicity is even and the leading
    /// coefficient is a rational square; the returned g has positive
    /// leading coefficient and is re-squared as a self-check.
    pub fn poly_sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lc = self.leading_coefficient().unwrap();
        let lc_root = rational_sqrt(lc)?;
        let decomp = self.squarefree_decompose().ok()?;
        let mut g = Self::constant(lc_root);
        for (factor, mult) in decomp.parts() {
            if mult % 2 != 0 {
                return None;
            }
            g = &g * &factor.pow(mult / 2);
        }
        if &(&g * &g) == self {
            Some(g)
        } else {
            None
        }
    }

    /// Resultant of two nonzero polynomials via the Sylvester matrix.
    pub fn resultant(p: &Self, q: &Self) -> Result<Rational> {
        let dp = p.degree().ok_or(Error::ZeroPolynomial)?;
        let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
        if dp == 0 {
            // res(c, q) = c^{deg q}
            return Ok(pow_rational(p.leading_coefficient().unwrap(), dq));
        }
        if dq == 0 {
            return Ok(pow_rational(q.leading_coefficient().unwrap(), dp));
        }
        let n = dp + dq;
        let mut m = crate::matrix::ExactMatrix::zero(n, n);
        // dq rows of p's coefficients (descending), then dp rows of q's
        for row in 0..dq {
            for (k, c) in p.coeffs.iter().rev().enumerate() {
                m.set(row, row + k, GaussianRational::from_rational(c.clone()));
            }
        }
        for row in 0..dp {
            for (k, c) in q.coeffs.iter().rev().enumerate() {
                m.set(dq + row, row + k, GaussianRational::from_rational(c.clone()));
            }
        }
        let det = m.det()?;
        debug_assert!(det.is_real());
        Ok(det.re().clone())
    }

    /// Discriminant: (−1)^{d(d−1)/2}·res(p, p′)/lc(p). Zero iff p has a
    /// repeated complex root. Errors on constants.
    pub fn discriminant(&self) -> Result<Rational> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let dp = self.derivative();
        let res = if dp.is_zero() {
            // cannot happen over ℚ for d ≥ 1
            return Err(Error::InternalFault("vanishing derivative over ℚ".into()));
        } else {
            Self::resultant(self, &dp)?
        };
        let sign = if (d * (d - 1) / 2) % 2 == 0 { Rational::one() } else { -Rational::one() };
        Ok(sign * res / self.leading_coefficient().unwrap())
    }
}

fn pow_rational(c: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= c;
    }
    acc
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        RationalPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        RationalPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = crate::scalar::format_rational(c);
            let leading = first;
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if !leading && c.is_negative() { cs.trim_start_matches('-') } else { &cs };
            match k {
                0 => write!(f, "{mag}")?,
                1 if mag == "1" => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if mag == "1" => write!(f, "x^{k}")?,
                _ => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// p = lc·Π factorᵐᵘˡᵗ with monic, squarefree, pairwise coprime factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    parts: Vec<(RationalPolynomial, usize)>,
}

impl SquarefreeDecomposition {
    pub fn parts(&self) -> &[(RationalPolynomial, usize)] {
        &self.parts
    }

    /// Monic product Π factorᵐᵘˡᵗ.
    pub fn remultiply(&self) -> RationalPolynomial {
        let mut acc = RationalPolynomial::one();
        for (factor, mult) in &self.parts {
            acc = &acc * &factor.pow(*mult);
        }
        acc
    }

    /// Product of the distinct factors (the squarefree part).
    pub fn squarefree_part(&self) -> RationalPolynomial {
        let mut acc = RationalPolynomial::one();
        for (factor, _) in &self.parts {
            acc = &acc * factor;
        }
        acc
    }

    /// Degree of the multiplicity-1 factor: the exact simple-root count.
    pub fn simple_root_count(&self) -> usize {
        self.parts
            .iter()
            .find(|(_, m)| *m == 1)
            .and_then(|(f, _)| f.degree())
            .unwrap_or(0)
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> usize {
        self.parts.iter().map(|(f, _)| f.degree().unwrap_or(0)).sum()
    }

    pub fn all_multiplicities_even(&self) -> bool {
        self.parts.iter().all(|(_, m)| m % 2 == 0)
    }

    /// One multiplicity per distinct root, ascending (the exact
    /// multiplicity table the float oracle is compared against).
    pub fn multiplicity_table(&self) -> Vec<usize> {
        let mut t = Vec::new();
        for (f, m) in &self.parts {
            t.extend(std::iter::repeat(*m).take(f.degree().unwrap_or(0)));
        }
        t.sort_unstable();
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn p(coeffs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_ints(coeffs)
    }

    #[test]
    fn degree_and_normalization() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn product_degree_adds() {
        let a = p(&[1, 3, 1]);
        let b = p(&[-2, 1]);
        assert_eq!((&a * &b).degree(), Some(3));
    }

    #[test]
    fn monic_idempotent() {
        let a = p(&[2, 4, 6]);
        assert_eq!(a.monic(), a.monic().monic());
        assert_eq!(a.monic().leading_coefficient(), Some(&rat_int(1)));
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[1, 0, -3, 7, 2]);
        let d = p(&[-1, 0, 1]);
        let (q, r) = a.divrem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap_or(0) < d.degree().unwrap());
    }

    #[test]
    fn gcd_examples() {
        // gcd(λ²−1, λ−1) = λ−1
        let g = RationalPolynomial::gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        // gcd(p, 0) = monic(p)
        let g = RationalPolynomial::gcd(&p(&[2, 4]), &RationalPolynomial::zero()).unwrap();
        assert_eq!(g, p(&[1, 2]).monic());
        assert!(RationalPolynomial::gcd(&RationalPolynomial::zero(), &RationalPolynomial::zero()).is_err());
    }

    #[test]
    fn squarefree_of_constructed_square() {
        // (λ²+1)² → [(λ²+1, 2)]
        let sq = &p(&[1, 0, 1]) * &p(&[1, 0, 1]);
        let d = sq.squarefree_decompose().unwrap();
        assert_eq!(d.parts(), &[(p(&[1, 0, 1]), 2)]);
        assert!(d.all_multiplicities_even());
        // λ²−1 → [(λ²−1, 1)]
        let d = p(&[-1, 0, 1]).squarefree_decompose().unwrap();
        assert_eq!(d.parts(), &[(p(&[-1, 0, 1]), 1)]);
        assert_eq!(d.simple_root_count(), 2);
    }

    #[test]
    fn squarefree_mixed_multiplicities() {
        // (λ−1)(λ+2)²(λ−3)³
        let f = &(&p(&[-1, 1]) * &p(&[2, 1]).pow(2)) * &p(&[-3, 1]).pow(3);
        let d = f.squarefree_decompose().unwrap();
        assert_eq!(
            d.parts(),
            &[(p(&[-1, 1]), 1), (p(&[2, 1]), 2), (p(&[-3, 1]), 3)]
        );
        assert_eq!(d.remultiply(), f.monic());
        assert_eq!(d.multiplicity_table(), vec![1, 2, 3]);
        assert_eq!(d.simple_root_count(), 1);
        assert_eq!(d.distinct_root_count(), 3);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(RationalPolynomial::zero().squarefree_decompose().is_err());
    }

    #[test]
    fn sqrt_of_square_and_nonsquare() {
        let g = p(&[1, 3, 1]);
        let sq = &g * &g;
        assert_eq!(sq.poly_sqrt(), Some(g));
        assert_eq!(p(&[1, 0, 1]).poly_sqrt(), None);
        // non-square leading coefficient
        let f = p(&[0, 0, 2]);
        assert_eq!(f.poly_sqrt(), None);
        // non-monic square: (2λ+2)² = 4λ²+8λ+4
        let h = p(&[2, 2]);
        assert_eq!((&h * &h).poly_sqrt(), Some(h));
    }

    #[test]
    fn discriminant_golden_values() {
        // λ²−1 → 4 (= b²−4ac)
        assert_eq!(p(&[-1, 0, 1]).discriminant().unwrap(), rat_int(4));
        // (λ−1)² → 0
        assert_eq!(p(&[1, -2, 1]).discriminant().unwrap(), rat_int(0));
        // general quadratic aλ²+bλ+c: disc = b²−4ac
        let q = RationalPolynomial::from_coeffs(vec![rat(5, 3), rat(-7, 2), rat(2, 1)]);
        assert_eq!(q.discriminant().unwrap(), rat(-7, 2) * rat(-7, 2) - rat_int(4) * rat(2, 1) * rat(5, 3));
        assert!(p(&[3]).discriminant().is_err());
    }

    #[test]
    fn resultant_degenerate_degrees() {
        // res(c, q) = c^deg q
        let c = p(&[3]);
        let q = p(&[1, 0, 1]);
        assert_eq!(RationalPolynomial::resultant(&c, &q).unwrap(), rat_int(9));
        assert_eq!(RationalPolynomial::resultant(&q, &c).unwrap(), rat_int(9));
    }
}
