//! Exact characteristic polynomials, two independent routes.
//!
//! The default route is Faddeev–LeVerrier (division-controlled, only
//! divides by integers). The cross-check route runs fraction-free Bareiss
//! elimination on λI − M over the polynomial ring. Both return the monic
//! char poly det(λI − M); the test corpus pins them bit-identical.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::poly::RationalPolynomial;
use crate::scalar::GaussianRational;
use num_traits::Zero;

/// Monic characteristic polynomial det(λI − M) with rational coefficients.
///
/// Errors if M is not square or if any coefficient has a nonzero imaginary
/// part; for hermitian M the latter would signal an internal arithmetic
/// fault, since hermitian char polys are real.
pub fn char_poly(m: &ExactMatrix) -> Result<RationalPolynomial> {
    let coeffs = char_poly_faddeev(m)?;
    realize(coeffs)
}

/// Cross-check route: det(λI − M) by fraction-free elimination over the
/// polynomial ring.
pub fn char_poly_bareiss(m: &ExactMatrix) -> Result<RationalPolynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(RationalPolynomial::one());
    }
    // entries of λI − M as complex polynomials
    let mut a: Vec<Vec<CPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = CPoly::constant(-m.at(i, j).clone());
                    if i == j {
                        p.add_term(GaussianRational::one(), 1);
                    }
                    p
                })
                .collect()
        })
        .collect();
    let mut sign = false;
    let mut prev = CPoly::constant(GaussianRational::one());
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // det(λI − M) never vanishes identically, so a pivot exists
            let r = (k + 1..n)
                .find(|&r| !a[r][k].is_zero())
                .ok_or_else(|| Error::InternalFault("zero pivot column in char poly".into()))?;
            a.swap(k, r);
            sign = !sign;
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&pivot * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev)?;
            }
            a[i][k] = CPoly::zero();
        }
        prev = pivot;
    }
    let mut det = a[n - 1][n - 1].clone();
    if sign {
        det = det.neg();
    }
    realize(det.into_coeffs())
}

/// Faddeev–LeVerrier: monic coefficients of det(λI − M), ascending.
fn char_poly_faddeev(m: &ExactMatrix) -> Result<Vec<GaussianRational>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::one();
    let mut aux = ExactMatrix::identity(n);
    for k in 1..=n {
        let prod = m * &aux;
        let c = {
            let t = prod.trace()?;
            let divisor = GaussianRational::from_int(k as i64);
            -(&t / &divisor)
        };
        coeffs[n - k] = c.clone();
        aux = &prod + &ExactMatrix::identity(n).scale(&c);
    }
    Ok(coeffs)
}

fn realize(coeffs: Vec<GaussianRational>) -> Result<RationalPolynomial> {
    let mut real = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if !c.im().is_zero() {
            return Err(Error::NonrealCoefficient);
        }
        real.push(c.re().clone());
    }
    Ok(RationalPolynomial::from_coeffs(real))
}

/// Evaluate a rational polynomial at a matrix (for Cayley–Hamilton checks).
pub fn eval_at_matrix(p: &RationalPolynomial, m: &ExactMatrix) -> Result<ExactMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut acc = ExactMatrix::zero(n, n);
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * m) + &ExactMatrix::identity(n).scale(&GaussianRational::from_rational(c.clone()));
    }
    Ok(acc)
}

/// Dense polynomial with Gaussian-rational coefficients, internal to the
/// Bareiss route (λI − M can have complex entries before realization).
#[derive(Clone)]
struct CPoly {
    coeffs: Vec<GaussianRational>,
}

impl CPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn constant(c: GaussianRational) -> Self {
        let mut p = Self { coeffs: vec![c] };
        p.normalize();
        p
    }

    fn add_term(&mut self, c: GaussianRational, deg: usize) {
        if self.coeffs.len() <= deg {
            self.coeffs.resize(deg + 1, GaussianRational::zero());
        }
        self.coeffs[deg] += &c;
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn into_coeffs(self) -> Vec<GaussianRational> {
        self.coeffs
    }

    fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dd = d.coeffs.len() - 1;
        let dlc = d.coeffs.last().unwrap();
        let mut r = self.clone();
        if r.coeffs.len() < d.coeffs.len() {
            return Err(Error::InternalFault("non-exact polynomial division".into()));
        }
        let mut q = vec![GaussianRational::zero(); r.coeffs.len() - dd];
        while !r.is_zero() && r.coeffs.len() - 1 >= dd {
            let shift = r.coeffs.len() - 1 - dd;
            let factor = r.coeffs.last().unwrap() / dlc;
            q[shift] = factor.clone();
            for (k, c) in d.coeffs.iter().enumerate() {
                let t = &r.coeffs[shift + k] - &(&factor * c);
                r.coeffs[shift + k] = t;
            }
            r.normalize();
        }
        if !r.is_zero() {
            return Err(Error::InternalFault("non-exact polynomial division".into()));
        }
        let mut qp = Self { coeffs: q };
        qp.normalize();
        Ok(qp)
    }
}

impl std::ops::Mul for &CPoly {
    type Output = CPoly;
    fn mul(self, rhs: &CPoly) -> CPoly {
        if self.is_zero() || rhs.is_zero() {
            return CPoly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        let mut p = CPoly { coeffs };
        p.normalize();
        p
    }
}

impl std::ops::Sub for &CPoly {
    type Output = CPoly;
    fn sub(self, rhs: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = GaussianRational::zero();
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&zero);
                let b = rhs.coeffs.get(k).unwrap_or(&zero);
                a - b
            })
            .collect();
        let mut p = CPoly { coeffs };
        p.normalize();
        p
    }
}
