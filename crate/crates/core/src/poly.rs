//! Polynomials over the rationals and exact characteristic polynomials.
//!
//! The characteristic polynomial reduces the matrix to upper Hessenberg
//! form by exact similarity transformations and then runs the classical
//! leading-principal-minor recurrence. No numerical approximation is
//! involved at any step.

use alloc::fmt;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::matrix::{MatrixError, RationalMatrix};
use crate::primes::PrimeSet;
use crate::rational::{self, Rational};

/// A polynomial with rational coefficients, constant term first.
///
/// The zero polynomial stores no coefficients; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![Rational::one()] }
    }

    /// `x - c`.
    pub fn x_minus(c: &Rational) -> Self {
        Polynomial::new(vec![-c.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "the zero polynomial has no degree");
        self.coeffs.len() - 1
    }

    /// Coefficients, constant term first; empty for the zero polynomial.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Every coefficient lies in `Z[1/pi]`.
    pub fn coefficients_in(&self, pi: &PrimeSet) -> bool {
        self.coeffs.iter().all(|c| rational::in_localization(c, pi))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new(
            (0..n)
                .map(|k| self.coefficient(k) + other.coefficient(k))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Polynomial::new(out)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix (Horner form).
    pub fn eval_matrix(&self, m: &RationalMatrix) -> Result<RationalMatrix, MatrixError> {
        if !m.is_square() {
            return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        let n = m.rows();
        let mut acc = RationalMatrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?.add(&RationalMatrix::identity(n).scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})x", c)?,
                _ => write!(f, "({})x^{}", c, k)?,
            }
        }
        Ok(())
    }
}

/// The monic characteristic polynomial `det(xI - M)` of a square matrix.
pub fn characteristic_polynomial(m: &RationalMatrix) -> Result<Polynomial, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let h = hessenberg(m);
    // p_i = charpoly of the leading i x i block of the Hessenberg form:
    // p_i = (x - h[i][i]) p_{i-1} - sum_k h[k][i] (prod_{m=k}^{i-1} s_m) p_{k-1}
    // with s_m = h[m+1][m] the subdiagonal.
    let mut p: Vec<Polynomial> = Vec::with_capacity(n + 1);
    p.push(Polynomial::one());
    for i in 0..n {
        let mut next = Polynomial::x_minus(&h[i][i]).mul(&p[i]);
        let mut sub_prod = Rational::one();
        for k in (0..i).rev() {
            sub_prod *= &h[k + 1][k];
            if sub_prod.is_zero() {
                break;
            }
            let t = &h[k][i] * &sub_prod;
            if !t.is_zero() {
                next = next.sub(&p[k].scale(&t));
            }
        }
        p.push(next);
    }
    Ok(p.pop().expect("recurrence produced n+1 polynomials"))
}

/// Exact upper Hessenberg form of `m` under similarity transformations.
fn hessenberg(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let n = m.rows();
    let mut h: Vec<Vec<Rational>> = (0..n)
        .map(|r| (0..n).map(|c| m.at(r, c).clone()).collect())
        .collect();
    if n < 3 {
        return h;
    }
    for j in 0..n - 2 {
        if h[j + 1][j].is_zero() {
            if let Some(r) = (j + 2..n).find(|&r| !h[r][j].is_zero()) {
                // Similarity swap of rows and columns r and j+1.
                h.swap(r, j + 1);
                for row in h.iter_mut() {
                    row.swap(r, j + 1);
                }
            } else {
                continue;
            }
        }
        for i in j + 2..n {
            if h[i][j].is_zero() {
                continue;
            }
            let factor = &h[i][j] / &h[j + 1][j];
            // Row op: row_i -= factor * row_{j+1} ...
            for c in 0..n {
                let t = &factor * &h[j + 1][c];
                h[i][c] -= t;
            }
            // ... matched by the inverse column op: col_{j+1} += factor * col_i.
            for r in 0..n {
                let t = &factor * &h[r][i];
                h[r][j + 1] += t;
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn m(rows: &[&[Rational]]) -> RationalMatrix {
        RationalMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn charpoly_of_mixed_diagonal() {
        // 2x2 cofactor expansion by hand: (x-2)(x-1/2) = x^2 - 5/2 x + 1.
        let d = m(&[&[rat(2), rat(0)], &[rat(0), ratio(1, 2)]]);
        let p = characteristic_polynomial(&d).unwrap();
        assert_eq!(p.coefficients(), [rat(1), ratio(-5, 2), rat(1)]);
    }

    #[test]
    fn charpoly_of_identity() {
        let p = characteristic_polynomial(&RationalMatrix::identity(2)).unwrap();
        assert_eq!(p.coefficients(), [rat(1), rat(-2), rat(1)]);
    }

    #[test]
    fn charpoly_of_integer_diagonal() {
        // diag(2,2,1): (x-2)^2 (x-1)
        let d = m(&[
            &[rat(2), rat(0), rat(0)],
            &[rat(0), rat(2), rat(0)],
            &[rat(0), rat(0), rat(1)],
        ]);
        let p = characteristic_polynomial(&d).unwrap();
        let expected = Polynomial::x_minus(&rat(2))
            .mul(&Polynomial::x_minus(&rat(2)))
            .mul(&Polynomial::x_minus(&rat(1)));
        assert_eq!(p, expected);
        assert!(p.is_monic());
    }

    #[test]
    fn charpoly_needs_a_similarity_swap() {
        // (1,0) entry is zero but (2,0) is not, forcing the pivot swap path.
        let a = m(&[
            &[rat(0), rat(1), rat(0)],
            &[rat(0), rat(0), rat(1)],
            &[rat(1), rat(0), rat(0)],
        ]);
        let p = characteristic_polynomial(&a).unwrap();
        // permutation of order 3: x^3 - 1
        assert_eq!(p.coefficients(), [rat(-1), rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn determinant_matches_constant_term() {
        let a = m(&[
            &[rat(2), ratio(1, 3), rat(0)],
            &[rat(1), rat(-1), rat(4)],
            &[ratio(5, 2), rat(0), rat(1)],
        ]);
        let p = characteristic_polynomial(&a).unwrap();
        let det = a.determinant().unwrap();
        // det(M) = (-1)^n * p(0)
        assert_eq!(det, p.coefficient(0) * rat(-1) * rat(-1) * rat(-1));
    }

    #[test]
    fn cayley_hamilton_smoke() {
        let a = m(&[
            &[rat(1), rat(2), ratio(1, 2)],
            &[rat(0), rat(3), rat(1)],
            &[rat(4), rat(-2), rat(0)],
        ]);
        let p = characteristic_polynomial(&a).unwrap();
        assert!(p.eval_matrix(&a).unwrap().is_zero());
    }

    #[test]
    fn eval_scalar_and_display() {
        let p = Polynomial::new(vec![rat(1), ratio(-5, 2), rat(1)]);
        // x^2 - 5/2 x + 1 at x = 2: 4 - 5 + 1 = 0
        assert_eq!(p.eval(&rat(2)), rat(0));
        assert_eq!(p.eval(&rat(0)), rat(1));
        assert!(!p.coefficients_in(&PrimeSet::empty()));
        assert!(p.coefficients_in(&PrimeSet::of(&[2])));
    }
}
