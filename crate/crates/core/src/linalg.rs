//! Dense helpers shared across modules: spinor/vector conversion, angles
//! between vectors, and small matrix norms.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{inner, Component, FockIndex, Spinor, TruncationSpec};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Coefficients of `f` on an ordered list of basis labels. Amplitudes
/// outside the list are reported as an error.
pub fn spinor_to_vector(f: &Spinor, basis: &[(Component, FockIndex)]) -> Result<CVector> {
    let v = CVector::from_iterator(basis.len(), basis.iter().map(|&(c, i)| f.get(c, i)));
    let captured: f64 = v.iter().map(|a| a.norm_sqr()).sum();
    let total = f.norm_sqr();
    if (total - captured).abs() > 1e-28 * total.max(1.0) {
        return Err(Error::Dimension(
            "spinor has support outside the requested basis".to_string(),
        ));
    }
    Ok(v)
}

pub fn vector_to_spinor(
    v: &CVector,
    basis: &[(Component, FockIndex)],
    trunc: TruncationSpec,
) -> Result<Spinor> {
    if v.len() != basis.len() {
        return Err(Error::Dimension(format!(
            "vector of length {} for a basis of {}",
            v.len(),
            basis.len()
        )));
    }
    Spinor::from_entries(trunc, basis.iter().zip(v.iter()).map(|(&(c, i), &a)| (c, i, a)))
}

/// Sine of the angle between two nonzero spinors, `|b - P_a b| / |b|`.
/// Returns 1 if either vector vanishes.
pub fn sine_angle(a: &Spinor, b: &Spinor) -> f64 {
    let na = a.norm_sqr();
    let nb = b.norm_sqr();
    if na == 0.0 || nb == 0.0 {
        return 1.0;
    }
    let proj = a.scale(inner(a, b) / na);
    ((b - &proj).norm_sqr() / nb).sqrt().min(1.0)
}

/// Same as [`sine_angle`] on dense vectors.
pub fn sine_angle_dense(a: &CVector, b: &CVector) -> f64 {
    let na = a.norm_squared();
    let nb = b.norm_squared();
    if na == 0.0 || nb == 0.0 {
        return 1.0;
    }
    let coef = a.dotc(b) / na;
    let resid = b - a * coef;
    (resid.norm_squared() / nb).sqrt().min(1.0)
}

/// Largest entry modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest modulus of `a - b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Singular values of a complex matrix, largest first.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Numerical rank: singular values above `tol` times the largest one.
pub fn rank(m: &CMatrix, tol: f64) -> usize {
    let s = singular_values(m);
    let Some(&top) = s.first() else {
        return 0;
    };
    if top == 0.0 {
        return 0;
    }
    s.iter().filter(|&&x| x > tol * top).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_angle_of_parallel_and_orthogonal() {
        let tr = TruncationSpec::new(1, 1).unwrap();
        let a = Spinor::basis(tr, Component::Upper, FockIndex::VACUUM).unwrap();
        let b = a.scale(Complex64::new(0.0, -3.0));
        assert!(sine_angle(&a, &b) < 1e-15);
        let c = Spinor::basis(tr, Component::Lower, FockIndex::VACUUM).unwrap();
        assert!((sine_angle(&a, &c) - 1.0).abs() < 1e-15);
        assert_eq!(sine_angle(&a, &Spinor::zero(tr)), 1.0);
    }

    #[test]
    fn vector_roundtrip_and_basis_check() {
        let tr = TruncationSpec::new(0, 2).unwrap();
        let basis = vec![
            (Component::Upper, FockIndex::new(0, 1)),
            (Component::Lower, FockIndex::new(0, 0)),
        ];
        let v = CVector::from_vec(vec![Complex64::new(1.0, 2.0), Complex64::new(-0.5, 0.0)]);
        let s = vector_to_spinor(&v, &basis, tr).unwrap();
        assert_eq!(spinor_to_vector(&s, &basis).unwrap(), v);
        let outside = Spinor::basis(tr, Component::Upper, FockIndex::new(0, 2)).unwrap();
        assert!(spinor_to_vector(&outside, &basis).is_err());
    }

    #[test]
    fn rank_of_duplicate_columns() {
        let m = CMatrix::from_row_slice(2, 2, &[ONE, ONE, I, I]);
        assert_eq!(rank(&m, 1e-10), 1);
        assert_eq!(rank(&CMatrix::identity(3, 3), 1e-10), 3);
    }
}
