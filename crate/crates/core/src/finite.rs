//! Biorthogonal systems for small dense matrices with a simple spectrum.
//!
//! Right eigenvectors are the columns of `Phi`; the dual vectors are the
//! columns of `(Phi^-1)^dagger`, so `<phi_k, Psi_l> = delta_kl` holds to the
//! conditioning of a single inversion.

use nalgebra::Schur;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{max_abs, singular_values, CMatrix, CVector};

/// Largest matrix dimension accepted by [`build_system`].
pub const MAX_DIM: usize = 16;

/// Relative pairwise eigenvalue gap below which the spectrum counts as degenerate.
pub const GAP_TOL: f64 = 1e-8;

/// Relative imaginary part above which an eigenvalue counts as complex.
pub const REAL_TOL: f64 = 1e-10;

/// Tolerance on `X H1 = H2 X` and on eigen-residuals in [`intertwine_map`].
pub const INTERTWINE_TOL: f64 = 1e-10;

/// Norm (relative to `|phi|`) below which `X phi` is treated as zero.
pub const KERNEL_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct FiniteBiorthoSystem {
    pub h: CMatrix,
    pub eigenvalues: Vec<Complex64>,
    /// Right eigenvectors as columns, unit norm.
    pub phi: CMatrix,
    /// Dual vectors as columns.
    pub psi: CMatrix,
    pub s_phi: CMatrix,
    pub s_psi: CMatrix,
    /// Set when some eigenvalue has a non-negligible imaginary part.
    pub complex_spectrum: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntertwiningReport {
    /// `|S_Psi H - H^dagger S_Psi|_max / (|H|_max |S_Psi|_max)`
    pub psi_residual: f64,
    /// `|S_phi H^dagger - H S_phi|_max / (|H|_max |S_phi|_max)`
    pub phi_residual: f64,
}

impl IntertwiningReport {
    pub fn max(&self) -> f64 {
        self.psi_residual.max(self.phi_residual)
    }
}

#[derive(Debug, Clone)]
pub struct IntertwinedVector {
    pub vector: CVector,
    pub eigenvalue: Complex64,
    /// `|H2 y - E y| / |y|`
    pub residual: f64,
}

fn operator_norm(m: &CMatrix) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}

/// Unit null vector of `m` (right singular vector of the smallest singular
/// value), phased so its largest entry is real and positive.
fn null_vector(m: &CMatrix) -> CVector {
    let n = m.ncols();
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let k = (0..n)
        .min_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]))
        .unwrap_or(0);
    let mut v: CVector = v_t.row(k).adjoint();
    v /= Complex64::from(v.norm());
    fix_phase(&mut v);
    v
}

fn fix_phase(v: &mut CVector) {
    let Some(big) = v.iter().copied().max_by(|a, b| a.norm().total_cmp(&b.norm())) else {
        return;
    };
    if big.norm() > 0.0 {
        let phase = big.conj() / big.norm();
        *v *= phase;
    }
}

/// Eigenvalues sorted by real part, then imaginary part.
pub fn sorted_eigenvalues(h: &CMatrix) -> Result<Vec<Complex64>> {
    let schur = Schur::try_new(h.clone(), f64::EPSILON, 10_000)
        .ok_or_else(|| Error::NotDiagonalizable("Schur iteration did not converge".into()))?;
    let ev = schur
        .eigenvalues()
        .ok_or_else(|| Error::NotDiagonalizable("Schur form is not triangular".into()))?;
    let mut ev: Vec<Complex64> = ev.iter().copied().collect();
    ev.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(ev)
}

pub fn build_system(h: &CMatrix) -> Result<FiniteBiorthoSystem> {
    let n = h.nrows();
    if n == 0 || n != h.ncols() {
        return Err(Error::Dimension(format!("expected a nonempty square matrix, got {}x{}", h.nrows(), h.ncols())));
    }
    if n > MAX_DIM {
        return Err(Error::Dimension(format!("dimension {n} exceeds the cap of {MAX_DIM}")));
    }
    if h.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::InvalidParameter("matrix has non-finite entries".into()));
    }
    let scale = operator_norm(h);
    let eigenvalues = sorted_eigenvalues(h)?;
    let gap_floor = GAP_TOL * scale;
    for i in 0..n {
        for j in i + 1..n {
            let gap = (eigenvalues[i] - eigenvalues[j]).norm();
            if gap <= gap_floor {
                return Err(Error::NotDiagonalizable(format!(
                    "eigenvalues {} and {} are {gap:e} apart",
                    eigenvalues[i], eigenvalues[j]
                )));
            }
        }
    }
    let complex_spectrum = eigenvalues.iter().any(|e| e.im.abs() > REAL_TOL * scale.max(1.0));

    let identity = CMatrix::identity(n, n);
    let mut phi = CMatrix::zeros(n, n);
    for (k, &e) in eigenvalues.iter().enumerate() {
        let v = null_vector(&(h - &identity * e));
        phi.set_column(k, &v);
    }
    let inv = phi
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::NotDiagonalizable("eigenvector matrix is singular".into()))?;
    let psi = inv.adjoint();
    let s_phi = &phi * phi.adjoint();
    let s_psi = &psi * psi.adjoint();
    Ok(FiniteBiorthoSystem {
        h: h.clone(),
        eigenvalues,
        phi,
        psi,
        s_phi,
        s_psi,
        complex_spectrum,
    })
}

impl FiniteBiorthoSystem {
    pub fn dim(&self) -> usize {
        self.h.nrows()
    }

    pub fn phi_k(&self, k: usize) -> CVector {
        self.phi.column(k).into_owned()
    }

    pub fn psi_k(&self, k: usize) -> CVector {
        self.psi.column(k).into_owned()
    }

    /// `max |<phi_k, Psi_l> - delta_kl|`
    pub fn biorthonormality_defect(&self) -> f64 {
        let g = self.phi.adjoint() * &self.psi;
        max_abs(&(g - CMatrix::identity(self.dim(), self.dim())))
    }

    /// `max |S_phi S_Psi - 1|`
    pub fn inverse_defect(&self) -> f64 {
        let p = &self.s_phi * &self.s_psi;
        max_abs(&(p - CMatrix::identity(self.dim(), self.dim())))
    }

    /// `max |sum_k |phi_k><Psi_k| - 1|`
    pub fn resolution_defect(&self) -> f64 {
        let r = &self.phi * self.psi.adjoint();
        max_abs(&(r - CMatrix::identity(self.dim(), self.dim())))
    }

    /// 2-norm condition number of `S_phi`.
    pub fn condition_number(&self) -> f64 {
        let s = singular_values(&self.s_phi);
        match (s.first(), s.last()) {
            (Some(&hi), Some(&lo)) if lo > 0.0 => hi / lo,
            _ => f64::INFINITY,
        }
    }

    /// Largest `|H^dagger Psi_k - conj(E_k) Psi_k|` over unit-normalized `Psi_k`.
    pub fn dual_eigen_residual(&self) -> f64 {
        let hd = self.h.adjoint();
        (0..self.dim())
            .map(|k| {
                let p = self.psi_k(k);
                let r = &hd * &p - &p * self.eigenvalues[k].conj();
                r.norm() / p.norm()
            })
            .fold(0.0, f64::max)
    }

    /// Largest `|H phi_k - E_k phi_k|`.
    pub fn right_eigen_residual(&self) -> f64 {
        (0..self.dim())
            .map(|k| {
                let p = self.phi_k(k);
                (&self.h * &p - &p * self.eigenvalues[k]).norm()
            })
            .fold(0.0, f64::max)
    }

    /// `S_phi Psi_k = phi_k` and `S_Psi phi_k = Psi_k`, worst entry.
    pub fn metric_mapping_defect(&self) -> f64 {
        let a = max_abs(&(&self.s_phi * &self.psi - &self.phi));
        let b = max_abs(&(&self.s_psi * &self.phi - &self.psi));
        a.max(b)
    }
}

pub fn verify_intertwining(sys: &FiniteBiorthoSystem) -> IntertwiningReport {
    let h = &sys.h;
    let hd = h.adjoint();
    let hn = max_abs(h);
    let rel = |num: f64, s: &CMatrix| {
        let d = hn * max_abs(s);
        if d > 0.0 {
            num / d
        } else {
            num
        }
    };
    let psi_residual = rel(max_abs(&(&sys.s_psi * h - &hd * &sys.s_psi)), &sys.s_psi);
    let phi_residual = rel(max_abs(&(&sys.s_phi * &hd - h * &sys.s_phi)), &sys.s_phi);
    IntertwiningReport {
        psi_residual,
        phi_residual,
    }
}

/// Maps an eigenvector of `h1` through an intertwiner `x` with
/// `x h1 = h2 x`, and checks that the image is an eigenvector of `h2`.
pub fn intertwine_map(x: &CMatrix, h1: &CMatrix, h2: &CMatrix, phi: &CVector) -> Result<IntertwinedVector> {
    let n = phi.len();
    for (name, m) in [("X", x), ("H1", h1), ("H2", h2)] {
        if m.nrows() != n || m.ncols() != n {
            return Err(Error::Dimension(format!("{name} is {}x{}, vector has length {n}", m.nrows(), m.ncols())));
        }
    }
    let scale = max_abs(x) * max_abs(h1).max(max_abs(h2));
    let relation = max_abs(&(x * h1 - h2 * x));
    let relation = if scale > 0.0 { relation / scale } else { relation };
    if relation > INTERTWINE_TOL {
        return Err(Error::IntertwiningViolated(relation));
    }
    let pn = phi.norm();
    if pn == 0.0 {
        return Err(Error::InvalidParameter("zero vector".into()));
    }
    let hphi = h1 * phi;
    let e = phi.dotc(&hphi) / Complex64::from(pn * pn);
    let own = (&hphi - phi * e).norm() / pn;
    if own > INTERTWINE_TOL * max_abs(h1).max(1.0) {
        return Err(Error::InvalidParameter(format!("vector is not an eigenvector of H1 (residual {own:e})")));
    }
    let y = x * phi;
    let yn = y.norm();
    if yn <= KERNEL_TOL * pn * max_abs(x).max(1.0) {
        return Err(Error::Kernel(yn / pn));
    }
    let residual = (h2 * &y - &y * e).norm() / yn;
    if residual > INTERTWINE_TOL * max_abs(h2).max(1.0) {
        return Err(Error::IntertwiningViolated(residual));
    }
    Ok(IntertwinedVector {
        vector: y,
        eigenvalue: e,
        residual,
    })
}
