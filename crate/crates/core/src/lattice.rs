//! Lattice layer: the two-site gain/loss dimer and the honeycomb Bloch
//! Hamiltonian whose zeros at `K`, `K'` give the Dirac cones.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{max_abs, CMatrix, CVector, I};
use crate::spectrum::RegionClass;

pub type Vec2 = [f64; 2];

/// Neighbor-cell vectors in units of the lattice constant.
pub const A1: Vec2 = [-0.5, 0.866_025_403_784_438_6];
pub const A2: Vec2 = [0.5, 0.866_025_403_784_438_6];

pub const DIRAC_TOL: f64 = 1e-12;

/// `K = (2 pi / 3)(1, sqrt 3)`
pub fn k_point() -> Vec2 {
    [2.0 * PI / 3.0, 2.0 * PI / 3.0 * 3f64.sqrt()]
}

/// `K' = (2 pi / 3)(-1, sqrt 3)`
pub fn k_prime_point() -> Vec2 {
    [-2.0 * PI / 3.0, 2.0 * PI / 3.0 * 3f64.sqrt()]
}

fn dot(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

fn sqrt_snap(z: Complex64, tol: f64) -> Complex64 {
    if z.norm() <= tol {
        Complex64::new(0.0, 0.0)
    } else {
        z.sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimerParams {
    pub g: f64,
    pub v: f64,
}

impl DimerParams {
    pub fn new(g: f64, v: f64) -> Result<Self> {
        if !g.is_finite() || !v.is_finite() || g < 0.0 || v < 0.0 {
            return Err(Error::InvalidParameter(format!("dimer needs finite g >= 0 and V >= 0, got g={g}, V={v}")));
        }
        Ok(DimerParams { g, v })
    }

    /// `[[iV, g], [g, -iV]]`
    pub fn matrix(&self) -> CMatrix {
        let g = Complex64::new(self.g, 0.0);
        CMatrix::from_row_slice(2, 2, &[I * self.v, g, g, -I * self.v])
    }

    pub fn class(&self, tol: f64) -> RegionClass {
        let d = self.g * self.g - self.v * self.v;
        if d.abs() <= tol && self.v > 0.0 {
            RegionClass::Exceptional
        } else if d >= 0.0 || self.v == 0.0 {
            RegionClass::Symmetric
        } else {
            RegionClass::Broken
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimerEigen {
    pub e_plus: Complex64,
    pub e_minus: Complex64,
    pub v_plus: CVector,
    /// `None` at the exceptional point, where only one eigenvector exists.
    pub v_minus: Option<CVector>,
    pub exceptional: bool,
}

fn dimer_vector(p: &DimerParams, e: Complex64) -> CVector {
    let g = Complex64::new(p.g, 0.0);
    let a = CVector::from_vec(vec![g, e - I * p.v]);
    let b = CVector::from_vec(vec![e + I * p.v, g]);
    let v = if a.norm() >= b.norm() { a } else { b };
    let n = v.norm();
    if n == 0.0 {
        // H = 0: any vector works
        CVector::from_vec(vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)])
    } else {
        v / Complex64::new(n, 0.0)
    }
}

pub fn dimer_eigen(p: &DimerParams) -> DimerEigen {
    dimer_eigen_with_tol(p, DIRAC_TOL)
}

pub fn dimer_eigen_with_tol(p: &DimerParams, tol: f64) -> DimerEigen {
    let d = Complex64::new(p.g * p.g - p.v * p.v, 0.0);
    let e = sqrt_snap(d, tol);
    let exceptional = p.class(tol) == RegionClass::Exceptional;
    let v_plus = dimer_vector(p, e);
    let v_minus = if exceptional {
        None
    } else if p.g == 0.0 && p.v == 0.0 {
        Some(CVector::from_vec(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]))
    } else {
        Some(dimer_vector(p, -e))
    };
    DimerEigen {
        e_plus: e,
        e_minus: -e,
        v_plus,
        v_minus,
        exceptional,
    }
}

/// `PT v = P conj(v)` with `P` swapping the two sites.
pub fn dimer_pt(v: &CVector) -> CVector {
    CVector::from_vec(vec![v[1].conj(), v[0].conj()])
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimerPtReport {
    pub class: RegionClass,
    /// `|(PT) H (PT) - H|_max`
    pub matrix_residual: f64,
    /// Symmetric phase: `|PT(c phi) - c phi|` after choosing the phase `c`.
    /// Broken phase: `|H (PT phi) - conj(E) (PT phi)|`.
    pub eigen_residuals: Vec<f64>,
    /// Phases `c` making each eigenvector PT-invariant (symmetric phase only).
    pub phases: Vec<Complex64>,
}

impl DimerPtReport {
    pub fn max_residual(&self) -> f64 {
        self.eigen_residuals.iter().copied().fold(self.matrix_residual, f64::max)
    }
}

pub fn dimer_pt_check(p: &DimerParams) -> DimerPtReport {
    let h = p.matrix();
    let conj_h = h.map(|z| z.conj());
    let swap = CMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0].map(|x| Complex64::new(x, 0.0)));
    let matrix_residual = max_abs(&(&swap * conj_h * &swap - &h));
    let class = p.class(DIRAC_TOL);
    let eig = dimer_eigen(p);
    let mut pairs = vec![(eig.e_plus, eig.v_plus.clone())];
    if let Some(v) = &eig.v_minus {
        pairs.push((eig.e_minus, v.clone()));
    }
    let mut eigen_residuals = Vec::new();
    let mut phases = Vec::new();
    for (e, v) in pairs {
        let w = dimer_pt(&v);
        if class == RegionClass::Broken {
            eigen_residuals.push((&h * &w - &w * e.conj()).norm());
        } else {
            // PT v = lambda v with |lambda| = 1; c = sqrt(lambda) gives PT(c v) = c v
            let lambda = v.dotc(&w);
            let c = (lambda / lambda.norm()).sqrt();
            let cv = &v * c;
            eigen_residuals.push((dimer_pt(&cv) - &cv).norm());
            phases.push(c);
        }
    }
    DimerPtReport {
        class,
        matrix_residual,
        eigen_residuals,
        phases,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochParams {
    t1: f64,
    mu_a: Complex64,
    mu_b: Complex64,
    a1: Vec2,
    a2: Vec2,
}

impl BlochParams {
    pub fn new(t1: f64, mu_a: Complex64, mu_b: Complex64) -> Result<Self> {
        Self::with_vectors(t1, mu_a, mu_b, A1, A2)
    }

    /// `mu_A = iV`, `mu_B = -iV`.
    pub fn balanced(t1: f64, v: f64) -> Result<Self> {
        Self::new(t1, I * v, -I * v)
    }

    pub fn with_vectors(t1: f64, mu_a: Complex64, mu_b: Complex64, a1: Vec2, a2: Vec2) -> Result<Self> {
        if !t1.is_finite() {
            return Err(Error::InvalidParameter(format!("hopping must be finite, got {t1}")));
        }
        let (l1, l2) = (dot(a1, a1).sqrt(), dot(a2, a2).sqrt());
        if (l1 - l2).abs() > 1e-12 * l1.max(l2) || l1 == 0.0 {
            return Err(Error::InvalidParameter(format!("neighbor-cell vectors must share a nonzero length, got {l1} and {l2}")));
        }
        let p = BlochParams { t1, mu_a, mu_b, a1, a2 };
        for (name, k) in [("K", k_point()), ("K'", k_prime_point())] {
            let f = p.f(k).norm();
            if f > DIRAC_TOL * t1.abs().max(1.0) {
                return Err(Error::InvalidParameter(format!("|f({name})| = {f:e} with the given vectors")));
            }
        }
        Ok(p)
    }

    pub fn t1(&self) -> f64 {
        self.t1
    }

    pub fn mu_a(&self) -> Complex64 {
        self.mu_a
    }

    pub fn mu_b(&self) -> Complex64 {
        self.mu_b
    }

    pub fn vectors(&self) -> (Vec2, Vec2) {
        (self.a1, self.a2)
    }

    /// `f(k) = t1 (1 + exp(i k.a1) + exp(i k.a2))`
    pub fn f(&self, k: Vec2) -> Complex64 {
        let e1 = Complex64::from_polar(1.0, dot(k, self.a1));
        let e2 = Complex64::from_polar(1.0, dot(k, self.a2));
        (Complex64::new(1.0, 0.0) + e1 + e2) * self.t1
    }

    pub fn is_hermitian(&self) -> bool {
        self.mu_a.im == 0.0 && self.mu_b.im == 0.0
    }
}

/// `[[mu_A, f(k)], [conj f(k), mu_B]]`
pub fn bloch_matrix(p: &BlochParams, k: Vec2) -> CMatrix {
    let f = p.f(k);
    CMatrix::from_row_slice(2, 2, &[p.mu_a, f, f.conj(), p.mu_b])
}

/// Eigenvalues of [`bloch_matrix`], `+` branch first.
pub fn bloch_eigenvalues(p: &BlochParams, k: Vec2) -> (Complex64, Complex64) {
    let f = p.f(k);
    let mean = (p.mu_a + p.mu_b) / 2.0;
    let half = (p.mu_a - p.mu_b) / 2.0;
    let root = sqrt_snap(half * half + f.norm_sqr(), DIRAC_TOL);
    (mean + root, mean - root)
}

/// Rectangular grid in the Brillouin-zone plane, inclusive of both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KGrid {
    pub kx: (f64, f64, usize),
    pub ky: (f64, f64, usize),
}

impl KGrid {
    pub fn new(kx: (f64, f64, usize), ky: (f64, f64, usize)) -> Result<Self> {
        for (lo, hi, n) in [kx, ky] {
            if !lo.is_finite() || !hi.is_finite() || n == 0 || (n == 1 && lo != hi) {
                return Err(Error::InvalidParameter(format!("bad grid axis ({lo}, {hi}, {n})")));
            }
        }
        Ok(KGrid { kx, ky })
    }

    fn axis((lo, hi, n): (f64, f64, usize)) -> Vec<f64> {
        if n == 1 {
            return vec![lo];
        }
        (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
    }

    /// Points in row-major order, `kx` fastest.
    pub fn points(&self) -> Vec<Vec2> {
        let xs = Self::axis(self.kx);
        Self::axis(self.ky)
            .into_iter()
            .flat_map(|y| xs.iter().map(move |&x| [x, y]))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandRow {
    pub k: Vec2,
    pub e_plus: Complex64,
    pub e_minus: Complex64,
}

pub fn band_surface(p: &BlochParams, grid: &KGrid) -> Vec<BandRow> {
    band_at_points(p, &grid.points())
}

pub fn band_at_points(p: &BlochParams, points: &[Vec2]) -> Vec<BandRow> {
    points
        .iter()
        .map(|&k| {
            let (e_plus, e_minus) = bloch_eigenvalues(p, k);
            BandRow { k, e_plus, e_minus }
        })
        .collect()
}
