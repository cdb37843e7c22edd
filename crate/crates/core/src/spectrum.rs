//! Closed-form eigen-system of the deformed Dirac Hamiltonians.
//!
//! For a Landau level `n >= 1` the energies are `E(+-) = +-eps sqrt(n - V^2)`
//! (principal branch), and right/left eigenvectors mix the raised state
//! with its partner through the coefficients
//!
//! ```text
//! alpha(+-) = -+ i (sqrt(n - V^2) -+ i V) / sqrt(n)
//! beta(+-)  = -+ i (sqrt(n - V^2) +- i V) / sqrt(n)
//! ```
//!
//! The `n = 0` level is special: only one eigenvector exists for `V > 0`.
//! Eigenvectors are normalized to unit length; they are not
//! biorthonormalized because that normalization diverges at exceptional
//! points.

use std::fmt;

use num_complex::Complex64;

use crate::dirac::{DiracModel, Layout};
use crate::fock::{Component, FockIndex, Spinor, TruncationSpec};
use crate::linalg::{I, ZERO};

/// Default half-width of the exceptional band `|n - V^2| <= tol`.
pub const DEFAULT_TOL_EP: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionClass {
    /// `n > V^2`: real pair of energies.
    Symmetric,
    /// `n < V^2`: imaginary conjugate pair.
    Broken,
    /// `n = V^2`: coalesced energies and eigenvectors.
    Exceptional,
}

impl RegionClass {
    pub fn as_str(self) -> &'static str {
        match self {
            RegionClass::Symmetric => "symmetric",
            RegionClass::Broken => "broken",
            RegionClass::Exceptional => "exceptional",
        }
    }
}

impl fmt::Display for RegionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Region of Landau level `n2` at potential `v`.
///
/// The zero level is never exceptional: for `V > 0` it is broken, and at
/// `V = 0` the coalescence is an ordinary Hermitian degeneracy.
pub fn classify(n2: usize, v: f64, tol: f64) -> RegionClass {
    if n2 == 0 {
        return if v == 0.0 {
            RegionClass::Symmetric
        } else {
            RegionClass::Broken
        };
    }
    let d = n2 as f64 - v * v;
    if d.abs() <= tol {
        RegionClass::Exceptional
    } else if d > 0.0 {
        RegionClass::Symmetric
    } else {
        RegionClass::Broken
    }
}

/// Principal `sqrt(n - V^2)`, snapped to zero inside the exceptional band.
pub fn level_root(n2: usize, v: f64, tol: f64) -> Complex64 {
    let d = n2 as f64 - v * v;
    if n2 > 0 && d.abs() <= tol {
        ZERO
    } else if d >= 0.0 {
        Complex64::new(d.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-d).sqrt())
    }
}

/// `(E(+), E(-))` of the K-cone, positive-field Hamiltonian at level
/// `n2 >= 1`.
pub fn eigenvalues(n2: usize, v: f64, epsilon: f64) -> (Complex64, Complex64) {
    eigenvalues_with_tol(n2, v, epsilon, DEFAULT_TOL_EP)
}

pub fn eigenvalues_with_tol(n2: usize, v: f64, epsilon: f64, tol: f64) -> (Complex64, Complex64) {
    let root = level_root(n2, v, tol) * epsilon;
    (root, -root)
}

/// `(alpha(+), alpha(-))` for level `n2 >= 1`.
pub fn alpha(n2: usize, v: f64, tol: f64) -> (Complex64, Complex64) {
    let s = level_root(n2, v, tol);
    let sq = (n2 as f64).sqrt();
    let iv = I * v;
    ((-I) * (s - iv) / sq, I * (s + iv) / sq)
}

/// `(beta(+), beta(-))`, i.e. `alpha` at `-V`.
pub fn beta(n2: usize, v: f64, tol: f64) -> (Complex64, Complex64) {
    alpha(n2, -v, tol)
}

/// Eigen-data of one sector.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorEigen {
    /// Fock label of the sector's raised state.
    pub label: FockIndex,
    /// Landau level (occupation of the active mode).
    pub level: usize,
    /// Occupation of the spectator mode.
    pub degeneracy: usize,
    pub class: RegionClass,
    pub e_plus: Complex64,
    pub e_minus: Complex64,
    pub alpha_plus: Option<Complex64>,
    pub alpha_minus: Option<Complex64>,
    pub beta_plus: Option<Complex64>,
    pub beta_minus: Option<Complex64>,
    pub phi_plus: Option<Spinor>,
    pub phi_minus: Option<Spinor>,
    pub psi_plus: Option<Spinor>,
    pub psi_minus: Option<Spinor>,
    /// `V = 0` zero level, where both branches collapse to one state.
    pub hermitian_limit: bool,
}

impl SectorEigen {
    /// Right eigenvectors that exist, with their branch sign and energy.
    pub fn right_vectors(&self) -> Vec<(Branch, Complex64, &Spinor)> {
        let mut out = Vec::with_capacity(2);
        if let Some(p) = &self.phi_plus {
            out.push((Branch::Plus, self.e_plus, p));
        }
        if let Some(p) = &self.phi_minus {
            out.push((Branch::Minus, self.e_minus, p));
        }
        out
    }

    pub fn left_vectors(&self) -> Vec<(Branch, Complex64, &Spinor)> {
        let mut out = Vec::with_capacity(2);
        if let Some(p) = &self.psi_plus {
            out.push((Branch::Plus, self.e_plus, p));
        }
        if let Some(p) = &self.psi_minus {
            out.push((Branch::Minus, self.e_minus, p));
        }
        out
    }

    pub fn phi(&self, b: Branch) -> Option<&Spinor> {
        match b {
            Branch::Plus => self.phi_plus.as_ref(),
            Branch::Minus => self.phi_minus.as_ref(),
        }
    }

    pub fn psi(&self, b: Branch) -> Option<&Spinor> {
        match b {
            Branch::Plus => self.psi_plus.as_ref(),
            Branch::Minus => self.psi_minus.as_ref(),
        }
    }

    pub fn energy(&self, b: Branch) -> Complex64 {
        match b {
            Branch::Plus => self.e_plus,
            Branch::Minus => self.e_minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn other(self) -> Self {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }

    pub fn sign(self) -> char {
        match self {
            Branch::Plus => '+',
            Branch::Minus => '-',
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign())
    }
}

/// Analytic eigen-system of one Hamiltonian variant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticSpectrum {
    model: DiracModel,
    tol_ep: f64,
}

impl AnalyticSpectrum {
    pub fn new(model: DiracModel) -> Self {
        AnalyticSpectrum {
            model,
            tol_ep: DEFAULT_TOL_EP,
        }
    }

    pub fn with_tolerance(mut self, tol_ep: f64) -> Self {
        self.tol_ep = tol_ep;
        self
    }

    pub fn model(&self) -> &DiracModel {
        &self.model
    }

    pub fn tol_ep(&self) -> f64 {
        self.tol_ep
    }

    // Smallest truncation holding the sector.
    fn sector_truncation(&self, label: FockIndex) -> TruncationSpec {
        TruncationSpec::new(label.n1.max(1), label.n2.max(1)).expect("n2_max >= 1")
    }

    /// Sector by Fock label of its raised state.
    pub fn sector(&self, n1: usize, n2: usize) -> SectorEigen {
        let label = FockIndex::new(n1, n2);
        if self.model.level(label) == 0 {
            self.zero_mode_at(label)
        } else {
            self.excited(label)
        }
    }

    /// Sector by degeneracy index and Landau level.
    pub fn level(&self, degeneracy: usize, level: usize) -> SectorEigen {
        let l = self.model.sector_label(degeneracy, level);
        self.sector(l.n1, l.n2)
    }

    /// The `n = 0` sector with degeneracy index `degeneracy`.
    pub fn zero_mode(&self, degeneracy: usize) -> SectorEigen {
        self.zero_mode_at(self.model.sector_label(degeneracy, 0))
    }

    fn zero_mode_at(&self, label: FockIndex) -> SectorEigen {
        let m = &self.model;
        let trunc = self.sector_truncation(label);
        let iev = I * (m.epsilon() * m.v());
        let (e_plus, state) = match m.layout() {
            Layout::UpperRaised => (
                iev,
                Spinor::basis(trunc, Component::Upper, label).expect("label in truncation"),
            ),
            Layout::LowerRaised => (
                -iev,
                Spinor::basis(trunc, Component::Lower, label)
                    .expect("label in truncation")
                    .scale(Complex64::new(-1.0, 0.0)),
            ),
        };
        SectorEigen {
            label,
            level: 0,
            degeneracy: m.degeneracy_index(label),
            class: classify(0, m.v(), self.tol_ep),
            e_plus,
            e_minus: -e_plus,
            alpha_plus: None,
            alpha_minus: None,
            beta_plus: None,
            beta_minus: None,
            phi_plus: Some(state.clone()),
            phi_minus: None,
            psi_plus: None,
            psi_minus: Some(state),
            hermitian_limit: m.v() == 0.0,
        }
    }

    fn excited(&self, label: FockIndex) -> SectorEigen {
        let m = &self.model;
        let n = m.level(label);
        let v = m.v();
        let trunc = self.sector_truncation(label);
        let (ep, em) = eigenvalues_with_tol(n, v, m.epsilon(), self.tol_ep);
        let (ap, am) = alpha(n, v, self.tol_ep);
        let (bp, bm) = beta(n, v, self.tol_ep);
        let partner = label.with_occupation(m.active_mode(), n - 1);

        let vector = |coef: Complex64| -> Spinor {
            let norm = (1.0 + coef.norm_sqr()).sqrt();
            let entries = match m.layout() {
                Layout::UpperRaised => [
                    (Component::Upper, label, Complex64::new(1.0 / norm, 0.0)),
                    (Component::Lower, partner, coef / norm),
                ],
                Layout::LowerRaised => [
                    (Component::Upper, partner, coef / norm),
                    (Component::Lower, label, Complex64::new(-1.0 / norm, 0.0)),
                ],
            };
            Spinor::from_entries(trunc, entries).expect("sector in truncation")
        };
        // The lower-raised layout maps onto the upper-raised one with E -> -E.
        let (e_plus, e_minus) = match m.layout() {
            Layout::UpperRaised => (ep, em),
            Layout::LowerRaised => (-ep, -em),
        };

        SectorEigen {
            label,
            level: n,
            degeneracy: m.degeneracy_index(label),
            class: classify(n, v, self.tol_ep),
            e_plus,
            e_minus,
            alpha_plus: Some(ap),
            alpha_minus: Some(am),
            beta_plus: Some(bp),
            beta_minus: Some(bm),
            phi_plus: Some(vector(ap)),
            phi_minus: Some(vector(am)),
            psi_plus: Some(vector(bp)),
            psi_minus: Some(vector(bm)),
            hermitian_limit: false,
        }
    }

    /// Every sector of a truncation, in lexicographic label order.
    pub fn sectors(&self, trunc: TruncationSpec) -> Vec<SectorEigen> {
        self.model
            .sectors(trunc)
            .into_iter()
            .map(|l| self.sector(l.n1, l.n2))
            .collect()
    }

    /// Energies of all existing right eigenvectors of a truncation, with
    /// multiplicity.
    pub fn truncated_spectrum(&self, trunc: TruncationSpec) -> Vec<Complex64> {
        self.sectors(trunc)
            .iter()
            .flat_map(|s| s.right_vectors().into_iter().map(|(_, e, _)| e).collect::<Vec<_>>())
            .collect()
    }
}

pub fn zero_mode(model: &DiracModel, n1: usize) -> SectorEigen {
    AnalyticSpectrum::new(*model).zero_mode(n1)
}

pub fn sector_eigen(model: &DiracModel, n1: usize, n2: usize) -> SectorEigen {
    AnalyticSpectrum::new(*model).sector(n1, n2)
}

/// One row of a V-sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowRow {
    pub v: f64,
    pub n2: usize,
    pub e_plus: Complex64,
    pub e_minus: Complex64,
    pub class: RegionClass,
    pub exists_plus: bool,
    pub exists_minus: bool,
}

/// Landau-level energies along a grid of potentials, ordered by `(V, n2)`.
/// `template` fixes cone, field sign and energy scale; its own potential is
/// ignored.
pub fn spectrum_flow(template: &DiracModel, v_grid: &[f64], n2_max: usize, tol_ep: f64) -> Vec<FlowRow> {
    let mut rows = Vec::with_capacity(v_grid.len() * (n2_max + 1));
    for &v in v_grid {
        rows.extend(flow_at(template, v, n2_max, tol_ep));
    }
    rows
}

/// Rows of [`spectrum_flow`] for a single potential.
pub fn flow_at(template: &DiracModel, v: f64, n2_max: usize, tol_ep: f64) -> Vec<FlowRow> {
    let analytic = AnalyticSpectrum::new(template.with_potential(v)).with_tolerance(tol_ep);
    (0..=n2_max)
        .map(|n| {
            let s = analytic.level(0, n);
            FlowRow {
                v,
                n2: n,
                e_plus: s.e_plus,
                e_minus: s.e_minus,
                class: s.class,
                exists_plus: s.phi_plus.is_some() || s.hermitian_limit,
                exists_minus: s.phi_minus.is_some() || s.hermitian_limit,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{Cone, FieldSign};
    use crate::fock::inner;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn eigenvalue_examples() {
        let (p, m) = eigenvalues(1, 0.0, 1.0);
        assert_eq!((p, m), (c(1.0, 0.0), c(-1.0, 0.0)));

        // sqrt(1 - 0.81) = sqrt(0.19)
        let (p, m) = eigenvalues(1, 0.9, 1.0);
        assert!(close(p, c(0.435_889_894_354_067_4, 0.0), 1e-15));
        assert!(close(m, -p, 0.0));

        // sqrt(1.21 - 1) = sqrt(0.21), principal branch gives +i for E(+)
        let (p, m) = eigenvalues(1, 1.1, 1.0);
        assert!(close(p, c(0.0, 0.458_257_569_495_584_04), 1e-15));
        assert!(close(m, c(0.0, -0.458_257_569_495_584_04), 1e-15));

        assert_eq!(eigenvalues(1, 1.0, 1.0), (ZERO, -ZERO));
        // energy scale is a plain multiplier
        let (p, _) = eigenvalues(4, 0.0, 2.5);
        assert!(close(p, c(5.0, 0.0), 1e-15));
    }

    #[test]
    fn exceptional_band_snaps_roots() {
        let v = 2f64.sqrt();
        assert_ne!(2.0 - v * v, 0.0);
        assert_eq!(eigenvalues(2, v, 1.0).0, ZERO);
        let (ap, am) = alpha(2, v, DEFAULT_TOL_EP);
        assert_eq!(ap, am);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(2, 0.9, DEFAULT_TOL_EP), RegionClass::Symmetric);
        assert_eq!(classify(1, 1.1, DEFAULT_TOL_EP), RegionClass::Broken);
        assert_eq!(classify(1, 1.0, 1e-12), RegionClass::Exceptional);
        assert_eq!(classify(0, 0.3, DEFAULT_TOL_EP), RegionClass::Broken);
        assert_eq!(classify(0, 1e-9, DEFAULT_TOL_EP), RegionClass::Broken);
        assert_eq!(classify(0, 0.0, DEFAULT_TOL_EP), RegionClass::Symmetric);
        assert_eq!(classify(3, 3f64.sqrt(), DEFAULT_TOL_EP), RegionClass::Exceptional);
        assert_eq!(classify(3, 3f64.sqrt() + 1e-6, DEFAULT_TOL_EP), RegionClass::Broken);
    }

    #[test]
    fn zero_mode_k_plus() {
        let m = DiracModel::k_plus(0.9).unwrap();
        let z = zero_mode(&m, 0);
        assert!(close(z.e_plus, c(0.0, 0.9), 1e-15));
        assert!(close(z.e_minus, c(0.0, -0.9), 1e-15));
        assert!(z.phi_minus.is_none() && z.psi_plus.is_none());
        let phi = z.phi_plus.as_ref().unwrap();
        assert_eq!(phi.get(Component::Upper, FockIndex::VACUUM), c(1.0, 0.0));
        assert_eq!(z.psi_minus.as_ref(), Some(phi));
        assert!(!z.hermitian_limit);
        assert_eq!(z.class, RegionClass::Broken);
    }

    #[test]
    fn zero_mode_k_prime() {
        let m = DiracModel::new(Cone::KPrime, FieldSign::Plus, 0.9, 1.0).unwrap();
        let z = zero_mode(&m, 2);
        assert!(close(z.e_plus, c(0.0, -0.9), 1e-15));
        let phi = z.phi_plus.as_ref().unwrap();
        assert_eq!(phi.get(Component::Lower, FockIndex::new(2, 0)), c(-1.0, 0.0));
        assert_eq!(phi.support().count(), 1);
        assert!(z.phi_minus.is_none());
        let hphi = m.apply(phi).unwrap();
        assert!((&hphi - &phi.scale(z.e_plus)).max_abs() < 1e-15);
    }

    #[test]
    fn zero_mode_hermitian_limit() {
        let z = zero_mode(&DiracModel::k_plus(0.0).unwrap(), 0);
        assert_eq!(z.e_plus, ZERO);
        assert_eq!(z.e_minus, ZERO);
        assert!(z.hermitian_limit);
        assert_eq!(z.class, RegionClass::Symmetric);
    }

    #[test]
    fn alpha_hermitian_limit() {
        let s = sector_eigen(&DiracModel::k_plus(0.0).unwrap(), 0, 1);
        assert!(close(s.alpha_plus.unwrap(), c(0.0, -1.0), 1e-15));
        assert!(close(s.alpha_minus.unwrap(), c(0.0, 1.0), 1e-15));
        assert!(close(s.beta_plus.unwrap(), c(0.0, -1.0), 1e-15));
        assert!(close(s.beta_minus.unwrap(), c(0.0, 1.0), 1e-15));
    }

    #[test]
    fn alpha_at_first_exceptional_point() {
        let s = sector_eigen(&DiracModel::k_plus(1.0).unwrap(), 3, 1);
        assert_eq!(s.class, RegionClass::Exceptional);
        assert!(close(s.alpha_plus.unwrap(), c(-1.0, 0.0), 1e-15));
        assert!(close(s.alpha_minus.unwrap(), c(-1.0, 0.0), 1e-15));
        assert_eq!(s.phi_plus, s.phi_minus);
        let r = 1.0 / 2f64.sqrt();
        let phi = s.phi_plus.unwrap();
        assert!(close(phi.get(Component::Upper, FockIndex::new(3, 1)), c(r, 0.0), 1e-15));
        assert!(close(phi.get(Component::Lower, FockIndex::new(3, 0)), c(-r, 0.0), 1e-15));
    }

    #[test]
    fn alpha_modulus_at_v_one_level_two() {
        // alpha(+-) = -+ i (1 -+ i) / sqrt(2), so |alpha| = 1
        let (ap, am) = alpha(2, 1.0, DEFAULT_TOL_EP);
        let r = 1.0 / 2f64.sqrt();
        assert!(close(ap, c(0.0, -1.0) * c(1.0, -1.0) * r, 1e-15));
        assert!(close(am, c(0.0, 1.0) * c(1.0, 1.0) * r, 1e-15));
        assert!((ap.norm() - 1.0).abs() < 1e-15);
        assert!((am.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eigenvectors_are_unit_and_satisfy_residuals() {
        for cone in [Cone::K, Cone::KPrime] {
            for field in [FieldSign::Plus, FieldSign::Minus] {
                for v in [0.0, 0.4, 1.0, 1.3, 2.2] {
                    let m = DiracModel::new(cone, field, v, 1.7).unwrap();
                    let analytic = AnalyticSpectrum::new(m);
                    let tr = TruncationSpec::new(3, 6).unwrap();
                    for s in analytic.sectors(tr) {
                        for (_, e, phi) in s.right_vectors() {
                            assert!((phi.norm() - 1.0).abs() < 1e-15);
                            let r = &m.apply(phi).unwrap() - &phi.scale(e);
                            assert!(r.norm() < 1e-12 * m.epsilon(), "{m} {:?}", s.label);
                        }
                        for (_, e, psi) in s.left_vectors() {
                            assert!((psi.norm() - 1.0).abs() < 1e-15);
                            let r = &m.adjoint().apply(psi).unwrap() - &psi.scale(e);
                            assert!(r.norm() < 1e-12 * m.epsilon(), "{m} {:?}", s.label);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn k_prime_negates_k() {
        for v in [0.2, 0.9, 1.6] {
            let k = AnalyticSpectrum::new(DiracModel::k_plus(v).unwrap());
            let kp = AnalyticSpectrum::new(
                DiracModel::new(Cone::KPrime, FieldSign::Plus, v, 1.0).unwrap(),
            );
            for n in 1..8 {
                let a = k.sector(0, n);
                let b = kp.sector(0, n);
                assert!(close(b.e_plus, -a.e_plus, 0.0));
                assert!(close(b.e_minus, -a.e_minus, 0.0));
            }
        }
    }

    #[test]
    fn degeneracy_independence() {
        let analytic = AnalyticSpectrum::new(DiracModel::k_plus(0.77).unwrap());
        for n2 in 0..6 {
            let base = analytic.sector(0, n2);
            for n1 in 1..5 {
                let s = analytic.sector(n1, n2);
                assert_eq!((s.e_plus, s.e_minus), (base.e_plus, base.e_minus));
                assert_eq!(s.alpha_plus, base.alpha_plus);
            }
        }
    }

    #[test]
    fn hermitian_limit_recovers_orthonormal_basis() {
        let s = sector_eigen(&DiracModel::k_plus(1e-9).unwrap(), 0, 2);
        let r = 1.0 / 2f64.sqrt();
        let p = s.phi_plus.as_ref().unwrap();
        assert!(close(p.get(Component::Upper, FockIndex::new(0, 2)), c(r, 0.0), 1e-9));
        assert!(close(p.get(Component::Lower, FockIndex::new(0, 1)), c(0.0, -r), 1e-9));
        assert!(inner(p, s.phi_minus.as_ref().unwrap()).norm() < 1e-8);
    }

    #[test]
    fn flow_examples() {
        let k = DiracModel::k_plus(0.0).unwrap();
        let rows = spectrum_flow(&k, &[0.0], 3, DEFAULT_TOL_EP);
        assert_eq!(rows.len(), 4);
        for r in &rows {
            assert!(close(r.e_plus, c((r.n2 as f64).sqrt(), 0.0), 1e-15));
            assert!(close(r.e_minus, c(-(r.n2 as f64).sqrt(), 0.0), 1e-15));
            assert!(r.exists_plus && r.exists_minus);
        }

        let rows = spectrum_flow(&k, &[0.9], 2, DEFAULT_TOL_EP);
        assert!(close(rows[0].e_plus, c(0.0, 0.9), 1e-15));
        assert!(rows[0].exists_plus && !rows[0].exists_minus);

        let rows = spectrum_flow(&k, &[1.1], 1, DEFAULT_TOL_EP);
        assert_eq!(rows[1].class, RegionClass::Broken);
        assert!(close(rows[1].e_plus, rows[1].e_minus.conj(), 1e-15));
        assert_eq!(rows[1].e_plus.re, 0.0);

        let rows = spectrum_flow(&k, &[0.5, 0.1], 1, DEFAULT_TOL_EP);
        let order: Vec<_> = rows.iter().map(|r| (r.v, r.n2)).collect();
        assert_eq!(order, vec![(0.5, 0), (0.5, 1), (0.1, 0), (0.1, 1)]);
    }
}
