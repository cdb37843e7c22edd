//! Gram-matrix diagnostics of the analytic eigenvectors: which right/left
//! pairs are biorthogonal in each region, how the frame operator
//! `S_Phi = sum |Phi><Phi|` maps left eigenvectors onto right ones, and
//! whether the right eigenvectors are complete.
//!
//! `S_Phi` is block diagonal (eigenvectors of different sectors are
//! orthogonal), so it is evaluated sector by sector without any truncation
//! error.

use num_complex::Complex64;

use crate::dirac::DiracModel;
use crate::error::{Error, Result};
use crate::fock::{inner, Component, Spinor, TruncationSpec};
use crate::linalg::{singular_values, sine_angle, spinor_to_vector, CMatrix, CVector, ZERO};
use crate::spectrum::{alpha, beta, AnalyticSpectrum, Branch, RegionClass, SectorEigen};

/// Threshold for "nonzero" on unit vectors.
pub const NONZERO_THRESHOLD: f64 = 1e-6;

/// Singular values above this certify completeness.
pub const RANK_THRESHOLD: f64 = 1e-10;

fn branch_index(b: Branch) -> usize {
    match b {
        Branch::Plus => 0,
        Branch::Minus => 1,
    }
}

const BRANCHES: [Branch; 2] = [Branch::Plus, Branch::Minus];

/// `G[j][k] = <Phi(j), Psi(k)>` within one sector.
#[derive(Debug, Clone, PartialEq)]
pub struct GramReport {
    pub label: crate::fock::FockIndex,
    pub level: usize,
    pub v: f64,
    pub class: RegionClass,
    pub entries: [[Option<Complex64>; 2]; 2],
}

impl GramReport {
    pub fn get(&self, phi: Branch, psi: Branch) -> Option<Complex64> {
        self.entries[branch_index(phi)][branch_index(psi)]
    }

    /// Largest modulus among `<Phi(+-), Psi(-+)>`.
    pub fn max_cross(&self) -> f64 {
        [self.entries[0][1], self.entries[1][0]]
            .into_iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Largest modulus among `<Phi(+-), Psi(+-)>`.
    pub fn max_same(&self) -> f64 {
        [self.entries[0][0], self.entries[1][1]]
            .into_iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn min_same(&self) -> f64 {
        [self.entries[0][0], self.entries[1][1]]
            .into_iter()
            .flatten()
            .map(|z| z.norm())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn min_cross(&self) -> f64 {
        [self.entries[0][1], self.entries[1][0]]
            .into_iter()
            .flatten()
            .map(|z| z.norm())
            .fold(f64::INFINITY, f64::min)
    }
}

fn gram_of(s: &SectorEigen, v: f64) -> GramReport {
    let mut entries = [[None; 2]; 2];
    for j in BRANCHES {
        for k in BRANCHES {
            if let (Some(phi), Some(psi)) = (s.phi(j), s.psi(k)) {
                entries[branch_index(j)][branch_index(k)] = Some(inner(phi, psi));
            }
        }
    }
    GramReport {
        label: s.label,
        level: s.level,
        v,
        class: s.class,
        entries,
    }
}

fn excited_sector(analytic: &AnalyticSpectrum, n1: usize, n2: usize) -> Result<SectorEigen> {
    let s = analytic.sector(n1, n2);
    if s.level == 0 {
        return Err(Error::InvalidParameter(
            "sector has Landau level 0; use zero_mode_gram".to_string(),
        ));
    }
    Ok(s)
}

/// Gram matrix of an excited sector.
pub fn gram(model: &DiracModel, n1: usize, n2: usize) -> Result<GramReport> {
    let analytic = AnalyticSpectrum::new(*model);
    Ok(gram_of(&excited_sector(&analytic, n1, n2)?, model.v()))
}

pub fn gram_with(analytic: &AnalyticSpectrum, n1: usize, n2: usize) -> Result<GramReport> {
    Ok(gram_of(&excited_sector(analytic, n1, n2)?, analytic.model().v()))
}

/// `<Phi(+), Phi(-)>` of an excited sector.
pub fn phi_phi_overlap(model: &DiracModel, n1: usize, n2: usize) -> Result<Complex64> {
    let s = excited_sector(&AnalyticSpectrum::new(*model), n1, n2)?;
    Ok(inner(s.phi_plus.as_ref().unwrap(), s.phi_minus.as_ref().unwrap()))
}

/// `<Psi(+), Psi(-)>` of an excited sector.
pub fn psi_psi_overlap(model: &DiracModel, n1: usize, n2: usize) -> Result<Complex64> {
    let s = excited_sector(&AnalyticSpectrum::new(*model), n1, n2)?;
    Ok(inner(s.psi_plus.as_ref().unwrap(), s.psi_minus.as_ref().unwrap()))
}

/// `conj(alpha(+)) beta(-)`, equal to `-1` whenever `n2 > V^2`.
pub fn region_identity(n2: usize, v: f64, tol: f64) -> Complex64 {
    alpha(n2, v, tol).0.conj() * beta(n2, v, tol).1
}

/// Frame operator restricted to one sector, in the sector basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorIntertwiner {
    pub label: crate::fock::FockIndex,
    pub level: usize,
    pub basis: Vec<(Component, crate::fock::FockIndex)>,
    pub matrix: CMatrix,
}

impl SectorIntertwiner {
    pub fn rank(&self) -> usize {
        singular_values(&self.matrix)
            .into_iter()
            .filter(|&s| s > RANK_THRESHOLD)
            .count()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.matrix.clone().symmetric_eigenvalues().iter().copied().collect()
    }
}

fn frame_matrix<'a, I>(model: &DiracModel, label: crate::fock::FockIndex, vectors: I) -> Result<SectorIntertwiner>
where
    I: IntoIterator<Item = &'a Spinor>,
{
    let basis = model.sector_basis(label);
    let dim = basis.len();
    let mut m = CMatrix::zeros(dim, dim);
    for v in vectors {
        let col: CVector = spinor_to_vector(v, &basis)?;
        m += &col * col.adjoint();
    }
    Ok(SectorIntertwiner {
        label,
        level: model.level(label),
        basis,
        matrix: m,
    })
}

/// `S_Phi` on one sector.
pub fn sector_s_phi(analytic: &AnalyticSpectrum, n1: usize, n2: usize) -> Result<SectorIntertwiner> {
    let s = analytic.sector(n1, n2);
    frame_matrix(analytic.model(), s.label, s.right_vectors().into_iter().map(|(_, _, v)| v))
}

/// `S_Psi` on one sector.
pub fn sector_s_psi(analytic: &AnalyticSpectrum, n1: usize, n2: usize) -> Result<SectorIntertwiner> {
    let s = analytic.sector(n1, n2);
    frame_matrix(analytic.model(), s.label, s.left_vectors().into_iter().map(|(_, _, v)| v))
}

/// Image of one eigenvector under a frame operator, with the branch it is
/// parallel to.
#[derive(Debug, Clone, PartialEq)]
pub struct IntertwinerImage {
    pub image: Spinor,
    pub matched_branch: Branch,
    /// Sine of the angle to the matched branch.
    pub parallel_residual: f64,
    /// Sine of the angle to the other branch.
    pub other_residual: f64,
}

fn frame_apply(frame: &[&Spinor], f: &Spinor) -> Spinor {
    frame.iter().fold(Spinor::zero(f.truncation()), |acc, v| {
        &acc + &v.scale(inner(v, f))
    })
}

fn match_branch(image: Spinor, targets: [&Spinor; 2]) -> IntertwinerImage {
    let sp = sine_angle(targets[0], &image);
    let sm = sine_angle(targets[1], &image);
    let (matched_branch, parallel_residual, other_residual) = if sp <= sm {
        (Branch::Plus, sp, sm)
    } else {
        (Branch::Minus, sm, sp)
    };
    IntertwinerImage {
        image,
        matched_branch,
        parallel_residual,
        other_residual,
    }
}

fn two_branch_sector(analytic: &AnalyticSpectrum, n1: usize, n2: usize) -> Result<SectorEigen> {
    let s = excited_sector(analytic, n1, n2)?;
    if s.class == RegionClass::Exceptional {
        let v = analytic.model().v();
        return Err(Error::ExceptionalSector {
            n2: s.level,
            v_sq: v * v,
        });
    }
    Ok(s)
}

/// `S_Phi Psi(branch)` and the right-eigenvector branch it lands on.
pub fn intertwiner_action(model: &DiracModel, n1: usize, n2: usize, branch: Branch) -> Result<IntertwinerImage> {
    intertwiner_action_with(&AnalyticSpectrum::new(*model), n1, n2, branch)
}

pub fn intertwiner_action_with(
    analytic: &AnalyticSpectrum,
    n1: usize,
    n2: usize,
    branch: Branch,
) -> Result<IntertwinerImage> {
    let s = two_branch_sector(analytic, n1, n2)?;
    let phis = [s.phi_plus.as_ref().unwrap(), s.phi_minus.as_ref().unwrap()];
    let image = frame_apply(&phis, s.psi(branch).unwrap());
    Ok(match_branch(image, phis))
}

/// `S_Psi Phi(branch)` and the left-eigenvector branch it lands on.
pub fn psi_intertwiner_action(model: &DiracModel, n1: usize, n2: usize, branch: Branch) -> Result<IntertwinerImage> {
    let s = two_branch_sector(&AnalyticSpectrum::new(*model), n1, n2)?;
    let psis = [s.psi_plus.as_ref().unwrap(), s.psi_minus.as_ref().unwrap()];
    let image = frame_apply(&psis, s.phi(branch).unwrap());
    Ok(match_branch(image, psis))
}

/// Largest `|<Phi_a, Psi_b>|` over pairs from different sectors.
pub fn cross_sector_overlap_max(analytic: &AnalyticSpectrum, trunc: TruncationSpec) -> f64 {
    let sectors = analytic.sectors(trunc);
    let mut worst: f64 = 0.0;
    for a in &sectors {
        for b in &sectors {
            if a.label == b.label {
                continue;
            }
            for (_, _, phi) in a.right_vectors() {
                for (_, _, psi) in b.left_vectors() {
                    worst = worst.max(inner(phi, psi).norm());
                }
                for (_, _, phi2) in b.right_vectors() {
                    worst = worst.max(inner(phi, phi2).norm());
                }
            }
        }
    }
    worst
}

/// Outcome of a completeness test of the right eigenvectors within a
/// truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct CompletenessReport {
    pub complete: bool,
    /// Dimension of the space the sectors close on.
    pub dim: usize,
    /// Number of right eigenvectors (columns).
    pub vectors: usize,
    pub rank: usize,
    pub smallest_singular_value: f64,
    /// Landau levels sitting on an exceptional point.
    pub deficient_levels: Vec<usize>,
    pub witness: Option<Spinor>,
    /// `max |<w, Phi>| / |w|` over every right eigenvector.
    pub max_overlap: f64,
}

impl CompletenessReport {
    pub fn rank_deficiency(&self) -> usize {
        self.dim - self.rank
    }
}

/// Matrix whose columns are all right eigenvectors of a truncation, on the
/// model's closed basis.
pub fn eigenvector_matrix(analytic: &AnalyticSpectrum, trunc: TruncationSpec) -> Result<CMatrix> {
    let basis = analytic.model().closed_basis(trunc);
    let sectors = analytic.sectors(trunc);
    let cols: Vec<CVector> = sectors
        .iter()
        .flat_map(|s| s.right_vectors().into_iter().map(|(_, _, v)| v.clone()).collect::<Vec<_>>())
        .map(|v| spinor_to_vector(&v, &basis))
        .collect::<Result<_>>()?;
    Ok(CMatrix::from_columns(&cols))
}

/// Vector orthogonal to both (coalesced) eigenvectors of an exceptional
/// sector; its raised-state amplitude is positive.
pub fn exceptional_witness(analytic: &AnalyticSpectrum, degeneracy: usize, level: usize, trunc: TruncationSpec) -> Result<Spinor> {
    let model = analytic.model();
    let s = analytic.level(degeneracy, level);
    let phi = s
        .phi_plus
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("witness needs an excited sector".to_string()))?;
    let basis = model.sector_basis(s.label);
    if basis.len() != 2 {
        return Err(Error::InvalidParameter("witness needs an excited sector".to_string()));
    }
    let p = spinor_to_vector(phi, &basis)?;
    let mut w = [p[1].conj(), -p[0].conj()];
    let raised = basis
        .iter()
        .position(|(c, _)| *c == model.layout().raised_component())
        .unwrap();
    let phase = w[raised].conj() / w[raised].norm();
    for z in &mut w {
        *z *= phase;
    }
    Spinor::from_entries(
        trunc,
        basis.iter().zip(w).map(|(&(c, i), a)| (c, i, a)),
    )
}

fn max_overlap_with(analytic: &AnalyticSpectrum, trunc: TruncationSpec, w: &Spinor) -> f64 {
    let wn = w.norm();
    if wn == 0.0 {
        return 0.0;
    }
    analytic.sectors(trunc)
        .iter()
        .flat_map(|s| {
            s.right_vectors()
                .into_iter()
                .map(|(_, _, v)| inner(w, v).norm() / wn)
                .collect::<Vec<_>>()
        })
        .fold(0.0, f64::max)
}

/// Rank test of the right eigenvectors. With `probe = None` the witness is
/// constructed from the first exceptional level (degeneracy index 0).
pub fn completeness_check(
    analytic: &AnalyticSpectrum,
    trunc: TruncationSpec,
    probe: Option<&Spinor>,
) -> Result<CompletenessReport> {
    let model = analytic.model();
    let m = eigenvector_matrix(analytic, trunc)?;
    let sv = singular_values(&m);
    let rank = sv.iter().filter(|&&s| s > RANK_THRESHOLD).count();
    let dim = m.nrows();
    let smallest = sv.last().copied().unwrap_or(0.0);
    let top = trunc.max_occupation(model.active_mode());
    let deficient_levels: Vec<usize> = (1..=top)
        .filter(|&n| analytic.level(0, n).class == RegionClass::Exceptional)
        .collect();
    let complete = rank == dim && dim == m.ncols();

    let witness = match probe {
        Some(p) => Some(p.clone()),
        None => match deficient_levels.first() {
            Some(&m0) => Some(exceptional_witness(analytic, 0, m0, trunc)?),
            None => None,
        },
    };
    let max_overlap = witness
        .as_ref()
        .map(|w| max_overlap_with(analytic, trunc, w))
        .unwrap_or(0.0);
    Ok(CompletenessReport {
        complete,
        dim,
        vectors: m.ncols(),
        rank,
        smallest_singular_value: smallest,
        deficient_levels,
        witness: if complete { None } else { witness },
        max_overlap,
    })
}

/// Overlaps of the `n = 0` sector.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroModeReport {
    pub degeneracy: usize,
    pub v: f64,
    /// `<Phi(+), Psi(-)>`.
    pub overlap: Complex64,
    pub phi_minus_exists: bool,
    pub psi_plus_exists: bool,
    pub hermitian_limit: bool,
}

pub fn zero_mode_gram(model: &DiracModel, n1: usize) -> ZeroModeReport {
    let s = AnalyticSpectrum::new(*model).zero_mode(n1);
    let overlap = match (&s.phi_plus, &s.psi_minus) {
        (Some(a), Some(b)) => inner(a, b),
        _ => ZERO,
    };
    ZeroModeReport {
        degeneracy: n1,
        v: model.v(),
        overlap,
        phi_minus_exists: s.phi_minus.is_some(),
        psi_plus_exists: s.psi_plus.is_some(),
        hermitian_limit: s.hermitian_limit,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{Cone, FieldSign};
    use crate::fock::FockIndex;
    use crate::linalg::max_abs_diff;

    fn k(v: f64) -> DiracModel {
        DiracModel::k_plus(v).unwrap()
    }

    #[test]
    fn gram_symmetric_region() {
        let g = gram(&k(0.5), 0, 1).unwrap();
        assert_eq!(g.class, RegionClass::Symmetric);
        assert!(g.max_cross() <= 1e-12);
        assert!(g.min_same() > NONZERO_THRESHOLD);
    }

    #[test]
    fn gram_broken_region() {
        let g = gram(&k(1.5), 0, 1).unwrap();
        assert_eq!(g.class, RegionClass::Broken);
        assert!(g.max_same() <= 1e-12);
        assert!(g.min_cross() > NONZERO_THRESHOLD);
    }

    #[test]
    fn gram_hermitian_limit() {
        let g = gram(&k(0.0), 2, 1).unwrap();
        assert!((g.get(Branch::Plus, Branch::Plus).unwrap() - 1.0).norm() < 1e-15);
        assert!((g.get(Branch::Minus, Branch::Minus).unwrap() - 1.0).norm() < 1e-15);
        assert!(g.max_cross() < 1e-15);
    }

    #[test]
    fn gram_rejects_zero_level() {
        assert!(gram(&k(0.5), 0, 0).is_err());
    }

    #[test]
    fn phi_phi_overlaps() {
        assert!(phi_phi_overlap(&k(0.0), 0, 3).unwrap().norm() < 1e-15);
        assert!(phi_phi_overlap(&k(0.5), 0, 1).unwrap().norm() >= NONZERO_THRESHOLD);
        assert!(psi_psi_overlap(&k(0.5), 0, 1).unwrap().norm() >= NONZERO_THRESHOLD);
        let ep = phi_phi_overlap(&k(1.0), 0, 1).unwrap();
        assert!((ep.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn region_identity_holds_only_when_symmetric() {
        // also exact at the exceptional points n = V^2 (alpha = -1, beta(-) = 1)
        for v in [0.0, 0.3, 0.9, 1.4, 2.0] {
            for n in 1..10 {
                let z = region_identity(n, v, 1e-12);
                if (n as f64) >= v * v {
                    assert!((z + 1.0).norm() < 1e-12, "n={n} v={v}");
                } else {
                    assert!((z + 1.0).norm() > 1e-3, "n={n} v={v}");
                }
            }
        }
    }

    #[test]
    fn intertwiner_examples() {
        let img = intertwiner_action(&k(0.5), 0, 1, Branch::Plus).unwrap();
        assert_eq!(img.matched_branch, Branch::Plus);
        assert!(img.parallel_residual <= 1e-10);

        let img = intertwiner_action(&k(1.5), 0, 1, Branch::Plus).unwrap();
        assert_eq!(img.matched_branch, Branch::Minus);
        assert!(img.parallel_residual <= 1e-10);

        let img = intertwiner_action(&k(0.0), 0, 2, Branch::Minus).unwrap();
        assert_eq!(img.matched_branch, Branch::Minus);
        let s = AnalyticSpectrum::new(k(0.0)).sector(0, 2);
        assert!((&img.image - s.phi_minus.as_ref().unwrap()).max_abs() < 1e-15);

        assert!(matches!(
            intertwiner_action(&k(1.0), 0, 1, Branch::Plus),
            Err(Error::ExceptionalSector { n2: 1, .. })
        ));
    }

    #[test]
    fn s_phi_blocks() {
        let analytic = AnalyticSpectrum::new(k(0.0));
        for n in 0..5 {
            let s = sector_s_phi(&analytic, 0, n).unwrap();
            let id = CMatrix::identity(s.basis.len(), s.basis.len());
            assert!(max_abs_diff(&s.matrix, &id) < 1e-15);
        }
        for v in [0.4, 1.0, 1.7] {
            let analytic = AnalyticSpectrum::new(k(v));
            for n in 0..4 {
                let s = sector_s_phi(&analytic, 1, n).unwrap();
                assert!(max_abs_diff(&s.matrix, &s.matrix.adjoint()) < 1e-15);
                assert!(s.eigenvalues().iter().all(|&e| e > -1e-14));
                let expect = if n == 0 || (n as f64 - v * v).abs() < 1e-12 { 1 } else { 2 };
                assert_eq!(s.rank(), expect, "v={v} n={n}");
            }
        }
    }

    #[test]
    fn psi_intertwiner_is_measured() {
        let img = psi_intertwiner_action(&k(0.5), 0, 2, Branch::Plus).unwrap();
        assert!(img.parallel_residual <= 1e-10);
        let img = psi_intertwiner_action(&k(1.5), 0, 1, Branch::Plus).unwrap();
        assert!(img.parallel_residual <= 1e-10);
    }

    #[test]
    fn cross_sector_orthogonality() {
        let tr = TruncationSpec::new(3, 3).unwrap();
        for v in [0.0, 0.6, 1.0, 1.9] {
            assert_eq!(cross_sector_overlap_max(&AnalyticSpectrum::new(k(v)), tr), 0.0);
        }
    }

    #[test]
    fn completeness_examples() {
        let tr = TruncationSpec::new(0, 8).unwrap();
        let r = completeness_check(&AnalyticSpectrum::new(k(0.5)), tr, None).unwrap();
        assert!(r.complete);
        assert_eq!(r.rank, r.dim);
        assert!(r.witness.is_none());

        let r = completeness_check(&AnalyticSpectrum::new(k(1.0)), tr, None).unwrap();
        assert!(!r.complete);
        assert_eq!(r.rank_deficiency(), 1);
        assert_eq!(r.deficient_levels, vec![1]);
        let w = r.witness.as_ref().unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert!((w.get(Component::Upper, FockIndex::new(0, 1)) - h).norm() < 1e-15);
        assert!((w.get(Component::Lower, FockIndex::new(0, 0)) - h).norm() < 1e-15);
        assert!(r.max_overlap <= 1e-12);

        let r = completeness_check(&AnalyticSpectrum::new(k(2f64.sqrt())), tr, None).unwrap();
        assert!(!r.complete);
        assert_eq!(r.deficient_levels, vec![2]);
        assert!(r.max_overlap <= 1e-12);
    }

    #[test]
    fn completeness_with_probe() {
        let tr = TruncationSpec::new(0, 4).unwrap();
        let analytic = AnalyticSpectrum::new(k(1.0));
        let probe = Spinor::basis(tr, Component::Upper, FockIndex::new(0, 3)).unwrap();
        let r = completeness_check(&analytic, tr, Some(&probe)).unwrap();
        assert!(!r.complete);
        assert!(r.max_overlap > 0.1);
    }

    #[test]
    fn witness_for_k_prime_layout() {
        let tr = TruncationSpec::new(0, 4).unwrap();
        let m = DiracModel::new(Cone::KPrime, FieldSign::Plus, 1.0, 1.0).unwrap();
        let r = completeness_check(&AnalyticSpectrum::new(m), tr, None).unwrap();
        assert!(!r.complete);
        assert!(r.max_overlap <= 1e-12);
    }

    #[test]
    fn zero_mode_reports() {
        let r = zero_mode_gram(&k(0.9), 0);
        assert!((r.overlap - 1.0).norm() < 1e-15);
        assert!(!r.phi_minus_exists && !r.psi_plus_exists);
        let r = zero_mode_gram(&k(2.0), 3);
        assert!((r.overlap - 1.0).norm() < 1e-15);
        assert!(zero_mode_gram(&k(0.0), 0).hermitian_limit);
    }
}
