//! Parity `P` (component swap), `U = diag(1, -1)` and the antilinear
//! time reversal `T` on the truncated spinor space, plus residual checks
//! for how they conjugate the Dirac Hamiltonians.
//!
//! `T` conjugates amplitudes and swaps the Fock indices `(n1, n2) -> (n2, n1)`.
//! This is forced by three requirements: `T` fixes the vacuum, `T i T = -i`,
//! and `T A1 T = A2`. Writing `e_{n1,n2} = (A1^dag)^n1 (A2^dag)^n2 e_00 / sqrt(n1! n2!)`
//! and pushing `T` through the real prefactors and raising operators gives
//! `T e_{n1,n2} = e_{n2,n1}`.
//!
//! The magnetic-field reversal that accompanies `T` is expressed by
//! comparing against the opposite `FieldSign` variant.

use std::fmt;

use num_complex::Complex64;

use crate::dirac::{Cone, DiracModel, FieldSign};
use crate::error::{Error, Result};
use crate::fock::{basis_spinors, Component, FockIndex, Spinor, TruncationSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryOp {
    P,
    U,
    T,
    /// Product of the listed factors; the last one acts first.
    Composite(Vec<SymmetryOp>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linearity {
    Linear,
    Antilinear,
}

pub fn apply_p(f: &Spinor) -> Spinor {
    f.swap_components()
}

pub fn apply_u(f: &Spinor) -> Spinor {
    let mut out = f.clone();
    for (c, idx, a) in f.entries() {
        if c == Component::Lower {
            out.set(c, idx, -a).expect("same truncation");
        }
    }
    out
}

pub fn apply_t(f: &Spinor) -> Result<Spinor> {
    let tr = f.truncation();
    if !tr.is_square() {
        return Err(Error::NonSquareTruncation {
            n1_max: tr.n1_max(),
            n2_max: tr.n2_max(),
        });
    }
    f.conj().map_indices(tr, |i| i.swapped())
}

impl SymmetryOp {
    /// `T P U`, the combined antilinear symmetry.
    pub fn tpu() -> Self {
        SymmetryOp::Composite(vec![SymmetryOp::T, SymmetryOp::P, SymmetryOp::U])
    }

    pub fn apply(&self, f: &Spinor) -> Result<Spinor> {
        match self {
            SymmetryOp::P => Ok(apply_p(f)),
            SymmetryOp::U => Ok(apply_u(f)),
            SymmetryOp::T => apply_t(f),
            SymmetryOp::Composite(ops) => {
                let mut g = f.clone();
                for op in ops.iter().rev() {
                    g = op.apply(&g)?;
                }
                Ok(g)
            }
        }
    }

    /// Every factor is an involution, so the inverse reverses the order.
    pub fn inverse(&self) -> Self {
        match self {
            SymmetryOp::Composite(ops) => {
                SymmetryOp::Composite(ops.iter().rev().map(SymmetryOp::inverse).collect())
            }
            op => op.clone(),
        }
    }

    fn t_count(&self) -> usize {
        match self {
            SymmetryOp::T => 1,
            SymmetryOp::Composite(ops) => ops.iter().map(SymmetryOp::t_count).sum(),
            _ => 0,
        }
    }

    pub fn linearity(&self) -> Linearity {
        if self.t_count() % 2 == 1 {
            Linearity::Antilinear
        } else {
            Linearity::Linear
        }
    }

    /// `W H W^-1 f`.
    pub fn conjugate(&self, h: &DiracModel, f: &Spinor) -> Result<Spinor> {
        let g = self.inverse().apply(f)?;
        self.apply(&h.apply(&g)?)
    }
}

impl fmt::Display for SymmetryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryOp::P => write!(f, "P"),
            SymmetryOp::U => write!(f, "U"),
            SymmetryOp::T => write!(f, "T"),
            SymmetryOp::Composite(ops) => ops.iter().try_for_each(|o| write!(f, "{o}")),
        }
    }
}

/// Worst-case residual of an operator identity over basis spinors.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryResidual {
    pub residual: f64,
    pub worst: Option<(Component, FockIndex)>,
    pub checked: usize,
    /// Basis spinors whose image leaves the truncation.
    pub skipped: usize,
}

/// `max_f |W H W^-1 f - sign * target f|` over basis spinors whose images
/// all stay inside `trunc`.
pub fn conjugation_residual(
    op: &SymmetryOp,
    h: &DiracModel,
    target: &DiracModel,
    sign: f64,
    trunc: TruncationSpec,
) -> Result<SymmetryResidual> {
    if op.t_count() > 0 && !trunc.is_square() {
        return Err(Error::NonSquareTruncation {
            n1_max: trunc.n1_max(),
            n2_max: trunc.n2_max(),
        });
    }
    let mut out = SymmetryResidual {
        residual: 0.0,
        worst: None,
        checked: 0,
        skipped: 0,
    };
    for (c, idx, f) in basis_spinors(trunc) {
        let lhs = match op.conjugate(h, &f) {
            Ok(s) => s,
            Err(Error::LadderOverflow { .. }) => {
                out.skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let rhs = match target.apply(&f) {
            Ok(s) => s,
            Err(Error::LadderOverflow { .. }) => {
                out.skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let r = (&lhs - &rhs.scale(Complex64::new(sign, 0.0))).norm();
        out.checked += 1;
        if out.worst.is_none() || r > out.residual {
            out.residual = r;
            out.worst = Some((c, idx));
        }
    }
    Ok(out)
}

fn model(cone: Cone, field: FieldSign, v: f64, epsilon: f64) -> Result<DiracModel> {
    DiracModel::new(cone, field, v, epsilon)
}

/// `T H_K^(+)(V) T = -H_K'^(-)(V)`.
pub fn verify_t_identity(v: f64, epsilon: f64, trunc: TruncationSpec) -> Result<SymmetryResidual> {
    verify_t_identity_with_sign(v, epsilon, trunc, -1.0)
}

/// As [`verify_t_identity`] with an arbitrary sign in front of the target.
pub fn verify_t_identity_with_sign(v: f64, epsilon: f64, trunc: TruncationSpec, sign: f64) -> Result<SymmetryResidual> {
    let h = model(Cone::K, FieldSign::Plus, v, epsilon)?;
    let target = model(Cone::KPrime, FieldSign::Minus, v, epsilon)?;
    conjugation_residual(&SymmetryOp::T, &h, &target, sign, trunc)
}

/// `(TPU) H_K^(+)(V) (TPU)^-1 = i eps [[V, -A1], [A1^dag, -V]]`, which is the
/// `(K, -)` variant at the same `V`.
pub fn verify_pt_identity(v: f64, epsilon: f64, trunc: TruncationSpec) -> Result<SymmetryResidual> {
    let h = model(Cone::K, FieldSign::Plus, v, epsilon)?;
    let target = model(Cone::K, FieldSign::Minus, v, epsilon)?;
    conjugation_residual(&SymmetryOp::tpu(), &h, &target, 1.0, trunc)
}

/// `(TU) H_K^(+)(V) (TU)^-1` against `H_K'^(-)(V)`. The conjugate is
/// `H_K'^(-)(-V)`, so the residual is `2 eps V`.
pub fn t_only_residual(v: f64, epsilon: f64, trunc: TruncationSpec) -> Result<SymmetryResidual> {
    let h = model(Cone::K, FieldSign::Plus, v, epsilon)?;
    let target = model(Cone::KPrime, FieldSign::Minus, v, epsilon)?;
    let op = SymmetryOp::Composite(vec![SymmetryOp::T, SymmetryOp::U]);
    conjugation_residual(&op, &h, &target, 1.0, trunc)
}

/// `P H_K^(+)(V) P` against `H_K'^(+)(V)`. The conjugate is `H_K'^(+)(-V)`.
pub fn p_only_residual(v: f64, epsilon: f64, trunc: TruncationSpec) -> Result<SymmetryResidual> {
    let h = model(Cone::K, FieldSign::Plus, v, epsilon)?;
    let target = model(Cone::KPrime, FieldSign::Plus, v, epsilon)?;
    conjugation_residual(&SymmetryOp::P, &h, &target, 1.0, trunc)
}

/// `max |W(c f) - c' W(f)|` with `c' = c` or `conj(c)` by linearity.
pub fn linearity_defect(op: &SymmetryOp, f: &Spinor, c: Complex64) -> Result<f64> {
    let lhs = op.apply(&f.scale(c))?;
    let k = match op.linearity() {
        Linearity::Linear => c,
        Linearity::Antilinear => c.conj(),
    };
    let rhs = op.apply(f)?.scale(k);
    Ok((&lhs - &rhs).max_abs())
}

/// `max |W(W(f)) - f|`.
pub fn involution_defect(op: &SymmetryOp, f: &Spinor) -> Result<f64> {
    let g = op.apply(&op.apply(f)?)?;
    Ok((&g - f).max_abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::Ladder;
    use crate::linalg::{max_abs, max_abs_diff, I};

    fn sq(n: usize) -> TruncationSpec {
        TruncationSpec::square(n).unwrap()
    }

    fn sample(tr: TruncationSpec) -> Spinor {
        let mut k = 0.0;
        Spinor::from_entries(
            tr,
            tr.indices().flat_map(|i| {
                k += 1.0;
                [
                    (Component::Upper, i, Complex64::new(0.3 * k, -0.1 * k * k)),
                    (Component::Lower, i, Complex64::new(1.0 / k, 0.7)),
                ]
            }),
        )
        .unwrap()
    }

    #[test]
    fn p_swaps_components() {
        let tr = sq(4);
        let e = Spinor::basis(tr, Component::Upper, FockIndex::new(2, 3)).unwrap();
        let pe = apply_p(&e);
        assert_eq!(pe, Spinor::basis(tr, Component::Lower, FockIndex::new(2, 3)).unwrap());
        assert_eq!(involution_defect(&SymmetryOp::P, &sample(tr)).unwrap(), 0.0);
    }

    #[test]
    fn t_on_basis_example() {
        let tr = sq(3);
        let f = Spinor::basis(tr, Component::Upper, FockIndex::new(1, 2)).unwrap().scale(I);
        let expect = Spinor::basis(tr, Component::Upper, FockIndex::new(2, 1)).unwrap().scale(-I);
        assert_eq!(apply_t(&f).unwrap(), expect);
    }

    #[test]
    fn t_needs_square_truncation() {
        let tr = TruncationSpec::new(2, 3).unwrap();
        assert!(matches!(apply_t(&Spinor::zero(tr)), Err(Error::NonSquareTruncation { .. })));
        assert!(matches!(verify_t_identity(0.5, 1.0, tr), Err(Error::NonSquareTruncation { .. })));
    }

    #[test]
    fn involutions_and_linearity() {
        let f = sample(sq(3));
        let c = Complex64::new(0.4, -1.3);
        for op in [SymmetryOp::P, SymmetryOp::U, SymmetryOp::T] {
            assert_eq!(involution_defect(&op, &f).unwrap(), 0.0);
            assert!(linearity_defect(&op, &f, c).unwrap() < 1e-15);
        }
        let tpu = SymmetryOp::tpu();
        assert_eq!(tpu.linearity(), Linearity::Antilinear);
        assert!(linearity_defect(&tpu, &f, c).unwrap() < 1e-15);
        let g = tpu.inverse().apply(&tpu.apply(&f).unwrap()).unwrap();
        assert!((&g - &f).max_abs() < 1e-15);
        assert_eq!(tpu.to_string(), "TPU");
    }

    #[test]
    fn t_exchanges_ladders() {
        let tr = sq(4);
        // support away from the top edge
        let f = Spinor::from_entries(
            tr,
            [
                (Component::Upper, FockIndex::new(1, 2), Complex64::new(0.5, 0.5)),
                (Component::Lower, FockIndex::new(0, 3), Complex64::new(-1.0, 2.0)),
            ],
        )
        .unwrap();
        let lhs = apply_t(&f.apply_ladder(Ladder::A1).unwrap()).unwrap();
        let rhs = apply_t(&f).unwrap().apply_ladder(Ladder::A2).unwrap();
        assert!((&lhs - &rhs).max_abs() < 1e-15);
        let lhs = apply_t(&f.apply_ladder(Ladder::A1Dag).unwrap()).unwrap();
        let rhs = apply_t(&f).unwrap().apply_ladder(Ladder::A2Dag).unwrap();
        assert!((&lhs - &rhs).max_abs() < 1e-15);
    }

    #[test]
    fn t_identity_holds_for_all_v() {
        for v in [0.0, 0.7, 2.5] {
            let r = verify_t_identity(v, 1.0, sq(8)).unwrap();
            assert!(r.residual <= 1e-12, "V={v}: {}", r.residual);
            assert!(r.checked > 0);
        }
        let wrong = verify_t_identity_with_sign(0.7, 1.0, sq(8), 1.0).unwrap();
        assert!(wrong.residual >= 2.0 * 0.7);
    }

    #[test]
    fn pt_identity_holds() {
        for v in [0.0, 0.9, 3.0] {
            let r = verify_pt_identity(v, 1.3, sq(6)).unwrap();
            assert!(r.residual <= 1e-12, "V={v}: {}", r.residual);
        }
    }

    #[test]
    fn t_and_p_alone_are_broken() {
        let eps = 1.0;
        let t = t_only_residual(0.9, eps, sq(6)).unwrap();
        let p = p_only_residual(0.9, eps, sq(6)).unwrap();
        assert!((t.residual - 2.0 * 0.9 * eps).abs() < 1e-12);
        assert!((p.residual - 2.0 * 0.9 * eps).abs() < 1e-12);
        assert!(t_only_residual(0.0, eps, sq(6)).unwrap().residual < 1e-12);
        assert!(p_only_residual(0.0, eps, sq(6)).unwrap().residual < 1e-12);
    }

    #[test]
    fn p_conjugate_matrix() {
        // P H_K^(+)(V) P = i eps [[-V, -A2], [A2^dag, V]] = H_K'^(+)(-V)
        let tr = TruncationSpec::new(0, 6).unwrap();
        let h = DiracModel::k_plus(0.8).unwrap();
        let expect = h.with_variant(Cone::KPrime, FieldSign::Plus).with_potential(-0.8);
        for (_, _, f) in basis_spinors(tr) {
            let (Ok(a), Ok(b)) = (SymmetryOp::P.conjugate(&h, &f), expect.apply(&f)) else {
                continue;
            };
            assert!((&a - &b).max_abs() < 1e-14);
        }
    }

    #[test]
    fn u_flips_off_diagonal_blocks() {
        let tr = TruncationSpec::new(1, 4).unwrap();
        let h = DiracModel::k_plus(0.6).unwrap();
        let basis = h.closed_basis(tr);
        let m = h.matrix_on_basis(tr).unwrap();
        let sign = |c: Component| if c == Component::Upper { 1.0 } else { -1.0 };
        let mut uhu = m.clone();
        for (i, &(ci, _)) in basis.iter().enumerate() {
            for (j, &(cj, _)) in basis.iter().enumerate() {
                uhu[(i, j)] *= sign(ci) * sign(cj);
            }
        }
        for (i, &(ci, _)) in basis.iter().enumerate() {
            for (j, &(cj, _)) in basis.iter().enumerate() {
                let d = (uhu[(i, j)] - m[(i, j)]).norm();
                if ci == cj {
                    assert_eq!(d, 0.0);
                } else {
                    assert!(d == 0.0 || (uhu[(i, j)] + m[(i, j)]).norm() == 0.0);
                }
            }
        }
        assert!(max_abs_diff(&uhu, &m) > 0.0);
        assert!(max_abs(&m) > 0.0);
    }
}
