//! Deformed Dirac-cone Hamiltonians around `K` and `K'` for either sign of
//! the magnetic field.
//!
//! All four variants have the form `i eps [[V, X], [Y, -V]]` with
//! off-diagonal ladder operators of a single "active" mode (`A2` for a
//! positive field, `A1` for a negative one):
//!
//! | variant  | X      | Y      |
//! |----------|--------|--------|
//! | `K, +`   | `A2^+` | `-A2`  |
//! | `K', +`  | `-A2`  | `A2^+` |
//! | `K, -`   | `-A1`  | `A1^+` |
//! | `K', -`  | `A1^+` | `-A1`  |
//!
//! Each variant closes exactly on two-dimensional sectors that pair the
//! basis state at active occupation `n` in one component with the state at
//! `n - 1` in the other, plus one-dimensional sectors at `n = 0`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{Component, FockIndex, Ladder, Mode, Spinor, TruncationSpec};
use crate::linalg::{spinor_to_vector, CMatrix, I};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cone {
    K,
    KPrime,
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cone::K => "K",
            Cone::KPrime => "K'",
        })
    }
}

/// Sign of the magnetic field along `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSign {
    Plus,
    Minus,
}

impl FieldSign {
    pub fn flipped(self) -> Self {
        match self {
            FieldSign::Plus => FieldSign::Minus,
            FieldSign::Minus => FieldSign::Plus,
        }
    }
}

impl fmt::Display for FieldSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldSign::Plus => "+",
            FieldSign::Minus => "-",
        })
    }
}

/// Which component carries the raised (active occupation `n`) state of a
/// sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// `[[V, L^+], [-L, -V]]`: upper at `n`, lower at `n - 1`.
    UpperRaised,
    /// `[[V, -L], [L^+, -V]]`: lower at `n`, upper at `n - 1`.
    LowerRaised,
}

impl Layout {
    pub fn raised_component(self) -> Component {
        match self {
            Layout::UpperRaised => Component::Upper,
            Layout::LowerRaised => Component::Lower,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracModel {
    cone: Cone,
    field: FieldSign,
    potential: f64,
    epsilon: f64,
}

impl DiracModel {
    pub fn new(cone: Cone, field: FieldSign, v: f64, epsilon: f64) -> Result<Self> {
        if !(v.is_finite() && v >= 0.0) {
            return Err(Error::InvalidParameter(format!("V must be finite and >= 0, got {v}")));
        }
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "epsilon must be finite and > 0, got {epsilon}"
            )));
        }
        Ok(DiracModel {
            cone,
            field,
            potential: v,
            epsilon,
        })
    }

    /// `H_K^(+)(V)` with unit energy scale.
    pub fn k_plus(v: f64) -> Result<Self> {
        Self::new(Cone::K, FieldSign::Plus, v, 1.0)
    }

    pub fn cone(&self) -> Cone {
        self.cone
    }

    pub fn field_sign(&self) -> FieldSign {
        self.field
    }

    /// Signed diagonal potential. Negative only for adjoint models.
    pub fn v(&self) -> f64 {
        self.potential
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// The Hermitian adjoint, i.e. the same variant with `V -> -V`.
    pub fn adjoint(&self) -> Self {
        DiracModel {
            potential: -self.potential,
            ..*self
        }
    }

    pub fn is_adjoint(&self) -> bool {
        self.potential < 0.0
    }

    /// Same variant at another potential. A negative value selects the
    /// adjoint family.
    pub fn with_potential(&self, potential: f64) -> Self {
        DiracModel { potential, ..*self }
    }

    pub fn with_variant(&self, cone: Cone, field: FieldSign) -> Self {
        DiracModel { cone, field, ..*self }
    }

    /// Mode whose ladder operators appear in the Hamiltonian.
    pub fn active_mode(&self) -> Mode {
        match self.field {
            FieldSign::Plus => Mode::Two,
            FieldSign::Minus => Mode::One,
        }
    }

    /// Mode carrying the Landau-level degeneracy.
    pub fn spectator_mode(&self) -> Mode {
        match self.active_mode() {
            Mode::One => Mode::Two,
            Mode::Two => Mode::One,
        }
    }

    pub fn layout(&self) -> Layout {
        match (self.cone, self.field) {
            (Cone::K, FieldSign::Plus) | (Cone::KPrime, FieldSign::Minus) => Layout::UpperRaised,
            (Cone::KPrime, FieldSign::Plus) | (Cone::K, FieldSign::Minus) => Layout::LowerRaised,
        }
    }

    fn prefactor(&self) -> Complex64 {
        I * self.epsilon
    }

    /// Applies the Hamiltonian to a spinor.
    pub fn apply(&self, f: &Spinor) -> Result<Spinor> {
        let mode = self.active_mode();
        let lower_op = Ladder::lowering(mode);
        let raise_op = Ladder::raising(mode);
        let v = Complex64::new(self.potential, 0.0);
        let f1 = f.component_only(Component::Upper);
        let f2 = f.component_only(Component::Lower);

        // upper' = V f1 + X f2, lower' = Y f1 - V f2, before swapping into place
        let (x_f2, y_f1) = match self.layout() {
            Layout::UpperRaised => (f2.apply_ladder(raise_op)?, -&f1.apply_ladder(lower_op)?),
            Layout::LowerRaised => (-&f2.apply_ladder(lower_op)?, f1.apply_ladder(raise_op)?),
        };
        let upper = &(&f1 * v) + &x_f2.swap_components();
        let lower = &y_f1.swap_components() - &(&f2 * v);
        Ok((&upper + &lower).scale(self.prefactor()))
    }

    /// Ordered basis of the sector whose raised state sits at `label`.
    pub fn sector_basis(&self, label: FockIndex) -> Vec<(Component, FockIndex)> {
        let mode = self.active_mode();
        let n = label.occupation(mode);
        let raised = self.layout().raised_component();
        if n == 0 {
            return vec![(raised, label)];
        }
        let partner = label.with_occupation(mode, n - 1);
        match self.layout() {
            Layout::UpperRaised => vec![(Component::Upper, label), (Component::Lower, partner)],
            Layout::LowerRaised => vec![(Component::Upper, partner), (Component::Lower, label)],
        }
    }

    /// Landau level (active occupation) of a sector label.
    pub fn level(&self, label: FockIndex) -> usize {
        label.occupation(self.active_mode())
    }

    /// Degeneracy index (spectator occupation) of a sector label.
    pub fn degeneracy_index(&self, label: FockIndex) -> usize {
        label.occupation(self.spectator_mode())
    }

    /// Sector label from a degeneracy index and a Landau level.
    pub fn sector_label(&self, degeneracy: usize, level: usize) -> FockIndex {
        match self.active_mode() {
            Mode::Two => FockIndex::new(degeneracy, level),
            Mode::One => FockIndex::new(level, degeneracy),
        }
    }

    /// All complete sectors of a truncation, in lexicographic label order.
    pub fn sectors(&self, trunc: TruncationSpec) -> Vec<FockIndex> {
        trunc.indices().collect()
    }

    /// Exact block of the Hamiltonian on one sector. `(n1, n2)` is the Fock
    /// label of the sector's raised state.
    pub fn sector_block(&self, n1: usize, n2: usize, trunc: TruncationSpec) -> Result<SectorBlock> {
        let label = FockIndex::new(n1, n2);
        trunc.check(label)?;
        let basis = self.sector_basis(label);
        let n = self.level(label);
        let pre = self.prefactor();
        let v = Complex64::new(self.potential, 0.0);
        let matrix = if n == 0 {
            let d = match self.layout() {
                Layout::UpperRaised => v,
                Layout::LowerRaised => -v,
            };
            CMatrix::from_element(1, 1, pre * d)
        } else {
            let s = Complex64::new((n as f64).sqrt(), 0.0);
            let (x, y) = match self.layout() {
                Layout::UpperRaised => (s, -s),
                Layout::LowerRaised => (-s, s),
            };
            CMatrix::from_row_slice(2, 2, &[pre * v, pre * x, pre * y, -pre * v])
        };
        Ok(SectorBlock {
            label,
            level: n,
            basis_labels: basis,
            matrix,
        })
    }

    /// Basis of the truncated space on which this variant closes exactly,
    /// in lexicographic `(component, n1, n2)` order.
    pub fn closed_basis(&self, trunc: TruncationSpec) -> Vec<(Component, FockIndex)> {
        let mode = self.active_mode();
        let top = trunc.max_occupation(mode);
        let raised = self.layout().raised_component();
        [Component::Upper, Component::Lower]
            .into_iter()
            .flat_map(|c| {
                trunc
                    .indices()
                    .filter(move |i| c == raised || i.occupation(mode) < top)
                    .map(move |i| (c, i))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Dense matrix on [`closed_basis`](Self::closed_basis).
    pub fn matrix_on_basis(&self, trunc: TruncationSpec) -> Result<CMatrix> {
        let basis = self.closed_basis(trunc);
        let dim = basis.len();
        let mut m = CMatrix::zeros(dim, dim);
        for (j, &(c, idx)) in basis.iter().enumerate() {
            let col = self.apply(&Spinor::basis(trunc, c, idx)?)?;
            m.set_column(j, &spinor_to_vector(&col, &basis)?);
        }
        Ok(m)
    }
}

impl fmt::Display for DiracModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "H_{}^({})(V={}, eps={})",
            self.cone, self.field, self.potential, self.epsilon
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectorBlock {
    pub label: FockIndex,
    pub level: usize,
    pub basis_labels: Vec<(Component, FockIndex)>,
    pub matrix: CMatrix,
}

impl SectorBlock {
    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }
}

/// Free-function form of [`DiracModel::apply`].
pub fn apply(model: &DiracModel, f: &Spinor) -> Result<Spinor> {
    model.apply(f)
}

pub fn sector_block(model: &DiracModel, n1: usize, n2: usize, trunc: TruncationSpec) -> Result<SectorBlock> {
    model.sector_block(n1, n2, trunc)
}

pub fn matrix_on_basis(model: &DiracModel, trunc: TruncationSpec) -> Result<CMatrix> {
    model.matrix_on_basis(trunc)
}
