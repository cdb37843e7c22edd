//! Spectral toolkit for PT-symmetrically deformed graphene in a magnetic
//! field: Dirac-cone Landau-level Hamiltonians with an imaginary staggered
//! potential, their closed-form eigen-systems, biorthogonality and
//! completeness diagnostics, finite-dimensional metric operators,
//! parity/time-reversal checks, and the underlying lattice layer.

pub mod biortho;
pub mod dirac;
pub mod error;
pub mod finite;
pub mod fock;
pub mod lattice;
pub mod linalg;
pub mod spectrum;
pub mod symmetry;

pub use dirac::{Cone, DiracModel, FieldSign, Layout, SectorBlock};
pub use error::{Error, Result};
pub use fock::{basis_spinor, inner, Component, FockIndex, Ladder, Mode, Spinor, TruncationSpec};
pub use spectrum::{classify, eigenvalues, AnalyticSpectrum, Branch, RegionClass, SectorEigen};
pub use finite::{build_system, intertwine_map, verify_intertwining, FiniteBiorthoSystem};
pub use lattice::{BlochParams, DimerParams};
pub use symmetry::{apply_p, apply_t, apply_u, SymmetryOp};
