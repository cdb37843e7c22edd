//! Truncated two-mode Fock space and the doubled space of two-component
//! spinors built on top of it.
//!
//! Basis vectors `e_{n1,n2}` are labelled by two occupation numbers: `n1`
//! for mode `A1` and `n2` for mode `A2`. A [`Spinor`] holds sparse
//! amplitudes on the upper and lower copies of that basis. Raising past the
//! truncation bound is reported as an error and never silently dropped.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockIndex {
    pub n1: usize,
    pub n2: usize,
}

impl FockIndex {
    pub const VACUUM: FockIndex = FockIndex { n1: 0, n2: 0 };

    pub const fn new(n1: usize, n2: usize) -> Self {
        FockIndex { n1, n2 }
    }

    /// Occupation of the given mode (1 or 2).
    pub fn occupation(&self, mode: Mode) -> usize {
        match mode {
            Mode::One => self.n1,
            Mode::Two => self.n2,
        }
    }

    pub fn with_occupation(&self, mode: Mode, n: usize) -> Self {
        match mode {
            Mode::One => FockIndex::new(n, self.n2),
            Mode::Two => FockIndex::new(self.n1, n),
        }
    }

    /// Index with `n1` and `n2` exchanged.
    pub fn swapped(&self) -> Self {
        FockIndex::new(self.n2, self.n1)
    }
}

impl From<(usize, usize)> for FockIndex {
    fn from((n1, n2): (usize, usize)) -> Self {
        FockIndex::new(n1, n2)
    }
}

impl fmt::Display for FockIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n1, self.n2)
    }
}

/// Inclusive bounds on both occupation numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncationSpec {
    n1_max: usize,
    n2_max: usize,
}

impl TruncationSpec {
    pub fn new(n1_max: usize, n2_max: usize) -> Result<Self> {
        if n2_max < 1 {
            return Err(Error::InvalidTruncation(
                "n2_max must be at least 1".to_string(),
            ));
        }
        Ok(TruncationSpec { n1_max, n2_max })
    }

    /// `n x n` truncation, as needed by the time-reversal operator.
    pub fn square(n_max: usize) -> Result<Self> {
        Self::new(n_max, n_max)
    }

    pub fn n1_max(&self) -> usize {
        self.n1_max
    }

    pub fn n2_max(&self) -> usize {
        self.n2_max
    }

    pub fn max_occupation(&self, mode: Mode) -> usize {
        match mode {
            Mode::One => self.n1_max,
            Mode::Two => self.n2_max,
        }
    }

    pub fn is_square(&self) -> bool {
        self.n1_max == self.n2_max
    }

    pub fn contains(&self, idx: FockIndex) -> bool {
        idx.n1 <= self.n1_max && idx.n2 <= self.n2_max
    }

    pub fn check(&self, idx: FockIndex) -> Result<()> {
        if self.contains(idx) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                index: idx,
                n1_max: self.n1_max,
                n2_max: self.n2_max,
            })
        }
    }

    /// Smallest truncation containing both.
    pub fn union(&self, other: &TruncationSpec) -> TruncationSpec {
        TruncationSpec {
            n1_max: self.n1_max.max(other.n1_max),
            n2_max: self.n2_max.max(other.n2_max),
        }
    }

    /// All indices in lexicographic `(n1, n2)` order.
    pub fn indices(&self) -> impl Iterator<Item = FockIndex> + '_ {
        let n2_max = self.n2_max;
        (0..=self.n1_max).flat_map(move |n1| (0..=n2_max).map(move |n2| FockIndex::new(n1, n2)))
    }

    /// Number of Fock states `(n1_max + 1)(n2_max + 1)`.
    pub fn fock_dim(&self) -> usize {
        (self.n1_max + 1) * (self.n2_max + 1)
    }
}

/// Bosonic mode selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    One,
    Two,
}

/// Upper (`e^(1)`) or lower (`e^(2)`) copy of the Fock space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    Upper,
    Lower,
}

impl Component {
    pub fn other(self) -> Self {
        match self {
            Component::Upper => Component::Lower,
            Component::Lower => Component::Upper,
        }
    }

    /// 1 for the upper component, 2 for the lower one.
    pub fn number(self) -> u8 {
        match self {
            Component::Upper => 1,
            Component::Lower => 2,
        }
    }

    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Component::Upper),
            2 => Ok(Component::Lower),
            _ => Err(Error::InvalidParameter(format!(
                "spinor component must be 1 or 2, got {n}"
            ))),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ladder {
    A1,
    A2,
    A1Dag,
    A2Dag,
}

impl Ladder {
    pub fn mode(self) -> Mode {
        match self {
            Ladder::A1 | Ladder::A1Dag => Mode::One,
            Ladder::A2 | Ladder::A2Dag => Mode::Two,
        }
    }

    pub fn is_raising(self) -> bool {
        matches!(self, Ladder::A1Dag | Ladder::A2Dag)
    }

    pub fn lowering(mode: Mode) -> Self {
        match mode {
            Mode::One => Ladder::A1,
            Mode::Two => Ladder::A2,
        }
    }

    pub fn raising(mode: Mode) -> Self {
        match mode {
            Mode::One => Ladder::A1Dag,
            Mode::Two => Ladder::A2Dag,
        }
    }

    pub fn adjoint(self) -> Self {
        match self {
            Ladder::A1 => Ladder::A1Dag,
            Ladder::A2 => Ladder::A2Dag,
            Ladder::A1Dag => Ladder::A1,
            Ladder::A2Dag => Ladder::A2,
        }
    }
}

impl fmt::Display for Ladder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Ladder::A1 => "A1",
            Ladder::A2 => "A2",
            Ladder::A1Dag => "A1^dag",
            Ladder::A2Dag => "A2^dag",
        };
        f.write_str(s)
    }
}

/// Vector of the doubled space with finite support inside a truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct Spinor {
    trunc: TruncationSpec,
    upper: BTreeMap<FockIndex, Complex64>,
    lower: BTreeMap<FockIndex, Complex64>,
}

impl Spinor {
    pub fn zero(trunc: TruncationSpec) -> Self {
        Spinor {
            trunc,
            upper: BTreeMap::new(),
            lower: BTreeMap::new(),
        }
    }

    /// `e^(1)_{idx}` or `e^(2)_{idx}`.
    pub fn basis(trunc: TruncationSpec, component: Component, idx: FockIndex) -> Result<Self> {
        let mut s = Spinor::zero(trunc);
        s.set(component, idx, Complex64::new(1.0, 0.0))?;
        Ok(s)
    }

    /// Builds a spinor from `(component, index, amplitude)` triples; repeated
    /// entries accumulate.
    pub fn from_entries<I>(trunc: TruncationSpec, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Component, FockIndex, Complex64)>,
    {
        let mut s = Spinor::zero(trunc);
        for (c, idx, amp) in entries {
            trunc.check(idx)?;
            s.accumulate(c, idx, amp);
        }
        Ok(s)
    }

    pub fn truncation(&self) -> TruncationSpec {
        self.trunc
    }

    /// Same amplitudes, re-homed in a larger (or equal) truncation.
    pub fn with_truncation(&self, trunc: TruncationSpec) -> Result<Self> {
        for (_, idx, _) in self.entries() {
            trunc.check(idx)?;
        }
        let mut s = self.clone();
        s.trunc = trunc;
        Ok(s)
    }

    fn map(&self, c: Component) -> &BTreeMap<FockIndex, Complex64> {
        match c {
            Component::Upper => &self.upper,
            Component::Lower => &self.lower,
        }
    }

    fn map_mut(&mut self, c: Component) -> &mut BTreeMap<FockIndex, Complex64> {
        match c {
            Component::Upper => &mut self.upper,
            Component::Lower => &mut self.lower,
        }
    }

    pub fn get(&self, c: Component, idx: FockIndex) -> Complex64 {
        self.map(c).get(&idx).copied().unwrap_or_default()
    }

    pub fn set(&mut self, c: Component, idx: FockIndex, amp: Complex64) -> Result<()> {
        self.trunc.check(idx)?;
        self.map_mut(c).insert(idx, amp);
        Ok(())
    }

    // Callers guarantee `idx` is inside the truncation.
    fn accumulate(&mut self, c: Component, idx: FockIndex, amp: Complex64) {
        *self.map_mut(c).entry(idx).or_default() += amp;
    }

    /// Stored entries, upper component first, each in index order.
    pub fn entries(&self) -> impl Iterator<Item = (Component, FockIndex, Complex64)> + '_ {
        self.upper
            .iter()
            .map(|(i, a)| (Component::Upper, *i, *a))
            .chain(self.lower.iter().map(|(i, a)| (Component::Lower, *i, *a)))
    }

    /// Entries with a nonzero amplitude.
    pub fn support(&self) -> impl Iterator<Item = (Component, FockIndex, Complex64)> + '_ {
        self.entries().filter(|(_, _, a)| *a != Complex64::default())
    }

    pub fn is_zero(&self) -> bool {
        self.support().next().is_none()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries().map(|(_, _, a)| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Largest amplitude modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().map(|(_, _, a)| a.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: Complex64) -> Spinor {
        let mut out = self.clone();
        for a in out.upper.values_mut().chain(out.lower.values_mut()) {
            *a *= c;
        }
        out
    }

    /// Amplitude-wise complex conjugate.
    pub fn conj(&self) -> Spinor {
        let mut out = self.clone();
        for a in out.upper.values_mut().chain(out.lower.values_mut()) {
            *a = a.conj();
        }
        out
    }

    /// Unit vector in the same direction; `None` for the zero vector.
    pub fn normalized(&self) -> Option<Spinor> {
        let n = self.norm();
        if n == 0.0 {
            None
        } else {
            Some(self.scale(Complex64::new(1.0 / n, 0.0)))
        }
    }

    fn combine(&self, other: &Spinor, sign: f64) -> Spinor {
        let mut out = self.clone();
        out.trunc = self.trunc.union(&other.trunc);
        for (c, idx, a) in other.entries() {
            out.accumulate(c, idx, a * sign);
        }
        out
    }

    /// Applies a single ladder operator componentwise.
    pub fn apply_ladder(&self, which: Ladder) -> Result<Spinor> {
        let mode = which.mode();
        let bound = self.trunc.max_occupation(mode);
        let mut out = Spinor::zero(self.trunc);
        for (c, idx, a) in self.support() {
            let n = idx.occupation(mode);
            if which.is_raising() {
                if n + 1 > bound {
                    return Err(Error::LadderOverflow {
                        op: which,
                        component: c,
                        index: idx,
                    });
                }
                let target = idx.with_occupation(mode, n + 1);
                out.accumulate(c, target, a * ((n + 1) as f64).sqrt());
            } else if n > 0 {
                let target = idx.with_occupation(mode, n - 1);
                out.accumulate(c, target, a * (n as f64).sqrt());
            }
        }
        Ok(out)
    }

    /// Spinor restricted to one component, the other set to zero.
    pub fn component_only(&self, c: Component) -> Spinor {
        let mut out = Spinor::zero(self.trunc);
        *out.map_mut(c) = self.map(c).clone();
        out
    }

    /// Exchanges the upper and lower components.
    pub fn swap_components(&self) -> Spinor {
        Spinor {
            trunc: self.trunc,
            upper: self.lower.clone(),
            lower: self.upper.clone(),
        }
    }

    /// Relabels every Fock index through `f`, keeping amplitudes.
    pub(crate) fn map_indices<F>(&self, trunc: TruncationSpec, f: F) -> Result<Spinor>
    where
        F: Fn(FockIndex) -> FockIndex,
    {
        let mut out = Spinor::zero(trunc);
        for (c, idx, a) in self.entries() {
            let target = f(idx);
            trunc.check(target)?;
            out.accumulate(c, target, a);
        }
        Ok(out)
    }
}

/// `<f, g>_2 = <f_1, g_1> + <f_2, g_2>`, antilinear in `f`.
pub fn inner(f: &Spinor, g: &Spinor) -> Complex64 {
    let mut acc = Complex64::default();
    for c in [Component::Upper, Component::Lower] {
        let (small, large, flip) = if f.map(c).len() <= g.map(c).len() {
            (f.map(c), g.map(c), false)
        } else {
            (g.map(c), f.map(c), true)
        };
        for (idx, a) in small {
            if let Some(b) = large.get(idx) {
                acc += if flip { b.conj() * a } else { a.conj() * b };
            }
        }
    }
    acc
}

pub fn basis_spinor(trunc: TruncationSpec, component: Component, idx: FockIndex) -> Result<Spinor> {
    Spinor::basis(trunc, component, idx)
}

pub fn apply_ladder(which: Ladder, f: &Spinor) -> Result<Spinor> {
    f.apply_ladder(which)
}

/// Every basis spinor of the truncation, upper component first, then
/// lexicographic in `(n1, n2)`.
pub fn basis_spinors(trunc: TruncationSpec) -> impl Iterator<Item = (Component, FockIndex, Spinor)> {
    [Component::Upper, Component::Lower].into_iter().flat_map(move |c| {
        trunc
            .indices()
            .collect::<Vec<_>>()
            .into_iter()
            .map(move |idx| (c, idx, Spinor::basis(trunc, c, idx).expect("index from truncation")))
    })
}

impl Add for &Spinor {
    type Output = Spinor;
    fn add(self, rhs: &Spinor) -> Spinor {
        self.combine(rhs, 1.0)
    }
}

impl Sub for &Spinor {
    type Output = Spinor;
    fn sub(self, rhs: &Spinor) -> Spinor {
        self.combine(rhs, -1.0)
    }
}

impl Neg for &Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul<Complex64> for &Spinor {
    type Output = Spinor;
    fn mul(self, rhs: Complex64) -> Spinor {
        self.scale(rhs)
    }
}

impl Mul<f64> for &Spinor {
    type Output = Spinor;
    fn mul(self, rhs: f64) -> Spinor {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn t(n1: usize, n2: usize) -> TruncationSpec {
        TruncationSpec::new(n1, n2).unwrap()
    }

    #[test]
    fn basis_spinor_definitions() {
        let tr = t(4, 4);
        let e = basis_spinor(tr, Component::Upper, FockIndex::new(0, 0)).unwrap();
        assert_eq!(e.get(Component::Upper, FockIndex::VACUUM), c(1.0, 0.0));
        assert_eq!(e.support().count(), 1);
        assert_eq!(e.norm(), 1.0);

        let e2 = basis_spinor(tr, Component::Lower, FockIndex::new(3, 1)).unwrap();
        assert_eq!(e2.get(Component::Lower, FockIndex::new(3, 1)), c(1.0, 0.0));
        assert_eq!(e2.get(Component::Upper, FockIndex::new(3, 1)), c(0.0, 0.0));

        let a = basis_spinor(tr, Component::Upper, FockIndex::new(0, 1)).unwrap();
        let b = basis_spinor(tr, Component::Lower, FockIndex::new(0, 0)).unwrap();
        assert_eq!(inner(&a, &b), c(0.0, 0.0));
    }

    #[test]
    fn basis_spinor_out_of_range() {
        let err = basis_spinor(t(1, 2), Component::Upper, FockIndex::new(2, 0)).unwrap_err();
        assert!(matches!(err, Error::OutOfRange { .. }));
    }

    #[test]
    fn truncation_requires_landau_sector() {
        assert!(TruncationSpec::new(3, 0).is_err());
        assert!(TruncationSpec::new(0, 1).is_ok());
    }

    #[test]
    fn inner_examples() {
        let tr = t(2, 2);
        let e00 = Spinor::basis(tr, Component::Upper, FockIndex::new(0, 0)).unwrap();
        let e01 = Spinor::basis(tr, Component::Upper, FockIndex::new(0, 1)).unwrap();
        let e11 = Spinor::basis(tr, Component::Upper, FockIndex::new(1, 1)).unwrap();
        assert_eq!(inner(&e00, &e00), c(1.0, 0.0));
        assert_eq!(inner(&e01, &e11), c(0.0, 0.0));
        assert_eq!(inner(&(&e00 * c(0.0, 1.0)), &e00), c(0.0, -1.0));
        assert_eq!(inner(&e00, &(&e00 * c(0.0, 1.0))), c(0.0, 1.0));
    }

    #[test]
    fn inner_with_mismatched_truncations() {
        let a = Spinor::basis(t(0, 1), Component::Lower, FockIndex::new(0, 1)).unwrap();
        let b = Spinor::from_entries(
            t(3, 3),
            [
                (Component::Lower, FockIndex::new(0, 1), c(2.0, 1.0)),
                (Component::Lower, FockIndex::new(3, 3), c(5.0, 0.0)),
            ],
        )
        .unwrap();
        assert_eq!(inner(&a, &b), c(2.0, 1.0));
        assert_eq!(inner(&b, &a), c(2.0, -1.0));
        let sum = &a + &b;
        assert_eq!(sum.truncation(), t(3, 3));
        assert_eq!(sum.get(Component::Lower, FockIndex::new(0, 1)), c(3.0, 1.0));
    }

    #[test]
    fn orthonormal_basis_exhaustive() {
        let tr = t(4, 4);
        let all: Vec<_> = basis_spinors(tr).collect();
        assert_eq!(all.len(), 2 * 25);
        for (ci, ii, a) in &all {
            for (cj, ij, b) in &all {
                let expect = if ci == cj && ii == ij { 1.0 } else { 0.0 };
                assert_eq!(inner(a, b), c(expect, 0.0));
            }
        }
    }

    #[test]
    fn ladder_examples() {
        let tr = t(3, 3);
        let vac = Spinor::basis(tr, Component::Upper, FockIndex::VACUUM).unwrap();
        assert!(apply_ladder(Ladder::A2, &vac).unwrap().is_zero());
        assert!(apply_ladder(Ladder::A1, &vac).unwrap().is_zero());

        let e01 = Spinor::basis(tr, Component::Upper, FockIndex::new(0, 1)).unwrap();
        let raised = apply_ladder(Ladder::A2Dag, &e01).unwrap();
        assert_eq!(raised.get(Component::Upper, FockIndex::new(0, 2)), c(2f64.sqrt(), 0.0));
        assert_eq!(raised.support().count(), 1);

        let e21 = Spinor::basis(tr, Component::Lower, FockIndex::new(2, 1)).unwrap();
        let lowered = apply_ladder(Ladder::A1, &e21).unwrap();
        assert_eq!(lowered.get(Component::Lower, FockIndex::new(1, 1)), c(2f64.sqrt(), 0.0));
    }

    #[test]
    fn raising_past_bound_is_an_error() {
        let tr = t(1, 2);
        let top = Spinor::basis(tr, Component::Lower, FockIndex::new(0, 2)).unwrap();
        let err = apply_ladder(Ladder::A2Dag, &top).unwrap_err();
        assert_eq!(
            err,
            Error::LadderOverflow {
                op: Ladder::A2Dag,
                component: Component::Lower,
                index: FockIndex::new(0, 2)
            }
        );
        let right = Spinor::basis(tr, Component::Upper, FockIndex::new(1, 0)).unwrap();
        assert!(apply_ladder(Ladder::A1Dag, &right).is_err());
        // zero amplitudes at the edge do not count as support
        let mut z = Spinor::zero(tr);
        z.set(Component::Lower, FockIndex::new(0, 2), c(0.0, 0.0)).unwrap();
        assert!(apply_ladder(Ladder::A2Dag, &z).unwrap().is_zero());
    }

    #[test]
    fn adjoint_pairing_exhaustive() {
        // <f, A^dag g> = <A f, g> on every pair of basis spinors that stays in range
        let tr = t(3, 3);
        for op in [Ladder::A1, Ladder::A2] {
            for (_, _, f) in basis_spinors(tr) {
                for (_, _, g) in basis_spinors(tr) {
                    let Ok(raised) = apply_ladder(op.adjoint(), &g) else {
                        continue;
                    };
                    let lhs = inner(&f, &raised);
                    let rhs = inner(&apply_ladder(op, &f).unwrap(), &g);
                    assert!((lhs - rhs).norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn commutator_on_safe_support() {
        let tr = t(2, 5);
        let f = Spinor::from_entries(
            tr,
            tr.indices()
                .filter(|i| i.n2 < 5)
                .enumerate()
                .flat_map(|(k, i)| {
                    let k = k as f64;
                    [
                        (Component::Upper, i, c(0.3 * k - 1.0, 0.1 * k)),
                        (Component::Lower, i, c(0.5, -0.2 * k)),
                    ]
                }),
        )
        .unwrap();
        let aad = apply_ladder(Ladder::A2, &apply_ladder(Ladder::A2Dag, &f).unwrap()).unwrap();
        let ada = apply_ladder(Ladder::A2Dag, &apply_ladder(Ladder::A2, &f).unwrap()).unwrap();
        let comm = &aad - &ada;
        assert!((&comm - &f).max_abs() < 1e-14);
    }

    #[test]
    fn index_swap_and_conj() {
        let tr = t(2, 2);
        let f = Spinor::from_entries(tr, [(Component::Upper, FockIndex::new(1, 2), c(0.0, 1.0))]).unwrap();
        let g = f.conj().map_indices(tr, |i| i.swapped()).unwrap();
        assert_eq!(g.get(Component::Upper, FockIndex::new(2, 1)), c(0.0, -1.0));
        assert_eq!(f.swap_components().get(Component::Lower, FockIndex::new(1, 2)), c(0.0, 1.0));
    }
}
