//! A one-character flat-torus model in which every operator of the Higgs
//! harmonic theory is a finite exact matrix.
//!
//! Sections are `s = χ·(constant tensor)` for a single Fourier character
//! `χ = exp(Σ_j (a_j z_j − conj(a_j) z̄_j))`. The exponent is purely
//! imaginary, so `χ` is unitary and formal `L²` adjoints within one
//! frequency sector reduce to conjugate-transpose in the orthonormal
//! tensor-word basis. Differentiation is multiplication: `∂_j` picks up
//! `a_j` and `∂̄_j` picks up `−conj(a_j)`.
//!
//! The bundle is `E = ⊕_a Λ^{(a,0)}` with the wedge Higgs field of odd
//! degree `k`, and the full basis is `e_B ⊗ dz_I∧dz̄_J` with the triple
//! grading `(|B|; |I|, |J|)`. On this basis `∂̄`, `∂_h`, `θ`, `θ̄_h`, `L`
//! and `Λ` are sparse matrices with Gaussian-rational entries, and all the
//! Kähler-identity content of the theory (adjoint formulas, squared
//! extended operators, the Nakano and Higgs-Nakano comparisons, type
//! shifts, the diagonal-curvature eigenvalue formula) becomes a finite
//! equality check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::traits::Zero;
use thiserror::Error;

use crate::curvature::{assemble_f, higgs_frame_data, CurvatureError, FormMatrix};
use crate::exterior::{
    contract_z, mask_full, wedge_words, AlgebraError, BasisWord, Form,
};
use crate::higgs::{HiggsError, HiggsField};
use crate::metric::{adjoint_wedge, lefschetz_l, lefschetz_lambda, MetricSpec};
use crate::scalar::{conj, from_rat, i_unit, norm_sqr, one, rint, zero, Rat, Scalar};

/// Largest bundle dimension the matrix model accepts; the basis has `8^n`
/// tensor words.
pub const MAX_MODEL_DIM: usize = 4;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Higgs(#[from] HiggsError),
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
    #[error("model dimension {0} exceeds the matrix limit {MAX_MODEL_DIM}")]
    TooLarge(usize),
    #[error("frequency has {got} components, model needs {expected}")]
    BadFrequency { expected: usize, got: usize },
    #[error("curvature diagonal has {got} entries, model needs {expected}")]
    BadKappa { expected: usize, got: usize },
    #[error("tensor word does not fit dimension {0}")]
    WordOutOfRange(usize),
    #[error("matrix sides disagree: {0} vs {1}")]
    SideMismatch(usize, usize),
}

/// Basis element `e_B ⊗ dz_I∧dz̄_J` of `E ⊗ Λ^{(•,•)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorWord {
    bundle: u32,
    form: BasisWord,
}

impl TensorWord {
    pub fn new(bundle: u32, form: BasisWord) -> Self {
        TensorWord { bundle, form }
    }

    pub fn bundle(&self) -> u32 {
        self.bundle
    }

    pub fn form(&self) -> BasisWord {
        self.form
    }

    pub fn fits(&self, n: usize) -> bool {
        self.bundle & !mask_full(n) == 0 && self.form.fits(n)
    }

    /// Triple grading `(a; p, q)`.
    pub fn grade(&self) -> (usize, usize, usize) {
        (
            self.bundle.count_ones() as usize,
            self.form.holo_degree(),
            self.form.anti_degree(),
        )
    }

    pub fn index(&self, n: usize) -> usize {
        ((self.bundle as usize) << (2 * n))
            | ((self.form.holo_mask() as usize) << n)
            | self.form.anti_mask() as usize
    }

    pub fn from_index(n: usize, idx: usize) -> Self {
        let mask = (1usize << n) - 1;
        TensorWord {
            bundle: ((idx >> (2 * n)) & mask) as u32,
            form: BasisWord::new(((idx >> n) & mask) as u32, (idx & mask) as u32),
        }
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let indices: Vec<String> = (0..32)
            .filter(|b| self.bundle >> b & 1 == 1)
            .map(|b| (b + 1).to_string())
            .collect();
        write!(f, "e{{{}}}⊗{}", indices.join(","), self.form)
    }
}

/// One Fourier frequency `a ∈ ℂⁿ` with Gaussian-rational components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frequency {
    components: Vec<Scalar>,
}

impl Frequency {
    pub fn new(components: Vec<Scalar>) -> Self {
        Frequency { components }
    }

    pub fn zero(n: usize) -> Self {
        Frequency {
            components: vec![zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `a_j`, 1-based.
    pub fn component(&self, j: usize) -> &Scalar {
        &self.components[j - 1]
    }

    pub fn components(&self) -> &[Scalar] {
        &self.components
    }
}

/// Finite linear combination of tensor words riding one character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSection {
    n: usize,
    freq: Frequency,
    terms: BTreeMap<usize, Scalar>,
}

impl CharacterSection {
    pub fn new(n: usize, freq: Frequency) -> Result<Self, SpectralError> {
        if freq.len() != n {
            return Err(SpectralError::BadFrequency {
                expected: n,
                got: freq.len(),
            });
        }
        Ok(CharacterSection {
            n,
            freq,
            terms: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn freq(&self) -> &Frequency {
        &self.freq
    }

    pub fn add_term(&mut self, word: TensorWord, coeff: Scalar) -> Result<(), SpectralError> {
        if !word.fits(self.n) {
            return Err(SpectralError::WordOutOfRange(self.n));
        }
        let idx = word.index(self.n);
        let entry = self.terms.entry(idx).or_insert_with(zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
        Ok(())
    }

    pub fn with_term(mut self, word: TensorWord, coeff: Scalar) -> Result<Self, SpectralError> {
        self.add_term(word, coeff)?;
        Ok(self)
    }

    pub fn terms(&self) -> impl Iterator<Item = (TensorWord, &Scalar)> + '_ {
        self.terms
            .iter()
            .map(|(idx, c)| (TensorWord::from_index(self.n, *idx), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Squared norm in the orthonormal tensor-word basis.
    pub fn norm_sqr(&self) -> Rat {
        self.terms.values().map(norm_sqr).sum()
    }
}

/// Sparse square matrix over the tensor-word basis of one model dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    n: usize,
    side: usize,
    rows: Vec<BTreeMap<usize, Scalar>>,
}

impl OperatorMatrix {
    pub fn zero(n: usize) -> Self {
        let side = 1usize << (3 * n);
        OperatorMatrix {
            n,
            side,
            rows: vec![BTreeMap::new(); side],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = OperatorMatrix::zero(n);
        for i in 0..m.side {
            m.rows[i].insert(i, one());
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn add_entry(&mut self, row: usize, col: usize, v: Scalar) {
        if v.is_zero() {
            return;
        }
        let entry = self.rows[row].entry(col).or_insert_with(zero);
        *entry += v;
        if entry.is_zero() {
            self.rows[row].remove(&col);
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.rows[row].get(&col).cloned().unwrap_or_else(zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = OperatorMatrix::zero(self.n);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                out.add_entry(r, *c, v * s);
            }
        }
        out
    }

    pub fn add(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, SpectralError> {
        if self.side != other.side {
            return Err(SpectralError::SideMismatch(self.side, other.side));
        }
        let mut out = self.clone();
        for (r, row) in other.rows.iter().enumerate() {
            for (c, v) in row {
                out.add_entry(r, *c, v.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, SpectralError> {
        if self.side != other.side {
            return Err(SpectralError::SideMismatch(self.side, other.side));
        }
        let mut out = self.clone();
        for (r, row) in other.rows.iter().enumerate() {
            for (c, v) in row {
                out.add_entry(r, *c, -v.clone());
            }
        }
        Ok(out)
    }

    /// Matrix product `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, SpectralError> {
        if self.side != other.side {
            return Err(SpectralError::SideMismatch(self.side, other.side));
        }
        let mut out = OperatorMatrix::zero(self.n);
        for (r, row) in self.rows.iter().enumerate() {
            for (l, a) in row {
                for (c, b) in &other.rows[*l] {
                    out.add_entry(r, *c, a * b);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose; the formal adjoint in the unitary character
    /// model.
    pub fn adjoint(&self) -> OperatorMatrix {
        let mut out = OperatorMatrix::zero(self.n);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                out.add_entry(*c, r, conj(v));
            }
        }
        out
    }

    pub fn commutator(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, SpectralError> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn anticommutator(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, SpectralError> {
        self.compose(other)?.add(&other.compose(self)?)
    }

    pub fn is_self_adjoint(&self) -> bool {
        *self == self.adjoint()
    }

    /// First entry where the two matrices differ, as a witness.
    pub fn first_difference(&self, other: &OperatorMatrix) -> Option<Witness> {
        for r in 0..self.side.min(other.side) {
            let cols: BTreeSet<usize> = self.rows[r]
                .keys()
                .chain(other.rows[r].keys())
                .copied()
                .collect();
            for c in cols {
                let lhs = self.entry(r, c);
                let rhs = other.entry(r, c);
                if lhs != rhs {
                    return Some(Witness {
                        row: TensorWord::from_index(self.n, r),
                        col: TensorWord::from_index(self.n, c),
                        lhs,
                        rhs,
                    });
                }
            }
        }
        None
    }

    /// The set of grade displacements `(Δa, Δp, Δq)` over all nonzero
    /// entries.
    pub fn observed_shifts(&self) -> BTreeSet<(i64, i64, i64)> {
        let mut out = BTreeSet::new();
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            let (ta, tp, tq) = TensorWord::from_index(self.n, r).grade();
            for c in row.keys() {
                let (sa, sp, sq) = TensorWord::from_index(self.n, *c).grade();
                out.insert((
                    ta as i64 - sa as i64,
                    tp as i64 - sp as i64,
                    tq as i64 - sq as i64,
                ));
            }
        }
        out
    }

    pub fn apply(&self, s: &CharacterSection) -> Result<CharacterSection, SpectralError> {
        if 1usize << (3 * s.n()) != self.side {
            return Err(SpectralError::SideMismatch(self.side, 1 << (3 * s.n())));
        }
        let mut out = CharacterSection::new(s.n(), s.freq().clone())?;
        for (idx, c) in &s.terms {
            for (r, row) in self.rows.iter().enumerate() {
                if let Some(v) = row.get(idx) {
                    out.add_term(TensorWord::from_index(s.n(), r), v * c)?;
                }
            }
        }
        Ok(out)
    }

    /// `⟨self·s, s⟩` in the orthonormal word basis.
    pub fn quadratic_form(&self, s: &CharacterSection) -> Result<Scalar, SpectralError> {
        let image = self.apply(s)?;
        let mut acc = zero();
        for (idx, c) in &image.terms {
            if let Some(sc) = s.terms.get(idx) {
                acc += c * conj(sc);
            }
        }
        Ok(acc)
    }
}

/// Elementary operators of the model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Dbar,
    Dh,
    Theta,
    ThetaAdj,
    L,
    Lambda,
}

/// Laplacians assembled from the extended operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaplacianKind {
    BoxDbar,
    BoxDh,
    BoxD2,
    BoxD1,
    BoxD,
}

/// Pass/fail record for one matrix identity.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Counterexample entry for a failed identity.
#[derive(Debug, Clone)]
pub struct Witness {
    pub row: TensorWord,
    pub col: TensorWord,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({} ← {}): lhs {} vs rhs {}",
            self.row,
            self.col,
            crate::scalar::scalar_str(&self.lhs),
            crate::scalar::scalar_str(&self.rhs)
        )
    }
}

fn check_equal(
    name: impl Into<String>,
    lhs: &OperatorMatrix,
    rhs: &OperatorMatrix,
) -> IdentityCheck {
    let witness = lhs.first_difference(rhs);
    IdentityCheck {
        name: name.into(),
        holds: witness.is_none(),
        witness,
    }
}

/// Shift bookkeeping for one operator in the audit.
#[derive(Debug, Clone)]
pub struct ShiftCheck {
    pub name: String,
    pub declared: (i64, i64, i64),
    pub observed: Vec<(i64, i64, i64)>,
    pub ok: bool,
}

/// Zeroth-order graded commutator that must vanish in the constant model.
#[derive(Debug, Clone)]
pub struct VanishingCheck {
    pub name: String,
    pub ok: bool,
}

/// Full type-shift report.
#[derive(Debug, Clone)]
pub struct ShiftAudit {
    pub shifts: Vec<ShiftCheck>,
    pub vanishing: Vec<VanishingCheck>,
}

impl ShiftAudit {
    pub fn ok(&self) -> bool {
        self.shifts.iter().all(|s| s.ok) && self.vanishing.iter().all(|v| v.ok)
    }
}

/// The flat-torus matrix model: a dimension and an optional wedge Higgs
/// field (absent means `θ = 0`).
#[derive(Debug, Clone)]
pub struct CharacterModel {
    n: usize,
    higgs: Option<HiggsField>,
}

impl CharacterModel {
    pub fn new(n: usize) -> Result<Self, SpectralError> {
        if n < 1 {
            return Err(AlgebraError::BadDimension(n).into());
        }
        if n > MAX_MODEL_DIM {
            return Err(SpectralError::TooLarge(n));
        }
        Ok(CharacterModel { n, higgs: None })
    }

    pub fn with_higgs(higgs: HiggsField) -> Result<Self, SpectralError> {
        let n = higgs.dim();
        if n > MAX_MODEL_DIM {
            return Err(SpectralError::TooLarge(n));
        }
        Ok(CharacterModel {
            n,
            higgs: Some(higgs),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn higgs(&self) -> Option<&HiggsField> {
        self.higgs.as_ref()
    }

    pub fn side(&self) -> usize {
        1usize << (3 * self.n)
    }

    fn check_freq(&self, freq: &Frequency) -> Result<(), SpectralError> {
        if freq.len() != self.n {
            return Err(SpectralError::BadFrequency {
                expected: self.n,
                got: freq.len(),
            });
        }
        Ok(())
    }

    fn build<F>(&self, mut images: F) -> OperatorMatrix
    where
        F: FnMut(TensorWord) -> Vec<(TensorWord, Scalar)>,
    {
        let mut out = OperatorMatrix::zero(self.n);
        for idx in 0..self.side() {
            let source = TensorWord::from_index(self.n, idx);
            for (target, coeff) in images(source) {
                out.add_entry(target.index(self.n), idx, coeff);
            }
        }
        out
    }

    /// Builds one elementary operator at the given frequency. With no Higgs
    /// field installed, `Theta` and `ThetaAdj` are zero.
    pub fn build_op(&self, kind: OpKind, freq: &Frequency) -> Result<OperatorMatrix, SpectralError> {
        self.check_freq(freq)?;
        let n = self.n;
        let op = match kind {
            OpKind::Dbar => self.build(|w| {
                let mut out = Vec::new();
                for j in 1..=n {
                    let factor = -conj(freq.component(j));
                    if factor.is_zero() {
                        continue;
                    }
                    let dzbar = BasisWord::new(0, 1 << (j - 1));
                    if let Some((sign, form)) = wedge_words(dzbar, w.form()) {
                        out.push((
                            TensorWord::new(w.bundle(), form),
                            signed(factor, sign),
                        ));
                    }
                }
                out
            }),
            OpKind::Dh => self.build(|w| {
                let mut out = Vec::new();
                for j in 1..=n {
                    let factor = freq.component(j).clone();
                    if factor.is_zero() {
                        continue;
                    }
                    let dz = BasisWord::new(1 << (j - 1), 0);
                    if let Some((sign, form)) = wedge_words(dz, w.form()) {
                        out.push((
                            TensorWord::new(w.bundle(), form),
                            signed(factor, sign),
                        ));
                    }
                }
                out
            }),
            OpKind::Theta => match &self.higgs {
                None => OperatorMatrix::zero(n),
                Some(h) => {
                    let omega = h.omega().clone();
                    self.build(|w| {
                        let mut out = Vec::new();
                        for j in 1..=n {
                            let contracted = contract_z(j, &omega);
                            let dz = BasisWord::new(1 << (j - 1), 0);
                            let Some((s2, form)) = wedge_words(dz, w.form()) else {
                                continue;
                            };
                            for (m, c) in contracted.terms() {
                                if let Some((s1, bundle_word)) =
                                    wedge_words(*m, BasisWord::new(w.bundle(), 0))
                                {
                                    out.push((
                                        TensorWord::new(bundle_word.holo_mask(), form),
                                        signed(c.clone(), s1 * s2),
                                    ));
                                }
                            }
                        }
                        out
                    })
                }
            },
            OpKind::ThetaAdj => match &self.higgs {
                None => OperatorMatrix::zero(n),
                Some(h) => {
                    let omega = h.omega().clone();
                    self.build(|w| {
                        let mut out = Vec::new();
                        for j in 1..=n {
                            let dzbar = BasisWord::new(0, 1 << (j - 1));
                            let Some((s2, form)) = wedge_words(dzbar, w.form()) else {
                                continue;
                            };
                            // Bundle factor: the standard-metric adjoint of
                            // wedging i(Z_j)ϖ.
                            let bundle_form =
                                Form::monomial(n, BasisWord::new(w.bundle(), 0), one());
                            let lowered = adjoint_wedge(&contract_z(j, &omega), &bundle_form)
                                .expect("pure holomorphic contraction");
                            for (b, c) in lowered.terms() {
                                out.push((
                                    TensorWord::new(b.holo_mask(), form),
                                    signed(c.clone(), s2),
                                ));
                            }
                        }
                        out
                    })
                }
            },
            OpKind::L => self.build(|w| {
                let f = lefschetz_l(&Form::monomial(n, w.form(), one()));
                f.terms()
                    .map(|(word, c)| (TensorWord::new(w.bundle(), *word), c.clone()))
                    .collect()
            }),
            OpKind::Lambda => self.build(|w| {
                let f = lefschetz_lambda(&Form::monomial(n, w.form(), one()));
                f.terms()
                    .map(|(word, c)| (TensorWord::new(w.bundle(), *word), c.clone()))
                    .collect()
            }),
        };
        Ok(op)
    }

    /// `D″ = ∂̄ + θ`.
    pub fn d2(&self, freq: &Frequency) -> Result<OperatorMatrix, SpectralError> {
        self.build_op(OpKind::Dbar, freq)?
            .add(&self.build_op(OpKind::Theta, freq)?)
    }

    /// `D′_h = ∂_h + θ̄_h`.
    pub fn d1(&self, freq: &Frequency) -> Result<OperatorMatrix, SpectralError> {
        self.build_op(OpKind::Dh, freq)?
            .add(&self.build_op(OpKind::ThetaAdj, freq)?)
    }

    fn box_of(op: &OperatorMatrix) -> Result<OperatorMatrix, SpectralError> {
        let adj = op.adjoint();
        op.compose(&adj)?.add(&adj.compose(op)?)
    }

    pub fn laplacian(
        &self,
        kind: LaplacianKind,
        freq: &Frequency,
    ) -> Result<OperatorMatrix, SpectralError> {
        match kind {
            LaplacianKind::BoxDbar => Self::box_of(&self.build_op(OpKind::Dbar, freq)?),
            LaplacianKind::BoxDh => Self::box_of(&self.build_op(OpKind::Dh, freq)?),
            LaplacianKind::BoxD2 => Self::box_of(&self.d2(freq)?),
            LaplacianKind::BoxD1 => Self::box_of(&self.d1(freq)?),
            LaplacianKind::BoxD => Self::box_of(&self.d2(freq)?.add(&self.d1(freq)?)?),
        }
    }

    /// `⊡̄ = □_{∂̄} + θθ* + θ*θ`: the Higgs-visible part of `□_{D″}`; equal
    /// to it when the structure form is constant.
    pub fn reduced_box_d2(&self, freq: &Frequency) -> Result<OperatorMatrix, SpectralError> {
        let theta = self.build_op(OpKind::Theta, freq)?;
        self.laplacian(LaplacianKind::BoxDbar, freq)?
            .add(&theta.anticommutator(&theta.adjoint())?)
    }

    /// `⊡ = □_{∂_h} + θ̄θ̄* + θ̄*θ̄`, the `D′_h` analogue.
    pub fn reduced_box_d1(&self, freq: &Frequency) -> Result<OperatorMatrix, SpectralError> {
        let adj = self.build_op(OpKind::ThetaAdj, freq)?;
        self.laplacian(LaplacianKind::BoxDh, freq)?
            .add(&adj.anticommutator(&adj.adjoint())?)
    }

    /// The curvature multiplication `e(F^{1,1})`, with `F^{1,1}` assembled
    /// independently from the frame-data route (`θ∧θ̄ + θ̄∧θ` in the flat
    /// model): `e(F)(e_α⊗φ) = Σ_β e_β ⊗ F^β_α∧φ`.
    pub fn curvature_operator(&self) -> Result<OperatorMatrix, SpectralError> {
        let Some(higgs) = &self.higgs else {
            return Ok(OperatorMatrix::zero(self.n));
        };
        let n = self.n;
        let rank = 1usize << n;
        let h = MetricSpec::standard(n);
        let data = higgs_frame_data(higgs, &h, FormMatrix::zero(rank, n))?;
        let f = assemble_f(&data)?;
        let mut out = OperatorMatrix::zero(n);
        for idx in 0..self.side() {
            let source = TensorWord::from_index(n, idx);
            let alpha = source.bundle() as usize;
            for beta in 0..rank {
                let entry = f.f11.entry(beta, alpha);
                for (u, c) in entry.terms() {
                    if let Some((sign, form)) = wedge_words(*u, source.form()) {
                        out.add_entry(
                            TensorWord::new(beta as u32, form).index(n),
                            idx,
                            signed(c.clone(), sign),
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    /// The four Kähler adjoint identities, each comparing the matrix
    /// conjugate-transpose against the commutator construction:
    /// `∂*_h = i[Λ,∂̄]`, `∂̄* = −i[Λ,∂_h]`, `θ* = −i[Λ,θ̄_h]`,
    /// `θ̄*_h = i[Λ,θ]`, plus `L* = Λ`.
    pub fn adjoint_identity_checks(
        &self,
        freq: &Frequency,
    ) -> Result<Vec<IdentityCheck>, SpectralError> {
        let dbar = self.build_op(OpKind::Dbar, freq)?;
        let dh = self.build_op(OpKind::Dh, freq)?;
        let theta = self.build_op(OpKind::Theta, freq)?;
        let theta_adj = self.build_op(OpKind::ThetaAdj, freq)?;
        let l = self.build_op(OpKind::L, freq)?;
        let lambda = self.build_op(OpKind::Lambda, freq)?;
        let i = i_unit();
        Ok(vec![
            check_equal(
                "dh_adjoint = i[Lambda, dbar]",
                &dh.adjoint(),
                &lambda.commutator(&dbar)?.scale(&i),
            ),
            check_equal(
                "dbar_adjoint = -i[Lambda, dh]",
                &dbar.adjoint(),
                &lambda.commutator(&dh)?.scale(&-i.clone()),
            ),
            check_equal(
                "theta_adjoint = -i[Lambda, theta_bar]",
                &theta.adjoint(),
                &lambda.commutator(&theta_adj)?.scale(&-i.clone()),
            ),
            check_equal(
                "theta_bar_adjoint = i[Lambda, theta]",
                &theta_adj.adjoint(),
                &lambda.commutator(&theta)?.scale(&i),
            ),
            check_equal("L_adjoint = Lambda", &l.adjoint(), &lambda),
        ])
    }

    /// Flat Nakano comparison: `□_{∂_h} − □_{∂̄} = i(Λ e(Θ) − e(Θ) Λ)` with
    /// `Θ = 0`, so both sides are built and compared literally.
    pub fn nakano_check(&self, freq: &Frequency) -> Result<IdentityCheck, SpectralError> {
        let lhs = self
            .laplacian(LaplacianKind::BoxDh, freq)?
            .sub(&self.laplacian(LaplacianKind::BoxDbar, freq)?)?;
        let e_theta = OperatorMatrix::zero(self.n);
        let lambda = self.build_op(OpKind::Lambda, freq)?;
        let rhs = lambda.commutator(&e_theta)?.scale(&i_unit());
        Ok(check_equal("box_dh - box_dbar = i[Lambda, e(Theta)]", &lhs, &rhs))
    }

    /// Higgs-Nakano comparison:
    /// `□_{D′_h} − □_{D″} = i(Λ e(F_h) − e(F_h) Λ)`, with `e(F_h)` built
    /// through the frame-data curvature assembly.
    pub fn higgs_nakano_check(&self, freq: &Frequency) -> Result<IdentityCheck, SpectralError> {
        let lhs = self
            .laplacian(LaplacianKind::BoxD1, freq)?
            .sub(&self.laplacian(LaplacianKind::BoxD2, freq)?)?;
        let e_f = self.curvature_operator()?;
        let lambda = self.build_op(OpKind::Lambda, freq)?;
        let rhs = lambda.commutator(&e_f)?.scale(&i_unit());
        Ok(check_equal("box_d1 - box_d2 = i[Lambda, e(F)]", &lhs, &rhs))
    }

    /// Verifies every named operator moves the triple grading `(a; p, q)` by
    /// exactly its declared shift, and that the four zeroth-order graded
    /// commutators vanish for a constant structure form.
    pub fn type_shift_audit(&self, freq: &Frequency) -> Result<ShiftAudit, SpectralError> {
        let k = self
            .higgs
            .as_ref()
            .and_then(|h| h.pure_degree())
            .unwrap_or(1) as i64;
        let dbar = self.build_op(OpKind::Dbar, freq)?;
        let dh = self.build_op(OpKind::Dh, freq)?;
        let theta = self.build_op(OpKind::Theta, freq)?;
        let theta_adj = self.build_op(OpKind::ThetaAdj, freq)?;
        let l = self.build_op(OpKind::L, freq)?;
        let lambda = self.build_op(OpKind::Lambda, freq)?;
        let e_f = self.curvature_operator()?;
        let curvature_comm = lambda.commutator(&e_f)?.scale(&i_unit());

        let named: Vec<(&str, &OperatorMatrix, (i64, i64, i64))> = vec![
            ("dbar", &dbar, (0, 0, 1)),
            ("dh", &dh, (0, 1, 0)),
            ("theta", &theta, (k - 1, 1, 0)),
            ("theta_bar", &theta_adj, (-(k - 1), 0, 1)),
            ("L", &l, (0, 1, 1)),
            ("Lambda", &lambda, (0, -1, -1)),
            ("i[Lambda, e(F11)]", &curvature_comm, (0, 0, 0)),
        ];
        let mut shifts = Vec::new();
        for (name, op, declared) in &named {
            let observed: Vec<(i64, i64, i64)> = op.observed_shifts().into_iter().collect();
            let ok = observed.iter().all(|s| s == declared);
            shifts.push(ShiftCheck {
                name: (*name).to_string(),
                declared: *declared,
                observed,
                ok,
            });
        }
        // Adjoints carry the negated shifts.
        for (name, op, declared) in [
            ("dbar_adjoint", &dbar, (0i64, 0i64, -1i64)),
            ("dh_adjoint", &dh, (0, -1, 0)),
            ("theta_adjoint", &theta, (-(k - 1), -1, 0)),
            ("theta_bar_adjoint", &theta_adj, (k - 1, 0, -1)),
        ] {
            let adj = op.adjoint();
            let observed: Vec<(i64, i64, i64)> = adj.observed_shifts().into_iter().collect();
            let ok = observed.iter().all(|s| *s == declared);
            shifts.push(ShiftCheck {
                name: name.to_string(),
                declared,
                observed,
                ok,
            });
        }

        let vanishing = vec![
            VanishingCheck {
                name: "dbar theta_adjoint + theta_adjoint dbar".to_string(),
                ok: dbar.anticommutator(&theta.adjoint())?.is_zero(),
            },
            VanishingCheck {
                name: "dbar_adjoint theta + theta dbar_adjoint".to_string(),
                ok: dbar.adjoint().anticommutator(&theta)?.is_zero(),
            },
            VanishingCheck {
                name: "dh theta_bar_adjoint + theta_bar_adjoint dh".to_string(),
                ok: dh.anticommutator(&theta_adj.adjoint())?.is_zero(),
            },
            VanishingCheck {
                name: "dh_adjoint theta_bar + theta_bar dh_adjoint".to_string(),
                ok: dh.adjoint().anticommutator(&theta_adj)?.is_zero(),
            },
        ];
        Ok(ShiftAudit { shifts, vanishing })
    }

    /// The operator `i(Λ e(κ) − e(κ) Λ)` for the diagonal curvature model
    /// `F^{1,1} = (Σ_i κ_i dz_i∧dz̄_i)·Id`.
    pub fn curvature_diag_operator(
        &self,
        kappa: &[Rat],
    ) -> Result<OperatorMatrix, SpectralError> {
        if kappa.len() != self.n {
            return Err(SpectralError::BadKappa {
                expected: self.n,
                got: kappa.len(),
            });
        }
        let n = self.n;
        let mut two_form = Form::zero(n);
        for (i, ki) in kappa.iter().enumerate() {
            two_form.add_assign(
                &Form::dz(n, i + 1)
                    .wedge(&Form::dzbar(n, i + 1))
                    .scale(&from_rat(ki.clone())),
            );
        }
        let e_op = self.build(|w| {
            two_form
                .terms()
                .filter_map(|(u, c)| {
                    wedge_words(*u, w.form())
                        .map(|(sign, form)| {
                            (TensorWord::new(w.bundle(), form), signed(c.clone(), sign))
                        })
                })
                .collect()
        });
        let freq = Frequency::zero(n);
        let lambda = self.build_op(OpKind::Lambda, &freq)?;
        Ok(lambda.commutator(&e_op)?.scale(&i_unit()))
    }
}

fn signed(c: Scalar, sign: i32) -> Scalar {
    if sign < 0 {
        -c
    } else {
        c
    }
}

/// Closed-form eigenvalue bound from the diagonal-curvature quadratic form:
/// for `F^{1,1} = κ·Id`, the form on an `(I, J̄)` word weighs
/// `−Σ_{i∈I∩J} κ_i + Σ_{i∈(I∪J)^c} κ_i` against `|coefficient|²`.
pub fn gigante_girbau_formula(
    s: &CharacterSection,
    kappa: &[Rat],
) -> Result<Scalar, SpectralError> {
    if kappa.len() != s.n() {
        return Err(SpectralError::BadKappa {
            expected: s.n(),
            got: kappa.len(),
        });
    }
    let mut acc = Rat::zero();
    for (word, c) in s.terms() {
        let holo = word.form().holo_mask();
        let anti = word.form().anti_mask();
        let both = holo & anti;
        let neither = !(holo | anti) & mask_full(s.n());
        let mut factor = Rat::zero();
        for (i, ki) in kappa.iter().enumerate() {
            if both >> i & 1 == 1 {
                factor -= ki;
            }
            if neither >> i & 1 == 1 {
                factor += ki;
            }
        }
        acc += factor * norm_sqr(c);
    }
    Ok(from_rat(acc))
}

/// `−(n−p−q)/r`: the constant the diagonal-curvature form produces on a
/// rank-`r` flat summand; negative exactly when `p+q ≤ n−1` and zero at
/// `p+q = n`.
pub fn kodnak_scalar(n: usize, r: usize, p: usize, q: usize) -> Rat {
    assert!(r >= 1, "rank must be positive");
    -(rint(n as i64) - rint((p + q) as i64)) / rint(r as i64)
}

/// Exact nullspace basis of an operator, by dense Gauss-Jordan elimination.
/// Intended for small sides (the tests use sectors of dimension ≤ 64).
pub fn nullspace(op: &OperatorMatrix) -> Vec<Vec<Scalar>> {
    let side = op.side();
    nullspace_dense(
        (0..side)
            .map(|r| (0..side).map(|c| op.entry(r, c)).collect())
            .collect(),
    )
}

/// Nullspace of a dense rectangular matrix (rows of equal length) over the
/// Gaussian rationals.
pub fn nullspace_dense(mut m: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for c in col..cols {
            m[row][c] = &m[row][c] / &pivot;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let sub = &factor * &m[row][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == rows {
            break;
        }
    }
    let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![zero(); cols];
        v[free] = one();
        for &(r, c) in &pivots {
            v[c] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}
