//! Sparse complexified exterior algebra on an n-dimensional complex vector
//! space, with frame covectors `dz_1..dz_n` and `dz̄_1..dz̄_n`.
//!
//! A basis word is `dz_I ∧ dz̄_J` with both index sets ascending and every
//! holomorphic factor written before every anti-holomorphic one; forms are
//! finite sums of basis words with [`Scalar`] coefficients stored sparsely.
//! All signs come from counting transpositions against this canonical order,
//! and zero coefficients are purged eagerly so structural equality of the
//! term maps is exactly equality of forms.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, BitXor, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::{self, Scalar};

/// Largest supported dimension; masks fit comfortably in `u32`.
pub const MAX_DIM: usize = 12;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension {0} out of range 1..={MAX_DIM}")]
    BadDimension(usize),
    #[error("frame index {index} out of range 1..={dim}")]
    BadIndex { index: usize, dim: usize },
    #[error("expected a pure ({0},{1}) form")]
    NotPureType(usize, usize),
    #[error("expected a pure (k,0) form of a single degree")]
    NotPureHolomorphic,
    #[error("expected a holomorphic frame vector")]
    NotHolomorphic,
    #[error("{0}")]
    Invalid(String),
}

/// `dz_I ∧ dz̄_J` encoded as two bitmasks; bit `j-1` stands for index `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisWord {
    holo: u32,
    anti: u32,
}

impl BasisWord {
    pub fn new(holo: u32, anti: u32) -> Self {
        BasisWord { holo, anti }
    }

    /// The empty word (the scalar `1`).
    pub fn scalar() -> Self {
        BasisWord { holo: 0, anti: 0 }
    }

    pub fn holo_mask(&self) -> u32 {
        self.holo
    }

    pub fn anti_mask(&self) -> u32 {
        self.anti
    }

    /// Holomorphic degree `p`.
    pub fn holo_degree(&self) -> usize {
        self.holo.count_ones() as usize
    }

    /// Anti-holomorphic degree `q`.
    pub fn anti_degree(&self) -> usize {
        self.anti.count_ones() as usize
    }

    /// Hodge type `(p, q)`.
    pub fn hodge_type(&self) -> (usize, usize) {
        (self.holo_degree(), self.anti_degree())
    }

    pub fn total_degree(&self) -> usize {
        self.holo_degree() + self.anti_degree()
    }

    pub fn fits(&self, dim: usize) -> bool {
        let full = mask_full(dim);
        self.holo & !full == 0 && self.anti & !full == 0
    }

    /// 1-based indices of the holomorphic factors, ascending.
    pub fn holo_indices(&self) -> impl Iterator<Item = usize> {
        mask_indices(self.holo)
    }

    /// 1-based indices of the anti-holomorphic factors, ascending.
    pub fn anti_indices(&self) -> impl Iterator<Item = usize> {
        mask_indices(self.anti)
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holo == 0 && self.anti == 0 {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        for j in self.holo_indices() {
            parts.push(format!("dz{j}"));
        }
        for j in self.anti_indices() {
            parts.push(format!("dz̄{j}"));
        }
        write!(f, "{}", parts.join("∧"))
    }
}

pub fn mask_full(dim: usize) -> u32 {
    (1u32 << dim) - 1
}

fn mask_indices(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
}

/// Parity sign of interleaving two disjoint ascending runs `a` then `b`
/// into one ascending run: `(-1)^{#{(x,y) ∈ a×b : x > y}}`.
fn merge_sign(a: u32, b: u32) -> i32 {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        inversions += (a >> (bit + 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Wedge of two basis words: `None` on a repeated factor, otherwise the
/// canonical word and the transposition sign.
pub fn wedge_words(a: BasisWord, b: BasisWord) -> Option<(i32, BasisWord)> {
    if a.holo & b.holo != 0 || a.anti & b.anti != 0 {
        return None;
    }
    // Reorder a.holo · a.anti · b.holo · b.anti → (holo merge) · (anti merge):
    // b's holomorphic run first crosses a's anti-holomorphic run.
    let mut sign = merge_sign(a.holo, b.holo) * merge_sign(a.anti, b.anti);
    if (a.anti.count_ones() * b.holo.count_ones()) % 2 == 1 {
        sign = -sign;
    }
    Some((sign, BasisWord::new(a.holo | b.holo, a.anti | b.anti)))
}

/// Conjugate of a basis word: swaps `dz ↔ dz̄` and restores canonical order.
pub fn conj_word(w: BasisWord) -> (i32, BasisWord) {
    let sign = if (w.holo_degree() * w.anti_degree()) % 2 == 1 {
        -1
    } else {
        1
    };
    (sign, BasisWord::new(w.anti, w.holo))
}

/// A form: sparse Scalar combination of basis words at a fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    dim: usize,
    terms: BTreeMap<BasisWord, Scalar>,
}

impl Form {
    pub fn zero(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "dimension out of range");
        Form {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The constant form `1`.
    pub fn one(dim: usize) -> Self {
        Form::monomial(dim, BasisWord::scalar(), scalar::one())
    }

    pub fn monomial(dim: usize, word: BasisWord, coeff: Scalar) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "dimension out of range");
        assert!(word.fits(dim), "basis word does not fit dimension");
        let mut f = Form::zero(dim);
        f.add_term(word, coeff);
        f
    }

    /// `dz_j` (1-based).
    pub fn dz(dim: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= dim, "index out of range");
        Form::monomial(dim, BasisWord::new(1 << (j - 1), 0), scalar::one())
    }

    /// `dz̄_j` (1-based).
    pub fn dzbar(dim: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= dim, "index out of range");
        Form::monomial(dim, BasisWord::new(0, 1 << (j - 1)), scalar::one())
    }

    /// `dz_{i1} ∧ … ∧ dz_{ip}` for ascending 1-based indices.
    pub fn dz_blade(dim: usize, indices: &[usize]) -> Self {
        let mut mask = 0u32;
        for &j in indices {
            assert!(j >= 1 && j <= dim, "index out of range");
            assert!(mask >> (j - 1) & 1 == 0, "repeated index");
            mask |= 1 << (j - 1);
        }
        Form::monomial(dim, BasisWord::new(mask, 0), scalar::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `word` (zero when absent).
    pub fn coeff(&self, word: &BasisWord) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(scalar::zero)
    }

    /// Adds `coeff · word`, purging the entry if it cancels to zero.
    pub fn add_term(&mut self, word: BasisWord, coeff: Scalar) {
        use num::traits::Zero;
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word).or_insert_with(scalar::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add_assign(&mut self, other: &Form) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (w, c) in other.terms() {
            self.add_term(*w, c.clone());
        }
    }

    pub fn scale(&self, s: &Scalar) -> Form {
        use num::traits::Zero;
        let mut out = Form::zero(self.dim);
        if s.is_zero() {
            return out;
        }
        for (w, c) in self.terms() {
            out.add_term(*w, c * s);
        }
        out
    }

    /// The component of pure Hodge type `(p, q)`.
    pub fn project(&self, p: usize, q: usize) -> Form {
        let mut out = Form::zero(self.dim);
        for (w, c) in self.terms() {
            if w.hodge_type() == (p, q) {
                out.add_term(*w, c.clone());
            }
        }
        out
    }

    /// The set of Hodge types present.
    pub fn grades(&self) -> BTreeSet<(usize, usize)> {
        self.terms.keys().map(|w| w.hodge_type()).collect()
    }

    /// `Some(k)` when every term has type `(k, 0)` for one fixed `k`.
    /// The zero form is not pure.
    pub fn pure_holo_degree(&self) -> Option<usize> {
        let mut degree = None;
        for w in self.terms.keys() {
            if w.anti_degree() != 0 {
                return None;
            }
            match degree {
                None => degree = Some(w.holo_degree()),
                Some(k) if k == w.holo_degree() => {}
                Some(_) => return None,
            }
        }
        degree
    }

    /// True when every term (if any) has anti-holomorphic degree zero.
    pub fn is_holomorphic_type(&self) -> bool {
        self.terms.keys().all(|w| w.anti_degree() == 0)
    }

    /// True when every term has Hodge type `(p, q)`.
    pub fn is_pure_type(&self, p: usize, q: usize) -> bool {
        self.terms.keys().all(|w| w.hodge_type() == (p, q))
    }

    pub fn try_wedge(&self, other: &Form) -> Result<Form, AlgebraError> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = Form::zero(self.dim);
        for (wa, ca) in self.terms() {
            for (wb, cb) in other.terms() {
                if let Some((sign, w)) = wedge_words(*wa, *wb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(w, c);
                }
            }
        }
        Ok(out)
    }

    /// Wedge product. Panics on a dimension mismatch; use [`Form::try_wedge`]
    /// at validation boundaries.
    pub fn wedge(&self, other: &Form) -> Form {
        self.try_wedge(other).expect("wedge dimension mismatch")
    }

    /// Componentwise complex conjugate: swaps `dz_I ∧ dz̄_J` to `dz_J ∧ dz̄_I`
    /// with the reordering sign and conjugates every coefficient.
    pub fn conj(&self) -> Form {
        let mut out = Form::zero(self.dim);
        for (w, c) in self.terms() {
            let (sign, cw) = conj_word(*w);
            let mut coeff = scalar::conj(c);
            if sign < 0 {
                coeff = -coeff;
            }
            out.add_term(cw, coeff);
        }
        out
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms() {
            let cs = scalar::scalar_str(c);
            let lead = if first {
                first = false;
                String::new()
            } else {
                " + ".to_string()
            };
            if *w == BasisWord::scalar() {
                write!(f, "{lead}{cs}")?;
            } else if cs == "1" {
                write!(f, "{lead}{w}")?;
            } else if cs == "-1" {
                write!(f, "{lead}-{w}")?;
            } else if cs.contains('+') || (cs.matches('-').count() > 0 && !cs.starts_with('-')) {
                write!(f, "{lead}({cs})·{w}")?;
            } else {
                write!(f, "{lead}{cs}·{w}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(*w, -c.clone());
        }
        out
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        let mut out = Form::zero(self.dim);
        for (w, c) in self.terms() {
            out.add_term(*w, -c.clone());
        }
        out
    }
}

/// Wedge product via `^`, mirroring the usual notation.
impl BitXor for &Form {
    type Output = Form;
    fn bitxor(self, rhs: &Form) -> Form {
        self.wedge(rhs)
    }
}

impl Mul<&Scalar> for &Form {
    type Output = Form;
    fn mul(self, rhs: &Scalar) -> Form {
        self.scale(rhs)
    }
}

/// A complexified tangent vector: a Scalar combination of the frame vectors
/// `Z_1..Z_n` (holomorphic) and `Z̄_1..Z̄_n` (anti-holomorphic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameVector {
    dim: usize,
    holo: Vec<Scalar>,
    anti: Vec<Scalar>,
}

impl FrameVector {
    pub fn new(dim: usize, holo: Vec<Scalar>, anti: Vec<Scalar>) -> Result<Self, AlgebraError> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(AlgebraError::BadDimension(dim));
        }
        if holo.len() != dim || anti.len() != dim {
            return Err(AlgebraError::Invalid(format!(
                "component vectors must have length {dim}"
            )));
        }
        Ok(FrameVector { dim, holo, anti })
    }

    /// The frame vector `Z_j` (1-based).
    pub fn z(dim: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= dim, "index out of range");
        let mut holo = vec![scalar::zero(); dim];
        holo[j - 1] = scalar::one();
        FrameVector {
            dim,
            holo,
            anti: vec![scalar::zero(); dim],
        }
    }

    /// The frame vector `Z̄_j` (1-based).
    pub fn zbar(dim: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= dim, "index out of range");
        let mut anti = vec![scalar::zero(); dim];
        anti[j - 1] = scalar::one();
        FrameVector {
            dim,
            anti,
            holo: vec![scalar::zero(); dim],
        }
    }

    /// Holomorphic vector with the given components.
    pub fn holomorphic(dim: usize, components: Vec<Scalar>) -> Result<Self, AlgebraError> {
        let anti = vec![scalar::zero(); dim];
        FrameVector::new(dim, components, anti)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn holo_component(&self, j: usize) -> &Scalar {
        &self.holo[j - 1]
    }

    pub fn anti_component(&self, j: usize) -> &Scalar {
        &self.anti[j - 1]
    }

    pub fn is_holomorphic(&self) -> bool {
        use num::traits::Zero;
        self.anti.iter().all(|c| c.is_zero())
    }

    pub fn is_anti_holomorphic(&self) -> bool {
        use num::traits::Zero;
        self.holo.iter().all(|c| c.is_zero())
    }

    /// The conjugate vector: `Z ↦ Z̄` componentwise.
    pub fn conj(&self) -> FrameVector {
        FrameVector {
            dim: self.dim,
            holo: self.anti.iter().map(scalar::conj).collect(),
            anti: self.holo.iter().map(scalar::conj).collect(),
        }
    }

    /// Interior product `i(v)f`, bilinear in both arguments; an
    /// anti-derivation of degree −1 in the graded sense.
    pub fn try_interior(&self, f: &Form) -> Result<Form, AlgebraError> {
        use num::traits::Zero;
        if self.dim != f.dim() {
            return Err(AlgebraError::DimensionMismatch(self.dim, f.dim()));
        }
        let mut out = Form::zero(self.dim);
        for j in 1..=self.dim {
            let ch = &self.holo[j - 1];
            if !ch.is_zero() {
                accumulate_contraction(&mut out, f, j, false, ch);
            }
            let ca = &self.anti[j - 1];
            if !ca.is_zero() {
                accumulate_contraction(&mut out, f, j, true, ca);
            }
        }
        Ok(out)
    }

    /// Interior product; panics on a dimension mismatch.
    pub fn interior(&self, f: &Form) -> Form {
        self.try_interior(f).expect("interior dimension mismatch")
    }
}

/// Adds `coeff · i(Z_j)f` (or `i(Z̄_j)f` when `anti`) into `out`.
fn accumulate_contraction(out: &mut Form, f: &Form, j: usize, anti: bool, coeff: &Scalar) {
    let bit = 1u32 << (j - 1);
    for (w, c) in f.terms() {
        let (sign, word) = if anti {
            if w.anti_mask() & bit == 0 {
                continue;
            }
            let below = (w.anti_mask() & (bit - 1)).count_ones() + w.holo_mask().count_ones();
            let s = if below % 2 == 0 { 1 } else { -1 };
            (s, BasisWord::new(w.holo_mask(), w.anti_mask() & !bit))
        } else {
            if w.holo_mask() & bit == 0 {
                continue;
            }
            let below = (w.holo_mask() & (bit - 1)).count_ones();
            let s = if below % 2 == 0 { 1 } else { -1 };
            (s, BasisWord::new(w.holo_mask() & !bit, w.anti_mask()))
        };
        let mut v = c * coeff;
        if sign < 0 {
            v = -v;
        }
        out.add_term(word, v);
    }
}

/// Contraction by the single frame vector `Z_j`; cheaper than building a
/// [`FrameVector`] when iterating over the frame.
pub fn contract_z(j: usize, f: &Form) -> Form {
    let mut out = Form::zero(f.dim());
    accumulate_contraction(&mut out, f, j, false, &scalar::one());
    out
}

/// Contraction by `Z̄_j`.
pub fn contract_zbar(j: usize, f: &Form) -> Form {
    let mut out = Form::zero(f.dim());
    accumulate_contraction(&mut out, f, j, true, &scalar::one());
    out
}

/// The degree operator `Σ_j dz_j ∧ i(Z_j)` on pure `(k,0)` forms; returns
/// `k·f`. Errors when the input mixes degrees or has anti-holomorphic factors.
pub fn euler_degree(f: &Form) -> Result<Form, AlgebraError> {
    if !f.is_zero() && f.pure_holo_degree().is_none() {
        return Err(AlgebraError::NotPureHolomorphic);
    }
    let mut out = Form::zero(f.dim());
    for j in 1..=f.dim() {
        let contracted = contract_z(j, f);
        out.add_assign(&Form::dz(f.dim(), j).wedge(&contracted));
    }
    Ok(out)
}

/// Enumerates every basis word that fits dimension `n`, in mask order.
pub fn all_words(n: usize) -> impl Iterator<Item = BasisWord> {
    let full = mask_full(n);
    (0..=full).flat_map(move |h| (0..=full).map(move |a| BasisWord::new(h, a)))
}

/// Enumerates the `(p,0)` basis words (all subsets as holomorphic masks).
pub fn holo_words(n: usize) -> impl Iterator<Item = BasisWord> {
    (0..=mask_full(n)).map(|h| BasisWord::new(h, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;
    use crate::scalar::{rat, sint, srat};
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn word(h: &[usize], a: &[usize]) -> BasisWord {
        let mut hm = 0u32;
        let mut am = 0u32;
        for &j in h {
            hm |= 1 << (j - 1);
        }
        for &j in a {
            am |= 1 << (j - 1);
        }
        BasisWord::new(hm, am)
    }

    #[test]
    fn wedge_basic_words() {
        let n = 4;
        let dz1 = Form::dz(n, 1);
        let dz2 = Form::dz(n, 2);
        assert_eq!(
            dz1.wedge(&dz2),
            Form::monomial(n, word(&[1, 2], &[]), sint(1))
        );
        assert_eq!(dz2.wedge(&dz1), Form::monomial(n, word(&[1, 2], &[]), sint(-1)));
        assert!(dz1.wedge(&dz1).is_zero());
        // (dz2∧dz3)∧dz1 = +dz1∧dz2∧dz3: two transpositions.
        let f = Form::dz_blade(n, &[2, 3]).wedge(&dz1);
        assert_eq!(f, Form::dz_blade(n, &[1, 2, 3]));
    }

    #[test]
    fn wedge_moves_holo_past_anti() {
        let n = 2;
        // dz̄1 ∧ dz2 = −dz2 ∧ dz̄1.
        let f = Form::dzbar(n, 1).wedge(&Form::dz(n, 2));
        assert_eq!(f, Form::monomial(n, word(&[2], &[1]), sint(-1)));
    }

    #[test]
    fn interior_examples() {
        let n = 3;
        let f = Form::dz_blade(n, &[1, 2, 3]);
        assert_eq!(FrameVector::z(n, 1).interior(&f), Form::dz_blade(n, &[2, 3]));
        let g = Form::dz_blade(n, &[1, 2]);
        assert_eq!(FrameVector::z(n, 2).interior(&g), -&Form::dz(n, 1));
        assert!(FrameVector::z(n, 1).interior(&Form::dzbar(n, 1)).is_zero());
        // i(Z̄1) crosses the holomorphic block first.
        let h = Form::dz(n, 2).wedge(&Form::dzbar(n, 1));
        assert_eq!(FrameVector::zbar(n, 1).interior(&h), -&Form::dz(n, 2));
    }

    #[test]
    fn conjugation_swaps_types() {
        let n = 2;
        let f = Form::monomial(n, word(&[1], &[2]), crate::scalar::i_unit());
        let c = f.conj();
        assert_eq!(
            c,
            Form::monomial(n, word(&[2], &[1]), -crate::scalar::i_unit() * sint(-1))
        );
        assert_eq!(c.conj(), f);
    }

    #[test]
    fn projection_and_grades() {
        let n = 3;
        let f = &Form::dz(n, 1).wedge(&Form::dzbar(n, 2)) + &Form::dz_blade(n, &[1, 2]);
        assert_eq!(f.project(1, 1), Form::dz(n, 1).wedge(&Form::dzbar(n, 2)));
        assert_eq!(f.project(2, 0), Form::dz_blade(n, &[1, 2]));
        assert!(f.project(0, 1).is_zero());
        let grades: Vec<_> = f.grades().into_iter().collect();
        assert_eq!(grades, vec![(1, 1), (2, 0)]);
        assert!(f.pure_holo_degree().is_none());
        assert_eq!(Form::dz_blade(n, &[1, 3]).pure_holo_degree(), Some(2));
    }

    #[test]
    fn euler_degree_scales_by_degree() {
        let n = 4;
        let f = Form::dz_blade(n, &[1, 2, 3]);
        assert_eq!(euler_degree(&f).unwrap(), f.scale(&sint(3)));
        assert_eq!(euler_degree(&Form::one(n)).unwrap(), Form::zero(n));
        let mixed = &Form::dz(n, 1) + &Form::dz_blade(n, &[1, 2]);
        assert_eq!(euler_degree(&mixed), Err(AlgebraError::NotPureHolomorphic));
        let bad = Form::dzbar(n, 1);
        assert_eq!(euler_degree(&bad), Err(AlgebraError::NotPureHolomorphic));
    }

    #[test]
    fn try_wedge_rejects_dimension_mismatch() {
        let f = Form::dz(2, 1);
        let g = Form::dz(3, 1);
        assert_eq!(f.try_wedge(&g), Err(AlgebraError::DimensionMismatch(2, 3)));
        assert!(FrameVector::z(2, 1).try_interior(&g).is_err());
    }

    #[test]
    fn scalar_one_is_identity_for_wedge() {
        let n = 3;
        let f = &Form::dz_blade(n, &[1, 3]) + &Form::dzbar(n, 2).scale(&srat(2, 3));
        assert_eq!(Form::one(n).wedge(&f), f);
        assert_eq!(f.wedge(&Form::one(n)), f);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn wedge_is_associative(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = 3;
            let a = sampling::random_form(&mut rng, n, 3);
            let b = sampling::random_form(&mut rng, n, 3);
            let c = sampling::random_form(&mut rng, n, 3);
            prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        }

        #[test]
        fn wedge_is_graded_anticommutative(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = 3;
            let (pa, qa) = sampling::random_type(&mut rng, n);
            let (pb, qb) = sampling::random_type(&mut rng, n);
            let a = sampling::random_pure_form(&mut rng, n, pa, qa, 3);
            let b = sampling::random_pure_form(&mut rng, n, pb, qb, 3);
            let lhs = a.wedge(&b);
            let mut rhs = b.wedge(&a);
            if ((pa + qa) * (pb + qb)) % 2 == 1 {
                rhs = -&rhs;
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn interior_is_an_anti_derivation(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = 3;
            let (pa, qa) = sampling::random_type(&mut rng, n);
            let a = sampling::random_pure_form(&mut rng, n, pa, qa, 3);
            let b = sampling::random_form(&mut rng, n, 3);
            let v = sampling::random_vector(&mut rng, n);
            let lhs = v.interior(&a.wedge(&b));
            let mut rhs = v.interior(&a).wedge(&b);
            let sign_b = a.scale(&if (pa + qa) % 2 == 1 { sint(-1) } else { sint(1) });
            rhs.add_assign(&sign_b.wedge(&v.interior(&b)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn interior_squares_to_zero(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = 3;
            let f = sampling::random_form(&mut rng, n, 4);
            let v = sampling::random_vector(&mut rng, n);
            prop_assert!(v.interior(&v.interior(&f)).is_zero());
        }

        #[test]
        fn euler_identity_on_pure_forms(seed in any::<u64>(), k in 0usize..=6) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = 6;
            let k = k.min(n);
            let f = sampling::random_pure_form(&mut rng, n, k, 0, 4);
            let out = euler_degree(&f).unwrap();
            prop_assert_eq!(out, f.scale(&sint(k as i64)));
        }
    }

    #[test]
    fn merge_sign_small_cases() {
        assert_eq!(merge_sign(0b1, 0b10), 1); // 1 then 2: sorted
        assert_eq!(merge_sign(0b10, 0b1), -1); // 2 then 1: one inversion
        assert_eq!(merge_sign(0b110, 0b1), 1); // 2,3 then 1: two inversions
        assert_eq!(rat(1, 2) + rat(1, 2), rat(1, 1));
    }
}
