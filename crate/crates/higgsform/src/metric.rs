//! Hermitian metrics on the exterior algebra, musical isomorphisms, metric
//! adjoints of wedge/interior, the Hodge star, and the Lefschetz pair L, Λ.
//!
//! The standard metric makes the basis words an orthonormal frame. A
//! "natural" metric rescales each holomorphic degree by a positive rational
//! weight; per-word overrides are also supported. Either way the Gram matrix
//! stays diagonal in the word basis, so adjoints are computed exactly.
//!
//! The Hodge star is fixed by the pairing `α ∧ conj(∗β) = ⟨α,β⟩·vol` with
//! `vol = dz_1∧…∧dz_n∧dz̄_1∧…∧dz̄_n` (unit coefficient). Any global phase
//! freedom in the choice of volume word is absorbed here; `star_square_signs`
//! reports the resulting per-degree sign of `∗∗`.

use std::collections::BTreeMap;

use crate::exterior::{
    AlgebraError, BasisWord, Form, FrameVector, all_words, contract_z, mask_full, wedge_words,
};
use crate::scalar::{self, Rat, Scalar, from_rat, i_unit};

/// Diagonal Hermitian metric: basis words orthogonal, each word weighted by
/// a positive rational (per holomorphic degree, with optional word overrides).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricSpec {
    dim: usize,
    degree_weights: Vec<Rat>,
    word_weights: BTreeMap<BasisWord, Rat>,
}

impl MetricSpec {
    /// The standard metric: every basis word has unit length.
    pub fn standard(dim: usize) -> Self {
        MetricSpec {
            dim,
            degree_weights: vec![scalar::rint(1); dim + 1],
            word_weights: BTreeMap::new(),
        }
    }

    /// Natural metric: weight `weights[p]` on holomorphic degree `p`.
    /// Requires `dim + 1` strictly positive weights.
    pub fn natural(dim: usize, weights: Vec<Rat>) -> Result<Self, AlgebraError> {
        use num::traits::Zero;
        if weights.len() != dim + 1 {
            return Err(AlgebraError::Invalid(format!(
                "need {} degree weights, got {}",
                dim + 1,
                weights.len()
            )));
        }
        if weights.iter().any(|w| *w <= Rat::zero()) {
            return Err(AlgebraError::Invalid(
                "degree weights must be positive".to_string(),
            ));
        }
        Ok(MetricSpec {
            dim,
            degree_weights: weights,
            word_weights: BTreeMap::new(),
        })
    }

    /// Overrides the weight of one specific word.
    pub fn with_word_weight(mut self, word: BasisWord, weight: Rat) -> Result<Self, AlgebraError> {
        use num::traits::Zero;
        if weight <= Rat::zero() {
            return Err(AlgebraError::Invalid(
                "word weights must be positive".to_string(),
            ));
        }
        self.word_weights.insert(word, weight);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// True when the metric is determined by per-degree weights alone.
    pub fn is_natural(&self) -> bool {
        self.word_weights.is_empty()
    }

    /// True when every weight is one.
    pub fn is_standard(&self) -> bool {
        use num::traits::One;
        self.word_weights.is_empty() && self.degree_weights.iter().all(|w| w.is_one())
    }

    /// `⟨w, w⟩` for a basis word.
    pub fn weight(&self, word: &BasisWord) -> Rat {
        if let Some(w) = self.word_weights.get(word) {
            return w.clone();
        }
        self.degree_weights[word.holo_degree()].clone()
    }

    /// Weight attached to holomorphic degree `p`.
    pub fn degree_weight(&self, p: usize) -> Rat {
        self.degree_weights[p].clone()
    }

    /// Hermitian inner product, conjugate-linear in the second slot.
    /// Distinct basis words are orthogonal by construction.
    pub fn inner(&self, f: &Form, g: &Form) -> Result<Scalar, AlgebraError> {
        if f.dim() != self.dim || g.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch(f.dim(), g.dim()));
        }
        let mut acc = scalar::zero();
        // Iterate the sparser operand.
        for (w, cf) in f.terms() {
            let cg = g.coeff(w);
            use num::traits::Zero;
            if cg.is_zero() {
                continue;
            }
            acc += cf * &scalar::conj(&cg) * &from_rat(self.weight(w));
        }
        Ok(acc)
    }

    /// `‖f‖²`, a nonnegative rational.
    pub fn norm_sqr(&self, f: &Form) -> Result<Rat, AlgebraError> {
        use num::traits::Zero;
        let s = self.inner(f, f)?;
        debug_assert!(s.im.is_zero());
        Ok(s.re)
    }
}

/// Standard-metric inner product.
pub fn inner(f: &Form, g: &Form) -> Result<Scalar, AlgebraError> {
    MetricSpec::standard(f.dim()).inner(f, g)
}

/// The canonical volume form `dz_1∧…∧dz_n∧dz̄_1∧…∧dz̄_n`, unit coefficient.
pub fn vol(n: usize) -> Form {
    let full = mask_full(n);
    Form::monomial(n, BasisWord::new(full, full), scalar::one())
}

/// A holomorphic polyvector: Scalar combination of `Z_{i1}∧…∧Z_{ip}` blades,
/// encoded by index masks. Produced by [`sharp`]; consumed via
/// [`Polyvector::interior`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyvector {
    dim: usize,
    terms: BTreeMap<u32, Scalar>,
}

impl Polyvector {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &Scalar)> {
        self.terms.iter()
    }

    /// Iterated interior product: a blade `Z_{i1}∧…∧Z_{ip}` (ascending) acts
    /// as `i(Z_{ip})⋯i(Z_{i1})`, contracting the lowest index first.
    pub fn interior(&self, f: &Form) -> Result<Form, AlgebraError> {
        if self.dim != f.dim() {
            return Err(AlgebraError::DimensionMismatch(self.dim, f.dim()));
        }
        let mut out = Form::zero(self.dim);
        for (mask, c) in self.terms() {
            let mut g = f.clone();
            let mut bits = *mask;
            while bits != 0 && !g.is_zero() {
                let j = bits.trailing_zeros() as usize + 1;
                g = contract_z(j, &g);
                bits &= bits - 1;
            }
            out.add_assign(&g.scale(c));
        }
        Ok(out)
    }
}

/// Raises a pure `(p,0)` form to a polyvector. Conjugate-linear on
/// coefficients, so that `ε(ω)* = i(sharp(ω))` under the standard metric.
pub fn sharp(f: &Form) -> Result<Polyvector, AlgebraError> {
    if !f.is_holomorphic_type() {
        return Err(AlgebraError::NotPureHolomorphic);
    }
    let mut terms = BTreeMap::new();
    for (w, c) in f.terms() {
        terms.insert(w.holo_mask(), scalar::conj(c));
    }
    Ok(Polyvector {
        dim: f.dim(),
        terms,
    })
}

/// Lowers a tangent vector to a 1-form: `Z_j ↦ dz_j`, `Z̄_j ↦ dz̄_j`,
/// conjugate-linear on components, so `sharp(flat(Z)) = Z` on polyvector
/// degree one and `i(Z)* = ε(flat(Z))`.
pub fn flat(v: &FrameVector) -> Form {
    let n = v.dim();
    let mut out = Form::zero(n);
    for j in 1..=n {
        out.add_assign(&Form::dz(n, j).scale(&scalar::conj(v.holo_component(j))));
        out.add_assign(&Form::dzbar(n, j).scale(&scalar::conj(v.anti_component(j))));
    }
    out
}

/// Metric adjoint of left exterior multiplication by a pure `(k,0)` form:
/// `⟨ω∧a, b⟩ = ⟨a, adjoint_wedge(ω, b)⟩` for the standard metric.
pub fn adjoint_wedge(omega: &Form, f: &Form) -> Result<Form, AlgebraError> {
    if omega.pure_holo_degree().is_none() && !omega.is_zero() {
        return Err(AlgebraError::NotPureHolomorphic);
    }
    sharp(omega)?.interior(f)
}

/// [`adjoint_wedge`] for a natural (or any diagonal) metric `h`:
/// `⟨ω∧a, b⟩_h = ⟨a, adjoint_wedge_with(h, ω, b)⟩_h`.
pub fn adjoint_wedge_with(
    h: &MetricSpec,
    omega: &Form,
    f: &Form,
) -> Result<Form, AlgebraError> {
    if omega.pure_holo_degree().is_none() && !omega.is_zero() {
        return Err(AlgebraError::NotPureHolomorphic);
    }
    if f.dim() != h.dim() || omega.dim() != h.dim() {
        return Err(AlgebraError::DimensionMismatch(omega.dim(), f.dim()));
    }
    // Diagonal metric: adjoint of (word u ↦ Σ_v O_{vu} v) sends
    // v ↦ Σ_u conj(O_{vu}) (weight(v)/weight(u)) u.
    let mut out = Form::zero(f.dim());
    for (wo, co) in omega.terms() {
        for (wf, cf) in f.terms() {
            // u with ω-word ∧ u = ±wf requires the ω indices inside wf.
            if wo.holo_mask() & !wf.holo_mask() != 0 || wo.anti_mask() != 0 {
                continue;
            }
            let u = BasisWord::new(wf.holo_mask() & !wo.holo_mask(), wf.anti_mask());
            let (sign, target) = wedge_words(*wo, u).expect("disjoint by construction");
            debug_assert_eq!(target, *wf);
            let ratio = h.weight(wf) / h.weight(&u);
            let mut c = scalar::conj(co) * cf * from_rat(ratio);
            if sign < 0 {
                c = -c;
            }
            out.add_term(u, c);
        }
    }
    Ok(out)
}

/// Metric adjoint of the interior product by a frame vector:
/// `⟨i(v)a, b⟩ = ⟨a, adjoint_interior(v, b)⟩ = ⟨a, flat(v)∧b⟩`
/// for the standard metric.
pub fn adjoint_interior(v: &FrameVector, f: &Form) -> Result<Form, AlgebraError> {
    if v.dim() != f.dim() {
        return Err(AlgebraError::DimensionMismatch(v.dim(), f.dim()));
    }
    Ok(flat(v).wedge(f))
}

/// [`adjoint_interior`] for a diagonal metric `h`.
pub fn adjoint_interior_with(
    h: &MetricSpec,
    v: &FrameVector,
    f: &Form,
) -> Result<Form, AlgebraError> {
    if v.dim() != f.dim() || f.dim() != h.dim() {
        return Err(AlgebraError::DimensionMismatch(v.dim(), f.dim()));
    }
    let lowered = flat(v);
    let mut out = Form::zero(f.dim());
    for (wv, cv) in lowered.terms() {
        for (wf, cf) in f.terms() {
            if let Some((sign, target)) = wedge_words(*wv, *wf) {
                // Adjoint entry (i(v)*)_{tu} = conj(i(v)_{ut})·w(u)/w(t):
                // source word over target word.
                let ratio = h.weight(wf) / h.weight(&target);
                let mut c = cv * cf * from_rat(ratio);
                if sign < 0 {
                    c = -c;
                }
                out.add_term(target, c);
            }
        }
    }
    Ok(out)
}

/// Complementary word: the unique basis word `x` with `w ∧ x = ±vol`.
fn complement(n: usize, w: &BasisWord) -> BasisWord {
    let full = mask_full(n);
    BasisWord::new(!w.holo_mask() & full, !w.anti_mask() & full)
}

/// Hodge star for the standard metric, determined basis-word-wise by
/// `α ∧ conj(∗β) = ⟨α,β⟩·vol` for all α. Complex-linear; maps `(p,q)` to
/// `(n−q, n−p)`.
pub fn hodge_star(f: &Form) -> Form {
    let n = f.dim();
    let mut out = Form::zero(n);
    for (w, c) in f.terms() {
        let comp = complement(n, w);
        let (eps, top) = wedge_words(*w, comp).expect("complement is disjoint");
        debug_assert_eq!(top, BasisWord::new(mask_full(n), mask_full(n)));
        // conj(∗w) = ε·comp, so ∗w = ε·conj(comp) as a monomial form.
        let conj_monomial = Form::monomial(n, comp, scalar::one()).conj();
        let mut scaled = conj_monomial.scale(c);
        if eps < 0 {
            scaled = -&scaled;
        }
        out.add_assign(&scaled);
    }
    out
}

/// Per-total-degree sign of `∗∗`, computed by literal composition over every
/// basis word. Index `w` of the result holds the sign on degree `w`.
/// Panics if composition ever fails to be ±identity per word (it cannot).
pub fn star_square_signs(n: usize) -> Vec<i32> {
    let mut signs: Vec<Option<i32>> = vec![None; 2 * n + 1];
    for w in all_words(n) {
        let f = Form::monomial(n, w, scalar::one());
        let ss = hodge_star(&hodge_star(&f));
        assert_eq!(ss.len(), 1, "∗∗ must send a word to a multiple of itself");
        let c = ss.coeff(&w);
        let sign = if c == scalar::one() {
            1
        } else if c == -scalar::one() {
            -1
        } else {
            panic!("∗∗ produced a non-unit coefficient");
        };
        let d = w.total_degree();
        match signs[d] {
            None => signs[d] = Some(sign),
            Some(s) => assert_eq!(s, sign, "∗∗ sign must be constant per degree"),
        }
    }
    signs.into_iter().map(|s| s.expect("degree covered")).collect()
}

/// The Kähler form `ω = i·Σ_j dz_j ∧ dz̄_j`.
pub fn kahler_form(n: usize) -> Form {
    let mut out = Form::zero(n);
    for j in 1..=n {
        out.add_assign(&Form::dz(n, j).wedge(&Form::dzbar(n, j)).scale(&i_unit()));
    }
    out
}

/// Lefschetz operator `L = ω ∧ ·`.
pub fn lefschetz_l(f: &Form) -> Form {
    kahler_form(f.dim()).wedge(f)
}

/// Its metric adjoint `Λ = i·Σ_j i(Z_j) i(Z̄_j)`; the equality of this
/// contraction formula with the inner-product adjoint of `L` is verified in
/// the tests below.
pub fn lefschetz_lambda(f: &Form) -> Form {
    let n = f.dim();
    let mut out = Form::zero(n);
    for j in 1..=n {
        out.add_assign(&contract_z(j, &crate::exterior::contract_zbar(j, f)));
    }
    out.scale(&i_unit())
}
