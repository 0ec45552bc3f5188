//! The wedge-type Higgs operator induced by an odd-degree holomorphic form.
//!
//! For a fixed `ϖ ∈ ⊕ Λ^{(k,0)}` (all degrees odd) the operator family is
//! `θ(Z)φ = (i(Z)ϖ) ∧ φ` in each holomorphic direction `Z`. Oddness of the
//! degrees makes every `i(Z)ϖ` an even form, so the family commutes and the
//! integrability bracket vanishes identically: that is the Higgs condition.
//! This module also provides the metric adjoints `θ̄_h(Z̄)`, the zeroth-order
//! curvature contraction `T_h = Σ_j [θ(Z_j), θ̄_h(Z̄_j)]`, its closed-form
//! eigenvalue tables, and exact kernel characterizations for `θ` and `θ̄_h`.

use thiserror::Error;

use crate::exterior::{AlgebraError, Form, FrameVector, contract_z};
use crate::metric::{MetricSpec, adjoint_interior_with, adjoint_wedge_with};
use crate::scalar::{self, Rat, rint};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum HiggsError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("the structure form must be a nonzero (·,0) form with all degrees odd")]
    NotOddHolomorphic,
    #[error("this operation requires a structure form of a single pure degree")]
    MixedDegree,
    #[error("this operation requires a single wedge word (a simple blade)")]
    NotSimple,
    #[error("table dimension must be odd and at least 3, got {0}")]
    BadTableDimension(usize),
    #[error("direction vector must be of {0} flavor")]
    WrongFlavor(&'static str),
}

/// A Higgs structure form: nonzero, purely holomorphic type, every degree odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HiggsField {
    omega: Form,
}

impl HiggsField {
    pub fn new(omega: Form) -> Result<Self, HiggsError> {
        if omega.is_zero() || !omega.is_holomorphic_type() {
            return Err(HiggsError::NotOddHolomorphic);
        }
        for (p, _) in omega.grades() {
            if p % 2 == 0 {
                return Err(HiggsError::NotOddHolomorphic);
            }
        }
        Ok(HiggsField { omega })
    }

    /// The top holomorphic form `dz_1∧…∧dz_n`; requires odd `n`.
    pub fn top(n: usize) -> Result<Self, HiggsError> {
        if n % 2 == 0 {
            return Err(HiggsError::NotOddHolomorphic);
        }
        let indices: Vec<usize> = (1..=n).collect();
        HiggsField::new(Form::dz_blade(n, &indices))
    }

    pub fn omega(&self) -> &Form {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.omega.dim()
    }

    /// `Some(k)` when the structure form has a single degree.
    pub fn pure_degree(&self) -> Option<usize> {
        self.omega.pure_holo_degree()
    }

    /// `θ(Z)φ = (i(Z)ϖ)∧φ` for a holomorphic direction `Z`. Rejects
    /// directions with anti-holomorphic components.
    pub fn theta(&self, z: &FrameVector, phi: &Form) -> Result<Form, HiggsError> {
        if !z.is_holomorphic() {
            return Err(HiggsError::WrongFlavor("holomorphic"));
        }
        Ok(wedge_operator_vec(&self.omega, z, phi)?)
    }

    /// `θ(Z_j)φ` in the j-th frame direction.
    pub fn theta_z(&self, j: usize, phi: &Form) -> Result<Form, HiggsError> {
        if j < 1 || j > self.dim() {
            return Err(HiggsError::Algebra(AlgebraError::BadIndex {
                index: j,
                dim: self.dim(),
            }));
        }
        Ok(contract_z(j, &self.omega).try_wedge(phi)?)
    }

    /// The metric adjoint `θ̄_h(Z̄_j)φ` in the j-th anti-holomorphic frame
    /// direction: `⟨θ(Z_j)a, b⟩_h = ⟨a, θ̄_h(Z̄_j)b⟩_h`. Works for the
    /// standard metric and for natural per-degree weights; mixed-degree
    /// structure forms act componentwise.
    pub fn theta_adjoint(&self, j: usize, phi: &Form, h: &MetricSpec) -> Result<Form, HiggsError> {
        if j < 1 || j > self.dim() {
            return Err(HiggsError::Algebra(AlgebraError::BadIndex {
                index: j,
                dim: self.dim(),
            }));
        }
        let mut out = Form::zero(self.dim());
        for (p, _) in self.omega.grades() {
            let component = self.omega.project(p, 0);
            let contracted = contract_z(j, &component);
            out.add_assign(&adjoint_wedge_with(h, &contracted, phi)?);
        }
        Ok(out)
    }

    /// `[θ(Z_j), θ(Z_l)]φ`; identically zero because all degrees are odd.
    pub fn commutator(&self, j: usize, l: usize, phi: &Form) -> Result<Form, HiggsError> {
        Ok(wedge_commutator(&self.omega, j, l, phi)?)
    }

    /// `T_h(s) = Σ_j [θ(Z_j), θ̄_h(Z̄_j)] s`.
    pub fn t_operator(&self, s: &Form, h: &MetricSpec) -> Result<Form, HiggsError> {
        let mut out = Form::zero(self.dim());
        for j in 1..=self.dim() {
            let adj = self.theta_adjoint(j, s, h)?;
            out.add_assign(&self.theta_z(j, &adj)?);
            let th = self.theta_z(j, s)?;
            let back = self.theta_adjoint(j, &th, h)?;
            out.add_assign(&-&back);
        }
        Ok(out)
    }

    /// Closed-form `T_h` on a simple `(k,0)` blade `ϖ = a·dz_{i1}∧…∧dz_{ik}`
    /// under the standard metric:
    ///
    /// `T_h(s) = −‖ϖ‖²·{ k·s + Σ_{r=1}^{min(k−2, deg s)} (k−r)(−1)^r
    ///            Σ_{t1<…<tr ⊆ blade} ε(dz_{t…}) i(sharp(dz_{t…})) s }`
    ///
    /// applied per pure-degree component of `s`. Agreement with
    /// [`HiggsField::t_operator`] is pinned by the acceptance tests.
    ///
    /// Requires `k ≥ 3`: for a degree-one blade the wedge and its adjoint
    /// are commuting scalar multiplications and `T_h` vanishes identically,
    /// which the `−k·s` leading term does not capture.
    pub fn simple_t_expansion(&self, s: &Form) -> Result<Form, HiggsError> {
        let k = self.pure_degree().ok_or(HiggsError::MixedDegree)?;
        if self.omega.len() != 1 {
            return Err(HiggsError::NotSimple);
        }
        if k < 3 {
            return Err(HiggsError::BadTableDimension(k));
        }
        let n = self.dim();
        let (word, coeff) = self.omega.terms().next().expect("nonzero");
        let norm_sqr = scalar::from_rat(scalar::norm_sqr(coeff));
        let blade: Vec<usize> = word.holo_indices().collect();

        let mut out = Form::zero(n);
        for (p, q) in s.grades() {
            let comp = s.project(p, q);
            let deg = p; // holomorphic degree drives the expansion
            let mut acc = comp.scale(&scalar::sint(k as i64));
            let rmax = (k.saturating_sub(2)).min(deg);
            for r in 1..=rmax {
                let mut sub_sum = Form::zero(n);
                for subset in combinations(&blade, r) {
                    let sub_blade = Form::dz_blade(n, &subset);
                    let contracted = crate::metric::sharp(&sub_blade)
                        .map_err(HiggsError::Algebra)?
                        .interior(&comp)
                        .map_err(HiggsError::Algebra)?;
                    sub_sum.add_assign(&sub_blade.wedge(&contracted));
                }
                let mut factor = scalar::sint((k - r) as i64);
                if r % 2 == 1 {
                    factor = -factor;
                }
                acc.add_assign(&sub_sum.scale(&factor));
            }
            out.add_assign(&acc.scale(&-&norm_sqr));
        }
        Ok(out)
    }

    /// Kernel characterization for `θ`: `θ(Z)φ = 0` for all `Z` if and only
    /// if `ϖ∧φ = 0` and `ϖ∧i(Z_j)φ = 0` for every frame direction.
    /// Valid whenever `φ` has a single degree, and for pure-degree `ϖ` in
    /// general; evaluates the right-hand conditions.
    pub fn kernel_test(&self, phi: &Form) -> Result<bool, HiggsError> {
        if !self.omega.try_wedge(phi)?.is_zero() {
            return Ok(false);
        }
        for j in 1..=self.dim() {
            if !self.omega.wedge(&contract_z(j, phi)).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Brute-force `θ`-annihilation over every frame direction.
    pub fn theta_annihilates(&self, phi: &Form) -> Result<bool, HiggsError> {
        for j in 1..=self.dim() {
            if !self.theta_z(j, phi)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Kernel characterization for the adjoint family: `θ̄_h(Z̄)φ = 0` for
    /// all `Z̄` iff `ε(ϖ)^{*h}φ = 0` and `ε(ϖ)^{*h} i(Z_j)^{*h} φ = 0` for
    /// every frame direction. Evaluates the right-hand conditions under `h`.
    pub fn adjoint_kernel_test(&self, phi: &Form, h: &MetricSpec) -> Result<bool, HiggsError> {
        let conditions_hold = |f: &Form| -> Result<bool, HiggsError> {
            for (p, _) in self.omega.grades() {
                let component = self.omega.project(p, 0);
                if !adjoint_wedge_with(h, &component, f)?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        if !conditions_hold(phi)? {
            return Ok(false);
        }
        for j in 1..=self.dim() {
            let raised = adjoint_interior_with(h, &FrameVector::z(self.dim(), j), phi)?;
            if !conditions_hold(&raised)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Brute-force `θ̄_h`-annihilation over every frame direction.
    pub fn adjoint_annihilates(&self, phi: &Form, h: &MetricSpec) -> Result<bool, HiggsError> {
        for j in 1..=self.dim() {
            if !self.theta_adjoint(j, phi, h)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The wedge operator `φ ↦ (i(Z_j)ϖ)∧φ` for an arbitrary `(·,0)` form `ϖ`,
/// not necessarily odd; this is what the integrability bracket acts through.
pub fn wedge_operator(omega: &Form, j: usize, phi: &Form) -> Result<Form, AlgebraError> {
    if !omega.is_holomorphic_type() {
        return Err(AlgebraError::NotPureHolomorphic);
    }
    contract_z(j, omega).try_wedge(phi)
}

fn wedge_operator_vec(omega: &Form, z: &FrameVector, phi: &Form) -> Result<Form, AlgebraError> {
    z.try_interior(omega)?.try_wedge(phi)
}

/// `[θ(Z_j), θ(Z_l)]φ = θ(Z_j)θ(Z_l)φ − θ(Z_l)θ(Z_j)φ` for arbitrary `ϖ`.
/// Vanishes identically when every degree of `ϖ` is odd (the contractions
/// are even forms, which commute); in even degree it need not vanish.
pub fn wedge_commutator(
    omega: &Form,
    j: usize,
    l: usize,
    phi: &Form,
) -> Result<Form, AlgebraError> {
    let ab = wedge_operator(omega, j, &wedge_operator(omega, l, phi)?)?;
    let ba = wedge_operator(omega, l, &wedge_operator(omega, j, phi)?)?;
    Ok(&ab - &ba)
}

/// The graded bracket `θ(Z_j)θ(Z_l) − (−1)^{(k−1)²} θ(Z_l)θ(Z_j)` for a
/// pure-degree `ϖ`: the operators have form-degree `k−1`, so odd `k` gives
/// the commutator and even `k` the anticommutator. Vanishes for every `k`,
/// which is the "super" Higgs condition. Errors on mixed-degree `ϖ`.
pub fn wedge_super_commutator(
    omega: &Form,
    j: usize,
    l: usize,
    phi: &Form,
) -> Result<Form, HiggsError> {
    let k = omega.pure_holo_degree().ok_or(HiggsError::MixedDegree)?;
    let ab = wedge_operator(omega, j, &wedge_operator(omega, l, phi)?)?;
    let ba = wedge_operator(omega, l, &wedge_operator(omega, j, phi)?)?;
    if (k + 1) % 2 == 0 {
        // odd k: operators are even, bracket is the commutator
        Ok(&ab - &ba)
    } else {
        Ok(&ab + &ba)
    }
}

/// Eigenvalue table of `T_h` for the unit top form on odd `n` under the
/// standard metric: `T_h = f[i]·Id` on `Λ^{(i,0)}` with
/// `f[0] = −n, f[1] = −1, f[i] = 0 (2 ≤ i ≤ n−2), f[n−1] = 1, f[n] = n`.
/// The binomially weighted trace `Σ_i C(n,i)·f[i]` is zero.
pub fn f_table(n: usize) -> Result<Vec<Rat>, HiggsError> {
    if n % 2 == 0 || n < 3 {
        return Err(HiggsError::BadTableDimension(n));
    }
    let mut table = vec![rint(0); n + 1];
    table[0] = rint(-(n as i64));
    table[1] = rint(-1);
    table[n - 1] = rint(1);
    table[n] = rint(n as i64);
    Ok(table)
}

/// Eigenvalue table of `T_h/‖ϖ‖²` on the span of a simple odd `(k,0)` blade:
/// words built from `i` of the blade's `k` indices have eigenvalue `F[i]`
/// with `F[0] = −k, F[1] = −1, F[i] = 0 (2 ≤ i ≤ k−2), F[k−1] = 1, F[k] = k`;
/// words meeting the complement fall to the perpendicular eigenvalue `−k`.
pub fn span_f_table(k: usize) -> Result<Vec<Rat>, HiggsError> {
    f_table(k)
}

/// The binomially weighted trace `Σ_i C(n,i)·f[i]`.
pub fn f_table_trace(n: usize) -> Result<Rat, HiggsError> {
    let table = f_table(n)?;
    let mut acc = rint(0);
    for (i, v) in table.iter().enumerate() {
        acc += Rat::from_integer(crate::slope::binomial(n, i)) * v;
    }
    Ok(acc)
}

fn combinations(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fn rec(items: &[usize], r: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            rec(items, r, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, r, 0, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::inner;
    use crate::sampling;
    use crate::scalar::{rat, sint};
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;

    #[test]
    fn rejects_even_or_mixed_type_forms() {
        let n = 4;
        assert!(HiggsField::new(Form::dz_blade(n, &[1, 2])).is_err());
        assert!(HiggsField::new(Form::zero(n)).is_err());
        assert!(HiggsField::new(Form::dzbar(n, 1)).is_err());
        let odd_mixed = &Form::dz(n, 1) + &Form::dz_blade(n, &[1, 2, 3]);
        assert!(HiggsField::new(odd_mixed).is_ok());
    }

    #[test]
    fn degree_one_theta_multiplies_by_the_pairing() {
        let n = 3;
        let h = HiggsField::new(Form::dz(n, 1)).unwrap();
        let phi = Form::dz_blade(n, &[2, 3]);
        // θ(Z)φ = ϖ(Z)·dz-free wedge: for ϖ = dz1, θ(Z1) wedges by 1.
        assert_eq!(h.theta_z(1, &phi).unwrap(), phi);
        assert!(h.theta_z(2, &phi).unwrap().is_zero());
    }

    #[test]
    fn top_form_theta_case_table() {
        let n = 3;
        let h = HiggsField::top(n).unwrap();
        // Degree 0: φ·i(Z)ϖ.
        assert_eq!(
            h.theta_z(1, &Form::one(n)).unwrap(),
            Form::dz_blade(n, &[2, 3])
        );
        // Degree 1: θ(Z)(φ) = φ(Z)·ϖ.
        assert_eq!(h.theta_z(1, &Form::dz(n, 1)).unwrap(), *h.omega());
        assert!(h.theta_z(2, &Form::dz(n, 1)).unwrap().is_zero());
        // Degree ≥ 2: zero.
        assert!(h.theta_z(1, &Form::dz_blade(n, &[2, 3])).unwrap().is_zero());
    }

    #[test]
    fn theta_requires_holomorphic_direction() {
        let n = 3;
        let h = HiggsField::top(n).unwrap();
        let err = h.theta(&FrameVector::zbar(n, 1), &Form::one(n));
        assert_eq!(err, Err(HiggsError::WrongFlavor("holomorphic")));
    }

    #[test]
    fn even_degree_witness_fails_plain_but_passes_super() {
        let n = 4;
        let omega = &Form::dz_blade(n, &[1, 2]) + &Form::dz_blade(n, &[3, 4]);
        let one = Form::one(n);
        let plain = wedge_commutator(&omega, 1, 3, &one).unwrap();
        assert_eq!(plain, Form::dz_blade(n, &[2, 4]).scale(&sint(2)));
        let sup = wedge_super_commutator(&omega, 1, 3, &one).unwrap();
        assert!(sup.is_zero());
    }

    #[test]
    fn super_commutator_rejects_mixed_degree() {
        let n = 4;
        let omega = &Form::dz(n, 1) + &Form::dz_blade(n, &[1, 2, 3]);
        assert_eq!(
            wedge_super_commutator(&omega, 1, 2, &Form::one(n)),
            Err(HiggsError::MixedDegree)
        );
    }

    #[test]
    fn t_operator_top_form_values() {
        let n = 5;
        let h = HiggsField::top(n).unwrap();
        let std = MetricSpec::standard(n);
        let one = Form::one(n);
        assert_eq!(h.t_operator(&one, &std).unwrap(), one.scale(&sint(-5)));
        let dz1 = Form::dz(n, 1);
        assert_eq!(h.t_operator(&dz1, &std).unwrap(), dz1.scale(&sint(-1)));
        let mid = Form::dz_blade(n, &[2, 3]);
        assert!(h.t_operator(&mid, &std).unwrap().is_zero());
        let codim1 = Form::dz_blade(n, &[1, 2, 3, 4]);
        assert_eq!(h.t_operator(&codim1, &std).unwrap(), codim1);
        let top = Form::dz_blade(n, &[1, 2, 3, 4, 5]);
        assert_eq!(h.t_operator(&top, &std).unwrap(), top.scale(&sint(5)));
    }

    #[test]
    fn f_table_shape_and_trace() {
        assert_eq!(
            f_table(5).unwrap(),
            vec![rint(-5), rint(-1), rint(0), rint(0), rint(1), rint(5)]
        );
        assert!(f_table(4).is_err());
        assert!(f_table(1).is_err());
        for n in [3usize, 5, 7] {
            assert_eq!(f_table_trace(n).unwrap(), rint(0), "trace at n={n}");
        }
    }

    #[test]
    fn simple_blade_requirements() {
        let n = 5;
        let two_terms =
            HiggsField::new(&Form::dz_blade(n, &[1, 2, 3]) + &Form::dz_blade(n, &[1, 4, 5]))
                .unwrap();
        assert_eq!(
            two_terms.simple_t_expansion(&Form::one(n)),
            Err(HiggsError::NotSimple)
        );
        let mixed = HiggsField::new(&Form::dz(n, 1) + &Form::dz_blade(n, &[1, 2, 3])).unwrap();
        assert_eq!(
            mixed.simple_t_expansion(&Form::one(n)),
            Err(HiggsError::MixedDegree)
        );
    }

    #[test]
    fn expansion_matches_direct_on_a_scaled_blade() {
        let n = 5;
        let coeff = crate::scalar::gauss(rat(2, 3), rat(-1, 2));
        let h = HiggsField::new(Form::dz_blade(n, &[1, 2, 3]).scale(&coeff)).unwrap();
        let std = MetricSpec::standard(n);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let s = sampling::random_form_holo(&mut rng, n, 4);
            assert_eq!(
                h.simple_t_expansion(&s).unwrap(),
                h.t_operator(&s, &std).unwrap()
            );
        }
    }

    #[test]
    fn kernel_tests_match_brute_force_exhaustively() {
        let std3 = MetricSpec::standard(3);
        let fields = vec![
            HiggsField::top(3).unwrap(),
            HiggsField::new(Form::dz(3, 2)).unwrap(),
            HiggsField::new(&Form::dz(3, 1) + &Form::dz_blade(3, &[1, 2, 3])).unwrap(),
        ];
        for h in fields {
            for w in crate::exterior::holo_words(3) {
                let phi = Form::monomial(3, w, crate::scalar::one());
                assert_eq!(
                    h.kernel_test(&phi).unwrap(),
                    h.theta_annihilates(&phi).unwrap(),
                    "θ kernel at {w}"
                );
                assert_eq!(
                    h.adjoint_kernel_test(&phi, &std3).unwrap(),
                    h.adjoint_annihilates(&phi, &std3).unwrap(),
                    "θ̄ kernel at {w}"
                );
            }
        }
    }

    #[test]
    fn adjoint_kernel_test_under_natural_metric() {
        let n = 3;
        let weights = vec![rat(1, 1), rat(2, 1), rat(3, 2), rat(5, 3)];
        let h = MetricSpec::natural(n, weights).unwrap();
        let field = HiggsField::top(n).unwrap();
        for w in crate::exterior::all_words(n) {
            let phi = Form::monomial(n, w, crate::scalar::one());
            assert_eq!(
                field.adjoint_kernel_test(&phi, &h).unwrap(),
                field.adjoint_annihilates(&phi, &h).unwrap()
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn odd_structure_forms_satisfy_the_higgs_condition(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=5);
            let omega = sampling::random_odd_holo_form(&mut rng, n, 2);
            let h = HiggsField::new(omega).unwrap();
            let phi = sampling::random_form(&mut rng, n, 3);
            for j in 1..=n {
                for l in 1..=n {
                    prop_assert!(h.commutator(j, l, &phi).unwrap().is_zero());
                }
            }
        }

        #[test]
        fn theta_adjoint_is_the_true_adjoint(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=4);
            let omega = sampling::random_odd_holo_form(&mut rng, n, 2);
            let h = HiggsField::new(omega).unwrap();
            let weights = (0..=n).map(|_| sampling::random_positive_rat(&mut rng)).collect();
            let metric = MetricSpec::natural(n, weights).unwrap();
            let a = sampling::random_form(&mut rng, n, 3);
            let b = sampling::random_form(&mut rng, n, 3);
            for j in 1..=n {
                let lhs = metric.inner(&h.theta_z(j, &a).unwrap(), &b).unwrap();
                let rhs = metric
                    .inner(&a, &h.theta_adjoint(j, &b, &metric).unwrap())
                    .unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn t_operator_diagonal_matches_norm_difference(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=4);
            let omega = sampling::random_odd_holo_form(&mut rng, n, 2);
            let h = HiggsField::new(omega).unwrap();
            let std = MetricSpec::standard(n);
            let s = sampling::random_form(&mut rng, n, 3);
            let lhs = std.inner(&h.t_operator(&s, &std).unwrap(), &s).unwrap();
            let mut rhs = crate::scalar::zero();
            for j in 1..=n {
                let up = h.theta_adjoint(j, &s, &std).unwrap();
                let down = h.theta_z(j, &s).unwrap();
                rhs = rhs + inner(&up, &up).unwrap() - inner(&down, &down).unwrap();
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kernel_characterization_randomized(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=5);
            let k = 2 * rng.gen_range(0..=(n - 1) / 2) + 1;
            let omega = sampling::random_pure_nonzero(&mut rng, n, k);
            let h = HiggsField::new(omega).unwrap();
            let phi = sampling::random_form(&mut rng, n, 3);
            prop_assert_eq!(
                h.kernel_test(&phi).unwrap(),
                h.theta_annihilates(&phi).unwrap()
            );
            let std = MetricSpec::standard(n);
            prop_assert_eq!(
                h.adjoint_kernel_test(&phi, &std).unwrap(),
                h.adjoint_annihilates(&phi, &std).unwrap()
            );
        }
    }
}

