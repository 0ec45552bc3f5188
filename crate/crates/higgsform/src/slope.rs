//! Slope calculus and stability obstructions for direct sums of exterior
//! powers `P = ⊕_s Λ^{(p_s,0)}` twisted by a line bundle of degree `d`.
//!
//! Everything is exact and expressed in units of `d`: the first Chern class
//! of `Λ^{(p,0)}` is `C(n−1, p−1)` times that of `Λ^{(1,0)}` (zero at
//! `p = 0`), so slopes are rationals times `d`. The verdict engine encodes
//! the three obstruction cases for Higgs–Hermitian–Yang–Mills metrics on
//! such sums under the wedge-type Higgs operator of odd degree `k`:
//!
//!   i.  `deg X < 0`;
//!   ii. `deg X = 0` and `p_1 ≤ n−k+1`;
//!   iii. `k ≥ n/2 + 1`, `p_1 ≤ n−k+1`, and the structure form is a
//!        section of `P`.
//!
//! The sharpness boundary is `p_1 ≥ n−k+2`, where the Higgs operator acts
//! trivially and no conclusion is drawn. Note the sign bookkeeping: the
//! engine takes the sign of `deg X` and works with `d = deg Λ^{(1,0)}(X)
//! = −deg X` internally.

use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigInt;
use num::traits::{One, Zero};
use thiserror::Error;

use crate::scalar::Rat;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SlopeError {
    #[error("selector must be a nonempty subset of 0..={0}")]
    EmptySelector(usize),
    #[error("selector entry {entry} out of range 0..={max}")]
    EntryOutOfRange { entry: usize, max: usize },
    #[error("subtrahend must be a sub-selector of the minuend")]
    NotSubSelector,
    #[error("Higgs degree k must be odd, got {0}")]
    EvenDegree(usize),
    #[error("Higgs degree k must exceed 1, got {0}")]
    DegreeTooSmall(usize),
    #[error("the verdict applies to sums of at least two exterior powers, got {0}")]
    TooFewSummands(usize),
    #[error("selector {0} is not invariant under the degree-(k−1) shift")]
    NotInvariant(String),
    #[error("degree sign must be -1, 0, or 1, got {0}")]
    BadSign(i64),
}

/// A set of holomorphic degrees `{p_1 < … < p_z} ⊆ {0..n}` selecting the
/// summand `⊕_s Λ^{(p_s,0)}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BundleSelector {
    n: usize,
    degrees: BTreeSet<usize>,
}

impl BundleSelector {
    pub fn new(n: usize, degrees: impl IntoIterator<Item = usize>) -> Result<Self, SlopeError> {
        let degrees: BTreeSet<usize> = degrees.into_iter().collect();
        if degrees.is_empty() {
            return Err(SlopeError::EmptySelector(n));
        }
        if let Some(&entry) = degrees.iter().find(|&&p| p > n) {
            return Err(SlopeError::EntryOutOfRange { entry, max: n });
        }
        Ok(BundleSelector { n, degrees })
    }

    /// The full exterior algebra `E = ⊕_{p=0}^{n} Λ^{(p,0)}`.
    pub fn full(n: usize) -> Self {
        BundleSelector::new(n, 0..=n).expect("nonempty")
    }

    /// Even degrees `{0, 2, …}`.
    pub fn even(n: usize) -> Self {
        BundleSelector::new(n, (0..=n).filter(|p| p % 2 == 0)).expect("nonempty")
    }

    /// Odd degrees `{1, 3, …}`.
    pub fn odd(n: usize) -> Self {
        BundleSelector::new(n, (0..=n).filter(|p| p % 2 == 1)).expect("nonempty")
    }

    /// The filtration step `E^a = ⊕_{p ≥ a} Λ^{(p,0)}`.
    pub fn filtration(n: usize, a: usize) -> Result<Self, SlopeError> {
        if a > n {
            return Err(SlopeError::EntryOutOfRange { entry: a, max: n });
        }
        BundleSelector::new(n, a..=n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.degrees.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: nonempty by construction
    }

    pub fn contains(&self, p: usize) -> bool {
        self.degrees.contains(&p)
    }

    pub fn min_degree(&self) -> usize {
        *self.degrees.iter().next().expect("nonempty")
    }

    pub fn max_degree(&self) -> usize {
        *self.degrees.iter().next_back().expect("nonempty")
    }

    pub fn is_sub_selector_of(&self, other: &BundleSelector) -> bool {
        self.n == other.n && self.degrees.is_subset(&other.degrees)
    }

    /// The last `l` degrees, a "tail" sub-selector.
    pub fn tail(&self, l: usize) -> Result<Self, SlopeError> {
        if l == 0 || l > self.len() {
            return Err(SlopeError::EmptySelector(self.n));
        }
        let degrees: BTreeSet<usize> = self.degrees.iter().rev().take(l).copied().collect();
        Ok(BundleSelector { n: self.n, degrees })
    }
}

impl fmt::Display for BundleSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Exact binomial coefficient `C(n, k)`; zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficient of `c_1(Λ^{(1,0)})` in `c_1(Λ^{(p,0)})`: `C(n−1, p−1)`,
/// interpreted as zero for the trivial summand `p = 0`.
pub fn chern_coeff(n: usize, p: usize) -> BigInt {
    if p == 0 {
        return BigInt::zero();
    }
    binomial(n - 1, p - 1)
}

/// Exact slope data for a selector, in units of `d = deg Λ^{(1,0)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeReport {
    pub selector: BundleSelector,
    /// `Σ_s C(n−1, p_s−1)`: the degree of the sum in units of `d`.
    pub degree_coeff: BigInt,
    /// `Σ_s C(n, p_s)`: the rank.
    pub rank: BigInt,
    /// `degree_coeff / rank`: the slope in units of `d`.
    pub slope_coeff: Rat,
}

/// Slope of the selected sum.
pub fn slope(selector: &BundleSelector) -> SlopeReport {
    let n = selector.n();
    let mut degree_coeff = BigInt::zero();
    let mut rank = BigInt::zero();
    for p in selector.degrees() {
        degree_coeff += chern_coeff(n, p);
        rank += binomial(n, p);
    }
    let slope_coeff = Rat::new(degree_coeff.clone(), rank.clone());
    SlopeReport {
        selector: selector.clone(),
        degree_coeff,
        rank,
        slope_coeff,
    }
}

/// `μ(P) − μ(Q)` in units of `d`, for `Q` a sub-selector of `P`.
///
/// When both `min(P∖Q) ≥ 1` and `min(Q) ≥ 1` this uses the pair-summed
/// closed form
/// `(1/(rk P · rk Q)) Σ_{r ∈ P∖Q, q ∈ Q} C(n−1,r−1) C(n−1,q−1) · n(r−q)/(rq)`;
/// otherwise it falls back to direct subtraction of the two slopes. The two
/// routes agree wherever the closed form applies.
pub fn slope_diff(p: &BundleSelector, q: &BundleSelector) -> Result<Rat, SlopeError> {
    if !q.is_sub_selector_of(p) {
        return Err(SlopeError::NotSubSelector);
    }
    let n = p.n();
    let rest: Vec<usize> = p.degrees().filter(|d| !q.contains(*d)).collect();
    let closed_form_applies = q.min_degree() >= 1 && rest.iter().all(|&r| r >= 1);
    if !closed_form_applies {
        let sp = slope(p);
        let sq = slope(q);
        return Ok(sp.slope_coeff - sq.slope_coeff);
    }
    let rank_p = slope(p).rank;
    let rank_q = slope(q).rank;
    let mut acc = Rat::zero();
    for &r in &rest {
        for qd in q.degrees() {
            let pair = Rat::from_integer(binomial(n - 1, r - 1) * binomial(n - 1, qd - 1));
            let ratio = Rat::new(
                BigInt::from(n) * (BigInt::from(r) - BigInt::from(qd)),
                BigInt::from(r * qd),
            );
            acc += pair * ratio;
        }
    }
    Ok(acc / Rat::from_integer(rank_p * rank_q))
}

/// True when the selector is closed under the Higgs shift `p ↦ p + k − 1`
/// (whenever the target is still in range).
pub fn is_higgs_invariant(selector: &BundleSelector, k: usize) -> bool {
    let n = selector.n();
    selector
        .degrees()
        .all(|p| p + k - 1 > n || selector.contains(p + k - 1))
}

/// Every Higgs-invariant selector in dimension `n` for degree `k`, in
/// lexicographic set order.
pub fn enumerate_invariant(n: usize, k: usize) -> Vec<BundleSelector> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << (n + 1)) {
        let degrees: Vec<usize> = (0..=n).filter(|p| mask >> p & 1 == 1).collect();
        let sel = BundleSelector::new(n, degrees).expect("nonempty");
        if is_higgs_invariant(&sel, k) {
            out.push(sel);
        }
    }
    out.sort();
    out
}

/// True when a Higgs-invariant selector mixes even and odd degrees, in which
/// case its intersections with `Λ^even` and `Λ^odd` are proper invariant
/// subbundles of equal slope and the sum cannot be Higgs stable (the single
/// top power `{n}` stays stable: it is a line bundle).
pub fn stability_preclusion(selector: &BundleSelector, k: usize) -> Result<bool, SlopeError> {
    if !is_higgs_invariant(selector, k) {
        return Err(SlopeError::NotInvariant(selector.to_string()));
    }
    let has_even = selector.degrees().any(|p| p % 2 == 0);
    let has_odd = selector.degrees().any(|p| p % 2 == 1);
    Ok(has_even && has_odd)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ObstructionCase {
    /// `deg X < 0`.
    CaseI,
    /// `deg X = 0` and `p_1 ≤ n−k+1`.
    CaseII,
    /// `k ≥ n/2 + 1`, `p_1 ≤ n−k+1`, and the structure form lies in `P`.
    CaseIII,
}

impl fmt::Display for ObstructionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionCase::CaseI => write!(f, "i"),
            ObstructionCase::CaseII => write!(f, "ii"),
            ObstructionCase::CaseIII => write!(f, "iii"),
        }
    }
}

/// Facts the verdict engine evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictFacts {
    pub n: usize,
    pub k: usize,
    pub sign_deg_x: i64,
    /// `d = deg Λ^{(1,0)}(X) = −deg X`, reported as a sign.
    pub sign_d: i64,
    pub p1: usize,
    /// The sharpness threshold `n − k + 1`.
    pub threshold: usize,
    pub p1_below_threshold: bool,
    /// `k ≥ n/2 + 1`, i.e. `2k ≥ n + 2`.
    pub k_large: bool,
    pub contains_omega: bool,
    /// `p_1 ≥ n − k + 2`: the Higgs operator acts trivially on the sum and
    /// the engine draws no conclusion.
    pub trivial_action: bool,
}

/// Outcome of the obstruction engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    /// First case that fired, in the order i, ii, iii; `None` when no
    /// hypothesis applies.
    pub fired: Option<ObstructionCase>,
    /// Every case whose hypotheses hold.
    pub satisfied: Vec<ObstructionCase>,
    pub facts: VerdictFacts,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self.fired {
            Some(ObstructionCase::CaseI) => "ObstructedCaseI",
            Some(ObstructionCase::CaseII) => "ObstructedCaseII",
            Some(ObstructionCase::CaseIII) => "ObstructedCaseIII",
            None => "NoObstructionFound",
        }
    }
}

/// Decides whether `P = ⊕ Λ^{(p_s,0)}(X)` (at least two summands, selector
/// invariant under the odd-degree Higgs shift, `k > 1`) admits no
/// Higgs–Hermitian–Yang–Mills structure, and which hypotheses fired.
/// `sign_deg_x` is the sign of `deg X`; `contains_omega` records whether the
/// structure form is a section of `P`.
pub fn bigthm_verdict(
    n: usize,
    k: usize,
    sign_deg_x: i64,
    selector: &BundleSelector,
    contains_omega: bool,
) -> Result<Verdict, SlopeError> {
    if k % 2 == 0 {
        return Err(SlopeError::EvenDegree(k));
    }
    if k <= 1 {
        return Err(SlopeError::DegreeTooSmall(k));
    }
    if !(-1..=1).contains(&sign_deg_x) {
        return Err(SlopeError::BadSign(sign_deg_x));
    }
    if selector.len() < 2 {
        return Err(SlopeError::TooFewSummands(selector.len()));
    }
    if !is_higgs_invariant(selector, k) {
        return Err(SlopeError::NotInvariant(selector.to_string()));
    }

    let p1 = selector.min_degree();
    let threshold = n + 1 - k.min(n + 1);
    let p1_below_threshold = p1 <= threshold;
    let k_large = 2 * k >= n + 2;
    let trivial_action = p1 + k >= n + 2;

    let mut satisfied = Vec::new();
    if sign_deg_x < 0 {
        satisfied.push(ObstructionCase::CaseI);
    }
    if sign_deg_x == 0 && p1_below_threshold {
        satisfied.push(ObstructionCase::CaseII);
    }
    if k_large && p1_below_threshold && contains_omega {
        satisfied.push(ObstructionCase::CaseIII);
    }

    Ok(Verdict {
        fired: satisfied.first().copied(),
        satisfied,
        facts: VerdictFacts {
            n,
            k,
            sign_deg_x,
            sign_d: -sign_deg_x,
            p1,
            threshold,
            p1_below_threshold,
            k_large,
            contains_omega,
            trivial_action,
        },
    })
}
