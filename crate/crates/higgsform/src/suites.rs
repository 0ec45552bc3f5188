//! Named identity-check suites: each bundles the invariants of one module
//! into a deterministic pass/fail report with counterexample witnesses.
//!
//! Every suite is a pure computation. Randomized checks draw from a
//! ChaCha8 stream seeded explicitly, so identical inputs reproduce
//! identical reports byte for byte.

use std::fmt;
use std::str::FromStr;

use num::traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::curvature::{
    self, assemble_f, higgs_frame_data, hhym_flat, FormMatrix, ScalarMatrix,
};
use crate::exterior::{all_words, euler_degree, holo_words, BasisWord, Form};
use crate::higgs::{f_table, f_table_trace, span_f_table, HiggsField};
use crate::metric::{
    adjoint_interior_with, adjoint_wedge_with, hodge_star, kahler_form, lefschetz_l,
    lefschetz_lambda, star_square_signs, vol, MetricSpec,
};
use crate::sampling;
use crate::scalar::{conj, from_rat, norm_sqr, one, rint, sint, zero, Rat};
use crate::slope::{
    self, binomial, chern_coeff, slope_diff, BundleSelector,
};
use crate::spectral::{
    gigante_girbau_formula, kodnak_scalar, CharacterModel, CharacterSection, Frequency,
    LaplacianKind, OpKind, TensorWord,
};

/// Exhaustive-suite ceiling; beyond this the word scans get slow.
pub const MAX_SUITE_DIM: usize = 6;
/// The spectral suite builds `8^n`-sided matrices; cap it lower.
pub const MAX_NAKANO_DIM: usize = 3;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("suite dimension {0} out of range 1..={1}")]
    BadDimension(usize, usize),
    #[error("structure-form degree {0} must be odd and at most n = {1}")]
    BadHiggsDegree(usize, usize),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Exterior,
    Metric,
    Higgs,
    Curvature,
    Nakano,
    All,
}

impl SuiteKind {
    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::Exterior => "exterior",
            SuiteKind::Metric => "metric",
            SuiteKind::Higgs => "higgs",
            SuiteKind::Curvature => "curvature",
            SuiteKind::Nakano => "nakano",
            SuiteKind::All => "all",
        }
    }
}

impl FromStr for SuiteKind {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        match s {
            "exterior" => Ok(SuiteKind::Exterior),
            "metric" => Ok(SuiteKind::Metric),
            "higgs" => Ok(SuiteKind::Higgs),
            "curvature" => Ok(SuiteKind::Curvature),
            "nakano" => Ok(SuiteKind::Nakano),
            "all" => Ok(SuiteKind::All),
            other => Err(SuiteError::UnknownSuite(other.to_string())),
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One verified identity.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    /// Counterexample description when the check fails.
    pub detail: Option<String>,
}

/// Result of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Shared suite parameters. `k` is the structure-form degree; `None` picks
/// the largest odd degree not exceeding `n`.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub n: usize,
    pub k: Option<usize>,
    pub seed: u64,
    pub trials: usize,
}

impl SuiteConfig {
    fn resolved_k(&self, n: usize) -> Result<usize, SuiteError> {
        match self.k {
            None => Ok(if n % 2 == 1 { n } else { n.saturating_sub(1).max(1) }),
            Some(k) => {
                if k % 2 == 1 && k <= n {
                    Ok(k)
                } else {
                    Err(SuiteError::BadHiggsDegree(k, n))
                }
            }
        }
    }
}

struct Recorder {
    checks: Vec<CheckOutcome>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn record(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            pass,
            detail: if pass { None } else { detail },
        });
    }

    /// Compares two forms; on mismatch the witness shows both.
    fn forms(&mut self, name: impl Into<String>, lhs: &Form, rhs: &Form) {
        let pass = lhs == rhs;
        self.record(name, pass, Some(format!("lhs = {lhs}, rhs = {rhs}")));
    }

    fn claim(&mut self, name: impl Into<String>, pass: bool, witness: impl Into<String>) {
        self.record(name, pass, Some(witness.into()));
    }
}

/// Runs one suite. Exhaustive suites accept `n ≤ 6`; the spectral suite
/// accepts `n ≤ 3`; `all` runs every suite, clamping the spectral part to
/// `min(n, 3)`.
pub fn run_suite(kind: SuiteKind, cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let max = match kind {
        SuiteKind::Nakano => MAX_NAKANO_DIM,
        _ => MAX_SUITE_DIM,
    };
    if cfg.n < 1 || cfg.n > max {
        return Err(SuiteError::BadDimension(cfg.n, max));
    }
    let k = cfg.resolved_k(cfg.n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rec = Recorder::new();
    match kind {
        SuiteKind::Exterior => exterior_checks(&mut rec, cfg.n, cfg.trials, &mut rng),
        SuiteKind::Metric => metric_checks(&mut rec, cfg.n, cfg.trials, &mut rng),
        SuiteKind::Higgs => higgs_checks(&mut rec, cfg.n, k, cfg.trials, &mut rng),
        SuiteKind::Curvature => curvature_checks(&mut rec, cfg.n, k, cfg.trials, &mut rng),
        SuiteKind::Nakano => nakano_checks(&mut rec, cfg.n, k, cfg.trials, &mut rng),
        SuiteKind::All => {
            exterior_checks(&mut rec, cfg.n, cfg.trials, &mut rng);
            metric_checks(&mut rec, cfg.n, cfg.trials, &mut rng);
            higgs_checks(&mut rec, cfg.n, k, cfg.trials, &mut rng);
            curvature_checks(&mut rec, cfg.n, k, cfg.trials, &mut rng);
            slope_checks(&mut rec, cfg.n, k);
            let nn = cfg.n.min(MAX_NAKANO_DIM);
            let nk = SuiteConfig {
                n: nn,
                k: cfg.k.filter(|k| *k <= nn),
                seed: cfg.seed,
                trials: cfg.trials,
            }
            .resolved_k(nn)?;
            nakano_checks(&mut rec, nn, nk, cfg.trials, &mut rng);
        }
    }
    Ok(SuiteReport {
        suite: kind.name().to_string(),
        n: cfg.n,
        k,
        seed: cfg.seed,
        trials: cfg.trials,
        checks: rec.checks,
    })
}

fn exterior_checks<R: Rng>(rec: &mut Recorder, n: usize, trials: usize, rng: &mut R) {
    // Associativity and distributivity of the wedge on random forms.
    let mut assoc_ok = true;
    let mut assoc_witness = String::new();
    for _ in 0..trials {
        let a = sampling::random_form(rng, n, 3);
        let b = sampling::random_form(rng, n, 3);
        let c = sampling::random_form(rng, n, 3);
        let lhs = a.wedge(&b).wedge(&c);
        let rhs = a.wedge(&b.wedge(&c));
        if lhs != rhs {
            assoc_ok = false;
            assoc_witness = format!("(a∧b)∧c = {lhs}, a∧(b∧c) = {rhs}");
            break;
        }
    }
    rec.claim("wedge associativity", assoc_ok, assoc_witness);

    let mut graded_ok = true;
    let mut graded_witness = String::new();
    for _ in 0..trials {
        let (p, q) = sampling::random_type(rng, n);
        let (r, s) = sampling::random_type(rng, n);
        let a = sampling::random_pure_form(rng, n, p, q, 3);
        let b = sampling::random_pure_form(rng, n, r, s, 3);
        let sign = if (p + q) * (r + s) % 2 == 1 { -1 } else { 1 };
        let lhs = a.wedge(&b);
        let rhs = b.wedge(&a).scale(&sint(sign));
        if lhs != rhs {
            graded_ok = false;
            graded_witness = format!("a∧b = {lhs}, ±b∧a = {rhs}");
            break;
        }
    }
    rec.claim("graded commutativity", graded_ok, graded_witness);

    let mut conj_ok = true;
    let mut conj_witness = String::new();
    for _ in 0..trials {
        let a = sampling::random_form(rng, n, 4);
        let back = a.conj().conj();
        if back != a {
            conj_ok = false;
            conj_witness = format!("conj² of {a} gave {back}");
            break;
        }
    }
    rec.claim("conjugation involution", conj_ok, conj_witness);

    let mut leibniz_ok = true;
    let mut leibniz_witness = String::new();
    'outer: for _ in 0..trials {
        let v = sampling::random_vector(rng, n);
        for _ in 0..2 {
            let (p, q) = sampling::random_type(rng, n);
            let a = sampling::random_pure_form(rng, n, p, q, 3);
            let b = sampling::random_form(rng, n, 3);
            let lhs = v.interior(&a.wedge(&b));
            let sign = if (p + q) % 2 == 1 { -1 } else { 1 };
            let rhs = &v.interior(&a).wedge(&b) + &a.wedge(&v.interior(&b)).scale(&sint(sign));
            if lhs != rhs {
                leibniz_ok = false;
                leibniz_witness = format!("i(v)(a∧b) = {lhs}, Leibniz sum = {rhs}");
                break 'outer;
            }
        }
    }
    rec.claim("interior product anti-derivation", leibniz_ok, leibniz_witness);

    // Σ_j dz_j ∧ i(Z_j)φ = p·φ on pure (p,0) forms, all degrees.
    let mut euler_ok = true;
    let mut euler_witness = String::new();
    'euler: for p in 0..=n {
        for _ in 0..trials.max(1) {
            let phi = sampling::random_pure_form(rng, n, p, 0, 3);
            let lhs = euler_degree(&phi).expect("pure holomorphic input");
            let rhs = phi.scale(&sint(p as i64));
            if lhs != rhs {
                euler_ok = false;
                euler_witness = format!("degree {p}: Σ dz_j∧i(Z_j)φ = {lhs}, p·φ = {rhs}");
                break 'euler;
            }
        }
    }
    rec.claim("Euler degree contraction", euler_ok, euler_witness);

    let mut square_ok = true;
    let mut square_witness = String::new();
    for w in all_words(n) {
        let f = Form::monomial(n, w, one());
        for j in 1..=n {
            let dz = Form::dz(n, j);
            if w.holo_mask() >> (j - 1) & 1 == 1 && !dz.wedge(&f).is_zero() {
                square_ok = false;
                square_witness = format!("dz{j}∧{f} should vanish");
            }
        }
    }
    rec.claim("repeated factor annihilates", square_ok, square_witness);
}

fn metric_checks<R: Rng>(rec: &mut Recorder, n: usize, trials: usize, rng: &mut R) {
    let std_h = MetricSpec::standard(n);
    let nat_h = sampling_natural_metric(rng, n);

    let mut ortho_ok = true;
    let mut ortho_witness = String::new();
    'ortho: for a in all_words(n) {
        for b in all_words(n) {
            let fa = Form::monomial(n, a, one());
            let fb = Form::monomial(n, b, one());
            let got = std_h.inner(&fa, &fb).expect("same dimension");
            let expect = if a == b { one() } else { zero() };
            if got != expect {
                ortho_ok = false;
                ortho_witness = format!("⟨{fa},{fb}⟩ = {}", crate::scalar::scalar_str(&got));
                break 'ortho;
            }
        }
    }
    rec.claim("standard metric orthonormal words", ortho_ok, ortho_witness);

    for (label, h) in [("standard", &std_h), ("weighted", &nat_h)] {
        let mut adj_ok = true;
        let mut adj_witness = String::new();
        for _ in 0..trials {
            let p = rng.gen_range(0..=n);
            let omega = sampling::random_pure_form(rng, n, p, 0, 2);
            let a = sampling::random_form(rng, n, 3);
            let b = sampling::random_form(rng, n, 3);
            let lhs = h.inner(&omega.wedge(&a), &b).expect("same dimension");
            let adj = adjoint_wedge_with(h, &omega, &b).expect("same dimension");
            let rhs = h.inner(&a, &adj).expect("same dimension");
            if lhs != rhs {
                adj_ok = false;
                adj_witness = format!(
                    "⟨ω∧a,b⟩ = {}, ⟨a,ω*b⟩ = {}",
                    crate::scalar::scalar_str(&lhs),
                    crate::scalar::scalar_str(&rhs)
                );
                break;
            }
        }
        rec.claim(format!("wedge adjoint ({label} metric)"), adj_ok, adj_witness);

        let mut int_ok = true;
        let mut int_witness = String::new();
        for _ in 0..trials {
            let v = sampling::random_vector(rng, n);
            let a = sampling::random_form(rng, n, 3);
            let b = sampling::random_form(rng, n, 3);
            let lhs = h.inner(&v.interior(&a), &b).expect("same dimension");
            let adj = adjoint_interior_with(h, &v, &b).expect("same dimension");
            let rhs = h.inner(&a, &adj).expect("same dimension");
            if lhs != rhs {
                int_ok = false;
                int_witness = format!(
                    "⟨i(v)a,b⟩ = {}, ⟨a,i(v)*b⟩ = {}",
                    crate::scalar::scalar_str(&lhs),
                    crate::scalar::scalar_str(&rhs)
                );
                break;
            }
        }
        rec.claim(
            format!("interior adjoint ({label} metric)"),
            int_ok,
            int_witness,
        );
    }

    let mut star_ok = true;
    let mut star_witness = String::new();
    let volume = vol(n);
    for _ in 0..trials {
        let (p, q) = sampling::random_type(rng, n);
        let a = sampling::random_pure_form(rng, n, p, q, 3);
        let b = sampling::random_pure_form(rng, n, p, q, 3);
        let star_b = hodge_star(&b);
        let lhs = a.wedge(&star_b.conj());
        let rhs = volume.scale(&std_h.inner(&a, &b).expect("same dimension"));
        if lhs != rhs {
            star_ok = false;
            star_witness = format!("a∧conj(∗b) = {lhs}, ⟨a,b⟩vol = {rhs}");
            break;
        }
    }
    rec.claim("star realizes the pairing", star_ok, star_witness);

    let signs = star_square_signs(n);
    let expected_signs: Vec<i32> = (0..=2 * n)
        .map(|w| if (n + w) % 2 == 0 { 1 } else { -1 })
        .collect();
    rec.claim(
        "star square sign table",
        signs == expected_signs,
        format!("got {signs:?}, expected {expected_signs:?}"),
    );

    let mut lefschetz_ok = true;
    let mut lefschetz_witness = String::new();
    for w in all_words(n) {
        let f = Form::monomial(n, w, one());
        let lhs = &lefschetz_lambda(&lefschetz_l(&f)) - &lefschetz_l(&lefschetz_lambda(&f));
        let weight = n as i64 - w.holo_degree() as i64 - w.anti_degree() as i64;
        let rhs = f.scale(&sint(weight));
        if lhs != rhs {
            lefschetz_ok = false;
            lefschetz_witness = format!("[Λ,L]{f} = {lhs}, expected {rhs}");
            break;
        }
    }
    rec.claim("Lefschetz commutator counts type", lefschetz_ok, lefschetz_witness);

    let omega = kahler_form(n);
    rec.forms(
        "Λω equals dimension",
        &lefschetz_lambda(&omega),
        &Form::one(n).scale(&sint(n as i64)),
    );
}

fn higgs_checks<R: Rng>(rec: &mut Recorder, n: usize, k: usize, trials: usize, rng: &mut R) {
    // Eigenvalue table for the top structure form needs odd n.
    if n % 2 == 1 {
        match (f_table(n), f_table_trace(n)) {
            (Ok(table), Ok(trace)) => {
                let higgs = HiggsField::top(n).expect("odd top degree");
                let h = MetricSpec::standard(n);
                let mut tbl_ok = true;
                let mut tbl_witness = String::new();
                'words: for w in holo_words(n) {
                    let f = Form::monomial(n, w, one());
                    let got = higgs.t_operator(&f, &h).expect("holomorphic word");
                    let expect = f.scale(&from_rat(table[w.holo_degree()].clone()));
                    if got != expect {
                        tbl_ok = false;
                        tbl_witness = format!("T({f}) = {got}, expected {expect}");
                        break 'words;
                    }
                }
                rec.claim("trace operator eigenvalue table", tbl_ok, tbl_witness);
                let weighted: Rat = (0..=n)
                    .map(|i| Rat::from(binomial(n, i)) * &table[i])
                    .sum();
                rec.claim(
                    "weighted eigenvalue trace vanishes",
                    weighted.is_zero() && trace.is_zero(),
                    format!("weighted sum {weighted}"),
                );
            }
            _ => rec.claim("trace operator eigenvalue table", false, "table construction failed"),
        }
    }

    if k >= 3 {
        let span = span_f_table(k).expect("odd degree at least three");
        rec.claim(
            "span eigenvalue at top slot",
            span[k] == rint(k as i64),
            format!("F[{k}] = {}", span[k]),
        );
    }

    // Simple structure form: closed-form expansion against the direct
    // operator on every basis word. The expansion needs k ≥ 3; for a
    // degree-one blade the trace operator vanishes identically instead.
    let blade =
        Form::dz_blade(n, &(1..=k).collect::<Vec<_>>()).scale(&sampling::random_scalar(rng));
    let higgs = HiggsField::new(blade).expect("nonzero simple blade");
    let h = MetricSpec::standard(n);
    if k >= 3 {
        let mut simple_ok = true;
        let mut simple_witness = String::new();
        for w in holo_words(n) {
            let f = Form::monomial(n, w, one());
            let direct = higgs.t_operator(&f, &h).expect("holomorphic word");
            let expansion = higgs.simple_t_expansion(&f).expect("simple blade");
            if direct != expansion {
                simple_ok = false;
                simple_witness = format!("T({f}) = {direct}, expansion {expansion}");
                break;
            }
        }
        rec.claim("simple-form expansion", simple_ok, simple_witness);

        // Perpendicular words: eigenvalue −k, weighted by the squared norm.
        let mut perp_ok = true;
        let mut perp_witness = String::new();
        for w in holo_words(n) {
            if w.holo_mask() & ((1u32 << k) - 1) != 0 {
                continue;
            }
            let f = Form::monomial(n, w, one());
            let direct = higgs.t_operator(&f, &h).expect("holomorphic word");
            let blade_coeff = higgs.omega().coeff(&BasisWord::new((1 << k) - 1, 0));
            let expect = f.scale(&from_rat(-rint(k as i64) * norm_sqr(&blade_coeff)));
            if direct != expect {
                perp_ok = false;
                perp_witness = format!("T({f}) = {direct}, expected {expect}");
                break;
            }
        }
        rec.claim("perpendicular span eigenvalue -k", perp_ok, perp_witness);
    } else {
        let mut flat_ok = true;
        let mut flat_witness = String::new();
        for w in holo_words(n) {
            let f = Form::monomial(n, w, one());
            let direct = higgs.t_operator(&f, &h).expect("holomorphic word");
            if !direct.is_zero() {
                flat_ok = false;
                flat_witness = format!("T({f}) = {direct}");
                break;
            }
        }
        rec.claim("degree-one trace operator vanishes", flat_ok, flat_witness);
    }

    // The Higgs condition: contractions of an odd form commute.
    let mut comm_ok = true;
    let mut comm_witness = String::new();
    'comm: for _ in 0..trials {
        let omega = sampling::random_odd_holo_form(rng, n, 3);
        let Ok(field) = HiggsField::new(omega) else {
            continue;
        };
        let phi = sampling::random_form(rng, n, 3);
        for j in 1..=n {
            for l in (j + 1)..=n {
                let a = field.theta_z(j, &field.theta_z(l, &phi).expect("in range")).expect("in range");
                let b = field.theta_z(l, &field.theta_z(j, &phi).expect("in range")).expect("in range");
                if a != b {
                    comm_ok = false;
                    comm_witness = format!("[θ(Z{j}),θ(Z{l})]φ ≠ 0 on {phi}");
                    break 'comm;
                }
            }
        }
    }
    rec.claim("Higgs condition (odd forms commute)", comm_ok, comm_witness);

    // Kernel characterizations against brute force, exhaustively.
    let kn = n.min(4);
    let kk = k.min(kn);
    let kk = if kk % 2 == 0 { kk.saturating_sub(1).max(1) } else { kk };
    let field = HiggsField::new(Form::dz_blade(kn, &(1..=kk).collect::<Vec<_>>())).expect("simple blade");
    let hh = MetricSpec::standard(kn);
    let mut kernel_ok = true;
    let mut kernel_witness = String::new();
    for w in holo_words(kn) {
        let f = Form::monomial(kn, w, one());
        let predicted = field.kernel_test(&f).expect("holomorphic word");
        let brute = field.theta_annihilates(&f).expect("holomorphic word");
        let adj_predicted = field.adjoint_kernel_test(&f, &hh).expect("holomorphic word");
        let adj_brute = field.adjoint_annihilates(&f, &hh).expect("holomorphic word");
        if predicted != brute || adj_predicted != adj_brute {
            kernel_ok = false;
            kernel_witness = format!(
                "word {f}: θ-kernel {predicted}/{brute}, θ̄-kernel {adj_predicted}/{adj_brute}"
            );
            break;
        }
    }
    rec.claim("kernel characterizations", kernel_ok, kernel_witness);
}

fn curvature_checks<R: Rng>(rec: &mut Recorder, n: usize, k: usize, trials: usize, rng: &mut R) {
    let cn = n.min(4);
    let ck = k.min(cn);
    let ck = if ck % 2 == 0 { ck.saturating_sub(1).max(1) } else { ck };
    let higgs = HiggsField::new(sampling::random_pure_nonzero(rng, cn, ck)).expect("nonzero");
    let h = MetricSpec::standard(cn);
    let rank = 1usize << cn;

    let data = higgs_frame_data(&higgs, &h, FormMatrix::zero(rank, cn)).expect("flat model");
    match assemble_f(&data) {
        Ok(f) => {
            rec.claim(
                "flat curvature has no (2,0) or (0,2) part",
                f.f20.is_zero() && f.f02.is_zero(),
                "F20/F02 nonzero",
            );
            let adj = curvature::adjoint_matrix(&data).expect("diagonal gram");
            let reassembled = data
                .theta_mat
                .wedge(&adj)
                .and_then(|a| adj.wedge(&data.theta_mat).map(|b| (a, b)))
                .map(|(a, b)| a.add(&b));
            match reassembled {
                Ok(Ok(sum)) => rec.claim(
                    "flat F11 is the theta anticommutator",
                    sum == f.f11,
                    "θ∧θ̄ + θ̄∧θ differs from F11",
                ),
                _ => rec.claim("flat F11 is the theta anticommutator", false, "assembly error"),
            }
        }
        Err(e) => rec.claim("flat curvature has no (2,0) or (0,2) part", false, e.to_string()),
    }

    // Evaluation identity F11(Z, W̄) = Θ(Z, W̄) + [θ(Z), θ̄(W̄)].
    let mut eval_ok = true;
    let mut eval_witness = String::new();
    for _ in 0..trials {
        let z = sampling::random_holo_vector(rng, cn);
        let w = sampling::random_holo_vector(rng, cn);
        let f = assemble_f(&data).expect("flat model");
        let lhs = f.f11.evaluate(&z, &w.conj()).expect("evaluation");
        let adj = curvature::adjoint_matrix(&data).expect("diagonal gram");
        let theta_z = data.theta_mat.evaluate_vector(&z).expect("evaluation");
        let adj_w = adj.evaluate_vector(&w.conj()).expect("evaluation");
        let rhs = theta_z.mul(&adj_w).and_then(|ab| {
            adj_w.mul(&theta_z).map(|ba| ab.sub(&ba))
        });
        match rhs {
            Ok(Ok(rhs)) if lhs == rhs => {}
            Ok(Ok(_)) | Ok(Err(_)) | Err(_) => {
                eval_ok = false;
                eval_witness = "F11(Z,W̄) ≠ Θ(Z,W̄) + [θ(Z),θ̄(W̄)]".to_string();
                break;
            }
        }
    }
    rec.claim("curvature evaluation identity", eval_ok, eval_witness);

    // Bochner decomposition on random sections and vectors.
    let mut bochner_ok = true;
    let mut bochner_witness = String::new();
    for _ in 0..trials {
        let z = sampling::random_holo_vector(rng, cn);
        let s = sampling::random_form_holo(rng, cn, 3);
        if s.is_zero() {
            continue;
        }
        let direct = curvature::bochner_value(&data, &higgs, &z, &s, &h);
        let assembled = (|| {
            let adj_s = curvature::adjoint_on_vector(&higgs, &z, &s, &h).ok()?;
            let theta_s = higgs.theta(&z, &s).ok()?;
            Some(&h.norm_sqr(&adj_s).ok()? - &h.norm_sqr(&theta_s).ok()?)
        })();
        match (direct, assembled) {
            (Ok(d), Some(a)) if d == a => {}
            _ => {
                bochner_ok = false;
                bochner_witness = "Bochner value differs from norm difference".to_string();
                break;
            }
        }
    }
    rec.claim("Bochner decomposition (flat metric)", bochner_ok, bochner_witness);

    // Gram-adjoint property for random hermitian positive grams.
    let mut gram_ok = true;
    let mut gram_witness = String::new();
    'gram: for _ in 0..trials.min(4) {
        let r = 3usize;
        let u = ScalarMatrix::from_fn(r, |_, _| sampling::random_scalar(rng));
        let gram = u.mul(&u.dagger()).expect("square").add(&ScalarMatrix::identity(r)).expect("square");
        let mut theta_mat = FormMatrix::zero(r, cn);
        for row in 0..r {
            for col in 0..r {
                *theta_mat.entry_mut(row, col) = sampling::random_pure_form(rng, cn, 1, 0, 1);
            }
        }
        let pd = curvature::PointFrameData {
            rank: r,
            dim: cn,
            h_gram: gram.clone(),
            c_mat: FormMatrix::zero(r, cn),
            theta_big: FormMatrix::zero(r, cn),
            theta_mat: theta_mat.clone(),
            d_theta: FormMatrix::zero(r, cn),
            d_theta_bar: None,
        };
        let adj = curvature::adjoint_matrix(&pd).expect("invertible gram");
        for _ in 0..2 {
            let z = sampling::random_holo_vector(rng, cn);
            let tz = theta_mat.evaluate_vector(&z).expect("evaluation");
            let az = adj.evaluate_vector(&z.conj()).expect("evaluation");
            // h(θ(Z)s, t) = h(s, θ̄(Z̄)t) for basis sections s, t.
            // Pairing h(u, v) = Σ u_α conj(v_κ) H[α][κ] on coefficient
            // columns.
            for s_idx in 0..r {
                for t_idx in 0..r {
                    let mut lhs = zero();
                    let mut rhs = zero();
                    for out in 0..r {
                        lhs += tz.entry(out, s_idx) * gram.entry(out, t_idx);
                        rhs += conj(az.entry(out, t_idx)) * gram.entry(s_idx, out);
                    }
                    if lhs != rhs {
                        gram_ok = false;
                        gram_witness = format!("basis pair ({s_idx},{t_idx})");
                        break 'gram;
                    }
                }
            }
        }
    }
    rec.claim("metric adjoint for general grams", gram_ok, gram_witness);

    // Conformal coefficient table identity, odd n only.
    if n % 2 == 1 {
        let lambda = sampling::random_rat(rng);
        let cst = sampling::random_rat(rng);
        match (hhym_flat(n, &lambda, &cst), f_table(n)) {
            (Ok(c), Ok(table)) => {
                let mut ok = true;
                let mut witness = String::new();
                for (p, cp) in c.iter().enumerate() {
                    let lhs = rint(n as i64) * cp
                        + Rat::from(chern_coeff(n, p)) * &lambda
                        + table[p].clone();
                    if lhs != cst {
                        ok = false;
                        witness = format!("degree {p}: n·c_p + binom·λ + f[p] = {lhs} ≠ {cst}");
                        break;
                    }
                }
                rec.claim("conformal coefficient bookkeeping", ok, witness);
            }
            _ => rec.claim("conformal coefficient bookkeeping", false, "construction failed"),
        }
    }
}

fn slope_checks(rec: &mut Recorder, n: usize, k: usize) {
    // Closed-form slope difference equals the direct computation for every
    // sub-selector pair.
    let mut diff_ok = true;
    let mut diff_witness = String::new();
    'diff: for p_mask in 1u32..(1 << (n + 1)) {
        let p_degrees: Vec<usize> = (0..=n).filter(|d| p_mask >> d & 1 == 1).collect();
        let p_sel = BundleSelector::new(n, p_degrees.iter().copied()).expect("in range");
        let mut q_mask = p_mask;
        loop {
            if q_mask != 0 {
                let q_degrees: Vec<usize> = (0..=n).filter(|d| q_mask >> d & 1 == 1).collect();
                let q_sel = BundleSelector::new(n, q_degrees.iter().copied()).expect("in range");
                let closed = slope_diff(&p_sel, &q_sel).expect("sub-selector");
                let direct =
                    &slope::slope(&p_sel).slope_coeff - &slope::slope(&q_sel).slope_coeff;
                if closed != direct {
                    diff_ok = false;
                    diff_witness = format!("P = {p_sel}, Q = {q_sel}: {closed} vs {direct}");
                    break 'diff;
                }
            }
            if q_mask == 0 {
                break;
            }
            q_mask = (q_mask - 1) & p_mask;
        }
    }
    rec.claim("slope difference closed form", diff_ok, diff_witness);

    let full = BundleSelector::full(n);
    let even = BundleSelector::even(n);
    let odd = BundleSelector::odd(n);
    let half = slope::slope(&full).slope_coeff;
    rec.claim(
        "full, even, odd slopes agree at n/2 · μ(Λ¹)",
        half == crate::scalar::rat(1, 2)
            && slope::slope(&even).slope_coeff == half
            && slope::slope(&odd).slope_coeff == half,
        format!("μ(full) = {half}"),
    );

    // Invariant selectors under the degree-k shift mix parities iff they
    // trigger the slope obstruction.
    let mut inv_ok = true;
    let mut inv_witness = String::new();
    for selector in slope::enumerate_invariant(n, k) {
        if !slope::is_higgs_invariant(&selector, k) {
            inv_ok = false;
            inv_witness = format!("{selector} not invariant");
            break;
        }
    }
    rec.claim("invariant enumeration is sound", inv_ok, inv_witness);
}

fn nakano_checks<R: Rng>(rec: &mut Recorder, n: usize, k: usize, trials: usize, rng: &mut R) {
    let omega = sampling::random_pure_nonzero(rng, n, k);
    let model = CharacterModel::with_higgs(HiggsField::new(omega).expect("nonzero"))
        .expect("dimension within cap");

    let mut adjoint_ok = true;
    let mut adjoint_witness = String::new();
    let mut squares_ok = true;
    let mut squares_witness = String::new();
    let mut additive_ok = true;
    let mut nakano_ok = true;
    let mut nakano_witness = String::new();
    let mut higgs_nakano_ok = true;
    let mut higgs_nakano_witness = String::new();
    let mut reduced_ok = true;

    for t in 0..trials.max(1) {
        let freq = if t == 0 {
            Frequency::zero(n)
        } else {
            Frequency::new(sampling::random_frequency(rng, n))
        };
        for check in model.adjoint_identity_checks(&freq).expect("valid frequency") {
            if !check.holds {
                adjoint_ok = false;
                adjoint_witness = format!(
                    "{} at frequency {:?}: {}",
                    check.name,
                    freq.components(),
                    check.witness.map(|w| w.to_string()).unwrap_or_default()
                );
            }
        }
        let d2 = model.d2(&freq).expect("valid frequency");
        let d1 = model.d1(&freq).expect("valid frequency");
        if !d2.compose(&d2).expect("same side").is_zero()
            || !d1.compose(&d1).expect("same side").is_zero()
        {
            squares_ok = false;
            squares_witness = "extended operator square nonzero".to_string();
        }
        let box_d2 = model.laplacian(LaplacianKind::BoxD2, &freq).expect("valid frequency");
        let box_d1 = model.laplacian(LaplacianKind::BoxD1, &freq).expect("valid frequency");
        let box_d = model.laplacian(LaplacianKind::BoxD, &freq).expect("valid frequency");
        if box_d != box_d2.add(&box_d1).expect("same side") {
            additive_ok = false;
        }
        let flat = model.nakano_check(&freq).expect("valid frequency");
        if !flat.holds {
            nakano_ok = false;
            nakano_witness = flat.witness.map(|w| w.to_string()).unwrap_or_default();
        }
        let hn = model.higgs_nakano_check(&freq).expect("valid frequency");
        if !hn.holds {
            higgs_nakano_ok = false;
            higgs_nakano_witness = hn.witness.map(|w| w.to_string()).unwrap_or_default();
        }
        if model.reduced_box_d2(&freq).expect("valid frequency") != box_d2 {
            reduced_ok = false;
        }
    }
    rec.claim("adjoints match commutator formulas", adjoint_ok, adjoint_witness);
    rec.claim("extended operators square to zero", squares_ok, squares_witness);
    rec.claim("full Laplacian splits", additive_ok, "□_D ≠ □_{D″} + □_{D′_h}");
    rec.claim("flat comparison of plain Laplacians", nakano_ok, nakano_witness);
    rec.claim("Higgs curvature comparison", higgs_nakano_ok, higgs_nakano_witness);
    rec.claim(
        "reduced box equals full box",
        reduced_ok,
        "⊡̄ ≠ □_{D″} for constant structure form",
    );

    let audit_freq = Frequency::new(sampling::random_frequency(rng, n));
    let audit = model.type_shift_audit(&audit_freq).expect("valid frequency");
    let audit_witness = audit
        .shifts
        .iter()
        .filter(|s| !s.ok)
        .map(|s| format!("{} observed {:?}", s.name, s.observed))
        .chain(
            audit
                .vanishing
                .iter()
                .filter(|v| !v.ok)
                .map(|v| format!("{} nonzero", v.name)),
        )
        .collect::<Vec<_>>()
        .join("; ");
    rec.claim("type-shift audit", audit.ok(), audit_witness);

    // Diagonal curvature quadratic form, exhaustive over basis words.
    let kappa: Vec<Rat> = (0..n).map(|_| sampling::random_rat(rng)).collect();
    let op = model.curvature_diag_operator(&kappa).expect("matching length");
    let freq = Frequency::zero(n);
    let mut gg_ok = true;
    let mut gg_witness = String::new();
    for idx in 0..model.side() {
        let word = TensorWord::from_index(n, idx);
        let s = CharacterSection::new(n, freq.clone())
            .expect("matching length")
            .with_term(word, one())
            .expect("word fits");
        let formula = gigante_girbau_formula(&s, &kappa).expect("matching length");
        let quad = op.quadratic_form(&s).expect("matching side");
        if formula != quad {
            gg_ok = false;
            gg_witness = format!(
                "word {word}: formula {}, quadratic form {}",
                crate::scalar::scalar_str(&formula),
                crate::scalar::scalar_str(&quad)
            );
            break;
        }
    }
    rec.claim("diagonal curvature quadratic form", gg_ok, gg_witness);

    let mut sign_ok = true;
    let mut sign_witness = String::new();
    'signs: for r in 1..=3usize {
        for p in 0..=n {
            for q in 0..=n {
                let v = kodnak_scalar(n, r, p, q);
                let fine = if p + q < n {
                    v < Rat::zero()
                } else if p + q == n {
                    v.is_zero()
                } else {
                    v > Rat::zero()
                };
                if !fine {
                    sign_ok = false;
                    sign_witness = format!("(r,p,q) = ({r},{p},{q}) gave {v}");
                    break 'signs;
                }
            }
        }
    }
    rec.claim("scalar comparison sign pattern", sign_ok, sign_witness);

    // Λ is the adjoint of L, and the commutator counts type.
    let l = model.build_op(OpKind::L, &freq).expect("valid frequency");
    let lambda = model.build_op(OpKind::Lambda, &freq).expect("valid frequency");
    rec.claim(
        "Lefschetz pair adjoint on tensor words",
        l.adjoint() == lambda,
        "L* ≠ Λ",
    );
}

fn sampling_natural_metric<R: Rng>(rng: &mut R, n: usize) -> MetricSpec {
    let weights: Vec<Rat> = (0..=n).map(|_| sampling::random_positive_rat(rng)).collect();
    let mut h = MetricSpec::natural(n, weights).expect("positive weights");
    for w in all_words(n) {
        if rng.gen_bool(0.3) {
            h = h
                .with_word_weight(w, sampling::random_positive_rat(rng))
                .expect("positive weight");
        }
    }
    h
}

/// Runs every suite in `kinds` sequentially with the same configuration.
pub fn run_many(
    kinds: &[SuiteKind],
    cfg: &SuiteConfig,
) -> Result<Vec<SuiteReport>, SuiteError> {
    kinds.iter().map(|k| run_suite(*k, cfg)).collect()
}
