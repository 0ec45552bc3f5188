//! Slope calculus for sums of exterior powers and the obstruction verdict:
//! selectors, exact slopes in units of d, invariance enumeration, and the
//! three obstruction cases with their sharpness boundary.
//!
//! Run with `cargo run --example slope_obstructions`.

use higgsform::scalar::rat_str;
use higgsform::slope::{
    bigthm_verdict, enumerate_invariant, is_higgs_invariant, slope, slope_diff,
    stability_preclusion, BundleSelector,
};

fn main() {
    let n = 5;

    // Slopes come out in units of d = deg Λ^{(1,0)}; note d = −deg X, so a
    // negative-degree X means positive d.
    for selector in [
        BundleSelector::full(n),
        BundleSelector::even(n),
        BundleSelector::odd(n),
        BundleSelector::new(n, [5]).expect("valid"),
        BundleSelector::filtration(n, 3).expect("valid"),
    ] {
        let report = slope(&selector);
        println!(
            "μ{} = {}·d   (degree {}·d, rank {})",
            report.selector,
            rat_str(&report.slope_coeff),
            report.degree_coeff,
            report.rank
        );
    }

    // Sub-selector differences have a pair-summed closed form.
    let p = BundleSelector::full(n);
    let q = BundleSelector::new(n, [5]).expect("valid");
    let diff = slope_diff(&p, &q).expect("sub-selector");
    println!("μ(E) − μ(Λ^(5,0)) = {}·d", rat_str(&diff));

    // Higgs invariance: closed under p ↦ p + k − 1 whenever in range.
    let k = 3;
    println!("invariant selectors for n = 3, k = {k}:");
    for sel in enumerate_invariant(3, k) {
        let mixed = stability_preclusion(&sel, k).expect("invariant");
        println!("  {sel}   mixes parities (precludes stability): {mixed}");
    }
    let not_invariant = BundleSelector::new(n, [0, 1]).expect("valid");
    println!("{{0,1}} invariant for k = 3: {}", is_higgs_invariant(&not_invariant, k));

    // The verdict engine: case i (negative degree), case ii (degree zero,
    // small first degree), case iii (large k with the structure form
    // inside), and the open sharpness boundary.
    let rows = [
        (5, 3, -1, vec![1, 3, 5], true),
        (5, 3, 0, vec![1, 3, 5], true),
        (3, 3, 1, vec![1, 3], true),
        (5, 3, 0, vec![4, 5], false),
        (5, 3, 1, vec![1, 3, 5], true),
    ];
    for (n, k, sign, degrees, omega_in) in rows {
        let sel = BundleSelector::new(n, degrees).expect("valid");
        let verdict = bigthm_verdict(n, k, sign, &sel, omega_in).expect("valid input");
        println!(
            "n={n} k={k} sign(deg X)={sign:+} P={sel} ϖ∈P:{omega_in}  →  {}",
            verdict.label()
        );
        if verdict.facts.trivial_action {
            println!("   (first degree ≥ n−k+2: the Higgs operator acts trivially)");
        }
    }
}
