//! Hermitian metrics on the exterior algebra: inner products, musical
//! isomorphisms, the pairing-defined Hodge star, wedge/interior adjoints,
//! and the Lefschetz pair.
//!
//! Run with `cargo run --example hodge_adjoints`.

use higgsform::exterior::{all_words, Form, FrameVector};
use higgsform::metric::{
    adjoint_interior_with, adjoint_wedge_with, flat, hodge_star, kahler_form, lefschetz_l,
    lefschetz_lambda, star_square_signs, vol, MetricSpec,
};
use higgsform::scalar::{rat, rat_str, scalar_str, sint, srat};

fn main() {
    let n = 2;

    // The standard metric makes every basis word orthonormal.
    let h = MetricSpec::standard(n);
    let a = Form::dz(n, 1).wedge(&Form::dzbar(n, 2));
    println!("⟨α, α⟩ = {}", scalar_str(&h.inner(&a, &a).expect("same dimension")));

    // A natural metric scales degrees: weight(word) is the product of the
    // degree weights of its holomorphic and antiholomorphic parts.
    let weighted = MetricSpec::natural(n, vec![rat(1, 1), rat(1, 3), rat(2, 1)])
        .expect("positive weights");
    println!(
        "weighted ⟨dz1, dz1⟩ = {}",
        scalar_str(&weighted.inner(&Form::dz(n, 1), &Form::dz(n, 1)).expect("same dimension"))
    );

    // Musical isomorphisms: flat sends a vector to its metric-dual 1-form.
    let z1 = FrameVector::z(n, 1);
    println!("Z1♭ = {}", flat(&z1));

    // The star is defined through the pairing α ∧ conj(∗β) = ⟨α,β⟩ vol.
    let beta = Form::dz(n, 1).scale(&srat(2, 1));
    let star_beta = hodge_star(&beta);
    println!("∗(2·dz1) = {star_beta}");
    let lhs = beta.wedge(&star_beta.conj());
    let rhs = vol(n).scale(&h.inner(&beta, &beta).expect("same dimension"));
    println!("β∧conj(∗β) = ⟨β,β⟩vol: {}", lhs == rhs);

    // ∗∗ = ±1 word by word; the sign depends only on n and the degree.
    println!("∗∗ signs by total degree: {:?}", star_square_signs(n));

    // Adjoint of wedging with a (p,0) form, under any diagonal metric.
    let phi = Form::dzbar(n, 2);
    let psi = Form::dz(n, 1).wedge(&Form::dzbar(n, 2));
    let wedge_side = weighted
        .inner(&Form::dz(n, 1).wedge(&phi), &psi)
        .expect("same dimension");
    let adjoint_side = weighted
        .inner(&phi, &adjoint_wedge_with(&weighted, &Form::dz(n, 1), &psi).expect("pure (1,0)"))
        .expect("same dimension");
    println!(
        "⟨dz1∧φ, ψ⟩ = {} = ⟨φ, (dz1∧)*ψ⟩ = {}",
        scalar_str(&wedge_side),
        scalar_str(&adjoint_side)
    );

    // Interior products have adjoints too: ⟨i(Z1)ψ, φ⟩ = ⟨ψ, i(Z1)*φ⟩.
    let lifted = adjoint_interior_with(&weighted, &z1, &phi).expect("same dimension");
    println!("i(Z1)* dz̄2 = {lifted}");

    // Lefschetz pair: L wedges the Kähler form, Λ is its adjoint, and
    // [Λ, L] counts n − p − q on every word.
    println!("ω = {}", kahler_form(n));
    let one = Form::one(n);
    println!("Λω = {}", lefschetz_lambda(&lefschetz_l(&one)));
    let mut all_match = true;
    for w in all_words(n) {
        let f = Form::monomial(n, w, higgsform::scalar::one());
        let commutator = &lefschetz_lambda(&lefschetz_l(&f)) - &lefschetz_l(&lefschetz_lambda(&f));
        let weight = n as i64 - w.holo_degree() as i64 - w.anti_degree() as i64;
        all_match &= commutator == f.scale(&sint(weight));
    }
    println!("[Λ,L] = (n−p−q)·Id on all {} words: {all_match}", 1 << (2 * n));
    println!("norm² of ω is {}", rat_str(&h.norm_sqr(&kahler_form(n)).expect("same dimension")));
}
