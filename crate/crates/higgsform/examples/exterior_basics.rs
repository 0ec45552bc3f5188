//! Tour of the exact exterior algebra: building sparse forms, wedge signs,
//! interior products, and the degree-counting contraction.
//!
//! Run with `cargo run --example exterior_basics`.

use higgsform::exterior::{contract_z, euler_degree, Form, FrameVector};
use higgsform::scalar::{gauss, i_unit, rat, srat};

fn main() {
    let n = 3;

    // Forms are sparse sums of basis words with Gaussian-rational
    // coefficients; frame indices are 1-based.
    let alpha = Form::dz(n, 1).wedge(&Form::dzbar(n, 2));
    let beta = Form::dz(n, 2).scale(&srat(1, 2));
    let gamma = Form::dz(n, 3).scale(&gauss(rat(0, 1), rat(2, 1)));
    println!("α = {alpha}");
    println!("β = {beta}");
    println!("γ = {gamma}");

    // Graded commutativity: a 2-form commutes with a 1-form, two 1-forms
    // anticommute, and repeated factors vanish.
    println!("α∧β = {}", alpha.wedge(&beta));
    println!("β∧α = {}", beta.wedge(&alpha));
    println!("β∧γ = {}", beta.wedge(&gamma));
    println!("γ∧β = {}", gamma.wedge(&beta));
    println!("β∧β = {}", beta.wedge(&beta));

    // Interior product with a frame vector is an anti-derivation.
    let z1 = FrameVector::z(n, 1);
    println!("i(Z1) α = {}", z1.interior(&alpha));
    let product = alpha.wedge(&gamma);
    let direct = z1.interior(&product);
    let leibniz = &z1.interior(&alpha).wedge(&gamma) + &alpha.wedge(&z1.interior(&gamma));
    println!("i(Z1)(α∧γ) = {direct}");
    println!("  matches the signed Leibniz expansion: {}", direct == leibniz);

    // Single-direction contraction keeps the words containing the index.
    println!("contract_z(2, α∧β) = {}", contract_z(2, &product));

    // Σ_j dz_j ∧ i(Z_j) multiplies a pure (k,0) form by its degree.
    let phi = &Form::dz_blade(n, &[1, 2]).scale(&srat(3, 2)) + &Form::dz_blade(n, &[1, 3]);
    let counted = euler_degree(&phi).expect("pure holomorphic input");
    println!("φ = {phi}");
    println!("Σ dz_j∧i(Z_j) φ = {counted}");
    println!("  equals 2·φ: {}", counted == phi.scale(&srat(2, 1)));

    // Conjugation swaps holomorphic and antiholomorphic factors.
    println!("conj(α) = {}", alpha.conj());
    println!("conj(γ) = {}", gamma.conj());
    println!("i·i = {}, so conj is an involution: {}", i_unit() * i_unit(), gamma.conj().conj() == gamma);
}
