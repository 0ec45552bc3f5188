//! Pointwise curvature assembly for the Higgs-extended connection in a
//! constant frame, the Bochner quadratic form, the mean-curvature operator,
//! and the flat conformal construction.
//!
//! Run with `cargo run --example curvature_bochner`.

use higgsform::curvature::{
    adjoint_matrix, assemble_f, bochner_value, higgs_frame_data, hhym_flat, i_lambda_f,
    FormMatrix,
};
use higgsform::exterior::{Form, FrameVector};
use higgsform::higgs::HiggsField;
use higgsform::metric::MetricSpec;
use higgsform::scalar::{rat, rat_str, Rat};

fn main() {
    let n = 3;
    let rank = 1usize << n;
    let higgs = HiggsField::top(n).expect("odd dimension");
    let h = MetricSpec::standard(n);

    // Frame data over the rank-8 bundle Λ^{•,0}; the metric curvature input
    // is zero because the frame is flat and constant.
    let data = higgs_frame_data(&higgs, &h, FormMatrix::zero(rank, n)).expect("flat model");
    println!("θ columns out of the scalar frame (mask 0):");
    for r in 0..rank {
        let entry = data.theta_mat.entry(r, 0);
        if !entry.is_zero() {
            println!("  θ[{r}][0] = {entry}");
        }
    }

    // F = Θ + curvature of the Higgs pair. With dθ = 0 and C = 0 the
    // (2,0)/(0,2) parts vanish and F^{1,1} = θ∧θ̄ + θ̄∧θ.
    let f = assemble_f(&data).expect("consistent frame data");
    println!("F^(2,0) vanishes: {}", f.f20.is_zero());
    println!("F^(0,2) vanishes: {}", f.f02.is_zero());
    println!("F^(1,1)[0][0] = {}", f.f11.entry(0, 0));

    // The metric adjoint of θ in the same frame: the transpose entry,
    // conjugated and weighted. Frame 6 is the word dz2∧dz3.
    let adj = adjoint_matrix(&data).expect("invertible gram");
    println!("θ*[0][6] = {}", adj.entry(0, 6));

    // Bochner form ⟨F(Z,Z̄)s, s⟩ + ‖θ̄(Z̄)s‖² − ‖θ(Z)s‖² at a frame vector;
    // exact rational output.
    let z = FrameVector::z(n, 1);
    for s in [Form::one(n), Form::dz(n, 1), Form::dz_blade(n, &[1, 2, 3])] {
        let value = bochner_value(&data, &higgs, &z, &s, &h).expect("flat model");
        println!("Bochner value at s = {s}: {}", rat_str(&value));
    }

    // Mean curvature iΛF = iΛΘ + T_h reduces to the trace operator here.
    let s = Form::dz(n, 2);
    let mean = i_lambda_f(&data, &higgs, &s, &h).expect("flat model");
    let trace_only = higgs.t_operator(&s, &h).expect("holomorphic input");
    println!("iΛF·dz2 = {mean} (trace operator alone: {})", mean == trace_only);

    // Conformal coefficients for the flat construction: each c_p satisfies
    // n·c_p + C(n−1,p−1)·λ + f[p] = C exactly.
    let lambda = rat(1, 2);
    let cst = Rat::from_integer(3.into());
    let c = hhym_flat(n, &lambda, &cst).expect("odd dimension");
    println!("conformal coefficients for n = 3, λ = 1/2, C = 3:");
    for (p, cp) in c.iter().enumerate() {
        println!("  c[{p}] = {}", rat_str(cp));
    }
}
