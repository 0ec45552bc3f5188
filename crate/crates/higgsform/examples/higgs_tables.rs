//! The wedge Higgs operator and its trace operator: eigenvalue tables,
//! the simple-blade expansion, and the kernel characterizations.
//!
//! Run with `cargo run --example higgs_tables`.

use higgsform::exterior::{holo_words, Form};
use higgsform::higgs::{f_table, f_table_trace, span_f_table, HiggsField};
use higgsform::metric::MetricSpec;
use higgsform::scalar::{one, rat_str};

fn main() {
    let n = 5;
    let higgs = HiggsField::top(n).expect("odd dimension");
    let h = MetricSpec::standard(n);
    println!("structure form ϖ = {}", higgs.omega());

    // θ(Z_j)φ = (i(Z_j)ϖ)∧φ lowers ϖ by one index and raises φ.
    println!("θ(Z1)·1 = {}", higgs.theta_z(1, &Form::one(n)).expect("in range"));
    println!("θ(Z1)·dz1 = {}", higgs.theta_z(1, &Form::dz(n, 1)).expect("in range"));

    // T_h = Σ_j [θ(Z_j), θ̄_h(Z̄_j)] acts on Λ^{(i,0)} as f[i]·Id.
    let f = f_table(n).expect("odd dimension");
    println!("f-table for n = {n}:");
    for (i, fi) in f.iter().enumerate() {
        println!("  f[{i}] = {}", rat_str(fi));
    }
    println!(
        "binomially weighted trace = {}",
        rat_str(&f_table_trace(n).expect("odd dimension"))
    );

    // Spot check: T_h on one word of each degree.
    for blade in [vec![], vec![1], vec![1, 2], vec![1, 2, 3, 4, 5]] {
        let word = Form::dz_blade(n, &blade);
        let image = higgs.t_operator(&word, &h).expect("holomorphic input");
        println!("T({word}) = {image}");
    }

    // A simple (3,0) blade spans a smaller table, indexed by how many of
    // its indices a word uses; the closed-form expansion matches the
    // operator exactly.
    let blade = HiggsField::new(Form::dz_blade(n, &[1, 2, 3])).expect("odd blade");
    println!("span table for k = 3: {:?}", {
        let table = span_f_table(3).expect("k at least 3");
        table.iter().map(rat_str).collect::<Vec<_>>()
    });
    let mut matches = 0;
    for w in holo_words(n) {
        let f = Form::monomial(n, w, one());
        let direct = blade.t_operator(&f, &h).expect("holomorphic input");
        let expansion = blade.simple_t_expansion(&f).expect("simple blade");
        matches += usize::from(direct == expansion);
    }
    println!("expansion equals direct operator on {matches}/32 basis words");

    // Degree-one blades are the degenerate case: wedge and adjoint commute,
    // so the trace operator vanishes identically and the table is empty.
    let degree_one = HiggsField::new(Form::dz(n, 1)).expect("odd blade");
    let probe = Form::dz_blade(n, &[2, 3]);
    println!(
        "k = 1: T({probe}) = {}",
        degree_one.t_operator(&probe, &h).expect("holomorphic input")
    );

    // Kernel membership has a wedge characterization equivalent to brute
    // force annihilation by every θ(Z_j).
    for blade_indices in [vec![1, 2, 3, 4, 5], vec![4, 5]] {
        let word = Form::dz_blade(n, &blade_indices);
        let predicted = higgs.kernel_test(&word).expect("holomorphic input");
        let brute = higgs.theta_annihilates(&word).expect("holomorphic input");
        println!("θ kills {word}: {predicted} (brute force agrees: {})", predicted == brute);
    }
}
