//! Deterministic random generators for forms, vectors, and scalars.
//!
//! Used by the property tests and the seeded check suites; everything is
//! driven by a caller-supplied RNG so runs are reproducible.

use rand::Rng;

use crate::exterior::{BasisWord, Form, FrameVector, mask_full};
use crate::scalar::{Rat, Scalar, gauss, rat};

/// Small random rational with numerator in `-9..=9`, denominator in `1..=9`.
pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

/// Small nonzero random rational.
pub fn random_nonzero_rat<R: Rng>(rng: &mut R) -> Rat {
    rat(
        [-5, -3, -2, -1, 1, 2, 3, 5][rng.gen_range(0..8)],
        rng.gen_range(1..=4),
    )
}

/// Small positive random rational.
pub fn random_positive_rat<R: Rng>(rng: &mut R) -> Rat {
    rat(rng.gen_range(1..=9), rng.gen_range(1..=9))
}

/// Random Gaussian rational with small entries.
pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    gauss(random_rat(rng), random_rat(rng))
}

/// Random basis word in dimension `n`.
pub fn random_word<R: Rng>(rng: &mut R, n: usize) -> BasisWord {
    let full = mask_full(n);
    BasisWord::new(rng.gen_range(0..=full), rng.gen_range(0..=full))
}

/// Random word of fixed Hodge type `(p, q)`.
pub fn random_typed_word<R: Rng>(rng: &mut R, n: usize, p: usize, q: usize) -> BasisWord {
    BasisWord::new(random_mask(rng, n, p), random_mask(rng, n, q))
}

fn random_mask<R: Rng>(rng: &mut R, n: usize, ones: usize) -> u32 {
    assert!(ones <= n);
    let mut picked = 0u32;
    let mut remaining = ones;
    while remaining > 0 {
        let bit = 1 << rng.gen_range(0..n);
        if picked & bit == 0 {
            picked |= bit;
            remaining -= 1;
        }
    }
    picked
}

/// Random Hodge type in dimension `n`.
pub fn random_type<R: Rng>(rng: &mut R, n: usize) -> (usize, usize) {
    (rng.gen_range(0..=n), rng.gen_range(0..=n))
}

/// Random form with up to `terms` random words.
pub fn random_form<R: Rng>(rng: &mut R, n: usize, terms: usize) -> Form {
    let mut f = Form::zero(n);
    for _ in 0..terms {
        f.add_term(random_word(rng, n), random_scalar(rng));
    }
    f
}

/// Random form all of whose words have type `(p, q)`; the zero form when
/// either degree exceeds the dimension.
pub fn random_pure_form<R: Rng>(rng: &mut R, n: usize, p: usize, q: usize, terms: usize) -> Form {
    let mut f = Form::zero(n);
    if p > n || q > n {
        return f;
    }
    for _ in 0..terms {
        f.add_term(random_typed_word(rng, n, p, q), random_scalar(rng));
    }
    f
}

/// Random mixed-degree `(·,0)` form with all degrees odd; never zero.
pub fn random_odd_holo_form<R: Rng>(rng: &mut R, n: usize, terms: usize) -> Form {
    let mut f = Form::zero(n);
    while f.is_zero() {
        for _ in 0..terms.max(1) {
            let k = 2 * rng.gen_range(0..=(n - 1) / 2) + 1;
            f.add_term(random_typed_word(rng, n, k, 0), random_scalar(rng));
        }
    }
    f
}

/// Random `(·,0)` form with possibly mixed degrees.
pub fn random_form_holo<R: Rng>(rng: &mut R, n: usize, terms: usize) -> Form {
    let mut f = Form::zero(n);
    for _ in 0..terms {
        let p = rng.gen_range(0..=n);
        f.add_term(random_typed_word(rng, n, p, 0), random_scalar(rng));
    }
    f
}

/// Random nonzero pure `(k,0)` form.
pub fn random_pure_nonzero<R: Rng>(rng: &mut R, n: usize, k: usize) -> Form {
    loop {
        let f = random_pure_form(rng, n, k, 0, 2);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random complexified tangent vector.
pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> FrameVector {
    let holo = (0..n).map(|_| random_scalar(rng)).collect();
    let anti = (0..n).map(|_| random_scalar(rng)).collect();
    FrameVector::new(n, holo, anti).expect("component lengths match")
}

/// Random holomorphic tangent vector.
pub fn random_holo_vector<R: Rng>(rng: &mut R, n: usize) -> FrameVector {
    let holo = (0..n).map(|_| random_scalar(rng)).collect();
    FrameVector::holomorphic(n, holo).expect("component lengths match")
}

/// Random frequency vector for the character model.
pub fn random_frequency<R: Rng>(rng: &mut R, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| random_scalar(rng)).collect()
}
