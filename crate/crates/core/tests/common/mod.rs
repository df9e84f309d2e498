#![allow(dead_code)]

use daha::{GeneratorLetter, GeneratorWord, Laurent, Monomial, Permutation, Scalar, ScalarMonomial, Skein};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_scalar(rng: &mut impl Rng, max_terms: usize) -> Scalar {
    let n = rng.gen_range(0..=max_terms);
    Scalar::from_terms((0..n).map(|_| {
        let m = ScalarMonomial::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        (m, rng.gen_range(-5..=5))
    }))
}

pub fn random_d_free_scalar(rng: &mut impl Rng) -> Scalar {
    Scalar::from_terms((0..rng.gen_range(1..=2)).map(|_| {
        (
            ScalarMonomial::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2), 0),
            rng.gen_range(-3..=3),
        )
    }))
}

pub fn random_monomial(rng: &mut impl Rng, kappa: usize, bound: i32) -> Monomial {
    Monomial::new((0..kappa).map(|_| rng.gen_range(-bound..=bound)).collect())
}

pub fn random_laurent(rng: &mut impl Rng, kappa: usize, bound: i32, max_terms: usize) -> Laurent {
    let n = rng.gen_range(0..=max_terms);
    Laurent::from_terms(
        kappa,
        (0..n).map(|_| (random_monomial(rng, kappa, bound), random_scalar(rng, 2))),
    )
    .unwrap()
}

pub fn random_perm(rng: &mut impl Rng, kappa: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=kappa).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

pub fn random_skein(rng: &mut impl Rng, kappa: usize, bound: i32, max_terms: usize) -> Skein {
    let mut out = Skein::zero(kappa);
    for _ in 0..rng.gen_range(0..=max_terms) {
        let term = Skein::basis_scaled(
            random_monomial(rng, kappa, bound),
            random_perm(rng, kappa),
            random_scalar(rng, 2),
        )
        .unwrap();
        out = out.add(&term).unwrap();
    }
    out
}

/// Any letter valid at rank `kappa`, including `xᵢ`, `yᵢ` for `i > 1`.
pub fn random_letter(rng: &mut impl Rng, kappa: usize) -> GeneratorLetter {
    let inverse = rng.gen_bool(0.5);
    let letter = match rng.gen_range(0..3) {
        0 if kappa > 1 => GeneratorLetter::sigma(rng.gen_range(1..kappa)),
        1 => GeneratorLetter::x(rng.gen_range(1..=kappa)),
        _ => GeneratorLetter::y(rng.gen_range(1..=kappa)),
    };
    if inverse {
        letter.inverted()
    } else {
        letter
    }
}

pub fn random_word(rng: &mut impl Rng, kappa: usize, max_len: usize) -> GeneratorWord {
    let len = rng.gen_range(0..=max_len);
    GeneratorWord::new(kappa, (0..len).map(|_| random_letter(rng, kappa)).collect()).unwrap()
}
