//! The averaging map `S`, and finite verification suites for the relations,
//! the intertwining identity `S(p(h, f)) = ρ(h, S(f))|_{d=s}` and closure of
//! the symmetrized subspace `W`.
//!
//! Cases are evaluated in parallel and merged in case order, so a report does
//! not depend on scheduling. Suites never stop at the first failure.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};
use crate::polyrep::{p_word, PolynomialRep};
use crate::rep::Representation;
use crate::scalars::ScalarPoly;
use crate::skein::{rho_sigma, rho_word, BasisKey, Permutation, SkeinElement};
use crate::words::{relation_table, GeneratorLetter, GeneratorWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub word: String,
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one check. `counterexample` is the first failing case in case
/// order, present exactly when `failures > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub label: String,
    pub kappa: usize,
    pub cases: usize,
    pub failures: usize,
    pub seed: Option<u64>,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} kappa={} cases={} failures={}",
            self.label, self.kappa, self.cases, self.failures
        )?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        if let Some(cx) = &self.counterexample {
            write!(
                f,
                "\n  word:  {}\n  input: {}\n  lhs:   {}\n  rhs:   {}",
                cx.word, cx.input, cx.lhs, cx.rhs
            )?;
        }
        Ok(())
    }
}

/// Runs `eval` on every case. `Ok(None)` is a pass; an error is a failure
/// whose message lands in the counterexample.
fn run_cases<T, F>(label: String, kappa: usize, cases: &[T], eval: F) -> CheckReport
where
    T: Sync,
    F: Fn(&T) -> std::result::Result<Option<Counterexample>, (String, Error)> + Sync,
{
    let outcomes: Vec<Option<Counterexample>> = cases
        .par_iter()
        .map(|case| match eval(case) {
            Ok(cx) => cx,
            Err((word, e)) => Some(Counterexample {
                word,
                input: String::new(),
                lhs: format!("error: {e}"),
                rhs: String::new(),
            }),
        })
        .collect();
    let failures = outcomes.iter().filter(|o| o.is_some()).count();
    CheckReport {
        label,
        kappa,
        cases: cases.len(),
        failures,
        seed: None,
        counterexample: outcomes.into_iter().flatten().next(),
    }
}

fn compare<E: PartialEq + fmt::Display>(
    word: String,
    input: &impl fmt::Display,
    lhs: E,
    rhs: E,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample {
        word,
        input: input.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// `S(X^n) = Σ_σ (a^n, σ)`, extended linearly. Coefficients must be free of `d`.
pub fn averaging_s<C: Coefficient>(f: &LaurentPoly<C>) -> Result<SkeinElement<C>> {
    let perms = Permutation::all(f.rank());
    let mut out = SkeinElement::zero(f.rank());
    for (m, k) in f.terms() {
        if !k.is_d_free() {
            return Err(Error::DExponentInDomain);
        }
        for p in &perms {
            out.add_term(
                BasisKey {
                    mono: m.clone(),
                    perm: p.clone(),
                },
                k.clone(),
            );
        }
    }
    Ok(out)
}

/// Whether every exponent vector carries the same coefficient on all `κ!`
/// permutations, i.e. `v` lies in the span of the symmetrized vectors.
pub fn in_symmetric_span<C: Coefficient>(v: &SkeinElement<C>) -> bool {
    let total = Permutation::all(v.kappa()).len();
    let mut by_mono: BTreeMap<&Monomial, Vec<&ScalarPoly<C>>> = BTreeMap::new();
    for (key, k) in v.terms() {
        by_mono.entry(&key.mono).or_default().push(k);
    }
    by_mono.values().all(|ks| ks.len() == total && ks.iter().all_equal())
}

/// All monomials `X^n` with `lo ≤ nⱼ ≤ hi`.
pub fn monomial_box<C: Coefficient>(kappa: usize, lo: i32, hi: i32) -> Vec<LaurentPoly<C>> {
    exponent_box(kappa, lo, hi)
        .map(|n| LaurentPoly::term(n, ScalarPoly::one()))
        .collect()
}

/// All basis vectors `(a^n, σ)` with `lo ≤ nⱼ ≤ hi`.
pub fn basis_box<C: Coefficient>(kappa: usize, lo: i32, hi: i32) -> Vec<SkeinElement<C>> {
    let perms = Permutation::all(kappa);
    exponent_box(kappa, lo, hi)
        .flat_map(|n| {
            perms.iter().map(move |p| {
                SkeinElement::unit(p.clone())
                    .mul_poly(&LaurentPoly::term(n.clone(), ScalarPoly::one()))
                    .expect("ranks agree")
            })
        })
        .collect()
}

fn exponent_box(kappa: usize, lo: i32, hi: i32) -> impl Iterator<Item = Monomial> {
    (0..kappa).map(|_| lo..=hi).multi_cartesian_product().map(Monomial::new)
}

/// Every generator and inverse at rank `kappa`, as one-letter words.
pub fn single_generator_words(kappa: usize) -> Vec<GeneratorWord> {
    let mut letters = Vec::new();
    for i in 1..kappa {
        letters.push(GeneratorLetter::sigma(i));
        letters.push(GeneratorLetter::sigma_inv(i));
    }
    for i in 1..=kappa {
        letters.extend([
            GeneratorLetter::x(i),
            GeneratorLetter::x_inv(i),
            GeneratorLetter::y(i),
            GeneratorLetter::y_inv(i),
        ]);
    }
    letters
        .into_iter()
        .map(|l| GeneratorWord::new(kappa, vec![l]).expect("letters in range"))
        .collect()
}

/// The alphabet of random words: `σᵢ^±1`, `xᵢ^±1` and `y₁^±1`.
pub fn word_alphabet(kappa: usize) -> Vec<GeneratorLetter> {
    let mut out = Vec::new();
    for i in 1..kappa {
        out.extend([GeneratorLetter::sigma(i), GeneratorLetter::sigma_inv(i)]);
    }
    for i in 1..=kappa {
        out.extend([GeneratorLetter::x(i), GeneratorLetter::x_inv(i)]);
    }
    out.extend([GeneratorLetter::y(1), GeneratorLetter::y_inv(1)]);
    out
}

/// `count` words of length `1..=max_len` over [`word_alphabet`], determined
/// by `seed`.
pub fn random_words(kappa: usize, count: usize, max_len: usize, seed: u64) -> Vec<GeneratorWord> {
    sample_words(kappa, count, seed, |rng| {
        if max_len == 0 {
            0
        } else {
            rng.gen_range(1..=max_len)
        }
    })
}

/// `count` words of exactly `len` letters over [`word_alphabet`].
pub fn random_words_of_length(kappa: usize, count: usize, len: usize, seed: u64) -> Vec<GeneratorWord> {
    sample_words(kappa, count, seed, |_| len)
}

fn sample_words(
    kappa: usize,
    count: usize,
    seed: u64,
    mut len: impl FnMut(&mut ChaCha8Rng) -> usize,
) -> Vec<GeneratorWord> {
    let alphabet = word_alphabet(kappa);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = len(&mut rng);
            let letters = (0..n).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect();
            GeneratorWord::new(kappa, letters).expect("letters in range")
        })
        .collect()
}

/// Evaluates every relation instance on every input; one report per
/// relation number, in increasing order.
pub fn check_relations<C, R>(rep: &R, inputs: &[R::Element]) -> Result<Vec<CheckReport>>
where
    C: Coefficient,
    R: Representation<C>,
{
    let table = relation_table::<C>(rep.kappa())?;
    let grouped = table.into_iter().chunk_by(|r| r.label);
    let reports = grouped
        .into_iter()
        .map(|(label, pairs)| {
            let pairs: Vec<_> = pairs.collect();
            let cases: Vec<_> = pairs.iter().cartesian_product(inputs.iter()).collect();
            run_cases(
                format!("{} relation {label}", rep.name()),
                rep.kappa(),
                &cases,
                |(pair, v)| {
                    let ctx = |e| (pair.to_string(), e);
                    let lhs = rep.act_combination(&pair.lhs, v).map_err(ctx)?;
                    let rhs = rep.act_combination(&pair.rhs, v).map_err(ctx)?;
                    Ok(compare(pair.to_string(), v, lhs, rhs))
                },
            )
        })
        .collect();
    Ok(reports)
}

/// Checks `S(p(h, f)) = ρ(h, S(f))|_{d=s}` for every word against every input.
pub fn check_intertwiner<C: Coefficient>(
    kappa: usize,
    words: &[GeneratorWord],
    monomials: &[LaurentPoly<C>],
) -> CheckReport {
    let cases: Vec<_> = words.iter().cartesian_product(monomials.iter()).collect();
    run_cases("intertwiner".to_string(), kappa, &cases, |(h, f)| {
        let ctx = |e| (h.to_string(), e);
        let lhs = averaging_s(&p_word(h, f).map_err(ctx)?).map_err(ctx)?;
        let rhs = rho_word(h, &averaging_s(f).map_err(ctx)?)
            .map_err(ctx)?
            .substitute_d_eq_s();
        Ok(compare(h.to_string(), f, lhs, rhs))
    })
}

/// Checks that `ρ(h, S(f))|_{d=s}` stays in the symmetrized subspace.
pub fn check_subrep_closure<C: Coefficient>(
    kappa: usize,
    words: &[GeneratorWord],
    monomials: &[LaurentPoly<C>],
) -> CheckReport {
    let cases: Vec<_> = words.iter().cartesian_product(monomials.iter()).collect();
    run_cases("subrep".to_string(), kappa, &cases, |(h, f)| {
        let ctx = |e| (h.to_string(), e);
        let v = rho_word(h, &averaging_s(f).map_err(ctx)?)
            .map_err(ctx)?
            .substitute_d_eq_s();
        Ok((!in_symmetric_span(&v)).then(|| Counterexample {
            word: h.to_string(),
            input: f.to_string(),
            lhs: v.to_string(),
            rhs: "an element with permutation-uniform coefficients".to_string(),
        }))
    })
}

/// Checks `σᵢ((1,σ) + (1,σᵢσ)) = s((1,σ) + (1,σᵢσ))` at `d = s` for every
/// `σ` and `i`.
pub fn check_sigma_pairs<C: Coefficient>(kappa: usize) -> CheckReport {
    let cases: Vec<_> = (1..kappa).cartesian_product(Permutation::all(kappa)).collect();
    run_cases("sigma pair sums".to_string(), kappa, &cases, |(i, p)| {
        let ctx = |e| (format!("s{i}"), e);
        let moved = p.compose_right(*i).map_err(ctx)?;
        let pair = SkeinElement::<C>::unit(p.clone())
            .add(&SkeinElement::unit(moved))
            .map_err(ctx)?;
        let lhs = rho_sigma(*i, &pair).map_err(ctx)?.substitute_d_eq_s();
        let rhs = pair.scale(&ScalarPoly::s());
        Ok(compare(format!("s{i}"), &pair, lhs, rhs))
    })
}

/// Relation suite of the polynomial representation on `monomial_box`.
pub fn poly_relation_suite<C: Coefficient>(kappa: usize, lo: i32, hi: i32) -> Result<Vec<CheckReport>> {
    check_relations(&PolynomialRep::new(kappa)?, &monomial_box::<C>(kappa, lo, hi))
}

/// Relation suite of the skein representation on `basis_box`.
pub fn skein_relation_suite<C: Coefficient>(kappa: usize, lo: i32, hi: i32) -> Result<Vec<CheckReport>> {
    check_relations(&crate::skein::SkeinRep::new(kappa)?, &basis_box::<C>(kappa, lo, hi))
}
