//! The polynomial representation on Laurent polynomials:
//!
//! ```text
//! xᵢ ↦ Xᵢ
//! σᵢ ↦ s τᵢ + (s - s⁻¹) (Xᵢ Xᵢ₊₁⁻¹ - 1)⁻¹ (τᵢ - 1)
//! y₁ ↦ σ₁⁻¹ ⋯ σκ₋₁⁻¹ ω
//! ```
//!
//! The `y₁` chain is applied with `ω` first, then `σκ₋₁⁻¹`, down to `σ₁⁻¹`.
//! The reverse order breaks relations (4), (7) and (9); see the
//! `y1_operator_order` test.

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::laurent::{check_index, LaurentPoly};
use crate::rep::Representation;
use crate::scalars::{hbar, ScalarPoly};
use crate::words::{expand_letter, Generator, GeneratorLetter, GeneratorWord};

pub fn p_x<C: Coefficient>(i: usize, f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    f.mul_var(i, 1)
}

pub fn p_sigma<C: Coefficient>(i: usize, f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    check_index("sigma", i, f.rank().saturating_sub(1), f.rank())?;
    let swapped = f.apply_tau(i)?;
    let divided = swapped.sub(f)?.exact_divide(i)?;
    swapped.scale(&ScalarPoly::s()).add(&divided.scale(&hbar()))
}

/// `σᵢ⁻¹ = σᵢ - (s - s⁻¹)`.
pub fn p_sigma_inv<C: Coefficient>(i: usize, f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    p_sigma(i, f)?.sub(&f.scale(&hbar()))
}

pub fn p_y1<C: Coefficient>(f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    (1..f.rank())
        .rev()
        .try_fold(f.apply_omega(), |acc, j| p_sigma_inv(j, &acc))
}

/// `y₁⁻¹ = ω⁻¹ σκ₋₁ ⋯ σ₁`: `σ₁` acts first, `ω⁻¹` last.
pub fn p_y1_inv<C: Coefficient>(f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    let chained = (1..f.rank()).try_fold(f.clone(), |acc, j| p_sigma(j, &acc))?;
    Ok(chained.apply_omega_inv())
}

pub fn p_word<C: Coefficient>(w: &GeneratorWord, f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    PolynomialRep::new(w.kappa())?.act_word(w, f)
}

/// The polynomial representation at a fixed rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolynomialRep {
    kappa: usize,
}

impl PolynomialRep {
    pub fn new(kappa: usize) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self { kappa })
    }
}

impl<C: Coefficient> Representation<C> for PolynomialRep {
    type Element = LaurentPoly<C>;

    fn name(&self) -> &'static str {
        "poly"
    }

    fn kappa(&self) -> usize {
        self.kappa
    }

    fn zero(&self) -> LaurentPoly<C> {
        LaurentPoly::zero(self.kappa)
    }

    fn add(&self, a: &LaurentPoly<C>, b: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
        a.add(b)
    }

    fn scale(&self, k: &ScalarPoly<C>, v: &LaurentPoly<C>) -> LaurentPoly<C> {
        v.scale(k)
    }

    fn rank_of(&self, v: &LaurentPoly<C>) -> usize {
        v.rank()
    }

    fn act_letter(&self, letter: GeneratorLetter, f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
        letter.generator.check(self.kappa)?;
        match (letter.generator, letter.inverse) {
            (Generator::X(i), inv) => f.mul_var(i, if inv { -1 } else { 1 }),
            (Generator::Sigma(i), false) => p_sigma(i, f),
            (Generator::Sigma(i), true) => p_sigma_inv(i, f),
            (Generator::Y(1), false) => p_y1(f),
            (Generator::Y(1), true) => p_y1_inv(f),
            (Generator::Y(_), _) => self.act_word(&expand_letter(letter, self.kappa)?, f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    type L = LaurentPoly<i64>;

    fn lp(text: &str, rank: usize) -> L {
        L::parse(text, rank).unwrap()
    }

    #[test]
    fn x_multiplies() {
        assert_eq!(p_x(1, &L::one(2)).unwrap(), lp("X1", 2));
        assert_eq!(p_x(2, &lp("X2^-1", 2)).unwrap(), L::one(2));
        assert_eq!(p_x(1, &lp("X1^2*X2", 2)).unwrap(), lp("X1^3*X2", 2));
        assert!(p_x(3, &L::one(2)).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(p_sigma(1, &L::one(2)).unwrap(), lp("s", 2));
        assert_eq!(p_sigma(1, &lp("X1 + X2", 2)).unwrap(), lp("s*X1 + s*X2", 2));
        assert_eq!(p_sigma(1, &lp("X1", 2)).unwrap(), lp("s^-1*X2", 2));
        assert!(p_sigma(2, &L::one(2)).is_err());
    }

    #[test]
    fn sigma_inverse_examples() {
        let f = lp("X1", 2);
        assert_eq!(p_sigma_inv(1, &p_sigma(1, &f).unwrap()).unwrap(), f);
        assert_eq!(p_sigma_inv(1, &L::one(2)).unwrap(), lp("s^-1", 2));
        assert_eq!(p_sigma_inv(1, &lp("X1 + X2", 2)).unwrap(), lp("s^-1*X1 + s^-1*X2", 2));
    }

    #[test]
    fn y1_examples() {
        assert_eq!(p_y1(&lp("X1^3", 1)).unwrap(), lp("c^6*X1^3", 1));
        assert_eq!(p_y1(&L::one(2)).unwrap(), lp("s^-1", 2));
        let expected = p_sigma_inv(1, &lp("c^2*X2", 2)).unwrap();
        assert_eq!(p_y1(&lp("X1", 2)).unwrap(), expected);
    }

    #[test]
    fn y1_inverse_round_trip() {
        for text in ["1", "X1", "X1^2*X2^-1*X3", "s*X3^-2 + X2"] {
            let f = lp(text, 3);
            assert_eq!(p_y1_inv(&p_y1(&f).unwrap()).unwrap(), f);
            assert_eq!(p_y1(&p_y1_inv(&f).unwrap()).unwrap(), f);
        }
        let f = lp("X1^2*X2^-1*X3", 3);
        assert_eq!(f.apply_omega().apply_omega_inv(), f);
        assert_eq!(f.apply_omega_inv().apply_omega(), f);
    }

    #[test]
    fn word_examples() {
        let f = lp("X1^2*X2", 2);
        let id = GeneratorWord::identity(2);
        assert_eq!(p_word(&id, &f).unwrap(), f);
        let w = parse_word("s1 * s1^-1", 2).unwrap();
        assert_eq!(p_word(&w, &f).unwrap(), f);
        assert!(p_word(&w, &L::one(3)).is_err());
    }

    #[test]
    fn rightmost_letter_acts_first() {
        // σ₁x₁ · 1 = σ₁(X1) = s⁻¹X2, while x₁σ₁ · 1 = X1 · s
        let one = L::one(2);
        assert_eq!(
            p_word(&parse_word("s1*x1", 2).unwrap(), &one).unwrap(),
            lp("s^-1*X2", 2)
        );
        assert_eq!(p_word(&parse_word("x1*s1", 2).unwrap(), &one).unwrap(), lp("s*X1", 2));
    }

    #[test]
    fn relation_nine_on_small_monomials() {
        let w = parse_word("x1^-1*y1*x1*y1^-1", 2).unwrap();
        let rhs = parse_word("s1*s1", 2).unwrap();
        let c2 = ScalarPoly::c_pow(2);
        for a in -2..=2 {
            for b in -2..=2 {
                let f = L::monomial(&[a, b]);
                let lhs = p_word(&w, &f).unwrap();
                assert_eq!(lhs, p_word(&rhs, &f).unwrap().scale(&c2), "f = {f}");
            }
        }
    }

    #[test]
    fn y_i_expands_through_sigma_conjugation() {
        let f = lp("X1*X2^-2", 2);
        let direct = p_word(&parse_word("y2", 2).unwrap(), &f).unwrap();
        let expanded = p_word(&parse_word("s1*y1*s1", 2).unwrap(), &f).unwrap();
        assert_eq!(direct, expanded);
        let back = p_word(&parse_word("y2^-1", 2).unwrap(), &direct).unwrap();
        assert_eq!(back, f);
    }

    /// Reversing the chain (`ω` last) must break the relation suite.
    #[test]
    fn y1_operator_order() {
        fn y1_reversed(f: &L) -> L {
            (1..f.rank())
                .rev()
                .try_fold(f.clone(), |acc, j| p_sigma_inv(j, &acc))
                .unwrap()
                .apply_omega()
        }
        fn y1_reversed_inv(f: &L) -> L {
            (1..f.rank())
                .try_fold(f.apply_omega_inv(), |acc, j| p_sigma(j, &acc))
                .unwrap()
        }
        let act = |w: &str, f: &L| -> L {
            parse_word(w, 2)
                .unwrap()
                .letters()
                .iter()
                .rev()
                .fold(f.clone(), |acc, l| match (l.generator, l.inverse) {
                    (Generator::Y(1), false) => y1_reversed(&acc),
                    (Generator::Y(1), true) => y1_reversed_inv(&acc),
                    _ => PolynomialRep::new(2).unwrap().act_letter(*l, &acc).unwrap(),
                })
        };
        let f = lp("X1", 2);
        let lhs = act("x1^-1*y1*x1*y1^-1", &f);
        let rhs = act("s1*s1", &f).scale(&ScalarPoly::c_pow(2));
        assert_ne!(lhs, rhs);
        // the adopted order satisfies it
        let lhs = p_word(&parse_word("x1^-1*y1*x1*y1^-1", 2).unwrap(), &f).unwrap();
        let rhs = p_word(&parse_word("s1*s1", 2).unwrap(), &f)
            .unwrap()
            .scale(&ScalarPoly::c_pow(2));
        assert_eq!(lhs, rhs);
    }
}
