//! Common interface of the two representations.

use std::fmt::Display;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::scalars::ScalarPoly;
use crate::words::{GeneratorLetter, GeneratorWord, WordCombination};

/// A left module over the DAHA, given by the action of single letters.
/// Words act rightmost letter first.
pub trait Representation<C: Coefficient>: Sync {
    type Element: Clone + PartialEq + Display + Send + Sync;

    fn name(&self) -> &'static str;

    fn kappa(&self) -> usize;

    fn zero(&self) -> Self::Element;

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element>;

    fn scale(&self, k: &ScalarPoly<C>, v: &Self::Element) -> Self::Element;

    /// Rank of an element, checked against the word before acting.
    fn rank_of(&self, v: &Self::Element) -> usize;

    fn act_letter(&self, letter: GeneratorLetter, v: &Self::Element) -> Result<Self::Element>;

    fn act_word(&self, w: &GeneratorWord, v: &Self::Element) -> Result<Self::Element> {
        if w.kappa() != self.kappa() || self.rank_of(v) != self.kappa() {
            return Err(Error::RankMismatch {
                left: w.kappa(),
                right: self.rank_of(v),
            });
        }
        w.letters()
            .iter()
            .rev()
            .try_fold(v.clone(), |acc, &l| self.act_letter(l, &acc))
    }

    /// Evaluates `Σ kⱼ · wⱼ(v)`.
    fn act_combination(&self, combo: &WordCombination<C>, v: &Self::Element) -> Result<Self::Element> {
        combo.terms.iter().try_fold(self.zero(), |acc, (k, w)| {
            let image = self.act_word(w, v)?;
            self.add(&acc, &self.scale(k, &image))
        })
    }
}
