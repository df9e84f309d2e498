//! The braid-skein module `PR_κ` and the enhanced polynomial representation.
//!
//! `PR_κ` is free over `Z[s^±1, c^±1, d^±1]` on pairs `(a₁^n₁ ⋯ aκ^nκ, σ)`
//! with `σ ∈ S_κ`. The generators act by
//!
//! ```text
//! xᵢ · (a, σ) = (aᵢ a, σ)
//! σᵢ · (1, σ) = d⁻¹ (1, σᵢσ)              if σ(i) < σ(i+1)
//!             = d (1, σᵢσ) + ħ (1, σ)     if σ(i) > σ(i+1)
//! y₁ · (a, σ) = c^(2n₁) τκ⁻¹ · (aκ^n₁ a₁^n₂ ⋯ aκ₋₁^nκ, τκσ),   τκ = σκ₋₁ ⋯ σ₁
//! ```
//!
//! and `σᵢ` reaches a general `(a, σ)` by commuting past the monomial with
//! the affine Hecke relations, see [`push_sigma_past_monomial`].

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::laurent::{check_index, LaurentPoly, Monomial};
use crate::parse::{self, Expr, ExprRing};
use crate::rep::Representation;
use crate::scalars::{hbar, join_signed, ScalarPoly};
use crate::words::{expand_letter, Generator, GeneratorLetter, GeneratorWord};

/// A permutation in one-line notation: `images[j - 1] = σ(j)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(kappa: usize) -> Self {
        Permutation((1..=kappa).collect())
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn kappa(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `σ(j)`, 1-based.
    pub fn image(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    /// All of `S_κ` in lexicographic order of image lists.
    pub fn all(kappa: usize) -> Vec<Permutation> {
        (1..=kappa).permutations(kappa).map(Permutation).collect()
    }

    /// `σᵢσ`, i.e. `σ ∘ τᵢ`: the images at positions `i` and `i + 1` swap.
    pub fn compose_right(&self, i: usize) -> Result<Self> {
        check_index("sigma", i, self.kappa().saturating_sub(1), self.kappa())?;
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Ok(Permutation(v))
    }

    fn swapped(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// `τκσ = σ ∘ τ₁ ∘ τ₂ ∘ ⋯ ∘ τκ₋₁`.
    pub(crate) fn tau_kappa_times(&self) -> Self {
        (1..self.kappa()).fold(self.clone(), |p, j| p.swapped(j))
    }

    fn tau_kappa_inv_times(&self) -> Self {
        (1..self.kappa()).rev().fold(self.clone(), |p, j| p.swapped(j))
    }
}

pub fn perm_compose_right(sigma_i: usize, sigma: &Permutation) -> Result<Permutation> {
    sigma.compose_right(sigma_i)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(" "))
    }
}

/// Key of one basis vector `(a^n, σ)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey {
    pub mono: Monomial,
    pub perm: Permutation,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkeinElement<C> {
    kappa: usize,
    terms: BTreeMap<BasisKey, ScalarPoly<C>>,
}

impl<C: Coefficient> SkeinElement<C> {
    pub fn zero(kappa: usize) -> Self {
        Self {
            kappa,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector `(a^n, σ)`.
    pub fn basis(mono: Monomial, perm: Permutation) -> Result<Self> {
        Self::basis_scaled(mono, perm, ScalarPoly::one())
    }

    pub fn basis_scaled(mono: Monomial, perm: Permutation, k: ScalarPoly<C>) -> Result<Self> {
        if mono.rank() != perm.kappa() {
            return Err(Error::RankMismatch {
                left: mono.rank(),
                right: perm.kappa(),
            });
        }
        let mut out = Self::zero(perm.kappa());
        out.add_term(BasisKey { mono, perm }, k);
        Ok(out)
    }

    /// `(1, σ)`.
    pub fn unit(perm: Permutation) -> Self {
        let kappa = perm.kappa();
        let mut out = Self::zero(kappa);
        out.add_term(
            BasisKey {
                mono: Monomial::one(kappa),
                perm,
            },
            ScalarPoly::one(),
        );
        out
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &ScalarPoly<C>)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial, perm: &Permutation) -> ScalarPoly<C> {
        self.terms
            .get(&BasisKey {
                mono: mono.clone(),
                perm: perm.clone(),
            })
            .cloned()
            .unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, key: BasisKey, k: ScalarPoly<C>) {
        if k.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                v.add_assign_ref(&k);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, k);
            }
        }
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.kappa == other.kappa {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.kappa,
                right: other.kappa,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    fn add_assign(&mut self, other: &Self) {
        for (key, k) in &other.terms {
            self.add_term(key.clone(), k.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (key, k) in &other.terms {
            out.add_term(key.clone(), -k);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            kappa: self.kappa,
            terms: self.terms.iter().map(|(key, k)| (key.clone(), -k)).collect(),
        }
    }

    pub fn scale(&self, k: &ScalarPoly<C>) -> Self {
        let mut out = Self::zero(self.kappa);
        if k.is_zero() {
            return out;
        }
        for (key, v) in &self.terms {
            out.add_term(key.clone(), v * k);
        }
        out
    }

    /// Multiplies by a Laurent polynomial in the `a` variables (the action of
    /// the commutative `x` subalgebra).
    pub fn mul_poly(&self, f: &LaurentPoly<C>) -> Result<Self> {
        if f.rank() != self.kappa {
            return Err(Error::RankMismatch {
                left: f.rank(),
                right: self.kappa,
            });
        }
        let mut out = Self::zero(self.kappa);
        for (m, fk) in f.terms() {
            for (key, k) in &self.terms {
                out.add_term(
                    BasisKey {
                        mono: key.mono.times(m),
                        perm: key.perm.clone(),
                    },
                    fk * k,
                );
            }
        }
        Ok(out)
    }

    pub fn substitute_d_eq_s(&self) -> Self {
        let mut out = Self::zero(self.kappa);
        for (key, k) in &self.terms {
            out.add_term(key.clone(), k.substitute_d_eq_s());
        }
        out
    }

    /// Parses `c^4*(a1^-1*a2^2,[1 2]) - (1,[2 1])`.
    pub fn parse(text: &str, kappa: usize) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::ZeroRank);
        }
        match parse::eval::<SkeinValue<C>>(&kappa, &parse::parse_expr(text)?)? {
            SkeinValue::Elem(v) => Ok(v),
            SkeinValue::Scalar(k) if k.is_zero() => Ok(Self::zero(kappa)),
            SkeinValue::Scalar(_) => Err(Error::parse(0, "expected skein basis terms such as (a1,[2 1])")),
        }
    }
}

/// Terms ordered by descending monomial, then ascending permutation.
impl<C: Coefficient> fmt::Display for SkeinElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.mono.cmp(&a.mono).then_with(|| a.perm.cmp(&b.perm)));
        let parts = terms.into_iter().map(|(key, k)| {
            let mono = key.mono.render('a');
            let mono = if mono.is_empty() { "1".to_string() } else { mono };
            k.fmt_multiplier(&format!("({mono},{})", key.perm))
        });
        f.write_str(&join_signed(parts))
    }
}

impl<C: Coefficient> fmt::Debug for SkeinElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkeinElement[{}]({self})", self.kappa)
    }
}

#[derive(Clone)]
enum SkeinValue<C> {
    Scalar(ScalarPoly<C>),
    Elem(SkeinElement<C>),
}

impl<C: Coefficient> ExprRing for SkeinValue<C> {
    type Ctx = usize;

    fn ring_int(_: &usize, digits: &str) -> Result<Self> {
        Ok(SkeinValue::Scalar(ScalarPoly::ring_int(&(), digits)?))
    }

    fn ring_var(_: &usize, name: char, index: Option<usize>, exp: i32, pos: usize) -> Result<Self> {
        Ok(SkeinValue::Scalar(ScalarPoly::ring_var(&(), name, index, exp, pos)?))
    }

    fn ring_basis(kappa: &usize, mono: &Expr, perm: &[usize], pos: usize) -> Result<Self> {
        let poly = LaurentPoly::<C>::from_expr_in(mono, *kappa, 'a')?;
        if perm.len() != *kappa {
            return Err(Error::parse(pos, format!("permutation must have {kappa} entries")));
        }
        let perm = Permutation::new(perm.to_vec())?;
        Ok(SkeinValue::Elem(SkeinElement::unit(perm).mul_poly(&poly)?))
    }

    fn ring_one(_: &usize) -> Self {
        SkeinValue::Scalar(ScalarPoly::one())
    }

    fn ring_zero(_: &usize) -> Self {
        SkeinValue::Scalar(ScalarPoly::zero())
    }

    fn ring_add(self, other: Self) -> Result<Self> {
        use SkeinValue::*;
        match (self, other) {
            (Scalar(a), Scalar(b)) => Ok(Scalar(a + b)),
            (Elem(a), Elem(b)) => Ok(Elem(a.add(&b)?)),
            (Elem(v), Scalar(k)) | (Scalar(k), Elem(v)) if k.is_zero() => Ok(Elem(v)),
            _ => Err(Error::parse(0, "cannot add a bare scalar to a skein element")),
        }
    }

    fn ring_neg(self) -> Self {
        match self {
            SkeinValue::Scalar(k) => SkeinValue::Scalar(-k),
            SkeinValue::Elem(v) => SkeinValue::Elem(v.neg()),
        }
    }

    fn ring_mul(self, other: Self, pos: usize) -> Result<Self> {
        use SkeinValue::*;
        match (self, other) {
            (Scalar(a), Scalar(b)) => Ok(Scalar(a * b)),
            (Scalar(k), Elem(v)) | (Elem(v), Scalar(k)) => Ok(Elem(v.scale(&k))),
            (Elem(_), Elem(_)) => Err(Error::parse(pos, "skein basis elements cannot be multiplied")),
        }
    }
}

/// `σᵢ · xⱼ^e = f σᵢ + g` for a single letter, as `(f, g)` monomial data.
///
/// The positive rules are the affine Hecke relations; the inverse-letter
/// rules follow from `xᵢ₊₁ = σᵢ xᵢ σᵢ`:
///
/// ```text
/// σᵢ xᵢ     = xᵢ₊₁ σᵢ - ħ xᵢ₊₁
/// σᵢ xᵢ₊₁   = xᵢ σᵢ + ħ xᵢ₊₁
/// σᵢ xᵢ⁻¹   = xᵢ₊₁⁻¹ σᵢ + ħ xᵢ⁻¹
/// σᵢ xᵢ₊₁⁻¹ = xᵢ⁻¹ σᵢ - ħ xᵢ⁻¹
/// σᵢ xⱼ^±1  = xⱼ^±1 σᵢ                  (j ≠ i, i + 1)
/// ```
pub fn sigma_letter_rule<C: Coefficient>(kappa: usize, i: usize, j: usize, e: i32) -> (LaurentPoly<C>, LaurentPoly<C>) {
    debug_assert!(e == 1 || e == -1);
    let mono = |var: usize, e: i32| LaurentPoly::term(Monomial::var(kappa, var, e), ScalarPoly::one());
    let h = hbar::<C>();
    if j != i && j != i + 1 {
        return (mono(j, e), LaurentPoly::zero(kappa));
    }
    match (j == i, e > 0) {
        (true, true) => (mono(i + 1, 1), mono(i + 1, 1).scale(&-h)),
        (false, true) => (mono(i, 1), mono(i + 1, 1).scale(&h)),
        (true, false) => (mono(i + 1, -1), mono(i, -1).scale(&h)),
        (false, false) => (mono(i, -1), mono(i, -1).scale(&-h)),
    }
}

/// Moves `σᵢ` rightward through a product of single letters `xⱼ^±1`, given
/// left to right: returns `(f, g)` with `σᵢ · ∏ letters = f σᵢ + g`.
pub fn push_sigma_past_letters<C: Coefficient>(
    kappa: usize,
    i: usize,
    letters: &[(usize, i32)],
) -> Result<(LaurentPoly<C>, LaurentPoly<C>)> {
    check_index("sigma", i, kappa.saturating_sub(1), kappa)?;
    let mut f = LaurentPoly::one(kappa);
    let mut g = LaurentPoly::zero(kappa);
    for &(j, e) in letters {
        check_index("x", j, kappa, kappa)?;
        let (fl, gl) = sigma_letter_rule::<C>(kappa, i, j, e);
        g = g.mul_var(j, e)?.add(&f.mul(&gl)?)?;
        f = f.mul(&fl)?;
    }
    Ok((f, g))
}

/// `σᵢ · a^n = f σᵢ + g`, factoring `a^n` as `x₁^n₁ ⋯ xκ^nκ` one letter at a
/// time.
pub fn push_sigma_past_monomial<C: Coefficient>(i: usize, n: &Monomial) -> Result<(LaurentPoly<C>, LaurentPoly<C>)> {
    push_sigma_past_letters(n.rank(), i, &factor_monomial(n))
}

/// The letters of `x₁^n₁ ⋯ xκ^nκ`, left to right.
pub fn factor_monomial(n: &Monomial) -> Vec<(usize, i32)> {
    n.exponents()
        .iter()
        .enumerate()
        .flat_map(|(j, &e)| std::iter::repeat_n((j + 1, e.signum()), e.unsigned_abs() as usize))
        .collect()
}

pub fn rho_x<C: Coefficient>(i: usize, v: &SkeinElement<C>) -> Result<SkeinElement<C>> {
    rho_x_pow(i, 1, v)
}

fn rho_x_pow<C: Coefficient>(i: usize, e: i32, v: &SkeinElement<C>) -> Result<SkeinElement<C>> {
    check_index("x", i, v.kappa, v.kappa)?;
    Ok(SkeinElement {
        kappa: v.kappa,
        terms: v
            .terms
            .iter()
            .map(|(key, k)| {
                let mut mono = key.mono.clone();
                mono.bump(i, e);
                (
                    BasisKey {
                        mono,
                        perm: key.perm.clone(),
                    },
                    k.clone(),
                )
            })
            .collect(),
    })
}

/// `σᵢ · (1, σ)`.
pub fn rho_sigma_base<C: Coefficient>(i: usize, sigma: &Permutation) -> Result<SkeinElement<C>> {
    let kappa = sigma.kappa();
    let moved = sigma.compose_right(i)?;
    let one = Monomial::one(kappa);
    let mut out = SkeinElement::zero(kappa);
    if sigma.image(i) < sigma.image(i + 1) {
        out.add_term(BasisKey { mono: one, perm: moved }, ScalarPoly::d_pow(-1));
    } else {
        out.add_term(
            BasisKey {
                mono: one.clone(),
                perm: moved,
            },
            ScalarPoly::d(),
        );
        out.add_term(
            BasisKey {
                mono: one,
                perm: sigma.clone(),
            },
            hbar(),
        );
    }
    Ok(out)
}

pub fn rho_sigma<C: Coefficient>(i: usize, v: &SkeinElement<C>) -> Result<SkeinElement<C>> {
    check_index("sigma", i, v.kappa.saturating_sub(1), v.kappa)?;
    let mut out = SkeinElement::zero(v.kappa);
    for (key, k) in &v.terms {
        let (f, g) = push_sigma_past_monomial::<C>(i, &key.mono)?;
        let base = rho_sigma_base::<C>(i, &key.perm)?;
        out.add_assign(&base.mul_poly(&f)?.scale(k));
        out.add_assign(&SkeinElement::unit(key.perm.clone()).mul_poly(&g)?.scale(k));
    }
    Ok(out)
}

/// `σᵢ⁻¹ = σᵢ - ħ`.
pub fn rho_sigma_inv<C: Coefficient>(i: usize, v: &SkeinElement<C>) -> Result<SkeinElement<C>> {
    rho_sigma(i, v)?.sub(&v.scale(&hbar()))
}

/// The basis relabelling inside `y₁`:
/// `(a, σ) ↦ c^(2n₁) (aκ^n₁ a₁^n₂ ⋯ aκ₋₁^nκ, τκσ)`.
fn shift_basis<C: Coefficient>(v: &SkeinElement<C>) -> SkeinElement<C> {
    let mut out = SkeinElement::zero(v.kappa);
    for (key, k) in &v.terms {
        let n1 = key.mono.exponents()[0];
        out.add_term(
            BasisKey {
                mono: key.mono.rotate_for_omega(),
                perm: key.perm.tau_kappa_times(),
            },
            k.shift(0, 2 * n1, 0),
        );
    }
    out
}

fn shift_basis_inv<C: Coefficient>(v: &SkeinElement<C>) -> SkeinElement<C> {
    let mut out = SkeinElement::zero(v.kappa);
    for (key, k) in &v.terms {
        let nk = key.mono.exponents()[v.kappa - 1];
        out.add_term(
            BasisKey {
                mono: key.mono.rotate_for_omega_inv(),
                perm: key.perm.tau_kappa_inv_times(),
            },
            k.shift(0, -2 * nk, 0),
        );
    }
    out
}

/// `y₁ · (a, σ) = c^(2n₁) τκ⁻¹ · (a_τκ, τκσ)`, with `τκ⁻¹ = σ₁⁻¹ ⋯ σκ₋₁⁻¹`
/// acting `σκ₋₁⁻¹` first.
pub fn rho_y1<C: Coefficient>(v: &SkeinElement<C>) -> Result<SkeinElement<C>> {
    (1..v.kappa)
        .rev()
        .try_fold(shift_basis(v), |acc, j| rho_sigma_inv(j, &acc))
}

pub fn rho_y1_inv<C: Coefficient>(v: &SkeinElement<C>) -> Result<SkeinElement<C>> {
    let chained = (1..v.kappa).try_fold(v.clone(), |acc, j| rho_sigma(j, &acc))?;
    Ok(shift_basis_inv(&chained))
}

pub fn rho_word<C: Coefficient>(w: &GeneratorWord, v: &SkeinElement<C>) -> Result<SkeinElement<C>> {
    SkeinRep::new(w.kappa())?.act_word(w, v)
}

pub fn substitute_d_eq_s_elem<C: Coefficient>(v: &SkeinElement<C>) -> SkeinElement<C> {
    v.substitute_d_eq_s()
}

/// The enhanced polynomial representation at a fixed rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkeinRep {
    kappa: usize,
}

impl SkeinRep {
    pub fn new(kappa: usize) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self { kappa })
    }
}

impl<C: Coefficient> Representation<C> for SkeinRep {
    type Element = SkeinElement<C>;

    fn name(&self) -> &'static str {
        "skein"
    }

    fn kappa(&self) -> usize {
        self.kappa
    }

    fn zero(&self) -> SkeinElement<C> {
        SkeinElement::zero(self.kappa)
    }

    fn add(&self, a: &SkeinElement<C>, b: &SkeinElement<C>) -> Result<SkeinElement<C>> {
        a.add(b)
    }

    fn scale(&self, k: &ScalarPoly<C>, v: &SkeinElement<C>) -> SkeinElement<C> {
        v.scale(k)
    }

    fn rank_of(&self, v: &SkeinElement<C>) -> usize {
        v.kappa()
    }

    fn act_letter(&self, letter: GeneratorLetter, v: &SkeinElement<C>) -> Result<SkeinElement<C>> {
        letter.generator.check(self.kappa)?;
        match (letter.generator, letter.inverse) {
            (Generator::X(i), inv) => rho_x_pow(i, if inv { -1 } else { 1 }, v),
            (Generator::Sigma(i), false) => rho_sigma(i, v),
            (Generator::Sigma(i), true) => rho_sigma_inv(i, v),
            (Generator::Y(1), false) => rho_y1(v),
            (Generator::Y(1), true) => rho_y1_inv(v),
            (Generator::Y(_), _) => self.act_word(&expand_letter(letter, self.kappa)?, v),
        }
    }
}
