//! Sparse Laurent polynomials in `X1, ..., Xκ` over [`ScalarPoly`].
//!
//! Besides ring arithmetic this module provides the three operators the
//! polynomial representation is built from: the variable swap `τᵢ`, the shift
//! `ω f(X1..Xκ) = f(c²Xκ, X1, ..., Xκ₋₁)`, and exact division by
//! `Xᵢ Xᵢ₊₁⁻¹ - 1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::parse::{self, Expr, ExprRing};
use crate::scalars::ScalarPoly;

/// Exponent vector of a Laurent monomial, one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn one(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    pub fn new(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    /// The monomial `Xᵢ^e` (1-based `i`).
    pub fn var(rank: usize, i: usize, e: i32) -> Self {
        let mut m = Self::one(rank);
        m.0[i - 1] = e;
        m
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.rank(), other.rank());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn bump(&mut self, i: usize, e: i32) {
        self.0[i - 1] += e;
    }

    pub(crate) fn swap(&mut self, i: usize) {
        self.0.swap(i - 1, i);
    }

    /// Exponent rotation used by `ω`: `(n1, n2, ..., nκ) -> (n2, ..., nκ, n1)`.
    pub(crate) fn rotate_for_omega(&self) -> Monomial {
        let mut v = self.0.clone();
        v.rotate_left(1);
        Monomial(v)
    }

    pub(crate) fn rotate_for_omega_inv(&self) -> Monomial {
        let mut v = self.0.clone();
        v.rotate_right(1);
        Monomial(v)
    }

    /// `X1^n1*X2^n2` with the given variable letter; empty for the unit.
    pub(crate) fn render(&self, letter: char) -> String {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(j, &e)| parse::power(&format!("{letter}{}", j + 1), e))
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    rank: usize,
    terms: BTreeMap<Monomial, ScalarPoly<C>>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, ScalarPoly::one())
    }

    pub fn constant(rank: usize, k: ScalarPoly<C>) -> Self {
        Self::term(Monomial::one(rank), k)
    }

    pub fn term(m: Monomial, k: ScalarPoly<C>) -> Self {
        let mut out = Self::zero(m.rank());
        out.add_term(m, k);
        out
    }

    pub fn monomial(exps: &[i32]) -> Self {
        Self::term(Monomial::new(exps.to_vec()), ScalarPoly::one())
    }

    /// The variable `Xᵢ` (1-based).
    pub fn var(rank: usize, i: usize) -> Result<Self> {
        check_index("X", i, rank, rank)?;
        Ok(Self::term(Monomial::var(rank, i, 1), ScalarPoly::one()))
    }

    pub fn from_terms(rank: usize, pairs: impl IntoIterator<Item = (Monomial, ScalarPoly<C>)>) -> Result<Self> {
        let mut out = Self::zero(rank);
        for (m, k) in pairs {
            if m.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: m.rank(),
                });
            }
            out.add_term(m, k);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ScalarPoly<C>)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> ScalarPoly<C> {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, k: ScalarPoly<C>) {
        if k.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                v.add_assign_ref(&k);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, k);
            }
        }
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (m, k) in &other.terms {
            out.add_term(m.clone(), k.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (m, k) in &other.terms {
            out.add_term(m.clone(), -k);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (ma, ka) in &self.terms {
            for (mb, kb) in &other.terms {
                out.add_term(ma.times(mb), ka * kb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), -k)).collect(),
        }
    }

    pub fn scale(&self, k: &ScalarPoly<C>) -> Self {
        let mut out = Self::zero(self.rank);
        if k.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * k);
        }
        out
    }

    /// Multiplies by `Xᵢ^e`.
    pub fn mul_var(&self, i: usize, e: i32) -> Result<Self> {
        check_index("X", i, self.rank, self.rank)?;
        Ok(self.map_monomials(|m| m.bump(i, e)))
    }

    fn map_monomials(&self, mut f: impl FnMut(&mut Monomial)) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| {
                    let mut m = m.clone();
                    f(&mut m);
                    (m, k.clone())
                })
                .collect(),
        }
    }

    /// `τᵢ`: swaps `Xᵢ` and `Xᵢ₊₁`.
    pub fn apply_tau(&self, i: usize) -> Result<Self> {
        check_index("tau", i, self.rank.saturating_sub(1), self.rank)?;
        Ok(self.map_monomials(|m| m.swap(i)))
    }

    /// `ω`: `X1^n1 ⋯ Xκ^nκ ↦ c^(2 n1) Xκ^n1 X1^n2 ⋯ Xκ₋₁^nκ`.
    pub fn apply_omega(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for (m, k) in &self.terms {
            let n1 = m.exponents()[0];
            out.add_term(m.rotate_for_omega(), k.shift(0, 2 * n1, 0));
        }
        out
    }

    /// Inverse of [`apply_omega`](Self::apply_omega).
    pub fn apply_omega_inv(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for (m, k) in &self.terms {
            let nk = m.exponents()[self.rank - 1];
            out.add_term(m.rotate_for_omega_inv(), k.shift(0, -2 * nk, 0));
        }
        out
    }

    /// The divisor `Xᵢ Xᵢ₊₁⁻¹ - 1`.
    pub fn divisor(rank: usize, i: usize) -> Result<Self> {
        check_index("divisor", i, rank.saturating_sub(1), rank)?;
        let mut m = Monomial::one(rank);
        m.bump(i, 1);
        m.bump(i + 1, -1);
        let mut out = Self::term(m, ScalarPoly::one());
        out.add_term(Monomial::one(rank), -ScalarPoly::one());
        Ok(out)
    }

    /// Exact quotient of `self` by `Xᵢ Xᵢ₊₁⁻¹ - 1`.
    ///
    /// Monomials are grouped into chains `m · (Xᵢ Xᵢ₊₁⁻¹)^k` sharing every
    /// exponent except the split between positions `i` and `i + 1`. Each chain
    /// is a univariate Laurent polynomial in `Y = Xᵢ Xᵢ₊₁⁻¹`; dividing by
    /// `Y - 1` walks the chain from its top degree down, carrying the running
    /// coefficient sum. The chain is divisible iff that sum is zero at the
    /// bottom.
    pub fn exact_divide(&self, i: usize) -> Result<Self> {
        check_index("divisor", i, self.rank.saturating_sub(1), self.rank)?;
        // chain key: monomial with positions i, i+1 replaced by (0, nᵢ + nᵢ₊₁)
        let mut chains: BTreeMap<Monomial, BTreeMap<i32, &ScalarPoly<C>>> = BTreeMap::new();
        for (m, k) in &self.terms {
            let e = m.exponents();
            let (ni, nj) = (e[i - 1], e[i]);
            let mut key = m.clone();
            key.0[i - 1] = 0;
            key.0[i] = ni + nj;
            chains.entry(key).or_default().insert(ni, k);
        }

        let mut quotient = Self::zero(self.rank);
        for (key, chain) in chains {
            let total = key.0[i];
            let bottom = *chain.keys().next().expect("chains are nonempty");
            let mut carry = ScalarPoly::<C>::zero();
            let mut degrees = chain.iter().rev().peekable();
            let top = *degrees.peek().expect("chains are nonempty").0;
            for deg in (bottom..=top).rev() {
                if let Some((_, k)) = degrees.next_if(|(d, _)| **d == deg) {
                    carry.add_assign_ref(k);
                }
                if deg == bottom {
                    break;
                }
                if !carry.is_zero() {
                    let mut q = key.clone();
                    q.0[i - 1] = deg - 1;
                    q.0[i] = total - (deg - 1);
                    quotient.add_term(q, carry.clone());
                }
            }
            if !carry.is_zero() {
                return Err(Error::NotDivisible { index: i });
            }
        }

        debug_assert_eq!(
            quotient.mul(&Self::divisor(self.rank, i)?).as_ref().ok(),
            Some(self),
            "exact division multiply-back check failed"
        );
        Ok(quotient)
    }

    /// Applies `d -> s` to every coefficient.
    pub fn substitute_d_eq_s(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k.substitute_d_eq_s());
        }
        out
    }

    pub(crate) fn render(&self, letter: char) -> String {
        scalars_join(
            self.terms
                .iter()
                .rev()
                .map(|(m, k)| k.fmt_multiplier(&m.render(letter))),
        )
    }

    /// Parses the text format (`s*X1^2*X2^-1 + c^2*X2`) at the given rank.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let ctx = LaurentCtx { rank, letter: 'X' };
        parse::eval(&ctx, &parse::parse_expr(text)?)
    }

    /// Parses a polynomial in the skein variables `a1, ..., aκ`.
    pub(crate) fn from_expr_in(expr: &Expr, rank: usize, letter: char) -> Result<Self> {
        parse::eval(&LaurentCtx { rank, letter }, expr)
    }
}

fn scalars_join(parts: impl Iterator<Item = (bool, String)>) -> String {
    crate::scalars::join_signed(parts)
}

pub(crate) fn check_index(what: &'static str, index: usize, max: usize, kappa: usize) -> Result<()> {
    if (1..=max).contains(&index) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, index, kappa })
    }
}

pub fn lp_add<C: Coefficient>(f: &LaurentPoly<C>, g: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    f.add(g)
}

pub fn lp_mul<C: Coefficient>(f: &LaurentPoly<C>, g: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    f.mul(g)
}

pub fn apply_tau<C: Coefficient>(i: usize, f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    f.apply_tau(i)
}

pub fn apply_omega<C: Coefficient>(f: &LaurentPoly<C>) -> LaurentPoly<C> {
    f.apply_omega()
}

pub fn exact_divide<C: Coefficient>(f: &LaurentPoly<C>, i: usize) -> Result<LaurentPoly<C>> {
    f.exact_divide(i)
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('X'))
    }
}

impl<C: Coefficient> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({self})", self.rank)
    }
}

pub(crate) struct LaurentCtx {
    rank: usize,
    letter: char,
}

impl<C: Coefficient> ExprRing for LaurentPoly<C> {
    type Ctx = LaurentCtx;

    fn ring_int(ctx: &LaurentCtx, digits: &str) -> Result<Self> {
        Ok(Self::constant(ctx.rank, ScalarPoly::ring_int(&(), digits)?))
    }

    fn ring_var(ctx: &LaurentCtx, name: char, index: Option<usize>, exp: i32, pos: usize) -> Result<Self> {
        match index {
            Some(i) if name == ctx.letter => {
                check_index("X", i, ctx.rank, ctx.rank)?;
                Ok(Self::term(Monomial::var(ctx.rank, i, exp), ScalarPoly::one()))
            }
            _ => Ok(Self::constant(
                ctx.rank,
                ScalarPoly::ring_var(&(), name, index, exp, pos)?,
            )),
        }
    }

    fn ring_basis(_: &LaurentCtx, _: &Expr, _: &[usize], pos: usize) -> Result<Self> {
        Err(Error::parse(
            pos,
            "basis elements are not allowed in a Laurent polynomial",
        ))
    }

    fn ring_one(ctx: &LaurentCtx) -> Self {
        Self::one(ctx.rank)
    }

    fn ring_zero(ctx: &LaurentCtx) -> Self {
        Self::zero(ctx.rank)
    }

    fn ring_add(self, other: Self) -> Result<Self> {
        LaurentPoly::add(&self, &other)
    }

    fn ring_neg(self) -> Self {
        LaurentPoly::neg(&self)
    }

    fn ring_mul(self, other: Self, _: usize) -> Result<Self> {
        LaurentPoly::mul(&self, &other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = LaurentPoly<i64>;
    type S = ScalarPoly<i64>;

    fn lp(text: &str, rank: usize) -> L {
        L::parse(text, rank).unwrap()
    }

    #[test]
    fn addition() {
        let x1 = L::var(2, 1).unwrap();
        assert!(x1.add(&x1.neg()).unwrap().is_zero());
        assert_eq!(x1.add(&L::var(2, 2).unwrap()).unwrap().len(), 2);
        let merged = lp("s*X1", 2).add(&lp("s^-1*X1", 2)).unwrap();
        assert_eq!(merged, L::term(Monomial::var(2, 1, 1), "s + s^-1".parse().unwrap()));
    }

    #[test]
    fn multiplication() {
        assert_eq!(lp("X1", 2).mul(&lp("X1^-1", 2)).unwrap(), L::one(2));
        assert_eq!(lp("X1 - X2", 2).mul(&lp("X1 + X2", 2)).unwrap(), lp("X1^2 - X2^2", 2));
        let p = lp("c^2*X2", 2).mul(&lp("X1^-1", 2)).unwrap();
        assert_eq!(p, L::term(Monomial::new(vec![-1, 1]), S::c_pow(2)));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert_eq!(
            L::one(2).add(&L::one(3)),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
        assert!(L::one(2).mul(&L::one(1)).is_err());
    }

    #[test]
    fn tau_swaps_exponents() {
        assert_eq!(lp("X1", 2).apply_tau(1).unwrap(), lp("X2", 2));
        assert_eq!(lp("X1*X2", 2).apply_tau(1).unwrap(), lp("X1*X2", 2));
        assert_eq!(lp("X1^2*X2^-1", 2).apply_tau(1).unwrap(), lp("X1^-1*X2^2", 2));
        assert!(lp("X1", 2).apply_tau(2).is_err());
        assert!(lp("X1", 2).apply_tau(0).is_err());
    }

    #[test]
    fn omega_on_monomials() {
        assert_eq!(L::one(3).apply_omega(), L::one(3));
        assert_eq!(lp("X1^2*X2^-1", 2).apply_omega(), lp("c^4*X1^-1*X2^2", 2));
        assert_eq!(lp("X1^3*X2*X3^-2", 3).apply_omega(), lp("c^6*X1*X2^-2*X3^3", 3));
        assert_eq!(lp("X1^5", 1).apply_omega(), lp("c^10*X1^5", 1));
    }

    #[test]
    fn division_examples() {
        assert!(L::zero(2).exact_divide(1).unwrap().is_zero());
        assert_eq!(lp("X2 - X1", 2).exact_divide(1).unwrap(), lp("-X2", 2));
        assert_eq!(lp("X1 - X2", 2).exact_divide(1).unwrap(), lp("X2", 2));
    }

    #[test]
    fn division_with_gaps_in_a_chain() {
        // X1^2 X2^-2 - 1 = (Y - 1)(Y + 1) with Y = X1 X2^-1
        let q = lp("X1^2*X2^-2 - 1", 2).exact_divide(1).unwrap();
        assert_eq!(q, lp("X1*X2^-1 + 1", 2));
    }

    #[test]
    fn non_divisible_input_is_rejected() {
        assert_eq!(lp("X1", 2).exact_divide(1), Err(Error::NotDivisible { index: 1 }));
        assert!(lp("X1 - X3", 3).exact_divide(1).is_err());
        assert!(lp("X1 - X2", 2).exact_divide(2).is_err());
    }

    #[test]
    fn printing_and_parsing() {
        let f = lp("s*X1^2*X2^-1 + c^2*X2", 2);
        assert_eq!(f.to_string(), "s*X1^2*X2^-1 + c^2*X2");
        assert_eq!(lp("-X1 + (s + s^-1)*X2 - 2", 2).to_string(), "-X1 + (s + s^-1)*X2 - 2");
        assert_eq!(L::zero(3).to_string(), "0");
        assert_eq!(L::one(3).to_string(), "1");
        assert!(matches!(L::parse("X3", 2), Err(Error::IndexOutOfRange { .. })));
        assert!(L::parse("a1", 2).is_err());
    }
}
