//! The coefficient ring Z[s^±1, c^±1, d^±1].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::parse::{self, Expr, ExprRing};

/// Exponents of `s`, `c` and `d` in one monomial. Ordered lexicographically
/// by `(s, c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ScalarMonomial {
    pub s: i32,
    pub c: i32,
    pub d: i32,
}

impl ScalarMonomial {
    pub const ONE: Self = Self { s: 0, c: 0, d: 0 };

    pub fn new(s: i32, c: i32, d: i32) -> Self {
        Self { s, c, d }
    }

    fn times(self, other: Self) -> Self {
        Self {
            s: self.s + other.s,
            c: self.c + other.c,
            d: self.d + other.d,
        }
    }
}

/// A Laurent polynomial in `s`, `c`, `d` with integer coefficients, stored in
/// canonical sparse form: no zero coefficients, one entry per monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarPoly<C> {
    terms: BTreeMap<ScalarMonomial, C>,
}

impl<C: Coefficient> ScalarPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(k: C) -> Self {
        Self::term(ScalarMonomial::ONE, k)
    }

    pub fn from_int(k: i64) -> Self {
        Self::constant(C::from_int(k))
    }

    /// `k * s^es * c^ec * d^ed`.
    pub fn monomial(es: i32, ec: i32, ed: i32, k: C) -> Self {
        Self::term(ScalarMonomial::new(es, ec, ed), k)
    }

    pub fn term(m: ScalarMonomial, k: C) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(m, k);
        }
        Self { terms }
    }

    /// Builds from arbitrary `(monomial, coefficient)` pairs, merging repeats.
    pub fn from_terms(pairs: impl IntoIterator<Item = (ScalarMonomial, C)>) -> Self {
        let mut out = Self::zero();
        for (m, k) in pairs {
            out.add_term(m, k);
        }
        out
    }

    pub fn s() -> Self {
        Self::monomial(1, 0, 0, C::one())
    }

    pub fn c() -> Self {
        Self::monomial(0, 1, 0, C::one())
    }

    pub fn d() -> Self {
        Self::monomial(0, 0, 1, C::one())
    }

    pub fn s_pow(e: i32) -> Self {
        Self::monomial(e, 0, 0, C::one())
    }

    pub fn c_pow(e: i32) -> Self {
        Self::monomial(0, e, 0, C::one())
    }

    pub fn d_pow(e: i32) -> Self {
        Self::monomial(0, 0, e, C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ScalarMonomial::ONE).is_some_and(|k| k.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ScalarMonomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &ScalarMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub(crate) fn add_term(&mut self, m: ScalarMonomial, k: C) {
        if k.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.add_exact(&k);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, k);
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        for (m, k) in &other.terms {
            self.add_term(*m, k.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Self) {
        for (m, k) in &other.terms {
            self.add_term(*m, -k.clone());
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ka) in &self.terms {
            for (mb, kb) in &other.terms {
                out.add_term(ma.times(*mb), ka.mul_exact(kb));
            }
        }
        out
    }

    /// Multiplies by the unit `s^es c^ec d^ed`.
    pub fn shift(&self, es: i32, ec: i32, ed: i32) -> Self {
        let unit = ScalarMonomial::new(es, ec, ed);
        Self {
            terms: self.terms.iter().map(|(m, k)| (m.times(unit), k.clone())).collect(),
        }
    }

    /// True when no term involves `d`.
    pub fn is_d_free(&self) -> bool {
        self.terms.keys().all(|m| m.d == 0)
    }

    /// The specialization `d -> s`.
    pub fn substitute_d_eq_s(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, k)| (ScalarMonomial::new(m.s + m.d, m.c, 0), k.clone())),
        )
    }

    /// Evaluates at rational points. Returns `None` when a zero value is
    /// raised to a negative power.
    pub fn evaluate(&self, s: &Ratio<C>, c: &Ratio<C>, d: &Ratio<C>) -> Option<Ratio<C>> {
        let mut acc = Ratio::zero();
        for (m, k) in &self.terms {
            let v = ratio_pow(s, m.s)? * ratio_pow(c, m.c)? * ratio_pow(d, m.d)?;
            acc = acc + v * Ratio::from_integer(k.clone());
        }
        Some(acc)
    }
}

fn ratio_pow<C: Coefficient>(base: &Ratio<C>, e: i32) -> Option<Ratio<C>> {
    if e < 0 && base.is_zero() {
        return None;
    }
    let b = if e < 0 { base.recip() } else { base.clone() };
    Some((0..e.unsigned_abs()).fold(Ratio::one(), |acc, _| acc * b.clone()))
}

/// `ħ = s - s⁻¹`, the skein parameter.
pub fn hbar<C: Coefficient>() -> ScalarPoly<C> {
    let mut h = ScalarPoly::s();
    h.add_term(ScalarMonomial::new(-1, 0, 0), -C::one());
    h
}

pub fn scalar_add<C: Coefficient>(a: &ScalarPoly<C>, b: &ScalarPoly<C>) -> ScalarPoly<C> {
    let mut out = a.clone();
    out.add_assign_ref(b);
    out
}

pub fn scalar_mul<C: Coefficient>(a: &ScalarPoly<C>, b: &ScalarPoly<C>) -> ScalarPoly<C> {
    a.mul_ref(b)
}

pub fn substitute_d_eq_s<C: Coefficient>(a: &ScalarPoly<C>) -> ScalarPoly<C> {
    a.substitute_d_eq_s()
}

impl<C: Coefficient> Default for ScalarPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Add for ScalarPoly<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.add_assign_ref(&rhs);
        self
    }
}

impl<C: Coefficient> Add for &ScalarPoly<C> {
    type Output = ScalarPoly<C>;
    fn add(self, rhs: Self) -> ScalarPoly<C> {
        scalar_add(self, rhs)
    }
}

impl<C: Coefficient> Sub for ScalarPoly<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl<C: Coefficient> Sub for &ScalarPoly<C> {
    type Output = ScalarPoly<C>;
    fn sub(self, rhs: Self) -> ScalarPoly<C> {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<C: Coefficient> Neg for ScalarPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(m, k)| (m, -k)).collect(),
        }
    }
}

impl<C: Coefficient> Neg for &ScalarPoly<C> {
    type Output = ScalarPoly<C>;
    fn neg(self) -> ScalarPoly<C> {
        self.clone().neg()
    }
}

impl<C: Coefficient> Mul for ScalarPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<C: Coefficient> Mul for &ScalarPoly<C> {
    type Output = ScalarPoly<C>;
    fn mul(self, rhs: Self) -> ScalarPoly<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Coefficient> Zero for ScalarPoly<C> {
    fn zero() -> Self {
        ScalarPoly::zero()
    }
    fn is_zero(&self) -> bool {
        ScalarPoly::is_zero(self)
    }
}

impl<C: Coefficient> One for ScalarPoly<C> {
    fn one() -> Self {
        ScalarPoly::one()
    }
}

impl ScalarMonomial {
    /// `s^a*c^b*d^e`, or empty for the unit monomial.
    fn factors(&self) -> Vec<String> {
        [("s", self.s), ("c", self.c), ("d", self.d)]
            .into_iter()
            .filter(|(_, e)| *e != 0)
            .map(|(n, e)| parse::power(n, e))
            .collect()
    }
}

/// Formats `k * factors` for a nonnegative `k`.
pub(crate) fn fmt_term<C: Coefficient>(k: &C, factors: &[String]) -> String {
    if factors.is_empty() {
        k.to_string()
    } else if k.is_one() {
        factors.join("*")
    } else {
        format!("{k}*{}", factors.join("*"))
    }
}

impl<C: Coefficient> ScalarPoly<C> {
    /// The single `(monomial, coefficient)` pair, if there is exactly one.
    pub(crate) fn as_single_term(&self) -> Option<(&ScalarMonomial, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Renders this scalar as a multiplier in front of `rest`, returning the
    /// sign separately so callers can join terms with ` + ` / ` - `.
    pub(crate) fn fmt_multiplier(&self, rest: &str) -> (bool, String) {
        if let Some((m, k)) = self.as_single_term() {
            let mut factors = m.factors();
            if !rest.is_empty() {
                factors.push(rest.to_string());
            }
            (k.is_negative(), fmt_term(&k.abs(), &factors))
        } else if rest.is_empty() {
            (false, format!("({self})"))
        } else {
            (false, format!("({self})*{rest}"))
        }
    }
}

/// Joins `(negative, body)` pairs into `a + b - c`.
pub(crate) fn join_signed(parts: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Terms in descending `(s, c, d)` order, e.g. `s^2 - 2 + s^-2`.
impl<C: Coefficient> fmt::Display for ScalarPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .terms
            .iter()
            .rev()
            .map(|(m, k)| (k.is_negative(), fmt_term(&k.abs(), &m.factors())));
        f.write_str(&join_signed(parts))
    }
}

impl<C: Coefficient> fmt::Debug for ScalarPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarPoly({self})")
    }
}

impl<C: Coefficient> ExprRing for ScalarPoly<C> {
    type Ctx = ();

    fn ring_int(_: &(), digits: &str) -> Result<Self> {
        C::parse_decimal(digits)
            .map(Self::constant)
            .ok_or_else(|| Error::parse(0, format!("integer {digits} out of range")))
    }

    fn ring_var(_: &(), name: char, index: Option<usize>, exp: i32, pos: usize) -> Result<Self> {
        match (name, index) {
            ('s', None) => Ok(Self::s_pow(exp)),
            ('c', None) => Ok(Self::c_pow(exp)),
            ('d', None) => Ok(Self::d_pow(exp)),
            _ => Err(Error::parse(
                pos,
                format!(
                    "unknown scalar variable {name}{}",
                    index.map(|i| i.to_string()).unwrap_or_default()
                ),
            )),
        }
    }

    fn ring_basis(_: &(), _: &Expr, _: &[usize], pos: usize) -> Result<Self> {
        Err(Error::parse(pos, "basis elements are not allowed in a scalar"))
    }

    fn ring_one(_: &()) -> Self {
        ScalarPoly::one()
    }

    fn ring_zero(_: &()) -> Self {
        ScalarPoly::zero()
    }

    fn ring_add(self, other: Self) -> Result<Self> {
        Ok(self + other)
    }

    fn ring_neg(self) -> Self {
        -self
    }

    fn ring_mul(self, other: Self, _: usize) -> Result<Self> {
        Ok(self * other)
    }
}

impl<C: Coefficient> FromStr for ScalarPoly<C> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse::eval(&(), &parse::parse_expr(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = ScalarPoly<i64>;

    fn p(text: &str) -> S {
        text.parse().unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!(scalar_add(&S::s(), &-S::s()).is_zero());
    }

    #[test]
    fn s_plus_s_inverse_has_two_terms() {
        let sum = scalar_add(&S::s(), &S::s_pow(-1));
        assert_eq!(sum.len(), 2);
        assert_eq!(sum.coefficient(&ScalarMonomial::new(1, 0, 0)), 1);
        assert_eq!(sum.coefficient(&ScalarMonomial::new(-1, 0, 0)), 1);
    }

    #[test]
    fn hbar_plus_s_inverse_is_s() {
        assert_eq!(scalar_add(&hbar(), &S::s_pow(-1)), S::s());
        assert_eq!(hbar::<i64>(), p("s - s^-1"));
    }

    #[test]
    fn unit_inverse() {
        assert!(scalar_mul(&S::c_pow(2), &S::c_pow(-2)).is_one());
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p("(s - s^-1)*(s + s^-1)"), p("s^2 - s^-2"));
    }

    #[test]
    fn hbar_squared() {
        let h: S = hbar();
        let sq = &h * &h;
        assert_eq!(
            sq,
            S::from_terms([
                (ScalarMonomial::new(2, 0, 0), 1),
                (ScalarMonomial::ONE, -2),
                (ScalarMonomial::new(-2, 0, 0), 1),
            ])
        );
        assert_eq!(sq.to_string(), "s^2 - 2 + s^-2");
    }

    #[test]
    fn hbar_vanishes_at_s_equal_one() {
        let one = Ratio::from_integer(1i64);
        assert_eq!(hbar::<i64>().evaluate(&one, &one, &one), Some(Ratio::zero()));
        let two = Ratio::from_integer(2i64);
        assert_eq!(hbar::<i64>().evaluate(&two, &one, &one), Some(Ratio::new(3, 2)));
        let zero = Ratio::zero();
        assert_eq!(hbar::<i64>().evaluate(&zero, &one, &one), None);
    }

    #[test]
    fn d_to_s() {
        assert_eq!(S::d().substitute_d_eq_s(), S::s());
        assert!(p("d^-1*s").substitute_d_eq_s().is_one());
        assert_eq!(p("c^2*d^3*s^-1").substitute_d_eq_s(), p("c^2*s^2"));
        assert!(p("d - s").substitute_d_eq_s().is_zero());
    }

    #[test]
    fn printing() {
        assert_eq!(S::zero().to_string(), "0");
        assert_eq!(S::one().to_string(), "1");
        assert_eq!(p("-s").to_string(), "-s");
        assert_eq!(p("3*c^-2*d - 2").to_string(), "-2 + 3*c^-2*d");
        assert_eq!(p("s*c*d").to_string(), "s*c*d");
        assert_eq!(p("(s+1)^2").to_string(), "s^2 + 2*s + 1");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!("s + x".parse::<S>(), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!("s^".parse::<S>(), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!("(s, [1])".parse::<S>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn integer_range_is_checked_on_parse() {
        assert!("99999999999999999999".parse::<S>().is_err());
        let big: ScalarPoly<BigInt> = "99999999999999999999*s".parse().unwrap();
        assert_eq!(big.to_string(), "99999999999999999999*s");
    }
}
