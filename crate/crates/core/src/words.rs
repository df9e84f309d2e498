//! Words in the DAHA generators `σᵢ^±1`, `xᵢ^±1`, `yᵢ^±1`.
//!
//! Words are plain letter sequences. They carry no normal form; their meaning
//! comes from a representation acting on them (rightmost letter first).

use std::fmt;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::scalars::{hbar, ScalarPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `σᵢ`, `1 <= i <= κ - 1`.
    Sigma(usize),
    /// `xᵢ`, `1 <= i <= κ`.
    X(usize),
    /// `yᵢ`, `1 <= i <= κ`.
    Y(usize),
}

impl Generator {
    pub fn index(self) -> usize {
        match self {
            Generator::Sigma(i) | Generator::X(i) | Generator::Y(i) => i,
        }
    }

    fn symbol(self) -> char {
        match self {
            Generator::Sigma(_) => 's',
            Generator::X(_) => 'x',
            Generator::Y(_) => 'y',
        }
    }

    pub fn check(self, kappa: usize) -> Result<()> {
        let (what, max) = match self {
            Generator::Sigma(_) => ("sigma", kappa.saturating_sub(1)),
            Generator::X(_) => ("x", kappa),
            Generator::Y(_) => ("y", kappa),
        };
        crate::laurent::check_index(what, self.index(), max, kappa)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorLetter {
    pub generator: Generator,
    pub inverse: bool,
}

impl GeneratorLetter {
    pub fn new(generator: Generator, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn sigma(i: usize) -> Self {
        Self::new(Generator::Sigma(i), false)
    }

    pub fn sigma_inv(i: usize) -> Self {
        Self::new(Generator::Sigma(i), true)
    }

    pub fn x(i: usize) -> Self {
        Self::new(Generator::X(i), false)
    }

    pub fn x_inv(i: usize) -> Self {
        Self::new(Generator::X(i), true)
    }

    pub fn y(i: usize) -> Self {
        Self::new(Generator::Y(i), false)
    }

    pub fn y_inv(i: usize) -> Self {
        Self::new(Generator::Y(i), true)
    }

    pub fn inverted(self) -> Self {
        Self::new(self.generator, !self.inverse)
    }

    /// `+1` or `-1`.
    pub fn exponent(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for GeneratorLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.generator.symbol(), self.generator.index())?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    kappa: usize,
    letters: Vec<GeneratorLetter>,
}

impl GeneratorWord {
    pub fn identity(kappa: usize) -> Self {
        Self {
            kappa,
            letters: Vec::new(),
        }
    }

    pub fn new(kappa: usize, letters: Vec<GeneratorLetter>) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::ZeroRank);
        }
        for l in &letters {
            l.generator.check(kappa)?;
        }
        Ok(Self { kappa, letters })
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn letters(&self) -> &[GeneratorLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &GeneratorWord) -> Result<Self> {
        if self.kappa != other.kappa {
            return Err(Error::RankMismatch {
                left: self.kappa,
                right: other.kappa,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            kappa: self.kappa,
            letters,
        })
    }

    /// The group inverse: reversed letters, each inverted.
    pub fn inverse(&self) -> Self {
        Self {
            kappa: self.kappa,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Parses `s1 * y1^-1 * x2`. An exponent `^n` expands to `|n|` copies of
    /// the letter, inverted when `n < 0`; `^0` contributes nothing.
    pub fn parse(text: &str, kappa: usize) -> Result<Self> {
        parse_word(text, kappa)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn parse_word(text: &str, kappa: usize) -> Result<GeneratorWord> {
    if kappa == 0 {
        return Err(Error::ZeroRank);
    }
    let bytes = text.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let read_uint = |i: &mut usize| -> Option<(usize, usize)> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        (*i > start).then_some((start, *i))
    };

    skip_ws(&mut i);
    if i == bytes.len() {
        return Ok(GeneratorWord::identity(kappa));
    }
    loop {
        skip_ws(&mut i);
        let pos = i;
        let make: fn(usize) -> Generator = match bytes.get(i) {
            Some(b's') => Generator::Sigma,
            Some(b'x') => Generator::X,
            Some(b'y') => Generator::Y,
            Some(_) => return Err(Error::parse(pos, "expected a letter s<i>, x<i> or y<i>")),
            None => return Err(Error::parse(pos, "unexpected end of word")),
        };
        i += 1;
        let (a, b) = read_uint(&mut i).ok_or_else(|| Error::parse(i, "expected generator index"))?;
        let index: usize = text[a..b].parse().map_err(|_| Error::parse(a, "index too large"))?;
        let generator = make(index);
        generator.check(kappa)?;
        skip_ws(&mut i);
        let mut exp: i64 = 1;
        if bytes.get(i) == Some(&b'^') {
            i += 1;
            skip_ws(&mut i);
            let neg = match bytes.get(i) {
                Some(b'-') => {
                    i += 1;
                    true
                }
                Some(b'+') => {
                    i += 1;
                    false
                }
                _ => false,
            };
            let (a, b) = read_uint(&mut i).ok_or_else(|| Error::parse(i, "expected integer exponent"))?;
            let n: i64 = text[a..b]
                .parse()
                .ok()
                .filter(|n| *n <= 1 << 20)
                .ok_or_else(|| Error::parse(a, "exponent too large"))?;
            exp = if neg { -n } else { n };
        }
        let letter = GeneratorLetter::new(generator, exp < 0);
        letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        skip_ws(&mut i);
        match bytes.get(i) {
            None => break,
            Some(b'*') => i += 1,
            Some(_) => return Err(Error::parse(i, "expected '*' between letters")),
        }
    }
    Ok(GeneratorWord { kappa, letters })
}

fn conjugation_chain(i: usize, kappa: usize, core: GeneratorLetter) -> Result<GeneratorWord> {
    core.generator.check(kappa)?;
    let mut letters: Vec<_> = (1..i).rev().map(GeneratorLetter::sigma).collect();
    letters.push(GeneratorLetter::new(
        match core.generator {
            Generator::X(_) => Generator::X(1),
            Generator::Y(_) => Generator::Y(1),
            Generator::Sigma(_) => unreachable!("only x and y are expanded"),
        },
        false,
    ));
    letters.extend((1..i).map(GeneratorLetter::sigma));
    GeneratorWord::new(kappa, letters)
}

/// `xᵢ = σᵢ₋₁ ⋯ σ₁ x₁ σ₁ ⋯ σᵢ₋₁`.
pub fn expand_xi(i: usize, kappa: usize) -> Result<GeneratorWord> {
    conjugation_chain(i, kappa, GeneratorLetter::x(i))
}

/// `yᵢ = σᵢ₋₁ ⋯ σ₁ y₁ σ₁ ⋯ σᵢ₋₁`.
pub fn expand_yi(i: usize, kappa: usize) -> Result<GeneratorWord> {
    conjugation_chain(i, kappa, GeneratorLetter::y(i))
}

/// Rewrites a single letter over `{σⱼ^±1, x₁^±1, y₁^±1}`; inverse letters
/// expand to the inverse word.
pub fn expand_letter(letter: GeneratorLetter, kappa: usize) -> Result<GeneratorWord> {
    let forward = match letter.generator {
        Generator::X(i) if i > 1 => expand_xi(i, kappa)?,
        Generator::Y(i) if i > 1 => expand_yi(i, kappa)?,
        _ => return GeneratorWord::new(kappa, vec![letter]),
    };
    Ok(if letter.inverse { forward.inverse() } else { forward })
}

/// A formal `Z[s^±1, c^±1, d^±1]`-linear combination of words.
#[derive(Clone, PartialEq, Eq)]
pub struct WordCombination<C> {
    pub terms: Vec<(ScalarPoly<C>, GeneratorWord)>,
}

impl<C: Coefficient> WordCombination<C> {
    pub fn word(w: GeneratorWord) -> Self {
        Self {
            terms: vec![(ScalarPoly::one(), w)],
        }
    }

    pub fn scaled(k: ScalarPoly<C>, w: GeneratorWord) -> Self {
        Self { terms: vec![(k, w)] }
    }
}

impl<C: Coefficient> fmt::Display for WordCombination<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (k, w)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let body = if w.is_empty() { "1".to_string() } else { w.to_string() };
            if k.is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "({k})·{body}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for WordCombination<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WordCombination({self})")
    }
}

/// One instance of a defining relation `lhs = rhs`, numbered 1 to 9.
#[derive(Clone, PartialEq, Eq)]
pub struct RelationPair<C> {
    pub label: u8,
    pub lhs: WordCombination<C>,
    pub rhs: WordCombination<C>,
}

impl<C: Coefficient> fmt::Display for RelationPair<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {} = {}", self.label, self.lhs, self.rhs)
    }
}

impl<C: Coefficient> fmt::Debug for RelationPair<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelationPair{self}")
    }
}

/// Every instance of the nine defining relations valid at rank `kappa`:
///
/// 1. `σᵢσⱼ = σⱼσᵢ` for `|i - j| > 1`
/// 2. `σᵢσᵢ₊₁σᵢ = σᵢ₊₁σᵢσᵢ₊₁`
/// 3. `σᵢx₁ = x₁σᵢ` for `i > 1`
/// 4. `σᵢy₁ = y₁σᵢ` for `i > 1`
/// 5. `x₁σ₁x₁σ₁ = σ₁x₁σ₁x₁`
/// 6. `y₁σ₁y₁σ₁ = σ₁y₁σ₁y₁`
/// 7. `x₁σ₁y₁σ₁⁻¹ = σ₁y₁σ₁x₁`
/// 8. `(σ₁ - s)(σ₁ + s⁻¹) = 0`, stored as `σ₁σ₁ = ħσ₁ + 1`
/// 9. `x₁⁻¹y₁x₁y₁⁻¹ = c²σ₁σ₂⋯σκ₋₁σκ₋₁⋯σ₂σ₁`
pub fn relation_table<C: Coefficient>(kappa: usize) -> Result<Vec<RelationPair<C>>> {
    use GeneratorLetter as L;
    let w = |letters: Vec<GeneratorLetter>| GeneratorWord::new(kappa, letters);
    let eq = |label: u8, lhs: Vec<GeneratorLetter>, rhs: Vec<GeneratorLetter>| -> Result<RelationPair<C>> {
        Ok(RelationPair {
            label,
            lhs: WordCombination::word(w(lhs)?),
            rhs: WordCombination::word(w(rhs)?),
        })
    };
    if kappa == 0 {
        return Err(Error::ZeroRank);
    }
    let n = kappa - 1;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 2)..=n {
            out.push(eq(1, vec![L::sigma(i), L::sigma(j)], vec![L::sigma(j), L::sigma(i)])?);
        }
    }
    for i in 1..n {
        out.push(eq(
            2,
            vec![L::sigma(i), L::sigma(i + 1), L::sigma(i)],
            vec![L::sigma(i + 1), L::sigma(i), L::sigma(i + 1)],
        )?);
    }
    for i in 2..=n {
        out.push(eq(3, vec![L::sigma(i), L::x(1)], vec![L::x(1), L::sigma(i)])?);
    }
    for i in 2..=n {
        out.push(eq(4, vec![L::sigma(i), L::y(1)], vec![L::y(1), L::sigma(i)])?);
    }
    if kappa >= 2 {
        out.push(eq(
            5,
            vec![L::x(1), L::sigma(1), L::x(1), L::sigma(1)],
            vec![L::sigma(1), L::x(1), L::sigma(1), L::x(1)],
        )?);
        out.push(eq(
            6,
            vec![L::y(1), L::sigma(1), L::y(1), L::sigma(1)],
            vec![L::sigma(1), L::y(1), L::sigma(1), L::y(1)],
        )?);
        out.push(eq(
            7,
            vec![L::x(1), L::sigma(1), L::y(1), L::sigma_inv(1)],
            vec![L::sigma(1), L::y(1), L::sigma(1), L::x(1)],
        )?);
        out.push(RelationPair {
            label: 8,
            lhs: WordCombination::word(w(vec![L::sigma(1), L::sigma(1)])?),
            rhs: WordCombination {
                terms: vec![
                    (hbar(), w(vec![L::sigma(1)])?),
                    (ScalarPoly::one(), GeneratorWord::identity(kappa)),
                ],
            },
        });
    }
    let mut rhs9: Vec<_> = (1..=n).map(L::sigma).collect();
    rhs9.extend((1..=n).rev().map(L::sigma));
    out.push(RelationPair {
        label: 9,
        lhs: WordCombination::word(w(vec![L::x_inv(1), L::y(1), L::x(1), L::y_inv(1)])?),
        rhs: WordCombination::scaled(ScalarPoly::c_pow(2), w(rhs9)?),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorLetter as L;

    #[test]
    fn parses_letters_left_to_right() {
        let w = parse_word("s1 * y1^-1 * x2", 2).unwrap();
        assert_eq!(w.letters(), &[L::sigma(1), L::y_inv(1), L::x(2)]);
    }

    #[test]
    fn empty_text_is_identity() {
        assert_eq!(parse_word("", 3).unwrap(), GeneratorWord::identity(3));
        assert_eq!(parse_word("  ", 3).unwrap(), GeneratorWord::identity(3));
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        assert!(matches!(
            parse_word("x3", 2),
            Err(Error::IndexOutOfRange {
                what: "x",
                index: 3,
                kappa: 2
            })
        ));
        assert!(parse_word("s2", 2).is_err());
        assert!(parse_word("s0", 3).is_err());
    }

    #[test]
    fn powers_expand() {
        let w = parse_word("x1^3*s1^-2*y2^0", 2).unwrap();
        assert_eq!(
            w.letters(),
            &[L::x(1), L::x(1), L::x(1), L::sigma_inv(1), L::sigma_inv(1)]
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(parse_word("s1 s1", 2), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_word("s1 * ", 2), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_word("z1", 2), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_word("s", 2), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_word("s1^", 2), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn display_round_trips() {
        let w = parse_word("x1^-1*y1*x1*y1^-1", 2).unwrap();
        assert_eq!(w.to_string(), "x1^-1 * y1 * x1 * y1^-1");
        assert_eq!(parse_word(&w.to_string(), 2).unwrap(), w);
    }

    #[test]
    fn expansions() {
        assert_eq!(expand_xi(1, 3).unwrap().letters(), &[L::x(1)]);
        assert_eq!(expand_xi(2, 2).unwrap().letters(), &[L::sigma(1), L::x(1), L::sigma(1)]);
        assert_eq!(
            expand_xi(3, 3).unwrap().letters(),
            &[L::sigma(2), L::sigma(1), L::x(1), L::sigma(1), L::sigma(2)]
        );
        assert_eq!(expand_yi(1, 2).unwrap().letters(), &[L::y(1)]);
        assert_eq!(expand_yi(2, 2).unwrap().letters(), &[L::sigma(1), L::y(1), L::sigma(1)]);
        assert_eq!(
            expand_yi(3, 4).unwrap().letters(),
            &[L::sigma(2), L::sigma(1), L::y(1), L::sigma(1), L::sigma(2)]
        );
        assert!(expand_xi(3, 2).is_err());
    }

    #[test]
    fn inverse_letters_expand_to_inverse_words() {
        let w = expand_letter(L::y_inv(2), 2).unwrap();
        assert_eq!(w.letters(), &[L::sigma_inv(1), L::y_inv(1), L::sigma_inv(1)]);
    }

    #[test]
    fn relation_table_instances() {
        let t3 = relation_table::<i64>(3).unwrap();
        let r2: Vec<_> = t3.iter().filter(|r| r.label == 2).collect();
        assert_eq!(r2.len(), 1);
        assert_eq!(r2[0].lhs.terms[0].1.letters(), &[L::sigma(1), L::sigma(2), L::sigma(1)]);
        assert_eq!(r2[0].rhs.terms[0].1.letters(), &[L::sigma(2), L::sigma(1), L::sigma(2)]);

        let t2 = relation_table::<i64>(2).unwrap();
        let r9 = t2.iter().find(|r| r.label == 9).unwrap();
        assert_eq!(
            r9.lhs.terms[0].1.letters(),
            &[L::x_inv(1), L::y(1), L::x(1), L::y_inv(1)]
        );
        assert_eq!(r9.rhs.terms[0].0, ScalarPoly::c_pow(2));
        assert_eq!(r9.rhs.terms[0].1.letters(), &[L::sigma(1), L::sigma(1)]);

        let t4 = relation_table::<i64>(4).unwrap();
        let r1: Vec<_> = t4
            .iter()
            .filter(|r| r.label == 1)
            .map(|r| r.lhs.terms[0].1.letters().to_vec())
            .collect();
        let expected: Vec<Vec<GeneratorLetter>> = vec![vec![L::sigma(1), L::sigma(3)]];
        assert_eq!(r1, expected);
        assert_eq!(t4.iter().filter(|r| r.label == 3).count(), 2);
    }

    #[test]
    fn rank_one_table_is_the_degenerate_relation() {
        let t = relation_table::<i64>(1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].label, 9);
        assert!(t[0].rhs.terms[0].1.is_empty());
    }
}
