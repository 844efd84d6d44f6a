//! Free-group words and their Magnus expansions truncated at degree two.
//!
//! The expansion sends `x_i` to `1 + h_i` and `x_i^-1` to `1 - h_i + h_i^2`
//! in the ring of noncommutative power series over the integers. Only the
//! constant, linear and quadratic parts are kept; every product is truncated
//! as soon as it is formed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use serde::Serialize;

/// One letter `x_var^exp` with `exp` in `{1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupLetter {
    pub var: usize,
    pub exp: i8,
}

impl GroupLetter {
    pub fn new(var: usize, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        GroupLetter { var, exp }
    }
}

/// A word in the generators `x_1, x_2, ...` and their inverses. Not reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GroupWord(Vec<GroupLetter>);

impl GroupWord {
    pub fn new(letters: Vec<GroupLetter>) -> Self {
        GroupWord(letters)
    }

    /// Builds a word from signed variable indices: `[2, -3]` is `x_2 x_3^-1`.
    pub fn from_signed(letters: &[i64]) -> Self {
        GroupWord(
            letters
                .iter()
                .map(|&l| GroupLetter::new(l.unsigned_abs() as usize, l.signum() as i8))
                .collect(),
        )
    }

    pub fn letters(&self) -> &[GroupLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when free reduction empties the word.
    pub fn is_trivial(&self) -> bool {
        let mut stack: Vec<GroupLetter> = Vec::new();
        for &l in &self.0 {
            match stack.last() {
                Some(top) if top.var == l.var && top.exp == -l.exp => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        stack.is_empty()
    }

    /// Exponent sum of variable `var`.
    pub fn exponent_sum(&self, var: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.var == var)
            .map(|l| l.exp as i64)
            .sum()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}^{}", l.var, if l.exp > 0 { "+1" } else { "-1" })?;
        }
        Ok(())
    }
}

/// A noncommutative polynomial in `h_1, h_2, ...` of degree at most two.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of series.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    constant: i64,
    linear: BTreeMap<usize, i64>,
    quadratic: BTreeMap<(usize, usize), i64>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Linear {
            var: usize,
            coeff: i64,
        }
        #[derive(Serialize)]
        struct Quadratic {
            first: usize,
            second: usize,
            coeff: i64,
        }
        #[derive(Serialize)]
        struct View {
            constant: i64,
            linear: Vec<Linear>,
            quadratic: Vec<Quadratic>,
        }
        View {
            constant: self.constant,
            linear: self.linear_terms().map(|(var, coeff)| Linear { var, coeff }).collect(),
            quadratic: self
                .quadratic_terms()
                .map(|((first, second), coeff)| Quadratic { first, second, coeff })
                .collect(),
        }
        .serialize(s)
    }
}

fn bump<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, delta: i64) {
    if delta == 0 {
        return;
    }
    *map.entry(key).or_insert(0) += delta;
}

fn prune<K: Ord>(map: &mut BTreeMap<K, i64>) {
    map.retain(|_, c| *c != 0);
}

impl TruncatedSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant_term(1)
    }

    pub fn constant_term(c: i64) -> Self {
        TruncatedSeries {
            constant: c,
            ..Self::default()
        }
    }

    /// The image of a single letter: `1 + h` or `1 - h + h^2`.
    pub fn of_letter(letter: GroupLetter) -> Self {
        let mut s = Self::one();
        if letter.exp > 0 {
            s.linear.insert(letter.var, 1);
        } else {
            s.linear.insert(letter.var, -1);
            s.quadratic.insert((letter.var, letter.var), 1);
        }
        s
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    /// Coefficient of `h_var`.
    pub fn linear(&self, var: usize) -> i64 {
        self.linear.get(&var).copied().unwrap_or(0)
    }

    /// Coefficient of the ordered monomial `h_first h_second`.
    pub fn quadratic(&self, first: usize, second: usize) -> i64 {
        self.quadratic.get(&(first, second)).copied().unwrap_or(0)
    }

    pub fn linear_terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.linear.iter().map(|(&k, &v)| (k, v))
    }

    pub fn quadratic_terms(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.quadratic.iter().map(|(&k, &v)| (k, v))
    }

    pub fn set_linear(&mut self, var: usize, coeff: i64) {
        self.linear.insert(var, coeff);
        prune(&mut self.linear);
    }

    pub fn set_quadratic(&mut self, first: usize, second: usize, coeff: i64) {
        self.quadratic.insert((first, second), coeff);
        prune(&mut self.quadratic);
    }

    /// Right-multiplies in place by the image of one letter, truncating.
    ///
    /// With `self = c + sum a_i h_i + ...` and the factor `1 + e h_v + q h_v^2`,
    /// the degree-two part gains `e a_i h_i h_v` and `c q h_v^2`.
    pub fn mul_letter(&mut self, letter: GroupLetter) {
        let v = letter.var;
        let e = letter.exp as i64;
        let q = if letter.exp < 0 { 1 } else { 0 };
        let c = self.constant;
        let lin: Vec<(usize, i64)> = self.linear_terms().collect();
        for (i, a) in lin {
            bump(&mut self.quadratic, (i, v), e * a);
        }
        bump(&mut self.quadratic, (v, v), c * q);
        bump(&mut self.linear, v, c * e);
        prune(&mut self.linear);
        prune(&mut self.quadratic);
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let (a0, b0) = (self.constant, rhs.constant);
        let mut out = TruncatedSeries::constant_term(a0 * b0);
        for (&i, &a) in &self.linear {
            bump(&mut out.linear, i, a * b0);
        }
        for (&i, &b) in &rhs.linear {
            bump(&mut out.linear, i, a0 * b);
        }
        for (&ij, &a) in &self.quadratic {
            bump(&mut out.quadratic, ij, a * b0);
        }
        for (&ij, &b) in &rhs.quadratic {
            bump(&mut out.quadratic, ij, a0 * b);
        }
        for (&i, &a) in &self.linear {
            for (&j, &b) in &rhs.linear {
                bump(&mut out.quadratic, (i, j), a * b);
            }
        }
        prune(&mut out.linear);
        prune(&mut out.quadratic);
        out
    }
}

impl Mul for TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self * &rhs
    }
}

/// Magnus expansion of `word`, truncated at degree two.
pub fn magnus_expand(word: &GroupWord) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one();
    for &letter in word.letters() {
        acc.mul_letter(letter);
    }
    acc
}

impl fmt::Display for TruncatedSeries {
    /// Canonical form: constant, then linear terms by variable, then
    /// quadratic terms by ordered pair, e.g. `1 + h2h3 - h3h2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, String)> = Vec::new();
        if self.constant != 0 {
            terms.push((self.constant, String::new()));
        }
        for (&i, &c) in &self.linear {
            terms.push((c, format!("h{i}")));
        }
        for (&(i, j), &c) in &self.quadratic {
            terms.push((c, format!("h{i}h{j}")));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (c, mono)) in terms.iter().enumerate() {
            let magnitude = c.unsigned_abs();
            if idx == 0 {
                if *c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if *c < 0 { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                f.write_str(mono)?;
            } else {
                write!(f, "{magnitude}{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_expands_to_one() {
        assert_eq!(magnus_expand(&GroupWord::default()), TruncatedSeries::one());
        assert_eq!(TruncatedSeries::one().to_string(), "1");
    }

    #[test]
    fn letter_times_inverse_is_one() {
        assert_eq!(magnus_expand(&GroupWord::from_signed(&[1, -1])), TruncatedSeries::one());
        assert_eq!(magnus_expand(&GroupWord::from_signed(&[-1, 1])), TruncatedSeries::one());
    }

    #[test]
    fn commutator_expansion() {
        let m = magnus_expand(&GroupWord::from_signed(&[-2, -3, 2, 3]));
        let mut expected = TruncatedSeries::one();
        expected.set_quadratic(2, 3, 1);
        expected.set_quadratic(3, 2, -1);
        assert_eq!(m, expected);
        assert_eq!(m.to_string(), "1 + h2h3 - h3h2");
    }

    #[test]
    fn inverse_letter_squares() {
        let m = magnus_expand(&GroupWord::from_signed(&[-1, -1]));
        assert_eq!(m.linear(1), -2);
        assert_eq!(m.quadratic(1, 1), 3);
        assert_eq!(m.to_string(), "1 - 2h1 + 3h1h1");
    }

    #[test]
    fn letterwise_agrees_with_product() {
        let w = GroupWord::from_signed(&[1, -2, 3, 3, -1, 2, -3]);
        let by_product = w
            .letters()
            .iter()
            .fold(TruncatedSeries::one(), |acc, &l| &acc * &TruncatedSeries::of_letter(l));
        assert_eq!(magnus_expand(&w), by_product);
    }

    #[test]
    fn display_zero_and_negative_lead() {
        assert_eq!(TruncatedSeries::zero().to_string(), "0");
        let mut s = TruncatedSeries::zero();
        s.set_linear(4, -1);
        s.set_quadratic(1, 2, 7);
        assert_eq!(s.to_string(), "-h4 + 7h1h2");
    }

    #[test]
    fn triviality() {
        assert!(GroupWord::from_signed(&[1, 2, -2, -1]).is_trivial());
        assert!(!GroupWord::from_signed(&[1, 2, -1, -2]).is_trivial());
    }
}
