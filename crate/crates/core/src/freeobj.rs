//! Words in free monoids and freely reduced words in free groups.
//!
//! Letters are indexed from zero internally and printed from one (`x1`, `x2`, ...).
//! Both word types order themselves by length first and then lexicographically
//! (deglex); that order is the tie-breaker used for leading terms everywhere else.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    n: usize,
    names: Option<Vec<String>>,
}

impl Alphabet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("an alphabet needs at least one letter".into()));
        }
        Ok(Self { n, names: None })
    }

    pub fn with_names(names: Vec<String>) -> Result<Self> {
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::Precondition("letter names must be distinct".into()));
        }
        Ok(Self { n: Self::new(names.len())?.n, names: Some(names) })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => format!("x{}", i + 1),
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&i| i >= self.n) {
            Some(&i) => Err(Error::AlphabetMismatch { letter: i + 1, size: self.n }),
            None => Ok(()),
        }
    }

    pub fn check_group_word(&self, w: &GroupWord) -> Result<()> {
        match w.0.iter().find(|l| l.gen >= self.n) {
            Some(l) => Err(Error::AlphabetMismatch { letter: l.gen + 1, size: self.n }),
            None => Ok(()),
        }
    }

    pub fn concat(&self, u: &Word, v: &Word) -> Result<Word> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(u.concat(v))
    }

    pub fn group_mul(&self, u: &GroupWord, v: &GroupWord) -> Result<GroupWord> {
        self.check_group_word(u)?;
        self.check_group_word(v)?;
        Ok(u.mul(v))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.0.iter().map(|&i| self.name(i)).collect::<Vec<_>>().join(" ")
    }

    pub fn format_group_word(&self, w: &GroupWord) -> String {
        if w.is_identity() {
            return "1".into();
        }
        w.0.iter()
            .map(|l| if l.inv { format!("{}^-1", self.name(l.gen)) } else { self.name(l.gen) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Element of the free monoid: a sequence of letter indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }

    pub fn to_group_word(&self) -> GroupWord {
        GroupWord(self.0.iter().map(|&g| Letter::pos(g)).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_letters(s)?;
        if let Some(l) = raw.iter().find(|l| l.inv) {
            return Err(Error::Parse(format!("monoid word contains inverse letter x{}^-1", l.gen + 1)));
        }
        Ok(Word(raw.into_iter().map(|l| l.gen).collect()))
    }
}

/// A generator or its inverse. Ordered `x1 < x1^-1 < x2 < x2^-1 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, inv: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inv: true }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inv != other.inv
    }
}

/// Freely reduced word in the free group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord(Vec<Letter>);

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn generator(gen: usize) -> Self {
        GroupWord(vec![Letter::pos(gen)])
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(raw: &[Letter]) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
        for &l in raw {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        GroupWord(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_reduced(letters: &[Letter]) -> bool {
        letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        let mut k = 0;
        while k < self.0.len() && k < other.0.len() && self.0[self.0.len() - 1 - k].cancels(other.0[k]) {
            k += 1;
        }
        let mut v = Vec::with_capacity(self.0.len() + other.0.len() - 2 * k);
        v.extend_from_slice(&self.0[..self.0.len() - k]);
        v.extend_from_slice(&other.0[k..]);
        GroupWord(v)
    }

    pub fn inv(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, k: i64) -> GroupWord {
        let base = if k < 0 { self.inv() } else { self.clone() };
        (0..k.unsigned_abs()).fold(GroupWord::identity(), |acc, _| acc.mul(&base))
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(a: &GroupWord, b: &GroupWord) -> GroupWord {
        a.inv().mul(&b.inv()).mul(a).mul(b)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.inv)
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    pub fn push_reduced(&self, l: Letter) -> Option<GroupWord> {
        match self.0.last() {
            Some(&last) if last.cancels(l) => None,
            _ => {
                let mut v = self.0.clone();
                v.push(l);
                Some(GroupWord(v))
            }
        }
    }
}

impl Ord for GroupWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GroupWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.gen + 1)?;
            if l.inv {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(GroupWord::reduce(&parse_letters(s)?))
    }
}

impl Serialize for GroupWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Token syntax: `x3`, `x3^-1`, `x3^2`; the aliases `x`/`u`/`a` and `y`/`v`/`b`
/// stand for the first and second letter; `1` is the empty word.
fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => {
                let e: i64 = e.parse().map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
                (b, e)
            }
            None => (tok, 1),
        };
        let gen = match base {
            "x" | "u" | "a" => 0,
            "y" | "v" | "b" => 1,
            _ => {
                let idx = base
                    .strip_prefix('x')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| Error::Parse(format!("bad letter {tok:?}")))?;
                idx - 1
            }
        };
        let l = if exp < 0 { Letter::neg(gen) } else { Letter::pos(gen) };
        out.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
    }
    Ok(out)
}

/// ω(a₁, …, aₙ) in any monoid given by its identity and product.
pub fn evaluate_word<T: Clone>(
    w: &Word,
    args: &[T],
    arity: usize,
    identity: T,
    mul: impl Fn(&T, &T) -> T,
) -> Result<T> {
    if args.len() != arity {
        return Err(Error::Arity { expected: arity, found: args.len() });
    }
    if let Some(i) = w.max_letter() {
        if i >= arity {
            return Err(Error::AlphabetMismatch { letter: i + 1, size: arity });
        }
    }
    Ok(w.0.iter().fold(identity, |acc, &i| mul(&acc, &args[i])))
}

/// Evaluation of a group word; `inverses[i]` is the inverse of `args[i]`.
pub fn evaluate_group_word<T: Clone>(
    w: &GroupWord,
    args: &[T],
    inverses: &[T],
    identity: T,
    mul: impl Fn(&T, &T) -> T,
) -> Result<T> {
    if inverses.len() != args.len() {
        return Err(Error::Arity { expected: args.len(), found: inverses.len() });
    }
    if let Some(i) = w.max_gen() {
        if i >= args.len() {
            return Err(Error::AlphabetMismatch { letter: i + 1, size: args.len() });
        }
    }
    Ok(w.0.iter().fold(identity, |acc, l| {
        let x = if l.inv { &inverses[l.gen] } else { &args[l.gen] };
        mul(&acc, x)
    }))
}

/// All words of length at most `max_len`, in deglex order.
pub fn enumerate_words(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::one()];
    let mut layer = vec![Word::one()];
    for _ in 0..max_len {
        let next: Vec<Word> = layer
            .iter()
            .flat_map(|w| (0..n).map(move |i| w.concat(&Word::letter(i))))
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Nonempty words of length at most `max_len`, in deglex order.
pub fn enumerate_nonempty_words(n: usize, max_len: usize) -> Vec<Word> {
    enumerate_words(n, max_len).into_iter().skip(1).collect()
}

/// All reduced group words of length at most `max_len`, in deglex order.
pub fn enumerate_reduced(n: usize, max_len: usize) -> Vec<GroupWord> {
    let letters: Vec<Letter> = (0..n).flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
    let mut out = vec![GroupWord::identity()];
    let mut layer = vec![GroupWord::identity()];
    for _ in 0..max_len {
        let next: Vec<GroupWord> =
            layer.iter().flat_map(|w| letters.iter().filter_map(move |&l| w.push_reduced(l))).collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `(n^{L+1} - 1)/(n - 1)`, the number of words of length at most `L`.
pub fn word_count(n: usize, max_len: usize) -> usize {
    (0..=max_len).map(|k| n.pow(k as u32)).sum()
}

/// `1 + Σ 2n(2n-1)^{k-1}`, the number of reduced words of length at most `L`.
pub fn reduced_word_count(n: usize, max_len: usize) -> usize {
    1 + (1..=max_len).map(|k| 2 * n * (2 * n - 1).pow(k as u32 - 1)).sum::<usize>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gw(s: &str) -> GroupWord {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Oracle: delete one adjacent cancelling pair at a time until none is left.
    fn reduce_to_fixpoint(mut v: Vec<Letter>) -> Vec<Letter> {
        loop {
            match (0..v.len().saturating_sub(1)).find(|&i| v[i].cancels(v[i + 1])) {
                Some(i) => {
                    v.drain(i..i + 2);
                }
                None => return v,
            }
        }
    }

    #[test]
    fn concat_examples() {
        let a = Alphabet::new(2).unwrap();
        assert_eq!(a.concat(&w("x1 x2"), &w("x1")).unwrap(), w("x1 x2 x1"));
        assert_eq!(a.concat(&Word::one(), &w("x2 x1")).unwrap(), w("x2 x1"));
        assert_eq!(a.concat(&w("x2"), &w("x2 x2")).unwrap(), w("x2 x2 x2"));
        assert_eq!(
            a.concat(&w("x3"), &w("x1")),
            Err(Error::AlphabetMismatch { letter: 3, size: 2 })
        );
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(gw("x1 x2 x2^-1 x1"), gw("x1 x1"));
        assert_eq!(gw("x1 x1^-1"), GroupWord::identity());
        let raw = parse_letters("x1 x2^-1 x2 x2").unwrap();
        assert_eq!(GroupWord::reduce(&raw).letters(), reduce_to_fixpoint(raw.clone()).as_slice());
        assert_eq!(GroupWord::reduce(&raw), gw("x1 x2"));
    }

    #[test]
    fn group_examples() {
        let a = gw("x1 x2");
        assert_eq!(a.mul(&gw("x2^-1 x1")), gw("x1 x1"));
        assert_eq!(a.inv().to_string(), "x2^-1 x1^-1");
        assert!(a.mul(&a.inv()).is_identity());
        assert_eq!(gw("x^2 y^-1").to_string(), "x1 x1 x2^-1");
    }

    #[test]
    fn evaluation_examples() {
        let v = evaluate_word(&w("x1 x2"), &[2i64, 3], 2, 1, |a, b| a * b).unwrap();
        assert_eq!(v, 6);
        let v = evaluate_word(&Word::one(), &[2i64, 3], 2, 1, |a, b| a * b).unwrap();
        assert_eq!(v, 1);
        assert_eq!(
            evaluate_word(&w("x1"), &[2i64], 2, 1, |a, b| a * b),
            Err(Error::Arity { expected: 2, found: 1 })
        );
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_words(2, 2).len(), 7);
        let r1: Vec<String> = enumerate_reduced(2, 1).iter().map(|w| w.to_string()).collect();
        assert_eq!(r1, vec!["1", "x1", "x1^-1", "x2", "x2^-1"]);
        // direct generation oracle: filter all signed sequences for reducedness
        let mut brute = 0;
        for len in 0..=3u32 {
            for code in 0..4usize.pow(len) {
                let mut c = code;
                let seq: Vec<Letter> = (0..len)
                    .map(|_| {
                        let l = Letter { gen: (c % 4) / 2, inv: c % 2 == 1 };
                        c /= 4;
                        l
                    })
                    .collect();
                if GroupWord::is_reduced(&seq) {
                    brute += 1;
                }
            }
        }
        assert_eq!(brute, 53);
        assert_eq!(enumerate_reduced(2, 3).len(), 53);
        assert_eq!(reduced_word_count(2, 3), 53);
        assert_eq!(word_count(3, 4), 121);
        assert_eq!(enumerate_words(3, 4).len(), 121);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let ws = enumerate_reduced(3, 3);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
        let ms = enumerate_words(2, 5);
        assert!(ms.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn parse_errors() {
        assert!("x0".parse::<GroupWord>().is_err());
        assert!("z1".parse::<GroupWord>().is_err());
        assert!("x1^-1".parse::<Word>().is_err());
        assert_eq!("1".parse::<Word>().unwrap(), Word::one());
    }

    #[test]
    fn alphabet_names() {
        let a = Alphabet::with_names(vec!["u".into(), "v".into()]).unwrap();
        assert_eq!(a.format_group_word(&gw("x1 x2^-1")), "u v^-1");
        assert!(Alphabet::with_names(vec!["u".into(), "u".into()]).is_err());
        assert!(Alphabet::new(0).is_err());
    }
}
