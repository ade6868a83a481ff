//! Combinatorics of words over `{1, 2}`.
//!
//! A word indexes one graded piece of the twisted tensor algebra: letter `1`
//! stands for `x1` (twist `+1`) and letter `2` for `x2` (twist `-1`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word over the letters `1` and `2`.
///
/// Words are ordered by length first, then lexicographically, which is the
/// canonical printing order of series terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

/// Letter counts of a word: `c1`, `c2` and the winding number `c = c1 - c2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub c1: usize,
    pub c2: usize,
    pub c: i64,
}

/// Which prefix positions enter the extremal twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TwistRange {
    /// Positions `0..=|w|-1`, including the untwisted first slot.
    #[default]
    Extended,
    /// Positions `1..=|w|-1`, with both extremes set to 0 when `|w| <= 1`.
    Narrow,
}

/// A closed real interval, or the empty set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Interval {
    Empty,
    Closed { lo: f64, hi: f64 },
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        if lo > hi {
            Interval::Empty
        } else {
            Interval::Closed { lo, hi }
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Interval::Empty)
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        match (self, other) {
            (_, Interval::Empty) => true,
            (Interval::Empty, _) => false,
            (Interval::Closed { lo, hi }, Interval::Closed { lo: a, hi: b }) => lo <= a && b <= hi,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Interval::Empty => write!(f, "empty"),
            Interval::Closed { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l != 1 && l != 2) {
            return Err(Error::InvalidLetter(char::from(b'0' + bad.min(9))));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `letter^n`; panics if `letter` is not 1 or 2.
    pub fn power(letter: u8, n: usize) -> Self {
        assert!(letter == 1 || letter == 2, "letter must be 1 or 2");
        Word(vec![letter; n])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Exchange the letters 1 and 2.
    pub fn swapped(&self) -> Word {
        Word(self.0.iter().map(|&l| 3 - l).collect())
    }

    pub fn is_power_of(&self, letter: u8) -> bool {
        self.0.iter().all(|&l| l == letter)
    }

    /// Number of leading copies of `letter`.
    pub fn leading_run(&self, letter: u8) -> usize {
        self.0.iter().take_while(|&&l| l == letter).count()
    }

    pub fn counts(&self) -> Counts {
        let c1 = self.0.iter().filter(|&&l| l == 1).count();
        let c2 = self.len() - c1;
        Counts {
            c1,
            c2,
            c: c1 as i64 - c2 as i64,
        }
    }

    pub fn winding(&self) -> i64 {
        self.counts().c
    }

    /// `p(w, k) = Σ_{i ≤ k} (3 - 2 w(i))`.
    pub fn partial_sum(&self, k: usize) -> Result<i64> {
        if k > self.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                len: self.len(),
            });
        }
        Ok(self.0[..k].iter().map(|&l| letter_twist(l)).sum())
    }

    /// All partial sums `p(w, 0), …, p(w, |w|)`.
    pub fn profile(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &l in &self.0 {
            acc += letter_twist(l);
            out.push(acc);
        }
        out
    }

    /// `(k_min, k_max)` over the positions `0..=|w|-1`.
    pub fn extremal_twists(&self) -> (i64, i64) {
        self.extremal_twists_with(TwistRange::Extended)
    }

    pub fn extremal_twists_with(&self, range: TwistRange) -> (i64, i64) {
        let profile = self.profile();
        let slots = match range {
            TwistRange::Extended => &profile[..self.len().max(1)],
            TwistRange::Narrow if self.len() <= 1 => return (0, 0),
            TwistRange::Narrow => &profile[1..self.len()],
        };
        let lo = *slots.iter().min().expect("nonempty slot range");
        let hi = *slots.iter().max().expect("nonempty slot range");
        (lo, hi)
    }

    /// Every word of length at most `max_len`, in canonical order.
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = Word> {
        (0..=max_len).flat_map(|len| {
            (0u64..(1u64 << len)).map(move |bits| {
                Word(
                    (0..len)
                        .map(|i| if bits >> (len - 1 - i) & 1 == 0 { 1 } else { 2 })
                        .collect(),
                )
            })
        })
    }
}

fn letter_twist(letter: u8) -> i64 {
    3 - 2 * letter as i64
}

/// `1^n1 2^n2`.
pub fn canonical_word(n1: usize, n2: usize) -> Word {
    let mut letters = vec![1; n1];
    letters.extend(std::iter::repeat_n(2, n2));
    Word(letters)
}

/// `[-n + k_max(w), n + k_min(w)]`, the support on which the shift
/// automorphism's twisted sup-seminorm lives.
pub fn interval(w: &Word, n: f64) -> Interval {
    shifted_interval(w, n, 1)
}

/// The same intersection for the shift `f(x) ↦ f(x - step)`:
/// `⋂_i [-n + step·p(w,i), n + step·p(w,i)]`.
pub fn shifted_interval(w: &Word, n: f64, step: i64) -> Interval {
    let (kmin, kmax) = w.extremal_twists();
    let (lo_twist, hi_twist) = if step >= 0 {
        (step * kmax, step * kmin)
    } else {
        (step * kmin, step * kmax)
    };
    Interval::new(-n + lo_twist as f64, n + hi_twist as f64)
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|ch| match ch {
                '1' => Ok(1),
                '2' => Ok(2),
                other => Err(Error::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn counts_examples() {
        assert_eq!(w("112").counts(), Counts { c1: 2, c2: 1, c: 1 });
        assert_eq!(Word::empty().counts(), Counts { c1: 0, c2: 0, c: 0 });
        assert_eq!(canonical_word(3, 3).counts(), Counts { c1: 3, c2: 3, c: 0 });
    }

    #[test]
    fn partial_sum_examples() {
        let word = w("122");
        let sums: Vec<_> = (1..=3).map(|k| word.partial_sum(k).unwrap()).collect();
        assert_eq!(sums, vec![1, 0, -1]);
        assert_eq!(w("1122").partial_sum(4).unwrap(), 0);
        assert_eq!(w("2").partial_sum(1).unwrap(), -1);
        assert_eq!(w("2").partial_sum(0).unwrap(), 0);
        assert_eq!(w("12").partial_sum(3), Err(Error::IndexOutOfRange { index: 3, len: 2 }));
    }

    #[test]
    fn extremal_twist_examples() {
        assert_eq!(w("1122").extremal_twists(), (0, 2));
        for n in 1..7 {
            assert_eq!(Word::power(1, n).extremal_twists(), (0, n as i64 - 1));
            assert_eq!(Word::power(2, n).extremal_twists(), (-(n as i64 - 1), 0));
        }
        assert_eq!(Word::empty().extremal_twists(), (0, 0));
    }

    #[test]
    fn narrow_range_differs_on_two_powers() {
        assert_eq!(w("22").extremal_twists_with(TwistRange::Narrow), (-1, -1));
        assert_eq!(w("22").extremal_twists_with(TwistRange::Extended), (-1, 0));
        assert_eq!(w("1").extremal_twists_with(TwistRange::Narrow), (0, 0));
        assert_eq!(w("1122").extremal_twists_with(TwistRange::Narrow), (1, 2));
    }

    #[test]
    fn interval_examples() {
        assert_eq!(interval(&w("1122"), 1.0), Interval::Closed { lo: 1.0, hi: 1.0 });
        assert_eq!(interval(&w("1"), 3.0), Interval::Closed { lo: -3.0, hi: 3.0 });
        assert_eq!(interval(&w("111222"), 1.0), Interval::Empty);
        assert_eq!(interval(&w("111222"), 2.0), Interval::Closed { lo: 1.0, hi: 2.0 });
    }

    #[test]
    fn canonical_word_examples() {
        assert_eq!(canonical_word(2, 1), w("112"));
        assert_eq!(canonical_word(0, 0), Word::empty());
    }

    #[test]
    fn text_form() {
        assert_eq!(w("1122").to_string(), "1122");
        assert_eq!(Word::empty().to_string(), "e");
        assert_eq!("e".parse::<Word>().unwrap(), Word::empty());
        assert_eq!("13".parse::<Word>(), Err(Error::InvalidLetter('3')));
        assert!(Word::new(vec![1, 3]).is_err());
    }

    #[test]
    fn ordering_is_length_then_lex() {
        let mut words = vec![w("21"), w("1"), w("e"), w("12"), w("2")];
        words.sort();
        assert_eq!(words, vec![w("e"), w("1"), w("2"), w("12"), w("21")]);
        let all: Vec<_> = Word::all_up_to(2).collect();
        assert_eq!(all.len(), 7);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }
}
